import pytest

from conftest import COOKIES_SENTENCE, MATH_SENTENCE
from negatus.strategy import Strategy
from negatus.textprep import (
    DEFAULT_STOPWORDS,
    Cue,
    detect_cues,
    from_annotated,
    load_stopwords,
    mark_stopwords,
    prepare_text,
    tokenize,
    word_window,
)


def surfaces(tokens):
    return [t.surface for t in tokens]


def test_stopword_list_size_and_members():
    assert len(DEFAULT_STOPWORDS) == 132
    assert {"the", "i", "at", "with", "s", "here"} <= DEFAULT_STOPWORDS
    assert "was" not in DEFAULT_STOPWORDS
    # negation words must stay visible to cue detection and windows
    assert not {"not", "no", "nor", "never"} & DEFAULT_STOPWORDS


def test_custom_stopword_file(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("Foo\n\nbar\n")
    assert load_stopwords(path) == {"foo", "bar"}


def test_tokenize_splits_clitics_and_punctuation():
    assert surfaces(tokenize("I don't like it.")) == ["I", "do", "n't", "like", "it", "."]
    assert surfaces(tokenize("He can't, she's")) == ["He", "ca", "n't", ",", "she", "s"]


def test_tokenize_clitic_lemmas():
    toks = tokenize("can't won't")
    assert [t.lemma for t in toks] == ["can", "not", "will", "not"]


def test_tokenize_curly_apostrophe():
    assert surfaces(tokenize("don’t")) == ["do", "n't"]


def test_punctuation_is_stopword():
    toks = mark_stopwords(tokenize("math, chess!"))
    assert [t.is_stopword for t in toks] == [False, True, False, True]


def test_mark_stopwords():
    toks = mark_stopwords(tokenize("I was not good at math"))
    assert [t.is_stopword for t in toks] == [True, False, False, False, True, False]


@pytest.mark.parametrize(
    "text, expected",
    [
        ("I don't like it", ["don't"]),
        ("I can't eat", ["can't"]),
        ("I cannot eat", ["cannot"]),
        ("I can not eat", ["can not"]),
        ("It was not good", ["was not"]),
        ("I was never there", ["never"]),
        ("no one and nothing", ["no", "nothing"]),
        ("I like math", []),
    ],
)
def test_detect_cues(text, expected):
    assert [c.canonical for c in detect_cues(tokenize(text))] == expected


def test_cue_ids_are_sequential():
    cues = detect_cues(tokenize(COOKIES_SENTENCE))
    assert [(c.cue_id, c.canonical, c.token_indices) for c in cues] == [
        (1, "don't", (1, 2)),
        (2, "can't", (10, 11)),
    ]


def test_math_window_without_lexicon():
    text = prepare_text(MATH_SENTENCE)
    (cue,) = detect_cues(text.tokens)
    assert cue.canonical == "was not"
    win = word_window(text.tokens, cue, 3, Strategy.FNS)
    assert surfaces(win.member_tokens) == ["good", "math"]


def test_cookies_windows(lexicon):
    text = prepare_text(COOKIES_SENTENCE, lexicon)
    x1, x2 = detect_cues(text.tokens)
    assert word_window(text.tokens, x1, 3, "fns").lemma_set == {"like", "cookie", "raisin"}
    assert word_window(text.tokens, x2, 3, "fns").lemma_set == {"eat", "one", "chocolate"}


def test_comb_window_takes_left_neighbour():
    text = from_annotated(
        ["Holmes", "did", "not", "answer", "me", "."],
        ["Holmes", "do", "not", "answer", "me", "."],
        ["NNP", "VBD", "RB", "VB", "PRP", "."],
    )
    (cue,) = detect_cues(text.tokens)
    # "did" is a stopword, so nothing is added on the left
    assert surfaces(word_window(text.tokens, cue, 3, Strategy.COMB).member_tokens) == ["answer"]

    text = from_annotated(["Holmes", "never", "sleeps", "well"], ["holmes", "never", "sleep", "well"],
                          ["NNP", "RB", "VBZ", "RB"])
    (cue,) = detect_cues(text.tokens)
    assert surfaces(word_window(text.tokens, cue, 2, Strategy.COMB).member_tokens) == ["Holmes", "sleeps"]
    assert surfaces(word_window(text.tokens, cue, 2, Strategy.FNS).member_tokens) == ["sleeps", "well"]


def test_window_stops_at_sentence_end():
    text = prepare_text("It is not. Good things follow")
    (cue,) = detect_cues(text.tokens)
    assert word_window(text.tokens, cue, 3, "fns").member_tokens == ()


def test_window_rejects_bad_k():
    text = prepare_text("not good")
    with pytest.raises(ValueError):
        word_window(text.tokens, Cue(1, (0,), "not"), 0, "fns")


def test_lexicon_lemmas_and_guessed_tags(lexicon):
    text = prepare_text(MATH_SENTENCE, lexicon)
    by_surface = {t.surface: t for t in text.tokens}
    assert by_surface["realized"].lemma == "realize"
    assert by_surface["good"].pos_guessed
    assert by_surface["math"].lemma == "math"


def test_from_annotated_keeps_gold_tags():
    text = from_annotated(["He", "wasn't", "happy"], ["he", "be", "happy"], ["PRP", "VBD", "JJ"])
    assert [t.pos for t in text.tokens] == ["PRP", "VBD", "JJ"]
    assert not any(t.pos_guessed for t in text.tokens)
