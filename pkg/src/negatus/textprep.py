"""Sentence preprocessing: tokens, lemmas, POS guesses, stopwords, negation
cues and the word windows around them."""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .strategy import Strategy
from .wordnet import Lexicon, penn_to_pos

_WORD_RE = re.compile(r"[A-Za-z0-9]+(?:['\-][A-Za-z0-9]+)*|[^\sA-Za-z0-9]")
_CLITIC_RE = re.compile(r"^(.+)'(s|ll|ve|re|d|m)$", re.IGNORECASE)
_SENTENCE_END = frozenset({".", "!", "?"})

# Lemmas and tags for pieces produced by clitic splitting.
_CLITIC_LEMMAS = {
    "ca": ("can", "MD"), "wo": ("will", "MD"), "sha": ("shall", "MD"),
    "n't": ("not", "RB"),
}

SINGLE_CUES = frozenset({"not", "no", "never", "nor", "nothing", "cannot", "n't"})
# First word of two-token cues whose second word is "not".
NOT_COMPOUND_HEADS = frozenset({"can", "could", "should", "is", "are", "was", "were", "will"})

# Guessing order for untagged words.
_GUESS_ORDER = (("verb", "VB"), ("noun", "NN"), ("adj", "JJ"), ("adv", "RB"))


@dataclass(frozen=True)
class Token:
    index: int
    surface: str
    lemma: str
    pos: str = ""
    is_stopword: bool = False
    is_cue_part: bool = False
    pos_guessed: bool = False

    @property
    def is_punct(self) -> bool:
        return not any(ch.isalnum() for ch in self.surface)


@dataclass(frozen=True)
class TaskText:
    tokens: Tuple[Token, ...]
    raw: str


@dataclass(frozen=True)
class Cue:
    cue_id: int
    token_indices: Tuple[int, ...]
    canonical: str


@dataclass(frozen=True)
class WordWindow:
    cue_id: int
    member_tokens: Tuple[Token, ...]

    @property
    def lemma_set(self) -> FrozenSet[str]:
        return frozenset(t.lemma for t in self.member_tokens)


def load_stopwords(path: Optional[Path] = None) -> FrozenSet[str]:
    """Bundled stopword list unless ``path`` names another one-word-per-line file."""
    if path is None:
        text = resources.files("negatus.data").joinpath("stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip())


DEFAULT_STOPWORDS = load_stopwords()


def _split_clitics(word: str) -> List[str]:
    lower = word.lower()
    if lower.endswith("n't") and len(word) > 3:
        return [word[:-3], word[-3:]]
    m = _CLITIC_RE.match(word)
    if m:
        # "he's" -> "he", "s": the bare letter is what the stopword list holds
        return [m.group(1), m.group(2)]
    return [word]


def tokenize(raw: str) -> List[Token]:
    """Split on whitespace and punctuation, then split off clitics
    (``don't`` -> ``do`` + ``n't``).  Punctuation tokens are stopwords."""
    text = raw.replace("’", "'").replace("‘", "'")
    pieces: List[str] = []
    for m in _WORD_RE.finditer(text):
        pieces.extend(_split_clitics(m.group()))
    tokens = []
    for i, piece in enumerate(pieces):
        lemma, pos = _CLITIC_LEMMAS.get(piece.lower(), (piece.lower(), ""))
        tok = Token(i, piece, lemma, pos)
        if tok.is_punct:
            tok = replace(tok, pos=piece, is_stopword=True)
        tokens.append(tok)
    return tokens


def mark_stopwords(tokens: Sequence[Token], stopwords: Iterable[str] = DEFAULT_STOPWORDS) -> List[Token]:
    stop = stopwords if isinstance(stopwords, (set, frozenset)) else frozenset(stopwords)
    return [
        replace(t, is_stopword=t.is_punct or t.surface.lower() in stop)
        for t in tokens
    ]


def lemmatize(token: Token, lexicon: Optional[Lexicon]) -> str:
    """Base form via morphy for the token's POS class, else lowercased surface."""
    surface = token.surface.lower()
    if surface in _CLITIC_LEMMAS:
        return _CLITIC_LEMMAS[surface][0]
    if lexicon is None:
        return surface
    pos = penn_to_pos(token.pos)
    if pos is not None:
        bases = lexicon.morphy(surface, pos)
        return bases[0] if bases else surface
    return guess_pos(surface, lexicon)[1]


def guess_pos(word: str, lexicon: Lexicon) -> Tuple[str, str]:
    """``(tag, lemma)`` from the first POS class (verb, noun, adj, adv) in
    which WordNet knows the word; ``("", word)`` when none does."""
    word = word.lower()
    for pos, tag in _GUESS_ORDER:
        bases = lexicon.morphy(word, pos)
        if bases:
            return tag, bases[0]
    return "", word


def annotate(tokens: Sequence[Token], lexicon: Optional[Lexicon]) -> List[Token]:
    """Fill in lemma and, where missing, a guessed POS tag."""
    out = []
    for t in tokens:
        if t.is_punct or t.surface.lower() in _CLITIC_LEMMAS:
            out.append(t)
            continue
        pos, guessed = t.pos, False
        if not pos and lexicon is not None:
            pos, lemma = guess_pos(t.surface, lexicon)
            guessed = bool(pos)
        else:
            lemma = lemmatize(replace(t, pos=pos), lexicon)
        out.append(replace(t, pos=pos, lemma=lemma or t.surface.lower(), pos_guessed=guessed))
    return out


def detect_cues(tokens: Sequence[Token]) -> List[Cue]:
    """Syntactic negation cues, left to right; two-token cues win over single ones."""
    cues: List[Cue] = []
    i = 0
    n = len(tokens)
    while i < n:
        word = tokens[i].surface.lower()
        nxt = tokens[i + 1].surface.lower() if i + 1 < n else ""
        if nxt == "n't" and not tokens[i].is_punct:
            aux = "ca" if word == "can" else word
            cues.append(Cue(len(cues) + 1, (i, i + 1), aux + "n't"))
            i += 2
        elif nxt == "not" and word in NOT_COMPOUND_HEADS:
            cues.append(Cue(len(cues) + 1, (i, i + 1), f"{word} not"))
            i += 2
        elif word in SINGLE_CUES:
            cues.append(Cue(len(cues) + 1, (i,), word))
            i += 1
        else:
            i += 1
    return cues


def mark_cues(tokens: Sequence[Token], cues: Iterable[Cue]) -> List[Token]:
    parts = {i for c in cues for i in c.token_indices}
    return [replace(t, is_cue_part=t.index in parts) for t in tokens]


def _candidate(t: Token) -> bool:
    return not t.is_stopword and not t.is_cue_part


def word_window(tokens: Sequence[Token], cue: Cue, k: int, strategy: Strategy | str) -> WordWindow:
    """The first ``k`` non-stopwords after the cue.

    For the combination strategy the token directly before the cue leads the
    window when it is a non-stopword, followed by ``k - 1`` tokens after the
    cue.  Sentence-final punctuation ends the window.
    """
    if k < 1:
        raise ValueError("window size k must be >= 1")
    strategy = Strategy.parse(strategy)
    first, last = cue.token_indices[0], cue.token_indices[-1]
    members: List[Token] = []
    if strategy.left_extended and first > 0 and _candidate(tokens[first - 1]):
        members.append(tokens[first - 1])
    for t in tokens[last + 1:]:
        if len(members) >= k or t.surface in _SENTENCE_END:
            break
        if _candidate(t):
            members.append(t)
    return WordWindow(cue.cue_id, tuple(members))


def prepare_text(
    raw: str,
    lexicon: Optional[Lexicon] = None,
    stopwords: Iterable[str] = DEFAULT_STOPWORDS,
) -> TaskText:
    tokens = annotate(tokenize(raw), lexicon)
    tokens = mark_stopwords(tokens, stopwords)
    tokens = mark_cues(tokens, detect_cues(tokens))
    return TaskText(tuple(tokens), raw)


def from_annotated(
    words: Sequence[str],
    lemmas: Sequence[str],
    tags: Sequence[str],
    stopwords: Iterable[str] = DEFAULT_STOPWORDS,
    raw: Optional[str] = None,
) -> TaskText:
    """Build a :class:`TaskText` from gold word/lemma/POS columns."""
    tokens = [
        Token(i, w, (lem or w).lower(), tag)
        for i, (w, lem, tag) in enumerate(zip(words, lemmas, tags))
    ]
    tokens = mark_stopwords(tokens, stopwords)
    tokens = mark_cues(tokens, detect_cues(tokens))
    return TaskText(tuple(tokens), raw if raw is not None else " ".join(words))
