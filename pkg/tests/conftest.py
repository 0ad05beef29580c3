from __future__ import annotations

import sys
from pathlib import Path

import pytest

from negatus.wordnet import default_wordnet_dir, load_lexicon

MATH_SENTENCE = "I then realized that I was not good at math."
MATH_FORMULA = (
    "? [A,B,C,D,E] : (person(A) & person(B) & then(C) & manner(D,C) & topic(D,E)"
    " & actor(D,B) & realize(D)"
    " & ~ (? [F,G] : (at(G,F) & math(F) & theme(G,A) & good(G))))"
)
MATH_NARROWED = (
    "? [A,B,C,D,E] : (person(A) & person(B) & then(C) & manner(D,C) & topic(D,E)"
    " & actor(D,B) & realize(D)"
    " & ? [F,G] : (at(G,F) & math(F) & theme(G,A) & ~ good(G)))"
)
BACKGROUND_RULE = "! [X] : (math(X) => school_subject(X))"

COOKIES_SENTENCE = (
    "I don't like the cookies with raisins but I can't eat the ones with chocolate either."
)
COOKIES_FORMULA = (
    "? [A,B,C,D] : (one(A) & person(C) & cookie(B) & person(D)"
    " & ~ (? [E,F,G,H,I] : (either(G) & manner(I,G) & with(I,H) & chocolate(H)"
    " & theme(I,A) & actor(I,C) & eat(I) & topic(F,E) & actor(F,C) & can(F)"
    " & ~ (? [J,K] : (theme(J,B) & actor(J,D) & like(J) & with(B,K) & raisin(K))))))"
)


@pytest.fixture(scope="session")
def lexicon():
    directory = default_wordnet_dir()
    if directory is None or not Path(directory).is_dir():
        pytest.skip("WordNet database not available")
    return load_lexicon(directory)


# index line, data line per synset; offsets are labels, not byte positions
MINI_WORDNET = {
    "index.adj": [
        "bad a 1 1 ! 1 0 00000002  ",
        "good a 1 1 ! 1 0 00000001  ",
    ],
    "data.adj": [
        "00000001 00 a 01 good 0 001 ! 00000002 a 0101 | having desirable qualities  ",
        "00000002 00 a 01 bad 0 001 ! 00000001 a 0101 | having undesirable qualities  ",
    ],
    "adj.exc": ["better good", "worse bad"],
    "index.verb": [
        "like v 1 1 ! 1 0 00000010  ",
        "dislike v 1 1 ! 1 0 00000011  ",
        "enjoy v 1 1 @ 1 0 00000010  ",
    ],
    "data.verb": [
        "00000010 00 v 02 like 0 enjoy 0 001 ! 00000011 v 0101 | find pleasant  ",
        "00000011 00 v 01 dislike 0 001 ! 00000010 v 0101 | find unpleasant  ",
    ],
    "verb.exc": ["went go"],
    "index.noun": ["cookie n 1 0 1 0 00000020  ", "go n 1 0 1 0 00000021  "],
    "data.noun": [
        "00000020 00 n 01 cookie 0 000 | a small cake  ",
        "00000021 00 n 01 go 0 000 | a board game  ",
    ],
    "noun.exc": [],
    "index.adv": [],
    "data.adv": [],
    "adv.exc": [],
}


def write_wordnet(directory: Path, files=None) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    for name, lines in (files or MINI_WORDNET).items():
        (directory / name).write_text("".join(l + "\n" for l in lines), encoding="utf-8")
    return directory


@pytest.fixture
def mini_wordnet(tmp_path) -> Path:
    return write_wordnet(tmp_path / "dict")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
