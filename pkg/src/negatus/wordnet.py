"""Reader for WordNet 3.x database files with morphy and antonym queries.

Only the parts needed here are modelled: index entries, synset member words
and pointers, and the morphological exception lists.  Files may also be
stored gzip-compressed (``data.noun.gz``); the content is read unchanged.
"""

from __future__ import annotations

import gzip
import logging
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

log = logging.getLogger(__name__)

POS_CLASSES = ("noun", "verb", "adj", "adv")
_FILE_SUFFIX = {"noun": "noun", "verb": "verb", "adj": "adj", "adv": "adv"}
_POS_LETTER = {"n": "noun", "v": "verb", "a": "adj", "s": "adj", "r": "adv"}
_POS_ALIASES = {
    "n": "noun", "noun": "noun",
    "v": "verb", "verb": "verb",
    "a": "adj", "s": "adj", "adj": "adj", "adjective": "adj",
    "r": "adv", "adv": "adv", "adverb": "adv",
}

# Standard WordNet detachment rules, tried in this order.
_DETACHMENT = {
    "noun": [("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"),
             ("shes", "sh"), ("men", "man"), ("ies", "y")],
    "verb": [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
             ("ed", ""), ("ing", "e"), ("ing", "")],
    "adj": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "adv": [],
}

_ADJ_MARKER = re.compile(r"\((?:a|p|ip)\)$")


class LexiconError(Exception):
    pass


class MissingLexiconFile(LexiconError, FileNotFoundError):
    pass


class MalformedLine(LexiconError):
    def __init__(self, filename: str, lineno: int, reason: str):
        self.filename = filename
        self.lineno = lineno
        super().__init__(f"{filename}:{lineno}: {reason}")


def normalize_pos(pos: str) -> str:
    try:
        return _POS_ALIASES[pos.lower()]
    except KeyError:
        raise ValueError(f"unknown part of speech {pos!r}") from None


def penn_to_pos(tag: str) -> Optional[str]:
    """Map a Penn Treebank tag onto a WordNet POS class."""
    if tag.startswith("NN"):
        return "noun"
    if tag.startswith("VB"):
        return "verb"
    if tag.startswith("JJ"):
        return "adj"
    if tag.startswith("RB"):
        return "adv"
    return None


def _key(lemma: str) -> str:
    return lemma.strip().lower().replace(" ", "_")


class Pointer(NamedTuple):
    symbol: str
    offset: int
    pos: str
    source: int
    target: int


class Synset(NamedTuple):
    offset: int
    pos: str
    ss_type: str
    words: Tuple[str, ...]
    pointers: Tuple[Pointer, ...]


@dataclass(frozen=True)
class AntonymResult:
    lemma: str
    pos: str
    antonyms: Tuple[str, ...]
    direct: Tuple[str, ...] = ()


@dataclass
class Lexicon:
    entries: Dict[Tuple[str, str], Tuple[int, ...]]
    synsets: Dict[Tuple[int, str], Synset]
    exceptions: Dict[Tuple[str, str], Tuple[str, ...]]
    overrides: Dict[str, str] = field(default_factory=dict)
    line_counts: Dict[str, int] = field(default_factory=dict)

    def __contains__(self, item: Tuple[str, str]) -> bool:
        lemma, pos = item
        return (_key(lemma), normalize_pos(pos)) in self.entries

    def morphy(self, surface: str, pos: str) -> List[str]:
        """Base forms of ``surface`` for one POS class.

        Exception-list hits come first (preceded by the form itself when it
        is a lemma); otherwise the form itself or detachment candidates
        present in the index.
        """
        pos = normalize_pos(pos)
        form = _key(surface)
        if not form:
            return []
        out: List[str] = []

        def add(w: str) -> None:
            if w and w not in out:
                out.append(w)

        exc = self.exceptions.get((form, pos))
        if exc:
            if (form, pos) in self.entries:
                add(form)
            for base in exc:
                add(base)
            return out
        if (form, pos) in self.entries:
            add(form)
        for suffix, ending in _DETACHMENT[pos]:
            if form.endswith(suffix):
                cand = form[: len(form) - len(suffix)] + ending
                if (cand, pos) in self.entries:
                    add(cand)
        return out

    def _antonym_pointers(self, syn: Synset, word_no: int) -> Iterable[str]:
        for p in syn.pointers:
            if p.symbol == "!" and p.source == word_no:
                target = self.synsets[(p.offset, p.pos)]
                yield target.words[p.target - 1].lower()

    def antonym(self, lemma: str, pos: str) -> AntonymResult:
        pos = normalize_pos(pos)
        key = _key(lemma)
        direct: List[str] = []
        indirect: List[str] = []
        for offset in self.entries.get((key, pos), ()):
            syn = self.synsets[(offset, pos)]
            for word_no, word in enumerate(syn.words, 1):
                bucket = direct if word.lower() == key else indirect
                for ant in self._antonym_pointers(syn, word_no):
                    if ant not in bucket:
                        bucket.append(ant)
        merged = direct + [a for a in indirect if a not in direct and a != key]
        return AntonymResult(key, pos, tuple(merged), tuple(direct))

    def inverse(self, lemma: str, pos_order: Sequence[str] = ("verb", "adj", "noun", "adv")) -> Optional[str]:
        """Override table first, then the first direct antonym of the first
        POS class that has one.

        Antonyms inherited from other synset members are not used here: they
        often belong to an unrelated sense (verb ``can`` -> ``hire``).
        """
        key = _key(lemma)
        if key in self.overrides:
            return self.overrides[key]
        for pos in pos_order:
            res = self.antonym(key, pos)
            if res.direct:
                return res.direct[0]
        return None


def _open_text(directory: Path, name: str):
    plain = directory / name
    if plain.is_file():
        return plain.open("r", encoding="utf-8", errors="replace"), name
    packed = directory / (name + ".gz")
    if packed.is_file():
        return gzip.open(packed, "rt", encoding="utf-8", errors="replace"), name
    raise MissingLexiconFile(f"{directory}: missing {name}")


def _parse_index_line(line: str, fname: str, lineno: int) -> Tuple[str, str, Tuple[int, ...]]:
    f = line.split()
    try:
        lemma, pos_letter = f[0], f[1]
        synset_cnt, p_cnt = int(f[2]), int(f[3])
        rest = f[4 + p_cnt:]
        offsets = tuple(int(x) for x in rest[2:2 + synset_cnt])
    except (IndexError, ValueError) as exc:
        raise MalformedLine(fname, lineno, f"bad index entry ({exc})") from None
    if len(offsets) != synset_cnt or pos_letter not in _POS_LETTER:
        raise MalformedLine(fname, lineno, "bad index entry")
    return lemma.lower(), _POS_LETTER[pos_letter], offsets


def _parse_data_line(line: str, fname: str, lineno: int) -> Synset:
    head = line.split(" | ", 1)[0]
    f = head.split()
    try:
        offset = int(f[0])
        ss_type = f[2]
        w_cnt = int(f[3], 16)
        words = []
        for i in range(w_cnt):
            words.append(_ADJ_MARKER.sub("", f[4 + 2 * i]))
        pos_ = 4 + 2 * w_cnt
        p_cnt = int(f[pos_])
        pointers = []
        for i in range(p_cnt):
            sym, off, ppos, st = f[pos_ + 1 + 4 * i: pos_ + 5 + 4 * i]
            pointers.append(Pointer(sym, int(off), _POS_LETTER[ppos], int(st[:2], 16), int(st[2:], 16)))
        if ss_type not in _POS_LETTER or len(words) != w_cnt:
            raise ValueError("bad synset type")
    except (IndexError, ValueError, KeyError) as exc:
        raise MalformedLine(fname, lineno, f"bad synset record ({exc})") from None
    return Synset(offset, _POS_LETTER[ss_type], ss_type, tuple(words), tuple(pointers))


def load_overrides(path: Optional[os.PathLike] = None) -> Dict[str, str]:
    """Read a two-column ``lemma antonym`` table; ``#`` starts a comment."""
    if path is None:
        text = resources.files("negatus.data").joinpath("antonym_overrides.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    table: Dict[str, str] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"override line needs two columns: {line!r}")
        table[_key(parts[0])] = _key(parts[1])
    return table


def load_lexicon(
    directory: os.PathLike | str,
    overrides: Optional[Mapping[str, str]] = None,
) -> Lexicon:
    """Load ``index.*``, ``data.*`` and ``*.exc`` from a WordNet dict directory."""
    directory = Path(directory)
    if not directory.is_dir():
        raise MissingLexiconFile(f"not a directory: {directory}")
    entries: Dict[Tuple[str, str], Tuple[int, ...]] = {}
    synsets: Dict[Tuple[int, str], Synset] = {}
    exceptions: Dict[Tuple[str, str], Tuple[str, ...]] = {}
    counts: Dict[str, int] = {}

    for pos in POS_CLASSES:
        suffix = _FILE_SUFFIX[pos]
        fh, name = _open_text(directory, f"index.{suffix}")
        with fh:
            n = 0
            for lineno, line in enumerate(fh, 1):
                if line.startswith(" ") or not line.strip():
                    continue
                lemma, _, offsets = _parse_index_line(line, name, lineno)
                entries[(lemma, pos)] = offsets
                n += 1
        counts[name] = n

        fh, name = _open_text(directory, f"data.{suffix}")
        with fh:
            n = 0
            for lineno, line in enumerate(fh, 1):
                if line.startswith(" ") or not line.strip():
                    continue
                if not line.endswith("\n"):
                    raise MalformedLine(name, lineno, "truncated record")
                syn = _parse_data_line(line, name, lineno)
                synsets[(syn.offset, pos)] = syn
                n += 1
        counts[name] = n

        fh, name = _open_text(directory, f"{suffix}.exc")
        with fh:
            n = 0
            for lineno, line in enumerate(fh, 1):
                parts = line.split()
                if not parts:
                    continue
                if len(parts) < 2:
                    raise MalformedLine(name, lineno, "exception entry needs a base form")
                exceptions[(parts[0].lower(), pos)] = tuple(p.lower() for p in parts[1:])
                n += 1
        counts[name] = n

    for (lemma, pos), offsets in entries.items():
        for off in offsets:
            if (off, pos) not in synsets:
                raise LexiconError(f"index.{_FILE_SUFFIX[pos]}: {lemma!r} refers to missing synset {off:08d}")
    for syn in synsets.values():
        for p in syn.pointers:
            target = synsets.get((p.offset, p.pos))
            if target is None:
                raise LexiconError(
                    f"data.{_FILE_SUFFIX[syn.pos]}: synset {syn.offset:08d} points to missing {p.offset:08d}"
                )
            if p.target > len(target.words) or p.source > len(syn.words):
                raise LexiconError(f"synset {syn.offset:08d}: pointer word number out of range")

    log.info("loaded WordNet from %s: %s", directory,
             ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return Lexicon(
        entries=entries,
        synsets=synsets,
        exceptions=exceptions,
        overrides=dict(load_overrides() if overrides is None else overrides),
        line_counts=counts,
    )


WORDNET_ENV = "NEGATUS_WORDNET"


def default_wordnet_dir() -> Optional[Path]:
    """``$NEGATUS_WORDNET`` if set, else ``data/wordnet-3.0`` of a source checkout."""
    env = os.environ.get(WORDNET_ENV)
    if env:
        return Path(env)
    here = Path(__file__).resolve()
    for parent in here.parents:
        cand = parent / "data" / "wordnet-3.0"
        if cand.is_dir():
            return cand
    return None
