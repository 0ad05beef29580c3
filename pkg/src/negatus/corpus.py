"""Corpus and task-file I/O.

* CD-SCO (*SEM 2012) CoNLL files: seven fixed columns (chapter, sentence
  number, token number, word, lemma, POS, parse bit) followed by ``***`` or
  by one (cue, scope, event) column triple per negation, ``_`` when unused.
* Task files: JSON lines ``{"id", "text", "formula", "gold"?}``.
* Prediction files: JSON lines written by :func:`write_predictions`.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .align import TreatmentResult
from .fol import Formula, FormulaError, parse_formula, print_formula
from .textprep import DEFAULT_STOPWORDS, TaskText, from_annotated

NO_NEGATION = "***"
INACTIVE = "_"


class CorpusFormatError(ValueError):
    def __init__(self, path: os.PathLike | str, lineno: int, reason: str):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {reason}")


class TaskFileError(ValueError):
    def __init__(self, path: os.PathLike | str, problems: Sequence[Tuple[int, str]]):
        self.path = str(path)
        self.lines = [n for n, _ in problems]
        detail = "; ".join(f"line {n}: {why}" for n, why in problems)
        super().__init__(f"{path}: malformed record(s): {detail}")


@dataclass(frozen=True)
class CorpusToken:
    word: str
    lemma: str
    pos: str
    parse: str


@dataclass(frozen=True)
class GoldNegation:
    cue: Tuple[Tuple[int, str], ...]
    scope: Tuple[int, ...]
    event: Tuple[Tuple[int, str], ...]

    @property
    def has_event(self) -> bool:
        return bool(self.event)


@dataclass(frozen=True)
class CorpusSentence:
    chapter: str
    sentence_no: int
    tokens: Tuple[CorpusToken, ...]
    gold_negations: Tuple[GoldNegation, ...]

    @property
    def sentence_id(self) -> str:
        return f"{self.chapter}_{self.sentence_no}"

    def task_text(self, stopwords: Iterable[str] = DEFAULT_STOPWORDS) -> TaskText:
        return from_annotated(
            [t.word for t in self.tokens],
            [t.lemma for t in self.tokens],
            [t.pos for t in self.tokens],
            stopwords,
        )

    def event_lemmas(self, neg: GoldNegation) -> List[str]:
        """Gold negatus as lemmas; partial-word events keep their substring."""
        out = []
        for idx, word in neg.event:
            tok = self.tokens[idx]
            out.append(tok.lemma.lower() if word.lower() == tok.word.lower() else word.lower())
        return out


@dataclass(frozen=True)
class CorpusStats:
    sentences: int
    negated_sentences: int
    negations: int
    negations_with_event: int


def _split_columns(line: str) -> List[str]:
    return line.split("\t") if "\t" in line else line.split()


def _finish_block(path, start: int, rows: List[Tuple[int, List[str]]]) -> CorpusSentence:
    chapter = rows[0][1][0]
    try:
        sentence_no = int(rows[0][1][1])
    except ValueError:
        raise CorpusFormatError(path, rows[0][0], f"non-integer sentence number {rows[0][1][1]!r}") from None
    width = len(rows[0][1])
    tokens = []
    for lineno, cols in rows:
        if len(cols) != width:
            raise CorpusFormatError(path, lineno, f"expected {width} columns, found {len(cols)}")
        if cols[0] != chapter or cols[1] != rows[0][1][1]:
            raise CorpusFormatError(path, lineno, "chapter/sentence id changes inside a sentence block")
        try:
            idx = int(cols[2])
        except ValueError:
            raise CorpusFormatError(path, lineno, f"non-integer token index {cols[2]!r}") from None
        if idx != len(tokens):
            raise CorpusFormatError(path, lineno, f"token index {idx} out of sequence")
        tokens.append(CorpusToken(cols[3], cols[4], cols[5], cols[6]))

    extra = width - 7
    negations: List[GoldNegation] = []
    if extra == 1:
        if any(cols[7] != NO_NEGATION for _, cols in rows):
            raise CorpusFormatError(path, start, f"single negation column must be {NO_NEGATION!r}")
    elif extra % 3 != 0 or extra < 0:
        raise CorpusFormatError(path, start, f"bad column count {width}")
    else:
        for n in range(extra // 3):
            base = 7 + 3 * n
            cue, scope, event = [], [], []
            for i, (_, cols) in enumerate(rows):
                if cols[base] != INACTIVE:
                    cue.append((i, cols[base]))
                if cols[base + 1] != INACTIVE:
                    scope.append(i)
                if cols[base + 2] != INACTIVE:
                    event.append((i, cols[base + 2]))
            if not cue:
                raise CorpusFormatError(path, start, f"negation {n + 1} has no cue")
            negations.append(GoldNegation(tuple(cue), tuple(scope), tuple(event)))
    return CorpusSentence(chapter, sentence_no, tuple(tokens), tuple(negations))


def read_cdsco(path: os.PathLike | str) -> List[CorpusSentence]:
    sentences: List[CorpusSentence] = []
    rows: List[Tuple[int, List[str]]] = []
    start = 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\r\n")
            if not line.strip():
                if rows:
                    sentences.append(_finish_block(path, start, rows))
                    rows = []
                continue
            cols = _split_columns(line)
            if len(cols) < 8:
                raise CorpusFormatError(path, lineno, f"expected at least 8 columns, found {len(cols)}")
            if not rows:
                start = lineno
            rows.append((lineno, cols))
    if rows:
        sentences.append(_finish_block(path, start, rows))
    return sentences


def write_cdsco(sentences: Iterable[CorpusSentence], path: os.PathLike | str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for s in sentences:
            for i, tok in enumerate(s.tokens):
                cols = [s.chapter, str(s.sentence_no), str(i), tok.word, tok.lemma, tok.pos, tok.parse]
                if not s.gold_negations:
                    cols.append(NO_NEGATION)
                for neg in s.gold_negations:
                    cue = dict(neg.cue)
                    event = dict(neg.event)
                    cols.append(cue.get(i, INACTIVE))
                    cols.append(tok.word if i in neg.scope else INACTIVE)
                    cols.append(event.get(i, INACTIVE))
                fh.write("\t".join(cols) + "\n")
            fh.write("\n")


def corpus_statistics(sentences: Sequence[CorpusSentence]) -> CorpusStats:
    negs = [n for s in sentences for n in s.gold_negations]
    return CorpusStats(
        sentences=len(sentences),
        negated_sentences=sum(1 for s in sentences if s.gold_negations),
        negations=len(negs),
        negations_with_event=sum(1 for n in negs if n.has_event),
    )


@dataclass(frozen=True)
class TaskRecord:
    task_id: str
    text: str
    formula_text: str
    formula: Optional[Formula] = None
    gold: Optional[Tuple[str, ...]] = None
    error: Optional[str] = None
    lineno: int = 0


def read_tasks(path: os.PathLike | str, open_clause: bool = False) -> List[TaskRecord]:
    """Read a JSON-lines task file, parsing every formula eagerly.

    Structural problems (bad JSON, missing fields) raise :class:`TaskFileError`
    naming every offending line.  A formula that fails to parse only marks its
    own record via ``error``.
    """
    records: List[TaskRecord] = []
    problems: List[Tuple[int, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                problems.append((lineno, f"invalid JSON ({exc.msg})"))
                continue
            if not isinstance(obj, dict):
                problems.append((lineno, "record is not an object"))
                continue
            missing = [k for k in ("id", "text", "formula") if not isinstance(obj.get(k), str)]
            gold = obj.get("gold")
            if missing:
                problems.append((lineno, "missing or non-string field(s): " + ", ".join(missing)))
                continue
            if gold is not None and not (isinstance(gold, list) and all(isinstance(g, str) for g in gold)):
                problems.append((lineno, "gold must be a list of strings"))
                continue
            formula, error = None, None
            try:
                formula = parse_formula(obj["formula"], open_clause=open_clause)
            except FormulaError as exc:
                error = str(exc)
            records.append(TaskRecord(
                task_id=obj["id"],
                text=obj["text"],
                formula_text=obj["formula"],
                formula=formula,
                gold=tuple(gold) if gold is not None else None,
                error=error,
                lineno=lineno,
            ))
    if problems:
        raise TaskFileError(path, problems)
    return records


def prediction_record(result: TreatmentResult) -> dict:
    return {
        "id": result.task_id,
        "assignments": [
            {"cue": a.cue_id, "site": a.site_id, "overlap": sorted(a.overlap)}
            for a in result.assignments
        ],
        "negatus": [n.lemma for n in result.negati],
        "inverse": [n.inverse for n in result.negati],
        "formula": print_formula(result.rewritten),
    }


def write_predictions(results: Iterable[TreatmentResult], path: os.PathLike | str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in results:
            fh.write(json.dumps(prediction_record(r), ensure_ascii=False) + "\n")


def read_predictions(path: os.PathLike | str) -> List[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
