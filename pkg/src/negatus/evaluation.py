"""Measure-B scoring of predicted negati and report rendering."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

CSV_HEADER = ("strategy", "split", "tp", "pred", "gold", "precision", "recall", "f1")

Labelled = Tuple[str, Optional[Sequence[str]]]


class IdMismatch(ValueError):
    pass


def _ratio(num: int, den: int) -> Fraction:
    return Fraction(100 * num, den) if den else Fraction(0)


def round_pct(value: Fraction) -> Decimal:
    """Half-up rounding to two decimals, done on the exact ratio."""
    return (Decimal(value.numerator) / Decimal(value.denominator)).quantize(
        Decimal("0.01"), rounding=ROUND_HALF_UP
    )


@dataclass(frozen=True)
class ScoredRun:
    strategy: str
    split: str
    true_positives: int
    predictions: int
    gold_count: int

    @property
    def precision_ratio(self) -> Fraction:
        return _ratio(self.true_positives, self.predictions)

    @property
    def recall_ratio(self) -> Fraction:
        return _ratio(self.true_positives, self.gold_count)

    @property
    def f1_ratio(self) -> Fraction:
        p, r = self.precision_ratio, self.recall_ratio
        return 2 * p * r / (p + r) if p + r else Fraction(0)

    @property
    def precision(self) -> Decimal:
        return round_pct(self.precision_ratio)

    @property
    def recall(self) -> Decimal:
        return round_pct(self.recall_ratio)

    @property
    def f1(self) -> Decimal:
        return round_pct(self.f1_ratio)


def normalize_lemmas(lemmas: Optional[Iterable[str]]) -> frozenset:
    if not lemmas:
        return frozenset()
    return frozenset(l.strip().lower().replace(" ", "_") for l in lemmas if l.strip())


def is_true_positive(predicted: frozenset, gold: frozenset) -> bool:
    # exact match: a one-word guess against a two-word gold negatus is wrong
    return bool(predicted) and predicted == gold


def _by_id(items: Iterable[Labelled], what: str) -> Dict[str, frozenset]:
    out: Dict[str, frozenset] = {}
    for task_id, lemmas in items:
        if task_id in out:
            raise IdMismatch(f"duplicate {what} id {task_id!r}")
        out[task_id] = normalize_lemmas(lemmas)
    return out


def score(
    predictions: Iterable[Labelled],
    gold: Iterable[Labelled],
    filtered: bool = False,
    strategy: str = "",
    split: str = "",
) -> ScoredRun:
    """Measure B over aligned task ids.

    An empty prediction means no guess.  A guess for a task without a gold
    negatus is a false prediction, or is dropped when ``filtered`` is set.
    """
    pred = _by_id(predictions, "prediction")
    ref = _by_id(gold, "gold")
    if pred.keys() != ref.keys():
        only_p = sorted(pred.keys() - ref.keys())
        only_g = sorted(ref.keys() - pred.keys())
        raise IdMismatch(f"task ids differ: predictions only {only_p[:5]}, gold only {only_g[:5]}")
    tp = n_pred = 0
    for task_id, guess in pred.items():
        target = ref[task_id]
        if not guess or (filtered and not target):
            continue
        n_pred += 1
        tp += is_true_positive(guess, target)
    return ScoredRun(strategy, split, tp, n_pred, sum(1 for g in ref.values() if g))


def _layout(runs: Sequence[ScoredRun]) -> Tuple[List[str], List[str], Dict[Tuple[str, str], ScoredRun]]:
    strategies: List[str] = []
    splits: List[str] = []
    cells = {}
    for r in runs:
        if r.strategy not in strategies:
            strategies.append(r.strategy)
        if r.split not in splits:
            splits.append(r.split)
        cells[(r.strategy, r.split)] = r
    return strategies, splits, cells


def report(runs: Sequence[ScoredRun], fmt: str = "text") -> str:
    """Strategies as rows, one Prec./Rec./F1 column group per split."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in runs:
            w.writerow([r.strategy, r.split, r.true_positives, r.predictions, r.gold_count,
                        r.precision, r.recall, r.f1])
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")

    strategies, splits, cells = _layout(runs)
    name_w = max([len("Strategy")] + [len(s) for s in strategies])
    group_w = 3 * 7 - 1
    lines = [
        " " * name_w + "".join("  " + s.center(group_w) for s in splits),
        "Strategy".ljust(name_w) + "".join("  " + f"{'Prec.':>6} {'Rec.':>6} {'F1':>6}" for _ in splits),
    ]
    for strat in strategies:
        row = strat.ljust(name_w)
        for split in splits:
            r = cells.get((strat, split))
            row += "  " + (f"{r.precision:>6} {r.recall:>6} {r.f1:>6}" if r else " " * group_w)
        lines.append(row)
    return "\n".join(line.rstrip() for line in lines) + "\n"
