"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import functools
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .align import DEFAULT_K, TreatmentResult, treat
from .corpus import (
    CorpusFormatError,
    CorpusSentence,
    TaskFileError,
    TaskRecord,
    corpus_statistics,
    prediction_record,
    read_cdsco,
    read_tasks,
)
from .evaluation import ScoredRun, report, score
from .fol import (
    DEFAULT_ROLE_PREDICATES,
    FormulaError,
    FormulaSyntaxError,
    UnsupportedConstruct,
    clausify,
    format_clauses,
    parse_formula,
    print_formula,
)
from .strategy import Strategy
from .textprep import DEFAULT_STOPWORDS, load_stopwords, prepare_text
from .wordnet import Lexicon, LexiconError, default_wordnet_dir, load_lexicon, normalize_pos

log = logging.getLogger("negatus")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@functools.lru_cache(maxsize=4)
def _cached_lexicon(directory: str) -> Lexicon:
    return load_lexicon(directory)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("k must be >= 1")
    return value


def _strategy(text: str) -> Strategy:
    try:
        return Strategy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _named_path(text: str) -> Tuple[str, Path]:
    name, sep, path = text.partition("=")
    if not sep:
        return Path(text).stem, Path(text)
    return name, Path(path)


def _add_pipeline_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--k", type=_positive_int, default=DEFAULT_K, help="word window size (default 3)")
    p.add_argument("--wordnet", type=Path, help="WordNet dict directory (fallback: $NEGATUS_WORDNET)")
    p.add_argument("--stopwords", type=Path, help="stopword list, one word per line")
    p.add_argument("--exclude-roles", type=Path, help="role predicates to ignore in scopes, one per line")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="negatus", description="Align negation cues with FOL negations and rewrite them.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("treat", help="treat negations in a task file")
    p.add_argument("tasks", type=Path)
    p.add_argument("--strategy", type=_strategy, default=Strategy.COMB)
    p.add_argument("--out", type=Path, help="prediction file (default: stdout)")
    _add_pipeline_options(p)

    p = sub.add_parser("eval", help="score strategies against gold negati")
    p.add_argument("--tasks", type=_named_path, action="append", default=[], metavar="[NAME=]FILE",
                   help="task file; with --cdsco it supplies formulas keyed by sentence id")
    p.add_argument("--cdsco", type=_named_path, action="append", default=[], metavar="[NAME=]FILE",
                   help="CD-SCO split (gold annotations)")
    p.add_argument("--strategy", type=_strategy, help="score only this strategy")
    p.add_argument("--filtered", action="store_true", help="ignore predictions for tasks without gold")
    p.add_argument("--out", type=Path, help="text report (default: stdout)")
    p.add_argument("--csv", type=Path, help="also write a CSV report")
    _add_pipeline_options(p)

    p = sub.add_parser("parse", help="parse formulas, one per line")
    p.add_argument("formulas", type=Path)
    p.add_argument("--clausify", action="store_true")
    p.add_argument("--open", action="store_true", help="allow free variables")
    p.add_argument("--out", type=Path)

    p = sub.add_parser("antonym", help="list WordNet antonyms")
    p.add_argument("lemma")
    p.add_argument("pos")
    p.add_argument("--wordnet", type=Path)
    return parser


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _lexicon(args, required: bool = False) -> Optional[Lexicon]:
    directory = args.wordnet or default_wordnet_dir()
    if directory is None:
        if required:
            raise UsageError("no WordNet directory: pass --wordnet or set $NEGATUS_WORDNET")
        log.warning("no WordNet directory; lemmas fall back to surface forms and no antonyms are used")
        return None
    return _cached_lexicon(str(Path(directory).resolve()))


def _read_word_list(path: Optional[Path], default):
    if path is None:
        return default
    if not path.is_file():
        raise UsageError(f"no such file: {path}")
    return load_stopwords(path)


def _check_file(path: Path) -> None:
    if not path.is_file():
        raise UsageError(f"no such file: {path}")


def _summary(r: TreatmentResult) -> str:
    pairs = ",".join(f"x{a.cue_id}<->y{a.site_id}" for a in r.assignments) or "-"
    negati = ",".join(n.lemma for n in r.negati) or "-"
    inverses = ",".join(n.inverse or "-" for n in r.negati) or "-"
    return f"{r.task_id}: cues={len(r.cues)} sites={len(r.sites)} assignments={pairs} negatus={negati} inverse={inverses}"


def cmd_treat(args) -> int:
    _check_file(args.tasks)
    stopwords = _read_word_list(args.stopwords, DEFAULT_STOPWORDS)
    roles = _read_word_list(args.exclude_roles, DEFAULT_ROLE_PREDICATES)
    lexicon = _lexicon(args)
    try:
        records = read_tasks(args.tasks)
    except TaskFileError as exc:
        log.error("%s", exc)
        return EXIT_DATA

    status = EXIT_OK
    lines = []
    for rec in records:
        if rec.error is not None:
            log.error("%s:%d: task %s: %s", args.tasks, rec.lineno, rec.task_id, rec.error)
            status = EXIT_DATA
            continue
        text = prepare_text(rec.text, lexicon, stopwords)
        result = treat(text, rec.formula, args.k, args.strategy, lexicon, roles, task_id=rec.task_id)
        print(_summary(result), file=sys.stderr)
        lines.append(json.dumps(prediction_record(result), ensure_ascii=False) + "\n")
    _emit("".join(lines), args.out)
    return status


def _predict(result: Optional[TreatmentResult]) -> List[str]:
    return [n.lemma for n in result.negati] if result else []


def _eval_tasks(records: Sequence[TaskRecord], strategy: Strategy, args, lexicon, stopwords, roles, texts):
    predictions, gold = [], []
    for rec in records:
        result = None
        if rec.formula is not None:
            if rec.task_id not in texts:
                texts[rec.task_id] = prepare_text(rec.text, lexicon, stopwords)
            result = treat(texts[rec.task_id], rec.formula, args.k, strategy, lexicon, roles)
        predictions.append((rec.task_id, _predict(result)))
        gold.append((rec.task_id, rec.gold))
    return predictions, gold


def _overlaps(cue_indices: Sequence[int], gold_cue: Sequence[Tuple[int, str]]) -> bool:
    return bool(set(cue_indices) & {i for i, _ in gold_cue})


def _eval_cdsco(sentences: Sequence[CorpusSentence], formulas: Dict[str, TaskRecord],
                strategy: Strategy, args, lexicon, roles, stopwords, missing: set):
    predictions, gold = [], []
    for s in sentences:
        if not s.gold_negations:
            continue
        rec = formulas.get(s.sentence_id)
        result = None
        if rec is None or rec.formula is None:
            missing.add(s.sentence_id)
        else:
            text = s.task_text(stopwords)
            result = treat(text, rec.formula, args.k, strategy, lexicon, roles)
        by_cue = {}
        cue_tokens = {}
        if result is not None:
            by_cue = {n.assignment.cue_id: n.lemma for n in result.negati}
            cue_tokens = {c.cue_id: c.token_indices for c in result.cues}
        used = set()
        for g_no, neg in enumerate(s.gold_negations):
            guess = []
            for cue_id, idx in cue_tokens.items():
                if cue_id not in used and _overlaps(idx, neg.cue):
                    used.add(cue_id)
                    if cue_id in by_cue:
                        guess = [by_cue[cue_id]]
                    break
            predictions.append((f"{s.sentence_id}#{g_no}", guess))
            gold.append((f"{s.sentence_id}#{g_no}", s.event_lemmas(neg)))
        for cue_id, lemma in sorted(by_cue.items()):
            if cue_id not in used:
                predictions.append((f"{s.sentence_id}#x{cue_id}", [lemma]))
                gold.append((f"{s.sentence_id}#x{cue_id}", None))
    return predictions, gold


def cmd_eval(args) -> int:
    if not args.tasks and not args.cdsco:
        raise UsageError("eval needs at least one --tasks or --cdsco file")
    if args.cdsco and len(args.tasks) > 1:
        raise UsageError("with --cdsco give at most one --tasks file (the formulas)")
    stopwords = _read_word_list(args.stopwords, DEFAULT_STOPWORDS)
    roles = _read_word_list(args.exclude_roles, DEFAULT_ROLE_PREDICATES)
    strategies = [args.strategy] if args.strategy else list(Strategy)
    lexicon = _lexicon(args)
    status = EXIT_OK
    runs: List[ScoredRun] = []

    if args.cdsco:
        formulas: Dict[str, TaskRecord] = {}
        if args.tasks:
            try:
                formulas = {r.task_id: r for r in read_tasks(args.tasks[0][1])}
            except (OSError, TaskFileError) as exc:
                log.error("%s", exc)
                return EXIT_DATA
        splits = []
        for name, path in args.cdsco:
            try:
                sentences = read_cdsco(path)
            except (OSError, CorpusFormatError) as exc:
                log.error("cannot read split %s: %s", name, exc)
                status = EXIT_DATA
                continue
            stats = corpus_statistics(sentences)
            log.info("%s: %d sentences, %d negations, %d with negatus",
                     name, stats.sentences, stats.negations, stats.negations_with_event)
            splits.append((name, sentences))
        for strategy in strategies:
            for name, sentences in splits:
                missing: set = set()
                preds, gold = _eval_cdsco(sentences, formulas, strategy, args, lexicon, roles, stopwords, missing)
                if missing and strategy is strategies[0]:
                    log.warning("%s: no usable formula for %d negated sentence(s): %s",
                                name, len(missing), ", ".join(sorted(missing)[:10]))
                runs.append(score(preds, gold, args.filtered, strategy.label, name))
    else:
        splits = []
        for name, path in args.tasks:
            try:
                records = read_tasks(path)
            except (OSError, TaskFileError) as exc:
                log.error("cannot read split %s: %s", name, exc)
                status = EXIT_DATA
                continue
            for rec in records:
                if rec.error:
                    log.warning("%s:%d: task %s: %s", path, rec.lineno, rec.task_id, rec.error)
            splits.append((name, records, {}))
        for strategy in strategies:
            for name, records, texts in splits:
                preds, gold = _eval_tasks(records, strategy, args, lexicon, stopwords, roles, texts)
                runs.append(score(preds, gold, args.filtered, strategy.label, name))

    if runs and all(r.gold_count == 0 for r in runs):
        log.warning("no gold negatus annotations found; recall is reported as 0")
    _emit(report(runs), args.out)
    if args.csv:
        args.csv.write_text(report(runs, "csv"), encoding="utf-8")
    return status


def cmd_parse(args) -> int:
    _check_file(args.formulas)
    status = EXIT_OK
    chunks = []
    for lineno, line in enumerate(args.formulas.read_text("utf-8").splitlines(), 1):
        text = line.strip()
        if not text or text.startswith(("%", "#")):
            continue
        try:
            f = parse_formula(text, open_clause=args.open)
            if args.clausify:
                chunks.append(format_clauses(clausify(f)))
            else:
                chunks.append(print_formula(f))
        except FormulaSyntaxError as exc:
            indent = len(line) - len(line.lstrip())
            log.error("%s:%d:%d: %s", args.formulas, lineno, exc.column + indent, exc)
            status = EXIT_DATA
        except (FormulaError, UnsupportedConstruct) as exc:
            log.error("%s:%d: %s", args.formulas, lineno, exc)
            status = EXIT_DATA
    sep = "\n\n" if args.clausify else "\n"
    _emit(sep.join(chunks) + ("\n" if chunks else ""), args.out)
    return status


def cmd_antonym(args) -> int:
    try:
        pos = normalize_pos(args.pos)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lexicon = _lexicon(args, required=True)
    for word in lexicon.antonym(args.lemma, pos).antonyms:
        print(word)
    return EXIT_OK


COMMANDS = {"treat": cmd_treat, "eval": cmd_eval, "parse": cmd_parse, "antonym": cmd_antonym}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, argument errors exit EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except (LexiconError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
