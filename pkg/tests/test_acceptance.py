"""Acceptance criteria, one test per criterion.

Each ``check_*`` function returns a short deterministic report of the values
it computed and raises ``AssertionError`` on failure.  A summary line per
criterion is printed at the end of the pytest run (see ``conftest.py``) and
when this file is run as a script.
"""

from __future__ import annotations

import os
import random
import time
from collections import Counter
from decimal import Decimal
from pathlib import Path

import pytest

from conftest import COOKIES_FORMULA, COOKIES_SENTENCE, MATH_FORMULA, MATH_NARROWED, MATH_SENTENCE
from generators import (
    brute_force_assign,
    evaluate,
    ground_atoms,
    random_alignment_instance,
    random_formula,
    random_interpretation,
)
from negatus.align import assign, treat
from negatus.corpus import corpus_statistics, read_cdsco
from negatus.evaluation import score
from negatus.fol import (
    NegationSite,
    atoms,
    clausify,
    collect_negations,
    count_nots,
    narrow_scope,
    parse_formula,
    print_formula,
    remove_double_negation,
)
from negatus.textprep import Token, WordWindow, detect_cues, prepare_text, word_window
from negatus.wordnet import default_wordnet_dir, load_lexicon

SEED = 20240611
CDSCO_ENV = "NEGATUS_CDSCO_TRAIN"
CDSCO_DEFAULT = Path(__file__).resolve().parents[1] / "data" / "cdsco" / "SEM-2012-SharedTask-CD-SCO-training-09032012.txt"

# criterion number -> (status, detail); read by the terminal summary hook
RESULTS: dict = {}


def _record(number: int, fn, *args):
    try:
        detail = fn(*args)
    except AssertionError as exc:
        RESULTS[number] = ("FAIL", str(exc).splitlines()[0] if str(exc) else "assertion failed")
        raise
    RESULTS[number] = ("PASS", detail)
    return detail


def _timed(limit: float, fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    elapsed = time.perf_counter() - start
    assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"
    return out


# --- checks ---------------------------------------------------------------

def check_math(lexicon) -> str:
    f = parse_formula(MATH_FORMULA)
    (site,) = collect_negations(f)
    assert site.scope_predicates == {"at", "math", "theme", "good"}, site.scope_predicates
    text = prepare_text(MATH_SENTENCE, lexicon)
    narrowed = parse_formula(MATH_NARROWED)
    substituted = parse_formula(MATH_NARROWED.replace("~ good(G)", "bad(G)"))
    for strategy in ("fns", "comb"):
        plain = treat(text, f, 3, strategy)
        assert [n.lemma for n in plain.negati] == ["good"], (strategy, plain.negati)
        assert plain.rewritten == narrowed, print_formula(plain.rewritten)
        full = treat(text, f, 3, strategy, lexicon)
        assert full.rewritten == substituted, print_formula(full.rewritten)
        assert [(a.predicate, inv) for a, inv in full.substitutions] == [("good", "bad")]
    clauses = clausify(substituted)
    assert all(c.is_unit for c in clauses), [str(c) for c in clauses]
    return f"scope={sorted(site.scope_predicates)} negatus=good inverse=bad clauses={len(clauses)} unit"


def check_cookies(lexicon) -> str:
    text = prepare_text(COOKIES_SENTENCE, lexicon)
    f = parse_formula(COOKIES_FORMULA)
    windows = [word_window(text.tokens, c, 3, "fns") for c in detect_cues(text.tokens)]
    sites = collect_negations(f)
    sizes = tuple(len(windows[x].lemma_set & sites[y].scope_lemmas) for x in (0, 1) for y in (0, 1))
    assert sizes == (0, 2, 2, 0), sizes
    # the modal rule is what turns "can't" into "can"; FNS alone reads "eat"
    for strategy in ("baseline", "comb"):
        r = treat(text, f, 3, strategy, lexicon)
        assert [(a.cue_id, a.site_id) for a in r.assignments] == [(1, 2), (2, 1)], r.assignments
        assert [n.lemma for n in r.negati] == ["like", "can"], r.negati
        assert [n.inverse for n in r.negati] == ["dislike", "unable"], r.negati
        assert count_nots(r.rewritten) == 0, print_formula(r.rewritten)
    return f"sizes={sizes} x1<->y2 x2<->y1 negati=like,can inverses=dislike,unable nots=0"


def _as_inputs(cue_sets, site_sets):
    windows = [
        WordWindow(i + 1, tuple(Token(n, w, w) for n, w in enumerate(sorted(s))))
        for i, s in enumerate(cue_sets)
    ]
    sites = [NegationSite(j + 1, (), (), (), s) for j, s in enumerate(site_sets)]
    return windows, sites


def check_alignment(n: int = 10_000) -> str:
    rng = random.Random(SEED)
    paired = 0
    for k in range(n):
        cue_sets, site_sets = random_alignment_instance(rng)
        got = [(a.cue_id - 1, a.site_id - 1) for a in assign(*_as_inputs(cue_sets, site_sets))]
        expected = brute_force_assign(cue_sets, site_sets)
        assert got == expected, f"instance {k}: {got} != {expected}"
        paired += len(got)
    return f"instances={n} agree=100% pairs={paired}"


def check_formula_engine(n: int = 10_000, interpretations: int = 100) -> str:
    rng = random.Random(SEED)
    for k in range(n):
        f = random_formula(rng)
        text = print_formula(f)
        assert parse_formula(text) == f, f"round trip {k}: {text}"

    for k in range(n):
        f = random_formula(rng, quantifiers=False)
        g = remove_double_negation(f)
        assert remove_double_negation(g) == g, f"not idempotent {k}"
        base = ground_atoms(f)
        for _ in range(interpretations):
            interp = random_interpretation(rng, base)
            assert evaluate(f, interp) == evaluate(g, interp), f"truth changed {k}: {print_formula(f)}"

    narrowed = 0
    for k in range(n):
        f = remove_double_negation(random_formula(rng))
        sites = [s for s in collect_negations(f, excluded_roles=()) if s.scope_atoms]
        if not sites:
            continue
        site = rng.choice(sites)
        g = narrow_scope(f, site, rng.choice(site.scope_atoms).predicate)
        assert Counter(atoms(g)) == Counter(atoms(f)), f"atoms changed {k}"
        narrowed += 1
    return f"roundtrip={n} dneg={n}x{interpretations} narrow={narrowed}"


def check_measure_b() -> str:
    run = score([("a", ["x"]), ("b", ["y"]), ("c", []), ("d", [])],
                [("a", ["x"]), ("b", ["z"]), ("c", ["u"]), ("d", ["v"])])
    values = (run.precision, run.recall, run.f1)
    assert values == (Decimal("50.00"), Decimal("25.00"), Decimal("33.33")), values

    rng = random.Random(SEED)
    for k in range(1000):
        ids = [str(i) for i in range(rng.randint(1, 12))]
        gold = [(i, rng.choice([[], ["a"], ["b"], ["a", "b"]])) for i in ids]
        preds = [(i, rng.choice([[], ["a"], ["b"]])) for i in ids]
        plain, filtered = score(preds, gold), score(preds, gold, filtered=True)
        assert filtered.precision_ratio >= plain.precision_ratio, k
        assert filtered.gold_count == plain.gold_count and filtered.true_positives == plain.true_positives, k
        dropped = sum(1 for (_, p), (_, g) in zip(preds, gold) if p and not g)
        assert plain.predictions - filtered.predictions == dropped, k
    return f"P={values[0]} R={values[1]} F1={values[2]} filtered-fixtures=1000"


def cdsco_train_path() -> Path:
    return Path(os.environ.get(CDSCO_ENV, CDSCO_DEFAULT))


def check_corpus_statistics() -> str:
    path = cdsco_train_path()
    assert path.is_file(), f"CD-SCO training file not found at {path} (set ${CDSCO_ENV})"
    stats = corpus_statistics(read_cdsco(path))
    assert (stats.negations, stats.negations_with_event) == (983, 615), stats
    return f"negations={stats.negations} with_negatus={stats.negations_with_event}"


def full_report(lexicon) -> str:
    lines = []
    for number, fn, args in CHECKS:
        try:
            lines.append(f"{number}: {fn(*args(lexicon))}")
        except AssertionError as exc:
            lines.append(f"{number}: FAIL {exc}")
    return "\n".join(lines)


CHECKS = [
    (1, check_math, lambda lex: (lex,)),
    (2, check_cookies, lambda lex: (lex,)),
    (3, check_alignment, lambda lex: ()),
    (4, check_formula_engine, lambda lex: ()),
    (5, check_measure_b, lambda lex: ()),
    (6, check_corpus_statistics, lambda lex: ()),
]


# --- tests ----------------------------------------------------------------

def test_criterion_1_math_example(lexicon):
    _record(1, _timed, 1.0, check_math, lexicon)


def test_criterion_2_cookies_example(lexicon):
    _record(2, _timed, 1.0, check_cookies, lexicon)


def test_criterion_3_alignment_oracle():
    _record(3, _timed, 30.0, check_alignment)


def test_criterion_4_formula_engine():
    _record(4, _timed, 60.0, check_formula_engine)


def test_criterion_5_measure_b():
    _record(5, check_measure_b)


def test_criterion_6_corpus_statistics():
    _record(6, _timed, 5.0, check_corpus_statistics)


def test_criterion_7_corpus_reproduction():
    RESULTS[7] = ("WAIVED", "released sentence/formula pairs not available")
    pytest.skip("WAIVED: needs the released sentence/formula pairs for CD-SCO and Cloze-NEG")


def test_criterion_8_determinism(lexicon):
    _record(8, lambda: _determinism(lexicon))


def _determinism(lexicon) -> str:
    first, second = full_report(lexicon), full_report(lexicon)
    assert first == second, "reports differ between runs"
    return f"two runs identical ({len(first.encode())} bytes)"


def summary_lines():
    names = {
        1: "math example fidelity", 2: "cookies example fidelity", 3: "alignment oracle equivalence",
        4: "formula engine properties", 5: "measure-B arithmetic", 6: "CD-SCO train statistics",
        7: "corpus-level reproduction", 8: "determinism",
    }
    for number, name in names.items():
        status, detail = RESULTS.get(number, ("NOT RUN", ""))
        yield f"criterion {number} {name}: {status}" + (f" ({detail})" if detail else "")


if __name__ == "__main__":
    lex = load_lexicon(default_wordnet_dir())
    for number, fn, args in CHECKS:
        try:
            _record(number, fn, *args(lex))
        except AssertionError:
            pass
    RESULTS[7] = ("WAIVED", "released sentence/formula pairs not available")
    try:
        _record(8, lambda: _determinism(lex))
    except AssertionError:
        pass
    print("\n".join(summary_lines()))
