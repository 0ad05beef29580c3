"""Pair textual negation cues with logical negations, pick the negated word
for every pair and rewrite the formula accordingly."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .fol import (
    DEFAULT_ROLE_PREDICATES,
    Atom,
    Formula,
    NegationSite,
    NoMatchingAtom,
    collect_negations,
    narrow_scope_site,
    remove_double_negation,
    replace_negated_atom,
)
from .fol.rewrite import find_negatus_atom
from .strategy import Strategy
from .textprep import Cue, TaskText, Token, WordWindow, detect_cues, word_window
from .wordnet import Lexicon, penn_to_pos

log = logging.getLogger(__name__)

DEFAULT_K = 3

MODAL_CUES = {
    "can't": "can", "cannot": "can", "can not": "can",
    "couldn't": "could", "could not": "could",
    "shouldn't": "should", "should not": "should",
}
FIRST_NON_STOPWORD_CUES = frozenset({
    "nothing", "isn't", "is not", "aren't", "are not",
    "wasn't", "was not", "weren't", "were not",
})


class NoNegatus(LookupError):
    pass


@dataclass(frozen=True)
class Assignment:
    cue_id: int
    site_id: int
    overlap: FrozenSet[str]

    @property
    def overlap_size(self) -> int:
        return len(self.overlap)


@dataclass(frozen=True)
class Negatus:
    assignment: Assignment
    words: Tuple[str, ...]
    lemma: str
    pos: str = ""
    matched_atom: Optional[Atom] = None
    inverse: Optional[str] = None


@dataclass(frozen=True)
class TreatmentResult:
    assignments: Tuple[Assignment, ...]
    negati: Tuple[Negatus, ...]
    rewritten: Formula
    unmatched_cues: Tuple[int, ...]
    unmatched_sites: Tuple[int, ...]
    substitutions: Tuple[Tuple[Atom, str], ...]
    cues: Tuple[Cue, ...] = ()
    sites: Tuple[NegationSite, ...] = ()
    task_id: Optional[str] = None


def _argmax(values: Sequence[int]) -> int:
    # first maximum wins
    best = 0
    for i, v in enumerate(values):
        if v > values[best]:
            best = i
    return best


def assign(windows: Sequence[WordWindow], sites: Sequence[NegationSite]) -> List[Assignment]:
    """Mutual-argmax pairing of cue windows and negation scopes.

    Cue ``i`` and negation ``j`` are paired when ``j`` maximises the overlap
    for ``i``, ``i`` maximises it for ``j`` and the overlap is not empty.
    Ties go to the smaller index.
    """
    if not windows or not sites:
        return []
    cue_sets = [w.lemma_set for w in windows]
    site_sets = [s.scope_lemmas for s in sites]
    sizes = [[len(c & s) for s in site_sets] for c in cue_sets]
    out = []
    for i, row in enumerate(sizes):
        j = _argmax(row)
        i2 = _argmax([sizes[l][j] for l in range(len(cue_sets))])
        if i2 == i and row[j] > 0:
            out.append(Assignment(windows[i].cue_id, sites[j].site_id, cue_sets[i] & site_sets[j]))
    return out


def _is_verb(t: Token) -> bool:
    return t.pos.startswith("VB")


def _is_noun(t: Token) -> bool:
    return t.pos.startswith("NN")


def _from_token(assignment: Optional[Assignment], t: Token) -> Negatus:
    # guessed tags are too weak to steer the antonym lookup
    return Negatus(assignment, (t.surface,), t.lemma, "" if t.pos_guessed else t.pos)


def pick_negatus(
    window: WordWindow,
    cue: Cue,
    strategy: Strategy | str,
    assignment: Optional[Assignment] = None,
) -> Negatus:
    """Choose the negated word for ``cue`` from its window.

    Raises :class:`NoNegatus` when the strategy finds nothing.
    """
    strategy = Strategy.parse(strategy)
    members = window.member_tokens
    first_after = [t for t in members if t.index > cue.token_indices[-1]]

    def first_non_stopword() -> Optional[Negatus]:
        return _from_token(assignment, members[0]) if members else None

    def first_verb() -> Optional[Negatus]:
        for t in members:
            if _is_verb(t):
                return _from_token(assignment, t)
        return None

    def modal() -> Optional[Negatus]:
        word = MODAL_CUES.get(cue.canonical)
        return Negatus(assignment, (word,), word, "MD") if word else None

    if strategy is Strategy.BASELINE:
        found = modal() or first_non_stopword()
    elif strategy is Strategy.FNS:
        found = first_non_stopword()
    elif strategy is Strategy.FV:
        found = first_verb()
    elif strategy is Strategy.FV_FNS:
        found = first_verb() or first_non_stopword()
    else:
        found = modal()
        if found is None:
            if cue.canonical in FIRST_NON_STOPWORD_CUES:
                found = first_non_stopword()
            elif cue.canonical == "no":
                found = next((_from_token(assignment, t) for t in first_after if _is_noun(t)), None)
            else:
                found = first_verb()
        found = found or first_non_stopword()
    if found is None:
        raise NoNegatus(f"no negatus for cue {cue.cue_id} ({cue.canonical!r}) under {strategy.value}")
    return found


def _inverse_pos_order(pos_tag: str) -> Tuple[str, ...]:
    order = ["verb", "adj", "noun", "adv"]
    own = penn_to_pos(pos_tag)
    if own is not None and pos_tag != "MD":
        order.remove(own)
        order.insert(0, own)
    return tuple(order)


def treat(
    text: TaskText,
    formula: Formula,
    k: int = DEFAULT_K,
    strategy: Strategy | str = Strategy.COMB,
    lexicon: Optional[Lexicon] = None,
    excluded_roles: Iterable[str] = DEFAULT_ROLE_PREDICATES,
    include_nested: bool = False,
    task_id: Optional[str] = None,
) -> TreatmentResult:
    """Run the whole negation treatment for one sentence/formula pair.

    Negati that name a scope atom get the negation moved onto that atom;
    when the lexicon knows an inverse the negated atom is replaced by it.
    """
    if k < 1:
        raise ValueError("window size k must be >= 1")
    strategy = Strategy.parse(strategy)
    f = remove_double_negation(formula)
    cues = detect_cues(text.tokens)
    windows = [word_window(text.tokens, c, k, strategy) for c in cues]
    sites = collect_negations(f, excluded_roles, include_nested)
    assignments = assign(windows, sites)

    by_cue = {c.cue_id: c for c in cues}
    win_by_cue = {w.cue_id: w for w in windows}
    site_by_id = {s.site_id: s for s in sites}

    negati: List[Negatus] = []
    for a in assignments:
        try:
            n = pick_negatus(win_by_cue[a.cue_id], by_cue[a.cue_id], strategy, a)
        except NoNegatus as exc:
            log.debug("%s", exc)
            continue
        idx = find_negatus_atom(site_by_id[a.site_id], n.lemma)
        if idx is not None:
            n = Negatus(a, n.words, n.lemma, n.pos, site_by_id[a.site_id].scope_atoms[idx])
        negati.append(n)

    # Later sites first: rewriting a negation never renumbers or moves the
    # negations before it in pre-order, so each site is re-read by id.
    subs_by_cue = {}
    final = {}
    for n in sorted(negati, key=lambda n: -n.assignment.site_id):
        inverse = None
        if n.matched_atom is not None:
            site = collect_negations(f, excluded_roles, include_nested)[n.assignment.site_id - 1]
            try:
                f, narrowed = narrow_scope_site(f, site, n.lemma)
            except NoMatchingAtom:
                narrowed = None
            if narrowed is not None and lexicon is not None:
                inverse = lexicon.inverse(n.lemma, _inverse_pos_order(n.pos))
                if inverse is not None:
                    f = replace_negated_atom(f, narrowed, inverse)
                    subs_by_cue[n.assignment.cue_id] = (narrowed.scope_atoms[0], inverse)
        final[n.assignment.cue_id] = Negatus(
            n.assignment, n.words, n.lemma, n.pos, n.matched_atom, inverse
        )
    negati = [final[n.assignment.cue_id] for n in negati]
    substitutions = [subs_by_cue[n.assignment.cue_id] for n in negati if n.assignment.cue_id in subs_by_cue]

    assigned_cues = {a.cue_id for a in assignments}
    assigned_sites = {a.site_id for a in assignments}
    return TreatmentResult(
        assignments=tuple(assignments),
        negati=tuple(negati),
        rewritten=f,
        unmatched_cues=tuple(c.cue_id for c in cues if c.cue_id not in assigned_cues),
        unmatched_sites=tuple(s.site_id for s in sites if s.site_id not in assigned_sites),
        substitutions=tuple(substitutions),
        cues=tuple(cues),
        sites=tuple(sites),
        task_id=task_id,
    )
