"""Negation-related rewrites: double-negation removal, negation-site
enumeration, scope narrowing and replacement of a negated atom by its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .syntax import Atom, Formula, Not, Path, children, get_at, replace_at, with_children

DEFAULT_ROLE_PREDICATES: FrozenSet[str] = frozenset(
    {"actor", "theme", "topic", "manner", "agent", "patient", "recipient", "of"}
)


class NoMatchingAtom(LookupError):
    """The negatus does not name any atom inside the negation's scope."""

    def __init__(self, lemma: str, site: "NegationSite", formula: Formula):
        self.lemma = lemma
        self.site = site
        self.formula = formula
        super().__init__(f"no atom for {lemma!r} in scope of negation {site.site_id}")


class ScopeNotAtomic(ValueError):
    """The negation at the site does not directly govern a single atom."""


def normalize_predicate(name: str) -> str:
    """Lemma view of a predicate name: lowercased, compounds reduced to their
    last part (``school_subject`` -> ``subject``)."""
    parts = [p for p in name.lower().split("_") if p]
    return parts[-1] if parts else name.lower()


@dataclass(frozen=True)
class NegationSite:
    site_id: int
    path: Path
    scope_atoms: Tuple[Atom, ...]
    atom_paths: Tuple[Path, ...]
    scope_lemmas: FrozenSet[str] = field(default=frozenset())

    @property
    def scope_predicates(self) -> FrozenSet[str]:
        """Normalized predicate names of every scope atom, roles included."""
        return frozenset(normalize_predicate(a.predicate) for a in self.scope_atoms)


def remove_double_negation(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        inner = remove_double_negation(f.body)
        return inner.body if isinstance(inner, Not) else Not(inner)
    return with_children(f, [remove_double_negation(c) for c in children(f)])


def _scope_atoms(node: Formula, path: Path, include_nested: bool) -> List[Tuple[Path, Atom]]:
    if isinstance(node, Atom):
        return [(path, node)]
    if isinstance(node, Not) and not include_nested:
        return []
    out: List[Tuple[Path, Atom]] = []
    for i, child in enumerate(children(node)):
        out.extend(_scope_atoms(child, path + (i,), include_nested))
    return out


def _make_site(
    site_id: int,
    path: Path,
    found: List[Tuple[Path, Atom]],
    excluded_roles: FrozenSet[str],
) -> NegationSite:
    lemmas = frozenset(
        normalize_predicate(a.predicate)
        for _, a in found
        if a.predicate.lower() not in excluded_roles
    )
    return NegationSite(
        site_id=site_id,
        path=path,
        scope_atoms=tuple(a for _, a in found),
        atom_paths=tuple(p for p, _ in found),
        scope_lemmas=lemmas,
    )


def collect_negations(
    f: Formula,
    excluded_roles: Iterable[str] = DEFAULT_ROLE_PREDICATES,
    include_nested: bool = False,
) -> List[NegationSite]:
    """One :class:`NegationSite` per ``Not`` node, numbered 1.. in pre-order.

    Atoms under an inner negation belong to that inner site only, unless
    ``include_nested`` is set.  Role predicates are kept in ``scope_atoms`` but
    left out of ``scope_lemmas``.
    """
    roles = frozenset(r.lower() for r in excluded_roles)
    sites: List[NegationSite] = []

    def visit(node: Formula, path: Path) -> None:
        if isinstance(node, Not):
            found = _scope_atoms(node.body, path + (0,), include_nested)
            sites.append(_make_site(len(sites) + 1, path, found, roles))
        for i, child in enumerate(children(node)):
            visit(child, path + (i,))

    visit(f, ())
    return sites


def _matches(a: Atom, lemma: str) -> bool:
    lemma = lemma.lower()
    return a.predicate == lemma or normalize_predicate(a.predicate) == lemma


def find_negatus_atom(site: NegationSite, lemma: str) -> Optional[int]:
    """Index into ``site.scope_atoms`` of the first atom named ``lemma``."""
    for i, a in enumerate(site.scope_atoms):
        if _matches(a, lemma):
            return i
    return None


def narrow_scope_site(
    f: Formula, site: NegationSite, negatus_lemma: str
) -> Tuple[Formula, NegationSite]:
    """Like :func:`narrow_scope`, also returning the site of the new negation."""
    node = get_at(f, site.path)
    if not isinstance(node, Not):
        raise ValueError(f"path {site.path} does not lead to a negation")
    idx = find_negatus_atom(site, negatus_lemma)
    if idx is None:
        raise NoMatchingAtom(negatus_lemma, site, f)
    target = site.scope_atoms[idx]
    rel = site.atom_paths[idx][len(site.path) + 1:]
    new_body = replace_at(node.body, rel, Not(target))
    new_path = site.path + rel
    narrowed = NegationSite(
        site_id=site.site_id,
        path=new_path,
        scope_atoms=(target,),
        atom_paths=(new_path + (0,),),
        scope_lemmas=frozenset({normalize_predicate(target.predicate)}),
    )
    return replace_at(f, site.path, new_body), narrowed


def narrow_scope(f: Formula, site: NegationSite, negatus_lemma: str) -> Formula:
    """Move the negation at ``site`` down onto the first atom named by the negatus.

    Raises :class:`NoMatchingAtom` when no scope atom matches; the exception
    carries the untouched formula.
    """
    return narrow_scope_site(f, site, negatus_lemma)[0]


def replace_negated_atom(f: Formula, site: NegationSite, inverse: str) -> Formula:
    node = get_at(f, site.path)
    if not isinstance(node, Not) or not isinstance(node.body, Atom):
        raise ScopeNotAtomic(f"negation at {site.path} does not govern a single atom")
    predicate = inverse.strip().lower().replace(" ", "_")
    return replace_at(f, site.path, Atom(predicate, node.body.args))
