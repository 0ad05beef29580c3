"""Immutable AST for the first-order formulas produced by sentence-to-logic tools.

Formulas are plain frozen dataclasses so they hash, compare structurally and
can be shared freely between threads.  Child positions used by ``path``
arguments throughout the package are defined by :func:`children`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union


@dataclass(frozen=True)
class Variable:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Constant:
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Variable, Constant]


@dataclass(frozen=True)
class Atom:
    predicate: str
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    conjuncts: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    disjuncts: Tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    antecedent: "Formula"
    consequent: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: Tuple[Variable, ...]
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    vars: Tuple[Variable, ...]
    body: "Formula"


Formula = Union[Atom, Not, And, Or, Implies, Exists, Forall]
Path = Tuple[int, ...]


# Convenience constructors, mostly for tests and interactive use.

def atom(predicate: str, *args: Union[str, Term]) -> Atom:
    """Build an atom; bare strings become variables when uppercase-initial."""
    terms = []
    for a in args:
        if isinstance(a, str):
            a = Variable(a) if a[:1].isupper() else Constant(a)
        terms.append(a)
    return Atom(predicate, tuple(terms))


def conj(*parts: Formula) -> And:
    return And(tuple(parts))


def disj(*parts: Formula) -> Or:
    return Or(tuple(parts))


def exists(names: Sequence[str], body: Formula) -> Exists:
    return Exists(tuple(Variable(n) for n in names), body)


def forall(names: Sequence[str], body: Formula) -> Forall:
    return Forall(tuple(Variable(n) for n in names), body)


def children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, Atom):
        return ()
    if isinstance(f, (Not, Exists, Forall)):
        return (f.body,)
    if isinstance(f, And):
        return f.conjuncts
    if isinstance(f, Or):
        return f.disjuncts
    if isinstance(f, Implies):
        return (f.antecedent, f.consequent)
    raise TypeError(f"not a formula: {f!r}")


def with_children(f: Formula, kids: Sequence[Formula]) -> Formula:
    """Rebuild ``f`` with new children, keeping its own node type and fields."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, Not):
        return Not(kids[0])
    if isinstance(f, Exists):
        return Exists(f.vars, kids[0])
    if isinstance(f, Forall):
        return Forall(f.vars, kids[0])
    if isinstance(f, And):
        return And(tuple(kids))
    if isinstance(f, Or):
        return Or(tuple(kids))
    if isinstance(f, Implies):
        return Implies(kids[0], kids[1])
    raise TypeError(f"not a formula: {f!r}")


def walk(f: Formula, path: Path = ()) -> Iterator[Tuple[Path, Formula]]:
    """Yield ``(path, node)`` pairs in pre-order."""
    yield path, f
    for i, child in enumerate(children(f)):
        yield from walk(child, path + (i,))


def get_at(f: Formula, path: Path) -> Formula:
    for i in path:
        f = children(f)[i]
    return f


def replace_at(f: Formula, path: Path, new: Formula) -> Formula:
    if not path:
        return new
    kids = list(children(f))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return with_children(f, kids)


def atoms(f: Formula) -> Iterator[Atom]:
    for _, node in walk(f):
        if isinstance(node, Atom):
            yield node


def count_nots(f: Formula) -> int:
    return sum(1 for _, node in walk(f) if isinstance(node, Not))


def free_variables(f: Formula, bound: frozenset = frozenset()) -> set:
    if isinstance(f, Atom):
        return {t for t in f.args if isinstance(t, Variable) and t not in bound}
    if isinstance(f, (Exists, Forall)):
        return free_variables(f.body, bound | set(f.vars))
    out: set = set()
    for child in children(f):
        out |= free_variables(child, bound)
    return out
