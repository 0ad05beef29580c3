"""Clause normal form, enough to show which clauses a tableau prover can use
for forward inference (unit facts) and which only close branches."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Dict, Iterator, List, Set, Tuple, Union

from .printer import print_atom
from .syntax import (
    And,
    Atom,
    Constant,
    Exists,
    Forall,
    Formula,
    Implies,
    Not,
    Or,
    Variable,
    walk,
)


class UnsupportedConstruct(ValueError):
    pass


Literal = Tuple[bool, Atom]


@dataclass(frozen=True)
class Clause:
    """``body -> head``: negative literals form the body, positive ones the head."""

    body: Tuple[Atom, ...]
    head: Tuple[Atom, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.body) + len(self.head) == 1

    def __str__(self) -> str:
        head = " | ".join(print_atom(a) for a in self.head) or "false"
        if not self.body:
            return head
        return ", ".join(print_atom(a) for a in self.body) + " -> " + head


# NNF nodes: literals, ("and", [...]), ("or", [...]), ("all", vars, body), ("ex", vars, body)
_Nnf = Union[Literal, tuple]


def _nnf(f: Formula, positive: bool) -> _Nnf:
    if isinstance(f, Atom):
        return (positive, f)
    if isinstance(f, Not):
        return _nnf(f.body, not positive)
    if isinstance(f, Implies):
        return _nnf(Or((Not(f.antecedent), f.consequent)), positive)
    if isinstance(f, (And, Or)):
        parts = f.conjuncts if isinstance(f, And) else f.disjuncts
        is_and = isinstance(f, And) == positive
        return ("and" if is_and else "or", [_nnf(p, positive) for p in parts])
    if isinstance(f, (Exists, Forall)):
        is_ex = isinstance(f, Exists) == positive
        return ("ex" if is_ex else "all", f.vars, _nnf(f.body, positive))
    raise UnsupportedConstruct(f"cannot clausify {f!r}")


def _is_literal(node: _Nnf) -> bool:
    return isinstance(node[0], bool)


class _Skolemizer:
    def __init__(self, f: Formula):
        used = set()
        for _, node in walk(f):
            if isinstance(node, Atom):
                used.update(t.name for t in node.args)
            elif isinstance(node, (Exists, Forall)):
                used.update(v.name for v in node.vars)
        self.used: Set[str] = used
        self.seen_vars: Set[str] = set()
        self.counter = count(1)

    def fresh_constant(self) -> Constant:
        while True:
            name = f"sk{next(self.counter)}"
            if name not in self.used:
                self.used.add(name)
                return Constant(name)

    def fresh_variable(self, base: str) -> Variable:
        for i in count(1):
            name = f"{base}{i}"
            if name not in self.used:
                self.used.add(name)
                return Variable(name)
        raise AssertionError

    def run(self, node: _Nnf, env: Dict[str, object], universals: int) -> _Nnf:
        if _is_literal(node):
            sign, a = node
            args = tuple(env.get(t.name, t) if isinstance(t, Variable) else t for t in a.args)
            return (sign, Atom(a.predicate, args))
        tag = node[0]
        if tag in ("and", "or"):
            return (tag, [self.run(p, env, universals) for p in node[1]])
        _, vars_, body = node
        env = dict(env)
        if tag == "ex":
            if universals:
                raise UnsupportedConstruct(
                    "existential inside a universal needs a Skolem function"
                )
            for v in vars_:
                env[v.name] = self.fresh_constant()
            return self.run(body, env, universals)
        for v in vars_:
            if v.name in self.seen_vars:
                env[v.name] = self.fresh_variable(v.name)
            else:
                self.seen_vars.add(v.name)
                env[v.name] = v
        return self.run(body, env, universals + 1)


def _cnf(node: _Nnf) -> List[List[Literal]]:
    if _is_literal(node):
        return [[node]]
    tag, parts = node
    if tag == "and":
        return [c for p in parts for c in _cnf(p)]
    clauses: List[List[Literal]] = [[]]
    for p in parts:
        clauses = [left + right for left in clauses for right in _cnf(p)]
    return clauses


def _dedupe(lits: List[Literal]) -> Iterator[Literal]:
    seen = set()
    for lit in lits:
        if lit not in seen:
            seen.add(lit)
            yield lit


def clausify(f: Formula) -> List[Clause]:
    """Convert a closed formula (or open rule template) to clauses.

    Existentials become fresh constants ``sk1, sk2, ...`` in left-to-right
    order; free variables are read as universally quantified.
    """
    sk = _Skolemizer(f)
    skolemized = sk.run(_nnf(f, True), {}, 0)
    out = []
    for lits in _cnf(skolemized):
        lits = list(_dedupe(lits))
        out.append(
            Clause(
                body=tuple(a for sign, a in lits if not sign),
                head=tuple(a for sign, a in lits if sign),
            )
        )
    return out


def format_clauses(clauses: List[Clause]) -> str:
    return "\n".join(str(c) for c in clauses)
