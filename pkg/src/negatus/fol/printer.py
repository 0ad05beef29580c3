from __future__ import annotations

from .syntax import And, Atom, Exists, Forall, Formula, Implies, Not, Or

_BINARY = (And, Or, Implies)


def print_atom(a: Atom) -> str:
    return f"{a.predicate}({','.join(t.name for t in a.args)})"


def print_formula(f: Formula) -> str:
    """Canonical text; ``parse_formula(print_formula(f)) == f`` for every AST."""
    if isinstance(f, Atom):
        return print_atom(f)
    if isinstance(f, Not):
        return "~ " + print_formula(f.body)
    if isinstance(f, And):
        return "(" + " & ".join(print_formula(c) for c in f.conjuncts) + ")"
    if isinstance(f, Or):
        return "(" + " | ".join(print_formula(d) for d in f.disjuncts) + ")"
    if isinstance(f, Implies):
        return f"({print_formula(f.antecedent)} => {print_formula(f.consequent)})"
    if isinstance(f, (Exists, Forall)):
        q = "?" if isinstance(f, Exists) else "!"
        names = ",".join(v.name for v in f.vars)
        body = print_formula(f.body)
        if not isinstance(f.body, _BINARY):
            body = f"({body})"
        return f"{q} [{names}] : {body}"
    raise TypeError(f"not a formula: {f!r}")
