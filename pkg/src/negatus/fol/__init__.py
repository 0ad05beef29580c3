"""First-order formulas: parsing, printing and negation rewrites."""

from .clauses import Clause, UnsupportedConstruct, clausify, format_clauses
from .parser import FormulaError, FormulaSyntaxError, UnboundVariableError, parse_formula
from .printer import print_formula
from .rewrite import (
    DEFAULT_ROLE_PREDICATES,
    NegationSite,
    NoMatchingAtom,
    ScopeNotAtomic,
    collect_negations,
    narrow_scope,
    narrow_scope_site,
    normalize_predicate,
    remove_double_negation,
    replace_negated_atom,
)
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
    Term,
    Variable,
    atoms,
    count_nots,
    get_at,
    walk,
)

__all__ = [
    "And", "Atom", "Clause", "Constant", "DEFAULT_ROLE_PREDICATES", "Exists",
    "Forall", "Formula", "FormulaError", "FormulaSyntaxError", "Implies",
    "NegationSite", "NoMatchingAtom", "Not", "Or", "ScopeNotAtomic", "Term",
    "UnboundVariableError", "UnsupportedConstruct", "Variable", "atoms",
    "clausify", "collect_negations", "count_nots", "format_clauses", "get_at",
    "narrow_scope", "narrow_scope_site", "normalize_predicate", "parse_formula",
    "print_formula", "remove_double_negation", "replace_negated_atom", "walk",
]
