"""Recursive-descent parser for the TPTP-flavoured formula syntax.

Grammar (whitespace is insignificant)::

    formula := ("?" | "!") "[" Var ("," Var)* "]" ":" formula
             | "~" formula
             | "(" formula ")"
             | "(" formula ("&" formula)+ ")"
             | "(" formula ("|" formula)+ ")"
             | "(" formula "=>" formula ")"
             | ident "(" term ("," term)* ")"

Variables are uppercase-initial identifiers, constants lowercase-initial.
Mixing ``&`` and ``|`` inside one parenthesised group is rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

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
    free_variables,
)


class FormulaError(ValueError):
    """Base class for formula input errors."""


class FormulaSyntaxError(FormulaError):
    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()):
        self.line = line
        self.column = column
        self.expected: FrozenSet[str] = frozenset(expected)
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += "; expected one of: " + " ".join(sorted(self.expected))
        super().__init__(detail)


class UnboundVariableError(FormulaError):
    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        super().__init__("unbound variable(s): " + ", ".join(self.names))


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<op>=>|[?!\[\]:~()&|,])|(?P<ident>[A-Za-z0-9][A-Za-z0-9_]*)"
)


@dataclass(frozen=True)
class _Tok:
    kind: str  # "op", "ident" or "eof"
    text: str
    line: int
    column: int


def _lex(text: str) -> List[_Tok]:
    toks: List[_Tok] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        if kind == "ws":
            chunk = m.group()
            if "\n" in chunk:
                line += chunk.count("\n")
                line_start = pos + chunk.rindex("\n") + 1
        else:
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


_FORMULA_START = frozenset({"?", "!", "~", "(", "<identifier>"})


class _Parser:
    def __init__(self, text: str):
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: Iterable[str]) -> FormulaSyntaxError:
        t = self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return FormulaSyntaxError(f"unexpected {found}", t.line, t.column, expected)

    def expect(self, op: str) -> None:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
        else:
            raise self.fail({op})

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def parse(self) -> Formula:
        f = self.formula()
        # the outermost connective may be written without parentheses
        if self.at_op("&", "|", "=>"):
            f = self.connective(first=f)
        if self.tok.kind != "eof":
            raise self.fail({"<end of input>"})
        return f

    def formula(self) -> Formula:
        t = self.tok
        if self.at_op("?", "!"):
            self.i += 1
            self.expect("[")
            names = [self.variable()]
            while self.at_op(","):
                self.i += 1
                names.append(self.variable())
            self.expect("]")
            self.expect(":")
            body = self.formula()
            cls = Exists if t.text == "?" else Forall
            return cls(tuple(names), body)
        if self.at_op("~"):
            self.i += 1
            return Not(self.formula())
        if self.at_op("("):
            return self.group()
        if t.kind == "ident":
            return self.atom()
        raise self.fail(_FORMULA_START)

    def group(self) -> Formula:
        self.expect("(")
        first = self.formula()
        if self.at_op(")"):
            self.i += 1
            return first
        if not self.at_op("&", "|", "=>"):
            raise self.fail({"&", "|", "=>", ")"})
        f = self.connective(first)
        self.expect(")")
        return f

    def connective(self, first: Formula) -> Formula:
        if self.at_op("=>"):
            self.i += 1
            return Implies(first, self.formula())
        op = self.tok.text
        parts = [first]
        while self.at_op(op):
            self.i += 1
            parts.append(self.formula())
        if self.at_op("&", "|", "=>"):
            raise self.fail({op, ")"})
        return And(tuple(parts)) if op == "&" else Or(tuple(parts))

    def atom(self) -> Atom:
        name = self.tok.text
        self.i += 1
        self.expect("(")
        args = [self.term()]
        while self.at_op(","):
            self.i += 1
            args.append(self.term())
        self.expect(")")
        return Atom(name.lower(), tuple(args))

    def term(self):
        t = self.tok
        if t.kind != "ident":
            raise self.fail({"<variable>", "<constant>"})
        self.i += 1
        return Variable(t.text) if t.text[0].isupper() else Constant(t.text)

    def variable(self) -> Variable:
        t = self.tok
        if t.kind != "ident" or not t.text[0].isupper():
            raise self.fail({"<variable>"})
        self.i += 1
        return Variable(t.text)


def parse_formula(text: str, open_clause: bool = False) -> Formula:
    """Parse ``text`` into a :data:`Formula`.

    Free variables are an error unless ``open_clause`` is set, which is meant
    for background-knowledge rule templates written without quantifiers.
    """
    f = _Parser(text).parse()
    if not open_clause:
        free = free_variables(f)
        if free:
            raise UnboundVariableError(v.name for v in free)
    return f
