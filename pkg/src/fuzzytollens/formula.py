"""Fuzzy propositional formulas: parsing, printing, evaluation, truth tables.

Concrete syntax, loosest binding first::

    formula  := disj ( '->' formula )?          right associative
    disj     := conj ( ('|' | 'or') conj )*      left associative
    conj     := unary ( ('&' | 'and') unary )*   left associative
    unary    := ('!' | 'not') unary | primary
    primary  := ATOM | NUMBER | '(' formula ')'

Atoms match ``[A-Za-z_][A-Za-z0-9_]*`` (minus the keywords ``not``, ``and``,
``or``). Numbers are real constants in [0, 1].
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Union

from .algebra import Algebra, TruthValue
from .errors import CapacityError, FormulaSyntaxError, TruthRangeError, UnboundAtomError

MAX_TABLE_ATOMS = 4
MAX_TABLE_ROWS = 1_000_000
DEFAULT_STEP = 0.25

KEYWORDS = {"not": "!", "and": "&", "or": "|"}


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not _IDENT.fullmatch(self.name) or self.name in KEYWORDS:
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Const:
    value: float

    def __post_init__(self):
        TruthValue(self.value)


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Const, Not, And, Or, Implies]


# --- lexer ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>->|[!&|()])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # 'atom', 'number', one of the operator symbols, or 'end'
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        group = m.lastgroup
        lexeme = m.group()
        if group == "nl":
            line, line_start = line + 1, m.end()
        elif group == "number":
            tokens.append(Token("number", lexeme, line, col))
        elif group == "name":
            kind = KEYWORDS.get(lexeme, "atom")
            tokens.append(Token(kind, lexeme, line, col))
        elif group == "op":
            tokens.append(Token(lexeme, lexeme, line, col))
        pos = m.end()
    tokens.append(Token("end", "", line, len(text) - line_start + 1))
    return tokens


# --- parser ---------------------------------------------------------------

_PRIMARY_START = frozenset({"atom", "constant", "'!'", "'not'", "'('"})


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "end" else repr(tok.text)


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected: frozenset[str]) -> FormulaSyntaxError:
        tok = self.tok
        return FormulaSyntaxError(f"unexpected {_describe(tok)}", tok.line, tok.column, expected)

    def parse(self) -> Formula:
        f = self.formula()
        if self.tok.kind != "end":
            if self.tok.kind == ")":
                raise self.fail(frozenset({"end of input"}))
            raise self.fail(frozenset({"'&'", "'|'", "'->'", "end of input"}))
        return f

    def formula(self) -> Formula:
        left = self.disj()
        if self.tok.kind == "->":
            self.advance()
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.tok.kind == "|":
            self.advance()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.tok.kind == "&":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.tok.kind == "!":
            self.advance()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.tok
        if tok.kind == "atom":
            self.advance()
            return Atom(tok.text)
        if tok.kind == "number":
            self.advance()
            value = float(tok.text)
            if not 0.0 <= value <= 1.0:
                raise TruthRangeError(
                    f"constant {tok.text} at line {tok.line}, column {tok.column} is outside [0, 1]"
                )
            return Const(value)
        if tok.kind == "(":
            self.advance()
            f = self.formula()
            if self.tok.kind != ")":
                raise self.fail(frozenset({"')'", "'&'", "'|'", "'->'"}))
            self.advance()
            return f
        raise self.fail(_PRIMARY_START)


def parse(text: str) -> Formula:
    """Parse ``text`` into a formula tree.

    >>> parse("!a -> b")
    Implies(left=Not(operand=Atom(name='a')), right=Atom(name='b'))
    """
    return _Parser(text).parse()


# --- printer --------------------------------------------------------------

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, Atom: 5, Const: 5}
_SYMBOL = {Implies: "->", Or: "|", And: "&"}


def to_text(f: Formula) -> str:
    """Render with the minimum parentheses needed for ``parse`` to round-trip."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Const):
        return repr(f.value)
    if isinstance(f, Not):
        inner = to_text(f.operand)
        return "!" + (f"({inner})" if _PREC[type(f.operand)] < 4 else inner)
    prec = _PREC[type(f)]
    left, right = to_text(f.left), to_text(f.right)
    # '->' groups to the right, '&' and '|' to the left
    left_tight = prec + 1 if isinstance(f, Implies) else prec
    right_tight = prec if isinstance(f, Implies) else prec + 1
    if _PREC[type(f.left)] < left_tight:
        left = f"({left})"
    if _PREC[type(f.right)] < right_tight:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(f)]} {right}"


def atoms(f: Formula) -> list[str]:
    """Distinct atom names, sorted."""
    found: set[str] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, Not):
            stack.append(node.operand)
        elif isinstance(node, (And, Or, Implies)):
            stack.extend((node.left, node.right))
    return sorted(found)


# --- semantics ------------------------------------------------------------

def evaluate(f: Formula, valuation: Mapping[str, float], alg: Algebra) -> float:
    """Truth value of ``f`` under ``valuation`` and the connectives of ``alg``."""
    if isinstance(f, Atom):
        try:
            return TruthValue(valuation[f.name])
        except KeyError:
            raise UnboundAtomError(f.name) from None
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return alg.neg(evaluate(f.operand, valuation, alg))
    left = evaluate(f.left, valuation, alg)
    right = evaluate(f.right, valuation, alg)
    if isinstance(f, And):
        return alg.conj(left, right)
    if isinstance(f, Or):
        return alg.disj(left, right)
    return alg.implies(left, right)


def grid_values(step: float) -> list[float]:
    """0, step, 2*step, ... up to and including 1."""
    step = float(step)
    if not 0.0 < step <= 1.0:
        raise ValueError(f"step must lie in (0, 1], got {step!r}")
    n = math.floor(1.0 / step + 1e-9)
    values = [k * step for k in range(n + 1) if k * step < 1.0 - 1e-9]
    values.append(1.0)
    return values


@dataclass(frozen=True)
class TruthTable:
    atoms: tuple[str, ...]
    rows: tuple[tuple[tuple[float, ...], float], ...]

    def __iter__(self) -> Iterator[tuple[tuple[float, ...], float]]:
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*self.atoms, "value"])
        for values, result in self.rows:
            w.writerow([fmt(v) for v in (*values, result)])
        return buf.getvalue()


def fmt(x: float) -> str:
    """Decimal rendering with up to 12 significant digits."""
    return f"{x:.12g}"


def truth_table(f: Formula, alg: Algebra, step: float = DEFAULT_STEP) -> TruthTable:
    names = atoms(f)
    if len(names) > MAX_TABLE_ATOMS:
        raise CapacityError(
            f"truth table limited to {MAX_TABLE_ATOMS} atoms, formula has {len(names)}"
        )
    levels = grid_values(step)
    if len(levels) ** len(names) > MAX_TABLE_ROWS:
        raise CapacityError(
            f"{len(levels)}^{len(names)} rows exceeds the limit of {MAX_TABLE_ROWS}"
        )
    rows = []
    for combo in itertools.product(levels, repeat=len(names)):
        rows.append((combo, evaluate(f, dict(zip(names, combo)), alg)))
    return TruthTable(tuple(names), tuple(rows))


def parse_assignment(text: str) -> dict[str, float]:
    """Parse ``"a=0.3,b=0.9"`` into a valuation."""
    out: dict[str, float] = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, sep, value = part.partition("=")
        name = name.strip()
        if not sep or not _IDENT.fullmatch(name):
            raise ValueError(f"malformed assignment {part!r}; expected name=value")
        out[name] = TruthValue(float(value))
    return out

