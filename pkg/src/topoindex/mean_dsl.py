"""A small expression language for edge-weight functions built from means.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := LITERAL | 'A' | 'G' | 'H' | 'Q' | 'C' | '(' expr ')'

``LITERAL`` is a non-negative integer ``p`` or a rational ``p/q`` written
without spaces around the slash. ``4/3`` is therefore one literal while
``4 / 3`` is a division of two literals; both evaluate to the same value.
The mean symbols stand for the arithmetic, geometric, harmonic, quadratic
and cubic means of the two endpoint degrees.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

Scalar = Union[Fraction, float]

MEANS = ("A", "G", "H", "Q", "C")
EXACT_MEANS = frozenset({"A", "H"})
_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


class PhiSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PhiDomainError(ArithmeticError):
    """Division by zero while evaluating an expression."""


class ExactnessClass(enum.Enum):
    EXACT_RATIONAL = "ExactRational"
    NUMERIC = "Numeric"


@dataclass(frozen=True)
class Lit:
    value: Fraction

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("literals are non-negative")


@dataclass(frozen=True)
class Mean:
    tag: str

    def __post_init__(self) -> None:
        if self.tag not in MEANS:
            raise ValueError(f"unknown mean {self.tag!r}")


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "PhiExpr"
    right: "PhiExpr"


PhiExpr = Union[Lit, Mean, BinOp]


# -- parsing ---------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+/\d+)|(\d+)|([AGHQC])|([-+*/()]))")


def _tokenize(source: str) -> List[Tuple[str, object, int]]:
    tokens = []
    pos = 0
    while pos < len(source):
        if source[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(source, pos)
        if m is None or m.end() == pos:
            start = len(source) - len(source[pos:].lstrip())
            raise PhiSyntaxError(f"unexpected character {source[start]!r}", start)
        start = m.start(m.lastindex)
        if m.group(1):
            p, q = m.group(1).split("/")
            if int(q) == 0:
                raise PhiSyntaxError("zero denominator in literal", start)
            tokens.append(("lit", Fraction(int(p), int(q)), start))
        elif m.group(2):
            tokens.append(("lit", Fraction(int(m.group(2))), start))
        elif m.group(3):
            tokens.append(("mean", m.group(3), start))
        else:
            tokens.append(("op", m.group(4), start))
        pos = m.end()
    tokens.append(("end", None, len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = _tokenize(source)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> PhiExpr:
        node = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> PhiExpr:
        node = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.advance()[1]
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> PhiExpr:
        kind, val, pos = self.advance()
        if kind == "lit":
            return Lit(val)
        if kind == "mean":
            return Mean(val)
        if kind == "op" and val == "(":
            node = self.expr()
            kind, val, pos2 = self.advance()
            if not (kind == "op" and val == ")"):
                raise PhiSyntaxError("expected ')'", pos2)
            return node
        if kind == "end":
            raise PhiSyntaxError("unexpected end of expression", pos)
        raise PhiSyntaxError(f"unexpected token {val!r}", pos)


def parse_phi(source: str) -> PhiExpr:
    parser = _Parser(source)
    node = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise PhiSyntaxError(f"unexpected token {val!r}", pos)
    return node


def format_phi(e: PhiExpr) -> str:
    """Render an expression so that ``parse_phi(format_phi(e)) == e``."""
    if isinstance(e, Lit):
        v = e.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(e, Mean):
        return e.tag
    prec = _PRECEDENCE[e.op]
    left = format_phi(e.left)
    if isinstance(e.left, BinOp) and _PRECEDENCE[e.left.op] < prec:
        left = f"({left})"
    right = format_phi(e.right)
    if isinstance(e.right, BinOp) and _PRECEDENCE[e.right.op] <= prec:
        right = f"({right})"
    return f"{left} {e.op} {right}"


def classify(e: PhiExpr) -> ExactnessClass:
    if isinstance(e, Lit):
        return ExactnessClass.EXACT_RATIONAL
    if isinstance(e, Mean):
        return ExactnessClass.EXACT_RATIONAL if e.tag in EXACT_MEANS else ExactnessClass.NUMERIC
    if (
        classify(e.left) is ExactnessClass.EXACT_RATIONAL
        and classify(e.right) is ExactnessClass.EXACT_RATIONAL
    ):
        return ExactnessClass.EXACT_RATIONAL
    return ExactnessClass.NUMERIC


# -- evaluation ------------------------------------------------------------


def mean_exact(tag: str, a: int, b: int) -> Fraction:
    if tag == "A":
        return Fraction(a + b, 2)
    if tag == "H":
        return Fraction(2 * a * b, a + b)
    raise ValueError(f"mean {tag} is not rational in general")


def mean_float(tag: str, a: int, b: int) -> float:
    if tag == "A":
        return (a + b) / 2
    if tag == "G":
        return math.sqrt(a * b)
    if tag == "H":
        return 2 * a * b / (a + b)
    if tag == "Q":
        return math.sqrt((a * a + b * b) / 2)
    if tag == "C":
        return ((a**3 + b**3) / 2) ** (1.0 / 3.0)
    raise ValueError(f"unknown mean {tag!r}")


def _apply(op: str, x, y, node: BinOp):
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    if op == "*":
        return x * y
    if y == 0:
        raise PhiDomainError(f"division by zero in ({format_phi(node)})")
    return x / y


def _eval(e: PhiExpr, a: int, b: int, exact: bool):
    if isinstance(e, Lit):
        return e.value if exact else float(e.value)
    if isinstance(e, Mean):
        return mean_exact(e.tag, a, b) if exact else mean_float(e.tag, a, b)
    return _apply(e.op, _eval(e.left, a, b, exact), _eval(e.right, a, b, exact), e)


def eval_phi(e: PhiExpr, a: int, b: int, *, force_float: bool = False) -> Scalar:
    """Evaluate ``e`` at the degree pair ``(a, b)``.

    Returns a :class:`~fractions.Fraction` for exact-rational expressions and
    a float otherwise (or always, with ``force_float``). The arguments are
    put in sorted order first so the result is symmetric bit for bit.
    """
    if a < 1 or b < 1:
        raise ValueError("degrees must be positive integers")
    a, b = min(a, b), max(a, b)
    exact = not force_float and classify(e) is ExactnessClass.EXACT_RATIONAL
    return _eval(e, a, b, exact)


def phi_table(e: PhiExpr, max_degree: int) -> Dict[Tuple[int, int], Scalar]:
    """Values of ``e`` for every ``1 <= s <= t <= max_degree``."""
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    return {
        (s, t): eval_phi(e, s, t)
        for s in range(1, max_degree + 1)
        for t in range(s, max_degree + 1)
    }
