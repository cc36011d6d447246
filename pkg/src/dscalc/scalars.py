"""Scalar arithmetic in three explicit modes.

A scalar is one of:

* an exact arbitrary-precision rational (``fractions.Fraction``),
* an IEEE-754 double (``float``),
* a :class:`RatFunc`, a rational function in the two formal variables
  ``e1`` and ``e2`` with exact rational coefficients.

There is no promotion between modes: mixing them in :func:`scalar_arith`
raises :class:`~dscalc.errors.ModeMismatchError`.  Symbolic values are kept
unreduced (no bivariate gcd); equality is decided by cross-multiplying and
comparing expanded polynomials, which is exact.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import (
    DegreeOverflowError,
    ModeMismatchError,
    UndefinedPointError,
    ZeroDenominatorError,
)

MAX_DEGREE = 64

_Exp = tuple[int, int]


class BiPoly:
    """A polynomial ``sum c[i,j] * e1**i * e2**j`` with Fraction coefficients.

    Zero coefficients are never stored; exponents are capped at
    ``MAX_DEGREE`` per variable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[_Exp, Fraction | int] | None = None):
        clean: dict[_Exp, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if i > MAX_DEGREE or j > MAX_DEGREE:
                raise DegreeOverflowError(
                    f"exponent ({i}, {j}) exceeds the per-variable cap of {MAX_DEGREE}"
                )
            c = Fraction(c)
            if c != 0:
                clean[(i, j)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def const(cls, c: Fraction | int) -> "BiPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def var(cls, k: int) -> "BiPoly":
        if k not in (1, 2):
            raise ValueError(f"variable index must be 1 or 2, got {k}")
        return cls({(1, 0) if k == 1 else (0, 1): Fraction(1)})

    def terms(self) -> dict[_Exp, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __neg__(self) -> "BiPoly":
        return BiPoly({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return BiPoly(acc)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        acc: dict[_Exp, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return BiPoly(acc)

    def scaled(self, c: Fraction | int) -> "BiPoly":
        c = Fraction(c)
        return BiPoly({e: c * v for e, v in self._terms.items()})

    def eval_at(self, e1, e2):
        """Substitute scalars for the two variables.

        Works for Fraction, float and RatFunc arguments alike; the result
        has the type the argument arithmetic produces.
        """
        total = None
        for (i, j), c in sorted(self._terms.items()):
            term = c * (e1**i) * (e2**j)
            total = term if total is None else total + term
        return Fraction(0) if total is None else total

    def lex_leading_coeff(self) -> Fraction:
        """Coefficient of the lexicographically largest exponent pair."""
        if not self._terms:
            return Fraction(0)
        return self._terms[max(self._terms)]

    def render(self) -> str:
        """Canonical text: terms by (total degree, e1-degree descending)."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (i, j) in sorted(self._terms, key=lambda e: (e[0] + e[1], e[1])):
            c = self._terms[(i, j)]
            mono = []
            if i:
                mono.append("e1" if i == 1 else f"e1^{i}")
            if j:
                mono.append("e2" if j == 1 else f"e2^{j}")
            body = "*".join(mono)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {text}")
        return " ".join(parts)


class RatFunc:
    """A quotient of two :class:`BiPoly`, kept unreduced.

    The denominator's lexicographically-leading coefficient is normalized
    to be positive, so a value has a single rendered form per
    representation.  Equality compares ``a.num*b.den == b.num*a.den``
    after expansion, which is independent of the representation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly | None = None):
        den = BiPoly.const(1) if den is None else den
        if den.is_zero:
            raise ZeroDenominatorError("denominator is identically zero")
        if den.lex_leading_coeff() < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c: Fraction | int) -> "RatFunc":
        return cls(BiPoly.const(c))

    @classmethod
    def var(cls, k: int) -> "RatFunc":
        return cls(BiPoly.var(k))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @staticmethod
    def _lift(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(Fraction(x))
        raise ModeMismatchError(
            f"cannot mix RatFunc with {type(x).__name__} (no silent promotion)"
        )

    def __add__(self, other) -> "RatFunc":
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        o = self._lift(other)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other) -> "RatFunc":
        return self._lift(other) - self

    def __mul__(self, other) -> "RatFunc":
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._lift(other)
        if o.num.is_zero:
            raise ZeroDenominatorError("division by an identically zero function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._lift(other) / self

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __pow__(self, k: int) -> "RatFunc":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = RatFunc.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def eval(self, e1: Fraction | int, e2: Fraction | int) -> Fraction:
        """Exact value at a rational point."""
        e1, e2 = Fraction(e1), Fraction(e2)
        d = self.den.eval_at(e1, e2)
        if d == 0:
            raise UndefinedPointError(
                f"denominator vanishes at (e1={e1}, e2={e2})"
            )
        return self.num.eval_at(e1, e2) / d

    def subst(self, e1, e2):
        """Substitute arbitrary same-mode scalars for the variables."""
        n = self.num.eval_at(e1, e2)
        d = self.den.eval_at(e1, e2)
        if isinstance(d, RatFunc):
            return RatFunc._lift(n) / d
        if d == 0:
            raise UndefinedPointError("denominator vanishes at the given point")
        return n / d

    def render(self) -> str:
        if self.den == BiPoly.const(1):
            return self.num.render()
        return f"({self.num.render()})/({self.den.render()})"

    def __repr__(self) -> str:
        return f"RatFunc({self.render()})"


def ratfunc_equal(a: RatFunc, b: RatFunc) -> bool:
    """Exact equality by cross-multiplication; no gcd is ever taken."""
    return a == b


Scalar = Union[Fraction, float, RatFunc]


class Mode(str, Enum):
    """Which arithmetic a computation runs in."""

    RATIONAL = "rational"
    FLOAT = "float"
    SYMBOLIC = "symbolic"


def mode_of(x: Scalar) -> Mode:
    if isinstance(x, bool):
        raise ModeMismatchError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return Mode.RATIONAL
    if isinstance(x, float):
        return Mode.FLOAT
    if isinstance(x, RatFunc):
        return Mode.SYMBOLIC
    raise ModeMismatchError(f"{type(x).__name__} is not a scalar")


def to_mode(x: Scalar, mode: Mode) -> Scalar:
    """Explicit conversion into a mode.

    Exact values (int/Fraction) convert into any mode; floats only stay
    floats and symbolic values only stay symbolic, so no precision is
    invented silently.
    """
    if mode is Mode.RATIONAL:
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fraction(x)
        raise ModeMismatchError(f"cannot take {type(x).__name__} as exact rational")
    if mode is Mode.FLOAT:
        if isinstance(x, (int, float, Fraction)) and not isinstance(x, bool):
            return float(x)
        raise ModeMismatchError(f"cannot take {type(x).__name__} as float")
    if mode is Mode.SYMBOLIC:
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return RatFunc.const(Fraction(x))
        raise ModeMismatchError(f"cannot take {type(x).__name__} as symbolic")
    raise ValueError(f"unknown mode {mode!r}")


def zero(mode: Mode) -> Scalar:
    return to_mode(0, mode)


def one(mode: Mode) -> Scalar:
    return to_mode(1, mode)


def is_zero_scalar(x: Scalar) -> bool:
    if isinstance(x, RatFunc):
        return x.is_zero
    return x == 0


def scalars_equal(a: Scalar, b: Scalar) -> bool:
    """Exact same-mode equality (cross-multiplication for symbolic)."""
    if mode_of(a) is not mode_of(b):
        raise ModeMismatchError(
            f"cannot compare {mode_of(a).value} with {mode_of(b).value}"
        )
    return a == b


def scalar_arith(op: str, a: Scalar, b: Scalar):
    """Strict same-mode arithmetic: add, sub, mul, div, cmp.

    ``cmp`` is defined only for the two numeric modes and returns -1, 0
    or 1; rational functions have no total order.
    """
    ma, mb = mode_of(a), mode_of(b)
    if ma is not mb:
        raise ModeMismatchError(f"cannot {op} {ma.value} with {mb.value}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if isinstance(b, RatFunc):
            return a / b  # raises ZeroDenominatorError on zero function
        if b == 0:
            raise ZeroDenominatorError("division by zero")
        return a / b
    if op == "cmp":
        if ma is Mode.SYMBOLIC:
            raise ModeMismatchError("cmp is not defined for symbolic scalars")
        return (a > b) - (a < b)
    raise ValueError(f"unknown operation {op!r}")


def render_scalar(x: Scalar) -> str:
    """Canonical text: exact fraction, 17-significant-digit float, or
    canonical rational-function form."""
    if isinstance(x, RatFunc):
        return x.render()
    if isinstance(x, float):
        return format(x, ".17g")
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    """Parse ``1/10``, ``0.1`` or ``1e-3`` into an exact Fraction."""
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


class _FormParser:
    """Recursive-descent parser for canonical closed-form text.

    Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/')
    factor)*; factor := '-' factor | atom ('^' INT)?; atom := NUMBER |
    'e1' | 'e2' | '(' expr ')'.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _take(self, ch: str):
        if self._peek() != ch:
            raise ValueError(
                f"expected {ch!r} at position {self.pos} in {self.text!r}"
            )
        self.pos += 1

    def parse(self) -> RatFunc:
        out = self._expr()
        if self._peek():
            raise ValueError(
                f"trailing input at position {self.pos} in {self.text!r}"
            )
        return out

    def _expr(self) -> RatFunc:
        out = self._term()
        while self._peek() in "+-":
            op = self._peek()
            self.pos += 1
            rhs = self._term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _term(self) -> RatFunc:
        out = self._factor()
        while self._peek() in "*/":
            op = self._peek()
            self.pos += 1
            rhs = self._factor()
            out = out * rhs if op == "*" else out / rhs
        return out

    def _factor(self) -> RatFunc:
        if self._peek() == "-":
            self.pos += 1
            return -self._factor()
        out = self._atom()
        if self._peek() == "^":
            self.pos += 1
            out = out ** self._int()
        return out

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected integer at position {start} in {self.text!r}")
        return int(self.text[start : self.pos])

    def _atom(self) -> RatFunc:
        ch = self._peek()
        if ch == "(":
            self._take("(")
            out = self._expr()
            self._take(")")
            return out
        if ch == "e":
            if self.text.startswith("e1", self.pos):
                self.pos += 2
                return RatFunc.var(1)
            if self.text.startswith("e2", self.pos):
                self.pos += 2
                return RatFunc.var(2)
            raise ValueError(f"unknown symbol at position {self.pos} in {self.text!r}")
        if ch.isdigit():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isdigit() or self.text[self.pos] == "."
            ):
                self.pos += 1
            return RatFunc.const(Fraction(self.text[start : self.pos]))
        raise ValueError(f"unexpected {ch!r} at position {self.pos} in {self.text!r}")


def parse_closed_form(text: str) -> RatFunc:
    """Parse canonical rational-function text back into a :class:`RatFunc`.

    Inverse (up to equality) of :meth:`RatFunc.render`.
    """
    return _FormParser(text).parse()
