"""Integer polynomials in the loop parameter ``x`` and exact specialisation."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class Poly:
    """An element of Z[x], stored sparsely as exponent -> nonzero coefficient.

    >>> x = Poly.x()
    >>> str((x + 1) * (x - 1))
    'x^2 - 1'
    >>> (2 * x + 1).evaluate(Fraction(5, 2))
    Fraction(6, 1)
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = tuple(sorted(((e, c) for e, c in acc.items() if c), reverse=True))
        self._hash = hash(self._terms)

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls({0: c})

    @classmethod
    def x(cls) -> Poly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> Poly:
        return cls({exp: coeff})

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs, descending exponent."""
        return self._terms

    def coeff(self, e: int) -> int:
        for exp, c in self._terms:
            if exp == e:
                return c
        return 0

    @property
    def degree(self) -> int:
        return self._terms[0][0] if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({dict(self._terms)!r})"

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> Poly:
        if isinstance(other, Poly):
            return other
        if isinstance(other, int):
            return Poly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Poly(self._terms + o._terms)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly((e, -c) for e, c in self._terms)

    def __sub__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Poly:
        return (-self) + other

    def __mul__(self, other: object) -> Poly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in o._terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return Poly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x0: Number) -> Fraction:
        """Horner evaluation at an exact rational point."""
        x0 = Fraction(x0)
        if not self._terms:
            return Fraction(0)
        acc = Fraction(0)
        prev = self._terms[0][0]
        for e, c in self._terms:
            acc = acc * x0 ** (prev - e) + c
            prev = e
        return acc * x0**prev

    # -- serialisation -----------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "x" if e == 1 else f"x^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_json(self) -> dict:
        return {"poly": [[e, c] for e, c in self._terms]}

    @classmethod
    def from_json(cls, obj: dict) -> Poly:
        return cls((int(e), int(c)) for e, c in obj["poly"])

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Inverse of ``str``; accepts forms like ``"-2*x^3 + x - 5"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        pieces = re.findall(r"[+-][^+-]+", s)
        if "".join(pieces) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        acc = []
        for piece in pieces:
            m = re.fullmatch(r"([+-])(?:(\d+)\*?)?(x(?:\^(\d+))?)?", piece)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad term {piece!r} in {text!r}")
            c = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(1) == "-":
                c = -c
            e = 0 if m.group(3) is None else int(m.group(4) or 1)
            acc.append((e, c))
        return cls(acc)


ZERO = Poly()
ONE = Poly.const(1)
X = Poly.x()


def x_power(n: int, sign: int = 1) -> Poly:
    return Poly.monomial(sign, n)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def evaluate(p: Poly, x0: Number) -> Fraction:
    return p.evaluate(x0)


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None
