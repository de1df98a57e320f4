"""Linear combinations of diagrams and the structural maps built from ``e_k``."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping

from .diagrams import (
    Diagram,
    DiagramError,
    Family,
    compose,
    e_k,
    embed,
    format_diagram,
    identity,
    in_family,
    is_symmetric,
    parse_diagram,
    restrict,
)
from .scalars import ONE, Poly, X


class ConsistencyError(RuntimeError):
    """An internal identity failed to hold; indicates a bug, not bad input."""


@lru_cache(maxsize=1 << 20)
def cached_compose(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    return compose(d1, d2)


class AlgebraElement:
    """A finite sum of diagrams of one family with coefficients in Z[x]."""

    __slots__ = ("k", "family", "terms")

    def __init__(
        self,
        k: int,
        family: Family,
        terms: Mapping[Diagram, Poly] | Iterable[tuple[Diagram, Poly]] = (),
        check: bool = True,
    ):
        self.k = k
        self.family = family
        acc: dict[Diagram, Poly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for d, c in items:
            if check:
                if d.k != k:
                    raise DiagramError(f"diagram has k={d.k}, element has k={k}")
                if not in_family(d, family):
                    raise DiagramError(f"{format_diagram(d)} is not in {family.value}")
            acc[d] = acc.get(d, Poly()) + c
        self.terms = {d: c for d, c in acc.items() if c}

    @classmethod
    def basis(cls, family: Family, d: Diagram, coeff: Poly = ONE) -> AlgebraElement:
        return cls(d.k, family, {d: coeff})

    @classmethod
    def one(cls, family: Family, k: int) -> AlgebraElement:
        return cls(k, family, {identity(k): ONE}, check=False)

    def _compatible(self, other: AlgebraElement) -> None:
        if self.k != other.k or self.family is not other.family:
            raise DiagramError(
                f"incompatible operands: {self.family.value}_{self.k} and {other.family.value}_{other.k}"
            )

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._compatible(other)
        return AlgebraElement(self.k, self.family, list(self.terms.items()) + list(other.terms.items()), check=False)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + other.scale(Poly.const(-1))

    def scale(self, c: Poly) -> AlgebraElement:
        return AlgebraElement(self.k, self.family, ((d, v * c) for d, v in self.terms.items()), check=False)

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return multiply(self, other)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.k == other.k
            and self.family is other.family
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.family.value}, k={self.k}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})[{format_diagram(d)}]" for d, c in self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Diagram, Poly]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].blocks)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "family": self.family.value,
            "terms": [[format_diagram(d), c.to_json()] for d, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> AlgebraElement:
        k = int(obj["k"])
        fam = Family.parse(obj["family"])
        return cls(k, fam, [(parse_diagram(t, k), Poly.from_json(c)) for t, c in obj["terms"]])


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of ``d1 d2 = x^kappa (d1 o d2)``."""
    a._compatible(b)
    acc: dict[Diagram, Poly] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, kappa = cached_compose(d1, d2)
            term = c1 * c2 * Poly.monomial(1, kappa)
            acc[d] = acc.get(d, Poly()) + term
    return AlgebraElement(a.k, a.family, acc, check=False)


def rank_filter(a: AlgebraElement, r: int) -> AlgebraElement:
    """Component of ``a`` inside the ideal spanned by diagrams of rank at most ``r``."""
    return AlgebraElement(a.k, a.family, {d: c for d, c in a.terms.items() if d.rank <= r}, check=False)


def conditional_expectation(d: Diagram, fam: Family) -> tuple[int, Diagram]:
    """Return ``(a, eps)`` with ``e_k d e_k = x^a (eps (x) 1) e_k``.

    ``eps`` lives on ``k - 1`` columns for families whose ``e_k`` has
    singletons, and on ``k - 2`` columns for Brauer and Temperley-Lieb.
    """
    k = d.k
    e = e_k(fam, k)
    u, k1 = compose(e, d)
    v, k2 = compose(u, e)
    m = k - fam.shift
    try:
        eps = restrict(v, m)
    except DiagramError as exc:
        raise ConsistencyError(f"e_k d e_k does not factor for {format_diagram(d)}") from exc
    back, extra = compose(embed(eps, fam.shift), e)
    if back != v or extra != 0:
        raise ConsistencyError(f"e_k d e_k does not factor for {format_diagram(d)}")
    return k1 + k2, eps


def p_t(t: Diagram) -> tuple[Diagram, int]:
    """The diagram with the rows of ``t`` whose propagating blocks are straightened.

    Returns ``(p, ell)`` where ``p t = t p = x^ell t``.
    """
    if not is_symmetric(t):
        raise DiagramError(f"p_t needs a symmetric diagram, got {format_diagram(t)}")
    k = t.k
    blocks = []
    for b in t.blocks:
        tops = [v for v in b if v <= k]
        if t.is_propagating(b):
            blocks.append(tuple(tops) + tuple(v + k for v in tops))
        else:
            blocks.append(b)
    p = Diagram(k, tuple(sorted(blocks)))
    _, ell = compose(p, t)
    return p, ell


def x_times(a: AlgebraElement, n: int = 1) -> AlgebraElement:
    return a.scale(X**n)
