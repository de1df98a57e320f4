"""Permutations, involution signs and symmetric-group characters."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .diagrams import Diagram, DiagramError, Family
from .model import enumerate_symmetric, model_character


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``1..k``; ``images[i - 1] = w(i)``.

    Its diagram joins ``i`` to ``w(i)'``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_cycles(cls, k: int, cycles: list[tuple[int, ...]]) -> Permutation:
        img = list(range(1, k + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))

    def __mul__(self, other: Permutation) -> Permutation:
        """``(w * v)(i) = w(v(i))``."""
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.k
        for i, w in enumerate(self.images, 1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(1, self.k + 1):
            if i in seen:
                continue
            cyc = []
            j = i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.k + 1))

    def fixed_points(self) -> list[int]:
        return [i for i in range(1, self.k + 1) if self(i) == i]

    def to_diagram(self) -> Diagram:
        k = self.k
        return Diagram(k, tuple((i, k + w) for i, w in enumerate(self.images, 1)))

    @classmethod
    def from_diagram(cls, d: Diagram) -> Permutation:
        k = d.k
        img = [0] * k
        for b in d.blocks:
            if len(b) != 2 or not (b[0] <= k < b[1]):
                raise DiagramError(f"not a permutation diagram: block {b}")
            img[b[0] - 1] = b[1] - k
        return cls(tuple(img))


def perm_sign(w: Permutation) -> int:
    inv = sum(1 for i, j in itertools.combinations(range(w.k), 2) if w.images[i] > w.images[j])
    return -1 if inv % 2 else 1


def involutions(k: int, f: int) -> list[Permutation]:
    """All involutions of ``1..k`` with exactly ``f`` fixed points."""
    if f < 0 or f > k or (k - f) % 2:
        return []
    out = []

    def matchings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not items:
            yield []
            return
        a, rest = items[0], items[1:]
        for idx, b in enumerate(rest):
            for m in matchings(rest[:idx] + rest[idx + 1 :]):
                yield [(a, b)] + m

    for fixed in itertools.combinations(range(1, k + 1), f):
        moved = [i for i in range(1, k + 1) if i not in fixed]
        for m in matchings(moved):
            out.append(Permutation.from_cycles(k, list(m)))
    out.sort(key=lambda p: p.images)
    return out


def _require_involution(t: Permutation) -> None:
    if not t.is_involution():
        raise ValueError(f"{t.images} is not an involution")


def saxl_sign(w: Permutation, t: Permutation) -> int:
    """Parity of pairs ``i < j`` of fixed points of ``t`` with ``w(i) > w(j)``."""
    _require_involution(t)
    fixed = t.fixed_points()
    inv = sum(1 for i, j in itertools.combinations(fixed, 2) if w(i) > w(j))
    return -1 if inv % 2 else 1


def apr_sign(w: Permutation, t: Permutation) -> int:
    """Parity of 2-cycles ``(i j)``, ``i < j``, of ``t`` with ``w(i) > w(j)``."""
    _require_involution(t)
    inv = sum(1 for i in range(1, t.k + 1) if i < t(i) and w(i) > w(t(i)))
    return -1 if inv % 2 else 1


# -- integer partitions and characters --------------------------------------


@dataclass(frozen=True, order=True)
class IntegerPartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"not a partition: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def odd(self) -> int:
        return sum(1 for p in self.parts if p % 2)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[IntegerPartition, ...]:
    """Partitions of ``n`` in reverse lexicographic order."""

    def gen(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for tail in gen(rem - p, p):
                yield (p,) + tail

    return tuple(IntegerPartition(p) for p in gen(n, n))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    n = len(lam)
    beta = [lam[i] + (n - 1 - i) for i in range(n)]
    beads = set(beta)
    total = 0
    for b in beta:
        c = b - h
        if c < 0 or c in beads:
            continue
        height = sum(1 for x in beads if c < x < b)
        new = sorted((beads - {b}) | {c}, reverse=True)
        m = len(new)
        shape = tuple(p for p in (new[i] - (m - 1 - i) for i in range(m)) if p > 0)
        total += (-1) ** height * _mn(shape, rest)
    return total


def mn_character(lam: IntegerPartition, mu: IntegerPartition) -> int:
    """The irreducible character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    if lam.n != mu.n:
        raise ValueError(f"size mismatch: |{lam}| = {lam.n}, |{mu}| = {mu.n}")
    return _mn(lam.parts, mu.parts)


def centralizer_order(mu: IntegerPartition) -> int:
    z = 1
    for part, mult in Counter(mu.parts).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(mu: IntegerPartition) -> int:
    return math.factorial(mu.n) // centralizer_order(mu)


def class_representative(mu: IntegerPartition) -> Permutation:
    cycles = []
    start = 1
    for p in mu.parts:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return Permutation.from_cycles(mu.n, cycles)


# -- the Saxl model ----------------------------------------------------------


def saxl_trace(w: Permutation, f: int) -> int:
    """Trace of ``w`` on the span of involutions with ``f`` fixed points, computed group-theoretically."""
    winv = w.inverse()
    return sum(saxl_sign(w, t) for t in involutions(w.k, f) if w * t * winv == t)


def apr_trace(w: Permutation, f: int) -> int:
    winv = w.inverse()
    return sum(apr_sign(w, t) for t in involutions(w.k, f) if w * t * winv == t)


def diagram_model_trace(w: Permutation, f: int) -> int:
    """Trace of ``w`` on the diagram-model piece with ``f`` fixed blocks."""
    basis = enumerate_symmetric(Family.SYMMETRIC_GROUP, w.k, w.k, f)
    value = model_character(basis, w.to_diagram())
    if value.degree > 0:
        raise ArithmeticError("permutation traces must be constants")
    return value.coeff(0)


def saxl_decomposition(k: int) -> dict[tuple[int, IntegerPartition], int]:
    """Multiplicities ``m(f, lam) = <phi^f, chi^lam>`` for every ``f`` and ``lam |- k``."""
    classes = partitions(k)
    traces = {
        (f, mu): diagram_model_trace(class_representative(mu), f)
        for f in range(k + 1)
        for mu in classes
    }
    out = {}
    for f in range(k + 1):
        for lam in classes:
            total = sum(
                Fraction(class_size(mu) * traces[f, mu] * mn_character(lam, mu)) for mu in classes
            ) / math.factorial(k)
            if total.denominator != 1:
                raise ArithmeticError(f"non-integral multiplicity {total} at f={f}, {lam}")
            out[f, lam] = int(total)
    return out


def apr_tensor_counterexamples(k: int) -> list[dict]:
    """Classes and ``f`` where the Saxl trace differs from ``sign(w)`` times the APR trace."""
    bad = []
    for mu in partitions(k):
        w = class_representative(mu)
        s = perm_sign(w)
        for f in range(k + 1):
            lhs = diagram_model_trace(w, f)
            rhs = s * apr_trace(w, f)
            if lhs != rhs:
                bad.append({"class": str(mu), "f": f, "saxl": lhs, "sign_times_apr": rhs})
    return bad


def apr_tensor_check(k: int) -> bool:
    return not apr_tensor_counterexamples(k)
