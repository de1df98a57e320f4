"""Symmetric-diagram modules and the signed conjugation action.

A symmetric diagram ``t`` (one with ``t^T = t``) is acted on by a diagram
``d`` through ``d . t = x^kappa(d, t) S(d, t) d o t o d^T``, or by zero when
the conjugate has smaller rank than ``t``.  ``S(d, t)`` is the sign of the
permutation the conjugation induces on the fixed blocks of ``t``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Sequence

from .algebra import cached_compose
from .diagrams import (
    Diagram,
    DiagramError,
    Family,
    _set_partitions,
    enumerate_family,
    fixed_blocks,
    format_diagram,
    in_family,
    is_symmetric,
    transpose,
)
from .scalars import Poly


class UndefinedSignError(DiagramError):
    """The sign S(d, t) is only defined when conjugation preserves rank."""


class NoConjugatorError(DiagramError):
    pass


# -- bases ----------------------------------------------------------------


def _symmetric_partition_diagrams(k: int) -> list[Diagram]:
    # A symmetric diagram is a set partition of the top row whose blocks are
    # each either fixed (T u T'), non-propagating (T and T' separately), or
    # paired with another block T2 as (T1 u T2') and (T2 u T1').
    out = []
    for tops in _set_partitions(list(range(1, k + 1))):
        n = len(tops)

        def rec(i: int, used: list[bool], acc: list[tuple[int, ...]]):
            while i < n and used[i]:
                i += 1
            if i == n:
                out.append(Diagram(k, tuple(sorted(acc))))
                return
            a = tops[i]
            prime_a = [v + k for v in a]
            used[i] = True
            rec(i + 1, used, acc + [tuple(a) + tuple(prime_a)])
            rec(i + 1, used, acc + [tuple(a), tuple(prime_a)])
            for j in range(i + 1, n):
                if not used[j]:
                    b = tops[j]
                    used[j] = True
                    rec(
                        i + 1,
                        used,
                        acc + [tuple(sorted(a + [v + k for v in b])), tuple(sorted(b + prime_a))],
                    )
                    used[j] = False
            used[i] = False

        rec(0, [False] * n, [])
    return out


@lru_cache(maxsize=None)
def symmetric_diagrams(fam: Family, k: int) -> tuple[Diagram, ...]:
    """All symmetric diagrams of ``fam`` on ``k`` columns, in canonical order."""
    if fam in (Family.PARTITION, Family.PLANAR_PARTITION):
        found = [d for d in _symmetric_partition_diagrams(k) if in_family(d, fam)]
    else:
        found = [d for d in enumerate_family(fam, k) if is_symmetric(d)]
    return tuple(sorted(found, key=lambda d: d.blocks))


@dataclass(frozen=True)
class SymmetricBasis:
    family: Family
    k: int
    r: int
    f: int
    diagrams: tuple[Diagram, ...]

    def __hash__(self) -> int:
        return hash((self.family, self.k, self.r, self.f, len(self.diagrams)))

    @cached_property
    def index(self) -> dict[Diagram, int]:
        return {d: i for i, d in enumerate(self.diagrams)}

    def __len__(self) -> int:
        return len(self.diagrams)

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "k": self.k,
            "r": self.r,
            "f": self.f,
            "diagrams": [format_diagram(d) for d in self.diagrams],
        }


@lru_cache(maxsize=None)
def enumerate_symmetric(fam: Family, k: int, r: int, f: int) -> SymmetricBasis:
    ds = tuple(d for d in symmetric_diagrams(fam, k) if d.rank == r and len(fixed_blocks(d)) == f)
    return SymmetricBasis(fam, k, r, f, ds)


def graded_blocks(fam: Family, k: int) -> list[SymmetricBasis]:
    """Every nonempty ``(r, f)`` piece of the model, ordered by ``(r, f)``."""
    grades = sorted({(d.rank, len(fixed_blocks(d))) for d in symmetric_diagrams(fam, k)})
    return [enumerate_symmetric(fam, k, r, f) for r, f in grades]


# -- the action -------------------------------------------------------------


@dataclass(frozen=True)
class ActionResult:
    zero: bool
    kappa: int = 0
    sign: int = 1
    image: Optional[Diagram] = None

    def coefficient(self) -> Poly:
        return Poly() if self.zero else Poly.monomial(self.sign, self.kappa)


def _perm_parity(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _fixed_block_image(d: Diagram, t: Diagram, image: Diagram) -> list[int]:
    # Stack d / t / d^T as four rows of k nodes and follow each fixed block of t
    # to the block of the conjugate it lands in.
    k = d.k
    parent = list(range(4 * k))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    def node(layer: int, v: int) -> int:
        # vertex v of a diagram sitting with its top row on ``layer``
        return (layer + (1 if v > k else 0)) * k + ((v - 1) % k)

    dt = transpose(d)
    for layer, diag in ((0, d), (1, t), (2, dt)):
        for b in diag.blocks:
            first = node(layer, b[0])
            for v in b[1:]:
                union(first, node(layer, v))

    image_fixed = fixed_blocks(image)
    lookup = {}
    for idx, b in enumerate(image_fixed):
        lookup[find(node(0, b[0]))] = idx
    perm = []
    for b in fixed_blocks(t):
        root = find(node(1, b[0]))
        if root not in lookup:
            raise UndefinedSignError(
                f"fixed block {b} of {format_diagram(t)} does not land on a fixed block"
            )
        perm.append(lookup[root])
    if sorted(perm) != list(range(len(image_fixed))):
        raise UndefinedSignError("fixed blocks are not permuted bijectively")
    return perm


def sign_S(d: Diagram, t: Diagram) -> int:
    """Parity of the permutation of fixed blocks induced by ``t -> d o t o d^T``."""
    if not is_symmetric(t):
        raise DiagramError(f"{format_diagram(t)} is not symmetric")
    u, _ = cached_compose(d, t)
    v, _ = cached_compose(u, transpose(d))
    if v.rank < t.rank:
        raise UndefinedSignError(
            f"rank drops from {t.rank} to {v.rank} conjugating {format_diagram(t)} by {format_diagram(d)}"
        )
    return _perm_parity(_fixed_block_image(d, t, v))


def act(d: Diagram, t: Diagram) -> ActionResult:
    if d.k != t.k:
        raise DiagramError(f"k mismatch: {d.k} vs {t.k}")
    if not is_symmetric(t):
        raise DiagramError(f"{format_diagram(t)} is not symmetric")
    u, kappa = cached_compose(d, t)
    v, _ = cached_compose(u, transpose(d))
    if v.rank < t.rank:
        return ActionResult(zero=True)
    return ActionResult(False, kappa, _perm_parity(_fixed_block_image(d, t, v)), v)


# -- matrices ---------------------------------------------------------------

Column = Optional[tuple[int, int, int]]  # (row, sign, x-exponent)


@dataclass(frozen=True)
class RepMatrix:
    """Monomial matrix of one diagram on a symmetric basis, stored by column."""

    basis: SymmetricBasis
    columns: tuple[Column, ...]

    @property
    def size(self) -> int:
        return len(self.columns)

    def entry(self, i: int, j: int) -> Poly:
        col = self.columns[j]
        if col is None or col[0] != i:
            return Poly()
        return Poly.monomial(col[1], col[2])

    def dense(self) -> list[list[Poly]]:
        n = self.size
        rows = [[Poly() for _ in range(n)] for _ in range(n)]
        for j, col in enumerate(self.columns):
            if col is not None:
                rows[col[0]][j] = Poly.monomial(col[1], col[2])
        return rows

    def trace(self) -> Poly:
        acc: dict[int, int] = {}
        for j, col in enumerate(self.columns):
            if col is not None and col[0] == j:
                acc[col[2]] = acc.get(col[2], 0) + col[1]
        return Poly(acc)

    def specialize(self, x0: Fraction | int) -> list[list[Fraction]]:
        n = self.size
        x0 = Fraction(x0)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for j, col in enumerate(self.columns):
            if col is not None:
                rows[col[0]][j] = col[1] * x0 ** col[2]
        return rows

    def sparse_rows(self) -> list[list[tuple[int, Poly]]]:
        rows: list[list[tuple[int, Poly]]] = [[] for _ in range(self.size)]
        for j, col in enumerate(self.columns):
            if col is not None:
                rows[col[0]].append((j, Poly.monomial(col[1], col[2])))
        for r in rows:
            r.sort()
        return rows

    def to_json(self) -> dict:
        return {
            "basis": self.basis.to_json(),
            "rows": [[[j, p.to_json()] for j, p in row] for row in self.sparse_rows()],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in self.dense():
            w.writerow([str(p) for p in row])
        return buf.getvalue()


def action_columns(basis: SymmetricBasis, d: Diagram) -> tuple[Column, ...]:
    return _action_columns(basis, d)


@lru_cache(maxsize=1 << 18)
def _action_columns(basis: SymmetricBasis, d: Diagram) -> tuple[Column, ...]:
    cols: list[Column] = []
    index = basis.index
    for t in basis.diagrams:
        res = act(d, t)
        if res.zero:
            cols.append(None)
            continue
        row = index.get(res.image)
        if row is None:
            raise DiagramError(
                f"image {format_diagram(res.image)} of {format_diagram(t)} is outside the basis"
            )
        cols.append((row, res.sign, res.kappa))
    return tuple(cols)


def representation_matrix(basis: SymmetricBasis, d: Diagram) -> RepMatrix:
    if d.k != basis.k:
        raise DiagramError(f"k mismatch: {d.k} vs {basis.k}")
    return RepMatrix(basis, action_columns(basis, d))


def model_character(basis: SymmetricBasis, d: Diagram) -> Poly:
    return representation_matrix(basis, d).trace()


# -- orbits -----------------------------------------------------------------


def _pairs(t: Diagram) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Top-row parts of transposed propagating block pairs ``(B, B^T)`` with ``B != B^T``."""
    k = t.k
    out = []
    seen = set()
    for b in t.blocks:
        if not t.is_propagating(b) or b in seen:
            continue
        top = tuple(v for v in b if v <= k)
        bottom = tuple(v - k for v in b if v > k)
        if top == bottom:
            continue
        mirror = tuple(sorted(v + k if v <= k else v - k for v in b))
        seen.add(b)
        seen.add(mirror)
        out.append(tuple(sorted((top, bottom))))
    out.sort(key=lambda p: p[0][0])
    return out


def find_conjugator(s: Diagram, t: Diagram) -> Diagram:
    """A diagram ``d`` with ``d o s o d^T = t``.

    ``d`` has the top row of ``t`` and the (primed) top row of ``s``; fixed
    blocks are joined in left-to-right order, and each transposed pair of
    ``t`` is joined to the correspondingly ranked pair of ``s``.
    """
    k = s.k
    if t.k != k:
        raise DiagramError(f"k mismatch: {s.k} vs {t.k}")
    for diag in (s, t):
        if not is_symmetric(diag):
            raise DiagramError(f"{format_diagram(diag)} is not symmetric")
    fs, ft = fixed_blocks(s), fixed_blocks(t)
    if s.rank != t.rank or len(fs) != len(ft):
        raise NoConjugatorError(
            f"(r, f) differ: ({s.rank}, {len(fs)}) vs ({t.rank}, {len(ft)})"
        )
    joined: list[tuple[int, ...]] = []
    used_t: set[int] = set()
    used_s: set[int] = set()

    def join(top_t: Sequence[int], top_s: Sequence[int]) -> None:
        joined.append(tuple(top_t) + tuple(v + k for v in top_s))
        used_t.update(top_t)
        used_s.update(top_s)

    for bt, bs in zip(ft, fs):
        join([v for v in bt if v <= k], [v for v in bs if v <= k])
    for (t1, t2), (s1, s2) in zip(_pairs(t), _pairs(s)):
        join(t1, s1)
        join(t2, s2)
    for b in t.top_partition:
        if b[0] not in used_t:
            joined.append(b)
    for b in s.top_partition:
        if b[0] not in used_s:
            joined.append(tuple(v + k for v in b))
    d = Diagram(k, tuple(sorted(tuple(sorted(b)) for b in joined)))
    u, _ = cached_compose(d, s)
    v, _ = cached_compose(u, transpose(d))
    if v != t:
        raise NoConjugatorError(
            f"construction failed for s={format_diagram(s)}, t={format_diagram(t)}"
        )
    return d
