"""Exact sparse linear algebra over the rationals.

Commutants and intertwiner spaces are nullspaces of homogeneous systems with
very sparse rows, so rows are kept as ``{column: Fraction}`` dictionaries and
reduced incrementally into row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

Row = dict[int, Fraction]
Matrix = Sequence[Sequence[Fraction]]
MonomialColumns = Sequence[Optional[tuple[int, Fraction]]]


class Echelon:
    """Row echelon form built one row at a time.

    Every stored row has its least column as pivot, scaled to 1.

    >>> e = Echelon()
    >>> e.add({0: Fraction(1), 1: Fraction(1)})
    True
    >>> e.add({0: Fraction(2), 1: Fraction(2)})
    False
    >>> e.rank
    1
    """

    def __init__(self) -> None:
        self.pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> Row:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            c = min(r)
            p = self.pivots.get(c)
            if p is None:
                break
            factor = r[c]
            for col, val in p.items():
                nv = r.get(col, 0) - factor * val
                if nv:
                    r[col] = nv
                else:
                    r.pop(col, None)
        return r

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert ``row``; return whether it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        c = min(r)
        lead = r[c]
        self.pivots[c] = {col: v / lead for col, v in r.items()}
        return True

    def nullspace(self, n: int) -> list[list[Fraction]]:
        """Basis of the solutions in ``n`` unknowns."""
        # back-substitute to reduced form
        cols = sorted(self.pivots, reverse=True)
        reduced: dict[int, Row] = {}
        for c in cols:
            row = dict(self.pivots[c])
            for pc in [x for x in row if x != c and x in reduced]:
                factor = row.pop(pc)
                for col, val in reduced[pc].items():
                    if col == pc:
                        continue
                    nv = row.get(col, 0) - factor * val
                    if nv:
                        row[col] = nv
                    else:
                        row.pop(col, None)
            reduced[c] = row
        free = [j for j in range(n) if j not in reduced]
        basis = []
        for fcol in free:
            vec = [Fraction(0)] * n
            vec[fcol] = Fraction(1)
            for c, row in reduced.items():
                vec[c] = -row.get(fcol, Fraction(0))
            basis.append(vec)
        return basis


def nullity(rows: Iterable[Mapping[int, Fraction]], n: int) -> int:
    e = Echelon()
    for row in rows:
        e.add(row)
    return n - e.rank


def _dense_to_columns(m: Matrix) -> list[list[tuple[int, Fraction]]]:
    n = len(m[0]) if m else 0
    return [[(i, Fraction(m[i][j])) for i in range(len(m)) if m[i][j]] for j in range(n)]


def intertwiner_dimension_dense(left: Sequence[Matrix], right: Sequence[Matrix]) -> int:
    """``dim {X : X R_i = L_i X for all i}`` for paired dense matrices ``L_i`` (a x a) and ``R_i`` (b x b)."""
    if len(left) != len(right):
        raise ValueError("need paired matrix lists")
    if not left:
        raise ValueError("need at least one pair of matrices")
    a = len(left[0])
    b = len(right[0])
    n = a * b
    if n == 0:
        return 0
    e = Echelon()
    for L, R in zip(left, right):
        rcols = _dense_to_columns(R)
        for i in range(a):
            for j in range(b):
                row: Row = {}
                # (X R)[i][j] = sum_l X[i][l] R[l][j]
                for l, val in rcols[j]:
                    row[i * b + l] = row.get(i * b + l, 0) + val
                # (L X)[i][j] = sum_l L[i][l] X[l][j]
                for l in range(a):
                    if L[i][l]:
                        row[l * b + j] = row.get(l * b + j, 0) - Fraction(L[i][l])
                e.add(row)
    return n - e.rank


def commutant_dimension_dense(matrices: Sequence[Matrix]) -> int:
    """Dimension of the space of matrices commuting with every given square matrix."""
    if not matrices:
        raise ValueError("need at least one matrix")
    return intertwiner_dimension_dense(matrices, matrices)


def intertwiner_dimension_monomial(
    left: Sequence[MonomialColumns], right: Sequence[MonomialColumns], a: int, b: int
) -> int:
    """As :func:`intertwiner_dimension_dense` for matrices with at most one nonzero per column.

    Each matrix is a sequence of columns, each ``None`` or ``(row, value)``.
    """
    n = a * b
    if n == 0:
        return 0
    e = Echelon()
    for L, R in zip(left, right):
        # row indices l with L[i][l] != 0, grouped by i
        lrows: list[list[tuple[int, Fraction]]] = [[] for _ in range(a)]
        for l, col in enumerate(L):
            if col is not None:
                lrows[col[0]].append((l, col[1]))
        for i in range(a):
            for j in range(b):
                row: Row = {}
                rc = R[j]
                if rc is not None:
                    key = i * b + rc[0]
                    row[key] = row.get(key, 0) + rc[1]
                for l, val in lrows[i]:
                    key = l * b + j
                    row[key] = row.get(key, 0) - val
                if any(row.values()):
                    e.add(row)
                if e.rank == n:
                    return 0
    return n - e.rank


def matmul(A: Matrix, B: Matrix) -> list[list[Fraction]]:
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    return [[sum((A[i][l] * B[l][j] for l in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]
