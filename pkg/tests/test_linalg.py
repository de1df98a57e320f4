import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diagram_algebras.diagrams import Family, enumerate_family
from diagram_algebras.linalg import (
    Echelon,
    commutant_dimension_dense,
    intertwiner_dimension_dense,
    intertwiner_dimension_monomial,
    matmul,
    nullity,
)
from diagram_algebras.model import graded_blocks, representation_matrix
from diagram_algebras.symgroup import Permutation

F = Fraction
small_matrices = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)
)


def perm_matrix(images):
    n = len(images)
    return [[1 if images[j] == i + 1 else 0 for j in range(n)] for i in range(n)]


def brute_commutant(mats, n):
    # rank of the linear map X -> (MX - XM)_M over all unit matrices E_ij
    rows = []
    for i, j in itertools.product(range(n), repeat=2):
        E = [[F(int(a == i and b == j)) for b in range(n)] for a in range(n)]
        img = []
        for M in mats:
            ME, EM = matmul(M, E), matmul(E, M)
            img += [ME[a][b] - EM[a][b] for a in range(n) for b in range(n)]
        rows.append({c: v for c, v in enumerate(img) if v})
    e = Echelon()
    for r in rows:
        e.add(r)
    return n * n - e.rank


class TestEchelon:
    def test_rank_and_reduce(self):
        e = Echelon()
        assert e.add({0: F(2), 1: F(4)})
        assert not e.add({0: F(1), 1: F(2)})
        assert e.add({1: F(1), 2: F(-1)})
        assert e.rank == 2
        assert e.reduce({0: F(1), 1: F(3), 2: F(-1)}) == {}

    def test_zero_row(self):
        e = Echelon()
        assert not e.add({})
        assert not e.add({3: F(0)})
        assert e.rank == 0

    def test_nullspace(self):
        rows = [{0: F(1), 1: F(1)}, {1: F(1), 2: F(-1)}]
        e = Echelon()
        for r in rows:
            e.add(r)
        (v,) = e.nullspace(3)
        for r in rows:
            assert sum(c * v[i] for i, c in r.items()) == 0
        assert any(v)
        assert nullity(rows, 3) == 1

    @given(small_matrices)
    def test_rank_nullity(self, m):
        n = len(m)
        rows = [{j: F(v) for j, v in enumerate(r) if v} for r in m]
        e = Echelon()
        for r in rows:
            e.add(r)
        basis = e.nullspace(n)
        assert len(basis) == n - e.rank
        for v in basis:
            for r in rows:
                assert sum(c * v[j] for j, c in r.items()) == 0


class TestCommutants:
    def test_scalar(self):
        assert commutant_dimension_dense([[[F(7)]]]) == 1

    def test_identity(self):
        assert commutant_dimension_dense([[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]) == 9

    def test_regular_s3(self):
        # the commutant of the regular representation has dimension |G| = 6
        perms = list(itertools.permutations(range(1, 4)))
        index = {p: i for i, p in enumerate(perms)}
        mats = []
        for g in perms:
            gp = Permutation(g)
            images = [index[(gp * Permutation(h)).images] + 1 for h in perms]
            mats.append(perm_matrix(images))
        assert commutant_dimension_dense(mats) == 6

    def test_saxl_model_s3(self):
        # three inequivalent irreducibles, each once
        mats = []
        for g in itertools.permutations(range(1, 4)):
            d = Permutation(g).to_diagram()
            blocks = [representation_matrix(b, d).specialize(F(1)) for b in graded_blocks(Family.SYMMETRIC_GROUP, 3)]
            n = sum(len(m) for m in blocks)
            full = [[F(0)] * n for _ in range(n)]
            off = 0
            for m in blocks:
                for i, row in enumerate(m):
                    for j, v in enumerate(row):
                        full[off + i][off + j] = v
                off += len(m)
            mats.append(full)
        assert commutant_dimension_dense(mats) == 3

    def test_inequivalent_blocks(self):
        # trivial and sign of S_2 stacked diagonally
        mats = [[[1, 0], [0, 1]], [[1, 0], [0, -1]]]
        assert commutant_dimension_dense(mats) == 2
        assert intertwiner_dimension_dense([[[1]], [[1]]], [[[1]], [[-1]]]) == 0

    def test_errors(self):
        with pytest.raises(ValueError):
            commutant_dimension_dense([])
        with pytest.raises(ValueError):
            intertwiner_dimension_dense([[[1]]], [])

    @settings(max_examples=40)
    @given(st.lists(small_matrices, min_size=1, max_size=3).filter(lambda ms: len({len(m) for m in ms}) == 1))
    def test_dense_against_brute_force(self, mats):
        fm = [[[F(v) for v in row] for row in m] for m in mats]
        assert commutant_dimension_dense(fm) == brute_commutant(fm, len(fm[0]))


class TestMonomial:
    @pytest.mark.parametrize("fam,k", [(Family.PARTITION, 2), (Family.BRAUER, 3), (Family.MOTZKIN, 3), (Family.ROOK, 2)])
    def test_matches_dense(self, fam, k):
        x0 = F(5) if not fam.x_fixed_to_one else F(1)
        blocks = graded_blocks(fam, k)
        ds = enumerate_family(fam, k)
        for a, b in itertools.product(blocks, repeat=2):
            dense_l = [representation_matrix(a, d).specialize(x0) for d in ds]
            dense_r = [representation_matrix(b, d).specialize(x0) for d in ds]

            def cols(m):
                out = []
                for j in range(len(m[0]) if m else 0):
                    nz = [(i, m[i][j]) for i in range(len(m)) if m[i][j]]
                    assert len(nz) <= 1
                    out.append(nz[0] if nz else None)
                return out

            mono = intertwiner_dimension_monomial([cols(m) for m in dense_l], [cols(m) for m in dense_r], len(a), len(b))
            if len(a) and len(b):
                assert mono == intertwiner_dimension_dense(dense_l, dense_r)

    def test_empty(self):
        assert intertwiner_dimension_monomial([], [], 0, 3) == 0
        # no constraints: every a x b matrix is an intertwiner
        assert intertwiner_dimension_monomial([], [], 2, 3) == 6

    def test_examples(self):
        # 2x2 swap against itself: commutant dimension 2
        swap = [(1, F(1)), (0, F(1))]
        assert intertwiner_dimension_monomial([swap], [swap], 2, 2) == 2
        neg = [(0, F(-1))]
        pos = [(0, F(1))]
        assert intertwiner_dimension_monomial([neg], [pos], 1, 1) == 0
