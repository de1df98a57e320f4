import json
from fractions import Fraction

import pytest

from diagram_algebras.diagrams import Family, compose, enumerate_family
from diagram_algebras.linalg import commutant_dimension_dense, matmul
from diagram_algebras.model import enumerate_symmetric, representation_matrix
from diagram_algebras.verification import (
    RunConfig,
    check_absorption,
    check_character_recursion,
    check_counts,
    check_disjointness,
    check_module_axiom,
    check_multiplicity_free,
    expected_block_commutant,
    hom_dimension,
    run_all,
)

QUICK = [(Family.PARTITION, 1), (Family.BRAUER, 2), (Family.ROOK, 2), (Family.ROOK_BRAUER, 2),
         (Family.TEMPERLEY_LIEB, 3), (Family.MOTZKIN, 2), (Family.PLANAR_ROOK, 2), (Family.SYMMETRIC_GROUP, 3)]


@pytest.mark.parametrize("fam,k", QUICK)
def test_checks_pass(fam, k):
    for report in (
        check_counts(fam, k),
        check_module_axiom(fam, k),
        check_absorption(fam, k),
        check_character_recursion(fam, k),
        check_multiplicity_free(fam, k),
        check_disjointness(fam, k),
    ):
        assert report.passed, report.line()
        assert report.witness is None


@pytest.mark.parametrize("fault", ["sign", "kappa"])
def test_fault_injection_is_caught(fault):
    report = check_module_axiom(Family.PARTITION, 2, fault=fault)
    assert not report.passed
    assert report.status == "fail"
    w = report.witness
    assert {"d1", "d2", "r", "f", "t", "lhs", "rhs"} <= set(w)
    assert report.line().startswith("FAIL module_axiom family=partition k=2")
    json.dumps(report.to_json())


def test_sampled_mode_records_seed():
    report = check_module_axiom(Family.BRAUER, 3, "sampled", seed=7, samples=200)
    assert report.passed
    assert report.params == {"mode": "sampled", "seed": 7, "samples": 200}
    with pytest.raises(ValueError):
        check_module_axiom(Family.BRAUER, 2, mode="random")


def test_empty_config():
    assert run_all(RunConfig()) == []


def test_small_config_sorted():
    cfg = RunConfig(exhaustive={Family.ROOK: 1}, commutant={Family.MOTZKIN: 1}, sampled={Family.ROOK: 2}, samples=50)
    reports = run_all(cfg)
    assert all(r.passed for r in reports)
    keys = [(r.check, r.family, r.k) for r in reports]
    assert keys == sorted(keys)
    assert {r.check for r in reports} == {
        "counts", "module_axiom", "absorption", "character_recursion", "multiplicity_free", "disjointness"}


def test_default_config_bounds():
    cfg = RunConfig.default()
    assert cfg.exhaustive[Family.BRAUER] == 4
    assert cfg.sampled[Family.BRAUER] == 5
    assert Family.PLANAR_PARTITION not in cfg.exhaustive


def test_rook_blocks_of_same_rank_are_inequivalent():
    x0 = Fraction(1)
    assert hom_dimension(Family.ROOK, 2, (2, 0), (1, 1), x0) == 0
    assert hom_dimension(Family.ROOK, 2, (2, 2), (2, 0), x0) == 0


@pytest.mark.parametrize("fam,k", [(Family.BRAUER, 2), (Family.PARTITION, 2), (Family.MOTZKIN, 2)])
def test_block_commutant_matches_dense(fam, k):
    # dense commutant of each graded block agrees with the monomial intertwiner count
    x0 = Fraction(2 * k + 3)
    ds = enumerate_family(fam, k)
    for r in range(k + 1):
        for f in range(r + 1):
            basis = enumerate_symmetric(fam, k, r, f)
            if not len(basis):
                continue
            mats = [representation_matrix(basis, d).specialize(x0) for d in ds]
            dense = commutant_dimension_dense(mats)
            assert dense == hom_dimension(fam, k, (r, f), (r, f), x0)
            assert dense == expected_block_commutant(fam, r, f)


def test_specialisation_commutes_with_products():
    # rho(d1) rho(d2) at x0 equals x0^kappa rho(d1 d2) at x0
    fam, k, x0 = Family.BRAUER, 3, Fraction(3, 2)
    ds = enumerate_family(fam, k)[::5]
    basis = enumerate_symmetric(fam, k, 1, 1)
    for d1 in ds:
        for d2 in ds:
            prod, kappa = compose(d1, d2)
            lhs = matmul(representation_matrix(basis, d1).specialize(x0), representation_matrix(basis, d2).specialize(x0))
            rhs = [[x0**kappa * v for v in row] for row in representation_matrix(basis, prod).specialize(x0)]
            assert lhs == rhs
