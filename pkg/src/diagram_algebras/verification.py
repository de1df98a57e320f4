"""Exhaustive and sampled checks of the model's structural properties."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Optional

from .algebra import cached_compose, p_t
from .combinatorics import labels, partitions_with_odd, predicted_symmetric_count
from .diagrams import Diagram, Family, e_k, embed, enumerate_family, format_diagram, in_family
from .linalg import intertwiner_dimension_monomial
from .model import (
    SymmetricBasis,
    action_columns,
    enumerate_symmetric,
    graded_blocks,
    model_character,
    symmetric_diagrams,
)
from .scalars import X, Poly
from .symgroup import Permutation, saxl_trace

# Largest k for exhaustive checks, per family.
EXHAUSTIVE_BOUNDS: dict[Family, int] = {
    Family.PARTITION: 2,
    Family.BRAUER: 4,
    Family.ROOK: 3,
    Family.ROOK_BRAUER: 3,
    Family.TEMPERLEY_LIEB: 5,
    Family.MOTZKIN: 4,
    Family.PLANAR_ROOK: 4,
    Family.SYMMETRIC_GROUP: 4,
}

# Largest k for the commutant and intertwiner computations.
COMMUTANT_BOUNDS: dict[Family, int] = {
    Family.PARTITION: 2,
    Family.BRAUER: 3,
    Family.ROOK: 3,
    Family.ROOK_BRAUER: 3,
    Family.TEMPERLEY_LIEB: 5,
    Family.MOTZKIN: 4,
    Family.PLANAR_ROOK: 5,
    Family.SYMMETRIC_GROUP: 5,
}


@dataclass
class CheckReport:
    check: str
    family: str
    k: int
    params: dict = field(default_factory=dict)
    status: str = "pass"
    witness: Any = None
    ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "family": self.family,
            "k": self.k,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
            "ms": round(self.ms, 3),
        }

    def line(self) -> str:
        extra = "" if self.passed else f" witness={self.witness}"
        return f"{self.status.upper()} {self.check} family={self.family} k={self.k} ({self.ms:.0f} ms){extra}"


def _timed(check: str, fam: Family, k: int, params: dict, body: Callable[[], Optional[Any]]) -> CheckReport:
    start = time.perf_counter()
    witness = body()
    ms = (time.perf_counter() - start) * 1000
    return CheckReport(check, fam.value, k, params, "pass" if witness is None else "fail", witness, ms)


def default_x0(fam: Family, k: int) -> Fraction:
    return Fraction(1) if fam.x_fixed_to_one else Fraction(2 * k + 3)


# -- module axiom --------------------------------------------------------------------


def _product_column(c1, c2, fault: Optional[str]):
    # column j of rho(d1) rho(d2) from the columns of the factors
    if c2 is None:
        return None
    j2 = c1[c2[0]]
    if j2 is None:
        return None
    sign = j2[1] * c2[1]
    exp = j2[2] + c2[2]
    if fault == "sign":
        sign = -sign
    elif fault == "kappa":
        exp += 1
    return (j2[0], sign, exp)


def _axiom_witness(blocks: list[SymmetricBasis], d1: Diagram, d2: Diagram, fault: Optional[str]):
    prod, kappa = cached_compose(d1, d2)
    for basis in blocks:
        c1 = action_columns(basis, d1)
        c2 = action_columns(basis, d2)
        c3 = action_columns(basis, prod)
        for j in range(len(basis)):
            lhs = _product_column(c1, c2[j], fault)
            rhs = c3[j]
            if rhs is not None:
                rhs = (rhs[0], rhs[1], rhs[2] + kappa)
            if lhs != rhs:
                return {
                    "d1": format_diagram(d1),
                    "d2": format_diagram(d2),
                    "r": basis.r,
                    "f": basis.f,
                    "t": format_diagram(basis.diagrams[j]),
                    "lhs": _describe(basis, lhs),
                    "rhs": _describe(basis, rhs),
                }
    return None


def _describe(basis: SymmetricBasis, col) -> Optional[str]:
    if col is None:
        return None
    return f"({Poly.monomial(col[1], col[2])}) [{format_diagram(basis.diagrams[col[0]])}]"


def check_module_axiom(
    fam: Family,
    k: int,
    mode: str = "exhaustive",
    seed: int = 0,
    samples: int = 10_000,
    fault: Optional[str] = None,
) -> CheckReport:
    """``rho(d1) rho(d2) = rho(d1 d2)`` on every graded block, identically in ``x``.

    ``fault`` ("sign" or "kappa") corrupts the left side, for testing the harness.
    """
    params: dict = {"mode": mode}
    if mode == "sampled":
        params.update(seed=seed, samples=samples)
    elif mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")

    def body():
        basis_diagrams = enumerate_family(fam, k)
        blocks = graded_blocks(fam, k)
        if mode == "exhaustive":
            pairs = ((a, b) for a in basis_diagrams for b in basis_diagrams)
        else:
            rng = random.Random(seed)
            pairs = ((rng.choice(basis_diagrams), rng.choice(basis_diagrams)) for _ in range(samples))
        for d1, d2 in pairs:
            w = _axiom_witness(blocks, d1, d2, fault)
            if w is not None:
                return w
        return None

    return _timed("module_axiom", fam, k, params, body)


# -- commutants ------------------------------------------------------------------------


def _specialized_columns(basis: SymmetricBasis, d: Diagram, x0: Fraction):
    return tuple(
        None if c is None else (c[0], c[1] * x0 ** c[2]) for c in action_columns(basis, d)
    )


@lru_cache(maxsize=None)
def _block_matrices(fam: Family, k: int, r: int, f: int, x0: Fraction) -> tuple:
    basis = enumerate_symmetric(fam, k, r, f)
    return tuple(_specialized_columns(basis, d, x0) for d in enumerate_family(fam, k))


@lru_cache(maxsize=None)
def hom_dimension(fam: Family, k: int, a: tuple[int, int], b: tuple[int, int], x0: Fraction) -> int:
    """``dim Hom(M^b, M^a)`` at ``x = x0``, over all basis diagrams of the algebra."""
    left = _block_matrices(fam, k, *a, x0)
    right = _block_matrices(fam, k, *b, x0)
    pairs = list(dict.fromkeys(zip(left, right)))
    na = len(enumerate_symmetric(fam, k, *a))
    nb = len(enumerate_symmetric(fam, k, *b))
    return intertwiner_dimension_monomial([p[0] for p in pairs], [p[1] for p in pairs], na, nb)


def expected_block_commutant(fam: Family, r: int, f: int) -> int:
    return 1 if fam.planar else partitions_with_odd(r, f)


def _multiplicity_free_witness(fam: Family, k: int, x0: Fraction) -> Optional[dict]:
    grades = [(b.r, b.f) for b in graded_blocks(fam, k)]
    for r, f in grades:
        got = hom_dimension(fam, k, (r, f), (r, f), x0)
        want = expected_block_commutant(fam, r, f)
        if got != want:
            return {"block": [r, f], "commutant": got, "expected": want, "x0": str(x0)}
    total = sum(hom_dimension(fam, k, a, b, x0) for a in grades for b in grades)
    want = len(labels(fam, k))
    if total != want:
        return {"full_commutant": total, "expected": want, "x0": str(x0)}
    return None


def check_multiplicity_free(fam: Family, k: int, x0: Optional[Fraction] = None) -> CheckReport:
    """Per-block and full-model commutant dimensions match the label counts."""
    x0 = default_x0(fam, k) if x0 is None else Fraction(x0)
    params: dict = {"x0": str(x0)}

    def body():
        w = _multiplicity_free_witness(fam, k, x0)
        if w is not None and fam is Family.ROOK_BRAUER:
            # the non-semisimple parameters are not known here; retry elsewhere
            retry = x0 + 7
            params["retry_x0"] = str(retry)
            w2 = _multiplicity_free_witness(fam, k, retry)
            if w2 is None:
                return None
        return w

    return _timed("multiplicity_free", fam, k, params, body)


def check_disjointness(fam: Family, k: int, x0: Optional[Fraction] = None) -> CheckReport:
    """No nonzero intertwiners between graded blocks of different rank."""
    x0 = default_x0(fam, k) if x0 is None else Fraction(x0)

    def body():
        grades = [(b.r, b.f) for b in graded_blocks(fam, k)]
        for a in grades:
            for b in grades:
                if a[0] != b[0]:
                    dim = hom_dimension(fam, k, a, b, x0)
                    if dim:
                        return {"from": list(b), "to": list(a), "intertwiners": dim, "x0": str(x0)}
        return None

    return _timed("disjointness", fam, k, {"x0": str(x0)}, body)


# -- characters -----------------------------------------------------------------------


def _character_witness(fam: Family, k: int) -> Optional[dict]:
    blocks = graded_blocks(fam, k)
    if fam is not Family.SYMMETRIC_GROUP and k >= fam.shift:
        shift = fam.shift
        e = e_k(fam, k)
        small = k - shift
        small_blocks = {(b.r, b.f): b for b in graded_blocks(fam, small)}
        for a in enumerate_family(fam, small):
            prod, kappa = cached_compose(embed(a, shift), e)
            coeff = X**kappa
            for basis in blocks:
                if basis.r == k:
                    continue
                lhs = coeff * model_character(basis, prod)
                sb = small_blocks.get((basis.r, basis.f))
                rhs = X * model_character(sb, a) if sb is not None else Poly()
                if lhs != rhs:
                    return {
                        "a": format_diagram(a),
                        "r": basis.r,
                        "f": basis.f,
                        "lhs": str(lhs),
                        "rhs": str(rhs),
                    }
    for basis in blocks:
        if basis.r != k:
            continue
        for d in enumerate_family(fam, k):
            value = model_character(basis, d)
            if d.rank < k:
                want = Poly()
            else:
                want = Poly.const(saxl_trace(Permutation.from_diagram(d), basis.f))
            if value != want:
                return {"d": format_diagram(d), "r": k, "f": basis.f, "value": str(value), "expected": str(want)}
    return None


def check_character_recursion(fam: Family, k: int) -> CheckReport:
    """Model characters on ``a e_k`` are ``x`` times those of ``a``; top blocks restrict to the Saxl model."""
    return _timed("character_recursion", fam, k, {}, lambda: _character_witness(fam, k))


def check_absorption(fam: Family, k: int) -> CheckReport:
    """``p_t t = t p_t = x^ell t`` for every symmetric ``t``."""

    def body():
        for t in symmetric_diagrams(fam, k):
            p, ell = p_t(t)
            left = cached_compose(p, t)
            right = cached_compose(t, p)
            if left != (t, ell) or right != (t, ell) or p.rank != t.rank or not in_family(p, fam):
                return {
                    "t": format_diagram(t),
                    "p_t": format_diagram(p),
                    "ell": ell,
                    "p_t t": [format_diagram(left[0]), left[1]],
                    "t p_t": [format_diagram(right[0]), right[1]],
                }
        return None

    return _timed("absorption", fam, k, {}, body)


def check_counts(fam: Family, k: int) -> CheckReport:
    """Enumerated graded pieces agree with the closed forms."""

    def body():
        for r in range(k + 1):
            for f in range(r + 1):
                got = len(enumerate_symmetric(fam, k, r, f))
                want = predicted_symmetric_count(fam, k, r, f)
                if got != want:
                    return {"r": r, "f": f, "enumerated": got, "predicted": want}
        return None

    return _timed("counts", fam, k, {}, body)


# -- driver -----------------------------------------------------------------------------


@dataclass
class RunConfig:
    """Per-family upper bounds on ``k`` for each kind of check."""

    exhaustive: dict[Family, int] = field(default_factory=dict)
    commutant: dict[Family, int] = field(default_factory=dict)
    sampled: dict[Family, int] = field(default_factory=dict)
    samples: int = 10_000
    seed: int = 0

    @classmethod
    def default(cls) -> RunConfig:
        return cls(
            exhaustive=dict(EXHAUSTIVE_BOUNDS),
            commutant=dict(COMMUTANT_BOUNDS),
            sampled={fam: k + 1 for fam, k in EXHAUSTIVE_BOUNDS.items()},
        )


def _first_k(fam: Family) -> int:
    return 0 if fam is Family.SYMMETRIC_GROUP else fam.shift


def run_all(config: RunConfig) -> list[CheckReport]:
    reports: list[CheckReport] = []
    for fam, top in config.exhaustive.items():
        for k in range(top + 1):
            reports.append(check_counts(fam, k))
            reports.append(check_module_axiom(fam, k))
            reports.append(check_absorption(fam, k))
            if k >= _first_k(fam):
                reports.append(check_character_recursion(fam, k))
    for fam, k in config.sampled.items():
        reports.append(check_module_axiom(fam, k, "sampled", config.seed, config.samples))
    for fam, top in config.commutant.items():
        for k in range(top + 1):
            reports.append(check_multiplicity_free(fam, k))
            reports.append(check_disjointness(fam, k))
    reports.sort(key=lambda r: (r.check, r.family, r.k))
    return reports
