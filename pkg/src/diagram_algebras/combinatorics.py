"""Closed-form counts of symmetric diagrams, label sets and the TL subset bijection."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from .diagrams import Diagram, DiagramError, Family, in_family, is_symmetric
from .symgroup import IntegerPartition, partitions

# Dimensions of the models for k = 0..10.
SEQUENCE_TABLES: dict[str, tuple[int, ...]] = {
    "s": (1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496),
    "p": (1, 2, 7, 31, 164, 999, 6841, 51790, 428131, 3827967, 36738144),
    "b": (1, 1, 3, 7, 25, 81, 331, 1303, 5937, 26785, 133651),
    "r": (1, 2, 5, 14, 43, 142, 499, 1850, 7193, 29186, 123109),
    "rb": (1, 2, 6, 20, 76, 312, 1384, 6512, 32400, 168992, 921184),
    "tl": (1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252),
    "m": (1, 2, 5, 13, 35, 96, 267, 750, 2123, 6046, 17303),
    "pr": tuple(2**k for k in range(11)),
}

TABLE_FAMILY = {
    "s": Family.SYMMETRIC_GROUP,
    "p": Family.PARTITION,
    "b": Family.BRAUER,
    "r": Family.ROOK,
    "rb": Family.ROOK_BRAUER,
    "tl": Family.TEMPERLEY_LIEB,
    "m": Family.MOTZKIN,
    "pr": Family.PLANAR_ROOK,
}


# -- base counts -------------------------------------------------------------


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def double_factorial(n: int) -> int:
    """``n!!``, with ``(-1)!! = 0!! = 1``."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    if n < 2:
        return 1
    return ((2 * n + 1) * motzkin(n - 1) + (3 * n - 3) * motzkin(n - 2)) // (n + 2)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def ballot(n: int, c: int) -> int:
    return binomial(n, c) - binomial(n, c - 1)


def perfect_matchings(n: int) -> int:
    """Perfect matchings on ``n`` points."""
    return double_factorial(n - 1) if n % 2 == 0 else 0


def partial_matchings(n: int) -> int:
    return sum(binomial(n, 2 * c) * double_factorial(2 * c - 1) for c in range(n // 2 + 1))


def base_counts(name: str, *args: int) -> int:
    table = {
        "stirling2": stirling2,
        "binomial": binomial,
        "double_factorial": double_factorial,
        "catalan": catalan,
        "motzkin": motzkin,
        "bell": bell,
    }
    if name not in table:
        raise ValueError(f"unknown count {name!r}")
    return table[name](*args)


# -- symmetric-diagram counts ----------------------------------------------------


def _involution_factor(r: int, f: int) -> int:
    ell = (r - f) // 2
    return binomial(r, 2 * ell) * double_factorial(2 * ell - 1)


def predicted_symmetric_count(fam: Family, k: int, r: int, f: int) -> int:
    """Number of symmetric diagrams of ``fam`` with rank ``r`` and ``f`` fixed blocks."""
    if not (0 <= f <= r <= k):
        return 0
    if fam.planar:
        if fam is Family.PLANAR_PARTITION:
            raise NotImplementedError("no closed form for planar partition diagrams")
        if f != r:
            return 0
        if fam is Family.TEMPERLEY_LIEB:
            return ballot(k, (k - r) // 2) if (k - r) % 2 == 0 else 0
        if fam is Family.MOTZKIN:
            return sum(binomial(k, r + 2 * c) * ballot(r + 2 * c, c) for c in range((k - r) // 2 + 1))
        return binomial(k, r)
    if (r - f) % 2:
        return 0
    inv = _involution_factor(r, f)
    if fam is Family.PARTITION:
        return sum(stirling2(k, b) * binomial(b, r) for b in range(r, k + 1)) * inv
    if fam is Family.BRAUER:
        return binomial(k, r) * perfect_matchings(k - r) * inv
    if fam is Family.ROOK:
        return binomial(k, r) * inv
    if fam is Family.ROOK_BRAUER:
        return binomial(k, r) * partial_matchings(k - r) * inv
    if fam is Family.SYMMETRIC_GROUP:
        return inv if r == k else 0
    raise DiagramError(f"unsupported family {fam}")  # pragma: no cover


def predicted_total(fam: Family, k: int) -> int:
    return sum(predicted_symmetric_count(fam, k, r, f) for r in range(k + 1) for f in range(r + 1))


# -- labels ------------------------------------------------------------------------

Label = Union[IntegerPartition, int]


@dataclass(frozen=True)
class LabelSet:
    family: Family
    k: int
    labels: tuple[Label, ...]
    by_odd: dict[int, tuple[Label, ...]] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.labels)


def labels(fam: Family, k: int) -> LabelSet:
    """Index set of the irreducible modules of ``fam`` on ``k`` columns."""
    if fam is Family.PLANAR_PARTITION:
        raise NotImplementedError("labels are not provided for planar partition algebras")
    if fam is Family.TEMPERLEY_LIEB:
        return LabelSet(fam, k, tuple(range(k, -1, -2)))
    if fam in (Family.MOTZKIN, Family.PLANAR_ROOK):
        return LabelSet(fam, k, tuple(range(k, -1, -1)))
    if fam is Family.SYMMETRIC_GROUP:
        sizes = [k]
    elif fam is Family.BRAUER:
        sizes = list(range(k, -1, -2))
    else:
        sizes = list(range(k, -1, -1))
    labs = tuple(lam for n in sizes for lam in partitions(n))
    by_odd: dict[int, list[Label]] = {}
    for lam in labs:
        by_odd.setdefault(lam.odd, []).append(lam)
    return LabelSet(fam, k, labs, {f: tuple(v) for f, v in sorted(by_odd.items())})


def partitions_with_odd(r: int, f: int) -> int:
    return sum(1 for lam in partitions(r) if lam.odd == f)


def syt_count(lam: IntegerPartition) -> int:
    """Standard Young tableaux of shape ``lam`` (hook length formula)."""
    parts = lam.parts
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    hooks = 1
    for i, p in enumerate(parts):
        for j in range(p):
            hooks *= (p - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(lam.n) // hooks


def irreducible_dimension(fam: Family, k: int, lam: Label) -> int:
    """Dimension of the irreducible module labelled ``lam``."""
    if isinstance(lam, int):
        return predicted_symmetric_count(fam, k, lam, lam)
    r = lam.n
    g = syt_count(lam)
    if fam is Family.PARTITION:
        return g * sum(stirling2(k, b) * binomial(b, r) for b in range(r, k + 1))
    if fam is Family.BRAUER:
        return g * binomial(k, r) * perfect_matchings(k - r)
    if fam is Family.ROOK:
        return g * binomial(k, r)
    if fam is Family.ROOK_BRAUER:
        return g * binomial(k, r) * partial_matchings(k - r)
    if fam is Family.SYMMETRIC_GROUP:
        return g
    raise DiagramError(f"unsupported family {fam}")


# -- Temperley-Lieb bijection ---------------------------------------------------------


def tl_subset(d: Diagram) -> frozenset[int]:
    """Left endpoints of top-row cups plus the rightmost fixed points needed to reach ``k // 2``."""
    k = d.k
    if not (is_symmetric(d) and in_family(d, Family.TEMPERLEY_LIEB)):
        raise DiagramError("tl_subset needs a symmetric Temperley-Lieb diagram")
    cups = [b[0] for b in d.blocks if b[1] <= k]
    fixed = sorted(b[0] for b in d.blocks if b[0] <= k < b[1])
    extra = k // 2 - len(cups)
    return frozenset(cups + (fixed[len(fixed) - extra :] if extra else []))


def tl_diagram(subset: frozenset[int] | set[int], k: int) -> Diagram:
    """Inverse of :func:`tl_subset`."""
    L = set(subset)
    if len(L) != k // 2 or not L <= set(range(1, k + 1)):
        raise DiagramError(f"need a {k // 2}-subset of 1..{k}, got {sorted(L)}")
    used: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    for i in sorted(L, reverse=True):
        j = next((j for j in range(i + 1, k + 1) if j not in L and j not in used), None)
        if j is None:
            blocks.append((i, i + k))
            used.add(i)
        else:
            blocks.append((i, j))
            blocks.append((i + k, j + k))
            used.update((i, j))
    for j in range(1, k + 1):
        if j not in L and j not in used:
            blocks.append((j, j + k))
    return Diagram(k, tuple(sorted(blocks)))


# -- sequence identities ------------------------------------------------------------------


def binomial_transform(seq: tuple[int, ...] | list[int]) -> list[int]:
    return [sum(binomial(n, i) * seq[i] for i in range(n + 1)) for n in range(len(seq))]


@dataclass
class SequenceReport:
    checks: list[tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.checks)

    def failures(self) -> list[str]:
        return [name for name, v in self.checks if not v]


def sequence_checks(max_k: int, enumerate_up_to: dict[str, int] | None = None) -> SequenceReport:
    """Binomial-transform identities and closed forms against the embedded tables.

    ``enumerate_up_to`` maps a table name to the largest ``k`` for which the
    table is also compared with brute-force enumeration.
    """
    from .model import symmetric_diagrams

    if max_k > 10:
        raise ValueError("tables only cover k <= 10")
    T = SEQUENCE_TABLES
    n = max_k + 1
    checks: list[tuple[str, bool]] = []
    for target, source in (("r", "s"), ("rb", "b"), ("m", "tl")):
        checks.append(
            (f"{target} = binomial transform of {source}", binomial_transform(T[source][:n]) == list(T[target][:n]))
        )
    checks.append(("tl_k = C(k, k//2)", [binomial(k, k // 2) for k in range(n)] == list(T["tl"][:n])))
    checks.append(("pr_k = 2^k", [2**k for k in range(n)] == list(T["pr"][:n])))
    for name, fam in TABLE_FAMILY.items():
        checks.append((f"{name} closed form", [predicted_total(fam, k) for k in range(n)] == list(T[name][:n])))
    for name, top in (enumerate_up_to or {}).items():
        fam = TABLE_FAMILY[name]
        got = [len(symmetric_diagrams(fam, k)) for k in range(min(top, max_k) + 1)]
        checks.append((f"{name} enumerated", got == list(T[name][: len(got)])))
    return SequenceReport(checks)
