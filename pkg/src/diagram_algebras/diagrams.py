"""Set-partition diagrams on two rows of ``k`` vertices.

Vertices are encoded as integers: top vertex ``i`` is ``i`` and bottom vertex
``i'`` is ``k + i``.  A :class:`Diagram` stores its blocks in canonical form
(each block sorted, blocks sorted by least vertex), so structural equality is
diagram equality.

The text form writes bottom vertices as negative integers, e.g. the
transposition in ``P_2`` is ``"1 -2 | 2 -1"``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence


class DiagramError(ValueError):
    """Raised for malformed diagrams or incompatible operands."""


class Family(enum.Enum):
    PARTITION = "partition"
    PLANAR_PARTITION = "planar-partition"
    SYMMETRIC_GROUP = "symmetric"
    BRAUER = "brauer"
    ROOK = "rook"
    ROOK_BRAUER = "rook-brauer"
    TEMPERLEY_LIEB = "tl"
    MOTZKIN = "motzkin"
    PLANAR_ROOK = "planar-rook"

    @classmethod
    def parse(cls, name: str) -> Family:
        key = name.strip().lower().replace("_", "-")
        for fam in cls:
            if key in (fam.value, fam.name.lower().replace("_", "-")) or key in _ALIASES.get(fam, ()):
                return fam
        raise DiagramError(f"unknown family {name!r}")

    @property
    def planar(self) -> bool:
        return self in _PLANAR

    @property
    def x_fixed_to_one(self) -> bool:
        """Rook monoid algebras specialise the parameter to x = 1."""
        return self in (Family.ROOK, Family.PLANAR_ROOK)

    @property
    def essential_type(self) -> str:
        """'a' (singletons in the last column) or 'b' (cup/cap on the last two)."""
        if self in (Family.BRAUER, Family.TEMPERLEY_LIEB):
            return "b"
        if self is Family.SYMMETRIC_GROUP:
            raise DiagramError("the symmetric group has no essential idempotent")
        return "a"

    @property
    def shift(self) -> int:
        """How far down the tower the derived algebra ``A_k'`` sits."""
        return 2 if self.essential_type == "b" else 1


_PLANAR = frozenset(
    {Family.PLANAR_PARTITION, Family.TEMPERLEY_LIEB, Family.MOTZKIN, Family.PLANAR_ROOK}
)

_ALIASES = {
    Family.PARTITION: ("p",),
    Family.PLANAR_PARTITION: ("pp", "planar"),
    Family.SYMMETRIC_GROUP: ("s", "sym", "symmetric-group", "sn"),
    Family.BRAUER: ("b",),
    Family.ROOK: ("r", "rook-monoid"),
    Family.ROOK_BRAUER: ("rb",),
    Family.TEMPERLEY_LIEB: ("temperley-lieb",),
    Family.MOTZKIN: ("m",),
    Family.PLANAR_ROOK: ("pr", "planar-rook-monoid"),
}


@dataclass(frozen=True)
class Diagram:
    k: int
    blocks: tuple[tuple[int, ...], ...]

    # -- construction -----------------------------------------------------

    @classmethod
    def from_blocks(cls, k: int, raw_blocks: Iterable[Iterable[int]]) -> Diagram:
        return canonicalize(k, raw_blocks)

    @classmethod
    def from_signed(cls, k: int, raw_blocks: Iterable[Iterable[int]]) -> Diagram:
        """Build from blocks written with negative integers for bottom vertices."""
        enc = []
        for block in raw_blocks:
            row = []
            for v in block:
                if v == 0 or abs(v) > k:
                    raise DiagramError(f"vertex {v} out of range for k={k}")
                row.append(v if v > 0 else k - v)
            enc.append(row)
        return canonicalize(k, enc)

    @classmethod
    def parse(cls, text: str, k: int | None = None) -> Diagram:
        return parse_diagram(text, k)

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.k, self.blocks))

    # -- cached structure -------------------------------------------------

    @cached_property
    def labels(self) -> tuple[int, ...]:
        """``labels[v]`` is the index of the block containing vertex ``v`` (index 0 unused)."""
        lab = [0] * (2 * self.k + 1)
        for b, block in enumerate(self.blocks):
            for v in block:
                lab[v] = b
        return tuple(lab)

    @cached_property
    def rank(self) -> int:
        k = self.k
        return sum(1 for b in self.blocks if b[0] <= k < b[-1])

    def is_propagating(self, block: Sequence[int]) -> bool:
        return block[0] <= self.k < block[-1]

    @cached_property
    def top_partition(self) -> tuple[tuple[int, ...], ...]:
        """The restriction to the top row (tau)."""
        k = self.k
        return tuple(t for t in (tuple(v for v in b if v <= k) for b in self.blocks) if t)

    @cached_property
    def bottom_partition(self) -> tuple[tuple[int, ...], ...]:
        """The restriction to the bottom row (beta), written with column numbers."""
        k = self.k
        parts = [tuple(v - k for v in b if v > k) for b in self.blocks]
        return tuple(sorted(p for p in parts if p))

    # -- rendering --------------------------------------------------------

    def signed_blocks(self) -> list[list[int]]:
        k = self.k
        return [[v if v <= k else k - v for v in b] for b in self.blocks]

    def __str__(self) -> str:
        return format_diagram(self)

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": self.signed_blocks()}

    @classmethod
    def from_json(cls, obj: dict) -> Diagram:
        return cls.from_signed(int(obj["k"]), obj["blocks"])


def canonicalize(k: int, raw_blocks: Iterable[Iterable[int]]) -> Diagram:
    """Validate ``raw_blocks`` as a set partition of ``1..2k`` and return the canonical diagram."""
    if k < 0:
        raise DiagramError(f"k must be nonnegative, got {k}")
    n = 2 * k
    seen = [False] * (n + 1)
    blocks = []
    for raw in raw_blocks:
        block = sorted(raw)
        if not block:
            raise DiagramError("empty block")
        for v in block:
            if not isinstance(v, int) or v < 1 or v > n:
                raise DiagramError(f"vertex {v} out of range 1..{n}")
            if seen[v]:
                raise DiagramError(f"vertex {v} in two blocks")
            seen[v] = True
        blocks.append(tuple(block))
    for v in range(1, n + 1):
        if not seen[v]:
            raise DiagramError(f"vertex {v} is missing")
    blocks.sort()
    return Diagram(k, tuple(blocks))


def _fast(k: int, blocks: list[tuple[int, ...]]) -> Diagram:
    # Internal constructor for blocks already sorted and known to partition 1..2k.
    blocks.sort()
    return Diagram(k, tuple(blocks))


@lru_cache(maxsize=None)
def identity(k: int) -> Diagram:
    return Diagram(k, tuple((i, k + i) for i in range(1, k + 1)))


def compose(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    """Stack ``d1`` above ``d2``; return ``(d1 o d2, kappa)``.

    ``kappa`` counts the connected components that lie entirely in the
    identified middle row and are discarded.
    """
    k = d1.k
    if d2.k != k:
        raise DiagramError(f"cannot compose diagrams with k={d1.k} and k={d2.k}")
    # Nodes: 1..k top of d1, k+1..2k middle, 2k+1..3k bottom of d2.
    parent = list(range(3 * k + 1))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for block in d1.blocks:
        r = find(block[0])
        for v in block[1:]:
            s = find(v)
            if s != r:
                parent[s] = r
    for block in d2.blocks:
        r = find(block[0] + k)
        for v in block[1:]:
            s = find(v + k)
            if s != r:
                parent[s] = r

    groups: dict[int, list[int]] = {}
    for v in range(1, k + 1):
        groups.setdefault(find(v), []).append(v)
    for v in range(2 * k + 1, 3 * k + 1):
        groups.setdefault(find(v), []).append(v - k)
    outer = set(groups)
    middle_roots = {find(v) for v in range(k + 1, 2 * k + 1)}
    kappa = len(middle_roots - outer)
    return _fast(k, [tuple(g) for g in groups.values()]), kappa


def transpose(d: Diagram) -> Diagram:
    """Reflect across the horizontal axis (swap ``i`` and ``i'``)."""
    k = d.k
    flip = [tuple(sorted(v + k if v <= k else v - k for v in b)) for b in d.blocks]
    return _fast(k, flip)


def rank(d: Diagram) -> int:
    return d.rank


def is_symmetric(d: Diagram) -> bool:
    return transpose(d) == d


def _is_fixed(k: int, block: Sequence[int]) -> bool:
    tops = [v for v in block if v <= k]
    bottoms = [v - k for v in block if v > k]
    return bool(tops) and tops == bottoms


def fixed_blocks(d: Diagram) -> list[tuple[int, ...]]:
    """Blocks equal to their own reflection, ordered by least top vertex."""
    k = d.k
    # canonical block order already sorts by least vertex, which is a top vertex here
    return [b for b in d.blocks if _is_fixed(k, b)]


def is_noncrossing(d: Diagram) -> bool:
    """Planarity: no two blocks cross in the boundary order 1..k, k'..1'."""
    k = d.k
    lab = d.labels
    order = list(range(1, k + 1)) + list(range(2 * k, k, -1))
    remaining = [len(b) for b in d.blocks]
    opened = [False] * len(d.blocks)
    stack: list[int] = []
    for v in order:
        b = lab[v]
        if not opened[b]:
            opened[b] = True
            stack.append(b)
        elif stack[-1] != b:
            return False
        remaining[b] -= 1
        if remaining[b] == 0:
            if stack[-1] != b:
                return False
            stack.pop()
    return True


def in_family(d: Diagram, fam: Family) -> bool:
    k = d.k
    if fam is Family.PARTITION:
        return True
    if fam is Family.PLANAR_PARTITION:
        return is_noncrossing(d)
    if fam is Family.SYMMETRIC_GROUP:
        return d.rank == k
    sizes_ok = True
    if fam in (Family.BRAUER, Family.TEMPERLEY_LIEB):
        sizes_ok = all(len(b) == 2 for b in d.blocks)
    elif fam in (Family.ROOK_BRAUER, Family.MOTZKIN):
        sizes_ok = all(len(b) <= 2 for b in d.blocks)
    elif fam in (Family.ROOK, Family.PLANAR_ROOK):
        sizes_ok = all(sum(1 for v in b if v <= k) <= 1 and sum(1 for v in b if v > k) <= 1 for b in d.blocks)
    if not sizes_ok:
        return False
    if fam.planar:
        return is_noncrossing(d)
    return True


# -- enumeration ----------------------------------------------------------


def _set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    # Restricted growth strings.
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, m: int) -> Iterator[list[list[int]]]:
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(m)]
            for idx, b in enumerate(rgs):
                blocks[b].append(items[idx])
            yield blocks
            return
        for b in range(m + 1):
            rgs[i] = b
            yield from rec(i + 1, max(m, b + 1))

    rgs[0] = 0
    yield from rec(1, 1)


def _partial_matchings(items: Sequence[int], perfect: bool) -> Iterator[list[tuple[int, ...]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    if not perfect:
        for tail in _partial_matchings(rest, perfect):
            yield [(first,)] + tail
    for j in range(len(rest)):
        other = rest[:j] + rest[j + 1 :]
        for tail in _partial_matchings(other, perfect):
            yield [(first, rest[j])] + tail


def _boundary(k: int) -> list[int]:
    return list(range(1, k + 1)) + list(range(2 * k, k, -1))


def _noncrossing_matchings(points: Sequence[int], perfect: bool) -> Iterator[list[tuple[int, ...]]]:
    # points are in boundary (cyclic) order; arcs must nest.
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    if not perfect:
        for tail in _noncrossing_matchings(rest, perfect):
            yield [(first,)] + tail
    for j in range(0, len(rest), 1):
        inside, outside = rest[:j], rest[j + 1 :]
        if perfect and len(inside) % 2:
            continue
        for a in _noncrossing_matchings(inside, perfect):
            for b in _noncrossing_matchings(outside, perfect):
                yield [tuple(sorted((first, rest[j])))] + a + b


def _generate(fam: Family, k: int) -> Iterator[Diagram]:
    verts = list(range(1, 2 * k + 1))
    if fam in (Family.PARTITION, Family.PLANAR_PARTITION):
        for blocks in _set_partitions(verts):
            d = _fast(k, [tuple(b) for b in blocks])
            if fam is Family.PARTITION or is_noncrossing(d):
                yield d
    elif fam is Family.SYMMETRIC_GROUP:
        for perm in itertools.permutations(range(1, k + 1)):
            yield _fast(k, [(i + 1, k + w) for i, w in enumerate(perm)])
    elif fam in (Family.BRAUER, Family.ROOK_BRAUER):
        for m in _partial_matchings(verts, perfect=fam is Family.BRAUER):
            yield _fast(k, m)
    elif fam in (Family.TEMPERLEY_LIEB, Family.MOTZKIN):
        for m in _noncrossing_matchings(_boundary(k), perfect=fam is Family.TEMPERLEY_LIEB):
            yield _fast(k, m)
    elif fam in (Family.ROOK, Family.PLANAR_ROOK):
        for size in range(k + 1):
            for tops in itertools.combinations(range(1, k + 1), size):
                for bots in itertools.combinations(range(1, k + 1), size):
                    images = [bots] if fam is Family.PLANAR_ROOK else itertools.permutations(bots)
                    for img in images:
                        blocks = [(t, k + b) for t, b in zip(tops, img)]
                        blocks += [(v,) for v in range(1, k + 1) if v not in tops]
                        blocks += [(k + v,) for v in range(1, k + 1) if v not in bots]
                        yield _fast(k, blocks)
    else:  # pragma: no cover
        raise DiagramError(f"unsupported family {fam}")


@lru_cache(maxsize=64)
def _enumerate_cached(fam: Family, k: int) -> tuple[Diagram, ...]:
    return tuple(sorted(_generate(fam, k), key=lambda d: d.blocks))


def enumerate_family(fam: Family, k: int) -> list[Diagram]:
    """All diagrams of ``fam`` on ``k`` columns, sorted by canonical encoding.

    Cost grows exponentially; intended for small ``k``.
    """
    if k < 0:
        raise DiagramError(f"k must be nonnegative, got {k}")
    return list(_enumerate_cached(fam, k))


def essential_idempotent(fam: Family, k: int) -> Diagram:
    """The diagram ``e_k`` with ``e_k o e_k = e_k`` and one discarded component."""
    if k < 1:
        raise DiagramError("e_k needs k >= 1")
    if fam.essential_type == "a":
        blocks = [(i, k + i) for i in range(1, k)] + [(k,), (2 * k,)]
    else:
        if k < 2:
            raise DiagramError(f"e_k for {fam.value} needs k >= 2")
        blocks = [(i, k + i) for i in range(1, k - 1)] + [(k - 1, k), (2 * k - 1, 2 * k)]
    return _fast(k, blocks)


e_k = essential_idempotent


def embed(d: Diagram, extra: int) -> Diagram:
    """Append ``extra`` identity strands on the right."""
    k, n = d.k, d.k + extra
    blocks = [tuple(v if v <= k else v + extra for v in b) for b in d.blocks]
    blocks += [(i, n + i) for i in range(k + 1, n + 1)]
    return canonicalize(n, blocks)


def restrict(d: Diagram, m: int) -> Diagram:
    """Keep columns ``1..m``; the dropped columns must form blocks of their own."""
    k = d.k
    blocks = []
    for b in d.blocks:
        kept = [v for v in b if v <= m or k < v <= k + m]
        if kept and len(kept) != len(b):
            raise DiagramError(f"block {b} straddles column {m}")
        if kept:
            blocks.append(tuple(v if v <= k else v - k + m for v in kept))
    return canonicalize(m, blocks)


# -- text format ----------------------------------------------------------


def format_diagram(d: Diagram) -> str:
    return " | ".join(" ".join(str(v) for v in b) for b in d.signed_blocks())


def parse_diagram(text: str, k: int | None = None) -> Diagram:
    """Parse the ``"1 -2 | 2 -1"`` form.  ``k`` defaults to the largest column mentioned."""
    blocks: list[list[int]] = []
    pos = 0
    chunks = text.split("|") if text.strip() else []
    for chunk in chunks:
        block = []
        for tok in chunk.split():
            try:
                block.append(int(tok))
            except ValueError:
                raise DiagramError(f"bad token {tok!r} at offset {text.find(tok, pos)}") from None
        if not block:
            raise DiagramError(f"empty block at offset {pos}")
        blocks.append(block)
        pos += len(chunk) + 1
    if k is None:
        k = max((abs(v) for b in blocks for v in b), default=0)
    seen: set[int] = set()
    for b in blocks:
        for v in b:
            if v in seen:
                raise DiagramError(f"duplicate vertex {v}")
            seen.add(v)
    return Diagram.from_signed(k, blocks)
