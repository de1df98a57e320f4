"""Independent reference implementations and strategies shared by the tests."""

from __future__ import annotations

from collections import defaultdict

from hypothesis import strategies as st

from diagram_algebras.diagrams import Diagram, Family, canonicalize

ACCEPTANCE_LINES: list[str] = []


def oracle_compose(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    """Stack two diagrams as an explicit graph and read off components by DFS."""
    k = d1.k
    adj: dict[tuple[str, int], set] = defaultdict(set)

    def link(block, rows):
        nodes = [(rows[0], v) if v <= k else (rows[1], v - k) for v in block]
        for a in nodes:
            adj[a]
            for b in nodes:
                if a != b:
                    adj[a].add(b)

    for b in d1.blocks:
        link(b, ("top", "mid"))
    for b in d2.blocks:
        link(b, ("mid", "bot"))
    seen: set = set()
    blocks, kappa = [], 0
    for start in list(adj):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            n = stack.pop()
            comp.append(n)
            for m in adj[n]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        outer = [i if row == "top" else i + k for row, i in comp if row != "mid"]
        if outer:
            blocks.append(outer)
        else:
            kappa += 1
    return canonicalize(k, blocks), kappa


@st.composite
def diagrams(draw, min_k: int = 0, max_k: int = 4):
    k = draw(st.integers(min_k, max_k))
    labels = draw(st.lists(st.integers(0, 2 * k), min_size=2 * k, max_size=2 * k))
    groups: dict[int, list[int]] = defaultdict(list)
    for v, lab in enumerate(labels, 1):
        groups[lab].append(v)
    return canonicalize(k, groups.values())


@st.composite
def diagram_pairs(draw, max_k: int = 4, count: int = 2):
    k = draw(st.integers(0, max_k))
    return tuple(draw(diagrams(min_k=k, max_k=k)) for _ in range(count))


FAMILIES_WITH_MODEL = [f for f in Family if f is not Family.PLANAR_PARTITION]
