"""Exhaustive ground truth for the enumerators.

Nothing here touches augmenting paths, minors or parent functions: the
families are listed by depth-first search over the (downward closed)
feasible sets and filtered afterwards.
"""

from __future__ import annotations

import hashlib
import json
from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field

from .matroids import ContractError, Matroid

MAX_GROUND = 20
MAX_EDGES = 20
MAX_VERTICES = 16

MODES = ("all", "maximal", "maximum")


def _hereditary_family(items: Sequence[int], feasible: Callable[[frozenset[int]], bool]) -> list[frozenset[int]]:
    """Every feasible subset of ``items``, assuming feasibility is closed under subsets."""
    out: list[frozenset[int]] = []

    def dfs(start: int, current: frozenset[int]):
        out.append(current)
        for k in range(start, len(items)):
            grown = current | {items[k]}
            if feasible(grown):
                dfs(k + 1, grown)

    if feasible(frozenset()):
        dfs(0, frozenset())
    return out


def _select(family: list[frozenset[int]], items: Sequence[int], mode: str, tau: int) -> list[tuple[int, ...]]:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    members = set(family)
    if mode == "maximal":
        family = [s for s in family if not any(s | {e} in members for e in items if e not in s)]
    elif mode == "maximum":
        top = max((len(s) for s in family), default=0)
        family = [s for s in family if len(s) == top]
    return sorted(tuple(sorted(s)) for s in family if len(s) >= tau)


def brute_common_independent(m1: Matroid, m2: Matroid, mode: str = "maximal", tau: int = 0) -> list[tuple[int, ...]]:
    if m1.n > MAX_GROUND:
        raise ContractError(f"ground set of size {m1.n} exceeds the brute-force guard {MAX_GROUND}")
    if m1.ground != m2.ground:
        raise ContractError("the two matroids must share a ground set")
    family = _hereditary_family(m1.ground, lambda s: m1.is_independent(s) and m2.is_independent(s))
    return _select(family, m1.ground, mode, tau)


def brute_matchings(p, mode: str = "maximal", tau: int = 0) -> list[tuple[int, ...]]:
    """Matchings of a matroid-graph pair ``p`` (anything with ``matroid`` and ``edges``)."""
    edges = p.edges
    if len(edges) > MAX_EDGES:
        raise ContractError(f"{len(edges)} edges exceed the brute-force guard {MAX_EDGES}")

    def feasible(s: frozenset[int]) -> bool:
        ends = [x for k in s for x in edges[k]]
        return len(ends) == len(set(ends)) and p.matroid.is_independent(ends)

    items = list(range(len(edges)))
    return _select(_hereditary_family(items, feasible), items, mode, tau)


def _connected(vertices: frozenset[int], adj: dict[int, set[int]]) -> bool:
    if not vertices:
        return True
    start = min(vertices)
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in adj[u]:
            if w in vertices and w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(vertices)


def is_connected_vertex_cover(n: int, edges: Iterable[tuple[int, int]], cover: Iterable[int]) -> bool:
    cover = frozenset(cover)
    edges = list(edges)
    if any(u not in cover and v not in cover for u, v in edges):
        return False
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return _connected(cover, adj)


def brute_min_cvc(n: int, edges: Sequence[tuple[int, int]], tau: int) -> list[tuple[int, ...]]:
    """Inclusion-minimal connected vertex covers with at most ``tau`` vertices."""
    if n > MAX_VERTICES:
        raise ContractError(f"{n} vertices exceed the brute-force guard {MAX_VERTICES}")
    covers = [
        mask
        for mask in range(1 << n)
        if is_connected_vertex_cover(n, edges, (v for v in range(n) if mask >> v & 1))
    ]
    covers.sort(key=lambda mask: bin(mask).count("1"))
    minimal: list[int] = []
    for mask in covers:
        # any cover contains a minimal one, and smaller ones come first
        if not any(m & mask == m for m in minimal):
            minimal.append(mask)
    out = [tuple(v for v in range(n) if mask >> v & 1) for mask in minimal]
    return sorted(c for c in out if len(c) <= tau)


@dataclass
class BruteForceReport:
    digest: str
    solutions: list[tuple[int, ...]]
    counts: dict[int, int] = field(default_factory=dict)
    missing: list[tuple[int, ...]] = field(default_factory=list)
    unexpected: list[tuple[int, ...]] = field(default_factory=list)
    duplicates: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "MATCH" if not (self.missing or self.unexpected or self.duplicates) else "MISMATCH"


def instance_digest(instance: dict) -> str:
    return hashlib.sha256(json.dumps(instance, sort_keys=True).encode()).hexdigest()[:16]


def compare(expected: Iterable[Sequence[int]], streamed: Iterable[Sequence[int]], digest: str = "") -> BruteForceReport:
    expected = sorted(tuple(sorted(s)) for s in expected)
    got = [tuple(sorted(s)) for s in streamed]
    seen = Counter(got)
    report = BruteForceReport(digest, expected, dict(sorted(Counter(len(s) for s in expected).items())))
    want = set(expected)
    report.missing = sorted(want - seen.keys())
    report.unexpected = sorted(seen.keys() - want)
    report.duplicates = sorted(s for s, c in seen.items() if c > 1)
    return report
