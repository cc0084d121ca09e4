"""Exchange digraphs and augmenting paths for two matroids.

For a common independent set I of ``m1`` and ``m2`` the exchange digraph
D(I) has the ground elements plus a source ``s`` and a sink ``t``:

* ``(e, f)`` for e in I, f outside I, when I + f is dependent in m1 but
  I + f - e is independent in m1;
* ``(f, e)`` likewise with m2;
* ``(s, f)`` when I + f is independent in m1, ``(f, t)`` when in m2.

I is maximum iff t is unreachable from s. A shortest s-t path never has
shortcuts, and flipping its inner vertices grows I by one element.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from .matroids import ContractError, Matroid

SOURCE = "s"
SINK = "t"


def _vertex_key(v):
    # s first, then element ids, then t
    if v == SOURCE:
        return (0, 0)
    if v == SINK:
        return (2, 0)
    return (1, v)


@dataclass(frozen=True)
class ExchangeDigraph:
    ground: tuple[int, ...]
    independent: frozenset[int]
    a1: frozenset[tuple[int, int]]
    a2: frozenset[tuple[int, int]]
    a3: frozenset[tuple[str, int]]
    a4: frozenset[tuple[int, str]]

    @property
    def arcs(self) -> frozenset:
        return self.a1 | self.a2 | self.a3 | self.a4

    @cached_property
    def _succ(self) -> dict:
        succ: dict = {v: [] for v in (SOURCE, SINK, *self.ground)}
        for u, v in self.arcs:
            succ[u].append(v)
        for targets in succ.values():
            targets.sort(key=_vertex_key)
        return succ

    def successors(self, v) -> list:
        return self._succ[v]

    def out_neighbors(self, v) -> frozenset:
        return frozenset(self._succ[v])

    def in_neighbors(self, v) -> frozenset:
        return frozenset(u for u, w in self.arcs if w == v)

    def to_dot(self, labels: dict[int, str] | None = None) -> str:
        """Graphviz rendering; arcs carry their class A1..A4 as label."""
        name = (lambda v: v if isinstance(v, str) else (labels or {}).get(v, str(v)))
        lines = ["digraph exchange {", "  rankdir=LR;"]
        for v in self.ground:
            shape = "box" if v in self.independent else "ellipse"
            lines.append(f'  "{name(v)}" [shape={shape}];')
        classes = [("A1", self.a1), ("A2", self.a2), ("A3", self.a3), ("A4", self.a4)]
        for label, arcs in classes:
            for u, v in sorted(arcs, key=lambda a: (_vertex_key(a[0]), _vertex_key(a[1]))):
                lines.append(f'  "{name(u)}" -> "{name(v)}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AugmentingPath:
    """An s-t path; ``inner`` holds the ground elements in path order."""

    inner: tuple[int, ...]

    @property
    def vertices(self) -> tuple:
        return (SOURCE, *self.inner, SINK)

    def __len__(self):
        return len(self.inner) + 2


def _same_ground(m1: Matroid, m2: Matroid) -> tuple[int, ...]:
    if m1.ground != m2.ground:
        raise ContractError("the two matroids must share a ground set")
    return m1.ground


def is_common_independent(m1: Matroid, m2: Matroid, x: Iterable[int]) -> bool:
    x = frozenset(x)
    return m1.is_independent(x) and m2.is_independent(x)


def is_maximal(m1: Matroid, m2: Matroid, x: Iterable[int]) -> bool:
    """Whether common independent ``x`` admits no single-element extension."""
    x = frozenset(x)
    for e in m1.ground:
        if e not in x and is_common_independent(m1, m2, x | {e}):
            return False
    return True


def build_exchange_digraph(m1: Matroid, m2: Matroid, i: Iterable[int]) -> ExchangeDigraph:
    ground = _same_ground(m1, m2)
    i = frozenset(i)
    if i and not is_common_independent(m1, m2, i):
        raise ContractError(f"{sorted(i)} is not a common independent set")
    a1, a2, a3, a4 = set(), set(), set(), set()
    inside = sorted(i)
    for f in ground:
        if f in i:
            continue
        grown = i | {f}
        if m1.is_independent(grown):
            a3.add((SOURCE, f))
        else:
            a1.update((e, f) for e in inside if m1.is_independent(grown - {e}))
        if m2.is_independent(grown):
            a4.add((f, SINK))
        else:
            a2.update((f, e) for e in inside if m2.is_independent(grown - {e}))
    return ExchangeDigraph(ground, i, frozenset(a1), frozenset(a2), frozenset(a3), frozenset(a4))


def shortest_augmenting_path(d: ExchangeDigraph) -> AugmentingPath | None:
    """Layered BFS from s; each vertex keeps its smallest-id predecessor in
    the previous layer. Returns None when t is unreachable."""
    pred: dict = {SOURCE: None}
    layer = [SOURCE]
    while layer and SINK not in pred:
        found: dict = {}
        for u in layer:  # layer is sorted, so the first writer is the smallest id
            for v in d.successors(u):
                if v not in pred and v not in found:
                    found[v] = u
        pred.update(found)
        layer = sorted((v for v in found if v != SINK), key=_vertex_key)
    if SINK not in pred:
        return None
    inner = []
    v = pred[SINK]
    while v != SOURCE:
        inner.append(v)
        v = pred[v]
    return AugmentingPath(tuple(reversed(inner)))


def augment(i: Iterable[int], p: AugmentingPath) -> frozenset[int]:
    return frozenset(i) ^ frozenset(p.inner)


def maximum_common_independent_set(m1: Matroid, m2: Matroid) -> frozenset[int]:
    """Lawler's augmentation from the empty set."""
    _same_ground(m1, m2)
    i: frozenset[int] = frozenset()
    while True:
        p = shortest_augmenting_path(build_exchange_digraph(m1, m2, i))
        if p is None:
            return i
        i = augment(i, p)


def complete_to_maximal(m1: Matroid, m2: Matroid, x: Iterable[int]) -> frozenset[int]:
    """Grow common independent ``x`` greedily in increasing id order."""
    ground = _same_ground(m1, m2)
    out = set(x)
    if not is_common_independent(m1, m2, out):
        raise ContractError(f"{sorted(out)} is not a common independent set")
    for e in ground:
        if e not in out and is_common_independent(m1, m2, out | {e}):
            out.add(e)
    return frozenset(out)
