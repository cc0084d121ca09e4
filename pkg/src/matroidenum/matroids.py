"""Matroids as independence oracles.

Elements are integers. A root matroid (free, uniform, partition, graphic,
cographic, linear over GF(2), or given by its bases) lives on ``0..n-1``.
Minors keep the element ids of the matroid they were taken from, so an
element means the same thing before and after restriction or contraction.

Every root oracle counts its independence queries; wrappers (minors,
direct sums, relabelings) forward to the root, which is charged.
"""

from __future__ import annotations

import itertools
import threading
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np


class InputError(ValueError):
    """Malformed input: bad element ids, invalid instance data."""


class ContractError(ValueError):
    """An operation was called outside of its precondition."""


class Matroid:
    """Base class for independence oracles.

    Subclasses implement ``_independent(x)`` for a frozenset ``x`` that is
    already known to lie inside the ground set.
    """

    counts_queries = True

    def __init__(self, ground: Iterable[int]):
        self.ground: tuple[int, ...] = tuple(sorted(set(ground)))
        self._ground_set = frozenset(self.ground)
        self._lock = threading.Lock()
        self._queries = 0

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def queries(self) -> int:
        """Independence queries charged to the root oracles under this one."""
        return sum(m._queries for m in self.counters())

    def counters(self) -> list[Matroid]:
        """The distinct root oracles that get charged for queries on self."""
        return [self]

    def is_independent(self, x: Iterable[int]) -> bool:
        x = frozenset(x)
        if not x <= self._ground_set:
            bad = sorted(x - self._ground_set)
            raise InputError(f"elements {bad} are not in the ground set")
        if self.counts_queries:
            with self._lock:
                self._queries += 1
        return self._independent(x)

    def _independent(self, x: frozenset[int]) -> bool:
        raise NotImplementedError

    def _check_subset(self, x: Iterable[int]) -> frozenset[int]:
        x = frozenset(x)
        if not x <= self._ground_set:
            raise InputError(f"elements {sorted(x - self._ground_set)} are not in the ground set")
        return x

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n})"


class FreeMatroid(Matroid):
    def __init__(self, n: int):
        super().__init__(range(n))

    def _independent(self, x):
        return True


class UniformMatroid(Matroid):
    def __init__(self, n: int, r: int):
        if r < 0:
            raise InputError("uniform rank must be non-negative")
        super().__init__(range(n))
        self.r = r

    def _independent(self, x):
        return len(x) <= self.r

    def __repr__(self):
        return f"UniformMatroid(n={self.n}, r={self.r})"


class PartitionMatroid(Matroid):
    """At most ``capacities[k]`` elements from ``blocks[k]``.

    The blocks must partition ``0..n-1``.
    """

    def __init__(self, blocks: Sequence[Sequence[int]], capacities: Sequence[int]):
        if len(blocks) != len(capacities):
            raise InputError("need one capacity per block")
        if any(c < 0 for c in capacities):
            raise InputError("capacities must be non-negative")
        flat = [e for b in blocks for e in b]
        n = len(flat)
        if sorted(flat) != list(range(n)):
            raise InputError("blocks must partition 0..n-1")
        super().__init__(range(n))
        self.blocks = [tuple(b) for b in blocks]
        self.capacities = list(capacities)
        self._block_of = [0] * n
        for k, b in enumerate(blocks):
            for e in b:
                self._block_of[e] = k

    def _independent(self, x):
        used = [0] * len(self.blocks)
        for e in x:
            k = self._block_of[e]
            used[k] += 1
            if used[k] > self.capacities[k]:
                return False
        return True


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _check_graph(vertices: int, edges: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    out = []
    for ed in edges:
        if len(ed) != 2:
            raise InputError(f"edge {ed!r} must have two endpoints")
        u, v = int(ed[0]), int(ed[1])
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InputError(f"edge {ed!r} has an endpoint outside 0..{vertices - 1}")
        out.append((u, v))
    return out


class GraphicMatroid(Matroid):
    """Edge sets that form forests. Self-loops are circuits of size one."""

    def __init__(self, vertices: int, edges: Sequence[Sequence[int]]):
        self.edges = _check_graph(vertices, edges)
        self.vertices = vertices
        super().__init__(range(len(self.edges)))

    def _independent(self, x):
        parent = list(range(self.vertices))
        for e in x:
            u, v = self.edges[e]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


def count_components(vertices: int, edges: Iterable[tuple[int, int]]) -> int:
    parent = list(range(vertices))
    comps = vertices
    for u, v in edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


class CographicMatroid(Matroid):
    """Edge sets whose removal does not increase the number of components.

    For a connected graph this is "G - F stays connected". Parallel edges
    and self-loops are distinct elements; a self-loop is never a cut.
    """

    def __init__(self, vertices: int, edges: Sequence[Sequence[int]]):
        self.edges = _check_graph(vertices, edges)
        self.vertices = vertices
        super().__init__(range(len(self.edges)))
        self._components = count_components(vertices, self.edges)

    def _independent(self, x):
        kept = (self.edges[e] for e in range(len(self.edges)) if e not in x)
        return count_components(self.vertices, kept) == self._components


class LinearMatroidGF2(Matroid):
    """Column matroid of a 0/1 matrix over GF(2).

    ``rows`` are bitstrings of equal length; column j is element j.
    """

    def __init__(self, rows: Sequence[str]):
        rows = list(rows)
        width = len(rows[0]) if rows else 0
        if any(len(r) != width or set(r) - {"0", "1"} for r in rows):
            raise InputError("rows must be 0/1 strings of equal length")
        super().__init__(range(width))
        self.rows = rows
        # column j packed as an int: bit k = rows[k][j]
        self.columns = [
            sum(1 << k for k, r in enumerate(rows) if r[j] == "1") for j in range(width)
        ]

    def _independent(self, x):
        basis: dict[int, int] = {}  # leading bit -> vector
        for e in x:
            v = self.columns[e]
            while v:
                top = v.bit_length() - 1
                if top not in basis:
                    basis[top] = v
                    break
                v ^= basis[top]
            else:
                return False
        return True


class BasesMatroid(Matroid):
    """A matroid listed by its bases; independent means contained in a base."""

    def __init__(self, n: int, bases: Iterable[Iterable[int]]):
        super().__init__(range(n))
        self.bases = [frozenset(b) for b in bases]
        if not self.bases:
            raise InputError("a matroid has at least one base")
        for b in self.bases:
            if not b <= self._ground_set:
                raise InputError(f"base {sorted(b)} leaves the ground set")

    def _independent(self, x):
        return any(x <= b for b in self.bases)


class Minor(Matroid):
    """``(base | ground) / contracted`` answered through ``base``.

    ``fixed`` is a base of the contracted set, chosen once; a set Y of the
    minor is independent iff ``Y | fixed`` is independent in ``base``.
    """

    counts_queries = False

    def __init__(self, base: Matroid, ground: Iterable[int], fixed: frozenset[int] = frozenset()):
        super().__init__(ground)
        self.base = base
        self.fixed = frozenset(fixed)

    def counters(self):
        return self.base.counters()

    def _independent(self, x):
        return self.base.is_independent(x | self.fixed)

    def __repr__(self):
        return f"Minor(base={self.base!r}, ground={list(self.ground)}, fixed={sorted(self.fixed)})"


class DirectSum(Matroid):
    """Disjoint union of ``first`` (ids ``0..n1-1``) and ``second`` (ids shifted by n1)."""

    counts_queries = False

    def __init__(self, first: Matroid, second: Matroid):
        self.first, self.second = first, second
        self._map1 = dict(zip(range(first.n), first.ground))
        self._map2 = dict(zip(range(first.n, first.n + second.n), second.ground))
        super().__init__(range(first.n + second.n))

    def counters(self):
        out = self.first.counters()
        out += [c for c in self.second.counters() if all(c is not d for d in out)]
        return out

    def _independent(self, x):
        x1 = [self._map1[e] for e in x if e in self._map1]
        x2 = [self._map2[e] for e in x if e in self._map2]
        if x1 and not self.first.is_independent(x1):
            return False
        return not x2 or self.second.is_independent(x2)


class Relabeled(Matroid):
    """``base`` seen through an injective relabeling ``mapping[new] = old``."""

    counts_queries = False

    def __init__(self, base: Matroid, mapping: dict[int, int]):
        if len(set(mapping.values())) != len(mapping):
            raise InputError("relabeling must be injective")
        super().__init__(mapping)
        self.base = base
        self.mapping = dict(mapping)

    def counters(self):
        return self.base.counters()

    def _independent(self, x):
        return self.base.is_independent(self.mapping[e] for e in x)


def is_independent(m: Matroid, x: Iterable[int]) -> bool:
    return m.is_independent(x)


def greedy_base(m: Matroid, x: Iterable[int] | None = None) -> frozenset[int]:
    """A base of ``m | x``, grown greedily in increasing id order."""
    x = m.ground if x is None else sorted(m._check_subset(x))
    base: set[int] = set()
    for e in x:
        if m.is_independent(base | {e}):
            base.add(e)
    return frozenset(base)


def rank(m: Matroid, x: Iterable[int] | None = None) -> int:
    return len(greedy_base(m, x))


def fundamental_circuit(m: Matroid, i: Iterable[int], f: int) -> frozenset[int]:
    """The unique circuit inside ``i + f`` for independent ``i`` and dependent ``i + f``."""
    i = frozenset(i)
    if f in i:
        raise ContractError(f"element {f} is already in the independent set")
    if not m.is_independent(i):
        raise ContractError("fundamental_circuit needs an independent set")
    grown = i | {f}
    if m.is_independent(grown):
        raise ContractError(f"adding {f} keeps the set independent; there is no circuit")
    return frozenset([f] + [e for e in sorted(i) if m.is_independent(grown - {e})])


def _unwrap(m: Matroid) -> tuple[Matroid, frozenset[int]]:
    if isinstance(m, Minor):
        return m.base, m.fixed
    return m, frozenset()


def restrict(m: Matroid, x: Iterable[int]) -> Matroid:
    """``m | x``."""
    x = m._check_subset(x)
    base, fixed = _unwrap(m)
    return Minor(base, x, fixed)


def delete(m: Matroid, x: Iterable[int]) -> Matroid:
    """``m \\ x``."""
    x = m._check_subset(x)
    return restrict(m, m._ground_set - x)


def contract(m: Matroid, x: Iterable[int]) -> Matroid:
    """``m / x``; a greedy base of ``m | x`` is fixed at construction."""
    x = m._check_subset(x)
    b = greedy_base(m, x)
    base, fixed = _unwrap(m)
    return Minor(base, m._ground_set - x, fixed | b)


# -- axiom checking ---------------------------------------------------------


@dataclass
class AxiomReport:
    n: int
    independent_count: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _mask_to_set(ground: Sequence[int], mask: int) -> frozenset[int]:
    return frozenset(ground[k] for k in range(len(ground)) if mask >> k & 1)


def check_axioms(m: Matroid, limit: int = 12, max_reports: int = 20) -> AxiomReport:
    """Exhaustively check the matroid axioms and circuit elimination.

    Refuses ground sets larger than ``limit`` (2^n oracle calls).
    """
    n = m.n
    if n > limit:
        raise ContractError(f"ground set of size {n} exceeds the exhaustive limit {limit}")
    ground = m.ground
    size = 1 << n
    indep = np.zeros(size, dtype=bool)
    for mask in range(size):
        indep[mask] = m.is_independent(_mask_to_set(ground, mask))
    report = AxiomReport(n=n, independent_count=int(indep.sum()))

    def violate(msg):
        if len(report.violations) < max_reports:
            report.violations.append(msg)

    if not indep[0]:
        violate("empty set is dependent")
    masks = np.arange(size, dtype=np.int64)
    popcount = np.array([bin(k).count("1") for k in range(size)])
    for mask in np.flatnonzero(indep):
        for k in range(n):
            if mask >> k & 1 and not indep[mask ^ (1 << k)]:
                violate(
                    "hereditary: "
                    f"{sorted(_mask_to_set(ground, mask))} independent but "
                    f"{sorted(_mask_to_set(ground, mask ^ (1 << k)))} is not"
                )
    # exchange: for I, J independent with |I| < |J|, some e in J - I keeps I + e independent
    addable = np.zeros(size, dtype=np.int64)
    for mask in np.flatnonzero(indep):
        a = 0
        for k in range(n):
            bit = 1 << k
            if not mask & bit and indep[mask | bit]:
                a |= bit
        addable[mask] = a
    indep_masks = masks[indep]
    indep_pop = popcount[indep]
    for mask in indep_masks:
        bigger = indep_masks[indep_pop > popcount[mask]]
        bad = bigger[(bigger & ~mask & addable[mask]) == 0]
        for j in bad[:1]:
            violate(
                "exchange: "
                f"I={sorted(_mask_to_set(ground, int(mask)))}, J={sorted(_mask_to_set(ground, int(j)))}"
            )
    # circuit elimination
    dep = ~indep
    circuits = [
        int(mask)
        for mask in np.flatnonzero(dep)
        if all(indep[mask ^ (1 << k)] for k in range(n) if mask >> k & 1)
    ]
    for c1, c2 in itertools.combinations(circuits, 2):
        common = c1 & c2
        k = 0
        while common:
            if common & 1 and indep[(c1 | c2) & ~(1 << k)]:
                violate(
                    "circuit elimination: "
                    f"C1={sorted(_mask_to_set(ground, c1))}, C2={sorted(_mask_to_set(ground, c2))}, "
                    f"e={ground[k]}"
                )
            common >>= 1
            k += 1
    return report


# -- JSON schema --------------------------------------------------------------


def matroid_from_dict(raw: dict) -> Matroid:
    """Build a root matroid from its JSON description."""
    if not isinstance(raw, dict) or "type" not in raw:
        raise InputError("matroid description needs a 'type' field")
    kind = raw["type"]
    try:
        if kind == "free":
            return FreeMatroid(int(raw["n"]))
        if kind == "uniform":
            return UniformMatroid(int(raw["n"]), int(raw["r"]))
        if kind == "partition":
            return PartitionMatroid(raw["blocks"], raw["capacities"])
        if kind == "graphic":
            return GraphicMatroid(int(raw["vertices"]), raw["edges"])
        if kind == "cographic":
            return CographicMatroid(int(raw["vertices"]), raw["edges"])
        if kind == "linear_gf2":
            return LinearMatroidGF2(raw["rows"])
        if kind == "bases":
            return BasesMatroid(int(raw["n"]), raw["bases"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad {kind!r} matroid description: {exc!r}") from exc
    raise InputError(f"unknown matroid type {kind!r}")


def matroid_to_dict(m: Matroid) -> dict:
    if isinstance(m, FreeMatroid):
        return {"type": "free", "n": m.n}
    if isinstance(m, UniformMatroid):
        return {"type": "uniform", "n": m.n, "r": m.r}
    if isinstance(m, PartitionMatroid):
        return {"type": "partition", "blocks": [list(b) for b in m.blocks], "capacities": m.capacities}
    if isinstance(m, GraphicMatroid):
        return {"type": "graphic", "vertices": m.vertices, "edges": [list(e) for e in m.edges]}
    if isinstance(m, CographicMatroid):
        return {"type": "cographic", "vertices": m.vertices, "edges": [list(e) for e in m.edges]}
    if isinstance(m, LinearMatroidGF2):
        return {"type": "linear_gf2", "rows": list(m.rows)}
    if isinstance(m, BasesMatroid):
        return {"type": "bases", "n": m.n, "bases": [sorted(b) for b in m.bases]}
    raise InputError(f"{type(m).__name__} has no JSON form")
