"""Combinatorial families expressed through two matroids or a matroid matching.

* bipartite b-matchings: two partition matroids over the edges, one per side;
* colorful forests: graphic matroid and one-per-color partition matroid;
* degree-constrained subdigraphs: out-star and in-star partition matroids;
* minimal connected vertex covers of subcubic graphs, via maximal matchings
  of a cographic matroid paired with an auxiliary graph H.

For the last one, every vertex v of G is blown up into one copy per
incident edge, joined by two extra edges f(v,1), f(v,2) (a path for degree
three, a parallel pair for degree two, two self-loops for degree one), and
every edge of G is subdivided into e', e''. H pairs {f(v,1), f(v,2)} and
{e', e''}. A matching of H whose pairs can all be cut from G' without
disconnecting it is exactly a non-separating independent vertex set of G,
the complement of a connected vertex cover.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .matching import Solver, TractablePair, brute_force_solver, enumerate_large_matchings
from .ranked import ranked_matchings
from .matroids import (
    CographicMatroid,
    ContractError,
    GraphicMatroid,
    InputError,
    Matroid,
    PartitionMatroid,
)


def _stars(n_items: int, owner: Sequence[int], n_owners: int) -> list[list[int]]:
    blocks: list[list[int]] = [[] for _ in range(n_owners)]
    for k in range(n_items):
        blocks[owner[k]].append(k)
    return blocks


@dataclass
class BipartiteInstance:
    vertices: int
    left: frozenset[int]
    edges: list[tuple[int, int]]
    b: list[int]

    def __post_init__(self):
        self.left = frozenset(self.left)
        self.edges = [(int(u), int(v)) for u, v in self.edges]
        if len(self.b) != self.vertices:
            raise InputError("need one capacity per vertex")
        for u, v in self.edges:
            if (u in self.left) == (v in self.left):
                raise InputError(f"edge {(u, v)} does not cross the bipartition")

    def degrees(self, m) -> list[int]:
        d = [0] * self.vertices
        for k in m:
            u, v = self.edges[k]
            d[u] += 1
            d[v] += 1
        return d

    def is_b_matching(self, m) -> bool:
        return all(d <= c for d, c in zip(self.degrees(m), self.b))


def encode_b_matching(inst: BipartiteInstance) -> tuple[Matroid, Matroid]:
    left_end = [u if u in inst.left else v for u, v in inst.edges]
    right_end = [v if u in inst.left else u for u, v in inst.edges]
    m = len(inst.edges)
    stars_left = _stars(m, left_end, inst.vertices)
    stars_right = _stars(m, right_end, inst.vertices)
    return PartitionMatroid(stars_left, inst.b), PartitionMatroid(stars_right, inst.b)


@dataclass
class ColoredGraph:
    vertices: int
    edges: list[tuple[int, int]]
    colors: list[int]

    def __post_init__(self):
        if len(self.colors) != len(self.edges):
            raise InputError("every edge needs exactly one color")

    def is_colorful_forest(self, f) -> bool:
        f = list(f)
        if len({self.colors[k] for k in f}) != len(f):
            return False
        return GraphicMatroid(self.vertices, self.edges).is_independent(f)


def encode_colorful_forest(g: ColoredGraph) -> tuple[Matroid, Matroid]:
    palette = sorted(set(g.colors))
    slot = {c: i for i, c in enumerate(palette)}
    blocks = _stars(len(g.edges), [slot[c] for c in g.colors], len(palette))
    return GraphicMatroid(g.vertices, g.edges), PartitionMatroid(blocks, [1] * len(blocks))


@dataclass
class DegreeConstrainedInstance:
    vertices: int
    arcs: list[tuple[int, int]]
    out_cap: list[int]
    in_cap: list[int]

    def __post_init__(self):
        if len(self.out_cap) != self.vertices or len(self.in_cap) != self.vertices:
            raise InputError("need one in- and one out-capacity per vertex")
        self.arcs = [(int(u), int(v)) for u, v in self.arcs]

    def is_degree_constrained(self, f) -> bool:
        dout, din = [0] * self.vertices, [0] * self.vertices
        for k in f:
            u, v = self.arcs[k]
            dout[u] += 1
            din[v] += 1
        return all(d <= c for d, c in zip(dout, self.out_cap)) and all(
            d <= c for d, c in zip(din, self.in_cap)
        )


def encode_degree_constrained(inst: DegreeConstrainedInstance) -> tuple[Matroid, Matroid]:
    m = len(inst.arcs)
    out_stars = _stars(m, [u for u, _ in inst.arcs], inst.vertices)
    in_stars = _stars(m, [v for _, v in inst.arcs], inst.vertices)
    return PartitionMatroid(out_stars, inst.out_cap), PartitionMatroid(in_stars, inst.in_cap)


# -- connected vertex covers ----------------------------------------------------


@dataclass
class CvcInstance:
    """G, the blown-up graph G', and the cographic matroid pair on H.

    Element ids of G' (= vertices of H): f(v,1) = 2v, f(v,2) = 2v + 1,
    e' = 2|V| + 2e, e'' = 2|V| + 2e + 1. H-edge v is {f(v,1), f(v,2)},
    H-edge |V| + e is {e', e''}.
    """

    vertices: int
    edges: list[tuple[int, int]]
    copies: dict[int, tuple[int, ...]] = field(default_factory=dict)
    gprime_vertices: int = 0
    gprime_edges: list[tuple[int, int]] = field(default_factory=list)
    pair: TractablePair | None = None

    def phi(self, h_edge: int) -> tuple[str, int]:
        """``("vertex", v)`` or ``("edge", e)``."""
        if h_edge < self.vertices:
            return ("vertex", h_edge)
        return ("edge", h_edge - self.vertices)

    def phi_set(self, m) -> set[tuple[str, int]]:
        return {self.phi(k) for k in m}

    def vertex_set(self, m) -> frozenset[int]:
        """phi(M) for matchings, where phi(M) is known to hold only vertices."""
        kinds = self.phi_set(m)
        if any(kind == "edge" for kind, _ in kinds):
            raise ContractError("phi(M) contains an edge of G")
        return frozenset(v for _, v in kinds)


def _check_subcubic(vertices: int, edges: Sequence[tuple[int, int]]):
    if vertices < 1:
        raise InputError("the graph needs at least one vertex")
    seen = set()
    deg = [0] * vertices
    for u, v in edges:
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InputError(f"edge {(u, v)} leaves 0..{vertices - 1}")
        if u == v or frozenset((u, v)) in seen:
            raise InputError(f"edge {(u, v)} is a loop or a repeated edge")
        seen.add(frozenset((u, v)))
        deg[u] += 1
        deg[v] += 1
    if max(deg) > 3:
        raise InputError("graph is not subcubic")
    parent = list(range(vertices))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        parent[find(u)] = find(v)
    if len({find(v) for v in range(vertices)}) != 1:
        raise InputError("graph is not connected")


def build_cvc_instance(vertices: int, edges: Sequence[Sequence[int]], solver: Solver = brute_force_solver) -> CvcInstance:
    edges = [(int(u), int(v)) for u, v in edges]
    _check_subcubic(vertices, edges)
    if vertices < 2:
        raise ContractError("the reduction needs at least two vertices")
    n, m = vertices, len(edges)
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, (u, v) in enumerate(edges):
        incident[u].append(k)
        incident[v].append(k)

    next_id = 0
    copies: dict[int, tuple[int, ...]] = {}
    copy_for: dict[tuple[int, int], int] = {}  # (vertex, edge) -> copy of vertex holding that edge
    for v in range(n):
        ids = tuple(range(next_id, next_id + len(incident[v])))
        next_id += len(ids)
        copies[v] = ids
        for c, k in zip(ids, incident[v]):
            copy_for[(v, k)] = c
    middle = {k: next_id + k for k in range(m)}
    gprime_vertices = next_id + m

    gprime: list[tuple[int, int]] = [(-1, -1)] * (2 * n + 2 * m)
    for v in range(n):
        c = copies[v]
        if len(c) == 3:
            f1, f2 = (c[0], c[1]), (c[1], c[2])
        elif len(c) == 2:
            f1 = f2 = (c[0], c[1])
        else:
            f1 = f2 = (c[0], c[0])
        gprime[2 * v], gprime[2 * v + 1] = f1, f2
    for k, (u, v) in enumerate(edges):
        gprime[2 * n + 2 * k] = (copy_for[(u, k)], middle[k])
        gprime[2 * n + 2 * k + 1] = (middle[k], copy_for[(v, k)])

    h_edges = [(2 * v, 2 * v + 1) for v in range(n)] + [
        (2 * n + 2 * k, 2 * n + 2 * k + 1) for k in range(m)
    ]
    cographic = CographicMatroid(gprime_vertices, gprime)
    pair = TractablePair(cographic, tuple(h_edges), solver, "brute")
    return CvcInstance(n, edges, copies, gprime_vertices, gprime, pair)


def enumerate_min_cvc(
    vertices: int,
    edges: Sequence[Sequence[int]],
    tau: int,
    solver: Solver = brute_force_solver,
    ranked: bool = False,
    instance: CvcInstance | None = None,
) -> Iterator[tuple[int, ...]]:
    """Minimal connected vertex covers with at most ``tau`` vertices.

    Runs the large maximal matching enumeration with threshold |V| - tau,
    or the ranked one (covers by increasing size) when ``ranked`` is set.
    """
    if tau < 0:
        raise ContractError("tau must be non-negative")
    edges = [(int(u), int(v)) for u, v in edges]
    _check_subcubic(vertices, edges)
    if vertices <= 2:
        # one vertex: the empty cover. One edge: both endpoints are leaves,
        # all four gadget edges are self-loops and H would match both, so
        # answer directly.
        covers = [()] if vertices == 1 else [(0,), (1,)]
        yield from (c for c in covers if len(c) <= tau)
        return
    inst = instance or build_cvc_instance(vertices, edges, solver)
    everything = frozenset(range(vertices))
    floor = max(0, vertices - tau)
    matchings = ranked_matchings(inst.pair, floor) if ranked else enumerate_large_matchings(inst.pair, floor)
    for m in matchings:
        yield tuple(sorted(everything - inst.vertex_set(m)))
