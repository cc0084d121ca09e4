"""Matroid matchings: enumeration of maximum and large maximal matchings.

A matching of a pair (M, G), where G is a graph on the ground set of M,
is a set of pairwise disjoint edges whose covered vertices are
independent in M. The enumerators mirror the common-independent-set ones
in ``intersection``; the difference is the parent rule, which swaps one
edge of the matching for one edge of a fixed maximum matching R and
completes greedily, and the potential ``(|R| - |M|, |M ^ R|)`` that it
strictly decreases in lexicographic order.

Maximum matchings of minors are delegated to the pair's ``solver``,
so any pair for which such a solver exists can be enumerated.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import networkx as nx

from .exchange import maximum_common_independent_set
from .intersection import InvariantViolation
from .matroids import (
    ContractError,
    DirectSum,
    FreeMatroid,
    InputError,
    Matroid,
    Relabeled,
    contract,
    fundamental_circuit,
    matroid_from_dict,
    matroid_to_dict,
)

# solver(minor, edges) -> a maximum matching, as edge indices
Solver = Callable[[Matroid, dict[int, tuple[int, int]]], frozenset[int]]


def brute_force_solver(matroid: Matroid, edges: dict[int, tuple[int, int]]) -> frozenset[int]:
    """Branch and bound over edges in index order. Exponential; desk scale only."""
    order = sorted(edges)
    cap = min(len(order), matroid.n // 2)
    best: list[int] = []

    def dfs(k: int, chosen: list[int], used: frozenset[int]):
        nonlocal best
        if len(chosen) + len(order) - k <= len(best) or len(best) == cap:
            return
        if k == len(order):
            best = list(chosen)
            return
        e = order[k]
        u, v = edges[e]
        if u not in used and v not in used and matroid.is_independent(used | {u, v}):
            chosen.append(e)
            dfs(k + 1, chosen, used | {u, v})
            chosen.pop()
        dfs(k + 1, chosen, used)

    dfs(0, [], frozenset())
    return frozenset(best)


def free_solver(matroid: Matroid, edges: dict[int, tuple[int, int]]) -> frozenset[int]:
    """Maximum graph matching, ignoring the matroid (valid only for free matroids)."""
    g = nx.Graph()
    index: dict[frozenset, int] = {}
    for k in sorted(edges):
        u, v = edges[k]
        key = frozenset((u, v))
        if key not in index:
            index[key] = k
            g.add_edge(u, v)
    mate = nx.max_weight_matching(g, maxcardinality=True)
    return frozenset(index[frozenset(pair)] for pair in mate)


def intersection_solver(matroid: Matroid, edges: dict[int, tuple[int, int]]) -> frozenset[int]:
    """For pairs built by ``encode_intersection``: each edge joins the two
    copies of one element, so a matching is a common independent set of the
    two sides seen through the edge labels."""
    side1 = Relabeled(matroid, {k: uv[0] for k, uv in edges.items()})
    side2 = Relabeled(matroid, {k: uv[1] for k, uv in edges.items()})
    return maximum_common_independent_set(side1, side2)


SOLVERS: dict[str, Solver] = {
    "brute": brute_force_solver,
    "free": free_solver,
    "intersection": intersection_solver,
}


@dataclass
class TractablePair:
    matroid: Matroid
    edges: tuple[tuple[int, int], ...]
    solver: Solver = brute_force_solver
    solver_name: str = "brute"
    _index: dict[int, list[int]] = field(init=False, repr=False)

    def __post_init__(self):
        self.edges = tuple((int(u), int(v)) for u, v in self.edges)
        ground = set(self.matroid.ground)
        for k, (u, v) in enumerate(self.edges):
            if u == v:
                raise InputError(f"edge {k} is a self-loop")
            if u not in ground or v not in ground:
                raise InputError(f"edge {k} leaves the ground set")
        self._index = {}
        for k, (u, v) in enumerate(self.edges):
            self._index.setdefault(u, []).append(k)
            self._index.setdefault(v, []).append(k)

    def incident(self, v: int) -> list[int]:
        return self._index.get(v, [])

    def covered(self, m: Iterable[int]) -> frozenset[int]:
        return frozenset(x for k in m for x in self.edges[k])

    def maximum(self) -> frozenset[int]:
        return self.solver(self.matroid, dict(enumerate(self.edges)))


def is_graph_matching(p: TractablePair, m: Iterable[int]) -> bool:
    seen: set[int] = set()
    for k in m:
        u, v = p.edges[k]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_matching(p: TractablePair, m: Iterable[int]) -> bool:
    m = frozenset(m)
    if any(not 0 <= k < len(p.edges) for k in m):
        raise InputError("edge index out of range")
    return is_graph_matching(p, m) and p.matroid.is_independent(p.covered(m))


def _addable(p: TractablePair, m: frozenset[int], used: frozenset[int], k: int) -> bool:
    u, v = p.edges[k]
    return k not in m and u not in used and v not in used and p.matroid.is_independent(used | {u, v})


def is_maximal_matching(p: TractablePair, m: Iterable[int]) -> bool:
    m = frozenset(m)
    used = p.covered(m)
    return not any(_addable(p, m, used, k) for k in range(len(p.edges)))


def complete_matching(p: TractablePair, m: Iterable[int]) -> frozenset[int]:
    """Greedy completion in edge index order."""
    m = set(m)
    if not is_matching(p, m):
        raise ContractError(f"{sorted(m)} is not a matching")
    used = p.covered(m)
    for k in range(len(p.edges)):
        if _addable(p, frozenset(m), used, k):
            m.add(k)
            used = used | set(p.edges[k])
    return frozenset(m)


def matching_extension_feasible(
    p: TractablePair,
    include: Iterable[int],
    exclude: Iterable[int],
    opt: int | None = None,
) -> bool:
    """Is there a maximum matching containing ``include`` and avoiding ``exclude``?

    Solves the minor with the covered vertices of ``include`` contracted,
    on the graph induced by the remaining vertices minus the excluded edges.
    """
    include, exclude = frozenset(include), frozenset(exclude)
    if include & exclude:
        raise ContractError("include and exclude must be disjoint")
    if not is_matching(p, include):
        raise ContractError(f"{sorted(include)} is not a matching")
    if opt is None:
        opt = len(p.maximum())
    covered = p.covered(include)
    minor = contract(p.matroid, covered)
    edges = {
        k: uv
        for k, uv in enumerate(p.edges)
        if k not in exclude and uv[0] not in covered and uv[1] not in covered
    }
    return len(p.solver(minor, edges)) == opt - len(include)


def enumerate_maximum_matchings(p: TractablePair) -> Iterator[tuple[int, ...]]:
    """Flashlight search over edge indices, include branch first."""
    opt = len(p.maximum())
    m = len(p.edges)
    stack = [(0, frozenset(), frozenset())]
    while stack:
        k, inc, exc = stack.pop()
        if k == m or len(inc) == opt:
            yield tuple(sorted(inc))
            continue
        branches = []
        grown = inc | {k}
        if is_matching(p, grown) and matching_extension_feasible(p, grown, exc, opt):
            branches.append((k + 1, grown, exc))
        if matching_extension_feasible(p, inc, exc | {k}, opt):
            branches.append((k + 1, inc, exc | {k}))
        stack.extend(reversed(branches))


def matching_potential(m: frozenset[int], r: frozenset[int]) -> tuple[int, int]:
    if len(m) == len(r):
        return (0, 0)
    return (len(r) - len(m), len(m ^ r))


@dataclass(frozen=True)
class MatchingParentStep:
    child: frozenset[int]
    root: frozenset[int]
    removed: int
    added: int
    parent: frozenset[int]


def matching_parent(
    p: TractablePair,
    m: Iterable[int],
    r: Iterable[int],
    on_step: Callable[[MatchingParentStep], None] | None = None,
) -> frozenset[int]:
    """Swap one edge of ``m`` for one edge of the maximum matching ``r``, then complete."""
    m, r = frozenset(m), frozenset(r)
    if len(m) >= len(r):
        raise ContractError(f"parent needs |M| < |R|, got {len(m)} >= {len(r)}")
    vm, vr = p.covered(m), p.covered(r)
    x = next((x for x in sorted(vr - vm) if p.matroid.is_independent(vm | {x})), None)
    if x is None:
        raise ContractError("no vertex of R extends V(M); is R a maximum matching?")
    f = next(k for k in p.incident(x) if k in r)
    x2 = p.edges[f][1] if p.edges[f][0] == x else p.edges[f][0]
    if x2 in vm:
        e = next(k for k in p.incident(x2) if k in m)
    else:
        circuit = fundamental_circuit(p.matroid, vm | {x}, x2) - {x, x2}
        # the lowest edge outside R: an edge of M & R here would not move towards R
        e = min((k for k in m - r if set(p.edges[k]) & circuit), default=None)
        if e is None:
            raise InvariantViolation("circuit meets no edge of M - R")
    swapped = (m - {e}) | {f}
    if not is_matching(p, swapped):
        raise InvariantViolation(f"swapping {e} for {f} does not give a matching")
    result = complete_matching(p, swapped)
    if not len(m) <= len(result) <= len(m) + 2:
        raise InvariantViolation(f"parent size {len(result)} outside [{len(m)}, {len(m) + 2}]")
    if len(m ^ result) > 4:
        raise InvariantViolation("parent differs from the child in more than four edges")
    if matching_potential(result, r) >= matching_potential(m, r):
        raise InvariantViolation("parent potential does not decrease")
    if on_step is not None:
        on_step(MatchingParentStep(m, r, e, f, result))
    return result


def _candidates(p: TractablePair, m: frozenset[int]) -> Iterator[frozenset[int]]:
    """All graph matchings M ^ X with |X| <= 4 and |M ^ X| <= |M|.

    A child is never larger than its parent, so larger perturbations
    cannot be children and are skipped.
    """
    inside = sorted(m)
    for a in range(1, 5):
        for removed in itertools.combinations(inside, a):
            rest = m.difference(removed)
            used = p.covered(rest)
            free = [
                k
                for k in range(len(p.edges))
                if k not in m and p.edges[k][0] not in used and p.edges[k][1] not in used
            ]
            for b in range(0, min(a, 4 - a) + 1):
                for added in itertools.combinations(free, b):
                    cand = rest.union(added)
                    if b < 2 or is_graph_matching(p, added):
                        yield cand


def matching_children(
    p: TractablePair,
    m: Iterable[int],
    r: Iterable[int],
    tau: int,
    on_step: Callable[[MatchingParentStep], None] | None = None,
) -> Iterator[frozenset[int]]:
    m, r = frozenset(m), frozenset(r)
    for cand in _candidates(p, m):
        if not tau <= len(cand) < len(r):
            continue
        if not p.matroid.is_independent(p.covered(cand)) or not is_maximal_matching(p, cand):
            continue
        if matching_parent(p, cand, r, on_step) == m:
            if matching_potential(cand, r) <= matching_potential(m, r):
                raise InvariantViolation("child potential does not increase")
            yield cand


def enumerate_large_matchings(
    p: TractablePair,
    tau: int,
    on_step: Callable[[MatchingParentStep], None] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every maximal matching with at least ``tau`` edges."""
    if tau < 0:
        raise ContractError("tau must be non-negative")
    roots = enumerate_maximum_matchings(p)
    first = next(roots)
    r = frozenset(first)
    if len(r) < tau:
        return
    for root in itertools.chain([first], roots):
        yield root
        if tau >= len(r):
            continue
        stack = [matching_children(p, root, r, tau, on_step)]
        while stack:
            child = next(stack[-1], None)
            if child is None:
                stack.pop()
                continue
            yield tuple(sorted(child))
            stack.append(matching_children(p, child, r, tau, on_step))


def encode_intersection(m1: Matroid, m2: Matroid) -> TractablePair:
    """Common independent sets of (m1, m2) as matchings of one pair.

    Element k of the ground set becomes the edge ``(k, n + k)`` between its
    copy in m1 and its copy in m2; edge index k stands for element
    ``m1.ground[k]``.
    """
    if m1.ground != m2.ground:
        raise ContractError("the two matroids must share a ground set")
    n = m1.n
    return TractablePair(
        DirectSum(m1, m2),
        tuple((k, n + k) for k in range(n)),
        intersection_solver,
        "intersection",
    )


def pair_from_dict(raw: dict) -> TractablePair:
    """Pair JSON: ``{"matroid", "graph": {"edges"}, "solver"}``; with solver
    ``"intersection"`` the pair is given as ``{"m1", "m2"}`` and encoded."""
    if isinstance(raw, dict) and raw.get("solver") == "intersection":
        try:
            return encode_intersection(matroid_from_dict(raw["m1"]), matroid_from_dict(raw["m2"]))
        except KeyError as exc:
            raise InputError(f"intersection pair needs m1 and m2: {exc!r}") from exc
    try:
        matroid = matroid_from_dict(raw["matroid"])
        edges = raw["graph"]["edges"]
        name = raw.get("solver", "brute")
    except (KeyError, TypeError) as exc:
        raise InputError(f"bad pair description: {exc!r}") from exc
    if name not in SOLVERS:
        raise InputError(f"unknown solver {name!r}")
    if name == "free" and not isinstance(matroid, FreeMatroid):
        raise InputError("the 'free' solver needs a free matroid")
    return TractablePair(matroid, tuple(tuple(e) for e in edges), SOLVERS[name], name)


def pair_to_dict(p: TractablePair) -> dict:
    if p.solver_name == "intersection":
        return {
            "m1": matroid_to_dict(p.matroid.first),
            "m2": matroid_to_dict(p.matroid.second),
            "solver": "intersection",
        }
    return {
        "matroid": matroid_to_dict(p.matroid),
        "graph": {"edges": [list(e) for e in p.edges]},
        "solver": p.solver_name,
    }


def decode_edges(p: TractablePair, m: Sequence[int]) -> list[tuple[int, int]]:
    return [p.edges[k] for k in m]
