"""Enumerating maximum and large maximal common independent sets.

``enumerate_maximum`` is a flashlight search: branch on the smallest
undecided element (include first) and prune every branch whose
include/exclude constraints no maximum set satisfies.

``enumerate_large`` is a reverse search. A fixed maximum set R defines a
parent for every smaller maximal set I: take the canonical augmenting
path (s, v2, v3, ...) in the exchange digraph of the minors
``(Mi | (R + I)) / (R & I)`` at ``I - R``, swap v2 in and v3 out, then
complete greedily. The parent is never smaller, is strictly closer to R,
and differs from I in at most three elements, so the children of a set
are found among its 2- and 3-element perturbations.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

from .exchange import (
    AugmentingPath,
    build_exchange_digraph,
    complete_to_maximal,
    is_common_independent,
    is_maximal,
    maximum_common_independent_set,
    shortest_augmenting_path,
)
from .matroids import ContractError, Matroid, contract, delete, restrict


class InvariantViolation(AssertionError):
    """A structural property proven for the parent function failed."""


@dataclass(frozen=True)
class ParentStep:
    """Everything computed by one parent() call, for external auditing."""

    child: frozenset[int]
    root: frozenset[int]
    path: AugmentingPath
    swapped: frozenset[int]
    parent: frozenset[int]


@dataclass(frozen=True)
class ExtensionInstance:
    """Include/exclude constraints on a maximum common independent set."""

    m1: Matroid
    m2: Matroid
    include: frozenset[int] = frozenset()
    exclude: frozenset[int] = frozenset()

    def feasible(self, opt: int | None = None) -> bool:
        return extension_feasible(self.m1, self.m2, self.include, self.exclude, opt)


@dataclass
class ReverseSearchState:
    """The fixed root R, the threshold, and one child generator per tree level."""

    root: frozenset[int]
    tau: int
    stack: list[Iterator[frozenset[int]]] = field(default_factory=list)


def extension_feasible(
    m1: Matroid,
    m2: Matroid,
    include: Iterable[int],
    exclude: Iterable[int],
    opt: int | None = None,
) -> bool:
    """Is there a maximum common independent set containing ``include`` and
    avoiding ``exclude``?"""
    include, exclude = frozenset(include), frozenset(exclude)
    if include & exclude:
        raise ContractError("include and exclude must be disjoint")
    if opt is None:
        opt = len(maximum_common_independent_set(m1, m2))
    if include and not is_common_independent(m1, m2, include):
        return False
    n1 = delete(contract(m1, include), exclude)
    n2 = delete(contract(m2, include), exclude)
    return len(maximum_common_independent_set(n1, n2)) == opt - len(include)


def enumerate_maximum(m1: Matroid, m2: Matroid) -> Iterator[tuple[int, ...]]:
    """Yield every maximum common independent set once, as a sorted tuple."""
    ground = m1.ground
    opt = len(maximum_common_independent_set(m1, m2))
    stack = [(0, frozenset(), frozenset())]
    while stack:
        k, inc, exc = stack.pop()
        if k == len(ground) or len(inc) == opt:
            # once |inc| = opt every remaining element is forced out
            yield tuple(sorted(inc))
            continue
        e = ground[k]
        branches = []
        if extension_feasible(m1, m2, inc | {e}, exc, opt):
            branches.append((k + 1, inc | {e}, exc))
        if extension_feasible(m1, m2, inc, exc | {e}, opt):
            branches.append((k + 1, inc, exc | {e}))
        stack.extend(reversed(branches))


def potential(i: frozenset[int], r: frozenset[int]) -> int:
    """0 on maximum sets, otherwise the distance |I ^ R| to the fixed root."""
    return 0 if len(i) == len(r) else len(i ^ r)


def parent(
    i: Iterable[int],
    r: Iterable[int],
    m1: Matroid,
    m2: Matroid,
    on_step: Callable[[ParentStep], None] | None = None,
) -> frozenset[int]:
    """Parent of maximal common independent ``i`` under the maximum set ``r``.

    Raises InvariantViolation if any of the guaranteed properties fails.
    """
    i, r = frozenset(i), frozenset(r)
    if len(i) >= len(r):
        raise ContractError(f"parent needs |I| < |R|, got {len(i)} >= {len(r)}")
    n1 = contract(restrict(m1, i | r), i & r)
    n2 = contract(restrict(m2, i | r), i & r)
    path = shortest_augmenting_path(build_exchange_digraph(n1, n2, i - r))
    if path is None:
        raise ContractError("no augmenting path towards R; is R maximum and I common independent?")
    if len(path) < 4:
        raise InvariantViolation(f"augmenting path {path.vertices} has fewer than four vertices")
    v2, v3 = path.inner[0], path.inner[1]
    swapped = i ^ {v2, v3}
    if not is_common_independent(m1, m2, swapped):
        raise InvariantViolation(f"I ^ {{{v2}, {v3}}} is not common independent")
    result = complete_to_maximal(m1, m2, swapped)
    if len(result) > len(i) + 1:
        raise InvariantViolation(f"completion grew {sorted(swapped)} by more than one element")
    if len(result) < len(i):
        raise InvariantViolation("parent is smaller than the child")
    if len(r ^ result) >= len(r ^ i):
        raise InvariantViolation("parent is not closer to R")
    if len(i ^ result) > 3:
        raise InvariantViolation("parent differs from the child in more than three elements")
    if on_step is not None:
        on_step(ParentStep(i, r, path, swapped, result))
    return result


def neighbourhood_violations(m1: Matroid, m2: Matroid, i: Iterable[int]) -> list[str]:
    """Check the dependence facts around maximal common independent ``i``.

    For e in I, with N+ and N- its out- and in-neighbours in D(I):
    two out-neighbours swapped in for e make an M1-dependent set, two
    in-neighbours an M2-dependent set, and swapping e for any element
    outside I, N+ and N- leaves the common independent sets.
    Returns a description per failure (empty when all hold).
    """
    i = frozenset(i)
    d = build_exchange_digraph(m1, m2, i)
    out: list[str] = []
    for e in sorted(i):
        plus = sorted(d.out_neighbors(e))
        minus = sorted(d.in_neighbors(e))
        for f1, f2 in itertools.combinations(plus, 2):
            if m1.is_independent((i - {e}) | {f1, f2}):
                out.append(f"out-neighbours {f1}, {f2} of {e} swap in independently in M1")
        for f1, f2 in itertools.combinations(minus, 2):
            if m2.is_independent((i - {e}) | {f1, f2}):
                out.append(f"in-neighbours {f1}, {f2} of {e} swap in independently in M2")
        for f in m1.ground:
            if f in i or f in plus or f in minus:
                continue
            if is_common_independent(m1, m2, i ^ {e, f}):
                out.append(f"non-neighbour {f} of {e} swaps in as a common independent set")
    return out


def _perturbations(ground: tuple[int, ...]) -> list[tuple[int, ...]]:
    # all 2- and 3-subsets in lexicographic order
    return sorted(itertools.chain(itertools.combinations(ground, 2), itertools.combinations(ground, 3)))


def children(
    i: Iterable[int],
    r: Iterable[int],
    tau: int,
    m1: Matroid,
    m2: Matroid,
    on_step: Callable[[ParentStep], None] | None = None,
    perturbations: list[tuple[int, ...]] | None = None,
) -> Iterator[frozenset[int]]:
    i, r = frozenset(i), frozenset(r)
    if perturbations is None:
        perturbations = _perturbations(m1.ground)
    for x in perturbations:
        cand = i.symmetric_difference(x)
        if not tau <= len(cand) < len(r):
            continue
        if not is_common_independent(m1, m2, cand) or not is_maximal(m1, m2, cand):
            continue
        if parent(cand, r, m1, m2, on_step) == i:
            if potential(cand, r) <= potential(i, r):
                raise InvariantViolation("child does not move away from R")
            yield cand


def enumerate_large(
    m1: Matroid,
    m2: Matroid,
    tau: int,
    on_step: Callable[[ParentStep], None] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every maximal common independent set of size at least ``tau``."""
    if tau < 0:
        raise ContractError("tau must be non-negative")
    roots = enumerate_maximum(m1, m2)
    first = next(roots)
    r = frozenset(first)
    if len(r) < tau:
        return
    perturbations = _perturbations(m1.ground) if tau < len(r) else []
    state = ReverseSearchState(r, tau)
    for root in itertools.chain([first], roots):
        yield root
        # explicit stack: depth is bounded by n, not by the interpreter
        state.stack.append(children(root, r, tau, m1, m2, on_step, perturbations))
        while state.stack:
            child = next(state.stack[-1], None)
            if child is None:
                state.stack.pop()
                continue
            yield tuple(sorted(child))
            state.stack.append(children(child, r, tau, m1, m2, on_step, perturbations))
            if len(state.stack) > m1.n + 1:
                raise InvariantViolation("reverse search deeper than the ground set")
