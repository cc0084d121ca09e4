"""Ranked enumeration from a threshold enumerator.

Run the threshold enumerator A(k) for k = k_max, k_max - 1, ..., k_min and
keep only the outputs of size exactly k at stage k. Every family member
appears once, and sizes never increase along the output.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass

from .exchange import maximum_common_independent_set
from .intersection import enumerate_large
from .matching import TractablePair, enumerate_large_matchings
from .matroids import ContractError, Matroid


@dataclass
class ThresholdAlgorithm:
    """``run(k)`` yields every family member with at least ``k`` elements."""

    run: Callable[[int], Iterable[Sequence[int]]]
    k_max: int
    k_min: int = 0
    wrapped_outputs: int = 0


def ranked_enumerate(a: ThresholdAlgorithm) -> Iterator[tuple[int, ...]]:
    if a.k_min < 0:
        raise ContractError("k_min must be non-negative")
    for k in range(a.k_max, a.k_min - 1, -1):
        for sol in a.run(k):
            a.wrapped_outputs += 1
            if len(sol) == k:
                yield tuple(sol)


def common_independent_threshold(m1: Matroid, m2: Matroid, k_min: int = 0) -> ThresholdAlgorithm:
    # stages above the optimum are empty, so start there
    opt = len(maximum_common_independent_set(m1, m2))
    return ThresholdAlgorithm(lambda k: enumerate_large(m1, m2, k), opt, k_min)


def matching_threshold(p: TractablePair, k_min: int = 0) -> ThresholdAlgorithm:
    return ThresholdAlgorithm(lambda k: enumerate_large_matchings(p, k), len(p.maximum()), k_min)


def ranked_common_independent(m1: Matroid, m2: Matroid, k_min: int = 0) -> Iterator[tuple[int, ...]]:
    return ranked_enumerate(common_independent_threshold(m1, m2, k_min))


def ranked_matchings(p: TractablePair, k_min: int = 0) -> Iterator[tuple[int, ...]]:
    return ranked_enumerate(matching_threshold(p, k_min))
