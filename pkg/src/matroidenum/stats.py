"""Delay measurement for enumerators.

A gap is the work done before an output since the previous one (or
since the start, for the first output, so preprocessing is charged).
Work is counted in oracle queries and in wall-clock nanoseconds.
"""

from __future__ import annotations

import statistics
import time
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from .matroids import Matroid


class QueryMeter:
    """Sums the query counters of the distinct root oracles under some matroids."""

    def __init__(self, matroids: Iterable[Matroid]):
        roots: list[Matroid] = []
        for m in matroids:
            for c in m.counters():
                if all(c is not r for r in roots):
                    roots.append(c)
        self.roots = roots

    def read(self) -> int:
        return sum(r._queries for r in self.roots)


@dataclass
class EnumerationStats:
    gap_queries: list[int] = field(default_factory=list)
    gap_ns: list[int] = field(default_factory=list)
    tail_queries: int = 0
    tail_ns: int = 0

    @property
    def outputs(self) -> int:
        return len(self.gap_queries)

    @property
    def preprocessing_queries(self) -> int:
        return self.gap_queries[0] if self.gap_queries else self.tail_queries

    @property
    def max_delay_queries(self) -> int:
        return max(self.gap_queries + [self.tail_queries])

    @property
    def max_delay_ns(self) -> int:
        return max(self.gap_ns + [self.tail_ns])

    def to_dict(self, timing: bool = True) -> dict:
        """Summary record; ``timing=False`` keeps only the reproducible query counts."""
        q, t = self.gap_queries, self.gap_ns
        out = {
            "outputs": self.outputs,
            "preprocessing_queries": self.preprocessing_queries,
            "max_delay_queries": self.max_delay_queries,
            "mean_delay_queries": statistics.fmean(q) if q else 0.0,
            "median_delay_queries": statistics.median(q) if q else 0,
            "tail_queries": self.tail_queries,
            "total_queries": sum(q) + self.tail_queries,
        }
        if timing:
            out["max_delay_ns"] = self.max_delay_ns
            out["mean_delay_ns"] = statistics.fmean(t) if t else 0.0
            out["tail_ns"] = self.tail_ns
        return out


def instrument(solutions: Iterable, matroids: Iterable[Matroid], stats: EnumerationStats) -> Iterator:
    """Pass ``solutions`` through, recording one gap per output into ``stats``."""
    meter = QueryMeter(matroids)
    last_q, last_t = meter.read(), time.perf_counter_ns()
    for sol in solutions:
        q, t = meter.read(), time.perf_counter_ns()
        stats.gap_queries.append(q - last_q)
        stats.gap_ns.append(t - last_t)
        yield sol
        last_q, last_t = meter.read(), time.perf_counter_ns()
    stats.tail_queries = meter.read() - last_q
    stats.tail_ns = time.perf_counter_ns() - last_t
