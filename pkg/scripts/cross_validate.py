"""Cross-check every enumerator against the brute-force oracles on fresh
random instances. Prints a summary line per family and exits non-zero on
the first disagreement.

    python scripts/cross_validate.py --count 100 --seed 7
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass

from matroidenum.applications import enumerate_min_cvc
from matroidenum.exchange import maximum_common_independent_set
from matroidenum.instances import (
    random_linear_pair,
    random_partition_graphic_pair,
    random_simple_graph,
    random_subcubic_graph,
    random_uniform_pair,
)
from matroidenum.intersection import enumerate_large
from matroidenum.matching import TractablePair, encode_intersection, enumerate_large_matchings, free_solver
from matroidenum.matroids import FreeMatroid
from matroidenum.reference import brute_common_independent, brute_matchings, brute_min_cvc, compare


@dataclass
class CrossConfig:
    count: int = 50
    seed: int = 0
    max_n: int = 8
    max_vertices: int = 9


def intersection_cases(cfg, rng):
    makers = [random_linear_pair, random_partition_graphic_pair, random_uniform_pair]
    for k in range(cfg.count):
        m1, m2 = makers[k % 3](rng, rng.randint(2, cfg.max_n))
        opt = len(maximum_common_independent_set(m1, m2))
        for tau in range(opt + 1):
            yield (k, tau), brute_common_independent(m1, m2, "maximal", tau), enumerate_large(m1, m2, tau)


def matching_cases(cfg, rng):
    for k in range(cfg.count):
        if k % 2:
            v = rng.randint(2, cfg.max_vertices)
            p = TractablePair(FreeMatroid(v), random_simple_graph(rng, v), free_solver, "free")
        else:
            p = encode_intersection(*random_linear_pair(rng, rng.randint(2, min(cfg.max_n, 7))))
        for tau in range(len(p.maximum()) + 1):
            yield (k, tau), brute_matchings(p, "maximal", tau), enumerate_large_matchings(p, tau)


def cvc_cases(cfg, rng):
    for k in range(cfg.count):
        n = rng.randint(1, cfg.max_vertices)
        edges = random_subcubic_graph(rng, n)
        for tau in range(n + 1):
            yield (k, tau), brute_min_cvc(n, edges, tau), enumerate_min_cvc(n, edges, tau)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(CrossConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = CrossConfig(**vars(p.parse_args(argv)))

    for family, cases in [("intersection", intersection_cases), ("matching", matching_cases), ("cvc", cvc_cases)]:
        rng = random.Random(cfg.seed)
        start = time.perf_counter()
        runs = 0
        for key, expected, stream in cases(cfg, rng):
            report = compare(expected, stream)
            runs += 1
            if report.verdict != "MATCH":
                print(f"{family} case {key}: missing {report.missing} unexpected {report.unexpected} "
                      f"duplicates {report.duplicates}")
                return 1
        print(f"{family}: {runs} runs agree ({time.perf_counter() - start:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
