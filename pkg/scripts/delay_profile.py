"""Measure enumeration delay in oracle queries on growing uniform and
partition x graphic pairs, and print one CSV row per instance.

    python scripts/delay_profile.py --max-n 12 > delays.csv
"""

import argparse
import csv
import random
import statistics
import sys
from dataclasses import dataclass

from matroidenum.instances import random_partition_graphic_pair
from matroidenum.intersection import enumerate_large
from matroidenum.matroids import UniformMatroid
from matroidenum.stats import EnumerationStats, instrument


@dataclass
class ProfileConfig:
    min_n: int = 4
    max_n: int = 12
    seed: int = 0
    tau: int = 0
    random_per_n: int = 3


def instances(cfg: ProfileConfig):
    rng = random.Random(cfg.seed)
    for n in range(cfg.min_n, cfg.max_n + 1):
        yield "uniform", n, UniformMatroid(n, n // 2), UniformMatroid(n, n // 2 + 1)
        for _ in range(cfg.random_per_n):
            yield "partition x graphic", n, *random_partition_graphic_pair(rng, n)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(ProfileConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = ProfileConfig(**vars(p.parse_args(argv)))

    out = csv.writer(sys.stdout)
    out.writerow(["family", "n", "outputs", "max_delay_queries", "median_delay_queries", "max_over_n6", "total_ms"])
    for family, n, m1, m2 in instances(cfg):
        stats = EnumerationStats()
        for _ in instrument(enumerate_large(m1, m2, cfg.tau), [m1, m2], stats):
            pass
        d = stats.to_dict()
        out.writerow(
            [
                family,
                n,
                d["outputs"],
                d["max_delay_queries"],
                statistics.median(stats.gap_queries) if stats.gap_queries else 0,
                f"{d['max_delay_queries'] / n**6:.2e}",
                f"{(sum(stats.gap_ns) + stats.tail_ns) / 1e6:.1f}",
            ]
        )
        sys.stdout.flush()


if __name__ == "__main__":
    main()
