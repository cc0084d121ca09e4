"""Worked examples and random instance generators."""

from __future__ import annotations

import random

from .matroids import (
    BasesMatroid,
    GraphicMatroid,
    LinearMatroidGF2,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
)

# The seven-element pair drawn with the exchange digraph of {1, 2, 3}.
# Elements are labelled 1..7 there; here label k is element id k - 1.
SAMPLE_BASES_1 = [{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 3, 5, 6}, {1, 2, 5, 6}, {1, 2, 5, 7}]
SAMPLE_BASES_2 = [
    {1, 2, 3, 6},
    {1, 2, 3, 7},
    {1, 2, 5, 6},
    {1, 3, 5, 6},
    {1, 2, 5, 7},
    {2, 3, 4, 6},
]


def to_ids(labels) -> frozenset[int]:
    return frozenset(k - 1 for k in labels)


def to_labels(ids) -> tuple[int, ...]:
    return tuple(sorted(e + 1 for e in ids))


def sample_pair() -> tuple[Matroid, Matroid]:
    m1 = BasesMatroid(7, [to_ids(b) for b in SAMPLE_BASES_1])
    m2 = BasesMatroid(7, [to_ids(b) for b in SAMPLE_BASES_2])
    return m1, m2


def random_linear_pair(rng: random.Random, n: int, rows: int = 3) -> tuple[Matroid, Matroid]:
    def matrix():
        return ["".join(rng.choice("01") for _ in range(n)) for _ in range(rows)]

    return LinearMatroidGF2(matrix()), LinearMatroidGF2(matrix())


def random_partition(rng: random.Random, n: int, max_blocks: int | None = None) -> PartitionMatroid:
    k = rng.randint(1, max(1, max_blocks or n))
    labels = [rng.randrange(k) for _ in range(n)]
    blocks = [[e for e in range(n) if labels[e] == b] for b in range(k)]
    blocks = [b for b in blocks if b]
    caps = [rng.randint(0, len(b)) if rng.random() < 0.2 else rng.randint(1, max(1, len(b) // 2 + 1)) for b in blocks]
    return PartitionMatroid(blocks, caps)


def random_multigraph(rng: random.Random, vertices: int, edges: int) -> list[tuple[int, int]]:
    # mostly simple edges, with the occasional parallel edge or loop
    out = []
    for _ in range(edges):
        u = rng.randrange(vertices)
        v = u if rng.random() < 0.05 else rng.randrange(vertices)
        out.append((u, v))
    return out


def random_partition_graphic_pair(rng: random.Random, n: int) -> tuple[Matroid, Matroid]:
    """Graphic matroid of a random multigraph with about 0.6n to n vertices,
    against a partition into about 0.6n to 0.9n blocks of capacity mostly one.
    These proportions leave many maximal sets below the optimum."""
    vertices = rng.randint(max(2, round(0.6 * n)), max(2, n))
    graphic = GraphicMatroid(vertices, random_multigraph(rng, vertices, n))
    k = rng.randint(max(1, round(0.6 * n)), max(1, round(0.9 * n)))
    labels = [rng.randrange(k) for _ in range(n)]
    blocks = [b for b in ([e for e in range(n) if labels[e] == j] for j in range(k)) if b]
    caps = [2 if len(b) > 2 and rng.random() < 0.1 else 1 for b in blocks]
    return PartitionMatroid(blocks, caps), graphic


def random_uniform_pair(rng: random.Random, n: int) -> tuple[Matroid, Matroid]:
    return UniformMatroid(n, rng.randint(0, n)), UniformMatroid(n, rng.randint(0, n))


def random_simple_graph(rng: random.Random, vertices: int, p: float = 0.4) -> list[tuple[int, int]]:
    return [(u, v) for u in range(vertices) for v in range(u + 1, vertices) if rng.random() < p]


def random_subcubic_graph(rng: random.Random, vertices: int, extra: float = 0.5) -> list[tuple[int, int]]:
    """A connected simple graph with maximum degree at most three."""
    if vertices < 2:
        return []
    deg = [0] * vertices
    edges: set[tuple[int, int]] = set()
    order = list(range(vertices))
    rng.shuffle(order)
    # random tree: attach each vertex to an earlier one that still has room
    for k in range(1, vertices):
        v = order[k]
        room = [u for u in order[:k] if deg[u] < 3]
        u = rng.choice(room)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    candidates = [(u, v) for u in range(vertices) for v in range(u + 1, vertices) if (u, v) not in edges]
    rng.shuffle(candidates)
    for u, v in candidates:
        if deg[u] < 3 and deg[v] < 3 and rng.random() < extra:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    return sorted(edges)
