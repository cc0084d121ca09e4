"""Hypothesis strategies for small matroids and matroid pairs."""

from hypothesis import strategies as st

from matroidenum.matroids import (
    CographicMatroid,
    FreeMatroid,
    GraphicMatroid,
    LinearMatroidGF2,
    PartitionMatroid,
    UniformMatroid,
)


@st.composite
def uniform(draw, n):
    return UniformMatroid(n, draw(st.integers(0, n)))


@st.composite
def partition(draw, n):
    labels = draw(st.lists(st.integers(0, max(0, n - 1)), min_size=n, max_size=n))
    blocks = [[e for e in range(n) if labels[e] == b] for b in sorted(set(labels))]
    caps = [draw(st.integers(0, len(b))) for b in blocks]
    return PartitionMatroid(blocks, caps)


@st.composite
def graphic(draw, n, cls=GraphicMatroid):
    v = draw(st.integers(1, 5))
    edges = draw(st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), min_size=n, max_size=n))
    return cls(v, edges)


@st.composite
def linear(draw, n):
    rows = draw(st.integers(1, 4))
    return LinearMatroidGF2(
        ["".join(draw(st.sampled_from("01")) for _ in range(n)) for _ in range(rows)]
    )


def matroid(n):
    return st.one_of(
        st.just(FreeMatroid(n)),
        uniform(n),
        partition(n),
        graphic(n),
        graphic(n, CographicMatroid),
        linear(n),
    )


@st.composite
def matroid_pair(draw, lo=1, hi=7):
    n = draw(st.integers(lo, hi))
    return draw(matroid(n)), draw(matroid(n))
