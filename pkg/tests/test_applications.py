import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroidenum.applications import (
    BipartiteInstance,
    ColoredGraph,
    DegreeConstrainedInstance,
    build_cvc_instance,
    encode_b_matching,
    encode_colorful_forest,
    encode_degree_constrained,
    enumerate_min_cvc,
)
from matroidenum.exchange import is_common_independent
from matroidenum.instances import random_subcubic_graph
from matroidenum.intersection import enumerate_large
from matroidenum.matching import is_matching, is_maximal_matching
from matroidenum.matroids import ContractError, InputError
from matroidenum.reference import brute_matchings, brute_min_cvc, is_connected_vertex_cover

P4 = [(0, 1), (1, 2), (2, 3)]
C4 = [(0, 1), (1, 2), (2, 3), (3, 0)]


def subsets(n):
    return itertools.chain.from_iterable(itertools.combinations(range(n), k) for k in range(n + 1))


def is_independent_set(edges, s):
    return not any(u in s and v in s for u, v in edges)


def non_separating(n, edges, s):
    rest = frozenset(range(n)) - set(s)
    return is_connected_vertex_cover(n, edges, rest) if rest else False


@st.composite
def bipartite(draw):
    left, right = draw(st.integers(1, 3)), draw(st.integers(1, 3))
    n = left + right
    edges = draw(st.lists(st.tuples(st.integers(0, left - 1), st.integers(left, n - 1)), max_size=7))
    b = draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    return BipartiteInstance(n, range(left), edges, b)


@given(bipartite())
def test_b_matching_encoding(inst):
    m1, m2 = encode_b_matching(inst)
    for s in subsets(len(inst.edges)):
        assert is_common_independent(m1, m2, s) == inst.is_b_matching(s)


@given(st.integers(2, 5), st.data())
def test_colorful_forest_encoding(v, data):
    edges = data.draw(st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), max_size=7))
    colors = data.draw(st.lists(st.integers(0, 3), min_size=len(edges), max_size=len(edges)))
    g = ColoredGraph(v, edges, colors)
    m1, m2 = encode_colorful_forest(g)
    for s in subsets(len(edges)):
        assert is_common_independent(m1, m2, s) == g.is_colorful_forest(s)


@given(st.integers(1, 4), st.data())
def test_degree_constrained_encoding(v, data):
    arcs = data.draw(st.lists(st.tuples(st.integers(0, v - 1), st.integers(0, v - 1)), max_size=7))
    caps = st.lists(st.integers(0, 2), min_size=v, max_size=v)
    inst = DegreeConstrainedInstance(v, arcs, data.draw(caps), data.draw(caps))
    m1, m2 = encode_degree_constrained(inst)
    for s in subsets(len(arcs)):
        assert is_common_independent(m1, m2, s) == inst.is_degree_constrained(s)


def test_b_matching_enumeration():
    inst = BipartiteInstance(4, [0, 1], [(0, 2), (0, 3), (1, 2), (1, 3)], [1, 1, 1, 1])
    got = sorted(enumerate_large(*encode_b_matching(inst), 0))
    assert got == [(0, 3), (1, 2)]


def test_input_validation():
    with pytest.raises(InputError):
        BipartiteInstance(2, [0], [(0, 0)], [1, 1])
    with pytest.raises(InputError):
        ColoredGraph(2, [(0, 1)], [])
    with pytest.raises(InputError):
        enumerate_min_cvc(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] + [(0, 1)], 4).__next__()
    with pytest.raises(InputError):
        list(enumerate_min_cvc(4, [(0, 1), (2, 3)], 4))  # disconnected
    with pytest.raises(ContractError):
        list(enumerate_min_cvc(2, [(0, 1)], -1))


@pytest.mark.parametrize(
    "n, edges, tau, expect",
    [
        (4, P4, 4, [(1, 2)]),
        (4, [(0, 1), (0, 2), (0, 3)], 1, [(0,)]),
        (4, C4, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]),
        (4, C4, 2, []),
        (1, [], 0, [()]),
        (2, [(0, 1)], 1, [(0,), (1,)]),
    ],
)
def test_small_covers(n, edges, tau, expect):
    assert sorted(enumerate_min_cvc(n, edges, tau)) == expect


def test_gprime_shape():
    # K1,3: centre has degree three, leaves degree one
    inst = build_cvc_instance(4, [(0, 1), (0, 2), (0, 3)])
    c = inst.copies[0]
    assert inst.gprime_edges[0] == (c[0], c[1]) and inst.gprime_edges[1] == (c[1], c[2])
    leaf = inst.copies[1][0]
    assert inst.gprime_edges[2] == inst.gprime_edges[3] == (leaf, leaf)
    assert inst.gprime_vertices == 6 + 3
    assert len(inst.pair.edges) == 4 + 3


def test_single_edge_gadget_is_degenerate():
    # both endpoints become pairs of self-loops, so H matches both of them
    inst = build_cvc_instance(2, [(0, 1)])
    assert is_matching(inst.pair, [0, 1])
    assert sorted(enumerate_min_cvc(2, [(0, 1)], 2)) == [(0,), (1,)]


def test_ranked_covers_grow():
    cube = [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1]
    out = list(enumerate_min_cvc(8, cube, 8, ranked=True))
    assert [len(c) for c in out] == sorted(len(c) for c in out)
    assert sorted(out) == brute_min_cvc(8, cube, 8)


@pytest.mark.parametrize("seed", range(8))
def test_matching_independent_set_correspondence(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    edges = random_subcubic_graph(rng, n)
    inst = build_cvc_instance(n, edges)
    p = inst.pair
    matchings = set(brute_matchings(p, "all"))
    for m in matchings:
        # no matching uses an {e', e''} edge
        assert all(kind == "vertex" for kind, _ in inst.phi_set(m))
    for s in subsets(n):
        ok = is_independent_set(edges, s) and non_separating(n, edges, s)
        assert (tuple(sorted(s)) in matchings) == ok
        assert is_matching(p, s) == ok


@pytest.mark.parametrize("seed", range(6))
def test_maximality_correspondence(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(3, 8)
    edges = random_subcubic_graph(rng, n)
    inst = build_cvc_instance(n, edges)
    for m in brute_matchings(inst.pair, "all"):
        cover = frozenset(range(n)) - inst.vertex_set(m)
        minimal = is_connected_vertex_cover(n, edges, cover) and not any(
            is_connected_vertex_cover(n, edges, cover - {v}) for v in cover
        )
        assert is_maximal_matching(inst.pair, m) == minimal


@pytest.mark.parametrize("seed", range(5))
def test_random_subcubic_covers(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    edges = random_subcubic_graph(rng, n)
    for tau in range(n + 1):
        assert sorted(enumerate_min_cvc(n, edges, tau)) == brute_min_cvc(n, edges, tau)
