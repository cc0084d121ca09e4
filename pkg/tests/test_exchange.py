import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroidenum.exchange import (
    SINK,
    SOURCE,
    AugmentingPath,
    augment,
    build_exchange_digraph,
    complete_to_maximal,
    is_common_independent,
    is_maximal,
    maximum_common_independent_set,
    shortest_augmenting_path,
)
from matroidenum.instances import sample_pair, to_ids, to_labels
from matroidenum.matroids import ContractError, FreeMatroid, UniformMatroid
from matroidenum.reference import brute_common_independent
from strategies import matroid_pair


def common_independent_sets(m1, m2):
    return brute_common_independent(m1, m2, "all")


def labelled(arcs):
    def lab(v):
        return v if isinstance(v, str) else v + 1

    return {(lab(u), lab(v)) for u, v in arcs}


def test_sample_digraph_defined_arcs():
    m1, m2 = sample_pair()
    d = build_exchange_digraph(m1, m2, to_ids({1, 2, 3}))
    # the ten arcs that follow from the listed bases
    assert labelled(d.arcs) == {
        ("s", 4), ("s", 5), (4, 1), (5, 2), (5, 3),
        (2, 6), (3, 6), (3, 7), (6, "t"), (7, "t"),
    }


def test_sample_path_and_augmentation():
    m1, m2 = sample_pair()
    i = to_ids({1, 2, 3})
    p = shortest_augmenting_path(build_exchange_digraph(m1, m2, i))
    assert [v if isinstance(v, str) else v + 1 for v in p.vertices] == ["s", 5, 2, 6, "t"]
    grown = augment(i, p)
    assert to_labels(grown) == (1, 3, 5, 6)
    assert is_common_independent(m1, m2, grown)


def test_sample_maximum_has_four_elements():
    assert len(maximum_common_independent_set(*sample_pair())) == 4


def test_single_free_element():
    f = FreeMatroid(1)
    d = build_exchange_digraph(f, f, [])
    assert d.arcs == {(SOURCE, 0), (0, SINK)}
    p = shortest_augmenting_path(d)
    assert p.vertices == (SOURCE, 0, SINK)
    assert augment([], p) == {0}


def test_no_source_arcs_means_no_path():
    u = UniformMatroid(3, 0)
    d = build_exchange_digraph(u, FreeMatroid(3), [])
    assert not d.a3
    assert shortest_augmenting_path(d) is None
    assert maximum_common_independent_set(u, u) == frozenset()


def test_rejects_dependent_input():
    u = UniformMatroid(3, 1)
    with pytest.raises(ContractError):
        build_exchange_digraph(u, u, [0, 1])
    with pytest.raises(ContractError):
        complete_to_maximal(u, u, [0, 1])


def test_completion_examples():
    f = FreeMatroid(3)
    assert complete_to_maximal(f, f, []) == {0, 1, 2}
    u = UniformMatroid(4, 2)
    assert complete_to_maximal(u, u, [1, 3]) == {1, 3}


def test_dot_dump_labels_arc_classes():
    m1, m2 = sample_pair()
    dot = build_exchange_digraph(m1, m2, to_ids({1, 2, 3})).to_dot()
    assert dot.startswith("digraph")
    assert '"s" -> "4" [label="A3"]' in dot
    assert '"1" -> "5" [label="A1"]' in dot  # ids are zero-based


@given(matroid_pair(hi=6), st.data())
def test_arcs_match_defining_predicates(pair, data):
    m1, m2 = pair
    i = frozenset(data.draw(st.sampled_from(common_independent_sets(m1, m2))))
    d = build_exchange_digraph(m1, m2, i)
    out = set(d.ground) - i
    a1 = {(e, f) for e in i for f in out if not m1.is_independent(i | {f}) and m1.is_independent((i | {f}) - {e})}
    a2 = {(f, e) for e in i for f in out if not m2.is_independent(i | {f}) and m2.is_independent((i | {f}) - {e})}
    a3 = {(SOURCE, f) for f in out if m1.is_independent(i | {f})}
    a4 = {(f, SINK) for f in out if m2.is_independent(i | {f})}
    assert (d.a1, d.a2, d.a3, d.a4) == (a1, a2, a3, a4)


@given(matroid_pair(hi=7), st.data())
def test_query_bound(pair, data):
    m1, m2 = pair
    i = data.draw(st.sampled_from(common_independent_sets(m1, m2)))
    before = m1.queries + m2.queries
    build_exchange_digraph(m1, m2, i)
    n = m1.n
    assert m1.queries + m2.queries - before <= 4 * n * n + 2 * n


def reachable(d):
    nodes = [SOURCE, *d.ground, SINK]
    reach = {u: {u} for u in nodes}
    for u, v in d.arcs:
        reach[u].add(v)
    for k in nodes:  # Warshall
        for u in nodes:
            if k in reach[u]:
                reach[u] |= reach[k]
    return SINK in reach[SOURCE]


@given(matroid_pair(hi=6), st.data())
def test_path_exists_iff_not_maximum(pair, data):
    m1, m2 = pair
    family = common_independent_sets(m1, m2)
    opt = max(len(s) for s in family)
    i = frozenset(data.draw(st.sampled_from(family)))
    d = build_exchange_digraph(m1, m2, i)
    p = shortest_augmenting_path(d)
    assert (p is not None) == reachable(d) == (len(i) < opt)
    if p is not None:
        arcs = d.arcs
        v = p.vertices
        assert all((v[k], v[k + 1]) in arcs for k in range(len(v) - 1))
        # shortest, hence no shortcuts
        assert not any((v[a], v[b]) in arcs for a, b in itertools.combinations(range(len(v)), 2) if b > a + 1)
        assert len(set(p.inner) & i) + 1 == len(set(p.inner) - i)
        grown = augment(i, p)
        assert len(grown) == len(i) + 1
        assert is_common_independent(m1, m2, grown)


@given(matroid_pair(hi=7))
def test_lawler_reaches_brute_force_optimum(pair):
    m1, m2 = pair
    best = maximum_common_independent_set(m1, m2)
    assert is_common_independent(m1, m2, best)
    assert len(best) == len(brute_common_independent(m1, m2, "maximum")[0])


@given(matroid_pair(hi=7), st.data())
def test_completion_is_maximal_and_idempotent(pair, data):
    m1, m2 = pair
    x = data.draw(st.sampled_from(common_independent_sets(m1, m2)))
    mu = complete_to_maximal(m1, m2, x)
    assert set(x) <= mu and is_maximal(m1, m2, mu)
    assert complete_to_maximal(m1, m2, mu) == mu


def test_augmenting_path_length():
    assert len(AugmentingPath((3, 1, 4))) == 5
