import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signed_paths.families import make, parse_family, path
from signed_paths.sgraph import (
    FilterReason,
    GraphError,
    are_switching_isomorphic,
    canonical_form,
    canonical_key,
    chordless_cycles,
    components,
    delete_vertex,
    disjoint_union,
    forest_normalize,
    from_edge_list,
    fundamental_cycle_signs,
    induced_subgraph,
    is_balanced,
    is_connected,
    loads_sg,
    dumps_sg,
    read_sg,
    structural_filter,
    switch,
    write_sg,
)

from conftest import random_signed_graph

C4_MINUS = from_edge_list(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, -1)])


def fam(s):
    return make(parse_family(s))


@st.composite
def signed_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(chosen), max_size=len(chosen)))
    return from_edge_list(n, [(u, v, s) for (u, v), s in zip(chosen, signs)])


def test_edges_are_normalized():
    g = from_edge_list(3, [(2, 1, -1), (1, 0, 1)])
    assert g.edges == ((0, 1, 1), (1, 2, -1))
    assert g.m == 2 and g.degrees() == [1, 2, 1]


@pytest.mark.parametrize("n, edges", [
    (3, [(0, 1, 1), (0, 1, -1)]),
    (3, [(1, 0, 1), (0, 1, 1)]),
    (2, [(0, 0, 1)]),
    (2, [(0, 2, 1)]),
    (2, [(0, 1, 2)]),
])
def test_bad_edge_lists(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_switch_single_cut_edge():
    p2 = path(2)
    assert switch(p2, {0}).edges == ((0, 1, -1),)
    with pytest.raises(GraphError):
        switch(p2, {5})


def test_switch_preserves_underlying_and_is_involution(rng):
    for _ in range(30):
        g = random_signed_graph(rng, rng.randint(2, 9))
        x = {v for v in range(g.n) if rng.random() < 0.5}
        h = switch(g, x)
        assert h.underlying() == g.underlying()
        assert switch(h, x) == g


def test_components_and_union():
    u = disjoint_union([path(3), C4_MINUS, path(1)])
    assert u.n == 8 and not is_connected(u)
    parts = components(u)
    assert [c.n for c in parts] == [1, 3, 4]
    assert canonical_key(parts[2]) == canonical_key(C4_MINUS)
    assert induced_subgraph(u, [3, 4, 5]).edges == ((0, 1, 1), (1, 2, 1))
    assert delete_vertex(path(4), 0) == path(3)


def test_balance():
    assert is_balanced(fam("C:6"))
    assert not is_balanced(C4_MINUS)
    assert is_balanced(path(7))
    signs = fundamental_cycle_signs(C4_MINUS)
    assert len(signs) == 1 and signs[0][1] == -1


def test_forest_normalize_makes_tree_edges_positive(rng):
    for _ in range(20):
        g = random_signed_graph(rng, rng.randint(2, 9))
        h = forest_normalize(g)
        assert h.underlying() == g.underlying()
        assert are_switching_isomorphic(g, h) is not None
        assert fundamental_cycle_signs(h) == fundamental_cycle_signs(g)


def test_switchiso_examples():
    assert are_switching_isomorphic(path(2), switch(path(2), {0})) is not None
    assert are_switching_isomorphic(fam("C:4"), C4_MINUS) is None
    assert are_switching_isomorphic(path(4), fam("S:3")) is None
    w = are_switching_isomorphic(C4_MINUS, fam("C-:4"))
    assert w is not None and w.check(C4_MINUS, fam("C-:4"))


def test_cospectral_but_not_switching_isomorphic():
    # the two mates of P_14 share a charpoly yet differ
    from signed_paths.dscheck import find_mates
    from signed_paths.enumeration import enumerate_catalog

    mates = find_mates(14, enumerate_catalog(13))
    big = [max(c.components, key=lambda g: g.n) for c in mates]
    assert len(big) == 2
    assert are_switching_isomorphic(big[0], big[1]) is None


def test_canonical_key_examples():
    assert canonical_key(path(2)) == canonical_key(switch(path(2), {1}))
    assert canonical_key(fam("C:4")) != canonical_key(C4_MINUS)
    key, rep = canonical_form(fam("H:2"))
    assert canonical_key(rep) == key


def test_canonical_key_random_relabel_switch(rng):
    for _ in range(100):
        g = random_signed_graph(rng, rng.randint(1, 9))
        perm = list(range(g.n))
        rng.shuffle(perm)
        x = {v for v in range(g.n) if rng.random() < 0.5}
        assert canonical_key(switch(g.relabel(perm), x)) == canonical_key(g)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(), signed_graphs())
def test_key_equality_matches_switchiso(g, h):
    same_key = canonical_key(g) == canonical_key(h)
    w = are_switching_isomorphic(g, h)
    assert same_key == (w is not None)
    if w is not None:
        assert w.check(g, h)


def test_chordless_cycles():
    assert len(chordless_cycles(fam("C:6"))) == 1
    k4 = from_edge_list(4, [(u, v, 1) for u in range(4) for v in range(u + 1, 4)])
    assert len(chordless_cycles(k4)) == 4
    assert all(len(c) == 3 for c in chordless_cycles(k4))
    assert chordless_cycles(path(5)) == []


@pytest.mark.parametrize("text, reason", [
    ("P:6", FilterReason.NONE),
    ("H:3", FilterReason.NONE),
    ("C-:6", FilterReason.NONE),
    ("C:4", FilterReason.BALANCED_CYCLE),
    ("C-:3", FilterReason.ODD_CYCLE),
    ("C-:8", FilterReason.LONG_UNBALANCED_CYCLE),
    ("S:4", FilterReason.DEGREE),
])
def test_structural_filter(text, reason):
    v = structural_filter(fam(text))
    assert v.reason is reason
    assert v.passed == (reason is FilterReason.NONE)


def test_filter_allows_balanced_non_induced_cycle():
    # two unbalanced 4-cycles sharing an edge; the outer 6-cycle is balanced but has a chord
    g = loads_sg("sg 7\n0 6 +\n1 2 +\n1 4 +\n2 5 +\n3 4 +\n3 6 +\n4 5 -\n5 6 +\n")
    assert structural_filter(g).passed


def test_sg_roundtrip(tmp_path):
    g = fam("H:2:3")
    p = tmp_path / "h.sg"
    write_sg(g, p)
    assert read_sg(p) == g
    assert loads_sg("# comment\nsg 2\n0 1 -  # tail\n") == from_edge_list(2, [(0, 1, -1)])


@pytest.mark.parametrize("text", ["", "sg x\n", "graph 3\n", "sg 2\n0 1 *\n", "sg 2\n0 5 +\n", "sg 3\n0 1\n"])
def test_sg_errors(text):
    with pytest.raises(GraphError):
        loads_sg(text)


@settings(max_examples=40, deadline=None)
@given(signed_graphs())
def test_sg_text_roundtrip(g):
    assert loads_sg(dumps_sg(g)) == g
