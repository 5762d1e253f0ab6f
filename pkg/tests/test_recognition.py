import pytest

from rainbowconn import (
    GraphError,
    MinorWitness,
    build_graph,
    find_k4_minor,
    find_k23_minor,
    hamiltonian_cycles,
    is_mop,
    is_outerplanar,
    join,
    outer_cycle,
    validate_witness,
)
from rainbowconn.families import (
    attach_vertex_to_adjacent_pair,
    bowtie,
    complete,
    complete_bipartite,
    cycle,
    fan,
    path,
)


def test_k4_on_k4_gives_singleton_witness():
    w = find_k4_minor(complete(4))
    assert w is not None and w.pattern == "K4"
    assert sorted(map(sorted, w.branch_sets)) == [[0], [1], [2], [3]]


def test_k4_absent_on_cycles_and_fans():
    assert find_k4_minor(cycle(6)) is None
    for k in range(2, 10):
        assert find_k4_minor(fan(k)) is None


def test_k4_present_on_wheel():
    wheel = join(cycle(5), build_graph(1, []))
    w = find_k4_minor(wheel)
    assert w is not None
    validate_witness(wheel, w)


def test_k23_on_k23_gives_singleton_witness():
    w = find_k23_minor(complete_bipartite(2, 3))
    assert w is not None and w.pattern == "K2,3"
    assert sorted(map(sorted, w.branch_sets)) == [[0], [1], [2], [3], [4]]


def test_k23_present_when_vertex_sees_three_of_c4():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 0), (4, 1), (4, 2)])
    w = find_k23_minor(g)
    assert w is not None
    validate_witness(g, w)


def test_k23_absent_on_fans():
    for k in range(2, 10):
        assert find_k23_minor(fan(k)) is None


def test_minor_search_handles_subdivisions():
    # subdivide every edge of K4: no K4 subgraph survives, the minor does
    base = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    edges, nxt = [], 4
    for u, v in base:
        edges += [(u, nxt), (v, nxt)]
        nxt += 1
    g = build_graph(10, edges)
    w = find_k4_minor(g)
    assert w is not None
    validate_witness(g, w)
    assert any(len(s) > 1 for s in w.branch_sets)


def test_is_outerplanar():
    assert not is_outerplanar(complete(4))
    assert not is_outerplanar(complete_bipartite(2, 3))
    assert is_outerplanar(bowtie())
    house = attach_vertex_to_adjacent_pair(cycle(4), 0, 1)
    assert is_outerplanar(house)
    assert is_outerplanar(build_graph(1, []))
    # disconnected graphs are judged component-wise by the same searches
    two_triangles = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert is_outerplanar(two_triangles)


def test_is_mop():
    assert is_mop(complete(3))
    assert not is_mop(cycle(4))
    assert is_mop(fan(4))
    assert not is_mop(path(3))
    assert not is_mop(build_graph(2, [(0, 1)]))


def test_outer_cycle():
    assert outer_cycle(cycle(5)) == (0, 1, 2, 3, 4)
    f4 = fan(4)
    oc = outer_cycle(f4)
    assert oc is not None and len(oc) == 5 and oc[0] == 0
    assert outer_cycle(bowtie()) is None
    assert outer_cycle(path(3)) is None
    assert outer_cycle(complete(4)) is None  # 2-connected but not outerplanar


def test_hamiltonian_cycles_unique_on_outerplanar():
    for g in [cycle(5), fan(4), fan(6)]:
        assert len(hamiltonian_cycles(g)) == 1
    assert len(hamiltonian_cycles(complete(4))) == 3


def test_witness_validation_rejects_tampering():
    g = complete(4)
    w = find_k4_minor(g)
    bad_overlap = MinorWitness("K4", (frozenset({0}), frozenset({0}),
                                      frozenset({2}), frozenset({3})))
    with pytest.raises(GraphError, match="overlap"):
        validate_witness(g, bad_overlap)
    c6 = cycle(6)
    disconnected_set = MinorWitness(
        "K4", (frozenset({0, 3}), frozenset({1}), frozenset({2}), frozenset({4}))
    )
    with pytest.raises(GraphError, match="not connected"):
        validate_witness(c6, disconnected_set)
    missing_link = MinorWitness(
        "K4", (frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3}))
    )
    with pytest.raises(GraphError, match="link"):
        validate_witness(c6, missing_link)
    assert w is not None  # original witness untouched and valid
    validate_witness(g, w)
