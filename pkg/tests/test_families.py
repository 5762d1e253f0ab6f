import pytest

from rainbowconn import (
    GraphError,
    are_isomorphic,
    build_graph,
    diameter,
    is_bridgeless,
    is_mop,
    is_outerplanar,
    rc_exact,
    rc_oracle,
)
from rainbowconn.families import (
    MopConstruction,
    attach_vertex_to_adjacent_pair,
    bowtie,
    build_mop,
    complete,
    complete_bipartite,
    cycle,
    fan,
    path,
)


def test_basic_families():
    assert are_isomorphic(cycle(3), complete(3))
    assert cycle(5).m == 5
    assert complete(4).m == 6
    assert complete_bipartite(2, 3).m == 6
    assert path(1).n == 1 and path(1).m == 0
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        path(0)
    with pytest.raises(GraphError):
        complete_bipartite(0, 3)


def test_fan():
    assert are_isomorphic(fan(2), complete(3))
    assert fan(4).n == 5 and fan(4).m == 7
    assert diameter(fan(7)) == 2
    assert fan(5).degree(5) == 5  # hub is the last vertex
    with pytest.raises(GraphError):
        fan(1)


def test_fan_diameters():
    assert diameter(fan(2)) == 1
    assert diameter(fan(3)) == 2
    for n in range(4, 10):
        assert diameter(fan(n)) == 2


def test_build_mop_base_case():
    g = build_mop(MopConstruction(()))
    assert are_isomorphic(g, complete(3))


def test_build_mop_steps():
    k3d = build_mop(MopConstruction(((1, 2),)))
    assert are_isomorphic(k3d, attach_vertex_to_adjacent_pair(complete(3), 1, 2))
    f4 = build_mop(MopConstruction(((1, 2), (1, 3))))
    assert are_isomorphic(f4, fan(4))
    for g in (k3d, f4):
        assert is_mop(g)


def test_build_mop_rejects_non_face_edge():
    # after gluing onto (1, 2) that edge moves inside; reusing it must fail
    with pytest.raises(GraphError, match="outer face"):
        build_mop(MopConstruction(((1, 2), (1, 2))))
    with pytest.raises(GraphError, match="outer face"):
        build_mop(MopConstruction(((0, 3),)))


def test_attach_vertex_to_adjacent_pair():
    house = attach_vertex_to_adjacent_pair(cycle(4), 0, 1)
    assert house.n == 5 and house.m == 6
    assert is_outerplanar(house) and diameter(house) == 2
    assert rc_exact(house).rc == 2
    # a second vertex on an edge sharing an endpoint keeps diameter 2;
    # the opposite edge would push it to 3
    bigger = attach_vertex_to_adjacent_pair(house, 1, 2)
    assert diameter(bigger) == 2 and is_outerplanar(bigger)
    assert rc_exact(bigger).rc == 2
    opposite = attach_vertex_to_adjacent_pair(house, 2, 3)
    assert diameter(opposite) == 3 and is_outerplanar(opposite)
    assert are_isomorphic(
        attach_vertex_to_adjacent_pair(complete(3), 1, 2),
        build_mop(MopConstruction(((1, 2),))),
    )
    with pytest.raises(GraphError, match="not an edge"):
        attach_vertex_to_adjacent_pair(cycle(4), 0, 2)


def test_bowtie():
    b = bowtie()
    assert b.n == 5 and b.m == 6
    assert is_bridgeless(b)
    assert is_outerplanar(b)
    assert diameter(b) == 2
    assert rc_oracle(b) == 2


def test_fans_are_mops():
    for n in range(2, 10):
        g = fan(n)
        assert is_outerplanar(g)
        assert is_mop(g)
