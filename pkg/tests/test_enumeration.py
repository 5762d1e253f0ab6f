import pytest

from rainbowconn import (
    EnumerationStream,
    GraphError,
    are_isomorphic,
    canonical_code,
    diameter,
    is_bridgeless,
    is_connected,
    is_two_connected,
    enumerate_bridgeless_outerplanar,
    enumerate_labeled_oracle,
    enumerate_two_connected_outerplanar,
    filter_stream,
)
from rainbowconn.enumeration import ChordSet, chords_cross
from rainbowconn.families import bowtie, complete, cycle, fan
from rainbowconn.recognition import is_outerplanar


def codes(graphs):
    return {canonical_code(g).data for g in graphs}


def test_chords_cross():
    assert chords_cross((0, 2), (1, 3))
    assert not chords_cross((0, 2), (2, 4))
    assert not chords_cross((0, 2), (3, 5))
    assert chords_cross((1, 4), (2, 5))


def test_chord_set_validation():
    ChordSet(5, frozenset({(0, 2), (0, 3)}))
    with pytest.raises(GraphError, match="cross"):
        ChordSet(5, frozenset({(0, 2), (1, 3)}))
    with pytest.raises(GraphError, match="not a chord"):
        ChordSet(5, frozenset({(0, 1)}))
    g = ChordSet(5, frozenset({(0, 2)})).graph()
    assert g.m == 6 and is_outerplanar(g)


def test_two_connected_small_counts():
    only = list(enumerate_two_connected_outerplanar(3))
    assert len(only) == 1 and are_isomorphic(only[0], complete(3))
    four = list(enumerate_two_connected_outerplanar(4))
    assert len(four) == 2  # C4 and C4 plus one chord; both diagonals make K4


def test_two_connected_count_matches_oracle_at_5():
    generated = codes(enumerate_two_connected_outerplanar(5))
    oracle = codes(
        enumerate_labeled_oracle(
            5, lambda g: is_two_connected(g) and is_outerplanar(g)
        )
    )
    assert generated == oracle


def test_bridgeless_includes_bowtie_and_k3():
    assert canonical_code(bowtie()).data in codes(enumerate_bridgeless_outerplanar(5))
    three = list(enumerate_bridgeless_outerplanar(3))
    assert len(three) == 1 and are_isomorphic(three[0], complete(3))


def test_bridgeless_yield_contract():
    for n in range(3, 7):
        for g in enumerate_bridgeless_outerplanar(n):
            assert g.n == n
            assert is_bridgeless(g)
            assert is_outerplanar(g)


def test_two_connected_yield_contract():
    for n in range(3, 8):
        for g in enumerate_two_connected_outerplanar(n):
            assert is_two_connected(g)
            assert is_outerplanar(g)


def test_dedup_exactness():
    for n in range(3, 8):
        seen = set()
        for g in enumerate_bridgeless_outerplanar(n):
            code = canonical_code(g).data
            assert code not in seen
            seen.add(code)


def test_labeled_oracle_counts():
    assert len(list(enumerate_labeled_oracle(4, is_connected))) == 6
    assert len(list(enumerate_labeled_oracle(3, is_connected))) == 2
    with pytest.raises(GraphError, match="capped"):
        list(enumerate_labeled_oracle(8, is_connected))


def test_cross_validation_n5_n6():
    pred = lambda g: is_bridgeless(g) and is_outerplanar(g)  # noqa: E731
    for n in (5, 6):
        assert codes(enumerate_labeled_oracle(n, pred)) == codes(
            enumerate_bridgeless_outerplanar(n)
        )


def test_filter_stream():
    g52 = list(filter_stream(enumerate_bridgeless_outerplanar(5), 2))
    wanted = codes([cycle(5), bowtie()])
    assert wanted <= codes(g52)
    g63 = codes(filter_stream(enumerate_bridgeless_outerplanar(6), 3))
    assert canonical_code(cycle(6)).data in g63
    assert list(filter_stream(enumerate_bridgeless_outerplanar(3), 2)) == []


def test_enumeration_stream_dispatch():
    assert len(list(EnumerationStream(3, "mop"))) == 1
    mops = list(EnumerationStream(6, "mop"))
    assert all(g.m == 2 * g.n - 3 for g in mops)
    assert codes(EnumerationStream(5, "bridgeless-outerplanar", diameter=2)) == codes(
        filter_stream(enumerate_bridgeless_outerplanar(5), 2)
    )
    with pytest.raises(GraphError, match="capped"):
        list(EnumerationStream(11, "bridgeless-outerplanar"))
    with pytest.raises(GraphError, match="capped"):
        list(EnumerationStream(8, "outerplanar"))
    with pytest.raises(GraphError, match="unknown"):
        list(EnumerationStream(5, "chordal"))


def test_enumeration_stream_raw_mode():
    dedup = list(EnumerationStream(5, "bridgeless-outerplanar"))
    raw = list(EnumerationStream(5, "bridgeless-outerplanar", deduped=False))
    assert len(raw) > len(dedup)
    assert codes(raw) == codes(dedup)


def test_stream_order_is_canonical():
    for n in (5, 6):
        got = [canonical_code(g).data for g in enumerate_bridgeless_outerplanar(n)]
        assert got == sorted(got)


def test_fan7_is_enumerated_at_8():
    assert canonical_code(fan(7)).data in codes(enumerate_bridgeless_outerplanar(8))
