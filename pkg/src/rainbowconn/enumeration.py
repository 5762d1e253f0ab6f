"""Exhaustive generation of small outerplanar graph classes up to isomorphism.

The structured generator builds every 2-connected outerplanar graph as the
outer cycle 0..n-1 plus a set of pairwise non-crossing chords, then forms
cut-vertex graphs by gluing 2-connected blocks at shared vertices
(over-generate, then dedupe by canonical code). A separate labeled-graph
oracle enumerates raw edge subsets with no structural assumptions; it exists
to cross-validate the generator's completeness and is capped at n <= 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .graphs import Graph, GraphError, canonical_code, diameter
from .recognition import is_mop, is_outerplanar

MAX_STRUCTURED_ORDER = 10
MAX_ORACLE_ORDER = 7


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Do two chords of a convex polygon cross in its interior?"""
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


@dataclass(frozen=True)
class ChordSet:
    """Pairwise non-crossing chords of the outer cycle 0..n-1."""

    n: int
    chords: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for u, v in self.chords:
            gap = (v - u) % self.n
            if u == v or gap in (1, self.n - 1):
                raise GraphError(f"({u}, {v}) is not a chord of the {self.n}-cycle")
        for a, b in combinations(sorted(self.chords), 2):
            if chords_cross(a, b):
                raise GraphError(f"chords {a} and {b} cross")

    def graph(self) -> Graph:
        edges = [(i, (i + 1) % self.n) for i in range(self.n)]
        edges.extend(self.chords)
        edges = [(u, v) if u < v else (v, u) for u, v in edges]
        return Graph(self.n, tuple(sorted(edges)))


def _diagonals(n: int) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(n)
        for j in range(i + 2, n)
        if not (i == 0 and j == n - 1)
    ]


def _noncrossing_subsets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    diags = _diagonals(n)
    d = len(diags)
    compatible = [
        sum(
            1 << j
            for j in range(d)
            if j != i and not chords_cross(diags[i], diags[j])
        )
        for i in range(d)
    ]
    chosen: list[int] = []

    def rec(start: int, allowed: int) -> Iterator[tuple[tuple[int, int], ...]]:
        yield tuple(diags[i] for i in chosen)
        for i in range(start, d):
            if allowed >> i & 1:
                chosen.append(i)
                yield from rec(i + 1, allowed & compatible[i])
                chosen.pop()

    yield from rec(0, (1 << d) - 1)


def _raw_two_connected(n: int) -> Iterator[Graph]:
    for chords in _noncrossing_subsets(n):
        yield ChordSet(n, frozenset(chords)).graph()


@lru_cache(maxsize=None)
def _two_connected_catalog(n: int) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for g in _raw_two_connected(n):
        code = canonical_code(g).data
        if code not in seen:
            seen[code] = g
    return tuple(g for _, g in sorted(seen.items()))


def _glue(h: Graph, b: Graph, at_h: int, at_b: int) -> Graph:
    """Identify vertex ``at_b`` of ``b`` with vertex ``at_h`` of ``h``."""
    relabeled = {}
    nxt = h.n
    for v in range(b.n):
        if v == at_b:
            relabeled[v] = at_h
        else:
            relabeled[v] = nxt
            nxt += 1
    edges = list(h.edges)
    for u, v in b.edges:
        a, c = relabeled[u], relabeled[v]
        edges.append((a, c) if a < c else (c, a))
    return Graph(h.n + b.n - 1, tuple(sorted(edges)))


def _raw_bridgeless(n: int) -> Iterator[Graph]:
    yield from _raw_two_connected(n)
    # every graph with a cut vertex is a leaf block glued onto a smaller
    # bridgeless outerplanar graph; blocks have >= 3 vertices, so no bridges
    for b_order in range(3, n - 1):
        rest = n - b_order + 1
        for host in _bridgeless_catalog(rest):
            for block in _two_connected_catalog(b_order):
                for at_h in range(host.n):
                    for at_b in range(block.n):
                        yield _glue(host, block, at_h, at_b)


@lru_cache(maxsize=None)
def _bridgeless_catalog(n: int) -> tuple[Graph, ...]:
    seen: dict[bytes, Graph] = {}
    for g in _raw_bridgeless(n):
        code = canonical_code(g).data
        if code not in seen:
            seen[code] = g
    return tuple(g for _, g in sorted(seen.items()))


def enumerate_two_connected_outerplanar(n: int) -> Iterator[Graph]:
    """Every 2-connected outerplanar graph of order n, one per isomorphism
    class, in canonical-code order."""
    if n < 3:
        raise GraphError(f"2-connected graphs need n >= 3, got {n}")
    if n > MAX_STRUCTURED_ORDER:
        raise GraphError(
            f"enumeration is capped at n <= {MAX_STRUCTURED_ORDER}, got {n}"
        )
    yield from _two_connected_catalog(n)


def enumerate_bridgeless_outerplanar(n: int) -> Iterator[Graph]:
    """Every bridgeless outerplanar graph of order n (2-connected and
    cut-vertex classes alike), one per isomorphism class, in code order."""
    if n < 3:
        raise GraphError(f"bridgeless outerplanar classes need n >= 3, got {n}")
    if n > MAX_STRUCTURED_ORDER:
        raise GraphError(
            f"enumeration is capped at n <= {MAX_STRUCTURED_ORDER}, got {n}"
        )
    yield from _bridgeless_catalog(n)


def _raw_labeled(n: int, predicate: Callable[[Graph], bool]) -> Iterator[Graph]:
    all_edges = list(combinations(range(n), 2))
    for mask in range(1 << len(all_edges)):
        edges = []
        rem = mask
        while rem:
            low = rem & -rem
            edges.append(all_edges[low.bit_length() - 1])
            rem ^= low
        g = Graph(n, tuple(edges))
        if predicate(g):
            yield g


def enumerate_labeled_oracle(
    n: int, predicate: Callable[[Graph], bool]
) -> Iterator[Graph]:
    """Iterate every edge subset of K_n in lexicographic order, filter by the
    predicate, and dedupe by canonical code. No structural assumptions."""
    if n < 1:
        raise GraphError(f"oracle needs n >= 1, got {n}")
    if n > MAX_ORACLE_ORDER:
        raise GraphError(
            f"labeled oracle is capped at n <= {MAX_ORACLE_ORDER}, got {n}"
        )
    seen: set[bytes] = set()
    for g in _raw_labeled(n, predicate):
        code = canonical_code(g).data
        if code not in seen:
            seen.add(code)
            yield g


def filter_stream(stream: Iterable[Graph], diam: int) -> Iterator[Graph]:
    """Only the graphs whose diameter is exactly ``diam``."""
    return (g for g in stream if diameter(g) == diam)


GRAPH_CLASSES = ("all", "outerplanar", "bridgeless-outerplanar", "mop")


@dataclass(frozen=True)
class EnumerationStream:
    """Configured graph stream: order, class filter, optional diameter
    filter; deduped streams yield one graph per isomorphism class."""

    order: int
    graph_class: str = "bridgeless-outerplanar"
    diameter: int | None = None
    deduped: bool = True

    def max_order(self) -> int:
        if self.graph_class in ("all", "outerplanar"):
            return MAX_ORACLE_ORDER
        return MAX_STRUCTURED_ORDER

    def __iter__(self) -> Iterator[Graph]:
        if self.graph_class not in GRAPH_CLASSES:
            raise GraphError(f"unknown graph class {self.graph_class!r}")
        if self.order > self.max_order():
            raise GraphError(
                f"class {self.graph_class!r} is capped at "
                f"n <= {self.max_order()}, got {self.order}"
            )
        stream = self._base_stream()
        if self.diameter is not None:
            stream = filter_stream(stream, self.diameter)
        return stream

    def _base_stream(self) -> Iterator[Graph]:
        from .graphs import is_connected

        cls = self.graph_class
        if cls == "all":
            pred = is_connected
        elif cls == "outerplanar":
            pred = lambda g: is_connected(g) and is_outerplanar(g)  # noqa: E731
        if cls in ("all", "outerplanar"):
            if self.deduped:
                return enumerate_labeled_oracle(self.order, pred)
            return _raw_labeled(self.order, pred)
        if cls == "mop":
            base = (
                enumerate_two_connected_outerplanar(self.order)
                if self.deduped
                else _raw_two_connected(self.order)
            )
            return (g for g in base if is_mop(g))
        if self.deduped:
            return enumerate_bridgeless_outerplanar(self.order)
        return _raw_bridgeless(self.order)
