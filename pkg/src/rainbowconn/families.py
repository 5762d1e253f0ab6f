"""Constructors for the named graph families used as fixtures and inputs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, build_graph, join


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError(f"complete bipartite needs both sides >= 1, got {s}, {t}")
    return build_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def fan(n: int) -> Graph:
    """Path on n vertices joined with a single hub; the hub gets label n."""
    if n < 2:
        raise GraphError(f"fan needs n >= 2, got {n}")
    return join(path(n), build_graph(1, []))


def bowtie() -> Graph:
    """Two triangles sharing vertex 0: bridgeless, outerplanar, diameter 2."""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


@dataclass(frozen=True)
class MopConstruction:
    """Recipe: start from the triangle, then for each step glue a new vertex
    onto an edge currently on the outer face. Step i creates vertex 3 + i."""

    steps: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, steps: Iterable[Sequence[int]]) -> "MopConstruction":
        return cls(tuple((s[0], s[1]) for s in steps))


def build_mop(construction: MopConstruction) -> Graph:
    """Run the construction, tracking the outer cycle explicitly so that each
    step's edge can be checked for outer-face membership without embedding."""
    outer = [0, 1, 2]
    edges: list[tuple[int, int]] = [(0, 1), (0, 2), (1, 2)]
    for i, (u, v) in enumerate(construction.steps):
        w = 3 + i
        pos = None
        for p in range(len(outer)):
            a, b = outer[p], outer[(p + 1) % len(outer)]
            if {a, b} == {u, v}:
                pos = p
                break
        if pos is None:
            raise GraphError(
                f"step {i}: edge ({u}, {v}) is not on the current outer face"
            )
        edges.append((u, w) if u < w else (w, u))
        edges.append((v, w) if v < w else (w, v))
        outer.insert(pos + 1, w)
    return build_graph(3 + len(construction.steps), edges)


def attach_vertex_to_adjacent_pair(g: Graph, u: int, v: int) -> Graph:
    """Add one new vertex adjacent to exactly the adjacent pair ``u, v``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    w = g.n
    return build_graph(g.n + 1, list(g.edges) + [(u, w), (v, w)])
