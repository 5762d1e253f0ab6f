"""Small simple undirected graphs and exact structural primitives.

Vertices are integers ``0..n-1`` with a hard cap of 16, so vertex subsets fit
into machine-word bitmasks. Graph values are immutable after construction and
every operation in this module is a pure function of its inputs. Unreachable
distances are reported as ``math.inf`` -- an explicit marker, never a large
integer folded silently into arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 16


class GraphError(ValueError):
    """Malformed graph construction or invalid operation input."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; trusts its inputs (see :func:`build_graph`).

    ``edges`` must be a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj_bits: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        object.__setattr__(self, "adj_bits", tuple(bits))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_iter_bits(b)) for b in self.adj_bits)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_bits[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj_bits[v].bit_count()

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.has_edge(u, v)
        ]


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Validate and build a graph; rejects loops, duplicates, bad endpoints."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds the cap of {MAX_VERTICES}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise GraphError(f"loop at vertex {u} is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(sorted(edges)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex permutation ``perm`` (old label -> new label)."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of 0..n-1")
    edges = []
    for u, v in g.edges:
        a, b = perm[u], perm[v]
        edges.append((a, b) if a < b else (b, a))
    return Graph(g.n, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# metrics

def distances_from(g: Graph, v: int) -> list[int | float]:
    """Breadth-first hop counts from ``v``; ``math.inf`` marks unreachable."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")
    dist: list[int | float] = [math.inf] * g.n
    dist[v] = 0
    seen = frontier = 1 << v
    d = 0
    while frontier:
        nxt = 0
        for u in _iter_bits(frontier):
            nxt |= g.adj_bits[u]
        nxt &= ~seen
        d += 1
        for u in _iter_bits(nxt):
            dist[u] = d
        seen |= nxt
        frontier = nxt
    return dist


def _component_mask(g: Graph, start: int) -> int:
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in _iter_bits(frontier):
            nxt |= g.adj_bits[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return _component_mask(g, 0) == (1 << g.n) - 1


def components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, in min-vertex order."""
    todo = (1 << g.n) - 1
    out = []
    while todo:
        start = (todo & -todo).bit_length() - 1
        comp = _component_mask(g, start)
        out.append(comp)
        todo &= ~comp
    return out


def eccentricity(g: Graph, v: int) -> int | float:
    return max(distances_from(g, v))


def diameter(g: Graph) -> int | float:
    """Largest distance over all vertex pairs; ``math.inf`` if disconnected."""
    return max(eccentricity(g, v) for v in range(g.n))


def radius(g: Graph) -> int | float:
    return min(eccentricity(g, v) for v in range(g.n))


# ---------------------------------------------------------------------------
# bridges and blocks

def bridges(g: Graph) -> set[tuple[int, int]]:
    """Edges whose removal disconnects their component (lowpoint DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[tuple[int, int]] = set()
    counter = 0

    def dfs(u: int, parent: int) -> None:
        nonlocal counter
        disc[u] = low[u] = counter
        counter += 1
        for w in _iter_bits(g.adj_bits[u]):
            if disc[w] == -1:
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] > disc[u]:
                    out.add((u, w) if u < w else (w, u))
            elif w != parent:
                low[u] = min(low[u], disc[w])

    for v in range(g.n):
        if disc[v] == -1:
            dfs(v, -1)
    return out


def is_bridgeless(g: Graph) -> bool:
    """Connected with no cut-edge; the single-vertex graph counts as such."""
    if g.n == 1:
        return True
    # connected graphs on n >= 2 vertices need m >= n to avoid tree edges,
    # and every vertex must lie on a cycle, so minimum degree >= 2
    if g.m < g.n:
        return False
    if any(b.bit_count() < 2 for b in g.adj_bits):
        return False
    if not is_connected(g):
        return False
    return not bridges(g)


@dataclass(frozen=True)
class BlockDecomposition:
    cut_vertices: frozenset[int]
    blocks: tuple[frozenset[int], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Cut vertices plus blocks (maximal 2-connected subgraphs or bridges)."""
    if not is_connected(g):
        raise GraphError("block decomposition requires a connected graph")
    if g.n == 1:
        return BlockDecomposition(frozenset(), (frozenset({0}),))

    disc = [-1] * g.n
    low = [0] * g.n
    stack: list[tuple[int, int]] = []
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    counter = 0

    def pop_block(u: int, w: int) -> None:
        verts: set[int] = set()
        while True:
            e = stack.pop()
            verts.update(e)
            if e == (u, w):
                break
        blocks.append(frozenset(verts))

    def dfs(u: int, parent: int) -> None:
        nonlocal counter
        disc[u] = low[u] = counter
        counter += 1
        children = 0
        for w in _iter_bits(g.adj_bits[u]):
            if disc[w] == -1:
                children += 1
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent != -1 or children > 1:
                        cuts.add(u)
                    pop_block(u, w)
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    dfs(0, -1)
    if stack:  # remaining edges of the root's last block
        verts: set[int] = set()
        while stack:
            verts.update(stack.pop())
        blocks.append(frozenset(verts))
    blocks.sort(key=lambda b: tuple(sorted(b)))
    return BlockDecomposition(frozenset(cuts), tuple(blocks))


def is_two_connected(g: Graph) -> bool:
    """Connected, n >= 3, and without cut vertices."""
    if g.n < 3 or not is_connected(g):
        return False
    return not block_decomposition(g).cut_vertices


# ---------------------------------------------------------------------------
# join

def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(
            f"join order {g.n + h.n} exceeds the cap of {MAX_VERTICES}"
        )
    edges = list(g.edges)
    edges.extend((u + g.n, v + g.n) for u, v in h.edges)
    edges.extend((u, v + g.n) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, tuple(sorted(edges)))


# ---------------------------------------------------------------------------
# canonical form

@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-complete byte string; equal codes iff isomorphic graphs."""

    order: int
    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def canonical_code(g: Graph) -> CanonicalCode:
    """Maximize the packed adjacency bit string over all vertex orders.

    Exhaustive branch-and-bound: candidates at each position are sorted by
    their adjacency row toward already-placed vertices (degree breaking
    ties), branches that cannot reach the current best prefix are cut, and
    interchangeable twin vertices are explored once. Exact for n <= 16.
    """
    n = g.n
    adj = g.adj_bits
    if n == 1:
        return CanonicalCode(1, bytes([1]))

    deg = [adj[v].bit_count() for v in range(n)]
    # twins[v]: vertices whose transposition with v is an automorphism
    twins = [0] * n
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            if au & ~(1 << v) == adj[v] & ~(1 << u):
                twins[u] |= 1 << v
                twins[v] |= 1 << u

    best = [-1] * n
    rowval = [0] * n  # adjacency row of each vertex toward placed prefix
    unused = list(range(n))

    def dfs(depth: int) -> None:
        if depth == n:
            return
        cand = sorted(
            (-((rowval[v] << 4) | deg[v]), v) for v in unused
        )
        tried_mask = 0
        for key, v in cand:
            row = rowval[v]
            if row < best[depth]:
                break
            if twins[v] & tried_mask:
                continue
            if row > best[depth]:
                best[depth] = row
                for i in range(depth + 1, n):
                    best[i] = -1
            unused.remove(v)
            av = adj[v]
            for w in unused:
                rowval[w] = (rowval[w] << 1) | (av >> w & 1)
            dfs(depth + 1)
            for w in unused:
                rowval[w] >>= 1
            unused.append(v)
            tried_mask |= 1 << v

    dfs(0)
    acc = 0
    for d in range(1, n):
        acc = (acc << d) | best[d]
    nbits = n * (n - 1) // 2
    return CanonicalCode(n, bytes([n]) + acc.to_bytes((nbits + 7) // 8 or 1, "big"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_code(g) == canonical_code(h)
