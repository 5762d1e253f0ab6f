"""Rainbow connectivity: coloring checks, an exact solver, and a brute oracle.

Two independent routes are kept deliberately separate. The solver
(:func:`exists_rainbow_coloring`, :func:`rc_exact`) backtracks over edge
colorings with symmetry breaking and sound pruning. The oracle
(:func:`rc_oracle`) enumerates every one of the k^m colorings and checks each
with the dynamic program over (vertex, used-color-set) states; it exists only
to validate the solver and is cost-guarded to m <= 10.

A rainbow path under k colors uses pairwise-distinct colors, hence has at
most k edges. The solver leans on this: for every non-adjacent vertex pair it
precomputes all simple paths of length <= k, and a partial coloring is pruned
exactly when some pair has no path left that could still become rainbow even
if every uncolored edge received a fresh color.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from .graphs import (
    Graph,
    GraphError,
    _iter_bits,
    bridges,
    diameter,
    distances_from,
    is_connected,
)

MAX_DP_COLORS = 16


class ColoringError(ValueError):
    """Coloring does not match its graph or violates its own invariants."""


@dataclass(frozen=True)
class EdgeColoring:
    """Colors, one per edge, aligned with the graph's sorted edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if len(self.colors) != len(self.edges):
            raise ColoringError(
                f"{len(self.colors)} colors for {len(self.edges)} edges"
            )
        if self.k < 1:
            raise ColoringError("k must be at least 1")
        for c in self.colors:
            if not 0 <= c < self.k:
                raise ColoringError(f"color {c} outside 0..{self.k - 1}")

    @classmethod
    def for_graph(
        cls,
        g: Graph,
        mapping: Mapping[tuple[int, int], int],
        k: int | None = None,
    ) -> "EdgeColoring":
        """Build from an edge->color map covering each edge exactly once."""
        canon: dict[tuple[int, int], int] = {}
        for (u, v), c in mapping.items():
            key = (u, v) if u < v else (v, u)
            if key in canon:
                raise ColoringError(f"edge {key} colored twice")
            canon[key] = c
        colors = []
        for e in g.edges:
            if e not in canon:
                raise ColoringError(f"edge {e} has no color")
            colors.append(canon.pop(e))
        if canon:
            raise ColoringError(f"colored pairs {sorted(canon)} are not edges")
        if k is None:
            k = max(colors) + 1 if colors else 1
        return cls(g.n, g.edges, tuple(colors), k)

    def color_of(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.colors[self.edges.index(key)]

    def distinct_colors(self) -> int:
        return len(set(self.colors))


def _require_match(g: Graph, c: EdgeColoring) -> None:
    if c.n != g.n or c.edges != g.edges:
        raise ColoringError("coloring refers to a different graph")


# ---------------------------------------------------------------------------
# rainbow reachability (checking a given coloring)

def _color_masks(g: Graph, colors: tuple[int, ...], k: int) -> list[list[int]]:
    adjc = [[0] * g.n for _ in range(k)]
    for idx, (u, v) in enumerate(g.edges):
        c = colors[idx]
        adjc[c][u] |= 1 << v
        adjc[c][v] |= 1 << u
    return adjc


def _reach_dense(
    adjc: list[list[int]], k: int, source: int, target: int
) -> int:
    """Vertices reachable from ``source`` by rainbow paths (bitmask DP over
    color subsets, ascending so every transition lands on a later state)."""
    reach = [0] * (1 << k)
    reach[0] = 1 << source
    seen = 1 << source
    for state in range(1 << k):
        rs = reach[state]
        if not rs:
            continue
        for c in range(k):
            if state >> c & 1:
                continue
            img = 0
            mask = rs
            ac = adjc[c]
            while mask:
                low = mask & -mask
                img |= ac[low.bit_length() - 1]
                mask ^= low
            img &= ~rs
            if img:
                nxt = state | (1 << c)
                add = img & ~reach[nxt]
                if add:
                    reach[nxt] |= add
                    seen |= add
                    if seen & target == target:
                        return seen
    return seen


def _reach_sparse(
    adjc: list[list[int]], k: int, source: int, target: int
) -> int:
    """Same reachability for k > 16: explicit frontier over sparse states."""
    seen_states: set[tuple[int, frozenset[int]]] = set()
    frontier: list[tuple[int, frozenset[int]]] = [(source, frozenset())]
    seen = 1 << source
    while frontier:
        nxt = []
        for v, used in frontier:
            for c in range(k):
                if c in used:
                    continue
                img = adjc[c][v]
                while img:
                    low = img & -img
                    w = low.bit_length() - 1
                    img ^= low
                    state = (w, used | {c})
                    if state in seen_states:
                        continue
                    seen_states.add(state)
                    nxt.append(state)
                    seen |= 1 << w
                    if seen & target == target:
                        return seen
        frontier = nxt
    return seen


def _rainbow_reach(g: Graph, c: EdgeColoring, source: int, target: int) -> int:
    # remap to the distinct colors actually used; rainbow connectivity is
    # invariant under injective renaming
    palette = sorted(set(c.colors))
    remap = {old: i for i, old in enumerate(palette)}
    colors = tuple(remap[x] for x in c.colors)
    k = len(palette)
    adjc = _color_masks(g, colors, k)
    if k <= MAX_DP_COLORS:
        return _reach_dense(adjc, k, source, target)
    return _reach_sparse(adjc, k, source, target)


def rainbow_path_exists(g: Graph, c: EdgeColoring, u: int, v: int) -> bool:
    """Is there a u-v path whose edge colors are pairwise distinct?"""
    _require_match(g, c)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range")
    if u == v:
        return True
    return bool(_rainbow_reach(g, c, u, 1 << v) >> v & 1)


def is_rainbow_connected(g: Graph, c: EdgeColoring) -> bool:
    _require_match(g, c)
    full = (1 << g.n) - 1
    for s in range(g.n - 1):
        want = full & ~((1 << (s + 1)) - 1)
        if _rainbow_reach(g, c, s, want) & want != want:
            return False
    return True


def check_coloring(
    g: Graph, c: EdgeColoring
) -> tuple[bool, list[tuple[int, int]]]:
    """Report rainbow connectivity plus the failing pairs in lex order."""
    _require_match(g, c)
    full = (1 << g.n) - 1
    failing: list[tuple[int, int]] = []
    for s in range(g.n - 1):
        want = full & ~((1 << (s + 1)) - 1)
        got = _rainbow_reach(g, c, s, want)
        for t in range(s + 1, g.n):
            if not got >> t & 1:
                failing.append((s, t))
    return (not failing, failing)


def _internal_rainbow_connected(
    g: Graph, colors: tuple[int, ...], k: int
) -> bool:
    """Check loop used by the oracle; colors must already be 0..k-1."""
    adjc = _color_masks(g, colors, k)
    full = (1 << g.n) - 1
    for s in range(g.n - 1):
        want = full & ~((1 << (s + 1)) - 1)
        if _reach_dense(adjc, k, s, want) & want != want:
            return False
    return True


# ---------------------------------------------------------------------------
# exact solver

def _paths_up_to(g: Graph, u: int, v: int, maxlen: int) -> list[tuple[int, ...]]:
    """All simple u-v paths with at most ``maxlen`` edges, as edge-id tuples."""
    edge_id = {e: i for i, e in enumerate(g.edges)}
    dist_v = distances_from(g, v)
    out: list[tuple[int, ...]] = []
    path_edges: list[int] = []
    visited = [False] * g.n
    visited[u] = True

    def walk(cur: int) -> None:
        if cur == v:
            out.append(tuple(path_edges))
            return
        if len(path_edges) + dist_v[cur] > maxlen:
            return
        for w in _iter_bits(g.adj_bits[cur]):
            if visited[w]:
                continue
            visited[w] = True
            key = (cur, w) if cur < w else (w, cur)
            path_edges.append(edge_id[key])
            walk(w)
            path_edges.pop()
            visited[w] = False

    walk(u)
    return out


def normalize_colors(colors: Iterable[int]) -> tuple[int, ...]:
    """Renumber colors by first appearance, the canonical representative of
    the injective-renaming class."""
    mapping: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping)
        out.append(mapping[c])
    return tuple(out)


def _identity_witness(g: Graph) -> EdgeColoring:
    m = g.m
    return EdgeColoring(g.n, g.edges, tuple(range(m)), max(1, m))


def exists_rainbow_coloring(g: Graph, k: int) -> EdgeColoring | None:
    """A rainbow-connecting coloring with at most ``k`` colors, or ``None``.

    Complete search. Symmetry reduction: color i may be introduced only once
    colors 0..i-1 already occur earlier in the assignment order. Pruning is
    sound: a branch dies only when some vertex pair has no surviving path
    even with all uncolored edges treated as fresh wildcard colors.
    """
    if not is_connected(g):
        raise GraphError("rainbow coloring search requires a connected graph")
    if k < 1:
        raise GraphError(f"color budget must be positive, got {k}")
    m = g.m
    if m == 0:
        return EdgeColoring(g.n, (), (), 1)
    if k >= m:
        return _identity_witness(g)

    paths: list[tuple[int, ...]] = []
    pair_of_path: list[int] = []
    alive: list[int] = []
    edge_paths: list[list[int]] = [[] for _ in range(m)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue  # a single edge is always a rainbow path
            plist = _paths_up_to(g, u, v, k)
            if not plist:
                return None
            pair_id = len(alive)
            alive.append(len(plist))
            for p in plist:
                pid = len(paths)
                paths.append(p)
                pair_of_path.append(pair_id)
                for e in p:
                    edge_paths[e].append(pid)

    # constrained edges first: edges lying on many candidate paths
    order = sorted(range(m), key=lambda e: (-len(edge_paths[e]), e))
    colors = [-1] * m
    dead = [False] * len(paths)

    def assign(e: int, c: int) -> tuple[list[int], bool]:
        killed: list[int] = []
        ok = True
        for pid in edge_paths[e]:
            if dead[pid]:
                continue
            for e2 in paths[pid]:
                if e2 != e and colors[e2] == c:
                    dead[pid] = True
                    killed.append(pid)
                    pr = pair_of_path[pid]
                    alive[pr] -= 1
                    if alive[pr] == 0:
                        ok = False
                    break
            if not ok:
                break
        return killed, ok

    def undo(killed: list[int]) -> None:
        for pid in killed:
            dead[pid] = False
            alive[pair_of_path[pid]] += 1

    def search(depth: int, used: int) -> bool:
        if depth == m:
            return True
        e = order[depth]
        for c in range(min(used + 1, k)):
            killed, ok = assign(e, c)
            if ok:
                colors[e] = c
                if search(depth + 1, used + (1 if c == used else 0)):
                    return True
                colors[e] = -1
            undo(killed)
        return False

    if not search(0, 0):
        return None
    normalized = normalize_colors(colors)
    return EdgeColoring(g.n, g.edges, normalized, max(normalized) + 1)


@dataclass(frozen=True)
class RcResult:
    rc: int
    witness: EdgeColoring


def rc_exact(g: Graph) -> RcResult:
    """Smallest color count that rainbow-connects ``g``, plus a witness.

    Starts at the sound lower bound max(1, diameter, bridge count) -- cut
    edges must all receive distinct colors -- and increments until the
    complete search succeeds; k = m always does.
    """
    if g.n < 2:
        raise GraphError("rc is defined for graphs with at least 2 vertices")
    if not is_connected(g):
        raise GraphError("rc is defined for connected graphs only")
    lb = max(1, int(diameter(g)), len(bridges(g)))
    for k in range(lb, g.m + 1):
        witness = exists_rainbow_coloring(g, k)
        if witness is not None:
            return RcResult(k, witness)
    raise AssertionError("unreachable: m distinct colors always succeed")


def rc_oracle(g: Graph) -> int:
    """Brute-force rc: enumerate all k^m colorings for k = 1, 2, ... with no
    pruning beyond early exit. Validation-only; guarded to m <= 10."""
    if g.n < 2:
        raise GraphError("rc is defined for graphs with at least 2 vertices")
    if not is_connected(g):
        raise GraphError("rc is defined for connected graphs only")
    if g.m > 10:
        raise GraphError(f"oracle cost guard: m = {g.m} exceeds 10")
    for k in range(1, g.m + 1):
        for colors in product(range(k), repeat=g.m):
            if _internal_rainbow_connected(g, colors, k):
                return k
    raise AssertionError("unreachable: m distinct colors always succeed")


# ---------------------------------------------------------------------------
# closed forms

def formula_rc_cycle(n: int) -> int:
    """rc of the n-cycle: n/2 when even, otherwise the ceiling of n/2.

    Defined for n >= 4: the length-3 cycle is complete and its rc is 1,
    which the half-n formula does not cover.
    """
    if n < 4:
        raise GraphError(f"cycle formula needs n >= 4, got {n}")
    return (n + 1) // 2


def formula_rc_fan(n: int) -> int:
    """rc of the fan on a length-n path plus hub: 1, 2, or 3 by n."""
    if n < 2:
        raise GraphError(f"fan formula needs n >= 2, got {n}")
    if n == 2:
        return 1
    if n <= 6:
        return 2
    return 3
