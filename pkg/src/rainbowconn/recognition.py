"""Outerplanarity recognition via forbidden minors, plus MOP and outer-cycle
helpers.

A graph is outerplanar exactly when it has neither a K4 nor a K2,3 minor, so
the recognizers here search directly for those minors as families of disjoint
connected branch sets with the required cross edges. The search is exhaustive
with pruning; quick rejects are used only where provably safe (cycle rank,
edge-count bound for connected graphs).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    _component_mask,
    _iter_bits,
    block_decomposition,
    build_graph,
    components,
    is_connected,
    is_two_connected,
)

K4 = "K4"
K23 = "K2,3"


@dataclass(frozen=True)
class MinorWitness:
    """Disjoint connected branch sets realizing a forbidden pattern."""

    pattern: str
    branch_sets: tuple[frozenset[int], ...]


def _mask_connected(g: Graph, mask: int) -> bool:
    start = (mask & -mask).bit_length() - 1
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in _iter_bits(frontier):
            nxt |= g.adj_bits[u]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _neighbourhood(g: Graph, mask: int) -> int:
    out = 0
    for u in _iter_bits(mask):
        out |= g.adj_bits[u]
    return out & ~mask


def _connected_masks(g: Graph) -> list[int]:
    """All non-empty connected vertex subsets, smallest sets first."""
    out = [
        mask
        for mask in range(1, 1 << g.n)
        if _mask_connected(g, mask)
    ]
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def _pattern_edges(pattern: str) -> list[tuple[int, int]]:
    if pattern == K4:
        return [(i, j) for i in range(4) for j in range(i + 1, 4)]
    return [(i, j) for i in range(2) for j in range(2, 5)]


def validate_witness(g: Graph, w: MinorWitness) -> None:
    """Raise GraphError unless the witness realizes its pattern in ``g``."""
    expected = 4 if w.pattern == K4 else 5
    if len(w.branch_sets) != expected:
        raise GraphError(f"{w.pattern} witness needs {expected} branch sets")
    masks = []
    for s in w.branch_sets:
        mask = 0
        for v in s:
            if not 0 <= v < g.n:
                raise GraphError(f"branch-set vertex {v} out of range")
            mask |= 1 << v
        if not _mask_connected(g, mask):
            raise GraphError(f"branch set {sorted(s)} is not connected")
        masks.append(mask)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                raise GraphError("branch sets overlap")
    for i, j in _pattern_edges(w.pattern):
        if not _neighbourhood(g, masks[i]) & masks[j]:
            raise GraphError(
                f"no host edge links branch sets {i} and {j} of the pattern"
            )


def _max_component_cycle_rank(g: Graph) -> int:
    ranks = []
    for comp in components(g):
        nc = comp.bit_count()
        mc = sum(1 for u, v in g.edges if comp >> u & 1)
        ranks.append(mc - nc + 1)
    return max(ranks)


def _masks_to_witness(g: Graph, pattern: str, masks: list[int]) -> MinorWitness:
    w = MinorWitness(
        pattern, tuple(frozenset(_iter_bits(m)) for m in masks)
    )
    validate_witness(g, w)  # self-check on return
    return w


def _k4_subgraph(g: Graph) -> list[int] | None:
    """Four pairwise-adjacent vertices, as singleton masks."""
    adj = g.adj_bits
    for u, v in g.edges:
        common = adj[u] & adj[v]
        if common.bit_count() < 2:
            continue
        ws = list(_iter_bits(common))
        for i, w in enumerate(ws):
            aw = adj[w]
            for x in ws[i + 1 :]:
                if aw >> x & 1:
                    return [1 << u, 1 << v, 1 << w, 1 << x]
    return None


def _k23_subgraph(g: Graph) -> list[int] | None:
    """Two vertices with three common neighbours, as singleton masks."""
    adj = g.adj_bits
    for u in range(g.n):
        au = adj[u]
        for v in range(u + 1, g.n):
            common = au & adj[v]
            if common.bit_count() >= 3:
                bs = []
                for w in _iter_bits(common):
                    bs.append(1 << w)
                    if len(bs) == 3:
                        return [1 << u, 1 << v, *bs]
    return None


def find_k4_minor(g: Graph) -> MinorWitness | None:
    """Search for four pairwise-linked disjoint connected branch sets.

    Minors cannot increase the cycle rank of a component, and K4 has rank 3,
    so components with rank < 3 are skipped outright. A direct subgraph scan
    runs first; the exhaustive branch-set search settles the rest.
    """
    if _max_component_cycle_rank(g) < 3:
        return None
    quad = _k4_subgraph(g)
    if quad is not None:
        return _masks_to_witness(g, K4, quad)
    cands = _connected_masks(g)
    nbrs = [_neighbourhood(g, m) for m in cands]
    minbit = [m & -m for m in cands]
    order = range(len(cands))

    def extend(chosen: list[int], union: int, last_min: int) -> list[int] | None:
        if len(chosen) == 4:
            return chosen
        for j in order:
            m = cands[j]
            if m & union or minbit[j] <= last_min:
                continue
            if any(not (nbrs[i] & m) for i in chosen):
                continue
            got = extend(chosen + [j], union | m, minbit[j])
            if got is not None:
                return got
        return None

    got = extend([], 0, 0)
    if got is None:
        return None
    return _masks_to_witness(g, K4, [cands[j] for j in got])


def find_k23_minor(g: Graph) -> MinorWitness | None:
    """Search for a K2,3 minor: sides (A1, A2) and (B1, B2, B3), every
    cross pair linked by a host edge. A direct subgraph scan runs first;
    the exhaustive branch-set search settles the rest."""
    if _max_component_cycle_rank(g) < 2:
        return None
    quint = _k23_subgraph(g)
    if quint is not None:
        return _masks_to_witness(g, K23, quint)
    cands = _connected_masks(g)
    cand_set = set(cands)
    nbrs = {m: _neighbourhood(g, m) for m in cands}
    full = (1 << g.n) - 1

    for i1, a1 in enumerate(cands):
        n1 = nbrs[a1]
        for a2 in cands[i1 + 1 :]:
            if a1 & a2 or (a2 & -a2) <= (a1 & -a1):
                continue
            n2 = nbrs[a2]
            rest = full & ~a1 & ~a2
            if (n1 & rest).bit_count() < 3 or (n2 & rest).bit_count() < 3:
                continue
            # enumerate connected submasks of the remaining vertices that
            # touch both sides, then pick three disjoint ones
            bs = []
            sub = rest
            while sub:
                if sub in cand_set and (n1 & sub) and (n2 & sub):
                    bs.append(sub)
                sub = (sub - 1) & rest
            if len(bs) < 3:
                continue
            bs.sort(key=lambda m: (m & -m, m.bit_count()))
            triple = _three_disjoint(bs)
            if triple is not None:
                return _masks_to_witness(g, K23, [a1, a2, *triple])
    return None


def _three_disjoint(masks: list[int]) -> list[int] | None:
    k = len(masks)
    for i in range(k):
        mi = masks[i]
        for j in range(i + 1, k):
            mj = masks[j]
            if mi & mj or (mj & -mj) <= (mi & -mi):
                continue
            ij = mi | mj
            for l in range(j + 1, k):
                ml = masks[l]
                if ml & ij or (ml & -ml) <= (mj & -mj):
                    continue
                return [mi, mj, ml]
    return None


def is_outerplanar(g: Graph) -> bool:
    """No K4 minor and no K2,3 minor.

    Connected graphs with m > 2n-3 are rejected without search; the bound is
    validated independently against the pure minor test in the test suite.
    """
    if g.n >= 2 and g.m > 2 * g.n - 3 and is_connected(g):
        return False
    return _is_outerplanar_by_search(g)


def _is_outerplanar_by_search(g: Graph) -> bool:
    """The defining test, with no edge-count shortcut."""
    return find_k4_minor(g) is None and find_k23_minor(g) is None


def is_mop(g: Graph) -> bool:
    """Maximal outerplanar: no edge can be added without losing
    outerplanarity. Decided definitionally, not by edge count."""
    if g.n < 3 or not is_outerplanar(g):
        return False
    for u, v in g.non_edges():
        bigger = Graph(g.n, tuple(sorted(g.edges + ((u, v),))))
        if is_outerplanar(bigger):
            return False
    return True


def hamiltonian_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All Hamiltonian cycles, one canonical tuple per cycle.

    Cycles start at vertex 0 and take the direction whose second vertex is
    smaller than the last, so each cycle appears exactly once.
    """
    n = g.n
    if n < 3:
        return []
    out: list[tuple[int, ...]] = []
    path = [0]
    used = [False] * n
    used[0] = True

    def walk() -> None:
        u = path[-1]
        if len(path) == n:
            if g.has_edge(u, 0) and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in _iter_bits(g.adj_bits[u]):
            if not used[w]:
                used[w] = True
                path.append(w)
                walk()
                path.pop()
                used[w] = False

    walk()
    return out


def outer_cycle(g: Graph) -> tuple[int, ...] | None:
    """The unique Hamiltonian cycle of a 2-connected outerplanar graph;
    ``None`` when the precondition fails."""
    if not is_two_connected(g) or not is_outerplanar(g):
        return None
    cycles = hamiltonian_cycles(g)
    if not cycles:
        return None
    return cycles[0]
