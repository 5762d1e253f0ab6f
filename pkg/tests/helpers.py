"""Shared test utilities: independent oracles and small generators.

Everything here is deliberately naive -- these are the reference
implementations the package is checked against, so they must not share code
with the implementations under test.
"""

from __future__ import annotations

import itertools
import random

from rainbowconn import Graph, build_graph


def edge_removal_bridges(g: Graph) -> set[tuple[int, int]]:
    """Bridges by definition: remove each edge, count components."""

    def component_count(n: int, edges: list[tuple[int, int]]) -> int:
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(n)})

    base = component_count(g.n, list(g.edges))
    out = set()
    for e in g.edges:
        rest = [f for f in g.edges if f != e]
        if component_count(g.n, rest) > base:
            out.add(e)
    return out


def all_simple_paths(g: Graph, u: int, v: int) -> list[list[tuple[int, int]]]:
    """Every simple u-v path as a list of edges, any length."""
    out: list[list[tuple[int, int]]] = []
    path: list[tuple[int, int]] = []
    seen = {u}

    def walk(cur: int) -> None:
        if cur == v:
            out.append(list(path))
            return
        for w in sorted(g.adj[cur]):
            if w in seen:
                continue
            seen.add(w)
            path.append((cur, w) if cur < w else (w, cur))
            walk(w)
            path.pop()
            seen.remove(w)

    walk(u)
    return out


def rainbow_connected_by_paths(g: Graph, color_of: dict) -> bool:
    """Definition-level check: every pair has some all-distinct-colors path."""
    for u in range(g.n):
        for v in range(u + 1, g.n):
            good = False
            for path in all_simple_paths(g, u, v):
                cols = [color_of[e] for e in path]
                if len(cols) == len(set(cols)):
                    good = True
                    break
            if not good:
                return False
    return True


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree via Pruefer decoding."""
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [v for v in range(n) if degree[v] == 1]
    edges.append((u, v))
    return build_graph(n, edges)


def random_connected_graph(n: int, rng: random.Random, extra: float = 0.3) -> Graph:
    """Random tree plus a sprinkle of extra edges."""
    tree = random_tree(n, rng)
    edges = set(tree.edges)
    for pair in itertools.combinations(range(n), 2):
        if pair not in edges and rng.random() < extra:
            edges.add(pair)
    return build_graph(n, sorted(edges))


def graphs_on(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1))


def is_two_degenerate(g: Graph) -> bool:
    """Can the graph be peeled down by repeatedly removing degree <= 2
    vertices? A necessary condition for outerplanarity."""
    alive = (1 << g.n) - 1
    changed = True
    while alive and changed:
        changed = False
        probe = alive
        while probe:
            low = probe & -probe
            probe ^= low
            v = low.bit_length() - 1
            if (g.adj_bits[v] & alive).bit_count() <= 2:
                alive ^= low
                changed = True
    return alive == 0
