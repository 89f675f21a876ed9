"""Shared brute-force reference implementations and strategies.

Everything here is deliberately independent of the package internals:
plain permutation/subset enumeration over edge lists, used as the ground
truth the fast implementations are checked against.
"""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from turanforest.graphs import Graph, from_edges


def brute_contains(host: Graph, pattern: Graph) -> bool:
    """Subgraph containment by trying every injective vertex map."""
    if pattern.n > host.n:
        return False
    pedges = pattern.edges()
    for image in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(image[u], image[v]) for u, v in pedges):
            return True
    return False


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    gedges = set(map(frozenset, g.edges()))
    for perm in itertools.permutations(range(g.n)):
        if all(frozenset((perm[u], perm[v])) in gedges for u, v in h.edges()):
            if g.edge_count == h.edge_count:
                mapped = {frozenset((perm[u], perm[v])) for u, v in h.edges()}
                if mapped == gedges:
                    return True
    return False


def brute_triangles(g: Graph) -> int:
    return sum(
        1
        for a, b, c in itertools.combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )


def brute_matching_number(g: Graph) -> int:
    """Maximum matching size by scanning all edge subsets of each size."""
    edges = g.edges()
    for size in range(len(edges), 0, -1):
        if size > g.n // 2:
            continue
        for combo in itertools.combinations(edges, size):
            verts = [v for e in combo for v in e]
            if len(set(verts)) == 2 * size:
                return size
    return 0


def brute_edge_domination(g: Graph) -> int:
    """Minimum edge set touching every other edge, by subset scan."""
    edges = g.edges()
    if not edges:
        return 0
    for size in range(1, len(edges) + 1):
        for combo in itertools.combinations(edges, size):
            chosen = set()
            for u, v in combo:
                chosen.add(u)
                chosen.add(v)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    return len(edges)


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.edge_count == 0:
        return 1
    edges = g.edges()
    for k in range(2, g.n + 1):
        for coloring in itertools.product(range(k), repeat=g.n):
            if all(coloring[u] != coloring[v] for u, v in edges):
                return k
    return g.n


def brute_clique(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                return size
    return best


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return from_edges(n, edges)


@st.composite
def graphs_st(draw, max_n: int = 8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picks = draw(st.lists(st.integers(0, len(pairs) - 1), max_size=len(pairs)) if pairs else st.just([]))
    return from_edges(n, [pairs[i] for i in set(picks)])


@pytest.fixture()
def rng() -> random.Random:
    return random.Random(20240811)
