"""Subgraph containment: a generic backtracking embedder, a specialized
disjoint-paths embedder, family freeness, and triangle statistics.

Containment is always plain subgraph containment (an injective vertex map
preserving pattern edges), never induced. The disjoint-paths embedder
exists because path forests have enormous automorphism groups that make
the generic search re-explore equivalent placements; it prunes by
interchangeable-vertex (twin) classes, start-order normalization, and
degree feasibility counts, and is verified against the generic embedder
on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .graphs import Graph, path_graph, union

_bit = lambda v: 1 << v  # noqa: E731


# ---------------------------------------------------------------------------
# Generic subgraph embedding
# ---------------------------------------------------------------------------


def _pattern_order(pattern: Graph, forced: Sequence[int]) -> list[int]:
    """Placement order: forced vertices first, then most-anchored/highest
    degree first so candidate sets shrink early."""
    placed = list(forced)
    seen = set(placed)
    degs = pattern.degrees()
    while len(placed) < pattern.n:
        best = None
        best_key = None
        for p in range(pattern.n):
            if p in seen:
                continue
            anchored = sum(1 for q in placed if pattern.has_edge(p, q))
            key = (anchored, degs[p], -p)
            if best_key is None or key > best_key:
                best_key = key
                best = p
        placed.append(best)
        seen.add(best)
    return placed


def _embed(host: Graph, pattern: Graph, forced: dict[int, int] | None = None) -> bool:
    """True iff pattern embeds into host honoring the forced partial map."""
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return False
    if pattern.n == 0:
        return True
    forced = forced or {}
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    for p, v in forced.items():
        if hdeg[v] < pdeg[p]:
            return False
    order = _pattern_order(pattern, list(forced))
    hrows = host.rows
    prows = pattern.rows
    full = (1 << host.n) - 1
    # vertices of host with degree >= d, as masks indexed by pattern vertex
    degree_ok = []
    for p in range(pattern.n):
        mask = 0
        for v in range(host.n):
            if hdeg[v] >= pdeg[p]:
                mask |= _bit(v)
        degree_ok.append(mask)

    assign = [-1] * pattern.n
    used = 0
    for p, v in forced.items():
        if assign[p] != -1 or used & _bit(v):
            return False
        assign[p] = v
        used |= _bit(v)
    # forced adjacency consistency
    for p, v in forced.items():
        for q, w in forced.items():
            if p < q and pattern.has_edge(p, q) and not host.has_edge(v, w):
                return False

    start = len(forced)

    def rec(idx: int, used: int) -> bool:
        if idx == pattern.n:
            return True
        p = order[idx]
        cand = degree_ok[p] & ~used & full
        for q in _iter_bits(prows[p]):
            w = assign[q]
            if w >= 0:
                cand &= hrows[w]
                if not cand:
                    return False
        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        m = cand
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            # interchangeable-vertex pruning: skip v when a tried sibling
            # has the identical neighborhood (open or closed twins)
            if hrows[v] in seen_open or (hrows[v] | b) in seen_closed:
                continue
            seen_open.add(hrows[v])
            seen_closed.add(hrows[v] | b)
            assign[p] = v
            if rec(idx + 1, used | b):
                return True
            assign[p] = -1
        return False

    return rec(start, used)


def _iter_bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def contains_subgraph(host: Graph, pattern: Graph) -> bool:
    """True iff some injective vertex map carries every pattern edge into
    a host edge."""
    return _embed(host, pattern)


def contains_subgraph_anchored(host: Graph, pattern: Graph, anchor: int) -> bool:
    """Containment restricted to embeddings whose image includes anchor."""
    if pattern.n == 0:
        return False
    tried: set[int] = set()
    for p in range(pattern.n):
        key = pattern.rows[p]
        if key in tried:
            continue
        tried.add(key)
        if _embed(host, pattern, {p: anchor}):
            return True
    return False


def contains_using_edge(host: Graph, pattern: Graph, u: int, v: int) -> bool:
    """Containment restricted to embeddings mapping a pattern edge onto
    the host edge {u, v}."""
    if pattern.edge_count == 0:
        return False
    tried: set[tuple[int, int]] = set()
    for p, q in pattern.edges():
        key = (pattern.rows[p], pattern.rows[q])
        if key in tried or (key[1], key[0]) in tried:
            continue
        tried.add(key)
        if _embed(host, pattern, {p: u, q: v}):
            return True
        if _embed(host, pattern, {p: v, q: u}):
            return True
    return False


# ---------------------------------------------------------------------------
# Linear forests
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearForestSpec:
    """A disjoint union of paths, each on at least 3 vertices.

    ``path_orders`` is stored sorted descending. ``half_sum`` is the sum of
    floor(order/2) over components, the quantity all the forest formulas
    are expressed in.
    """

    path_orders: tuple[int, ...]

    def __init__(self, path_orders: Iterable[int]):
        orders = tuple(sorted(path_orders, reverse=True))
        if not orders:
            raise DomainError("a linear forest needs at least one path")
        if any(o < 3 for o in orders):
            raise DomainError("every path component needs at least 3 vertices")
        object.__setattr__(self, "path_orders", orders)

    @classmethod
    def parse(cls, text: str) -> "LinearForestSpec":
        try:
            orders = [int(tok) for tok in text.split(",") if tok.strip()]
        except ValueError as exc:
            raise DomainError(f"bad forest spec {text!r}") from exc
        return cls(orders)

    @property
    def k(self) -> int:
        return len(self.path_orders)

    @property
    def total_vertices(self) -> int:
        return sum(self.path_orders)

    @property
    def half_sum(self) -> int:
        return sum(o // 2 for o in self.path_orders)

    @property
    def even_indices(self) -> tuple[int, ...]:
        return tuple(i for i, o in enumerate(self.path_orders) if o % 2 == 0)

    @property
    def odd_indices(self) -> tuple[int, ...]:
        return tuple(i for i, o in enumerate(self.path_orders) if o % 2 == 1)

    @property
    def is_all_p3(self) -> bool:
        return all(o == 3 for o in self.path_orders)

    @property
    def all_equal(self) -> bool:
        return len(set(self.path_orders)) == 1

    def pattern_graph(self) -> Graph:
        g = path_graph(self.path_orders[0])
        for o in self.path_orders[1:]:
            g = union(g, path_graph(o))
        return g

    def __str__(self) -> str:
        return "+".join(f"P{o}" for o in self.path_orders)


def contains_linear_forest(host: Graph, spec: LinearForestSpec | Sequence[int]) -> bool:
    """True iff host contains vertex-disjoint paths of the given orders."""
    orders = spec.path_orders if isinstance(spec, LinearForestSpec) else tuple(
        sorted(spec, reverse=True)
    )
    if any(o < 1 for o in orders):
        raise DomainError("path orders must be positive")
    return _embed_paths(host, orders)


def _embed_paths(host: Graph, orders: tuple[int, ...]) -> bool:
    n = host.n
    total = sum(orders)
    if total > n:
        return False
    if host.edge_count < total - len(orders):
        return False
    rows = host.rows

    # suffix demand: vertices, vertices of avail-degree >= 1 / >= 2
    count_needed = [0] * (len(orders) + 1)
    length_needed = [0] * (len(orders) + 1)
    interior_needed = [0] * (len(orders) + 1)
    for i in range(len(orders) - 1, -1, -1):
        o = orders[i]
        count_needed[i] = count_needed[i + 1] + o
        length_needed[i] = length_needed[i + 1] + (o if o >= 2 else 0)
        interior_needed[i] = interior_needed[i + 1] + max(o - 2, 0)

    def feasible(avail: int, idx: int) -> bool:
        if avail.bit_count() < count_needed[idx]:
            return False
        if length_needed[idx]:
            deg1 = 0
            deg2 = 0
            m = avail
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                d = (rows[v] & avail).bit_count()
                if d >= 1:
                    deg1 += 1
                    if d >= 2:
                        deg2 += 1
            if deg1 < length_needed[idx] or deg2 < interior_needed[idx]:
                return False
        return True

    def place_path(idx: int, avail: int, min_start: int) -> bool:
        if idx == len(orders):
            return True
        if not feasible(avail, idx):
            return False
        o = orders[idx]
        same_next = idx + 1 < len(orders) and orders[idx + 1] == o

        def extend(last: int, remaining: int, avail2: int, start: int) -> bool:
            if remaining == 0:
                return place_path(idx + 1, avail2, start + 1 if same_next else 0)
            cand = rows[last] & avail2
            seen_open: set[int] = set()
            seen_closed: set[int] = set()
            m = cand
            while m:
                b = m & -m
                v = b.bit_length() - 1
                m ^= b
                # skip v when a tried sibling is directly interchangeable
                if rows[v] in seen_open or (rows[v] | b) in seen_closed:
                    continue
                seen_open.add(rows[v])
                seen_closed.add(rows[v] | b)
                if extend(v, remaining - 1, avail2 & ~b, start):
                    return True
            return False

        seen_open: set[int] = set()
        seen_closed: set[int] = set()
        m = avail >> min_start << min_start
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            if rows[v] in seen_open or (rows[v] | b) in seen_closed:
                continue
            seen_open.add(rows[v])
            seen_closed.add(rows[v] | b)
            if o == 1:
                if place_path(idx + 1, avail & ~b, v + 1 if same_next else 0):
                    return True
            elif extend(v, o - 1, avail & ~b, v):
                return True
        return False

    return place_path(0, (1 << n) - 1, 0)


def path_forest_orders(g: Graph) -> list[int] | None:
    """Component orders when every component of g is a path, else None."""
    seen = 0
    orders: list[int] = []
    for v in range(g.n):
        if seen & _bit(v):
            continue
        comp = _bit(v)
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for w in _iter_bits(g.rows[u] & ~comp):
                comp |= _bit(w)
                frontier.append(w)
        seen |= comp
        size = comp.bit_count()
        edges = sum((g.rows[u] & comp).bit_count() for u in _iter_bits(comp)) // 2
        if edges != size - 1:
            return None
        if any((g.rows[u] & comp).bit_count() > 2 for u in _iter_bits(comp)):
            return None
        orders.append(size)
    return sorted(orders, reverse=True)


# ---------------------------------------------------------------------------
# Family freeness
# ---------------------------------------------------------------------------


def is_free(host: Graph, family) -> bool:
    """True iff no family member embeds into host.

    ``family`` may be a ForbiddenFamily or any iterable of Graphs. Members
    whose components are all paths are dispatched to the disjoint-paths
    embedder.
    """
    members = getattr(family, "members", family)
    for member in members:
        orders = path_forest_orders(member)
        if orders is not None:
            if contains_linear_forest(host, orders):
                return False
        elif contains_subgraph(host, member):
            return False
    return True


# ---------------------------------------------------------------------------
# Triangles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleStats:
    total: int
    per_edge: dict[tuple[int, int], int]


def triangle_stats(g: Graph) -> TriangleStats:
    """Triangle count plus, for every edge, the number of triangles on it."""
    per_edge: dict[tuple[int, int], int] = {}
    acc = 0
    for u, v in g.edges():
        c = (g.rows[u] & g.rows[v]).bit_count()
        per_edge[(u, v)] = c
        acc += c
    assert acc % 3 == 0
    return TriangleStats(acc // 3, per_edge)


def triangle_count(g: Graph) -> int:
    return triangle_stats(g).total
