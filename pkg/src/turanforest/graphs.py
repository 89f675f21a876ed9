"""Small simple graphs as immutable bitmask values.

A graph on n <= 64 vertices stores one integer bitmask of neighbors per
vertex, which makes adjacency tests, neighborhood intersections and
induced-subgraph extraction single integer operations. This module holds
the named constructions (complete graphs, paths, cycles, matchings,
complete multipartite and book graphs), disjoint union and join, the
graph6 codec, and a refinement-plus-backtracking canonical labeling that
backs isomorphism tests and all deduplication in the package.

Vertex layouts of the named constructions are deterministic and documented
on each constructor so tests and callers can address specific vertices
("the smaller part", "the spine edge") by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, RangeError

MAX_VERTICES = 64


def _bit(v: int) -> int:
    return 1 << v


def _bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``rows[u]`` is the neighbor bitmask of u.

    Invariants (checked on construction): symmetric adjacency, zero
    diagonal, no bits at or above ``n``, and ``0 <= n <= 64``.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise RangeError(f"graph order {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise DomainError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise DomainError(f"row {v} has bits beyond vertex range")
            if row & _bit(v):
                raise DomainError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.rows):
            for u in _bits(row):
                if not self.rows[u] & _bit(v):
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] & _bit(v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in _bits(self.rows[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from an edge list."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise DomainError(f"self-loop ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
        rows[u] |= _bit(v)
        rows[v] |= _bit(u)
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Named constructions. Each documents its vertex layout.
# ---------------------------------------------------------------------------


def _check_order(n: int) -> None:
    if n > MAX_VERTICES:
        raise RangeError(f"construction would have {n} > {MAX_VERTICES} vertices")
    if n < 0:
        raise DomainError("negative order")


def empty_graph(k: int) -> Graph:
    """Independent set on k vertices."""
    _check_order(k)
    return Graph(k, (0,) * k)


def complete_graph(m: int) -> Graph:
    """Complete graph on vertices 0..m-1."""
    _check_order(m)
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ _bit(v) for v in range(m)))


def path_graph(length: int) -> Graph:
    """Path 0-1-...-(length-1)."""
    _check_order(length)
    return from_edges(length, [(i, i + 1) for i in range(length - 1)])


def cycle_graph(m: int) -> Graph:
    """Cycle 0-1-...-(m-1)-0; m >= 3."""
    if m < 3:
        raise DomainError("cycle needs at least 3 vertices")
    _check_order(m)
    return from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def matching(s: int) -> Graph:
    """Matching of size s on exactly 2s vertices; edges (0,1), (2,3), ..."""
    return matching_on(2 * s, s)


def matching_on(k: int, t: int) -> Graph:
    """Matching of size t on k vertices: edges (0,1)..(2t-2,2t-1), rest isolated."""
    if t < 0 or k < 0:
        raise DomainError("negative matching parameters")
    if 2 * t > k:
        raise DomainError(f"matching of size {t} does not fit on {k} vertices")
    _check_order(k)
    return from_edges(k, [(2 * i, 2 * i + 1) for i in range(t)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; the first part is 0..a-1, the second a..a+b-1."""
    _check_order(a + b)
    mask_a = (1 << a) - 1
    mask_b = ((1 << (a + b)) - 1) ^ mask_a
    rows = tuple(mask_b for _ in range(a)) + tuple(mask_a for _ in range(b))
    return Graph(a + b, rows)


def turan_graph(n: int, k: int) -> Graph:
    """Complete k-partite graph with parts as equal as possible.

    Parts occupy contiguous index blocks, the ceil(n/k)-sized parts first.
    """
    if k < 1:
        raise DomainError("turan graph needs k >= 1")
    _check_order(n)
    q, r = divmod(n, k)
    sizes = [q + 1] * r + [q] * (k - r)
    rows = [0] * n
    start = 0
    full = (1 << n) - 1
    for size in sizes:
        part = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~part
        start += size
    return Graph(n, tuple(rows))


def book_graph(t: int) -> Graph:
    """t triangles sharing one edge: the spine is (0, 1), pages are 2..t+1."""
    if t < 0:
        raise DomainError("negative page count")
    return join(complete_graph(2), empty_graph(t))


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of g keep their labels, h is shifted by g.n."""
    _check_order(g.n + h.n)
    rows = g.rows + tuple(row << g.n for row in h.rows)
    return Graph(g.n + h.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    _check_order(g.n + h.n)
    mask_g = (1 << g.n) - 1
    mask_h = (((1 << (g.n + h.n)) - 1) ^ mask_g)
    rows = tuple(row | mask_h for row in g.rows) + tuple(
        (row << g.n) | mask_g for row in h.rows
    )
    return Graph(g.n + h.n, rows)


_NAMED_KINDS = {
    "K": (1, 2),
    "I": (1,),
    "P": (1,),
    "M": (1, 2),
    "T": (2,),
    "B": (1,),
    "C": (1,),
}


def construct_named(kind: str, params: Sequence[int]) -> Graph:
    """Dispatch to a named construction.

    Kinds: K m (complete), K a,b (complete bipartite), I k (independent set),
    P l (path), M s (matching on 2s vertices), M k,t (matching of size t on
    k vertices), T n,k (balanced complete k-partite), B t (book), C m (cycle).
    """
    kind = kind.upper()
    if kind not in _NAMED_KINDS:
        raise DomainError(f"unknown construction kind {kind!r}")
    params = list(params)
    if len(params) not in _NAMED_KINDS[kind]:
        raise DomainError(f"kind {kind} takes {_NAMED_KINDS[kind]} parameters")
    if any(p < 0 for p in params):
        raise DomainError("construction parameters must be nonnegative")
    if kind == "K":
        return complete_graph(params[0]) if len(params) == 1 else complete_bipartite(*params)
    if kind == "I":
        return empty_graph(params[0])
    if kind == "P":
        return path_graph(params[0])
    if kind == "M":
        return matching(params[0]) if len(params) == 1 else matching_on(*params)
    if kind == "T":
        return turan_graph(*params)
    if kind == "B":
        return book_graph(params[0])
    return cycle_graph(params[0])


def turan_edge_count(n: int, k: int) -> int:
    """Edge count of the balanced complete k-partite graph on n vertices.

    By convention equals C(n, 2) when k >= n. Pure integer arithmetic, so n
    may exceed the 64-vertex construction cap.
    """
    if n < 0:
        raise DomainError("negative order")
    if k < 1:
        raise DomainError("need k >= 1")
    if k >= n:
        return comb(n, 2)
    q, r = divmod(n, k)
    return comb(n, 2) - r * comb(q + 1, 2) - (k - r) * comb(q, 2)


# ---------------------------------------------------------------------------
# Derived graphs
# ---------------------------------------------------------------------------


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices; ``perm[v]`` is the new label of vertex v."""
    rows = [0] * g.n
    for v in range(g.n):
        nv = perm[v]
        for u in _bits(g.rows[v]):
            rows[nv] |= _bit(perm[u])
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by the given vertices, relabeled 0.. in that order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise DomainError("duplicate vertices in induced subgraph")
    rows = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for u in _bits(g.rows[v]):
            j = index.get(u)
            if j is not None:
                rows[i] |= _bit(j)
    return Graph(len(vertices), tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~_bit(v) for v, row in enumerate(g.rows)))


def remove_isolated_vertices(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.rows[v]]
    return induced_subgraph(g, keep)


def with_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise DomainError("self-loop")
    rows = list(g.rows)
    rows[u] |= _bit(v)
    rows[v] |= _bit(u)
    return Graph(g.n, tuple(rows))


def without_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.rows)
    rows[u] &= ~_bit(v)
    rows[v] &= ~_bit(u)
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------
#
# Standard printable encoding: a size header followed by the upper triangle
# of the adjacency matrix in column-major order ((0,1), (0,2), (1,2), ...),
# packed into 6-bit groups, each group stored as one byte offset by 63.


def graph6_encode(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    chunks = []
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        chunks.append(chr(63 + acc))
    return head + "".join(chunks)


def graph6_decode(text: str) -> Graph:
    if not text:
        raise DomainError("empty graph6 string")
    data = [ord(ch) for ch in text]
    for ch in data:
        if not 63 <= ch <= 126:
            raise DomainError(f"byte {ch} outside printable graph6 range 63..126")
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise RangeError("graph6 long-size header: order far beyond the 64-vertex cap")
        if len(data) < 4:
            raise DomainError("truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_VERTICES:
        raise RangeError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex cap")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[pos:]
    if len(payload) < nbytes:
        raise DomainError("truncated graph6 bit stream")
    if len(payload) > nbytes:
        raise DomainError("trailing bytes after graph6 bit stream")
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[bit // 6] - 63
            if (byte >> (5 - bit % 6)) & 1:
                rows[i] |= _bit(j)
                rows[j] |= _bit(i)
            bit += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------
#
# Iterated color refinement (degree, then multiset of neighbor colors)
# followed by individualization with backtracking. The canonical form is
# the labeling maximizing the upper-triangle bit string; automorphisms
# discovered at equal-code leaves prune sibling branches that provably
# yield the same code.


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-class representative: order plus the graph6 code of the
    canonically relabeled graph. Two graphs are isomorphic iff their
    canonical forms are equal."""

    order: int
    code: str


def _refine(n: int, rows: tuple[int, ...], colors: list[int]) -> list[int]:
    """Refine a coloring to equitability; color ids respect cell order."""
    while True:
        sigs = []
        for v in range(n):
            cnt: dict[int, int] = {}
            m = rows[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                c = colors[u]
                cnt[c] = cnt.get(c, 0) + 1
            sigs.append((colors[v], tuple(sorted(cnt.items()))))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


_AUT_CAP = 64  # automorphisms kept for pruning; a cap only affects speed


def _canonical_perm(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation mapping canonical position -> original vertex."""
    if n == 0:
        return ()
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best_code = -1
    best_perm: list[int] = []
    auts: list[tuple[int, ...]] = []

    def leaf(colors: list[int]) -> None:
        nonlocal best_code, best_perm
        perm = sorted(range(n), key=colors.__getitem__)
        code = 0
        for i, j in pairs:
            code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1)
        if code > best_code:
            best_code = code
            best_perm = perm
        elif code == best_code and len(auts) < _AUT_CAP:
            sigma = [0] * n
            for k in range(n):
                sigma[perm[k]] = best_perm[k]
            auts.append(tuple(sigma))

    def descend(colors: list[int], fixed: tuple[int, ...]) -> None:
        colors = _refine(n, rows, colors)
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = -1
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target < 0:
            leaf(colors)
            return
        cell = [v for v in range(n) if colors[v] == target]
        tried: set[int] = set()
        for v in cell:
            skip = False
            for sigma in auts:
                if sigma[v] in tried and all(sigma[f] == f for f in fixed):
                    skip = True
                    break
            if skip:
                continue
            tried.add(v)
            child = [
                c + 1 if (c > target or (c == target and u != v)) else c
                for u, c in enumerate(colors)
            ]
            child[v] = target
            descend(child, fixed + (v,))

    descend([0] * n, ())
    return tuple(best_perm)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    perm = _canonical_perm(g.n, g.rows)
    inverse = [0] * g.n
    for pos, v in enumerate(perm):
        inverse[v] = pos
    return relabel(g, inverse)


def canonicalize(g: Graph) -> CanonicalForm:
    return CanonicalForm(g.n, graph6_encode(canonical_graph(g)))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonicalize(g) == canonicalize(h)
