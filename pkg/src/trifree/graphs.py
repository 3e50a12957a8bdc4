"""Simple undirected graphs on 0-indexed vertices.

This module is the verification substrate for everything else in the
package: triangle tests, degree bookkeeping, maximum matching in general
graphs (blossom contraction, so odd components are handled exactly), and
factor-criticality.  Adjacency is kept both as a set of normalized vertex
pairs and as per-vertex bitsets; the bitsets are what the hot paths
(triangle tests, search propagation) operate on.

All values are immutable after construction and safe to share read-only
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Pair = tuple[int, int]


def normalize_pair(u: int, v: int) -> Pair:
    """Return the unordered pair {u, v} as a sorted tuple."""
    if u == v:
        raise ValueError(f"self-loop on vertex {u}")
    return (u, v) if u < v else (v, u)


def all_pairs(n: int) -> Iterator[Pair]:
    """All unordered vertex pairs over {0, ..., n-1} in lexicographic order."""
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on ``n`` labeled vertices."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Pair] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        adj = [0] * n
        for u, v in edges:
            u, v = normalize_pair(u, v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if (u, v) in normalized:
                continue
            normalized.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def remove_vertex(self, v: int) -> "Graph":
        """Graph with vertex ``v`` deleted; higher labels shift down by one."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")

        def shift(x: int) -> int:
            return x if x < v else x - 1

        return Graph(
            self.n - 1,
            (
                (shift(a), shift(b))
                for a, b in self.edges
                if a != v and b != v
            ),
        )


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union; vertex labels of each part are shifted by an offset."""
    n = 0
    edges: list[Pair] = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges."""

    pairs: frozenset[Pair]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covered(self) -> set[int]:
        return {v for pair in self.pairs for v in pair}

    def validate(self, g: Graph) -> None:
        """Raise if a pair is not an edge of ``g`` or two pairs intersect."""
        seen: set[int] = set()
        for u, v in self.pairs:
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
            if u in seen or v in seen:
                raise ValueError(f"vertex reused by matching pair ({u}, {v})")
            seen.update((u, v))


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are pairwise adjacent.

    For each edge the neighbor bitsets of its endpoints are intersected;
    a non-empty intersection is a triangle.
    """
    adj = g.adj
    for u, v in g.edges:
        if adj[u] & adj[v]:
            return False
    return True


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching via augmenting paths with blossom
    contraction, valid for general (non-bipartite) graphs."""
    n = g.n
    neighbors = [list(bits(m)) for m in g.adj]
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> bool:
        for i in range(n):
            used[i] = False
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in neighbors[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Odd cycle reached: contract the blossom to its base.
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # Augment along the alternating path back to root.
                        while to != -1:
                            prev = parent[to]
                            nxt = match[prev]
                            match[prev] = to
                            match[to] = prev
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)

    pairs = frozenset(
        (v, match[v]) for v in range(n) if match[v] > v
    )
    return Matching(pairs)


def matching_number(g: Graph) -> int:
    return max_matching(g).size


def is_factor_critical(g: Graph) -> bool:
    """True iff ``g`` has odd order and deleting any single vertex leaves a
    graph with a perfect matching."""
    if g.n % 2 == 0 or g.n == 0:
        return False
    target = (g.n - 1) // 2
    if matching_number(g) != target:
        return False
    for v in range(g.n):
        if matching_number(g.remove_vertex(v)) != target:
            return False
    return True
