"""Shared test utilities: tiny independent oracles and random generators.

Everything here is deliberately naive -- these are the references the
package is measured against, so they must not share code paths with it.
"""

from __future__ import annotations

import itertools
import random

from trifree.graphs import Graph, all_pairs
from trifree.search import (
    AT_MOST_D,
    AT_MOST_D_MINUS_1,
    EXACTLY_D,
    SearchNode,
    vertex_cap,
)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [pair for pair in all_pairs(n) if rng.random() < p]
    return Graph(n, edges)


def matching_size_by_enumeration(g: Graph) -> int:
    """Maximum matching size via DFS over edge subsets."""
    edges = sorted(g.edges)
    best = 0

    def rec(idx: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if idx == len(edges) or size + (len(edges) - idx) <= best:
            return
        for j in range(idx, len(edges)):
            u, v = edges[j]
            if not (used >> u & 1 or used >> v & 1):
                rec(j + 1, used | 1 << u | 1 << v, size + 1)

    rec(0, 0, 0)
    return best


def has_triangle_by_triples(g: Graph) -> bool:
    """Exhaustive triple scan, independent of the bitset-based check."""
    for a, b, c in itertools.combinations(range(g.n), 3):
        if (
            (a, b) in g.edges
            and (a, c) in g.edges
            and (b, c) in g.edges
        ):
            return True
    return False


def max_edges_triangle_allowed(n: int, d: int, m: int) -> int:
    """Maximum edges over ALL graphs on <= n vertices with max degree <= d
    and matching number <= m (triangles allowed); DFS with degree caps and
    a matching-number prune."""
    pairs = list(all_pairs(n))
    best = 0

    def rec(idx: int, edges: list, deg: list) -> None:
        nonlocal best
        if len(edges) > best:
            if matching_size_by_enumeration(Graph(n, edges)) <= m:
                best = len(edges)
            else:
                return  # matching number only grows along this branch
        if idx == len(pairs) or len(edges) + (len(pairs) - idx) <= best:
            return
        u, v = pairs[idx]
        if deg[u] < d and deg[v] < d:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
            rec(idx + 1, edges, deg)
            edges.pop()
            deg[u] -= 1
            deg[v] -= 1
        rec(idx + 1, edges, deg)

    rec(0, [], [0] * n)
    return best


def random_search_node(
    rng: random.Random,
    n: int,
    d: int,
    *,
    allow_exact: bool = True,
    fix_fraction: float = 0.5,
) -> SearchNode:
    """Random consistent partial assignment: F1 stays triangle-free and
    within per-class degree caps; remaining pairs split between F0 and
    free."""
    classes = []
    for _ in range(n):
        roll = rng.random()
        if allow_exact and roll < 0.25:
            classes.append(EXACTLY_D)
        elif roll < 0.5:
            classes.append(AT_MOST_D_MINUS_1)
        else:
            classes.append(AT_MOST_D)
    caps = [vertex_cap(cls, d) for cls in classes]

    pairs = list(all_pairs(n))
    rng.shuffle(pairs)
    adj = [0] * n
    deg = [0] * n
    f1, f0 = set(), set()
    for u, v in pairs:
        roll = rng.random()
        if roll < fix_fraction * 0.4:
            if deg[u] < caps[u] and deg[v] < caps[v] and not adj[u] & adj[v]:
                f1.add((u, v))
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                deg[u] += 1
                deg[v] += 1
        elif roll < fix_fraction:
            f0.add((u, v))
    return SearchNode(frozenset(f1), frozenset(f0), 0, tuple(classes))


def node_feasible_completions(node: SearchNode, d: int) -> set[frozenset]:
    """All feasible completions of a node, as frozensets of full edge sets.

    Enumerates every subset of the free pairs and filters by triangle-
    freeness and the degree classes.
    """
    n = node.n
    caps = [vertex_cap(cls, d) for cls in node.vertex_class]
    free = [p for p in all_pairs(n) if p not in node.f1 and p not in node.f0]
    out = set()
    for bitsel in range(1 << len(free)):
        chosen = {free[i] for i in range(len(free)) if bitsel >> i & 1}
        edge_set = set(node.f1) | chosen
        g = Graph(n, edge_set)
        if not graph_is_triangle_free_naive(g):
            continue
        ok = True
        for v in range(n):
            degv = g.degree(v)
            if degv > caps[v]:
                ok = False
                break
            if node.vertex_class[v] == EXACTLY_D and degv != d:
                ok = False
                break
        if ok:
            out.add(frozenset(edge_set))
    return out


def graph_is_triangle_free_naive(g: Graph) -> bool:
    return not has_triangle_by_triples(g)
