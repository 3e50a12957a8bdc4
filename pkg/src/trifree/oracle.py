"""Brute-force edge maximization on tiny instances.

This is the ground truth the solver, bound, and propagation tests are
measured against, so it stays deliberately naive: a lexicographic DFS
over labeled edge slots with only the trivially safe prunes (triangle
rule, degree caps, count of remaining pairs).  No orbits, no capacity
bound -- nothing shared with the search engine.
"""

from __future__ import annotations

from .graphs import Graph, all_pairs

MAX_N = 11
MAX_NODE_N = 9


class CapExceededError(ValueError):
    """Instance too large for exhaustive enumeration."""


def brute_force_max(n: int, d: int) -> tuple[int, Graph]:
    """Exact maximum edge count over triangle-free graphs on ``n`` labeled
    vertices with maximum degree <= d, plus one maximizing graph."""
    if n > MAX_N:
        raise CapExceededError(f"n={n} exceeds the brute-force cap of {MAX_N}")
    if n < 0 or d < 0:
        raise ValueError("need n >= 0 and d >= 0")

    pairs = list(all_pairs(n))
    total = len(pairs)
    adj = [0] * n
    deg = [0] * n
    best = -1
    best_adj = [0] * n

    def dfs(idx: int, count: int) -> None:
        nonlocal best, best_adj
        if count > best:
            best = count
            best_adj = adj.copy()
        if idx == total or count + (total - idx) <= best:
            return
        u, v = pairs[idx]
        # Take the edge first so maximal graphs are reached early.
        if deg[u] < d and deg[v] < d and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            dfs(idx + 1, count + 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            deg[u] -= 1
            deg[v] -= 1
        dfs(idx + 1, count)

    dfs(0, 0)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if best_adj[u] >> v & 1
    ]
    return best, Graph(n, edges)


def brute_force_under_node(node, d: int) -> int | None:
    """Maximum edges over feasible completions of a partially fixed node,
    or None when no completion is feasible.

    Respects the node's fixed-one/fixed-zero pairs and per-vertex degree
    classes (caps, and exact-degree vertices checked at the leaves).
    """
    from .search import EXACTLY_D, vertex_cap  # local import avoids a cycle

    n = len(node.vertex_class)
    if n > MAX_NODE_N:
        raise CapExceededError(f"n={n} exceeds the node cap of {MAX_NODE_N}")

    caps = [vertex_cap(cls, d) for cls in node.vertex_class]
    exact = [cls is EXACTLY_D for cls in node.vertex_class]

    adj = [0] * n
    deg = [0] * n
    for u, v in node.f1:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        deg[u] += 1
        deg[v] += 1
    fixed_one = len(node.f1)
    # Fixed part must itself be sane, otherwise nothing completes it.
    for u in range(n):
        if deg[u] > caps[u]:
            return None
    for u, v in node.f1:
        if adj[u] & adj[v] & ~(1 << u) & ~(1 << v):
            return None

    free = [p for p in all_pairs(n) if p not in node.f1 and p not in node.f0]
    # Free pairs still open at each vertex, used only for the exact-degree
    # reachability prune (degree can never exceed deg + open slots).
    open_at = [0] * n
    for u, v in free:
        open_at[u] += 1
        open_at[v] += 1

    total = len(free)
    best = -1

    def exact_reachable() -> bool:
        for x in range(n):
            if exact[x] and deg[x] + open_at[x] < d:
                return False
        return True

    def dfs(idx: int, count: int) -> None:
        nonlocal best
        if idx == total:
            if all(deg[x] == d for x in range(n) if exact[x]):
                best = max(best, count)
            return
        if best >= 0 and count + (total - idx) <= best:
            return
        u, v = free[idx]
        open_at[u] -= 1
        open_at[v] -= 1
        if deg[u] < caps[u] and deg[v] < caps[v] and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
            dfs(idx + 1, count + 1)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            deg[u] -= 1
            deg[v] -= 1
        if exact_reachable():
            dfs(idx + 1, count)
        open_at[u] += 1
        open_at[v] += 1

    dfs(0, 0)
    return None if best < 0 else best + fixed_one
