"""Explicit witness constructions.

Three families cover everything the package emits:

* d-stars and the general-case blocks (complete graphs, or complete
  graphs minus a perfect matching plus a dominating vertex) realize the
  triangle-allowed maximum ``f_gen``.

* The apexed bipartite family realizes the triangle-free maximum for
  matching numbers strictly between d and Z(d): start from a complete
  bipartite graph with d+t vertices per side, remove t disjoint perfect
  matchings between the two (d-1)-vertex blocks, delete all edges
  between the two (t+1)-vertex blocks, and attach one apex to those
  2(t+1) vertices.  Every vertex then has degree d except the apex
  (degree 2t+2), and the edge count is d^2 + dt + t + 1.

* Components with matching number exactly Z(d): for odd d with
  Z(d) = (3d-3)/2 the same bipartite family at t = Z(d)-d is already
  almost d-regular; for d = 2 mod 4 a balanced 5-cycle blow-up is
  d-regular on 5d/2 vertices; remaining degrees ship as solver-found
  graph6 witnesses, verified on load.
"""

from __future__ import annotations

from importlib import resources
from typing import Mapping

from . import graph6
from .formula import UnknownZError, f_delta, z_of
from .graphs import (
    Graph,
    disjoint_union,
    is_factor_critical,
    is_triangle_free,
    matching_number,
)


class InvalidTError(ValueError):
    """Matching-number offset outside the valid range for this degree."""


class MissingComponentError(LookupError):
    """No verified component graph is available for this matching number."""


def d_star(d: int) -> Graph:
    """Star with center 0 and leaves 1..d; matching number 1."""
    if d < 1:
        raise ValueError("star degree must be >= 1")
    return Graph(d + 1, ((0, leaf) for leaf in range(1, d + 1)))


def complete_graph(k: int) -> Graph:
    return Graph(k, ((u, v) for u in range(k) for v in range(u + 1, k)))


def near_complete_block(d: int) -> Graph:
    """Complete graph on d+1 vertices minus the perfect matching
    {(2i, 2i+1)}, plus a new vertex adjacent to vertices 0..d-1.

    Requires d odd (so d+1 is even and the matching is perfect).  The
    fixed matching and attachment order keep the output deterministic.
    """
    if d % 2 == 0:
        raise ValueError("near-complete block needs an odd degree bound")
    k = d + 1
    edges = [
        (u, v)
        for u in range(k)
        for v in range(u + 1, k)
        if not (u % 2 == 0 and v == u + 1)
    ]
    edges.extend((u, k) for u in range(d))
    return Graph(k + 1, edges)


def general_extremal(d: int, m: int) -> Graph:
    """Disjoint union of q complete-ish blocks and r d-stars realizing
    f_gen(d, m), with m = q*ceil(d/2) + r and q maximal."""
    if d < 1 or m < 1:
        raise ValueError("need d >= 1 and m >= 1")
    half_up = (d + 1) // 2
    q, r = divmod(m, half_up)
    block = complete_graph(d + 1) if d % 2 == 0 else near_complete_block(d)
    return disjoint_union([block] * q + [d_star(d)] * r)


def _apexed_bipartite(d: int, t: int) -> Graph:
    """The shared builder behind ``b_graph``; no range validation."""
    side = d + t
    # Left side: big block 0..d-2, small block d-1..d+t-1; right side is
    # the same layout shifted by ``side``; the apex is the last vertex.
    right = side
    apex = 2 * side
    big = d - 1

    def removed(i: int, j: int) -> bool:
        # t disjoint perfect matchings between the big blocks: cyclic
        # shifts s = 0..t-1 of an identity matching, distinct for t < d-1.
        if i < big and j < big:
            return (j - i) % big < t
        # No edges between the two small blocks.
        return i >= big and j >= big

    edges = [
        (i, right + j)
        for i in range(side)
        for j in range(side)
        if not removed(i, j)
    ]
    edges.extend((apex, i) for i in range(big, side))
    edges.extend((apex, right + j) for j in range(big, side))
    return Graph(apex + 1, edges)


def b_graph(d: int, t: int) -> Graph:
    """Triangle-free graph on 2(d+t)+1 vertices with d^2 + dt + t + 1
    edges, matching number d+t, all degrees d except one apex of degree
    2t+2.  Valid for 0 <= t < Z(d) - d (t = 0 for any d >= 2)."""
    if d < 2:
        raise InvalidTError("degree bound must be >= 2")
    if t < 0:
        raise InvalidTError("matching offset must be >= 0")
    if t > 0:
        if d < 7:
            raise InvalidTError(f"positive offsets need d >= 7, got d={d}")
        z = z_of(d)
        if not z.is_exact:
            raise InvalidTError(f"Z({d}) unknown; only t=0 is constructible")
        if t >= z.value - d:
            raise InvalidTError(
                f"t={t} out of range: need t < Z({d}) - {d} = {z.value - d}"
            )
    return _apexed_bipartite(d, t)


def _c5_blowup(s: int) -> Graph:
    """Balanced blow-up of the 5-cycle: classes of size s, complete links
    between cyclically adjacent classes; 2s-regular and triangle-free."""
    edges = [
        (c * s + i, ((c + 1) % 5) * s + j)
        for c in range(5)
        for i in range(s)
        for j in range(s)
    ]
    return Graph(5 * s, edges)


def _verify_component(g: Graph, d: int, i: int) -> Graph:
    """Assert the component contract before handing a graph out.

    The expected edge count is the conjectured formula value, which for
    every settled pair coincides with the proved optimum; the remaining
    checks (size, degrees, triangle-freeness, matching number,
    factor-criticality) are computed on the spot.
    """
    expected = f_delta(d, i, assume_conjecture=True)
    if g.n != 2 * i + 1:
        raise MissingComponentError(
            f"component for (d={d}, i={i}) has {g.n} vertices, want {2 * i + 1}"
        )
    if g.edge_count() != expected:
        raise MissingComponentError(
            f"component for (d={d}, i={i}) has {g.edge_count()} edges, "
            f"want {expected}"
        )
    if g.max_degree() > d or not is_triangle_free(g):
        raise MissingComponentError(
            f"component for (d={d}, i={i}) violates degree/triangle bounds"
        )
    if matching_number(g) != i or not is_factor_critical(g):
        raise MissingComponentError(
            f"component for (d={d}, i={i}) is not factor-critical with "
            f"matching number {i}"
        )
    return g


def _witness_path(d: int):
    return resources.files("trifree").joinpath(
        "data", "witnesses", f"component_d{d}_m{z_of(d).value}.g6"
    )


def extremal_component(d: int, i: int) -> Graph:
    """A verified factor-critical triangle-free component attaining
    f_delta(d, i), for d <= i <= Z(d)."""
    z = z_of(d)
    if not z.is_exact:
        raise UnknownZError(f"Z({d}) unknown")
    if not d <= i <= z.value:
        raise MissingComponentError(
            f"components exist only for {d} <= i <= {z.value}, got i={i}"
        )
    if i < z.value:
        return _verify_component(b_graph(d, i - d), d, i)
    # i == Z(d): three sources, all verified.
    if d % 2 == 1 and 2 * z.value == 3 * d - 3:
        # The apexed family one step past its usual range is almost
        # d-regular here (apex degree 2(Z-d)+2 = d-1).
        return _verify_component(_apexed_bipartite(d, z.value - d), d, i)
    if d % 4 == 2:
        return _verify_component(_c5_blowup(d // 2), d, i)
    path = _witness_path(d)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise MissingComponentError(
            f"no bundled witness for (d={d}, i={i}); produce one with "
            f"'trifree solve --d {d} --m {i} --method iterative-orbital'"
        ) from None
    return _verify_component(graph6.from_graph6(data), d, i)


def assemble(plan, component_graphs: Mapping[int, Graph]) -> Graph:
    """Disjoint union of plan.star_count d-stars plus the requested counts
    of each component, components in increasing matching number."""
    parts: list[Graph] = []
    for i in sorted(plan.counts):
        count = plan.counts[i]
        if count == 0:
            continue
        if i not in component_graphs:
            raise MissingComponentError(
                f"plan needs a component with matching number {i}"
            )
        parts.extend([component_graphs[i]] * count)
    parts.extend([d_star(plan.d)] * plan.star_count)
    union = disjoint_union(parts)
    if union.edge_count() != plan.objective:
        raise ValueError(
            f"assembled graph has {union.edge_count()} edges but the plan "
            f"promises {plan.objective}; component graphs are not extremal"
        )
    return union
