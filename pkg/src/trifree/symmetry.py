"""Symmetries of a partially fixed instance and the orbits they induce.

A node of the search is abstracted as a complete edge-colored graph:
every vertex pair is Free, FixedOne, or FixedZero, and vertices carry
class labels (their degree-cap roles).  A symmetry is a vertex
permutation preserving vertex labels and all pair colors; relabeling a
feasible completion by such a permutation yields a feasible completion
with the same edge count, which is exactly what orbit branching needs.

Generators are found in two stages on top of an equitable refinement of
the vertex partition:

1. Cells whose pairs are monochromatic within the cell and toward every
   other cell admit the full symmetric group on the cell; a transposition
   and a cycle are emitted per such cell.  This covers the nearly
   uniform models that dominate the shallow search tree.

2. For the remaining cells, a budgeted backtracking search pins
   ``cell[0] -> v`` and tries to extend to a full color-preserving
   permutation, merging vertex orbits as generators are found.

Every returned permutation is re-verified against the model, so orbit
soundness never depends on the extraction heuristics; missing a
generator only makes orbits finer, which costs pruning, not
correctness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Pair, all_pairs, normalize_pair

FREE = 0
FIXED_ONE = 1
FIXED_ZERO = 2


class ColoredModel:
    """Complete edge-colored graph with vertex class labels."""

    __slots__ = ("n", "vertex_colors", "one_mask", "zero_mask")

    def __init__(
        self,
        n: int,
        vertex_colors: Sequence | None = None,
        fixed_one: Iterable[Pair] = (),
        fixed_zero: Iterable[Pair] = (),
    ):
        if vertex_colors is None:
            vertex_colors = (0,) * n
        if len(vertex_colors) != n:
            raise ValueError("vertex color list must have length n")
        one = [0] * n
        zero = [0] * n
        for u, v in fixed_one:
            u, v = normalize_pair(u, v)
            one[u] |= 1 << v
            one[v] |= 1 << u
        for u, v in fixed_zero:
            u, v = normalize_pair(u, v)
            if one[u] >> v & 1:
                raise ValueError(f"pair ({u}, {v}) fixed to both 0 and 1")
            zero[u] |= 1 << v
            zero[v] |= 1 << u
        self.n = n
        self.vertex_colors = tuple(vertex_colors)
        self.one_mask = tuple(one)
        self.zero_mask = tuple(zero)

    def edge_color(self, u: int, v: int) -> int:
        if self.one_mask[u] >> v & 1:
            return FIXED_ONE
        if self.zero_mask[u] >> v & 1:
            return FIXED_ZERO
        return FREE

    def free_pairs(self) -> list[Pair]:
        return [
            (u, v)
            for u, v in all_pairs(self.n)
            if not (self.one_mask[u] | self.zero_mask[u]) >> v & 1
        ]


@dataclass(frozen=True)
class OrbitPartition:
    """Disjoint classes of Free pairs, each with its smallest pair as
    representative, ordered by representative."""

    classes: tuple[tuple[Pair, ...], ...]

    @property
    def representatives(self) -> tuple[Pair, ...]:
        return tuple(cls[0] for cls in self.classes)

    def class_sizes(self) -> list[int]:
        return [len(cls) for cls in self.classes]


def is_color_automorphism(model: ColoredModel, perm: Sequence[int]) -> bool:
    """Check that ``perm`` preserves vertex colors and all pair colors."""
    n = model.n
    if sorted(perm) != list(range(n)):
        return False
    colors = model.vertex_colors
    one = model.one_mask
    zero = model.zero_mask
    for u in range(n):
        pu = perm[u]
        if colors[u] != colors[pu]:
            return False
        ou, zu = one[u], zero[u]
        pou, pzu = one[pu], zero[pu]
        for v in range(u + 1, n):
            pv = perm[v]
            if ou >> v & 1 != pou >> pv & 1 or zu >> v & 1 != pzu >> pv & 1:
                return False
    return True


def _initial_cells(model: ColoredModel) -> list[list[int]]:
    groups: dict = {}
    for v in range(model.n):
        groups.setdefault(model.vertex_colors[v], []).append(v)
    # First-appearance order keeps the partition deterministic without
    # requiring vertex colors to be mutually comparable.
    return list(groups.values())


def _refine(model: ColoredModel, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells until every vertex in a cell has
    the same number of FixedOne and FixedZero pairs into every cell."""
    one = model.one_mask
    zero = model.zero_mask
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                ov, zv = one[v], zero[v]
                sig = tuple(
                    ((ov & m).bit_count(), (zv & m).bit_count()) for m in masks
                )
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _homogeneous(model: ColoredModel, cell: list[int], others: list[int]) -> bool:
    """True when all within-cell pairs share one color and, for every other
    cell mask, all cross pairs share one color; such a cell supports the
    full symmetric group acting on it alone."""
    one = model.one_mask
    zero = model.zero_mask
    cell_mask = 0
    for v in cell:
        cell_mask |= 1 << v
    for v in cell:
        rest = cell_mask & ~(1 << v)
        o, z = one[v] & rest, zero[v] & rest
        if o not in (0, rest) or z not in (0, rest) or (o and z):
            return False
        if v != cell[0]:
            if (o != 0) != first_o or (z != 0) != first_z:
                return False
        else:
            first_o, first_z = o != 0, z != 0
    for m in others:
        ref_o = ref_z = None
        for v in cell:
            o, z = one[v] & m, zero[v] & m
            if o not in (0, m) or z not in (0, m) or (o and z):
                return False
            if ref_o is None:
                ref_o, ref_z = o, z
            elif (o, z) != (ref_o, ref_z):
                return False
    return True


def _cycle_perm(n: int, cycle: list[int]) -> tuple[int, ...]:
    perm = list(range(n))
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        perm[a] = b
    return tuple(perm)


def _transposition(n: int, a: int, b: int) -> tuple[int, ...]:
    perm = list(range(n))
    perm[a], perm[b] = b, a
    return tuple(perm)


def _find_automorphism(
    model: ColoredModel,
    cells: list[list[int]],
    src: int,
    dst: int,
    budget: int,
) -> tuple[int, ...] | None:
    """Search for a color automorphism mapping src -> dst, extending
    cell-respecting partial maps; gives up after ``budget`` candidate
    placements."""
    n = model.n
    one = model.one_mask
    zero = model.zero_mask
    cell_index = {}
    for ci, cell in enumerate(cells):
        for v in cell:
            cell_index[v] = ci

    order = [src] + [v for v in range(n) if v != src]
    order.sort(key=lambda v: (0 if v == src else 1, cell_index[v], v))
    image = [-1] * n
    used = [False] * n
    assigned: list[int] = []
    attempts = 0

    def consistent(u: int, x: int) -> bool:
        ou, zu = one[u], zero[u]
        ox, zx = one[x], zero[x]
        for w in assigned:
            iw = image[w]
            if ou >> w & 1 != ox >> iw & 1 or zu >> w & 1 != zx >> iw & 1:
                return False
        return True

    def extend(pos: int) -> bool:
        nonlocal attempts
        if pos == n:
            return True
        u = order[pos]
        candidates = [dst] if u == src else cells[cell_index[u]]
        for x in candidates:
            if used[x]:
                continue
            attempts += 1
            if attempts > budget:
                return False
            if consistent(u, x):
                image[u] = x
                used[x] = True
                assigned.append(u)
                if extend(pos + 1):
                    return True
                assigned.pop()
                used[x] = False
                image[u] = -1
        return False

    if extend(0):
        return tuple(image)
    return None


def automorphism_generators(
    model: ColoredModel, search_budget: int = 4000
) -> list[tuple[int, ...]]:
    """Generators of a subgroup of the color-preserving automorphism
    group.  The subgroup may be proper when the budgeted search gives up;
    every returned permutation is verified before it is returned."""
    n = model.n
    cells = _refine(model, _initial_cells(model))
    masks = [sum(1 << v for v in cell) for cell in cells]
    gens: list[tuple[int, ...]] = []

    # Vertex-orbit union-find over generators found so far.
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union_perm(perm: Sequence[int]) -> None:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[a] = b

    pending: list[list[int]] = []
    for ci, cell in enumerate(cells):
        if len(cell) < 2:
            continue
        others = masks[:ci] + masks[ci + 1:]
        if _homogeneous(model, cell, others):
            swap = _transposition(n, cell[0], cell[1])
            if is_color_automorphism(model, swap):
                gens.append(swap)
                union_perm(swap)
            if len(cell) > 2:
                cyc = _cycle_perm(n, cell)
                if is_color_automorphism(model, cyc):
                    gens.append(cyc)
                    union_perm(cyc)
        else:
            pending.append(cell)

    for cell in pending:
        head = cell[0]
        for v in cell[1:]:
            if find(v) == find(head):
                continue
            perm = _find_automorphism(model, cells, head, v, search_budget)
            if perm is not None and is_color_automorphism(model, perm):
                gens.append(perm)
                union_perm(perm)
    return gens


def orbits(
    model: ColoredModel,
    generators: list[tuple[int, ...]] | None = None,
) -> OrbitPartition:
    """Partition of the Free pairs into orbit classes of the generated
    subgroup; sound for orbit branching by construction."""
    if generators is None:
        generators = automorphism_generators(model)
    free = model.free_pairs()
    index = {p: k for k, p in enumerate(free)}
    parent = list(range(len(free)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in generators:
        for p, k in index.items():
            u, v = p
            q = normalize_pair(perm[u], perm[v])
            a, b = find(k), find(index[q])
            if a != b:
                parent[a] = b

    grouped: dict[int, list[Pair]] = {}
    for p, k in index.items():
        grouped.setdefault(find(k), []).append(p)
    classes = sorted((tuple(sorted(cls)) for cls in grouped.values()))
    return OrbitPartition(classes=tuple(classes))
