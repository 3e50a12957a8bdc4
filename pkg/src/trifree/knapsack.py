"""Bounded-knapsack composition of extremal graphs.

For a fixed degree bound d, an edge-extremal graph with matching budget
m is a disjoint union of extremal components (matching numbers i between
d and Z(d), utility f_delta(d, i) - d*i, volume i) plus d-stars filling
the leftover budget at d edges per unit.  The total is

    d*m + sum_i (f_delta(d, i) - d*i) * x_i,   sum_i i*x_i <= m.

The DP below maximizes that and reconstructs a plan under a fixed
tie-breaking rule (most components with matching number Z(d), then
fewest non-star components, then most stars) so composition tables are
byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .formula import UnknownZError, z_of


class MissingUtilityError(ValueError):
    """The utility map does not cover every matching number in [d, Z(d)]."""


@dataclass(frozen=True)
class KnapsackPlan:
    """Component multiset for one (d, m) composition.

    ``counts`` maps each matching number i in [d, Z(d)] to the number of
    components used; ``star_count`` d-stars fill the rest of the budget;
    ``objective`` is the resulting edge count.
    """

    d: int
    m: int
    counts: dict[int, int]
    star_count: int = 0
    objective: int = 0

    @property
    def used_volume(self) -> int:
        return sum(i * x for i, x in self.counts.items())

    def component_total(self) -> int:
        return sum(self.counts.values())


def solve_knapsack(d: int, m: int, utilities: Mapping[int, int]) -> KnapsackPlan:
    """Optimal plan via DP over the matching budget.

    ``utilities[i]`` must be f_delta(d, i) for every i in [d, Z(d)].
    Ties are broken toward more Z(d)-components, then fewer non-star
    components, then more stars.
    """
    if m < 1:
        raise ValueError("matching budget must be >= 1")
    z = z_of(d)
    if not z.is_exact:
        raise UnknownZError(f"Z({d}) unknown; cannot enumerate components")
    zval = z.value
    items = list(range(d, zval + 1))
    missing = [i for i in items if i not in utilities]
    if missing:
        raise MissingUtilityError(f"missing utilities for matching numbers {missing}")
    net = {i: utilities[i] - d * i for i in items}

    # dp[c]: lexicographically best (value, z_count, -components) over
    # plans of volume exactly c; additive tie-break vectors make the
    # lexicographic DP exact.  None marks unreachable volumes.
    NEG = None
    dp: list[tuple[int, int, int] | None] = [NEG] * (m + 1)
    dp[0] = (0, 0, 0)
    for c in range(d, m + 1):
        best = NEG
        for i in items:
            if i > c or dp[c - i] is None:
                continue
            value, zc, negcomp = dp[c - i]
            cand = (value + net[i], zc + (1 if i == zval else 0), negcomp - 1)
            if best is None or cand > best:
                best = cand
        dp[c] = best

    # Star count enters last: among equal (value, z_count, components),
    # prefer the smallest used volume, i.e. the most stars.
    best_c = 0
    best_key = (*dp[0], 0)
    for c in range(1, m + 1):
        if dp[c] is None:
            continue
        key = (*dp[c], -c)
        if key > best_key:
            best_key = key
            best_c = c

    counts = {i: 0 for i in items}
    c = best_c
    state = dp[c]
    while c > 0:
        for i in sorted(items, reverse=True):
            prev = dp[c - i] if i <= c else None
            if prev is None:
                continue
            value, zc, negcomp = prev
            if (value + net[i], zc + (1 if i == zval else 0), negcomp - 1) == state:
                counts[i] += 1
                c -= i
                state = prev
                break
        else:
            raise AssertionError("DP reconstruction failed")

    star_count = m - best_c
    objective = d * m + best_key[0]
    return KnapsackPlan(d=d, m=m, counts=counts, star_count=star_count,
                        objective=objective)


def check_special_structure(plan: KnapsackPlan) -> bool:
    """True iff at most one component has matching number below Z(d)."""
    zval = z_of(plan.d).value
    return sum(x for i, x in plan.counts.items() if i < zval) <= 1
