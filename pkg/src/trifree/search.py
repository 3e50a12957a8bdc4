"""Branch-and-bound engines for edge-maximal triangle-free graphs.

The model is fixed for the whole module: 2m+1 labeled vertices, one
binary variable per vertex pair, triangle constraints, and per-vertex
degree classes.  ``basic`` search uses the plain degree cap everywhere;
the ``iterative`` driver sweeps restricted subproblems that pin most
degrees to exactly d, lowering a global upper bound one half-unit of
degree at a time; the ``orbital`` variants branch on whole symmetry
orbits of the free pairs (representative to one / entire orbit to zero)
while the orbits stay informative, then fall back to single-variable
branching.

Propagation is the triangle rule, degree-cap saturation, and forced
completion of exact-degree vertices, run to a fixed point over bitmask
adjacency state.  The node bound is the degree-capacity value
|F1| + floor(sum_v min(cap(v) - deg1(v), free(v)) / 2); the engine adds
one extra sound feasibility cut (degree-sum parity when only
exact-degree vertices retain free pairs), which is what disposes of the
all-degrees-exactly-d subproblems on an odd degree sum instantly.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .formula import Instance
from .graphs import Graph, Pair, bits, is_triangle_free
from .symmetry import ColoredModel, orbits

EXACTLY_D = "exactly_d"
AT_MOST_D = "at_most_d"
AT_MOST_D_MINUS_1 = "at_most_d_minus_1"
_CLASSES = (EXACTLY_D, AT_MOST_D, AT_MOST_D_MINUS_1)

METHOD_BASIC = "basic"
METHOD_ORBITAL = "orbital"
METHOD_ITERATIVE = "iterative"
METHOD_ITERATIVE_ORBITAL = "iterative-orbital"
METHOD_ORACLE = "oracle"
METHODS = (
    METHOD_BASIC,
    METHOD_ORBITAL,
    METHOD_ITERATIVE,
    METHOD_ITERATIVE_ORBITAL,
    METHOD_ORACLE,
)

STATUS_OPTIMAL = "optimal"
STATUS_TIME_LIMIT = "time_limit"
STATUS_INFEASIBLE = "infeasible"

RULE_MAX_ORBIT = "max-orbit"
RULE_MAX_SATURATION_LEX = "max-saturation-lex"

TIME_LIMIT_ENV = "TRIFREE_TIME_LIMIT"
DEFAULT_TIME_LIMIT_S = 3600.0


def vertex_cap(cls: str, d: int) -> int:
    if cls == AT_MOST_D_MINUS_1:
        return d - 1
    if cls in (AT_MOST_D, EXACTLY_D):
        return d
    raise ValueError(f"unknown vertex class {cls!r}")


class Conflict:
    """Propagation result marking a node with no feasible completion."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "Conflict"


CONFLICT = Conflict()


@dataclass(frozen=True)
class SearchNode:
    """Partial assignment: pairs fixed to one / zero plus vertex classes."""

    f1: frozenset[Pair]
    f0: frozenset[Pair]
    depth: int
    vertex_class: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.vertex_class)

    @classmethod
    def root(cls, n: int, vertex_class: Sequence[str] | None = None) -> "SearchNode":
        classes = tuple(vertex_class) if vertex_class else (AT_MOST_D,) * n
        return cls(frozenset(), frozenset(), 0, classes)


@dataclass
class SolverConfig:
    method: str = METHOD_ITERATIVE_ORBITAL
    time_limit_s: float | None = None
    orbit_depth_cutoff: str | int = "adaptive"
    branch_rule: str | None = None
    workers: int = 1
    deterministic: bool = True
    lex_degree_cut: bool = True
    seed: int | None = None  # reserved; search is deterministic

    def resolved_time_limit(self) -> float:
        if self.time_limit_s is not None:
            return float(self.time_limit_s)
        return float(os.environ.get(TIME_LIMIT_ENV, DEFAULT_TIME_LIMIT_S))

    def validate(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; choose from {METHODS}")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.resolved_time_limit() <= 0:
            raise ValueError("time limit must be positive")
        if isinstance(self.orbit_depth_cutoff, str):
            if self.orbit_depth_cutoff not in ("adaptive", "off"):
                raise ValueError("orbit_depth_cutoff must be adaptive, off, or an int")
        elif self.orbit_depth_cutoff < 0:
            raise ValueError("fixed orbit depth cutoff must be >= 0")
        if self.branch_rule not in (None, RULE_MAX_ORBIT, RULE_MAX_SATURATION_LEX):
            raise ValueError(f"unknown branch rule {self.branch_rule!r}")
        if self.branch_rule == RULE_MAX_ORBIT and self.method not in (
            METHOD_ORBITAL,
            METHOD_ITERATIVE_ORBITAL,
        ):
            raise ValueError("max-orbit branching needs an orbital method")


@dataclass
class SolveStats:
    nodes: int = 0
    wall_s: float = 0.0
    orbit_s: float = 0.0
    orbit_calls: int = 0
    iterations: list[dict] = field(default_factory=list)
    ub_history: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "wall_s": round(self.wall_s, 3),
            "orbit_s": round(self.orbit_s, 3),
            "orbit_calls": self.orbit_calls,
            "iterations": self.iterations,
            "ub_history": self.ub_history,
        }


@dataclass
class SolveResult:
    lb: int
    ub: int
    incumbent: Graph | None
    status: str
    stats: SolveStats

    def to_dict(self) -> dict:
        from . import graph6

        return {
            "lb": self.lb,
            "ub": self.ub,
            "status": self.status,
            "incumbent_graph6": (
                graph6.to_graph6(self.incumbent).decode("ascii")
                if self.incumbent is not None
                else None
            ),
            "stats": self.stats.to_dict(),
        }


# ---------------------------------------------------------------------------
# Propagation fixed point over bitmask state.
# ---------------------------------------------------------------------------


class _State:
    __slots__ = ("adj1", "adj0", "deg1", "edges", "free_count")

    def __init__(self, adj1, adj0, deg1, edges, free_count):
        self.adj1 = adj1
        self.adj0 = adj0
        self.deg1 = deg1
        self.edges = edges
        self.free_count = free_count


def _fixpoint(
    n: int,
    d: int,
    caps: Sequence[int],
    exact_mask: int,
    full: Sequence[int],
    st: _State,
    queue: list[tuple[int, int, int]],
    recheck_all: bool,
) -> bool:
    """Drive the triangle / saturation / forced-completion rules to a fixed
    point.  Returns False on conflict; mutates ``st`` and ``queue``."""
    adj1, adj0, deg1 = st.adj1, st.adj0, st.deg1

    def exact_ok(x: int) -> bool:
        free_m = full[x] & ~adj1[x] & ~adj0[x]
        need = d - deg1[x]
        cnt = free_m.bit_count()
        if cnt < need:
            return False
        if cnt == need and need:
            for w in bits(free_m):
                queue.append((x, w, 1))
        return True

    qi = 0
    checked_all = not recheck_all
    while True:
        while qi < len(queue):
            u, v, val = queue[qi]
            qi += 1
            bu, bv = 1 << u, 1 << v
            if val:
                if adj0[u] & bv:
                    return False
                if adj1[u] & bv:
                    continue
                if adj1[u] & adj1[v]:
                    return False  # would close a triangle inside F1
                adj1[u] |= bv
                adj1[v] |= bu
                st.edges += 1
                st.free_count -= 1
                deg1[u] += 1
                deg1[v] += 1
                if deg1[u] > caps[u] or deg1[v] > caps[v]:
                    return False
                for w in bits(adj1[u] & ~bv):
                    queue.append((v, w, 0))
                for w in bits(adj1[v] & ~bu):
                    queue.append((u, w, 0))
                if deg1[u] == caps[u]:
                    for w in bits(full[u] & ~adj1[u] & ~adj0[u]):
                        queue.append((u, w, 0))
                if deg1[v] == caps[v]:
                    for w in bits(full[v] & ~adj1[v] & ~adj0[v]):
                        queue.append((v, w, 0))
                if exact_mask >> u & 1 and not exact_ok(u):
                    return False
                if exact_mask >> v & 1 and not exact_ok(v):
                    return False
            else:
                if adj1[u] & bv:
                    return False
                if adj0[u] & bv:
                    continue
                adj0[u] |= bv
                adj0[v] |= bu
                st.free_count -= 1
                if exact_mask >> u & 1 and not exact_ok(u):
                    return False
                if exact_mask >> v & 1 and not exact_ok(v):
                    return False
        if checked_all:
            return True
        checked_all = True
        for x in range(n):
            if deg1[x] == caps[x]:
                for w in bits(full[x] & ~adj1[x] & ~adj0[x]):
                    queue.append((x, w, 0))
            if exact_mask >> x & 1 and not exact_ok(x):
                return False


def _node_setup(node: SearchNode, d: int):
    n = node.n
    caps = [vertex_cap(cls, d) for cls in node.vertex_class]
    exact_mask = 0
    for v, cls in enumerate(node.vertex_class):
        if cls == EXACTLY_D:
            exact_mask |= 1 << v
    full = [((1 << n) - 1) ^ (1 << v) for v in range(n)]
    return n, caps, exact_mask, full


def propagate(node: SearchNode, d: int) -> SearchNode | Conflict:
    """Fixed point of the triangle rule, degree saturation, and forced
    completion of exact-degree vertices; CONFLICT when infeasible."""
    n, caps, exact_mask, full = _node_setup(node, d)
    st = _State([0] * n, [0] * n, [0] * n, 0, n * (n - 1) // 2)
    queue = [(u, v, 1) for u, v in sorted(node.f1)]
    queue += [(u, v, 0) for u, v in sorted(node.f0)]
    if not _fixpoint(n, d, caps, exact_mask, full, st, queue, recheck_all=True):
        return CONFLICT
    f1 = frozenset(
        (u, v) for u in range(n) for v in bits(st.adj1[u]) if v > u
    )
    f0 = frozenset(
        (u, v) for u in range(n) for v in bits(st.adj0[u]) if v > u
    )
    return SearchNode(f1, f0, node.depth, node.vertex_class)


def bound(node: SearchNode, d: int) -> int:
    """Degree-capacity upper bound on the edges of any feasible completion
    of a propagated node."""
    n, caps, _, full = _node_setup(node, d)
    adj1 = [0] * n
    adj0 = [0] * n
    for u, v in node.f1:
        adj1[u] |= 1 << v
        adj1[v] |= 1 << u
    for u, v in node.f0:
        adj0[u] |= 1 << v
        adj0[v] |= 1 << u
    total = 0
    for v in range(n):
        slack = caps[v] - adj1[v].bit_count()
        free_v = (full[v] & ~adj1[v] & ~adj0[v]).bit_count()
        total += slack if slack < free_v else free_v
    return len(node.f1) + total // 2


# ---------------------------------------------------------------------------
# The depth-first engine shared by every method.
# ---------------------------------------------------------------------------


@dataclass
class _RunOutcome:
    best: int | None
    graph: Graph | None
    timed_out: bool
    infeasible_proved: bool
    abort_ub: int
    nodes: int


class _Engine:
    def __init__(
        self,
        n: int,
        d: int,
        classes: Sequence[str],
        cfg: SolverConfig,
        stats: SolveStats,
        deadline: float,
        cut_order: Sequence[int] = (),
    ):
        self.n = n
        self.d = d
        self.classes = tuple(classes)
        self.cfg = cfg
        self.stats = stats
        self.deadline = deadline
        self.cut_order = tuple(cut_order)
        self.caps = [vertex_cap(cls, d) for cls in classes]
        self.exact_mask = 0
        for v, cls in enumerate(classes):
            if cls == EXACTLY_D:
                self.exact_mask |= 1 << v
        self.full = [((1 << n) - 1) ^ (1 << v) for v in range(n)]
        self.orbital = cfg.method in (METHOD_ORBITAL, METHOD_ITERATIVE_ORBITAL)
        if cfg.branch_rule == RULE_MAX_SATURATION_LEX:
            self.orbital = False
        cutoff = cfg.orbit_depth_cutoff
        if cutoff == "adaptive":
            self.orbit_limit = n * n  # effectively unbounded until adapted
            self.adaptive = True
        elif cutoff == "off":
            self.orbit_limit = n * n
            self.adaptive = False
        else:
            self.orbit_limit = int(cutoff)
            self.adaptive = False
        # Distinct colors for cut vertices keep orbit branching sound in
        # the presence of the degree-ordering cut: symmetries may not
        # permute vertices the cut tells apart.
        colors: list = []
        cut_rank = {v: i for i, v in enumerate(self.cut_order)}
        for v, cls in enumerate(classes):
            if v in cut_rank and self.cut_used():
                colors.append((cls, cut_rank[v]))
            else:
                colors.append((cls, -1))
        self.model_colors = tuple(colors)

    def cut_used(self) -> bool:
        return bool(self.cut_order) and self.cfg.lex_degree_cut

    def root_capacity(self) -> int:
        return sum(self.caps) // 2

    def _bound(self, st: _State) -> int:
        total = 0
        adj1, adj0 = st.adj1, st.adj0
        caps, deg1, full = self.caps, st.deg1, self.full
        for v in range(self.n):
            slack = caps[v] - deg1[v]
            free_v = (full[v] & ~adj1[v] & ~adj0[v]).bit_count()
            total += slack if slack < free_v else free_v
        return st.edges + total // 2

    def _free_vertices_mask(self, st: _State) -> int:
        mask = 0
        for v in range(self.n):
            if self.full[v] & ~st.adj1[v] & ~st.adj0[v]:
                mask |= 1 << v
        return mask

    def _parity_infeasible(self, st: _State, free_vertices: int) -> bool:
        # Sound only when every vertex that still has free pairs must end
        # at degree exactly d: then the completion degree sum is forced.
        if free_vertices & ~self.exact_mask:
            return False
        total = 0
        for v in range(self.n):
            if self.exact_mask >> v & 1:
                total += self.d
            else:
                total += st.deg1[v]
        return total % 2 == 1

    def _cut_violated(self, st: _State) -> bool:
        order = self.cut_order
        for a, b in zip(order, order[1:]):
            slack_a = self.caps[a] - st.deg1[a]
            free_a = (self.full[a] & ~st.adj1[a] & ~st.adj0[a]).bit_count()
            max_a = st.deg1[a] + (slack_a if slack_a < free_a else free_a)
            if max_a < st.deg1[b]:
                return True
        return False

    def _graph_from(self, st: _State) -> Graph:
        edges = [
            (u, v) for u in range(self.n) for v in bits(st.adj1[u]) if v > u
        ]
        return Graph(self.n, edges)

    def _orbit_branch(self, st: _State):
        t0 = time.perf_counter()
        f1 = [(u, v) for u in range(self.n) for v in bits(st.adj1[u]) if v > u]
        f0 = [(u, v) for u in range(self.n) for v in bits(st.adj0[u]) if v > u]
        model = ColoredModel(self.n, self.model_colors, f1, f0)
        part = orbits(model)
        self.stats.orbit_calls += 1
        self.stats.orbit_s += time.perf_counter() - t0
        # Classes are sorted by representative, so max() resolves size
        # ties toward the smallest representative.
        return max(part.classes, key=len, default=None)

    def _fallback_pair(self, st: _State) -> Pair:
        best = None
        best_key = None
        adj1, adj0, deg1 = st.adj1, st.adj0, st.deg1
        for u in range(self.n):
            free_u = self.full[u] & ~adj1[u] & ~adj0[u]
            for v in bits(free_u):
                if v <= u:
                    continue
                key = (-(deg1[u] + deg1[v]), u, v)
                if best_key is None or key < best_key:
                    best_key = key
                    best = (u, v)
        return best

    def run(self, seed_lb: int | None) -> _RunOutcome:
        n = self.n
        best = -1
        best_graph: Graph | None = None
        seed = -1 if seed_lb is None else seed_lb
        seed_prune_used = False
        timed_out = False
        nodes = 0

        zero_state = (
            tuple([0] * n),
            tuple([0] * n),
            tuple([0] * n),
            0,
            n * (n - 1) // 2,
        )
        stack: list[tuple] = [
            (zero_state, [], 0, self.root_capacity())
        ]
        check_mask = 255

        while stack:
            if nodes & check_mask == 0 and time.perf_counter() > self.deadline:
                timed_out = True
                break
            snap, decisions, depth, parent_bound = stack.pop()
            lb_eff = best if best > seed else seed
            if parent_bound <= lb_eff:
                if best < lb_eff:
                    seed_prune_used = True
                continue
            st = _State(list(snap[0]), list(snap[1]), list(snap[2]), snap[3], snap[4])
            queue = list(decisions)
            nodes += 1
            if not _fixpoint(
                n, self.d, self.caps, self.exact_mask, self.full, st, queue,
                recheck_all=depth == 0,
            ):
                continue
            if self.cut_used() and self._cut_violated(st):
                continue
            node_bound = self._bound(st)
            if node_bound <= lb_eff:
                if best < lb_eff:
                    seed_prune_used = True
                continue
            free_vertices = self._free_vertices_mask(st)
            if st.free_count and self._parity_infeasible(st, free_vertices):
                continue
            if st.free_count == 0:
                value = st.edges
                if value > best:
                    g = self._graph_from(st)
                    if not self._accept(g):
                        continue
                    best = value
                    best_graph = g
                continue

            child_snap = (
                tuple(st.adj1),
                tuple(st.adj0),
                tuple(st.deg1),
                st.edges,
                st.free_count,
            )
            branched = False
            if self.orbital and depth <= self.orbit_limit:
                orbit = self._orbit_branch(st)
                if orbit is not None and len(orbit) > 1:
                    rep = orbit[0]
                    zero_all = [(u, v, 0) for u, v in orbit]
                    stack.append((child_snap, zero_all, depth + 1, node_bound))
                    stack.append(
                        (child_snap, [(rep[0], rep[1], 1)], depth + 1, node_bound)
                    )
                    branched = True
                elif self.adaptive and depth < self.orbit_limit:
                    self.orbit_limit = depth
            if not branched:
                u, v = self._fallback_pair(st)
                stack.append((child_snap, [(u, v, 0)], depth + 1, node_bound))
                stack.append((child_snap, [(u, v, 1)], depth + 1, node_bound))

        self.stats.nodes += nodes
        abort_ub = self.root_capacity()
        if timed_out:
            remaining = max((entry[3] for entry in stack), default=best)
            abort_ub = max(best, remaining, 0)
        # Exhaustion without any feasible leaf refutes feasibility outright
        # unless some subtree was discarded against the seeded value.
        infeasible = not timed_out and best < 0 and not seed_prune_used
        return _RunOutcome(
            best=best if best >= 0 else None,
            graph=best_graph,
            timed_out=timed_out,
            infeasible_proved=infeasible,
            abort_ub=abort_ub,
            nodes=nodes,
        )

    def _accept(self, g: Graph) -> bool:
        """Re-verify an incumbent against the model before recording it."""
        if not is_triangle_free(g) or g.max_degree() > self.d:
            return False
        for v, cls in enumerate(self.classes):
            deg = g.degree(v)
            if cls == EXACTLY_D and deg != self.d:
                return False
            if cls == AT_MOST_D_MINUS_1 and deg > self.d - 1:
                return False
        return True


# ---------------------------------------------------------------------------
# Public solve entry points.
# ---------------------------------------------------------------------------


def solve_basic(inst: Instance, cfg: SolverConfig) -> SolveResult:
    """Depth-first branch-and-bound on 2m+1 vertices with degree caps only
    (methods basic / orbital)."""
    if cfg.method not in (METHOD_BASIC, METHOD_ORBITAL):
        raise ValueError("solve_basic handles methods basic and orbital")
    cfg.validate()
    start = time.perf_counter()
    deadline = start + cfg.resolved_time_limit()
    stats = SolveStats()
    engine = _Engine(
        inst.n, inst.d, (AT_MOST_D,) * inst.n, cfg, stats, deadline
    )
    outcome = engine.run(seed_lb=None)
    stats.wall_s = time.perf_counter() - start
    lb = outcome.best if outcome.best is not None else 0
    if outcome.timed_out:
        return SolveResult(lb, max(outcome.abort_ub, lb), outcome.graph,
                           STATUS_TIME_LIMIT, stats)
    return SolveResult(lb, lb, outcome.graph, STATUS_OPTIMAL, stats)


def solve_iterative(inst: Instance, cfg: SolverConfig) -> SolveResult:
    """Alg.-2-style sweep: pin all degrees to exactly d, then shrink the
    exact set one vertex at a time, tightening
    UB = max(floor(N*d/2 - |restricted|/2), LB) until it meets LB
    (methods iterative / iterative-orbital)."""
    if cfg.method not in (METHOD_ITERATIVE, METHOD_ITERATIVE_ORBITAL):
        raise ValueError(
            "solve_iterative handles methods iterative and iterative-orbital"
        )
    cfg.validate()
    start = time.perf_counter()
    deadline = start + cfg.resolved_time_limit()
    n, d = inst.n, inst.d
    stats = SolveStats()

    lb = 0
    best_graph: Graph | None = None
    ub = n * d // 2
    stats.ub_history.append(ub)
    restricted: list[int] = []  # ascending vertex ids with cap d-1
    status = STATUS_OPTIMAL

    while ub > lb:
        if time.perf_counter() > deadline:
            status = STATUS_TIME_LIMIT
            break
        classes = [EXACTLY_D] * n
        for v in restricted:
            classes[v] = AT_MOST_D_MINUS_1
        engine = _Engine(
            n, d, classes, cfg, stats, deadline, cut_order=restricted
        )
        record: dict = {"restricted": len(restricted)}
        if engine.root_capacity() <= lb:
            record["status"] = "skipped"
        else:
            outcome = engine.run(seed_lb=lb)
            record["nodes"] = outcome.nodes
            if outcome.timed_out:
                record["status"] = "time_limit"
                stats.iterations.append(record)
                status = STATUS_TIME_LIMIT
                break
            if outcome.best is not None and outcome.best > lb:
                lb = outcome.best
                best_graph = outcome.graph
                record["status"] = "improved"
                record["value"] = outcome.best
            elif outcome.infeasible_proved:
                record["status"] = "infeasible"
            else:
                record["status"] = "no_improvement"
        stats.iterations.append(record)

        if len(restricted) == n:
            # Every degree profile has now been covered conclusively.
            ub = lb
            stats.ub_history.append(ub)
            break
        # Pick u from the exact set: highest index, so the restricted set
        # is always a suffix of the vertex range.
        u = n - 1 - len(restricted)
        restricted.insert(0, u)
        ub = max((n * d - len(restricted)) // 2, lb)
        stats.ub_history.append(ub)

    stats.wall_s = time.perf_counter() - start
    if status == STATUS_TIME_LIMIT:
        return SolveResult(lb, max(ub, lb), best_graph, status, stats)
    return SolveResult(lb, ub, best_graph, STATUS_OPTIMAL, stats)


def solve(inst: Instance, cfg: SolverConfig | None = None) -> SolveResult:
    """Dispatch on cfg.method; the oracle method brute-forces tiny
    instances through an entirely independent code path."""
    cfg = cfg or SolverConfig()
    cfg.validate()
    if cfg.method == METHOD_ORACLE:
        from .oracle import brute_force_max

        start = time.perf_counter()
        value, g = brute_force_max(inst.n, inst.d)
        stats = SolveStats(wall_s=time.perf_counter() - start)
        return SolveResult(value, value, g, STATUS_OPTIMAL, stats)
    if cfg.method in (METHOD_BASIC, METHOD_ORBITAL):
        return solve_basic(inst, cfg)
    return solve_iterative(inst, cfg)
