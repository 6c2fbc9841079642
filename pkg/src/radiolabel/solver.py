"""Exact radio number and lambda number of small connected graphs.

The radio search extends vertex orderings left to right. Each appended vertex
receives the smallest label that is larger than its predecessor's and meets
the radio condition against every vertex already placed. Every radio labeling
induces such an ordering, and this greedy choice is pointwise minimal for it,
so minimizing over orderings yields rn(G).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from .graph import DisconnectedGraphError, DistanceMatrix, Graph
from .labeling import Labeling, LabelingError, is_L21_labeling, is_radio_labeling, span

BRUTE_FORCE_MAX_P = 9


@dataclass(frozen=True)
class SolverBudget:
    """Search limits; ``None`` means unlimited.

    In parallel mode each worker gets the full budget.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None


@dataclass
class SolverResult:
    optimum: int
    witness: Labeling
    nodes_explored: int
    proven_optimal: bool
    kind: str = field(default="radio")


class _BudgetExceeded(Exception):
    pass


class _Meter:
    def __init__(self, budget: SolverBudget):
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _BudgetExceeded
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise _BudgetExceeded


def _check_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("exact solvers need a connected graph")


def vertex_orbit_representatives(g: Graph) -> list[int]:
    """Smallest-index vertex of each automorphism orbit, ascending."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.p))
    nxg.add_edges_from(g.edges())
    reps: list[int] = []
    assigned = [False] * g.p
    for u in range(g.p):
        if assigned[u]:
            continue
        reps.append(u)
        assigned[u] = True
        for v in range(u + 1, g.p):
            if assigned[v] or g.degree(u) != g.degree(v):
                continue
            a, b = nxg.copy(), nxg.copy()
            nx.set_node_attributes(a, {u: 1}, "mark")
            nx.set_node_attributes(b, {v: 1}, "mark")
            gm = GraphMatcher(a, b, node_match=lambda x, y: x.get("mark") == y.get("mark"))
            if gm.is_isomorphic():
                assigned[v] = True
    return reps


# --- radio number -----------------------------------------------------------


class _RadioSearch:
    def __init__(self, dist: Sequence[Sequence[int]], diameter: int, meter: _Meter, best: int):
        self.dist = dist
        self.step = diameter + 1
        self.p = len(dist)
        self.meter = meter
        self.best = best
        self.best_order: list[int] | None = None
        self.best_labels: list[int] | None = None

    def completion_bound(self, last: int, remaining: list[int]) -> int:
        # each remaining vertex arrives from some vertex of remaining + {last}
        dist, step = self.dist, self.step
        total = 0
        for v in remaining:
            far = dist[last][v]
            for w in remaining:
                if dist[w][v] > far:
                    far = dist[w][v]
            total += max(1, step - far)
        return total

    def run(self, root: int) -> None:
        floor = [self.step - self.dist[root][v] for v in range(self.p)]
        labels = [0] * self.p
        self._extend([root], labels, floor, [v for v in range(self.p) if v != root])

    def _extend(self, order: list[int], labels: list[int], floor: list[int], remaining: list[int]) -> None:
        self.meter.tick()
        last = order[-1]
        last_label = labels[last]
        if not remaining:
            if last_label < self.best:
                self.best = last_label
                self.best_order = list(order)
                self.best_labels = list(labels)
            return
        if last_label + self.completion_bound(last, remaining) >= self.best:
            return
        dist, step = self.dist, self.step
        for v in remaining:
            lab = max(last_label + 1, floor[v])
            if lab + len(remaining) - 1 >= self.best:
                continue
            labels[v] = lab
            rest = [w for w in remaining if w != v]
            new_floor = list(floor)
            for w in rest:
                need = lab + step - dist[v][w]
                if need > new_floor[w]:
                    new_floor[w] = need
            order.append(v)
            self._extend(order, labels, new_floor, rest)
            order.pop()


def _greedy_radio_heuristic(dist: Sequence[Sequence[int]], diameter: int, roots: Sequence[int]) -> Labeling:
    """Best over roots of nearest-feasible-label extension (ties by index)."""
    p = len(dist)
    step = diameter + 1
    best: Labeling | None = None
    for root in roots:
        labels = {root: 0}
        floor = [step - dist[root][v] for v in range(p)]
        last = 0
        remaining = [v for v in range(p) if v != root]
        while remaining:
            v = min(remaining, key=lambda w: (max(last + 1, floor[w]), w))
            last = max(last + 1, floor[v])
            labels[v] = last
            remaining.remove(v)
            for w in remaining:
                floor[w] = max(floor[w], last + step - dist[v][w])
        if best is None or span(labels) < span(best):
            best = labels
    assert best is not None
    return best


def _radio_worker(args: tuple) -> tuple[int, list[int] | None, int, bool]:
    dist, diameter, root, best, budget = args
    meter = _Meter(budget)
    search = _RadioSearch(dist, diameter, meter, best)
    try:
        search.run(root)
        exhausted = True
    except _BudgetExceeded:
        exhausted = False
    return search.best, search.best_labels, meter.nodes, exhausted


def exact_radio_number(
    g: Graph,
    dist: DistanceMatrix,
    budget: SolverBudget = SolverBudget(),
    incumbent: Mapping[int, int] | None = None,
    threads: int = 1,
) -> SolverResult:
    """Minimum span over radio labelings of ``g`` by branch and bound.

    The first vertex is restricted to one representative per automorphism
    orbit. With ``threads > 1`` the root branches run in worker processes;
    optimum and witness do not depend on the worker count.
    """
    _check_connected(g)
    if g.p == 1:
        return SolverResult(0, {0: 0}, 1, True)
    dm = dist.matrix.tolist()
    roots = vertex_orbit_representatives(g)

    if incumbent is not None:
        bad = is_radio_labeling(g, dist, incumbent)
        if bad:
            raise LabelingError(f"incumbent is not a radio labeling ({len(bad)} violations)")
        lo = min(incumbent.values())
        start = {u: lab - lo for u, lab in incumbent.items()}
    else:
        start = _greedy_radio_heuristic(dm, dist.diameter, roots)
    start_span = span(start)

    jobs = [(dm, dist.diameter, r, start_span, budget) for r in roots]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_radio_worker, jobs))
    else:
        outcomes = []
        meter = _Meter(budget)
        best = start_span
        exhausted = True
        for _, _, root, _, _ in jobs:
            search = _RadioSearch(dm, dist.diameter, meter, best)
            before = meter.nodes
            try:
                search.run(root)
            except _BudgetExceeded:
                exhausted = False
            outcomes.append((search.best, search.best_labels, meter.nodes - before, exhausted))
            best = search.best
            if not exhausted:
                break

    optimum, witness = start_span, start
    for found, labels, _, _ in outcomes:
        if labels is not None and found < optimum:
            optimum, witness = found, {u: labels[u] for u in range(g.p)}
    nodes = sum(o[2] for o in outcomes)
    proven = all(o[3] for o in outcomes)
    return SolverResult(optimum, witness, nodes, proven)


def brute_force_radio_number(g: Graph, dist: DistanceMatrix) -> int:
    """Minimum over all p! orderings of the all-constraints greedy labeling span.

    No pruning or symmetry reduction. Each improving candidate is checked
    against the full pairwise radio condition before it is accepted.
    """
    _check_connected(g)
    if g.p > BRUTE_FORCE_MAX_P:
        raise ValueError(f"brute force limited to p <= {BRUTE_FORCE_MAX_P}, got {g.p}")
    dm = dist.matrix.tolist()
    step = dist.diameter + 1
    p = g.p
    best = [None]
    labels = [0] * p

    def extend(order: list[int], used: list[bool]) -> None:
        if len(order) == p:
            s = labels[order[-1]]
            if best[0] is None or s < best[0]:
                candidate = {u: labels[u] for u in range(p)}
                if is_radio_labeling(g, dist, candidate):
                    raise AssertionError("greedy candidate failed validation")
                best[0] = s
            return
        for v in range(p):
            if used[v]:
                continue
            lab = 0
            if order:
                lab = labels[order[-1]] + 1
                for u in order:
                    lab = max(lab, labels[u] + step - dm[u][v])
            labels[v] = lab
            used[v] = True
            order.append(v)
            extend(order, used)
            order.pop()
            used[v] = False

    extend([], [False] * p)
    return best[0]


# --- lambda number ----------------------------------------------------------


def _search_order(g: Graph) -> list[int]:
    start = max(range(g.p), key=lambda u: (g.degree(u), -u))
    order, seen = [start], {start}
    i = 0
    while i < len(order):
        for v in sorted(g.adjacency[order[i]]):
            if v not in seen:
                seen.add(v)
                order.append(v)
        i += 1
    return order


def _greedy_L21(g: Graph, dm: list[list[int]], order: list[int]) -> Labeling:
    labels: Labeling = {}
    for v in order:
        c = 0
        while any(
            (dm[u][v] == 1 and abs(c - lab) < 2) or (dm[u][v] == 2 and c == lab)
            for u, lab in labels.items()
        ):
            c += 1
        labels[v] = c
    return labels


def exact_lambda(g: Graph, dist: DistanceMatrix, budget: SolverBudget = SolverBudget()) -> SolverResult:
    """Minimum span of an L(2,1) labeling, by deepening the allowed span from max degree + 1."""
    _check_connected(g)
    if g.p == 1:
        return SolverResult(0, {0: 0}, 1, True, kind="lambda")
    dm = dist.matrix.tolist()
    order = _search_order(g)
    fallback = _greedy_L21(g, dm, order)
    upper = span(fallback)
    lower = max(g.degree(u) for u in range(g.p)) + 1
    meter = _Meter(budget)
    # constrained earlier neighbours (distance 1 or 2) for each position
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[(u, dm[u][v]) for u in order[:pos[v]] if dm[u][v] <= 2] for v in order]
    labels = [0] * g.p

    def assign(i: int, s: int) -> bool:
        meter.tick()
        if i == len(order):
            return True
        v = order[i]
        top = s // 2 if i == 0 else s  # reflection c -> s - c
        for c in range(top + 1):
            if all(abs(c - labels[u]) >= (2 if d == 1 else 1) for u, d in earlier[i]):
                labels[v] = c
                if assign(i + 1, s):
                    return True
        return False

    try:
        for s in range(lower, upper):
            if assign(0, s):
                witness = {u: labels[u] for u in range(g.p)}
                return SolverResult(span(witness), witness, meter.nodes, True, kind="lambda")
    except _BudgetExceeded:
        return SolverResult(upper, fallback, meter.nodes, False, kind="lambda")
    return SolverResult(upper, fallback, meter.nodes, True, kind="lambda")


def validate_result(g: Graph, dist: DistanceMatrix, result: SolverResult) -> list:
    """Violations of the witness plus a span mismatch marker, empty when sound."""
    check = is_radio_labeling if result.kind == "radio" else is_L21_labeling
    problems: list = list(check(g, dist, result.witness))
    if span(result.witness) != result.optimum:
        problems.append(("span", span(result.witness), result.optimum))
    return problems
