"""Closed-form optimal radio labeling of M(P_n) and the matching level-sum lower bound."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import DistanceMatrix, Graph, GraphError, LevelMap, all_pairs_distances, level_map, mpn
from .labeling import Labeling, Ordering


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ParityParams:
    n: int
    k: int
    parity: str
    p: int
    d: int

    @classmethod
    def of(cls, n: int) -> ParityParams:
        _require(n, 2)
        k = n // 2
        return cls(n, k, "even" if n % 2 == 0 else "odd", 2 * n - 1, n)

    @property
    def even(self) -> bool:
        return self.parity == "even"


def _require(n: int, lo: int) -> None:
    if n < lo:
        raise ConstructionError(f"n must be >= {lo}, got {n}")


def rn_mpn_formula(n: int) -> int:
    _require(n, 2)
    k = n // 2
    return 4 * k * k - 1 if n % 2 == 0 else 4 * k * (k + 1)


def rn_path_formula(n: int) -> int:
    """Published radio number of P_n, stated for n >= 3."""
    _require(n, 3)
    k = n // 2
    return 2 * k * (k - 1) + 1 if n % 2 == 0 else 2 * k * k + 2


def lambda_mpn_formula(n: int) -> int:
    _require(n, 2)
    if n == 2:
        return 3
    if n == 3:
        return 4
    if n <= 5:
        return 5
    return 6


@lru_cache(maxsize=None)
def _mpn_data(n: int) -> tuple[Graph, DistanceMatrix, LevelMap]:
    g = mpn(n)
    dist = all_pairs_distances(g)
    return g, dist, level_map(g, dist)


def mpn_instance(n: int) -> tuple[Graph, DistanceMatrix, LevelMap]:
    """M(P_n) with its distance matrix and level map (cached; all parts immutable)."""
    return _mpn_data(n)


def _ov(i: int) -> int:
    # index of v_i in mpn(n): originals occupy 0..n-1
    return i - 1


def mpn_ordering(n: int) -> Ordering:
    """Vertex ordering u_1..u_p of M(P_n) realizing the optimal labeling.

    Positions are evaluated literally from the closed-form index rules; a
    collision or gap raises instead of being patched.
    """
    par = ParityParams.of(n)
    k, p = par.k, par.p

    def ev(i: int) -> int:
        return n + i - 1  # v'_i

    slots: dict[int, int] = {}

    def put(j: int, vertex: int) -> None:
        if j in slots or not 1 <= j <= p:
            raise ConstructionError(f"n={n}: position {j} is out of range or assigned twice")
        slots[j] = vertex

    if par.even:
        put(1, ev(k))
        put(p, _ov(k))
        for i in range(1, n + 1):
            if i < k:
                put(4 * (k - i) + 1, _ov(i))
            elif i > k:
                put(4 * (2 * k - i) + 2, _ov(i))
        for i in range(1, n):
            if i < k:
                put(4 * (k - i - 1) + 3, ev(i))
            elif i > k:
                put(4 * (2 * k - i), ev(i))
    else:
        put(1, ev(k))
        put(p, _ov(k + 1))
        put(p - 1, _ov(n))
        put(p - 2, _ov(1))
        put(p - 3, ev(k + 1))
        for i in range(2, n):
            if i <= k:
                put(4 * (k + 1 - i) + 1, _ov(i))
            elif k + 1 < i < 2 * k + 1:
                put(4 * (2 * k - i) + 2, _ov(i))
        for i in range(1, n):
            if i < k:
                put(4 * (k - i - 1) + 3, ev(i))
            elif i > k + 1:
                put(4 * (2 * k + 1 - i), ev(i))

    if len(slots) != p:
        missing = sorted(set(range(1, p + 1)) - set(slots))
        raise ConstructionError(f"n={n}: positions {missing} left unassigned")
    return [slots[j] for j in range(1, p + 1)]


def mpn_labeling(n: int) -> Labeling:
    """Optimal radio labeling of M(P_n), built from levels along :func:`mpn_ordering`."""
    par = ParityParams.of(n)
    _, _, levels = mpn_instance(n)
    order = mpn_ordering(n)
    step = par.d + 1 if par.even else par.d
    labels = {order[0]: 0}
    for prev, cur in zip(order, order[1:]):
        labels[cur] = labels[prev] + step - levels[prev] - levels[cur]
    return labels


def mpn_signature(g: Graph, dist: DistanceMatrix, levels: LevelMap) -> ParityParams:
    """Recover n from a graph claimed to be M(P_n), or raise."""
    if g.p % 2 == 0 or g.p < 3:
        raise GraphError(f"{g.p} vertices is not 2n-1 for any n >= 2")
    n = (g.p + 1) // 2
    if dist.diameter != n:
        raise GraphError(f"diameter {dist.diameter} does not match n={n}")
    expected_center = 1 if n % 2 == 0 else 3
    if len(levels.center_vertices) != expected_center:
        raise GraphError(
            f"center has {len(levels.center_vertices)} vertices, expected {expected_center} for n={n}"
        )
    return ParityParams.of(n)


def lower_bound_mpn(g: Graph, dist: DistanceMatrix, levels: LevelMap) -> int:
    """Level-sum lower bound on rn(M(P_n)), computed from the graph itself."""
    par = mpn_signature(g, dist, levels)
    p, d, total = g.p, dist.diameter, levels.total
    if par.even:
        return (p - 1) * (d + 1) - 2 * total + 1
    return (p - 1) * (d + 1) - 2 * total - (p - 1)
