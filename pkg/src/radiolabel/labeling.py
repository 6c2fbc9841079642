"""Radio and L(2,1) labelings: validation, span, and ordering-driven construction.

A labeling is a mapping from vertex index to a non-negative integer label.
An ordering is a sequence of vertex indices visiting every vertex once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .graph import DistanceMatrix, Graph

Labeling = dict[int, int]
Ordering = list[int]


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    required: int
    actual: int
    distance: int

    def describe(self, g: Graph) -> str:
        return (
            f"{g.names[self.u]} -- {g.names[self.v]}: distance {self.distance}, "
            f"required gap {self.required}, actual gap {self.actual}"
        )


def _label_array(g: Graph, labels: Mapping[int, int]) -> np.ndarray:
    missing = [g.names[u] for u in range(g.p) if u not in labels]
    if missing:
        raise LabelingError(f"labeling is partial; unlabeled: {', '.join(missing)}")
    extra = [u for u in labels if not 0 <= u < g.p]
    if extra:
        raise LabelingError(f"labeling references unknown vertices {extra}")
    arr = np.array([labels[u] for u in range(g.p)], dtype=np.int64)
    if (arr < 0).any():
        raise LabelingError("labels must be non-negative")
    return arr


def _violations(dist: DistanceMatrix, arr: np.ndarray, required: np.ndarray) -> list[Violation]:
    gap = np.abs(arr[:, None] - arr[None, :])
    bad = np.triu(gap < required, k=1)
    return [
        Violation(int(u), int(v), int(required[u, v]), int(gap[u, v]), int(dist.matrix[u, v]))
        for u, v in zip(*np.nonzero(bad))
    ]


def is_radio_labeling(g: Graph, dist: DistanceMatrix, labels: Mapping[int, int]) -> list[Violation]:
    """Every pair with ``|f(u) - f(v)| < diam + 1 - d(u, v)``; empty means valid."""
    arr = _label_array(g, labels)
    return _violations(dist, arr, dist.diameter + 1 - dist.matrix)


def is_L21_labeling(g: Graph, dist: DistanceMatrix, labels: Mapping[int, int]) -> list[Violation]:
    """Violations of the distance-two conditions (gap 2 at distance 1, gap 1 at distance 2)."""
    arr = _label_array(g, labels)
    required = np.where(dist.matrix == 1, 2, np.where(dist.matrix == 2, 1, 0))
    return _violations(dist, arr, required)


def span(labels: Mapping[int, int]) -> int:
    if not labels:
        raise LabelingError("span of an empty labeling")
    values = labels.values()
    return max(values) - min(values)


def check_ordering(g: Graph, order: Sequence[int]) -> None:
    if sorted(order) != list(range(g.p)):
        raise LabelingError("ordering is not a permutation of the vertices")


def greedy_label_from_ordering(g: Graph, dist: DistanceMatrix, order: Sequence[int]) -> Labeling:
    """Label ``order[0]`` with 0 and each successor ``diam + 1 - d(prev, next)`` higher.

    Only consecutive constraints are used, so the result is a radio labeling
    only when the ordering makes that sufficient (see :func:`lemma1_premise_check`).
    """
    check_ordering(g, order)
    labels = {order[0]: 0}
    step = dist.diameter + 1
    for prev, cur in zip(order, order[1:]):
        labels[cur] = labels[prev] + step - dist(prev, cur)
    return labels


def lemma1_premise_check(dist: DistanceMatrix, order: Sequence[int], k: int) -> list[int]:
    """Positions ``i`` (1-based) with ``d(u_i, u_{i+1}) > k + 1``.

    An empty result guarantees that the greedy labeling along ``order`` is a
    radio labeling of M(P_n) when ``k = n // 2``.
    """
    return [i + 1 for i in range(len(order) - 1) if dist(order[i], order[i + 1]) > k + 1]


def shifted(labels: Mapping[int, int], c: int) -> Labeling:
    return {u: lab + c for u, lab in labels.items()}


def labels_along(order: Sequence[int], labels: Mapping[int, int]) -> list[int]:
    return [labels[u] for u in order]


def by_name(g: Graph, labels: Mapping[int, int]) -> dict[str, int]:
    return {g.names[u]: lab for u, lab in labels.items()}


def from_names(g: Graph, named: Mapping[str, int]) -> Labeling:
    try:
        return {g.index(name): lab for name, lab in named.items()}
    except KeyError as exc:
        raise LabelingError(f"labeling names unknown vertex {exc.args[0]!r}") from None
