"""Segment distances and embedding checks for closed polygons."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "ClearanceReport",
    "segment_distance",
    "pairwise_segment_distances",
    "check_embedding",
    "edge_lengths",
]


def _dot(u, v):
    # explicit component order keeps scalar and vectorised paths bit-identical
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] + u[..., 2] * v[..., 2]


def pairwise_segment_distances(p1, q1, p2, q2):
    """Minimum distances between segments ``p1q1`` and ``p2q2`` (broadcasting).

    Closest-point computation on the two parameter intervals; both segments
    must have positive length.
    """
    p1, q1, p2, q2 = (np.asarray(a, dtype=float) for a in (p1, q1, p2, q2))
    d1 = q1 - p1
    d2 = q2 - p2
    r = p1 - p2
    a = _dot(d1, d1)
    e = _dot(d2, d2)
    f = _dot(d2, r)
    c = _dot(d1, r)
    b = _dot(d1, d2)
    denom = a * e - b * b
    with np.errstate(divide="ignore", invalid="ignore"):
        s = np.where(denom > 0.0, np.clip((b * f - c * e) / denom, 0.0, 1.0), 0.0)
        t = (b * s + f) / e
        s = np.where(t < 0.0, np.clip(-c / a, 0.0, 1.0), np.where(t > 1.0, np.clip((b - c) / a, 0.0, 1.0), s))
        t = np.clip(t, 0.0, 1.0)
    diff = (p1 + d1 * s[..., None]) - (p2 + d2 * t[..., None])
    return np.sqrt(_dot(diff, diff))


def segment_distance(p1, q1, p2, q2) -> float:
    return float(pairwise_segment_distances(p1, q1, p2, q2))


def edge_lengths(vertices) -> np.ndarray:
    v = np.asarray(vertices, dtype=float)
    d = np.roll(v, -1, axis=0) - v
    return np.sqrt(_dot(d, d))


@dataclass(frozen=True)
class ClearanceReport:
    min_clearance: float
    witness: tuple[int, int] | None
    length_deviations: tuple[float, ...]
    folded_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def max_length_deviation(self) -> float:
        return max(self.length_deviations) if self.length_deviations else 0.0

    @property
    def embedded(self) -> bool:
        return self.min_clearance > 0.0 and not self.folded_pairs


def _nonadjacent_pairs(m):
    i, j = np.triu_indices(m, k=2)
    keep = ~((i == 0) & (j == m - 1))
    return i[keep], j[keep]


def check_embedding(vertices, edge_length: float | None = None) -> ClearanceReport:
    """Clearance of a closed polygon given by its vertex cycle.

    Non-adjacent edges are compared by exact segment distance. Adjacent
    edges only meet at their shared vertex unless they fold back onto each
    other, which is reported as zero clearance.
    """
    v = np.asarray(vertices, dtype=float)
    m = len(v)
    if m < 3:
        raise ValueError("a closed polygon needs at least 3 vertices")
    starts = v
    ends = np.roll(v, -1, axis=0)
    lengths = edge_lengths(v)
    ref = float(edge_length) if edge_length is not None else float(lengths.mean())
    deviations = tuple(float(abs(x - ref) / ref) for x in lengths)

    if np.any(lengths == 0.0):
        k = int(np.argmax(lengths == 0.0))
        return ClearanceReport(0.0, (k, (k + 1) % m), deviations)

    folded = []
    for k in range(m):
        u = ends[k] - starts[k]
        w = ends[(k + 1) % m] - starts[(k + 1) % m]
        cross = np.cross(u, w)
        if float(_dot(cross, cross)) == 0.0 and float(_dot(u, w)) < 0.0:
            folded.append((k, (k + 1) % m))

    i, j = _nonadjacent_pairs(m)
    if len(i) == 0:
        return ClearanceReport(float("inf"), None, deviations, tuple(folded))
    dist = pairwise_segment_distances(starts[i], ends[i], starts[j], ends[j])
    k = int(np.argmin(dist))
    best = float(dist[k])
    witness = (int(i[k]), int(j[k]))
    if folded:
        best, witness = 0.0, folded[0]
    return ClearanceReport(best, witness, deviations, tuple(folded))
