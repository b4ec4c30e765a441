"""Crossing diagrams of space polygons from generic orthogonal projections."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .diagram import PlanarDiagram
from .errors import NoGenericProjection, NotEmbedded
from .geometry import check_embedding

__all__ = ["ProjectionTolerances", "project", "polygon_to_diagram", "projection_frame"]


@dataclass(frozen=True)
class ProjectionTolerances:
    cross_rel: float = 1e-6  # times the polygon diameter
    cross_clearance: float = 1e-3  # times the minimum clearance, when smaller
    angle: float = 1e-3  # radians
    angle_clearance: float = 1e-2  # times clearance / diameter, when smaller
    retries: int = 64


def projection_frame(direction):
    """Right-handed frame ``(u, v, w)`` with ``w`` along the viewing direction."""
    w = np.asarray(direction, dtype=float)
    w = w / np.linalg.norm(w)
    helper = np.zeros(3)
    helper[int(np.argmin(np.abs(w)))] = 1.0
    u = np.cross(w, helper)
    u /= np.linalg.norm(u)
    v = np.cross(w, u)
    return u, v, w


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def project(vertices, direction, tol_cross: float, tol_angle: float):
    """Crossings of the projection along ``direction``, or ``None`` if degenerate.

    Returns ``(passages, signs)`` ready for :meth:`PlanarDiagram.from_gauss`.
    The viewer sits at ``+direction``; the strand with larger depth is over.
    """
    v3 = np.asarray(vertices, dtype=float)
    m = len(v3)
    u, v, w = projection_frame(direction)
    xy = np.stack([v3 @ u, v3 @ v], axis=1)
    depth = v3 @ w
    seg = np.roll(xy, -1, axis=0) - xy
    seg_len = np.hypot(seg[:, 0], seg[:, 1])
    if np.any(seg_len < tol_cross):
        return None
    sin_tol = math.sin(tol_angle)

    # adjacent edges must not fold back in projection
    for k in range(m):
        a, b = seg[k], seg[(k + 1) % m]
        if abs(_cross2(a, b)) < sin_tol * seg_len[k] * seg_len[(k + 1) % m] and a @ b < 0:
            return None

    # vertices must stay clear of non-incident edge images
    for k in range(m):
        p = xy[k]
        for e in range(m):
            if e == k or (e + 1) % m == k:
                continue
            a = xy[e]
            t = np.clip((p - a) @ seg[e] / (seg_len[e] ** 2), 0.0, 1.0)
            if np.hypot(*(a + t * seg[e] - p)) < tol_cross:
                return None

    hits = []  # (edge_i, s, edge_j, t, point)
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue
            denom = _cross2(seg[i], seg[j])
            if abs(denom) < 1e-300:
                continue
            r = xy[j] - xy[i]
            s = _cross2(r, seg[j]) / denom
            t = _cross2(r, seg[i]) / denom
            if not (0.0 < s < 1.0 and 0.0 < t < 1.0):
                continue
            if abs(denom) < sin_tol * seg_len[i] * seg_len[j]:
                return None
            hits.append((i, s, j, t, xy[i] + s * seg[i]))
    for a in range(len(hits)):
        for b in range(a + 1, len(hits)):
            if np.hypot(*(hits[a][4] - hits[b][4])) < tol_cross:
                return None

    on_edge: list[list[tuple[float, int, bool]]] = [[] for _ in range(m)]
    signs = []
    for x, (i, s, j, t, _) in enumerate(hits):
        zi = depth[i] + s * (depth[(i + 1) % m] - depth[i])
        zj = depth[j] + t * (depth[(j + 1) % m] - depth[j])
        i_over = zi > zj
        on_edge[i].append((s, x, i_over))
        on_edge[j].append((t, x, not i_over))
        over_dir, under_dir = (seg[i], seg[j]) if i_over else (seg[j], seg[i])
        signs.append(1 if _cross2(over_dir, under_dir) > 0 else -1)
    passages = []
    for k in range(m):
        for _, x, over in sorted(on_edge[k]):
            passages.append((x, over))
    return passages, signs


def polygon_to_diagram(vertices, seed=0, tolerances: ProjectionTolerances | None = None,
                       clearance: float | None = None) -> PlanarDiagram:
    """Diagram of a closed polygon seen from a random generic direction.

    Directions are drawn from ``numpy.random.default_rng(seed)`` until one
    passes the genericity tests; raises :class:`NoGenericProjection` after
    ``tolerances.retries`` attempts. The distance tolerance is the smaller of
    ``cross_rel * diameter`` and ``cross_clearance * clearance``, since
    stick constructions can have features far below the diameter scale.
    The angle tolerance shrinks the same way: two long sticks hugging the
    binding axis are only about ``clearance / diameter`` radians apart.
    """
    tol = tolerances or ProjectionTolerances()
    v3 = np.asarray(vertices, dtype=float)
    if clearance is None:
        report = check_embedding(v3)
        if not report.embedded:
            raise NotEmbedded(
                f"polygon is not embedded (clearance {report.min_clearance:g} "
                f"between edges {report.witness})"
            )
        clearance = report.min_clearance
    elif not clearance > 0:
        raise NotEmbedded(f"polygon clearance {clearance:g} is not positive")
    diameter = float(np.max(np.linalg.norm(v3[:, None, :] - v3[None, :, :], axis=2)))
    tol_cross = min(tol.cross_rel * diameter, tol.cross_clearance * clearance)
    tol_angle = min(tol.angle, tol.angle_clearance * clearance / diameter)
    rng = np.random.default_rng(seed)
    for _ in range(tol.retries):
        direction = rng.normal(size=3)
        result = project(v3, direction, tol_cross, tol_angle)
        if result is not None:
            return PlanarDiagram.from_gauss(*result)
    raise NoGenericProjection(
        f"no generic projection found in {tol.retries} random directions"
    )
