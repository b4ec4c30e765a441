"""Equilateral polygons from arc presentations.

Binding index ``r`` sits on the z-axis at height ``(r - 1) * spacing`` and
each arc becomes two unit sticks meeting at an apex in its page, giving
``2n`` sticks. The two sticks at the lowest binding index are then replaced
by a single new stick (and likewise at the highest index), for ``2n - 2``.

Every output is checked: edge lengths, clearance between non-adjacent
sticks, and the Jones polynomial of a generic projection against the grid
diagram of the input presentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import brentq

from .arcpres import ArcPresentation, extremal_rotation, binding_rotate
from .diagram import arcpres_to_diagram
from .errors import (
    ApexImpossible,
    GeometryError,
    KnotTypeChanged,
    NoGenericProjection,
    NoRootFound,
    NotEmbedded,
    NoValidRotation,
    RetriesExhausted,
)
from .geometry import ClearanceReport, check_embedding
from .invariants import DEFAULT_MAX_CROSSINGS, jones_polynomial
from .laurent import LaurentPolynomial, equal_up_to_mirror
from .projection import ProjectionTolerances, polygon_to_diagram

__all__ = [
    "RealizationParams",
    "EquilateralPolygon",
    "realize_doubled",
    "reduce_at_extremes",
    "realize",
    "solve_unit_gap",
    "apex_radius",
]

GAP_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RealizationParams:
    """Numeric choices for the construction.

    ``None`` fields take their defaults from the presentation size ``n``:
    spacing ``1/(10n)``, uniform page angles ``2*pi*k/n`` and axis approach
    ``spacing/100``.
    """

    stick_length: float = 1.0
    spacing: float | None = None
    page_angles: tuple[float, ...] | None = None
    epsilon: float | None = None
    tol_len: float = 1e-9
    retries: int = 32
    seed: int = 0
    max_crossings: int = DEFAULT_MAX_CROSSINGS
    projection: ProjectionTolerances = field(default_factory=ProjectionTolerances)

    def spacing_for(self, n: int) -> float:
        return self.spacing if self.spacing is not None else 1.0 / (10 * n)

    def angles_for(self, n: int) -> np.ndarray:
        if self.page_angles is not None:
            return np.asarray(self.page_angles, dtype=float)
        return 2.0 * np.pi * np.arange(n) / n

    def epsilon_for(self, n: int) -> float:
        return self.epsilon if self.epsilon is not None else self.spacing_for(n) / 100.0

    def check(self, n: int):
        L = self.stick_length
        delta = self.spacing_for(n)
        if not delta > 0:
            raise ValueError("spacing must be positive")
        if delta * (n - 1) >= L:
            raise ValueError(
                f"axis span {delta * (n - 1):g} must be shorter than the stick length {L:g}"
            )
        eps = self.epsilon_for(n)
        if not 0 < eps < delta:
            raise ValueError(f"axis approach {eps:g} must lie in (0, spacing={delta:g})")
        angles = self.angles_for(n)
        if len(angles) != n:
            raise ValueError(f"need {n} page angles, got {len(angles)}")
        wrapped = np.mod(angles, 2 * np.pi)
        if len(np.unique(wrapped)) != n:
            raise ValueError("page angles must be distinct")


@dataclass(eq=False)
class EquilateralPolygon:
    vertices: np.ndarray
    edge_length: float = 1.0
    source: ArcPresentation | None = None
    clearance: float | None = None
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        self.vertices = np.array(self.vertices, dtype=float)
        self.vertices.setflags(write=False)

    @property
    def n_edges(self) -> int:
        return len(self.vertices)

    def edge_lengths(self) -> np.ndarray:
        d = np.roll(self.vertices, -1, axis=0) - self.vertices
        return np.linalg.norm(d, axis=1)

    def report(self) -> ClearanceReport:
        return check_embedding(self.vertices, self.edge_length)


def apex_radius(z_i: float, z_j: float, L: float = 1.0) -> float:
    """Distance from the axis of the apex of a two-stick arc between heights."""
    half = abs(z_j - z_i) / 2.0
    if half >= L:
        raise ApexImpossible(f"binding points {2 * half:g} apart cannot be bridged by two sticks of length {L:g}")
    return math.sqrt(L * L - half * half)


def _page_dir(theta):
    return np.array([math.cos(theta), math.sin(theta), 0.0])


def _build_doubled(p: ArcPresentation, heights, angles, L):
    verts = []
    labels = []
    for page, a, b in p.traversal():
        za, zb = heights[a - 1], heights[b - 1]
        verts.append(np.array([0.0, 0.0, za]))
        labels.append(f"b{a}")
        r = apex_radius(za, zb, L)
        apex = r * _page_dir(angles[page])
        apex[2] = (za + zb) / 2.0
        verts.append(apex)
        labels.append(f"a{page}")
    return np.array(verts), labels


def solve_unit_gap(fixed_point, pivot, page_angle: float, L: float = 1.0,
                   toward: int = -1, samples: int = 720) -> float:
    """Angle at which a stick swung about ``pivot`` ends ``L`` away from ``fixed_point``.

    The moving stick stays in the half-plane at ``page_angle``; ``psi`` is
    measured from the axis direction ``toward`` (-1 down, +1 up), so
    ``psi = 0`` lays the stick along the axis. The smallest root in
    ``[0, pi]`` is returned, i.e. the one closest to the axis.
    """
    fixed_point = np.asarray(fixed_point, dtype=float)
    pivot = np.asarray(pivot, dtype=float)
    c, s = math.cos(page_angle), math.sin(page_angle)

    def moving(psi):
        return pivot + L * np.array([math.sin(psi) * c, math.sin(psi) * s, toward * math.cos(psi)])

    def gap(psi):
        return float(np.linalg.norm(fixed_point - moving(psi))) - L

    grid = np.linspace(0.0, math.pi, samples + 1)
    values = [gap(x) for x in grid]
    for k in range(samples):
        if values[k] == 0.0:
            return float(grid[k])
        if values[k] * values[k + 1] < 0.0:
            psi = brentq(gap, grid[k], grid[k + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps, maxiter=200)
            if abs(gap(psi)) >= GAP_TOLERANCE:
                raise NoRootFound(f"bisection stalled with residual {gap(psi):g}")
            return float(psi)
    if values[-1] == 0.0:
        return math.pi
    raise NoRootFound("unit-gap function has no sign change on [0, pi]")


def _reduce_extreme(verts, labels, row: int, toward: int, eps: float, L: float):
    """Replace the two sticks at binding vertex ``row`` by one new stick.

    The neighbouring sticks ``e1`` (before the vertex) and ``e2`` (after it)
    keep their far binding endpoints as pivots. ``e1`` swings in its page
    until its free end is ``eps`` from the axis on the ``toward`` side; ``e2``
    swings in its page until its free end is exactly ``L`` from that of
    ``e1``; a new stick joins the two free ends.
    """
    m = len(verts)
    k = labels.index(f"b{row}")
    order = [(k + i) % m for i in range(-2, m - 2)]
    verts = verts[order]
    labels = [labels[i] for i in order]
    # now: 0 = pivot of e1, 1 = apex of e1, 2 = removed vertex, 3 = apex of e2, 4 = pivot of e2
    if not (labels[1].startswith("a") and labels[3].startswith("a")):
        raise GeometryError(f"sticks at binding index {row} were already modified")
    p, apex1, apex2, q = verts[0], verts[1], verts[3], verts[4]
    theta1 = math.atan2(apex1[1], apex1[0])
    theta2 = math.atan2(apex2[1], apex2[0])
    sin_a = eps / L
    x = p + L * np.array([sin_a * math.cos(theta1), sin_a * math.sin(theta1), toward * math.sqrt(1.0 - sin_a * sin_a)])
    psi = solve_unit_gap(x, q, theta2, L, toward)
    y = q + L * np.array([math.sin(psi) * math.cos(theta2), math.sin(psi) * math.sin(theta2), toward * math.cos(psi)])
    new_verts = np.vstack([verts[:1], x[None, :], y[None, :], verts[4:]])
    side = "lo" if toward < 0 else "hi"
    new_labels = [labels[0], f"x{row}{side}", f"y{row}{side}"] + labels[4:]
    return new_verts, new_labels


def _verify(verts, L, params: RealizationParams, expected_jones: LaurentPolynomial | None, seed):
    lengths = np.linalg.norm(np.roll(verts, -1, axis=0) - verts, axis=1)
    worst = float(np.max(np.abs(lengths - L)) / L)
    if worst >= params.tol_len:
        raise GeometryError(f"edge length deviation {worst:g} exceeds {params.tol_len:g}")
    report = check_embedding(verts, L)
    if not report.embedded:
        raise NotEmbedded(f"clearance {report.min_clearance:g} at edges {report.witness}")
    if expected_jones is not None:
        d = polygon_to_diagram(verts, seed=seed, tolerances=params.projection,
                               clearance=report.min_clearance)
        j = jones_polynomial(d, params.max_crossings)
        if not equal_up_to_mirror(j, expected_jones):
            raise KnotTypeChanged(f"projection Jones {j} differs from expected {expected_jones}")
    return report


def build_verified(p: ArcPresentation, heights, angles, reductions, params: RealizationParams,
                   expected_jones: LaurentPolynomial | None, eps: float):
    """Doubled realization followed by ``reductions`` = [(row, toward), ...], with retries.

    Geometric failures are retried with the axis approach halved and a fresh
    projection seed; page angles are only perturbed when the doubled form
    itself fails, which keeps a caller's sector layout intact.
    """
    L = params.stick_length
    rng = np.random.default_rng(params.seed)
    angles = np.asarray(angles, dtype=float)
    last = None
    for attempt in range(max(1, params.retries)):
        try:
            verts, labels = _build_doubled(p, heights, angles, L)
            if not reductions:
                report = _verify(verts, L, params, expected_jones, params.seed + attempt)
                return verts, labels, report
            for row, toward in reductions:
                verts, labels = _reduce_extreme(verts, labels, row, toward, eps, L)
            report = _verify(verts, L, params, expected_jones, params.seed + attempt)
            return verts, labels, report
        except (NotEmbedded, NoRootFound, KnotTypeChanged, NoGenericProjection) as exc:
            last = exc
            if not reductions:
                spread = 2 * np.pi / len(angles)
                angles = angles + rng.uniform(-0.1, 0.1, size=len(angles)) * spread
            eps /= 2.0
    raise RetriesExhausted(f"gave up after {params.retries} attempts; last failure: {last!r}")


def _heights(n, spacing):
    return [(r - 1) * spacing for r in range(1, n + 1)]


def realize_doubled(p: ArcPresentation, params: RealizationParams | None = None,
                    expected_jones: LaurentPolynomial | None = None,
                    verify_knot: bool = True) -> EquilateralPolygon:
    """The ``2n``-stick equilateral polygon with one apex per arc."""
    params = params or RealizationParams()
    n = p.n
    params.check(n)
    if verify_knot and expected_jones is None:
        expected_jones = jones_polynomial(arcpres_to_diagram(p), params.max_crossings)
    verts, labels, report = build_verified(
        p, _heights(n, params.spacing_for(n)), params.angles_for(n), [], params,
        expected_jones if verify_knot else None, params.epsilon_for(n),
    )
    return EquilateralPolygon(verts, params.stick_length, p, report.min_clearance, tuple(labels))


def reduce_at_extremes(p: ArcPresentation, params: RealizationParams | None = None,
                       expected_jones: LaurentPolynomial | None = None) -> EquilateralPolygon:
    """The ``2n - 2``-stick polygon obtained by reducing at indices 1 and n.

    ``p`` must have no arc joining indices 1 and n (see
    :func:`equistick.arcpres.normalize_no_extremal_arc`).
    """
    params = params or RealizationParams()
    n = p.n
    if n < 3:
        raise ValueError("reduction needs at least 3 arcs")
    if (1, n) in p.arcs:
        raise NoValidRotation(f"arc {{1,{n}}} present; normalize the presentation first")
    params.check(n)
    low, high = set(p.arcs_at(1)), set(p.arcs_at(n))
    assert not low & high, "sticks at the two extremes must be distinct"
    if expected_jones is None:
        expected_jones = jones_polynomial(arcpres_to_diagram(p), params.max_crossings)
    verts, labels, report = build_verified(
        p, _heights(n, params.spacing_for(n)), params.angles_for(n),
        [(1, -1), (n, +1)], params, expected_jones, params.epsilon_for(n),
    )
    return EquilateralPolygon(verts, params.stick_length, p, report.min_clearance, tuple(labels))


def realize(p: ArcPresentation, params: RealizationParams | None = None, reduce: bool = True,
            expected_jones: LaurentPolynomial | None = None) -> EquilateralPolygon:
    """Realize ``p`` with ``2n - 2`` sticks, or ``2n`` when reduction is impossible or off.

    The presentation is first binding-rotated so no arc joins the first and
    last index. Presentations with fewer than three arcs, or whose every
    rotation keeps such an arc, get the doubled form only.
    """
    params = params or RealizationParams()
    if not reduce or p.n < 3:
        return realize_doubled(p, params, expected_jones)
    try:
        m = extremal_rotation(p)
    except NoValidRotation:
        return realize_doubled(p, params, expected_jones)
    q = binding_rotate(p, m)
    if expected_jones is None:
        expected_jones = jones_polynomial(arcpres_to_diagram(p), params.max_crossings)
    return reduce_at_extremes(q, params, expected_jones)


def with_params(params: RealizationParams, **changes) -> RealizationParams:
    return replace(params, **changes)
