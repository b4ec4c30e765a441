"""Connected sums: two arc presentations spliced on one binding axis.

Factor 1 keeps its pages in the angular sector (0.1pi, 0.9pi) and factor 2 in
(1.1pi, 1.9pi). One arc of each factor, avoiding that factor's lowest and
highest binding index, is deleted, and the two factors share the endpoints
of the deleted arcs. Each side is then reduced at its own extremes exactly as
for a single knot, so the result has ``2*m1 + 2*m2 - 8`` sticks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arcpres import ArcPresentation, normalize_no_extremal_arc, page_rotate, validate
from .diagram import arcpres_to_diagram
from .errors import NoEligibleArc, RemapCollision
from .invariants import jones_polynomial
from .laurent import LaurentPolynomial
from .realize import EquilateralPolygon, RealizationParams, build_verified

__all__ = [
    "CompositePlan",
    "choose_splice_arcs",
    "merge_presentations",
    "realize_composite",
    "recover_factor",
    "side_angles",
    "SIDE_SECTORS",
]

SIDE_SECTORS = {1: (0.1 * np.pi, 0.9 * np.pi), 2: (1.1 * np.pi, 1.9 * np.pi)}


@dataclass(frozen=True)
class CompositePlan:
    factor1: ArcPresentation
    factor2: ArcPresentation
    arc1: int
    arc2: int
    row_map1: tuple[int, ...]  # factor-1 row r -> merged row row_map1[r - 1]
    row_map2: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.factor1.n + self.factor2.n - 2

    def extreme_rows(self):
        """``(merged row, toward)`` for the four reductions, factor 1 first."""
        m1, m2 = self.factor1.n, self.factor2.n
        return [
            (self.row_map1[0], -1),
            (self.row_map1[m1 - 1], +1),
            (self.row_map2[0], -1),
            (self.row_map2[m2 - 1], +1),
        ]


def _eligible(p: ArcPresentation, k: int) -> bool:
    i, j = p.arcs[k]
    return i != 1 and j != p.n


def _pick_arc(p: ArcPresentation, chosen: int | None, which: str) -> int:
    if chosen is not None:
        if not 0 <= chosen < p.n:
            raise NoEligibleArc(f"{which}: page index {chosen} out of range 0..{p.n - 1}")
        if not _eligible(p, chosen):
            raise NoEligibleArc(
                f"{which}: arc {p.arcs[chosen]} on page {chosen} touches an extreme binding index"
            )
        return chosen
    for k in range(p.n):
        if _eligible(p, k):
            return k
    raise NoEligibleArc(f"{which}: every arc touches binding index 1 or {p.n}")


def _row_maps(p1, p2, a1, a2):
    u1, v1 = p1.arcs[a1]
    u2, v2 = p2.arcs[a2]

    def bucket(r, u, v):
        if r < u:
            return 0
        if r == u:
            return 1
        if r < v:
            return 2
        if r == v:
            return 3
        return 4

    keys = []
    for r in range(1, p1.n + 1):
        keys.append(((bucket(r, u1, v1), 0, r), (1, r)))
    for r in range(1, p2.n + 1):
        b = bucket(r, u2, v2)
        if b in (1, 3):
            continue  # shared with factor 1
        keys.append(((b, 1, r), (2, r)))
    keys.sort()
    merged = {}
    for rank, (_, tag) in enumerate(keys, start=1):
        merged[tag] = rank
    merged[(2, u2)] = merged[(1, u1)]
    merged[(2, v2)] = merged[(1, v1)]
    map1 = tuple(merged[(1, r)] for r in range(1, p1.n + 1))
    map2 = tuple(merged[(2, r)] for r in range(1, p2.n + 1))
    if len(set(map1)) != p1.n or len(set(map2)) != p2.n:
        raise RemapCollision("two rows of one factor share a merged height")
    if len(set(map1) | set(map2)) != p1.n + p2.n - 2:
        raise RemapCollision("factors share more than the two splice rows")
    return map1, map2


def choose_splice_arcs(p1: ArcPresentation, p2: ArcPresentation,
                       arc1: int | None = None, arc2: int | None = None) -> CompositePlan:
    """Normalize both factors and pick the arcs to delete.

    Each factor is binding-rotated so no arc joins its first and last index
    (needed for the later reductions), then the lowest page whose arc avoids
    both extreme indices is chosen unless ``arc1``/``arc2`` override it.
    """
    for which, p in (("factor 1", p1), ("factor 2", p2)):
        if p.n < 5:
            raise NoEligibleArc(f"{which} has {p.n} arcs; nontrivial factors need at least 5")
    q1 = normalize_no_extremal_arc(p1)
    q2 = normalize_no_extremal_arc(p2)
    a1 = _pick_arc(q1, arc1, "factor 1")
    a2 = _pick_arc(q2, arc2, "factor 2")
    map1, map2 = _row_maps(q1, q2, a1, a2)
    return CompositePlan(q1, q2, a1, a2, map1, map2)


def merge_presentations(plan: CompositePlan) -> tuple[ArcPresentation, tuple[int, ...]]:
    """The merged presentation and the side (1 or 2) of each of its pages.

    Each factor's remaining pages are listed in cyclic order starting just
    after its deleted arc, so they fit in one angular sector without
    changing their cyclic arrangement.
    """
    arcs = []
    sides = []
    for side, p, a, row_map in (
        (1, plan.factor1, plan.arc1, plan.row_map1),
        (2, plan.factor2, plan.arc2, plan.row_map2),
    ):
        for step in range(1, p.n):
            i, j = p.arcs[(a + step) % p.n]
            arcs.append((row_map[i - 1], row_map[j - 1]))
            sides.append(side)
    return validate(arcs), tuple(sides)


def recover_factor(merged: ArcPresentation, sides, plan: CompositePlan, side: int) -> ArcPresentation:
    """Undo a merge for one side: keep that side's arcs and re-close its splice arc."""
    p = plan.factor1 if side == 1 else plan.factor2
    a = plan.arc1 if side == 1 else plan.arc2
    row_map = plan.row_map1 if side == 1 else plan.row_map2
    back = {m: r for r, m in enumerate(row_map, start=1)}
    arcs = [tuple(sorted((back[i], back[j]))) for (i, j), s in zip(merged.arcs, sides) if s == side]
    arcs.append(p.arcs[a])
    # pages were listed starting after the splice arc, which now sits last
    return page_rotate(validate(arcs), a + 1)


def _antipodal_gap(a, b) -> float:
    d = (a[:, None] + np.pi - b[None, :] + np.pi) % (2 * np.pi) - np.pi
    return float(np.min(np.abs(d)))


def side_angles(sides) -> np.ndarray:
    """Page angles spread inside each side's sector.

    A page exactly opposite another one is coplanar with it, and their
    sticks then project to nearly parallel lines. Factor 1 sits at cell
    centres; factor 2's offset within its cells is chosen to keep every
    page as far from antipodal to a factor-1 page as the grid allows.
    """
    idx = {side: [k for k, s in enumerate(sides) if s == side] for side in SIDE_SECTORS}

    def spread(side, offset):
        lo, hi = SIDE_SECTORS[side]
        count = len(idx[side])
        return lo + (np.arange(count) + offset) * (hi - lo) / count

    first = spread(1, 0.5)
    second = max(
        (spread(2, f) for f in np.linspace(0.05, 0.95, 19)),
        key=lambda b: _antipodal_gap(first, b),
    )
    angles = np.zeros(len(sides))
    angles[idx[1]] = first
    angles[idx[2]] = second
    return angles


def factor_jones(plan: CompositePlan, max_crossings=None):
    kw = {} if max_crossings is None else {"max_crossings": max_crossings}
    j1 = jones_polynomial(arcpres_to_diagram(plan.factor1), **kw)
    j2 = jones_polynomial(arcpres_to_diagram(plan.factor2), **kw)
    return j1, j2


def realize_composite(plan: CompositePlan, params: RealizationParams | None = None,
                      reduce: bool = True,
                      expected_jones: LaurentPolynomial | None = None) -> EquilateralPolygon:
    """Equilateral polygon of the connected sum with ``2*m1 + 2*m2 - 8`` sticks.

    With ``reduce=False`` the doubled ``2*(m1 + m2 - 2)``-stick form is
    returned instead. The result is checked against the product of the two
    factors' Jones polynomials.
    """
    params = params or RealizationParams()
    merged, sides = merge_presentations(plan)
    n = merged.n
    if params.page_angles is not None:
        raise ValueError("composite page angles are fixed by the side sectors")
    params.check(n)
    if expected_jones is None:
        j1, j2 = factor_jones(plan, params.max_crossings)
        expected_jones = j1 * j2
    heights = [(r - 1) * params.spacing_for(n) for r in range(1, n + 1)]
    reductions = plan.extreme_rows() if reduce else []
    verts, labels, report = build_verified(
        merged, heights, side_angles(sides), reductions, params, expected_jones,
        params.epsilon_for(n),
    )
    return EquilateralPolygon(verts, params.stick_length, merged, report.min_clearance, tuple(labels))
