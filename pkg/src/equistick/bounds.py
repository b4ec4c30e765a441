"""Stick-count bounds for table knots and their connected sums."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .table import KnotTableEntry

__all__ = ["BoundsReport", "single_bound", "composite_bound", "lower_sanity", "report_single", "report_composite"]


def single_bound(entry: KnotTableEntry) -> int:
    """Upper bound on the equilateral stick number from crossing data."""
    c = entry.crossing_number
    return 2 * c - 2 if entry.nonalternating_prime else 2 * c + 2


def composite_bound(e1: KnotTableEntry, e2: KnotTableEntry) -> int:
    # each non-alternating prime factor saves four sticks
    saved = 4 * (int(e1.nonalternating_prime) + int(e2.nonalternating_prime))
    return 2 * e1.crossing_number + 2 * e2.crossing_number - saved


def lower_sanity(c: int) -> int:
    """``ceil((7 + sqrt(8c + 1)) / 2)``, a lower bound on any stick number."""
    if c <= 0:
        return 3
    root = math.isqrt(8 * c + 1)
    if root * root == 8 * c + 1:
        return (7 + root) // 2  # root is odd here
    return math.ceil((7 + math.sqrt(8 * c + 1)) / 2)


@dataclass(frozen=True)
class BoundsReport:
    name: str
    stick_count: int
    upper_bound: int
    lower_sanity: int
    nontrivial: bool
    composite: bool = False

    @property
    def upper_pass(self) -> bool:
        return self.stick_count <= self.upper_bound

    @property
    def lower_pass(self) -> bool:
        if not self.nontrivial:
            return True
        return self.stick_count >= max(6, self.lower_sanity)

    @property
    def passed(self) -> bool:
        return self.upper_pass and self.lower_pass

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(upper_pass=self.upper_pass, lower_pass=self.lower_pass, passed=self.passed)
        return d


def report_single(entry: KnotTableEntry, stick_count: int, doubled: bool = False) -> BoundsReport:
    """Bounds for a single realization.

    The doubled form is not covered by the construction's bound, so it is
    measured against its own exact count ``2n`` instead.
    """
    if doubled or not entry.nontrivial:
        upper = 2 * entry.arc_index
    else:
        upper = single_bound(entry)
    return BoundsReport(entry.name, stick_count, upper, lower_sanity(entry.crossing_number), entry.nontrivial)


def report_composite(e1: KnotTableEntry, e2: KnotTableEntry, stick_count: int,
                     doubled: bool = False) -> BoundsReport:
    if doubled:
        upper = 2 * (e1.arc_index + e2.arc_index - 2)
    else:
        upper = composite_bound(e1, e2)
    c = e1.crossing_number + e2.crossing_number
    return BoundsReport(f"{e1.name}#{e2.name}", stick_count, upper, lower_sanity(c), True, True)
