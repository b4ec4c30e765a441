"""Arc presentations of knots.

An arc presentation with ``n`` binding indices is stored as the list of its
``n`` arcs in cyclic page order; arc ``k`` lives on page ``k`` and joins the
binding indices ``i < j`` (1-based, numbered bottom to top along the axis).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CountMismatch,
    DegreeError,
    Disconnected,
    LoopArc,
    NoValidRotation,
    ParseError,
)

__all__ = [
    "ArcPresentation",
    "validate",
    "page_rotate",
    "binding_rotate",
    "extremal_rotation",
    "normalize_no_extremal_arc",
    "parse_text",
    "serialize_text",
    "from_json",
    "to_json",
]


@dataclass(frozen=True)
class ArcPresentation:
    """A validated arc presentation. Build instances with :func:`validate`."""

    arcs: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.arcs)

    def arcs_at(self, row: int) -> tuple[int, int]:
        """Page indices of the two arcs incident to binding index ``row``."""
        pages = tuple(k for k, arc in enumerate(self.arcs) if row in arc)
        return pages  # type: ignore[return-value]

    def traversal(self) -> list[tuple[int, int, int]]:
        """Walk the knot once, returning ``(page, from_row, to_row)`` steps.

        The walk starts on page 0 at its lower endpoint, so the orientation
        is fixed by the data alone.
        """
        steps = []
        page = 0
        start = row = self.arcs[0][0]
        while True:
            i, j = self.arcs[page]
            nxt = j if row == i else i
            steps.append((page, row, nxt))
            row = nxt
            a, b = self.arcs_at(row)
            page = b if a == page else a
            if row == start and page == 0:
                break
        return steps

    def __str__(self):
        return serialize_text(self)


def _normalize_pairs(raw) -> list[tuple[int, int]]:
    pairs = []
    for item in raw:
        i, j = (int(v) for v in item)
        if i < 1 or j < 1:
            raise DegreeError(f"binding indices must be positive, got {{{i},{j}}}")
        if i == j:
            raise LoopArc(f"arc {{{i},{j}}} joins a binding index to itself")
        pairs.append((min(i, j), max(i, j)))
    return pairs


def validate(raw: Iterable[Sequence[int]], n: int | None = None) -> ArcPresentation:
    """Check a candidate arc list and return an :class:`ArcPresentation`.

    ``n`` is the declared number of binding indices; when omitted it is
    inferred as the largest index used.
    """
    pairs = _normalize_pairs(raw)
    if not pairs:
        raise CountMismatch("an arc presentation needs at least one arc")
    top = max(j for _, j in pairs)
    if n is None:
        n = top
    if len(pairs) != n or top > n:
        raise CountMismatch(
            f"{len(pairs)} arcs for {n} binding indices (largest index used: {top})"
        )
    degree = [0] * (n + 1)
    for i, j in pairs:
        degree[i] += 1
        degree[j] += 1
    bad = [r for r in range(1, n + 1) if degree[r] != 2]
    if bad:
        raise DegreeError(
            "binding indices must each meet exactly two arcs; offending: "
            + ", ".join(f"{r} (degree {degree[r]})" for r in bad)
        )
    p = ArcPresentation(tuple(pairs))
    visited = {page for page, _, _ in p.traversal()}
    if len(visited) != n:
        raise Disconnected(
            f"arcs form more than one component ({len(visited)} of {n} arcs reached)"
        )
    return p


def page_rotate(p: ArcPresentation, m: int) -> ArcPresentation:
    """Cyclically shift the pages so that page ``k`` becomes page ``k + m``."""
    n = p.n
    m %= n
    arcs = p.arcs[n - m:] + p.arcs[: n - m]
    return ArcPresentation(arcs)


def binding_rotate(p: ArcPresentation, m: int) -> ArcPresentation:
    n = p.n

    def shift(i):
        return (i + m - 1) % n + 1

    arcs = []
    for i, j in p.arcs:
        a, b = shift(i), shift(j)
        arcs.append((min(a, b), max(a, b)))
    return ArcPresentation(tuple(arcs))


def extremal_rotation(p: ArcPresentation) -> int:
    """Smallest ``m >= 0`` such that ``binding_rotate(p, m)`` has no arc ``{1, n}``.

    Raises :class:`NoValidRotation` when every rotation keeps such an arc,
    which happens exactly for presentations whose arcs are all cyclically
    adjacent (and which therefore have a smaller arc index).
    """
    n = p.n
    for m in range(n):
        if (1, n) not in binding_rotate(p, m).arcs:
            return m
    raise NoValidRotation(
        "every binding rotation leaves an arc joining the first and last index"
    )


def normalize_no_extremal_arc(p: ArcPresentation) -> ArcPresentation:
    return binding_rotate(p, extremal_rotation(p))


def parse_text(text: str, n: int | None = None) -> ArcPresentation:
    """Parse the one-arc-per-line text format.

    ``#`` starts a comment and blank lines are ignored. Line order is page
    order.
    """
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"not an integer pair: {line!r}", lineno) from None
        if i < 1 or j < 1:
            raise ParseError(f"binding indices must be positive: {line!r}", lineno)
        pairs.append((i, j))
    return validate(pairs, n)


def serialize_text(p: ArcPresentation) -> str:
    return "".join(f"{i} {j}\n" for i, j in p.arcs)


def to_json(p: ArcPresentation) -> str:
    return json.dumps({"n": p.n, "arcs": [list(a) for a in p.arcs]})


def from_json(text_or_obj) -> ArcPresentation:
    obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
    try:
        arcs = obj["arcs"]
    except (KeyError, TypeError):
        raise ParseError("JSON presentation needs an 'arcs' list") from None
    return validate(arcs, obj.get("n"))
