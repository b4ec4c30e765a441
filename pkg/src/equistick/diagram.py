"""Oriented knot diagrams and their construction from arc presentations.

A diagram is stored as its signed Gauss sequence: the crossings met while
walking the knot once, each passage marked over or under. Everything else
(PD code, writhe, crossing table) is derived from that.

PD codes follow the usual convention: ``X[a, b, c, d]`` lists the four edge
labels counterclockwise starting from the incoming under-strand, with edges
labelled ``1..2c`` consecutively along the orientation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .arcpres import ArcPresentation
from .errors import DiagramError

__all__ = ["PlanarDiagram", "arcpres_to_diagram", "parse_pd", "format_pd"]


@dataclass(frozen=True)
class PlanarDiagram:
    gauss: tuple[tuple[int, bool], ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        counts = [[0, 0] for _ in self.signs]
        for x, over in self.gauss:
            if not 0 <= x < len(self.signs):
                raise DiagramError(f"passage references unknown crossing {x}")
            counts[x][bool(over)] += 1
        for x, (under, over) in enumerate(counts):
            if under != 1 or over != 1:
                raise DiagramError(
                    f"crossing {x} must be passed once over and once under"
                )
        if any(s not in (1, -1) for s in self.signs):
            raise DiagramError("crossing signs must be +1 or -1")

    @classmethod
    def from_gauss(cls, passages: Iterable[tuple[int, bool]], signs: Sequence[int]):
        """Build a diagram, relabelling crossings in order of first passage."""
        passages = [(int(x), bool(o)) for x, o in passages]
        relabel: dict[int, int] = {}
        for x, _ in passages:
            relabel.setdefault(x, len(relabel))
        if len(relabel) != len(signs):
            raise DiagramError("number of signs does not match number of crossings")
        new_signs = [0] * len(relabel)
        for old, new in relabel.items():
            new_signs[new] = int(signs[old])
        return cls(tuple((relabel[x], o) for x, o in passages), tuple(new_signs))

    @property
    def num_crossings(self) -> int:
        return len(self.signs)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def _passage_index(self):
        under = [0] * self.num_crossings
        over = [0] * self.num_crossings
        for p, (x, is_over) in enumerate(self.gauss):
            (over if is_over else under)[x] = p
        return under, over

    @cached_property
    def pd(self) -> tuple[tuple[int, int, int, int], ...]:
        m = len(self.gauss)

        def e_in(p):
            return p % m + 1

        under, over = self._passage_index
        code = []
        for x, sign in enumerate(self.signs):
            u_in, u_out = e_in(under[x]), e_in(under[x] + 1)
            o_in, o_out = e_in(over[x]), e_in(over[x] + 1)
            if sign > 0:
                code.append((u_in, o_out, u_out, o_in))
            else:
                code.append((u_in, o_in, u_out, o_out))
        return tuple(code)

    @property
    def crossings(self) -> list[tuple[int, int, int]]:
        """``(over incoming edge, under incoming edge, sign)`` per crossing."""
        under, over = self._passage_index
        m = len(self.gauss)
        return [
            (over[x] % m + 1, under[x] % m + 1, s) for x, s in enumerate(self.signs)
        ]

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edge labels with the (crossing, crossing) pair each edge joins, in order."""
        m = len(self.gauss)
        return [(self.gauss[p - 1][0], self.gauss[p][0]) for p in range(m)]

    def signed_gauss_code(self) -> list[int]:
        """Gauss code with 1-based crossing numbers, negative for under-passes."""
        return [(x + 1) if o else -(x + 1) for x, o in self.gauss]


def arcpres_to_diagram(p: ArcPresentation) -> PlanarDiagram:
    """Flatten an arc presentation into its grid diagram.

    Page ``k`` becomes column ``k``, binding index ``r`` becomes row ``r``;
    vertical strands always pass over horizontal ones.
    """
    steps = p.traversal()
    n = p.n
    col_span = {k: (min(a, b), max(a, b)) for k, a, b in steps}
    col_dir = {k: (1 if b > a else -1) for k, a, b in steps}
    row_cols: dict[int, tuple[int, int]] = {}
    row_dir: dict[int, int] = {}
    for idx, (k, _, b) in enumerate(steps):
        k_next = steps[(idx + 1) % n][0]
        row_cols[b] = (min(k, k_next), max(k, k_next))
        row_dir[b] = 1 if k_next > k else -1

    def crosses(k, r):
        lo, hi = col_span[k]
        left, right = row_cols[r]
        return lo < r < hi and left < k < right

    ids: dict[tuple[int, int], int] = {}
    signs: list[int] = []
    passages: list[tuple[int, bool]] = []

    def crossing_id(k, r):
        if (k, r) not in ids:
            ids[(k, r)] = len(signs)
            # over = vertical (0, vy), under = horizontal (hx, 0)
            signs.append(-col_dir[k] * row_dir[r])
        return ids[(k, r)]

    for idx, (k, a, b) in enumerate(steps):
        step = 1 if b > a else -1
        for r in range(a + step, b, step):
            if crosses(k, r):
                passages.append((crossing_id(k, r), True))
        k_next = steps[(idx + 1) % n][0]
        step = 1 if k_next > k else -1
        for col in range(k + step, k_next, step):
            if crosses(col, b):
                passages.append((crossing_id(col, b), False))
    return PlanarDiagram.from_gauss(passages, signs)


def format_pd(d: PlanarDiagram) -> str:
    return "".join("X[{},{},{},{}]\n".format(*x) for x in d.pd)


_PD_RE = re.compile(r"X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")


def parse_pd(text_or_tuples) -> PlanarDiagram:
    """Read a PD code whose edges are labelled consecutively along the knot.

    Accepts PD text (``X[1,4,2,5]`` per crossing) or a sequence of 4-tuples.
    """
    if isinstance(text_or_tuples, str):
        code = [tuple(int(v) for v in m.groups()) for m in _PD_RE.finditer(text_or_tuples)]
    else:
        code = [tuple(int(v) for v in x) for x in text_or_tuples]
    c = len(code)
    if c == 0:
        return PlanarDiagram((), ())
    m = 2 * c
    labels = sorted(v for x in code for v in x)
    if labels != sorted(list(range(1, m + 1)) * 2):
        raise DiagramError("PD labels must be 1..2c, each used exactly twice")
    slots: list[tuple[int, bool] | None] = [None] * m
    signs = []
    for x, (a, b, cc, dd) in enumerate(code):
        if cc != a % m + 1:
            raise DiagramError(f"crossing {x}: under-strand labels {a},{cc} not consecutive")
        if c == 1:
            positive = a == b
        else:
            positive = b == dd % m + 1
        signs.append(1 if positive else -1)
        o_in = dd if positive else b
        for pass_edge, over in ((a, False), (o_in, True)):
            if slots[pass_edge - 1] is not None:
                raise DiagramError(f"edge {pass_edge} enters two crossings")
            slots[pass_edge - 1] = (x, over)
    if any(s is None for s in slots):
        raise DiagramError("PD code is not a single consistently oriented knot")
    return PlanarDiagram.from_gauss(slots, signs)  # type: ignore[arg-type]
