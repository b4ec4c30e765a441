"""Kauffman bracket, Jones polynomial and determinant of knot diagrams."""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .diagram import PlanarDiagram
from .errors import DiagramError, TooManyCrossings
from .laurent import LaurentPolynomial

__all__ = [
    "DEFAULT_MAX_CROSSINGS",
    "STATE_SUM_MAX_CROSSINGS",
    "kauffman_bracket",
    "state_sum_bracket",
    "jones_polynomial",
    "jones_from_bracket",
    "faces",
    "goeritz_matrix",
    "determinant",
    "bareiss_determinant",
]

# Limit for the frontier-contraction bracket; grid diagrams of 10-arc
# presentations and projections of composite polygons stay well below it.
DEFAULT_MAX_CROSSINGS = 256
# Limit for literal 2^c enumeration.
STATE_SUM_MAX_CROSSINGS = 16

_A = LaurentPolynomial.monomial(1)
_A_INV = LaurentPolynomial.monomial(-1)
_LOOP = LaurentPolynomial({2: -1, -2: -1})  # -A^2 - A^-2

# smoothing pairs of PD positions (a, b, c, d) = (0, 1, 2, 3)
_A_PAIRS = ((0, 1), (2, 3))
_B_PAIRS = ((0, 3), (1, 2))


def state_sum_bracket(d: PlanarDiagram, max_crossings: int = STATE_SUM_MAX_CROSSINGS):
    """Bracket by enumerating all ``2**c`` smoothings.

    Each state contributes ``A**(#A - #B) * (-A**2 - A**-2)**(loops - 1)``.
    """
    pd = d.pd
    c = len(pd)
    if c > max_crossings:
        raise TooManyCrossings(f"{c} crossings exceeds the state-sum limit {max_crossings}")
    if c == 0:
        return LaurentPolynomial.one()
    counts: dict[tuple[int, int], int] = defaultdict(int)
    for mask in range(1 << c):
        parent = list(range(2 * c + 1))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        n_a = 0
        for x, labels in enumerate(pd):
            if mask >> x & 1:
                pairs = _B_PAIRS
            else:
                pairs = _A_PAIRS
                n_a += 1
            for i, j in pairs:
                ru, rv = find(labels[i]), find(labels[j])
                if ru != rv:
                    parent[ru] = rv
        loops = len({find(u) for u in range(1, 2 * c + 1)})
        counts[(2 * n_a - c, loops)] += 1
    total = LaurentPolynomial()
    for (a_exp, loops), mult in counts.items():
        total = total + mult * LaurentPolynomial.monomial(a_exp) * _LOOP ** (loops - 1)
    return total


def _elimination_order(pd) -> list[int]:
    """Greedy crossing order that keeps the open frontier small."""
    c = len(pd)
    done = [False] * c
    seen_labels: set[int] = set()
    order = []
    for _ in range(c):
        best, best_score = -1, -1
        for x in range(c):
            if done[x]:
                continue
            score = sum(1 for v in pd[x] if v in seen_labels)
            if score > best_score:
                best, best_score = x, score
        done[best] = True
        order.append(best)
        seen_labels.update(pd[best])
    return order


def kauffman_bracket(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS):
    """Exact Kauffman bracket, normalised so the 0-crossing unknot gives 1.

    This is the same state sum as :func:`state_sum_bracket`, evaluated by
    adding crossings one at a time and merging partial states that induce the
    same pairing of the still-open edge ends.
    """
    pd = d.pd
    c = len(pd)
    if c > max_crossings:
        raise TooManyCrossings(f"{c} crossings exceeds the limit {max_crossings}")
    if c == 0:
        return LaurentPolynomial.one()

    # darts are (crossing, position) encoded as 4*x + i
    label_darts: dict[int, list[int]] = defaultdict(list)
    for x, labels in enumerate(pd):
        for i, v in enumerate(labels):
            label_darts[v].append(4 * x + i)
    other = {}
    for a, b in label_darts.values():
        other[a], other[b] = b, a

    processed = [False] * c
    # state: frozenset of open-dart pairs -> weight
    states: dict[frozenset, LaurentPolynomial] = {frozenset(): LaurentPolynomial.one()}
    for x in _elimination_order(pd):
        here = range(4 * x, 4 * x + 4)
        new_states: dict[frozenset, LaurentPolynomial] = defaultdict(LaurentPolynomial)
        for key, weight in states.items():
            partner = {}
            for u, v in key:
                partner[u], partner[v] = v, u
            for pairs, factor in ((_A_PAIRS, _A), (_B_PAIRS, _A_INV)):
                smooth = {}
                for i, j in pairs:
                    smooth[4 * x + i], smooth[4 * x + j] = 4 * x + j, 4 * x + i
                new_key, loops = _absorb(partner, smooth, here, other, processed, x)
                w = weight * factor
                if loops:
                    w = w * _LOOP ** loops
                new_states[new_key] = new_states[new_key] + w
        processed[x] = True
        states = {k: v for k, v in new_states.items() if not v.is_zero()}
    total = states.get(frozenset(), LaurentPolynomial())
    return total.exact_div(_LOOP)


def _absorb(partner, smooth, here, other, processed, x):
    """Glue one smoothed crossing onto a partial state.

    Returns the new pairing of open darts and the number of loops closed.
    """

    def neighbours(u):
        out = []
        if u in smooth:
            out.append(smooth[u])
            o = other[u]
            if processed[o // 4] or o // 4 == x:
                out.append(o)
        else:
            out.append(partner[u])
            o = other[u]
            if o // 4 == x:
                out.append(o)
        return out

    visited: set[int] = set()
    new_pairs = []
    loops = 0
    for start in here:
        if start in visited:
            continue
        component = {start}
        stack = [start]
        while stack:
            for v in neighbours(stack.pop()):
                if v not in component:
                    component.add(v)
                    stack.append(v)
        visited |= component
        ends = sorted(u for u in component if len(neighbours(u)) == 1)
        if not ends:
            loops += 1
        elif len(ends) == 2:
            new_pairs.append((ends[0], ends[1]))
        else:
            raise DiagramError("internal error: open path without two ends")
    keep = [(u, v) for u, v in _pairs_of(partner) if u not in visited and v not in visited]
    return frozenset(keep + new_pairs), loops


def _pairs_of(partner):
    return {(min(u, v), max(u, v)) for u, v in partner.items()}


def jones_from_bracket(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """``(-A^3)^(-w) <D>`` rewritten in ``t = A^-4``."""
    normalized = bracket * LaurentPolynomial.monomial(-3 * writhe, -1 if writhe % 2 else 1)
    return normalized.substitute_power(-1).rescale_exponents(4)


def jones_polynomial(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS):
    return jones_from_bracket(kauffman_bracket(d, max_crossings), d.writhe)


def faces(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Faces of the diagram as lists of corners ``(crossing, i)``.

    Corner ``(x, i)`` is the region at crossing ``x`` between PD positions
    ``i`` and ``i + 1``.
    """
    pd = d.pd
    label_darts: dict[int, list[int]] = defaultdict(list)
    for x, labels in enumerate(pd):
        for i, v in enumerate(labels):
            label_darts[v].append(4 * x + i)
    other = {}
    for a, b in label_darts.values():
        other[a], other[b] = b, a

    def rot(u):
        return 4 * (u // 4) + (u % 4 + 1) % 4

    seen = set()
    result = []
    for start in range(4 * len(pd)):
        if start in seen:
            continue
        face = []
        u = start
        while u not in seen:
            seen.add(u)
            y, j = divmod(u, 4)
            face.append((y, (j - 1) % 4))  # we left y through j, having arrived via j-1
            u = rot(other[u])
        result.append(face)
    return result


def goeritz_matrix(d: PlanarDiagram) -> list[list[int]]:
    """Goeritz matrix on the shaded faces of a checkerboard colouring."""
    pd = d.pd
    c = len(pd)
    if c == 0:
        return [[0]]
    fs = faces(d)
    if len(fs) != c + 2:
        raise DiagramError(f"diagram has {len(fs)} faces, expected {c + 2}")
    face_of = {}
    for f, corners in enumerate(fs):
        for corner in corners:
            face_of[corner] = f
    color = [-1] * len(fs)
    color[face_of[(0, 0)]] = 0
    changed = True
    while changed:
        changed = False
        for x in range(c):
            for i in range(4):
                f, g = face_of[(x, i)], face_of[(x, (i + 1) % 4)]
                if color[f] >= 0 and color[g] < 0:
                    color[g] = 1 - color[f]
                    changed = True
                elif color[g] >= 0 and color[f] < 0:
                    color[f] = 1 - color[g]
                    changed = True
                elif color[f] >= 0 and color[f] == color[g]:
                    raise DiagramError("faces admit no checkerboard colouring")
    shaded = [f for f in range(len(fs)) if color[f] == 0]
    index = {f: k for k, f in enumerate(shaded)}
    size = len(shaded)
    g = [[0] * size for _ in range(size)]
    for x in range(c):
        if color[face_of[(x, 1)]] == 0:
            f1, f2, eta = face_of[(x, 1)], face_of[(x, 3)], 1
        else:
            f1, f2, eta = face_of[(x, 0)], face_of[(x, 2)], -1
        if f1 == f2:
            continue
        i, j = index[f1], index[f2]
        g[i][j] -= eta
        g[j][i] -= eta
    for i in range(size):
        g[i][i] = -sum(g[i][j] for j in range(size) if j != i)
    return g


def bareiss_determinant(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(d: PlanarDiagram) -> int:
    if d.num_crossings == 0:
        return 1
    g = goeritz_matrix(d)
    minor = [row[:-1] for row in g[:-1]]
    return abs(bareiss_determinant(minor))


def jones_at_minus_one(j: LaurentPolynomial) -> int:
    value = j.evaluate(Fraction(-1))
    return int(value)
