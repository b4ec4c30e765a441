"""Exact integer Laurent polynomials in one variable."""

from __future__ import annotations

import json
from fractions import Fraction


class LaurentPolynomial:
    """Immutable ``{exponent: coefficient}`` polynomial with integer coefficients.

    Zero coefficients are never stored, so equality and hashing are
    structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in dict(terms or {}).items():
            c = int(c)
            if c:
                clean[int(e)] = c
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def min_degree(self):
        return min(self._terms) if self._terms else None

    def max_degree(self):
        return max(self._terms) if self._terms else None

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPolynomial({e * k: c if k % 2 else 1})
        out = LaurentPolynomial.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Divide exactly; raises ``ValueError`` on a nonzero remainder."""
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        dmax = divisor.max_degree()
        dlead = divisor._terms[dmax]
        quot: dict[int, int] = {}
        lowest = (self.min_degree() or 0) - divisor.min_degree()
        while rem:
            top = max(rem)
            if top - dmax < lowest:
                break
            c, r = divmod(rem[top], dlead)
            if r:
                raise ValueError("polynomial division is not exact")
            shift = top - dmax
            quot[shift] = c
            for e, dc in divisor._terms.items():
                rem[e + shift] = rem.get(e + shift, 0) - c * dc
                if rem[e + shift] == 0:
                    del rem[e + shift]
        if rem:
            raise ValueError("polynomial division is not exact")
        return LaurentPolynomial(quot)

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Replace the variable ``x`` by ``x**k`` (``k`` may be negative)."""
        return LaurentPolynomial({e * k: c for e, c in self._terms.items()})

    def rescale_exponents(self, divisor: int) -> "LaurentPolynomial":
        """Divide every exponent by ``divisor``; they must all be multiples."""
        if any(e % divisor for e in self._terms):
            raise ValueError(f"exponents are not all multiples of {divisor}")
        return LaurentPolynomial({e // divisor: c for e, c in self._terms.items()})

    def mirror(self):
        return self.substitute_power(-1)

    def evaluate(self, x):
        """Evaluate exactly at an int or Fraction (floats also accepted)."""
        if isinstance(x, int):
            x = Fraction(x)
        total = 0
        for e, c in self._terms.items():
            total += c * x ** e
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def to_dict(self):
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_dict(cls, d):
        return cls({int(e): int(c) for e, c in d.items()})

    def to_json(self):
        return json.dumps(self.to_dict())

    def format(self, var="t"):
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items()):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentPolynomial({self._terms})"

    def __str__(self):
        return self.format()


def _coerce(x) -> LaurentPolynomial:
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial({0: x})
    raise TypeError(f"cannot combine LaurentPolynomial with {type(x).__name__}")


def equal_up_to_mirror(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    return p == q or p == q.mirror()
