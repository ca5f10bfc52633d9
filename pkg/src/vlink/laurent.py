"""Integer Laurent polynomials in one variable.

A :class:`LaurentPoly` is an immutable map ``exponent -> coefficient`` with no
stored zeros.  It supports ring arithmetic, exact division, evaluation at an
integer, and the normalization used throughout the package: shift so the
lowest exponent is 0 and make the lowest coefficient positive.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

import sympy

__all__ = ["LaurentPoly", "T", "ONE", "ZERO", "laurent_gcd"]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            c = clean.get(e, 0) + int(c)
            if c:
                clean[int(e)] = c
            else:
                clean.pop(e, None)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # construction helpers
    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        """Build from a dense coefficient list starting at exponent ``low``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")

    # inspection
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for ``±t^k``, the units of Z[t, 1/t]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = _igcd(g, c)
        return g

    # arithmetic
    def __add__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _maybe(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly({e * k: c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def __floordiv__(self, other):
        return self.exact_div(other)

    def exact_div(self, other) -> "LaurentPoly":
        """Divide in Z[t, 1/t]; raises ``ArithmeticError`` unless exact."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        rem = dict(self._terms)
        top_e, top_c = other.max_degree, other._terms[other.max_degree]
        low_e = other.min_degree
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            q, r = divmod(rem[e], top_c)
            if r or e - top_e + low_e < min(rem):
                raise ArithmeticError("inexact Laurent division")
            qe = e - top_e
            quot[qe] = q
            for oe, oc in other._terms.items():
                v = rem.get(oe + qe, 0) - q * oc
                if v:
                    rem[oe + qe] = v
                else:
                    rem.pop(oe + qe, None)
        return LaurentPoly(quot)

    def __call__(self, x):
        """Evaluate at an integer or Fraction."""
        total = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Return p(t^k)."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    def canonical(self) -> "LaurentPoly":
        """Representative of ``self`` up to ``±t^k``: lowest exponent 0, lowest coefficient > 0."""
        if not self._terms:
            return self
        p = self.shift(-self.min_degree)
        return -p if p._terms[0] < 0 else p

    def equal_up_to_unit(self, other) -> bool:
        return self.canonical() == LaurentPoly.coerce(other).canonical()

    def is_alternating(self) -> bool:
        """Coefficients satisfy ``(-1)^(i+j) c_i c_j >= 0`` for all i, j."""
        signs = {(1 if c > 0 else -1) * (-1) ** (e % 2) for e, c in self._terms.items()}
        return len(signs) <= 1

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "t", denom: int = 1) -> str:
        """Human readable form, highest degree first.

        ``denom`` divides every exponent, so a polynomial in ``q = t^(1/4)``
        prints in ``t`` with ``denom=4``.
        """
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            ex = Fraction(e, denom)
            if ex == 0:
                mono = ""
            elif ex == 1:
                mono = var
            else:
                mono = f"{var}^{ex}" if ex.denominator == 1 and ex > 0 else f"{var}^({ex})"
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}{mono}" if not mono else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data.items()})


def _maybe(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


ONE = LaurentPoly.constant(1)
ZERO = LaurentPoly()
T = LaurentPoly.monomial(1)

_x = sympy.Symbol("x")


def _to_sympy(p: LaurentPoly) -> sympy.Poly:
    q = p.shift(-p.min_degree)
    return sympy.Poly.from_dict({(e,): c for e, c in q.terms.items()}, _x, domain=sympy.ZZ)


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in Z[t, 1/t], returned in canonical form."""
    if a.is_zero():
        return b.canonical()
    if b.is_zero():
        return a.canonical()
    g = _to_sympy(a).gcd(_to_sympy(b))
    return LaurentPoly({m[0]: int(c) for m, c in g.as_dict().items()}).canonical()
