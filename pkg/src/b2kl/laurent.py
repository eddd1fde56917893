"""Sparse Laurent polynomials in one variable ``v`` with integer coefficients.

A polynomial is stored as a dict ``{exponent: coefficient}`` with no zero
coefficients, so two polynomials are equal exactly when their dicts are.

>>> p = LaurentPoly({-1: 1, 1: 1})
>>> str(p)
'v^-1 + v'
>>> p * p == LaurentPoly({-2: 1, 0: 2, 2: 1})
True
>>> p.bar() == p
True
>>> f_poly(3)
LaurentPoly({0: 1, 2: 1, 4: 1})
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable element of Z[v, v^-1]."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | int | None = None):
        if coeffs is None:
            self._c = {}
        elif isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            self._c = {int(k): int(c) for k, c in coeffs.items() if c}

    @classmethod
    def _wrap(cls, d: dict) -> LaurentPoly:
        # caller guarantees d is normalized and not shared
        p = object.__new__(cls)
        p._c = d
        return p

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls._wrap({exp: coeff} if coeff else {})

    # -- inspection --

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items(self):
        return sorted(self._c.items())

    def exponents(self) -> list[int]:
        return sorted(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_nonneg(self) -> bool:
        return all(c > 0 for c in self._c.values())

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- arithmetic --

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        d = dict(self._c)
        for k, c in other._c.items():
            s = d.get(k, 0) + c
            if s:
                d[k] = s
            else:
                del d[k]
        return LaurentPoly._wrap(d)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({k: -c for k, c in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._wrap({k: c * other for k, c in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._c) == 1:
            (e, c), = other._c.items()
            return LaurentPoly._wrap({k + e: a * c for k, a in self._c.items()})
        d: dict[int, int] = {}
        for k1, c1 in self._c.items():
            for k2, c2 in other._c.items():
                k = k1 + k2
                d[k] = d.get(k, 0) + c1 * c2
        return LaurentPoly._wrap({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._c) == 1:
                (e, c), = self._c.items()
                if c in (1, -1):
                    return LaurentPoly._wrap({e * n: 1 if c == 1 else (-1) ** -n})
            raise ValueError("only unit monomials can be inverted")
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v**k``."""
        if not k:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._c.items()})

    def bar(self) -> LaurentPoly:
        """The ring involution ``v -> v^-1``."""
        return LaurentPoly._wrap({-k: c for k, c in self._c.items()})

    # -- comparison / hashing --

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if not self._c:
            return hash(0)
        if len(self._c) == 1 and 0 in self._c:
            return hash(self._c[0])
        return hash(frozenset(self._c.items()))

    # -- text / json --

    def to_json(self) -> dict[str, int]:
        return {str(k): c for k, c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(k): int(c) for k, c in data.items()})

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._c.items()))!r})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, c in sorted(self._c.items()):
            if k == 0:
                mono = str(abs(c))
            else:
                base = "v" if k == 1 else f"v^{k}"
                mono = base if abs(c) == 1 else f"{abs(c)}{base}"
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append(f"{sign} {mono}")
        return " ".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def is_nonneg(p: LaurentPoly) -> bool:
    return p.is_nonneg()


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def f_poly(l: int) -> LaurentPoly:
    """``1 + v^2 + ... + v^(2l-2)``, and 0 when ``l <= 0``."""
    return LaurentPoly._wrap({2 * i: 1 for i in range(max(l, 0))})


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    d: dict[int, int] = {}
    for p in polys:
        for k, c in p._c.items():
            d[k] = d.get(k, 0) + c
    return LaurentPoly._wrap({k: c for k, c in d.items() if c})

