"""Independent reference values for the group and Hecke algebra tests.

Nothing here goes through the Hecke module.  Kazhdan-Lusztig polynomials are
computed the classical way, in the variable q, from R-polynomials:

    q^d P_{x,w}(1/q) - P_{x,w}(q) = sum_{x < y <= w} R_{x,y}(q) P_{y,w}(q),  d = l(w) - l(x)

and then converted to the v-normalization with h_{x,w}(v) = v^d P_{x,w}(v^-2).
Polynomials are plain ``{exponent: coefficient}`` dicts.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from b2kl.coxeter import GEN, canonical_word, from_word, length, lower_interval


def _add(p, q, c=1):
    out = dict(p)
    for e, a in q.items():
        out[e] = out.get(e, 0) + c * a
        if out[e] == 0:
            del out[e]
    return out


def _mul(p, q):
    out = {}
    for e1, a in p.items():
        for e2, b in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + a * b
    return {e: a for e, a in out.items() if a}


def _left(s, w):
    return GEN[s] * w


def _left_descent(s, w):
    return length(_left(s, w)) < length(w)


@lru_cache(maxsize=None)
def r_poly(x, w):
    if x == w:
        return {0: 1}
    if length(x) >= length(w) or x not in lower_interval(w):
        return {}
    s = next(t for t in range(3) if _left_descent(t, w))
    sw, sx = _left(s, w), _left(s, x)
    if _left_descent(s, x):
        return r_poly(sx, sw)
    # (q - 1) R_{x,sw} + q R_{sx,sw}
    return _add(_mul({1: 1, 0: -1}, r_poly(x, sw)), _mul({1: 1}, r_poly(sx, sw)))


@lru_cache(maxsize=None)
def p_poly(x, w):
    if x == w:
        return {0: 1}
    below = lower_interval(w)
    if x not in below:
        return {}
    d = length(w) - length(x)
    rhs = {}
    for y in below:
        if y != x and length(y) > length(x) and x in lower_interval(y):
            rhs = _add(rhs, _mul(r_poly(x, y), p_poly(y, w)))
    # q^d P(1/q) only has degrees > (d-1)/2, so P is minus the low part of rhs
    return {e: -a for e, a in rhs.items() if 2 * e < d}


def h_dict(x, w):
    """``h_{x,w}`` as ``{v-exponent: coefficient}``."""
    d = length(w) - length(x)
    return {d - 2 * e: a for e, a in p_poly(x, w).items()}


def subword_interval(w):
    """``{x <= w}`` as the set of all subwords of one reduced word of ``w``."""
    word = canonical_word(w)
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        out.add(from_word("".join(c for c, keep in zip(word, mask) if keep)))
    return out


def growth_series(radius):
    """Coefficients of W0(t) / ((1 - t)(1 - t^3)) with W0 the finite B2 Poincare polynomial.

    W0(t) = (1 + t)(1 + t + t^2 + t^3); 1 and 3 are the exponents of B2.
    """
    w0 = [1, 2, 2, 2, 1]
    out = []
    for n in range(radius + 1):
        # 1/((1-t)(1-t^3)) has coefficient n//3 + 1 at t^n
        out.append(sum(c * ((n - k) // 3 + 1) for k, c in enumerate(w0) if k <= n))
    return out


