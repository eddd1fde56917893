"""Closed formulas for Kazhdan-Lusztig basis elements.

Big region: ``KL_theta(m,n)`` is a sum of ``N`` elements over a support set,
and every other big-region element is reached from it by multiplying with
one-generator basis elements and cancelling a single lower term.  Thick
region: explicit ``N`` sums for ``x_3k+1`` and ``e_n``, then recurrences.
Thin region: only a checker for the conjectured identities.

Anything without a formula (short elements, thin walls) is served by the
generic recursion, and the result says so.

>>> from b2kl.families import theta
>>> kl_theta_hat(2, 0) == n_elem(theta(2, 0)) + n_elem(theta(0, 0)).shift(2)
True
>>> kl_closed_info(theta(1, 1)).fallback
False
>>> str(h_xbar_x_closed(2, 3))
'v + v^3'
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .coxeter import IDENTITY, Element, canonical_word, from_word, inverse, phi
from .families import (
    FamilyTag, FormulaOutOfRange, NoFormula, big_element, big_tag,
    classify, t_word, theta, thick_element, thin_element, tp_word,
)
from .hecke import (
    HeckeElem, first_difference, hecke_sum, kl_basis, mul_kl_gen,
    n_elem, phi_elem, truncated_n,
)
from .laurent import LaurentPoly, V, f_poly

__all__ = [
    "supp", "kl_theta_hat", "kl_big", "kl_thick_north", "kl_thick_east_west",
    "kl_thick", "kl_closed", "kl_closed_info", "ClosedResult", "h_xbar_x_closed",
    "check_thin_conjecture", "u_elem", "compare", "NORTH_BRANCHES", "EMPTY_CUTS",
]

NORTH_BRANCHES = ("x3k1", "x3k2", "x3k3", "xbar3k3")
EMPTY_CUTS = ("formal", "zero", "full")
_ZERO = HeckeElem.zero()


# -- helpers --

def _big_or_none(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> Element | None:
    # negative indices name nothing; the terms they label are zero
    if m < 0 or n < 0:
        return None
    return big_element(m, n, x, y, primed)


def compare(identity: str, params: dict, lhs: HeckeElem, rhs: HeckeElem) -> dict:
    """One verification record; ``first_diff`` is the smallest disagreeing coefficient."""
    d = first_difference(lhs, rhs)
    if d is None:
        return {"identity": identity, "params": params, "status": "ok", "first_diff": None}
    w, a, b = d
    return {"identity": identity, "params": params, "status": "fail",
            "first_diff": {"element": canonical_word(w), "lhs": a.to_json(), "rhs": b.to_json()}}


# -- big region --

def supp(m: int, n: int) -> frozenset[tuple[int, int]]:
    """Index set of the ``N`` terms in ``KL_theta(m,n)``.

    >>> sorted(supp(0, 2))
    [(0, 0), (0, 2)]
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    out = {(a, b) for a in range(m % 2, m + 1, 2) for b in range(n + 1)}
    if m % 2 == 0:
        out = {(a, b) for a, b in out if a != 0 or (b - n) % 2 == 0}
    return frozenset(out)


@lru_cache(maxsize=None)
def kl_theta_hat(m: int, n: int) -> HeckeElem:
    """``sum over supp(m,n) of v^((m-a) + 2(n-b)) N_theta(a,b)``."""
    return hecke_sum(n_elem(theta(a, b)).shift((m - a) + 2 * (n - b)) for a, b in supp(m, n))


@lru_cache(maxsize=None)
def _big_right(m: int, n: int, y: str) -> HeckeElem:
    # theta -> theta t -> theta t s2 -> theta t s2 t', each step
    # multiplying by one KL generator and removing the one extra term
    if y == "1":
        return kl_theta_hat(m, n)
    t, tp = int(t_word(m)), int(tp_word(m))
    if y == "t":
        return mul_kl_gen(kl_theta_hat(m, n), t, "right")
    if y == "ts2":
        return mul_kl_gen(_big_right(m, n, "t"), 2, "right") - kl_theta_hat(m, n)
    if y == "ts2t'":
        return mul_kl_gen(_big_right(m, n, "ts2"), tp, "right") - _big_right(m, n, "t")
    raise ValueError(f"bad suffix {y!r}")


@lru_cache(maxsize=None)
def _big(m: int, n: int, x: str, y: str) -> HeckeElem:
    z = _big_right(m, n, y)
    if x == "1":
        return z
    if x == "s0":
        return mul_kl_gen(z, 0, "left")
    if x == "s2s0":
        return mul_kl_gen(_big(m, n, "s0", y), 2, "left") - z
    if x == "s1s2s0":
        return mul_kl_gen(_big(m, n, "s2s0", y), 1, "left") - _big(m, n, "s0", y)
    raise ValueError(f"bad prefix {x!r}")


def kl_big(tag: FamilyTag) -> HeckeElem:
    """KL basis element of a big-region element ``x theta(m,n) y`` (or its phi-image)."""
    if tag.region not in ("BigC", "BigPhiC"):
        raise NoFormula(f"{tag.label()} is not in the big region")
    out = _big(tag.m, tag.n, tag.x, tag.y)
    return phi_elem(out) if tag.primed else out


def _kl_big_or_zero(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> HeckeElem:
    if m < 0 or n < 0:
        return _ZERO
    return kl_big(big_tag(m, n, x, y, primed))


# -- thick region --

@lru_cache(maxsize=None)
def kl_thick_north(k: int, branch: str) -> HeckeElem:
    """KL basis element of ``x_3k+1``, ``x_3k+2``, ``x_3k+3`` or ``xbar_3k+3`` for ``k >= 2``."""
    if branch not in NORTH_BRANCHES:
        raise ValueError(f"branch must be one of {NORTH_BRANCHES}")
    if k < 2:
        raise FormulaOutOfRange(f"north wall formulas need k >= 2, got {k}")

    def f(j):
        return 3 * j + 1

    if branch == "x3k1":
        terms = [n_elem(thick_element("x", f(k))), n_elem(thick_element("x", f(k - 1))).shift(1)]
        for j in range(2, k):
            terms.append((n_elem(thick_element("e", f(k - j)))
                          + n_elem(thick_element("u", f(k - j)))).shift(j - 1))
        terms.append(n_elem(from_word("10")).shift(k - 1))
        return hecke_sum(terms)
    x3k1 = kl_thick_north(k, "x3k1")
    x3k2 = mul_kl_gen(x3k1, 2, "right")
    if branch == "x3k2":
        return x3k2
    # multiplying x_3k+2 by s0 gives x_3k+3 for odd k and xbar_3k+3 for even k,
    # by s1 the other way round
    if branch == "x3k3":
        s = 0 if k % 2 else 1
        return (mul_kl_gen(x3k2, s, "right") - x3k1
                - _kl_big_or_zero(k - 2, 0, "s1s2s0"))
    s = 1 if k % 2 else 0
    return (mul_kl_gen(x3k2, s, "right") - x3k1
            - _kl_big_or_zero(k - 1, 0)
            - _kl_big_or_zero(k - 2, 0, "s0", primed=True)
            - _kl_big_or_zero(k - 3, 0))


def _phi_power(w: Element, i: int) -> Element:
    return phi(w) if i % 2 else w


@lru_cache(maxsize=None)
def _kl_east(n: int) -> HeckeElem:
    if n < 4:
        raise FormulaOutOfRange(f"east wall formulas need n >= 4, got {n}")
    k, j = divmod(n - 1, 3)
    j += 1

    def e(i):
        return n_elem(thick_element("e", i))

    if j == 1:
        return hecke_sum(e(3 * (k - i) + 1).shift(i) for i in range(k + 1))
    if j == 2:
        return e(n) + hecke_sum((e(3 * (k - i) + 2) * 2).shift(i) for i in range(1, k + 1))
    terms = [e(n), n_elem(thick_element("e", 3 * k, primed=True)).shift(1)]
    for i in range(1, k + 1):
        terms.append(e(3 * (k - i) + 1).shift(i))
        s0t = _big_or_none(k - i - 1, 0, "s0")
        if s0t is not None:
            terms.append(n_elem(_phi_power(s0t, i)).shift(i))
    return hecke_sum(terms)


def kl_thick_east_west(family: str, n: int) -> HeckeElem:
    """KL basis element of ``e_n`` (``n >= 4``) or ``w_n = s2 e_n``."""
    if family == "e":
        return _kl_east(n)
    if family == "w":
        return mul_kl_gen(_kl_east(n), 2, "left")
    raise ValueError("family must be 'e' or 'w'")


def kl_thick(tag: FamilyTag) -> HeckeElem:
    """Thick-wall dispatch; raises :class:`FormulaOutOfRange` for the short elements."""
    if tag.region in ("ThickNorth", "ThickSouth"):
        n = tag.n
        if tag.family == "x":
            k, r = divmod(n - 1, 3)
            branch = ("x3k1", "x3k2", "x3k3")[r]
        else:
            k, branch = n // 3 - 1, "xbar3k3"
        out = kl_thick_north(k, branch)
    elif tag.region in ("ThickEast", "ThickWest"):
        out = kl_thick_east_west(tag.family, tag.n)
    else:
        raise NoFormula(f"{tag.label()} is not in the thick region")
    return phi_elem(out) if tag.primed else out


# -- dispatcher --

@dataclass(frozen=True)
class ClosedResult:
    """A KL basis element together with how it was obtained."""

    element: HeckeElem
    tag: FamilyTag | None
    fallback: bool

    @property
    def source(self) -> str:
        return "fallback" if self.fallback else "closed"


def kl_closed_info(w: Element) -> ClosedResult:
    tag = classify(w)
    if w == IDENTITY:
        return ClosedResult(HeckeElem.one(), tag, False)
    if tag is not None:
        try:
            if tag.region in ("BigC", "BigPhiC"):
                return ClosedResult(kl_big(tag), tag, False)
            if tag.region.startswith("Thick"):
                return ClosedResult(kl_thick(tag), tag, False)
        except FormulaOutOfRange:
            pass
    return ClosedResult(kl_basis(w), tag, True)


def kl_closed(w: Element) -> HeckeElem:
    """KL basis element from a closed formula when one applies, else the recursion."""
    return kl_closed_info(w).element


# -- a worked h-polynomial --

def h_xbar_x_closed(n: int, m: int) -> LaurentPoly:
    """``h(xbar_3n, x_3m) = v^(m-n) (F(m-n+1) + 2 F(m-n-1) + F(m-n-3))``, ``F(l) = sum_{i<l} v^2i``."""
    if n < 2 or n % 2 or m % 2 == 0 or m <= n:
        raise ValueError("need n even >= 2 and m odd > n")
    d = m - n
    return (f_poly(d + 1) + f_poly(d - 1) * 2 + f_poly(d - 3)).shift(d)


# -- thin region conjecture --

def u_elem(x: Element) -> HeckeElem:
    """``N_x`` plus the part of ``N_phi(x)`` lying outside the interval below ``x``."""
    return n_elem(x) + truncated_n(phi(x), x)


def _d(n: int) -> Element:
    return thin_element("d", n)


def _dbar(n: int) -> Element:
    return thin_element("dbar", n)


def _kl(w: Element) -> HeckeElem:
    return kl_basis(w)


def _kl_r(w: Element, s: int) -> HeckeElem:
    return mul_kl_gen(kl_basis(w), s, "right")


def _kl_l(w: Element, s: int) -> HeckeElem:
    return mul_kl_gen(kl_basis(w), s, "left")


def _sum(lo: int, hi: int, term: Callable[[int], HeckeElem]) -> HeckeElem:
    return hecke_sum(term(i) for i in range(lo, hi + 1))


def _u_or_zero(w: Element | None) -> HeckeElem:
    return _ZERO if w is None else u_elem(w)


def _formal_cut(k: int) -> Element:
    # theta(0, n) = theta(0, 0) d^n with d = s0 s2 s1 s2 makes sense as a group
    # element for every integer n, so s2 s1 theta'(0, k-2) s1 s2 does too
    j = k - 2
    d = from_word("0212") if j >= 0 else inverse(from_word("0212"))
    th = theta(0, 0)
    for _ in range(abs(j)):
        th = th * d
    return phi(from_word("20") * th * from_word("02"))


def _thin_first(k: int, empty_cut: str) -> HeckeElem:
    # H_d(4k+3) as a sum of N, D, U and big-region KL terms
    big = _kl_big_or_zero
    top = _big_or_none(0, k - 1)
    cut = _big_or_none(0, k - 2, "s2s0", "ts2", primed=True)
    if cut is None and empty_cut == "formal":
        cut = _formal_cut(k)
    if top is None:
        dterm = _ZERO
    elif cut is None:
        dterm = n_elem(top) if empty_cut == "full" else _ZERO
    else:
        dterm = truncated_n(top, cut)
    out = n_elem(_d(4 * k + 3)) + dterm.shift(1)
    out = out + big(0, k - 2) * (V + V ** 3)
    out = out + kl_closed(thick_element("w", 2)).shift(1)
    out = out + _sum(3, k, lambda i: big(0, k - i) + big(0, k - i, primed=True)).shift(1)
    out = out + _sum(2, k, lambda i: (
        _u_or_zero(_big_or_none(0, k - i, "s2s0", "ts2", primed=True))
        + _u_or_zero(_big_or_none(0, k - i, "1", "ts2"))
        + big(0, k - i, "s2s0")
        + big(0, k - i, "s2s0", primed=True))).shift(1)
    return out


def check_thin_conjecture(k: int, empty_cut: str = "formal") -> list[dict]:
    """Compare both sides of each conjectured thin-wall identity for this ``k``.

    Left sides come from the generic recursion; right sides are the
    conjectured sums, with big-region terms from :func:`kl_big`.  ``empty_cut``
    decides what the truncated term means when its cut element has a negative
    index (only at ``k = 1``).  ``"formal"`` evaluates the cut as a group
    element, extending ``theta(0, n) = theta(0, 0) d^n`` to ``n = -1``.
    ``"zero"`` drops the term like every other negative-index term, and
    ``"full"`` keeps the whole ``N`` term.  Only ``"formal"`` makes the first
    identity hold at ``k = 1``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if empty_cut not in EMPTY_CUTS:
        raise ValueError(f"empty_cut must be one of {', '.join(EMPTY_CUTS)}")
    big = _kl_big_or_zero
    d = _d
    recs = []

    def rec(name, lhs, rhs):
        recs.append(compare(name, {"k": k}, lhs, rhs))

    rec("thin_d4k3_expansion", _kl(d(4 * k + 3)), _thin_first(k, empty_cut))

    rec("thin_d4k_times_s2", _kl_r(d(4 * k), 2),
        _kl(d(4 * k + 1)) + _kl(d(4 * k - 1))
        + _sum(0, k - 2, lambda i: big(1, i)) + _sum(0, k - 3, lambda i: big(1, i, "s2s0")))
    rec("thin_d4k1_times_s1", _kl_r(d(4 * k + 1), 1),
        _kl(d(4 * k + 2))
        + _sum(0, k - 2, lambda i: big(0, i)) + _sum(0, k - 3, lambda i: big(0, i, "s2s0")))
    rec("thin_d4k2_times_s2", _kl_r(d(4 * k + 2), 2),
        _kl(d(4 * k + 3)) + _kl(d(4 * k + 1))
        + _sum(0, k - 2, lambda i: big(1, i, "s2s0", primed=True))
        + _sum(0, k - 3, lambda i: big(1, i, primed=True)))
    rec("thin_d4k3_times_s0", _kl_r(d(4 * k + 3), 0),
        _kl(d(4 * k + 4))
        + _sum(0, k - 2, lambda i: big(0, i, "s2s0", primed=True))
        + _sum(0, k - 3, lambda i: big(0, i, primed=True)))

    rec("thin_s0_times_d4k", _kl_l(d(4 * k), 0),
        _kl(_dbar(4 * k))
        + _sum(0, k - 3, lambda i: big(0, i, "1", "ts2t'", primed=True) + big(0, i, "1", "t", primed=True)))
    rec("thin_s0_times_d4k1", _kl_l(d(4 * k + 1), 0),
        _kl(_dbar(4 * k + 1))
        + _sum(0, k - 2, lambda i: big(0, i, primed=True))
        + _sum(0, k - 3, lambda i: big(0, i, "1", "ts2", primed=True)))
    rec("thin_s0_times_d4k2", _kl_l(d(4 * k + 2), 0),
        _kl(_dbar(4 * k + 2)) + big(0, k - 2, "1", "t", primed=True)
        + _sum(0, k - 3, lambda i: big(0, i, "1", "t", primed=True) * 2 + big(1, i, primed=True)))
    rec("thin_s0_times_d4k3", _kl_l(d(4 * k + 3), 0),
        _kl(_dbar(4 * k + 3))
        + _sum(0, k - 2, lambda i: big(0, i, "1", "ts2", primed=True))
        + _sum(0, k - 3, lambda i: big(0, i, primed=True)))
    return recs
