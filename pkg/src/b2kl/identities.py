"""Catalog of algebraic identities between ``N`` elements and KL basis elements.

Each :class:`Identity` knows the parameter range it is stated for and builds
both sides for one parameter choice.  KL basis elements on either side come
from the generic recursion, never from the closed formulas, except in the
identities that are about the closed-form sums themselves (names containing
``hat``).  Terms whose big-region index is negative are zero.

>>> ident = CATALOG["n_theta_times_t"]
>>> [r["status"] for r in ident.check(12)]
['ok']
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .closedforms import compare, kl_theta_hat, kl_thick_east_west, kl_thick_north
from .coxeter import from_word
from .families import big_element, t_word, thick_element, tp_word
from .hecke import (
    HeckeElem, h_poly, hecke_sum, kl_basis, mul_kl_word, n_elem,
)
from .laurent import V, V_INV, f_poly, LaurentPoly

_ZERO = HeckeElem.zero()
_VV = V + V_INV


# -- term builders --

def N(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> HeckeElem:
    if m < 0 or n < 0:
        return _ZERO
    return n_elem(big_element(m, n, x, y, primed))


def K(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> HeckeElem:
    if m < 0 or n < 0:
        return _ZERO
    return kl_basis(big_element(m, n, x, y, primed))


def hat(m: int, n: int) -> HeckeElem:
    if m < 0 or n < 0:
        return _ZERO
    return kl_theta_hat(m, n)


def Nw(family: str, n: int, primed: bool = False) -> HeckeElem:
    return n_elem(thick_element(family, n, primed))


def Kw(family: str, n: int, primed: bool = False) -> HeckeElem:
    return kl_basis(thick_element(family, n, primed))


def R(x: HeckeElem, word: str) -> HeckeElem:
    """``x KL_{a} KL_{b} ...`` for the letters of ``word``."""
    return mul_kl_word(x, word, "right")


def L(word: str, x: HeckeElem) -> HeckeElem:
    """``KL_{a} KL_{b} ... x`` for the letters of ``word``."""
    return mul_kl_word(x, word, "left")


def _t(m: int) -> str:
    return t_word(m)


def _tp(m: int) -> str:
    return tp_word(m)


def theta_len(m: int, n: int) -> int:
    return 3 * m + 4 * n + 4


# -- the catalog --

@dataclass(frozen=True)
class Identity:
    """An identity ``lhs == rhs`` over a family of parameters.

    ``cases(max_len)`` yields the in-range parameter dicts whose largest
    element has length at most ``max_len``.
    """

    name: str
    statement: str
    cases: Callable[[int], Iterator[dict]]
    sides: Callable[..., tuple[HeckeElem, HeckeElem]]

    def check_one(self, **params) -> dict:
        lhs, rhs = self.sides(**params)
        return compare(self.name, params, lhs, rhs)

    def check(self, max_len: int) -> list[dict]:
        return [self.check_one(**p) for p in self.cases(max_len)]


CATALOG: dict[str, Identity] = {}


def _register(name: str, statement: str, cases, sides) -> None:
    CATALOG[name] = Identity(name, statement, cases, sides)


def _mn(m_min: int, n_min: int, top: Callable[[int, int], int]):
    def cases(max_len: int):
        for m in range(m_min, max_len + 1):
            if top(m, n_min) > max_len:
                break
            for n in range(n_min, max_len + 1):
                if top(m, n) > max_len:
                    break
                yield {"m": m, "n": n}
    return cases


def _one(lo: int, top: Callable[[int], int], var: str):
    def cases(max_len: int):
        i = lo
        while top(i) <= max_len:
            yield {var: i}
            i += 1
    return cases


def _fixed(*params: dict, top: int):
    def cases(max_len: int):
        if top <= max_len:
            yield from params
    return cases


# N times one generator

_register(
    "n_theta_times_t", "N_theta(m,n) KL_t = N_theta(m,n)t + v N_theta(m-1,n)t', m,n >= 1",
    _mn(1, 1, lambda m, n: theta_len(m, n) + 1),
    lambda m, n: (R(N(m, n), _t(m)), N(m, n, y="t") + N(m - 1, n, y="t").shift(1)),
)
_register(
    "n_theta0n_times_s0", "N_theta(0,n) KL_s0 = N_theta(0,n)s0 + v^2 N_theta(0,n-1)s0, n >= 1",
    _one(1, lambda n: theta_len(0, n) + 1, "n"),
    lambda n: (R(N(0, n), "0"), N(0, n, y="t") + N(0, n - 1, y="t").shift(2)),
)
_register(
    "n_thetam0_times_t", "N_theta(m,0) KL_t = N_theta(m,0)t + v N_theta(m-1,0)t', m >= 1",
    _one(1, lambda m: theta_len(m, 0) + 1, "m"),
    lambda m: (R(N(m, 0), _t(m)), N(m, 0, y="t") + N(m - 1, 0, y="t").shift(1)),
)
_register(
    "n_theta00_times_s0", "N_theta(0,0) KL_s0 = N_theta(0,0)s0",
    _fixed({}, top=5),
    lambda: (R(N(0, 0), "0"), N(0, 0, y="t")),
)
_register(
    "s0_times_n_thetam0", "KL_s0 N_theta(m,0) = N_s0theta(m,0) + v N_s1theta'(m-1,0), m >= 0",
    _one(0, lambda m: theta_len(m, 0) + 1, "m"),
    lambda m: (L("0", N(m, 0)), N(m, 0, "s0") + N(m - 1, 0, "s0", primed=True).shift(1)),
)
_register(
    "n_s0thetam0_times_t", "N_s0theta(m,0) KL_t = N_s0theta(m,0)t + v N_s0theta(m-1,0)t', m >= 1",
    _one(1, lambda m: theta_len(m, 0) + 2, "m"),
    lambda m: (R(N(m, 0, "s0"), _t(m)), N(m, 0, "s0", "t") + N(m - 1, 0, "s0", "t").shift(1)),
)
_register(
    "n_s0theta00_times_s0", "N_s0theta(0,0) KL_s0 = N_s0theta(0,0)s0 + v^2 N_s1s0",
    _fixed({}, top=6),
    lambda: (R(N(0, 0, "s0"), "0"), N(0, 0, "s0", "t") + n_elem(from_word("10")).shift(2)),
)
_register(
    "n_s1s2s0thetam0_times_t",
    "N_s1s2s0theta(m,0) KL_t = N_s1s2s0theta(m,0)t + v N_s1s2s0theta(m-1,0)t', m >= 1",
    _one(1, lambda m: theta_len(m, 0) + 4, "m"),
    lambda m: (R(N(m, 0, "s1s2s0"), _t(m)),
               N(m, 0, "s1s2s0", "t") + N(m - 1, 0, "s1s2s0", "t").shift(1)),
)


# N times three generators

def _four_neighbours(m, n):
    return N(m + 1, n) + N(m - 1, n + 1) + N(m + 1, n - 1) + N(m - 1, n)


_register(
    "n_theta_times_tst",
    "N_theta KL_t KL_s2 KL_t = 2 N_theta KL_t + N(m+1,n) + N(m-1,n+1) + N(m+1,n-1) + N(m-1,n), m,n >= 1",
    _mn(1, 1, lambda m, n: theta_len(m + 1, n)),
    lambda m, n: (R(N(m, n), _t(m) + "2" + _t(m)), R(N(m, n), _t(m)) * 2 + _four_neighbours(m, n)),
)
_register(
    "n_theta_grow_first",
    "N_theta (KL_t KL_s2 KL_t - 2 KL_t) = N(m+1,n) + N(m-1,n+1) + N(m+1,n-1) + N(m-1,n), m,n >= 1",
    _mn(1, 1, lambda m, n: theta_len(m + 1, n)),
    lambda m, n: (R(N(m, n), _t(m) + "2" + _t(m)) - R(N(m, n), _t(m)) * 2, _four_neighbours(m, n)),
)
_register(
    "n_thetam0_grow_first",
    "N_theta(m,0) (KL_t KL_s2 KL_t - 2 KL_t) = N(m+1,0) + N(m-1,1) + (1+v^2) N(m-1,0), m >= 0",
    _one(0, lambda m: theta_len(m + 1, 0), "m"),
    lambda m: (R(N(m, 0), _t(m) + "2" + _t(m)) - R(N(m, 0), _t(m)) * 2,
               N(m + 1, 0) + N(m - 1, 1) + N(m - 1, 0) * (1 + V * V)),
)
_register(
    "n_theta0n_grow_first",
    "N_theta(0,n) (KL_s0 KL_s2 KL_s0 - 2 KL_s0) = N(1,n) + (1+v^2) N(1,n-1) + v^2 N(1,n-2), n >= 0",
    _one(0, lambda n: theta_len(1, n), "n"),
    lambda n: (R(N(0, n), "020") - R(N(0, n), "0") * 2,
               N(1, n) + N(1, n - 1) * (1 + V * V) + N(1, n - 2).shift(2)),
)
_register(
    "n_theta0ns0_times_s2",
    "N_theta(0,n)s0 KL_s2 + v^2 N_theta(0,n-1)s0s2 = N_theta(0,n)s0s2 + N_theta(0,n) + v N_theta(1,n-1), n >= 1",
    _one(1, lambda n: theta_len(0, n) + 2, "n"),
    lambda n: (R(N(0, n, y="t"), "2") + N(0, n - 1, y="ts2").shift(2),
               N(0, n, y="ts2") + N(0, n) + N(1, n - 1).shift(1)),
)


def _four_kl_lhs(n):
    return R(N(0, n), "0212") + N(0, n - 2, y="ts2").shift(4) * 2


def _four_kl_rhs(n):
    return hecke_sum([
        N(0, n + 1),
        N(0, n, y="ts2") * 2, N(0, n).shift(2), N(2, n - 1),
        N(0, n) * 3, N(1, n - 1).shift(1) * 2, N(2, n - 2).shift(2),
        N(0, n).shift(-2), N(0, n - 1).shift(2) * 3, N(1, n - 2).shift(3) * 2,
        N(0, n - 1),
    ])


_register(
    "n_theta0n_times_s0s2s1s2",
    "N_theta(0,n) KL_s0 KL_s2 KL_s1 KL_s2 + 2v^4 N_theta(0,n-2)s0s2 = (eleven N terms), n > 2",
    _one(3, lambda n: theta_len(0, n + 1), "n"),
    lambda n: (_four_kl_lhs(n), _four_kl_rhs(n)),
)
_register(
    "n_theta0n_grow_second",
    "N_theta(0,n) (KL_0 KL_2 KL_1 KL_2 - 2 KL_0 KL_2 + 1 - (v+v^-1)^2) = "
    "N(0,n+1) + (1+v^2) N(0,n-1) + v^2 N(2,n-2) + N(2,n-1), n > 2",
    _one(3, lambda n: theta_len(0, n + 1), "n"),
    lambda n: (R(N(0, n), "0212") - R(N(0, n), "02") * 2 + N(0, n) * (1 - _VV * _VV),
               N(0, n + 1) + N(0, n - 1) * (1 + V * V) + N(2, n - 2).shift(2) + N(2, n - 1)),
)


def _y_left(x: HeckeElem) -> HeckeElem:
    return L("120", x) - L("0", x)


_register(
    "s1s2s0_minus_s0_times_n_thetam0",
    "(KL_1 KL_2 KL_0 - KL_0) N_theta(m,0) = N_s1s2s0theta(m,0) + (v^-1+2v) N_theta(m,0) + "
    "v (N_theta(m-2,1) + N_s1theta'(m-1,0)) + v^2 (N_s0theta(m-2,0) - N_s1s2s0theta(m-2,0)), m >= 1",
    _one(1, lambda m: theta_len(m, 0) + 3, "m"),
    lambda m: (_y_left(N(m, 0)),
               N(m, 0, "s1s2s0") + N(m, 0) * (V_INV + V * 2)
               + (N(m - 2, 1) + N(m - 1, 0, "s0", primed=True)).shift(1)
               + (N(m - 2, 0, "s0") - N(m - 2, 0, "s1s2s0")).shift(2)),
)
_register(
    "s1s2s0_minus_s0_times_n_theta00",
    "(KL_1 KL_2 KL_0 - KL_0) N_theta(0,0) = N_s1s2s0theta(0,0) + (v+v^-1) N_theta(0,0)",
    _fixed({}, top=7),
    lambda: (_y_left(N(0, 0)), N(0, 0, "s1s2s0") + N(0, 0) * _VV),
)


# the three wall families under Y = KL_2 KL_1 KL_0 - KL_0 and its phi-twin

def _f(k: int) -> int:
    return 3 * k + 1


def _Y(x: HeckeElem, variant: str) -> HeckeElem:
    if variant == "Y":
        return R(x, "210") - R(x, "0")
    return R(x, "201") - R(x, "1")


def _wall_cases(max_len):
    k = 2
    while _f(k + 1) + 1 <= max_len:
        for variant in ("Y", "Y'"):
            yield {"k": k, "variant": variant}
        k += 1


_register(
    "n_x_times_y",
    "N_x(f(k)) Y = N_x(f(k+1)) + N_x(f(k-1)) + N_theta(k-1,0)t + N_s1s2s0theta(k-2,0)t + "
    "N_s1theta'(k-2,0)t' + v N_theta(k-2,0)t, k >= 2, Y or Y'",
    _wall_cases,
    lambda k, variant: (
        _Y(Nw("x", _f(k)), variant),
        Nw("x", _f(k + 1)) + Nw("x", _f(k - 1)) + N(k - 1, 0, y="t") + N(k - 2, 0, "s1s2s0", "t")
        + N(k - 2, 0, "s0", "t", primed=True) + N(k - 2, 0, y="t").shift(1)),
)
_register(
    "n_u_times_y",
    "N_u(f(k)) Y = N_u(f(k+1)) + N_u(f(k-1)) + N_theta(k-2,1)t + (v+v^-1) N_theta(k-1,0)t + "
    "v^2 N_u(f(k-1)), k >= 2, Y or Y'",
    _wall_cases,
    lambda k, variant: (
        _Y(Nw("u", _f(k)), variant),
        Nw("u", _f(k + 1)) + Nw("u", _f(k - 1)) + N(k - 2, 1, y="t") + N(k - 1, 0, y="t") * _VV
        + Nw("u", _f(k - 1)).shift(2)),
)
_register(
    "n_e_times_y",
    "N_e(f(k)) Y = N_e(f(k+1)) + N_e(f(k-1)) + N_s0theta(k-1,0)t + N_s1theta'(k-1,0)t' + "
    "v N_s0theta(k-2,0)t + v N_s1theta'(k-2,0)t', k >= 2, Y or Y'",
    _wall_cases,
    lambda k, variant: (
        _Y(Nw("e", _f(k)), variant),
        Nw("e", _f(k + 1)) + Nw("e", _f(k - 1)) + N(k - 1, 0, "s0", "t")
        + N(k - 1, 0, "s0", "t", primed=True)
        + (N(k - 2, 0, "s0", "t") + N(k - 2, 0, "s0", "t", primed=True)).shift(1)),
)


# closed-form sums for theta(m,n)

_register(
    "theta_hat_decomposition",
    "Hhat(m,n) = N_theta(m,n) + v^2 Hhat(m-2,n) + v^2 Hhat(m,n-1) - v^4 Hhat(m-2,n-1), m,n >= 1",
    _mn(1, 1, theta_len),
    lambda m, n: (hat(m, n), N(m, n) + hat(m - 2, n).shift(2) + hat(m, n - 1).shift(2)
                  - hat(m - 2, n - 1).shift(4)),
)
_register(
    "theta_hat_decomposition_0n",
    "Hhat(0,n) = N_theta(0,n) + v^4 Hhat(0,n-2), n >= 1",
    _one(1, lambda n: theta_len(0, n), "n"),
    lambda n: (hat(0, n), N(0, n) + hat(0, n - 2).shift(4)),
)
_register(
    "theta_hat_decomposition_m0",
    "Hhat(m,0) = N_theta(m,0) + v^2 Hhat(m-2,0), m >= 1",
    _one(1, lambda m: theta_len(m, 0), "m"),
    lambda m: (hat(m, 0), N(m, 0) + hat(m - 2, 0).shift(2)),
)
_register(
    "theta_hat_grow_first",
    "Hhat(m,n) (KL_t KL_s2 KL_t - 2 KL_t) = Hhat(m+1,n) + Hhat(m-1,n+1) + Hhat(m+1,n-1) + Hhat(m-1,n), m,n >= 0",
    _mn(0, 0, lambda m, n: max(theta_len(m + 1, n), theta_len(m - 1, n + 1))),
    lambda m, n: (R(hat(m, n), _t(m) + "2" + _t(m)) - R(hat(m, n), _t(m)) * 2,
                  hat(m + 1, n) + hat(m - 1, n + 1) + hat(m + 1, n - 1) + hat(m - 1, n)),
)
_register(
    "theta_hat_grow_second",
    "Hhat(0,n) (KL_0 KL_2 KL_1 KL_2 - 2 KL_0 KL_2 + 1 - (v+v^-1)^2) = Hhat(0,n+1) + Hhat(2,n-1) + Hhat(0,n-1), n >= 0",
    _one(0, lambda n: theta_len(0, n + 1), "n"),
    lambda n: (R(hat(0, n), "0212") - R(hat(0, n), "02") * 2 + hat(0, n) * (1 - _VV * _VV),
               hat(0, n + 1) + hat(2, n - 1) + hat(0, n - 1)),
)
_register(
    "theta_hat_equals_kl",
    "Hhat(m,n) = KL_theta(m,n), m,n >= 0",
    _mn(0, 0, theta_len),
    lambda m, n: (hat(m, n), K(m, n)),
)


# right and left neighbours of theta in the big region

_register(
    "kl_theta_times_t", "KL_theta KL_t = KL_theta t",
    _mn(0, 0, lambda m, n: theta_len(m, n) + 1),
    lambda m, n: (R(K(m, n), _t(m)), K(m, n, y="t")),
)
_register(
    "kl_theta_t_times_s2", "KL_theta t KL_s2 = KL_theta t s2 + KL_theta",
    _mn(0, 0, lambda m, n: theta_len(m, n) + 2),
    lambda m, n: (R(K(m, n, y="t"), "2"), K(m, n, y="ts2") + K(m, n)),
)
_register(
    "kl_theta_ts2_times_tp", "KL_theta t s2 KL_t' = KL_theta t s2 t' + KL_theta t",
    _mn(0, 0, lambda m, n: theta_len(m, n) + 3),
    lambda m, n: (R(K(m, n, y="ts2"), _tp(m)), K(m, n, y="ts2t'") + K(m, n, y="t")),
)

_Y_EXTRA = {"1": 0, "t": 1, "ts2": 2, "ts2t'": 3}
for _y in _Y_EXTRA:
    _register(
        f"s0_times_kl_theta_{_y}", f"KL_s0 KL_theta y = KL_s0 theta y, y = {_y}",
        _mn(0, 0, lambda m, n, e=_Y_EXTRA[_y]: theta_len(m, n) + e + 1),
        lambda m, n, y=_y: (L("0", K(m, n, y=y)), K(m, n, "s0", y)),
    )
    _register(
        f"s2_times_kl_s0theta_{_y}", f"KL_s2 KL_s0 theta y = KL_s2s0 theta y + KL_theta y, y = {_y}",
        _mn(0, 0, lambda m, n, e=_Y_EXTRA[_y]: theta_len(m, n) + e + 2),
        lambda m, n, y=_y: (L("2", K(m, n, "s0", y)), K(m, n, "s2s0", y) + K(m, n, y=y)),
    )
    _register(
        f"s1_times_kl_s2s0theta_{_y}",
        f"KL_s1 KL_s2s0 theta y = KL_s1s2s0 theta y + KL_s0 theta y, y = {_y}",
        _mn(0, 0, lambda m, n, e=_Y_EXTRA[_y]: theta_len(m, n) + e + 3),
        lambda m, n, y=_y: (L("1", K(m, n, "s2s0", y)), K(m, n, "s1s2s0", y) + K(m, n, "s0", y)),
    )


def _factor_x(x: str, h: HeckeElem) -> HeckeElem:
    if x == "1":
        return h
    if x == "s0":
        return L("0", h)
    if x == "s2s0":
        return L("20", h) - h
    return L("120", h) - L("1", h) - L("0", h)


def _factor_y(h: HeckeElem, y: str, m: int) -> HeckeElem:
    t, tp = _t(m), _tp(m)
    if y == "1":
        return h
    if y == "t":
        return R(h, t)
    if y == "ts2":
        return R(h, t + "2") - h
    return R(h, t + "2" + tp) - R(h, t) - R(h, tp)


def _factor_cases(max_len):
    xs = {"1": 0, "s0": 1, "s2s0": 2, "s1s2s0": 3}
    for x, ex in xs.items():
        for y, ey in _Y_EXTRA.items():
            for p in _mn(0, 0, lambda m, n: theta_len(m, n) + ex + ey)(max_len):
                yield {**p, "x": x, "y": y}


_register(
    "factor_table",
    "X KL_theta(m,n) Y = KL_x theta(m,n) y for the prefix and suffix factors X, Y",
    _factor_cases,
    lambda m, n, x, y: (_factor_y(_factor_x(x, K(m, n)), y, m), K(m, n, x, y)),
)


# explicit descriptions along the boundary n = 0

_register(
    "kl_thetam0_t_explicit", "KL_theta(m,0)t = N_theta(m,0)t + v KL_theta(m-1,0)t, m >= 0",
    _one(0, lambda m: theta_len(m, 0) + 1, "m"),
    lambda m: (K(m, 0, y="t"), N(m, 0, y="t") + K(m - 1, 0, y="t").shift(1)),
)
_register(
    "kl_s0thetam0_explicit", "KL_s0theta(m,0) = N_s0theta(m,0) + v KL_s1theta'(m-1,0), m >= 0",
    _one(0, lambda m: theta_len(m, 0) + 1, "m"),
    lambda m: (K(m, 0, "s0"), N(m, 0, "s0") + K(m - 1, 0, "s0", primed=True).shift(1)),
)


def _s1s2s0_rhs(m):
    out = N(m, 0, "s1s2s0")
    out = out + hecke_sum((N(m - 2 * i, 0) + N(m - 1 - 2 * i, 0, "s0", primed=True)).shift(2 * i + 1)
                          for i in range(0, (m - 1) // 2 + 1))
    out = out + hecke_sum((N(m - 2 * i, 1).shift(-1) + N(m - 2 * i, 0, "s0")).shift(2 * i)
                          for i in range(1, m // 2 + 1))
    return out


_register(
    "kl_s1s2s0thetam0_explicit",
    "KL_s1s2s0theta(m,0) = N + v sum v^2i (N_theta(m-2i,0) + N_s1theta'(m-1-2i,0)) + "
    "sum v^2i (v^-1 N_theta(m-2i,1) + N_s0theta(m-2i,0)), m >= 0",
    _one(0, lambda m: theta_len(m, 0) + 3, "m"),
    lambda m: (K(m, 0, "s1s2s0"), _s1s2s0_rhs(m)),
)


def _s1s2s0t_rhs(m, s1s0_exp):
    out = hecke_sum([
        N(m, 0, "s1s2s0", "t"), N(m - 1, 0, "s1s2s0", "t").shift(1),
        n_elem(from_word("10")).shift(s1s0_exp),
    ])
    out = out + hecke_sum(N(m - i, 0, y="t").shift(i + 1) for i in range(0, m + 1))
    out = out + hecke_sum(N(m - i, 0, "s0", "t", primed=True).shift(i) for i in range(1, m + 1))
    out = out + hecke_sum(N(m - i, 1, y="t").shift(i - 1) + N(m - i, 0, "s0", "t").shift(i)
                          for i in range(2, m + 1))
    return out


# the exponent of the N_s1s0 term is printed with an index that is not bound in
# the statement; m + 2 is the reading that makes the identity hold
S1S0_EXPONENT_OFFSET = 2

_register(
    "kl_s1s2s0thetam0_t_explicit",
    "KL_s1s2s0theta(m,0)t = N + v N_s1s2s0theta(m-1,0)t + v^(m+2) N_s1s0 + sum v^(i+1) N_theta(m-i,0)t + "
    "sum v^i N_s1theta'(m-i,0)t' + sum (v^(i-1) N_theta(m-i,1)t + v^i N_s0theta(m-i,0)t), m >= 1",
    _one(1, lambda m: theta_len(m, 0) + 4, "m"),
    lambda m: (K(m, 0, "s1s2s0", "t"), _s1s2s0t_rhs(m, m + S1S0_EXPONENT_OFFSET)),
)
_register(
    "kl_s1s2s0thetam0_t_recursive",
    "KL_s1s2s0theta(m+1,0)t = N + v KL_s1s2s0theta(m,0)t - v^2 N_s1s2s0theta(m-1,0)t + v N_theta(m+1,0)t + "
    "v N_s1theta'(m,0)t' + v N_theta(m-1,1)t + v^2 N_s0theta(m-1,0)t, m >= 1",
    _one(1, lambda m: theta_len(m + 1, 0) + 4, "m"),
    lambda m: (K(m + 1, 0, "s1s2s0", "t"),
               hecke_sum([N(m + 1, 0, "s1s2s0", "t"), K(m, 0, "s1s2s0", "t").shift(1),
                          -N(m - 1, 0, "s1s2s0", "t").shift(2), N(m + 1, 0, y="t").shift(1),
                          N(m, 0, "s0", "t", primed=True).shift(1), N(m - 1, 1, y="t").shift(1),
                          N(m - 1, 0, "s0", "t").shift(2)])),
)
_register(
    "kl_s0thetam0_t_explicit",
    "KL_s0theta(m+1,0)t = N_s0theta(m+1,0)t + v N_s1theta'(m,0)t' + v KL_s0theta(m,0)t, m >= 0",
    _one(0, lambda m: theta_len(m + 1, 0) + 2, "m"),
    lambda m: (K(m + 1, 0, "s0", "t"),
               N(m + 1, 0, "s0", "t") + N(m, 0, "s0", "t", primed=True).shift(1)
               + K(m, 0, "s0", "t").shift(1)),
)
_register(
    "kl_s1thetapm0_tp_explicit",
    "KL_s1theta'(m+1,0)t' = N_s1theta'(m+1,0)t' + v N_s0theta(m,0)t + v KL_s1theta'(m,0)t', m >= 0",
    _one(0, lambda m: theta_len(m + 1, 0) + 2, "m"),
    lambda m: (K(m + 1, 0, "s0", "t", primed=True),
               N(m + 1, 0, "s0", "t", primed=True) + N(m, 0, "s0", "t").shift(1)
               + K(m, 0, "s0", "t", primed=True).shift(1)),
)


# thick walls

def _x_hat(k: int) -> HeckeElem:
    # the closed sum starts at k = 2; below that the KL element itself stands in
    if k < 2:
        return Kw("x", _f(k))
    return kl_thick_north(k, "x3k1")


_register(
    "x_hat_times_y",
    "Hhat_x(f(k)) Y = Hhat_x(f(k+1)) + Hhat_x(f(k-1)) + KL_s1theta'(k-2,0)t' + KL_theta(k-1,0)t + "
    "KL_theta(k-3,0)t + KL_s1s2s0theta(k-2,0)t, k >= 2",
    _one(2, lambda k: _f(k + 1), "k"),
    lambda k: (_Y(_x_hat(k), "Y"),
               _x_hat(k + 1) + _x_hat(k - 1) + K(k - 2, 0, "s0", "t", primed=True) + K(k - 1, 0, y="t")
               + K(k - 3, 0, y="t") + K(k - 2, 0, "s1s2s0", "t")),
)
_register(
    "x_hat_equals_kl", "Hhat_x(f(k)) = KL_x(f(k)), k >= 2",
    _one(2, _f, "k"),
    lambda k: (_x_hat(k), Kw("x", _f(k))),
)
_register(
    "kl_x3k1_times_s2", "KL_x(3k+1) KL_s2 = KL_x(3k+2), k >= 2",
    _one(2, lambda k: 3 * k + 2, "k"),
    lambda k: (R(Kw("x", 3 * k + 1), "2"), Kw("x", 3 * k + 2)),
)


def _north_big_terms(k):
    return K(k - 1, 0) + K(k - 2, 0, "s0", primed=True) + K(k - 3, 0)


def _north_s0(k):
    lhs = R(Kw("x", 3 * k + 2), "0")
    if k % 2 == 0:
        return lhs, Kw("xbar", 3 * k + 3) + Kw("x", 3 * k + 1) + _north_big_terms(k)
    return lhs, Kw("x", 3 * k + 3) + Kw("x", 3 * k + 1) + K(k - 2, 0, "s1s2s0")


def _north_s1(k):
    lhs = R(Kw("x", 3 * k + 2), "1")
    if k % 2 == 0:
        return lhs, Kw("x", 3 * k + 3) + Kw("x", 3 * k + 1) + K(k - 2, 0, "s1s2s0")
    return lhs, Kw("xbar", 3 * k + 3) + Kw("x", 3 * k + 1) + _north_big_terms(k)


_register(
    "kl_x3k2_times_s0",
    "KL_x(3k+2) KL_s0 = KL_xbar(3k+3) + KL_x(3k+1) + KL_theta(k-1,0) + KL_s1theta'(k-2,0) + KL_theta(k-3,0) "
    "(k even), KL_x(3k+3) + KL_x(3k+1) + KL_s1s2s0theta(k-2,0) (k odd), k >= 2",
    _one(2, lambda k: 3 * k + 3, "k"),
    _north_s0,
)
_register(
    "kl_x3k2_times_s1",
    "KL_x(3k+2) KL_s1, the two parity cases of the s0 identity swapped, k >= 2",
    _one(2, lambda k: 3 * k + 3, "k"),
    _north_s1,
)


def _e_hat(n: int) -> HeckeElem:
    if n == 1:
        return Nw("e", 1)
    return kl_thick_east_west("e", n)


_register(
    "e_hat_times_s2ttp",
    "Hhat_e(f(k)) KL_s2 KL_t KL_t' = Hhat_e(f(k+1)) + (v+v^-1) Hhat_e(f(k)) + Hhat_e(f(k-1)) + "
    "KL_s0theta(k-1,0)t' + KL_s1theta'(k-1,0)t, k >= 1",
    _one(1, lambda k: _f(k + 1) + 1, "k"),
    lambda k: (R(_e_hat(_f(k)), "2" + _t(k) + _tp(k)),
               _e_hat(_f(k + 1)) + _e_hat(_f(k)) * _VV + _e_hat(_f(k - 1))
               + K(k - 1, 0, "s0", "t") + K(k - 1, 0, "s0", "t", primed=True)),
)
_register(
    "e_hat_equals_kl", "Hhat_e(n) = KL_e(n), n >= 4",
    _one(4, lambda n: n + 1, "n"),
    lambda n: (_e_hat(n), Kw("e", n)),
)
_register(
    "kl_e3k2_times_t", "KL_e(3k+3) = KL_e(3k+2) KL_t - KL_e(3k+1) - KL_s0theta(k-1,0), k >= 1",
    _one(1, lambda k: 3 * k + 4, "k"),
    lambda k: (Kw("e", 3 * k + 3), R(Kw("e", 3 * k + 2), _t(k)) - Kw("e", 3 * k + 1) - K(k - 1, 0, "s0")),
)
_register(
    "kl_w_equals_s2_e", "KL_w(n) = KL_s2 KL_e(n), n >= 1",
    _one(1, lambda n: n + 2, "n"),
    lambda n: (Kw("w", n), L("2", Kw("e", n))),
)


# the worked h-polynomial example

def _h_cases(max_len):
    for n in range(2, max_len):
        for m in range(n + 1, max_len, 2):
            if n % 2 == 0 and m % 2 == 1 and 3 * m <= max_len:
                yield {"n": n, "m": m}


def _poly_elem(p: LaurentPoly) -> HeckeElem:
    # wrap a polynomial as a coefficient of the identity so it fits `compare`
    return HeckeElem({from_word(""): p})


def _xb(n):
    return thick_element("xbar", n)


def _x(n):
    return thick_element("x", n)


def _b(j):
    return big_element(j, 0, "s1s2s0") if j >= 0 else None


def _h(x, w) -> LaurentPoly:
    if x is None or w is None:
        return LaurentPoly()
    return h_poly(x, w)


def _F(l):
    return f_poly(l)


INTRO_STEPS = {
    "intro_descent_step_s1": lambda n, m: (
        _h(_xb(3 * n), _x(3 * m - 1)).shift(-1) + _h(_x(3 * n - 1), _x(3 * m - 1)),
        _h(_xb(3 * n), _x(3 * m)) + _h(_xb(3 * n), _x(3 * m - 2)) + _h(_xb(3 * n), _b(m - 3))),
    "intro_descent_step_s2_xbar": lambda n, m: (
        _h(_xb(3 * n), _x(3 * m - 1)),
        _h(_xb(3 * n), _x(3 * m - 2)).shift(1) + _h(_b(n - 2), _x(3 * m - 2))),
    "intro_descent_step_s2_x": lambda n, m: (
        _h(_x(3 * n - 1), _x(3 * m - 1)),
        _h(_x(3 * n - 1), _x(3 * m - 2)).shift(-1) + _h(_x(3 * n - 2), _x(3 * m - 2))),
    "intro_h_xbar_x3m2": lambda n, m: (
        _h(_xb(3 * n), _x(3 * m - 2)), (_F(m - n) + _F(m - n - 2)).shift(m - n)),
    "intro_h_s1s2s0theta_x3m2": lambda n, m: (
        _h(_b(n - 2), _x(3 * m - 2)), (_F(m - n - 1) + _F(m - n - 3)).shift(m - n + 1)),
    "intro_h_x3n1_x3m2": lambda n, m: (
        _h(_x(3 * n - 1), _x(3 * m - 2)), (_F(m - n) + _F(m - n - 2)).shift(m - n + 1)),
    "intro_h_x3n2_x3m2": lambda n, m: (
        _h(_x(3 * n - 2), _x(3 * m - 2)), (_F(m - n + 1) + _F(m - n - 1)).shift(m - n)),
    "intro_h_xbar_s1s2s0theta": lambda n, m: (
        _h(_xb(3 * n), _b(m - 3)), (_F(m - n) + _F(m - n - 2)).shift(m - n)),
    "intro_h_xbar_x3m": lambda n, m: (
        _h(_xb(3 * n), _x(3 * m)), (_F(m - n + 1) + _F(m - n - 1) * 2 + _F(m - n - 3)).shift(m - n)),
}

for _name, _fn in INTRO_STEPS.items():
    _register(
        _name, "h-polynomial step of the xbar_3n, x_3m example, n even >= 2, m odd > n",
        _h_cases,
        lambda n, m, fn=_fn: tuple(_poly_elem(p) for p in fn(n, m)),
    )


def check_all(max_len: int, names=None) -> list[dict]:
    names = list(CATALOG) if names is None else names
    out = []
    for name in names:
        out.extend(CATALOG[name].check(max_len))
    return out


# suites of names, grouped the way the command line exposes them
MULT_LEMMAS = [n for n in CATALOG if n.startswith(("n_", "s0_times_n", "s1s2s0_minus"))]
EXPLICIT = [n for n in CATALOG if n.endswith(("_explicit", "_recursive"))]
THETA_HAT = [n for n in CATALOG if n.startswith("theta_hat")]
BIG_NEIGHBOURS = [n for n in CATALOG if n.startswith(("kl_theta_", "s0_times_kl", "s2_times_kl", "s1_times_kl"))] + ["factor_table"]
THICK = ["x_hat_times_y", "x_hat_equals_kl", "kl_x3k1_times_s2", "kl_x3k2_times_s0", "kl_x3k2_times_s1",
         "e_hat_times_s2ttp", "e_hat_equals_kl", "kl_e3k2_times_t", "kl_w_equals_s2_e"]
INTRO = list(INTRO_STEPS)
