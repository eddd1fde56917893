"""Hecke algebra of the affine Weyl group, Kazhdan-Lusztig basis and tools.

Normalization: ``H_s^2 = (v^-1 - v) H_s + 1`` and ``KL_s = H_s + v``.  An
element of the algebra is a finite sum ``sum_w G_w(X) H_w`` held in a dict
from :class:`~b2kl.coxeter.Element` to :class:`~b2kl.laurent.LaurentPoly`.

>>> from b2kl.coxeter import from_word
>>> s1 = from_word("1")
>>> kl = kl_basis(s1)
>>> str(kl[s1]), str(kl[from_word("")])
('1', 'v')
>>> bar(kl) == kl
True
>>> content(n_elem(from_word("1212")))
8
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .coxeter import (
    GEN, IDENTITY, Element, canonical_word, coatoms, descents,
    from_word, length, lower_interval, phi,
)
from .laurent import ONE, V, V_INV, ZERO, LaurentPoly

_V_MINUS_VINV = V - V_INV
_VINV_MINUS_V = V_INV - V


def _acc(d: dict, w: Element, p: LaurentPoly) -> None:
    q = d.get(w)
    if q is None:
        if p:
            d[w] = p
        return
    q = q + p
    if q:
        d[w] = q
    else:
        del d[w]


def _sort_key(w: Element):
    word = canonical_word(w)
    return (len(word), word)


class HeckeElem:
    """Immutable finite linear combination of standard basis elements ``H_w``."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Element, LaurentPoly | int] | None = None):
        self._t: dict[Element, LaurentPoly] = {}
        if terms:
            for w, p in terms.items():
                if isinstance(p, int):
                    p = LaurentPoly(p)
                _acc(self._t, w, p)

    @classmethod
    def _wrap(cls, d: dict) -> HeckeElem:
        x = object.__new__(cls)
        x._t = d
        return x

    @classmethod
    def standard(cls, w: Element) -> HeckeElem:
        return cls._wrap({w: ONE})

    @classmethod
    def zero(cls) -> HeckeElem:
        return cls._wrap({})

    @classmethod
    def one(cls) -> HeckeElem:
        return cls.standard(IDENTITY)

    # -- inspection --

    def __getitem__(self, w: Element) -> LaurentPoly:
        return self._t.get(w, ZERO)

    coeff = __getitem__

    def support(self) -> frozenset[Element]:
        return frozenset(self._t)

    def items(self):
        return self._t.items()

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElem):
            return self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    # -- arithmetic --

    def __add__(self, other: HeckeElem) -> HeckeElem:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        d = dict(self._t)
        for w, p in other._t.items():
            _acc(d, w, p)
        return HeckeElem._wrap(d)

    def __neg__(self) -> HeckeElem:
        return HeckeElem._wrap({w: -p for w, p in self._t.items()})

    def __sub__(self, other: HeckeElem) -> HeckeElem:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        d = dict(self._t)
        for w, p in other._t.items():
            _acc(d, w, -p)
        return HeckeElem._wrap(d)

    def __mul__(self, c: LaurentPoly | int) -> HeckeElem:
        if isinstance(c, int):
            c = LaurentPoly(c)
        if not isinstance(c, LaurentPoly):
            return NotImplemented
        if not c:
            return HeckeElem.zero()
        return HeckeElem._wrap({w: p * c for w, p in self._t.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> HeckeElem:
        """Multiply every coefficient by ``v**k``."""
        return HeckeElem._wrap({w: p.shift(k) for w, p in self._t.items()})

    def map_elements(self, f: Callable[[Element], Element]) -> HeckeElem:
        """Apply a group automorphism to the basis labels."""
        return HeckeElem._wrap({f(w): p for w, p in self._t.items()})

    # -- text / json --

    def sorted_items(self) -> list[tuple[Element, LaurentPoly]]:
        return sorted(self._t.items(), key=lambda kv: _sort_key(kv[0]))

    def to_json(self) -> dict:
        return {"terms": [{"word": canonical_word(w), "poly": p.to_json()}
                          for w, p in self.sorted_items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> HeckeElem:
        return cls({from_word(t["word"]): LaurentPoly.from_json(t["poly"]) for t in data["terms"]})

    def __repr__(self) -> str:
        if not self._t:
            return "HeckeElem(0)"
        parts = [f"({p})*H[{canonical_word(w) or 'e'}]" for w, p in self.sorted_items()]
        return "HeckeElem(" + " + ".join(parts) + ")"


def hecke_sum(elems: Iterable[HeckeElem]) -> HeckeElem:
    d: dict = {}
    for x in elems:
        for w, p in x._t.items():
            _acc(d, w, p)
    return HeckeElem._wrap(d)


def _check_side(side: str) -> None:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def mul_gen(x: HeckeElem, s: int, side: str = "right") -> HeckeElem:
    """Multiply by the standard generator ``H_s`` on the given side."""
    _check_side(side)
    g = GEN[s]
    d: dict = {}
    for w, p in x._t.items():
        ws = w * g if side == "right" else g * w
        _acc(d, ws, p)
        if length(ws) < length(w):
            _acc(d, w, p * _VINV_MINUS_V)
    return HeckeElem._wrap(d)


def mul_kl_gen(x: HeckeElem, s: int, side: str = "right") -> HeckeElem:
    """Multiply by ``KL_s = H_s + v`` on the given side."""
    _check_side(side)
    g = GEN[s]
    d: dict = {}
    for w, p in x._t.items():
        ws = w * g if side == "right" else g * w
        _acc(d, ws, p)
        _acc(d, w, p.shift(-1 if length(ws) < length(w) else 1))
    return HeckeElem._wrap(d)


def mul_kl_word(x: HeckeElem, word: str, side: str = "right") -> HeckeElem:
    """Multiply by ``KL_{s_1} ... KL_{s_k}`` for the letters of ``word``.

    On the right the letters are applied left to right, on the left right to left,
    so ``mul_kl_word(X, "02", "left")`` is ``KL_0 KL_2 X``.
    """
    letters = word if side == "right" else reversed(word)
    for ch in letters:
        x = mul_kl_gen(x, int(ch), side)
    return x


@lru_cache(maxsize=None)
def _bar_standard(w: Element) -> HeckeElem:
    if w == IDENTITY:
        return HeckeElem.one()
    s = min(descents(w, "right"))
    prev = _bar_standard(w * GEN[s])
    # bar(H_s) = H_s + (v - v^-1)
    return mul_gen(prev, s, "right") + prev * _V_MINUS_VINV


def bar_standard(w: Element) -> HeckeElem:
    """The image of ``H_w`` under the bar involution."""
    return _bar_standard(w)


def bar(x: HeckeElem) -> HeckeElem:
    # accumulate on plain integer dicts; this is the hot loop of duality checks
    acc: dict[Element, dict[int, int]] = {}
    for w, p in x._t.items():
        pb = [(-e, c) for e, c in p._c.items()]
        for y, q in _bar_standard(w)._t.items():
            dy = acc.get(y)
            if dy is None:
                dy = acc[y] = {}
            for e1, c1 in q._c.items():
                for e2, c2 in pb:
                    e = e1 + e2
                    dy[e] = dy.get(e, 0) + c1 * c2
    out = {}
    for y, dy in acc.items():
        dy = {e: c for e, c in dy.items() if c}
        if dy:
            out[y] = LaurentPoly._wrap(dy)
    return HeckeElem._wrap(out)


@lru_cache(maxsize=None)
def n_elem(w: Element) -> HeckeElem:
    """``N_w = sum_{x <= w} v^(l(w) - l(x)) H_x``."""
    lw = length(w)
    return HeckeElem._wrap({x: LaurentPoly.monomial(lw - length(x)) for x in lower_interval(w)})


def truncated_n(x: Element, z: Element | None) -> HeckeElem:
    """``sum v^(l(x) - l(w)) H_w`` over ``w <= x`` with ``w`` not below ``z``.

    ``z=None`` stands for an element below which nothing lies, giving ``N_x``.
    """
    lx = length(x)
    below_z = lower_interval(z) if z is not None else frozenset()
    return HeckeElem._wrap({w: LaurentPoly.monomial(lx - length(w))
                            for w in lower_interval(x) if w not in below_z})


def g_coeff(x: HeckeElem, w: Element) -> LaurentPoly:
    return x[w]


def content(x: HeckeElem) -> int:
    """Sum over ``w`` of ``G_w(X)`` evaluated at ``v = 1``."""
    return sum(p.eval_at_one() for p in x._t.values())


def h_geq(x: HeckeElem, y: HeckeElem) -> bool:
    """Coefficientwise order: every ``G_w(X) - G_w(Y)`` has non-negative coefficients."""
    diff = x - y
    return all(p.is_nonneg() for _, p in diff.items())


def is_monotonic(x: HeckeElem, w: Element) -> bool:
    """Triangular of height ``w`` with coefficients in N[v, v^-1], and monotone.

    Monotone means ``G_y - v^(l(z) - l(y)) G_z >= 0`` for ``y <= z <= w``.  By
    transitivity it is enough to test covering pairs ``y < z``.
    """
    if x[w] != ONE:
        return False
    below = lower_interval(w)
    if not x.support() <= below:
        return False
    if not all(p.is_nonneg() for _, p in x.items()):
        return False
    for z in below:
        if z == IDENTITY:
            continue
        gz = x[z].shift(1)
        if not gz:
            continue
        for y in coatoms(z):
            if not (x[y] - gz).is_nonneg():
                return False
    return True


def first_difference(x: HeckeElem, y: HeckeElem) -> tuple[Element, LaurentPoly, LaurentPoly] | None:
    """Smallest (by length, then word) basis element where ``x`` and ``y`` differ."""
    diff = x - y
    if not diff:
        return None
    w = min(diff.support(), key=_sort_key)
    return (w, x[w], y[w])


def phi_elem(x: HeckeElem) -> HeckeElem:
    return x.map_elements(phi)


class KLTable:
    """Memo of Kazhdan-Lusztig basis elements, filled by the standard recursion.

    ``KL_w = KL_{ws} KL_s - sum mu(x, ws) KL_x`` over ``x < ws`` with ``xs < x``,
    pivoting on the smallest right descent ``s`` of ``w`` (or the largest when
    ``pivot="max"``, which is useful as a cross-check).
    """

    def __init__(self, pivot: str = "min"):
        if pivot not in ("min", "max"):
            raise ValueError("pivot must be 'min' or 'max'")
        self._pick = min if pivot == "min" else max
        self._basis: dict[Element, HeckeElem] = {IDENTITY: HeckeElem.one()}

    def __len__(self) -> int:
        return len(self._basis)

    def basis(self, w: Element) -> HeckeElem:
        got = self._basis.get(w)
        if got is not None:
            return got
        # fill along the chain of pivots from the bottom so the recursion stays shallow
        chain = []
        u = w
        while u not in self._basis:
            chain.append(u)
            u = u * GEN[self._pick(descents(u, "right"))]
        for u in reversed(chain):
            self._basis[u] = self._compute(u)
        return self._basis[w]

    def _compute(self, w: Element) -> HeckeElem:
        s = self._pick(descents(w, "right"))
        g = GEN[s]
        u = w * g
        ku = self._basis[u]
        out = mul_kl_gen(ku, s, "right")
        for x, p in ku.items():
            if x == u:
                continue
            m = p.coeff(1)
            if m and length(x * g) < length(x):
                out = out - self.basis(x) * m
        return out

    def h(self, x: Element, w: Element) -> LaurentPoly:
        return self.basis(w)[x]

    def mu(self, x: Element, w: Element) -> int:
        return self.basis(w)[x].coeff(1)


DEFAULT_TABLE = KLTable()


def kl_basis(w: Element, table: KLTable | None = None) -> HeckeElem:
    return (table or DEFAULT_TABLE).basis(w)


def h_poly(x: Element, w: Element, table: KLTable | None = None) -> LaurentPoly:
    return (table or DEFAULT_TABLE).h(x, w)


def mu(x: Element, w: Element, table: KLTable | None = None) -> int:
    return (table or DEFAULT_TABLE).mu(x, w)

