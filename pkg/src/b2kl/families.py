"""Named families of elements and the region partition of the group.

Building blocks, as words::

    a = 121    b = 020    c = 1202    d = 0212
    theta(2k, n)   = (ab)^k a 2 d^n
    theta(2k+1, n) = (ab)^(k+1) 2 c^n

``t_m`` is ``s0`` for even ``m`` and ``s1`` for odd ``m``; a prime denotes the
image under :func:`~b2kl.coxeter.phi` (swap ``s0`` and ``s1``).

Every non-identity element has exactly one :class:`FamilyTag`:

* big region: ``x theta(m,n) y`` with ``x`` in {1, s0, s2s0, s1s2s0} and
  ``y`` in {1, t, t s2, t s2 t'}, and the phi-images of these;
* thick walls: ``x_n`` and ``xbar_3k`` (north), their primes (south),
  ``e_n`` and ``e'_3k`` (east), ``w_n`` and ``w'_3k`` plus three short
  elements (west);
* thin walls: ``d_n`` (north-west), ``d'_n`` (south-west), ``dbar_n``
  (south-east), ``dbar'_n`` (north-east), ``n >= 3``.

>>> theta_word(1, 0)
'1210202'
>>> classify(from_word("120121"))
FamilyTag(region='ThickNorth', family='xbar', m=None, n=6, x='1', y='1', primed=False)
>>> interval_size(big_tag(0, 0))
8
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coxeter import (
    Element, coatoms, from_word, length, phi, phi_word,
)

X_SEQ = "121020"   # x_n is the prefix of length n of this repeated
D_SEQ = "2120"     # d_n likewise

X_PREFIXES = {"1": "", "s0": "0", "s2s0": "20", "s1s2s0": "120"}
Y_KINDS = ("1", "t", "ts2", "ts2t'")

REGIONS = (
    "Identity", "BigC", "BigPhiC",
    "ThickNorth", "ThickSouth", "ThickEast", "ThickWest",
    "ThinNW", "ThinSW", "ThinNE", "ThinSE",
)
BIG_REGIONS = ("BigC", "BigPhiC")
THICK_REGIONS = ("ThickNorth", "ThickSouth", "ThickEast", "ThickWest")
THIN_REGIONS = ("ThinNW", "ThinSW", "ThinNE", "ThinSE")


class NoFormula(ValueError):
    """No closed formula is available for this element."""


class FormulaOutOfRange(ValueError):
    """The parameters are outside the range where the formula is stated."""


# -- words --

def t_word(m: int) -> str:
    return "0" if m % 2 == 0 else "1"


def tp_word(m: int) -> str:
    return "1" if m % 2 == 0 else "0"


def y_word(kind: str, m: int) -> str:
    t, tp = t_word(m), tp_word(m)
    words = {"1": "", "t": t, "ts2": t + "2", "ts2t'": t + "2" + tp}
    if kind not in words:
        raise ValueError(f"unknown suffix {kind!r}")
    return words[kind]


def theta_word(m: int, n: int) -> str:
    if m < 0 or n < 0:
        raise ValueError(f"theta({m},{n}) needs m, n >= 0")
    k, r = divmod(m, 2)
    if r == 0:
        return "121020" * k + "121" + "2" + "0212" * n
    return "121020" * (k + 1) + "2" + "1202" * n


def big_word(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> str:
    if x not in X_PREFIXES:
        raise ValueError(f"unknown prefix {x!r}")
    word = X_PREFIXES[x] + theta_word(m, n) + y_word(y, m)
    return phi_word(word) if primed else word


def x_word(n: int) -> str:
    reps = n // len(X_SEQ) + 1
    return (X_SEQ * reps)[:n]


def d_word(n: int) -> str:
    reps = n // len(D_SEQ) + 1
    return (D_SEQ * reps)[:n]


def thick_word(family: str, n: int, primed: bool = False) -> str:
    """Word of ``x_n``, ``xbar_n``, ``e_n``, ``w_n`` or the helper ``u_n = s2 x_n``.

    ``w_0 = s2 s1`` and ``w_-1 = s2`` are accepted so that the three short
    elements of the west wall have indices too.
    """
    if family == "x":
        if n < 1:
            raise ValueError("x_n needs n >= 1")
        word = x_word(n)
    elif family == "xbar":
        if n < 3 or n % 3:
            raise ValueError("xbar_n needs n a positive multiple of 3")
        word = "120" + x_word(n - 3)
    elif family == "e":
        if n < 1:
            raise ValueError("e_n needs n >= 1")
        word = "1" + phi_word(x_word(n))
    elif family == "w":
        if n < -1:
            raise ValueError("w_n needs n >= -1")
        word = "2" if n == -1 else "21" + phi_word(x_word(n))
    elif family == "u":
        if n < 1:
            raise ValueError("u_n needs n >= 1")
        word = "2" + x_word(n)
    else:
        raise ValueError(f"unknown thick family {family!r}")
    return phi_word(word) if primed else word


def thin_word(family: str, n: int, primed: bool = False) -> str:
    if n < 3:
        raise ValueError("thin wall elements need n >= 3")
    if family == "d":
        word = d_word(n)
    elif family == "dbar":
        word = "0" + d_word(n)
    else:
        raise ValueError(f"unknown thin family {family!r}")
    return phi_word(word) if primed else word


def theta(m: int, n: int) -> Element:
    return from_word(theta_word(m, n))


def big_element(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> Element:
    return from_word(big_word(m, n, x, y, primed))


def thick_element(family: str, n: int, primed: bool = False) -> Element:
    return from_word(thick_word(family, n, primed))


def thin_element(family: str, n: int, primed: bool = False) -> Element:
    return from_word(thin_word(family, n, primed))


# -- tags --

@dataclass(frozen=True)
class FamilyTag:
    """Where an element sits in the region partition, with its parameters.

    Big region tags carry ``m``, ``n``, the prefix name ``x`` and suffix kind
    ``y``; wall tags carry their index in ``n``.  ``primed`` marks phi-images.
    """

    region: str
    family: str
    m: int | None = None
    n: int | None = None
    x: str = "1"
    y: str = "1"
    primed: bool = False

    def word(self) -> str:
        if self.region == "Identity":
            return ""
        if self.family == "theta":
            return big_word(self.m, self.n, self.x, self.y, self.primed)
        if self.family in ("x", "xbar", "e", "w"):
            return thick_word(self.family, self.n, self.primed)
        return thin_word(self.family, self.n, self.primed)

    def element(self) -> Element:
        return from_word(self.word())

    def to_json(self) -> dict:
        return {"region": self.region, "family": self.family, "m": self.m, "n": self.n,
                "x": self.x, "y": self.y, "primed": self.primed}

    @classmethod
    def from_json(cls, data: dict) -> FamilyTag:
        return cls(data["region"], data["family"], data.get("m"), data.get("n"),
                   data.get("x", "1"), data.get("y", "1"), bool(data.get("primed", False)))

    def label(self) -> str:
        p = "'" if self.primed else ""
        if self.region == "Identity":
            return "e"
        if self.family == "theta":
            xs = "" if self.x == "1" else self.x + "*"
            ys = "" if self.y == "1" else "*" + self.y
            return f"{xs}theta{p}({self.m},{self.n}){ys}"
        return f"{self.family}{p}_{self.n}"


IDENTITY_TAG = FamilyTag("Identity", "identity")


def big_tag(m: int, n: int, x: str = "1", y: str = "1", primed: bool = False) -> FamilyTag:
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    if x not in X_PREFIXES or y not in Y_KINDS:
        raise ValueError(f"bad prefix/suffix {x!r}/{y!r}")
    return FamilyTag("BigPhiC" if primed else "BigC", "theta", m, n, x, y, primed)


def thick_tag(family: str, n: int, primed: bool = False) -> FamilyTag:
    thick_word(family, n, primed)  # validates
    if family in ("x", "xbar"):
        region = "ThickSouth" if primed else "ThickNorth"
    elif family == "e":
        if primed and n % 3:
            raise ValueError("only e'_3k belongs to the east wall")
        region = "ThickEast"
    elif family == "w":
        if primed and n % 3:
            raise ValueError("only w'_3k belongs to the west wall")
        if primed and n == -1:
            raise ValueError("w_-1 = s2 has no primed twin")
        region = "ThickWest"
    else:
        raise ValueError(f"{family!r} is not a wall family")
    return FamilyTag(region, family, None, n, primed=primed)


def thin_tag(family: str, n: int, primed: bool = False) -> FamilyTag:
    thin_word(family, n, primed)
    if family == "d":
        region = "ThinSW" if primed else "ThinNW"
    else:
        region = "ThinNE" if primed else "ThinSE"
    return FamilyTag(region, family, None, n, primed=primed)


def tags_of_length(L: int) -> list[FamilyTag]:
    """Every tag whose element has length ``L``, read off from the word lengths."""
    if L < 0:
        return []
    if L == 0:
        return [IDENTITY_TAG]
    out: list[FamilyTag] = []
    for x, xw in X_PREFIXES.items():
        for y in Y_KINDS:
            rest = L - len(xw) - len(y_word(y, 0)) - 4
            if rest < 0:
                continue
            for n in range(rest // 4 + 1):
                q, r = divmod(rest - 4 * n, 3)
                if r == 0:
                    for primed in (False, True):
                        out.append(big_tag(q, n, x, y, primed))
    for primed in (False, True):
        out.append(thick_tag("x", L, primed))
        if L % 3 == 0:
            out.append(thick_tag("xbar", L, primed))
    if L >= 2:
        out.append(thick_tag("e", L - 1))
        if (L - 1) % 3 == 0:
            out.append(thick_tag("e", L - 1, True))
    if L >= 3:
        out.append(thick_tag("w", L - 2))
        if (L - 2) % 3 == 0:
            out.append(thick_tag("w", L - 2, True))
    if L == 1:
        out.append(thick_tag("w", -1))
    if L == 2:
        out.append(thick_tag("w", 0))
        out.append(thick_tag("w", 0, True))
    if L >= 3:
        out.append(thin_tag("d", L))
        out.append(thin_tag("d", L, True))
    if L >= 4:
        out.append(thin_tag("dbar", L - 1))
        out.append(thin_tag("dbar", L - 1, True))
    return out


@lru_cache(maxsize=None)
def _index(L: int) -> tuple[dict, tuple]:
    idx: dict[Element, FamilyTag] = {}
    clashes = []
    for tag in tags_of_length(L):
        w = tag.element()
        if length(w) != L:
            clashes.append((tag, None))
            continue
        if w in idx:
            clashes.append((tag, idx[w]))
            continue
        idx[w] = tag
    return idx, tuple(clashes)


def tag_problems(L: int) -> tuple:
    """Tags of length ``L`` whose word is not reduced or whose element repeats."""
    return _index(L)[1]


def tagged_elements(L: int) -> dict[Element, FamilyTag]:
    """Every element of length ``L`` with its tag."""
    return dict(_index(L)[0])


def classify(w: Element) -> FamilyTag | None:
    """The tag of ``w``, or ``None`` when no family produces it."""
    return _index(length(w))[0].get(w)


def region(w: Element) -> str | None:
    tag = classify(w)
    return tag.region if tag else None


# -- interval sizes --

_BIG_SIZES = {
    # (x, y): (coefficient of m, coefficient of n, constant inside 8(...), extra)
    ("1", "1"): (2, 2, 1, 0),
    ("1", "t"): (3, 4, 2, 0),
    ("1", "ts2"): (4, 5, 3, 0),
    ("1", "ts2t'"): (5, 6, 4, 0),
    ("s0", "1"): (3, 4, 2, 0),
    ("s2s0", "1"): (4, 6, 2, 0),
    ("s1s2s0", "1"): (5, 8, 2, 0),
    ("s0", "t"): (4, 6, 3, 4),
    ("s2s0", "t"): (5, 8, 5, 0),
    ("s1s2s0", "t"): (6, 10, 6, 4),
    ("s0", "ts2"): (5, 8, 4, 0),
    ("s2s0", "ts2"): (6, 9, 5, 6),
    ("s1s2s0", "ts2"): (7, 10, 7, 4),
    ("s0", "ts2t'"): (6, 8, 6, 4),
    ("s2s0", "ts2t'"): (7, 9, 8, 4),
    ("s1s2s0", "ts2t'"): (8, 10, 10, 4),
}


# Seven of the printed formulas above are off by a multiple of 8n (they agree
# with enumeration for exactly one n).  These n-coefficients fit every element
# up to length 24 and are used only when ``corrected=True``.
_BIG_SIZES_CORRECTED = {
    ("s2s0", "1"): (4, 5, 3, 0),
    ("s1s2s0", "1"): (5, 6, 4, 0),
    ("s2s0", "t"): (5, 7, 5, 0),
    ("s1s2s0", "t"): (6, 8, 6, 4),
    ("s0", "ts2"): (5, 7, 5, 0),
    ("s2s0", "ts2"): (6, 8, 6, 6),
    ("s1s2s0", "ts2"): (7, 9, 8, 4),
}


def big_interval_size(m: int, n: int, x: str = "1", y: str = "1", corrected: bool = False) -> int:
    """Closed formula ``8(m^2 + a m + 4mn + 2n^2 + b n + c) + e`` for ``|[e, x theta(m,n) y]|``."""
    table = _BIG_SIZES_CORRECTED if corrected and (x, y) in _BIG_SIZES_CORRECTED else _BIG_SIZES
    a, b, c, e = table[(x, y)]
    return 8 * (m * m + a * m + 4 * m * n + 2 * n * n + b * n + c) + e


def thick_interval_size(family: str, n: int) -> int:
    k, r = divmod(n, 3)
    if family == "x":
        if k < 1:
            raise NoFormula(f"no size formula for x_{n}")
        return (8 * k * k - 2 * k, 8 * k * k + 4 * k, 8 * k * k + 12 * k)[r]
    if family == "e":
        if r == 0:
            if k < 1:
                raise NoFormula(f"no size formula for e_{n}")
            return 8 * k * k + 4 * k
        if r == 1:
            return 8 * k * k + 8 * k + 4
        return 8 * (k + 1) ** 2
    raise NoFormula(f"no size formula for family {family!r}")


def interval_size(tag: FamilyTag, corrected: bool = False) -> int:
    """Closed-form ``|{x : x <= w}|`` for tagged elements that have one.

    Primed tags share the size of their unprimed twin.  By default the
    formulas are the published ones; ``corrected=True`` swaps in the fitted
    n-coefficients for the seven that disagree with enumeration.
    """
    if tag.family == "theta":
        return big_interval_size(tag.m, tag.n, tag.x, tag.y, corrected)
    if tag.family in ("x", "e"):
        return thick_interval_size(tag.family, tag.n)
    raise NoFormula(f"no size formula for {tag.label()}")


# -- coatoms --

def _el(word: str) -> Element:
    return from_word(word)


def _delete(word: str, positions) -> frozenset[Element]:
    # positions are 1-based
    return frozenset(from_word(word[:i - 1] + word[i:]) for i in positions)


def _big(m, n, x="1", y="1", primed=False) -> Element:
    return big_element(m, n, x, y, primed)


def x_coatoms_by_deletion(n: int) -> frozenset[Element]:
    """Coatoms of ``x_n`` as single-letter deletions from its preferred word."""
    k, r = divmod(n, 3)
    if k < 2:
        raise FormulaOutOfRange("needs n >= 6")
    pos = ((1, 3, 3 * k - 2, 3 * k), (1, 3, 3 * k, 3 * k + 1),
           (1, 3, 3 * k, 3 * k + 1, 3 * k + 2))[r]
    return _delete(x_word(n), pos)


def d_coatoms_by_deletion(n: int) -> frozenset[Element]:
    if n < 7:
        raise FormulaOutOfRange("needs n >= 7")
    pos = (1, 3, n - 3, n - 1, n) if n % 2 == 0 else (1, 3, n - 2, n)
    return _delete(d_word(n), pos)


def _x_coatoms_named(n: int, corrected: bool = False) -> frozenset[Element]:
    k, r = divmod(n, 3)
    if k < 2:
        raise FormulaOutOfRange("needs n >= 6")
    w = lambda i: thick_element("w", i)
    if r == 0:
        return frozenset({w(3 * k - 3), _big(k - 2, 0, "s0", primed=True),
                          _big(k - 2, 0, y="t"), thick_element("x", 3 * k - 1)})
    if r == 1:
        return frozenset({w(3 * k - 2), _big(k - 2, 0, "s0", "t", primed=True),
                          thick_element("xbar", 3 * k), thick_element("x", 3 * k)})
    if corrected:
        # s1 theta'(k-2,0) t'_{k-2} s2, the phi-image of s0 theta(k-2,0) t_{k-2} s2
        second = _big(k - 2, 0, "s0", "ts2", primed=True)
    else:
        # as published: s1 theta(k-2,0) t'_{k-2} s2, which is not even reduced
        second = from_word("1" + theta_word(k - 2, 0) + tp_word(k - 2) + "2")
    return frozenset({w(3 * k - 1), second,
                      _big(k - 2, 0, "s1s2s0"), _big(k - 1, 0),
                      thick_element("x", 3 * k + 1)})


def _xbar_coatoms_named(n: int, corrected: bool = False) -> frozenset[Element]:
    k = n // 3
    if k < 3:
        raise FormulaOutOfRange("needs n >= 9")
    # published with w_{3k-3}; the coatom is actually its phi-image
    return frozenset({thick_element("w", 3 * k - 3, primed=corrected),
                      _big(k - 3, 0, "s0", "ts2t'", primed=True),
                      _big(k - 3, 0, "s1s2s0", "t"),
                      thick_element("x", 3 * k - 1)})


def _e_coatoms_named(n: int) -> frozenset[Element]:
    k, r = divmod(n, 3)
    if k < 2:
        raise FormulaOutOfRange("needs n >= 6")
    x = lambda i, p=False: thick_element("x", i, p)
    if r == 0:
        return frozenset({x(3 * k, True), thick_element("xbar", 3 * k),
                          _big(k - 2, 0, "s0", "t", primed=True),
                          thick_element("e", 3 * k - 1)})
    if r == 1:
        return frozenset({x(3 * k + 1, True), x(3 * k + 1),
                          thick_element("e", 3 * k, True), thick_element("e", 3 * k)})
    return frozenset({x(3 * k + 2, True), x(3 * k + 2), _big(k - 1, 0, "s0"),
                      _big(k - 1, 0, "s0", primed=True), thick_element("e", 3 * k + 1)})


def _theta_coatoms_named(m: int, n: int, y: str) -> frozenset[Element]:
    if m < 1 or n < 1:
        raise FormulaOutOfRange("needs m, n > 0")
    if y == "1":
        return frozenset({_big(m - 1, n, "s2s0", primed=True), _big(m - 1, n, y="ts2"),
                          _big(m, n - 1, "s1s2s0"), _big(m, n - 1, y="ts2t'")})
    if y == "t":
        return frozenset({_big(m - 1, n, "s2s0", "t", primed=True),
                          _big(m - 1, n, y="ts2t'"), _big(m, n - 1, "s1s2s0", "t"),
                          _big(m + 1, n - 1, y="t"), _big(m, n)})
    if y == "ts2":
        return frozenset({_big(m - 1, n, "s2s0", "ts2", primed=True), _big(m - 1, n + 1),
                          _big(m, n - 1, "s1s2s0", "ts2"), _big(m + 1, n - 1, y="ts2"),
                          _big(m, n, y="t")})
    return frozenset({_big(m - 1, n, "s2s0", "ts2t'", primed=True),
                      _big(m - 1, n + 1, y="t"), _big(m, n - 1, "s1s2s0", "ts2t'"),
                      _big(m + 2, n - 1), _big(m, n, y="ts2")})


def _big_coatoms(m: int, n: int, x: str, y: str) -> frozenset[Element]:
    if x == "1":
        return _theta_coatoms_named(m, n, y)
    if y == "1":
        raise FormulaOutOfRange("prefix rule is stated for y in {t, ts2, ts2t'}")
    inner_tag = big_tag(m, n, "1", y)
    try:
        inner = _theta_coatoms_named(m, n, y)
    except FormulaOutOfRange:
        # the bare theta(m,n)y list is only written out for m, n > 0; the
        # prefix rule itself holds for all m, n, so use the enumerated set
        inner = coatoms(inner_tag.element())
    core = inner_tag.element()
    if x == "s0":
        pre, extra = "0", core
    elif x == "s2s0":
        pre, extra = "20", _big(m, n, "s0", y)
    else:
        pre, extra = "120", _big(m, n, "s2s0", y)
    p = from_word(pre)
    return frozenset({p * z for z in inner} | {extra})


def coatom_formula(tag: FamilyTag, corrected: bool = False) -> frozenset[Element]:
    """Coatoms predicted by the closed descriptions, for tags in their stated range.

    ``corrected=True`` fixes two misprinted entries (one in the ``x_{3k+2}``
    list, one in the ``xbar_{3k}`` list); everything else is as published.
    """
    if tag.family == "theta":
        out = _big_coatoms(tag.m, tag.n, tag.x, tag.y)
    elif tag.family == "x":
        out = _x_coatoms_named(tag.n, corrected)
    elif tag.family == "xbar":
        out = _xbar_coatoms_named(tag.n, corrected)
    elif tag.family == "e":
        out = _e_coatoms_named(tag.n)
    elif tag.family == "d":
        out = d_coatoms_by_deletion(tag.n)
    else:
        raise NoFormula(f"no coatom formula for {tag.label()}")
    if tag.primed:
        return frozenset(phi(z) for z in out)
    return out
