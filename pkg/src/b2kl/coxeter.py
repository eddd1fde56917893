"""The affine Weyl group of type B2 as a group of affine isometries of the plane.

Generators ``s1``, ``s2``, ``s0`` are the reflections in the three sides of the
fundamental alcove, the triangle with vertices (0,0), (2,0), (1,1):

* ``s1``: the line ``y = x``
* ``s2``: the line ``y = 0``
* ``s0``: the line ``x + y = 2``

so that ``(s1 s2)^4 = (s2 s0)^4 = (s1 s0)^2 = 1``.  An element ``w`` is stored as
the isometry ``p -> A p + t``; the alcove of ``w`` is the image of the
fundamental alcove.  Words are strings over ``"012"`` read left to right, so
``"1212"`` is ``s1 s2 s1 s2`` and ``""`` is the identity.

>>> w = from_word("1212")
>>> length(w), canonical_word(w), sorted(descents(w, "right"))
(4, '1212', [1, 2])
>>> canonical_word(phi(from_word("120")))
'021'
>>> len(lower_interval(from_word("1212")))
8
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterable, NamedTuple

GENERATORS = (0, 1, 2)

# the reflecting lines of the tessellation are x = 2k, y = 2k, x + y = 2k and
# x - y = 2k; coordinates below are scaled by 3 so that the centroid (1, 1/3)
# of the fundamental alcove becomes the integer point (3, 1)


class Element(NamedTuple):
    """Affine isometry ``(x, y) -> (a x + b y + tx, c x + d y + ty)``."""

    a: int
    b: int
    c: int
    d: int
    tx: int
    ty: int

    @property
    def linear_part(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def translation(self) -> tuple[int, int]:
        return (self.tx, self.ty)

    def __mul__(self, other: Element) -> Element:  # type: ignore[override]
        a, b, c, d, tx, ty = self
        a2, b2, c2, d2, ux, uy = other
        return Element(
            a * a2 + b * c2, a * b2 + b * d2,
            c * a2 + d * c2, c * b2 + d * d2,
            a * ux + b * uy + tx, c * ux + d * uy + ty,
        )

    def apply(self, x, y):
        return (self.a * x + self.b * y + self.tx, self.c * x + self.d * y + self.ty)

    def __repr__(self) -> str:
        return f"Element({canonical_word(self)!r})"

    def __str__(self) -> str:
        return canonical_word(self) or "e"


IDENTITY = Element(1, 0, 0, 1, 0, 0)
GEN = {
    0: Element(0, -1, -1, 0, 2, 2),
    1: Element(0, 1, 1, 0, 0, 0),
    2: Element(1, 0, 0, -1, 0, 0),
}
# reflection in x = 1; it fixes the s2-wall and swaps the s0- and s1-walls
_SWAP = Element(-1, 0, 0, 1, 2, 0)


def parse_word(text: str, sep: str | None = None) -> str:
    """Normalize word text (``"1212"``, or ``"1.2.1.2"`` with ``sep="."``)."""
    text = text.strip()
    if text in ("", "e"):
        return ""
    letters = text.split(sep) if sep else list(text)
    letters = [t.strip() for t in letters if t.strip() != ""]
    for t in letters:
        if t not in ("0", "1", "2"):
            raise ValueError(f"bad generator {t!r} in word {text!r}")
    return "".join(letters)


def apply_gen(w: Element, s: int, side: str = "right") -> Element:
    if side == "right":
        return w * GEN[s]
    if side == "left":
        return GEN[s] * w
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


@lru_cache(maxsize=None)
def _from_word_str(word: str) -> Element:
    w = IDENTITY
    for ch in word:
        w = w * GEN[int(ch)]
    return w


def from_word(word: str | Iterable[int]) -> Element:
    if not isinstance(word, str):
        word = "".join(str(int(s)) for s in word)
    for ch in word:
        if ch not in "012":
            raise ValueError(f"bad generator {ch!r} in word {word!r}")
    return _from_word_str(word)


def inverse(w: Element) -> Element:
    a, b, c, d, tx, ty = w
    # signed permutation matrices are orthogonal
    return Element(a, c, b, d, -(a * tx + c * ty), -(b * tx + d * ty))


def centroid3(w: Element) -> tuple[int, int]:
    """Three times the centroid of the alcove of ``w``."""
    a, b, c, d, tx, ty = w
    return (3 * a + b + 3 * tx, 3 * c + d + 3 * ty)


def alcove(w: Element) -> tuple[tuple[int, int], ...]:
    """Vertices of the alcove of ``w``, images of (0,0), (2,0), (1,1)."""
    return (w.apply(0, 0), w.apply(2, 0), w.apply(1, 1))


def _count_walls(p: int) -> int:
    # walls at multiples of 6 strictly between p and the base value, which
    # lies in (0, 6); p itself is never a multiple of 6
    q = p // 6
    return q if q >= 0 else -q


def length(w: Element) -> int:
    """Number of reflecting lines separating the alcove of ``w`` from the base alcove."""
    x, y = centroid3(w)
    return _count_walls(x) + _count_walls(y) + _count_walls(x + y) + _count_walls(x - y)


def _left_descent_flags(w: Element) -> tuple[bool, bool, bool]:
    x, y = centroid3(w)
    return (x + y > 6, x < y, y < 0)


def is_descent(w: Element, s: int, side: str = "left") -> bool:
    if side == "right":
        w = inverse(w)
    elif side != "left":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    return _left_descent_flags(w)[s]


def descents(w: Element, side: str = "left") -> frozenset[int]:
    if side == "right":
        w = inverse(w)
    elif side != "left":
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    f = _left_descent_flags(w)
    return frozenset(s for s in GENERATORS if f[s])


def length_by_stripping(w: Element) -> int:
    """Length counted by removing left descents one at a time."""
    n = 0
    while w != IDENTITY:
        s = min(descents(w, "left"))
        w = GEN[s] * w
        n += 1
    return n


@lru_cache(maxsize=None)
def canonical_word(w: Element) -> str:
    """ShortLex-least reduced word, built by stripping the smallest left descent."""
    out = []
    while True:
        f = _left_descent_flags(w)
        for s in GENERATORS:
            if f[s]:
                out.append(str(s))
                w = GEN[s] * w
                break
        else:
            return "".join(out)


def phi(w: Element) -> Element:
    """Diagram automorphism exchanging ``s0`` and ``s1``."""
    return _SWAP * w * _SWAP


def phi_word(word: str) -> str:
    return word.translate(str.maketrans("01", "10"))


def bruhat_leq(x: Element, w: Element) -> bool:
    """Bruhat order by the lifting property, peeling left descents off ``w``."""
    lx, lw = length(x), length(w)
    while True:
        if lx > lw:
            return False
        if x == IDENTITY:
            return True
        if lx == lw:
            return x == w
        fw = _left_descent_flags(w)
        s = fw.index(True)
        g = GEN[s]
        if _left_descent_flags(x)[s]:
            x = g * x
            lx -= 1
        w = g * w
        lw -= 1


@lru_cache(maxsize=4096)
def lower_interval(w: Element) -> frozenset[Element]:
    """The Bruhat interval ``{x : x <= w}``.

    Uses ``[e, w] = [e, ws] u [e, ws]s`` for a right descent ``s`` of ``w``.
    """
    if w == IDENTITY:
        return frozenset((IDENTITY,))
    s = min(descents(w, "right"))
    g = GEN[s]
    below = lower_interval(w * g)
    return below | frozenset(x * g for x in below)


def lower_interval_by_levels(w: Element) -> frozenset[Element]:
    """Same set as :func:`lower_interval`, grown one length at a time with Bruhat tests."""
    lw = length(w)
    level = {IDENTITY}
    out = set(level)
    for _ in range(lw):
        nxt = set()
        for y in level:
            for s in GENERATORS:
                if not is_descent(y, s, "right"):
                    z = y * GEN[s]
                    if z not in nxt and bruhat_leq(z, w):
                        nxt.add(z)
        out |= nxt
        level = nxt
    return frozenset(out)


def coatoms(w: Element) -> frozenset[Element]:
    """Elements covered by ``w``: single-letter deletions of a reduced word that stay reduced."""
    word = canonical_word(w)
    if not word:
        raise ValueError("the identity has no coatoms")
    lw = len(word)
    out = set()
    for i in range(lw):
        u = from_word(word[:i] + word[i + 1:])
        if length(u) == lw - 1:
            out.add(u)
    return frozenset(out)


def ball(radius: int) -> list[list[Element]]:
    """Elements grouped by length, ``0 .. radius``, found by breadth-first search."""
    levels = [[IDENTITY]]
    seen = {IDENTITY}
    for _ in range(radius):
        nxt = []
        for y in levels[-1]:
            for s in GENERATORS:
                z = y * GEN[s]
                if z not in seen and length(z) == len(levels):
                    seen.add(z)
                    nxt.append(z)
        levels.append(nxt)
    return levels


def bfs_growth(radius: int) -> list[int]:
    """Number of elements of each length, by plain breadth-first search on words."""
    dist = {IDENTITY: 0}
    queue = deque([IDENTITY])
    counts = [0] * (radius + 1)
    while queue:
        y = queue.popleft()
        k = dist[y]
        counts[k] += 1
        if k == radius:
            continue
        for s in GENERATORS:
            z = y * GEN[s]
            if z not in dist:
                dist[z] = k + 1
                queue.append(z)
    return counts
