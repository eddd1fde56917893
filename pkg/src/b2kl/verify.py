"""Verification suites: closed formulas and identities against enumeration and the recursion.

Every check produces a record ``{"identity", "params", "status", "first_diff"}``
with ``status`` either ``"ok"`` or ``"fail"``.

>>> recs = run_suite("big", 8)
>>> all(r["status"] == "ok" for r in recs), len(recs) > 0
(True, True)
"""

from __future__ import annotations

from collections import Counter

from .closedforms import check_thin_conjecture, compare, kl_closed_info
from .coxeter import canonical_word, coatoms, lower_interval
from .families import (
    FormulaOutOfRange, NoFormula, coatom_formula, d_coatoms_by_deletion, interval_size,
    tagged_elements, x_coatoms_by_deletion,
)
from .hecke import kl_basis
from .identities import (
    BIG_NEIGHBOURS, CATALOG, EXPLICIT, INTRO, MULT_LEMMAS, THETA_HAT, THICK,
)

SUITES = ("big", "thick", "thin", "intervals", "coatoms", "mult-lemmas")
DEFAULT_DEPTH = {"big": 20, "thick": 24, "thin": 12, "intervals": 24, "coatoms": 24, "mult-lemmas": 22}


def _tagged(max_len: int, regions: tuple[str, ...] | None = None):
    for L in range(1, max_len + 1):
        for w, tag in sorted(tagged_elements(L).items(), key=lambda kv: canonical_word(kv[0])):
            if regions is None or tag.region in regions:
                yield w, tag


def _value_record(identity: str, params: dict, word: str, got: int, want: int) -> dict:
    if got == want:
        return {"identity": identity, "params": params, "status": "ok", "first_diff": None}
    return {"identity": identity, "params": params, "status": "fail",
            "first_diff": {"element": word, "lhs": {"value": got}, "rhs": {"value": want}}}


def _set_record(identity: str, params: dict, word: str, got: frozenset, want: frozenset) -> dict:
    if got == want:
        return {"identity": identity, "params": params, "status": "ok", "first_diff": None}
    return {"identity": identity, "params": params, "status": "fail",
            "first_diff": {"element": word,
                           "lhs": {"words": sorted(canonical_word(z) for z in got)},
                           "rhs": {"words": sorted(canonical_word(z) for z in want)}}}


def _formula_name(kind: str, tag) -> str:
    if tag.family == "theta":
        return f"{kind}_theta[{tag.x}|{tag.y}]"
    return f"{kind}_{tag.family}"


def oracle_equivalence(max_len: int, regions: tuple[str, ...]) -> list[dict]:
    """Closed formula against the recursion for every tagged element in ``regions``."""
    out = []
    for w, tag in _tagged(max_len, regions):
        res = kl_closed_info(w)
        if res.fallback:
            continue
        params = {"element": canonical_word(w), "tag": tag.label()}
        out.append(compare(f"closed_formula_{tag.region}", params, res.element, kl_basis(w)))
    return out


def interval_records(max_len: int, corrected: bool = False) -> list[dict]:
    out = []
    for w, tag in _tagged(max_len):
        try:
            want = interval_size(tag, corrected)
        except NoFormula:
            continue
        word = canonical_word(w)
        out.append(_value_record(_formula_name("interval_size", tag), {"tag": tag.label()},
                                 word, want, len(lower_interval(w))))
    return out


def coatom_records(max_len: int, corrected: bool = False) -> list[dict]:
    out = []
    for w, tag in _tagged(max_len):
        word = canonical_word(w)
        try:
            want = coatom_formula(tag, corrected)
        except (NoFormula, FormulaOutOfRange):
            want = None
        if want is not None:
            out.append(_set_record(_formula_name("coatoms", tag), {"tag": tag.label()},
                                   word, want, coatoms(w)))
        if tag.family == "x" and not tag.primed and tag.n >= 6:
            out.append(_set_record("coatoms_x_by_deletion", {"tag": tag.label()}, word,
                                   x_coatoms_by_deletion(tag.n), coatoms(w)))
        if tag.family == "d" and not tag.primed and tag.n >= 7:
            out.append(_set_record("coatoms_d_by_deletion", {"tag": tag.label()}, word,
                                   d_coatoms_by_deletion(tag.n), coatoms(w)))
    return out


def thin_records(max_len: int) -> list[dict]:
    out = []
    k = 1
    # the longest element in the k-th group of identities is d_{4k+4}
    while 4 * k + 4 <= max_len:
        out.extend(check_thin_conjecture(k))
        k += 1
    return out


def catalog_records(names, max_len: int) -> list[dict]:
    out = []
    for name in names:
        out.extend(CATALOG[name].check(max_len))
    return out


def run_suite(name: str, max_len: int | None = None, corrected: bool = False) -> list[dict]:
    """Run one named suite; ``corrected`` only affects ``intervals`` and ``coatoms``."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if max_len is None:
        max_len = DEFAULT_DEPTH[name]
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    if name == "big":
        return (oracle_equivalence(max_len, ("BigC", "BigPhiC"))
                + catalog_records(THETA_HAT + BIG_NEIGHBOURS, max_len))
    if name == "thick":
        return (oracle_equivalence(max_len, ("ThickNorth", "ThickSouth", "ThickEast", "ThickWest"))
                + catalog_records(THICK + INTRO, max_len))
    if name == "thin":
        return thin_records(max_len)
    if name == "intervals":
        return interval_records(max_len, corrected)
    if name == "coatoms":
        return coatom_records(max_len, corrected)
    return catalog_records(MULT_LEMMAS + EXPLICIT, max_len)


def summarize(records: list[dict]) -> dict:
    """Counts of ok/fail per identity name."""
    per: dict[str, Counter] = {}
    for r in records:
        per.setdefault(r["identity"], Counter())[r["status"]] += 1
    return {name: {"ok": c["ok"], "fail": c["fail"]} for name, c in sorted(per.items())}


def failures(records: list[dict]) -> list[dict]:
    return [r for r in records if r["status"] != "ok"]
