"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with a short summary and then
asserts.  Run with ``pytest tests/test_acceptance.py -v`` to see the lines
next to the test names.
"""

import time

import pytest

from b2kl.closedforms import check_thin_conjecture, h_xbar_x_closed, kl_closed_info
from b2kl.coxeter import ball, bfs_growth, bruhat_leq, descents, length, lower_interval
from b2kl.families import BIG_REGIONS, THICK_REGIONS, tagged_elements, thick_element
from b2kl.hecke import bar, h_poly, is_monotonic, kl_basis, mu, mul_kl_gen, n_elem
from b2kl.identities import CATALOG, EXPLICIT, INTRO, MULT_LEMMAS, THICK
from b2kl.laurent import V, V_INV
from b2kl.verify import coatom_records, failures, interval_records
from kl_oracle import growth_series, subword_interval


@pytest.fixture
def report(capsys):
    start = time.perf_counter()

    def emit(number, title, ok, detail):
        secs = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title} -- {detail} [{secs:.1f}s]")
        return ok

    return emit


def _elements(max_len, regions):
    for L in range(1, max_len + 1):
        for w, tag in tagged_elements(L).items():
            if tag.region in regions:
                yield w, tag


def _oracle_sweep(regions):
    closed = fallback = 0
    bad = []
    for w, tag in _elements(24, regions):
        res = kl_closed_info(w)
        if res.fallback:
            fallback += 1
        else:
            closed += 1
        if res.element != kl_basis(w):
            bad.append(tag.label())
    return closed, fallback, bad


def test_criterion_01_big_region_oracle(report):
    closed, fallback, bad = _oracle_sweep(BIG_REGIONS)
    ok = not bad and fallback == 0 and closed > 0
    report(1, "big region closed formulas equal the recursion, length <= 24", ok,
           f"{closed} elements by closed formula, {fallback} by fallback, {len(bad)} mismatches {bad[:3]}")
    assert ok


def test_criterion_02_thick_region_oracle(report):
    closed, fallback, bad = _oracle_sweep(THICK_REGIONS)
    recs = [r for name in THICK for r in CATALOG[name].check(24)]
    ks = sorted({r["params"]["k"] for r in recs if "k" in r["params"]})
    rec_bad = failures(recs)
    ok = not bad and not rec_bad and closed > 0 and {2, 3, 4, 5, 6, 7} <= set(ks)
    report(2, "thick region closed formulas and recurrences, length <= 24", ok,
           f"{closed} closed, {fallback} short elements by fallback, {len(bad)} mismatches; "
           f"{len(recs)} recurrence checks over k={ks[0]}..{ks[-1]}, {len(rec_bad)} failed")
    assert ok


def test_criterion_03_interval_sizes(report):
    recs = interval_records(24)
    bad = failures(recs)
    names = sorted({r["identity"] for r in bad})
    report(3, "closed-form interval sizes equal enumeration, length <= 24", not bad,
           f"{len(recs)} checks, {len(bad)} mismatches in {names}")
    assert not bad


def test_criterion_04_coatoms(report):
    recs = coatom_records(24)
    bad = failures(recs)
    names = sorted({r["identity"] for r in bad})
    report(4, "coatom descriptions equal enumerated coatoms, length <= 24", not bad,
           f"{len(recs)} checks, {len(bad)} mismatches in {names}")
    assert not bad


def test_criterion_05_mu_correction(report):
    x = lambda n: thick_element("x", n)
    xbar = lambda n: thick_element("xbar", n)
    got = (mu(xbar(6), x(9)), mu(xbar(6), x(15)), mu(xbar(12), x(15)))
    ok = got == (1, 0, 1)
    report(5, "mu(xbar6, x9) = 1, mu(xbar6, x15) = 0, mu(xbar12, x15) = 1", ok, f"got {got}")
    assert ok


def test_criterion_06_intro_example(report):
    pairs = [(2, 3), (2, 5), (4, 5)]
    closed_ok = all(h_xbar_x_closed(n, m) == h_poly(thick_element("xbar", 3 * n), thick_element("x", 3 * m))
                    for n, m in pairs)
    recs = [r for name in INTRO for r in CATALOG[name].check(21)]
    covered = {(r["params"]["n"], r["params"]["m"]) for r in recs}
    bad = failures(recs)
    ok = closed_ok and not bad and set(pairs) <= covered
    report(6, "worked h(xbar_3n, x_3m) example and its intermediate steps", ok,
           f"closed form {'matches' if closed_ok else 'differs'} at {pairs}; "
           f"{len(recs)} step checks over {sorted(covered)}, {len(bad)} failed")
    assert ok


def test_criterion_07_hecke_invariants(report):
    vv = V + V_INV
    counts = dict.fromkeys(["self-dual", "absorption", "N-absorption", "monotonic", "descent sets"], 0)
    bad = []
    for level in ball(16):
        for w in level:
            kl = kl_basis(w)
            L = length(w)
            counts["self-dual"] += 1
            if bar(kl) != kl:
                bad.append(("self-dual", w))
            counts["monotonic"] += 1
            if not is_monotonic(kl, w):
                bad.append(("monotonic KL", w))
            if L > 14:
                continue
            n = n_elem(w)
            if not is_monotonic(n, w):
                bad.append(("monotonic N", w))
            for s in descents(w, "right"):
                counts["absorption"] += 1
                counts["N-absorption"] += 1
                if mul_kl_gen(kl, s) != kl * vv:
                    bad.append(("absorption", w))
                if mul_kl_gen(n, s) != n * vv:
                    bad.append(("N-absorption", w))
            dr, dl = descents(w, "right"), descents(w, "left")
            for y, p in kl.items():
                if p.coeff(1) and L - length(y) > 1:
                    counts["descent sets"] += 1
                    if not (dr <= descents(y, "right") and dl <= descents(y, "left")):
                        bad.append(("descent sets", w))
    report(7, "Hecke invariants: self-duality, absorption, monotonicity, descent sets", not bad,
           ", ".join(f"{k} {v}" for k, v in counts.items()) + f"; {len(bad)} failures")
    assert not bad


def test_criterion_08_multiplication_lemmas(report):
    recs = [r for name in MULT_LEMMAS + EXPLICIT for r in CATALOG[name].check(22)]
    bad = failures(recs)
    empty = [name for name in MULT_LEMMAS + EXPLICIT if not CATALOG[name].check(22)]
    ok = not bad and not empty
    report(8, "N-multiplication and explicit-form identities, length <= 22", ok,
           f"{len(MULT_LEMMAS + EXPLICIT)} identities, {len(recs)} instances, {len(bad)} failed, "
           f"{len(empty)} without cases")
    assert ok


def test_criterion_09_thin_conjecture(report):
    recs = [r for k in (1, 2, 3) for r in check_thin_conjecture(k)]
    bad = failures(recs)
    where = [(r["identity"], r["params"]["k"], r["first_diff"]["element"]) for r in bad]
    report(9, "thin-wall conjecture items for k <= 3", not bad,
           f"{len(recs)} identities, {len(bad)} failed {where}")
    assert not bad


def test_criterion_10_group_engine(report):
    growth = bfs_growth(12)
    series = growth_series(12)
    pairs = 0
    bad = []
    everything = [w for level in ball(10) for w in level]
    for w in everything:
        below = subword_interval(w)
        if lower_interval(w) != below:
            bad.append(w)
        for x in everything:
            if length(x) <= length(w):
                pairs += 1
                if bruhat_leq(x, w) != (x in below):
                    bad.append((x, w))
    ok = growth == series and not bad
    report(10, "growth series and Bruhat order against subword enumeration", ok,
           f"BFS counts {growth} {'=' if growth == series else '!='} series; {pairs} Bruhat pairs, "
           f"{len(bad)} disagreements")
    assert ok
