import pytest

from b2kl.closedforms import (
    NORTH_BRANCHES, check_thin_conjecture, h_xbar_x_closed, kl_big, kl_closed, kl_closed_info,
    kl_theta_hat, kl_thick, kl_thick_east_west, kl_thick_north, supp, u_elem,
)
from b2kl.closedforms import _formal_cut, _thin_first
from b2kl.coxeter import GEN, IDENTITY, ball, from_word, length, lower_interval, phi
from b2kl.families import (
    FormulaOutOfRange, big_element, big_tag, tagged_elements, theta, thick_element, thick_tag,
    thin_element,
)
from b2kl.hecke import (
    HeckeElem, bar, content, h_poly, kl_basis, mu, mul_kl_gen, n_elem, phi_elem, truncated_n,
)
from b2kl.laurent import LaurentPoly, V

ORACLE_DEPTH = 24


def P(d):
    return LaurentPoly(d)


def test_supp_examples():
    assert supp(0, 0) == {(0, 0)}
    assert supp(2, 0) == {(2, 0), (0, 0)}
    assert supp(0, 2) == {(0, 2), (0, 0)}
    assert supp(1, 1) == {(1, 1), (1, 0)}


@pytest.mark.parametrize("m, n", [(m, n) for m in range(7) for n in range(5)])
def test_supp_invariants(m, n):
    for a, b in supp(m, n):
        assert 0 <= a <= m and 0 <= b <= n
        assert (a - m) % 2 == 0
        if m % 2 == 0 and a == 0:
            assert (b - n) % 2 == 0


def test_theta_hat_examples():
    assert kl_theta_hat(0, 0) == n_elem(theta(0, 0))
    assert kl_theta_hat(2, 0) == n_elem(theta(2, 0)) + n_elem(theta(0, 0)).shift(2)


def test_theta_hat_is_self_dual_and_equals_kl():
    for m in range(8):
        for n in range(6):
            if 3 * m + 4 * n + 4 > ORACLE_DEPTH:
                continue
            x = kl_theta_hat(m, n)
            assert bar(x) == x
            assert x == kl_basis(theta(m, n))


def test_kl_big_examples():
    for m in range(3):
        for n in range(2):
            w = big_element(m, n, y="t")
            assert kl_big(big_tag(m, n, y="t")) == kl_basis(w)
            assert kl_basis(w) == mul_kl_gen(kl_basis(theta(m, n)), int("01"[m % 2]))
    s0t = big_element(0, 0, "s0")
    assert kl_big(big_tag(0, 0, "s0")) == mul_kl_gen(kl_basis(theta(0, 0)), 0, "left")
    assert kl_closed(s0t) == kl_basis(s0t)
    w = big_element(1, 0, "s1s2s0")
    assert kl_big(big_tag(1, 0, "s1s2s0")) == kl_basis(w)
    assert kl_big(big_tag(1, 0, "s1s2s0"))[w] == 1


def test_kl_big_rejects_other_regions():
    with pytest.raises(ValueError):
        kl_big(thick_tag("x", 7))


def test_thick_north_examples():
    assert kl_thick_north(2, "x3k1") == kl_basis(thick_element("x", 7))
    assert kl_thick_north(2, "x3k2") == kl_basis(thick_element("x", 8))
    assert kl_thick_north(3, "xbar3k3") == kl_basis(thick_element("xbar", 12))
    with pytest.raises(FormulaOutOfRange):
        kl_thick_north(1, "x3k1")
    with pytest.raises(ValueError):
        kl_thick_north(2, "x3k4")


@pytest.mark.parametrize("branch", NORTH_BRANCHES)
def test_thick_north_parities(branch):
    # both parity branches of the recurrences, k = 2..7, up to length 24
    offset = {"x3k1": 1, "x3k2": 2, "x3k3": 3, "xbar3k3": 3}[branch]
    family = "xbar" if branch == "xbar3k3" else "x"
    for k in range(2, 8):
        n = 3 * k + offset
        if n > ORACLE_DEPTH:
            break
        assert kl_thick_north(k, branch) == kl_basis(thick_element(family, n)), (branch, k)


def test_thick_east_west_examples():
    assert kl_thick_east_west("e", 4) == kl_basis(thick_element("e", 4))
    e6 = kl_thick_east_west("e", 6)
    # the v N_{e'_3} term gives the v; the longer N terms add v^3
    assert e6[thick_element("e", 3, primed=True)] == V + P({3: 1})
    assert e6 == kl_basis(thick_element("e", 6))
    assert kl_thick_east_west("w", 4) == kl_basis(thick_element("w", 4))
    with pytest.raises(FormulaOutOfRange):
        kl_thick_east_west("e", 3)
    with pytest.raises(ValueError):
        kl_thick_east_west("x", 5)


def test_kl_thick_examples():
    assert kl_thick(thick_tag("x", 10)) == kl_basis(thick_element("x", 10))
    assert kl_thick(thick_tag("x", 7, primed=True)) == phi_elem(kl_thick_north(2, "x3k1"))
    assert kl_thick(thick_tag("w", 7)) == kl_basis(thick_element("w", 7))


def test_dispatcher_examples():
    assert kl_closed(theta(3, 2)) == kl_basis(theta(3, 2))
    res = kl_closed_info(thin_element("d", 7))
    assert res.fallback and res.source == "fallback"
    assert res.element == kl_basis(thin_element("d", 7))
    assert kl_closed(IDENTITY) == HeckeElem.one()
    assert kl_closed_info(theta(1, 1)).source == "closed"
    assert kl_closed_info(thick_element("x", 4)).fallback


def test_every_closed_formula_matches_the_recursion():
    for L in range(1, 19):
        for w in tagged_elements(L):
            res = kl_closed_info(w)
            assert res.element == kl_basis(w), res.tag.label()


def test_truncated_n_content():
    ws = [from_word(u) for u in ("", "1", "12", "120", "1212", "0212", "21021")]
    for x in ws:
        for z in ws:
            both = lower_interval(x) & lower_interval(z)
            assert content(truncated_n(x, z)) == len(lower_interval(x)) - len(both)


def test_u_elem():
    x = thin_element("d", 5)
    u = u_elem(x)
    assert u == n_elem(x) + truncated_n(phi(x), x)
    assert content(u) == len(lower_interval(x) | lower_interval(phi(x)))


def test_h_xbar_x_closed_examples():
    assert h_xbar_x_closed(2, 3) == P({1: 1, 3: 1})
    assert h_xbar_x_closed(2, 5) == P({3: 3, 5: 3, 7: 1, 9: 1})
    for n, m in [(2, 3), (2, 5), (4, 5)]:
        assert h_xbar_x_closed(n, m) == h_poly(thick_element("xbar", 3 * n), thick_element("x", 3 * m))
    for bad in [(3, 5), (2, 4), (4, 3), (0, 3)]:
        with pytest.raises(ValueError):
            h_xbar_x_closed(*bad)


def test_mu_correction_regression():
    # within l(x_3m) <= 27: n even, m odd
    for m in range(3, 10, 2):
        for n in range(2, m, 2):
            want = 1 if m - n == 1 else 0
            assert mu(thick_element("xbar", 3 * n), thick_element("x", 3 * m)) == want, (n, m)


def test_thin_conjecture_report_shape():
    recs = check_thin_conjecture(2)
    assert len(recs) == 9
    for r in recs:
        assert set(r) == {"identity", "params", "status", "first_diff"}
        assert r["params"]["k"] == 2


@pytest.mark.parametrize("k", [2, 3])
def test_thin_conjecture_holds(k):
    assert all(r["status"] == "ok" for r in check_thin_conjecture(k))


def test_thin_conjecture_first_case_readings():
    # at k = 1 the cut s2 s1 theta'(0, -1) s1 s2 only makes sense as a group element
    recs = check_thin_conjecture(1)
    assert all(r["status"] == "ok" for r in recs)
    assert _formal_cut(1) == from_word("2102")
    for cut in ("zero", "full"):
        recs = {r["identity"]: r for r in check_thin_conjecture(1, cut)}
        assert recs["thin_d4k3_expansion"]["status"] == "fail"
        assert all(r["status"] == "ok" for name, r in recs.items() if name != "thin_d4k3_expansion")
    # dropping the term loses exactly v D with the formal cut
    missing = kl_basis(thin_element("d", 7)) - _thin_first(1, "zero")
    H = HeckeElem.standard
    assert missing == (H(from_word("1212")) + H(from_word("121")).shift(1)).shift(1)
    assert missing == truncated_n(theta(0, 0), _formal_cut(1)).shift(1)


def test_formal_cut_agrees_with_named_element():
    for k in range(2, 7):
        assert _formal_cut(k) == big_element(0, k - 2, "s2s0", "ts2", primed=True)


def test_thin_conjecture_rejects_bad_arguments():
    with pytest.raises(ValueError):
        check_thin_conjecture(0)
    with pytest.raises(ValueError):
        check_thin_conjecture(1, "none")


@pytest.mark.parametrize("k", [4, 5])
def test_thin_conjecture_extended(k):
    assert all(r["status"] == "ok" for r in check_thin_conjecture(k))


def test_generators_have_kl_of_length_one():
    for s in range(3):
        assert kl_closed(GEN[s]) == kl_basis(GEN[s])
        assert length(GEN[s]) == 1


def test_all_short_elements_served():
    for level in ball(6):
        for w in level:
            assert kl_closed(w) == kl_basis(w)
