from fractions import Fraction

import pytest

from curvelink.exactalg import ONE, mono, parse
from curvelink.modcount import enumerate_all_standard
from curvelink.singularity import parse_preset
from curvelink.superpoly import (InsufficientPoints, UnknownFamily, check_extremal_a0,
                                 check_extremal_minus_t_over_q, check_invertibles,
                                 check_iteration_identity, check_minus_t, check_superduality,
                                 closed_form, decompose_rank, describe_product, extremal_a0,
                                 fixture, hmot_at_q, load_fixtures, parse_fixture_file,
                                 reconstruct_from_censuses, reconstruct_in_q, recompose,
                                 verify_in_q, weak_rh_roots)


def _census(words, q, colors=None):
    return enumerate_all_standard(parse_preset(words, q, colors))


def test_hmot_at_q():
    assert hmot_at_q(_census(["torus", "3", "2"], 2), 2) == parse("1 + 2*t + 2*a")
    h = hmot_at_q(_census(["hopf", "3"], 2), 2, (1, 1, 1))
    assert h == parse("(1+2*a)*(1+4*a) + 2*t^3 + (1+2*a)*(4*t+t^2)")
    assert hmot_at_q(_census(["monomial", "1"], 3), 3) == ONE


def test_reconstruction():
    cen = {q: _census(["torus", "3", "2"], q) for q in (2, 3)}
    assert reconstruct_from_censuses(cen, delta=1).value == parse("1 + q*t + a*q")
    evs = [(q, hmot_at_q(_census(["hopf", "2"], q), q, (1, 1))) for q in (2, 3)]
    assert reconstruct_in_q(evs, 1).value == parse("(q-1)*t + 1 + a*q")
    with pytest.raises(InsufficientPoints):
        reconstruct_in_q(evs[:1], 1)


def test_t73_verifies_at_three_points():
    evs = [(q, hmot_at_q(_census(["torus", "7", "3"], q), q)) for q in (2, 3)]
    assert verify_in_q(fixture("t73").poly, evs).ok
    bad = verify_in_q(fixture("t73").poly + mono(1, q=1, t=1), evs)
    assert not bad.ok and bad.witness


def test_closed_forms():
    assert closed_form("trefoil_colored", c=1).value == parse("1 + q*t + a*q")
    assert closed_form("hopf2", m=3).value == parse("(1+a*q^3) + (q^3-1)*t")
    assert closed_form("torus_2n1_uncolored", n=2).value == parse("1 + (q*t + q^2*t^2)*(1 + a/t)")
    for c in (1, 2, 3):
        assert closed_form("trefoil_colored", c=c).value == \
            closed_form("trefoil_colored", c=c, presentation="second").value
    with pytest.raises(UnknownFamily):
        closed_form("figure_eight")


def test_decompositions():
    parts = decompose_rank(fixture("t73").poly, "first", 1)
    assert recompose(parts) == fixture("t73").poly
    texts = {describe_product(d): c for c, d in parts}
    assert texts["(1+a*q)"].coeff(q=4, t=3) == 1 and texts["(1+a*q)"].coeff(q=3, t=3) == 0
    neg = decompose_rank(fixture("t94").poly, "first", 1)
    assert any(c.coeff(t=1) < 0 or any(cc < 0 for cc, *_ in c.monomials()) for c, _ in neg)
    tre = decompose_rank(fixture("trefoil").poly, "second", 1)
    assert recompose(tre) == fixture("trefoil").poly


def test_identities():
    for fid in ("trefoil", "t52", "t73", "t94", "g4613", "t64_daha", "hopf2", "hopf3"):
        fx = fixture(fid)
        assert check_superduality(fx.poly, fx.delta).ok, fid
    assert not check_superduality(fixture("t73").poly + mono(1, t=1), 6).ok
    h = {k: fixture(k).poly for k in ("trefoil", "hopf2", "g4613", "trefoil_c2", "t64_daha")}
    assert check_iteration_identity(h["trefoil"], ONE, h["hopf2"]).ok
    assert check_iteration_identity(h["g4613"], h["trefoil_c2"], h["t64_daha"]).ok
    res = check_iteration_identity(ONE, ONE, ONE)
    assert not res.ok and res.witness == parse("a*q")
    for fid in ("trefoil", "t73", "trefoil_c2", "g4613"):
        fx = fixture(fid)
        assert check_minus_t(fx.poly).ok
        assert check_invertibles(fx.poly, fx.delta, max(fx.colors), fx.kappa).ok


def test_extremal_terms():
    fx = fixture("g4613")
    assert extremal_a0(fx.poly) == parse("+".join(f"q^{i}*t^{i}" for i in range(9)))
    assert check_extremal_a0(fx.poly, 8).ok
    for fid in ("t52", "t73", "t94", "g4613"):
        assert check_extremal_minus_t_over_q(fixture(fid).poly, fixture(fid).delta).ok


def test_weak_rh():
    rep = weak_rh_roots(fixture("trefoil").poly, 0, Fraction(1, 10))
    assert rep.ok and rep.max_deviation < 1e-20
    rep = weak_rh_roots(fixture("t73").poly, 0, Fraction(1, 20))
    assert rep.ok and rep.max_deviation < 1e-6 and len(rep.roots) == 12


def test_fixture_corpus():
    fixtures = load_fixtures()
    assert len(fixtures) >= 30
    for fx in fixtures.values():
        assert fx.source
        if fx.poly is not None:
            assert parse(fx.poly.to_text()) == fx.poly
            assert parse(fx.text) == fx.poly
    assert parse_fixture_file("") == {}
