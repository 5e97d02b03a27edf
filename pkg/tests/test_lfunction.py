from fractions import Fraction


from curvelink.exactalg import ONE, mono, parse
from curvelink.lfunction import (LFunction, bold_H_full, check_functional_equation, check_H_equals_L,
                                 check_rho_additivity, compute_L_at_q, compute_L_by_modules,
                                 delta_qt, mu_qt, nonplanar_check, qt_dual,
                                 rho_cable_additivity, rho_suite, varrho_qt, varpi, zuniga_specialize)
from curvelink.semigroup import CableData, NumSemigroup, alexander_hat
from curvelink.singularity import parse_preset
from curvelink.superpoly import fixture


def test_L_trefoil():
    r = parse_preset(["torus", "3", "2"], 2)
    l = compute_L_at_q(r)
    assert l.L == parse("1 + 2*t^2 + 2*a*t")
    assert compute_L_by_modules(r).L == l.L
    assert check_functional_equation(l).ok
    assert check_H_equals_L(fixture("trefoil").poly, l).ok
    assert zuniga_specialize(l, r) == parse("1 - t + 2*t^2")


def test_functional_equation_symbolic():
    assert check_functional_equation(LFunction(parse("1 + q*t^2 + a*q*t"), 1, 1)).ok
    assert not check_functional_equation(LFunction(parse("1 + q*t^2 + a*q*t + t^2"), 1, 1)).ok
    assert check_functional_equation(bold_H_full(fixture("t64_daha").poly), 8).ok


def test_hopf_L():
    r = parse_preset(["hopf", "2"], 2)
    l = compute_L_at_q(r, with_a=False)
    assert l.L.degree("t") == 2
    assert check_functional_equation(l).ok


def test_zuniga_q_to_one_is_alexander():
    # L(a=-1/q) at q -> 1 is (1-t) sum t^nu, checked on the symbolic principal sum
    for gens in ([2, 3], [2, 5], [3, 4]):
        g = NumSemigroup(gens)
        vals = []
        for q in (2, 3, 4, 5)[: g.delta + 1]:
            r = parse_preset(["monomial"] + [str(x) for x in gens], q)
            vals.append((q, zuniga_specialize(compute_L_at_q(r), r)))
        from curvelink.superpoly import reconstruct_in_q
        z = reconstruct_in_q(vals, g.delta).value
        assert z.substitute({"q": 1}) == alexander_hat(g)


def test_nonplanar_456():
    r = parse_preset(["monomial", "4", "5", "6"], 2)
    l = compute_L_by_modules(r)
    h = fixture("g456_mot").poly
    assert check_H_equals_L(h, l, "-1/q").ok
    assert not check_H_equals_L(h, l, "0").ok
    assert not check_functional_equation(l).ok
    l0 = compute_L_by_modules(r, with_a=False)
    assert check_functional_equation(l0).ok
    assert nonplanar_check(fixture("g456_daha").poly, NumSemigroup([4, 5, 6])).ok


def test_rho_values():
    g = NumSemigroup([2, 3])
    assert delta_qt(g) == ONE and mu_qt(g) == mono(2)
    g = NumSemigroup([4, 6, 13])
    assert mu_qt(g) == fixture("g4613_mu").poly
    assert varrho_qt(g) == fixture("g4613_varrho").poly
    assert varrho_qt(g).evaluate(q=1, t=1) == 25
    assert varpi(g) == 6
    suite = rho_suite(g, fixture("g4613").poly)
    assert [s.variant for s in suite] == ["delta_qt", "mu_qt", "varrho_qt", "R_K"]
    assert suite[3].value == fixture("g4613_R").poly
    for gens in ([2, 3], [3, 7], [4, 6, 13], [4, 6, 9], [6, 8, 11], [4, 5, 6]):
        g = NumSemigroup(gens)
        for f in (mu_qt(g), varrho_qt(g)):
            assert qt_dual(f, g.delta - 1) == f


def test_cable_additivity():
    assert rho_cable_additivity(CableData(((3, 2),))) == 1
    assert rho_cable_additivity(CableData(((3, 2), (2, 1)))) == 25
    assert check_rho_additivity(CableData(((3, 2), (2, 1)))).ok
    for r in range(2, 8):
        for s in range(r + 1, 8):
            from math import gcd
            if gcd(r, s) == 1:
                c = CableData(((r, s),))
                assert rho_cable_additivity(c) == Fraction((r * r - 1) * (s * s - 1), 24)
                assert check_rho_additivity(c).ok
