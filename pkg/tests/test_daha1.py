import random
from fractions import Fraction

import pytest

from curvelink.daha1 import (C, T_HALF, T_MHALF, TT, WordBudgetExceeded, X, Y, DahaElem, apply_tau, apply_word,
                             coinvariant, evaluate_in_rep, jd_torus_knot, normal_form, phi,
                             poly_rep_apply, random_elem, relation_residues, torus_word, word_matrix)
from curvelink.exactalg import ONE, mono, parse
from curvelink.superpoly import closed_form

Q4 = Fraction(1, 4)


def test_relations_vanish():
    for name, res in relation_residues().items():
        assert not res, name


def test_quadratic_relation_and_empty_word():
    assert normal_form(["T", "T"]) == TT.scale(C) + DahaElem.mono()
    assert normal_form([]) == DahaElem.mono()


def test_rep_basics():
    x = {1: ONE}
    assert poly_rep_apply("Y", x) == {1: mono(1, q=Fraction(-1, 2), t=Fraction(-1, 2))}
    assert poly_rep_apply("T", {0: ONE}) == {0: T_HALF}
    assert poly_rep_apply("T", x) == {-1: T_MHALF}


def test_faithfulness_on_random_products():
    rng = random.Random(7)
    for _ in range(25):
        a, b = random_elem(rng), random_elem(rng)
        ab = a * b
        for n in (-2, 0, 1, 3):
            f = {n: ONE}
            lhs = poly_rep_apply(ab, f)
            rhs = poly_rep_apply(a, poly_rep_apply(b, f))
            assert lhs == rhs


def test_associativity():
    rng = random.Random(11)
    for _ in range(10):
        a, b, c = (random_elem(rng, 2, 1) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_taus():
    assert apply_tau("+", 1, Y) == X * Y * DahaElem.mono(coef=mono(1, q=-Q4))
    assert apply_tau("-", 1, X) == Y * X * DahaElem.mono(coef=mono(1, q=Q4))
    assert apply_tau("+", 1, X * X) == X * X
    for e in (X, Y, TT, X * Y):
        assert apply_tau("+", -1, apply_tau("+", 1, e)) == e
        assert apply_tau("-", -1, apply_tau("-", 1, e)) == e
    # braid relation tau+ tau-^-1 tau+ = tau-^-1 tau+ tau-^-1
    for e in (X, Y):
        lhs = apply_word([("+", 1), ("-", -1), ("+", 1)], e)
        rhs = apply_word([("-", -1), ("+", 1), ("-", -1)], e)
        assert lhs == rhs


def test_coinvariant():
    assert coinvariant(X) == mono(1, t=Fraction(-1, 2))
    assert coinvariant(TT) == T_HALF
    assert coinvariant(X * Y) == ONE
    rng = random.Random(3)
    for _ in range(10):
        e = random_elem(rng)
        assert coinvariant(e) == evaluate_in_rep(e)


def test_phi_is_anti_involution():
    rng = random.Random(5)
    for _ in range(5):
        a, b = random_elem(rng, 2, 1), random_elem(rng, 2, 1)
        assert phi(phi(a)) == a
        assert phi(a * b) == phi(b) * phi(a)


def test_words():
    for r, s in [(3, 2), (2, 3), (5, 2), (7, 3), (4, 3), (5, 8)]:
        for v in ("floor", "nearest"):
            m = word_matrix(torus_word(r, s, v))
            assert (m[0][0], m[1][0]) == (r, s)
            assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1


def test_jd_values():
    assert jd_torus_knot(3, 2)[0] == parse("1 + q*t - q*t^2")
    assert jd_torus_knot(5, 2)[0] == parse("1 + q*t - q*t^2 + q^2*t^2 - q^2*t^3")
    assert jd_torus_knot(4, 1)[0] == ONE
    for r, s in [(3, 2), (5, 2), (4, 3)]:
        base = jd_torus_knot(r, s)[0]
        assert jd_torus_knot(s, r)[0] == base
        assert jd_torus_knot(r, s, route="rep")[0] == base
        assert jd_torus_knot(r, s, word=torus_word(r, s, "nearest"))[0] == base
        assert jd_torus_knot(r, s, use_P1=True)[0] == base


def test_colored_trefoil_jd():
    h = closed_form("trefoil_colored", c=2).value.substitute({"a": mono(-1, t=2)})
    from curvelink.exactalg import hat_normalize
    assert jd_torus_knot(3, 2, 2)[0] == hat_normalize(h)


def test_budget_and_errors():
    with pytest.raises(WordBudgetExceeded):
        jd_torus_knot(7, 3, budget=10)
    with pytest.raises(ValueError):
        jd_torus_knot(4, 2)
