"""Acceptance criteria, one test each.

Each test records a PASS/FAIL line with its wall time; the lines are printed
in the pytest terminal summary (see conftest.py) and when this file is run
directly with ``python tests/test_acceptance.py``.
"""

import time
from fractions import Fraction
from math import gcd

import pytest

from curvelink.daha1 import jd_torus_knot, torus_word
from curvelink.exactalg import ONE, ZERO, hat_normalize, mono, parse, psum
from curvelink.lfunction import (bold_H_full, cell_rows_symbolic, check_functional_equation,
                                 check_H_equals_L, compute_L_at_q, module_route_rows, mu_qt,
                                 principal_L, qt_dual, rho_cable_additivity, varrho_qt,
                                 zuniga_specialize)
from curvelink.modcount import count_standard_flags, enumerate_all_standard
from curvelink.semigroup import CableData, NumSemigroup, gamma_from_cable
from curvelink.singularity import parse_preset
from curvelink.superpoly import (check_extremal_a0, check_extremal_minus_t_over_q,
                                 check_iteration_identity, check_superduality, closed_form,
                                 extremal_a0, fixture, hmot_at_q, hmot_from_flags,
                                 rank_product, reconstruct_from_censuses, verify_in_q,
                                 weak_rh_roots)

RESULTS = []


class Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.failures = []

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def require(self, ok, what):
        if not ok:
            self.failures.append(what)

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        if exc_type is not None:
            self.failures.append(f"{exc_type.__name__}: {exc}")
        if dt >= self.limit:
            self.failures.append(f"took {dt:.2f} s, limit {self.limit} s")
        verdict = "PASS" if not self.failures else "FAIL"
        line = f"criterion {self.number:2d} {verdict}  {self.title}  ({dt:.2f} s / {self.limit} s)"
        if self.failures:
            line += "  -- " + "; ".join(self.failures)
        RESULTS.append((self.number, line))
        print(line)
        if exc_type is None:
            assert not self.failures, line
        return False


def census(words, q, colors=None):
    return enumerate_all_standard(parse_preset(words, q, colors))


def test_01_trefoil_end_to_end():
    with Criterion(1, "trefoil census at q=2,3 reconstructs 1+qt+aq", 1.0) as c:
        cen = {q: census(["torus", "3", "2"], q) for q in (2, 3)}
        h = reconstruct_from_censuses(cen, delta=1).value
        c.require(h == parse("1 + q*t + a*q"), f"reconstructed {h.to_text()}")
        for q in (2, 3):
            r = parse_preset(["torus", "3", "2"], q)
            fl = hmot_from_flags(count_standard_flags(r, 2))
            c.require(fl == hmot_at_q(cen[q], q), f"flags differ at q={q}")


def test_02_torus_2n1_2():
    with Criterion(2, "T(2n+1,2), n<=4, census at q=2 matches the closed form", 10.0) as c:
        for n in range(1, 5):
            expect = mono(1, q=n, t=n) + psum(mono(1, q=i, t=i) for i in range(n)) * (ONE + mono(1, q=1, a=1))
            c.require(closed_form("torus_2n1_uncolored", n=n).value == expect, f"closed form n={n}")
            got = hmot_at_q(census(["torus", str(2 * n + 1), "2"], 2), 2)
            c.require(got == expect.substitute({"q": 2}), f"n={n}: {got.to_text()}")


def _table_check(c, fx, q, cells):
    by = {}
    for cen in cells:
        for (rk, dd, deg), n in cen.counts.items():
            key = (tuple(cen.delta_D), rk)
            by[key] = by.get(key, ZERO) + mono(n, t=deg)
    seen = set()
    for D, rk, term in fx.rows:
        got = by.get((tuple(D), rk), ZERO)
        c.require(got == term.substitute({"q": q}), f"q={q} row {list(D)} rk {rk}: {got.to_text()}")
        seen.add((tuple(D), rk))
    c.require(set(by) == seen, f"q={q}: cells outside the table {sorted(set(by) - seen)}")


def test_03_t73_table():
    with Criterion(3, "T(7,3) per-cell census reproduces the table, H verified at q=2,3", 60.0) as c:
        fx = fixture("t73_table")
        evs = []
        for q in (2, 3):
            cells = census(["torus", "7", "3"], q)
            _table_check(c, fx, q, cells)
            evs.append((q, hmot_at_q(cells, q)))
        split = {rk: term for D, rk, term in fx.rows if D == (4, 8, 11)}
        c.require(split == {2: parse("(q^4 - q^3)*t^3"), 3: parse("q^3*t^3")},
                  "split row at [4,8,11]")
        c.require(verify_in_q(fixture("t73").poly, evs).ok, "displayed H at q=2,3")


def test_04_g4613_dims():
    with Criterion(4, "<4,6,13> at q=2: 2^dim per cell, two empty cells, H at q=2", 120.0) as c:
        cells = census(["cable", "3", "2", "2", "1"], 2)
        by = {tuple(x.delta_D): x for x in cells}
        for D, dim in fixture("g4613_dims").rows:
            x = by.get(tuple(D))
            if dim is None:
                c.require(x is not None and x.empty, f"{list(D)} should be empty")
            else:
                c.require(x is not None and x.total == 2 ** dim, f"{list(D)}: {x and x.total}")
        c.require(len(by) == len(fixture("g4613_dims").rows), "cell count")
        c.require(verify_in_q(fixture("g4613").poly, [(2, hmot_at_q(cells, 2))]).ok, "H at q=2")


def test_05_colored_trefoil():
    with Criterion(5, "colored trefoil c<=3 presentations agree; c=2 census at q=2", 30.0) as c:
        for k in (1, 2, 3):
            a = closed_form("trefoil_colored", c=k).value
            b = closed_form("trefoil_colored", c=k, presentation="second").value
            c.require(a == b, f"c={k}: {(a - b).to_text()}")
        h = hmot_at_q(census(["torus", "3", "2"], 2, (2,)), 2, (2,))
        c.require(verify_in_q(fixture("trefoil_c2").poly, [(2, h)]).ok, f"c=2 census {h.to_text()}")


def test_06_hopf_suite():
    with Criterion(6, "Hopf links at q=2,3 reproduced by enumeration", 60.0) as c:
        cases = [(["hopf", "2"], (1, 1), parse("(1 + a*q) + (q - 1)*t"))]
        cases += [(["hopf", "2"], (m, 1), closed_form("hopf2", m=m).value) for m in range(1, 5)]
        cases += [(["hopf", "3"], (1, 1, 1), fixture("hopf3").poly),
                  (["hopf", "3"], (2, 1, 1), fixture("hopf211").poly)]
        c.require(fixture("hopf2").poly == cases[0][2], "2-link fixture")
        for words, colors, expect in cases:
            evs = [(q, hmot_at_q(census(words, q, colors), q, colors)) for q in (2, 3)]
            c.require(verify_in_q(expect, evs).ok, f"{' '.join(words)} colors {colors}")


def test_07_double_trefoil():
    with Criterion(7, "T(6,4): rank decomposition equals H^daha; iteration; superduality", 5.0) as c:
        mot, daha = fixture("t64_mot"), fixture("t64_daha")
        c.require(parse(mot.display) == daha.poly, "displayed decomposition")
        c.require(check_iteration_identity(fixture("trefoil").poly, ONE, fixture("hopf2").poly).ok,
                  "(r,s)=(1,1)")
        c.require(check_iteration_identity(fixture("g4613").poly, fixture("trefoil_c2").poly,
                                           daha.poly).ok, "(r,s)=(3,2)")
        c.require(check_superduality(daha.poly, 8).ok, "superduality")


def test_08_superduality_battery():
    with Criterion(8, "superduality for every uncolored fixture", 5.0) as c:
        for fid in ("trefoil", "t52", "t73", "t94", "g4613", "t64_daha", "hopf2", "hopf3"):
            fx = fixture(fid)
            res = check_superduality(fx.poly, fx.delta)
            c.require(res.ok, f"{fid}: {res.witness.to_text()}")


def test_09_L_functions():
    with Criterion(9, "L for <2,3>, <2,5> at q=2,3: degree, FE, H=L, principal oracle", 60.0) as c:
        for words, fid in ((["torus", "3", "2"], "trefoil"), (["torus", "5", "2"], "t52")):
            for q in (2, 3):
                r = parse_preset(words, q)
                l = compute_L_at_q(r)
                c.require(l.L.degree("t") == 2 * r.delta, f"{fid} q={q} degree")
                c.require(check_functional_equation(l).ok, f"{fid} q={q} functional equation")
                c.require(check_H_equals_L(fixture(fid).poly, l).ok, f"{fid} q={q} H=L")
                c.require(zuniga_specialize(l) == principal_L(r), f"{fid} q={q} principal ideals")


def test_10_nonplanar_456():
    with Criterion(10, "<4,5,6>: tables, a=0 disagreement, a=-1/q agreement", 120.0) as c:
        for q in (2, 3):
            _table_check(c, fixture("g456_table"), q, census(["monomial", "4", "5", "6"], q))
        rows = {q: module_route_rows(parse_preset(["monomial", "4", "5", "6"], q))
                for q in (2, 3, 4, 5, 7)}
        sym = cell_rows_symbolic(rows)
        got = {(tuple(D), rk): v for D, rk, v in sym}
        for D, rk, term in fixture("g456_L_table").rows:
            c.require(got.get((tuple(D), rk)) == term, f"L row {list(D)}")
        c.require(len(got) == len(fixture("g456_L_table").rows), "L row count")
        L = psum(v * rank_product(1, rk) for D, rk, v in sym)
        h_mot, h_daha = fixture("g456_mot").poly, fixture("g456_daha").poly
        a0 = {"H^mot": bold_H_full(h_mot).substitute({"a": 0}),
              "L": L.substitute({"a": 0}),
              "H^daha": bold_H_full(h_daha).substitute({"a": 0})}
        c.require(a0["H^mot"] == fixture("g456_mot_a0").poly, "H^mot at a=0")
        c.require(a0["L"] == fixture("g456_L_a0").poly, "L at a=0")
        c.require(a0["H^daha"] == fixture("g456_daha_a0").poly, "H^daha at a=0")
        vals = list(a0.values())
        c.require(len({v.to_text() for v in vals}) == 3, "a=0 values must be pairwise different")
        m = mono(-1, q=-1)
        am = [bold_H_full(h_mot).substitute({"a": m}), L.substitute({"a": m}),
              bold_H_full(h_daha).substitute({"a": m})]
        c.require(am[0] == am[1] == am[2], "a=-1/q values must agree")


def test_11_rho_suite():
    with Criterion(11, "rho suite for <4,6,13>, cable additivity, rho/mu superduality", 5.0) as c:
        g = NumSemigroup([4, 6, 13])
        c.require(varrho_qt(g).evaluate(q=1, t=1) == 25, "varrho(1,1)")
        c.require(varrho_qt(g) == fixture("g4613_varrho").poly, "varrho(q,t)")
        c.require(mu_qt(g) == fixture("g4613_mu").poly, "mu(q,t)")
        cab = CableData(((3, 2), (2, 1)))
        c.require(rho_cable_additivity(cab) == varrho_qt(gamma_from_cable(cab)[0]).evaluate(q=1, t=1),
                  "Cab(13,2)T(3,2)")
        for r in range(2, 8):
            for s in range(2, 8):
                if r != s and gcd(r, s) == 1:
                    cb = CableData(((r, s),))
                    gg = gamma_from_cable(cb)[0]
                    c.require(rho_cable_additivity(cb) == varrho_qt(gg).evaluate(q=1, t=1),
                              f"T({r},{s})")
        for gens in ([2, 3], [3, 7], [4, 6, 13], [2, 5], [3, 5], [4, 6, 9], [6, 8, 11]):
            gg = NumSemigroup(gens)
            for name, f in (("varrho", varrho_qt(gg)), ("mu", mu_qt(gg))):
                c.require(qt_dual(f, gg.delta - 1) == f, f"{name} superduality for {gens}")


def test_12_weak_rh():
    with Criterion(12, "roots of H_0 at q=0.05 on |t|=q^(-1/2); extremal terms", 5.0) as c:
        for fid in ("t73", "g4613"):
            fx = fixture(fid)
            rep = weak_rh_roots(fx.poly, 0, Fraction(1, 20), tolerance=1e-6)
            c.require(rep.ok and len(rep.roots) > 0, f"{fid}: max deviation {rep.max_deviation:.2e}")
            ext = psum(mono(1, q=i, t=i) for i in range(fx.delta + 1))
            c.require(extremal_a0(fx.poly) == ext, f"{fid} extremal a=0 terms")
            c.require(check_extremal_a0(fx.poly, fx.delta).ok, f"{fid} extremal check")
            c.require(check_extremal_minus_t_over_q(fx.poly, fx.delta).ok, f"{fid} a=-t/q extremal")


def test_13_daha():
    with Criterion(13, "DAHA-Jones: T(3,2), word independence, symmetry, coincidence at a=-t^2", 60.0) as c:
        c.require(jd_torus_knot(3, 2)[0] == parse("1 + q*t - q*t^2"), "(3,2)")
        for r, s in ((3, 2), (5, 2), (7, 2), (4, 3)):
            base = jd_torus_knot(r, s)[0]
            c.require(jd_torus_knot(r, s, word=torus_word(r, s, "nearest"))[0] == base, f"word {r},{s}")
            c.require(jd_torus_knot(s, r)[0] == base, f"symmetry {r},{s}")
        hs = {(3, 2): fixture("trefoil").poly, (5, 2): fixture("t52").poly,
              (7, 2): closed_form("torus_2n1_uncolored", n=3).value}
        cen = {q: census(["torus", "4", "3"], q) for q in (2, 3, 4, 5)}
        hs[(4, 3)] = reconstruct_from_censuses(cen, delta=3).value
        for (r, s), h in hs.items():
            lhs = hat_normalize(h.substitute({"a": mono(-1, t=2)}))
            c.require(lhs == jd_torus_knot(r, s)[0], f"coincidence {r},{s}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
