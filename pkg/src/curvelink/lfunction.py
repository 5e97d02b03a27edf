"""L-functions of plane curve singularities and the deformed delta, mu, rho.

L is assembled from ideal counts over F_q in two independent ways:

* ideals: brute-force enumeration of all ideals of small colength, then
  (1-t)^kappa times the truncated zeta series;
* modules (unibranch): every ideal is z^v N for a unique standard module N
  and shift v with z^v N inside R, and colength(z^v N) = v + deg N - delta.
  For v >= conductor the condition always holds, which sums the tail.

Variables: L and the bold H(q,t,a) = H(qt,t,a) use q_new; the rho
invariants use the q,t of the superpolynomial.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .exactalg import (A, ONE, Q, T, ZERO, ExactPoly, FqEchelon, mono,
                       pprod, psum)
from .semigroup import CableData, NotGorenstein, NumSemigroup, gamma_from_cable
from .superpoly import (CheckResult, _interpolate_int, _poly)


class DegreeVerificationFailed(ArithmeticError):
    pass


class PrincipalOracleMismatch(AssertionError):
    pass


@dataclass
class LFunction:
    L: ExactPoly
    kappa: int
    delta: int
    q_evaluated: Optional[int] = None
    colength_bound: Optional[int] = None
    route: str = "ideals"
    with_a: bool = True

    def to_json(self):
        return {"L": self.L.to_json(), "text": self.L.to_text(), "kappa": self.kappa,
                "delta": self.delta, "q_evaluated": self.q_evaluated,
                "colength_bound": self.colength_bound, "route": self.route,
                "with_a": self.with_a, "convention": "L(q,t,a) with q_new = q/t"}


def _weight(rk: int, q) -> ExactPoly:
    if q is None:
        return pprod(ONE + A * Q ** i for i in range(1, rk))
    return pprod(ONE + A * (q ** i) for i in range(1, rk))


def _truncate(p: ExactPoly, top: int) -> ExactPoly:
    return p.filter_terms(lambda i, j, k: j <= top)


def _assemble(series: ExactPoly, kappa: int, delta: int, bound: int) -> ExactPoly:
    """(1-t)^kappa * series mod t^(bound+1); the slack above 2 delta must vanish."""
    L = _truncate(series * (ONE - T) ** kappa, bound)
    extra = L.filter_terms(lambda i, j, k: j > 2 * delta)
    if extra:
        raise DegreeVerificationFailed(f"L has terms above t^{2 * delta}: {extra.to_text()}")
    return L


def compute_L_at_q(r, with_a: bool = True, slack: int = 2, budget=None, jobs=None) -> LFunction:
    """L at the ring's q from a brute-force ideal census."""
    from .modcount import DEFAULT_BUDGET, enumerate_ideals
    delta = r.delta
    bound = 2 * delta + slack
    counts = enumerate_ideals(r, bound, budget=budget or DEFAULT_BUDGET, jobs=jobs)
    series = ZERO
    for (col, rk), n in counts.items():
        w = _weight(rk, r.q) if with_a else ONE
        series = series + mono(n, t=col) * w
    L = _assemble(series, r.kappa, delta, bound)
    if not with_a:
        # the rank weights at a = 0 are all 1
        L = L.substitute({"a": 0})
    return LFunction(L, r.kappa, delta, r.q, bound, "ideals", with_a)


# the module route ----------------------------------------------------------------

def module_route_rows(r, budget=None, jobs=None) -> List[Tuple[object, Counter]]:
    """Per cell of standard modules: Counter[(rk, row)] with row the t-polynomial
    (1-t) sum_v t^colength(z^v N), summed over the modules N of that rank.

    Only for uncolored unibranch rings.
    """
    from .modcount import DEFAULT_BUDGET, enumerate_all_standard, module_ambient
    if r.kappa != 1 or r.tau != 1:
        raise ValueError("the module route is for uncolored unibranch rings")
    delta = r.delta
    c = r.ring_data.conductor[0]
    amb = module_ambient(r)
    F = amb.field
    n = amb.size
    mpos, ech = r.echelon_at([c])
    # R modulo the conductor, over F_q
    Rc = FqEchelon(F, c)
    for row in ech.rows.values():
        Rc.insert([F.from_int(x) for x in row])
    cells = enumerate_all_standard(r, budget=budget or DEFAULT_BUDGET, jobs=jobs, keep=True)
    out = []
    for cen in cells:
        rows: Dict[int, ExactPoly] = defaultdict(lambda: ZERO)
        for lf in cen.leaves:
            vecs = []
            for p in lf.pivots:
                if p in amb.frozen:
                    continue
                v = [0] * n
                v[p] = 1
                for s, cs in enumerate(lf.rows.get(p, ())):
                    if cs:
                        v[lf.np_list[s]] = cs
                vecs.append(v)
            ok = []
            for shift in range(c):
                good = True
                for v in vecs:
                    w = [0] * c
                    for k in range(c - shift):
                        w[k + shift] = v[k]
                    if not Rc.contains(w):
                        good = False
                        break
                if good:
                    ok.append(shift)
            base = lf.deg - delta
            part = psum(mono(1, t=shift + base) for shift in ok)
            rows[lf.rk] = rows[lf.rk] + (ONE - T) * part + mono(1, t=c + base)
        out.append((cen.delta_D, Counter(dict(rows))))
    return out


def compute_L_by_modules(r, with_a: bool = True, budget=None, jobs=None) -> LFunction:
    L = ZERO
    for _, rows in module_route_rows(r, budget, jobs):
        for rk, row in rows.items():
            L = L + row * (_weight(rk, r.q) if with_a else ONE)
    extra = L.filter_terms(lambda i, j, k: j > 2 * r.delta or j < 0)
    if extra:
        raise DegreeVerificationFailed(f"L leaves [0, 2delta]: {extra.to_text()}")
    return LFunction(L, 1, r.delta, r.q, None, "modules", with_a)


def cell_rows_symbolic(rows_by_q: Dict[int, list], degree_bound: int = 4):
    """Interpolate per-cell rows in q; rows_by_q[q] is module_route_rows output.

    Returns a list of (D, rk, row polynomial in q, t).  Extra points past
    degree_bound + 1 must agree with the interpolant.
    """
    qs = sorted(rows_by_q)
    if len(qs) < degree_bound + 1:
        raise ValueError(f"{len(qs)} points for degree {degree_bound}")
    used = qs[:degree_bound + 1]
    keyed = {}
    for qv in qs:
        for D, rows in rows_by_q[qv]:
            for rk, row in rows.items():
                keyed.setdefault((str(D), rk), (D, {}))[1][qv] = row
    out = []
    for (_, rk), (D, per_q) in sorted(keyed.items(), key=lambda kv: (len(kv[1][0]), kv[0])):
        tpowers = set()
        for row in per_q.values():
            tpowers.update(j for _, _, j, _ in row.monomials())
        sym = ZERO
        for j in sorted(tpowers):
            ys = [Fraction(per_q.get(qv, ZERO).coeff(t=j)) for qv in used]
            for k, cf in enumerate(_interpolate_int(used, ys, f"for cell {D}")):
                if cf:
                    sym = sym + mono(cf, q=k, t=j)
        for qv in qs[degree_bound + 1:]:
            if sym.substitute({"q": qv}) != per_q.get(qv, ZERO):
                raise ValueError(f"cell {D} row is not polynomial through q={qv}")
        out.append((D, rk, sym))
    return out


# checks ------------------------------------------------------------------------------

def _Lpoly(l) -> ExactPoly:
    return l.L if isinstance(l, LFunction) else l


def check_functional_equation(l, delta: Optional[int] = None, q_value: Optional[int] = None
                              ) -> CheckResult:
    """q^delta t^(2 delta) L(q, 1/(qt), a) == L(q, t, a)."""
    L = _Lpoly(l)
    if delta is None:
        delta = l.delta
    if q_value is None and isinstance(l, LFunction):
        q_value = l.q_evaluated
    if q_value is None:
        img = mono(1, q=delta, t=2 * delta) * L.substitute({"t": mono(1, q=-1, t=-1)})
    else:
        # L holds numbers for q; t -> 1/(q t) then rescale the coefficients
        acc = ZERO
        for cf, eq, et, ea in L.monomials():
            j = int(et)
            val = Fraction(cf) * Fraction(q_value) ** (delta - j)
            if val.denominator != 1:
                return CheckResult(False, L, "non-integral image")
            acc = acc + mono(int(val), t=2 * delta - j, a=ea)
        img = acc
    diff = img - L
    return CheckResult(not diff, diff, f"delta={delta}")


def _specialize_a(L: ExactPoly, q_value: Optional[int], a_num: Fraction) -> ExactPoly:
    """L at a = a_num * q^(-1); q numeric or symbolic."""
    if q_value is None:
        return L.substitute({"a": mono(int(a_num), q=-1)})
    acc: Dict[int, Fraction] = defaultdict(Fraction)
    for cf, eq, et, ea in L.monomials():
        acc[int(et)] += Fraction(cf) * (a_num / q_value) ** ea * Fraction(q_value) ** int(eq)
    out = ZERO
    for j, v in acc.items():
        if v.denominator != 1:
            raise ArithmeticError("non-integral specialization")
        out = out + mono(int(v), t=j)
    return out


def principal_L(r, slack: int = 2) -> ExactPoly:
    """(1-t)^kappa sum over principal ideals fR of t^colength."""
    from .modcount import principal_ideal_counts
    bound = 2 * r.delta + slack
    counts = principal_ideal_counts(r, bound)
    series = psum(mono(n, t=col) for col, n in counts.items())
    return _assemble(series, r.kappa, r.delta, bound)


def zuniga_specialize(l: LFunction, r=None) -> ExactPoly:
    """L(a = -1/q); with a ring, also checked against principal ideals."""
    val = _specialize_a(l.L, l.q_evaluated, Fraction(-1))
    if r is not None:
        oracle = principal_L(r)
        if oracle != val:
            raise PrincipalOracleMismatch(f"L(a=-1/q) = {val.to_text()}, "
                                          f"principal ideals give {oracle.to_text()}")
    return val


def check_H_equals_L(h, l, a_value: Optional[str] = None) -> CheckResult:
    """H(qt, t, a) against L(q, t, a); a_value in {None, '0', '-1/q'}."""
    Hb = bold_H_full(h)
    L = _Lpoly(l)
    qv = l.q_evaluated if isinstance(l, LFunction) else None
    if qv is not None:
        Hb = Hb.substitute({"q": qv})
    if a_value == "0":
        Hb, L = Hb.substitute({"a": 0}), L.substitute({"a": 0})
    elif a_value == "-1/q":
        if qv is None:
            Hb = Hb.substitute({"a": mono(-1, q=-1)})
            L = L.substitute({"a": mono(-1, q=-1)})
        else:
            Hb = _specialize_a(Hb, qv, Fraction(-1))
            L = _specialize_a(L, qv, Fraction(-1))
    elif a_value is not None:
        raise ValueError(f"unsupported a value {a_value!r}")
    diff = Hb - L
    return CheckResult(not diff, diff, "H(qt,t,a) - L")


def bold_H_full(h) -> ExactPoly:
    return _poly(h).substitute({"q": Q * T})


# deformed delta, mu, rho -----------------------------------------------------------

@dataclass
class RhoInvariant:
    variant: str    # delta_qt, mu_qt, varrho_qt, R_K
    value: ExactPoly
    source: str = ""

    def to_json(self):
        return {"variant": self.variant, "value": self.value.to_text(), "source": self.source,
                "at_1_1": str(self.value.evaluate(q=1, t=1, a=1)) if self.variant == "R_K"
                else str(self.value.evaluate(q=1, t=1)),
                "convention": "q,t of the superpolynomial"}


def _geom(lo: int, hi: int) -> ExactPoly:
    """(t^lo - t^hi)/(1 - t) for lo <= hi."""
    return psum(mono(1, t=j) for j in range(lo, hi))


def gap_runs(g: NumSemigroup) -> List[Tuple[int, int]]:
    runs = []
    for x in g.gaps:
        if runs and runs[-1][1] == x - 1:
            runs[-1] = (runs[-1][0], x)
        else:
            runs.append((x, x))
    return runs


def delta_qt(g: NumSemigroup) -> ExactPoly:
    """Gap-run formula for the deformed delta."""
    runs = gap_runs(g)
    if not runs:
        return ZERO
    out = _geom(0, runs[0][0])
    m = 0
    for i in range(len(runs) - 1):
        m += runs[i][1] - runs[i][0] + 1
        out = out + _geom(runs[i][1] + 1, runs[i + 1][0]) * mono(1, q=m, t=-m)
    return out


def _v(g: NumSemigroup, x: int) -> int:
    return sum(1 for n in range(x + 1) if n in g)


def _gcount(g: NumSemigroup, x: int) -> int:
    return sum(1 for y in g.gaps if y < x)


def mu_qt(g: NumSemigroup) -> ExactPoly:
    return psum(mono(1, q=_gcount(g, x), t=_v(g, x) - 1) for x in range(2 * g.delta))


def varrho_qt(g: NumSemigroup) -> ExactPoly:
    return psum(mono(1, q=_gcount(g, x), t=_v(g, y) - 1)
                for x in g.gaps for y in range(x) if y in g)


def qt_dual(f: ExactPoly, shift: int) -> ExactPoly:
    """(qt)^shift f(1/t, 1/q)."""
    return mono(1, q=shift, t=shift) * f.substitute({"q": mono(1, t=-1), "t": mono(1, q=-1)})


def delta_from_H(h, delta: int) -> ExactPoly:
    num = _poly(h).substitute({"a": mono(-1, q=-1, t=1)}) - mono(1, q=delta, t=delta)
    return num.div_exact(ONE - T)


def varrho_from_H(h, delta: int) -> ExactPoly:
    num = _poly(h).substitute({"a": mono(-1, q=-1, t=1)}) - mono(1, q=delta)
    return num.div_exact((ONE - T) * (ONE - Q))


def R_K(h, delta: int) -> ExactPoly:
    """(H(q,t,a) - t^delta H(q/t,1,a)) / ((1-q)(1-t)).

    This is the super-rho written in the superpolynomial's q; its value at
    a = -t/q is varrho(q,t).
    """
    hp = _poly(h)
    num = hp - mono(1, t=delta) * hp.substitute({"q": mono(1, q=1, t=-1), "t": 1})
    return num.div_exact((ONE - Q) * (ONE - T))


def varpi(g: NumSemigroup) -> int:
    return sum(1 for x in range(g.conductor) if x in g and x + 1 not in g)


def rho_suite(g: NumSemigroup, h=None, with_R: bool = True) -> List[RhoInvariant]:
    """delta(q,t), mu(q,t), varrho(q,t) and, given h, R_K.

    Every value is computed twice where a second route exists; a mismatch
    raises AssertionError.
    """
    if not g.is_gorenstein:
        raise NotGorenstein(f"{g.generators} is not symmetric")
    d = g.delta
    dq = delta_qt(g)
    mu = mu_qt(g)
    if mu != dq + qt_dual(dq, d - 1):
        raise AssertionError("mu(q,t) disagrees with delta(q,t) + its dual")
    rho = varrho_qt(g)
    if rho != psum(mono(1, q=_gcount(g, x)) * _geom(0, _v(g, x)) for x in g.gaps):
        raise AssertionError("varrho(q,t) sums disagree")
    out = [RhoInvariant("delta_qt", dq, "gap runs"), RhoInvariant("mu_qt", mu, "valuations"),
           RhoInvariant("varrho_qt", rho, "gap-member pairs")]
    if h is not None:
        if delta_from_H(h, d) != dq:
            raise AssertionError("delta(q,t) disagrees with H at a=-t/q")
        if varrho_from_H(h, d) != rho:
            raise AssertionError("varrho(q,t) disagrees with H at a=-t/q")
        if with_R:
            R = R_K(h, d)
            if R.substitute({"a": mono(-1, q=-1, t=1)}) != rho:
                raise AssertionError("R_K at a=-t/q is not varrho")
            out.append(RhoInvariant("R_K", R, "superpolynomial"))
    return out


def rho_cable_additivity(cable: CableData) -> Fraction:
    """(1/24) sum_i upsilon_i^2 (a_i^2 - 1)(r_i^2 - 1)."""
    ups, a, r = cable.upsilon, cable.a, cable.r
    return Fraction(sum(u * u * (ai * ai - 1) * (ri * ri - 1) for u, ai, ri in zip(ups, a, r)), 24)


def check_rho_additivity(cable: CableData) -> CheckResult:
    g, _ = gamma_from_cable(cable)
    v = varrho_qt(g).evaluate(q=1, t=1)
    w = rho_cable_additivity(cable)
    return CheckResult(v == w, ZERO if v == w else mono(1), f"varrho(1,1)={v}, weighted sum={w}")


def nonplanar_check(h_daha, g: NumSemigroup) -> CheckResult:
    """H^daha(q,t,-t/q) == (1-q)(1-t) varrho(q,t) + q^delta."""
    lhs = _poly(h_daha).substitute({"a": mono(-1, q=-1, t=1)})
    rhs = (ONE - Q) * (ONE - T) * varrho_qt(g) + mono(1, q=g.delta)
    diff = lhs - rhs
    return CheckResult(not diff, diff, "a=-t/q")
