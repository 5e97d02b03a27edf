"""Motivic superpolynomials: assembly from censuses, q-reconstruction,
closed forms, published fixtures and the identity checkers."""

from __future__ import annotations

import configparser
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .exactalg import (A, ONE, Q, T, ZERO, ExactPoly, mono, parse, pprod, psum,
                       qbinomial)


class IncompleteCensus(ValueError):
    pass


class NonIntegerReconstruction(ArithmeticError):
    pass


class InsufficientPoints(ValueError):
    pass


class UnknownFamily(KeyError):
    pass


class NotExpandable(ValueError):
    pass


class NumericalInstability(ArithmeticError):
    pass


@dataclass(frozen=True)
class Superpolynomial:
    value: ExactPoly
    provenance: str                    # closed-form, fixture or reconstructed
    points: Tuple[int, ...] = ()
    ring: str = ""
    colors: Tuple[int, ...] = (1,)
    delta: Optional[int] = None
    kappa: int = 1

    def to_json(self):
        return {"value": self.value.to_json(), "text": self.value.to_text(),
                "provenance": self.provenance, "points": list(self.points),
                "ring": self.ring, "colors": list(self.colors),
                "delta": self.delta, "kappa": self.kappa}


def _poly(h) -> ExactPoly:
    return h.value if isinstance(h, Superpolynomial) else h


@dataclass
class CheckResult:
    ok: bool
    witness: ExactPoly = ZERO
    detail: str = ""

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "witness": self.witness.to_text(), "detail": self.detail}


# products ----------------------------------------------------------------------

def rank_product(c: int, rk: int, q=None) -> ExactPoly:
    """prod_{i=c}^{rk-1} (1 + q^i a), with q symbolic or an integer."""
    if q is None:
        return pprod(ONE + A * Q ** i for i in range(c, rk))
    return pprod(ONE + A * (q ** i) for i in range(c, rk))


def diamond_product(d: int, q=None) -> ExactPoly:
    """prod_{i=0}^{d-1} (1 + q^i a / t)."""
    at = mono(1, t=-1, a=1)
    if q is None:
        return pprod(ONE + at * Q ** i for i in range(d))
    return pprod(ONE + at * (q ** i) for i in range(d))


# assembly from censuses ------------------------------------------------------------

def _totals(census) -> Counter:
    if isinstance(census, Counter):
        return census
    out = Counter()
    for c in census:
        out.update(c.counts)
    return out


def _check_complete(tot: Counter):
    # Omega is the only standard module of degree 0
    n0 = sum(n for (rk, dd, deg), n in tot.items() if deg == 0)
    if n0 != 1:
        raise IncompleteCensus(f"{n0} modules of degree 0; expected exactly one")


def hmot_at_q(census, q: int, colors: Sequence[int] = (1,)) -> ExactPoly:
    """sum_M t^deg prod_{i=c1}^{rk-1}(1+q^i a) at a fixed q."""
    tot = _totals(census)
    _check_complete(tot)
    c1 = max(colors)
    out = ZERO
    for (rk, dd, deg), n in sorted(tot.items()):
        out = out + mono(n, t=deg) * rank_product(c1, rk, q)
    return out


def hmot_second_at_q(census, q: int) -> ExactPoly:
    """sum_M t^deg prod_{i<d_diamond(M)}(1+q^i a/t) at a fixed q."""
    tot = _totals(census)
    _check_complete(tot)
    out = ZERO
    for (rk, dd, deg), n in sorted(tot.items()):
        out = out + mono(n, t=deg) * diamond_product(dd, q)
    return out


def hmot_from_flags(flag_counts: Counter) -> ExactPoly:
    """sum over standard flags of t^deg(M_l) a^l."""
    return psum(mono(n, t=deg, a=l) for (l, deg), n in flag_counts.items())


def compute_hmot(r, budget=None, jobs=None):
    """Census of a ring and its superpolynomial at the ring's q."""
    from .modcount import DEFAULT_BUDGET, enumerate_all_standard
    cells = enumerate_all_standard(r, budget=budget or DEFAULT_BUDGET, jobs=jobs)
    return cells, hmot_at_q(cells, r.q, r.colors)


# interpolation in q --------------------------------------------------------------

def _lagrange(xs: Sequence[int], ys: Sequence[Fraction]) -> List[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _interpolate_int(xs, ys, what="") -> List[int]:
    co = _lagrange(xs, ys)
    if any(c.denominator != 1 for c in co):
        raise NonIntegerReconstruction(f"non-integer q-coefficients {what}")
    return [int(c) for c in co]


def default_degree_bound(delta: int, c1: int = 1, rk_max: int = 0) -> int:
    return delta * c1 * c1 + rk_max


def reconstruct_in_q(evaluations: Sequence[Tuple[int, ExactPoly]], degree_bound: int,
                     ring: str = "", colors=(1,), delta=None, kappa=1) -> Superpolynomial:
    """Coefficient-wise interpolation in q of t,a-polynomials.

    The first degree_bound+1 points determine the answer; any further
    points must agree with it.
    """
    pts = sorted(evaluations, key=lambda p: p[0])
    if len(pts) < degree_bound + 1:
        raise InsufficientPoints(f"{len(pts)} points for degree {degree_bound}")
    used, extra = pts[:degree_bound + 1], pts[degree_bound + 1:]
    keys = set()
    for _, h in pts:
        keys.update(h.terms)
    xs = [x for x, _ in used]
    out = {}
    for key in keys:
        if key[0]:
            raise ValueError("evaluations must be free of q")
        ys = [Fraction(h.terms.get(key, 0)) for _, h in used]
        for k, c in enumerate(_interpolate_int(xs, ys, f"at t,a-exponent {key}")):
            if c:
                out[(4 * k, key[1], key[2])] = c
    value = ExactPoly(out)
    for x, h in extra:
        if value.substitute({"q": x}) != h:
            raise NonIntegerReconstruction(f"interpolant disagrees with the point q={x}")
    return Superpolynomial(value, "reconstructed", tuple(x for x, _ in pts), ring,
                           tuple(colors), delta, kappa)


def verify_in_q(candidate, evaluations) -> CheckResult:
    """Compare a symbolic candidate to fixed-q values."""
    cand = _poly(candidate)
    for x, h in evaluations:
        diff = cand.substitute({"q": x}) - h
        if diff:
            return CheckResult(False, diff, f"mismatch at q={x}")
    return CheckResult(True, ZERO, f"agrees at q in {sorted(x for x, _ in evaluations)}")


def stratum_counts(census) -> Counter:
    """Module counts keyed by (rk, deg)."""
    out = Counter()
    for (rk, dd, deg), n in _totals(census).items():
        out[(rk, deg)] += n
    return out


def reconstruct_from_censuses(census_by_q: Dict[int, object], colors=(1,),
                              degree_bound: Optional[int] = None, delta=None,
                              ring: str = "", kappa: int = 1) -> Superpolynomial:
    """Interpolate each (rk, deg) stratum count in q, then reassemble.

    A stratum count is at most the number of invertible modules, whose
    q-degree is delta*c1^2, so that is the default bound here.
    """
    c1 = max(colors)
    if degree_bound is None:
        if delta is None:
            raise ValueError("delta or degree_bound is required")
        degree_bound = delta * c1 * c1
    xs = sorted(census_by_q)
    if len(xs) < degree_bound + 1:
        raise InsufficientPoints(f"{len(xs)} points for degree {degree_bound}")
    strata = {x: stratum_counts(census_by_q[x]) for x in xs}
    for x in xs:
        _check_complete(_totals(census_by_q[x]))
    keys = sorted(set().union(*[set(s) for s in strata.values()]))
    used, extra = xs[:degree_bound + 1], xs[degree_bound + 1:]
    value = ZERO
    for key in keys:
        co = _interpolate_int(used, [Fraction(strata[x].get(key, 0)) for x in used],
                              f"for stratum {key}")
        count = psum(mono(c, q=k) for k, c in enumerate(co) if c)
        for x in extra:
            if count.evaluate(q=x) != strata[x].get(key, 0):
                raise NonIntegerReconstruction(f"stratum {key} is not polynomial through q={x}")
        rk, deg = key
        value = value + count * mono(1, t=deg) * rank_product(c1, rk)
    return Superpolynomial(value, "reconstructed", tuple(xs), ring, tuple(colors), delta, kappa)


# fixtures --------------------------------------------------------------------------

@dataclass
class Fixture:
    id: str
    kind: str
    ring: str
    source: str
    poly: Optional[ExactPoly] = None
    text: str = ""
    display: str = ""
    delta: Optional[int] = None
    kappa: int = 1
    colors: Tuple[int, ...] = (1,)
    tags: Tuple[str, ...] = ()
    rows: List[tuple] = field(default_factory=list)

    def superpolynomial(self) -> Superpolynomial:
        if self.poly is None:
            raise ValueError(f"fixture {self.id} is a table")
        return Superpolynomial(self.poly, "fixture", (), self.ring, self.colors,
                               self.delta, self.kappa)


def _parse_D(text):
    text = text.strip().strip("[]").strip()
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_fixture_file(text: str) -> Dict[str, Fixture]:
    cp = configparser.ConfigParser(interpolation=None)
    cp.read_string(text)
    out = {}
    for sec in cp.sections():
        s = cp[sec]
        fx = Fixture(sec, s.get("kind", ""), s.get("ring", ""), s.get("source", ""))
        fx.tags = tuple(s.get("tags", "").split())
        if "delta" in s:
            fx.delta = int(s["delta"])
        fx.kappa = int(s.get("kappa", "1"))
        fx.colors = tuple(int(c) for c in s.get("colors", "1").split(","))
        if "poly" in s:
            fx.text = s["poly"].strip()
            fx.poly = parse(fx.text)
            fx.display = s.get("display", "").strip()
        if "rows" in s:
            for line in s["rows"].strip().splitlines():
                parts = [p.strip() for p in line.split("|")]
                D = _parse_D(parts[0])
                if fx.kind == "table":
                    fx.rows.append((D, int(parts[1]), parse(parts[2])))
                else:
                    fx.rows.append((D, None if parts[1] == "-" else int(parts[1])))
        out[sec] = fx
    return out


@lru_cache(maxsize=None)
def _builtin_text() -> str:
    return resources.files("curvelink").joinpath("data/fixtures.ini").read_text()


def load_fixtures(path: Optional[str] = None) -> Dict[str, Fixture]:
    if path is None:
        return parse_fixture_file(_builtin_text())
    with open(path) as fh:
        return parse_fixture_file(fh.read())


def fixture(fid: str) -> Fixture:
    fx = load_fixtures()
    if fid not in fx:
        raise KeyError(f"no fixture {fid!r}")
    return fx[fid]


def fixture_poly(fid: str) -> ExactPoly:
    return fixture(fid).poly


# closed forms ----------------------------------------------------------------------

def _trefoil_colored_main(c: int) -> ExactPoly:
    return psum(Q ** (c * k) * T ** k * qbinomial(c, k) * rank_product(c, 2 * c - k)
                for k in range(c + 1))


def _trefoil_colored_second(c: int) -> ExactPoly:
    return psum(Q ** (c * k) * T ** k * qbinomial(c, k) * diamond_product(k)
                for k in range(c + 1))


def _torus_2n1_c2(n: int) -> ExactPoly:
    A0 = mono(1, q=4 * n, t=2 * n)
    A1 = mono(1, q=3 * n - 1, t=n) * (ONE + Q) * psum((Q * T) ** i for i in range(n))
    A2 = (psum(T ** i * Q ** (2 * i) * psum(Q ** j for j in range(i + 1)) for i in range(n))
          + psum(T ** i * Q ** (2 * i) * psum(Q ** j for j in range(2 * n - 1 - i))
                 for i in range(n, 2 * n - 1)))
    p2 = ONE + A * Q ** 2
    return A0 + A1 * p2 + A2 * p2 * (ONE + A * Q ** 3)


_FIXTURE_FAMILIES = {
    "double_trefoil_fixture": "t64_daha",
    "t94_fixture": "t94",
    "g4613_fixture": "g4613",
    "t73_fixture": "t73",
}

FAMILIES = ("trefoil_colored", "torus_2n1_uncolored", "torus_2n1_c2", "hopf2",
            "hopf3", "hopf3_colored_211") + tuple(_FIXTURE_FAMILIES)


def closed_form(family: str, **params) -> Superpolynomial:
    """Published formula for a family; see FAMILIES for the tags.

    trefoil_colored takes c and presentation='main' or 'second'.
    """
    if family == "trefoil_colored":
        c = int(params.get("c", 1))
        pres = params.get("presentation", "main")
        v = _trefoil_colored_main(c) if pres == "main" else _trefoil_colored_second(c)
        return Superpolynomial(v, "closed-form", (), "torus 3 2", (c,), 1, 1)
    if family == "torus_2n1_uncolored":
        n = int(params["n"])
        v = (Q * T) ** n + psum((Q * T) ** i for i in range(n)) * (ONE + A * Q)
        return Superpolynomial(v, "closed-form", (), f"torus {2 * n + 1} 2", (1,), n, 1)
    if family == "torus_2n1_c2":
        n = int(params["n"])
        return Superpolynomial(_torus_2n1_c2(n), "closed-form", (), f"torus {2 * n + 1} 2",
                               (2,), n, 1)
    if family == "hopf2":
        m = int(params.get("m", 1))
        v = (ONE + A * Q ** m) + (Q ** m - 1) * T
        return Superpolynomial(v, "closed-form", (), "hopf 2", (m, 1), 1 if m == 1 else None, 2)
    if family == "hopf3":
        return fixture("hopf3").superpolynomial()
    if family == "hopf3_colored_211":
        return fixture("hopf211").superpolynomial()
    if family in _FIXTURE_FAMILIES:
        return fixture(_FIXTURE_FAMILIES[family]).superpolynomial()
    raise UnknownFamily(family)


# decompositions --------------------------------------------------------------------

def _a_top(h: ExactPoly) -> int:
    return int(h.degree("a")) if h else -1


def decompose_rank(h, style: str = "first", c: int = 1) -> List[Tuple[ExactPoly, tuple]]:
    """Triangular expansion of h in rank products.

    first:  h = sum_r C_r prod_{i=c}^{r-1}(1+q^i a); descriptor ("rank", c, r)
    second: h = sum_d C_d prod_{i<d}(1+q^i a/t);   descriptor ("diamond", d)
    Coefficients are returned verbatim, negative terms included.
    """
    hp = _poly(h)
    if style == "second":
        if isinstance(h, Superpolynomial) and h.kappa > 1:
            raise NotExpandable("the second decomposition is for knots")
    elif style != "first":
        raise ValueError(f"unknown style {style!r}")
    if hp and hp.min_degree("a") < 0:
        raise NotExpandable("negative powers of a")
    rest = hp
    out = []
    while rest:
        d = _a_top(rest)
        top = rest.coefficient_of("a", d)
        if style == "first":
            lead = mono(1, q=sum(range(c, c + d)))
            coef = top.div_exact(lead)
            prod = rank_product(c, c + d)
            desc = ("rank", c, c + d)
        else:
            lead = mono(1, q=d * (d - 1) // 2, t=-d)
            coef = top.div_exact(lead)
            prod = diamond_product(d)
            desc = ("diamond", d)
        out.append((coef, desc))
        rest = rest - coef * prod
        if rest and _a_top(rest) >= d:
            raise NotExpandable("expansion did not terminate")
    out.sort(key=lambda p: p[1][-1])
    return out


def describe_product(desc: tuple) -> str:
    if desc[0] == "rank":
        _, c, r = desc
        return "".join(f"(1+a*q^{i})" if i != 1 else "(1+a*q)" for i in range(c, r)) or "1"
    d = desc[1]
    return "".join("(1+a/t)" if i == 0 else ("(1+a*q/t)" if i == 1 else f"(1+a*q^{i}/t)")
                   for i in range(d)) or "1"


def recompose(parts) -> ExactPoly:
    out = ZERO
    for coef, desc in parts:
        if desc[0] == "rank":
            out = out + coef * rank_product(desc[1], desc[2])
        else:
            out = out + coef * diamond_product(desc[1])
    return out


def census_rank_decomposition(census, colors=(1,), q: Optional[int] = None):
    """Coefficients of the rank products read off a census, keyed by rk."""
    c1 = max(colors)
    out: Dict[int, ExactPoly] = {}
    for (rk, dd, deg), n in _totals(census).items():
        out[rk] = out.get(rk, ZERO) + mono(n, t=deg)
    return [(out[rk], ("rank", c1, rk)) for rk in sorted(out)]


# checkers --------------------------------------------------------------------------

_QI = mono(1, q=-1)
_TI = mono(1, t=-1)


def superdual(h, delta: int) -> ExactPoly:
    hp = _poly(h)
    return mono(1, q=delta, t=delta) * hp.substitute({"q": _TI, "t": _QI})


def check_superduality(h, delta: int) -> CheckResult:
    """q^delta t^delta h(1/t, 1/q, a) == h."""
    hp = _poly(h)
    diff = superdual(hp, delta) - hp
    return CheckResult(not diff, diff, f"delta={delta}")


def check_iteration_identity(h_cable, h_colored2, h_link) -> CheckResult:
    """(1+aq) h_colored2 + (q-1) h_cable == q h_link."""
    lhs = (ONE + A * Q) * _poly(h_colored2) + (Q - 1) * _poly(h_cable)
    diff = lhs - Q * _poly(h_link)
    return CheckResult(not diff, diff, "")


def check_minus_t(h) -> CheckResult:
    """For knots colored by rows, h(q,t,-t) = 1."""
    v = _poly(h).substitute({"a": -T})
    return CheckResult(v == ONE, v - ONE, "a=-t")


def check_invertibles(h, delta: int, c: int = 1, kappa: int = 1) -> CheckResult:
    """a = -q^{-c} leaves only invertible modules."""
    v = _poly(h).substitute({"a": mono(-1, q=-c)})
    if kappa == 1:
        want = mono(1, q=delta * c * c, t=delta * c)
    else:
        if c != 1:
            raise ValueError("the multibranch form is for uncolored links")
        want = (Q - 1) ** (kappa - 1) * mono(1, q=delta - kappa + 1, t=delta)
    return CheckResult(v == want, v - want, f"a=-q^-{c}")


def t_coefficient_a0(h) -> ExactPoly:
    return _poly(h).substitute({"a": 0}).coefficient_of("t", 1)


def extremal_a0(h) -> ExactPoly:
    """Terms q^i t^j of h(q,t,0) with i = j."""
    v = _poly(h).substitute({"a": 0})
    return v.filter_terms(lambda i, j, k: i == j)


def check_extremal_a0(h, delta: int) -> CheckResult:
    v = _poly(h).substitute({"a": 0})
    bad = v.filter_terms(lambda i, j, k: i < j)
    ext = extremal_a0(h)
    want = psum((Q * T) ** i for i in range(delta + 1))
    ok = not bad and ext == want
    return CheckResult(ok, (ext - want) + bad, "i>=j, diagonal = sum (qt)^i")


def extremal_minus_t_over_q(h) -> Tuple[ExactPoly, ExactPoly]:
    """(terms with i+1 = j, terms with i+1 < j) of h(q,t,-t/q)."""
    v = _poly(h).substitute({"a": mono(-1, q=-1, t=1)})
    ext = v.filter_terms(lambda i, j, k: i + 1 == j)
    bad = v.filter_terms(lambda i, j, k: i + 1 < j)
    return ext, bad


def check_extremal_minus_t_over_q(h, delta: int) -> CheckResult:
    ext, bad = extremal_minus_t_over_q(h)
    want = -T if delta == 1 else -T - mono(1, q=delta - 1, t=delta)
    ok = not bad and ext == want
    return CheckResult(ok, (ext - want) + bad, "i+1>=j, boundary terms")


# weak RH -----------------------------------------------------------------------------

@dataclass
class RootReport:
    k: int
    q_value: Fraction
    roots: List[complex]
    deviations: List[float]
    tolerance: float
    zero_roots: int

    @property
    def max_deviation(self) -> float:
        return max(self.deviations) if self.deviations else 0.0

    @property
    def on_circle(self) -> int:
        return sum(1 for d in self.deviations if d < self.tolerance)

    @property
    def ok(self) -> bool:
        return self.on_circle == len(self.deviations)

    def to_json(self):
        return {"k": self.k, "q": str(self.q_value), "tolerance": self.tolerance,
                "max_deviation": self.max_deviation, "on_circle": self.on_circle,
                "nonzero_roots": len(self.roots), "zero_roots": self.zero_roots,
                "roots": [[z.real, z.imag] for z in self.roots], "ok": self.ok}


def bold_H(h, k: int) -> ExactPoly:
    """Coefficient of a^k in h(qt, t, a)."""
    return _poly(h).substitute({"q": Q * T}).coefficient_of("a", k)


def weak_rh_roots(h, k: int = 0, q_value=Fraction(1, 20), tolerance: float = 1e-9,
                  dps: int = 40) -> RootReport:
    """t-roots of bold H_k at a numeric q, with | |z| sqrt(q) - 1 | per root."""
    import mpmath

    qv = Fraction(q_value)
    if not (0 < qv <= Fraction(1, 2)):
        raise ValueError("q must lie in (0, 1/2]")
    Hk = bold_H(h, k)
    coeffs: Dict[int, Fraction] = {}
    for c, eq, et, ea in Hk.monomials():
        if eq.denominator != 1 or et.denominator != 1:
            raise ValueError("integral exponents expected")
        coeffs[int(et)] = coeffs.get(int(et), Fraction(0)) + c * qv ** int(eq)
    coeffs = {e: v for e, v in coeffs.items() if v}
    if not coeffs:
        raise ValueError("H_k vanishes")
    lo, hi = min(coeffs), max(coeffs)
    with mpmath.workdps(dps):
        poly = [mpmath.mpf(coeffs.get(e, 0).numerator) / coeffs.get(e, 1).denominator
                if e in coeffs else mpmath.mpf(0) for e in range(hi, lo - 1, -1)]
        if len(poly) == 1:
            roots = []
        else:
            try:
                roots = mpmath.polyroots(poly, maxsteps=400, extraprec=2 * dps)
            except mpmath.libmp.libhyper.NoConvergence as exc:
                raise NumericalInstability(str(exc))
        sq = mpmath.sqrt(mpmath.mpf(qv.numerator) / qv.denominator)
        devs = [float(abs(abs(z) * sq - 1)) for z in roots]
        roots = [complex(z) for z in roots]
    return RootReport(k, qv, roots, devs, tolerance, lo)
