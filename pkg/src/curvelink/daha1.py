"""The A1 double affine Hecke algebra and DAHA-Jones polynomials of torus knots.

Elements are kept in the PBW basis X^a T^e Y^b (e in {0, 1}) with
coefficients in Z[q^(+-1/4), t^(+-1/2)].  Relations used:

    T X T = X^-1,   T Y^-1 T = Y,   Y^-1 X^-1 Y X T^2 = q^(-1/2),
    (T - t^(1/2)) (T + t^(-1/2)) = 0.

Straightening rules, with c = t^(1/2) - t^(-1/2) and
g_n(X) = (X^n - X^-n)/(X^2 - 1):

    T X^n   = X^-n T - c g_n(X)
    Y T     = T Y^-1 + c Y,       Y^-1 T = T Y - c Y
    Y X^n   = q^(-n/2) X^n Y - c g_n(q^(1/2) X^-1) T Y^-1
    Y^-1 X^n = q^(n/2) (T - c) X^-n T Y^-1

The last two come from pi = T Y^-1 = Y T^-1, which satisfies
pi X = q^(1/2) X^-1 pi.  The tests check every relation after
straightening and compare products with operator composition in the
polynomial representation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exactalg import (ONE, ZERO, DivisionNotExact, ExactPoly, hat_normalize_with_factor,
                       mono)


class WordBudgetExceeded(RuntimeError):
    pass


class NonCoprimeParameters(ValueError):
    pass


class NotNormalForm(ValueError):
    pass


Mono = Tuple[int, int, int]


def _q(e) -> ExactPoly:
    return mono(1, q=e)


T_HALF = mono(1, t=Fraction(1, 2))
T_MHALF = mono(1, t=Fraction(-1, 2))
C = T_HALF - T_MHALF


# elements ------------------------------------------------------------------------

class DahaElem:
    """Finite sum of coefficient * X^a T^e Y^b."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Mono, ExactPoly]] = None):
        clean = {}
        if terms:
            for k, v in terms.items():
                if v:
                    if k[1] not in (0, 1):
                        raise NotNormalForm(f"T-degree {k[1]} in {k}")
                    clean[k] = v
        self.terms = clean

    @classmethod
    def mono(cls, a=0, e=0, b=0, coef: ExactPoly = ONE) -> "DahaElem":
        return cls({(a, e, b): coef})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _as_elem(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_elem(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return DahaElem(out)

    __radd__ = __add__

    def __neg__(self):
        return DahaElem({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_elem(other))

    def __rsub__(self, other):
        return _as_elem(other) - self

    def scale(self, c: ExactPoly) -> "DahaElem":
        return DahaElem({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (ExactPoly, int)):
            return self.scale(ExactPoly.const(other) if isinstance(other, int) else other)
        return multiply(self, _as_elem(other))

    def __rmul__(self, other):
        if isinstance(other, (ExactPoly, int)):
            return self.scale(ExactPoly.const(other) if isinstance(other, int) else other)
        return multiply(_as_elem(other), self)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use the inverse generators for negative powers")
        out = DahaElem.mono()
        for _ in range(n):
            out = out * self
        return out

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"DahaElem({self.to_text()})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, e, b) in sorted(self.terms):
            word = "*".join(w for w in (f"X^{a}" if a else "", "T" if e else "",
                                        f"Y^{b}" if b else "") if w) or "1"
            parts.append(f"({self.terms[(a, e, b)].to_text()})*{word}")
        return " + ".join(parts)


def _as_elem(x) -> DahaElem:
    if isinstance(x, DahaElem):
        return x
    if isinstance(x, int):
        return DahaElem.mono(coef=ExactPoly.const(x))
    if isinstance(x, ExactPoly):
        return DahaElem.mono(coef=x)
    raise TypeError(f"cannot use {type(x).__name__} as a DAHA element")


X = DahaElem.mono(a=1)
XI = DahaElem.mono(a=-1)
Y = DahaElem.mono(b=1)
YI = DahaElem.mono(b=-1)
TT = DahaElem.mono(e=1)
TI = TT - DahaElem.mono(coef=C)


# straightening -------------------------------------------------------------------

Table = Tuple[Tuple[Mono, ExactPoly], ...]


def _acc(out: Dict, key, val: ExactPoly):
    v = out.get(key, ZERO) + val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _g(n: int) -> Dict[int, int]:
    """(X^n - X^-n)/(X^2 - 1) as {exponent: coefficient}."""
    if n == 0:
        return {}
    m = abs(n)
    sign = 1 if n > 0 else -1
    return {2 * k - m: sign for k in range(m)}


def _TT_tail(e1: int, e2: int) -> Tuple[Tuple[int, ExactPoly], ...]:
    """T^e1 T^e2 as a sum over T^e with T^2 = c T + 1."""
    if e1 + e2 < 2:
        return ((e1 + e2, ONE),)
    return ((1, C), (0, ONE))


@lru_cache(maxsize=None)
def _T_X(n: int) -> Tuple[Tuple[Tuple[int, int], ExactPoly], ...]:
    """T X^n, keyed by (a, e)."""
    out: Dict = {}
    _acc(out, (-n, 1), ONE)
    for k, s in _g(n).items():
        _acc(out, (k, 0), -C * s)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _Y_T(b: int) -> Tuple[Tuple[Tuple[int, int], ExactPoly], ...]:
    """Y^b T, keyed by (e, b')."""
    if b == 0:
        return (((1, 0), ONE),)
    out: Dict = {}
    if b > 0:
        for (e, bb), v in _Y_T(b - 1):
            _acc(out, (e, bb - 1), v)
        _acc(out, (0, b), C)
    else:
        for (e, bb), v in _Y_T(b + 1):
            _acc(out, (e, bb + 1), v)
        _acc(out, (0, b + 2), -C)
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def _Y_X(b: int, n: int) -> Table:
    """Y^b X^n in normal form."""
    if b == 0:
        return (((n, 0, 0), ONE),)
    if b == 1:
        out: Dict = {}
        _acc(out, (n, 0, 1), _q(_frac(-n, 2)))
        # g_n(q^(1/2) X^-1) = sum s q^(k/2) X^-k
        for k, s in _g(n).items():
            _acc(out, (-k, 1, -1), -C * s * _q(_frac(k, 2)))
        return tuple(sorted(out.items()))
    if b == -1:
        # q^(n/2) (T - c) X^-n T Y^-1
        inner: Dict = {}
        for (a, e), v in _T_X(-n):
            _acc(inner, (a, e), v)
        _acc(inner, (-n, 0), -C)
        out = {}
        for (a, e), v in inner.items():
            for e2, w in _TT_tail(e, 1):
                _acc(out, (a, e2, -1), v * w * _q(_frac(n, 2)))
        return tuple(sorted(out.items()))
    step = 1 if b > 0 else -1
    rest = DahaElem(dict(_Y_X(b - step, n)))
    return tuple(sorted(multiply(DahaElem.mono(b=step), rest).terms.items()))


def _frac(a: int, b: int) -> Fraction:
    return Fraction(a, b)


@lru_cache(maxsize=None)
def _mono_product(m1: Mono, m2: Mono) -> Table:
    a, e, b = m1
    c, d, f = m2
    out: Dict = {}
    for (a2, e2, b2), k in _Y_X(b, c):
        # X^a T^e X^a2 T^e2 Y^b2 T^d Y^f
        left = _T_X(a2) if e else (((a2, 0), ONE),)
        for (a3, e3), k3 in left:
            for e4, k4 in _TT_tail(e3, e2):
                mid = _Y_T(b2) if d else (((0, b2), ONE),)
                for (e5, b5), k5 in mid:
                    for e6, k6 in _TT_tail(e4, e5):
                        _acc(out, (a + a3, e6, b5 + f), k * k3 * k4 * k5 * k6)
    return tuple(sorted(out.items()))


_BUDGET = [200000]


def multiply(x: DahaElem, y: DahaElem) -> DahaElem:
    out: Dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            cc = c1 * c2
            for m, v in _mono_product(m1, m2):
                _acc(out, m, cc * v)
        if len(out) > _BUDGET[0]:
            raise WordBudgetExceeded(f"more than {_BUDGET[0]} PBW terms")
    return DahaElem(out)


_GEN = {"X": X, "X-": XI, "Y": Y, "Y-": YI, "T": TT, "T-": TI}


def normal_form(word: Iterable) -> DahaElem:
    """Product of a word of generators in PBW normal form.

    Letters are 'X', 'Y', 'T' optionally followed by '-' for the inverse,
    ExactPoly or int scalars, or DahaElem factors.
    """
    out = DahaElem.mono()
    for w in word:
        if isinstance(w, str):
            if w not in _GEN:
                raise ValueError(f"unknown generator {w!r}")
            out = out * _GEN[w]
        else:
            out = out * _as_elem(w)
    return out


def random_elem(rng: random.Random, n_terms: int = 3, span: int = 2) -> DahaElem:
    out = {}
    for _ in range(n_terms):
        m = (rng.randint(-span, span), rng.randint(0, 1), rng.randint(-span, span))
        coef = mono(rng.choice([-2, -1, 1, 2, 3]), q=_frac(rng.randint(-2, 2), 4),
                    t=_frac(rng.randint(-2, 2), 2))
        out[m] = out.get(m, ZERO) + coef
    return DahaElem(out)


# polynomial representation -------------------------------------------------------

LaurentX = Dict[int, ExactPoly]


def _lx_clean(f: LaurentX) -> LaurentX:
    return {k: v for k, v in f.items() if v}


def lx_div_x2m1(f: LaurentX) -> LaurentX:
    """Exact division by X^2 - 1 using the lowest-term recursion."""
    f = _lx_clean(dict(f))
    if not f:
        return {}
    out: LaurentX = {}
    # f = (X^2 - 1) g gives f_k = g_(k-2) - g_k; peel off from the bottom
    lo, hi = min(f), max(f)
    work = dict(f)
    k = lo
    while k <= hi - 2:
        c = work.get(k, ZERO)
        if c:
            gk = -c
            out[k] = gk
            work[k] = ZERO
            work[k + 2] = work.get(k + 2, ZERO) - gk
        k += 1
    rest = _lx_clean(work)
    if rest:
        raise DivisionNotExact("(s - 1) f is not divisible by X^2 - 1")
    return _lx_clean(out)


def rep_s(f: LaurentX) -> LaurentX:
    return {-k: v for k, v in f.items()}


def rep_p(f: LaurentX, inverse: bool = False) -> LaurentX:
    sgn = -1 if inverse else 1
    return _lx_clean({k: v * _q(_frac(sgn * k, 2)) for k, v in f.items()})


def rep_X(f: LaurentX, n: int = 1) -> LaurentX:
    return {k + n: v for k, v in f.items()}


def rep_T(f: LaurentX) -> LaurentX:
    sf = rep_s(f)
    diff = dict(sf)
    for k, v in f.items():
        diff[k] = diff.get(k, ZERO) - v
    quot = lx_div_x2m1(diff)
    out: LaurentX = {}
    for k, v in sf.items():
        out[k] = out.get(k, ZERO) + T_HALF * v
    for k, v in quot.items():
        out[k] = out.get(k, ZERO) + C * v
    return _lx_clean(out)


def rep_Tinv(f: LaurentX) -> LaurentX:
    tf = rep_T(f)
    out = dict(tf)
    for k, v in f.items():
        out[k] = out.get(k, ZERO) - C * v
    return _lx_clean(out)


def rep_Y(f: LaurentX) -> LaurentX:
    return rep_s(rep_p(rep_T(f)))


def rep_Yinv(f: LaurentX) -> LaurentX:
    return rep_Tinv(rep_p(rep_s(f), inverse=True))


def poly_rep_apply(op, f: LaurentX) -> LaurentX:
    """Apply 'T', 'X', 'Y', 's', 'p' (or inverses 'T-', 'X-', 'Y-', 'p-'), or a
    DahaElem, to a Laurent polynomial {exponent: coefficient}."""
    if isinstance(op, DahaElem):
        out: LaurentX = {}
        for (a, e, b), c in op.terms.items():
            g = f
            step = rep_Y if b > 0 else rep_Yinv
            for _ in range(abs(b)):
                g = step(g)
            if e:
                g = rep_T(g)
            for k, v in g.items():
                out[k + a] = out.get(k + a, ZERO) + c * v
        return _lx_clean(out)
    table = {"T": rep_T, "T-": rep_Tinv, "Y": rep_Y, "Y-": rep_Yinv, "s": rep_s,
             "p": rep_p, "p-": lambda g: rep_p(g, True),
             "X": rep_X, "X-": lambda g: rep_X(g, -1)}
    if op not in table:
        raise ValueError(f"unknown operator {op!r}")
    return table[op](f)


def lx_from_elem(e: DahaElem) -> LaurentX:
    """A pure X-polynomial element as a Laurent polynomial."""
    out = {}
    for (a, ee, b), c in e.terms.items():
        if ee or b:
            raise ValueError("element is not a polynomial in X")
        out[a] = c
    return out


def elem_from_lx(f: LaurentX) -> DahaElem:
    return DahaElem({(k, 0, 0): v for k, v in f.items()})


# automorphisms ----------------------------------------------------------------------

def _images(sign: str, power_sign: int) -> Dict[str, DahaElem]:
    q4 = _frac(1, 4)
    if sign == "+":
        if power_sign > 0:
            return {"X": X, "X-": XI, "Y": (X * Y).scale(_q(-q4)),
                    "Y-": (YI * XI).scale(_q(q4))}
        return {"X": X, "X-": XI, "Y": (XI * Y).scale(_q(q4)),
                "Y-": (YI * X).scale(_q(-q4))}
    if sign == "-":
        if power_sign > 0:
            return {"X": (Y * X).scale(_q(q4)), "X-": (XI * YI).scale(_q(-q4)),
                    "Y": Y, "Y-": YI}
        return {"X": (YI * X).scale(_q(-q4)), "X-": (XI * Y).scale(_q(q4)),
                "Y": Y, "Y-": YI}
    raise ValueError(f"sign must be '+' or '-', not {sign!r}")


def _apply_once(img: Dict[str, DahaElem], e: DahaElem) -> DahaElem:
    cache: Dict[Tuple[str, int], DahaElem] = {}

    def power(letter: str, n: int) -> DahaElem:
        if n == 0:
            return DahaElem.mono()
        key = (letter, n)
        if key not in cache:
            base = img[letter] if n > 0 else img[letter + "-"]
            prev = power(letter, n - 1 if n > 0 else n + 1)
            cache[key] = prev * base
        return cache[key]

    out = DahaElem()
    for (a, ee, b), c in sorted(e.terms.items()):
        term = power("X", a)
        if ee:
            term = term * TT
        term = term * power("Y", b)
        out = out + term.scale(c)
    return out


def apply_tau(sign: str, power: int, e: DahaElem) -> DahaElem:
    """tau_+ or tau_- to the given integer power."""
    img = _images(sign, 1 if power >= 0 else -1)
    for _ in range(abs(power)):
        e = _apply_once(img, e)
    return e


def apply_word(word: Sequence[Tuple[str, int]], e: DahaElem) -> DahaElem:
    """word = [(sign, power), ...] read as a product g1 g2 ... gk; gk acts first."""
    for sign, p in reversed(list(word)):
        e = apply_tau(sign, p, e)
    return e


def word_matrix(word: Sequence[Tuple[str, int]]):
    m = ((1, 0), (0, 1))
    for sign, p in word:
        g = ((1, p), (0, 1)) if sign == "+" else ((1, 0), (p, 1))
        m = ((m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]),
             (m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]))
    return m


# coinvariant -----------------------------------------------------------------------

def coinvariant(e: DahaElem) -> ExactPoly:
    """X^a T^e Y^b -> t^((-a + e + b)/2)."""
    if not isinstance(e, DahaElem):
        raise NotNormalForm("a DahaElem in PBW form is required")
    out = ZERO
    for (a, ee, b), c in e.terms.items():
        if ee not in (0, 1):
            raise NotNormalForm(f"T-degree {ee}")
        out = out + c * mono(1, t=_frac(-a + ee + b, 2))
    return out


def evaluate_in_rep(e: DahaElem) -> ExactPoly:
    """H(1) in the polynomial representation at X = t^(-1/2)."""
    f = poly_rep_apply(e, {0: ONE})
    return sum((v * mono(1, t=_frac(-k, 2)) for k, v in f.items()), ZERO)


def phi(e: DahaElem) -> DahaElem:
    """The anti-involution X -> Y^-1, Y -> X^-1, T -> T."""
    out = DahaElem()
    for (a, ee, b), c in e.terms.items():
        # reversed order: phi(Y)^b phi(T)^e phi(X)^a
        term = DahaElem.mono()
        for _ in range(abs(b)):
            term = term * (XI if b > 0 else X)
        if ee:
            term = term * TT
        for _ in range(abs(a)):
            term = term * (YI if a > 0 else Y)
        out = out + term.scale(c)
    return out


# Macdonald polynomials ---------------------------------------------------------------

def _sym_mono(k: int) -> LaurentX:
    return {k: ONE} if k == 0 else {k: ONE, -k: ONE}


def _eigen_op(f: LaurentX) -> LaurentX:
    a = rep_Y(f)
    b = rep_Yinv(f)
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, ZERO) + v
    return _lx_clean(out)


def macdonald_P(m: int) -> Tuple[LaurentX, ExactPoly]:
    """D * P_m with D a polynomial making every coefficient Laurent.

    P_m = m_m + lower m_k, an eigenvector of Y + Y^-1 on symmetric
    polynomials (m_k = X^k + X^-k).  Returns (D * P_m, D).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    ks = list(range(m, -1, -2))
    # matrix of Y + Y^-1: column k -> coefficients at X^j, j in ks
    A: Dict[int, Dict[int, ExactPoly]] = {}
    for k in ks:
        img = _eigen_op(_sym_mono(k))
        A[k] = {j: img.get(j, ZERO) for j in ks}
        for j, v in img.items():
            if j >= 0 and j not in ks and v:
                raise AssertionError("Y + Y^-1 leaves the symmetric span")
    lam = A[m][m]
    D = ONE
    for j in ks[1:]:
        D = D * (lam - A[j][j])
    coeffs = {m: D}
    for j in ks[1:]:
        num = ZERO
        for i in ks:
            if i > j:
                num = num + coeffs[i] * A[i][j]
        coeffs[j] = num.div_exact(lam - A[j][j])
    out: LaurentX = {}
    for k, v in coeffs.items():
        for e, w in _sym_mono(k).items():
            out[e] = out.get(e, ZERO) + v * w
    return _lx_clean(out), D


def E1() -> DahaElem:
    return X


# torus knots -------------------------------------------------------------------------

def torus_word(r: int, s: int, variant: str = "floor") -> List[Tuple[str, int]]:
    """A tau-word whose SL2(Z) image has first column (r, s).

    floor: Euclid with non-negative remainders; nearest: nearest-integer
    quotients, with the sign fixed by (tau_+ tau_-^-1 tau_+)^2 = -1.
    """
    if r <= 0 or s <= 0:
        raise ValueError("r, s must be positive")
    if gcd(r, s) != 1:
        raise NonCoprimeParameters(f"gcd({r}, {s}) = {gcd(r, s)}")
    col = [r, s]
    steps: List[Tuple[str, int]] = []
    guard = 0
    while col != [1, 0] and col != [-1, 0]:
        guard += 1
        if guard > 200:
            raise WordBudgetExceeded("continued fraction did not terminate")
        x, y = col
        if y == 0:
            raise AssertionError("unexpected column")
        if x == 0:
            # (0, +-1) -> (1, +-1)
            col = [1, y]
            steps.append(("+", -y))
        elif abs(x) > abs(y):
            k = _quot(x, y, variant)
            # tau_+^-k: (x, y) -> (x - k y, y)
            col = [x - k * y, y]
            steps.append(("+", k))
        else:
            k = _quot(y, x, variant) if abs(x) < abs(y) else y // x
            col = [x, y - k * x]
            steps.append(("-", k))
    # col = g^-1 (r, s) with g = product of steps in order
    word = list(steps)
    if col == [-1, 0]:
        word += [("+", 1), ("-", -1), ("+", 1), ("+", 1), ("-", -1), ("+", 1)]
    m = word_matrix(word)
    if (m[0][0], m[1][0]) != (r, s):
        raise AssertionError(f"word has first column {(m[0][0], m[1][0])}")
    return _compress(word)


def _quot(x: int, y: int, variant: str) -> int:
    if variant == "floor":
        return x // y
    if variant == "nearest":
        return round(Fraction(x, y))
    raise ValueError(f"unknown variant {variant!r}")


def _compress(word):
    out: List[Tuple[str, int]] = []
    for sgn, p in word:
        if out and out[-1][0] == sgn:
            p = out.pop()[1] + p
        if p:
            out.append((sgn, p))
    return out


def jd_raw(r: int, s: int, m: int = 1, word=None, route: str = "pbw",
           budget: int = 200000, use_P1: bool = False):
    """Un-normalized {gamma(P)}_ev and {P}_ev."""
    _BUDGET[0] = budget
    if word is None:
        word = torus_word(r, s)
    m_ = word_matrix(word)
    if (m_[0][0], m_[1][0]) != (r, s):
        raise ValueError("word does not have first column (r, s)")
    if m == 1 and not use_P1:
        P = X
    else:
        P = elem_from_lx(macdonald_P(m)[0])
    img = apply_word(word, P)
    ev = coinvariant if route == "pbw" else evaluate_in_rep
    return ev(img), ev(P)


def jd_torus_knot(r: int, s: int, m: int = 1, word=None, route: str = "pbw",
                  budget: int = 200000, use_P1: bool = False):
    """Hat-normalized DAHA-Jones polynomial of T(r, s) colored by m omega_1.

    Returns (hat polynomial, discarded monomial factor).
    """
    num, den = jd_raw(r, s, m, word, route, budget, use_P1)
    val = num.div_exact(den)
    return hat_normalize_with_factor(val)


# relations ----------------------------------------------------------------------------

def relation_residues() -> Dict[str, DahaElem]:
    """Each defining relation as (lhs - rhs) after straightening; all zero."""
    one = DahaElem.mono()
    return {
        "TXTX=1": normal_form("TXTX") - one,
        "TY^-1TY^-1=1": normal_form(["T", "Y-", "T", "Y-"]) - one,
        "quadratic": (TT - DahaElem.mono(coef=T_HALF)) * (TT + DahaElem.mono(coef=T_MHALF)),
        "Y^-1X^-1YXT^2=q^-1/2": normal_form(["Y-", "X-", "Y", "X", "T", "T"])
        - DahaElem.mono(coef=_q(_frac(-1, 2))),
        "T T^-1 = 1": TT * TI - one,
        "X X^-1 = 1": X * XI - one,
        "Y Y^-1 = 1": Y * YI - one,
    }
