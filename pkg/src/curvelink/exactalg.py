"""Exact coefficient arithmetic.

ExactPoly is a Laurent polynomial in q, t, a with integer coefficients.
Exponents live on the lattice (1/4)Z x (1/2)Z x Z and are stored scaled
(x4, x2, x1) so every operation stays in integer arithmetic.

FiniteField implements F_{p^k} for the prime powers used by the
enumeration engine, with elements encoded as integers 0..q-1 (base-p
digits of the polynomial representative).
"""

from __future__ import annotations

import ast
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, Mapping, Tuple, Union

Exp = Tuple[int, int, int]  # (4*e_q, 2*e_t, e_a)

_SCALE = {"q": 4, "t": 2, "a": 1}
_SLOT = {"q": 0, "t": 1, "a": 2}


class SubstitutionNotLaurent(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class DivisionNotExact(ArithmeticError):
    pass


class ExactPoly:
    """Immutable Laurent polynomial in q, t, a over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[tuple(e)] = int(c)
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "ExactPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, c: int = 1, q=0, t=0, a=0) -> "ExactPoly":
        """c * q^q * t^t * a^a; fractional q, t exponents allowed."""
        return cls({_scaled_exp(q, t, a): c})

    @classmethod
    def var(cls, name: str) -> "ExactPoly":
        return cls.monomial(1, **{name: 1})

    @property
    def terms(self) -> Dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    # basic protocol -----------------------------------------------------
    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExactPoly.const(other)
        if not isinstance(other, ExactPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"ExactPoly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return ExactPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExactPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: Dict[Exp, int] = {}
        for (e1, c1) in self._terms.items():
            for (e2, c2) in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise DivisionNotExact("negative power of a non-monomial")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise DivisionNotExact("negative power of a non-unit monomial")
            return ExactPoly({(-e[0] * -n, -e[1] * -n, -e[2] * -n): c ** (-n)})
        result = ExactPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # inspection ---------------------------------------------------------
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, q=0, t=0, a=0) -> int:
        return self._terms.get(_scaled_exp(q, t, a), 0)

    def degree(self, var: str) -> Fraction:
        i = _SLOT[var]
        return Fraction(max(e[i] for e in self._terms), _SCALE[var])

    def min_degree(self, var: str) -> Fraction:
        i = _SLOT[var]
        return Fraction(min(e[i] for e in self._terms), _SCALE[var])

    def variables(self) -> set:
        used = set()
        for e in self._terms:
            for name, i in _SLOT.items():
                if e[i]:
                    used.add(name)
        return used

    def coefficient_of(self, var: str, power) -> "ExactPoly":
        """Coefficient of var^power, as a polynomial in the remaining variables."""
        i = _SLOT[var]
        target = _scale_one(var, power)
        out = {}
        for e, c in self._terms.items():
            if e[i] == target:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return ExactPoly(out)

    def split_by(self, var: str) -> Dict[Fraction, "ExactPoly"]:
        i = _SLOT[var]
        buckets: Dict[int, dict] = {}
        for e, c in self._terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            buckets.setdefault(k, {})[tuple(e2)] = c
        return {Fraction(k, _SCALE[var]): ExactPoly(v) for k, v in sorted(buckets.items())}

    def filter_terms(self, pred) -> "ExactPoly":
        """Keep terms whose (e_q, e_t, e_a) (as Fractions) satisfy pred."""
        out = {}
        for e, c in self._terms.items():
            if pred(Fraction(e[0], 4), Fraction(e[1], 2), e[2]):
                out[e] = c
        return ExactPoly(out)

    def monomials(self):
        """Yield (coeff, e_q, e_t, e_a) with Fraction exponents, canonical order."""
        for e in sorted(self._terms, key=_order_key):
            yield self._terms[e], Fraction(e[0], 4), Fraction(e[1], 2), e[2]

    # substitution -------------------------------------------------------
    def substitute(self, assignment: Mapping[str, Union["ExactPoly", int]]) -> "ExactPoly":
        """Apply the ring map sending each variable to an ExactPoly.

        Variables mapped to non-monomials must occur with integral exponents
        (nonnegative unless the image is a signed monomial).
        """
        images = {k: _coerce(v) for k, v in assignment.items()}
        cache: Dict[Tuple[str, int], ExactPoly] = {}

        def power_of(name: str, scaled: int) -> ExactPoly:
            key = (name, scaled)
            if key in cache:
                return cache[key]
            img = images[name]
            sc = _SCALE[name]
            if scaled % sc == 0:
                n = scaled // sc
                if n < 0 and not img.is_monomial():
                    raise SubstitutionNotLaurent(
                        f"negative power of {name} mapped to a non-monomial")
                res = img ** n
            else:
                if not img.is_monomial():
                    raise SubstitutionNotLaurent(
                        f"fractional power of {name} mapped to a non-monomial")
                (e, c), = img._terms.items()
                if c != 1:
                    raise SubstitutionNotLaurent("fractional power of a signed monomial")
                scaled_e = []
                for slot, base in enumerate(e):
                    num = base * scaled
                    if num % sc:
                        raise SubstitutionNotLaurent("exponent leaves the lattice")
                    scaled_e.append(num // sc)
                res = ExactPoly({tuple(scaled_e): 1})
            cache[key] = res
            return res

        total = ExactPoly()
        for e, c in self._terms.items():
            term = ExactPoly({(0, 0, 0): c})
            rest = [0, 0, 0]
            for name, i in _SLOT.items():
                if e[i] == 0:
                    continue
                if name in images:
                    term = term * power_of(name, e[i])
                else:
                    rest[i] = e[i]
            if any(rest):
                term = term * ExactPoly({tuple(rest): 1})
            total = total + term
        return total

    def evaluate(self, **values) -> Union[Fraction, "ExactPoly"]:
        """Numeric specialization with rational values for integral exponents.

        Unassigned variables stay symbolic; the coefficients of the result
        must then be integers, else ValueError.
        """
        acc: Dict[Exp, Fraction] = {}
        for e, c in self._terms.items():
            val = Fraction(c)
            rest = [0, 0, 0]
            for name, i in _SLOT.items():
                if name in values:
                    sc = _SCALE[name]
                    if e[i] % sc:
                        raise SubstitutionNotLaurent(f"fractional power of {name}")
                    val *= Fraction(values[name]) ** (e[i] // sc)
                else:
                    rest[i] = e[i]
            acc[tuple(rest)] = acc.get(tuple(rest), 0) + val
        acc = {e: v for e, v in acc.items() if v}
        if all(e == (0, 0, 0) for e in acc):
            return acc.get((0, 0, 0), Fraction(0))
        for v in acc.values():
            if v.denominator != 1:
                raise ValueError("non-integral coefficient after specialization")
        return ExactPoly({e: int(v) for e, v in acc.items()})

    def evaluate_rational(self, **values) -> Dict[Exp, Fraction]:
        """Like evaluate, but return the raw Fraction-coefficient term map."""
        acc: Dict[Exp, Fraction] = {}
        for e, c in self._terms.items():
            val = Fraction(c)
            rest = [0, 0, 0]
            for name, i in _SLOT.items():
                if name in values:
                    sc = _SCALE[name]
                    if e[i] % sc:
                        raise SubstitutionNotLaurent(f"fractional power of {name}")
                    val *= Fraction(values[name]) ** (e[i] // sc)
                else:
                    rest[i] = e[i]
            acc[tuple(rest)] = acc.get(tuple(rest), 0) + val
        return {e: v for e, v in acc.items() if v}

    def shift(self, q=0, t=0, a=0) -> "ExactPoly":
        d = _scaled_exp(q, t, a)
        return ExactPoly({(e[0] + d[0], e[1] + d[1], e[2] + d[2]): c
                          for e, c in self._terms.items()})

    # division -----------------------------------------------------------
    def div_exact(self, other: "ExactPoly") -> "ExactPoly":
        """Exact quotient self/other; raises DivisionNotExact on a remainder."""
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return ExactPoly()
        if other.is_monomial():
            (e, c), = other._terms.items()
            out = {}
            for e1, c1 in self._terms.items():
                if c1 % c:
                    raise DivisionNotExact("coefficient not divisible")
                out[(e1[0] - e[0], e1[1] - e[1], e1[2] - e[2])] = c1 // c
            return ExactPoly(out)
        # shift both into honest polynomials, then lex long division
        lo_f = [min(e[i] for e in self._terms) for i in range(3)]
        lo_g = [min(e[i] for e in other._terms) for i in range(3)]
        f = self.shift_scaled([-x for x in lo_f])
        g = other.shift_scaled([-x for x in lo_g])
        key = lambda e: (e[2], e[1], e[0])
        lead_e = max(g._terms, key=key)
        lead_c = g._terms[lead_e]
        quot: Dict[Exp, int] = {}
        rem = dict(f._terms)
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            d = (e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2])
            if min(d) < 0 or c % lead_c:
                raise DivisionNotExact("non-zero remainder")
            k = c // lead_c
            quot[d] = quot.get(d, 0) + k
            for eg, cg in g._terms.items():
                ee = (eg[0] + d[0], eg[1] + d[1], eg[2] + d[2])
                v = rem.get(ee, 0) - k * cg
                if v:
                    rem[ee] = v
                else:
                    rem.pop(ee, None)
        out = ExactPoly(quot)
        return out.shift_scaled([lo_f[i] - lo_g[i] for i in range(3)])

    def shift_scaled(self, d) -> "ExactPoly":
        return ExactPoly({(e[0] + d[0], e[1] + d[1], e[2] + d[2]): c
                          for e, c in self._terms.items()})

    # text / json --------------------------------------------------------
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=_order_key):
            c = self._terms[e]
            mon = _monomial_text(e)
            if mon:
                if c == 1:
                    body = mon
                elif c == -1:
                    body = "-" + mon
                else:
                    body = f"{c}*{mon}"
            else:
                body = str(c)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        return [[self._terms[e], e[0], e[1], e[2]]
                for e in sorted(self._terms, key=_order_key)]

    @classmethod
    def from_json(cls, data) -> "ExactPoly":
        out: Dict[Exp, int] = {}
        for c, eq, et, ea in data:
            out[(eq, et, ea)] = out.get((eq, et, ea), 0) + c
        return cls(out)


def _order_key(e: Exp):
    return (e[2], e[1], e[0])


def _monomial_text(e: Exp) -> str:
    bits = []
    for name, i in (("a", 2), ("q", 0), ("t", 1)):
        k = e[i]
        if not k:
            continue
        f = Fraction(k, _SCALE[name])
        if f == 1:
            bits.append(name)
        elif f.denominator == 1:
            bits.append(f"{name}^{f.numerator}" if f > 0 else f"{name}^({f.numerator})")
        else:
            bits.append(f"{name}^({f.numerator}/{f.denominator})")
    return "*".join(bits)


def _scale_one(name: str, value) -> int:
    f = Fraction(value) * _SCALE[name]
    if f.denominator != 1:
        raise SubstitutionNotLaurent(f"exponent {value} of {name} leaves the lattice")
    return int(f)


def _scaled_exp(q, t, a) -> Exp:
    return (_scale_one("q", q), _scale_one("t", t), _scale_one("a", a))


def _coerce(x) -> ExactPoly:
    if isinstance(x, ExactPoly):
        return x
    if isinstance(x, int):
        return ExactPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to ExactPoly")


Q = ExactPoly.var("q")
T = ExactPoly.var("t")
A = ExactPoly.var("a")
ONE = ExactPoly.const(1)
ZERO = ExactPoly()


def mono(c=1, q=0, t=0, a=0) -> ExactPoly:
    return ExactPoly.monomial(c, q=q, t=t, a=a)


def psum(items: Iterable[ExactPoly]) -> ExactPoly:
    return reduce(lambda x, y: x + y, items, ZERO)


def pprod(items: Iterable[ExactPoly]) -> ExactPoly:
    return reduce(lambda x, y: x * y, items, ONE)


# parsing -------------------------------------------------------------------

_VARS = {"q": Q, "t": T, "a": A}


def parse(text: str) -> ExactPoly:
    """Parse a polynomial expression in q, t, a.

    Accepts the canonical text form plus products, parentheses, powers
    (^ or **) with integer or fractional exponents and integer division
    of exponents such as q^(1/4).
    """
    src = text.replace("^", "**").replace("−", "-")
    tree = ast.parse(src.strip(), mode="eval")
    return _eval_node(tree.body)


def _eval_exponent(node) -> Fraction:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_exponent(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Div):
        return _eval_exponent(node.left) / _eval_exponent(node.right)
    raise ValueError("unsupported exponent expression")


def _eval_node(node) -> ExactPoly:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return ExactPoly.const(node.value)
    if isinstance(node, ast.Name):
        if node.id not in _VARS:
            raise ValueError(f"unknown variable {node.id!r}")
        return _VARS[node.id]
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = _eval_exponent(node.right)
            base = _eval_node(node.left)
            if e.denominator == 1:
                return base ** int(e)
            if not base.is_monomial():
                raise ValueError("fractional power of a non-monomial")
            (ex, c), = base.items()
            if c != 1:
                raise ValueError("fractional power of a signed monomial")
            scaled = [x * e for x in ex]
            if any(s.denominator != 1 for s in scaled):
                raise SubstitutionNotLaurent("exponent leaves the lattice")
            return ExactPoly({tuple(int(s) for s in scaled): 1})
        left, right = _eval_node(node.left), _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left.div_exact(right)
    raise ValueError(f"unsupported syntax: {ast.dump(node)}")


# operations ----------------------------------------------------------------

def qbinomial(n: int, k: int) -> ExactPoly:
    """Gaussian binomial [n choose k]_q."""
    if k < 0 or k > n or n < 0:
        return ZERO
    # row of the q-Pascal triangle as integer coefficient lists
    row = [[1]]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = row[j - 1] if j >= 1 else []
            right = row[j] if j < m else []
            # [m,j] = [m-1,j-1] + q^j [m-1,j]
            coeffs = [0] * max(len(left), len(right) + j)
            for i, c in enumerate(left):
                coeffs[i] += c
            for i, c in enumerate(right):
                coeffs[i + j] += c
            new.append(coeffs)
        row = new
    return ExactPoly({(4 * i, 0, 0): c for i, c in enumerate(row[k]) if c})


def qint(n: int, var: ExactPoly = Q) -> ExactPoly:
    """1 + var + ... + var^(n-1)."""
    return psum(var ** i for i in range(n))


def hat_normalize(f: ExactPoly) -> ExactPoly:
    """Divide f by ±q^i t^j (and the coefficient gcd).

    The result has no negative exponents, is divisible by neither q nor t,
    and has a positive coefficient at its lowest pure power of t.
    """
    return hat_normalize_with_factor(f)[0]


def hat_normalize_with_factor(f: ExactPoly):
    if not f:
        raise ZeroPolynomial("hat-normalization of zero")
    terms = f.terms
    mq = min(e[0] for e in terms)
    mt = min(e[1] for e in terms)
    g = reduce(gcd, (abs(c) for c in terms.values()))
    shifted = {(e[0] - mq, e[1] - mt, e[2]): c // g for e, c in terms.items()}
    # sign: look at the q-free terms with the lowest t-power
    q_free = [e for e in shifted if e[0] == 0]
    lowest = min(q_free, key=lambda e: (e[1], e[2]))
    sign = 1 if shifted[lowest] > 0 else -1
    out = ExactPoly({e: sign * c for e, c in shifted.items()})
    factor = ExactPoly({(mq, mt, 0): sign * g})
    return out, factor


# finite fields ---------------------------------------------------------------

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)


def _factor_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def _poly_mulmod(a, b, p, mod):
    """Multiply coefficient lists a, b over F_p modulo the monic list mod."""
    k = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] = (res[i + j] + x * y) % p
    for i in range(len(res) - 1, k - 1, -1):
        c = res[i]
        if c:
            for j in range(k + 1):
                res[i - k + j] = (res[i - k + j] - c * mod[j]) % p
    res = res[:k] + [0] * max(0, k - len(res))
    return res[:k]


def _is_irreducible(mod, p):
    # brute force: no root-free factorisation check needed for k <= 4,
    # test divisibility by every monic polynomial of degree 1..k//2
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for code in range(p ** d):
            cand = [(code // p ** i) % p for i in range(d)] + [1]
            if _divides(cand, mod, p):
                return False
    return True


def _divides(d, f, p):
    f = list(f)
    dd = len(d) - 1
    inv = pow(d[-1], p - 2, p)
    for i in range(len(f) - 1, dd - 1, -1):
        c = f[i] * inv % p
        if c:
            for j in range(dd + 1):
                f[i - dd + j] = (f[i - dd + j] - c * d[j]) % p
    return not any(f[:dd])


class FiniteField:
    """F_q for a prime power q, table based."""

    _cache: Dict[int, "FiniteField"] = {}

    def __new__(cls, q: int):
        if q in cls._cache:
            return cls._cache[q]
        obj = super().__new__(cls)
        obj._init(q)
        cls._cache[q] = obj
        return obj

    def _init(self, q):
        p, k = _factor_prime_power(q)
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self.modulus = None
            self.add = tuple(tuple((x + y) % p for y in range(q)) for x in range(q))
            self.mul = tuple(tuple((x * y) % p for y in range(q)) for x in range(q))
        else:
            mod = None
            for code in range(p ** k):
                cand = [(code // p ** i) % p for i in range(k)] + [1]
                if cand[0] and _is_irreducible(cand, p):
                    mod = cand
                    break
            self.modulus = tuple(mod)
            digits = [[(x // p ** i) % p for i in range(k)] for x in range(q)]
            enc = lambda v: sum(c * p ** i for i, c in enumerate(v))
            self.add = tuple(tuple(enc([(a + b) % p for a, b in zip(digits[x], digits[y])])
                                   for y in range(q)) for x in range(q))
            self.mul = tuple(tuple(enc(_poly_mulmod(digits[x], digits[y], p, mod))
                                   for y in range(q)) for x in range(q))
        self.neg = tuple(next(y for y in range(q) if self.add[x][y] == 0) for x in range(q))
        inv = [0] * q
        for x in range(1, q):
            inv[x] = next(y for y in range(1, q) if self.mul[x][y] == 1)
        self.inv = tuple(inv)
        self.sub = tuple(tuple(self.add[x][self.neg[y]] for y in range(q)) for x in range(q))
        self.elements = tuple(range(q))
        self.is_prime = k == 1

    def __reduce__(self):
        return (FiniteField, (self.q,))

    def __repr__(self):
        return f"FiniteField({self.q})"

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    def frobenius(self, x: int) -> int:
        r = 1
        for _ in range(self.p):
            r = self.mul[r][x]
        return r

    def power(self, x: int, n: int) -> int:
        r = 1
        for _ in range(n):
            r = self.mul[r][x]
        return r


class FqEchelon:
    """Incremental reduced row echelon basis over F_q.

    Vectors are lists of field codes of a fixed length.  The pivot of a
    row is its first nonzero entry, so with columns sorted by valuation the
    pivots are exactly the valuations of the span.
    """

    def __init__(self, field: FiniteField, ncols: int):
        self.F = field
        self.ncols = ncols
        self.rows: Dict[int, list] = {}

    def reduce(self, vec) -> list:
        F = self.F
        v = list(vec)
        add, mul, neg = F.add, F.mul, F.neg
        for i in range(self.ncols):
            c = v[i]
            if c and i in self.rows:
                row = self.rows[i]
                nc = neg[c]
                for j in range(i, self.ncols):
                    r = row[j]
                    if r:
                        v[j] = add[v[j]][mul[nc][r]]
        return v

    def insert(self, vec) -> bool:
        """Add vec to the span; False if it was already there."""
        F = self.F
        v = self.reduce(vec)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = F.inv[v[piv]]
        v = [F.mul[inv][c] for c in v]
        # clear the new pivot column from the old rows
        for i, row in self.rows.items():
            c = row[piv]
            if c:
                nc = F.neg[c]
                self.rows[i] = [F.add[a][F.mul[nc][b]] for a, b in zip(row, v)]
        self.rows[piv] = v
        return True

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    @property
    def pivots(self):
        return sorted(self.rows)

    def __len__(self):
        return len(self.rows)


def fq_rank(field: FiniteField, vectors, ncols: int) -> int:
    if field.q == 2:
        return _gf2_rank([sum(1 << i for i, c in enumerate(v) if c) for v in vectors])
    e = FqEchelon(field, ncols)
    for v in vectors:
        e.insert(v)
    return len(e)


def _gf2_rank(masks) -> int:
    """Rank of GF(2) vectors packed into Python ints."""
    basis = {}
    for m in masks:
        while m:
            top = m.bit_length() - 1
            if top in basis:
                m ^= basis[top]
            else:
                basis[top] = m
                break
    return len(basis)


def fq_solve(field: FiniteField, rows, rhs, nvars: int):
    """Solve rows . c = rhs over F_q.

    Returns (particular, kernel_basis) or None if inconsistent.  Each row is
    a list of nvars field codes.
    """
    F = field
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivcols = []
    rank = 0
    for col in range(nvars):
        sel = next((i for i in range(rank, len(aug)) if aug[i][col]), None)
        if sel is None:
            continue
        aug[rank], aug[sel] = aug[sel], aug[rank]
        prow = aug[rank]
        ic = inv[prow[col]]
        prow = [mul[ic][x] for x in prow]
        aug[rank] = prow
        for i in range(len(aug)):
            if i != rank:
                c = aug[i][col]
                if c:
                    nc = neg[c]
                    aug[i] = [add[x][mul[nc][y]] for x, y in zip(aug[i], prow)]
        pivcols.append(col)
        rank += 1
    for i in range(rank, len(aug)):
        if aug[i][nvars]:
            return None
    part = [0] * nvars
    for i, col in enumerate(pivcols):
        part[col] = aug[i][nvars]
    free = [c for c in range(nvars) if c not in set(pivcols)]
    kernel = []
    for f in free:
        v = [0] * nvars
        v[f] = 1
        for i, col in enumerate(pivcols):
            c = aug[i][f]
            if c:
                v[col] = neg[c]
        kernel.append(v)
    return part, kernel
