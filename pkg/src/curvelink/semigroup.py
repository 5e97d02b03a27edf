"""Numerical semigroups, cable arithmetic and standard Gamma-modules."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import comb, gcd, prod
from typing import List, Optional, Sequence, Tuple

from .exactalg import ONE, ExactPoly, T, psum


class GcdNotOne(ValueError):
    pass


class NonAlgebraicCable(ValueError):
    pass


class NotGorenstein(ValueError):
    pass


class InconsistentSharedPrefix(ValueError):
    pass


class NumSemigroup:
    """A numerical semigroup given by generators with gcd 1.

    Membership is stored as a bitmask up to conductor + mult, which is all
    any formula here inspects; beyond the conductor everything is present.
    """

    def __init__(self, generators: Sequence[int]):
        gens = sorted(set(int(g) for g in generators if int(g) > 0))
        if not gens:
            gens = [1]
        if reduce(gcd, gens) != 1:
            raise GcdNotOne(f"gcd of {gens} is not 1")
        # Frobenius number is below g1*g2 (Schur bound), so this sieve is exact
        bound = gens[0] * gens[1] if len(gens) > 1 else 1
        bound += gens[0] + 1
        member = bytearray(bound + 1)
        member[0] = 1
        for n in range(1, bound + 1):
            for g in gens:
                if g <= n and member[n - g]:
                    member[n] = 1
                    break
        gaps = [n for n in range(bound + 1) if not member[n]]
        self.gaps: Tuple[int, ...] = tuple(gaps)
        self.delta = len(gaps)
        self.conductor = gaps[-1] + 1 if gaps else 0
        nonzero = [n for n in range(1, bound + 1) if member[n]]
        self.mult = nonzero[0] if nonzero else 1
        # minimal generating set
        minimal = []
        for g in gens:
            if not self._sum_of_smaller(g, minimal):
                minimal.append(g)
        self.generators: Tuple[int, ...] = tuple(minimal)
        self._gapset = frozenset(gaps)

    def _sum_of_smaller(self, g, minimal):
        # dynamic programme over the current minimal set
        ok = bytearray(g + 1)
        ok[0] = 1
        for n in range(1, g + 1):
            ok[n] = any(m <= n and ok[n - m] for m in minimal)
        return bool(ok[g])

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self._gapset

    def __eq__(self, other):
        return isinstance(other, NumSemigroup) and self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __repr__(self):
        return f"NumSemigroup({list(self.generators)})"

    def elements_below(self, n: int) -> List[int]:
        return [k for k in range(max(n, 0)) if k in self]

    @property
    def is_gorenstein(self) -> bool:
        return self.conductor == 2 * self.delta

    def to_json(self):
        return {"generators": list(self.generators), "gaps": list(self.gaps),
                "delta": self.delta, "conductor": self.conductor, "mult": self.mult}

    # counting helpers used by the rho invariants
    def gaps_below(self, x: int) -> int:
        return sum(1 for g in self.gaps if g < x)

    def members_upto(self, x: int) -> int:
        """#{nu in Gamma : nu <= x}."""
        if x < 0:
            return 0
        if x >= self.conductor:
            return x + 1 - self.delta
        return sum(1 for k in range(x + 1) if k in self)


def gamma_from_generators(gens: Sequence[int]) -> NumSemigroup:
    return NumSemigroup(gens)


@dataclass(frozen=True)
class CableData:
    """Newton pairs (r_i, s_i) of an iterated torus knot."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        if not pairs:
            raise NonAlgebraicCable("empty cable")
        for r, s in pairs:
            if r <= 0 or s <= 0:
                raise NonAlgebraicCable(f"pair {(r, s)} is not positive")
            if gcd(r, s) != 1:
                raise NonAlgebraicCable(f"pair {(r, s)} is not coprime")
        r1, s1 = pairs[0]
        if r1 > s1:
            pairs = ((s1, r1),) + pairs[1:]
        object.__setattr__(self, "pairs", pairs)

    @property
    def r(self) -> Tuple[int, ...]:
        return tuple(p[0] for p in self.pairs)

    @property
    def s(self) -> Tuple[int, ...]:
        return tuple(p[1] for p in self.pairs)

    @property
    def a(self) -> Tuple[int, ...]:
        out = [self.pairs[0][1]]
        for i in range(1, len(self.pairs)):
            out.append(out[-1] * self.pairs[i - 1][0] * self.pairs[i][0] + self.pairs[i][1])
        return tuple(out)

    @property
    def upsilon(self) -> Tuple[int, ...]:
        """upsilon_i = r_{i+1} ... r_l, with upsilon_l = 1."""
        r = self.r
        return tuple(prod(r[i + 1:]) for i in range(len(r)))

    def generators(self) -> Tuple[int, ...]:
        r, a = self.r, self.a
        gens = [prod(r)]
        for i in range(len(r)):
            gens.append(a[i] * prod(r[i + 1:]))
        return tuple(gens)

    def delta_formula(self) -> Fraction:
        return Fraction(sum(u * (ai - 1) * (ri - 1)
                            for u, ai, ri in zip(self.upsilon, self.a, self.r)), 2)


def gamma_from_cable(cable: CableData) -> Tuple[NumSemigroup, int]:
    """Semigroup of the cable and its delta, cross-checked two ways."""
    g = NumSemigroup(cable.generators())
    d = cable.delta_formula()
    if d != g.delta:
        raise AssertionError(f"delta mismatch: gap count {g.delta} vs formula {d}")
    return g, g.delta


def cable_family_delta(upsilon: int, r: int, s: int, p: int) -> Fraction:
    """2*delta = upsilon^2 rs - upsilon(r+s) + (upsilon-1)p + 1, halved."""
    return Fraction(upsilon * upsilon * r * s - upsilon * (r + s) + (upsilon - 1) * p + 1, 2)


# standard Gamma-modules -------------------------------------------------------

@dataclass(frozen=True)
class GammaModule:
    parent: NumSemigroup
    D: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "D", tuple(sorted(self.D)))
        gaps = set(self.parent.gaps)
        for d in self.D:
            if d not in gaps:
                raise ValueError(f"{d} is not a gap")
        Dset = set(self.D)
        for d in self.D:
            for g in self.parent.gaps:
                if g > d and (g - d) in self.parent and g not in Dset:
                    raise ValueError(f"D={list(self.D)} is not Gamma-closed")

    def __contains__(self, n: int) -> bool:
        return n in self.parent or n in self.D

    @property
    def deviation(self) -> int:
        return len(self.D)

    @property
    def degree(self) -> int:
        return self.parent.delta - len(self.D)

    def elements_below(self, n: int) -> List[int]:
        return [k for k in range(n) if k in self]

    @cached_property
    def primitive(self) -> Tuple[int, ...]:
        """Minimal Gamma-generators of Delta."""
        g = self.parent
        top = g.conductor + g.mult
        elems = [k for k in range(top + 1) if k in self]
        out = []
        for e in elems:
            if not any(e - f > 0 and (e - f) in g for f in elems if f < e):
                out.append(e)
        return tuple(out)

    @property
    def gamma_rank(self) -> int:
        return len(self.primitive)

    def to_json(self):
        return {"D": list(self.D)}


def enumerate_standard_delta(g: NumSemigroup) -> List[GammaModule]:
    """All standard Delta = Gamma u D, by depth-first search over gaps."""
    gaps = g.gaps
    out: List[Tuple[int, ...]] = []

    def dfs(i, chosen):
        if i == len(gaps):
            out.append(tuple(chosen))
            return
        x = gaps[i]
        forced = any((x - d) in g for d in chosen)
        if forced:
            chosen.append(x)
            dfs(i + 1, chosen)
            chosen.pop()
            return
        dfs(i + 1, chosen)
        chosen.append(x)
        dfs(i + 1, chosen)
        chosen.pop()

    dfs(0, [])
    out.sort(key=lambda D: (len(D), D))
    return [GammaModule(g, D) for D in out]


def delta_reciprocal(d: GammaModule) -> GammaModule:
    """Delta -> Delta* - min(Delta*), with Delta* = {p : p + Delta in Gamma}."""
    g = d.parent
    if not g.is_gorenstein:
        raise NotGorenstein(f"{g} is not symmetric")
    c = g.conductor
    elems = [k for k in range(c + 1) if k in d]

    def good(p):
        return all((p + e) in g for e in elems)

    # Delta is contained in Z_+, so Delta* contains Gamma-shifts and
    # min(Delta*) lies in [0, c]
    lo = next(p for p in range(0, c + 1) if good(p))
    D = []
    for x in range(lo, lo + c + 1):
        if good(x) and (x - lo) not in g:
            D.append(x - lo)
    return GammaModule(g, tuple(D))


def rational_catalan(r: int, s: int) -> int:
    return comb(r + s, r) // (r + s)


def alexander_hat(g: NumSemigroup) -> ExactPoly:
    c = g.conductor
    s = psum(T ** k for k in range(c) if k in g)
    return (ONE - T) * s + T ** c


def linking_number(cable_j: Optional[CableData], cable_k: Optional[CableData],
                   split_index: Optional[int]) -> int:
    """Linking number of two iterated torus knots.

    split_index is the (1-based) index of the last shared pair; None means
    the knots sit on different trees and full r-products are used.  A path
    given as None is a pure arrow (an unknot with no pairs).
    """
    rj = cable_j.r if cable_j is not None else ()
    rk = cable_k.r if cable_k is not None else ()
    if split_index is None:
        return prod(rj) * prod(rk)
    i0 = split_index
    if i0 < 1 or i0 > min(len(rj), len(rk)):
        raise InconsistentSharedPrefix("split index outside both paths")
    if cable_j.pairs[:i0 - 1] != cable_k.pairs[:i0 - 1] or rj[i0 - 1] != rk[i0 - 1]:
        raise InconsistentSharedPrefix("paths differ before the split index")
    aj = cable_j.a
    return aj[i0 - 1] * rj[i0 - 1] * prod(rj[i0:]) * prod(rk[i0:])
