"""Ring specifications R = F_q[[x, y]] inside a product of power series rings.

A ring is given by its branches: pairs of polynomials (x_i(z), y_i(z)) with
small integer coefficients, read in the prime subfield of F_q.  Colors
duplicate a branch inside the ambient module Omega without changing R.

Positions of the ambient spaces are pairs (copy, k) standing for z^k in the
given copy; they are totally ordered by k + offset(copy).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .exactalg import FiniteField, FqEchelon
from .semigroup import CableData, NumSemigroup


class TruncationTooSmall(RuntimeError):
    pass


class ProportionalBranches(ValueError):
    pass


class GorensteinCheckFailed(ValueError):
    pass


class BadReduction(ValueError):
    pass


class RingSpecError(ValueError):
    pass


Series = Dict[int, int]  # exponent -> integer coefficient


def _clean(series) -> Series:
    out: Series = {}
    for c, e in series:
        if int(e) < 0:
            raise RingSpecError("negative exponent in a branch series")
        out[int(e)] = out.get(int(e), 0) + int(c)
    return {e: c for e, c in out.items() if c}


def series_mul(a: Sequence[int], b: Sequence[int], n: int, p: int) -> List[int]:
    """Product of two coefficient lists mod (z^n, p)."""
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j in range(min(len(b), n - i)):
                y = b[j]
                if y:
                    out[i + j] = (out[i + j] + x * y) % p
    return out


def series_order(a: Sequence[int]) -> Optional[int]:
    return next((i for i, c in enumerate(a) if c), None)


@dataclass(frozen=True)
class Branch:
    x: Tuple[Tuple[int, int], ...]
    y: Tuple[Tuple[int, int], ...]

    def coeffs(self, which: str, n: int, p: int) -> List[int]:
        out = [0] * n
        for e, c in _clean((c, e) for e, c in getattr(self, which)).items():
            if e < n:
                out[e] = c % p
        return out

    def to_json(self):
        return {"x": [[c, e] for e, c in self.x], "y": [[c, e] for e, c in self.y]}


def _branch(x, y) -> Branch:
    """x, y given as [[coeff, exp], ...]."""
    bx = tuple(sorted(_clean(x).items()))
    by = tuple(sorted(_clean(y).items()))
    for ser in (bx, by):
        if any(e == 0 for e, _ in ser):
            raise RingSpecError("branch series must lie in (z)")
    return Branch(bx, by)


class RingSpec:
    """A plane curve singularity ring together with colors.

    Everything derived (semigroups, conductor, echelon basis of R) is cached
    on first use; the object itself is never mutated afterwards.
    """

    def __init__(self, q: int, branches, colors: Optional[Sequence[int]] = None,
                 offsets: Optional[Sequence[Fraction]] = None,
                 truncation: Optional[int] = None,
                 reference_gamma=None, name: str = ""):
        self.field = FiniteField(q)
        self.q = q
        self.p = self.field.p
        bl = []
        for b in branches:
            if isinstance(b, Branch):
                bl.append(b)
            else:
                bl.append(_branch(b["x"], b["y"]))
        if not bl:
            raise RingSpecError("no branches")
        self.branches: Tuple[Branch, ...] = tuple(bl)
        self.kappa = len(bl)
        cols = tuple(int(c) for c in (colors or [1] * self.kappa))
        if len(cols) != self.kappa or any(c <= 0 for c in cols):
            raise RingSpecError("one positive color per branch is required")
        if list(cols) != sorted(cols, reverse=True):
            raise RingSpecError("colors must be non-increasing")
        self.colors = cols
        # copy j belongs to branch copy_branch[j]
        self.copy_branch = tuple(i for i, c in enumerate(cols) for _ in range(c))
        self.tau = len(self.copy_branch)
        if offsets is None:
            offsets = [Fraction(j, self.tau) for j in range(self.tau)]
        offsets = tuple(Fraction(o) for o in offsets)
        if len(offsets) != self.tau or not all(0 <= o < 1 for o in offsets) \
                or len(set(offsets)) != self.tau:
            raise RingSpecError("offsets must be distinct numbers in [0, 1)")
        self.offsets = offsets
        self.truncation = truncation
        self.reference_gamma = reference_gamma
        self.name = name
        for b in self.branches:
            nx = series_order(b.coeffs("x", 64, self.p))
            ny = series_order(b.coeffs("y", 64, self.p))
            if nx is None and ny is None:
                raise RingSpecError("a branch with x = y = 0 mod p")

    # ------------------------------------------------------------------
    @classmethod
    def from_json(cls, data) -> "RingSpec":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["q"]), data["branches"], data.get("colors"),
                   truncation=data.get("truncation"),
                   reference_gamma=data.get("reference_gamma"),
                   name=data.get("name", ""))

    def to_json(self):
        out = {"q": self.q, "branches": [b.to_json() for b in self.branches],
               "colors": list(self.colors)}
        if self.reference_gamma is not None:
            out["reference_gamma"] = self.reference_gamma
        if self.truncation is not None:
            out["truncation"] = self.truncation
        return out

    def with_q(self, q: int) -> "RingSpec":
        return RingSpec(q, self.branches, self.colors, self.offsets, self.truncation,
                        self.reference_gamma, self.name)

    def with_colors(self, colors) -> "RingSpec":
        return RingSpec(self.q, self.branches, colors, None, self.truncation,
                        self.reference_gamma, self.name)

    def uncolored(self) -> "RingSpec":
        return self.with_colors([1] * self.kappa)

    def __repr__(self):
        return f"RingSpec({self.name or 'custom'}, q={self.q}, colors={list(self.colors)})"

    # ------------------------------------------------------------------
    def multiplicity(self, i: int) -> int:
        b = self.branches[i]
        orders = [series_order(b.coeffs(w, 64, self.p)) for w in "xy"]
        return min(o for o in orders if o is not None)

    def branch_semigroup(self, i: int) -> NumSemigroup:
        return self._branch_data[i]

    @cached_property
    def _branch_data(self) -> Tuple[NumSemigroup, ...]:
        out = []
        for i, b in enumerate(self.branches):
            out.append(_branch_semigroup(b, self.p, self.truncation))
        return tuple(out)

    @property
    def is_unibranch(self) -> bool:
        return self.kappa == 1

    # merged ring ------------------------------------------------------
    @cached_property
    def ring_data(self) -> "RingData":
        return _ring_data(self)

    @property
    def delta(self) -> int:
        return self.ring_data.delta

    @property
    def conductor(self) -> Tuple[int, ...]:
        return self.ring_data.conductor

    def echelon_at(self, ns: Sequence[int]):
        """Reduced echelon basis of R modulo (z_i^{ns[i]}), over the prime field.

        Returns the merged (uncolored) position list and the FqEchelon.
        """
        p, kappa = self.p, self.kappa
        offs = [Fraction(i, kappa) for i in range(kappa)]
        positions = sorted_positions(ns, list(range(kappa)), offs)
        index = {pos: i for i, pos in enumerate(positions)}
        gens = [generator_series(self, i, ns[i]) for i in range(kappa)]

        def to_vec(parts):
            v = [0] * len(positions)
            for i, part in enumerate(parts):
                for k, c in enumerate(part):
                    if c:
                        v[index[(i, k)]] = c
            return v

        ech = FqEchelon(FiniteField(p), len(positions))
        ech.insert(to_vec([[1] + [0] * (n - 1) for n in ns]))
        for mv in _monomials_multi(gens, ns, p):
            ech.insert(to_vec(mv))
        return positions, ech


def _branch_semigroup(b: Branch, p: int, truncation: Optional[int]) -> NumSemigroup:
    n = truncation or 16
    while True:
        xs, ys = b.coeffs("x", n, p), b.coeffs("y", n, p)
        vals = _valuations_of_span([[1] + [0] * (n - 1)] + _monomials([xs], [ys], [n], p), n, p)
        orders = [o for o in (series_order(xs), series_order(ys)) if o is not None]
        m = min(orders)
        s = set(vals)
        # a run of m consecutive values forces everything beyond it
        run_start = next((k for k in range(n - m + 1) if all(k + j in s for j in range(m))), None)
        if run_start is not None and run_start + m <= n:
            g = NumSemigroup([v for v in range(1, run_start + m) if v in s] or [1])
            if all((v in g) == (v in s) for v in range(run_start + m)):
                return g
        if truncation:
            raise TruncationTooSmall(f"no stable run below N={n}")
        n *= 2
        if n > 4096:
            raise TruncationTooSmall("semigroup did not stabilize")


def _monomials(xs_list, ys_list, ns, p):
    """All monomials x^a y^b with a + b >= 1 that survive the truncation.

    Each is returned as the concatenation of its branch coefficient lists.
    """
    out = []
    xa = [[1] + [0] * (n - 1) for n in ns]
    a = 0
    while any(any(v) for v in xa):
        ya = xa
        b = 0
        while any(any(v) for v in ya):
            if a + b:
                out.append([c for v in ya for c in v])
            ya = [series_mul(u, y, n, p) for u, y, n in zip(ya, ys_list, ns)]
            b += 1
        xa = [series_mul(u, x, n, p) for u, x, n in zip(xa, xs_list, ns)]
        a += 1
    return out


def _monomials_multi(gens, ns, p):
    """Products of generators (per branch lists) that survive truncation.

    gens[i] lists the generator series on branch i.  Returned as per-branch
    coefficient lists.
    """
    ngen = len(gens[0])
    out = []
    seen = set()
    frontier = [((0,) * ngen, [[1] + [0] * (n - 1) for n in ns])]
    while frontier:
        nxt = []
        for expo, parts in frontier:
            for g in range(ngen):
                e2 = list(expo)
                e2[g] += 1
                e2 = tuple(e2)
                if e2 in seen:
                    continue
                seen.add(e2)
                np_ = [series_mul(u, gens[i][g], n, p) for i, (u, n) in enumerate(zip(parts, ns))]
                if any(any(v) for v in np_):
                    out.append(np_)
                    nxt.append((e2, np_))
        frontier = nxt
    return out


def _valuations_of_span(vectors, n, p) -> List[int]:
    e = FqEchelon(FiniteField(p), n)
    for v in vectors:
        e.insert(v)
    return e.pivots


@dataclass
class RingData:
    """Echelon description of R modulo a certified truncation."""

    ns: Tuple[int, ...]            # truncation per branch
    positions: List[Tuple[int, int]]  # (branch, k), sorted by valuation
    basis: Dict[int, list]         # pivot index -> reduced echelon vector
    conductor: Tuple[int, ...]
    mults: Tuple[int, ...]
    delta: int

    def index(self, branch: int, k: int) -> int:
        return self._index[(branch, k)]

    def __post_init__(self):
        self._index = {pos: i for i, pos in enumerate(self.positions)}

    @property
    def gamma_positions(self) -> List[int]:
        return sorted(self.basis)


def sorted_positions(ns: Sequence[int], copies: Sequence[int], offsets) -> List[Tuple[int, int]]:
    """Positions (copy, k) with k < ns[branch of copy], in valuation order."""
    pos = [(j, k) for j, br in enumerate(copies) for k in range(ns[br])]
    pos.sort(key=lambda jk: (jk[1] + offsets[jk[0]], jk[0]))
    return pos


def _ring_data(r: RingSpec) -> RingData:
    r.p
    kappa = r.kappa
    mults = tuple(r.multiplicity(i) for i in range(kappa))
    if kappa == 1:
        g = r.branch_semigroup(0)
        ns = [r.truncation or (g.conductor + mults[0] + 1)]
        ns[0] = max(ns[0], g.conductor + mults[0])
    else:
        ns = [r.truncation or (2 * r.branch_semigroup(i).conductor + 4 * mults[i] + 4)
              for i in range(kappa)]
    # uncolored merged offsets: one copy per branch
    [Fraction(i, kappa) for i in range(kappa)]
    while True:
        positions, ech = r.echelon_at(ns)
        index = {pos: i for i, pos in enumerate(positions)}
        # conductor: minimal n_i with every unit vector (i, k >= n_i) in R
        cond = []
        for i in range(kappa):
            k = ns[i]
            while k > 0:
                u = [0] * len(positions)
                u[index[(i, k - 1)]] = 1
                if ech.contains(u):
                    k -= 1
                else:
                    break
            cond.append(k)
        # certification: N_i >= n_i + m_i makes the truncated answer exact
        if all(ns[i] >= cond[i] + mults[i] for i in range(kappa)):
            delta = len(positions) - len(ech)
            rd = RingData(tuple(ns), positions, dict(ech.rows), tuple(cond), mults, delta)
            if r.reference_gamma is not None:
                _check_reference(r, rd)
            return rd
        if r.truncation:
            raise TruncationTooSmall(f"truncation {ns} below conductor + multiplicity")
        ns = [max(ns[i], cond[i] + mults[i]) * 2 for i in range(kappa)]
        if max(ns) > 4096:
            raise TruncationTooSmall("conductor did not stabilize")


def _check_reference(r: RingSpec, rd: RingData):
    ref = r.reference_gamma
    if r.kappa == 1:
        if isinstance(ref, dict):
            ref = ref.get("generators")
        want = NumSemigroup(ref)
        got = r.branch_semigroup(0)
        if want != got:
            raise BadReduction(f"semigroup {list(got.generators)} differs from the "
                               f"reference {list(want.generators)} at p={r.p}")


# public operations ---------------------------------------------------------------

@dataclass(frozen=True)
class GammaSet:
    branch_semigroups: Tuple[NumSemigroup, ...]
    merged: Tuple[Fraction, ...]   # valuations of R below the truncation, with offsets

    def to_json(self):
        return {"branches": [g.to_json() for g in self.branch_semigroups],
                "merged": [str(v) for v in self.merged]}


def compute_gamma_set(r: RingSpec) -> GammaSet:
    rd = r.ring_data
    offs = [Fraction(i, r.kappa) for i in range(r.kappa)]
    merged = tuple(rd.positions[i][1] + offs[rd.positions[i][0]] for i in rd.gamma_positions)
    return GammaSet(tuple(r.branch_semigroup(i) for i in range(r.kappa)), merged)


@dataclass(frozen=True)
class ConductorData:
    exponents: Tuple[int, ...]
    length: int  # dim O / c

    def to_json(self):
        return {"exponents": list(self.exponents), "length": self.length}


def compute_conductor(r: RingSpec, check_gorenstein: bool = True) -> ConductorData:
    rd = r.ring_data
    cd = ConductorData(rd.conductor, sum(rd.conductor))
    if check_gorenstein and cd.length != 2 * rd.delta:
        raise GorensteinCheckFailed(f"dim O/c = {cd.length} but 2*delta = {2 * rd.delta}")
    return cd


def _defining_relation(b: Branch, p: int):
    """A minimal polynomial relation P(x, y) = 0 along a branch.

    Found by a nullspace search over monomials x^a y^b in growing boxes;
    exact because the branch series are polynomials.
    """
    F = FiniteField(p)
    xs, ys = dict(b.x), dict(b.y)
    dx = max(xs) if xs else 0
    dy = max(ys) if ys else 0
    if not xs:
        return {(1, 0): 1}
    if not ys:
        return {(0, 1): 1}
    for size in range(1, dx + dy + 2):
        boxes = [(A, size - A) for A in range(size + 1)]
        for A, B in boxes:
            mons = [(a, bb) for a in range(A + 1) for bb in range(B + 1) if a + bb > 0]
            n = A * dx + B * dy + 1
            xc, yc = b.coeffs("x", n, p), b.coeffs("y", n, p)
            cols = []
            for a, bb in mons:
                v = [1] + [0] * (n - 1)
                for _ in range(a):
                    v = series_mul(v, xc, n, p)
                for _ in range(bb):
                    v = series_mul(v, yc, n, p)
                cols.append(v)
            rows = [[cols[j][i] for j in range(len(mons))] for i in range(n)]
            from .exactalg import fq_solve
            sol = fq_solve(F, rows, [0] * n, len(mons))
            if sol and sol[1]:
                ker = sol[1][0]
                return {m: c for m, c in zip(mons, ker) if c}
    raise RingSpecError("no polynomial relation found")


def intersection_number(r: RingSpec, i: int, j: int) -> int:
    p = r.p
    rel = _defining_relation(r.branches[j], p)
    bi = r.branches[i]
    n = 64
    while True:
        xc, yc = bi.coeffs("x", n, p), bi.coeffs("y", n, p)
        tot = [0] * n
        for (a, b), c in rel.items():
            v = [1] + [0] * (n - 1)
            for _ in range(a):
                v = series_mul(v, xc, n, p)
            for _ in range(b):
                v = series_mul(v, yc, n, p)
            tot = [(s + c * w) % p for s, w in zip(tot, v)]
        o = series_order(tot)
        if o is not None:
            return o
        if n >= 1024:
            raise ProportionalBranches(f"branches {i} and {j} coincide")
        n *= 2


def total_delta(r: RingSpec) -> int:
    """delta from branch semigroups and intersection numbers.

    The sum is compared with dim O/R from the echelon basis of R.
    """
    d = sum(r.branch_semigroup(i).delta for i in range(r.kappa))
    for i in range(r.kappa):
        for j in range(i + 1, r.kappa):
            d += intersection_number(r, i, j)
    direct = r.ring_data.delta
    if d != direct:
        raise AssertionError(f"delta from intersections {d} != direct {direct}")
    return d


def check_good_reduction(r: RingSpec, reference: RingSpec) -> bool:
    """Same semigroups and delta as a reference spec (e.g. another characteristic)."""
    if r.kappa != reference.kappa:
        return False
    same = all(r.branch_semigroup(i) == reference.branch_semigroup(i) for i in range(r.kappa))
    return same and r.delta == reference.delta


# presets ---------------------------------------------------------------------------

def _mono(c, e):
    return [[c, e]]


def torus_spec(r: int, s: int, q: int, colors=None) -> RingSpec:
    d = gcd(r, s)
    a, b = sorted((r // d, s // d))
    if d == 1:
        return RingSpec(q, [{"x": _mono(1, a), "y": _mono(1, b)}], colors,
                        reference_gamma=[a, b], name=f"torus {r} {s}")
    if a == 1 and b == 1:
        return hopf_spec(d, q, colors)
    p = FiniteField(q).p
    # d branches x = mu z^a, y = z^b with pairwise distinct mu^b mod p
    mus, seen = [], set()
    for mu in [1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6]:
        key = pow(mu, b, p)
        if mu % p and key not in seen:
            seen.add(key)
            mus.append(mu)
        if len(mus) == d:
            break
    if len(mus) < d:
        raise BadReduction(f"torus link T({r},{s}) needs more distinct roots than F_{p} has")
    br = [{"x": _mono(mu, a), "y": _mono(1, b)} for mu in mus]
    return RingSpec(q, br, colors, name=f"torus {r} {s}")


def hopf_spec(k: int, q: int, colors=None) -> RingSpec:
    """k lines through the origin; k = 2 gives xy = 0, k = 3 gives (x - y)xy = 0."""
    if k < 1:
        raise RingSpecError("hopf needs k >= 1")
    if k == 1:
        br = [{"x": _mono(1, 1), "y": []}]
    elif k == 2:
        br = [{"x": _mono(1, 1), "y": []}, {"x": [], "y": _mono(1, 1)}]
    else:
        p = FiniteField(q).p
        if k - 2 > p:
            raise BadReduction(f"{k} distinct lines need p >= {k - 2}")
        br = [{"x": _mono(1, 1), "y": _mono(lam, 1)} for lam in range(1, k - 1)]
        br += [{"x": _mono(1, 1), "y": []}, {"x": [], "y": _mono(1, 1)}]
    return RingSpec(q, br, colors, name=f"hopf {k}")


def double_trefoil_spec(q: int, colors=None) -> RingSpec:
    if FiniteField(q).p == 2:
        raise BadReduction("the double trefoil spec needs p != 2")
    br = [{"x": _mono(1, 2), "y": _mono(1, 3)}, {"x": _mono(-1, 2), "y": _mono(1, 3)}]
    return RingSpec(q, br, colors, name="double-trefoil")


def trefoil_unknot_spec(lk: int, q: int, colors=None) -> RingSpec:
    if lk == 2:
        second = {"x": _mono(1, 1), "y": _mono(1, 1)}
    elif lk == 3:
        second = {"x": _mono(1, 1), "y": _mono(1, 2)}
    else:
        raise RingSpecError("trefoil-unknot supports linking numbers 2 and 3")
    br = [{"x": _mono(1, 2), "y": _mono(1, 3)}, second]
    return RingSpec(q, br, colors, name=f"trefoil-unknot {lk}")


def cable_spec(pairs, q: int, colors=None) -> RingSpec:
    """Iterated torus knot from Newton pairs.

    x = z^n and y is a truncated Puiseux expansion.  When the reduction mod p
    is bad (the semigroup changes) a small list of perturbed parametrizations
    is tried; the first one with the expected semigroup is used.
    """
    cab = CableData(tuple(tuple(pq) for pq in pairs))
    r = cab.r
    n = 1
    for ri in r:
        n *= ri
    betas, prev = [], 0
    for i, (ri, si) in enumerate(cab.pairs):
        rest = 1
        for rj in r[i + 1:]:
            rest *= rj
        prev = prev + si * rest if i else si * rest
        betas.append(prev)
    gens = list(cab.generators())
    y = [[1, bt] for bt in betas]
    candidates = [({"x": _mono(1, n), "y": y})]
    candidates.append({"x": [[1, n], [1, n + 1]], "y": [[1, betas[0]]] + [[1, bt] for bt in betas[1:]]})
    candidates.append({"x": [[1, n], [1, n + 1]], "y": [[1, betas[0]]]})
    candidates.append({"x": _mono(1, n), "y": [[1, bt] for bt in betas] + [[1, betas[-1] + 1]]})
    last = None
    for cand in candidates:
        try:
            spec = RingSpec(q, [cand], colors, reference_gamma=gens,
                            name="cable " + " ".join(f"{a} {b}" for a, b in cab.pairs))
            spec.ring_data
            return spec
        except BadReduction as exc:
            last = exc
    raise last


def parse_preset(words: Sequence[str], q: int, colors=None) -> RingSpec:
    words = list(words)
    if not words:
        raise RingSpecError("empty preset")
    head, args = words[0], words[1:]
    try:
        nums = [int(w) for w in args]
    except ValueError:
        raise RingSpecError(f"non-integer preset arguments: {args}")
    if head == "torus" and len(nums) == 2:
        return torus_spec(nums[0], nums[1], q, colors)
    if head == "cable" and nums and len(nums) % 2 == 0:
        return cable_spec(list(zip(nums[::2], nums[1::2])), q, colors)
    if head == "hopf" and len(nums) == 1:
        return hopf_spec(nums[0], q, colors)
    if head == "double-trefoil" and not nums:
        return double_trefoil_spec(q, colors)
    if head == "trefoil-unknot" and len(nums) == 1:
        return trefoil_unknot_spec(nums[0], q, colors)
    if head == "monomial" and nums:
        return monomial_spec(nums, q, colors)
    raise RingSpecError(f"unknown preset {' '.join(words)!r}")


def monomial_spec(gens: Sequence[int], q: int, colors=None) -> RingSpec:
    """F_q[[z^g1, z^g2, ...]]; more than two generators are allowed here.

    Rings with three or more generators need not be plane curves; the x, y
    slots then hold the first two and the rest go to extra generators.
    """
    gens = sorted(gens)
    if len(gens) <= 2:
        gx = gens[0]
        gy = gens[1] if len(gens) > 1 else gens[0]
        return RingSpec(q, [{"x": _mono(1, gx), "y": _mono(1, gy)}], colors,
                        reference_gamma=gens, name="monomial " + ",".join(map(str, gens)))
    return ExtraGenRingSpec(q, gens, colors)


class ExtraGenRingSpec(RingSpec):
    """Unibranch monomial ring with any number of generators z^g."""

    def __init__(self, q, gens, colors=None):
        super().__init__(q, [{"x": _mono(1, gens[0]), "y": _mono(1, gens[1])}], colors,
                         reference_gamma=list(gens), name="monomial " + ",".join(map(str, gens)))
        self.extra_gens = tuple(gens[2:])
        self.all_gens = tuple(gens)

    def with_q(self, q):
        return ExtraGenRingSpec(q, self.all_gens, self.colors)

    def with_colors(self, colors):
        return ExtraGenRingSpec(self.q, self.all_gens, colors)

    @cached_property
    def _branch_data(self):
        return (NumSemigroup(self.all_gens),)

    def generator_series(self, n: int, p: int):
        """Coefficient lists of all R-generators on the single branch."""
        out = []
        for gexp in self.all_gens:
            v = [0] * n
            if gexp < n:
                v[gexp] = 1
            out.append(v)
        return out

    def to_json(self):
        return {"q": self.q, "monomial": list(self.all_gens), "colors": list(self.colors)}


def generator_series(r: RingSpec, branch: int, n: int) -> List[List[int]]:
    """Coefficient lists (mod z^n) of the generators of m_R on one branch."""
    if isinstance(r, ExtraGenRingSpec):
        return r.generator_series(n, r.p)
    b = r.branches[branch]
    return [b.coeffs("x", n, r.p), b.coeffs("y", n, r.p)]


def spec_from_json_any(data) -> RingSpec:
    if isinstance(data, str):
        data = json.loads(data)
    if "monomial" in data:
        return monomial_spec(data["monomial"], int(data["q"]), data.get("colors"))
    return RingSpec.from_json(data)
