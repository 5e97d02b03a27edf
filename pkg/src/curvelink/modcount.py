"""Exhaustive enumeration of standard modules, flags and ideals over F_q.

Modules are stored in reduced echelon form with respect to the valuation
order of the ambient positions.  The search runs from the highest position
down; at a pivot p the row is v_p = e_p + sum c_g e_g over the non-pivots g
above p, and R-invariance of v_p is an affine-linear condition on the c_g
because everything above p is already fixed.  Solving that system over F_q
and walking its solution set visits every module exactly once.

Two ambient kinds share the search:

* modules: Omega modulo z^(n_i+m_i) on every copy (n_i conductor exponent,
  m_i multiplicity).  Standard modules contain c*Omega and m_R M contains
  the truncation, so dimensions and q-ranks are exact.
* ideals: R modulo (z_i^{L_i}), using the echelon basis of R as coordinates.
  An ideal of colength b contains m^b, which pins down L_i.
"""

from __future__ import annotations

import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exactalg import FiniteField, FqEchelon, fq_solve
from .semigroup import GammaModule, NumSemigroup, enumerate_standard_delta
from .singularity import RingSpec, generator_series, sorted_positions

DEFAULT_BUDGET = 24


class BudgetExceeded(RuntimeError):
    def __init__(self, params, budget):
        super().__init__(f"cell needs {params} free coefficients, budget is {budget}")
        self.params = params
        self.budget = budget


# ambient spaces ------------------------------------------------------------------

@dataclass
class Ambient:
    field: FiniteField
    positions: List[Tuple[int, int]]     # (copy, k), increasing valuation
    ops: List[List[List[Tuple[int, int]]]]  # ops[o][j] = sparse image of basis j
    frozen: FrozenSet[int]               # always-pivot positions with zero rows
    forced: FrozenSet[int]               # must be pivots (standardness)
    kind: str                            # "module" or "ideal"
    max_np: int
    copies: int
    # per branch: (level-0 indices of its copies, color); the level-0 image
    # of a standard module must have full rank on each block
    blocks: Tuple[Tuple[Tuple[int, ...], int], ...] = ()

    @property
    def size(self):
        return len(self.positions)


def module_ambient(r: RingSpec) -> Ambient:
    rd = r.ring_data
    F = r.field
    ns = [rd.conductor[i] + rd.mults[i] for i in range(r.kappa)]
    positions = sorted_positions(ns, r.copy_branch, r.offsets)
    index = {pos: i for i, pos in enumerate(positions)}
    gens_per_branch = [generator_series(r, i, ns[i]) for i in range(r.kappa)]
    ngen = len(gens_per_branch[0])
    ops = []
    for g in range(ngen):
        cols = []
        for (j, k) in positions:
            br = r.copy_branch[j]
            ser = gens_per_branch[br][g]
            col = [(index[(j, k + l)], c) for l, c in enumerate(ser) if c and k + l < ns[br]]
            cols.append(col)
        ops.append(cols)
    frozen = frozenset(i for i, (j, k) in enumerate(positions) if k >= rd.conductor[r.copy_branch[j]])
    if r.kappa == 1:
        # one block: the level-0 image is all of F^c, so every level-0
        # position is a pivot, and M contains a copy of R^c (deg <= c*delta)
        forced = frozenset(i for i, (j, k) in enumerate(positions) if k == 0)
        return Ambient(F, positions, ops, frozen, forced, "module", r.colors[0] * r.delta, r.tau)
    blocks = []
    for b in range(r.kappa):
        idx = tuple(i for i, (j, k) in enumerate(positions) if k == 0 and r.copy_branch[j] == b)
        blocks.append((idx, r.colors[b]))
    # no cheap degree bound here: over small fields the level-0 image need
    # not contain a vector that is a unit on every branch
    free = len(positions) - len(frozen)
    return Ambient(F, positions, ops, frozen, frozenset(), "module", free, r.tau, tuple(blocks))


def ideal_ambient(r: RingSpec, max_colength: int) -> Ambient:
    rd = r.ring_data
    F = r.field
    B = max_colength
    if r.kappa == 1:
        # a missing valuation x of an ideal of colength b satisfies x < 2delta + b,
        # and m_R I has colength at most b + mult
        ns = [max(2 * rd.delta + B + rd.mults[0], rd.conductor[0] + rd.mults[0])]
    else:
        # m_R^(B+1) contains z_i^(n_i + (B+1) m_i) on every branch
        ns = [rd.conductor[i] + (B + 1) * rd.mults[i] for i in range(r.kappa)]
    mpos, ech = r.echelon_at(ns)
    piv = ech.pivots
    positions = [mpos[i] for i in piv]
    basis = [ech.rows[i] for i in piv]
    col_of = {p: n for n, p in enumerate(piv)}
    mindex = {pos: i for i, pos in enumerate(mpos)}
    p = r.p
    gens = [generator_series(r, i, ns[i]) for i in range(r.kappa)]
    ngen = len(gens[0])
    ops = []
    for g in range(ngen):
        cols = []
        for vec in basis:
            # multiply branchwise, then read coordinates at the pivots of R
            prod = [0] * len(mpos)
            for i in range(r.kappa):
                ser = gens[i][g]
                for k in range(ns[i]):
                    c = vec[mindex[(i, k)]]
                    if c:
                        for l, s in enumerate(ser):
                            if s and k + l < ns[i]:
                                t = mindex[(i, k + l)]
                                prod[t] = (prod[t] + c * s) % p
            if not ech.contains(prod):
                raise AssertionError("R is not closed under its generators")
            col = [(col_of[i], prod[i]) for i in piv if prod[i]]
            cols.append(col)
        ops.append(cols)
    return Ambient(F, positions, ops, frozenset(), frozenset(), "ideal", B, r.kappa)


# the search ------------------------------------------------------------------------

@dataclass
class Leaf:
    pivots: Tuple[int, ...]
    np_list: Tuple[int, ...]
    rows: Dict[int, Tuple[int, ...]]
    deg: int
    rk: int
    dd: int


class _Search:
    def __init__(self, amb: Ambient, pattern=None, prefix=None, budget=DEFAULT_BUDGET,
                 keep=False, max_np=None):
        self.amb = amb
        self.F = amb.field
        self.pattern = pattern
        self.prefix = prefix or {}
        self.budget = budget
        self.keep = keep
        self.max_np = amb.max_np if max_np is None else max_np
        self.np_list: List[int] = []
        self.np_slot: Dict[int, int] = {}
        self.rows: Dict[int, List[int]] = {}
        self.rop: Dict[int, List[List[int]]] = {}
        self.counts: Dict[Tuple[int, ...], Counter] = defaultdict(Counter)
        self.leaves: List[Leaf] = []
        self.nops = len(amb.ops)
        self.level0 = frozenset(i for idx, _ in amb.blocks for i in idx)

    def reduce(self, col) -> List[int]:
        F = self.F
        add, mul, sub = F.add, F.mul, F.sub
        out = [0] * len(self.np_list)
        slot, rows = self.np_slot, self.rows
        for i, c in col:
            s = slot.get(i)
            if s is not None:
                out[s] = add[out[s]][c]
            else:
                row = rows.get(i)
                if row:
                    mc = mul[c]
                    for t, rc in enumerate(row):
                        if rc:
                            out[t] = sub[out[t]][mc[rc]]
        return out

    def run(self):
        self._walk(self.amb.size - 1, 0)
        return self

    def _choices(self, j):
        amb = self.amb
        if j in amb.frozen:
            return ("frozen",)
        if self.pattern is not None:
            return ("pivot",) if j in self.pattern else ("np",)
        if j in self.prefix:
            return ("pivot",) if self.prefix[j] else ("np",)
        if j in amb.forced:
            return ("pivot",)
        return ("np", "pivot")

    def _walk(self, j, used):
        if j < 0:
            self._leaf()
            return
        for choice in self._choices(j):
            if choice == "frozen":
                self.rows[j] = []
                self._walk(j - 1, used)
                del self.rows[j]
            elif choice == "np":
                if len(self.np_list) >= self.max_np:
                    continue
                rop = [self.reduce(op[j]) for op in self.amb.ops]
                self.np_slot[j] = len(self.np_list)
                self.np_list.append(j)
                self.rop[j] = rop
                self._walk(j - 1, used)
                self.np_list.pop()
                del self.np_slot[j]
                del self.rop[j]
            else:
                self._pivot(j, used)

    def _pivot(self, j, used):
        F = self.F
        n = len(self.np_list)
        rhs_parts = [self.reduce(op[j]) for op in self.amb.ops]
        rows, rhs = [], []
        for o in range(self.nops):
            for t in range(n):
                row = []
                for g in self.np_list:
                    vec = self.rop[g][o]
                    row.append(vec[t] if t < len(vec) else 0)
                rows.append(row)
                rhs.append(F.neg[rhs_parts[o][t]])
        sol = fq_solve(F, rows, rhs, n) if n else (([], []) if not any(rhs) else None)
        if sol is None:
            return
        part, kernel = sol
        k = len(kernel)
        if used + k > self.budget:
            raise BudgetExceeded(used + k, self.budget)
        add, mul = F.add, F.mul
        for coeffs in _all_combinations(F, k):
            c = list(part)
            for lam, kv in zip(coeffs, kernel):
                if lam:
                    ml = mul[lam]
                    c = [add[a][ml[b]] for a, b in zip(c, kv)]
            self.rows[j] = c
            self._walk(j - 1, used + k)
        del self.rows[j]

    # statistics ------------------------------------------------------------
    def _standard(self) -> bool:
        F = self.F
        for idx, c in self.amb.blocks:
            # level-0 parts of the rows: rows with a level-0 pivot, restricted
            vecs = []
            for p, row in self.rows.items():
                if p in self.level0:
                    v = {}
                    if p in idx:
                        v[p] = 1
                    for s, cs in enumerate(row):
                        g = self.np_list[s]
                        if cs and g in idx:
                            v[g] = cs
                    vecs.append(v)
            if _sparse_rank(F, vecs) < c:
                return False
        return True

    def _leaf(self):
        amb = self.amb
        F = self.F
        if amb.blocks and not self._standard():
            return
        deg = len(self.np_list)
        pivots = tuple(sorted(self.rows))
        # rank of m_R M: span of op * v_p over all pivots
        vecs = []
        for p in pivots:
            row = self.rows[p]
            for op in amb.ops:
                v = {}
                for i, c in op[p]:
                    v[i] = F.add[v.get(i, 0)][c]
                for s, cs in enumerate(row):
                    if cs:
                        g = self.np_list[s]
                        mc = F.mul[cs]
                        for i, c in op[g]:
                            v[i] = F.add[v.get(i, 0)][mc[c]]
                vecs.append(v)
        rank_m = _sparse_rank(F, vecs)
        rk = len(pivots) - rank_m
        # d-diamond: kernel of f -> (reduce(op f))_op on the non-pivots
        cols = []
        for g in self.np_list:
            vec = []
            for o in range(self.nops):
                part = self.rop[g][o]
                vec.extend(part + [0] * (deg - len(part)))
            cols.append(vec)
        dd = deg - _dense_rank(F, cols, self.nops * deg)
        key = tuple(p for p in pivots if p not in amb.frozen)
        self.counts[key][(rk, dd, deg)] += 1
        if self.keep:
            self.leaves.append(Leaf(pivots, tuple(self.np_list),
                                    {p: tuple(self.rows[p]) for p in pivots if p not in amb.frozen},
                                    deg, rk, dd))


def _all_combinations(F, k):
    if k == 0:
        yield ()
        return
    q = F.q
    for n in range(q ** k):
        out = []
        for _ in range(k):
            out.append(n % q)
            n //= q
        yield tuple(out)


def _sparse_rank(F, vecs) -> int:
    if F.q == 2:
        basis = {}
        for v in vecs:
            m = 0
            for i, c in v.items():
                if c:
                    m |= 1 << i
            while m:
                top = m.bit_length() - 1
                b = basis.get(top)
                if b is None:
                    basis[top] = m
                    break
                m ^= b
        return len(basis)
    basis: Dict[int, Dict[int, int]] = {}
    add, mul, neg, inv = F.add, F.mul, F.neg, F.inv
    for v in vecs:
        v = {i: c for i, c in v.items() if c}
        while v:
            top = max(v)
            b = basis.get(top)
            if b is None:
                ic = inv[v[top]]
                basis[top] = {i: mul[ic][c] for i, c in v.items()}
                break
            f = neg[v[top]]
            for i, c in b.items():
                x = add[v.get(i, 0)][mul[f][c]]
                if x:
                    v[i] = x
                else:
                    v.pop(i, None)
    return len(basis)


def _dense_rank(F, vecs, n) -> int:
    return _sparse_rank(F, [{i: c for i, c in enumerate(v) if c} for v in vecs])


# censuses --------------------------------------------------------------------------

@dataclass
class CellCensus:
    """Counts of modules in one cell, keyed by (rk, d_diamond, deg)."""

    delta_D: object
    counts: Counter
    pivots: Tuple[int, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.counts

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def deg(self) -> Optional[int]:
        degs = {k[2] for k in self.counts}
        return degs.pop() if len(degs) == 1 else None

    def by_rank(self) -> Counter:
        out = Counter()
        for (rk, dd, deg), n in self.counts.items():
            out[rk] += n
        return out

    def to_json(self):
        merged = Counter()
        for (rk, dd, deg), n in self.counts.items():
            merged[(rk, dd)] += n
        return {"delta_D": self.delta_D,
                "counts": [{"rk": rk, "ddiamond": dd, "n": n} for (rk, dd), n in sorted(merged.items())],
                "empty": self.empty}


def _unit_jobs(jobs):
    if jobs is None:
        jobs = int(os.environ.get("CURVELINK_JOBS", "1") or 1)
    return max(1, int(jobs))


def _run_unit(args):
    amb, pattern, prefix, budget, keep = args
    s = _Search(amb, pattern=pattern, prefix=prefix, budget=budget, keep=keep).run()
    return dict(s.counts), s.leaves


def _map(units, jobs):
    jobs = _unit_jobs(jobs)
    if jobs == 1 or len(units) == 1:
        return [_run_unit(u) for u in units]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(_run_unit, units))


def module_pattern(amb: Ambient, r: RingSpec, deltas) -> FrozenSet[int]:
    """Pivot pattern for a tuple of standard Gamma-modules, one per copy."""
    want = set()
    for i, (j, k) in enumerate(amb.positions):
        if i in amb.frozen or k in deltas[j]:
            want.add(i)
    return frozenset(want)


def describe_cell(amb: Ambient, r: RingSpec, pivots) -> object:
    """Cell descriptor for JSON: D-set(s) for unibranch rings, else positions."""
    if r.kappa == 1:
        g = r.branch_semigroup(0)
        per_copy = [[] for _ in range(r.tau)]
        for i in pivots:
            j, k = amb.positions[i]
            if k not in g:
                per_copy[j].append(k)
        per_copy = [sorted(d) for d in per_copy]
        return per_copy[0] if r.tau == 1 else per_copy
    return [list(amb.positions[i]) for i in sorted(pivots)]


def enumerate_cell(r: RingSpec, delta, budget=DEFAULT_BUDGET, keep=False) -> CellCensus:
    """Census of one cell of a unibranch ring.

    delta is a GammaModule (or a D list) for uncolored rings, or a sequence
    of them, one per copy, for colored ones.
    """
    if r.kappa != 1:
        raise ValueError("enumerate_cell takes unibranch rings; use enumerate_all_standard")
    amb = module_ambient(r)
    g = r.branch_semigroup(0)
    deltas = _as_delta_tuple(r, g, delta)
    pattern = module_pattern(amb, r, deltas)
    counts, leaves = _run_unit((amb, pattern, None, budget, keep))
    c = Counter()
    for v in counts.values():
        c.update(v)
    cen = CellCensus(describe_cell(amb, r, pattern), c, tuple(sorted(pattern - amb.frozen)))
    if keep:
        cen.leaves = leaves
    return cen


def _as_delta_tuple(r, g, delta):
    def one(d):
        if isinstance(d, GammaModule):
            return set(d.D) | _members(g)
        return set(GammaModule(g, tuple(d)).D) | _members(g)
    if r.tau == 1:
        if isinstance(delta, (list, tuple)) and delta and isinstance(delta[0], (list, tuple, GammaModule)):
            delta = delta[0]
        return [one(delta)]
    if len(delta) != r.tau:
        raise ValueError("one Delta per copy is required")
    return [one(d) for d in delta]


def _members(g: NumSemigroup):
    return {k for k in range(g.conductor + g.mult + 1) if k in g}


def standard_cells(r: RingSpec):
    """All tuples of standard Delta (one per copy) for a unibranch ring."""
    from itertools import product
    g = r.branch_semigroup(0)
    ds = enumerate_standard_delta(g)
    return list(product(ds, repeat=r.tau))


def enumerate_all_standard(r: RingSpec, budget=DEFAULT_BUDGET, jobs=None,
                           keep=False) -> List[CellCensus]:
    amb = module_ambient(r)
    if r.kappa == 1:
        cells = standard_cells(r)
        g = r.branch_semigroup(0)
        patterns = [module_pattern(amb, r, [set(d.D) | _members(g) for d in cell]) for cell in cells]
        units = [(amb, pat, None, budget, keep) for pat in patterns]
        results = _map(units, jobs)
        out = []
        for pat, (counts, leaves) in zip(patterns, results):
            c = Counter()
            for v in counts.values():
                c.update(v)
            cen = CellCensus(describe_cell(amb, r, pat), c, tuple(sorted(pat - amb.frozen)))
            if keep:
                cen.leaves = leaves
            out.append(cen)
        return out
    # multibranch: free search, split on the top free positions
    units = _free_units(amb, budget, keep, jobs)
    results = _map(units, jobs)
    return _merge_free(amb, r, results, keep)


def _free_units(amb, budget, keep, jobs, split=None):
    free = [j for j in range(amb.size - 1, -1, -1) if j not in amb.frozen and j not in amb.forced]
    if split is None:
        split = 0 if _unit_jobs(jobs) == 1 else min(len(free), 4)
    top = free[:split]
    units = []
    for n in range(2 ** len(top)):
        prefix = {j: bool((n >> b) & 1) for b, j in enumerate(top)}
        units.append((amb, None, prefix, budget, keep))
    return units


def _merge_free(amb, r, results, keep):
    merged: Dict[Tuple[int, ...], Counter] = defaultdict(Counter)
    leaves_by: Dict[Tuple[int, ...], list] = defaultdict(list)
    for counts, leaves in results:
        for key, c in counts.items():
            merged[key].update(c)
        for lf in leaves:
            leaves_by[tuple(p for p in lf.pivots if p not in amb.frozen)].append(lf)
    out = []
    for key in sorted(merged, key=lambda k: (len(k), k)):
        cen = CellCensus(describe_cell(amb, r, key), merged[key], key)
        if keep:
            cen.leaves = leaves_by[key]
        out.append(cen)
    return out


def census_counts(cells: Sequence[CellCensus]) -> Counter:
    """Totals keyed by (rk, d_diamond, deg)."""
    out = Counter()
    for c in cells:
        out.update(c.counts)
    return out


# flags -----------------------------------------------------------------------------

def _full_vector(amb: Ambient, lf: Leaf, p: int) -> List[int]:
    v = [0] * amb.size
    v[p] = 1
    row = lf.rows.get(p, ())
    for s, c in enumerate(row):
        if c:
            v[lf.np_list[s]] = c
    return v


def _module_key(F, vectors, n) -> Tuple:
    e = FqEchelon(F, n)
    for v in vectors:
        e.insert(v)
    return tuple((p, tuple(e.rows[p])) for p in sorted(e.rows))


def count_standard_flags(r: RingSpec, max_len: int, budget=DEFAULT_BUDGET) -> Counter:
    """Standard flags M_0 < ... < M_l, keyed by (l, deg(M_l)).

    Brute force: each step adds v = z^g (1 + ...) with g above the previous
    added valuation; M + F v is R-invariant exactly when m_R v is in M.  Every
    candidate line is tested directly and the extended module is located in
    the full list of standard modules by its canonical echelon form.
    """
    cells = enumerate_all_standard(r, budget=budget, jobs=1, keep=True)
    amb = module_ambient(r)
    F = amb.field
    n = amb.size
    modules = {}
    for cen in cells:
        for lf in cen.leaves:
            vecs = [_full_vector(amb, lf, p) for p in lf.pivots if p not in amb.frozen]
            vecs += [[1 if i == p else 0 for i in range(n)] for p in amb.frozen]
            key = _module_key(F, vecs, n)
            modules[key] = (lf, vecs)
    memo = {}

    def extensions(key):
        lf, vecs = modules[key]
        out = []
        np_list = lf.np_list
        # candidate v: combinations of non-pivot unit vectors, lowest entry 1
        for lead_slot in range(len(np_list)):
            g = np_list[lead_slot]
            rest = [s for s in range(len(np_list)) if np_list[s] > g]
            for coeffs in _all_combinations(F, len(rest)):
                v = [0] * n
                v[g] = 1
                for s, c in zip(rest, coeffs):
                    v[np_list[s]] = c
                if _invariant_extension(amb, F, vecs, v):
                    k2 = _module_key(F, vecs + [v], n)
                    if k2 not in modules:
                        raise AssertionError("extension is not a standard module")
                    out.append((g, k2))
        return out

    ext_cache = {}

    def phi(key, last):
        if (key, last) in memo:
            return memo[(key, last)]
        lf = modules[key][0]
        res = Counter({(0, lf.deg): 1})
        if key not in ext_cache:
            ext_cache[key] = extensions(key)
        for g, k2 in ext_cache[key]:
            if last is None or g > last:
                sub = phi(k2, g)
                for (l, d), c in sub.items():
                    if l + 1 <= max_len:
                        res[(l + 1, d)] += c
        memo[(key, last)] = res
        return res

    total = Counter()
    for key in modules:
        total.update(phi(key, None))
    return total


def _invariant_extension(amb, F, vecs, v) -> bool:
    e = FqEchelon(F, amb.size)
    for w in vecs:
        e.insert(w)
    e.insert(v)
    for op in amb.ops:
        img = [0] * amb.size
        for i, c in enumerate(v):
            if c:
                for t, s in op[i]:
                    img[t] = F.add[img[t]][F.mul[c][s]]
        if not e.contains(img):
            return False
    return True


# ideals ----------------------------------------------------------------------------

def enumerate_ideals(r: RingSpec, max_colength: int, budget=DEFAULT_BUDGET, jobs=None) -> Counter:
    """All ideals of colength <= max_colength, keyed by (colength, rk)."""
    if r.tau != r.kappa:
        raise ValueError("ideals are enumerated for uncolored rings only")
    amb = ideal_ambient(r, max_colength)
    units = _free_units(amb, budget, False, jobs)
    results = _map(units, jobs)
    out = Counter()
    for counts, _ in results:
        for key, c in counts.items():
            for (rk, dd, deg), n in c.items():
                out[(deg, rk)] += n
    return out


def principal_ideal_counts(r: RingSpec, max_colength: int) -> Counter:
    """Principal ideals fR by colength, found by brute force over f.

    Each f in R modulo the truncation generates fR = span of f times the
    basis of R; ideals are deduplicated by their echelon forms.
    """
    amb = ideal_ambient(r, max_colength)
    F = amb.field
    n = amb.size
    seen = set()
    out = Counter()
    uni = r.kappa == 1
    cond = r.ring_data.conductor[0]
    for lead in range(n):
        kl = amb.positions[lead][1]
        if uni and kl > max_colength:
            break
        # for one branch fR contains z^(nu(f)+c) O, so later terms are irrelevant
        higher = [i for i in range(lead + 1, n)
                  if not uni or amb.positions[i][1] < kl + cond]
        # f and lambda f give the same ideal, so the leading coefficient is 1
        for coeffs in _all_combinations(F, len(higher)):
            f = [0] * n
            f[lead] = 1
            for i, c in zip(higher, coeffs):
                f[i] = c
            # f times the basis of R: apply monomials in the generators
            frontier = [f]
            e = FqEchelon(F, n)
            e.insert(f)
            while frontier:
                nxt = []
                for w in frontier:
                    for op in amb.ops:
                        img = [0] * n
                        for i, c in enumerate(w):
                            if c:
                                for t, s in op[i]:
                                    img[t] = F.add[img[t]][F.mul[c][s]]
                        if e.insert(img):
                            nxt.append(img)
                frontier = nxt
            colength = n - len(e)
            if colength > max_colength:
                continue
            key = tuple((p, tuple(e.rows[p])) for p in sorted(e.rows))
            if key not in seen:
                seen.add(key)
                out[colength] += 1
    return out
