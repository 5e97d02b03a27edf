"""Command-line front end: ``curvelink <subcommand> ...``.

Exit status: 0 success, 1 a requested check failed, 2 usage error,
3 an enumeration or word budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .exactalg import ONE, T, ZERO, ExactPoly, mono, parse, psum
from .superpoly import Fixture, load_fixtures, parse_fixture_file  # noqa: F401  (re-exported)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    inputs: Dict[str, object]
    results: Dict[str, object] = field(default_factory=dict)
    checks: List[Dict[str, object]] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    workers: int = 1
    version: str = __version__
    text: List[str] = field(default_factory=list)
    rows: List[Dict[str, object]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def check(self, name: str, ok: bool, witness="", detail: str = ""):
        if isinstance(witness, ExactPoly):
            witness = witness.to_text() if witness else ""
        self.checks.append({"name": name, "ok": bool(ok), "witness": witness, "detail": detail})
        self.text.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  {detail}" if detail else "")
                         + (f"\n      witness: {witness}" if witness and not ok else ""))

    def to_json(self, with_timings: bool = False):
        out = {"command": self.command, "inputs": self.inputs, "results": self.results,
               "checks": self.checks, "ok": self.ok, "version": self.version}
        if with_timings:
            out["timings"] = self.timings
            out["workers"] = self.workers
        return out


class UsageError(Exception):
    pass


# helpers ---------------------------------------------------------------------------

def _ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _pairs(items: Sequence[str]) -> List[Tuple[int, int]]:
    out = []
    for it in items:
        v = _ints(it)
        if len(v) != 2:
            raise UsageError(f"cable pairs look like r,s; got {it!r}")
        out.append((v[0], v[1]))
    return out


def _colors(args, default_kappa=None):
    return tuple(_ints(args.colors)) if getattr(args, "colors", None) else None


def _spec(words, q, colors):
    from .singularity import parse_preset
    try:
        return parse_preset(list(words), q, colors)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc))


def _jobs(args) -> int:
    if getattr(args, "jobs", None):
        return max(1, args.jobs)
    return max(1, int(os.environ.get("CURVELINK_JOBS", "1") or 1))


def find_fixture(ring: str, colors=(1,), kinds=("knot", "link")) -> Optional[Fixture]:
    for fx in load_fixtures().values():
        if fx.ring == ring and fx.kind in kinds and fx.colors == tuple(colors) \
                and "a0" not in fx.tags and fx.poly is not None:
            return fx
    return None


# subcommands ------------------------------------------------------------------------

def cmd_semigroup(args, rep: RunReport):
    from .semigroup import CableData, NumSemigroup, gamma_from_cable
    if args.cable:
        cab = CableData(tuple(_pairs(args.cable)))
        g, _ = gamma_from_cable(cab)
        rep.results["cable"] = {"pairs": [list(p) for p in cab.pairs], "a": list(cab.a),
                                "upsilon": list(cab.upsilon)}
    elif args.generators:
        g = NumSemigroup(_ints(args.generators))
    else:
        raise UsageError("give --generators or --cable")
    rep.results.update(g.to_json())
    rep.results["delta"] = g.delta
    rep.results["conductor"] = g.conductor
    rep.text += [f"generators: {','.join(map(str, g.generators))}",
                 f"delta = {g.delta}",
                 "gaps = {" + ",".join(map(str, g.gaps)) + "}",
                 f"conductor = {g.conductor}",
                 f"multiplicity = {g.mult}",
                 f"gorenstein = {'yes' if g.is_gorenstein else 'no'}"]


def cmd_cells(args, rep: RunReport):
    from .modcount import enumerate_all_standard
    q = int(args.q)
    r = _spec(args.preset, q, _colors(args))
    cells = enumerate_all_standard(r, budget=args.budget, jobs=_jobs(args))
    out = []
    for c in cells:
        by = c.by_rank()
        out.append({"cell": c.delta_D, "total": c.total, "empty": c.empty,
                    "by_rank": {str(k): v for k, v in sorted(by.items())},
                    "deg": c.deg})
        rep.rows.append({"cell": json.dumps(c.delta_D), "total": c.total,
                         "by_rank": ";".join(f"{k}:{v}" for k, v in sorted(by.items()))})
        rep.text.append(f"{json.dumps(c.delta_D):24s} total {c.total:6d}  by rank "
                        + ", ".join(f"{k}: {v}" for k, v in sorted(by.items())))
    rep.results["cells"] = out
    rep.results["q"] = q
    rep.text.append(f"{len(cells)} cells, {sum(c.total for c in cells)} modules")


def cmd_hmot(args, rep: RunReport):
    from .modcount import enumerate_all_standard
    from .superpoly import (decompose_rank, describe_product, hmot_at_q, hmot_second_at_q,
                            reconstruct_from_censuses, verify_in_q)
    qs = _ints(args.q)
    colors = _colors(args)
    censuses, values = {}, {}
    for q in qs:
        r = _spec(args.preset, q, colors)
        t0 = time.perf_counter()
        censuses[q] = enumerate_all_standard(r, budget=args.budget, jobs=_jobs(args))
        rep.timings[f"census_q{q}"] = round(time.perf_counter() - t0, 4)
        values[q] = (hmot_second_at_q(censuses[q], q) if args.style == "second"
                     else hmot_at_q(censuses[q], q, r.colors))
        colors = r.colors
        delta = r.delta
    rep.results["at_q"] = {str(q): v.to_text() for q, v in values.items()}
    if args.reconstruct:
        sp = reconstruct_from_censuses(censuses, colors=colors, delta=delta,
                                       degree_bound=args.degree_bound, ring=" ".join(args.preset),
                                       kappa=len(colors))
        rep.results["superpolynomial"] = sp.to_json()
        rep.text.append(sp.value.to_text())
        if args.decompose:
            for coef, desc in decompose_rank(sp, "first", max(colors)):
                rep.text.append(f"  {describe_product(desc)} * ({coef.to_text()})")
    else:
        for q, v in values.items():
            rep.text.append(f"q={q}: {v.to_text()}")
    if args.verify:
        fx = load_fixtures().get(args.verify)
        if fx is None or fx.poly is None:
            raise UsageError(f"no polynomial fixture {args.verify!r}")
        res = verify_in_q(fx.poly, list(values.items()))
        rep.check(f"verify {args.verify}", res.ok, res.witness, res.detail)


def cmd_flags(args, rep: RunReport):
    from .modcount import count_standard_flags, enumerate_all_standard
    from .superpoly import hmot_at_q, hmot_from_flags
    q = int(args.q)
    r = _spec(args.preset, q, None)
    flags = count_standard_flags(r, args.max_len or max(1, r.delta * 2), budget=args.budget)
    hf = hmot_from_flags(flags)
    hm = hmot_at_q(enumerate_all_standard(r, budget=args.budget, jobs=_jobs(args)), q)
    rep.results["flags"] = [{"length": l, "deg": d, "n": n} for (l, d), n in sorted(flags.items())]
    rep.results["from_flags"] = hf.to_text()
    rep.results["from_ranks"] = hm.to_text()
    rep.text.append(f"flags: {hf.to_text()}")
    rep.text.append(f"ranks: {hm.to_text()}")
    rep.check("flag sum equals rank formula", hf == hm, hf - hm)


def cmd_lfun(args, rep: RunReport):
    from .lfunction import (check_functional_equation, check_H_equals_L, compute_L_at_q,
                            compute_L_by_modules, zuniga_specialize)
    q = int(args.q)
    r = _spec(args.ring, q, None)
    if args.route == "modules":
        l = compute_L_by_modules(r, with_a=args.with_a, budget=args.budget)
    else:
        l = compute_L_at_q(r, with_a=args.with_a, budget=args.budget, jobs=_jobs(args))
    if args.route == "both":
        lb = compute_L_by_modules(r, with_a=args.with_a, budget=args.budget)
        rep.check("ideal and module routes agree", l.L == lb.L, l.L - lb.L)
    rep.results["L"] = l.to_json()
    rep.text.append("convention: L(q,t,a), q = q_new")
    rep.text.append(f"L = {l.L.to_text()}")
    for chk in args.check or []:
        if chk == "feq":
            res = check_functional_equation(l)
            rep.check("functional equation", res.ok, res.witness, res.detail)
        elif chk == "zuniga":
            try:
                z = zuniga_specialize(l, r)
                rep.results["zuniga"] = z.to_text()
                rep.check("L(a=-1/q) equals the principal-ideal sum", True, "", z.to_text())
            except Exception as exc:  # PrincipalOracleMismatch
                rep.check("L(a=-1/q) equals the principal-ideal sum", False, str(exc))
        elif chk == "h-eq-l":
            fx = (load_fixtures().get(args.fixture) if args.fixture
                  else find_fixture(" ".join(args.ring), (1,) * r.kappa))
            if fx is None:
                raise UsageError("no superpolynomial fixture for this ring; pass --fixture")
            av = args.a_value or (None if args.with_a else "0")
            if av is None and not args.with_a:
                raise UsageError("the full-a comparison needs --with-a")
            res = check_H_equals_L(fx.poly, l, av)
            rep.check(f"H(qt,t,a) = L against {fx.id}" + (f" at a={av}" if av else ""),
                      res.ok, res.witness)


def cmd_rho(args, rep: RunReport):
    from .lfunction import rho_cable_additivity, rho_suite
    from .semigroup import CableData, NumSemigroup, gamma_from_cable
    cab = None
    if args.cable:
        cab = CableData(tuple(_pairs(args.cable)))
        g, _ = gamma_from_cable(cab)
        if args.gamma and tuple(_ints(args.gamma)) != tuple(g.generators):
            raise UsageError("--gamma and --cable disagree")
    elif args.gamma:
        g = NumSemigroup(_ints(args.gamma))
    else:
        raise UsageError("give --gamma or --cable")
    h = None
    if args.with_R:
        fx = load_fixtures().get(args.fixture) if args.fixture else None
        if fx is None:
            for f in load_fixtures().values():
                if f.kind == "knot" and f.delta == g.delta and f.poly is not None \
                        and "a0" not in f.tags and "colored" not in f.tags:
                    from .singularity import parse_preset
                    try:
                        sg = parse_preset(f.ring.split(), 2, None).branch_semigroup(0)
                    except Exception:
                        continue
                    if tuple(sg.generators) == tuple(g.generators):
                        fx = f
                        break
        if fx is None:
            raise UsageError("no superpolynomial for this semigroup; pass --fixture")
        h = fx.poly
    suite = rho_suite(g, h, with_R=args.with_R)
    rep.text.append("convention: q,t of the superpolynomial")
    for inv in suite:
        rep.results[inv.variant] = inv.to_json()
        rep.rows.append({"variant": inv.variant, "value": inv.value.to_text(),
                         "at_1_1": rep.results[inv.variant]["at_1_1"]})
        rep.text.append(f"{inv.variant} = {inv.value.to_text()}")
    v11 = suite[2].value.evaluate(q=1, t=1)
    rep.results["varrho_1_1"] = str(v11)
    rep.text.append(f"varrho(1,1) = {v11}")
    if cab is not None:
        w = rho_cable_additivity(cab)
        rep.results["weighted_sum"] = str(w)
        rep.check("varrho(1,1) equals the weighted cable sum", w == v11, "", f"{w}")


def cmd_daha(args, rep: RunReport):
    from .daha1 import jd_torus_knot, torus_word, word_matrix
    r, s = args.torus
    word = None
    if args.word == "explicit":
        if not args.explicit:
            raise UsageError("--word explicit needs --explicit like '+1,-2'")
        word = []
        for tok in args.explicit.split(","):
            tok = tok.strip()
            if not tok or tok[0] not in "+-":
                raise UsageError(f"bad word letter {tok!r}")
            word.append((tok[0], int(tok[1:])))
        m = word_matrix(word)
        if (m[0][0], m[1][0]) != (r, s):
            raise UsageError(f"word has first column {(m[0][0], m[1][0])}, not {(r, s)}")
    elif args.word == "nearest":
        word = torus_word(r, s, "nearest")
    if word is None:
        word = torus_word(r, s)
    hat, factor = jd_torus_knot(r, s, args.color, word=word, route=args.route, budget=args.budget)
    rep.results["jd"] = hat.to_text()
    rep.results["prefactor"] = factor.to_text()
    rep.results["word"] = [f"{a}{b}" for a, b in word]
    rep.text.append(hat.to_text())
    rep.text.append(f"  discarded factor {factor.to_text()}, word "
                    + " ".join(f"tau{a}^{b}" for a, b in word))


# checks ---------------------------------------------------------------------------

def _fixture_or_fail(fid: str) -> Fixture:
    fx = load_fixtures().get(fid)
    if fx is None:
        raise UsageError(f"no fixture {fid!r}")
    return fx


def _uncolored(fx: Fixture) -> bool:
    # superpolynomials of planar knots and links only; rho tables and specializations are skipped
    return fx.poly is not None and set(fx.colors) == {1} and fx.delta is not None \
        and bool({"knot", "link"} & set(fx.tags)) and not {"a0", "nonplanar"} & set(fx.tags)


def _superduality_one(fid: str):
    from .superpoly import check_superduality
    fx = load_fixtures()[fid]
    res = check_superduality(fx.poly, fx.delta)
    return fid, res.ok, res.witness.to_text() if not res.ok else "", fx.delta


def cmd_check(args, rep: RunReport):
    from . import superpoly as sp
    name = args.name
    fx = _fixture_or_fail(args.fixture) if args.fixture else None
    if name == "superduality":
        ids = [fx.id] if fx else sorted(k for k, f in load_fixtures().items() if _uncolored(f))
        jobs = _jobs(args)
        if jobs > 1 and len(ids) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as ex:
                results = list(ex.map(_superduality_one, ids))
        else:
            results = [_superduality_one(i) for i in ids]
        for fid, ok, wit, d in sorted(results):
            rep.check(f"superduality {fid}", ok, wit, f"delta={d}")
        return
    if fx is None and name not in ("iteration",):
        raise UsageError("--fixture is required")
    if name == "specialize":
        # every a-specialization that applies to this fixture
        knot = fx.kind == "knot" and fx.kappa == 1
        for sub in ("extremal", "invertibles", "minus-t") if knot else ("invertibles",):
            args.name = sub
            cmd_check(args, rep)
        return
    if name == "minus-t":
        if fx.kind != "knot":
            raise UsageError("the a=-t identity is stated for knots only")
        res = sp.check_minus_t(fx.poly)
        rep.check(f"{fx.id} at a=-t is 1", res.ok, res.witness)
    elif name == "invertibles":
        res = sp.check_invertibles(fx.poly, fx.delta, max(fx.colors), fx.kappa)
        rep.check(f"{fx.id} at a=-q^-c", res.ok, res.witness)
    elif name == "extremal":
        r1 = sp.check_extremal_a0(fx.poly, fx.delta)
        rep.check(f"{fx.id} extremal terms at a=0", r1.ok, r1.witness)
        r2 = sp.check_extremal_minus_t_over_q(fx.poly, fx.delta)
        rep.check(f"{fx.id} extremal terms at a=-t/q", r2.ok, r2.witness)
    elif name == "weak-rh":
        qv = Fraction(args.q_value)
        r = sp.weak_rh_roots(fx.poly, args.k, qv, args.tolerance)
        rep.results["roots"] = r.to_json()
        rep.check(f"{fx.id} roots of H_{args.k} on |t| = q^(-1/2)", r.ok, "",
                  f"max deviation {r.max_deviation:.3e}, {len(r.roots)} roots")
    elif name == "iteration":
        fxs = load_fixtures()
        ids = args.inputs.split(",") if args.inputs else ["g4613", "trefoil_c2", "t64_daha"]
        if len(ids) != 3:
            raise UsageError("--inputs takes cable,colored,link fixture ids")
        res = sp.check_iteration_identity(*(fxs[i].poly for i in ids))
        rep.check("iteration identity " + ",".join(ids), res.ok, res.witness)
    elif name == "decompose":
        parts = sp.decompose_rank(fx.superpolynomial(), args.style, max(fx.colors))
        rep.results["parts"] = [{"product": sp.describe_product(d), "coefficient": c.to_text()}
                                for c, d in parts]
        for c, d in parts:
            rep.text.append(f"{sp.describe_product(d)} * ({c.to_text()})")
        rec = sp.recompose(parts)
        rep.check(f"{fx.id} decomposition recomposes", rec == fx.poly, rec - fx.poly)
    elif name == "feq":
        from .lfunction import bold_H_full, check_functional_equation
        res = check_functional_equation(bold_H_full(fx.poly), fx.delta)
        rep.check(f"{fx.id} functional equation for H(qt,t,a)", res.ok, res.witness)
    else:
        raise UsageError(f"unknown check {name!r}")


# fixtures -----------------------------------------------------------------------------

def cmd_fixtures(args, rep: RunReport):
    path = args.file
    if path is not None:
        with open(path) as fh:
            text = fh.read()
        fixtures = parse_fixture_file(text) if text.strip() else {}
    else:
        fixtures = load_fixtures()
    if args.action == "list":
        for fid, fx in fixtures.items():
            rep.text.append(f"{fid:28s} {fx.kind:6s} {fx.ring:22s} {fx.source}")
        rep.results["ids"] = list(fixtures)
        return
    if args.action == "show":
        if not args.id or args.id not in fixtures:
            raise UsageError("show needs a known fixture id")
        fx = fixtures[args.id]
        rep.results["fixture"] = {"id": fx.id, "kind": fx.kind, "ring": fx.ring,
                                  "source": fx.source, "poly": fx.text,
                                  "rows": len(fx.rows)}
        rep.text.append(f"{fx.id}: {fx.source}")
        rep.text.append(fx.text or f"{len(fx.rows)} table rows")
        return
    if not fixtures:
        print("warning: the fixture corpus is empty; nothing to verify", file=sys.stderr)
        rep.text.append("no fixtures")
        return
    only = set(args.only.split(",")) if args.only else None
    for fid, ok, detail in verify_fixtures(fixtures, only, quick=args.quick):
        rep.check(fid, ok, "" if ok else detail, detail if ok else "")


# fixture re-derivation ----------------------------------------------------------------

_BRUTE_Q = {"t73": (2, 3), "t94": (2,), "g4613": (2,), "hopf2": (2, 3), "hopf3": (2, 3),
            "hopf211_expanded": (2, 3), "trefoil_c2": (2, 3), "trefoil_unknot2": (2, 3),
            "trefoil_unknot3": (2,), "g456_mot": (2, 3), "t52": (2, 3), "trefoil": (2, 3)}
_SLOW = {"t94"}
_CLOSED = {"trefoil": ("trefoil_colored", {"c": 1}), "t52": ("torus_2n1_uncolored", {"n": 2}),
           "trefoil_c2": ("torus_2n1_c2", {"n": 1}), "hopf2": ("hopf2", {"m": 1}),
           "hopf3": ("hopf3", {}), "hopf211_expanded": ("hopf3_colored_211", {})}


def _semigroup_of(fx: Fixture):
    from .singularity import parse_preset
    return parse_preset(fx.ring.split(), 3, None).branch_semigroup(0)


def _census_by(words, colors, q: int, cache):
    from .modcount import enumerate_all_standard
    key = (tuple(words), tuple(colors), q)
    if key not in cache:
        cache[key] = enumerate_all_standard(_spec(list(words), q, tuple(colors)))
    return cache[key]


def _census(fx: Fixture, q: int, cache):
    return _census_by(fx.ring.split(), fx.colors, q, cache)


def _derive(fx: Fixture, fixtures, cache, quick: bool):
    """Yield (label, ok, detail) for each independent re-derivation of fx."""
    from . import lfunction as lf
    from . import superpoly as sp
    fid = fx.id
    if fx.poly is not None:
        yield "canonical text", parse(fx.poly.to_text()) == fx.poly, ""
        if fx.display:
            d = parse(fx.display)
            yield "printed form", d == fx.poly, (d - fx.poly).to_text()
    if fid in _CLOSED:
        fam, kw = _CLOSED[fid]
        v = sp.closed_form(fam, **kw).value
        yield f"closed form {fam}", v == fx.poly, (v - fx.poly).to_text()
    if fid in _BRUTE_Q and not (quick and fid in _SLOW):
        qs = _BRUTE_Q[fid]
        evs = [(q, sp.hmot_at_q(_census(fx, q, cache), q, fx.colors)) for q in qs]
        res = sp.verify_in_q(fx.poly, evs)
        yield f"census at q={','.join(map(str, qs))}", res.ok, res.witness.to_text()
    if fid == "hopf2":
        for m in range(2, 5):
            v = sp.closed_form("hopf2", m=m).value
            evs = [(q, sp.hmot_at_q(_census_by(("hopf", "2"), (m, 1), q, cache), q, (m, 1)))
                   for q in (2, 3)]
            res = sp.verify_in_q(v, evs)
            yield f"H({m},1) closed form against the census at q=2,3", res.ok, \
                res.witness.to_text()
    if fid == "trefoil_c2":
        for c in (1, 2, 3):
            a = sp.closed_form("trefoil_colored", c=c).value
            b = sp.closed_form("trefoil_colored", c=c, presentation="second").value
            yield f"colored trefoil c={c}: both presentations", a == b, (a - b).to_text()
    if fid == "t52":
        for n in range(1, 5):
            v = sp.closed_form("torus_2n1_uncolored", n=n).value
            evs = [(2, sp.hmot_at_q(_census_by(("torus", str(2 * n + 1), "2"), (1,), 2, cache), 2))]
            res = sp.verify_in_q(v, evs)
            yield f"T({2 * n + 1},2) closed form against the census at q=2", res.ok, \
                res.witness.to_text()
    if fid == "t73_second":
        evs = [(q, sp.hmot_second_at_q(_census(fx, q, cache), q)) for q in (2, 3)]
        res = sp.verify_in_q(fx.poly, evs)
        yield "second-style census at q=2,3", res.ok, res.witness.to_text()
        parts = sp.decompose_rank(fx.poly, "second", 1)
        yield "second decomposition recomposes", sp.recompose(parts) == fx.poly, ""
    if fid == "t73":
        parts = sp.decompose_rank(fx.poly, "first", 1)
        yield "rank decomposition recomposes", sp.recompose(parts) == fx.poly, ""
    if fid == "hopf211":
        other = fixtures.get("hopf211_expanded")
        if other is not None:
            yield "equals the expanded form", other.poly == fx.poly, (other.poly - fx.poly).to_text()
    if fid in ("t64_daha", "t64_mot"):
        other = fixtures.get("t64_mot" if fid == "t64_daha" else "t64_daha")
        if other is not None:
            yield "motivic and DAHA forms agree", other.poly == fx.poly, ""
        res = sp.check_superduality(fx.poly, fx.delta)
        yield "superduality", res.ok, res.witness.to_text()
        if fid == "t64_daha" and {"g4613", "trefoil_c2"} <= set(fixtures):
            res = sp.check_iteration_identity(fixtures["g4613"].poly,
                                              fixtures["trefoil_c2"].poly, fx.poly)
            yield "iteration identity with g4613 and trefoil_c2", res.ok, res.witness.to_text()
    if fid in ("g456_mot_a0", "g456_daha_a0"):
        src = fixtures.get(fid.replace("_a0", ""))
        if src is not None:
            v = lf.bold_H_full(src.poly).substitute({"a": 0})
            yield f"H(qt,t,0) of {src.id}", v == fx.poly, (v - fx.poly).to_text()
    if fid == "g456_L_a0" or fid == "g456_L_table":
        rows = {q: lf.module_route_rows(_spec(fx.ring.split(), q, None)) for q in (2, 3, 4, 5, 7)}
        sym = lf.cell_rows_symbolic(rows)
        if fid == "g456_L_a0":
            tot = ZERO
            for _, _, v in sym:
                tot = tot + v
            yield "module route at a=0, interpolated over q=2,3,4,5,7", tot == fx.poly, \
                (tot - fx.poly).to_text()
        else:
            got = {(tuple(D), rk): v for D, rk, v in sym}
            for D, rk, v in fx.rows:
                w = got.get((tuple(D), rk), ZERO)
                yield f"row {list(D)} rank {rk}", w == v, (w - v).to_text()
    if fx.kind == "table" and fid != "g456_L_table":
        for q in (2, 3):
            cells = _census(fx, q, cache)
            got = Counter()
            for c in cells:
                for (rk, dd, deg), n in c.counts.items():
                    got[(tuple(c.delta_D), rk, deg)] += n
            for D, rk, v in fx.rows:
                need = v.substitute({"q": q})
                have = psum(mono(n, t=deg) for (D2, rk2, deg), n in got.items()
                            if D2 == tuple(D) and rk2 == rk)
                yield f"row {list(D)} rank {rk} at q={q}", have == need, (have - need).to_text()
    if fx.kind == "dims":
        cells = {tuple(c.delta_D): c for c in _census(fx, 2, cache)}
        for D, dim in fx.rows:
            c = cells.get(tuple(D))
            ok = c is not None and (c.empty if dim is None else c.total == 2 ** dim)
            yield f"cell {list(D)}", ok, "" if c is None else f"{c.total} points at q=2"
    if fid.endswith("_minus_t_over_q"):
        base = fixtures.get(fid[: -len("_minus_t_over_q")])
        g = _semigroup_of(fx)
        if base is not None and base.poly is not None:
            v = base.poly.substitute({"a": mono(-1, q=-1, t=1)})
            yield f"{base.id} at a=-t/q", v == fx.poly, (v - fx.poly).to_text()
        base = fixtures.get(fid.replace("_minus_t_over_q", "_daha"))
        if base is not None:
            v = base.poly.substitute({"a": mono(-1, q=-1, t=1)})
            yield f"{base.id} at a=-t/q", v == fx.poly, (v - fx.poly).to_text()
        if "colored" not in fx.tags:
            v = (ONE - mono(1, q=1)) * (ONE - T) * lf.varrho_qt(g) + mono(1, q=g.delta)
            yield "(1-q)(1-t) varrho + q^delta", v == fx.poly, (v - fx.poly).to_text()
    if fid.endswith("_varrho"):
        v = lf.varrho_qt(_semigroup_of(fx))
        yield "gap-member pair sum", v == fx.poly, (v - fx.poly).to_text()
    if fid.endswith("_mu"):
        v = lf.mu_qt(_semigroup_of(fx))
        yield "valuation sum", v == fx.poly, (v - fx.poly).to_text()
    if fid.endswith("_R"):
        base = fixtures.get(fid[:-2])
        if base is not None:
            v = lf.R_K(base.poly, base.delta)
            yield f"R from {base.id}", v == fx.poly, (v - fx.poly).to_text()
    if fid in ("g456_daha", "g469_daha"):
        res = lf.nonplanar_check(fx.poly, _semigroup_of(fx))
        yield "a=-t/q against varrho", res.ok, res.witness.to_text()


def verify_fixtures(fixtures: Dict[str, Fixture], only=None, quick: bool = False):
    """Yield (id, ok, detail) per fixture; detail names the failing derivation."""
    cache: Dict = {}
    for fid, fx in fixtures.items():
        if only and fid not in only:
            continue
        labels, bad = [], []
        try:
            for label, ok, detail in _derive(fx, fixtures, cache, quick):
                labels.append(label)
                if not ok:
                    bad.append(f"{label}: differs by {detail}" if detail else label)
        except Exception as exc:
            bad.append(f"{type(exc).__name__}: {exc}")
        if bad:
            yield fid, False, "; ".join(bad)
        else:
            yield fid, True, f"{len(labels)} derivations" if labels else "parsed only"


# entry point --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $CURVELINK_JOBS or 1)")
    common.add_argument("--timings", action="store_true",
                        help="include timings and worker count in JSON")

    p = argparse.ArgumentParser(prog="curvelink", description="Superpolynomials, L-functions "
                                "and DAHA-Jones polynomials of plane curve singularities.")
    p.add_argument("--version", action="version", version=f"curvelink {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("semigroup", parents=[common], help="numerical semigroup data")
    s.add_argument("--generators")
    s.add_argument("--cable", nargs="+", metavar="R,S")
    s.set_defaults(func=cmd_semigroup)

    def ring_args(sp, name="--preset"):
        alias = "--ring" if name == "--preset" else "--preset"
        sp.add_argument(name, alias, nargs="+", required=True, metavar="WORD",
                        help="torus R S | cable R1 S1 ... | hopf K | double-trefoil | "
                             "trefoil-unknot LK | monomial G1 G2 ...")
        sp.add_argument("--colors", help="comma-separated colors, one per branch")
        sp.add_argument("--budget", type=int, default=24)

    s = sub.add_parser("cells", parents=[common], help="per-cell module census")
    ring_args(s)
    s.add_argument("--q", required=True)
    s.set_defaults(func=cmd_cells)

    s = sub.add_parser("hmot", parents=[common], help="motivic superpolynomial")
    ring_args(s)
    s.add_argument("--q", required=True, help="comma-separated prime powers")
    s.add_argument("--reconstruct", action="store_true")
    s.add_argument("--degree-bound", type=int, default=None)
    s.add_argument("--style", choices=("first", "second"), default="first")
    s.add_argument("--decompose", action="store_true")
    s.add_argument("--verify", metavar="FIXTURE")
    s.set_defaults(func=cmd_hmot)

    s = sub.add_parser("flags", parents=[common], help="standard flag count")
    ring_args(s)
    s.add_argument("--q", required=True)
    s.add_argument("--max-len", type=int, default=None)
    s.set_defaults(func=cmd_flags)

    s = sub.add_parser("lfun", parents=[common], help="L-function by ideal enumeration")
    ring_args(s, "--ring")
    s.add_argument("--q", required=True)
    s.add_argument("--with-a", action="store_true")
    s.add_argument("--route", choices=("ideals", "modules", "both"), default="ideals")
    s.add_argument("--check", action="append", choices=("feq", "zuniga", "h-eq-l"))
    s.add_argument("--fixture")
    s.add_argument("--a-value", choices=("0", "-1/q"), default=None,
                   help="for h-eq-l: compare only after this substitution")
    s.set_defaults(func=cmd_lfun)

    s = sub.add_parser("rho", parents=[common], help="deformed delta, mu and rho")
    s.add_argument("--gamma")
    s.add_argument("--cable", nargs="+", metavar="R,S")
    s.add_argument("--with-R", action="store_true")
    s.add_argument("--fixture")
    s.set_defaults(func=cmd_rho)

    s = sub.add_parser("daha-jd", parents=[common], help="DAHA-Jones polynomial of T(r,s)")
    s.add_argument("--torus", nargs=2, type=int, required=True, metavar=("R", "S"))
    s.add_argument("--color", type=int, default=1)
    s.add_argument("--word", choices=("auto", "nearest", "explicit"), default="auto")
    s.add_argument("--explicit")
    s.add_argument("--route", choices=("pbw", "rep"), default="pbw")
    s.add_argument("--budget", type=int, default=200000)
    s.set_defaults(func=cmd_daha)

    s = sub.add_parser("check", parents=[common], help="identity checkers on fixtures")
    s.add_argument("name", choices=("superduality", "minus-t", "invertibles", "extremal",
                                    "weak-rh", "iteration", "decompose", "feq", "specialize"))
    s.add_argument("--fixture")
    s.add_argument("--inputs", help="iteration: cable,colored,link fixture ids")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--q-value", default="1/20")
    s.add_argument("--tolerance", type=float, default=1e-9)
    s.add_argument("--style", choices=("first", "second"), default="first")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("fixtures", parents=[common], help="list, show or verify fixtures")
    s.add_argument("action", choices=("list", "show", "verify"))
    s.add_argument("id", nargs="?")
    s.add_argument("--file", help="a fixture file instead of the built-in corpus")
    s.add_argument("--only", help="comma-separated ids to verify")
    s.add_argument("--quick", action="store_true", help="skip the slowest brute forces")
    s.set_defaults(func=cmd_fixtures)
    return p


def _emit(rep: RunReport, args) -> str:
    fmt = args.format
    if fmt == "json":
        return json.dumps(rep.to_json(args.timings), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rep.rows:
            w = csv.DictWriter(buf, fieldnames=list(rep.rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rep.rows)
        else:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["kind", "name", "value"])
            for k, v in sorted(rep.results.items()):
                w.writerow(["result", k, json.dumps(v, sort_keys=True) if not isinstance(v, str) else v])
            for c in rep.checks:
                w.writerow(["check", c["name"], "pass" if c["ok"] else "fail"])
        return buf.getvalue()
    return "\n".join(rep.text) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = RunReport(args.command, {k: v for k, v in sorted(vars(args).items())
                                   if k not in ("func", "format", "out", "jobs", "timings")})
    rep.workers = _jobs(args)
    from .daha1 import WordBudgetExceeded
    from .modcount import BudgetExceeded
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except (BudgetExceeded, WordBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rep.timings["total"] = round(time.perf_counter() - t0, 4)
    text = _emit(rep, args)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
