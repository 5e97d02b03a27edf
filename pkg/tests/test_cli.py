import json
import os
import re
import shlex
import subprocess
import sys

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
ENV = dict(os.environ, PYTHONPATH=os.path.join(ROOT, "src"))
ENV.pop("CURVELINK_JOBS", None)


def run(args, env=None, **kw):
    if isinstance(args, str):
        args = shlex.split(args)
    return subprocess.run([sys.executable, "-m", "curvelink"] + list(args), capture_output=True,
                          text=True, env=env or ENV, cwd=ROOT, **kw)


def _doc_examples():
    out = []
    for name in ("README.md", os.path.join("docs", "formats.md")):
        text = open(os.path.join(ROOT, name)).read()
        for block in re.findall(r"```console\n(.*?)```", text, re.S):
            lines = block.splitlines()
            assert lines[0].startswith("$ curvelink ")
            out.append(pytest.param(lines[0][len("$ curvelink "):], "\n".join(lines[1:]) + "\n",
                                    id=f"{name}:{lines[0][12:40]}"))
    return out


@pytest.mark.parametrize("command,expected", _doc_examples())
def test_documented_examples(command, expected):
    res = run(command)
    assert res.returncode == 0, res.stderr
    assert res.stdout == expected


def test_exit_codes():
    assert run("semigroup --generators 4,6").returncode == 2
    assert run("daha-jd --torus 4 2").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("check minus-t --fixture hopf3").returncode == 2
    assert run("cells --preset torus 7 3 --q 2 --budget 2").returncode == 3
    assert run("daha-jd --torus 7 3 --budget 10").returncode == 3
    res = run("lfun --ring monomial 4 5 6 --q 2 --check h-eq-l --fixture g456_mot")
    assert res.returncode == 1 and "FAIL" in res.stdout
    assert run("lfun --ring monomial 4 5 6 --q 2 --with-a --check h-eq-l --fixture g456_mot"
               " --a-value=-1/q").returncode == 0


def test_json_independent_of_jobs():
    a = run("cells --preset cable 3 2 2 1 --q 2 --format json --jobs 1")
    env = dict(ENV, CURVELINK_JOBS="2")
    b = run("cells --preset cable 3 2 2 1 --q 2 --format json", env=env)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    c = run("check superduality --format json --jobs 2")
    d = run("check superduality --format json")
    assert c.stdout == d.stdout
    rep = json.loads(c.stdout)
    assert rep["ok"]
    names = sorted(ch["name"].split()[-1] for ch in rep["checks"])
    assert names == sorted(["trefoil", "t52", "t73", "t73_second", "t94", "g4613", "t64_daha",
                            "t64_mot", "hopf2", "hopf3", "trefoil_unknot2", "trefoil_unknot3"])


def test_jobs_default_from_environment():
    env = dict(ENV, CURVELINK_JOBS="3")
    rep = json.loads(run("semigroup --generators 2,3 --format json --timings", env=env).stdout)
    assert rep["workers"] == 3
    rep = json.loads(run("semigroup --generators 2,3 --format json --timings").stdout)
    assert rep["workers"] == 1


def test_out_file(tmp_path):
    path = tmp_path / "r.json"
    res = run(["hmot", "--preset", "torus", "3", "2", "--q", "2,3", "--reconstruct",
               "--format", "json", "--out", str(path)])
    assert res.returncode == 0 and res.stdout == ""
    rep = json.loads(path.read_text())
    assert rep["results"]["superpolynomial"]["text"] == "1 + q*t + a*q"


def test_fixtures_verify_builtin():
    res = run("fixtures verify")
    assert res.returncode == 0, res.stdout
    assert "FAIL" not in res.stdout
    assert res.stdout.count("PASS") >= 36


def test_fixtures_verify_corrupted(tmp_path):
    text = open(os.path.join(ROOT, "src", "curvelink", "data", "fixtures.ini")).read()
    bad = text.replace("poly = 1 + q*t + q^2*t^2 + a*q + a*q^2*t",
                       "poly = 1 + q*t + q^2*t^2 + a*q + 2*a*q^2*t")
    assert bad != text
    path = tmp_path / "bad.ini"
    path.write_text(bad)
    res = run(["fixtures", "verify", "--file", str(path), "--only", "t52,trefoil"])
    assert res.returncode == 1
    assert "FAIL  t52" in res.stdout and "PASS  trefoil" in res.stdout
    assert "differs by" in res.stdout


def test_fixtures_verify_empty(tmp_path):
    path = tmp_path / "empty.ini"
    path.write_text("")
    res = run(["fixtures", "verify", "--file", str(path)])
    assert res.returncode == 0
    assert "warning" in res.stderr


def test_other_subcommands():
    res = run("flags --preset torus 5 2 --q 2")
    assert res.returncode == 0 and "PASS" in res.stdout
    res = run("hmot --preset torus 7 3 --q 2,3 --verify t73")
    assert res.returncode == 0
    res = run("rho --gamma 4,6,13 --with-R --format json")
    rep = json.loads(res.stdout)
    assert rep["results"]["varrho_1_1"] == "25" and "R_K" in rep["results"]
    res = run("check iteration")
    assert res.returncode == 0
    res = run("check weak-rh --fixture t73 --q-value 1/20 --tolerance 1e-6")
    assert res.returncode == 0
    res = run("daha-jd --torus 3 2 --word explicit --explicit +1,-2")
    assert res.stdout.splitlines()[0] == "1 + q*t - q*t^2"
    res = run("fixtures show t73")
    assert res.returncode == 0 and "rank decomposition" in res.stdout
    res = run("hmot --preset hopf 2 --colors 2,1 --q 2,3,4 --reconstruct --degree-bound 2")
    assert res.stdout.strip() == "1 - t + q^2*t + a*q^2"


def test_ring_alias_and_specialize():
    a = run("hmot --ring torus 3 2 --q 2,3 --reconstruct")
    b = run("hmot --preset torus 3 2 --q 2,3 --reconstruct")
    assert a.returncode == 0 and a.stdout == b.stdout
    res = run("check specialize --fixture t73")
    assert res.returncode == 0 and res.stdout.count("PASS") == 4
    res = run("check specialize --fixture hopf3")
    assert res.returncode == 0 and "a=-t " not in res.stdout
