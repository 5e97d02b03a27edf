import pytest

from curvelink.semigroup import NumSemigroup
from curvelink.singularity import (BadReduction, RingSpecError, compute_conductor,
                                   compute_gamma_set, intersection_number, parse_preset,
                                   total_delta)


def _custom(x, y, q):
    from curvelink.singularity import RingSpec
    return RingSpec(q, [{"x": x, "y": y}])


def test_gamma_of_cable_ring():
    for q in (3, 5):
        r = parse_preset(["cable", "3", "2", "2", "1"], q)
        assert r.branch_semigroup(0) == NumSemigroup([4, 6, 13])
    assert parse_preset(["torus", "3", "2"], 2).branch_semigroup(0) == NumSemigroup([2, 3])


def test_bad_reduction_at_two():
    # z^4, z^6 + z^7 over F_2: nu(y^2 - x^3) = 14, so delta jumps
    r = _custom([(1, 4)], [(1, 6), (1, 7)], 2)
    assert r.branch_semigroup(0).delta == 9
    r3 = _custom([(1, 4)], [(1, 6), (1, 7)], 3)
    assert r3.branch_semigroup(0) == NumSemigroup([4, 6, 13])


def test_multibranch_invariants():
    dt = parse_preset(["double-trefoil"], 3)
    assert intersection_number(dt, 0, 1) == 6
    assert total_delta(dt) == 8
    assert compute_conductor(dt).exponents == (8, 8)
    hopf = parse_preset(["hopf", "2"], 2)
    assert intersection_number(hopf, 0, 1) == 1
    tu = parse_preset(["trefoil-unknot", "2"], 3)
    assert total_delta(tu) == 3
    assert compute_conductor(tu).exponents == (4, 2)
    assert compute_conductor(parse_preset(["torus", "3", "2"], 2)).exponents == (2,)


def test_merged_gamma_set():
    gs = compute_gamma_set(parse_preset(["trefoil-unknot", "2"], 3))
    assert len(gs.branch_semigroups) == 2


def test_bad_specs():
    with pytest.raises(BadReduction):
        parse_preset(["double-trefoil"], 2)
    with pytest.raises(RingSpecError):
        parse_preset(["nonsense"], 2)
    with pytest.raises(RingSpecError):
        parse_preset(["torus", "3", "2"], 2, (1, 2))
    with pytest.raises(ValueError):
        parse_preset(["torus", "3", "2"], 6)
