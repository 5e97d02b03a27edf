from itertools import combinations

import pytest

from curvelink.exactalg import ONE, parse
from curvelink.semigroup import (CableData, GammaModule, GcdNotOne, InconsistentSharedPrefix,
                                 NonAlgebraicCable, NumSemigroup, alexander_hat,
                                 delta_reciprocal, enumerate_standard_delta, gamma_from_cable,
                                 linking_number, rational_catalan)


def test_small_semigroups():
    g = NumSemigroup([2, 3])
    assert (g.gaps, g.delta, g.conductor, g.mult) == ((1,), 1, 2, 2)
    g = NumSemigroup([4, 6, 13])
    assert g.gaps == (1, 2, 3, 5, 7, 9, 11, 15) and g.delta == 8
    assert [k for k in range(18) if k in g] == [0, 4, 6, 8, 10, 12, 13, 14, 16, 17]
    assert NumSemigroup([3, 7]).gaps == (1, 2, 4, 5, 8, 11)
    with pytest.raises(GcdNotOne):
        NumSemigroup([4, 6])


def test_cables():
    g, _ = gamma_from_cable(CableData(((2, 3), (2, 1), (2, 1))))
    assert g.generators == (8, 12, 26, 53)
    assert (g.delta, g.mult) == (42, 8)
    for r, s in [(2, 3), (3, 4), (5, 7), (3, 5)]:
        g, _ = gamma_from_cable(CableData(((r, s),)))
        assert g.delta == (r - 1) * (s - 1) // 2
    cab = CableData(((3, 2), (2, 1)))
    assert gamma_from_cable(cab)[0].generators == (4, 6, 13)
    assert cab.delta_formula() == 8
    with pytest.raises(NonAlgebraicCable):
        CableData(((2, 4),))


def test_standard_delta_counts():
    assert [d.D for d in enumerate_standard_delta(NumSemigroup([2, 3]))] in ([(), (1,)], [(1,), ()])
    # brute force over subsets of gaps for <3,4>
    g = NumSemigroup([3, 4])
    brute = 0
    for k in range(len(g.gaps) + 1):
        for D in combinations(g.gaps, k):
            try:
                GammaModule(g, D)
                brute += 1
            except ValueError:
                pass
    assert brute == len(enumerate_standard_delta(g)) == 5 == rational_catalan(3, 4)
    assert len(enumerate_standard_delta(NumSemigroup([4, 6, 13]))) == 25


def test_reciprocal():
    g = NumSemigroup([4, 6, 13])
    assert delta_reciprocal(GammaModule(g, (15,))).D == (2, 9, 15)
    with pytest.raises(ValueError):
        GammaModule(g, (2, 9))  # 2 + 13 = 15 is missing, so not a Gamma-module
    assert delta_reciprocal(GammaModule(g, (2, 9, 11, 15))).D == (2, 9, 11, 15)
    g = NumSemigroup([3, 7])
    assert delta_reciprocal(GammaModule(g, (4, 8, 11))).D == (4, 8, 11)
    for d in enumerate_standard_delta(NumSemigroup([4, 6, 13])):
        assert delta_reciprocal(delta_reciprocal(d)).D == d.D


def test_reciprocal_preserves_cell_dimension():
    from curvelink.superpoly import fixture
    g = NumSemigroup([4, 6, 13])
    dims = {D: dim for D, dim in fixture("g4613_dims").rows}
    assert len(dims) == 25
    for d in enumerate_standard_delta(g):
        assert dims[d.D] == dims[delta_reciprocal(d).D]


def test_alexander():
    assert alexander_hat(NumSemigroup([2, 3])) == parse("1 - t + t^2")
    assert alexander_hat(NumSemigroup([1])) == ONE
    assert alexander_hat(NumSemigroup([2, 5])) == parse("1 - t + t^2 - t^3 + t^4")


def test_linking_numbers():
    for r, s in [(3, 2), (5, 2), (4, 3)]:
        c = CableData(((r, s),))
        assert linking_number(c, c, 1) == r * s
    two = CableData(((2, 3),))
    assert linking_number(two, None, None) == 2
    assert linking_number(None, None, None) == 1
    with pytest.raises(InconsistentSharedPrefix):
        linking_number(CableData(((2, 3),)), CableData(((3, 4),)), 1)


@pytest.mark.parametrize("gens", [[2, 3], [3, 7], [4, 6, 13], [4, 5, 6], [6, 8, 11], [5, 7]])
def test_gorenstein_symmetry(gens):
    g = NumSemigroup(gens)
    if not g.is_gorenstein:
        pytest.skip("not symmetric")
    assert sum(1 for k in range(2 * g.delta) if k in g) == g.delta
    assert sorted(2 * g.delta - 1 - x for x in g.gaps) == [k for k in range(2 * g.delta) if k in g]
