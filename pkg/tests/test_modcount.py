from collections import Counter

import pytest

from curvelink.exactalg import ONE, mono, parse, psum
from curvelink.modcount import (BudgetExceeded, count_standard_flags, enumerate_all_standard,
                                enumerate_cell, enumerate_ideals, principal_ideal_counts)
from curvelink.singularity import parse_preset
from curvelink.superpoly import hmot_at_q, hmot_from_flags


def test_trefoil_invertibles():
    r = parse_preset(["torus", "3", "2"], 2)
    cen = enumerate_cell(r, [])
    assert cen.total == 2 and set(cen.by_rank()) == {1}


def test_t73_split_cell():
    r = parse_preset(["torus", "7", "3"], 2)
    cen = enumerate_cell(r, [4, 8, 11])
    assert cen.total == 16
    assert cen.by_rank() == Counter({2: 8, 3: 8})


def test_empty_cells():
    r = parse_preset(["cable", "3", "2", "2", "1"], 3)
    assert enumerate_cell(r, [2, 15]).empty
    assert enumerate_cell(r, [2, 11, 15]).empty


def test_colored_trefoil_cells():
    r = parse_preset(["torus", "3", "2"], 2, (2,))
    totals = sorted(c.total for c in enumerate_all_standard(r))
    assert totals == [1, 4, 8, 16]


def test_hopf_link_at_three():
    r = parse_preset(["hopf", "2"], 3)
    got = Counter()
    for c in enumerate_all_standard(r):
        for (rk, dd, deg), n in c.counts.items():
            got[(rk, deg)] += n
    assert got == Counter({(2, 0): 1, (1, 1): 2})


def test_flags():
    r = parse_preset(["torus", "3", "2"], 2)
    fl = count_standard_flags(r, 2)
    assert fl[(1, 0)] == 2
    assert not any(l == 2 for l, _ in fl)
    for words in (["torus", "3", "2"], ["torus", "5", "2"], ["torus", "4", "3"]):
        r = parse_preset(words, 2)
        assert hmot_from_flags(count_standard_flags(r, 4)) == hmot_at_q(enumerate_all_standard(r), 2)


def test_ideals_assemble_to_L():
    r = parse_preset(["torus", "3", "2"], 2)
    ideals = enumerate_ideals(r, 4)
    assert ideals[(0, 1)] == 1 and ideals[(1, 2)] == 1  # R and the maximal ideal
    z = psum(mono(n, t=col) * (ONE + mono(2, a=1) if rk == 2 else ONE) for (col, rk), n in ideals.items())
    L = ((ONE - mono(1, t=1)) * z).filter_terms(lambda i, j, k: j <= 4)
    assert L == parse("1 + 2*t^2 + 2*a*t")
    pr = principal_ideal_counts(r, 4)
    assert pr[0] == 1 and pr[1] == 0


def test_jobs_do_not_change_counts():
    r = parse_preset(["torus", "7", "3"], 2)
    one = [(c.delta_D, dict(c.counts)) for c in enumerate_all_standard(r, jobs=1)]
    two = [(c.delta_D, dict(c.counts)) for c in enumerate_all_standard(r, jobs=2)]
    assert one == two


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_all_standard(parse_preset(["torus", "7", "3"], 2), budget=2)
