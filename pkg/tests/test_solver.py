import itertools
import math
from fractions import Fraction

import pytest

from unicov.constructions.families import quadratic_residues
from unicov.core.enums.cover import CoverStatus
from unicov.fourier.density import DensityFunction
from unicov.fourier.exceptions import ParameterRangeError
from unicov.group.group import parse_group_spec
from unicov.sets.exceptions import PrimeFieldError
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import sumset
from unicov.solver.cover import cov_exact, cov_greedy, cov_value, greedy_upper_bound
from unicov.solver.exceptions import EmptySetError, InfeasibleCoverError
from unicov.solver.fourier_cover import cov_fourier_constrained, size_grid
from unicov.solver.multiplicative import cov_mult, un_mult
from unicov.solver.universality import (
    is_universal,
    u_bar,
    u_n,
    un_bruteforce,
    un_exact,
    un_floor,
    un_value,
)


@pytest.mark.parametrize(
    ("spec", "elements", "expected"),
    [
        ("Z12", [1, 2, 3], 4),
        ("Z5", [0, 1], 3),
        ("Z6", [0, 3], 3),
        ("Z2^3", [0, 1, 2, 4], 2),
        ("Z7", [0, 1, 3], 3),
    ],
)
def test_cov_known_values(make_set, spec, elements, expected):
    a = make_set(spec, elements)
    result = cov_exact(a)
    assert result.status is CoverStatus.OPTIMAL
    assert result.value == expected
    assert sumset(a, result.witness).is_full()


def test_cov_partial_target(make_set):
    a = make_set("Z12", [0, 1])
    target = make_set("Z12", [0, 1, 2, 3, 6])
    result = cov_exact(a, target)
    assert result.value == 3
    assert target <= sumset(a, result.witness)


def test_cov_trivial_cases(make_set):
    empty_target = cov_exact(make_set("Z5", [1]), make_set("Z5", []))
    assert empty_target.value == 0 and empty_target.optimal
    assert cov_exact(make_set("Z5", []), make_set("Z5", [2])).status is CoverStatus.INFEASIBLE
    with pytest.raises(InfeasibleCoverError):
        cov_value(make_set("Z5", []))


def test_greedy_brackets_optimum(make_set):
    a = make_set("Z12", [1, 2, 3])
    greedy = cov_greedy(a)
    assert cov_value(a) <= greedy.value <= greedy_upper_bound(12, 3)
    assert sumset(a, greedy.witness).is_full()


def test_un_small_cases(make_set):
    assert un_value(make_set("Z3", [0, 1])) == 2
    assert un_value(make_set("Z7", quadratic_residues(7).to_list())) == 2
    full = un_exact(GroupSet.full(parse_group_spec("Z5")))
    assert full.is_infinite and full.value == math.inf
    assert is_universal(make_set("Z3", [0, 1]), 2)
    assert not is_universal(make_set("Z3", [0, 1]), 3)
    with pytest.raises(EmptySetError):
        un_exact(make_set("Z5", []))


def test_un_witness_is_a_failing_tuple(make_set):
    a = make_set("Z12", [0, 1, 2, 3, 4, 5])
    report = un_exact(a)
    assert len(report.witnessing_failure) == report.un + 1


def test_un_matches_bruteforce_on_all_subsets():
    group = parse_group_spec("Z6")
    for mask in range(1, 2**6 - 1):
        a = GroupSet.from_mask(group, mask)
        assert un_value(a) == un_bruteforce(a), a


def test_volume_bound_on_un(make_set):
    # the complement of [0, 8] in Z12 is an interval of length 3, so the bound is tight
    a = make_set("Z12", list(range(9)))
    assert un_floor(a) == un_value(a) == 3
    assert un_floor(GroupSet.full(a.group)) == math.inf
    with pytest.raises(EmptySetError):
        un_floor(make_set("Z5", []))


def test_volume_bound_never_exceeds_un():
    group = parse_group_spec("Z6")
    for mask in range(1, 2**6 - 1):
        a = GroupSet.from_mask(group, mask)
        assert un_floor(a) <= un_value(a), a


def test_un_profile(make_set):
    a = make_set("Z4", [0, 1])
    report = un_exact(a, profile=[1, 2])
    assert report.u_profile == {1: Fraction(1), 2: Fraction(3, 4)}
    assert u_n(a, 2) == Fraction(3, 4)
    assert u_bar(a, 2) == pytest.approx(math.sqrt(0.75))


def test_cov_mult_quadratic_residues():
    qr = quadratic_residues(7)
    result = cov_mult(qr)
    assert result.value == 2
    assert result.notes["prime"] == 7
    assert un_mult(qr).un == 1


def test_cov_mult_rejects(make_set):
    with pytest.raises(EmptySetError):
        cov_mult(make_set("Z7", [0]))
    with pytest.raises(PrimeFieldError):
        cov_mult(make_set("Z9", [1]))


def test_size_grid_is_increasing():
    grid = size_grid(3, 40)
    assert grid[0] == 3 and grid[-1] == 40
    assert all(x < y for x, y in itertools.pairwise(grid))


def test_fourier_constrained_cover(make_set):
    a = make_set("Z16", list(range(8)))
    f = DensityFunction.constant(a.group)
    result = cov_fourier_constrained(a, f, eps=0.5, trials=64, seed=3)
    # the transform of a constant function vanishes off the principal character
    assert result.status is CoverStatus.FEASIBLE
    assert sumset(a, result.witness).is_full()
    assert result.notes["violation"] == pytest.approx(0, abs=1e-9)
    assert result.notes["attempts"] <= 64


@pytest.mark.parametrize("trials", [0, 1, 3])
def test_fourier_constrained_cover_spends_exactly_its_trials(make_set, trials):
    # f = 1_{0} has a flat transform, so only X = G meets the constraint; with
    # fewer trials than grid sizes the search never reaches |X| = 16
    a = make_set("Z16", list(range(8)))
    f = DensityFunction.indicator(a.group, make_set("Z16", [0]).bits)
    result = cov_fourier_constrained(a, f, eps=1e-6, trials=trials, seed=5)
    assert result.status is CoverStatus.NOT_FOUND
    assert result.notes["attempts"] == result.notes["trials"] == trials


def test_fourier_constrained_cover_rejects_negative_trials(make_set):
    a = make_set("Z16", list(range(8)))
    with pytest.raises(ParameterRangeError):
        cov_fourier_constrained(a, DensityFunction.constant(a.group), eps=0.5, trials=-1, seed=0)
