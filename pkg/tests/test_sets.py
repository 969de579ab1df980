import itertools

import numpy as np
import pytest

from unicov.group.group import parse_group_spec, power_group
from unicov.schemas.tuple_spec import TupleSpec
from unicov.sets.equations import is_solution_free, solution_count
from unicov.sets.exceptions import (
    EmptyShiftError,
    GroupMismatchError,
    PrimeFieldError,
    SetError,
    SetLiteralError,
)
from unicov.sets.group_set import GroupSet
from unicov.sets.higher import (
    higher_diff_membership,
    higher_diff_size,
    product_diff_size,
    product_diff_size_bruteforce,
)
from unicov.sets.multiplicative import inverse_set, product_set, ratio_set
from unicov.sets.operations import (
    complement,
    difference_set,
    dilate,
    iterated_sumset,
    multiple_sumset,
    negate,
    popular_sumset,
    shift_intersection,
    sumset,
    translate,
)
from unicov.sets.tuples import (
    cartesian_power,
    cartesian_product,
    diagonal_set,
    gen_diff_size,
    gen_product_diff_size,
)


def test_literal_ranks_and_coordinates():
    group = parse_group_spec("Z2^2")
    assert GroupSet.from_literal(group, "[[0,1],[1,0]]").to_list() == [1, 2]
    assert GroupSet.from_literal(group, "[3, 3, 0]").to_list() == [0, 3]


@pytest.mark.parametrize("literal", ["not json", "{}", "[true]", "[[0]]", "[[0,2]]", '["1"]'])
def test_literal_rejects(literal):
    with pytest.raises(SetLiteralError):
        GroupSet.from_literal(parse_group_spec("Z2^2"), literal)


def test_mask_round_trip(make_set):
    a = make_set("Z12", [0, 5, 11])
    assert GroupSet.from_mask(a.group, a.to_mask()) == a


def test_mixed_groups_rejected(make_set):
    with pytest.raises(GroupMismatchError):
        sumset(make_set("Z4", [0]), make_set("Z2^2", [0]))


def test_sumset_and_difference(make_set):
    assert sumset(make_set("Z12", [0, 1]), make_set("Z12", [0, 2])).to_list() == [0, 1, 2, 3]
    assert difference_set(make_set("Z5", [0, 1]), make_set("Z5", [0, 1])).to_list() == [0, 1, 4]
    assert sumset(make_set("Z5", []), make_set("Z5", [1])).is_empty()


def test_translate_negate_complement(make_set):
    a = make_set("Z6xZ4", [1])
    assert translate(a, 5).to_list() == [6]
    assert negate(make_set("Z6", [1, 2])).to_list() == [4, 5]
    assert complement(make_set("Z5", [0, 1])).to_list() == [2, 3, 4]


def test_dilation_flags_units(make_set):
    a = make_set("Z6", [1, 2])
    assert dilate(5, a).unit
    image = dilate(3, a)
    assert not image.unit
    assert image.image.to_list() == [0, 3]


def test_shift_intersection(make_set):
    a = make_set("Z7", [0, 1, 2])
    assert shift_intersection(a, make_set("Z7", [0, 1])).to_list() == [1, 2]
    with pytest.raises(EmptyShiftError):
        shift_intersection(a, make_set("Z7", []))


def test_iterated_sumsets(make_set):
    a = make_set("Z20", [0, 1])
    assert multiple_sumset(a, 0).to_list() == [0]
    assert multiple_sumset(a, 3).to_list() == [0, 1, 2, 3]
    assert iterated_sumset(a, 2, 1).to_list() == [0, 1, 2, 19]


def test_higher_difference_small_case(make_set):
    # (a_1 - g, a_2 - g) is determined by g and the difference a_1 - a_2 in {-1, 0, 1}
    assert higher_diff_size(make_set("Z4", [0, 1]), 2) == 12


@pytest.mark.parametrize("spec", ["Z6", "Z2^3", "Z3xZ3"])
@pytest.mark.parametrize("n", [2, 3])
def test_profile_dp_matches_enumeration(spec, n, rng):
    group = parse_group_spec(spec)
    for _ in range(4):
        sets = [GroupSet(group, rng.random(group.order) < 0.5) for _ in range(n)]
        s = GroupSet(group, rng.random(group.order) < 0.6)
        assert product_diff_size(sets, s) == product_diff_size_bruteforce(sets, s)


def test_membership_agrees_with_size(make_set):
    a, b = make_set("Z6", [0, 1, 3]), make_set("Z6", [2, 5])
    s = make_set("Z6", [0, 4])
    members = [x for x in itertools.product(range(6), repeat=2) if higher_diff_membership([a, b], s, x)]
    assert len(members) == product_diff_size([a, b], s)

    diff = difference_set(a, s).to_list()
    assert [x for x in range(6) if higher_diff_membership([a], s, (x,))] == diff


def test_cartesian_product_lives_in_power_group(make_set):
    a = make_set("Z3", [0, 1])
    b = make_set("Z3", [2])
    product = cartesian_product(a, b)
    assert product.group == power_group(a.group, 2)
    assert product.to_list() == [2, 5]
    assert len(cartesian_power(a, 3)) == 8


def test_generalized_difference_reduces_to_diagonal(make_set):
    a = make_set("Z5", [0, 1, 3])
    full = GroupSet.full(a.group)
    assert gen_diff_size(a, TupleSpec(blocks=[2]), full) == higher_diff_size(a, 2)
    pairs = cartesian_power(full, 2)
    assert gen_diff_size(a, TupleSpec(blocks=[1, 1]), pairs) == 25


def test_interleaved_difference_with_single_block(make_set):
    # (a - c, b - c) is injective in (a, c) once B is a point
    a, b = make_set("Z3", [0, 1]), make_set("Z3", [0])
    full = GroupSet.full(a.group)
    size = gen_product_diff_size(a, b, full, TupleSpec(blocks=[1]))
    assert size == product_diff_size([a, b], full) == 6


def test_diagonal_set(make_set):
    c = cartesian_product(make_set("Z3", [1]), make_set("Z3", [2]))
    diag = diagonal_set(c, TupleSpec(blocks=[2, 1]))
    group = diag.group
    assert group.power == 3
    assert [group.split(int(t)) for t in diag.elements] == [(1, 1, 2)]


def test_solution_count(make_set):
    a = make_set("Z5", [1])
    assert solution_count(a, (1, 1), 2) == 1
    assert is_solution_free(a, (1, 1), 0)
    evens = make_set("Z10", [0, 2, 4, 6, 8])
    assert solution_count(evens, (1, -1), 0) == 5


def test_solution_count_matches_enumeration(rng):
    group = parse_group_spec("Z7")
    a = GroupSet(group, rng.random(7) < 0.5)
    coeffs = (1, 2, -3)
    expected = sum(
        1 for xs in itertools.product(a.to_list(), repeat=3) if sum(c * x for c, x in zip(coeffs, xs)) % 7 == 4
    )
    assert solution_count(a, coeffs, 4) == expected


def test_field_products(make_set):
    assert product_set(make_set("Z7", [2]), make_set("Z7", [3])).to_list() == [6]
    assert inverse_set(make_set("Z7", [0, 2])).to_list() == [4]
    assert ratio_set(make_set("Z7", [1]), make_set("Z7", [0, 3])).to_list() == [5]
    with pytest.raises(PrimeFieldError):
        product_set(make_set("Z8", [1]), make_set("Z8", [1]))


def test_sets_are_immutable(make_set):
    a = make_set("Z5", [1, 2])
    with pytest.raises(ValueError):
        a.bits[0] = True
    assert np.array_equal(a.elements, [1, 2])


def test_popular_sumset(make_set):
    a = make_set("Z4", [0, 1])
    assert popular_sumset(a, a, 0.5).to_list() == [1]
    with pytest.raises(SetError):
        popular_sumset(a, a, 1.5)
