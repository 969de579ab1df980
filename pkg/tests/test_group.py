import pytest

from unicov.group.exceptions import ElementRangeError, GroupCapError, GroupSpecError
from unicov.group.group import (
    character_sum_exact,
    character_value,
    make_group,
    parse_group_spec,
    power_group,
)


@pytest.mark.parametrize(
    ("spec", "factors"),
    [
        ("Z12", (12,)),
        ("z2^4", (2, 2, 2, 2)),
        ("Z6xZ4", (6, 4)),
        ("Z3^2xZ5", (3, 3, 5)),
    ],
)
def test_parse_group_spec(spec, factors):
    group = parse_group_spec(spec)
    assert group.factors == factors
    assert parse_group_spec(group.spec) == group


@pytest.mark.parametrize("spec", ["", "Q5", "Z0", "Z 5", "Z2^0", "Z2xx"])
def test_parse_group_spec_rejects(spec):
    with pytest.raises(GroupSpecError):
        parse_group_spec(spec)


def test_group_cap():
    with pytest.raises(GroupCapError):
        parse_group_spec("Z100", cap=50)


def test_mixed_radix_rank():
    group = parse_group_spec("Z6xZ4")
    assert group.rank((5, 3)) == 23
    assert group.coords(23) == (5, 3)
    assert group.rank((7, -1)) == group.rank((1, 3))


def test_rank_out_of_range():
    with pytest.raises(ElementRangeError):
        make_group([5]).coords(5)


def test_arithmetic_tables():
    group = parse_group_spec("Z6")
    assert group.neg(1) == 5
    assert group.add(4, 5) == 3
    assert group.scalar_mul(4, 2) == 2
    assert list(group.neg_table) == [0, 5, 4, 3, 2, 1]
    assert group.is_unit(5) and not group.is_unit(4)


def test_power_group_split_join():
    base = make_group([3])
    square = power_group(base, 2)
    assert square.order == 9
    assert square.base is base and square.power == 2
    assert square.split(5) == (1, 2)
    assert square.join((1, 2)) == 5
    assert power_group(square, 2).power == 4


def test_power_group_cap():
    with pytest.raises(GroupCapError):
        power_group(make_group([10]), 3, cap=999)


def test_character_values():
    group = parse_group_spec("Z4")
    value = character_value(group, 1, 1)
    assert (value.numerator, value.order) == (1, 4)
    assert value.value == pytest.approx(1j)
    assert character_value(group, 2, 2).order == 1


@pytest.mark.parametrize("spec", ["Z6", "Z2xZ4", "Z3^2"])
def test_character_orthogonality(spec):
    group = parse_group_spec(spec)
    assert character_sum_exact(group, 0) == group.order
    assert all(character_sum_exact(group, chi) == 0 for chi in range(1, group.order))
