from fractions import Fraction

import pytest
from pydantic import ValidationError

from unicov.constructions.exceptions import FamilyParameterError
from unicov.constructions.families import (
    ap,
    bohr,
    build_family,
    interval_middle_third,
    quadratic_residues,
    random_set,
    subspace_blocks,
    subspace_union_universal,
)
from unicov.constructions.solution_free import exhaustive_solution_free, solution_free_greedy
from unicov.constructions.universal_sumset import universal_sumset
from unicov.core.enums.family import FamilyTag
from unicov.group.group import parse_group_spec
from unicov.schemas.family import FamilySpec
from unicov.sets.equations import is_solution_free
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import sumset
from unicov.solver.universality import un_value
from unicov.utils.number_theory import admissible_modulus, dlog_table, least_prime_factor


def test_small_families():
    assert quadratic_residues(7).to_list() == [1, 2, 4]
    assert interval_middle_third(7).to_list() == [3, 4]
    assert ap(parse_group_spec("Z10"), 8, 4).to_list() == [0, 1, 8, 9]


@pytest.mark.parametrize("p", [2, 9, 15])
def test_quadratic_residues_need_odd_prime(p):
    with pytest.raises(FamilyParameterError):
        quadratic_residues(p)


def test_ap_needs_cyclic_group():
    with pytest.raises(FamilyParameterError):
        ap(parse_group_spec("Z2^3"), 0, 3)


def test_random_set_is_seeded():
    group = parse_group_spec("Z64")
    assert random_set(group, 0.5, 11) == random_set(group, 0.5, 11)
    assert random_set(group, 1.0, 0).is_full()


def test_subspace_union():
    assert subspace_blocks(5, 2) == [[0, 1, 2], [3, 4]]
    u = subspace_union_universal(4, 2)
    assert len(u) == 7
    assert un_value(u) >= 2


def test_bohr_family_contains_zero():
    s = bohr(parse_group_spec("Z30"), [1, 7], 1.0)
    assert 0 in s


def test_build_family_dispatch():
    assert build_family(FamilySpec(family=FamilyTag.QR, p=11)) == quadratic_residues(11)
    spec = FamilySpec(family="ap", group="Z9", start=2, length=3)
    assert build_family(spec).to_list() == [2, 3, 4]


def test_family_spec_requires_parameters():
    with pytest.raises(ValidationError):
        FamilySpec(family="subspace_union", n=4)
    with pytest.raises(ValidationError):
        FamilySpec(family="random", group="Z5", density=1.5)


def test_solution_free_greedy_is_maximal():
    group = parse_group_spec("Z11")
    coeffs = (1, 1, -1)
    s = solution_free_greedy(group, coeffs, 0, seed=4)
    assert is_solution_free(s, coeffs, 0)
    for x in range(group.order):
        if x not in s:
            assert not is_solution_free(s | GroupSet.from_elements(group, [x]), coeffs, 0)


def test_exhaustive_solution_free():
    group = parse_group_spec("Z5")
    found = exhaustive_solution_free(group, (1, 1, -1))
    assert found
    assert all(is_solution_free(s, (1, 1, -1), 0) for s in found)
    # {1, 4} is sum-free in Z/5 while {1, 2} is not
    assert [1, 4] in [s.to_list() for s in found]
    assert [1, 2] not in [s.to_list() for s in found]
    assert len(exhaustive_solution_free(group, (1, 1, -1), limit=2)) == 2


def test_solution_free_rejects_non_units():
    with pytest.raises(FamilyParameterError):
        solution_free_greedy(parse_group_spec("Z6"), (1, 2), 0, seed=0)
    with pytest.raises(FamilyParameterError):
        exhaustive_solution_free(parse_group_spec("Z17"), (1, 1, -1))


def test_number_theory_helpers():
    g, table = dlog_table(7)
    assert pow(g, int(table[5]), 7) == 5
    assert least_prime_factor(91) == 7
    d = admissible_modulus(256)
    assert d == 17


def test_universal_sumset_rejects_large_k():
    with pytest.raises(FamilyParameterError):
        universal_sumset(100, 10, 0)


def test_universal_sumset_reports_densities():
    # N = 2048 is past the direct un check, so only the lifting certifies U
    result = universal_sumset(2048, 1, seed=0)
    cert = result.certificate
    assert cert.modulus == 47
    assert cert.direct_un is None and cert.lifting_holds
    assert cert.a_density == Fraction(len(result.a), 2048)
    assert cert.b_density == Fraction(len(result.b), 2048)
    assert cert.density_floor == Fraction(4, 2048)
    assert min(cert.a_density, cert.b_density) >= cert.density_floor
    assert cert.complement_size >= 2048 // 4
    assert cert.model_dump(mode="json")["density_floor"] == "1/512"


@pytest.mark.slow
def test_universal_sumset_certificate():
    result = universal_sumset(256, 2, seed=1)
    cert = result.certificate
    assert result.u == sumset(result.a, result.b)
    assert cert.lifting_holds
    assert cert.u_size == len(result.u) <= 0.75 * 256
    assert 1 <= cert.k_certified <= 2
    assert min(cert.a_density, cert.b_density) >= cert.density_floor
    assert universal_sumset(256, 2, seed=1).u == result.u
