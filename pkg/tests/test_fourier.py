from fractions import Fraction

import numpy as np
import pytest

from unicov.fourier.bohr import bohr_set, bohr_size_bound
from unicov.fourier.density import DensityFunction, convolve, correlate
from unicov.fourier.exceptions import ComplexInputError, ParameterRangeError
from unicov.fourier.spectrum import spectrum
from unicov.fourier.transforms import (
    balanced_function,
    dft,
    ek_norm,
    higher_energy,
    idft,
    parseval_gap,
    set_transform,
    wiener_norm,
)
from unicov.group.group import parse_group_spec
from unicov.schemas.bohr import BohrSpec
from unicov.sets.group_set import GroupSet
from unicov.sets.operations import representation_count


def test_energy_small_case(make_set):
    a = make_set("Z4", [0, 1])
    assert higher_energy(a, 1) == 4
    assert higher_energy(a, 2) == 6


def test_energy_of_subgroup(make_set):
    # A o A is |A| on the subgroup and zero elsewhere
    a = make_set("Z12", [0, 4, 8])
    assert higher_energy(a, 3) == 3 * 3**3


def test_balanced_function_is_exact_and_centred(make_set):
    f = balanced_function(make_set("Z6", [0, 1, 3]))
    assert f.is_exact
    assert f.total() == 0
    assert f.value_at(0) == Fraction(1, 2)
    assert ek_norm(f, 1) == 0


def test_ek_norm_of_balanced_function_matches_floats(make_set):
    f = balanced_function(make_set("Z2^3", [0, 1, 2, 4]))
    exact = ek_norm(f, 2)
    approx = ek_norm(DensityFunction(f.group, f.as_complex()), 2)
    assert isinstance(exact, Fraction)
    assert float(exact) == pytest.approx(approx)


def test_ek_norm_rejects_bad_input(make_set):
    group = parse_group_spec("Z3")
    with pytest.raises(ParameterRangeError):
        ek_norm(DensityFunction.constant(group), 0)
    with pytest.raises(ComplexInputError):
        ek_norm(DensityFunction(group, np.array([1j, 0, 0])), 2)


def test_transform_inverts(rng):
    group = parse_group_spec("Z3xZ4")
    f = DensityFunction(group, rng.normal(size=12) + 1j * rng.normal(size=12))
    back = idft(dft(f))
    assert np.allclose(back.values, f.values)
    assert parseval_gap(f) == pytest.approx(0, abs=1e-9)


def test_set_transform_at_principal_character(make_set):
    a = make_set("Z2^4", [0, 3, 5, 9, 12])
    assert set_transform(a).values[0] == pytest.approx(5)


def test_wiener_norm_of_full_set(make_set):
    group = parse_group_spec("Z10")
    full = GroupSet.full(group)
    assert wiener_norm(DensityFunction.indicator(group, full.bits)) == pytest.approx(1.0)


def test_convolution_counts_representations(make_set):
    a = make_set("Z5", [0, 1])
    b = make_set("Z5", [0, 1, 2])
    assert list(representation_count(a, b).values) == [1, 2, 2, 1, 0]
    ia = DensityFunction.indicator(a.group, a.bits)
    assert list(correlate(ia, ia).values) == [2, 1, 0, 0, 1]
    assert convolve(ia, DensityFunction.constant(a.group)).total() == 10


def test_spectrum(make_set):
    assert spectrum(make_set("Z5", [0]), 1.0).characters == [0, 1, 2, 3, 4]
    full = GroupSet.full(parse_group_spec("Z6"))
    assert spectrum(full, 0.5).characters == [0]
    assert len(spectrum(full, 0.5, exclude_principal=True)) == 0
    with pytest.raises(ParameterRangeError):
        spectrum(full, 0.0)


@pytest.mark.parametrize("eps", [1e-12, 1e-300])
def test_tiny_threshold_gives_support_of_transform(make_set, eps):
    # the transform of {0, 2} in Z4 is 1 + (-1)^chi
    assert spectrum(make_set("Z4", [0, 2]), eps).characters == [0, 2]


def test_bohr_set():
    group = parse_group_spec("Z12")
    spec = BohrSpec(frequencies=[1], radius=0.52)
    assert bohr_set(group, spec).to_list() == [0, 1, 11]
    assert bohr_size_bound(group, spec) < 3
    with pytest.raises(ParameterRangeError):
        bohr_set(group, BohrSpec(frequencies=[12], radius=1.0))
