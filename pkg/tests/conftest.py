from collections.abc import Callable, Iterable

import numpy as np
import pytest

from unicov.group.group import Group, parse_group_spec
from unicov.sets.group_set import GroupSet


@pytest.fixture
def group() -> Callable[[str], Group]:
    return parse_group_spec


@pytest.fixture
def make_set() -> Callable[[str, Iterable[int]], GroupSet]:
    def _make(spec: str, elements: Iterable[int]) -> GroupSet:
        return GroupSet.from_elements(parse_group_spec(spec), elements)

    return _make


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)
