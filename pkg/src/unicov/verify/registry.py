"""
The check base class and its registry.

A check turns an instance into a list of comparisons. Hypotheses are
enforced with ``CheckContext.require``; a failed hypothesis skips the trial
instead of passing it.
"""

from abc import ABC, abstractmethod
from collections.abc import Iterator
from typing import ClassVar

import numpy as np

from unicov.core.enums.check import CheckKind
from unicov.dto.check import Comparison
from unicov.group.group import Group
from unicov.schemas.check_instance import CheckInstance
from unicov.verify.context import CheckContext

_REGISTRY: dict[str, "Check"] = {}


class Check(ABC):
    check_id: ClassVar[str]
    anchor: ClassVar[str]
    kind: ClassVar[CheckKind] = CheckKind.ASSERTED
    # A campaign must get at least one trial of a premise-gated check past its premise.
    premise_gated: ClassVar[bool] = False

    @property
    def number(self) -> int:
        return int(self.check_id.lstrip("V"))

    @abstractmethod
    def generate(self, rng: np.random.Generator) -> CheckInstance:
        """A random instance drawn from ``rng``."""

    @abstractmethod
    def evaluate(self, ctx: CheckContext) -> list[Comparison]: ...

    def exhaustive(self, group: Group) -> Iterator[CheckInstance] | None:
        """Instances covering every subset of ``group``, or None if unsupported."""
        return None


def register(cls: type[Check]) -> type[Check]:
    if cls.check_id in _REGISTRY:
        raise ValueError(f"Check {cls.check_id} registered twice")
    _REGISTRY[cls.check_id] = cls()
    return cls


def registered() -> dict[str, Check]:
    return dict(sorted(_REGISTRY.items(), key=lambda item: item[1].number))
