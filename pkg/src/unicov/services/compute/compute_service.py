import math
from typing import Any

from loguru import logger

from unicov.core.config import settings
from unicov.core.enums.cover import CoverStatus
from unicov.core.enums.invariant import ComputeStatus, Invariant
from unicov.dto.compute import ComputeReport
from unicov.dto.cover import CoverWitness, UniversalityReport
from unicov.fourier.density import DensityFunction
from unicov.fourier.spectrum import spectrum
from unicov.fourier.transforms import balanced_function, ek_norm, higher_energy, wiener_norm
from unicov.group.group import parse_group_spec
from unicov.schemas.run_config import RunConfig
from unicov.sets.group_set import GroupSet
from unicov.solver.cover import cov_exact
from unicov.solver.multiplicative import cov_mult, un_mult
from unicov.solver.universality import u_bar, u_n, un_exact

_COVER_STATUS: dict[CoverStatus, ComputeStatus] = {
    CoverStatus.OPTIMAL: ComputeStatus.OPTIMAL,
    CoverStatus.INFEASIBLE: ComputeStatus.INFEASIBLE,
    CoverStatus.INDETERMINATE: ComputeStatus.INDETERMINATE,
    CoverStatus.FEASIBLE: ComputeStatus.INDETERMINATE,
    CoverStatus.NOT_FOUND: ComputeStatus.INDETERMINATE,
}


class ComputeService:
    def __init__(self, config: RunConfig) -> None:
        """Decodes the group and set named by ``config``; parse errors propagate."""
        if config.invariant is None or config.group is None or config.set_literal is None:
            raise ValueError("compute needs an invariant, a group and a set")
        self.config = config
        self.invariant = config.invariant
        self.group = parse_group_spec(config.group)
        self.a = GroupSet.from_literal(self.group, config.set_literal)
        self.target = (
            GroupSet.from_literal(self.group, config.target_literal)
            if config.target_literal is not None
            else None
        )
        self.node_budget = config.node_budget

    def _report(self, status: ComputeStatus, value: Any, **fields: Any) -> ComputeReport:
        return ComputeReport(
            invariant=self.invariant,
            group=self.group.spec,
            elements=self.a.to_list(),
            value=value,
            status=status,
            config=self.config.model_dump(mode="json"),
            tool_version=settings.TOOL_VERSION,
            **fields,
        )

    def _from_cover(self, cover: CoverWitness) -> ComputeReport:
        status = _COVER_STATUS[cover.status]
        if status is ComputeStatus.INDETERMINATE:
            logger.warning(f"{self.invariant} only bracketed in [{cover.lower_bound}, {cover.upper_bound}]")
        return self._report(
            status,
            cover.value,
            witness=cover.witness.to_list() if cover.witness is not None else None,
            details=cover.model_dump(mode="json", exclude={"witness"}),
        )

    def _from_universality(self, report: UniversalityReport) -> ComputeReport:
        if report.is_infinite:
            status = ComputeStatus.INFINITE
        elif report.optimal:
            status = ComputeStatus.OPTIMAL
        else:
            status = ComputeStatus.INDETERMINATE
        return self._report(
            status,
            math.inf if report.is_infinite else report.un,
            witness=report.witnessing_failure,
            details=report.model_dump(mode="json", exclude={"cover"}),
        )

    def _profile(self) -> tuple[int, ...]:
        return (self.config.n,) if self.config.n is not None else ()

    def run(self) -> ComputeReport:
        a, n = self.a, self.config.n or 2
        match self.invariant:
            case Invariant.COV:
                return self._from_cover(cov_exact(a, self.target, node_budget=self.node_budget))
            case Invariant.COV_MULT:
                return self._from_cover(cov_mult(a, self.target, node_budget=self.node_budget))
            case Invariant.UN:
                return self._from_universality(un_exact(a, profile=self._profile(), node_budget=self.node_budget))
            case Invariant.UN_MULT:
                return self._from_universality(un_mult(a, node_budget=self.node_budget))
            case Invariant.U_N:
                return self._report(ComputeStatus.EXACT, u_n(a, n), details={"n": n, "u_bar": u_bar(a, n)})
            case Invariant.EK:
                norm = ek_norm(balanced_function(a), n)
                return self._report(
                    ComputeStatus.EXACT,
                    higher_energy(a, n),
                    details={"k": n, "balanced_norm": str(norm)},
                )
            case Invariant.WIENER:
                value = wiener_norm(DensityFunction.indicator(self.group, a.bits))
                return self._report(ComputeStatus.EXACT, value)
            case Invariant.SPECTRUM:
                eps = self.config.eps if self.config.eps is not None else 0.5
                spec = spectrum(a, eps)
                return self._report(ComputeStatus.EXACT, len(spec), witness=spec.characters, details=spec.model_dump())
        raise ValueError(f"Unsupported invariant {self.invariant}")
