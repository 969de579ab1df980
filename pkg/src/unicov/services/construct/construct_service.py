from typing import Any

from loguru import logger

from unicov.constructions.families import build_family
from unicov.constructions.universal_sumset import universal_sumset
from unicov.core.enums.family import FamilyTag
from unicov.dto.construction import ConstructionRecord
from unicov.fourier.bohr import bohr_size_bound
from unicov.group.group import parse_group_spec
from unicov.schemas.bohr import BohrSpec
from unicov.schemas.family import FamilySpec
from unicov.sets.group_set import GroupSet
from unicov.solver.universality import un_exact


class ConstructService:
    def __init__(self, spec: FamilySpec, node_budget: int | None = None) -> None:
        self.spec = spec
        self.node_budget = node_budget

    def _verification(self, s: GroupSet) -> dict[str, Any]:
        spec = self.spec
        match spec.family:
            case FamilyTag.QR:
                expected = (spec.p - 1) // 2
                return {"expected_size": expected, "holds": len(s) == expected}
            case FamilyTag.INTERVAL:
                return {"lowest": min(s.to_list()), "highest": max(s.to_list())}
            case FamilyTag.AP:
                return {"expected_size": spec.length, "holds": len(s) == spec.length}
            case FamilyTag.RANDOM:
                return {"target_density": spec.density, "density": float(s.density), "seed": spec.seed}
            case FamilyTag.SUBSPACE_UNION:
                report = un_exact(s, node_budget=self.node_budget)
                return {
                    "k": spec.k,
                    "un": report.un,
                    "optimal": report.optimal,
                    "holds": report.optimal and not report.is_infinite and report.un >= spec.k,
                }
            case FamilyTag.BOHR:
                group = parse_group_spec(spec.group)
                bound = bohr_size_bound(group, BohrSpec(frequencies=spec.frequencies, radius=spec.radius))
                return {"size_bound": bound, "holds": len(s) >= bound}
        return {}

    def run(self) -> ConstructionRecord:
        spec = self.spec
        if spec.family is FamilyTag.UNIVERSAL_SUMSET:
            result = universal_sumset(
                spec.order, spec.k, spec.seed, symmetric=spec.symmetric, node_budget=self.node_budget
            )
            verification = result.certificate.model_dump(mode="json") | {"a": result.a.to_list(), "b": result.b.to_list()}
            s = result.u
        else:
            s = build_family(spec)
            verification = self._verification(s)

        if verification.get("holds") is False:
            logger.warning(f"Construction {spec.family} failed its verification: {verification}")
        return ConstructionRecord(
            family=spec.family,
            group=s.group.spec,
            elements=s.to_list(),
            size=len(s),
            verification=verification,
        )
