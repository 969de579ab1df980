from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field

from unicov.core.enums.check import CheckStatus
from unicov.dto.check import CheckResult


class CheckTally(BaseModel):
    """Outcome counts for one check; attempted = passed + failed + skipped + reported."""

    attempted: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    reported: int = 0
    skip_reasons: dict[str, int] = Field(default_factory=dict)

    def add(self, result: CheckResult) -> None:
        self.attempted += 1
        match result.status:
            case CheckStatus.PASSED:
                self.passed += 1
            case CheckStatus.FAILED:
                self.failed += 1
            case CheckStatus.SKIPPED:
                self.skipped += 1
                reason = (result.reason or "unspecified").split(":")[0]
                self.skip_reasons[reason] = self.skip_reasons.get(reason, 0) + 1
            case CheckStatus.REPORTED:
                self.reported += 1


class CampaignReport(BaseModel):
    model_config = ConfigDict(ser_json_inf_nan="strings")

    suite: str
    check_ids: list[str]
    seed: int
    trials: int
    exhaustive: str | None = None
    totals: CheckTally = Field(default_factory=CheckTally)
    per_check: dict[str, CheckTally] = Field(default_factory=dict)
    failures: list[CheckResult] = Field(default_factory=list)
    reports: list[CheckResult] = Field(default_factory=list)
    wall_time: float = 0.0
    config: dict[str, Any] = Field(default_factory=dict)
    tool_version: str
    premise_gated: list[str] = Field(default_factory=list)

    @computed_field
    @property
    def starved(self) -> list[str]:
        """Premise-gated checks whose every trial was skipped."""
        return [
            check_id
            for check_id in self.premise_gated
            if (tally := self.per_check.get(check_id)) is not None
            and tally.attempted > 0
            and tally.skipped == tally.attempted
        ]

    @property
    def ok(self) -> bool:
        return self.totals.failed == 0

    @property
    def adequate(self) -> bool:
        return not self.starved


class ReplayReport(BaseModel):
    """Failures of a stored campaign re-run from their descriptors."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    source: str
    replayed: int
    reproduced: int
    results: list[CheckResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.reproduced == self.replayed
