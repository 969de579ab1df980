from pathlib import Path

from loguru import logger

from unicov.dto.campaign import CampaignReport, ReplayReport
from unicov.dto.check import CheckResult
from unicov.dto.table import TableReport
from unicov.schemas.run_config import RunConfig
from unicov.verify.campaign import run_campaign
from unicov.verify.runner import run_check
from unicov.verify.table import FAMILIES, table_experiment


def _same_outcome(stored: CheckResult, replayed: CheckResult) -> bool:
    return (
        stored.status == replayed.status
        and stored.lhs == replayed.lhs
        and stored.rhs == replayed.rhs
        and stored.holds == replayed.holds
    )


class VerifyService:
    def __init__(self, config: RunConfig) -> None:
        self.config = config

    def campaign(self) -> CampaignReport:
        config = self.config
        return run_campaign(
            config.suite,
            trials=config.trials,
            seed=config.seed,
            parallelism=config.parallelism,
            exhaustive=config.exhaustive,
            config=config.model_dump(mode="json"),
        )

    def table(self) -> TableReport:
        config = self.config
        return table_experiment(
            config.primes,
            config.families or FAMILIES,
            config.seed,
            density=config.density,
            node_budget=config.node_budget,
        )

    def replay(self, path: Path) -> ReplayReport:
        """Re-run every failure stored in a campaign report."""
        stored = CampaignReport.model_validate_json(path.read_text())
        results = []
        reproduced = 0
        for failure in stored.failures:
            result = run_check(failure.check_id, failure.instance)
            if _same_outcome(failure, result):
                reproduced += 1
            else:
                logger.error(f"{failure.check_id} trial {failure.instance.trial} did not reproduce: {result.status}")
            results.append(result)
        logger.info(f"Replayed {len(results)} failures from {path}: {reproduced} reproduced")
        return ReplayReport(source=str(path), replayed=len(results), reproduced=reproduced, results=results)
