"""
Randomized and exhaustive campaigns over a suite of checks.

Every trial draws from its own generator seeded by (seed, trial, check
number), so a campaign is reproducible trial by trial whatever the worker
count, and results are assembled in (check, trial) order.
"""

import time
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any

import numpy as np
from loguru import logger

from unicov.core.config import settings
from unicov.core.enums.check import CheckStatus
from unicov.dto.campaign import CampaignReport, CheckTally
from unicov.dto.check import CheckResult
from unicov.group.group import parse_group_spec
from unicov.schemas.check_instance import CheckInstance
from unicov.verify.catalog import get_check, resolve_suite
from unicov.verify.runner import run_check

Task = tuple[str, int, CheckInstance | None]


def trial_instance(check_id: str, seed: int, trial: int) -> CheckInstance:
    check = get_check(check_id)
    rng = np.random.default_rng([seed, trial, check.number])
    return check.generate(rng).model_copy(update={"seed": seed, "trial": trial})


def _run_task(check_id: str, seed: int, trial: int, instance: CheckInstance | None) -> CheckResult:
    if instance is None:
        instance = trial_instance(check_id, seed, trial)
    return run_check(check_id, instance)


def _random_tasks(check_ids: list[str], trials: int) -> Iterator[Task]:
    for check_id in check_ids:
        for trial in range(trials):
            yield check_id, trial, None


def _exhaustive_tasks(check_ids: list[str], group_spec: str, seed: int) -> Iterator[Task]:
    group = parse_group_spec(group_spec)
    for check_id in check_ids:
        instances = get_check(check_id).exhaustive(group)
        if instances is None:
            logger.warning(f"{check_id} has no exhaustive mode; skipped for {group_spec}")
            continue
        for trial, instance in enumerate(instances):
            yield check_id, trial, instance.model_copy(update={"seed": seed, "trial": trial})


def _execute(tasks: list[Task], seed: int, parallelism: int) -> list[CheckResult]:
    if parallelism <= 1:
        return [_run_task(check_id, seed, trial, instance) for check_id, trial, instance in tasks]

    results: dict[int, CheckResult] = {}
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        futures = {
            pool.submit(_run_task, check_id, seed, trial, instance): index
            for index, (check_id, trial, instance) in enumerate(tasks)
        }
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    return [results[index] for index in range(len(tasks))]


def run_campaign(
    suite: str,
    *,
    trials: int = 0,
    seed: int = 0,
    parallelism: int = 1,
    exhaustive: str | None = None,
    config: dict[str, Any] | None = None,
) -> CampaignReport:
    """
    Run ``trials`` random instances of every check in ``suite``, or every
    instance of its exhaustive mode when ``exhaustive`` names a group.
    """
    check_ids = resolve_suite(suite)
    if exhaustive is not None:
        tasks = list(_exhaustive_tasks(check_ids, exhaustive, seed))
    else:
        tasks = list(_random_tasks(check_ids, trials))
    logger.info(f"Campaign {suite!r}: {len(tasks)} trials over {len(check_ids)} checks (seed {seed})")

    started = time.perf_counter()
    results = _execute(tasks, seed, parallelism)

    report = CampaignReport(
        suite=suite,
        check_ids=check_ids,
        seed=seed,
        trials=trials,
        exhaustive=exhaustive,
        per_check={check_id: CheckTally() for check_id in check_ids},
        config=config or {},
        tool_version=settings.TOOL_VERSION,
        premise_gated=[check_id for check_id in check_ids if get_check(check_id).premise_gated],
    )
    for result in results:
        report.totals.add(result)
        report.per_check[result.check_id].add(result)
        if result.status is CheckStatus.FAILED:
            report.failures.append(result)
        elif result.status is CheckStatus.REPORTED:
            report.reports.append(result)
    report.wall_time = time.perf_counter() - started

    logger.info(
        f"Campaign {suite!r} done in {report.wall_time:.2f}s: {report.totals.passed} passed, "
        f"{report.totals.failed} failed, {report.totals.skipped} skipped, {report.totals.reported} reported"
    )
    if report.starved:
        logger.warning(f"Every trial of {', '.join(report.starved)} was skipped")
    return report
