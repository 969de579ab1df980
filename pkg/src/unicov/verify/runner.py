from loguru import logger

from unicov.core.enums.check import CheckKind, CheckStatus
from unicov.dto.check import CheckResult
from unicov.group.exceptions import GroupCapError
from unicov.schemas.check_instance import CheckInstance
from unicov.sets.exceptions import EnumerationCapError, ProfileCapError
from unicov.solver.exceptions import EmptySetError, IndeterminateCoverError, OracleCapError
from unicov.verify.catalog import get_check
from unicov.verify.compare import tightest
from unicov.verify.context import CheckContext
from unicov.verify.exceptions import PremiseNotMetError

# Resource limits hit while evaluating; the trial is skipped, never failed.
_SKIPPABLE = (
    IndeterminateCoverError,
    OracleCapError,
    ProfileCapError,
    EnumerationCapError,
    GroupCapError,
    EmptySetError,
)


def run_check(check_id: str, instance: CheckInstance) -> CheckResult:
    """Evaluate one check on one instance."""
    check = get_check(check_id)
    ctx = CheckContext(instance)
    base = {
        "check_id": check.check_id,
        "anchor": check.anchor,
        "kind": check.kind,
        "instance": instance,
    }

    try:
        comparisons = check.evaluate(ctx)
    except PremiseNotMetError as e:
        return CheckResult(**base, status=CheckStatus.SKIPPED, reason=str(e), measurements=ctx.measurements)
    except _SKIPPABLE as e:
        logger.debug(f"{check.check_id} skipped on {instance.group}: {type(e).__name__}: {e}")
        return CheckResult(
            **base,
            status=CheckStatus.SKIPPED,
            reason=f"{type(e).__name__}: {e}",
            measurements=ctx.measurements,
        )

    top = tightest(comparisons)
    if check.kind is CheckKind.REPORT_ONLY:
        status = CheckStatus.REPORTED
    elif all(c.holds for c in comparisons):
        status = CheckStatus.PASSED
    else:
        status = CheckStatus.FAILED
        logger.error(f"{check.check_id} failed on {instance.group}: {top.label} with lhs={top.lhs}, rhs={top.rhs}")

    return CheckResult(
        **base,
        status=status,
        comparisons=comparisons,
        lhs=top.lhs,
        rhs=top.rhs,
        relation=top.relation,
        holds=top.holds,
        slack=top.slack,
        measurements=ctx.measurements,
    )
