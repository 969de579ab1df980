"""Registered checks and the named suites built from them."""

from typing import Final

from unicov.core.enums.check import CheckKind
from unicov.verify.checks import (  # noqa: F401
    covering,
    equations,
    multiplicative,
    reports,
    sumsets,
    triangle,
    universality,
)
from unicov.verify.exceptions import UnknownCheckError
from unicov.verify.registry import Check, registered

CORE_SUITE: Final[tuple[str, ...]] = ("V02", "V03", "V09")
IDENTITY_SUITE: Final[tuple[str, ...]] = (*CORE_SUITE, "V23", "V26", "V36")


def _by_kind(kind: CheckKind) -> tuple[str, ...]:
    return tuple(check_id for check_id, check in registered().items() if check.kind is kind)


SUITES: Final[dict[str, tuple[str, ...]]] = {
    "core": CORE_SUITE,
    "identities": IDENTITY_SUITE,
    "all": _by_kind(CheckKind.ASSERTED),
    "report": _by_kind(CheckKind.REPORT_ONLY),
}


def get_check(check_id: str) -> Check:
    checks = registered()
    key = check_id.strip().upper()
    if key not in checks:
        raise UnknownCheckError(f"Unknown check {check_id!r}")
    return checks[key]


def resolve_suite(name: str) -> list[str]:
    """A suite name, or a comma-separated list of check ids, as ordered check ids."""
    if name in SUITES:
        return list(SUITES[name])
    ids = [token.strip().upper() for token in name.split(",") if token.strip()]
    if not ids:
        raise UnknownCheckError(f"Unknown suite {name!r}")
    for check_id in ids:
        get_check(check_id)
    return list(dict.fromkeys(ids))
