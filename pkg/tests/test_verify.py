import json
import math
from fractions import Fraction

import pytest

from unicov.constructions.families import quadratic_residues, subspace_union_universal
from unicov.core.enums.check import CheckKind, CheckStatus, Relation
from unicov.dto.campaign import CampaignReport, CheckTally
from unicov.group.group import parse_group_spec
from unicov.schemas.check_instance import CheckInstance
from unicov.schemas.run_config import RunConfig
from unicov.services.verify.verify_service import VerifyService
from unicov.sets.operations import sumset
from unicov.solver.universality import un_value
from unicov.verify.campaign import run_campaign, trial_instance
from unicov.verify.catalog import SUITES, get_check, resolve_suite
from unicov.verify.compare import compare, tightest
from unicov.verify.exceptions import MalformedInstanceError, UnknownCheckError
from unicov.verify.generators import build, permute_coordinates
from unicov.verify.registry import registered
from unicov.verify.runner import run_check

ALL_IDS = [f"V{n:02d}" for n in range(1, 37)]
REPORT_IDS = {"V29", "V34", "V35"}


def test_exact_comparison():
    c = compare("x", 3, Fraction(7, 2), Relation.LE)
    assert c.holds and c.exact
    assert c.slack == Fraction(1, 2)
    assert not compare("x", 4, 4, Relation.LT).holds


def test_float_comparison_has_guard_band():
    assert compare("x", 1.0 + 1e-12, 1, Relation.LE).holds
    assert not compare("x", 1.1, 1, Relation.LE).exact


def test_infinite_comparison():
    c = compare("x", math.inf, 3, Relation.GE)
    assert c.holds and c.slack == math.inf
    assert compare("x", math.inf, math.inf, Relation.EQ).holds
    assert not compare("x", 5, math.inf, Relation.GE).holds


def test_tightest_prefers_failures():
    ok = compare("ok", 1, 5, Relation.LE)
    close = compare("close", 4, 5, Relation.LE)
    bad = compare("bad", 6, 5, Relation.LE)
    assert tightest([ok, close]).label == "close"
    assert tightest([ok, bad, close]).label == "bad"


def test_registry_is_complete():
    assert list(registered()) == ALL_IDS
    assert set(SUITES["report"]) == REPORT_IDS
    assert not set(SUITES["all"]) & REPORT_IDS
    assert all(get_check(i).kind is CheckKind.REPORT_ONLY for i in REPORT_IDS)


def test_resolve_suite():
    assert resolve_suite("core") == ["V02", "V03", "V09"]
    assert resolve_suite(" v02, V03,v02 ") == ["V02", "V03"]
    with pytest.raises(UnknownCheckError):
        resolve_suite("V99")
    with pytest.raises(UnknownCheckError):
        resolve_suite("")


def test_cover_universality_identity_passes():
    result = run_check("V02", CheckInstance(group="Z5", sets={"A": [0, 1]}))
    assert result.status is CheckStatus.PASSED
    assert result.lhs == result.rhs == Fraction(3)
    assert result.measurements["un_source"] == "oracle"


def test_failed_premise_skips():
    result = run_check("V02", CheckInstance(group="Z5", sets={"A": [0, 1, 2, 3, 4]}))
    assert result.status is CheckStatus.SKIPPED
    assert result.reason == "A = G"


def test_malformed_instances():
    with pytest.raises(MalformedInstanceError):
        run_check("V02", CheckInstance(group="Q7", sets={"A": [0]}))
    with pytest.raises(MalformedInstanceError):
        run_check("V02", CheckInstance(group="Z5"))
    with pytest.raises(MalformedInstanceError):
        run_check("V02", CheckInstance(group="Z5", sets={"A": [7]}))


def test_product_of_subspace_unions():
    u = subspace_union_universal(6, 2)
    v = permute_coordinates(u, [0, 3, 1, 4, 2, 5])
    assert un_value(u) == un_value(v) == 2
    instance = build(u.group, {"A": u, "B": v})
    result = run_check("V08", instance)
    assert result.status is CheckStatus.PASSED
    assert result.rhs >= 4
    assert result.lhs >= result.rhs
    # 9 elements miss U + V in F_2^6, so un(U + V) >= ceil(64/9) - 1 without a search
    assert len(sumset(u, v)) == 55
    assert result.lhs == 7
    assert result.measurements["un_sum_source"] == "volume"
    assert len(sumset(u, v)) > len(u)


def test_union_bound_reports_each_case():
    # B = [0, 3] in Z24: K = 7/4, beta = 1/6, cov(A) = 24
    result = run_check("V22", CheckInstance(group="Z24", sets={"A": [0], "B": [0, 1, 2, 3]}))
    assert result.status is CheckStatus.PASSED
    assert [c.label for c in result.comparisons] == [
        "cov(A | B) >= union lower bound (dense case)",
        "cov(A | B) >= union lower bound (sparse case)",
    ]
    assert result.measurements["binding_case"] == "dense"
    bounds = result.measurements["case_bounds"]
    assert bounds["dense"] == pytest.approx(0.5 * 6 / 1.75**3)
    assert bounds["sparse"] == pytest.approx(0.5 * 24 / (2 * 1.75**4 * math.log(6)))
    assert result.lhs == 6
    assert result.rhs == pytest.approx(bounds["dense"])


def test_report_only_check_never_fails():
    residues = quadratic_residues(11)
    result = run_check("V29", build(residues.group, {"R": residues}))
    assert result.status is CheckStatus.REPORTED
    assert "ratio" in result.measurements


def test_trial_instances_are_reproducible():
    first = trial_instance("V07", seed=9, trial=2)
    assert first == trial_instance("V07", seed=9, trial=2)
    assert (first.seed, first.trial) == (9, 2)


def test_empty_campaign():
    report = run_campaign("core", trials=0)
    assert report.totals.attempted == 0
    assert report.ok
    assert report.adequate
    assert set(report.per_check) == {"V02", "V03", "V09"}


def test_campaign_is_deterministic():
    first = run_campaign("core", trials=3, seed=5)
    second = run_campaign("core", trials=3, seed=5)
    assert first.model_dump(exclude={"wall_time"}) == second.model_dump(exclude={"wall_time"})
    totals = first.totals
    assert totals.attempted == 9
    assert totals.attempted == totals.passed + totals.failed + totals.skipped + totals.reported


def test_campaign_report_survives_json(tmp_path):
    report = run_campaign("V02,V29", trials=2, seed=1)
    path = tmp_path / "report.json"
    path.write_text(report.model_dump_json())
    assert CampaignReport.model_validate_json(path.read_text()).totals == report.totals


def _premise_never_holds(self, ctx):
    ctx.require(False, "premise forced off")


def test_premise_gated_checks_are_flagged():
    gated = {check_id for check_id, check in registered().items() if check.premise_gated}
    assert gated == {"V14", "V15", "V16", "V28"}


def test_campaign_with_every_gated_trial_skipped(monkeypatch):
    monkeypatch.setattr(type(get_check("V28")), "evaluate", _premise_never_holds)
    report = run_campaign("V02,V28", trials=2, seed=3)
    assert report.per_check["V28"].skipped == report.per_check["V28"].attempted == 2
    assert report.ok
    assert report.starved == ["V28"]
    assert not report.adequate
    assert json.loads(report.model_dump_json())["starved"] == ["V28"]


def test_ungated_skips_do_not_starve():
    report = CampaignReport(
        suite="V02,V14",
        check_ids=["V02", "V14"],
        seed=0,
        trials=2,
        per_check={"V02": CheckTally(attempted=2, skipped=2), "V14": CheckTally(attempted=2, passed=1, skipped=1)},
        tool_version="test",
        premise_gated=["V14"],
    )
    assert report.starved == []
    assert report.adequate


def test_replay_reruns_stored_results(tmp_path):
    passed = run_check("V02", CheckInstance(group="Z6", sets={"A": [0, 2]}))
    report = run_campaign("core", trials=0).model_copy(update={"failures": [passed]})
    path = tmp_path / "report.json"
    path.write_text(report.model_dump_json())
    replay = VerifyService(RunConfig(command="replay", report_path=path)).replay(path)
    assert replay.replayed == replay.reproduced == 1
    assert replay.ok


@pytest.mark.slow
def test_exhaustive_core_suite():
    report = run_campaign("core", exhaustive="z8")
    assert report.totals.failed == 0
    assert report.per_check["V02"].attempted == 2**8 - 2


@pytest.mark.slow
@pytest.mark.parametrize("check_id", ALL_IDS)
def test_random_trials_do_not_fail(check_id):
    for trial in range(3):
        result = run_check(check_id, trial_instance(check_id, seed=17, trial=trial))
        assert result.status is not CheckStatus.FAILED, result.comparisons


def test_complement_duality_on_every_subset():
    group = parse_group_spec("Z4")
    instances = list(get_check("V36").exhaustive(group))
    assert len(instances) == 2**4
    for instance in instances:
        assert run_check("V36", instance).status is CheckStatus.PASSED
