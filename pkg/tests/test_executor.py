"""
CheckExecutor 와 등록된 검사 테스트

실행 방법:
    uv run pytest tests/test_executor.py -v
"""

import pytest

from precusp.checks import REGISTRY, CheckExecutor
from precusp.core.errors import SizeCap
from precusp.schemas.report import CheckResult


def _passing() -> CheckResult:
    return CheckResult(id="demo.ok", status="pass")


def _raising() -> CheckResult:
    raise SizeCap("|G| = 720 > 200")


def _crashing() -> CheckResult:
    raise KeyError("boom")


class TestCheckExecutor:
    """검사 실행기 테스트"""

    @pytest.fixture
    def executor(self):
        """가짜 검사로 만든 CheckExecutor"""
        return CheckExecutor(
            {"demo.ok": _passing, "demo.cap": _raising, "other.crash": _crashing},
            concurrency=2,
        )

    def test_execute_pass(self, executor):
        """정상 검사"""
        assert executor.execute("demo.ok").status == "pass"

    def test_unknown_check(self, executor):
        """알 수 없는 검사는 fail"""
        result = executor.execute("demo.missing")
        assert result.status == "fail"
        assert "demo.missing" in result.details

    def test_domain_error(self, executor):
        """PrecuspError 는 이름과 함께 fail"""
        result = executor.execute("demo.cap")
        assert result.status == "fail"
        assert result.details.startswith("SizeCap")

    def test_unexpected_error(self, executor):
        """그 밖의 예외도 fail"""
        assert executor.execute("other.crash").status == "fail"

    def test_select_module(self, executor):
        """모듈 접두사로 고르기"""
        assert executor.select(["demo"]) == ["demo.cap", "demo.ok"]
        assert executor.select(["other.crash"]) == ["other.crash"]
        assert executor.select(None) == ["demo.cap", "demo.ok", "other.crash"]
        assert executor.select(["all"]) == executor.select(None)
        assert executor.select(["nothing"]) == []

    @pytest.mark.asyncio
    async def test_run_report(self, executor):
        """보고서는 id 순, 요약 집계"""
        report = await executor.run()
        assert [c.id for c in report.checks] == ["demo.cap", "demo.ok", "other.crash"]
        assert report.summary == {"pass": 1, "fail": 2, "info": 0}
        assert not report.ok

    @pytest.mark.asyncio
    async def test_run_scope(self, executor):
        """scope 안의 검사만 실행"""
        report = await executor.run(["demo.ok"])
        assert report.ok
        assert len(report.checks) == 1


class TestRegisteredChecks:
    """실제 등록된 검사"""

    def test_modules(self):
        """다섯 모듈의 검사가 등록됨"""
        assert {i.split(".", 1)[0] for i in REGISTRY} == {"f2spaces", "inductive", "gammasets", "mgamma", "precuspidal"}

    @pytest.mark.parametrize(
        "check_id",
        [
            "f2spaces.zero_v_count",
            "f2spaces.u_xi_identity",
            "f2spaces.theta_involution",
            "f2spaces.z_prime_count",
            "inductive.cf_count",
            "inductive.interval_transport",
            "inductive.pi_bijection",
            "gammasets.occ_identification",
            "inductive.epsilon_bijection",
            "inductive.isotropic",
            "precuspidal.root_counts",
            "precuspidal.orbit_examples",
            "mgamma.vector_ss",
        ],
    )
    def test_check_passes(self, check_id):
        """빠른 검사는 pass"""
        assert CheckExecutor().execute(check_id).status == "pass"

    @pytest.mark.slow
    def test_informative_status(self):
        """참고용 검사는 fail 이 아니라 info"""
        result = CheckExecutor().execute("precuspidal.hypotheses")
        assert result.status == "info"
        assert result.data["failures"]

    @pytest.mark.slow
    @pytest.mark.asyncio
    async def test_verify_all(self):
        """전체 검증에 fail 이 없음"""
        report = await CheckExecutor().run()
        failed = [c.id for c in report.checks if c.status == "fail"]
        assert failed == []
