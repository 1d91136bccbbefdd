"""
검사 실행 로직

CheckExecutor 가 REGISTRY 의 검사를 실행하고 CheckResult 로 돌려줍니다.
개별 검사는 스레드에서 동시에 실행되고, 보고서는 검사 id 순으로 조립됩니다.
"""

import asyncio
from collections.abc import Iterable, Mapping

from loguru import logger

from precusp.checks.invariants import REGISTRY, Check
from precusp.core.config import settings
from precusp.core.errors import PrecuspError
from precusp.schemas.report import CheckResult, VerificationReport


class CheckExecutor:
    """
    검사 실행기

    Attributes:
        registry: 검사 id → 검사 함수
        concurrency: 동시에 실행할 검사 수

    Example:
        >>> executor = CheckExecutor()
        >>> report = await executor.run(["gammasets"])
        >>> report.summary
        {'pass': 6, 'fail': 0, 'info': 0}
    """

    def __init__(self, registry: Mapping[str, Check] | None = None, concurrency: int | None = None):
        self.registry = dict(REGISTRY if registry is None else registry)
        self.concurrency = concurrency or settings.check_concurrency

    def execute(self, check_id: str) -> CheckResult:
        """
        검사 하나를 실행합니다.

        예외는 밖으로 던지지 않고 status="fail" 결과로 바꿉니다.
        """
        logger.debug(f"📋 검사 실행: {check_id}")
        try:
            match self.registry.get(check_id):
                case None:
                    logger.warning(f"알 수 없는 검사: {check_id}")
                    return CheckResult(id=check_id, status="fail", details=f"알 수 없는 검사: {check_id}")
                case run:
                    result = run()
        except PrecuspError as e:
            logger.warning(f"❌ {check_id}: {type(e).__name__}: {e}")
            return CheckResult(id=check_id, status="fail", details=f"{type(e).__name__}: {e}")
        except Exception as e:
            logger.error(f"검사 실행 오류 ({check_id}): {e}")
            return CheckResult(id=check_id, status="fail", details=f"{type(e).__name__}: {e}")

        icon = {"pass": "✅", "fail": "❌", "info": "⚠️"}[result.status]
        logger.info(f"{icon} {check_id}")
        return result

    def select(self, scope: Iterable[str] | None = None) -> list[str]:
        """scope: None 또는 "all" 이면 전부, 아니면 모듈 이름 또는 검사 id"""
        wanted = set(scope or ["all"])
        return sorted(
            i for i in self.registry if "all" in wanted or i in wanted or i.split(".", 1)[0] in wanted
        )

    async def run(self, scope: Iterable[str] | None = None) -> VerificationReport:
        ids = self.select(scope)
        logger.info(f"📋 검사 {len(ids)}개 실행 (동시 {self.concurrency})")
        gate = asyncio.Semaphore(self.concurrency)

        async def one(check_id: str) -> CheckResult:
            async with gate:
                return await asyncio.to_thread(self.execute, check_id)

        results = await asyncio.gather(*(one(i) for i in ids))
        return VerificationReport(checks=sorted(results, key=lambda r: r.id))
