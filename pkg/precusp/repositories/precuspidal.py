"""
전첨점 자료 Repository

패키지에 포함된 precuspidal.json (또는 PRECUSP_PRECUSPIDAL_DATA 경로)을 읽어
PrecuspidalRecord 로 돌려줍니다. 검증기는 이 자료만 소비합니다.

사용법:
    from precusp.repositories import get_precuspidal_repository

    repo = get_precuspidal_repository()
    record = repo.get("E8")
"""

from importlib import resources
from pathlib import Path

import orjson
from loguru import logger
from pydantic import ValidationError

from precusp.core.config import settings
from precusp.core.errors import PrecuspError, UnknownHost
from precusp.schemas.precuspidal import PrecuspidalRecord, PrecuspidalResource

# Repository 싱글톤
_repository: "PrecuspidalRepository | None" = None


class PrecuspidalRepository:
    """
    전첨점 자료 Repository

    Example:
        >>> repo = PrecuspidalRepository()
        >>> repo.get("G2").gamma_c
        "S3'"
    """

    def __init__(self, path: Path | None = None):
        self.path = path
        raw = path.read_bytes() if path else resources.files("precusp.data").joinpath("precuspidal.json").read_bytes()
        try:
            self.resource = PrecuspidalResource.model_validate(orjson.loads(raw))
        except (orjson.JSONDecodeError, ValidationError) as e:
            logger.error(f"❌ 전첨점 자료 읽기 실패: {e}")
            raise PrecuspError(f"전첨점 자료 형식 오류: {e}") from e
        self._by_host = {r.host: r for r in self.resource.records}
        logger.debug(f"📋 전첨점 자료 {len(self._by_host)}건 ({path or '내장'})")

    @classmethod
    def from_records(cls, records: list[PrecuspidalRecord]) -> "PrecuspidalRepository":
        """메모리 자료로 만든 Repository (변이 테스트용)"""
        repo = cls.__new__(cls)
        repo.path = None
        repo.resource = PrecuspidalResource(records=records)
        repo._by_host = {r.host: r for r in records}
        return repo

    @property
    def hosts(self) -> list[str]:
        return [r.host for r in self.resource.records]

    @property
    def records(self) -> list[PrecuspidalRecord]:
        return list(self.resource.records)

    def get(self, host: str) -> PrecuspidalRecord:
        """
        Raises:
            UnknownHost: 자료에 없는 호스트
        """
        record = self._by_host.get(host.strip())
        if record is None:
            raise UnknownHost(f"첨점 족 자료가 없는 호스트: {host}")
        return record


def get_precuspidal_repository() -> PrecuspidalRepository:
    """Repository 를 반환합니다 (싱글톤 패턴)."""
    global _repository

    if _repository is None:
        _repository = PrecuspidalRepository(settings.precuspidal_data)
    return _repository
