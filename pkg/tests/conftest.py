"""
공용 fixture

memo(lru_cache) 가 모듈 전역에 있으므로 표나 설정을 바꾸는 테스트는
fresh_caches 로 앞뒤를 비웁니다.
"""

import pytest

from precusp.algebra import f2spaces, gammasets, inductive, mgamma
from precusp.algebra.gammasets import AObject
from precusp.core.config import settings
from precusp.repositories import precuspidal as precuspidal_repo


def clear_all_caches() -> None:
    f2spaces.clear_caches()
    inductive.clear_caches()
    gammasets.clear_caches()
    mgamma.clear_caches()


@pytest.fixture
def fresh_caches():
    """테스트 전후로 열거/X/ρ memo 를 비웁니다."""
    clear_all_caches()
    yield
    clear_all_caches()


@pytest.fixture
def bar_reading():
    """settings.bar_reading 을 바꾸고 원래대로 되돌립니다."""
    original = settings.bar_reading

    def set_reading(value: str) -> None:
        settings.bar_reading = value

    yield set_reading
    settings.bar_reading = original


@pytest.fixture
def reset_repository():
    """전첨점 Repository 싱글톤을 테스트 후 초기화합니다."""
    yield
    precuspidal_repo._repository = None


@pytest.fixture
def s3() -> AObject:
    return AObject.parse("S3")


@pytest.fixture
def s4() -> AObject:
    return AObject.parse("S4")
