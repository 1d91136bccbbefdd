"""
pydantic-settings를 사용한 타입 안전한 설정 관리

계산 상한(cap), bar 집합 해석 방식, 로그 레벨 등 실행 환경에 따라
달라지는 값을 환경변수(PRECUSP_*)로 주입받습니다.

사용법:
    from precusp.core.config import settings

    # 환경변수 값 사용
    cap = settings.enum_cap
    reading = settings.bar_reading
"""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

BarReading = Literal["s2", "vprime"]


class Settings(BaseSettings):
    """
    precusp 설정 클래스

    각 필드는 PRECUSP_ 접두사가 붙은 환경변수와 1:1로 매핑됩니다. (대소문자 무시)

    예시:
        PRECUSP_BAR_READING=vprime  ->  settings.bar_reading
        PRECUSP_ENUM_CAP=16         ->  settings.enum_cap
    """

    # ===== 환경 설정 =====
    environment: Literal["development", "test", "production"] = "development"

    # 디버그 모드 (True면 DEBUG 로그 출력)
    debug: bool = False

    # 기본 로그 레벨
    log_level: str = "INFO"

    # ===== 계산 설정 =====
    # V'_3^1 (= S2) 의 bar x 집합 해석: s2 → 2개 쌍, vprime → 3개 쌍
    bar_reading: BarReading = "s2"

    # 열거 명령의 D 상한
    enum_cap: int = Field(default=14, ge=0)

    # Weyl 궤도 오라클의 rank 상한
    orbit_rank_cap: int = Field(default=7, ge=1)

    # 지표표 계산 대상 군의 위수 상한
    char_table_order_cap: int = Field(default=200, ge=1)

    # F2 벡터 인덱스 상한
    bound_cap: int = Field(default=64, ge=1, le=64)

    # verify 에서 동시에 실행할 검사 수
    check_concurrency: int = Field(default=4, ge=1)

    # ===== 데이터 설정 =====
    # 비워두면 패키지에 포함된 precuspidal.json 사용
    precuspidal_data: Path | None = None

    model_config = SettingsConfigDict(
        env_prefix="PRECUSP_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """
    설정 객체를 반환합니다 (싱글톤 패턴)

    Returns:
        Settings: 설정 객체
    """
    return Settings()


# 전역 설정 객체
settings = get_settings()
