"""
precusp 예외 계층

모든 예외는 PrecuspError(ValueError)를 상속합니다.
검증 체크(checks)에서는 이 예외를 잡아 fail 결과로 변환하고,
CLI는 사용자 입력 오류를 종료 코드 2로 매핑합니다.
"""


class PrecuspError(ValueError):
    """precusp 기본 예외"""


# ===== f2spaces =====
class NotIntervalFamily(PrecuspError):
    """부분공간이 구간 기저를 갖지 않음 (𝔉(V)에 속하지 않음)"""


class NotInZeroV(PrecuspError):
    """u(x) != 0 인 벡터에 Θ를 적용함"""


class AmbientMismatch(PrecuspError):
    """서로 다른 공간의 벡터를 섞어 연산함"""


class BadIndex(PrecuspError):
    """인덱스 또는 D 값이 허용 범위를 벗어남"""


# ===== inductive =====
class NotInFamily(PrecuspError):
    """입력 부분공간이 해당 귀납 족에 속하지 않음"""


# ===== groups =====
class UnknownTag(PrecuspError):
    """카탈로그에 없는 태그"""


class NotNormal(PrecuspError):
    """정규부분군이 아닌 것으로 몫군을 만들려 함"""


class NotIsomorphic(PrecuspError):
    """생성원 상 탐색으로 동형사상을 찾지 못함"""


class SizeCap(PrecuspError):
    """군의 위수가 계산 상한을 초과함"""


# ===== gammasets / mgamma =====
class TrivialGroup(PrecuspError):
    """자명군에는 x 집합이 정의되지 않음"""


class BadPair(PrecuspError):
    """부분군 쌍이 정규성/몫 조건을 만족하지 않음"""


class NoBijection(PrecuspError):
    """계수 1 완전매칭이 존재하지 않음"""


class NotUnique(PrecuspError):
    """계수 1 완전매칭이 유일하지 않음"""


class NotAntisymmetric(PrecuspError):
    """생성된 관계가 반대칭이 아님"""


class NonIntegralCoefficient(PrecuspError):
    """ρ 계수가 음이 아닌 정수가 아님"""


# ===== precuspidal =====
class UnknownHost(PrecuspError):
    """데이터 리소스에 없는 Cartan 타입"""


class Unrealizable(PrecuspError):
    """나열된 Levi 타입을 실현하는 부분집합이 없음"""


class RankCap(PrecuspError):
    """rank가 궤도 오라클 상한을 초과함"""


# ===== cli =====
class CapExceeded(PrecuspError):
    """CLI 계산 상한 초과 (--force로 해제 가능)"""
