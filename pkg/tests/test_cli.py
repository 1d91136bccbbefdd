"""
명령줄 인터페이스 테스트

main(argv) 의 종료 코드와 stdout 출력을 확인합니다.

실행 방법:
    uv run pytest tests/test_cli.py -v
"""

import sys

import orjson
import pytest
from loguru import logger

from precusp.checks import REGISTRY
from precusp.core.config import settings
from precusp.main import EXIT_FAIL, EXIT_OK, EXIT_USAGE, cmd_verify, host_name, main
from precusp.schemas.report import CheckResult


@pytest.fixture(autouse=True)
def restore_logger():
    """main() 이 바꾼 loguru 핸들러를 테스트 뒤에 되돌립니다."""
    yield
    logger.remove()
    logger.add(sys.stderr)


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, orjson.loads(out) if out else None


class TestEnum:
    """enum 명령"""

    def test_cf(self, capsys):
        """𝔉(V_2) 는 3행, 구간 기저와 ε 포함"""
        code, rows = run_json(capsys, "enum", "cf", "--d", "2")
        assert code == EXIT_OK
        assert len(rows) == 3
        assert {"index", "value", "interval_basis", "epsilon"} <= set(rows[0])

    def test_zero_v(self, capsys):
        """⁰V_5 는 20행"""
        code, rows = run_json(capsys, "enum", "zero-v", "--d", "5")
        assert code == EXIT_OK
        assert len(rows) == 20

    def test_occ_d0(self, capsys):
        """occ(V_0^1) 는 1행"""
        _, rows = run_json(capsys, "enum", "occ", "--d", "0")
        assert len(rows) == 1
        assert set(rows[0]["pair"]) == {"small", "large"}

    def test_tsv(self, capsys):
        """tsv 는 머리글 + 행"""
        assert main(["enum", "zero-v", "--d", "3", "--format", "tsv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "index\tvalue"
        assert len(lines) == 1 + 6

    def test_deterministic(self, capsys):
        """같은 입력은 같은 출력"""
        main(["enum", "cf", "--d", "6"])
        first = capsys.readouterr().out
        main(["enum", "cf", "--d", "6"])
        assert capsys.readouterr().out == first

    def test_prime_even(self, capsys):
        """prime 족에 짝수 D 는 사용법 오류"""
        assert main(["enum", "cf-prime", "--d", "4"]) == EXIT_USAGE
        assert capsys.readouterr().out == ""

    def test_cap(self):
        """enum_cap 초과는 사용법 오류"""
        assert main(["enum", "cf", "--d", "20"]) == EXIT_USAGE

    def test_negative(self):
        """D < 0"""
        assert main(["enum", "zero-v", "--d", "-1"]) == EXIT_USAGE


class TestXGamma:
    """xgamma 명령"""

    @pytest.mark.parametrize("tag, size", [("S4", 11), ("S2'", 2), ("S3", 5), ("V4", 10)])
    def test_sizes(self, capsys, tag, size):
        """|X_Γ|"""
        code, rows = run_json(capsys, "xgamma", tag)
        assert code == EXIT_OK
        assert len(rows) == size

    def test_bar_x(self, capsys):
        """X̄_S4 의 마지막은 (S1⊆S1)"""
        _, rows = run_json(capsys, "xgamma", "S4", "--variant", "barX")
        assert rows[-1]["name"] == "(S1⊆S1)"

    def test_small_x(self, capsys):
        """x_S4 는 몫 이름 포함"""
        _, rows = run_json(capsys, "xgamma", "S4", "--variant", "x")
        assert [r["quotient"] for r in rows] == ["S2", "S2", "S1", "S1"]

    def test_unknown_tag(self):
        """알 수 없는 이름"""
        assert main(["xgamma", "S9"]) == EXIT_USAGE

    def test_trivial(self):
        """x_S1 은 정의되지 않음"""
        assert main(["xgamma", "S1", "--variant", "x"]) == EXIT_USAGE


class TestRhoAndOrder:
    """rho, order 명령"""

    def test_rho_by_name(self, capsys):
        """ρ_(S3⊆S3) 은 계수 1 세 개"""
        code, row = run_json(capsys, "rho", "S3", "(S3,S3)")
        assert code == EXIT_OK
        assert row["pair"] == "(S3⊆S3)"
        assert row["coefficients"] == [1, 1, 1]

    def test_rho_by_index(self, capsys):
        """번호 0 은 표시 순서 첫 쌍"""
        _, row = run_json(capsys, "rho", "S3", "0")
        assert row["pair"] == "(S3⊆S3)"

    def test_rho_missing(self):
        """없는 쌍"""
        assert main(["rho", "S3", "(S4,S4)"]) == EXIT_USAGE
        assert main(["rho", "S3", "99"]) == EXIT_USAGE

    def test_order(self, capsys):
        """S2 의 덮개 관계 두 개"""
        code, rows = run_json(capsys, "order", "S2")
        assert code == EXIT_OK
        assert len(rows) == 2


class TestVerify:
    """verify 명령"""

    def test_single_check(self, capsys):
        """검사 하나"""
        code, report = run_json(capsys, "verify", "inductive.cf_count")
        assert code == EXIT_OK
        assert report["summary"] == {"pass": 1, "fail": 0, "info": 0}

    def test_unknown_scope(self):
        """아무 검사와도 맞지 않는 범위"""
        assert main(["verify", "nothing"]) == EXIT_USAGE

    def test_bar_reading_option(self, capsys, monkeypatch, bar_reading):
        """--bar-reading 은 실행 동안만 적용되고 끝나면 되돌아감"""
        bar_reading("s2")
        monkeypatch.setitem(
            REGISTRY,
            "demo.reading",
            lambda: CheckResult(id="demo.reading", status="pass", data={"reading": settings.bar_reading}),
        )
        code, report = run_json(capsys, "verify", "demo.reading", "--bar-reading", "vprime")
        assert code == EXIT_OK
        assert report["checks"][0]["data"] == {"reading": "vprime"}
        assert settings.bar_reading == "s2"

    def test_cmd_verify_restores(self, monkeypatch, bar_reading):
        """라이브러리 호출도 설정을 남기지 않음"""
        bar_reading("s2")
        monkeypatch.setitem(REGISTRY, "demo.boom", lambda: 1 / 0)
        report, code = cmd_verify(["demo.boom"], bar_reading="vprime")
        assert code == EXIT_FAIL
        assert report.summary["fail"] == 1
        assert settings.bar_reading == "s2"


class TestPrecuspidal:
    """precuspidal 명령"""

    def test_d4(self, capsys):
        """D4 는 통과"""
        code, reports = run_json(capsys, "precuspidal", "D4")
        assert code == EXIT_OK
        assert reports[0]["host"] == "D4"

    def test_series_k(self, capsys):
        """B 와 k=1 → B2"""
        code, reports = run_json(capsys, "precuspidal", "B", "--k", "1")
        assert code == EXIT_OK
        assert reports[0]["host"] == "B2"

    def test_vprime_reading(self, capsys):
        """D4 를 vprime 으로 읽으면 실패"""
        code, reports = run_json(capsys, "precuspidal", "D4", "--bar-reading", "vprime")
        assert code == EXIT_FAIL
        assert reports[0]["bar_x_count"] == 3

    def test_unknown_host(self):
        """자료에 없는 호스트"""
        assert main(["precuspidal", "A3"]) == EXIT_USAGE

    def test_host_name(self):
        """B/C_{k²+k}, D_{k²}"""
        assert host_name("C", 2) == "C6"
        assert host_name("D", 3) == "D9"
        assert host_name("E8", None) == "E8"
