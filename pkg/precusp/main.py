"""
precusp 명령줄 진입점

표 출력(stdout)은 실행마다 같은 바이트가 나오도록 정렬된 순서만 사용하고,
로그는 stderr 로 보냅니다.

실행 방법:
    # 열거
    uv run precusp enum cf --d 4
    uv run precusp enum zero-v --d 5 --format tsv

    # X_Γ, ρ, 부분순서
    uv run precusp xgamma S4 --variant X
    uv run precusp rho S3 "(S3,S3)"
    uv run precusp order S4

    # 검증
    uv run precusp verify all
    uv run precusp verify gammasets mgamma --bar-reading vprime
    uv run precusp precuspidal E8

종료 코드:
    0: 성공, 1: 검사 실패, 2: 사용법 오류 (잘못된 이름, 상한 초과)
"""

import argparse
import asyncio
import sys
from collections.abc import Sequence

import orjson
from loguru import logger
from pydantic import BaseModel

from precusp.algebra.f2spaces import epsilon, interval_basis_of, zero_v_set
from precusp.algebra.gammasets import AObject, SubgroupPair, bar_big_x, bar_x_set, big_x, x_set
from precusp.algebra.inductive import (
    enum_cf,
    enum_cf_prime,
    enum_occ,
    enum_occ_prime,
    epsilon_prime,
)
from precusp.algebra.mgamma import partial_order, rho
from precusp.checks.executor import CheckExecutor
from precusp.core.config import settings
from precusp.core.errors import (
    BadIndex,
    BadPair,
    CapExceeded,
    PrecuspError,
    RankCap,
    TrivialGroup,
    UnknownHost,
    UnknownTag,
)
from precusp.schemas.report import CoverRow, EnumRow, PairRow, RhoRow, VerificationReport
from precusp.weyl.precuspidal import hypothesis_reports

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# 입력이 잘못된 경우 (계산 결과의 실패와 구분)
USAGE_ERRORS = (BadIndex, BadPair, CapExceeded, RankCap, TrivialGroup, UnknownHost, UnknownTag)


def setup_logging(verbose: bool = False) -> None:
    """loguru 기본 핸들러를 stderr 핸들러로 교체합니다."""
    logger.remove()
    level = "DEBUG" if verbose or settings.debug else settings.log_level
    logger.add(sys.stderr, format=LOG_FORMAT, level=level, colorize=True)


def _validate_settings() -> None:
    """상한이 기본값보다 크면 경고만 남깁니다."""
    if settings.enum_cap > 14:
        logger.warning(f"⚠️ enum_cap={settings.enum_cap}: 열거 크기가 D 에 대해 지수적으로 커집니다")
    if settings.orbit_rank_cap > 7:
        logger.warning(f"⚠️ orbit_rank_cap={settings.orbit_rank_cap}: E8 궤도 계산은 매우 느립니다")
    if settings.char_table_order_cap > 200:
        logger.warning(f"⚠️ char_table_order_cap={settings.char_table_order_cap}")


# =============================================================
# 출력
# =============================================================


def _cell(value: object) -> str:
    if isinstance(value, str):
        return value
    return orjson.dumps(value, option=orjson.OPT_SORT_KEYS).decode()


def emit(payload: BaseModel | Sequence[BaseModel], fmt: str) -> None:
    """json: 들여쓰기 + 키 정렬,  tsv: 첫 행의 필드 이름을 머리글로"""
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
        rows = [data] if fmt == "tsv" else data
    else:
        rows = data = [row.model_dump(mode="json", exclude_none=fmt == "tsv") for row in payload]
    if fmt == "json":
        sys.stdout.write(orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode() + "\n")
        return
    if not rows:
        return
    header = list(rows[0])
    lines = ["\t".join(header)]
    lines += ["\t".join(_cell(row.get(k)) for k in header) for row in rows]
    sys.stdout.write("\n".join(lines) + "\n")


# =============================================================
# 명령
# =============================================================


def _check_cap(d: int, force: bool) -> None:
    if d < 0:
        raise BadIndex(f"D ≥ 0 이어야 합니다: {d}")
    if d <= settings.enum_cap:
        return
    if not force:
        raise CapExceeded(f"D={d} > enum_cap={settings.enum_cap} (--force 로 무시)")
    logger.warning(f"⚠️ D={d} 는 상한 {settings.enum_cap} 을 넘습니다. 계산이 오래 걸릴 수 있습니다")


def cmd_enum(kind: str, d: int, *, force: bool = False) -> list[EnumRow]:
    """
    cf / occ / cf-prime / occ-prime / zero-v 표

    Raises:
        CapExceeded: D 가 상한을 넘고 force 가 아닌 경우
        BadIndex: prime 족에 짝수 D
    """
    _check_cap(d, force)
    if kind in ("cf-prime", "occ-prime") and d % 2 == 0:
        raise BadIndex(f"{kind} 는 홀수 D 에서만 정의됩니다: D={d}")
    match kind:
        case "cf":
            return [
                EnumRow(
                    index=i,
                    value=space.to_list(),
                    interval_basis=interval_basis_of(space).to_list(),
                    epsilon=epsilon(space).to_list(),
                )
                for i, space in enumerate(enum_cf(d))
            ]
        case "cf-prime":
            return [
                EnumRow(index=i, value=space.to_list(), epsilon=epsilon_prime(space).to_list())
                for i, space in enumerate(enum_cf_prime(d))
            ]
        case "occ":
            return [EnumRow(index=i, pair=pair.to_list()) for i, pair in enumerate(enum_occ(d))]
        case "occ-prime":
            return [EnumRow(index=i, pair=pair.to_list()) for i, pair in enumerate(enum_occ_prime(d))]
        case "zero-v":
            return [EnumRow(index=i, value=x.to_list()) for i, x in enumerate(zero_v_set(d))]
        case _:
            raise BadIndex(f"알 수 없는 열거 종류: {kind}")


def _pairs_for(obj: AObject, variant: str) -> tuple[SubgroupPair, ...]:
    match variant:
        case "x":
            return x_set(obj)
        case "barx":
            return bar_x_set(obj)
        case "X":
            return big_x(obj)
        case "barX":
            return bar_big_x(obj)
        case _:
            raise BadPair(f"알 수 없는 변형: {variant}")


def cmd_xgamma(tag: str, variant: str = "X") -> list[PairRow]:
    obj = AObject.parse(tag)
    rows = []
    for i, pair in enumerate(_pairs_for(obj, variant)):
        data = pair.to_list()
        rows.append(
            PairRow(
                index=i,
                name=pair.name,
                small_order=pair.small_order,
                large_order=pair.large_order,
                quotient=data.get("quotient"),
                small=data.get("small"),
                large=data.get("large"),
            )
        )
    return rows


def _normalize_selector(text: str) -> str:
    return text.replace(" ", "").replace(",", "⊆")


def select_pair(obj: AObject, selector: str, *, bar: bool = False) -> SubgroupPair:
    """
    "(S3,S3)", "(S3⊆S3)" 같은 이름 또는 표시 순서의 번호로 쌍을 고릅니다.

    Raises:
        BadPair: 해당하는 쌍이 없는 경우
    """
    pairs = bar_big_x(obj) if bar else big_x(obj)
    if selector.strip().isdigit():
        idx = int(selector)
        if idx >= len(pairs):
            raise BadPair(f"{obj.tag}: 번호 {idx} ≥ {len(pairs)}")
        return pairs[idx]
    wanted = _normalize_selector(selector)
    for pair in pairs:
        if _normalize_selector(pair.name) == wanted:
            return pair
    raise BadPair(f"{obj.tag} 의 X 에 {selector} 가 없습니다")


def cmd_rho(tag: str, selector: str, *, bar: bool = False) -> RhoRow:
    obj = AObject.parse(tag)
    pair = select_pair(obj, selector, bar=bar)
    vec = rho(obj, pair)
    return RhoRow(
        pair=pair.name,
        support=[p.to_list() for p in vec.support],
        coefficients=[int(vec[p]) for p in vec.support],
    )


def cmd_order(tag: str, *, bar: bool = False) -> list[CoverRow]:
    order = partial_order(AObject.parse(tag), bar=bar)
    return [CoverRow(lower=a.to_list(), upper=b.to_list()) for a, b in order.covers()]


def cmd_verify(
    scope: Sequence[str], *, bar_reading: str | None = None
) -> tuple[VerificationReport, int]:
    """
    검사 실행 후 보고서를 출력하고 종료 코드를 돌려줍니다.
    bar_reading 은 이 실행 동안만 settings 에 적용되고 끝나면 원래 값으로 돌아갑니다.

    Raises:
        UnknownTag: scope 가 어떤 검사와도 맞지 않는 경우
    """
    executor = CheckExecutor()
    if not executor.select(scope):
        raise UnknownTag(f"알 수 없는 검사 범위: {' '.join(scope)}")
    original = settings.bar_reading
    if bar_reading is not None:
        settings.bar_reading = bar_reading  # type: ignore[assignment]
    try:
        report = asyncio.run(executor.run(scope))
    finally:
        settings.bar_reading = original
    logger.info(f"📋 결과: {report.summary}")
    return report, EXIT_OK if report.ok else EXIT_FAIL


def host_name(host: str, k: int | None) -> str:
    """B/C 와 k → B_{k²+k},  D 와 k → D_{k²}"""
    if k is None:
        return host
    match host.upper():
        case "B" | "C":
            return f"{host.upper()}{k * k + k}"
        case "D":
            return f"D{k * k}"
        case _:
            raise UnknownHost(f"k 는 B, C, D 계열에만 씁니다: {host}")


# =============================================================
# argparse
# =============================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default="json")
    common.add_argument("--force", action="store_true", help="상한 무시 (비용 경고 출력)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="precusp", description="구간 부분공간 족과 X_Γ 의 정확 계산")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common], help="𝔉 / occ / ⁰V 열거")
    p.add_argument("kind", choices=["cf", "occ", "cf-prime", "occ-prime", "zero-v"])
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("xgamma", parents=[common], help="x_Γ, X_Γ 와 bar 변형")
    p.add_argument("tag")
    p.add_argument("--variant", choices=["x", "barx", "X", "barX"], default="X")

    p = sub.add_parser("rho", parents=[common], help="ρ 출력")
    p.add_argument("tag")
    p.add_argument("selector")
    p.add_argument("--bar", action="store_true")

    p = sub.add_parser("order", parents=[common], help="M(Γ)_0 의 Hasse 덮개 관계")
    p.add_argument("tag")
    p.add_argument("--bar", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="불변량 검사")
    p.add_argument("scope", nargs="*", default=["all"])
    p.add_argument("--bar-reading", choices=["s2", "vprime"], default=None)

    p = sub.add_parser("precuspidal", parents=[common], help="호스트별 개수 일관성")
    p.add_argument("host")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--bar-reading", choices=["s2", "vprime"], default=None)
    return parser


def run(args: argparse.Namespace) -> int:
    if args.force:
        logger.warning("⚠️ --force: 상한 검사를 건너뜁니다. 계산 시간이 크게 늘 수 있습니다")
    match args.command:
        case "enum":
            emit(cmd_enum(args.kind, args.d, force=args.force), args.format)
        case "xgamma":
            emit(cmd_xgamma(args.tag, args.variant), args.format)
        case "rho":
            emit(cmd_rho(args.tag, args.selector, bar=args.bar), args.format)
        case "order":
            emit(cmd_order(args.tag, bar=args.bar), args.format)
        case "verify":
            report, code = cmd_verify(args.scope, bar_reading=args.bar_reading)
            emit(report if args.format == "json" else report.checks, args.format)
            return code
        case "precuspidal":
            reports = hypothesis_reports(
                host_name(args.host, args.k), reading=args.bar_reading, force=args.force
            )
            emit(reports, args.format)
            return EXIT_OK if reports[0].passed else EXIT_FAIL
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    _validate_settings()
    try:
        return run(args)
    except USAGE_ERRORS as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_USAGE
    except PrecuspError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
