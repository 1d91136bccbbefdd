"""
첨점 족의 Γ_c 카탈로그, 전첨점 목록 𝒾_c / 𝒾̄_c, 개수 일관성 검증

consistency_check 는 |x_{Γ_c}| (resp. |x̄_{Γ_c}|) 를
    - 랭크 ≤ orbit_rank_cap: 실현된 I' 들의 W-궤도 수
    - 그 외: 실현된 I' 의 개수 (자료의 stated_count 와도 비교)
와 비교합니다. Γ_c 는 자료에 실린 가설이며 alternatives 도 같은 방식으로 보고합니다.
"""

from __future__ import annotations

from loguru import logger

from precusp.algebra.gammasets import AKind, AObject, bar_x_set, big_x, x_set
from precusp.core.config import BarReading, settings
from precusp.core.errors import UnknownHost, Unrealizable
from precusp.repositories.precuspidal import PrecuspidalRepository, get_precuspidal_repository
from precusp.schemas.precuspidal import HostReport, PrecuspidalRecord
from precusp.weyl.cartan import CartanDiagram, canonical_types, format_type, realize, type_rank, weyl_orbit_count

TERMINAL = ("G2", "F4", "E8")

# 예외형 호스트: |c| → Γ_c
GAMMA_C_BY_FAMILY_SIZE = {1: "S1", 2: "S2'", 3: "S2", 4: "S3'", 5: "S3", 11: "S4", 17: "S5"}


def is_terminal(host: str) -> bool:
    return host in TERMINAL


def gamma_c_for_family_size(size: int) -> str:
    """
    Raises:
        UnknownHost: 예외형 첨점 족에 없는 크기
    """
    try:
        return GAMMA_C_BY_FAMILY_SIZE[size]
    except KeyError as exc:
        raise UnknownHost(f"예외형 족 크기 {size} 에 해당하는 Γ_c 가 없습니다") from exc


def expected_ci_types(series: str, k: int) -> tuple[list[tuple[str, ...]], tuple[str, ...] | None]:
    """
    B/C_{k²+k}: {L}_{k²+k-1-i} A_i  (i = 0..2k-1)
    D_{k²}:     D_{k²-1-i} A_i      (i = 0..2k-3),  bar: D_{(k-1)²} A_{2k-2}
    """

    def entry(letter: str, rank: int, i: int) -> tuple[str, ...]:
        parts = ([f"{letter}{rank}"] if rank else []) + ([f"A{i}"] if i else [])
        return canonical_types(parts)

    if series in ("B", "C"):
        n = k * k + k
        return [entry(series, n - 1 - i, i) for i in range(2 * k)], None
    if series == "D" and k >= 3:
        n = k * k
        types = [entry("D", n - 1 - i, i) for i in range(2 * k - 2)]
        return types, entry("D", (k - 1) ** 2, 2 * k - 2)
    raise UnknownHost(f"{series}_{{k}} 계열에 k={k} 공식이 없습니다")


def ci_table(host: str, repository: PrecuspidalRepository | None = None) -> PrecuspidalRecord:
    """
    Raises:
        UnknownHost: 자료에 없는 호스트
    """
    return (repository or get_precuspidal_repository()).get(host)


def realize_subsets(
    diagram: CartanDiagram, record: PrecuspidalRecord
) -> dict[tuple[str, ...], tuple[frozenset[int], ...]]:
    """
    ci_types 와 bar_extra 의 각 유형을 실현하는 진부분집합 I' ⊊ I

    Raises:
        Unrealizable: 어떤 유형도 실현되지 않거나 랭크가 호스트 이상인 경우
    """
    wanted = [canonical_types(t) for t in record.ci_types]
    if record.bar_extra:
        wanted.append(canonical_types(record.bar_extra))
    out = {}
    for types in wanted:
        if sum(type_rank(t) for t in types) >= diagram.rank:
            raise Unrealizable(f"{diagram}: {format_type(types)} 는 진부분집합이 아닙니다")
        subsets = realize(diagram, types)
        if not subsets:
            raise Unrealizable(f"{diagram}: {format_type(types)} 를 실현하는 I' 가 없습니다")
        out[types] = subsets
    return out


# =============================================================
# γ(c) 와 이상(anomalous) 판정
# =============================================================


def _is_cuspidal_rank(series: str, rank: int) -> bool:
    if series in ("B", "C"):
        m = 1
        while m * m + m < rank:
            m += 1
        return m * m + m == rank
    m = 2
    while m * m < rank:
        m += 1
    return m * m == rank


def _cuspidal_components(series: str, types: tuple[str, ...]) -> list[int]:
    ranks = []
    for t in types:
        if t[0] == series and _is_cuspidal_rank(series, type_rank(t)):
            ranks.append(type_rank(t))
    return ranks


def parity_violations(diagram: CartanDiagram, record: PrecuspidalRecord) -> list[str]:
    """
    𝒾_c 의 첨점 성분은 γ 가 호스트와 같아야 하고,
    𝒾̄_c - 𝒾_c 의 유형에는 γ 가 다른 첨점 성분이 있어야 합니다.
    """
    if record.series is None:
        return []
    host_gamma = diagram.rank % 2
    bad = []
    for types in record.ci_types:
        for r in _cuspidal_components(record.series, canonical_types(types)):
            if r % 2 != host_gamma:
                bad.append(f"{format_type(types)}: γ({record.series}{r}) ≠ γ({diagram})")
    if record.bar_extra:
        ranks = _cuspidal_components(record.series, canonical_types(record.bar_extra))
        if not any(r % 2 != host_gamma for r in ranks):
            bad.append(f"bar {format_type(record.bar_extra)}: γ 가 다른 첨점 성분이 없습니다")
    return bad


def is_anomalous_family(host: str, family_size: int) -> bool:
    """terminal 호스트의 첨점 족이거나 |c| = 2"""
    return is_terminal(host) or family_size == 2


def catalog_violations(diagram: CartanDiagram, record: PrecuspidalRecord, gamma: AObject) -> list[str]:
    bad = []
    match diagram.letter:
        case "B" | "C":
            if gamma.kind is not AKind.VD1:
                bad.append(f"{diagram} 의 Γ_c 는 V_D^1 이어야 합니다: {gamma}")
        case "D":
            if gamma.kind is not AKind.VPRIME_D1:
                bad.append(f"{diagram} 의 Γ_c 는 V'_D^1 이어야 합니다: {gamma}")
        case "A":
            if gamma.order != 1:
                bad.append(f"{diagram} 의 Γ_c 는 S1 이어야 합니다")
        case _:
            expected = gamma_c_for_family_size(record.family_size)
            if gamma.tag != expected:
                bad.append(f"|c|={record.family_size} 이면 Γ_c = {expected} ({gamma} 아님)")
    if record.series is not None and record.parameter is not None:
        types, extra = expected_ci_types(record.series, record.parameter)
        if [canonical_types(t) for t in record.ci_types] != types:
            bad.append(f"{diagram}: 𝒾_c 유형이 계열 공식과 다릅니다")
        recorded_extra = canonical_types(record.bar_extra) if record.bar_extra else None
        if recorded_extra != extra:
            bad.append(f"{diagram}: 𝒾̄_c 추가 유형이 계열 공식과 다릅니다")
    return bad


# =============================================================
# 개수 일관성
# =============================================================


def consistency_check(
    host: str,
    *,
    reading: BarReading | None = None,
    gamma_c: str | None = None,
    repository: PrecuspidalRepository | None = None,
    force: bool = False,
) -> HostReport:
    """
    |x_{Γ_c}| = |𝒾_c / ~|,  |x̄_{Γ_c}| = |𝒾̄_c / ~|  와 보조 검사를 한 번에 수행합니다.
    """
    record = ci_table(host, repository)
    reading = reading or settings.bar_reading
    diagram = CartanDiagram.parse(record.host)
    gamma = AObject.parse(gamma_c or record.gamma_c)
    notes: list[str] = []

    x_count = len(x_set(gamma)) if gamma.order > 1 else 0
    bar_x_count = len(bar_x_set(gamma, reading)) if gamma.order > 1 else 0

    realized = realize_subsets(diagram, record)
    ci_keys = [canonical_types(t) for t in record.ci_types]
    ci_subsets = [s for key in ci_keys for s in realized[key]]
    extra = realized[canonical_types(record.bar_extra)] if record.bar_extra else ()

    if diagram.rank <= settings.orbit_rank_cap or force:
        method = "orbits"
        ci_count = weyl_orbit_count(diagram, ci_subsets, force=force)
        bar_ci_count = weyl_orbit_count(diagram, [*ci_subsets, *extra], force=force) if extra else ci_count
    else:
        method = "stated"
        ci_count = len(ci_subsets)
        bar_ci_count = ci_count + len(extra)
    if record.stated_count is not None and len(ci_subsets) != record.stated_count:
        notes.append(f"실현된 I' {len(ci_subsets)}개 ≠ 명시된 {record.stated_count}개")

    family_size_ok = len(big_x(gamma)) == record.family_size
    if not family_size_ok:
        notes.append(f"|X_Γc| = {len(big_x(gamma))} ≠ |c| = {record.family_size}")
    catalog = catalog_violations(diagram, record, gamma)
    parity = parity_violations(diagram, record)
    anomaly_ok = not is_anomalous_family(record.host, record.family_size) or gamma.anomalous
    if not anomaly_ok:
        notes.append(f"이상 족인데 Γ_c = {gamma} 는 이상 대상이 아닙니다")
    notes.extend(catalog + parity)
    if x_count != ci_count:
        notes.append(f"|x| = {x_count} ≠ {ci_count}")
    if bar_x_count != bar_ci_count:
        notes.append(f"|x̄| = {bar_x_count} ≠ {bar_ci_count} (bar_reading={reading})")

    passed = (
        x_count == ci_count
        and bar_x_count == bar_ci_count
        and family_size_ok
        and not catalog
        and not parity
        and anomaly_ok
        and (record.stated_count is None or len(ci_subsets) == record.stated_count)
    )
    logger.info(f"{'✅' if passed else '❌'} {record.host} (Γ_c={gamma}, {method}): |x|={x_count}, 𝒾_c={ci_count}")
    return HostReport(
        host=record.host,
        gamma_c=gamma.tag,
        bar_reading=reading,
        x_count=x_count,
        bar_x_count=bar_x_count,
        ci_count=ci_count,
        bar_ci_count=bar_ci_count,
        method=method,
        family_size_ok=family_size_ok,
        catalog_ok=not catalog,
        parity_ok=not parity,
        anomaly_ok=anomaly_ok,
        passed=passed,
        notes=notes,
    )


def hypothesis_reports(host: str, **kwargs) -> list[HostReport]:
    """자료의 Γ_c 와 alternatives 각각에 대한 보고"""
    record = ci_table(host, kwargs.get("repository"))
    return [consistency_check(host, gamma_c=tag, **kwargs) for tag in [record.gamma_c, *record.alternatives]]
