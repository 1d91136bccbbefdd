"""
문서화된 불변량마다 하나씩의 검증 함수

각 함수는 CheckResult 를 돌려주고, 예외는 CheckExecutor 가 fail 로 바꿉니다.
식별자는 "<모듈>.<이름>" 형식이며 verify --scope 는 모듈 접두사로 고릅니다.

사용법:
    from precusp.checks.invariants import REGISTRY

    result = REGISTRY["gammasets.golden_x"]()
"""

from collections.abc import Callable
from math import comb

from precusp.algebra.f2spaces import (
    F2Subspace,
    epsilon,
    eta,
    interval_basis_of,
    interval_systems,
    is_isotropic,
    theta,
    u_invariant,
    u_tilde,
    v_d,
    xi,
    z_double_prime,
    z_prime_sets,
    zero_v_set,
)
from precusp.algebra.gammasets import (
    GOLDEN_X,
    AKind,
    AObject,
    bar_big_x,
    big_x,
    big_x_twisted,
    x_set,
    x_zero,
)
from precusp.algebra.groups import PermGroup, automorphisms, is_aproduct, quotient
from precusp.algebra.inductive import (
    cmap,
    enum_cf,
    enum_cf_prime,
    enum_occ,
    enum_occ_prime,
    epsilon_prime,
    lambda_map,
    lambda_prime,
    lift_intervals,
    pi_map,
    zero_vprime_set,
)
from precusp.algebra.mgamma import (
    MVector,
    bijection_j,
    m_zero,
    partial_order,
    rank,
    rho,
    rho_table,
    ss_induce,
    tower_mismatches,
    unit_pair,
)
from precusp.repositories.precuspidal import get_precuspidal_repository
from precusp.schemas.report import CheckResult
from precusp.weyl.cartan import ROOT_COUNTS, CartanDiagram, realize, weyl_orbit_count
from precusp.weyl.precuspidal import consistency_check, hypothesis_reports, realize_subsets

Check = Callable[[], CheckResult]

REGISTRY: dict[str, Check] = {}

SYMMETRIC_TAGS = ("S1", "S2", "S3", "S2'", "S3'", "S4", "S5")
VECTOR_TAGS = ("V4", "V6", "V8", "V'5", "V'7")


def check(check_id: str, *, informative: bool = False) -> Callable[[Callable[[], list[str]]], Check]:
    """
    실패 목록을 돌려주는 함수를 REGISTRY 에 등록합니다.

    informative 검사는 실패해도 status="info" 입니다.
    """

    def decorator(fn: Callable[[], list[str]]) -> Check:
        def run() -> CheckResult:
            failures = fn()
            if not failures:
                summary = fn.__doc__.strip().splitlines()[0] if fn.__doc__ else ""
                return CheckResult(id=check_id, status="pass", details=summary)
            status = "info" if informative else "fail"
            return CheckResult(id=check_id, status=status, details="; ".join(failures[:5]), data={"failures": failures})

        run.__name__ = fn.__name__
        REGISTRY[check_id] = run
        return run

    return decorator


def _mismatch(label: str, got: object, expected: object) -> list[str]:
    return [] if got == expected else [f"{label}: {got} ≠ {expected}"]


def _indicator_mismatch(label: str, space: F2Subspace, vec: MVector) -> list[str]:
    out = _mismatch(f"{label}: supp ρ", {p.vector for p in vec.support}, set(space.elements()))
    if any(c != 1 for c in vec.coefficients.values()):
        out.append(f"{label}: ρ 계수가 모두 1 이 아님 ({space})")
    return out


# =============================================================
# f2spaces
# =============================================================


@check("f2spaces.zero_v_count")
def zero_v_count() -> list[str]:
    """|⁰V_D| = C(D+1, ⌊(D+1)/2⌋), D ≤ 13"""
    out = []
    for d in range(0, 14):
        expected = comb(d + 1, d // 2) if d % 2 == 0 else comb(d + 1, (d + 1) // 2)
        out += _mismatch(f"D={d}", len(zero_v_set(d)), expected)
    return out


@check("f2spaces.u_xi_identity")
def u_xi_identity() -> list[str]:
    """ũ(ξ(x)) = -2·u(x) on V_D, D ≤ 12"""
    return [
        f"x={x}"
        for d in (12,)
        for x in v_d(d).elements()
        if u_tilde(xi(x)) != -2 * u_invariant(x)
    ]


@check("f2spaces.theta_involution")
def theta_involution() -> list[str]:
    """Θ 는 ⁰V_D (D 홀수 ≤ 11) 위의 고정점 없는 involution"""
    out = []
    for d in range(1, 12, 2):
        zero = set(zero_v_set(d))
        for x in zero:
            y = theta(x, d)
            if y == x or y not in zero or theta(y, d) != x:
                out.append(f"D={d}, x={x}")
    return out


@check("f2spaces.z_prime_count")
def z_prime_count() -> list[str]:
    """ξ(⁰V_D) = Z'_D 이고 H ↦ H'' 는 짝수 개수 크기 집합으로의 전단사, D ≤ 10"""
    out = []
    for d in range(0, 11):
        primes = z_prime_sets(d)
        out += _mismatch(f"ξ(⁰V_{d})", {xi(x) for x in zero_v_set(d)}, set(primes))
        evens = d // 2 + 1
        images = {z_double_prime(z, d) for z in primes}
        if len(images) != len(primes) or any(len(z.support) != evens for z in images):
            out.append(f"D={d}: H'' 가 전단사가 아닙니다")
        out += _mismatch(f"|Z''_{d}|", len(images), comb(d + 1, evens))
    return out


# =============================================================
# inductive
# =============================================================


@check("inductive.cf_count")
def cf_count() -> list[str]:
    """|𝔉(V_D)| = |⁰V_D| (D ≤ 12),  |𝔉(V'_D)| = C(D+1,(D+1)/2)/2 (D ≤ 11)"""
    out = [m for d in range(0, 13) for m in _mismatch(f"𝔉(V_{d})", len(enum_cf(d)), len(zero_v_set(d)))]
    for d in range(1, 12, 2):
        out += _mismatch(f"𝔉(V'_{d})", len(enum_cf_prime(d)), comb(d + 1, (d + 1) // 2) // 2)
    return out


@check("inductive.interval_equivalence")
def interval_equivalence() -> list[str]:
    """귀납 enum_cf(D) 와 구간 체계로 특징지은 집합이 일치, D ≤ 12"""
    out = []
    for d in range(0, 13):
        spans = {system.span(d) for system in interval_systems(d)}
        recursive = set(enum_cf(d))
        if spans != recursive:
            out.append(f"D={d}: 차집합 {len(spans ^ recursive)}개")
        if len(spans) != len(interval_systems(d)):
            out.append(f"D={d}: 구간 체계가 유일하지 않습니다")
    return out


@check("inductive.interval_transport")
def interval_transport() -> list[str]:
    """C_j^{-1}(E') 의 구간 체계는 E' 의 체계를 들어 올린 것, D ≤ 10"""
    out = []
    for d in range(2, 11):
        for j in range(1, d + 1):
            m = cmap(d, j)
            for sub in enum_cf(d - 2):
                lifted = lift_intervals(interval_basis_of(sub), j)
                if interval_basis_of(m.preimage(sub)) != lifted:
                    out.append(f"D={d}, j={j}: {sub}")
    return out


@check("inductive.epsilon_bijection")
def epsilon_bijection() -> list[str]:
    """ε_D: 𝔉(V_D) → ⁰V_D 전단사, ε(E) ∈ E, D ≤ 11"""
    out = []
    for d in range(0, 12):
        images = [epsilon(space) for space in enum_cf(d)]
        out += _mismatch(f"ε(𝔉(V_{d}))", set(images), set(zero_v_set(d)))
        if len(set(images)) != len(images):
            out.append(f"D={d}: ε 가 단사가 아닙니다")
        out += [f"D={d}: ε(E) ∉ E" for space, x in zip(enum_cf(d), images) if x not in space]
    return out


@check("inductive.isotropic")
def isotropic() -> list[str]:
    """(E, E) = 0,  E ∈ 𝔉(V_D), D ≤ 12"""
    return [f"D={d}: {space}" for d in range(0, 13) for space in enum_cf(d) if not is_isotropic(space)]


@check("inductive.pi_bijection")
def pi_bijection() -> list[str]:
    """Π_D: 𝔉(V_D) → occ(V_D^1) 전단사, D 짝수 ≤ 10"""
    out = []
    for d in range(0, 11, 2):
        images = [pi_map(space) for space in enum_cf(d)]
        out += _mismatch(f"Π_{d}", set(images), set(enum_occ(d)))
        if len(set(images)) != len(images):
            out.append(f"D={d}: Π 가 단사가 아닙니다")
    return out


@check("inductive.lambda_prime_bijection")
def lambda_prime_bijection() -> list[str]:
    """λ, λ', ε' 가 전단사, D 홀수 ≤ 11"""
    out = []
    for d in range(3, 12, 2):
        lifted = [lambda_map(space, d) for space in enum_cf(d - 1)]
        out += _mismatch(f"λ(𝔉(V_{d - 1}))", set(lifted), set(enum_cf_prime(d)))
        pairs = [lambda_prime(space) for space in enum_cf_prime(d)]
        out += _mismatch(f"λ'(𝔉(V'_{d}))", set(pairs), set(enum_occ_prime(d)))
        values = [epsilon_prime(space) for space in enum_cf_prime(d)]
        out += _mismatch(f"ε'(𝔉(V'_{d}))", set(values), set(zero_vprime_set(d)))
        if len(set(values)) != len(values) or len(set(pairs)) != len(pairs):
            out.append(f"D={d}: λ' 또는 ε' 가 단사가 아닙니다")
    return out


@check("inductive.eta_in_large")
def eta_in_large() -> list[str]:
    """η_D ∈ ℒ', (ℒ ⊆ ℒ') ∈ occ(V_D^1), D 홀수 ≤ 11"""
    return [f"D={d}: {pair}" for d in range(1, 12, 2) for pair in enum_occ(d) if eta(d) not in pair.large]


# =============================================================
# gammasets
# =============================================================


@check("gammasets.golden_x")
def golden_x() -> list[str]:
    """X_Γ 가 S1, S2, S3, S2', S3', S4, S5 목록과 순서까지 일치"""
    out = []
    for tag in SYMMETRIC_TAGS:
        names = [p.name for p in big_x(AObject.parse(tag))]
        out += _mismatch(f"X_{tag}", names, GOLDEN_X[tag])
    return out


@check("gammasets.bar_anomalous")
def bar_anomalous() -> list[str]:
    """이상 대상이면 X̄ = X ⊔ {(S1⊆S1)}, |X̄_S4| = 12"""
    out = []
    for tag in SYMMETRIC_TAGS:
        obj = AObject.parse(tag)
        if not obj.anomalous:
            continue
        bar = bar_big_x(obj)
        out += _mismatch(f"X̄_{tag}", [p.name for p in bar], [*GOLDEN_X[tag], "(S1⊆S1)"])
    out += _mismatch("|X̄_S4|", len(bar_big_x(AObject.parse("S4"))), 12)
    return out


@check("gammasets.occ_identification")
def occ_identification() -> list[str]:
    """X_{V_D^1} = occ(V_D^1) (D ≤ 10),  X_{V'_D^1} = occ(V'_D^1) (D ≤ 9)"""
    out = []
    for d in range(0, 11, 2):
        got = {(p.small, p.large) for p in big_x(AObject(AKind.VD1, d))}
        out += _mismatch(f"V{d}", got, {(p.small, p.large) for p in enum_occ(d)})
    for d in range(1, 10, 2):
        got = {(p.small, p.large) for p in big_x(AObject(AKind.VPRIME_D1, d))}
        out += _mismatch(f"V'{d}", got, {(p.small, p.large) for p in enum_occ_prime(d)})
    return out


@check("gammasets.quotients_aproduct")
def quotients_aproduct() -> list[str]:
    """X, X̄ 의 모든 쌍에서 Γ''/Γ' 가 𝔸 대상들의 곱"""
    out = []
    for tag in SYMMETRIC_TAGS:
        obj = AObject.parse(tag)
        for pair in (*big_x(obj), *bar_big_x(obj)):
            assert isinstance(pair.small, PermGroup) and isinstance(pair.large, PermGroup)
            if not is_aproduct(quotient(pair.large, pair.small).as_permgroup()):
                out.append(f"{tag}: {pair.name}")
    return out


@check("gammasets.base_pair_exclusion")
def base_pair_exclusion() -> list[str]:
    """(X_Γ)_0 에 (S1⊆Γ) 가 없음"""
    out = []
    for tag in (*SYMMETRIC_TAGS, *VECTOR_TAGS):
        obj = AObject.parse(tag)
        if obj.order == 1:
            continue
        out += [f"{tag}: {p.name}" for p in x_zero(obj) if p.small_order == 1 and p.large_order == obj.order]
    return out


@check("gammasets.twist_independence")
def twist_independence() -> list[str]:
    """몫 동형사상에 자기동형을 합성해도 X_Γ 가 같음, |Γ| ≤ 24"""
    out = []
    for tag in SYMMETRIC_TAGS:
        obj = AObject.parse(tag)
        if obj.order == 1 or obj.order > 24:
            continue
        expected = [p.name for p in big_x(obj)]
        for idx, pair in enumerate(x_set(obj)):
            assert pair.quotient_tag is not None
            for alpha in automorphisms(pair.quotient_tag.group()):
                names = [p.name for p in big_x_twisted(obj, {idx: alpha})]
                out += _mismatch(f"{tag}[{idx}]", names, expected)
    return out


# =============================================================
# mgamma
# =============================================================


def _scope_objects() -> list[AObject]:
    objs = [AObject.parse(t) for t in SYMMETRIC_TAGS]
    objs += [AObject(AKind.VD1, d) for d in range(0, 9, 2)]
    objs += [AObject(AKind.VPRIME_D1, d) for d in range(1, 9, 2)]
    return objs


@check("mgamma.unit_anchor")
def unit_anchor() -> list[str]:
    """ρ_(S1⊆Γ) = (1, 1)"""
    out = []
    for tag in SYMMETRIC_TAGS:
        obj = AObject.parse(tag)
        pair = next(p for p in big_x(obj) if p.small_order == 1 and p.large_order == obj.order)
        vec = rho(obj, pair)
        out += _mismatch(f"ρ_(S1⊆{tag})", dict(vec.coefficients), {unit_pair(obj): 1})
    return out


@check("mgamma.rho_basis")
def rho_basis() -> list[str]:
    """ρ 족이 일차독립이고 rank = |X_Γ| = |M(Γ)_0|"""
    out = []
    for obj in _scope_objects():
        size = len(big_x(obj))
        out += _mismatch(f"{obj}: |M_0|", len(m_zero(obj)), size)
        out += _mismatch(f"{obj}: rank", rank(obj), size)
    return out


@check("mgamma.bijection_unique")
def bijection_unique() -> list[str]:
    """계수 1 전단사 j 가 존재하고 유일"""
    for obj in _scope_objects():
        bijection_j(obj)
    return []


@check("mgamma.vector_j")
def vector_j() -> list[str]:
    """벡터형에서 j = Π_D ∘ ε_D⁻¹ (resp. λ' ∘ ε'⁻¹)"""
    out = []
    for d in range(0, 9, 2):
        j = {p.vector: (pair.small, pair.large) for p, pair in bijection_j(AObject(AKind.VD1, d)).items()}
        for space in enum_cf(d):
            target = pi_map(space)
            out += _mismatch(f"V{d}: j(ε({space}))", j.get(epsilon(space)), (target.small, target.large))
    for d in range(3, 9, 2):
        j = {p.vector: (pair.small, pair.large) for p, pair in bijection_j(AObject(AKind.VPRIME_D1, d)).items()}
        for space in enum_cf_prime(d):
            target = lambda_prime(space)
            out += _mismatch(f"V'{d}: j(ε'({space}))", j.get(epsilon_prime(space)), (target.small, target.large))
    return out


@check("mgamma.abelian_rho")
def abelian_rho() -> list[str]:
    """ρ_Π(E) (resp. ρ_λ'(E)) 는 E 의 지시벡터, M(Γ)_0 = ⁰V_D (resp. ⁰V'_D)"""
    out = []
    for d in range(0, 9, 2):
        obj = AObject(AKind.VD1, d)
        rhos = {(p.small, p.large): vec for p, vec in rho_table(obj)}
        for space in enum_cf(d):
            pair = pi_map(space)
            out += _indicator_mismatch(f"V{d}", space, rhos[(pair.small, pair.large)])
        out += _mismatch(f"M(V{d})_0", {p.vector for p in m_zero(obj)}, set(zero_v_set(d)))
    for d in range(3, 9, 2):
        obj = AObject(AKind.VPRIME_D1, d)
        rhos = {(p.small, p.large): vec for p, vec in rho_table(obj)}
        for space in enum_cf_prime(d):
            pair = lambda_prime(space)
            out += _indicator_mismatch(f"V'{d}", space, rhos[(pair.small, pair.large)])
    for d in range(1, 9, 2):
        obj = AObject(AKind.VPRIME_D1, d)
        out += _mismatch(f"M(V'{d})_0", {p.vector for p in m_zero(obj)}, set(zero_vprime_set(d)))
    return out


@check("mgamma.vector_ss")
def vector_ss() -> list[str]:
    """벡터형에서 닫힌 꼴 ρ 가 ss(1, 1) 과 같음"""
    objs = [AObject(AKind.VD1, d) for d in (2, 4, 6)] + [AObject(AKind.VPRIME_D1, d) for d in (3, 5, 7)]
    out = []
    for obj in objs:
        for pair, vec in rho_table(obj):
            assert pair.quotient_tag is not None
            induced = ss_induce(obj, pair, unit_pair(pair.quotient_tag))
            if induced != vec:
                out.append(f"{obj} {pair.name}: ρ ≠ ss(1, 1)")
    return out


@check("mgamma.integrality")
def integrality() -> list[str]:
    """ρ 계수는 음이 아닌 정수"""
    out = []
    for obj in _scope_objects():
        for pair, vec in rho_table(obj):
            out += [f"{obj} {pair.name}: {c}" for c in vec.coefficients.values() if c.denominator != 1 or c < 0]
    return out


@check("mgamma.partial_order")
def order_antisymmetric() -> list[str]:
    """생성된 관계가 M(Γ)_0 위의 부분순서"""
    for obj in _scope_objects():
        partial_order(obj)
    return []


@check("mgamma.tower")
def tower() -> list[str]:
    """ρ(당긴 쌍) = ss(ρ_몫), 벡터형 D ≤ 6 과 S2, S3, S4"""
    objs = [AObject(AKind.VD1, d) for d in (2, 4, 6)] + [AObject(AKind.VPRIME_D1, d) for d in (3, 5)]
    objs += [AObject.parse(t) for t in ("S2", "S3", "S4")]
    return [f"{obj}: {m}" for obj in objs for m in tower_mismatches(obj)]


@check("mgamma.bar_family", informative=True)
def bar_family() -> list[str]:
    """X̄ 족의 기저/전단사/순서 (정리가 보장되지 않으므로 참고용)"""
    out = []
    objs = [AObject(AKind.VPRIME_D1, d) for d in (3, 5, 7)]
    objs += [AObject.parse(t) for t in SYMMETRIC_TAGS if AObject.parse(t).anomalous]
    for obj in objs:
        try:
            size = len(bar_big_x(obj))
            if rank(obj, bar=True) != size or len(m_zero(obj, bar=True)) != size:
                out.append(f"{obj}: rank/M̄_0 ≠ |X̄| = {size}")
                continue
            partial_order(obj, bar=True)
        except ValueError as exc:
            out.append(f"{obj}: {exc}")
    return out


# =============================================================
# precuspidal
# =============================================================

_ROOT_COUNT_TYPES = (
    [f"A{n}" for n in range(1, 8)]
    + [f"B{n}" for n in range(2, 8)]
    + [f"C{n}" for n in range(2, 8)]
    + [f"D{n}" for n in range(4, 8)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


@check("precuspidal.root_counts")
def root_counts() -> list[str]:
    """근의 개수가 분류된 값과 일치"""
    out = []
    for name in _ROOT_COUNT_TYPES:
        diagram = CartanDiagram.parse(name)
        out += _mismatch(name, len(diagram.roots), ROOT_COUNTS[diagram.letter](diagram.rank))
    return out


@check("precuspidal.realizable")
def realizable() -> list[str]:
    """모든 자료 유형이 진부분집합으로 실현되고 본문 개수와 일치"""
    out = []
    for record in get_precuspidal_repository().records:
        realize_subsets(CartanDiagram.parse(record.host), record)
    e6 = CartanDiagram.parse("E6")
    out += _mismatch("E6 D5", len(realize(e6, ["D5"])), 2)
    out += _mismatch("E6 A2A2A1", len(realize(e6, ["A2", "A2", "A1"])), 1)
    out += _mismatch("D4 A2", len(realize(CartanDiagram.parse("D4"), ["A2"])), 3)
    f4 = CartanDiagram.parse("F4")
    record = get_precuspidal_repository().get("F4")
    out += _mismatch("F4 |I'|=3", sum(len(s) for s in realize_subsets(f4, record).values()), 4)
    return out


@check("precuspidal.orbit_examples")
def orbit_examples() -> list[str]:
    """D4 의 A2 세 개와 E6 의 D5 두 개는 한 궤도, B2 의 두 단일 노드는 두 궤도"""
    d4, e6, b2 = (CartanDiagram.parse(t) for t in ("D4", "E6", "B2"))
    return (
        _mismatch("D4 A2", weyl_orbit_count(d4, realize(d4, ["A2"])), 1)
        + _mismatch("E6 D5", weyl_orbit_count(e6, realize(e6, ["D5"])), 1)
        + _mismatch("B2 A1", weyl_orbit_count(b2, [{1}, {2}]), 2)
    )


@check("precuspidal.consistency")
def consistency() -> list[str]:
    """자료의 Γ_c 가설로 모든 호스트의 개수 검사가 통과"""
    out = []
    for host in get_precuspidal_repository().hosts:
        report = consistency_check(host)
        if not report.passed:
            out.append(f"{host}: {'; '.join(report.notes)}")
    return out


@check("precuspidal.hypotheses", informative=True)
def hypotheses() -> list[str]:
    """alternatives 가설과 bar_reading=vprime 해석의 결과 (참고용)"""
    out = []
    for record in get_precuspidal_repository().records:
        for report in hypothesis_reports(record.host)[1:]:
            out.append(f"{record.host} Γ_c={report.gamma_c}: {'pass' if report.passed else 'fail'}")
    d4 = consistency_check("D4", reading="vprime")
    out.append(f"D4 bar_reading=vprime: {'pass' if d4.passed else 'fail'}")
    return out

