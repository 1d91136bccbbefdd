"""
𝔸 대상과 x_Γ / X_Γ / X̄_Γ 테스트

실행 방법:
    uv run pytest tests/test_gammasets.py -v
"""

import pytest

from precusp.algebra.gammasets import (
    GOLDEN_X,
    AKind,
    AObject,
    bar_big_x,
    bar_x_set,
    big_x,
    big_x_twisted,
    q_sets,
    x_set,
    x_zero,
)
from precusp.algebra.groups import automorphisms
from precusp.algebra.inductive import enum_occ, enum_occ_prime
from precusp.core.errors import TrivialGroup, UnknownTag


class TestAObject:
    """이름 해석과 속성"""

    @pytest.mark.parametrize(
        "text, kind, param",
        [("S3", AKind.SYM, 3), ("S2'", AKind.SYM_PRIME, 2), ("V4", AKind.VD1, 4), ("V'5", AKind.VPRIME_D1, 5)],
    )
    def test_parse(self, text, kind, param):
        """네 종류의 이름"""
        obj = AObject.parse(text)
        assert (obj.kind, obj.param) == (kind, param)

    @pytest.mark.parametrize("text", ["S6", "S4'", "V3", "V'4", "Q2", "Sx"])
    def test_unknown(self, text):
        """𝔸 에 없는 이름은 UnknownTag"""
        with pytest.raises(UnknownTag):
            AObject.parse(text)

    def test_small_vector_tags(self):
        """V_0^1 = V'_1^1 = S1, V_2^1 = V'_3^1 = S2"""
        assert AObject.parse("V0").tag == "S1"
        assert AObject.parse("V'1").tag == "S1"
        assert AObject.parse("V2").tag == "S2"
        assert AObject.parse("V'3").tag == "S2"

    def test_orders(self):
        """|V_D^1| = 2^{D/2}, |S_n| = n!"""
        assert AObject.parse("V6").order == 8
        assert AObject.parse("V'7").order == 8
        assert AObject.parse("S3'").order == 6

    @pytest.mark.parametrize("text, expected", [("S2'", True), ("S3'", True), ("S4", True), ("S5", True), ("S3", False), ("V4", False)])
    def test_anomalous(self, text, expected):
        """S'2, S'3, S4, S5 만 이상 대상"""
        assert AObject.parse(text).anomalous is expected


class TestXSet:
    """x_Γ, x̄_Γ"""

    def test_trivial_group(self):
        """|Γ| = 1 이면 x_Γ 없음"""
        with pytest.raises(TrivialGroup):
            x_set(AObject.parse("S1"))

    def test_s4_table(self, s4):
        """S4 의 x 는 네 쌍, 몫은 S2, S2, S1, S1"""
        assert [p.quotient_tag.tag for p in x_set(s4)] == ["S2", "S2", "S1", "S1"]

    def test_vector_sizes(self):
        """V_D^1 은 j ∈ [1, D], V'_D^1 은 j ∈ [1, D-1]"""
        assert len(x_set(AObject.parse("V4"))) == 4
        assert len(x_set(AObject.parse("V'5"))) == 4

    def test_bar_vprime(self):
        """x̄ 는 j = D 를 더함"""
        assert len(bar_x_set(AObject.parse("V'5"))) == 5

    def test_bar_vprime3_reading(self):
        """V'_3^1 은 reading 에 따라 2 또는 3"""
        obj = AObject.parse("V'3")
        assert len(bar_x_set(obj, "s2")) == 2
        assert len(bar_x_set(obj, "vprime")) == 3

    def test_bar_symmetric_unchanged(self, s3):
        """대칭형은 x̄ = x"""
        assert bar_x_set(s3) == x_set(s3)


class TestBigX:
    """X_Γ, X̄_Γ"""

    @pytest.mark.parametrize("tag", ["S1", "S2", "S3", "S2'", "S3'", "S4"])
    def test_golden(self, tag):
        """목록 순서까지 일치"""
        assert [p.name for p in big_x(AObject.parse(tag))] == GOLDEN_X[tag]

    @pytest.mark.slow
    def test_golden_s5(self):
        """S5 → 17"""
        assert [p.name for p in big_x(AObject.parse("S5"))] == GOLDEN_X["S5"]

    @pytest.mark.parametrize("tag, size", [("S1", 1), ("S2", 3), ("S3", 5), ("S2'", 2), ("S3'", 4), ("S4", 11)])
    def test_sizes(self, tag, size):
        """|X_Γ|"""
        assert len(big_x(AObject.parse(tag))) == size

    def test_bar_anomalous(self, s4):
        """X̄_S4 = X_S4 ⊔ {(S1⊆S1)}"""
        bar = bar_big_x(s4)
        assert len(bar) == 12
        assert list(bar[:-1]) == list(big_x(s4))
        assert bar[-1].name == "(S1⊆S1)"

    def test_bar_regular(self, s3):
        """이상 대상이 아니면 X̄ = X"""
        assert [p.name for p in bar_big_x(s3)] == [p.name for p in big_x(s3)]

    @pytest.mark.parametrize("d", [0, 2, 4, 6])
    def test_vector_is_occ(self, d):
        """X_{V_D^1} = occ(V_D^1)"""
        got = {(p.small, p.large) for p in big_x(AObject(AKind.VD1, d))}
        assert got == {(p.small, p.large) for p in enum_occ(d)}

    @pytest.mark.parametrize("d", [3, 5, 7])
    def test_vprime_is_occ(self, d):
        """X_{V'_D^1} = occ(V'_D^1)"""
        got = {(p.small, p.large) for p in big_x(AObject(AKind.VPRIME_D1, d))}
        assert got == {(p.small, p.large) for p in enum_occ_prime(d)}

    def test_no_full_base_pair(self, s4):
        """(X_Γ)_0 에 (S1⊆Γ) 가 없음"""
        assert all(not (p.small_order == 1 and p.large_order == 24) for p in x_zero(s4))

    def test_q_sets(self, s4):
        """Q_*(S4) 에서 D8 이 빠짐"""
        q, q_star = q_sets(s4)
        assert {g.order for g in q} - {g.order for g in q_star} == {8}

    def test_twist_independence(self, s3):
        """몫 동형사상에 자기동형을 합성해도 같은 X"""
        expected = [p.name for p in big_x(s3)]
        for idx, pair in enumerate(x_set(s3)):
            for alpha in automorphisms(pair.quotient_tag.group()):
                assert [p.name for p in big_x_twisted(s3, {idx: alpha})] == expected

    def test_to_list(self, s3):
        """직렬화에는 이름과 위수"""
        row = big_x(s3)[0].to_list()
        assert row["name"] == "(S3⊆S3)"
        assert row["orders"] == [6, 6]
