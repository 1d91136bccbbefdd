"""
정확 계산 모듈

    - f2spaces.py: F2 벡터/부분공간, u, ξ, Θ, 구간 기저와 ε
    - inductive.py: C_j 사상과 𝔉, occ 족의 귀납 열거
    - cyclotomic.py: Q(ζ_60) 위의 정확한 값
    - groups.py: S5 안의 치환군, 몫, 동형, 지표표
    - gammasets.py: 𝔸 대상, x_Γ, X_Γ 와 bar 변형
    - mgamma.py: M(Γ), ss 유도, ρ, 전단사 j, 부분순서
"""
