"""
precusp - F2 구간 부분공간 족, 부분군 쌍 집합 X_Γ, 기저 ρ 와 전첨점 자료의 정확 계산/교차 검증

폴더 구조:
    - core/: 설정과 예외
    - algebra/: F2 공간, 귀납 구성, 군, X_Γ, M(Γ)
    - weyl/: 카르탄 다이어그램과 전첨점 일관성 검사
    - repositories/, data/: 전첨점 자료
    - checks/: 불변량 검사와 실행기
    - main.py: CLI
"""

__version__ = "0.1.0"
