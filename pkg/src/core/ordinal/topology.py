"""
순서수 공간의 위상 공식

- cb_rank_of_ordinal: [0, a) 의 칸토어-벤딕슨 rank
- canonical_compact_type: 후속 순서수 a 에 대해 [0, a) ≅ ω^α·n+1 의 (α, n)
- embed_bound_E: 한 점 α-도함수를 가진 공간이 모두 임베딩되는 최소 순서수
"""
from typing import Tuple

from src.core.errors import DomainError, ZeroOrdinalError
from src.core.ordinal.notation import ONE, ZERO, Ordinal, add, omega_pow


def cb_rank_of_ordinal(a: Ordinal) -> Ordinal:
    """
    [0, a) 의 rank

    a = ω^e (계수 1인 단일 항, e > 0) 이면 e, 그 외에는 선두 지수 + 1.

    Raises:
        ZeroOrdinalError: a = 0 (빈 공간, rank 0은 별도 상태로 보고)
    """
    if a.is_zero:
        raise ZeroOrdinalError("the empty space has rank 0 by convention")
    exponent, coefficient = a.terms[0]
    if len(a.terms) == 1 and coefficient == 1 and not exponent.is_zero:
        return exponent
    return add(exponent, ONE)


def canonical_compact_type(a: Ordinal) -> Tuple[Ordinal, int]:
    """
    후속 순서수의 정준 컴팩트 타입 (선두 지수, 선두 계수)

    Raises:
        DomainError: 0 또는 극한 순서수
    """
    if not a.is_successor:
        raise DomainError(f"canonical_compact_type needs a successor ordinal, got {a}")
    return a.leading_exponent, a.leading_coefficient


def embed_bound_E(a: Ordinal) -> Ordinal:
    """
    E(a) 의 닫힌 형식

    a = γ + m (γ는 0 또는 극한, m 유한) 으로 분해하여
    - a = 0        → 1
    - γ = 0, m > 0 → ω^(2m) + 1
    - γ 극한       → ω^(γ + 2m + 1) + 1
    """
    if a.is_zero:
        return ONE
    gamma, m = a.limit_part, a.finite_part
    if gamma == ZERO:
        exponent = Ordinal.finite(2 * m)
    else:
        exponent = add(gamma, Ordinal.finite(2 * m + 1))
    return add(omega_pow(exponent), ONE)
