"""
순서수 → 표현식 다리

[0, a) 를 clopen 구간으로 분해해 표현식을 만듭니다.
"""
from functools import lru_cache

from src.core.errors import DomainError, ZeroOrdinalError
from src.core.ordinal import Ordinal
from src.core.space.expr import CACHE_SIZE, OMEGA, POINT, Counter, G, SpaceExpr, Sum
from src.core.space.normalize import normalize


@lru_cache(maxsize=CACHE_SIZE)
def block(k: int) -> SpaceExpr:
    """ω^k + 1 의 표현식: block(0) = 1, block(k) = G(block(k-1))"""
    return POINT if k == 0 else G(block(k - 1))


def ord_to_expr(a: Ordinal) -> SpaceExpr:
    """
    순서수 공간 [0, a) 의 정규화된 표현식

    - 후속 순서수: 항 ω^aᵢ·nᵢ 마다 block(aᵢ) nᵢ 개의 합
    - 극한 순서수: 마지막 항 ω^e·n 은 block(e) (n-1) 개와
      block(e-1) ω 개의 합으로

    Raises:
        ZeroOrdinalError: a = 0
        DomainError: ω 이상의 지수 (유한 rank 표현 불가)
    """
    if a.is_zero:
        raise ZeroOrdinalError("ord_to_expr needs a positive ordinal")
    if any(not exponent.is_finite for exponent, _ in a.terms):
        raise DomainError(f"exponent >= w in {a}: no finite-rank expression")
    counter = Counter()
    terms = list(a.terms)
    last = terms.pop() if a.is_limit else None
    for exponent, coefficient in terms:
        counter.add(block(exponent.as_int()), coefficient)
    if last is not None:
        exponent, coefficient = last
        k = exponent.as_int()
        counter.add(block(k), coefficient - 1)
        counter.add(block(k - 1), OMEGA)
    return normalize(Sum(tuple(counter.items.items())))
