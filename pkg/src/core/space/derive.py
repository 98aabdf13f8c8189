"""
칸토어-벤딕슨 도함수와 파생 불변량

- derivative: 고립되지 않은 점들의 부분공간
- rank_by_derivative: 도함수를 반복해 구한 rank
- is_compact, point_count
- layer, has_clopen_convergent, layer_signature
"""
from functools import lru_cache
from typing import List, Union

from src.core.errors import DomainError
from src.core.space.expr import (
    CACHE_SIZE,
    EMPTY,
    OMEGA,
    POINT,
    Empty,
    Lim,
    Omega,
    Point,
    Ring,
    SpaceExpr,
    Sum,
    glue_rank,
    is_cone,
    rank,
)
from src.core.space.normalize import components, normalize


def _derive(e: SpaceExpr) -> SpaceExpr:
    if isinstance(e, (Empty, Point)):
        return EMPTY
    if isinstance(e, Sum):
        return Sum(tuple((_derive(member), m) for member, m in e.entries))
    prefix = tuple(Ring(tuple((_derive(member), m) for member, m in ring.entries)) for ring in e.prefix)
    tail = Ring(tuple((_derive(member), m) for member, m in e.tail.entries))
    if isinstance(normalize(Sum(tail.entries)), Empty):
        # 접착점만 남아 도함수에서 고립점이 됨
        return Sum(tuple((member, m) for ring in prefix for member, m in ring.entries) + ((POINT, 1),))
    return Lim(prefix, tail)


@lru_cache(maxsize=CACHE_SIZE)
def derivative(e: SpaceExpr) -> SpaceExpr:
    """
    도함수 X′ (정규화된 결과)

    Example:
        G(1) -> 1, I(1) -> 1, I(G(1)) -> I(1)
    """
    return normalize(_derive(e))


def iterate_derivative(e: SpaceExpr, times: int) -> SpaceExpr:
    result = normalize(e)
    for _ in range(times):
        result = derivative(result)
    return result


def rank_by_derivative(e: SpaceExpr) -> int:
    """derivative^k(e) = Empty 가 되는 최소 k"""
    current = normalize(e)
    steps = 0
    while not isinstance(current, Empty):
        current = derivative(current)
        steps += 1
    return steps


@lru_cache(maxsize=CACHE_SIZE)
def _compact(e: SpaceExpr) -> bool:
    if isinstance(e, (Empty, Point)):
        return True
    if isinstance(e, Sum):
        return all(m is not OMEGA and _compact(member) for member, m in e.entries)
    return all(
        m is not OMEGA and _compact(member)
        for ring in e.prefix + (e.tail,)
        for member, m in ring.entries
    )


def is_compact(e: SpaceExpr) -> bool:
    """
    컴팩트 여부

    모든 중복도가 유한이고 모든 구성원이 컴팩트일 때 참.
    """
    return _compact(normalize(e))


def point_count(e: SpaceExpr) -> Union[int, Omega]:
    """실현 공간의 점 개수 (가산 무한이면 OMEGA)"""
    total = 0
    for component, m in components(e):
        if isinstance(component, Lim) or m is OMEGA:
            return OMEGA
        total += m
    return total


# ------------------------------------------------------------
# 층(layer)
# ------------------------------------------------------------
@lru_cache(maxsize=CACHE_SIZE)
def band(e: SpaceExpr, lo: int, hi: int) -> SpaceExpr:
    """국소 rank 가 [lo, hi] 에 드는 점들의 부분공간 (정규화 전)"""
    if isinstance(e, Empty):
        return EMPTY
    if isinstance(e, Point):
        return POINT if lo <= 1 <= hi else EMPTY
    if isinstance(e, Sum):
        return Sum(tuple((band(member, lo, hi), m) for member, m in e.entries))
    prefix_entries = tuple(
        (band(member, lo, hi), m) for ring in e.prefix for member, m in ring.entries
    )
    tail_entries = tuple((band(member, lo, hi), m) for member, m in e.tail.entries)
    if lo <= glue_rank(e) <= hi:
        if isinstance(normalize(Sum(tail_entries)), Empty):
            return Sum(prefix_entries + ((POINT, 1),))
        return Lim((Ring(prefix_entries),) if prefix_entries else (), Ring(tail_entries))
    # 접착점이 빠지면 각 링은 서로소 clopen 조각
    return Sum(prefix_entries + tuple((member, OMEGA) for member, _ in tail_entries))


def layer(e: SpaceExpr, k: int) -> SpaceExpr:
    """
    derivative^(k-1)(e) ∖ derivative^(k+1)(e)

    Raises:
        DomainError: k 가 [1, rank(e)] 밖
    """
    e = normalize(e)
    if not 1 <= k <= rank(e):
        raise DomainError(f"layer index {k} outside 1..{rank(e)}")
    return normalize(band(e, k, k + 1))


def has_clopen_convergent(e: SpaceExpr) -> bool:
    """
    수렴 수열(ω+1)과 위상동형인 비지 않은 clopen 부분집합이 있는지

    rank ≤ 2 에서 구조적으로 결정: 유한 중복도만 가진 원뿔 성분이 있으면 참.

    Raises:
        DomainError: rank > 2
    """
    e = normalize(e)
    if rank(e) > 2:
        raise DomainError(f"has_clopen_convergent needs rank <= 2, got {rank(e)}")
    return any(
        is_cone(component) and all(m is not OMEGA for _, m in component.tail.entries)
        for component, _ in components(e)
    )


def layer_signature(e: SpaceExpr) -> List[bool]:
    """k = 1 .. rank-1 에 대한 has_clopen_convergent(layer(e, k))"""
    e = normalize(e)
    return [has_clopen_convergent(layer(e, k)) for k in range(1, rank(e))]
