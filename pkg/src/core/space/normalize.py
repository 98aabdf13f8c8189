"""
정규화 (항 재작성)

정규형:
- 최상위는 Empty, 성분 하나, 또는 성분들의 Sum
- 성분(component)은 Point 또는 prefix 없는 원뿔 Lim((), T)
- Sum과 링의 항목은 모두 성분이며 (rank, 출력) 순서로 정렬
- tail 링의 유한 중복도는 1

각 규칙은 위상동형 사상입니다:
- 중첩 Sum 평탄화, 동일 항목 병합 (n·ω = ω·ω = ω)
- prefix 링은 유한 개의 clopen 조각이므로 Sum 으로 분리
- 유한 tail 중복도는 근방 기저를 세분하여 1 로
- 흡수: 원뿔 C 는 자신의 germ K 를 유한 개 흡수 (C ⊕ K ≅ C),
  링 안에서 ω 번 나타나는 K 는 ω 개까지 흡수
"""
from functools import lru_cache
from typing import FrozenSet, Iterable, Optional, Tuple

from src.core.space.expr import (
    CACHE_SIZE,
    EMPTY,
    OMEGA,
    POINT,
    Counter,
    Empty,
    Entry,
    Lim,
    Mult,
    Point,
    Ring,
    SpaceExpr,
    Sum,
)


@lru_cache(maxsize=CACHE_SIZE)
def germs(component: SpaceExpr) -> FrozenSet[SpaceExpr]:
    """
    원뿔의 germ 집합

    tail 의 모든 구성원과 그 구성원들의 germ (재귀).
    K ∈ germs(C) 이면 C ⊕ K ≅ C 입니다.
    """
    if not isinstance(component, Lim):
        return frozenset()
    found = set()
    for member, _ in component.tail.entries:
        found.add(member)
        found |= germs(member)
    return frozenset(found)


@lru_cache(maxsize=CACHE_SIZE)
def omega_absorbs(component: SpaceExpr, k: SpaceExpr) -> bool:
    """C ⊕ ω·K ≅ C 여부 (구조적 충분조건)"""
    if not isinstance(component, Lim):
        return False
    for member, m in component.tail.entries:
        if m is OMEGA and (member == k or k in germs(member)):
            return True
        if omega_absorbs(member, k):
            return True
    return False


def absorbs(host: SpaceExpr, host_mult: Mult, k: SpaceExpr, k_mult: Mult) -> bool:
    """항목 (host, host_mult) 가 항목 (k, k_mult) 를 흡수하는지"""
    if host == k or not isinstance(host, Lim):
        return False
    if k_mult is OMEGA:
        return omega_absorbs(host, k) or (host_mult is OMEGA and k in germs(host))
    return k in germs(host)


def _absorb(counter: Counter) -> Tuple[Entry, ...]:
    items = list(counter.items.items())
    kept = Counter()
    for k, a in items:
        if not any(absorbs(host, b, k, a) for host, b in items):
            kept.add(k, a)
    return kept.sorted_entries()


def _collect(entries: Iterable[Entry], counter: Counter) -> None:
    for member, m in entries:
        counter.extend(components(member), m)


@lru_cache(maxsize=CACHE_SIZE)
def normal_cone(tail: Ring) -> Optional[Lim]:
    """
    tail 링 하나로 된 원뿔의 정규형

    구성원이 모두 비면 None (접착점이 고립점이 됨).
    """
    counter = Counter()
    _collect(tail.entries, counter)
    entries = _absorb(counter)
    if not entries:
        return None
    return Lim((), Ring(tuple((member, OMEGA if m is OMEGA else 1) for member, m in entries)))


@lru_cache(maxsize=CACHE_SIZE)
def components(e: SpaceExpr) -> Tuple[Entry, ...]:
    """
    정규화된 성분과 중복도 (흡수 적용, 정렬됨)

    Lim(P, T) ≅ (P 의 구성원들) ⊕ C(T)
    """
    if isinstance(e, Empty):
        return ()
    if isinstance(e, Point):
        return ((POINT, 1),)
    counter = Counter()
    if isinstance(e, Sum):
        _collect(e.entries, counter)
        return _absorb(counter)
    for ring in e.prefix:
        _collect(ring.entries, counter)
    top = normal_cone(e.tail)
    counter.add(top if top is not None else POINT, 1)
    return _absorb(counter)


def assemble(entries: Tuple[Entry, ...]) -> SpaceExpr:
    """성분 목록에서 표현식을 조립"""
    if not entries:
        return EMPTY
    if len(entries) == 1 and entries[0][1] == 1:
        return entries[0][0]
    return Sum(entries)


@lru_cache(maxsize=CACHE_SIZE)
def normalize(e: SpaceExpr) -> SpaceExpr:
    """
    정규형 반환 (멱등, 위상동형 보존)

    Example:
        sum{2*1,w*1}          -> D
        lim({1*G(1)};{1*G(1)}) -> G(G(1))
    """
    return assemble(components(e))
