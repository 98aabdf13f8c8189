"""
크기 제한 전수 코퍼스

정규형 표현식을 DAG 크기(서로 다른 부분식 수, 중복도는 무료) 순으로 열거합니다.
정규형의 구성원도 정규형이므로, 작은 성분들로 원뿔과 합을 만든 뒤 이미 정규형인
것만 남기면 각 정규형이 정확히 한 번 나옵니다.

📚 생성 규칙:
- 원뿔: 서로 다른 성분 구성원, 중복도 {1, ω}
- 합: 서로 다른 성분, 중복도 {1, 2, ω} (한 항목 1개짜리 합 제외)
"""
import itertools
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Set, Tuple

from src.config.settings import get_settings
from src.core.space.expr import (
    CACHE_SIZE,
    EMPTY,
    OMEGA,
    POINT,
    Entry,
    Lim,
    SpaceExpr,
    Sum,
    cone,
    entry_key,
    format_expr,
    rank,
)
from src.core.space.normalize import normalize
from src.core.embed.decide import decide_same_type
from src.models.verdict import Answer, Budget
from src.utils.logger import get_logger

logger = get_logger(__name__)

_CONE_MODES = (1, OMEGA)
_SUM_MODES = (1, 2, OMEGA)


@lru_cache(maxsize=CACHE_SIZE)
def subterms(e: SpaceExpr) -> FrozenSet[SpaceExpr]:
    """e 와 그 모든 부분식"""
    found: Set[SpaceExpr] = {e}
    if isinstance(e, Sum):
        members = [member for member, _ in e.entries]
    elif isinstance(e, Lim):
        members = [member for ring in e.prefix + (e.tail,) for member, _ in ring.entries]
    else:
        members = []
    for member in members:
        found |= subterms(member)
    return frozenset(found)


def dag_size(e: SpaceExpr) -> int:
    """
    서로 다른 부분식 수

    Example:
        1 -> 1, G(1) -> 2, lim(;{w*G(1),1*I(1)}) -> 4
    """
    return len(subterms(e))


def _member_sets(pool: List[SpaceExpr], room: int) -> Iterator[Tuple[SpaceExpr, ...]]:
    """부분식 합집합 크기가 room 이하인 서로 다른 구성원 조합 (pool 순서 유지)"""

    def extend(start: int, chosen: Tuple[SpaceExpr, ...], nodes: FrozenSet[SpaceExpr]):
        if chosen:
            yield chosen
        for i in range(start, len(pool)):
            merged = nodes | subterms(pool[i])
            if len(merged) <= room:
                yield from extend(i + 1, chosen + (pool[i],), merged)

    yield from extend(0, (), frozenset())


def _with_modes(members: Tuple[SpaceExpr, ...], modes) -> Iterator[Tuple[Entry, ...]]:
    for mults in itertools.product(modes, repeat=len(members)):
        yield tuple(zip(members, mults))


def _components(cap: int) -> List[SpaceExpr]:
    """DAG 크기 ≤ cap 인 정규 성분 (한 점과 순수 원뿔)"""
    found: Set[SpaceExpr] = {POINT}
    while True:
        pool = sorted(found, key=lambda c: entry_key((c, 1)))
        fresh = set()
        for members in _member_sets(pool, cap - 1):
            for entries in _with_modes(members, _CONE_MODES):
                candidate = cone(entries)
                if candidate not in found and normalize(candidate) == candidate:
                    fresh.add(candidate)
        if not fresh:
            return pool
        found |= fresh


def _expressions(cap: int) -> List[SpaceExpr]:
    if cap < 1:
        return []
    pool = _components(cap)
    found: Set[SpaceExpr] = {EMPTY} | set(pool)
    for members in _member_sets(pool, cap - 1):
        for entries in _with_modes(members, _SUM_MODES):
            if len(entries) == 1 and entries[0][1] == 1:
                continue
            candidate = Sum(entries)
            if normalize(candidate) == candidate:
                found.add(candidate)
    return sorted(found, key=lambda e: (dag_size(e), rank(e), format_expr(e)))


def corpus(size_cap: Optional[int] = None, budget: Optional[Budget] = None) -> Iterator[SpaceExpr]:
    """
    결정적 코퍼스 스트림

    rank ≤ 2 에서는 =_E 중복을 건너뜁니다 (먼저 나온 것이 대표).

    Args:
        size_cap: 최대 DAG 크기 (None이면 설정값 corpus_size_cap)
        budget: 중복 판정 예산
    """
    cap = get_settings().corpus_size_cap if size_cap is None else size_cap
    kept_low: List[SpaceExpr] = []
    emitted = 0
    for e in _expressions(cap):
        if rank(e) <= 2:
            if any(
                rank(other) == rank(e) and decide_same_type(e, other, budget).answer is Answer.YES
                for other in kept_low
            ):
                continue
            kept_low.append(e)
        emitted += 1
        yield e
    logger.info("corpus_generated", size_cap=cap, expressions=emitted)
