"""
안정(stable) 차원 타입 열거와 분해

🎯 목적:
- 한 점짜리 최상위 도함수를 가진 공간 중, 접착점을 피하는 clopen 집합을
  지워도 타입이 작아지지 않는 것(레벨 n 안정 타입)을 레벨별로 열거
- 임의의 표현식을 안정 성분들의 합으로 분해

💡 레벨 n 후보:
- 아래 레벨 대표원마다 {없음, 1, ω} 중 하나를 골라 만든 링 R 의 원뿔 C(R)
- 레벨 n-1 대표원이 하나 이상 있어야 접착점의 국소 rank 가 n+1
- 정규형 중복 제거 → is_stable 필터 → decide_same_type 로 몫
"""
import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from src.config.settings import get_settings
from src.core.errors import DomainError, UnknownVerdictError
from src.core.space.derive import iterate_derivative
from src.core.space.expr import (
    OMEGA,
    POINT,
    Empty,
    Lim,
    Mult,
    Ring,
    SpaceExpr,
    cone,
    format_expr,
    mult_add,
    rank,
)
from src.core.space.normalize import components, normalize
from src.core.embed.decide import decide_embed, decide_same_type
from src.models.verdict import Answer, Budget, Verdict
from src.utils.logger import get_logger

logger = get_logger(__name__)

_MODES = (None, 1, OMEGA)


@dataclass(frozen=True)
class StableDescriptor:
    """
    레벨 n 후보의 설명

    Attributes:
        level: 레벨 n (최상위 도함수가 n 번째)
        tail_spec: (아래 레벨 클래스 id, 1 또는 ω) 목록
    """

    level: int
    tail_spec: Tuple[Tuple[str, Mult], ...] = ()

    def __str__(self) -> str:
        items = ",".join(f"{'w' if m is OMEGA else m}*{class_id}" for class_id, m in self.tail_spec)
        return f"L{self.level}[{items}]"


@dataclass(frozen=True)
class StableClass:
    """레벨 안의 안정 타입 클래스 하나 (대표원 포함)"""

    id: str
    level: int
    index: int
    representative: SpaceExpr
    descriptor: StableDescriptor

    @property
    def expr(self) -> str:
        return format_expr(self.representative)


def _sort_key(e: SpaceExpr) -> Tuple[int, str]:
    text = format_expr(e)
    return len(text), text


def require_one_point_top(e: SpaceExpr) -> SpaceExpr:
    """
    최상위 도함수가 한 점인지 확인하고 정규형을 돌려줍니다.

    Raises:
        DomainError: 빈 공간이거나 최상위 도함수가 한 점이 아님
    """
    e = normalize(e)
    if isinstance(e, Empty):
        raise DomainError("the empty space has no top point")
    top = iterate_derivative(e, rank(e) - 1)
    if top != POINT:
        raise DomainError(
            f"top derivative of {format_expr(e)} is {format_expr(top)}, not a single point"
        )
    return e


def tail_only(e: SpaceExpr) -> SpaceExpr:
    """
    prefix 를 떼어낸 공간: 최상위 접착점을 가진 성분

    접착점을 피하는 clopen 집합은 유한 개 링 안에 있으므로,
    지울 수 있는 최대 부분을 지운 결과가 이 성분입니다.
    """
    e = require_one_point_top(e)
    r = rank(e)
    return next(c for c, _ in components(e) if rank(c) == r)


def is_stable(e: SpaceExpr, budget: Optional[Budget] = None) -> Verdict:
    """
    안정성 판정: e ≤_E tail_only(e)

    Raises:
        DomainError: 최상위 도함수가 한 점이 아님
    """
    return decide_embed(e, tail_only(e), budget)


def thinning_preserves_type(e: SpaceExpr, rng: random.Random, budget: Optional[Budget] = None) -> bool:
    """
    정의에 따른 무작위 교차 확인

    앞쪽 링 1~3 개에서 구성원 사본을 임의로 지운 부분공간(지운 부분은 접착점을 피하는
    clopen 집합)을 만들고, 원래 공간이 그 안에 들어감이 반박되지 않는지 봅니다.
    """
    c = tail_only(e)
    if not isinstance(c, Lim):
        return True
    rings = []
    for _ in range(rng.randint(1, 3)):
        kept = []
        for member, m in c.tail.entries:
            left = rng.choice((0, 1, 2, OMEGA)) if m is OMEGA else rng.randint(0, m)
            if left:
                kept.append((member, left))
        rings.append(Ring(tuple(kept)))
    thinned = Lim(tuple(rings), c.tail)
    answer = decide_embed(c, thinned, budget).answer
    if answer is Answer.NO:
        logger.warning("thinning_reduced_type", space=format_expr(c), thinned=format_expr(normalize(thinned)))
    return answer is not Answer.NO


class TypeClassTable:
    """
    레벨별 안정 타입 클래스 표

    아래 레벨부터 필요할 때 채웁니다. 대표원은 (출력 길이, 출력 문자열) 순으로
    가장 앞선 후보이며 클래스 id 는 "L{레벨}.{번호}" 입니다.
    """

    def __init__(self, budget: Optional[Budget] = None, max_level: Optional[int] = None):
        self.budget = budget or Budget.from_settings()
        self.max_level = get_settings().stable_max_level if max_level is None else max_level
        self._levels: Dict[int, List[StableClass]] = {}

    def level(self, n: int) -> List[StableClass]:
        """
        레벨 n 의 클래스 목록

        Raises:
            DomainError: n < 0 또는 설정된 최대 레벨 초과
            UnknownVerdictError: 예산 안에서 판정되지 않는 쌍
        """
        if n < 0:
            raise DomainError(f"stable level must be non-negative, got {n}")
        if n > self.max_level:
            raise DomainError(f"stable level {n} above the configured maximum {self.max_level}")
        if n not in self._levels:
            for k in range(n):
                self.level(k)
            self._levels[n] = self._enumerate(n)
        return self._levels[n]

    def classes(self, upto: int) -> List[StableClass]:
        """레벨 0..upto 의 모든 클래스 (레벨, 번호 순)"""
        return [cls for n in range(upto + 1) for cls in self.level(n)]

    def classify(self, e: SpaceExpr) -> StableClass:
        """
        안정 공간 e 가 속한 클래스

        Raises:
            DomainError: 한 점 최상위 도함수가 아니거나 어느 클래스와도 같은 타입이 아님
            UnknownVerdictError: 판정되지 않는 쌍
        """
        e = require_one_point_top(e)
        for cls in self.level(rank(e) - 1):
            answer = self._same_type(e, cls.representative)
            if answer is Answer.YES:
                return cls
        raise DomainError(f"{format_expr(e)} is not a stable type")

    def _same_type(self, x: SpaceExpr, y: SpaceExpr) -> Answer:
        answer = decide_same_type(x, y, self.budget).answer
        if answer is Answer.UNKNOWN:
            raise UnknownVerdictError(
                f"same-type undecided for {format_expr(x)} and {format_expr(y)}",
                pair=(format_expr(x), format_expr(y)),
            )
        return answer

    def _candidates(self, n: int) -> Dict[SpaceExpr, StableDescriptor]:
        lower = self.classes(n - 1)
        found: Dict[SpaceExpr, StableDescriptor] = {}
        for modes in itertools.product(_MODES, repeat=len(lower)):
            chosen = [(cls, mode) for cls, mode in zip(lower, modes) if mode is not None]
            if not any(cls.level == n - 1 for cls, _ in chosen):
                continue
            realized = normalize(cone((cls.representative, mode) for cls, mode in chosen))
            if iterate_derivative(realized, n) != POINT:
                continue
            found.setdefault(realized, StableDescriptor(n, tuple((cls.id, mode) for cls, mode in chosen)))
        return found

    def _enumerate(self, n: int) -> List[StableClass]:
        if n == 0:
            return [StableClass("L0.0", 0, 0, POINT, StableDescriptor(0))]

        candidates = self._candidates(n)
        representatives: List[Tuple[SpaceExpr, StableDescriptor]] = []
        for realized in sorted(candidates, key=_sort_key):
            stable = is_stable(realized, self.budget).answer
            if stable is Answer.UNKNOWN:
                raise UnknownVerdictError(
                    f"stability undecided for {format_expr(realized)}",
                    pair=(format_expr(realized), format_expr(tail_only(realized))),
                )
            if stable is Answer.NO:
                continue
            if any(self._same_type(realized, rep) is Answer.YES for rep, _ in representatives):
                continue
            representatives.append((realized, candidates[realized]))

        classes = [
            StableClass(f"L{n}.{i}", n, i, rep, descriptor)
            for i, (rep, descriptor) in enumerate(representatives)
        ]
        logger.info("stable_level_enumerated", level=n, candidates=len(candidates), classes=len(classes))
        return classes


@lru_cache(maxsize=8)
def get_table(budget: Optional[Budget] = None) -> TypeClassTable:
    """예산별 공유 클래스 표"""
    return TypeClassTable(budget)


def enumerate_stable(n: int, table: Optional[TypeClassTable] = None) -> List[StableClass]:
    """
    레벨 n 의 안정 타입 클래스 대표원

    Example:
        enumerate_stable(1) -> [G(1), I(1)]
    """
    return (table or get_table()).level(n)


def stable_decompose(e: SpaceExpr, table: Optional[TypeClassTable] = None) -> List[Tuple[StableClass, Mult]]:
    """
    clopen 안정 분해

    정규형의 각 성분(한 점 또는 순수 원뿔)은 안정 공간이므로 클래스 표로 분류하고
    같은 클래스의 중복도를 합칩니다.

    Returns:
        (클래스, 중복도) 목록 (레벨, 번호 순)

    Raises:
        DomainError: 빈 공간 또는 최대 레벨을 넘는 성분
        UnknownVerdictError: 분류 중 판정되지 않는 쌍
    """
    table = table or get_table()
    e = normalize(e)
    if isinstance(e, Empty):
        raise DomainError("the empty space has no stable decomposition")
    parts: Dict[str, Tuple[StableClass, Mult]] = {}
    for component, m in components(e):
        cls = table.classify(component)
        _, count = parts.get(cls.id, (cls, 0))
        parts[cls.id] = (cls, mult_add(count, m))
    return sorted(parts.values(), key=lambda part: (part[0].level, part[0].index))
