"""
산재 공간(scattered space) 항 대수

🎯 목적:
- 유한 rank 가산 거리 산재 공간을 유한 항으로 표현

📚 구성자:
- Empty: 빈 공간
- Point: 한 점
- Sum(entries): 서로소 위상합, 항목은 (부분식, 중복도)
- Lim(prefix, tail): 접착점 g 하나와 그 주위의 링들
  (prefix 링을 먼저, 이후 tail 링을 무한히 반복). g의 근방 기저는
  U_n = {g} ∪ (n번째 이후의 모든 링)

중복도는 양의 정수 또는 OMEGA 입니다.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, Tuple, Union

from src.config.settings import get_settings

# 항 함수 메모 크기 상한
CACHE_SIZE = get_settings().term_cache_size


class Omega(Enum):
    """가산 무한 중복도"""

    OMEGA = "w"

    def __str__(self) -> str:
        return "w"

    def __repr__(self) -> str:
        return "OMEGA"


OMEGA = Omega.OMEGA
Mult = Union[int, Omega]


def is_omega(m: Mult) -> bool:
    return m is OMEGA


def mult_add(a: Mult, b: Mult) -> Mult:
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a + b


def mult_mul(a: Mult, b: Mult) -> Mult:
    if a == 0 or b == 0:
        return 0
    if a is OMEGA or b is OMEGA:
        return OMEGA
    return a * b


def mult_le(a: Mult, b: Mult) -> bool:
    if b is OMEGA:
        return True
    if a is OMEGA:
        return False
    return a <= b


class _Node:
    """표현식 노드 공통 기반"""

    def __str__(self) -> str:
        return format_expr(self)


@dataclass(frozen=True, eq=True)
class Empty(_Node):
    """빈 공간"""


@dataclass(frozen=True, eq=True)
class Point(_Node):
    """한 점"""


@dataclass(frozen=True, eq=True)
class Ring(_Node):
    """링 하나: (부분식, 중복도)의 유한 다중집합"""

    entries: Tuple[Tuple["SpaceExpr", Mult], ...]

    def __str__(self) -> str:
        return "{" + _format_items(self.entries) + "}"


@dataclass(frozen=True, eq=True)
class Sum(_Node):
    entries: Tuple[Tuple["SpaceExpr", Mult], ...]


@dataclass(frozen=True, eq=True)
class Lim(_Node):
    prefix: Tuple[Ring, ...]
    tail: Ring

    @classmethod
    def periodic(cls, prefix: Iterable[Ring], period: Iterable[Ring]) -> "Lim":
        """
        여러 링으로 된 주기를 주기당 링 하나로 합칩니다.

        주기 [R1, R2] 의 반복은 링 R1 ⊕ R2 의 반복과 같은 근방 기저를 줍니다.
        """
        merged = []
        for ring in period:
            merged.extend(ring.entries)
        if not merged:
            raise ValueError("a periodic tail needs at least one entry")
        return cls(tuple(prefix), Ring(tuple(merged)))


SpaceExpr = Union[Empty, Point, Sum, Lim]
Entry = Tuple[SpaceExpr, Mult]

EMPTY = Empty()
POINT = Point()


def G(x: SpaceExpr) -> Lim:
    """링마다 x 한 개"""
    return Lim((), Ring(((x, 1),)))


def I(x: SpaceExpr) -> Lim:  # noqa: E743
    """링마다 x 무한 개"""
    return Lim((), Ring(((x, OMEGA),)))


def cone(entries: Iterable[Entry]) -> Lim:
    """prefix 없는 Lim (순수 원뿔)"""
    return Lim((), Ring(tuple(entries)))


D = Sum(((POINT, OMEGA),))


def is_cone(e: SpaceExpr) -> bool:
    return isinstance(e, Lim) and not e.prefix


# ------------------------------------------------------------
# rank / 정렬 / 출력
# ------------------------------------------------------------
@lru_cache(maxsize=CACHE_SIZE)
def rank(e: SpaceExpr) -> int:
    """
    직접 재귀로 계산한 칸토어-벤딕슨 rank

    Empty 0, Point 1, Sum은 구성원 rank의 최댓값,
    Lim은 max(prefix 구성원 rank, 1 + tail 구성원 rank의 최댓값)
    """
    if isinstance(e, Empty):
        return 0
    if isinstance(e, Point):
        return 1
    if isinstance(e, Sum):
        return max((rank(m) for m, _ in e.entries), default=0)
    prefix_rank = max((rank(m) for ring in e.prefix for m, _ in ring.entries), default=0)
    tail_rank = max((rank(m) for m, _ in e.tail.entries), default=0)
    return max(prefix_rank, 1 + tail_rank)


def glue_rank(e: Lim) -> int:
    """접착점의 국소 rank"""
    return 1 + max((rank(m) for m, _ in e.tail.entries), default=0)


def format_mult(m: Mult) -> str:
    return "w" if m is OMEGA else str(m)


def _format_items(entries) -> str:
    return ",".join(f"{format_mult(m)}*{format_expr(x)}" for x, m in entries)


@lru_cache(maxsize=CACHE_SIZE)
def format_expr(e: SpaceExpr) -> str:
    """
    최대 설탕 표기로 출력 (공백 없음)

    D = sum{w*1}, G(x) = lim(;{1*x}), I(x) = lim(;{w*x})
    """
    if isinstance(e, Empty):
        return "0"
    if isinstance(e, Point):
        return "1"
    if isinstance(e, Sum):
        if e.entries == ((POINT, OMEGA),):
            return "D"
        return "sum{" + _format_items(e.entries) + "}"
    if not e.prefix and len(e.tail.entries) == 1:
        member, m = e.tail.entries[0]
        if m == 1:
            return f"G({format_expr(member)})"
        if m is OMEGA:
            return f"I({format_expr(member)})"
    rings = ",".join("{" + _format_items(r.entries) + "}" for r in e.prefix)
    return "lim(" + rings + ";{" + _format_items(e.tail.entries) + "})"


def entry_key(entry: Entry) -> Tuple[int, str]:
    """정규 항목 순서: (rank, 출력 문자열)"""
    return rank(entry[0]), format_expr(entry[0])


@dataclass
class Counter:
    """부분식 → 중복도 누적기 (삽입 순서 유지)"""

    items: dict = field(default_factory=dict)

    def add(self, expr: SpaceExpr, m: Mult) -> None:
        if m == 0:
            return
        self.items[expr] = mult_add(self.items.get(expr, 0), m)

    def extend(self, entries: Iterable[Entry], factor: Mult = 1) -> None:
        for expr, m in entries:
            self.add(expr, mult_mul(m, factor))

    def sorted_entries(self) -> Tuple[Entry, ...]:
        return tuple(sorted(self.items.items(), key=entry_key))
