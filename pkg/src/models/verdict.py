"""
판정(Verdict) 관련 데이터 모델

Pydantic 모델 정의. JSON 직렬화 형태:
    {"answer": "yes|no|unknown", "witness": {...}|null,
     "obstruction": {"kind": ..., "evidence": ...}|null, "budget": {...}}
"""
from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from src.config.settings import Settings, get_settings


class Answer(str, Enum):
    """삼치(three-valued) 답"""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __and__(self, other: "Answer") -> "Answer":
        if self is Answer.NO or other is Answer.NO:
            return Answer.NO
        if self is Answer.UNKNOWN or other is Answer.UNKNOWN:
            return Answer.UNKNOWN
        return Answer.YES

    def __or__(self, other: "Answer") -> "Answer":
        if self is Answer.YES or other is Answer.YES:
            return Answer.YES
        if self is Answer.UNKNOWN or other is Answer.UNKNOWN:
            return Answer.UNKNOWN
        return Answer.NO


class Budget(BaseModel):
    """
    임베딩 탐색 예산

    💡 스키마 크기 제한:
    - slope: 원천 링 하나가 차지하는 대상 링 블록의 간격 상한
    - width: 원천 링 하나가 쓰는 대상 링 개수 상한
    - depth: 재귀 깊이 상한 (None이면 대상의 rank)
    - node_limit: 합 분배 탐색 노드 상한
    """

    model_config = {"frozen": True}

    slope: int = Field(8, ge=0, description="링 할당 기울기 상한")
    width: int = Field(8, ge=1, description="링 할당 구간 폭 상한")
    depth: Optional[int] = Field(None, ge=0, description="재귀 깊이 상한 (None이면 대상의 rank)")
    node_limit: int = Field(20000, ge=1, description="분배 탐색 노드 상한")

    @classmethod
    def from_settings(cls, settings: Optional[Settings] = None) -> "Budget":
        settings = settings or get_settings()
        return cls(
            slope=settings.embed_slope,
            width=settings.embed_width,
            depth=settings.embed_depth,
            node_limit=settings.embed_node_limit,
        )


class RingAssignment(BaseModel):
    """원천 링 k → 대상 링 [base + slope·k, base + slope·k + width)"""

    base: int = Field(..., description="첫 대상 링 번호")
    slope: int = Field(..., description="원천 링당 이동 간격")
    width: int = Field(..., description="원천 링 하나가 쓰는 대상 링 수")


class Hosting(BaseModel):
    """
    원천 항목 하나의 배치

    🔍 load:
    - single: 원천 사본마다 서로 다른 호스트 사본 하나
    - all: 모든 사본을 호스트 사본 하나에 함께
    """

    member: str = Field(..., description="원천 성분 (또는 함께 놓이는 다중집합)")
    mult: str = Field(..., description="원천 중복도")
    host: str = Field(..., description="대상 성분 / 링 구성원")
    host_mult: str = Field(..., description="대상 중복도")
    load: Literal["single", "all"] = Field("single", description="배치 방식")
    slot: Optional[int] = Field(None, description="유한 중복 호스트의 사본 번호")
    via: Optional[EmbeddingSchema] = Field(None, description="호스트 안으로의 하위 스키마")


class EmbeddingSchema(BaseModel):
    """
    임베딩 증인 스키마

    📚 mode:
    - empty: 빈 원천
    - point: 한 점 → 한 점
    - sum: 성분들을 대상 성분(사본)들에 배치
    - rings: 접착점을 쓰지 않고 원천 성분마다 서로 다른 링에
    - glue: germ 하나를 대상 접착점에, 나머지는 앞쪽 유한 링들에
    - pointed: germ 의 접착점 → 대상 접착점, 링은 ring_assignment 로
    """

    source: str
    target: str
    mode: Literal["empty", "point", "sum", "rings", "glue", "pointed"]
    glue: Optional[str] = Field(None, description="대상 접착점으로 가는 원천 germ")
    pointed: Optional[EmbeddingSchema] = Field(None, description="germ 의 pointed 스키마")
    ring_assignment: Optional[RingAssignment] = None
    rest_rings: int = Field(0, description="나머지 성분이 쓰는 앞쪽 대상 링 수")
    hosting: List[Hosting] = Field(default_factory=list)
    rest: List[Hosting] = Field(default_factory=list)


class Obstruction(BaseModel):
    """임베딩 불가능성의 증거"""

    kind: Literal[
        "rank",
        "top-point-count",
        "compact-local",
        "capacity",
        "ring-spill",
        "layer-signature",
    ]
    evidence: Dict[str, Any] = Field(default_factory=dict)


class Verdict(BaseModel):
    """판정 결과"""

    answer: Answer
    witness: Optional[EmbeddingSchema] = None
    obstruction: Optional[Obstruction] = None
    budget: Budget

    class Config:
        json_schema_extra = {
            "example": {
                "answer": "yes",
                "witness": {"source": "G(1)", "target": "I(1)", "mode": "pointed"},
                "obstruction": None,
                "budget": {"slope": 8, "width": 8, "depth": None, "node_limit": 20000},
            }
        }


class CanonicalCompact(BaseModel):
    """ω^alpha·n + 1"""

    alpha: int = Field(..., ge=0)
    n: int = Field(..., ge=1)


Hosting.model_rebuild()
EmbeddingSchema.model_rebuild()
