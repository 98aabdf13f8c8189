"""
REST 요청/응답 모델

Pydantic 모델 정의
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from src.models.verdict import Budget


class ExprRequest(BaseModel):
    """표현식 하나를 받는 요청"""

    expr: str = Field(..., min_length=1, description="공간 표현식 (예: I(G(1)))")

    class Config:
        json_schema_extra = {"example": {"expr": "lim({1*G(1)};{1*G(1)})"}}


class PairRequest(BaseModel):
    """두 표현식 판정 요청"""

    a: str = Field(..., min_length=1, description="원천 표현식")
    b: str = Field(..., min_length=1, description="대상 표현식")
    budget: Optional[Budget] = Field(None, description="탐색 예산 (없으면 설정값)")

    class Config:
        json_schema_extra = {"example": {"a": "G(1)", "b": "I(1)"}}


class OrdinalRequest(BaseModel):
    """순서수 연산 요청"""

    a: str = Field(..., min_length=1, description="첫 순서수 (예: w^2*3+w+1)")
    b: Optional[str] = Field(None, description="두 번째 순서수 (이항 연산)")


class ExprResponse(BaseModel):
    """표현식 결과"""

    input: str
    result: str


class SpaceInfoResponse(BaseModel):
    """표현식 요약 정보"""

    normal_form: str
    rank: int
    compact: bool
    derivative: str
    points: str = Field(..., description="점 개수 (가산 무한이면 w)")
    layer_signature: List[bool]
    upper: str = Field(..., description="임베딩되는 순서수 상한")


class CanonicalResponse(BaseModel):
    alpha: int
    n: int
    ordinal: str


class OrdinalResponse(BaseModel):
    operation: str
    result: str


class StableClassResponse(BaseModel):
    id: str
    expr: str
    descriptor: str


class StableLevelResponse(BaseModel):
    level: int
    count: int
    classes: List[StableClassResponse]


class PosetResponse(BaseModel):
    level: int
    classes: List[Dict[str, str]]
    edges: List[List[int]]
