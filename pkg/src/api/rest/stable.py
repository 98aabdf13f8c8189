"""
Stable API 엔드포인트

안정 차원 타입 열거, 포셋, 분해
"""
from typing import List

from fastapi import APIRouter

from src.core.space import format_mult, parse_expr
from src.core.stable import get_table, poset_json, stable_decompose
from src.models.requests import ExprRequest, PosetResponse, StableClassResponse, StableLevelResponse
from src.utils.logger import get_logger

router = APIRouter(prefix="/stable")
logger = get_logger(__name__)


@router.get("/poset/{level}", response_model=PosetResponse)
def poset(level: int):
    """레벨 ≤ level 안정 타입들의 하세 그래프 (JSON)"""
    return PosetResponse(**poset_json(level, get_table()))


@router.get("/{level}", response_model=StableLevelResponse)
def stable_level(level: int):
    """
    레벨 n 의 안정 타입 클래스

    💡 레벨 1 은 G(1), I(1) 두 개, 레벨 2 는 다섯 개입니다.
    """
    classes = get_table().level(level)
    logger.info("stable_level_request", level=level, classes=len(classes))
    return StableLevelResponse(
        level=level,
        count=len(classes),
        classes=[
            StableClassResponse(id=cls.id, expr=cls.expr, descriptor=str(cls.descriptor))
            for cls in classes
        ],
    )


@router.post("/decompose")
def decompose(request: ExprRequest) -> List[dict]:
    """clopen 안정 분해: [{"id", "expr", "mult"}]"""
    parts = stable_decompose(parse_expr(request.expr), get_table())
    return [{"id": cls.id, "expr": cls.expr, "mult": format_mult(m)} for cls, m in parts]
