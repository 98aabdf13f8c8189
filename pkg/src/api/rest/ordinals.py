"""
Ordinals API 엔드포인트

CNF 순서수 연산
"""
from typing import Literal

from fastapi import APIRouter, HTTPException, status

from src.core.errors import ZeroOrdinalError
from src.core.ordinal import (
    add,
    cb_rank_of_ordinal,
    compare,
    embed_bound_E,
    format_ordinal,
    mul,
    parse_ordinal,
)
from src.models.requests import OrdinalRequest, OrdinalResponse

router = APIRouter(prefix="/ordinals")

Operation = Literal["add", "mul", "compare", "rank", "e-bound"]
_BINARY = ("add", "mul", "compare")


@router.post("/{operation}", response_model=OrdinalResponse)
def ordinal_operation(operation: Operation, request: OrdinalRequest):
    """
    순서수 연산

    Args:
        operation: add | mul | compare | rank | e-bound
        request: a (필수), b (이항 연산에서 필수)

    Raises:
        HTTPException: 이항 연산에 b 가 없을 때 422
    """
    if operation in _BINARY and request.b is None:
        raise HTTPException(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            detail=f"operation {operation} needs two ordinals",
        )
    a = parse_ordinal(request.a)
    if operation == "add":
        result = format_ordinal(add(a, parse_ordinal(request.b)))
    elif operation == "mul":
        result = format_ordinal(mul(a, parse_ordinal(request.b)))
    elif operation == "compare":
        result = compare(a, parse_ordinal(request.b)).value
    elif operation == "rank":
        try:
            result = format_ordinal(cb_rank_of_ordinal(a))
        except ZeroOrdinalError:
            result = "0"
    else:
        result = format_ordinal(embed_bound_E(a))
    return OrdinalResponse(operation=operation, result=result)
