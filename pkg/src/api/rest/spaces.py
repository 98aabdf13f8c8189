"""
Spaces API 엔드포인트

공간 표현식 계산과 임베딩 판정

🎯 주요 기능:
1. 정규화 / 도함수 / 요약 정보
2. 컴팩트 정준형과 컴팩트화
3. 임베딩, 같은 타입, 위상동형 판정 (삼치 Verdict)
"""
from fastapi import APIRouter

from src.core.embed import (
    decide_embed,
    decide_homeomorphic,
    decide_same_type,
    ku_compactify,
    ms_canonical,
    ordinal_embedding_upper,
)
from src.core.ordinal import ONE, Ordinal, add, format_ordinal, mul, omega_pow
from src.core.space import (
    derivative,
    format_expr,
    format_mult,
    is_compact,
    layer_signature,
    normalize,
    parse_expr,
    point_count,
    rank,
)
from src.models.requests import CanonicalResponse, ExprRequest, ExprResponse, PairRequest, SpaceInfoResponse
from src.models.verdict import Verdict
from src.utils.logger import get_logger

router = APIRouter(prefix="/spaces")
logger = get_logger(__name__)


@router.post("/normalize", response_model=ExprResponse)
def normalize_expr(request: ExprRequest):
    """정규형"""
    return ExprResponse(input=request.expr, result=format_expr(normalize(parse_expr(request.expr))))


@router.post("/derivative", response_model=ExprResponse)
def derive_expr(request: ExprRequest):
    """도함수 (고립되지 않은 점들)"""
    return ExprResponse(input=request.expr, result=format_expr(derivative(parse_expr(request.expr))))


@router.post("/info", response_model=SpaceInfoResponse)
def space_info(request: ExprRequest):
    """
    표현식 요약

    Returns:
        SpaceInfoResponse: 정규형, rank, 컴팩트 여부, 도함수, 점 개수, 층 서명, 순서수 상한
    """
    e = normalize(parse_expr(request.expr))
    return SpaceInfoResponse(
        normal_form=format_expr(e),
        rank=rank(e),
        compact=is_compact(e),
        derivative=format_expr(derivative(e)),
        points=format_mult(point_count(e)),
        layer_signature=layer_signature(e),
        upper=format_ordinal(ordinal_embedding_upper(e)),
    )


@router.post("/canonical", response_model=CanonicalResponse)
def canonical(request: ExprRequest):
    """컴팩트 공간의 정준형 ω^α·n+1"""
    result = ms_canonical(parse_expr(request.expr))
    ordinal = add(mul(omega_pow(Ordinal.finite(result.alpha)), Ordinal.finite(result.n)), ONE)
    return CanonicalResponse(alpha=result.alpha, n=result.n, ordinal=format_ordinal(ordinal))


@router.post("/compactify", response_model=ExprResponse)
def compactify(request: ExprRequest):
    """컴팩트 상위 공간"""
    return ExprResponse(input=request.expr, result=format_expr(ku_compactify(parse_expr(request.expr))))


@router.post("/embed", response_model=Verdict)
def embed(request: PairRequest):
    """
    A ≤_E B 판정

    💡 사용 예시:
    ```json
    POST /api/v1/spaces/embed
    {"a": "G(1)", "b": "I(1)"}
    ```
    """
    verdict = decide_embed(parse_expr(request.a), parse_expr(request.b), request.budget)
    logger.info("embed_request", a=request.a, b=request.b, answer=verdict.answer.value)
    return verdict


@router.post("/same-type", response_model=Verdict)
def same_type(request: PairRequest):
    """A =_E B 판정"""
    return decide_same_type(parse_expr(request.a), parse_expr(request.b), request.budget)


@router.post("/homeomorphic", response_model=Verdict)
def homeomorphic(request: PairRequest):
    """A ≅ B 판정"""
    return decide_homeomorphic(parse_expr(request.a), parse_expr(request.b), request.budget)
