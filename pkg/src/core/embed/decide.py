"""
임베딩 판정 진입점

- decide_embed: X ≤_E Y (증인 또는 반박 포함)
- decide_same_type: X ≡_E Y (양방향)
- decide_homeomorphic: X ≅ Y
- capacity: Y 에 들어가는 A 의 최대 서로소 사본 수
"""
from typing import Optional

from src.core.errors import DomainError, UnknownVerdictError
from src.core.space.derive import is_compact
from src.core.space.expr import OMEGA, Empty, Mult, SpaceExpr, Sum, format_expr, rank
from src.core.space.normalize import normalize
from src.core.space.ordinals import block
from src.core.embed.canonical import ms_canonical
from src.core.embed.engine import EmbeddingEngine, get_engine
from src.core.embed.refute import (
    diagnose,
    level_counts,
    local_compactness_obstruction,
    quick_refute,
    rank_obstruction,
    signature_obstruction,
)
from src.models.verdict import Answer, Budget, EmbeddingSchema, Obstruction, Verdict
from src.utils.logger import get_logger

logger = get_logger(__name__)

# 상한을 모르는 용량 탐색의 최대 사본 수
CAPACITY_SEARCH_LIMIT = 64


def _engine(budget: Optional[Budget]) -> EmbeddingEngine:
    return get_engine(budget or Budget.from_settings())


def decide_embed(x: SpaceExpr, y: SpaceExpr, budget: Optional[Budget] = None) -> Verdict:
    """
    X ≤_E Y 판정

    Args:
        x: 원천 표현식
        y: 대상 표현식
        budget: 탐색 예산 (None이면 설정값)

    Returns:
        Verdict: yes 면 witness, no 면 obstruction 포함
    """
    engine = _engine(budget)
    x, y = normalize(x), normalize(y)

    quick = quick_refute(x, y)
    if quick is not None:
        verdict = Verdict(answer=Answer.NO, obstruction=quick, budget=engine.budget)
    else:
        answer, schema = engine.embed(x, y)
        if answer is Answer.YES:
            verdict = Verdict(answer=answer, witness=schema, budget=engine.budget)
        elif answer is Answer.NO:
            verdict = Verdict(answer=answer, obstruction=diagnose(engine, x, y), budget=engine.budget)
        else:
            verdict = Verdict(answer=answer, budget=engine.budget)

    logger.debug("embed_decided", source=format_expr(x), target=format_expr(y), answer=verdict.answer.value)
    return verdict


def search_embedding(x: SpaceExpr, y: SpaceExpr, budget: Optional[Budget] = None) -> Optional[EmbeddingSchema]:
    """예산 안에서 찾은 증인 스키마 (없으면 None)"""
    answer, schema = _engine(budget).embed(normalize(x), normalize(y))
    return schema if answer is Answer.YES else None


def refute_embedding(x: SpaceExpr, y: SpaceExpr, budget: Optional[Budget] = None) -> Optional[Obstruction]:
    """임베딩이 불가능하면 그 근거, 아니면(또는 모르면) None"""
    return decide_embed(x, y, budget).obstruction


def _reversed(obstruction: Obstruction) -> Obstruction:
    evidence = dict(obstruction.evidence)
    evidence["direction"] = "reverse"
    return Obstruction(kind=obstruction.kind, evidence=evidence)


def decide_same_type(x: SpaceExpr, y: SpaceExpr, budget: Optional[Budget] = None) -> Verdict:
    """
    X ≡_E Y 판정 (X ≤_E Y 그리고 Y ≤_E X)

    no 인 경우 역방향에서 나온 반박은 evidence["direction"] = "reverse" 로 표시합니다.
    """
    forward = decide_embed(x, y, budget)
    if forward.answer is Answer.NO:
        return forward
    backward = decide_embed(y, x, budget)
    if backward.answer is Answer.NO:
        return Verdict(answer=Answer.NO, obstruction=_reversed(backward.obstruction), budget=backward.budget)
    answer = forward.answer & backward.answer
    witness = forward.witness if answer is Answer.YES else None
    return Verdict(answer=answer, witness=witness, budget=forward.budget)


def decide_homeomorphic(x: SpaceExpr, y: SpaceExpr, budget: Optional[Budget] = None) -> Verdict:
    """
    X ≅ Y 판정

    🔍 순서:
    1. 정규형이 같으면 yes
    2. rank, 컴팩트성, 레벨별 점 개수, 층 서명 중 하나라도 다르면 no
    3. 둘 다 컴팩트면 정준형 비교로 확정
    4. 컴팩트 근방이 없는 점의 레벨별 개수가 다르면 no
    5. 한 방향 임베딩이라도 반박되면 no, 그 외에는 unknown
    """
    budget = budget or Budget.from_settings()
    x, y = normalize(x), normalize(y)

    def verdict(answer: Answer, obstruction: Optional[Obstruction] = None) -> Verdict:
        return Verdict(answer=answer, obstruction=obstruction, budget=budget)

    if x == y:
        return verdict(Answer.YES)
    found = rank_obstruction(x, y) or rank_obstruction(y, x)
    if found is not None:
        return verdict(Answer.NO, found)

    cx, cy = is_compact(x), is_compact(y)
    if cx != cy:
        return verdict(
            Answer.NO,
            Obstruction(kind="compact-local", evidence={"source_compact": cx, "target_compact": cy}),
        )

    xs, ys = level_counts(x), level_counts(y)
    if xs != ys:
        return verdict(
            Answer.NO,
            Obstruction(
                kind="top-point-count",
                evidence={
                    "source_points": ["w" if c is OMEGA else c for c in xs],
                    "target_points": ["w" if c is OMEGA else c for c in ys],
                },
            ),
        )

    if cx and not isinstance(x, Empty):
        # 컴팩트 공간은 (rank, 최상위 점 개수) 로 결정됨. 위에서 둘 다 같음을 확인
        if ms_canonical(x) == ms_canonical(y):
            return verdict(Answer.YES)

    found = signature_obstruction(x, y) or local_compactness_obstruction(x, y)
    if found is not None:
        return verdict(Answer.NO, found)

    forward = decide_embed(x, y, budget)
    if forward.answer is Answer.NO:
        return verdict(Answer.NO, forward.obstruction)
    backward = decide_embed(y, x, budget)
    if backward.answer is Answer.NO:
        return verdict(Answer.NO, _reversed(backward.obstruction))
    return verdict(Answer.UNKNOWN)


def capacity(a: SpaceExpr, b: SpaceExpr, budget: Optional[Budget] = None) -> Mult:
    """
    B 에 서로소로 임베딩되는 A 사본의 최대 개수

    Returns:
        정수 또는 OMEGA

    Raises:
        UnknownVerdictError: 예산 안에서 결정되지 않음
    """
    a, b = normalize(a), normalize(b)
    if isinstance(a, Empty):
        return OMEGA

    def copies(k: Mult) -> Answer:
        verdict = decide_embed(Sum(((a, k),)), b, budget)
        if verdict.answer is Answer.UNKNOWN:
            raise UnknownVerdictError(
                f"capacity of {format_expr(b)} for {format_expr(a)} undecided at {k} copies",
                pair=(format_expr(a), format_expr(b)),
            )
        return verdict.answer

    if copies(OMEGA) is Answer.YES:
        return OMEGA

    # 사본마다 국소 rank ≥ rank(a) 인 점이 하나 이상 필요
    counts = level_counts(b)
    level = rank(a)
    if level > len(counts):
        return 0
    bound = counts[level - 1]
    limit = CAPACITY_SEARCH_LIMIT if bound is OMEGA else min(bound, CAPACITY_SEARCH_LIMIT)

    best = 0
    for k in range(1, limit + 1):
        if copies(k) is Answer.NO:
            return best
        best = k
    if bound is OMEGA or bound > limit:
        raise UnknownVerdictError(
            f"capacity search exceeded {limit} copies",
            pair=(format_expr(a), format_expr(b)),
        )
    return best


def check_omega_alpha_copy(e: SpaceExpr, k: int, budget: Optional[Budget] = None) -> bool:
    """
    ω^k + 1 (블록 k 한 개) 의 사본이 e 안에 있는지

    Raises:
        DomainError: k < 1
    """
    if k < 1:
        raise DomainError(f"copy level must be at least 1, got {k}")
    return decide_embed(block(k), e, budget).answer is Answer.YES


__all__ = [
    "CAPACITY_SEARCH_LIMIT",
    "capacity",
    "check_omega_alpha_copy",
    "decide_embed",
    "decide_homeomorphic",
    "decide_same_type",
    "refute_embedding",
    "search_embedding",
]
