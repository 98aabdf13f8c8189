"""
임베딩 결정 패키지

사용 예시:
    from src.core.embed import decide_embed
    from src.core.space import parse_expr

    verdict = decide_embed(parse_expr("G(1)"), parse_expr("I(1)"))
    print(verdict.answer)  # Answer.YES
"""
from src.core.embed.canonical import ku_compactify, ms_canonical, ordinal_embedding_upper
from src.core.embed.decide import (
    CAPACITY_SEARCH_LIMIT,
    capacity,
    check_omega_alpha_copy,
    decide_embed,
    decide_homeomorphic,
    decide_same_type,
    refute_embedding,
    search_embedding,
)
from src.core.embed.engine import EmbeddingEngine, get_engine
from src.core.embed.refute import check_obstruction, level_counts
from src.core.embed.schema import check_schema

__all__ = [
    "CAPACITY_SEARCH_LIMIT",
    "EmbeddingEngine",
    "capacity",
    "check_obstruction",
    "check_omega_alpha_copy",
    "check_schema",
    "decide_embed",
    "decide_homeomorphic",
    "decide_same_type",
    "get_engine",
    "ku_compactify",
    "level_counts",
    "ms_canonical",
    "ordinal_embedding_upper",
    "refute_embedding",
    "search_embedding",
]
