"""
안정 차원 타입 패키지

사용 예시:
    from src.core.stable import enumerate_stable

    for cls in enumerate_stable(2):
        print(cls.id, cls.expr)
"""
from src.core.stable.enumerate import (
    StableClass,
    StableDescriptor,
    TypeClassTable,
    enumerate_stable,
    get_table,
    is_stable,
    require_one_point_top,
    stable_decompose,
    tail_only,
    thinning_preserves_type,
)
from src.core.stable.poset import build_poset, poset_dot, poset_export, poset_json

__all__ = [
    "StableClass",
    "StableDescriptor",
    "TypeClassTable",
    "build_poset",
    "enumerate_stable",
    "get_table",
    "is_stable",
    "poset_dot",
    "poset_export",
    "poset_json",
    "require_one_point_top",
    "stable_decompose",
    "tail_only",
    "thinning_preserves_type",
]
