"""
산재 공간 항 대수

사용 예:
    ```python
    from src.core.space import parse_expr, normalize, derivative, format_expr

    e = normalize(parse_expr("lim({1*G(1)};{1*G(1)})"))
    print(format_expr(e))              # G(G(1))
    print(format_expr(derivative(e)))  # G(1)
    ```
"""
from src.core.space.derive import (
    band,
    derivative,
    has_clopen_convergent,
    is_compact,
    iterate_derivative,
    layer,
    layer_signature,
    point_count,
    rank_by_derivative,
)
from src.core.space.expr import (
    D,
    EMPTY,
    OMEGA,
    POINT,
    Empty,
    G,
    I,
    Lim,
    Mult,
    Omega,
    Point,
    Ring,
    SpaceExpr,
    Sum,
    cone,
    format_expr,
    format_mult,
    glue_rank,
    is_cone,
    rank,
)
from src.core.space.normalize import components, germs, normalize
from src.core.space.ordinals import block, ord_to_expr
from src.core.space.parser import parse_expr

__all__ = [
    "SpaceExpr",
    "Empty",
    "Point",
    "Sum",
    "Lim",
    "Ring",
    "Omega",
    "Mult",
    "OMEGA",
    "EMPTY",
    "POINT",
    "D",
    "G",
    "I",
    "cone",
    "is_cone",
    "parse_expr",
    "format_expr",
    "format_mult",
    "normalize",
    "components",
    "germs",
    "derivative",
    "iterate_derivative",
    "rank",
    "rank_by_derivative",
    "glue_rank",
    "is_compact",
    "point_count",
    "band",
    "layer",
    "has_clopen_convergent",
    "layer_signature",
    "block",
    "ord_to_expr",
]
