"""
CNF 순서수 산술

사용 예:
    ```python
    from src.core.ordinal import parse_ordinal, embed_bound_E

    a = parse_ordinal("w+2")
    print(embed_bound_E(a))   # w^(w+5)+1
    ```
"""
from src.core.ordinal.notation import (
    ONE,
    W,
    ZERO,
    Ordering,
    Ordinal,
    add,
    compare,
    format_ordinal,
    mul,
    omega_pow,
)
from src.core.ordinal.parser import parse_ordinal
from src.core.ordinal.topology import canonical_compact_type, cb_rank_of_ordinal, embed_bound_E

__all__ = [
    "Ordinal",
    "Ordering",
    "ZERO",
    "ONE",
    "W",
    "compare",
    "add",
    "mul",
    "omega_pow",
    "parse_ordinal",
    "format_ordinal",
    "cb_rank_of_ordinal",
    "canonical_compact_type",
    "embed_bound_E",
]
