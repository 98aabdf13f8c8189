"""
정준형과 컴팩트화

- ms_canonical: 컴팩트 표현식 → (alpha, n), 즉 ω^alpha·n + 1
- ku_compactify: ω 중복도를 G 블록으로 닫은 컴팩트 상위 공간
- ordinal_embedding_upper: 표현식이 들어가는 순서수 상한
"""
from functools import lru_cache
from typing import Optional, Tuple

from src.core.errors import DomainError, NonCompactError
from src.core.ordinal import ONE, ZERO, Ordinal, add, mul, omega_pow
from src.core.space.derive import is_compact, iterate_derivative, point_count
from src.core.space.expr import (
    CACHE_SIZE,
    OMEGA,
    Empty,
    Entry,
    G,
    Lim,
    Point,
    Ring,
    SpaceExpr,
    Sum,
    format_expr,
    rank,
)
from src.core.space.normalize import components, normalize
from src.models.verdict import CanonicalCompact

_OMEGA_ORDINAL = omega_pow(ONE)


def _non_compact_witness(e: SpaceExpr) -> Optional[str]:
    """ω 중복도를 가진 첫 항목"""
    entries: Tuple[Entry, ...] = ()
    if isinstance(e, Sum):
        entries = e.entries
    elif isinstance(e, Lim):
        entries = tuple(entry for ring in e.prefix + (e.tail,) for entry in ring.entries)
    for member, m in entries:
        if m is OMEGA:
            return f"w*{format_expr(member)} in {format_expr(e)}"
        found = _non_compact_witness(member)
        if found is not None:
            return found
    return None


def ms_canonical(e: SpaceExpr) -> CanonicalCompact:
    """
    컴팩트 공간의 정준형

    alpha = rank - 1, n = |derivative^alpha(e)|. 이때 e ≅ ω^alpha·n + 1.

    Raises:
        DomainError: 빈 공간
        NonCompactError: 컴팩트가 아님 (증인 항목 포함)
    """
    e = normalize(e)
    if isinstance(e, Empty):
        raise DomainError("the empty space has no canonical compact type")
    if not is_compact(e):
        witness = _non_compact_witness(e)
        raise NonCompactError(f"not compact: {witness}", witness=witness)
    alpha = rank(e) - 1
    return CanonicalCompact(alpha=alpha, n=point_count(iterate_derivative(e, alpha)))


def _compactify(e: SpaceExpr) -> SpaceExpr:
    if isinstance(e, (Empty, Point)):
        return e

    def close(entries):
        closed = []
        for member, m in entries:
            inner = _compactify(member)
            closed.append((G(inner), 1) if m is OMEGA else (inner, m))
        return tuple(closed)

    if isinstance(e, Sum):
        return Sum(close(e.entries))
    return Lim(tuple(Ring(close(ring.entries)) for ring in e.prefix), Ring(close(e.tail.entries)))


def ku_compactify(e: SpaceExpr) -> SpaceExpr:
    """
    컴팩트화

    (X, ω) 항목을 재귀적으로 (G(X'), 1) 로 바꾼 뒤 정규화합니다.
    X 의 ω 사본은 G(X) 의 링들에 하나씩 들어가므로 e 는 결과에 임베딩됩니다.

    Example:
        I(1) -> G(G(1)), D -> G(1)
    """
    return normalize(_compactify(normalize(e)))


def _stack(bounds) -> Ordinal:
    """오름차순으로 이어 붙이기: 유한 k 개는 b·k, ω 개는 b·ω+1"""
    total = ZERO
    for bound, m in sorted(bounds, key=lambda item: item[0]):
        if m is OMEGA:
            total = add(total, add(mul(bound, _OMEGA_ORDINAL), ONE))
        else:
            total = add(total, mul(bound, Ordinal.finite(m)))
    return total


@lru_cache(maxsize=CACHE_SIZE)
def _component_bound(c: SpaceExpr) -> Ordinal:
    if isinstance(c, Point):
        return ONE
    ring = _stack([(_component_bound(member), m) for member, m in c.tail.entries])
    return add(mul(ring, _OMEGA_ORDINAL), ONE)


def ordinal_embedding_upper(e: SpaceExpr) -> Ordinal:
    """
    e 가 임베딩되는 후속 순서수 a (즉 [0, a))

    링 블록 ρ 를 ω 번 반복하고 접착점 하나를 더한 ρ·ω+1 을 원뿔마다,
    성분들은 오름차순으로 이어 붙입니다. 빈 공간은 0.

    Example:
        G(1) -> w+1, I(1) -> w^2+1, I(I(1)) -> w^4+1
    """
    return _stack([(_component_bound(c), m) for c, m in components(e)])
