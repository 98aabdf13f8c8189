"""
증인 공간 족

- witness_X(m): 임베딩 순서수 ω^(2m)+1 이 필요한 극단 공간 X(m) = I^m(1)
- family_Xf(bits): 비트 접두사별로 서로 위상동형이 아닌 공간들
"""
from typing import Optional, Sequence

from src.config.settings import get_settings
from src.core.errors import DomainError
from src.core.space.expr import OMEGA, POINT, Lim, Mult, SpaceExpr, cone, format_expr
from src.core.space.normalize import normalize


def witness_X(m: int) -> SpaceExpr:
    """
    X(0) = 1, X(m) = I(X(m-1))

    Raises:
        DomainError: m < 0
    """
    if m < 0:
        raise DomainError(f"witness index must be non-negative, got {m}")
    result: SpaceExpr = POINT
    for _ in range(m):
        result = cone(((result, OMEGA),))
    return result


def _glue(x: Lim, mult: Mult) -> SpaceExpr:
    """
    X = C(t) 에서 C(t^ω ∪ {X: mult})

    t^ω 는 t 의 중복도를 모두 ω 로 올린 링입니다.
    """
    raised = tuple((member, OMEGA) for member, _ in x.tail.entries)
    return normalize(cone(raised + ((x, mult),)))


def family_Xf(bits: Sequence[int], cap: Optional[int] = None) -> SpaceExpr:
    """
    비트 접두사의 공간

    X([0]) = G(1), X([1]) = I(1), 비트 0 은 자신을 한 번, 비트 1 은 ω 번
    새 링에 넣습니다. rank 는 len(bits) + 1 이고 k 번째 층이 수렴 수열을
    clopen 으로 가지는 것은 k 번째 비트가 0 일 때뿐입니다.

    Args:
        bits: 0/1 수열 (길이 ≥ 1)
        cap: 최대 길이 (None이면 설정값 bit_prefix_cap)

    Raises:
        DomainError: 빈 접두사, 0/1 이 아닌 값, 길이 초과
    """
    cap = get_settings().bit_prefix_cap if cap is None else cap
    bits = list(bits)
    if not bits:
        raise DomainError("bit prefix must be non-empty")
    if len(bits) > cap:
        raise DomainError(f"bit prefix longer than the cap {cap}")
    if any(bit not in (0, 1) for bit in bits):
        raise DomainError(f"bits must be 0 or 1, got {bits}")

    current = normalize(cone(((POINT, 1 if bits[0] == 0 else OMEGA),)))
    for bit in bits[1:]:
        if not isinstance(current, Lim):
            raise DomainError(f"family step needs a cone, got {format_expr(current)}")
        current = _glue(current, 1 if bit == 0 else OMEGA)
    return current


def parse_bits(text: str) -> list:
    """ "0110" 또는 "0,1,1,0" → [0, 1, 1, 0] """
    digits = text.replace(",", "").replace(" ", "").replace("[", "").replace("]", "")
    if not digits or any(ch not in "01" for ch in digits):
        raise DomainError(f"not a bit string: {text!r}")
    return [int(ch) for ch in digits]
