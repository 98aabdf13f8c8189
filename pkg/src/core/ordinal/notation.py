"""
칸토어 표준형(CNF) 순서수

🎯 목적:
- ε₀ 미만 순서수를 정확한 기호 값으로 표현
- 비교, 덧셈, 곱셈, ω 거듭제곱

💡 표현:
- terms = ((지수, 계수), ...) 지수는 다시 Ordinal, 계수는 양의 정수
- 지수는 엄격히 감소, 빈 튜플은 0
- 불변(frozen) 값이므로 스레드 간 공유가 안전합니다
"""
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Iterable, Tuple, Union

Term = Tuple["Ordinal", int]


class Ordering(str, Enum):
    """compare 결과"""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@total_ordering
@dataclass(frozen=True, eq=True)
class Ordinal:
    """CNF 순서수 ω^a₁·n₁ + … + ω^a_k·n_k"""

    terms: Tuple[Term, ...] = ()

    @classmethod
    def finite(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError(f"negative ordinal: {n}")
        return cls() if n == 0 else cls(((ZERO, n),))

    @classmethod
    def from_terms(cls, terms: Iterable[Term]) -> "Ordinal":
        """임의 순서의 항 목록을 CNF로 정규화 (왼쪽 흡수 적용)"""
        result = cls()
        for exponent, coefficient in terms:
            if coefficient < 0:
                raise ValueError(f"negative coefficient: {coefficient}")
            if coefficient:
                result = add(result, cls(((exponent, coefficient),)))
        return result

    # ------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return all(exponent.is_zero for exponent, _ in self.terms)

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO

    @property
    def leading_coefficient(self) -> int:
        return self.terms[0][1] if self.terms else 0

    @property
    def finite_part(self) -> int:
        """마지막 유한 항의 계수 (a = γ + m 에서 m)"""
        if self.is_successor:
            return self.terms[-1][1]
        return 0

    @property
    def limit_part(self) -> "Ordinal":
        """a = γ + m 에서 γ"""
        if self.is_successor:
            return Ordinal(self.terms[:-1])
        return self

    def as_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"not a finite ordinal: {self}")
        return self.terms[0][1] if self.terms else 0

    # ------------------------------------------------------------
    # 연산자
    # ------------------------------------------------------------
    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Ordinal.finite(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __add__(self, other: Union["Ordinal", int]) -> "Ordinal":
        return add(self, _coerce(other))

    def __radd__(self, other: int) -> "Ordinal":
        return add(_coerce(other), self)

    def __mul__(self, other: Union["Ordinal", int]) -> "Ordinal":
        return mul(self, _coerce(other))

    def __rmul__(self, other: int) -> "Ordinal":
        return mul(_coerce(other), self)

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


def _coerce(value: Union[Ordinal, int]) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int):
        return Ordinal.finite(value)
    raise TypeError(f"cannot use {type(value).__name__} as an ordinal")


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
W = Ordinal(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> Ordering:
    """
    CNF 항 열의 사전식 비교 (전개 없이 구조적으로)

    지수는 재귀적으로 비교하고, 같으면 계수를 비교합니다.
    한쪽 항이 먼저 끝나면 그쪽이 작습니다.
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        order = compare(ea, eb)
        if order is not Ordering.EQUAL:
            return order
        if ca != cb:
            return Ordering.LESS if ca < cb else Ordering.GREATER
    if len(a.terms) == len(b.terms):
        return Ordering.EQUAL
    return Ordering.LESS if len(a.terms) < len(b.terms) else Ordering.GREATER


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """
    순서수 덧셈 a + b

    b의 선두 지수보다 작은 a의 항은 흡수되고,
    같은 지수는 계수가 합쳐집니다.
    """
    if b.is_zero:
        return a
    head_exponent, head_coefficient = b.terms[0]
    kept = []
    for exponent, coefficient in a.terms:
        order = compare(exponent, head_exponent)
        if order is Ordering.GREATER:
            kept.append((exponent, coefficient))
        elif order is Ordering.EQUAL:
            kept.append((exponent, coefficient + head_coefficient))
            return Ordinal(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """
    순서수 곱셈 a · b

    오른쪽 인수의 항별로 분배합니다:
    - 유한 항 c: a의 선두 계수만 c배
    - ω^e·c (e > 0): ω^(선두 지수 + e)·c
    """
    if a.is_zero or b.is_zero:
        return ZERO
    lead_exponent, lead_coefficient = a.terms[0]
    result = ZERO
    for exponent, coefficient in b.terms:
        if exponent.is_zero:
            piece = Ordinal(((lead_exponent, lead_coefficient * coefficient),) + a.terms[1:])
        else:
            piece = Ordinal(((add(lead_exponent, exponent), coefficient),))
        result = add(result, piece)
    return result


def omega_pow(a: Ordinal) -> Ordinal:
    """ω^a (단일 항 CNF)"""
    return Ordinal(((a, 1),))


def format_ordinal(a: Ordinal) -> str:
    """
    정규 CNF 문자열 (공백 없음)

    지수는 유한이거나 정확히 w일 때만 괄호 없이 씁니다.
    예: w^2*3+w+1, w^(w+5)+1, w^w
    """
    if a.is_zero:
        return "0"
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        if exponent == ONE:
            base = "w"
        elif exponent.is_finite or exponent == W:
            base = f"w^{format_ordinal(exponent)}"
        else:
            base = f"w^({format_ordinal(exponent)})"
        parts.append(base if coefficient == 1 else f"{base}*{coefficient}")
    return "+".join(parts)
