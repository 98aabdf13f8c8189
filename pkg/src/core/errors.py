"""
도메인 예외 계층

CLI는 이 예외들을 종료 코드 3으로, REST 계층은 HTTP 4xx로 변환합니다.
"""
from typing import Any, Optional


class DimTypeError(Exception):
    """모든 도메인 예외의 기반 클래스"""


class ParseError(DimTypeError):
    """
    텍스트 파싱 실패

    Attributes:
        text: 입력 전체
        position: 실패 위치 (0부터)
    """

    kind = "expression"

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{self.kind} syntax error at position {position}: {message}")


class ExprSyntaxError(ParseError):
    kind = "expression"


class OrdinalSyntaxError(ParseError):
    kind = "ordinal"


class DomainError(DimTypeError, ValueError):
    """연산의 사전 조건 위반 (극한 순서수, 범위 밖 레벨 등)"""


class ZeroOrdinalError(DomainError, ArithmeticError):
    """0 순서수 (빈 공간). rank는 관례상 0"""

    rank = 0


class NonCompactError(DomainError):
    """컴팩트하지 않은 입력. 증인이 되는 항목을 함께 보관합니다."""

    def __init__(self, message: str, witness: Any = None):
        self.witness = witness
        super().__init__(message)


class SchemaError(DimTypeError):
    """형식이 잘못된 임베딩 스키마 (비단조 링 할당 등)"""


class UnknownVerdictError(DimTypeError):
    """열거/분해 도중 unknown 판정을 만남"""

    def __init__(self, message: str, pair: Optional[tuple] = None):
        self.pair = pair
        super().__init__(message)
