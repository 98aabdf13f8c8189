"""
순서수 문법 파서

문법 (공백 허용, "ω"는 "w"의 별칭):
    ord  := prod ("+" prod)*
    prod := atom ("*" atom)*
    atom := nat | "w" ("^" atom)? | "(" ord ")"

CNF 순서를 어긴 입력("w+w^2")도 받아서 정규화합니다. 중첩 깊이는 MAX_NESTING 으로 제한됩니다.
"""
from src.config.settings import get_settings
from src.core.errors import OrdinalSyntaxError
from src.core.ordinal.notation import ONE, Ordinal, add, format_ordinal, mul, omega_pow

__all__ = ["parse_ordinal", "format_ordinal"]


class _OrdinalParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0
        self.max_depth = get_settings().max_nesting

    def fail(self, message: str) -> OrdinalSyntaxError:
        return OrdinalSyntaxError(message, self.text, self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def parse(self) -> Ordinal:
        value = self.ord()
        if self.peek():
            raise self.fail(f"unexpected {self.peek()!r}")
        return value

    def ord(self) -> Ordinal:
        value = self.prod()
        while self.eat("+"):
            value = add(value, self.prod())
        return value

    def prod(self) -> Ordinal:
        value = self.atom()
        while self.eat("*"):
            value = mul(value, self.atom())
        return value

    def atom(self) -> Ordinal:
        self.depth += 1
        if self.depth > self.max_depth:
            raise self.fail(f"nesting deeper than {self.max_depth}")
        try:
            return self.primary()
        finally:
            self.depth -= 1

    def primary(self) -> Ordinal:
        char = self.peek()
        if char in ("w", "ω"):
            self.pos += 1
            if self.eat("^"):
                return omega_pow(self.atom())
            return omega_pow(ONE)
        if char == "(":
            self.pos += 1
            value = self.ord()
            if not self.eat(")"):
                raise self.fail("expected ')'")
            return value
        if char and char in "0123456789":
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
                self.pos += 1
            return Ordinal.finite(int(self.text[start:self.pos]))
        if not char:
            raise self.fail("unexpected end of input")
        raise self.fail(f"unexpected {char!r}")


def parse_ordinal(text: str) -> Ordinal:
    """
    순서수 텍스트 파싱

    Args:
        text: 예) "w^2*3+w+1", "w^(w+5)+1", "1+w"

    Returns:
        Ordinal: CNF 값

    Raises:
        OrdinalSyntaxError: 문법 오류 (위치 포함)
    """
    return _OrdinalParser(text).parse()
