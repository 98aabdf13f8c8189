"""
표현식 문법 파서

    expr     := "0" | "1" | "D" | "G(" expr ")" | "I(" expr ")"
              | "sum{" item ("," item)* "}" | "lim(" ringlist? ";" ring ")"
    item     := mult "*" expr
    mult     := nat | "w"
    ring     := "{" item ("," item)* "}"
    ringlist := ring ("," ring)*

파서는 입력 구조를 그대로 만들며 정규화는 normalize 가 담당합니다.
중첩 깊이는 MAX_NESTING 으로 제한됩니다.
"""
from typing import List, Tuple

from src.config.settings import get_settings
from src.core.errors import ExprSyntaxError
from src.core.space.expr import (
    D,
    EMPTY,
    OMEGA,
    POINT,
    Entry,
    Lim,
    Mult,
    Ring,
    SpaceExpr,
    Sum,
    format_expr,
)

__all__ = ["parse_expr", "format_expr"]

_DIGITS = "0123456789"


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.depth = 0
        self.max_depth = get_settings().max_nesting

    def fail(self, message: str) -> ExprSyntaxError:
        return ExprSyntaxError(message, self.text, self.pos)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str) -> None:
        self.peek()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos] if self.pos < len(self.text) else "end of input"
            raise self.fail(f"expected {token!r}, found {found!r}")
        self.pos += len(token)

    def accept(self, token: str) -> bool:
        self.peek()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def parse(self) -> SpaceExpr:
        expr = self.expr()
        if self.peek():
            raise self.fail(f"unexpected {self.peek()!r}")
        return expr

    def expr(self) -> SpaceExpr:
        self.depth += 1
        if self.depth > self.max_depth:
            raise self.fail(f"nesting deeper than {self.max_depth}")
        try:
            return self.term()
        finally:
            self.depth -= 1

    def term(self) -> SpaceExpr:
        char = self.peek()
        if char == "0":
            self.pos += 1
            return EMPTY
        if char == "1":
            self.pos += 1
            return POINT
        if char == "D":
            self.pos += 1
            return D
        if char in ("G", "I"):
            self.pos += 1
            self.expect("(")
            member = self.expr()
            self.expect(")")
            return Lim((), Ring(((member, 1 if char == "G" else OMEGA),)))
        if self.accept("sum"):
            self.expect("{")
            entries = self.items("}")
            return Sum(entries)
        if self.accept("lim"):
            self.expect("(")
            prefix: List[Ring] = []
            if self.peek() != ";":
                prefix.append(self.ring())
                while self.accept(","):
                    prefix.append(self.ring())
            self.expect(";")
            if self.peek() != "{":
                raise self.fail("lim needs a nonempty tail ring")
            tail = self.ring()
            self.expect(")")
            return Lim(tuple(prefix), tail)
        if not char:
            raise self.fail("unexpected end of input")
        raise self.fail(f"unexpected {char!r}")

    def ring(self) -> Ring:
        self.expect("{")
        return Ring(self.items("}"))

    def items(self, closer: str) -> Tuple[Entry, ...]:
        if self.peek() == closer:
            raise self.fail("empty entry list")
        entries = [self.item()]
        while self.accept(","):
            entries.append(self.item())
        self.expect(closer)
        return tuple(entries)

    def item(self) -> Entry:
        m = self.mult()
        self.expect("*")
        return self.expr(), m

    def mult(self) -> Mult:
        char = self.peek()
        if char in ("w", "ω"):
            self.pos += 1
            return OMEGA
        if char and char in _DIGITS:
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in _DIGITS:
                self.pos += 1
            value = int(self.text[start:self.pos])
            if value == 0:
                self.pos = start
                raise self.fail("multiplicity must be at least 1")
            return value
        raise self.fail("expected a multiplicity (natural number or 'w')")


def parse_expr(text: str) -> SpaceExpr:
    """
    표현식 텍스트 파싱

    Args:
        text: 예) "G(1)", "sum{w*1}", "lim({1*I(1)};{1*G(1)})"

    Returns:
        SpaceExpr: 정규화되지 않은 원래 구조

    Raises:
        ExprSyntaxError: 문법 오류 (위치 포함)
    """
    return _ExprParser(text).parse()
