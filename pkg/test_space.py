"""
산재 공간 항 대수 테스트

🎯 테스트 시나리오:
1. 파싱 / 출력 / 문법 오류 위치
2. 정규화 (흡수, 평탄화, 멱등성)
3. 도함수, rank, 컴팩트성, 점 개수
4. 층, clopen 수렴 수열, 층 서명
5. 순서수 → 표현식

💡 사용 방법:
    pytest test_space.py -v
"""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.errors import DomainError, ExprSyntaxError, ZeroOrdinalError
from src.core.ordinal import parse_ordinal
from src.core.space import (
    D,
    EMPTY,
    OMEGA,
    POINT,
    G,
    I,
    Lim,
    Ring,
    Sum,
    derivative,
    format_expr,
    has_clopen_convergent,
    is_compact,
    iterate_derivative,
    layer,
    layer_signature,
    normalize,
    ord_to_expr,
    parse_expr,
    point_count,
    rank,
    rank_by_derivative,
)


def nf(text: str) -> str:
    return format_expr(normalize(parse_expr(text)))


# 작은 표현식 생성기 (hypothesis)
expressions = st.recursive(
    st.sampled_from([EMPTY, POINT, D]),
    lambda inner: st.one_of(
        inner.map(G),
        inner.map(I),
        st.lists(
            st.tuples(inner, st.sampled_from([1, 2, OMEGA])), min_size=1, max_size=3
        ).map(lambda entries: Sum(tuple(entries))),
    ),
    max_leaves=5,
)


# ============================================================
# 파싱 / 출력
# ============================================================


def test_parse_sugar():
    assert parse_expr("G(1)") == G(POINT)
    assert parse_expr("I(1)") == I(POINT)
    assert parse_expr("D") == D
    assert parse_expr("0") == EMPTY


def test_parse_keeps_structure():
    """파서는 정규화하지 않습니다"""
    e = parse_expr("lim({1*I(1)};{1*G(1)})")
    assert isinstance(e, Lim)
    assert e.prefix == (Ring(((I(POINT), 1),)),)
    assert format_expr(e) == "lim({1*I(1)};{1*G(1)})"


def test_format_uses_sugar():
    assert format_expr(Sum(((POINT, OMEGA),))) == "D"
    assert format_expr(G(I(POINT))) == "G(I(1))"
    assert format_expr(Lim((), Ring(((POINT, 2),)))) == "lim(;{2*1})"


@pytest.mark.parametrize(
    "text,position",
    [
        ("sum{0*1}", 4),
        ("G(1", 3),
        ("X", 0),
        ("G(1)x", 4),
    ],
)
def test_syntax_error_positions(text, position):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text)
    assert info.value.position == position
    assert info.value.text == text


@pytest.mark.parametrize("text", ["lim(;)", "lim(;{})", "sum{}", ""])
def test_syntax_error_on_empty_lists(text):
    with pytest.raises(ExprSyntaxError):
        parse_expr(text)


def test_deep_nesting_is_a_syntax_error():
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr("G(" * 5000 + "1" + ")" * 5000)
    assert "nesting deeper than" in str(info.value)


def test_nesting_within_limit_parses():
    text = "G(" * 40 + "1" + ")" * 40
    assert rank(parse_expr(text)) == 41


# ============================================================
# 정규화
# ============================================================


@pytest.mark.parametrize(
    "text,expected",
    [
        ("sum{2*1,w*1}", "D"),
        ("lim({1*G(1)};{1*G(1)})", "G(G(1))"),
        ("G(sum{3*1})", "G(1)"),
        ("sum{1*G(1),1*1}", "G(1)"),
        ("sum{1*G(1),w*1}", "sum{w*1,1*G(1)}"),
        ("sum{1*I(1),w*1}", "I(1)"),
        ("G(0)", "1"),
        ("lim({1*1};{1*0})", "sum{2*1}"),
        ("sum{1*0}", "0"),
        ("lim({1*I(1)};{1*G(1)})", "sum{1*I(1),1*G(G(1))}"),
    ],
)
def test_normalize_examples(text, expected):
    assert nf(text) == expected


def test_periodic_tail_merges_rings():
    e = Lim.periodic([], [Ring(((POINT, 1),)), Ring(((G(POINT), 1),))])
    assert format_expr(normalize(e)) == "G(G(1))"


def test_periodic_tail_needs_entries():
    with pytest.raises(ValueError):
        Lim.periodic([], [])


@given(expressions)
def test_normalize_is_idempotent(e):
    once = normalize(e)
    assert normalize(once) == once


@given(expressions)
def test_normalize_preserves_rank(e):
    assert rank(normalize(e)) == rank(e)


# ============================================================
# 도함수 / rank / 컴팩트성
# ============================================================


@pytest.mark.parametrize(
    "text,expected",
    [
        ("G(1)", "1"),
        ("I(1)", "1"),
        ("I(G(1))", "I(1)"),
        ("D", "0"),
        ("G(G(1))", "G(1)"),
        ("sum{w*G(1)}", "D"),
    ],
)
def test_derivative(text, expected):
    assert format_expr(derivative(parse_expr(text))) == expected


def test_iterate_derivative():
    assert iterate_derivative(parse_expr("G(G(1))"), 2) == POINT
    assert iterate_derivative(parse_expr("G(G(1))"), 3) == EMPTY


@pytest.mark.parametrize(
    "text,expected",
    [("0", 0), ("1", 1), ("D", 1), ("G(1)", 2), ("I(G(1))", 3), ("lim({1*I(G(1))};{1*1})", 3)],
)
def test_rank(text, expected):
    e = parse_expr(text)
    assert rank(e) == expected
    assert rank_by_derivative(e) == expected


@given(expressions)
def test_rank_agrees_with_derivative_iteration(e):
    assert rank(e) == rank_by_derivative(e)


@pytest.mark.parametrize(
    "text,expected",
    [("G(1)", True), ("I(1)", False), ("D", False), ("sum{3*1}", True), ("G(G(1))", True), ("0", True)],
)
def test_is_compact(text, expected):
    assert is_compact(parse_expr(text)) is expected


@pytest.mark.parametrize("text,expected", [("0", 0), ("sum{3*1}", 3), ("G(1)", OMEGA), ("D", OMEGA)])
def test_point_count(text, expected):
    assert point_count(parse_expr(text)) == expected


# ============================================================
# 층
# ============================================================


@pytest.mark.parametrize(
    "text,k,expected",
    [("G(G(1))", 2, "G(1)"), ("G(1)", 1, "G(1)"), ("I(1)", 2, "1")],
)
def test_layer(text, k, expected):
    assert format_expr(layer(parse_expr(text), k)) == expected


def test_layer_index_out_of_range():
    with pytest.raises(DomainError):
        layer(parse_expr("G(1)"), 3)
    with pytest.raises(DomainError):
        layer(parse_expr("G(1)"), 0)


@pytest.mark.parametrize(
    "text,expected",
    [("G(1)", True), ("I(1)", False), ("D", False), ("sum{w*G(1)}", True)],
)
def test_has_clopen_convergent(text, expected):
    assert has_clopen_convergent(parse_expr(text)) is expected


def test_has_clopen_convergent_needs_low_rank():
    with pytest.raises(DomainError):
        has_clopen_convergent(parse_expr("I(G(1))"))


@pytest.mark.parametrize(
    "text,expected",
    [("G(G(1))", [True, True]), ("I(1)", [False]), ("G(1)", [True]), ("1", [])],
)
def test_layer_signature(text, expected):
    assert layer_signature(parse_expr(text)) == expected


# ============================================================
# 순서수 → 표현식
# ============================================================


@pytest.mark.parametrize(
    "ordinal,expected",
    [
        ("w+1", "G(1)"),
        ("w^2*2+1", "sum{2*G(G(1))}"),
        ("w", "D"),
        ("w^2", "sum{w*G(1)}"),
        ("3", "sum{3*1}"),
        ("1", "1"),
    ],
)
def test_ord_to_expr(ordinal, expected):
    assert format_expr(ord_to_expr(parse_ordinal(ordinal))) == expected


def test_ord_to_expr_rejects_zero_and_transfinite_exponents():
    with pytest.raises(ZeroOrdinalError):
        ord_to_expr(parse_ordinal("0"))
    with pytest.raises(DomainError):
        ord_to_expr(parse_ordinal("w^w"))


def test_ord_to_expr_rank_matches_ordinal_rank():
    assert rank(ord_to_expr(parse_ordinal("w^3+w*2+1"))) == 4
