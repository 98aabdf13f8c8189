"""
CNF 순서수 산술 테스트

🎯 테스트 시나리오:
1. 파싱/출력 (CNF 정규화 포함)
2. 비교, 합, 곱, ω 거듭제곱
3. rank / 정준 컴팩트 타입 / E(a) 공식
4. 대수 법칙 (hypothesis)

💡 사용 방법:
    pytest test_ordinal.py
"""
import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from src.core.errors import DomainError, OrdinalSyntaxError, ZeroOrdinalError
from src.core.ordinal import (
    ONE,
    W,
    ZERO,
    Ordering,
    Ordinal,
    add,
    canonical_compact_type,
    cb_rank_of_ordinal,
    compare,
    embed_bound_E,
    format_ordinal,
    mul,
    omega_pow,
    parse_ordinal,
)


def o(text: str) -> Ordinal:
    return parse_ordinal(text)


@st.composite
def ordinals(draw, depth: int = 2):
    """깊이 ≤ depth 인 CNF 순서수"""
    if depth == 0:
        return Ordinal.finite(draw(st.integers(min_value=0, max_value=4)))
    terms = draw(
        st.lists(
            st.tuples(ordinals(depth - 1), st.integers(min_value=1, max_value=3)),
            max_size=3,
        )
    )
    return Ordinal.from_terms(sorted(terms, key=lambda term: term[0], reverse=True))


# ============================================================
# 파싱 / 출력
# ============================================================


def test_parse_cnf_terms():
    a = o("w^2*3+w+1")
    assert a.terms == ((Ordinal.finite(2), 3), (ONE, 1), (ZERO, 1))
    assert format_ordinal(a) == "w^2*3+w+1"


def test_parse_zero_and_absorption():
    assert o("0") == ZERO
    assert o("0").terms == ()
    assert o("1+w") == W


def test_parse_accepts_omega_symbol_and_spaces():
    assert o("ω ^ 2 + 1") == o("w^2+1")


def test_parse_non_cnf_order_is_normalized():
    assert format_ordinal(o("w+w^2")) == "w^2"


def test_parse_error_reports_position():
    with pytest.raises(OrdinalSyntaxError) as info:
        parse_ordinal("w^")
    assert info.value.position == 2


def test_deep_nesting_is_a_syntax_error():
    with pytest.raises(OrdinalSyntaxError) as info:
        parse_ordinal("(" * 5000 + "1" + ")" * 5000)
    assert "nesting deeper than" in str(info.value)
    with pytest.raises(OrdinalSyntaxError):
        parse_ordinal("w^" * 5000 + "1")


def test_format_parenthesizes_compound_exponents():
    assert format_ordinal(o("w^(w+5)+1")) == "w^(w+5)+1"
    assert format_ordinal(omega_pow(W)) == "w^w"


# ============================================================
# 산술
# ============================================================


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ("w", "w+1", Ordering.LESS),
        ("w^2", "w*5+3", Ordering.GREATER),
        ("w^w", "w^3*9", Ordering.GREATER),
        ("w*2+1", "w*2+1", Ordering.EQUAL),
    ],
)
def test_compare(a, b, expected):
    assert compare(o(a), o(b)) is expected


@pytest.mark.parametrize(
    "a,b,expected",
    [("1", "w", "w"), ("w", "1", "w+1"), ("w^2*2+w", "w^2", "w^2*3")],
)
def test_add(a, b, expected):
    assert format_ordinal(add(o(a), o(b))) == expected


@pytest.mark.parametrize(
    "a,b,expected",
    [("w", "2", "w*2"), ("2", "w", "w"), ("w+1", "w", "w^2"), ("w+1", "2", "w*2+1")],
)
def test_mul(a, b, expected):
    assert format_ordinal(mul(o(a), o(b))) == expected


def test_omega_pow():
    assert omega_pow(ZERO) == ONE
    assert omega_pow(ONE) == W
    assert format_ordinal(omega_pow(W)) == "w^w"


def test_operators_coerce_ints():
    assert W + 1 == o("w+1")
    assert 2 * W == W
    assert W < W + 1


# ============================================================
# rank / 정준형 / E
# ============================================================


@pytest.mark.parametrize("a,expected", [("w^3", "3"), ("w^3+1", "4"), ("w^2*5+w*3", "3"), ("1", "1")])
def test_cb_rank_of_ordinal(a, expected):
    assert format_ordinal(cb_rank_of_ordinal(o(a))) == expected


def test_cb_rank_of_zero_has_distinct_status():
    with pytest.raises(ZeroOrdinalError) as info:
        cb_rank_of_ordinal(ZERO)
    assert info.value.rank == 0


@pytest.mark.parametrize("a,alpha,n", [("w^2*3+w+1", "2", 3), ("1", "0", 1), ("w+1", "1", 1)])
def test_canonical_compact_type(a, alpha, n):
    exponent, coefficient = canonical_compact_type(o(a))
    assert format_ordinal(exponent) == alpha
    assert coefficient == n


def test_canonical_compact_type_rejects_limit():
    with pytest.raises(DomainError):
        canonical_compact_type(W)


@pytest.mark.parametrize("a,expected", [("0", "1"), ("1", "w^2+1"), ("w+2", "w^(w+5)+1"), ("3", "w^6+1")])
def test_embed_bound_E(a, expected):
    assert format_ordinal(embed_bound_E(o(a))) == expected


def test_embed_bound_E_of_zero_is_one():
    assert embed_bound_E(ZERO) == ONE


def test_embed_bound_E_finite_formula():
    for m in range(1, 6):
        assert embed_bound_E(Ordinal.finite(m)) == add(omega_pow(Ordinal.finite(2 * m)), ONE)


# ============================================================
# 법칙 (hypothesis)
# ============================================================


@hyp_settings(max_examples=200)
@given(ordinals(), ordinals(), ordinals())
def test_add_is_associative(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))


@hyp_settings(max_examples=200)
@given(ordinals(), ordinals(), ordinals())
def test_left_distributivity(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@hyp_settings(max_examples=200)
@given(ordinals(), ordinals(), ordinals())
def test_right_monotonicity_of_add(a, b, c):
    if b < a:
        assert add(b, c) <= add(a, c)


@given(ordinals(), ordinals())
def test_compare_is_antisymmetric(a, b):
    forward, backward = compare(a, b), compare(b, a)
    assert (forward is Ordering.EQUAL) == (backward is Ordering.EQUAL) == (a == b)
    assert (forward is Ordering.LESS) == (backward is Ordering.GREATER)


@given(ordinals(), ordinals(), ordinals())
def test_order_is_transitive(a, b, c):
    if a <= b and b <= c:
        assert a <= c


@given(ordinals(depth=3))
def test_format_parse_round_trip(a):
    assert parse_ordinal(format_ordinal(a)) == a
