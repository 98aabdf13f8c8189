"""
증인 족 / 코퍼스 테스트

💡 사용 방법:
    pytest test_families.py -v
"""
import pytest

from src.core.errors import DomainError
from src.core.families import corpus, dag_size, family_Xf, parse_bits, subterms, witness_X
from src.core.space import format_expr, is_compact, layer_signature, normalize, parse_expr, rank


@pytest.mark.parametrize("m,expected", [(0, "1"), (1, "I(1)"), (2, "I(I(1))")])
def test_witness_X(m, expected):
    assert format_expr(witness_X(m)) == expected


def test_witness_X_rejects_negative():
    with pytest.raises(DomainError):
        witness_X(-1)


@pytest.mark.parametrize(
    "bits,expected",
    [
        ([0], "G(1)"),
        ([1], "I(1)"),
        ([0, 0], "lim(;{w*1,1*G(1)})"),
        ([0, 1], "I(G(1))"),
        ([1, 0], "G(I(1))"),
    ],
)
def test_family_Xf(bits, expected):
    assert format_expr(family_Xf(bits)) == expected


@pytest.mark.parametrize("bits", [[0, 1], [1, 0], [0, 1, 1], [1, 0, 0, 1]])
def test_family_Xf_layer_signature_matches_bits(bits):
    e = family_Xf(bits)
    assert rank(e) == len(bits) + 1
    assert layer_signature(e) == [bit == 0 for bit in bits]


def test_family_Xf_is_normalized_and_not_compact_with_omega_bit():
    e = family_Xf([0, 1, 0])
    assert normalize(e) == e
    assert not is_compact(e)


@pytest.mark.parametrize("bits", [[], [0, 2], [1, 1, 1]])
def test_family_Xf_rejects_bad_prefix(bits):
    with pytest.raises(DomainError):
        family_Xf(bits, cap=2)


@pytest.mark.parametrize("text,expected", [("0110", [0, 1, 1, 0]), ("0,1,1,0", [0, 1, 1, 0]), ("[1, 0]", [1, 0])])
def test_parse_bits(text, expected):
    assert parse_bits(text) == expected


@pytest.mark.parametrize("text", ["", "012", "ab"])
def test_parse_bits_rejects_garbage(text):
    with pytest.raises(DomainError):
        parse_bits(text)


@pytest.mark.parametrize(
    "text,expected", [("1", 1), ("G(1)", 2), ("lim(;{w*G(1),1*I(1)})", 4), ("sum{2*G(1),w*1}", 3)]
)
def test_dag_size(text, expected):
    assert dag_size(parse_expr(text)) == expected


def test_subterms_share_nodes():
    e = parse_expr("sum{1*G(1),1*I(G(1))}")
    assert parse_expr("G(1)") in subterms(e)
    assert dag_size(e) == 4


def test_corpus_small_cap():
    assert [format_expr(e) for e in corpus(2)] == ["0", "1", "D", "sum{2*1}", "G(1)", "I(1)"]


def test_corpus_is_deterministic_and_normalized():
    first = list(corpus(3))
    assert first == list(corpus(3))
    assert all(normalize(e) == e for e in first)
    assert len(set(first)) == len(first)
    assert max(dag_size(e) for e in first) <= 3
