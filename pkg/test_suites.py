"""
검증 스위트 테스트 (작은 크기로 실행)
"""
import pytest

from src.cli.suites import (
    SuiteSummary,
    derivative_rank,
    embed_corpus,
    family_xf,
    ordinal_laws,
    run_suite,
    small_successors,
    stable_counts,
)
from src.core.errors import DimTypeError
from src.models.verdict import Budget


@pytest.fixture
def budget():
    return Budget(slope=4, width=4)


def test_summary_text_and_failures():
    summary = SuiteSummary("demo")
    summary.check(True, lambda: "never")
    summary.check(False, lambda: "broken case")
    assert not summary.passed
    assert summary.text == "demo: 1/2 checks passed\n  FAIL broken case"
    assert summary.as_dict() == {"suite": "demo", "total": 2, "passed": 1, "failures": ["broken case"]}


def test_small_successors():
    successors = small_successors()
    assert len(successors) == 192
    assert all(a.is_successor for a in successors)
    assert successors == sorted(successors)


def test_ordinal_laws_pass():
    summary = ordinal_laws(seed=1, samples=200)
    assert summary.passed, summary.failures


def test_derivative_rank_pass():
    summary = derivative_rank(3)
    assert summary.passed, summary.failures


def test_ordinal_laws_check_E_of_zero_separately():
    summary = ordinal_laws(seed=0, samples=1)
    assert summary.passed, summary.failures
    assert summary.total >= 6


def test_embed_corpus_small(budget):
    summary = embed_corpus(budget, size_cap=2, unary_cap=3, seed=3, samples=200)
    assert summary.name == "embed-corpus"
    assert summary.passed, summary.failures


def test_run_suite_embed_corpus_uses_seed(monkeypatch, budget):
    calls = []

    def fake(budget, seed=0):
        calls.append(seed)
        return SuiteSummary("embed-corpus")

    monkeypatch.setattr("src.cli.suites.embed_corpus", fake)
    run_suite("embed-corpus", seed=7, budget=budget)
    assert calls == [7]


def test_stable_counts_pass(budget):
    summary = stable_counts(budget)
    assert summary.passed
    assert summary.text == "stable-counts: 2/2 expected counts matched"


def test_family_xf_short_prefixes(budget):
    summary = family_xf(budget, length=3)
    # 8 개 서명 + 28 쌍
    assert summary.total == 8 + 28
    assert summary.passed, summary.failures


def test_unknown_suite_name():
    with pytest.raises(DimTypeError):
        run_suite("no-such-suite")
