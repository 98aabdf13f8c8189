"""
명령줄 인터페이스 테스트

🎯 테스트 시나리오:
1. 값 명령 (norm, deriv, rank, canon, 순서수 명령)
2. 판정 명령의 종료 코드 (yes 0, no 1)
3. 사용법 / 도메인 오류 → 3
4. JSON 출력

💡 사용 방법:
    pytest test_cli.py -v
"""
import io
import json

import pytest

from src.cli.main import EXIT_NO, EXIT_OK, EXIT_USAGE, parse_budget, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["norm", "sum{2*1,w*1}"], "D"),
        (["deriv", "I(G(1))"], "I(1)"),
        (["deriv", "--times", "2", "G(G(1))"], "1"),
        (["rank", "G(G(1))"], "3"),
        (["compact", "I(1)"], "false"),
        (["canon", "sum{3*G(1),1*1}"], "w*3+1"),
        (["compactify", "D"], "G(1)"),
        (["upper", "I(1)"], "w^2+1"),
        (["ord-add", "w", "1"], "w+1"),
        (["ord-mul", "w+1", "w"], "w^2"),
        (["ord-cmp", "w^w", "w^3*9"], "greater"),
        (["ord-rank", "w^3+1"], "4"),
        (["ord-rank", "0"], "0 (empty space)"),
        (["E-bound", "w+2"], "w^(w+5)+1"),
        (["witness-x", "2"], "I(I(1))"),
        (["family-xf", "01"], "I(G(1))"),
    ],
)
def test_value_commands(argv, expected):
    code, out, _ = invoke(*argv)
    assert code == EXIT_OK
    assert out.strip() == expected


def test_embed_yes_and_no_exit_codes():
    code, out, _ = invoke("embed", "G(1)", "I(1)")
    assert code == EXIT_OK
    assert out.startswith("yes")

    code, out, _ = invoke("embed", "I(1)", "G(1)")
    assert code == EXIT_NO
    assert "obstruction: compact-local" in out


def test_homeo_json_output():
    code, out, _ = invoke("homeo", "G(G(1))", "lim({1*G(1)};{1*G(1)})", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["answer"] == "yes"


def test_layers_command():
    code, out, _ = invoke("layers", "G(G(1))")
    assert code == EXIT_OK
    assert out.splitlines() == ["signature: 1,1", "layer 1: sum{w*G(1)}", "layer 2: G(1)", "layer 3: 1"]


def test_stable_enum_and_decompose():
    code, out, _ = invoke("stable-enum", "1")
    assert code == EXIT_OK
    assert out.splitlines() == ["L1.0 G(1)", "L1.1 I(1)"]

    code, out, _ = invoke("decompose", "sum{w*G(1),1*I(1)}", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == [
        {"id": "L1.0", "expr": "G(1)", "mult": "w"},
        {"id": "L1.1", "expr": "I(1)", "mult": "1"},
    ]


def test_poset_dot():
    code, out, _ = invoke("poset", "1", "--dot")
    assert code == EXIT_OK
    assert out.startswith("digraph stable {")
    assert "n0 -> n1;" in out


def test_syntax_error_is_usage_error():
    code, _, err = invoke("norm", "sum{0*1}")
    assert code == EXIT_USAGE
    assert "multiplicity" in err


def test_deep_nesting_is_usage_error():
    code, _, err = invoke("rank", "G(" * 5000 + "1" + ")" * 5000)
    assert code == EXIT_USAGE
    assert "nesting" in err

    code, _, _ = invoke("E-bound", "w^(" * 5000 + "1" + ")" * 5000)
    assert code == EXIT_USAGE


def test_unknown_command_is_usage_error():
    code, _, _ = invoke("frobnicate")
    assert code == EXIT_USAGE


def test_domain_error_is_usage_error():
    code, _, err = invoke("canon", "I(1)")
    assert code == EXIT_USAGE
    assert "not compact" in err


def test_budget_option_before_and_after_command():
    assert invoke("--budget", "2,2", "embed", "G(1)", "I(1)")[0] == EXIT_OK
    assert invoke("embed", "G(1)", "I(1)", "--budget", "2,2,none")[0] == EXIT_OK


def test_parse_budget():
    budget = parse_budget("3,2,5")
    assert (budget.slope, budget.width, budget.depth) == (3, 2, 5)
    assert parse_budget("3,2").depth is None


def test_bad_budget_is_usage_error():
    assert invoke("--budget", "x", "rank", "1")[0] == EXIT_USAGE


def test_stable_enum_level_two_json():
    code, out, _ = invoke("stable-enum", "2", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == 5


def test_suite_stable_counts():
    code, out, _ = invoke("suite", "stable-counts")
    assert code == EXIT_OK
    assert out.strip() == "stable-counts: 2/2 expected counts matched"


def test_unknown_suite_is_usage_error():
    assert invoke("suite", "no-such-suite")[0] == EXIT_USAGE


def test_output_is_deterministic():
    first = invoke("sametype", "G(1)", "I(1)", "--format", "json")
    assert invoke("sametype", "G(1)", "I(1)", "--format", "json") == first
    assert first[0] == EXIT_NO
