"""
안정 차원 타입 테스트

🎯 테스트 시나리오:
1. 레벨별 클래스 수 (1: 두 개, 2: 다섯 개)
2. 안정성 판정과 분류
3. clopen 안정 분해
4. 포셋 (networkx 하세 그래프, JSON / DOT)

💡 사용 방법:
    pytest test_stable.py -v
"""
import random

import pytest

from src.core.errors import DomainError
from src.core.space import OMEGA, parse_expr
from src.core.stable import (
    TypeClassTable,
    build_poset,
    enumerate_stable,
    is_stable,
    poset_dot,
    poset_export,
    poset_json,
    stable_decompose,
    tail_only,
    thinning_preserves_type,
)
from src.models.verdict import Answer, Budget


@pytest.fixture(scope="module")
def table():
    return TypeClassTable(Budget(slope=4, width=4), max_level=2)


# ============================================================
# 열거
# ============================================================


def test_level_zero_is_the_point(table):
    (point,) = enumerate_stable(0, table)
    assert point.id == "L0.0"
    assert point.expr == "1"
    assert str(point.descriptor) == "L0[]"


def test_level_one_has_two_classes(table):
    classes = enumerate_stable(1, table)
    assert [cls.expr for cls in classes] == ["G(1)", "I(1)"]
    assert [cls.id for cls in classes] == ["L1.0", "L1.1"]
    assert str(classes[1].descriptor) == "L1[w*L0.0]"


def test_level_two_has_five_classes(table):
    classes = enumerate_stable(2, table)
    assert len(classes) == 5
    assert [cls.expr for cls in classes] == [
        "G(G(1))",
        "G(I(1))",
        "I(G(1))",
        "I(I(1))",
        "lim(;{w*G(1),1*I(1)})",
    ]


def test_level_above_maximum(table):
    with pytest.raises(DomainError):
        table.level(3)
    with pytest.raises(DomainError):
        table.level(-1)


def test_level_three_decides_under_default_budget():
    classes = TypeClassTable(Budget(), max_level=3).level(3)
    assert classes
    assert len({cls.expr for cls in classes}) == len(classes)
    assert all(cls.id.startswith("L3.") for cls in classes)


def test_classes_upto(table):
    assert [cls.id for cls in table.classes(1)] == ["L0.0", "L1.0", "L1.1"]


# ============================================================
# 안정성 / 분류
# ============================================================


@pytest.mark.parametrize("text", ["G(1)", "I(1)", "G(I(1))", "lim(;{w*G(1),1*I(1)})"])
def test_cones_are_stable(text):
    assert is_stable(parse_expr(text)).answer is Answer.YES


def test_tail_only_drops_lower_components():
    assert tail_only(parse_expr("sum{1*I(1),1*G(G(1))}")) == parse_expr("G(G(1))")


def test_is_stable_needs_one_point_top():
    with pytest.raises(DomainError):
        is_stable(parse_expr("sum{2*G(1)}"))
    with pytest.raises(DomainError):
        is_stable(parse_expr("0"))


@pytest.mark.parametrize(
    "text,expected",
    [("lim(;{1*G(1),1*I(1)})", "G(I(1))"), ("lim(;{1*G(1),w*I(1)})", "I(I(1))"), ("I(1)", "I(1)")],
)
def test_classify(table, text, expected):
    assert table.classify(parse_expr(text)).expr == expected


def test_thinning_preserves_type_for_stable_classes(table):
    rng = random.Random(7)
    for cls in table.classes(2):
        assert thinning_preserves_type(cls.representative, rng, table.budget)


# ============================================================
# 분해
# ============================================================


def test_decompose_merges_multiplicities(table):
    parts = stable_decompose(parse_expr("sum{w*G(1),2*I(1),1*I(1)}"), table)
    assert [(cls.id, m) for cls, m in parts] == [("L1.0", OMEGA), ("L1.1", 3)]


def test_decompose_absorbs_points(table):
    parts = stable_decompose(parse_expr("sum{3*1,1*G(1)}"), table)
    assert [(cls.expr, m) for cls, m in parts] == [("G(1)", 1)]


def test_decompose_empty_space(table):
    with pytest.raises(DomainError):
        stable_decompose(parse_expr("0"), table)


# ============================================================
# 포셋
# ============================================================


def test_poset_level_one_is_a_chain(table):
    graph = build_poset(1, table)
    assert set(graph.edges()) == {("L0.0", "L1.0"), ("L1.0", "L1.1")}
    assert graph.nodes["L1.1"]["expr"] == "I(1)"


def test_poset_json(table):
    document = poset_json(1, table)
    assert document == {
        "level": 1,
        "classes": [
            {"id": "L0.0", "expr": "1"},
            {"id": "L1.0", "expr": "G(1)"},
            {"id": "L1.1", "expr": "I(1)"},
        ],
        "edges": [[0, 1], [1, 2]],
    }


def test_poset_dot(table):
    document = poset_dot(1, table)
    assert document.startswith("digraph stable {\n  rankdir=BT;\n")
    assert '  n1 [label="G(1)"];' in document
    assert "  n1 -> n2;" in document
    assert document.endswith("}\n")


def test_poset_export_dispatch(table):
    assert poset_export(1, "json", table) == poset_json(1, table)
    assert poset_export(1, "dot", table) == poset_dot(1, table)


def test_poset_level_two_is_acyclic(table):
    import networkx as nx

    graph = build_poset(2, table)
    assert nx.is_directed_acyclic_graph(graph)
    assert graph.number_of_nodes() == 8
