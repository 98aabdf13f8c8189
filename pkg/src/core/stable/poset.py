"""
안정 타입 포셋 내보내기

레벨 ≤ n 의 모든 클래스를 노드로, decide_embed 의 하세(Hasse) 축약을 간선으로
하는 그래프를 DOT 또는 JSON 으로 출력합니다.
"""
from typing import Any, Dict, List, Optional

import networkx as nx

from src.core.errors import UnknownVerdictError
from src.core.embed.decide import decide_embed
from src.core.stable.enumerate import StableClass, TypeClassTable, get_table
from src.models.verdict import Answer


def build_poset(n: int, table: Optional[TypeClassTable] = None) -> nx.DiGraph:
    """
    레벨 ≤ n 클래스들의 임베딩 하세 그래프

    Raises:
        UnknownVerdictError: 판정되지 않는 쌍
    """
    table = table or get_table()
    classes = table.classes(n)

    graph = nx.DiGraph()
    for cls in classes:
        graph.add_node(cls.id, expr=cls.expr, level=cls.level)
    for source in classes:
        for target in classes:
            if source is target:
                continue
            answer = decide_embed(source.representative, target.representative, table.budget).answer
            if answer is Answer.UNKNOWN:
                raise UnknownVerdictError(
                    f"embedding undecided for {source.expr} and {target.expr}",
                    pair=(source.expr, target.expr),
                )
            if answer is Answer.YES:
                graph.add_edge(source.id, target.id)

    # 클래스끼리는 서로 같은 타입이 아니므로 비순환
    hasse = nx.transitive_reduction(graph)
    hasse.add_nodes_from(graph.nodes(data=True))
    return hasse


def _ordered(classes: List[StableClass]) -> Dict[str, int]:
    return {cls.id: i for i, cls in enumerate(classes)}


def poset_json(n: int, table: Optional[TypeClassTable] = None) -> Dict[str, Any]:
    """{"level", "classes": [{"id", "expr"}], "edges": [[i, j], ...]}"""
    table = table or get_table()
    classes = table.classes(n)
    position = _ordered(classes)
    hasse = build_poset(n, table)
    edges = sorted([position[u], position[v]] for u, v in hasse.edges())
    return {
        "level": n,
        "classes": [{"id": cls.id, "expr": cls.expr} for cls in classes],
        "edges": edges,
    }


def poset_dot(n: int, table: Optional[TypeClassTable] = None) -> str:
    """노드 라벨이 대표원 출력인 DOT 문서"""
    document = poset_json(n, table)
    lines = ["digraph stable {", "  rankdir=BT;"]
    for i, cls in enumerate(document["classes"]):
        lines.append(f'  n{i} [label="{cls["expr"]}"];')
    for u, v in document["edges"]:
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_export(n: int, fmt: str = "json", table: Optional[TypeClassTable] = None) -> Any:
    """
    포셋 문서

    Args:
        n: 최대 레벨
        fmt: "json" (dict) 또는 "dot" (str)
    """
    if fmt == "dot":
        return poset_dot(n, table)
    return poset_json(n, table)
