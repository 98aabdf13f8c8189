"""
임베딩 반박 (obstruction)

각 종류는 그 자체로 임베딩 불가능성을 함의합니다:
- rank: rank(x) > rank(y)
- top-point-count: 어떤 레벨 r 에서 국소 rank ≥ r 인 점의 수가 x 쪽이 더 많음
- ring-spill / compact-local: x 의 원뿔 성분 c 의 접착점은 y 안에서 국소 rank ≥ rank(c) 인
  점, 즉 rank ≥ rank(c) 인 원뿔 자리 d 의 접착점으로 가야 하는데(C1), 모든 자리 d 에서
  c 링의 한 항목이 d 의 유한 개 링에 들어가지 못함(C2).
  자리들이 모두 컴팩트하고 넘치는 항목이 ω 개이면 compact-local
- capacity: 안쪽 자리에는 모두 넘치는 원뿔 성분들이 최상위 성분의 접착점을 나눠 써야 하는데
  그 사본 수가 받을 수 있는 최상위 접착점 수보다 많음 (Hall 조건 위반).
  어느 보조정리도 맞지 않는 분배 실패는 basis="search" 로 표시하고 탐색으로 확인
- layer-signature: 층 서명이 달라 위상동형이 아님 (양방향 질의 전용)
"""
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from src.core.space.derive import is_compact, iterate_derivative, layer_signature, point_count
from src.core.space.expr import (
    OMEGA,
    Lim,
    Mult,
    Omega,
    SpaceExpr,
    entry_key,
    format_expr,
    format_mult,
    mult_add,
    rank,
)
from src.core.space.normalize import components, normalize
from src.core.space.parser import parse_expr
from src.core.embed.engine import EmbeddingEngine, format_entries
from src.models.verdict import Answer, Obstruction
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Hall 조건을 전수로 확인할 최상위 호스트 수 상한
HALL_HOST_LIMIT = 10


def _count_value(count) -> Any:
    return "w" if isinstance(count, Omega) else count


def _parse_count(value: Any) -> Mult:
    return OMEGA if value == "w" else int(value)


def level_counts(e: SpaceExpr) -> List[Any]:
    """레벨 r = 1..rank 에서 국소 rank ≥ r 인 점의 수"""
    e = normalize(e)
    return [point_count(iterate_derivative(e, r - 1)) for r in range(1, rank(e) + 1)]


def glue_sites(y: SpaceExpr) -> Dict[SpaceExpr, Mult]:
    """
    y 안의 원뿔 자리와 그 접착점 개수

    최상위 성분은 자기 중복도만큼, tail 구성원(어느 깊이든)은 모든 링에
    나타나므로 ω 개입니다.
    """
    sites: Dict[SpaceExpr, Mult] = {}

    def visit(c: SpaceExpr, count: Mult) -> None:
        if not isinstance(c, Lim):
            return
        if count is OMEGA and sites.get(c) is OMEGA:
            return
        sites[c] = mult_add(sites.get(c, 0), count)
        for member, _ in c.tail.entries:
            visit(member, OMEGA)

    for c, b in components(y):
        visit(c, b)
    return dict(sorted(sites.items(), key=lambda item: entry_key((item[0], 1)), reverse=True))


def non_compact_points(e: SpaceExpr) -> List[Any]:
    """
    레벨 r = 2..rank 에서 컴팩트 근방이 없는 국소 rank r 인 점의 수

    그런 점은 컴팩트가 아닌 원뿔 자리의 접착점입니다.
    """
    e = normalize(e)
    counts: List[Mult] = [0] * max(rank(e) - 1, 0)
    for d, count in glue_sites(e).items():
        if not is_compact(d):
            counts[rank(d) - 2] = mult_add(counts[rank(d) - 2], count)
    return [_count_value(c) for c in counts]


def rank_obstruction(x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    if rank(x) > rank(y):
        return Obstruction(kind="rank", evidence={"source_rank": rank(x), "target_rank": rank(y)})
    return None


def count_obstruction(x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    """레벨별 점 개수 단조성 위반"""
    xs, ys = level_counts(x), level_counts(y)
    for level, (cx, cy) in enumerate(zip(xs, ys), start=1):
        if cy is OMEGA:
            continue
        if cx is OMEGA or cx > cy:
            return Obstruction(
                kind="top-point-count",
                evidence={
                    "level": level,
                    "source_points": _count_value(cx),
                    "target_points": _count_value(cy),
                },
            )
    return None


def quick_refute(x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    """탐색 없이 바로 쓰는 반박 (rank, 레벨별 점 개수)"""
    x, y = normalize(x), normalize(y)
    return rank_obstruction(x, y) or count_obstruction(x, y)


def _spill_entry(engine: EmbeddingEngine, c: Lim, d: Lim) -> Optional[Tuple[SpaceExpr, Any]]:
    """c 의 링 항목 중 d 의 유한 개 링에 들어가지 못하는 것"""
    for k, a in c.tail.entries:
        answers = [answer for _, answer in engine.host_candidates(k, a, d)]
        if all(answer is Answer.NO for answer in answers):
            return k, a
    return None


def _sites_for(c: Lim, sites: Dict[SpaceExpr, Mult]) -> List[SpaceExpr]:
    return [d for d in sites if rank(d) >= rank(c)]


def spill_obstruction(engine: EmbeddingEngine, x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    """원뿔 성분이 들어갈 수 있는 모든 접착점 자리에서의 링 넘침"""
    x, y = normalize(x), normalize(y)
    sites = glue_sites(y)
    for c, _ in sorted(components(x), key=entry_key, reverse=True):
        if not isinstance(c, Lim):
            continue
        targets = _sites_for(c, sites)
        failures = []
        for d in targets:
            spill = _spill_entry(engine, c, d)
            if spill is None:
                break
            failures.append({"target": format_expr(d), "entry": format_expr(spill[0]), "mult": format_mult(spill[1])})
        else:
            compact_local = (
                bool(targets)
                and not is_compact(c)
                and all(is_compact(d) for d in targets)
                and all(item["mult"] == "w" for item in failures)
            )
            return Obstruction(
                kind="compact-local" if compact_local else "ring-spill",
                evidence={"source": format_expr(c), "rank": rank(c), "targets": failures},
            )
    return None


def _bound_hosts(engine: EmbeddingEngine, c: Lim, y: SpaceExpr) -> Optional[FrozenSet[SpaceExpr]]:
    """
    c 의 접착점이 갈 수 있는 최상위 성분들

    넘치지 않는 자리 중 ω 개 나타나는 것이 있으면 None (자리가 무한).
    """
    tops = dict(components(y))
    hosts = set()
    for d, count in glue_sites(y).items():
        if rank(d) < rank(c) or _spill_entry(engine, c, d) is not None:
            continue
        if count is OMEGA or tops.get(d) != count:
            return None
        hosts.add(d)
    return frozenset(hosts)


def hall_obstruction(engine: EmbeddingEngine, x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    """
    접착점 자리 부족

    호스트 집합 N 마다, 갈 곳이 N 안에 갇힌 원뿔 성분들의 사본 수가
    N 의 사본 수 합보다 많은지 봅니다.
    """
    x, y = normalize(x), normalize(y)
    tops = dict(components(y))
    bound: Dict[SpaceExpr, Tuple[Mult, FrozenSet[SpaceExpr]]] = {}
    for c, a in components(x):
        if isinstance(c, Lim):
            hosts = _bound_hosts(engine, c, y)
            if hosts is not None:
                bound[c] = (a, hosts)
    if not bound:
        return None
    universe = sorted(frozenset().union(*(hosts for _, hosts in bound.values())), key=lambda d: entry_key((d, 1)))
    if len(universe) > HALL_HOST_LIMIT:
        logger.debug("hall_check_skipped", hosts=len(universe))
        return None
    for size in range(len(universe) + 1):
        for chosen in combinations(universe, size):
            allowed = set(chosen)
            sources = [(c, a) for c, (a, hosts) in bound.items() if hosts <= allowed]
            if not sources:
                continue
            needed: Mult = 0
            for _, a in sources:
                needed = mult_add(needed, a)
            available = sum(tops[d] for d in chosen)
            if needed is OMEGA or needed > available:
                return Obstruction(
                    kind="capacity",
                    evidence={
                        "basis": "glue-slots",
                        "sources": [
                            {"component": format_expr(c), "mult": format_mult(a)}
                            for c, a in sorted(sources, key=entry_key)
                        ],
                        "hosts": [{"host": format_expr(d), "mult": tops[d]} for d in chosen],
                        "needed": _count_value(needed),
                        "available": available,
                    },
                )
    return None


def diagnose(engine: EmbeddingEngine, x: SpaceExpr, y: SpaceExpr) -> Obstruction:
    """
    탐색이 no 로 끝난 쌍의 반박 생성

    rank → 점 개수 → 링 넘침 → 접착점 자리 순으로 시도하고,
    모두 아니면 탐색 기반 capacity.
    """
    found = quick_refute(x, y) or spill_obstruction(engine, x, y) or hall_obstruction(engine, x, y)
    if found is not None:
        return found
    logger.debug("search_capacity_obstruction", source=format_expr(normalize(x)), target=format_expr(normalize(y)))
    return Obstruction(
        kind="capacity",
        evidence={
            "basis": "search",
            "source": format_entries(components(x)),
            "target": format_entries(components(y)),
        },
    )


def signature_obstruction(x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    sx, sy = layer_signature(x), layer_signature(y)
    if sx != sy:
        return Obstruction(kind="layer-signature", evidence={"source": sx, "target": sy})
    return None


def local_compactness_obstruction(x: SpaceExpr, y: SpaceExpr) -> Optional[Obstruction]:
    """컴팩트 근방이 없는 점의 레벨별 개수가 다름 (위상동형 불변량)"""
    sx, sy = non_compact_points(x), non_compact_points(y)
    if sx != sy:
        return Obstruction(kind="compact-local", evidence={"non_compact_points": {"source": sx, "target": sy}})
    return None


def _check_spill(engine: EmbeddingEngine, x: SpaceExpr, y: SpaceExpr, evidence: Dict[str, Any]) -> bool:
    c = parse_expr(evidence["source"])
    if not isinstance(c, Lim) or c not in dict(components(x)):
        return False
    listed = {item["target"]: item for item in evidence["targets"]}
    for d in _sites_for(c, glue_sites(y)):
        item = listed.get(format_expr(d))
        if item is None:
            return False
        k = parse_expr(item["entry"])
        a = _parse_count(item["mult"])
        if dict(c.tail.entries).get(k) != a:
            return False
        if any(answer is not Answer.NO for _, answer in engine.host_candidates(k, a, d)):
            return False
    return True


def _check_hall(engine: EmbeddingEngine, x: SpaceExpr, y: SpaceExpr, evidence: Dict[str, Any]) -> bool:
    tops = dict(components(y))
    hosts: Dict[SpaceExpr, int] = {}
    for item in evidence["hosts"]:
        d = parse_expr(item["host"])
        if tops.get(d) != item["mult"] or tops[d] is OMEGA:
            return False
        hosts[d] = item["mult"]
    top_components = dict(components(x))
    needed: Mult = 0
    for item in evidence["sources"]:
        c = parse_expr(item["component"])
        a = _parse_count(item["mult"])
        if not isinstance(c, Lim) or top_components.get(c) != a:
            return False
        reachable = _bound_hosts(engine, c, y)
        if reachable is None or not reachable <= set(hosts):
            return False
        needed = mult_add(needed, a)
    available = sum(hosts.values())
    return needed is OMEGA or needed > available


def check_obstruction(engine: EmbeddingEngine, x: SpaceExpr, y: SpaceExpr, obstruction: Obstruction) -> bool:
    """
    반박을 그 근거 보조정리로 다시 확인

    구조적 종류는 기록된 항목이 대상 링에 들어가지 못함을 엔진의 항목 단위 질의로
    다시 확인합니다. basis="search" 인 capacity 만 전체 탐색을 다시 돌립니다.
    """
    x, y = normalize(x), normalize(y)
    kind, evidence = obstruction.kind, obstruction.evidence
    if kind == "rank":
        return rank(x) > rank(y)
    if kind == "top-point-count":
        if "level" not in evidence:
            return level_counts(x) != level_counts(y)
        return count_obstruction(x, y) is not None
    if kind == "layer-signature":
        return layer_signature(x) != layer_signature(y)
    if kind == "compact-local" and "source_compact" in evidence:
        return is_compact(x) != is_compact(y)
    if kind == "compact-local" and "non_compact_points" in evidence:
        return non_compact_points(x) != non_compact_points(y)
    if kind in ("ring-spill", "compact-local"):
        return _check_spill(engine, x, y, evidence)
    if kind == "capacity" and evidence.get("basis") == "glue-slots":
        return _check_hall(engine, x, y, evidence)
    if kind == "capacity":
        answer, _ = engine.embed(x, y)
        return answer is Answer.NO
    return False
