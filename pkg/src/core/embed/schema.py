"""
임베딩 스키마 검증

유효한 스키마의 조건 (모든 Lim 노드에서 재귀적으로):
- C1 rank 존중: 국소 rank r 인 점은 국소 rank ≥ r 인 점으로
- C2 넘침 없음: 원천 링 하나는 유한 개(width)의 대상 링으로
- C3 공종성: slope ≥ 1 이라 원천 링은 결국 모든 대상 링 번호를 넘어섬
- C4 용량: 유한 구성원에 놓인 사본 수 ≤ 중복도 × width
"""
from typing import Dict, List, Optional, Tuple

from src.core.errors import DimTypeError, SchemaError
from src.core.space.expr import OMEGA, POINT, Counter, Entry, Lim, Mult, Point, SpaceExpr, Sum, mult_add, rank
from src.core.space.normalize import components, germs, normalize
from src.core.space.parser import parse_expr
from src.models.verdict import EmbeddingSchema, Hosting
from src.utils.logger import get_logger

logger = get_logger(__name__)

Entries = Tuple[Entry, ...]


def _parse_mult(text: str) -> Mult:
    if text == "w":
        return OMEGA
    try:
        value = int(text)
    except ValueError as exc:
        raise SchemaError(f"bad multiplicity {text!r}") from exc
    if value < 1:
        raise SchemaError(f"multiplicity must be positive, got {value}")
    return value


def _parse(text: str) -> SpaceExpr:
    try:
        return parse_expr(text)
    except DimTypeError as exc:
        raise SchemaError(f"bad expression in schema: {text!r}") from exc


def _validate_shape(schema: EmbeddingSchema) -> None:
    """형식 검사. 음수 값이나 비단조 링 할당은 SchemaError"""
    if schema.rest_rings < 0:
        raise SchemaError("rest_rings must be non-negative")
    ring = schema.ring_assignment
    if ring is not None:
        if ring.base < 0 or ring.slope < 0 or ring.width < 0:
            raise SchemaError("ring assignment values must be non-negative")
        if ring.slope < ring.width:
            raise SchemaError(
                f"non-monotone ring assignment: slope {ring.slope} < width {ring.width}"
            )
    for hosting in schema.hosting + schema.rest:
        if hosting.slot is not None and hosting.slot < 0:
            raise SchemaError("slot must be non-negative")
        if hosting.via is not None:
            _validate_shape(hosting.via)
    if schema.pointed is not None:
        _validate_shape(schema.pointed)


def _load_entries(load: SpaceExpr) -> Entries:
    """배치 문자열로 적힌 다중집합의 항목 (흡수 없이 그대로)"""
    if isinstance(load, Sum):
        return load.entries
    return ((load, 1),)


def _covered(hostings: List[Hosting]) -> Dict[SpaceExpr, Mult]:
    """배치들이 덮는 원천 성분과 개수"""
    total: Dict[SpaceExpr, Mult] = {}
    for hosting in hostings:
        member = _parse(hosting.member)
        if hosting.load == "all" and hosting.slot is not None:
            for c, a in _load_entries(member):
                total[c] = mult_add(total.get(c, 0), a)
        else:
            total[member] = mult_add(total.get(member, 0), _parse_mult(hosting.mult))
    return total


def _same_multiset(entries: Entries, total: Dict[SpaceExpr, Mult]) -> bool:
    return dict(entries) == total


class _Checker:
    def check(self, xs: Entries, target: SpaceExpr, schema: EmbeddingSchema) -> bool:
        mode = schema.mode
        if mode == "empty":
            return not xs
        if mode == "point":
            return xs == ((POINT, 1),) and isinstance(target, Point)
        if mode == "sum":
            return self.check_sum(xs, components(target), schema)
        if not isinstance(target, Lim):
            return False
        if mode == "rings":
            return self.check_rings(xs, target, schema)
        if mode == "glue":
            return self.check_glue(xs, target, schema)
        if mode == "pointed":
            return len(xs) == 1 and xs[0][1] == 1 and self.check_pointed(xs[0][0], target, schema)
        return False

    def check_via(self, load: Entries, host: SpaceExpr, via: Optional[EmbeddingSchema]) -> bool:
        if via is None:
            return False
        # C1
        if max((rank(c) for c, _ in load), default=0) > rank(host):
            return False
        return self.check(load, host, via)

    def check_sum(self, xs: Entries, ys: Entries, schema: EmbeddingSchema) -> bool:
        hosts = dict(ys)
        used_slots = set()
        for hosting in schema.hosting:
            host = _parse(hosting.host)
            if host not in hosts:
                return False
            member = _parse(hosting.member)
            if hosting.load == "single":
                if hosts[host] is not OMEGA:
                    return False
                if not self.check_via(((member, 1),), host, hosting.via):
                    return False
            else:
                count = hosts[host]
                if count is OMEGA or hosting.slot is None or hosting.slot >= count:
                    return False
                if (host, hosting.slot) in used_slots:
                    return False
                used_slots.add((host, hosting.slot))
                if not self.check_via(_load_entries(member), host, hosting.via):
                    return False
        if len(ys) == 1 and ys[0][1] == 1:
            return False
        return _same_multiset(xs, _covered(schema.hosting))

    def check_rings(self, xs: Entries, d: Lim, schema: EmbeddingSchema) -> bool:
        members = dict(d.tail.entries)
        for hosting in schema.hosting:
            host = _parse(hosting.host)
            if host not in members or hosting.load != "single":
                return False
            if not self.check_via(((_parse(hosting.member), 1),), host, hosting.via):
                return False
        return _same_multiset(xs, _covered(schema.hosting))

    def check_finite_rings(self, entries: Entries, d: Lim, hostings: List[Hosting], width: int) -> bool:
        """
        항목들이 d 의 링 width 개 안에 들어가는지 (C2, C4)

        slot 이 있는 all 배치는 유한 구성원 사본 하나에 묶인 다중집합입니다.
        """
        members = dict(d.tail.entries)
        demand: Dict[SpaceExpr, int] = {}
        used_slots = set()
        for hosting in hostings:
            host = _parse(hosting.host)
            if host not in members:
                return False
            member = _parse(hosting.member)
            mult = _parse_mult(hosting.mult)
            mu = members[host]
            if hosting.load == "all" and hosting.slot is not None:
                if mu is OMEGA or (host, hosting.slot) in used_slots:
                    return False
                used_slots.add((host, hosting.slot))
                load = _load_entries(member)
                demand[host] = demand.get(host, 0) + 1
            elif hosting.load == "single":
                if mult is OMEGA and mu is not OMEGA:
                    return False
                load = ((member, 1),)
                if mu is not OMEGA:
                    demand[host] = demand.get(host, 0) + mult
            else:
                if mu is OMEGA:
                    return False
                load = ((member, mult),)
                demand[host] = demand.get(host, 0) + 1
            if not self.check_via(load, host, hosting.via):
                return False
        # C4
        for host, count in demand.items():
            if count > members[host] * width:
                return False
        return _same_multiset(entries, _covered(hostings))

    def check_pointed(self, e: SpaceExpr, d: Lim, schema: EmbeddingSchema) -> bool:
        if _parse(schema.source) != e:
            return False
        if isinstance(e, Point):
            return True
        # C1
        if not isinstance(e, Lim) or rank(e) > rank(d):
            return False
        ring = schema.ring_assignment
        # C2, C3
        if ring is None or ring.width < 1 or ring.slope < 1:
            return False
        return self.check_finite_rings(e.tail.entries, d, schema.hosting, ring.width)

    def check_glue(self, xs: Entries, d: Lim, schema: EmbeddingSchema) -> bool:
        if schema.glue is None or schema.pointed is None:
            return False
        e = _parse(schema.glue)
        top = dict(xs)
        if e in top:
            count = top[e]
            if count is OMEGA:
                rest = xs
            else:
                rest = Counter(dict(xs))
                rest.items[e] = count - 1
                if rest.items[e] == 0:
                    del rest.items[e]
                rest = rest.sorted_entries()
        elif any(e in germs(c) for c, _ in xs):
            rest = xs
        else:
            return False
        pointed = schema.pointed
        if pointed.ring_assignment is not None and pointed.ring_assignment.base < schema.rest_rings:
            return False
        if not self.check_pointed(e, d, pointed):
            return False
        if not schema.rest:
            return not rest
        return self.check_finite_rings(rest, d, schema.rest, schema.rest_rings)


def check_schema(x: SpaceExpr, y: SpaceExpr, schema: EmbeddingSchema) -> bool:
    """
    스키마가 C1–C4 를 만족하는지 재귀적으로 검사

    Args:
        x: 원천 표현식
        y: 대상 표현식
        schema: 검사할 스키마

    Returns:
        bool: 유효하면 True

    Raises:
        SchemaError: 형식이 잘못된 스키마 (음수, slope < width 등)
    """
    _validate_shape(schema)
    valid = _Checker().check(components(x), normalize(y), schema)
    logger.debug("schema_checked", mode=schema.mode, valid=valid)
    return valid

