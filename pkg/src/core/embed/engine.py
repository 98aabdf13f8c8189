"""
임베딩 탐색 엔진

🎯 목적:
- X ≤_E Y 를 증인 스키마와 함께 결정 (yes / no / unknown)

💡 탐색 구조 (정규형의 성분 단위):
1. 합 대상: ω 사본을 가진 대상 성분(pool)이 하나라도 받을 수 있는 원천 성분은
   모두 pool 로 보내고, 나머지는 유한 사본 슬롯들에 백트래킹으로 분배
2. 원뿔 대상 C(R):
   - rings: 접착점을 쓰지 않고 원천 성분마다 서로 다른 링의 구성원에
   - glue: 원천의 germ e 하나를 접착점에 (pointed), 나머지는 앞쪽 유한 개의 링에
3. pointed(e, C(R)): e 의 링 하나가 R 의 유한 개 사본에 들어가면 성립.
   원천 링 k 는 대상 링 블록 [base + w·k, base + w·k + w) 로

원천 성분은 통째로 대상 성분 하나에 들어간다고 가정해도 일반성을 잃지 않습니다
(접착점 근방이 성분 자신과 위상동형).

깊이 예산이 없으면 대상의 rank 에서 시작합니다. 재귀는 항상 더 낮은 rank 의
구성원으로 내려가므로 이 기본값에서는 깊이 때문에 unknown 이 나오지 않습니다.
"""
from collections import OrderedDict
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.config.settings import get_settings
from src.core.space.expr import (
    OMEGA,
    POINT,
    Counter,
    Entry,
    Lim,
    Mult,
    Point,
    SpaceExpr,
    entry_key,
    format_expr,
    format_mult,
    rank,
)
from src.core.space.normalize import assemble, components, germs
from src.models.verdict import Answer, Budget, EmbeddingSchema, Hosting, RingAssignment
from src.utils.logger import get_logger

logger = get_logger(__name__)

Entries = Tuple[Entry, ...]
Result = Tuple[Answer, Optional[EmbeddingSchema]]

YES, NO, UNKNOWN = Answer.YES, Answer.NO, Answer.UNKNOWN


class _NodeLimitReached(Exception):
    pass


def format_entries(entries: Entries) -> str:
    return format_expr(assemble(entries))


def _rank_of(entries: Entries) -> int:
    return max((rank(c) for c, _ in entries), default=0)


class _Memo:
    """항목 수 상한이 있는 LRU 메모"""

    def __init__(self, limit: int):
        self.limit = limit
        self._items: "OrderedDict[tuple, Result]" = OrderedDict()

    def __len__(self) -> int:
        return len(self._items)

    def get(self, key: tuple) -> Optional[Result]:
        found = self._items.get(key)
        if found is not None:
            self._items.move_to_end(key)
        return found

    def put(self, key: tuple, value: Result) -> None:
        self._items[key] = value
        self._items.move_to_end(key)
        if len(self._items) > self.limit:
            self._items.popitem(last=False)


class EmbeddingEngine:
    """
    임베딩 결정 엔진

    예산(Budget)별로 하나씩 만들어 메모를 공유합니다.
    탐색 결과는 결정적이며 메모는 (원천, 대상, 남은 깊이) 로 키를 잡습니다.
    메모 크기는 memo_size (기본: EMBED_MEMO_SIZE) 로 제한됩니다.
    """

    def __init__(self, budget: Budget, memo_size: Optional[int] = None):
        self.budget = budget
        self._memo = _Memo(memo_size or get_settings().embed_memo_size)
        logger.info("embedding_engine_initialized", memo_size=self._memo.limit, **budget.model_dump())

    @property
    def memo_entries(self) -> int:
        return len(self._memo)

    def _start_depth(self, target_rank: int) -> int:
        return self.budget.depth if self.budget.depth is not None else target_rank

    # ------------------------------------------------------------
    # 진입점
    # ------------------------------------------------------------
    def embed(self, x: SpaceExpr, y: SpaceExpr) -> Result:
        """
        정규화 가능한 두 표현식에 대해 x ≤_E y 탐색

        Returns:
            (Answer, 증인 스키마 또는 None)
        """
        return self.embed_entries(components(x), components(y))

    def embed_entries(self, xs: Entries, ys: Entries) -> Result:
        return self._embed_sum(xs, ys, self._start_depth(_rank_of(ys)))

    def embed_into_component(self, xs: Entries, d: SpaceExpr) -> Result:
        return self._embed_component(xs, d, self._start_depth(rank(d)))

    def pointed(self, e: SpaceExpr, d: SpaceExpr) -> Tuple[Answer, Optional[EmbeddingSchema]]:
        """germ e 의 접착점을 원뿔 d 의 접착점으로 보내는 임베딩"""
        return self._pointed(e, d, self._start_depth(rank(d)), 0)

    def host_candidates(self, c: SpaceExpr, a: Mult, d: Lim) -> List[Tuple[SpaceExpr, Answer]]:
        """원뿔 d 의 유한 개 링 안에서 항목 (c, a) 를 받을 수 있는 구성원별 답"""
        depth = self._start_depth(rank(d))
        found = []
        for m, mu in d.tail.entries:
            if mu is OMEGA:
                answer, _ = self._embed_component(((c, 1),), m, depth)
            else:
                load = ((c, OMEGA),) if a is OMEGA else ((c, 1),)
                answer, _ = self._embed_component(load, m, depth)
            found.append((m, answer))
        return found

    # ------------------------------------------------------------
    # 합 대상
    # ------------------------------------------------------------
    def _embed_sum(self, xs: Entries, ys: Entries, depth: int) -> Result:
        if not xs:
            return YES, EmbeddingSchema(source="0", target=format_entries(ys), mode="empty")
        if len(ys) == 1 and ys[0][1] == 1:
            return self._embed_component(xs, ys[0][0], depth)
        key = ("sum", xs, ys, depth)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        result = self._embed_sum_uncached(xs, ys, depth)
        self._memo.put(key, result)
        return result

    def _embed_sum_uncached(self, xs: Entries, ys: Entries, depth: int) -> Result:
        if not ys or _rank_of(xs) > _rank_of(ys):
            return NO, None
        pool = [d for d, b in ys if b is OMEGA]
        hosting: List[Hosting] = []
        remaining: List[Entry] = []
        uncertain = False
        for c, a in xs:
            placed = None
            for d in pool:
                answer, via = self._embed_component(((c, 1),), d, depth)
                if answer is YES:
                    placed = Hosting(
                        member=format_expr(c),
                        mult=format_mult(a),
                        host=format_expr(d),
                        host_mult="w",
                        load="single",
                        via=via,
                    )
                    break
                if answer is UNKNOWN:
                    uncertain = True
            if placed is not None:
                hosting.append(placed)
            else:
                remaining.append((c, a))

        if remaining:
            slots = [(d, b, i) for d, b in ys if b is not OMEGA for i in range(b)]
            answer, placement = self._distribute(tuple(remaining), slots, depth)
            if answer is not YES:
                if answer is NO and uncertain:
                    return UNKNOWN, None
                return answer, None
            hosting.extend(placement)

        return YES, EmbeddingSchema(
            source=format_entries(xs),
            target=format_entries(ys),
            mode="sum",
            hosting=hosting,
        )

    def _distribute(
        self,
        entries: Entries,
        slots: Sequence[Tuple[SpaceExpr, Mult, int]],
        depth: int,
    ) -> Tuple[Answer, List[Hosting]]:
        """
        남은 원천 성분을 유한 사본 슬롯들에 분배 (백트래킹)

        - 유한 개 사본은 하나씩, ω 개 사본은 한 슬롯에 통째로
        - 같은 성분의 사본은 슬롯 번호가 감소하지 않게 (대칭 제거)
        - 같은 대상의 빈 슬롯은 첫 번째 것만 시도
        """
        if not slots:
            return NO, []
        units: List[Entry] = []
        for c, a in sorted(entries, key=entry_key, reverse=True):
            if a is OMEGA:
                units.append((c, OMEGA))
            else:
                units.extend((c, 1) for _ in range(a))

        loads: List[Counter] = [Counter() for _ in slots]
        schemas: List[Optional[EmbeddingSchema]] = [None] * len(slots)
        chosen: List[int] = []
        nodes = 0
        saw_unknown = False

        def search(i: int) -> bool:
            nonlocal nodes, saw_unknown
            if i == len(units):
                return True
            c, a = units[i]
            start = chosen[-1] if i > 0 and units[i - 1] == units[i] else 0
            for s in range(start, len(slots)):
                d, _, copy = slots[s]
                if not loads[s].items and copy > 0 and not loads[s - 1].items:
                    continue
                nodes += 1
                if nodes > self.budget.node_limit:
                    raise _NodeLimitReached
                trial = Counter(dict(loads[s].items))
                trial.add(c, a)
                answer, via = self._embed_component(trial.sorted_entries(), d, depth)
                if answer is NO:
                    continue
                if answer is UNKNOWN:
                    saw_unknown = True
                    continue
                previous, previous_schema = loads[s], schemas[s]
                loads[s], schemas[s] = trial, via
                chosen.append(s)
                if search(i + 1):
                    return True
                chosen.pop()
                loads[s], schemas[s] = previous, previous_schema
            return False

        try:
            found = search(0)
        except _NodeLimitReached:
            logger.debug("distribution_node_limit", units=len(units), slots=len(slots))
            return UNKNOWN, []
        if not found:
            return (UNKNOWN if saw_unknown else NO), []

        placement = []
        for s, (d, b, copy) in enumerate(slots):
            if loads[s].items:
                load = loads[s].sorted_entries()
                placement.append(
                    Hosting(
                        member=format_entries(load),
                        mult="1",
                        host=format_expr(d),
                        host_mult=format_mult(b),
                        load="all",
                        slot=copy,
                        via=schemas[s],
                    )
                )
        return YES, placement

    # ------------------------------------------------------------
    # 성분 대상
    # ------------------------------------------------------------
    def _embed_component(self, xs: Entries, d: SpaceExpr, depth: int) -> Result:
        if not xs:
            return YES, EmbeddingSchema(source="0", target=format_expr(d), mode="empty")
        key = ("comp", xs, d, depth)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        result = self._embed_component_uncached(xs, d, depth)
        self._memo.put(key, result)
        return result

    def _embed_component_uncached(self, xs: Entries, d: SpaceExpr, depth: int) -> Result:
        source = format_entries(xs)
        if isinstance(d, Point):
            if xs == ((POINT, 1),):
                return YES, EmbeddingSchema(source=source, target="1", mode="point")
            return NO, None
        if _rank_of(xs) > rank(d):
            return NO, None
        if depth <= 0:
            return UNKNOWN, None
        sub = depth - 1

        answer, schema = self._rings(xs, d, sub)
        if answer is YES:
            return answer, schema
        uncertain = answer is UNKNOWN

        for e, rest in self._glue_candidates(xs, d):
            pointed_answer, pointed = self._pointed(e, d, sub, 0)
            if pointed_answer is NO:
                continue
            rest_answer, rest_hosting, rest_rings = self._hosts_fin(rest, d, sub)
            combined = pointed_answer & rest_answer
            if combined is YES:
                if pointed.ring_assignment is not None:
                    shifted = pointed.ring_assignment.model_copy(update={"base": rest_rings})
                    pointed = pointed.model_copy(update={"ring_assignment": shifted})
                return YES, EmbeddingSchema(
                    source=source,
                    target=format_expr(d),
                    mode="glue",
                    glue=format_expr(e),
                    pointed=pointed,
                    rest_rings=rest_rings,
                    rest=rest_hosting,
                )
            if combined is UNKNOWN:
                uncertain = True
        return (UNKNOWN if uncertain else NO), None

    def _rings(self, xs: Entries, d: Lim, depth: int) -> Result:
        """접착점을 쓰지 않는 배치: 성분 사본마다 서로 다른 링의 구성원 하나"""
        hosting = []
        overall = YES
        for c, a in xs:
            entry_answer = NO
            for m, mu in d.tail.entries:
                answer, via = self._embed_component(((c, 1),), m, depth)
                if answer is YES:
                    hosting.append(
                        Hosting(
                            member=format_expr(c),
                            mult=format_mult(a),
                            host=format_expr(m),
                            host_mult=format_mult(mu),
                            load="single",
                            via=via,
                        )
                    )
                    entry_answer = YES
                    break
                entry_answer = entry_answer | answer
            overall = overall & entry_answer
            if overall is NO:
                return NO, None
        if overall is not YES:
            return overall, None
        return YES, EmbeddingSchema(
            source=format_entries(xs), target=format_expr(d), mode="rings", hosting=hosting
        )

    def _glue_candidates(self, xs: Entries, d: Lim) -> Iterator[Tuple[SpaceExpr, Entries]]:
        """
        접착점으로 보낼 germ 후보와 그때의 나머지

        최상위 성분 e (유한 사본이면 하나를 뺀 나머지), 그 다음 더 깊은 germ (나머지는 X 전체)
        """
        limit = rank(d)
        seen = set()
        for index, (c, a) in sorted(enumerate(xs), key=lambda item: entry_key(item[1]), reverse=True):
            if rank(c) > limit:
                continue
            seen.add(c)
            if a is OMEGA:
                yield c, xs
            elif a == 1:
                yield c, xs[:index] + xs[index + 1:]
            else:
                yield c, xs[:index] + ((c, a - 1),) + xs[index + 1:]
        deeper = set()
        for c, _ in xs:
            deeper |= germs(c)
        for g in sorted(deeper - seen, key=lambda item: entry_key((item, 1)), reverse=True):
            if rank(g) <= limit:
                yield g, xs

    def _pointed(self, e: SpaceExpr, d: Lim, depth: int, base: int) -> Result:
        if isinstance(e, Point):
            return YES, EmbeddingSchema(source="1", target=format_expr(d), mode="pointed")
        if rank(e) > rank(d):
            return NO, None
        answer, hosting, width = self._hosts_fin(e.tail.entries, d, depth)
        if answer is not YES:
            return answer, None
        return YES, EmbeddingSchema(
            source=format_expr(e),
            target=format_expr(d),
            mode="pointed",
            ring_assignment=RingAssignment(base=base, slope=width, width=width),
            hosting=hosting,
        )

    def _hosts_fin(self, entries: Entries, d: Lim, depth: int) -> Tuple[Answer, List[Hosting], int]:
        """
        항목들을 d 의 유한 개 링(R 의 유한 사본)에 배치

        - ω 구성원 m 이 c 하나를 받으면 사본마다 서로 다른 링의 m 으로
        - 나머지는 유한 구성원의 사본에 first-fit 으로 묶음
          (유한 개 c 는 하나씩, ω 개 c 는 한 사본에 통째로)
        필요한 링 수(width)는 유한 구성원별 ⌈쓰인 사본 수 / 중복도⌉ 의 최댓값
        """
        if not entries:
            return YES, [], 0
        finite = [(m, mu) for m, mu in d.tail.entries if mu is not OMEGA]
        bins: Dict[SpaceExpr, List[Tuple[Counter, Optional[EmbeddingSchema]]]] = {m: [] for m, _ in finite}
        hosting: List[Hosting] = []
        overall = YES
        for c, a in sorted(entries, key=entry_key, reverse=True):
            entry_answer = NO
            placed = False
            for m, mu in d.tail.entries:
                if mu is not OMEGA:
                    continue
                answer, via = self._embed_component(((c, 1),), m, depth)
                if answer is YES:
                    hosting.append(
                        Hosting(
                            member=format_expr(c),
                            mult=format_mult(a),
                            host=format_expr(m),
                            host_mult="w",
                            load="single",
                            via=via,
                        )
                    )
                    placed = True
                    break
                entry_answer = entry_answer | answer
            if not placed:
                unit: Entry = (c, OMEGA) if a is OMEGA else (c, 1)
                copies = 1 if a is OMEGA else a
                placed = True
                for _ in range(copies):
                    answer = self._pack(unit, finite, bins, depth)
                    if answer is not YES:
                        entry_answer = entry_answer | answer
                        placed = False
                        break
            if placed:
                entry_answer = YES
            overall = overall & entry_answer
            if overall is NO:
                return NO, [], 0
        if overall is not YES:
            return overall, [], 0

        for m, mu in finite:
            for slot, (load, via) in enumerate(bins[m]):
                hosting.append(
                    Hosting(
                        member=format_entries(load.sorted_entries()),
                        mult="1",
                        host=format_expr(m),
                        host_mult=format_mult(mu),
                        load="all",
                        slot=slot,
                        via=via,
                    )
                )
        width = max([1] + [-(-len(bins[m]) // mu) for m, mu in finite])
        if width > self.budget.width or width > self.budget.slope:
            logger.debug("ring_width_over_budget", width=width, target=format_expr(d))
            return UNKNOWN, [], 0
        return YES, hosting, width

    def _pack(
        self,
        unit: Entry,
        finite: Sequence[Tuple[SpaceExpr, Mult]],
        bins: Dict[SpaceExpr, List[Tuple[Counter, Optional[EmbeddingSchema]]]],
        depth: int,
    ) -> Answer:
        """unit 을 이미 열린 사본에 넣어 보고, 안 되면 가장 덜 쓰인 구성원의 새 사본을 엽니다"""
        c, a = unit
        for m, _ in finite:
            for index, (load, _) in enumerate(bins[m]):
                trial = Counter(dict(load.items))
                trial.add(c, a)
                answer, via = self._embed_component(trial.sorted_entries(), m, depth)
                if answer is YES:
                    bins[m][index] = (trial, via)
                    return YES

        alone = NO
        best: Optional[Tuple[SpaceExpr, int, Optional[EmbeddingSchema]]] = None
        for m, mu in finite:
            answer, via = self._embed_component((unit,), m, depth)
            if answer is not YES:
                alone = alone | answer
                continue
            if best is None or len(bins[m]) / mu < len(bins[best[0]]) / best[1]:
                best = (m, mu, via)
        if best is None:
            return alone
        m, _, via = best
        bins[m].append((Counter({c: a}), via))
        return YES


@lru_cache(maxsize=16)
def get_engine(budget: Budget) -> EmbeddingEngine:
    """예산별 엔진 (메모 공유)"""
    return EmbeddingEngine(budget)
