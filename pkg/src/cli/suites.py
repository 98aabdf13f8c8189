"""
검증 스위트

각 스위트는 결정적이며 (시드 고정) 통과/실패 개수를 요약합니다.
- ordinal-laws: 순서수 전순서/결합/단조/분배 법칙, E(m) 공식
- derivative-rank: 직접 rank 와 반복 도함수 rank 의 일치, 정규화와 도함수의 교환
- embed-corpus: 코퍼스 쌍의 판정 건전성, 추이성, 컴팩트 순서수 닫힌 규칙,
  정리된 예제, X(m) 족, 항등식 사례, 정준형과 컴팩트화
- stable-counts: 레벨 1, 2 의 안정 타입 개수 (2, 5)
- family-xf: 길이 6 비트 접두사 64 개의 층 서명과 쌍별 비위상동형
"""
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.config.settings import get_settings
from src.core.errors import DimTypeError
from src.core.ordinal import (
    ONE,
    ZERO,
    Ordinal,
    add,
    cb_rank_of_ordinal,
    compare,
    embed_bound_E,
    mul,
    omega_pow,
    parse_ordinal,
)
from src.core.ordinal.notation import Ordering
from src.core.space import (
    Empty,
    Lim,
    SpaceExpr,
    Sum,
    derivative,
    format_expr,
    is_compact,
    iterate_derivative,
    layer_signature,
    normalize,
    ord_to_expr,
    parse_expr,
    rank,
    rank_by_derivative,
)
from src.core.embed import (
    check_obstruction,
    check_omega_alpha_copy,
    check_schema,
    decide_embed,
    decide_homeomorphic,
    decide_same_type,
    get_engine,
    ku_compactify,
    level_counts,
    ms_canonical,
    ordinal_embedding_upper,
    refute_embedding,
)
from src.core.families import corpus, family_Xf, witness_X
from src.core.stable import TypeClassTable
from src.models.verdict import Answer, Budget
from src.utils.logger import get_logger

logger = get_logger(__name__)

# 쌍별 판정 스위트의 코퍼스 크기
EMBED_CORPUS_CAP = 4
FAMILY_PREFIX_LENGTH = 6
EXPECTED_STABLE_COUNTS = {1: 2, 2: 5}


@dataclass
class SuiteSummary:
    """스위트 실행 결과"""

    name: str
    total: int = 0
    passed_count: int = 0
    failures: List[str] = field(default_factory=list)
    unit: str = "checks passed"

    def check(self, ok: bool, label: Callable[[], str]) -> None:
        self.total += 1
        if ok:
            self.passed_count += 1
        elif len(self.failures) < 20:
            self.failures.append(label())

    @property
    def passed(self) -> bool:
        return self.passed_count == self.total

    @property
    def text(self) -> str:
        lines = [f"{self.name}: {self.passed_count}/{self.total} {self.unit}"]
        lines += [f"  FAIL {failure}" for failure in self.failures]
        return "\n".join(lines)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "total": self.total,
            "passed": self.passed_count,
            "failures": self.failures,
        }


# ------------------------------------------------------------
# 순서수 법칙
# ------------------------------------------------------------
def random_ordinal(rng: random.Random, depth: int = 3) -> Ordinal:
    """깊이 ≤ depth 인 임의 CNF 순서수"""
    if depth <= 0:
        return Ordinal.finite(rng.randint(0, 4))
    terms = []
    for _ in range(rng.randint(0, 3)):
        exponent = random_ordinal(rng, depth - 1) if rng.random() < 0.5 else Ordinal.finite(rng.randint(0, 3))
        terms.append((exponent, rng.randint(1, 3)))
    return Ordinal.from_terms(sorted(terms, key=lambda term: term[0], reverse=True))


def _le(a: Ordinal, b: Ordinal) -> bool:
    return compare(a, b) is not Ordering.GREATER


def ordinal_laws(seed: int, samples: int) -> SuiteSummary:
    summary = SuiteSummary("ordinal-laws")
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = random_ordinal(rng), random_ordinal(rng), random_ordinal(rng)
        triple = lambda: f"a={a} b={b} c={c}"  # noqa: E731
        ab, ba = compare(a, b), compare(b, a)
        summary.check(
            (ab is Ordering.EQUAL) == (ba is Ordering.EQUAL) and (ab is Ordering.LESS) == (ba is Ordering.GREATER),
            lambda: "antisymmetry " + triple(),
        )
        if _le(a, b) and _le(b, c):
            summary.check(_le(a, c), lambda: "transitivity " + triple())
        summary.check(add(add(a, b), c) == add(a, add(b, c)), lambda: "add associativity " + triple())
        if compare(b, a) is Ordering.LESS:
            summary.check(_le(add(b, c), add(a, c)), lambda: "monotonicity " + triple())
        summary.check(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), lambda: "left distributivity " + triple())
    summary.check(embed_bound_E(ZERO) == ONE, lambda: "E(0)")
    for m in range(1, 6):
        expected = add(omega_pow(Ordinal.finite(2 * m)), ONE)
        summary.check(embed_bound_E(Ordinal.finite(m)) == expected, lambda: f"E({m})")
    return summary


# ------------------------------------------------------------
# 도함수와 rank
# ------------------------------------------------------------
def small_successors(max_exponent: int = 3, max_coefficient: int = 3) -> List[Ordinal]:
    """ω^(max_exponent+1) 미만, 계수 ≤ max_coefficient 인 후속 순서수"""
    found = []
    for coefficients in itertools.product(range(max_coefficient + 1), repeat=max_exponent + 1):
        if coefficients[-1] == 0:
            continue
        terms = [
            (Ordinal.finite(max_exponent - i), c) for i, c in enumerate(coefficients) if c
        ]
        found.append(Ordinal.from_terms(terms))
    return sorted(found)


def _unnormalized_variants(e: SpaceExpr) -> List[SpaceExpr]:
    """e 와 위상동형인 정규형이 아닌 표현식들 (중복 합, prefix 링 반복)"""
    variants: List[SpaceExpr] = [Sum(((e, 2),))]
    if isinstance(e, Lim):
        variants.append(Lim((e.tail,), e.tail))
    return variants


def derivative_rank(size_cap: int) -> SuiteSummary:
    summary = SuiteSummary("derivative-rank")
    for e in corpus(size_cap):
        label = format_expr(e)
        summary.check(rank(e) == rank_by_derivative(e), lambda: f"rank {label}")
        summary.check(isinstance(iterate_derivative(e, rank(e)), Empty), lambda: f"derivative^rank {label}")
        summary.check(normalize(normalize(e)) == normalize(e), lambda: f"idempotence {label}")
        for raw in _unnormalized_variants(e):
            summary.check(
                derivative(raw) == derivative(normalize(raw)),
                lambda: f"derivative/normalize {format_expr(raw)}",
            )
    for a in small_successors():
        summary.check(
            cb_rank_of_ordinal(a) == Ordinal.finite(rank_by_derivative(ord_to_expr(a))),
            lambda: f"ordinal rank {a}",
        )
    return summary


# ------------------------------------------------------------
# 코퍼스 판정
# ------------------------------------------------------------
def _compact_ordinal_rule(a: Ordinal, b: Ordinal) -> bool:
    """ω^α·n+1 ≤_E ω^β·m+1 ⇔ α<β 또는 (α=β, n≤m)"""
    alpha, n = a.leading_exponent, a.leading_coefficient
    beta, m = b.leading_exponent, b.leading_coefficient
    return compare(alpha, beta) is Ordering.LESS or (alpha == beta and n <= m)


def random_below_omega_pow(rng: random.Random, alpha: int) -> Ordinal:
    """ω^alpha 미만, 계수 ≤ 3 인 임의 순서수 (0 포함)"""
    terms = [(Ordinal.finite(k), rng.randint(0, 3)) for k in range(alpha - 1, -1, -1)]
    return Ordinal.from_terms([(exponent, c) for exponent, c in terms if c])


def _curated_examples(summary: SuiteSummary, budget: Budget) -> None:
    """정리된 예제 판정: unknown 이 없어야 하고 기대한 답이어야 함"""
    x = parse_expr
    embed_facts = [
        (x("G(1)"), x("I(1)"), Answer.YES),
        (x("I(1)"), x("G(1)"), Answer.NO),
        (x("lim(;{w*G(1),1*I(1)})"), x("G(I(1))"), Answer.NO),
        (x("I(1)"), x("G(G(1))"), Answer.YES),
        (x("I(1)"), ord_to_expr(parse_ordinal("w^2+1")), Answer.YES),
        (witness_X(2), ord_to_expr(parse_ordinal("w^4+1")), Answer.YES),
        (witness_X(2), ord_to_expr(parse_ordinal("w^3+1")), Answer.NO),
    ]
    for a, b, expected in embed_facts:
        answer = decide_embed(a, b, budget).answer
        summary.check(answer is expected, lambda: f"fact {format_expr(a)} <= {format_expr(b)}: {answer.value}")
    type_facts = [
        (decide_same_type, ord_to_expr(parse_ordinal("w^2+w+1")), ord_to_expr(parse_ordinal("w^2+1")), Answer.YES),
        (decide_same_type, x("G(1)"), x("I(1)"), Answer.NO),
        (decide_homeomorphic, x("G(G(1))"), ord_to_expr(parse_ordinal("w^2+1")), Answer.YES),
        (decide_homeomorphic, family_Xf([0, 1]), family_Xf([1, 0]), Answer.NO),
    ]
    for decide, a, b, expected in type_facts:
        answer = decide(a, b, budget).answer
        summary.check(answer is expected, lambda: f"fact {decide.__name__} {format_expr(a)} {format_expr(b)}")
    summary.check(check_omega_alpha_copy(x("I(I(1))"), 2, budget), lambda: "fact copy I(I(1)) 2")


def _witness_family(summary: SuiteSummary, budget: Budget) -> None:
    """X(m) 는 E(m) 에 들어가고 X(2) 는 ω^3+1 에 들어가지 않음"""
    engine = get_engine(budget)
    for m in (1, 2):
        space = witness_X(m)
        upper = ordinal_embedding_upper(space)
        summary.check(upper == embed_bound_E(Ordinal.finite(m)), lambda: f"upper X({m}) = {upper}")
        target = ord_to_expr(upper)
        verdict = decide_embed(space, target, budget)
        summary.check(
            verdict.answer is Answer.YES and check_schema(space, target, verdict.witness),
            lambda: f"X({m}) into its upper bound",
        )
    target = ord_to_expr(parse_ordinal("w^3+1"))
    obstruction = refute_embedding(witness_X(2), target, budget)
    summary.check(
        obstruction is not None and check_obstruction(engine, witness_X(2), target, obstruction),
        lambda: "X(2) refuted in w^3+1",
    )


def _identity_instances(summary: SuiteSummary, budget: Budget, rng: random.Random) -> None:
    """ω^α+β+1 =_E ω^α+1 (β < ω^α)"""
    for alpha in (1, 2, 3):
        top = omega_pow(Ordinal.finite(alpha))
        for _ in range(10):
            beta = random_below_omega_pow(rng, alpha)
            left = ord_to_expr(add(add(top, beta), ONE))
            answer = decide_same_type(left, ord_to_expr(add(top, ONE)), budget).answer
            summary.check(answer is Answer.YES, lambda: f"identity alpha={alpha} beta={beta}")


def _unary_corpus_checks(summary: SuiteSummary, budget: Budget, items: Sequence[SpaceExpr]) -> None:
    """정준형, 컴팩트화, ω^k+1 사본"""
    for e in items:
        label = format_expr(e)
        if is_compact(e) and not isinstance(e, Empty):
            canonical = ms_canonical(e)
            summary.check(
                (canonical.alpha, canonical.n) == (rank(e) - 1, level_counts(e)[-1]),
                lambda: f"canonical {label}",
            )
        compact = ku_compactify(e)
        verdict = decide_embed(e, compact, budget)
        summary.check(
            is_compact(compact) and verdict.answer is Answer.YES and check_schema(e, compact, verdict.witness),
            lambda: f"compactification {label}",
        )
        for k in range(1, 4):
            if not isinstance(iterate_derivative(e, k), Empty):
                summary.check(check_omega_alpha_copy(e, k, budget), lambda: f"copy level {k} in {label}")
    canonical = ms_canonical(ku_compactify(parse_expr("I(1)")))
    summary.check((canonical.alpha, canonical.n) == (2, 1), lambda: "compactification of I(1)")


def _transitivity_samples(
    summary: SuiteSummary,
    items: Sequence[SpaceExpr],
    answers: Dict[Tuple[int, int], Answer],
    rng: random.Random,
    samples: int,
) -> None:
    for _ in range(samples):
        i, j, k = (rng.randrange(len(items)) for _ in range(3))
        if answers[i, j] is Answer.YES and answers[j, k] is Answer.YES:
            summary.check(
                answers[i, k] is Answer.YES,
                lambda: f"transitivity {format_expr(items[i])} {format_expr(items[j])} {format_expr(items[k])}",
            )


def embed_corpus(
    budget: Budget,
    size_cap: int = EMBED_CORPUS_CAP,
    unary_cap: Optional[int] = None,
    seed: int = 0,
    samples: Optional[int] = None,
) -> SuiteSummary:
    """
    임베딩 판정 스위트

    - 코퍼스 모든 쌍: 반사성, unknown 없음(rank ≤ 3), rank 단조성, 증인/반박 검증
    - 표본 삼중쌍의 추이성
    - ω^4 미만 후속 순서수 쌍의 닫힌 규칙
    - 정리된 예제, X(m) 족, 항등식 사례
    - 크기 ≤ unary_cap 코퍼스의 정준형, 컴팩트화, ω^k+1 사본
    """
    settings = get_settings()
    unary_cap = settings.corpus_size_cap if unary_cap is None else unary_cap
    samples = settings.suite_samples if samples is None else samples
    summary = SuiteSummary("embed-corpus")
    rng = random.Random(seed)
    engine = get_engine(budget)
    items = list(corpus(size_cap, budget))
    answers: Dict[Tuple[int, int], Answer] = {}
    for (i, x), (j, y) in itertools.product(enumerate(items), repeat=2):
        pair = lambda: f"{format_expr(x)} <= {format_expr(y)}"  # noqa: E731
        verdict = decide_embed(x, y, budget)
        answers[i, j] = verdict.answer
        if x == y:
            summary.check(verdict.answer is Answer.YES, lambda: "reflexivity " + pair())
        if rank(x) <= 3 and rank(y) <= 3:
            summary.check(verdict.answer is not Answer.UNKNOWN, lambda: "unknown " + pair())
        if verdict.answer is Answer.YES:
            summary.check(rank(x) <= rank(y), lambda: "rank monotonicity " + pair())
            summary.check(check_schema(x, y, verdict.witness), lambda: "witness " + pair())
        elif verdict.answer is Answer.NO:
            summary.check(check_obstruction(engine, x, y, verdict.obstruction), lambda: "obstruction " + pair())
    if items:
        _transitivity_samples(summary, items, answers, rng, samples)

    successors = small_successors()
    for a, b in itertools.product(successors, repeat=2):
        answer = decide_embed(ord_to_expr(a), ord_to_expr(b), budget).answer
        expected = Answer.YES if _compact_ordinal_rule(a, b) else Answer.NO
        summary.check(answer is expected, lambda: f"ordinal rule {a} <= {b}")

    _curated_examples(summary, budget)
    _witness_family(summary, budget)
    _identity_instances(summary, budget, rng)
    _unary_corpus_checks(summary, budget, corpus(unary_cap, budget))
    return summary


# ------------------------------------------------------------
# 안정 타입과 X_f
# ------------------------------------------------------------
def stable_counts(budget: Budget) -> SuiteSummary:
    summary = SuiteSummary("stable-counts", unit="expected counts matched")
    table = TypeClassTable(budget)
    for level, expected in EXPECTED_STABLE_COUNTS.items():
        found = len(table.level(level))
        summary.check(found == expected, lambda: f"level {level}: {found} classes, expected {expected}")
    return summary


def family_xf(budget: Budget, length: int = FAMILY_PREFIX_LENGTH) -> SuiteSummary:
    summary = SuiteSummary("family-xf")
    prefixes = [list(bits) for bits in itertools.product((0, 1), repeat=length)]
    spaces = [family_Xf(bits) for bits in prefixes]
    for bits, e in zip(prefixes, spaces):
        expected = [bit == 0 for bit in bits]
        summary.check(
            rank(e) == length + 1 and layer_signature(e) == expected,
            lambda: f"signature {bits}",
        )
    for (i, x), (j, y) in itertools.combinations(enumerate(spaces), 2):
        answer = decide_homeomorphic(x, y, budget).answer
        summary.check(answer is Answer.NO, lambda: f"homeomorphic {prefixes[i]} {prefixes[j]}")
    return summary


def run_suite(name: str, seed: Optional[int] = None, budget: Optional[Budget] = None) -> SuiteSummary:
    """
    스위트 실행

    Raises:
        DimTypeError: 알 수 없는 스위트 이름
    """
    settings = get_settings()
    seed = settings.suite_seed if seed is None else seed
    budget = budget or Budget.from_settings()

    runners: Dict[str, Callable[[], SuiteSummary]] = {
        "ordinal-laws": lambda: ordinal_laws(seed, settings.suite_samples),
        "derivative-rank": lambda: derivative_rank(settings.corpus_size_cap),
        "embed-corpus": lambda: embed_corpus(budget, seed=seed),
        "stable-counts": lambda: stable_counts(budget),
        "family-xf": lambda: family_xf(budget),
    }
    if name not in runners:
        raise DimTypeError(f"unknown suite {name!r}")
    summary = runners[name]()
    logger.info("suite_finished", suite=name, total=summary.total, passed=summary.passed_count)
    return summary
