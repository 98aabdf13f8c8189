"""
명령줄 진입점

🎯 종료 코드:
- 0: yes / 성공
- 1: no
- 2: unknown (열거/분해 중 판정되지 않은 쌍 포함)
- 3: 사용법 또는 파싱 오류 (표준 에러에 메시지)
- 4: 예상하지 못한 내부 오류

💡 사용 예시:
    python -m src.cli embed "G(1)" "I(1)"
    python -m src.cli canon "sum{3*G(1),1*1}"
    python -m src.cli stable-enum 2 --format json
"""
import argparse
import json
import sys
from typing import Any, Callable, Optional, Sequence, TextIO

from src.config.settings import get_settings
from src.core.errors import DimTypeError, UnknownVerdictError, ZeroOrdinalError
from src.core.ordinal import (
    add,
    cb_rank_of_ordinal,
    compare,
    embed_bound_E,
    format_ordinal,
    mul,
    omega_pow,
    parse_ordinal,
)
from src.core.ordinal.notation import ONE, Ordinal
from src.core.space import (
    format_expr,
    format_mult,
    is_compact,
    iterate_derivative,
    layer,
    layer_signature,
    normalize,
    parse_expr,
    rank,
)
from src.core.embed import (
    decide_embed,
    decide_homeomorphic,
    decide_same_type,
    ku_compactify,
    ms_canonical,
    ordinal_embedding_upper,
)
from src.core.families import family_Xf, parse_bits, witness_X
from src.core.stable import TypeClassTable, poset_dot, poset_json, stable_decompose
from src.models.verdict import Answer, Budget, Verdict
from src.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3
EXIT_INTERNAL = 4

_VERDICT_EXIT = {Answer.YES: EXIT_OK, Answer.NO: EXIT_NO, Answer.UNKNOWN: EXIT_UNKNOWN}


class CliArgumentParser(argparse.ArgumentParser):
    """사용법 오류를 종료 코드 3 으로 보내는 파서"""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_budget(text: str) -> Budget:
    """
    "slope,width[,depth]" → Budget

    depth 자리에 "none" 또는 빈 값이면 제한 없음.
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"budget must be slope,width[,depth], got {text!r}")
    try:
        slope, width = int(parts[0]), int(parts[1])
        depth = None
        if len(parts) == 3 and parts[2].lower() not in ("", "none"):
            depth = int(parts[2])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}") from exc
    base = Budget.from_settings()
    try:
        return Budget(slope=slope, width=width, depth=depth, node_limit=base.node_limit)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}: {exc}") from exc


# ------------------------------------------------------------
# 출력
# ------------------------------------------------------------
class Report:
    """명령 결과: 텍스트 줄, JSON 값, 종료 코드"""

    def __init__(self, text: str, data: Any, code: int = EXIT_OK):
        self.text = text
        self.data = data
        self.code = code


def _dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def verdict_report(verdict: Verdict) -> Report:
    lines = [verdict.answer.value]
    if verdict.witness is not None:
        lines.append("witness: " + _dumps(verdict.witness.model_dump(mode="json", exclude_defaults=True)))
    if verdict.obstruction is not None:
        lines.append(f"obstruction: {verdict.obstruction.kind} {_dumps(verdict.obstruction.evidence)}")
    return Report("\n".join(lines), verdict.model_dump(mode="json"), _VERDICT_EXIT[verdict.answer])


def _value(text: str, data: Any = None) -> Report:
    return Report(text, text if data is None else data)


# ------------------------------------------------------------
# 명령
# ------------------------------------------------------------
def cmd_norm(args) -> Report:
    return _value(format_expr(normalize(parse_expr(args.expr))))


def cmd_deriv(args) -> Report:
    return _value(format_expr(iterate_derivative(parse_expr(args.expr), args.times)))


def cmd_rank(args) -> Report:
    value = rank(parse_expr(args.expr))
    return Report(str(value), value)


def cmd_compact(args) -> Report:
    value = is_compact(parse_expr(args.expr))
    return Report("true" if value else "false", value)


def cmd_canon(args) -> Report:
    canonical = ms_canonical(parse_expr(args.expr))
    ordinal = add(mul(omega_pow(Ordinal.finite(canonical.alpha)), Ordinal.finite(canonical.n)), ONE)
    text = format_ordinal(ordinal)
    return Report(text, {"alpha": canonical.alpha, "n": canonical.n, "ordinal": text})


def cmd_embed(args) -> Report:
    return verdict_report(decide_embed(parse_expr(args.a), parse_expr(args.b), args.budget))


def cmd_sametype(args) -> Report:
    return verdict_report(decide_same_type(parse_expr(args.a), parse_expr(args.b), args.budget))


def cmd_homeo(args) -> Report:
    return verdict_report(decide_homeomorphic(parse_expr(args.a), parse_expr(args.b), args.budget))


def cmd_compactify(args) -> Report:
    return _value(format_expr(ku_compactify(parse_expr(args.expr))))


def cmd_upper(args) -> Report:
    return _value(format_ordinal(ordinal_embedding_upper(parse_expr(args.expr))))


def cmd_layers(args) -> Report:
    e = normalize(parse_expr(args.expr))
    signature = layer_signature(e)
    layers = [format_expr(layer(e, k)) for k in range(1, rank(e) + 1)]
    lines = [f"signature: {','.join('1' if bit else '0' for bit in signature)}"]
    lines += [f"layer {k}: {text}" for k, text in enumerate(layers, start=1)]
    return Report("\n".join(lines), {"signature": signature, "layers": layers})


def cmd_ord_add(args) -> Report:
    return _value(format_ordinal(add(parse_ordinal(args.a), parse_ordinal(args.b))))


def cmd_ord_mul(args) -> Report:
    return _value(format_ordinal(mul(parse_ordinal(args.a), parse_ordinal(args.b))))


def cmd_ord_cmp(args) -> Report:
    return _value(compare(parse_ordinal(args.a), parse_ordinal(args.b)).value)


def cmd_ord_rank(args) -> Report:
    try:
        return _value(format_ordinal(cb_rank_of_ordinal(parse_ordinal(args.a))))
    except ZeroOrdinalError:
        return Report("0 (empty space)", {"rank": "0", "status": "empty"}, EXIT_OK)


def cmd_e_bound(args) -> Report:
    return _value(format_ordinal(embed_bound_E(parse_ordinal(args.a))))


def cmd_witness_x(args) -> Report:
    return _value(format_expr(witness_X(args.m)))


def cmd_family_xf(args) -> Report:
    return _value(format_expr(family_Xf(parse_bits(args.bits))))


def _table(args) -> TypeClassTable:
    return TypeClassTable(args.budget)


def cmd_stable_enum(args) -> Report:
    classes = _table(args).level(args.n)
    lines = [f"{cls.id} {cls.expr}" for cls in classes]
    data = {
        "level": args.n,
        "count": len(classes),
        "classes": [{"id": cls.id, "expr": cls.expr, "descriptor": str(cls.descriptor)} for cls in classes],
    }
    return Report("\n".join(lines), data)


def cmd_decompose(args) -> Report:
    parts = stable_decompose(parse_expr(args.expr), _table(args))
    rows = [
        {"id": cls.id, "expr": cls.expr, "mult": format_mult(m)}
        for cls, m in parts
    ]
    lines = [f"{row['mult']}*{row['expr']} ({row['id']})" for row in rows]
    return Report("\n".join(lines), rows)


def cmd_poset(args) -> Report:
    table = _table(args)
    if args.dot:
        text = poset_dot(args.n, table)
        return Report(text.rstrip("\n"), text)
    document = poset_json(args.n, table)
    return Report(_dumps(document), document)


def cmd_suite(args) -> Report:
    from src.cli.suites import run_suite

    summary = run_suite(args.name, seed=args.seed, budget=args.budget)
    return Report(summary.text, summary.as_dict(), EXIT_OK if summary.passed else EXIT_NO)


# ------------------------------------------------------------
# 파서
# ------------------------------------------------------------
def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    settings = get_settings()

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--budget",
        type=parse_budget,
        default=default(None),
        help="탐색 예산 slope,width[,depth] (기본: 설정값)",
    )
    parser.add_argument(
        "--format",
        choices=["text", "json"],
        default=default(settings.output_format),
        help="출력 형식",
    )
    parser.add_argument("--seed", type=int, default=default(settings.suite_seed), help="스위트 시드")


def build_parser() -> argparse.ArgumentParser:
    """명령줄 파서 생성"""
    parser = CliArgumentParser(prog="dimtype", description="가산 산재 공간의 차원 타입 계산기")
    _global_options(parser, suppress=False)

    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)

    commands = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    def command(name: str, handler: Callable[[Any], Report], help_text: str, *positionals: str):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        for positional in positionals:
            sub.add_argument(positional)
        sub.set_defaults(handler=handler)
        return sub

    command("norm", cmd_norm, "정규형", "expr")
    deriv = command("deriv", cmd_deriv, "도함수", "expr")
    deriv.add_argument("--times", type=int, default=1, help="반복 횟수")
    command("rank", cmd_rank, "칸토어-벤딕슨 rank", "expr")
    command("compact", cmd_compact, "컴팩트 여부", "expr")
    command("canon", cmd_canon, "컴팩트 정준형 ω^α·n+1", "expr")
    command("embed", cmd_embed, "A ≤_E B", "a", "b")
    command("sametype", cmd_sametype, "A =_E B", "a", "b")
    command("homeo", cmd_homeo, "A ≅ B", "a", "b")
    command("compactify", cmd_compactify, "컴팩트화", "expr")
    command("upper", cmd_upper, "임베딩 순서수 상한", "expr")
    command("layers", cmd_layers, "층과 층 서명", "expr")
    command("ord-add", cmd_ord_add, "순서수 합", "a", "b")
    command("ord-mul", cmd_ord_mul, "순서수 곱", "a", "b")
    command("ord-cmp", cmd_ord_cmp, "순서수 비교", "a", "b")
    command("ord-rank", cmd_ord_rank, "[0, a) 의 rank", "a")
    command("E-bound", cmd_e_bound, "E(a)", "a")
    witness = command("witness-x", cmd_witness_x, "증인 공간 X(m)")
    witness.add_argument("m", type=int)
    command("family-xf", cmd_family_xf, "비트 접두사 족 X_f", "bits")
    stable = command("stable-enum", cmd_stable_enum, "레벨 n 안정 타입")
    stable.add_argument("n", type=int)
    command("decompose", cmd_decompose, "안정 분해", "expr")
    poset = command("poset", cmd_poset, "안정 타입 포셋")
    poset.add_argument("n", type=int)
    shape = poset.add_mutually_exclusive_group()
    shape.add_argument("--dot", action="store_true", help="DOT 출력")
    shape.add_argument("--json", action="store_true", help="JSON 출력 (기본)")
    suite = command("suite", cmd_suite, "검증 스위트")
    suite.add_argument(
        "name",
        choices=["ordinal-laws", "derivative-rank", "embed-corpus", "stable-counts", "family-xf"],
    )
    return parser


def emit(report: Report, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        out.write(json.dumps(report.data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(report.text + "\n")


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    명령 실행

    Args:
        argv: 인자 목록 (None이면 sys.argv[1:])
        out: 표준 출력 대용
        err: 표준 에러 대용

    Returns:
        int: 종료 코드
    """
    out = out or sys.stdout
    err = err or sys.stderr
    setup_logging(get_settings().log_level)

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.budget is None:
        args.budget = Budget.from_settings()

    try:
        report = args.handler(args)
    except UnknownVerdictError as exc:
        err.write(f"unknown: {exc}\n")
        return EXIT_UNKNOWN
    except DimTypeError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        logger.error("cli_internal_error", command=args.command, error=str(exc), exc_info=True)
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL

    emit(report, args.format, out)
    return report.code


def main() -> None:
    sys.exit(run())
