"""Command-line surface: encode, decode, enumerate, count, verify, bench.

Exit codes: 0 success, 2 input error, 3 canonicality error, 4 render
budget exceeded, 5 verification failure. Big numbers are printed as
plain base-10 numerals everywhere; JSON output quotes them so consumers
with bounded number types survive.
"""

import argparse
import json
import sys
import time

from . import bijection, counting, oracle
from .decimal_core import (
    DEFAULT_MAX_RENDER_DIGITS,
    CanonicalTuple,
    canonicalize,
    complexity,
    digits_to_int,
    int_to_digits,
    parse_decimal,
    reconstruct,
)
from .errors import (
    CanonicalityError,
    DecindexError,
    IndexRangeError,
    ParseError,
    RenderBudgetError,
)
from .ops import tally

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CANONICALITY = 3
EXIT_RENDER_BUDGET = 4
EXIT_VERIFY_FAILED = 5

BENCH_DEFAULT_INDICES = (10**3, 10**6, 10**9, 10**12, 10**18)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    close_out = False
    if getattr(args, "out", None):
        out = open(args.out, "w", encoding="utf-8")
        close_out = True
    try:
        return args.handler(args, out)
    except BrokenPipeError:
        return EXIT_OK
    finally:
        if close_out:
            out.close()


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strict", action="store_true", help="use the value-level bijection")
    common.add_argument("--json", action="store_true", help="emit one JSON record per line")
    common.add_argument(
        "--max-render-digits",
        type=int,
        default=DEFAULT_MAX_RENDER_DIGITS,
        metavar="N",
        help="character budget when rendering decimals (default %(default)s)",
    )
    common.add_argument("--in", dest="infile", metavar="FILE", help="read batch input from FILE")
    common.add_argument("--out", dest="out", metavar="FILE", help="write output to FILE")

    parser = argparse.ArgumentParser(
        prog="decindex",
        description="Exact bijection between finite-decimal numbers and natural numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", parents=[common], help="decimal text to index")
    p.add_argument("text", nargs="?", help="decimal text; omit with --batch")
    p.add_argument("--batch", action="store_true", help="one decimal per input line")
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="index to decimal text")
    p.add_argument("index", nargs="?", help="index numeral; omit with --batch")
    p.add_argument("--batch", action="store_true", help="one index per input line")
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("enumerate", parents=[common], help="stream a contiguous index range")
    p.add_argument("--from", dest="start", required=True, metavar="A", help="first index")
    p.add_argument("--to", dest="stop", required=True, metavar="B", help="last index")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="level cardinalities and cumulative counts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--level", metavar="K", help="tuples at level K")
    group.add_argument("--upto", metavar="K", help="tuples at levels 0..K")
    group.add_argument("--table", metavar="K", help="CSV of counts for levels 0..K")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("verify", parents=[common], help="cross-check formulas against brute force")
    p.add_argument("--max-index", type=int, default=1000, metavar="N", help="round-trip ceiling")
    p.add_argument("--max-level", type=int, default=12, metavar="K", help="oracle sweep ceiling")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="operation counts and timing per index")
    p.add_argument(
        "--indices",
        metavar="LIST",
        help="comma-separated index numerals (default 10^3,10^6,10^9,10^12,10^18)",
    )
    p.set_defaults(handler=_cmd_bench)
    return parser


def _record_json(index: int, t: CanonicalTuple, text: str | None) -> str:
    return json.dumps(
        {
            "index": int_to_digits(index),
            "sign": t.sign,
            "n1": int_to_digits(t.n1),
            "n2": int_to_digits(t.n2),
            "n3": int_to_digits(t.n3),
            "value": text,
            "complexity": int_to_digits(complexity(t)),
            "strict_canonical": t.is_strict_canonical(),
        }
    )


def _record_plain(index: int, t: CanonicalTuple, text: str | None) -> str:
    value = text if text is not None else "null"
    return "\t".join(
        (
            int_to_digits(index),
            str(t.sign),
            int_to_digits(t.n1),
            int_to_digits(t.n2),
            int_to_digits(t.n3),
            int_to_digits(complexity(t)),
            value,
        )
    )


def _batch_lines(args):
    if args.infile:
        with open(args.infile, "r", encoding="utf-8") as fh:
            for line in fh:
                yield line.strip()
    else:
        for line in sys.stdin:
            yield line.strip()


def _cmd_encode(args, out) -> int:
    if args.batch or args.infile:
        status = EXIT_OK
        for lineno, line in enumerate(_batch_lines(args), start=1):
            if not line:
                continue
            try:
                out.write(_encode_one(line, args) + "\n")
            except DecindexError as exc:
                code = _exit_code_for(exc)
                if status == EXIT_OK:
                    status = code
                out.write(_error_record(args, f"line {lineno}: {exc}") + "\n")
        return status
    if args.text is None:
        print("error: need decimal text or --batch", file=sys.stderr)
        return EXIT_INPUT
    try:
        out.write(_encode_one(args.text, args) + "\n")
    except DecindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    return EXIT_OK


def _encode_one(text: str, args) -> str:
    t = canonicalize(parse_decimal(text))
    index = bijection.strict_encode(t) if args.strict else bijection.encode(t)
    if not args.json:
        return int_to_digits(index)
    try:
        value = reconstruct(t, args.max_render_digits)
    except RenderBudgetError:
        value = None
    return _record_json(index, t, value)


def _cmd_decode(args, out) -> int:
    if args.batch or args.infile:
        status = EXIT_OK
        for lineno, line in enumerate(_batch_lines(args), start=1):
            if not line:
                continue
            try:
                out.write(_decode_one(line, args) + "\n")
            except DecindexError as exc:
                code = _exit_code_for(exc)
                if status == EXIT_OK:
                    status = code
                out.write(_error_record(args, f"line {lineno}: {exc}") + "\n")
        return status
    if args.index is None:
        print("error: need an index numeral or --batch", file=sys.stderr)
        return EXIT_INPUT
    try:
        out.write(_decode_one(args.index, args) + "\n")
    except RenderBudgetError as exc:
        # the tuple is still printable even when its text is not
        t = _decode_index(_parse_index(args.index), args)
        out.write(_record_json(_parse_index(args.index), t, None) + "\n")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RENDER_BUDGET
    except DecindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    return EXIT_OK


def _parse_index(text: str) -> int:
    try:
        return digits_to_int(text.strip())
    except ValueError:
        raise IndexRangeError(f"not an index numeral: {text!r}") from None


def _decode_index(index: int, args) -> CanonicalTuple:
    return bijection.strict_decode(index) if args.strict else bijection.decode(index)


def _decode_one(text: str, args) -> str:
    index = _parse_index(text)
    t = _decode_index(index, args)
    if args.json:
        try:
            value = reconstruct(t, args.max_render_digits)
        except RenderBudgetError:
            value = None
        return _record_json(index, t, value)
    return reconstruct(t, args.max_render_digits)


def _error_record(args, message: str) -> str:
    if args.json:
        return json.dumps({"error": message})
    return f"ERROR\t{message}"


def _cmd_enumerate(args, out) -> int:
    try:
        start = _parse_index(args.start)
        stop = _parse_index(args.stop)
        mode = "strict" if args.strict else "paper"
        render = _record_json if args.json else _record_plain
        for rec in bijection.enumerate_range(
            start, stop, mode, max_render_digits=args.max_render_digits
        ):
            out.write(render(rec.index, rec.tuple, rec.text) + "\n")
    except DecindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    return EXIT_OK


def _cmd_count(args, out) -> int:
    try:
        if args.table is not None:
            top = _parse_index(args.table)
            out.write("K,level_count,cumulative_upto,strict_level_count\n")
            for level in range(top + 1):
                out.write(
                    ",".join(
                        (
                            int_to_digits(level),
                            int_to_digits(counting.level_count(level)),
                            int_to_digits(counting.cumulative_upto(level)),
                            int_to_digits(counting.strict_level_count(level)),
                        )
                    )
                    + "\n"
                )
        elif args.level is not None:
            level = _parse_index(args.level)
            fn = counting.strict_level_count if args.strict else counting.level_count
            out.write(int_to_digits(fn(level)) + "\n")
        else:
            level = _parse_index(args.upto)
            fn = counting.strict_cumulative_upto if args.strict else counting.cumulative_upto
            out.write(int_to_digits(fn(level)) + "\n")
    except DecindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    mode = "strict" if args.strict else "paper"
    checks = []

    def check(name: str, ok: bool, detail: str = ""):
        checks.append(ok)
        mark = "ok" if ok else "FAIL"
        suffix = f" ({detail})" if detail and not ok else ""
        out.write(f"{mark:4s} {name}{suffix}\n")

    cfg = oracle.OracleConfig(max_level=args.max_level, mode=mode)
    lc = counting.strict_level_count if mode == "strict" else counting.level_count
    cu = counting.strict_cumulative_upto if mode == "strict" else counting.cumulative_upto
    cb = counting.strict_cumulative_before if mode == "strict" else counting.cumulative_before
    unrank = bijection.strict_decode if mode == "strict" else bijection.decode
    rank = bijection.strict_encode if mode == "strict" else bijection.encode

    per_level = {}
    order_ok = True
    seen = set()
    duplicates = 0
    for position, t in enumerate(oracle.stream(cfg), start=1):
        per_level[complexity(t)] = per_level.get(complexity(t), 0) + 1
        if t in seen:
            duplicates += 1
        seen.add(t)
        if position <= cu(args.max_level) and unrank(position) != t:
            order_ok = False
    check(
        f"level counts match oracle through level {args.max_level} [{mode}]",
        all(per_level[k] == lc(k) for k in per_level),
    )
    check("oracle emits no duplicate tuples", duplicates == 0)
    check(
        f"cumulative counts consistent through level {args.max_level}",
        all(cb(k) + lc(k) == cu(k) for k in range(args.max_level + 1)),
    )
    check(f"unrank agrees with oracle order for all {cu(args.max_level)} indices", order_ok)

    bad = sum(1 for n in range(1, args.max_index + 1) if rank(unrank(n)) != n)
    check(f"rank(unrank(n)) = n for n = 1..{args.max_index} [{mode}]", bad == 0, f"{bad} misses")

    bad_text = 0
    for n in range(1, args.max_index + 1):
        t = unrank(n)
        back = canonicalize(parse_decimal(reconstruct(t)))
        if mode == "strict":
            if bijection.strict_encode(back) != n:
                bad_text += 1
        elif back != t and t.is_strict_canonical():
            bad_text += 1
    label = "value round trip" if mode == "strict" else "text round trip (strict-canonical rows)"
    check(f"{label} for n = 1..{args.max_index}", bad_text == 0, f"{bad_text} misses")

    _write_exhibits(out)

    failures = sum(1 for ok in checks if not ok)
    out.write(f"verified {len(checks)} checks, {failures} failures\n")
    return EXIT_OK if failures == 0 else EXIT_VERIFY_FAILED


def _write_exhibits(out) -> None:
    """Known oddities of the default ("paper") counting, shown for the record.

    These are properties of that mode, not implementation defects, and
    they do not fail verification: strict mode exists to remove them.
    """
    out.write("-- exhibits (informational) --\n")
    dup = CanonicalTuple(1, 0, 0, 10)
    dup_index = bijection.encode(dup)
    base_index = bijection.encode(CanonicalTuple(1, 0, 0, 1))
    same = canonicalize(parse_decimal(reconstruct(dup))) == canonicalize(
        parse_decimal(reconstruct(bijection.decode(base_index)))
    )
    out.write(
        f"exhibit value-collision: paper-mode index {dup_index} renders "
        f"'{reconstruct(dup)}', same value as index {base_index} ('"
        f"{reconstruct(bijection.decode(base_index))}'): {'confirmed' if same else 'NOT CONFIRMED'}; "
        "strict mode assigns it no index\n"
    )

    claimed = 443730799861852551
    computed = bijection.encode_text("-47.0000000011")
    scan = oracle.index_of(
        canonicalize(parse_decimal("-47.0000000011")),
        oracle.OracleConfig(max_level=66, mode="paper"),
    )
    verdict = "INCONSISTENT" if claimed != computed else "consistent"
    out.write(
        f"exhibit reported-index audit: externally reported index {claimed} for "
        f"-47.0000000011 is {verdict} with the enumeration order; formulas give "
        f"{computed}, exhaustive oracle scan gives {scan}\n"
    )


def _bench_one(fn, arg, repeats: int = 9):
    best = None
    for _ in range(repeats):
        tally.reset()
        t0 = time.perf_counter_ns()
        fn(arg)
        elapsed = time.perf_counter_ns() - t0
        if best is None or elapsed < best:
            best = elapsed
    return tally.snapshot(), best


def run_bench(indices, strict: bool = False) -> list[dict]:
    """Measure per-call op counts and wall time for decode and encode."""
    unrank = bijection.strict_decode if strict else bijection.decode
    rank = bijection.strict_encode if strict else bijection.encode
    rows = []
    for index in indices:
        decode_ops, decode_ns = _bench_one(unrank, index)
        t = unrank(index)
        encode_ops, encode_ns = _bench_one(rank, t)
        rows.append(
            {
                "index": index,
                "digits": len(int_to_digits(index)),
                "decode_ops": decode_ops,
                "encode_ops": encode_ops,
                "decode_us": decode_ns / 1000.0,
                "encode_us": encode_ns / 1000.0,
            }
        )
    return rows


def _cmd_bench(args, out) -> int:
    try:
        if args.indices:
            indices = [_parse_index(part) for part in args.indices.split(",") if part.strip()]
        else:
            indices = list(BENCH_DEFAULT_INDICES)
        if not indices:
            raise IndexRangeError("no indices to bench")
        rows = run_bench(indices, strict=args.strict)
    except DecindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _exit_code_for(exc)
    out.write("index_digits\tdecode_ops(mul,div,sqrt,cbrt)\tencode_ops(mul,div,sqrt,cbrt)\tdecode_us\tencode_us\n")
    for row in rows:
        d, e = row["decode_ops"], row["encode_ops"]
        out.write(
            f"{row['digits']}\t"
            f"{d['mul']},{d['div']},{d['sqrt']},{d['cbrt']}\t"
            f"{e['mul']},{e['div']},{e['sqrt']},{e['cbrt']}\t"
            f"{row['decode_us']:.2f}\t{row['encode_us']:.2f}\n"
        )
    constant = len({tuple(sorted(r["decode_ops"].items())) for r in rows}) == 1 and (
        len({tuple(sorted(r["encode_ops"].items())) for r in rows}) == 1
    )
    out.write(f"op counts identical across indices: {'yes' if constant else 'NO'}\n")
    return EXIT_OK


def _exit_code_for(exc: DecindexError) -> int:
    if isinstance(exc, CanonicalityError):
        return EXIT_CANONICALITY
    if isinstance(exc, RenderBudgetError):
        return EXIT_RENDER_BUDGET
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
