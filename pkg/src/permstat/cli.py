"""
Command-line front end.

Every subcommand wraps one library computation and emits a single
OutputRecord in the chosen format.  JSON output is deterministic:
keys appear in the fixed order command, parameters, result, elapsed_ms
(only elapsed_ms varies between identical runs), and polynomial
coefficients are listed lowest degree first.

Exit codes: 0 on success, 2 when a verification ran and failed, 1 for
usage, parse, and resource errors.
"""
from __future__ import annotations

import argparse
import csv
import functools
import io
import itertools
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial

from . import tableaux, wilf_engine
from .errors import ExhaustionError, VerificationError
from .perm_core import enumerate_avoiders, is_permutation
from .statistics import (
    CHARGE,
    StatPolynomial,
    charge_values,
    merge_polynomials,
    parse_stat,
    stat_function,
    stat_polynomial,
)
from .tableaux import count_two_row, fast_ch_321, rsk_insert, syt_count_two_row_shape, tableau_shape

EXIT_PASS = 0
EXIT_ERROR = 1
EXIT_FAIL = 2


class CommandError(Exception):
    """Bad input or flag combination; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, reserving 2 for verified failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse '3,1,2' or (below size 10) the digit form '312'."""
    if text == "":
        return ()
    tokens = text.split(",") if "," in text else list(text)
    values = []
    for token in tokens:
        token = token.strip()
        if not token.isdigit():
            raise CommandError(f"invalid permutation token {token!r} in {text!r}")
        values.append(int(token))
    p = tuple(values)
    if not is_permutation(p):
        seen: set[int] = set()
        for v in values:
            if v in seen:
                raise CommandError(
                    f"invalid permutation {text!r}: value {v} appears more than once"
                )
            seen.add(v)
        missing = min(set(range(1, len(p) + 1)) - seen)
        raise CommandError(
            f"invalid permutation {text!r}: values must cover 1..{len(p)}, missing {missing}"
        )
    return p


def parse_ballot_word(text: str) -> tuple[int, ...]:
    if text == "":
        return ()
    tokens = text.split(",") if "," in text else list(text)
    letters = []
    for token in tokens:
        token = token.strip()
        if token not in ("1", "2"):
            raise CommandError(f"invalid ballot letter {token!r} in {text!r}")
        letters.append(int(token))
    word = tuple(letters)
    balance = 0
    for i, letter in enumerate(word):
        balance += 1 if letter == 1 else -1
        if balance < 0:
            raise CommandError(
                f"invalid ballot word {text!r}: prefix of length {i + 1} has more 2s than 1s"
            )
    return word


def _parse_pattern_flags(avoid: list[str] | None) -> frozenset[tuple[int, ...]]:
    return frozenset(parse_permutation(text) for text in (avoid or []))


def _parse_patternset(text: str) -> frozenset[tuple[int, ...]]:
    """A pattern set literal: patterns joined by '+', e.g. '132+213'."""
    return frozenset(parse_permutation(part) for part in text.split("+"))


def _fmt_perm(p) -> str:
    return ",".join(map(str, p))


def _fmt_word(w) -> str:
    return "".join(map(str, w))


def _fmt_patterns(patterns) -> list[str]:
    return [_fmt_perm(t) for t in sorted(patterns)]


def _fmt_set(patterns) -> str:
    return "+".join(_fmt_perm(t) for t in sorted(patterns))


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_json_safe(v) for v in value)
    return value


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    result: dict
    elapsed_ms: int

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "result": self.result,
            "elapsed_ms": self.elapsed_ms,
        }


def _text_block(value, indent: str) -> list[str]:
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)):
                lines.append(f"{indent}{k}:")
                lines.extend(_text_block(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            lines.append(f"{indent}{' '.join(map(str, value))}")
        else:
            for v in value:
                lines.extend(_text_block(v, indent))
    else:
        lines.append(f"{indent}{value}")
    return lines


def _render_text(record: OutputRecord) -> str:
    lines = [f"command: {record.command}"]
    lines.extend(_text_block(record.parameters, "  "))
    lines.append("result:")
    lines.extend(_text_block(record.result, "  "))
    lines.append(f"elapsed_ms: {record.elapsed_ms}")
    return "\n".join(lines)


def _csv_rows(record: OutputRecord) -> list[list]:
    result = record.result
    if "coefficients" in result:
        rows = [["degree", "coefficient"]]
        rows.extend([i, c] for i, c in enumerate(result["coefficients"]))
        return rows
    if "permutations" in result:
        return [["permutation"]] + [[p] for p in result["permutations"]]
    if "classes" in result:
        rows = [["class_index", "pattern_set"]]
        for i, cls in enumerate(result["classes"]):
            rows.extend([i, member] for member in cls)
        return rows
    rows = [["field", "value"]]
    for k, v in result.items():
        rows.append([k, json.dumps(_json_safe(v)) if isinstance(v, (dict, list)) else v])
    return rows


def _render(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.as_dict(), indent=2)
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerows(_csv_rows(record))
        return buffer.getvalue().rstrip("\n")
    return _render_text(record)


def _resolve_threads(threads: int | None) -> int:
    if threads is not None and threads < 1:
        raise CommandError("--threads must be a positive integer")
    return threads if threads is not None else (os.cpu_count() or 1)


def _poly_shard(n, patterns, stat, first) -> StatPolynomial:
    return stat_polynomial(n, patterns, stat, first=first)


def _avoid_shard(n, patterns, first) -> list:
    return list(enumerate_avoiders(n, patterns, first=first))


def _count_shard(n, patterns, first) -> int:
    return sum(1 for _ in enumerate_avoiders(n, patterns, first=first))


def _parallel_polynomial(n, patterns, stat, threads) -> StatPolynomial:
    workers = min(_resolve_threads(threads), max(n, 1))
    if workers <= 1 or n < 2:
        return stat_polynomial(n, patterns, stat)
    shard = functools.partial(_poly_shard, n, tuple(sorted(patterns)), stat)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(shard, range(1, n + 1)))
    return merge_polynomials(parts)


def _parallel_avoiders(n, patterns, threads) -> list:
    workers = min(_resolve_threads(threads), max(n, 1))
    if workers <= 1 or n < 2:
        return list(enumerate_avoiders(n, patterns))
    shard = functools.partial(_avoid_shard, n, tuple(sorted(patterns)))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [p for part in pool.map(shard, range(1, n + 1)) for p in part]


def _parallel_count(n, patterns, threads) -> int:
    workers = min(_resolve_threads(threads), max(n, 1))
    if workers <= 1 or n < 2:
        return sum(1 for _ in enumerate_avoiders(n, patterns))
    shard = functools.partial(_count_shard, n, tuple(sorted(patterns)))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(shard, range(1, n + 1)))


def _cmd_stat(args):
    p = parse_permutation(args.perm)
    stat = parse_stat(args.stat)
    params = {"perm": _fmt_perm(p), "stat": stat}
    result = {"value": stat_function(stat)(p)}
    if stat == CHARGE:
        result["charge_values"] = {str(v): c for v, c in sorted(charge_values(p).items())}
    return params, result, EXIT_PASS


def _cmd_poly(args):
    patterns = _parse_pattern_flags(args.avoid)
    stat = parse_stat(args.stat)
    if args.fast and (stat != CHARGE or patterns != frozenset({(3, 2, 1)})):
        raise CommandError("--fast applies only to --stat ch with exactly --avoid 321")
    params = {
        "n": args.n,
        "avoid": _fmt_patterns(patterns),
        "stat": stat,
        "fast": bool(args.fast),
        "threads": args.threads if args.threads is not None else "auto",
    }
    if args.fast:
        poly = fast_ch_321(args.n)
    else:
        poly = _parallel_polynomial(args.n, patterns, stat, args.threads)
    result = {"coefficients": list(poly.coeffs), "coefficient_sum": poly.total()}
    return params, result, EXIT_PASS


def _cmd_avoid(args):
    patterns = _parse_pattern_flags(args.avoid)
    params = {
        "n": args.n,
        "avoid": _fmt_patterns(patterns),
        "count_only": bool(args.count),
        "threads": args.threads if args.threads is not None else "auto",
    }
    if args.count:
        result = {"count": _parallel_count(args.n, patterns, args.threads)}
    else:
        perms = _parallel_avoiders(args.n, patterns, args.threads)
        result = {"count": len(perms), "permutations": [_fmt_perm(p) for p in perms]}
    return params, result, EXIT_PASS


def _cmd_classes(args):
    stat = parse_stat(args.stat)
    if args.candidate:
        candidates = [_parse_patternset(text) for text in args.candidate]
    else:
        if not 1 <= args.size <= 6:
            raise CommandError("--size must be between 1 and 6")
        candidates = [
            frozenset(c) for c in itertools.combinations(wilf_engine.S3, args.size)
        ]
    params = {
        "stat": stat,
        "nmax": args.nmax,
        "candidates": sorted(_fmt_set(c) for c in candidates),
    }
    report = wilf_engine.st_wilf_classes(candidates, stat, args.nmax)
    result = {
        "n_range": list(report.n_range),
        "classes": [[_fmt_set(member) for member in cls] for cls in report.classes],
        "witness_polynomials": {
            _fmt_set(pi): [list(poly.coeffs) for poly in polys]
            for pi, polys in sorted(report.witness_polynomials.items(), key=lambda kv: sorted(kv[0]))
        },
    }
    return params, result, EXIT_PASS


def _require(args, name: str):
    value = getattr(args, name.lstrip("-").replace("-", "_"))
    if value is None:
        raise CommandError(f"verify {args.target} requires {name}")
    return value


def _report_payload(report) -> dict:
    return {
        "n_range": list(report.n_range),
        "classes": [[_fmt_set(member) for member in cls] for cls in report.classes],
        "witness_polynomials": {
            _fmt_set(pi): [list(poly.coeffs) for poly in polys]
            for pi, polys in sorted(report.witness_polynomials.items(), key=lambda kv: sorted(kv[0]))
        },
    }


def _verify_lemma1(args):
    n = _require(args, "--n")
    passed = wilf_engine.verify_lemma1(n)
    return {"n": n}, {"passed": passed, "permutations_checked": factorial(n)}


def _verify_lemma2(args):
    n = _require(args, "--n")
    mapping = wilf_engine.verify_lemma2(n)
    correspondence = {_fmt_perm(s): _fmt_perm(t) for s, t in sorted(mapping.items())}
    return {"n": n}, {"passed": True, "correspondence": correspondence}


def _verify_theorem3(args):
    nmax = _require(args, "--nmax")
    stat = parse_stat(args.stat or "ch")
    report = wilf_engine.verify_theorem3(nmax, stat)
    return {"nmax": nmax, "stat": stat}, {"passed": True, **_report_payload(report)}


def _verify_theorem4(args):
    nmax = _require(args, "--nmax")
    stat = parse_stat(args.stat or "ch")
    report = wilf_engine.verify_theorem4(nmax, stat)
    return {"nmax": nmax, "stat": stat}, {"passed": True, **_report_payload(report)}


def _verify_lemma5(args):
    k = _require(args, "--k")
    passed = tableaux.verify_lemma5(k)
    n = 2**k - 1
    total = 1 + sum(syt_count_two_row_shape(n, r) ** 2 for r in range(1, n // 2 + 1))
    return {"k": k}, {"passed": passed, "n": n, "avoider_count": total}


def _verify_theorem8(args):
    k = _require(args, "--k")
    passed = tableaux.verify_theorem8(k)
    poly = fast_ch_321(2**k - 1)
    return {"k": k}, {
        "passed": passed,
        "n": 2**k - 1,
        "coefficients": list(poly.coeffs),
        "coefficient_sum": poly.total(),
    }


def _verify_corollary9(args):
    k = _require(args, "--k")
    passed = tableaux.verify_corollary9(k)
    n = 2**k - 1
    if k <= 3:
        poly = stat_polynomial(n, [(3, 2, 1)], "maj")
    else:
        poly = fast_ch_321(n)
    return {"k": k}, {
        "passed": passed,
        "n": n,
        "coefficients": list(poly.coeffs),
        "coefficient_sum": poly.total(),
    }


def _verify_involution(args):
    n = _require(args, "--n")
    passed = tableaux.verify_involution(n)
    return {"n": n}, {"passed": passed, "two_row_words": count_two_row(n)}


_VERIFY_TARGETS = {
    "lemma1": _verify_lemma1,
    "lemma2": _verify_lemma2,
    "theorem3": _verify_theorem3,
    "theorem4": _verify_theorem4,
    "lemma5": _verify_lemma5,
    "theorem8": _verify_theorem8,
    "corollary9": _verify_corollary9,
    "involution": _verify_involution,
}


def _cmd_verify(args):
    handler = _VERIFY_TARGETS[args.target]
    try:
        params, result = handler(args)
    except VerificationError as exc:
        params = {"target": args.target}
        result = {"passed": False, "error": str(exc)}
        if exc.witness is not None:
            result["witness"] = _json_safe(exc.witness)
        return params, result, EXIT_FAIL
    params = {"target": args.target, **params}
    code = EXIT_PASS if result.get("passed", True) else EXIT_FAIL
    return params, result, code


def _cmd_rsk(args):
    p = parse_permutation(args.perm)
    P, Q = rsk_insert(p)
    params = {"perm": _fmt_perm(p)}
    result = {
        "shape": list(tableau_shape(P)),
        "p_rows": [list(row) for row in P],
        "q_rows": [list(row) for row in Q],
    }
    return params, result, EXIT_PASS


def _cmd_involution(args):
    word = parse_ballot_word(args.word)
    image = tableaux.involution_phi(word)
    params = {"word": _fmt_word(word)}
    result = {
        "rank": tableaux.ballot_rank(word),
        "image": _fmt_word(image),
        "image_rank": tableaux.ballot_rank(image),
    }
    return params, result, EXIT_PASS


def _add_format(parser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )


def _add_threads(parser) -> None:
    parser.add_argument(
        "--threads", type=int, default=None, metavar="N",
        help="enumeration shards run in parallel (default: machine parallelism)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="permstat",
        description="Permutation statistics, avoidance sets, and equivalence checks.",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("stat", help="evaluate a statistic on one permutation")
    p.add_argument("--perm", required=True, help="permutation, e.g. 3,2,8,5,7,4,6,1,9 (digit form ok below size 10)")
    p.add_argument("--stat", required=True, help="maj | ch | inv")
    _add_format(p)
    p.set_defaults(handler=_cmd_stat)

    p = sub.add_parser("poly", help="statistic generating polynomial over an avoidance set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", action="append", metavar="PATTERN", help="forbidden pattern (repeatable)")
    p.add_argument("--stat", required=True, help="maj | ch | inv")
    p.add_argument("--fast", action="store_true", help="tableau route; only for --stat ch --avoid 321")
    _add_threads(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("avoid", help="list or count an avoidance set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", action="append", metavar="PATTERN")
    p.add_argument("--count", action="store_true", help="emit the count only")
    _add_threads(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_avoid)

    p = sub.add_parser("classes", help="st-Wilf equivalence classes of pattern sets")
    p.add_argument("--stat", required=True, help="maj | ch | inv")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--size", type=int, default=1, help="use all size-k subsets of S_3 (default 1)")
    p.add_argument(
        "--candidate", action="append", metavar="SET",
        help="explicit pattern set, patterns joined by '+', e.g. 132+213 (repeatable)",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_classes)

    p = sub.add_parser("verify", help="run a named verification")
    p.add_argument("target", choices=sorted(_VERIFY_TARGETS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--stat", help="maj | ch (theorem3/theorem4 only)")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("rsk", help="insertion and recording tableaux of a permutation")
    p.add_argument("--perm", required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_rsk)

    p = sub.add_parser("involution", help="apply the two-row pairing involution to a ballot word")
    p.add_argument("--word", required=True, help="ballot word over {1,2}, e.g. 1121")
    _add_format(p)
    p.set_defaults(handler=_cmd_involution)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_ERROR
    start = time.perf_counter()
    try:
        params, result, code = args.handler(args)
    except CommandError as exc:
        print(f"permstat: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ExhaustionError, ValueError) as exc:
        print(f"permstat: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    record = OutputRecord(args.command, params, result, elapsed_ms)
    print(_render(record, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
