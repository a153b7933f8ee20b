"""Command-line front end: shuffle, verify, table, zeta, check-hom.

Exit status: 0 all pass, 1 a verification failed, 2 usage or parse error,
3 a resource cap refused the computation.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from . import identities as ids
from .algebra import (
    DEFAULT_CAP,
    ENGINES,
    ShuffleTooLarge,
    ZetaExpansion,
    get_cap,
    set_cap,
    shuffle_blocks,
    shuffle_brute,
    shuffle_pivot,
    zeta_image,
)
from .numeric import NotAdmissible, PrecisionUnattainable, check_homomorphism, zeta_eval
from .words import X0, X1, format_word, parse_composition, parse_word, to_blocks, x0, x1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

_RANGE = re.compile(r"^([a-z]\w*)=(\d+)(?:\.\.(\d+))?$")


class UsageError(ValueError):
    pass


def parse_ranges(tokens: Sequence[str]) -> Dict[str, range]:
    """Parse ``name=lo..hi`` (inclusive) or ``name=v`` tokens."""
    out: Dict[str, range] = {}
    for tok in tokens:
        match = _RANGE.match(tok.strip())
        if not match:
            raise UsageError(f"malformed range {tok!r}; expected name=lo..hi or name=value")
        name, lo, hi = match.group(1), int(match.group(2)), match.group(3)
        hi = lo if hi is None else int(hi)
        if hi < lo:
            raise UsageError(f"empty range {tok!r}")
        out[name] = range(lo, hi + 1)
    return out


# --- verification ------------------------------------------------------------------

Diff = List[Tuple[str, int, int]]


def _diff_rows(expected, actual, label: str = "") -> Diff:
    fmt = expected._format_key
    return [(label + fmt(k), e, a) for k, (e, a) in expected.diff(actual).items()]


def _all_words(length: int) -> Iterator[tuple]:
    return product((X0, X1), repeat=length)


def _verify_lemma21(la: int, lb: int) -> Diff:
    rows: Diff = []
    for a in _all_words(la):
        for b in _all_words(lb):
            expected = shuffle_brute(a, b)
            for k in range(1, la + 1):
                label = f"{format_word(a)}|{format_word(b)}|k={k}:"
                rows += _diff_rows(expected, shuffle_pivot(a, b, k), label)
    return rows


def _verify_thm22(la: int, lb: int) -> Diff:
    rows: Diff = []
    for a in _all_words(la):
        for b in _all_words(lb):
            label = f"{format_word(a)}|{format_word(b)}:"
            rows += _diff_rows(shuffle_brute(a, b), shuffle_blocks(to_blocks(a), to_blocks(b)), label)
    return rows


def _verify_mixed(tag: str) -> Callable[..., Diff]:
    def run(*params: int) -> Diff:
        a, b = ids.identity_lhs(tag, *params)
        return _diff_rows(shuffle_brute(a, b), ids.mixed_identity(tag, *params))
    return run


def _verify_e23(m, n, j, k) -> Diff:
    return _diff_rows(shuffle_brute(x0(m) + x1(j), x0(n) + x1(k)), ids.theorem_1_1_words(m, n, j, k))


def _verify_thm11(m, n, j, k) -> Diff:
    oracle = shuffle_brute(x0(m) + x1(j), x0(n) + x1(k))
    return (_diff_rows(oracle, ids.theorem_1_1_words(m, n, j, k), "word:")
            + _diff_rows(zeta_image(oracle), ids.theorem_1_1_zeta(m, n, j, k), "zeta:"))


def _verify_euler(m, n) -> Diff:
    oracle = zeta_image(shuffle_brute(x0(m) + x1(), x0(n) + x1()))
    got = ids.euler_decomposition(m, n)
    return (_diff_rows(oracle, got, "shuffle:")
            + _diff_rows(ids.theorem_1_1_zeta(m, n, 1, 1), got, "thm11:"))


def _verify_thm13(m, n, j, k, s, t) -> Diff:
    oracle = shuffle_brute(x0(m) + x1(j), x0(n) + x1(k) + x0(s) + x1(t))
    return (_diff_rows(oracle, ids.theorem_1_3_words(m, n, j, k, s, t), "word:")
            + _diff_rows(zeta_image(oracle), ids.theorem_1_3_zeta(m, n, j, k, s, t), "zeta:"))


def _verify_e24(m, k, n) -> Diff:
    rows: Diff = []
    lhs, rhs = ids.hockey_stick(m, k)
    if lhs != rhs:
        rows.append(("head", rhs, lhs))
    lhs, rhs = ids.hockey_stick_tail(m, k, n)
    if lhs != rhs:
        rows.append(("tail", rhs, lhs))
    return rows


# identity -> (parameter names, lower bound per parameter, checker, extra tuple filter)
VERIFIERS: Dict[str, Tuple[Tuple[str, ...], int, Callable[..., Diff], Optional[Callable[..., bool]]]] = {
    "lemma21": (("la", "lb"), 0, _verify_lemma21, lambda la, lb: la >= 1),
    "thm22": (("la", "lb"), 0, _verify_thm22, None),
    "e23": (("m", "n", "j", "k"), 1, _verify_e23, None),
    "thm11": (("m", "n", "j", "k"), 1, _verify_thm11, None),
    "euler": (("m", "n"), 1, _verify_euler, None),
    "thm13": (("m", "n", "j", "k", "s", "t"), 1, _verify_thm13, None),
    "e24": (("m", "k", "n"), 0, _verify_e24, lambda m, k, n: m >= 1 and k <= n),
}
for _tag, _names in ids.IDENTITY_ARITY.items():
    VERIFIERS[_tag.lower()] = (_names, 1, _verify_mixed(_tag), None)


def run_verification(identity: str, ranges: Dict[str, range], timing: bool = False) -> Iterator[dict]:
    """Yield one report per parameter tuple, in sorted tuple order."""
    if identity not in VERIFIERS:
        raise UsageError(f"unknown identity {identity!r}; choose from {', '.join(sorted(VERIFIERS))}")
    names, lower, check, keep = VERIFIERS[identity]
    missing = [n for n in names if n not in ranges]
    extra = [n for n in ranges if n not in names]
    if missing or extra:
        raise UsageError(f"{identity} takes ranges for {', '.join(names)}"
                         + (f"; missing {', '.join(missing)}" if missing else "")
                         + (f"; unexpected {', '.join(extra)}" if extra else ""))
    for name in names:
        if ranges[name].start < lower:
            raise UsageError(f"{identity}: {name} must be >= {lower}")
    for params in product(*(ranges[n] for n in names)):
        if keep is not None and not keep(*params):
            continue
        started = time.perf_counter()
        report: dict = {"identity": identity, "params": dict(zip(names, params))}
        try:
            rows = check(*params)
        except ShuffleTooLarge:
            report["status"] = "skipped-too-large"
        else:
            report["status"] = "fail" if rows else "pass"
            if rows:
                report["diff"] = [list(r) for r in rows]
        if timing:
            report["elapsed"] = round(time.perf_counter() - started, 6)
        yield report


# --- rendering ----------------------------------------------------------------------


def _render_sum(p, as_json: bool) -> str:
    if as_json:
        return json.dumps([[p._format_key(k), c] for k, c in p.items()]) + "\n"
    return p.to_tsv()


def _render_trace(terms, as_json: bool, fmt: Callable) -> str:
    lines = []
    for t in terms:
        indices = ";".join(f"{k}={','.join(map(str, v)) if isinstance(v, tuple) else v}"
                           for k, v in t.indices)
        if as_json:
            lines.append(json.dumps({"branch": t.branch, "indices": indices,
                                     "term": fmt(t.key), "coefficient": t.coefficient}))
        else:
            lines.append(f"{t.coefficient}\t{fmt(t.key)}\t{t.branch}\t{indices}")
    return "".join(line + "\n" for line in lines)


# --- commands -------------------------------------------------------------------------


def cmd_shuffle(args) -> int:
    a, b = parse_word(args.word_a), parse_word(args.word_b)
    result = ENGINES[args.engine](a, b, cap=args.cap)
    sys.stdout.write(_render_sum(result, args.json))
    return EXIT_OK


def cmd_verify(args) -> int:
    ranges = parse_ranges(args.ranges)
    status = EXIT_OK
    skipped = False
    for report in run_verification(args.identity, ranges, timing=args.timing):
        if args.tsv:
            params = ",".join(f"{k}={v}" for k, v in report["params"].items())
            sys.stdout.write(f"{report['identity']}\t{params}\t{report['status']}\n")
        else:
            sys.stdout.write(json.dumps(report) + "\n")
        sys.stdout.flush()
        if report["status"] == "fail":
            status = EXIT_FAIL
        elif report["status"] == "skipped-too-large":
            skipped = True
    if status == EXIT_OK and skipped:
        return EXIT_CAP
    return status


def cmd_table(args) -> int:
    names, terms_fn = ids.ZETA_GENERATORS[args.kind]
    if len(args.params) != len(names):
        raise UsageError(f"table {args.kind} takes {len(names)} parameters ({', '.join(names)})")
    if args.trace:
        sys.stdout.write(_render_trace(terms_fn(*args.params), args.json, str))
        return EXIT_OK
    expansion = ZetaExpansion.from_terms((t.key, t.coefficient) for t in terms_fn(*args.params))
    sys.stdout.write(_render_sum(expansion, args.json))
    return EXIT_OK


def cmd_zeta(args) -> int:
    c = parse_composition(args.composition)
    r = zeta_eval(c, args.tol)
    if args.json:
        sys.stdout.write(json.dumps({"composition": str(c), "value": r.value,
                                     "error_bound": r.error_bound, "cutoff": r.cutoff}) + "\n")
    else:
        sys.stdout.write(f"value\t{r.value!r}\nerror_bound\t{r.error_bound!r}\ncutoff\t{r.cutoff}\n")
    return EXIT_OK


def cmd_check_hom(args) -> int:
    a, b = parse_word(args.word_a), parse_word(args.word_b)
    rep = check_homomorphism(a, b, args.tol)
    status = "pass" if rep.passed else "fail"
    fields = {"product": rep.lhs, "expansion": rep.rhs, "discrepancy": rep.discrepancy,
              "bound": rep.bound, "status": status}
    if args.json:
        sys.stdout.write(json.dumps(fields) + "\n")
    else:
        sys.stdout.write("".join(f"{k}\t{v!r}\n" if isinstance(v, float) else f"{k}\t{v}\n"
                                 for k, v in fields.items()))
    return EXIT_OK if rep.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest C(m+n, m) a shuffle may enumerate (default %(default)s)")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--tsv", action="store_true", help="emit tab-separated lines")

    parser = argparse.ArgumentParser(prog="shufflemzv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", parents=[common], help="print a III b as coefficient<TAB>word lines")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--engine", choices=sorted(ENGINES), default="brute")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("verify", parents=[common],
                       help="check an identity against the brute-force shuffle over parameter ranges")
    p.add_argument("identity", help=", ".join(sorted(VERIFIERS)))
    p.add_argument("ranges", nargs="+", help="name=lo..hi (inclusive) or name=value")
    p.add_argument("--timing", action="store_true", help="add elapsed seconds to each report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="print an MZV expansion as coefficient<TAB>composition")
    p.add_argument("kind", choices=sorted(ids.ZETA_GENERATORS))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--trace", action="store_true", help="list unaggregated terms with their indices")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("zeta", parents=[common], help="evaluate a multiple zeta value")
    p.add_argument("composition", help="comma-separated parts, e.g. 3,1,2")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("check-hom", parents=[common],
                       help="compare zeta(a) zeta(b) with the MZV image of a III b")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--tol", type=float, default=1e-4)
    p.set_defaults(func=cmd_check_hom)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    previous_cap = get_cap()
    try:
        set_cap(args.cap)
        return args.func(args)
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (ShuffleTooLarge, PrecisionUnattainable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NotAdmissible as exc:
        print(f"error: non-admissible: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_cap(previous_cap)


if __name__ == "__main__":
    sys.exit(main())
