"""Command-line front end: ``python -m incpat <command> ...``.

Exit status: 0 on success / all checks passing, 1 when a verification or OEIS
comparison fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from pathlib import Path

from . import brute, enumeration, oeis, series
from .multiset import canonicalize

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _mult_list(text: str) -> tuple[int, ...]:
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
        return canonicalize(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad multiplicity list {text!r}: {exc}")


def _pattern_length(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if r < 2:
        raise argparse.ArgumentTypeError("r must be >= 2")
    return r


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text: str) -> int:
    n = _nonneg(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _render(fmt, command, params, n, value):
    """One output line for a scalar or a TPoly value."""
    is_poly = isinstance(value, enumeration.TPoly)
    if fmt == "structured":
        rec = {"command": command, "parameters": params, "n": n}
        if is_poly:
            rec["coefficients"] = list(value.coeffs)
        else:
            rec["value"] = value
        return json.dumps(rec, sort_keys=True)
    text = " ".join(map(str, value.coeffs or (0,))) if is_poly else str(value)
    if fmt == "bfile":
        if is_poly:
            raise UsageError("bfile format holds integer sequences only")
        return f"{n} {text}"
    return text


def _emit(args, command, params, items):
    # render everything first so a usage error leaves no partial output
    lines = [_render(args.format, command, params, n, v) for n, v in items]
    with _output(args.out) as fh:
        for line in lines:
            fh.write(line + "\n")
    return EXIT_OK


def _progress(args, msg):
    if args.verbose:
        print(msg, file=sys.stderr, flush=True)


def cmd_count(args):
    v = enumeration.count_avoiders(args.m, args.r)
    return _emit(args, "count", {"m": list(args.m), "r": args.r}, [(0, v)])


def cmd_weight(args):
    v = enumeration.weight_enumerator(args.m, args.r)
    return _emit(args, "weight", {"m": list(args.m), "r": args.r}, [(0, v)])


def cmd_perm(args):
    items = [(n, enumeration.count_permutations(n, args.r)) for n in range(args.nmax + 1)]
    return _emit(args, "perm", {"r": args.r}, items)


def cmd_uniform(args):
    f = enumeration.weight_uniform if args.weighted else enumeration.count_uniform
    items = []
    for n in range(args.nmax + 1):
        items.append((n, f(args.s, n, args.r)))
        _progress(args, f"uniform s={args.s} r={args.r}: n={n} done")
    params = {"s": args.s, "r": args.r, "weighted": args.weighted}
    return _emit(args, "uniform", params, items)


def _cluster_report(r, kmax):
    name = f"cluster r={r} k<={kmax}"
    for k in range(1, kmax + 1):
        got = brute.oracle_cluster_poly(k, r)
        want = enumeration.p_poly(k, r)
        if got != want:
            return series.VerificationReport(name, False, k - 1, k, want, got)
    return series.VerificationReport(name, True, kmax)


def cmd_verify(args):
    if args.kind == "series":
        report = series.verify_against_recurrence(args.nvars, args.r, args.degree, args.weighted)
    elif args.kind == "egf":
        report = series.egf_check(args.r, args.nmax)
    else:
        report = _cluster_report(args.r, args.kmax)
    if args.format == "structured":
        line = json.dumps(
            {
                "command": "verify",
                "parameters": {"kind": args.kind, "r": args.r},
                "name": report.name,
                "passed": report.passed,
                "checked": report.checked,
                "mismatch": None if report.passed else str(report.mismatch),
            },
            sort_keys=True,
        )
    else:
        line = report.summary()
    with _output(args.out) as fh:
        fh.write(line + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oeis_check(args):
    bindings = oeis.load_bindings(args.bindings)
    ids = args.id or sorted(bindings)
    unknown = [i for i in ids if i not in bindings]
    if unknown:
        raise UsageError(f"unknown sequence id(s): {', '.join(unknown)}")
    data_dir = Path(args.data_dir) if args.data_dir else oeis.default_data_dir()
    status = EXIT_OK
    lines = []
    for ident in ids:
        path = oeis.bfile_path(data_dir, ident)
        if not path.exists():
            lines.append(f"{ident}: no snapshot at {path}")
            status = EXIT_FAIL
            continue
        record = oeis.read_bfile(path, ident)
        _progress(args, f"checking {ident} ({len(record)} terms)")
        report = oeis.compare_sequence(bindings[ident], record, args.max_terms)
        lines.append(report.summary())
        if not report.passed:
            status = EXIT_FAIL
    with _output(args.out) as fh:
        for line in lines:
            fh.write(line + "\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "bfile", "structured"), default="plain")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")

    p = argparse.ArgumentParser(
        prog="incpat",
        description="Count words by occurrences of the consecutive pattern 12...r.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="words of a multiset avoiding 12...r")
    c.add_argument("--m", type=_mult_list, required=True, help="multiplicities, e.g. 2,1,1")
    c.add_argument("--r", type=_pattern_length, required=True)
    c.set_defaults(func=cmd_count)

    w = sub.add_parser("weight", parents=[common], help="weight enumerator in t (ascending coefficients)")
    w.add_argument("--m", type=_mult_list, required=True)
    w.add_argument("--r", type=_pattern_length, required=True)
    w.set_defaults(func=cmd_weight)

    pm = sub.add_parser("perm", parents=[common], help="permutations avoiding 12...r, n = 0..nmax")
    pm.add_argument("--r", type=_pattern_length, required=True)
    pm.add_argument("--nmax", type=_nonneg, required=True)
    pm.set_defaults(func=cmd_perm)

    u = sub.add_parser("uniform", parents=[common], help="words in 1^s..n^s, n = 0..nmax")
    u.add_argument("--s", type=_positive, required=True)
    u.add_argument("--r", type=_pattern_length, required=True)
    u.add_argument("--nmax", type=_nonneg, required=True)
    u.add_argument("--weighted", action="store_true", help="print weight enumerators instead")
    u.set_defaults(func=cmd_uniform)

    v = sub.add_parser("verify", parents=[common], help="generating-function and cluster checks")
    v.add_argument("kind", choices=("series", "egf", "cluster"))
    v.add_argument("--r", type=_pattern_length, required=True)
    v.add_argument("--nvars", type=_positive, default=3)
    v.add_argument("--degree", type=_nonneg, default=6)
    v.add_argument("--weighted", action="store_true")
    v.add_argument("--nmax", type=_nonneg, default=15)
    v.add_argument("--kmax", type=_positive, default=10)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oeis-check", parents=[common], help="compare against OEIS b-file snapshots")
    o.add_argument("--id", action="append", help="A-number; repeatable; default all bound ids")
    o.add_argument("--bindings", default=None, help="binding table (TSV); default: bundled")
    o.add_argument("--data-dir", default=None, help="directory of bNNNNNN.txt files")
    o.add_argument("--max-terms", type=_positive, default=None)
    o.set_defaults(func=cmd_oeis_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, oeis.BindingError, OSError) as exc:
        print(f"incpat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
