"""Command-line front end.

Exit status: 0 on success, 1 on input errors, 2 when a size budget or the
j <= n iteration cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis
from .code import ORACLE_BUDGET, LinearCode, char_function, oracle_coset_profile, oracle_weight_distribution
from .codefile import parse_code_file, parse_function_file
from .errors import BudgetError, IterationCapError
from .projective import THETA_BUDGET, build_table, theta
from .spectral import (
    FullSpectrum,
    ReducedSpectrum,
    dump_full,
    dump_reduced,
    reduced_transform,
    transform_full,
)

_JSON_SAFE = 1 << 53


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _num(x):
    x = int(x)
    return str(x) if abs(x) > _JSON_SAFE else x


def _emit(args, code_or_field, analysis_name, method, result, per_j=None, text=""):
    if args.json:
        if isinstance(code_or_field, LinearCode):
            q, n, k = code_or_field.field.q, code_or_field.n, code_or_field.k
        else:
            q, n, k = code_or_field.q, None, None
        doc = {
            "q": q,
            "n": n,
            "k": k,
            "analysis": analysis_name,
            "method": method,
            "result": result,
            "per_j": per_j or [],
        }
        sys.stdout.write(json.dumps(doc, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text)


def _load_code(args) -> LinearCode:
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise _InputError(str(exc)) from None
    return parse_code_file(text)


def _budgets(args):
    if args.budget is None:
        return THETA_BUDGET, ORACLE_BUDGET
    return args.budget, args.budget


def _write_spectra(path, sections):
    with open(path, "w") as fh:
        for title, spec in sections:
            fh.write(f"# {title}\n")
            fh.write(dump_reduced(spec))


def _per_j(report):
    return [{"j": j, "nonzero": c} for j, c in report.per_j_nonzero.items()]


def cmd_weight_dist(args):
    code = _load_code(args)
    theta_budget, oracle_budget = _budgets(args)
    method = args.method
    if method == "auto":
        method = "transform" if code.k == 0 or theta(code.field.q, code.k) <= theta_budget else "oracle"
    if method == "transform":
        if code.k and theta(code.field.q, code.k) > theta_budget:
            raise BudgetError(f"theta({code.field.q},{code.k}) exceeds budget {theta_budget}")
        A = list(analysis.code_weight_distribution(code).A)
        tag = "reduced"
    else:
        A = oracle_weight_distribution(code, oracle_budget)
        tag = analysis.ORACLE
    text = "".join(f"A_{w} = {a}\n" for w, a in enumerate(A) if a)
    _emit(args, code, "weight-dist", tag, [_num(a) for a in A], text=text)


def cmd_covering_radius(args):
    code = _load_code(args)
    theta_budget, oracle_budget = _budgets(args)
    keep = bool(args.dump_spectra)
    rep = analysis.covering_radius(
        code, args.method, args.start_j, theta_budget, oracle_budget, keep_spectra=keep
    )
    if keep and rep.spectra is not None:
        f = char_function(code, build_table(code.field, code.redundancy))
        sections = [("h", f), ("h_hat", reduced_transform(f.table, f))]
        sections += [(f"decision j={j}", s) for j, s in rep.spectra.items()]
        _write_spectra(args.dump_spectra, sections)
    lines = [f"rho = {rep.covering_radius}\n", f"method = {rep.method}\n"]
    for j, c in rep.per_j_nonzero.items():
        lines.append(f"  j={j:<3d} nonzero points = {c}\n")
    for note in rep.notes:
        lines.append(f"note: {note}\n")
    _emit(args, code, "covering-radius", rep.method, rep.covering_radius, _per_j(rep), "".join(lines))


def cmd_coset_leaders(args):
    code = _load_code(args)
    theta_budget, oracle_budget = _budgets(args)
    method = args.method
    r = code.redundancy
    if method == "auto":
        method = "transform" if r == 0 or theta(code.field.q, r) <= theta_budget else "oracle"
    if method == "transform":
        prof = analysis.coset_leader_distribution_transform(code, theta_budget)
    else:
        prof = oracle_coset_profile(code, oracle_budget)
    counts = {w: c for w, c in sorted(prof.counts.items()) if w > 0}
    width = max([len(str(c)) for c in counts.values()] + [5])
    lines = [f"{'weight':>6}  {'count':>{width}}\n"]
    lines += [f"{w:>6}  {c:>{width}}\n" for w, c in counts.items()]
    lines.append(f"rho = {prof.covering_radius}\n")
    lines += [f"note: {n}\n" for n in prof.notes]
    _emit(args, code, "coset-leaders", prof.method, {str(w): _num(c) for w, c in counts.items()}, text="".join(lines))


def cmd_oracle(args):
    code = _load_code(args)
    _, oracle_budget = _budgets(args)
    prof = oracle_coset_profile(code, oracle_budget)
    try:
        A = oracle_weight_distribution(code, oracle_budget)
    except BudgetError:
        A = None
    leaders = {str(w): c for w, c in sorted(prof.counts.items()) if w > 0}
    result = {
        "covering_radius": prof.covering_radius,
        "coset_leaders": leaders,
        "weight_distribution": None if A is None else [_num(a) for a in A],
    }
    lines = [f"rho = {prof.covering_radius}\n"]
    lines += [f"leaders of weight {w}: {c}\n" for w, c in leaders.items()]
    if A is not None:
        lines += [f"A_{w} = {a}\n" for w, a in enumerate(A) if a]
    _emit(args, code, "oracle", analysis.ORACLE, result, text="".join(lines))


def _value_json(v):
    return _num(int(v)) if v.is_integer() else [_num(c) for c in v.coeffs]


def cmd_transform(args):
    try:
        text = Path(args.input).read_text()
    except OSError as exc:
        raise _InputError(str(exc)) from None
    ff = parse_function_file(text)
    theta_budget, _ = _budgets(args)
    if ff.domain == "reduced":
        table = build_table(ff.field, ff.s, theta_budget)
        out = reduced_transform(table, ReducedSpectrum.from_values(table, ff.values))
        dump = dump_reduced(out)
        result = {"domain": "reduced", "values": [_num(v) for v in out.values()]}
        tag = "reduced"
    else:
        kwargs = {} if args.budget is None else {"budget": args.budget}
        h = FullSpectrum.from_values(ff.field, ff.s, ff.values)
        out = transform_full(h, naive=args.naive, **kwargs)
        dump = dump_full(out)
        result = {"domain": "full", "values": [_value_json(v) for v in out.values]}
        tag = "naive" if args.naive else "butterfly"
    if args.dump_spectra:
        Path(args.dump_spectra).write_text(dump)
    _emit(args, ff.field, "transform", tag, result, text=dump)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, metavar="PATH")
    common.add_argument("--method", choices=("auto", "transform", "oracle"), default="auto")
    common.add_argument("--start-j", type=int, default=None, dest="start_j")
    common.add_argument("--json", action="store_true")
    common.add_argument("--budget", type=int, default=None, help="max theta / q^(n-k) sizes")
    common.add_argument("--dump-spectra", metavar="PATH", default=None, dest="dump_spectra")

    parser = _Parser(prog="covrad", description="Weight distribution and covering radius of linear codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("weight-dist", parents=[common], help="weight distribution").set_defaults(func=cmd_weight_dist)
    sub.add_parser("covering-radius", parents=[common], help="covering radius").set_defaults(
        func=cmd_covering_radius
    )
    sub.add_parser("coset-leaders", parents=[common], help="coset-leader weight counts").set_defaults(
        func=cmd_coset_leaders
    )
    sub.add_parser("oracle", parents=[common], help="brute-force analyses").set_defaults(func=cmd_oracle)
    tp = sub.add_parser("transform", parents=[common], help="transform a function file")
    tp.add_argument("--naive", action="store_true", help="use the kernel-matrix apply")
    tp.set_defaults(func=cmd_transform)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (BudgetError, IterationCapError) as exc:
        print(f"covrad: {exc}", file=sys.stderr)
        return 2
    except (_InputError, ValueError) as exc:
        print(f"covrad: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
