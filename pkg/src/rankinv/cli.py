"""Command-line surface.

Subcommands: gen, hseq, classify, qsum, fsdim, zeros, experiment,
paper-examples.  Sequences come out as CSV, verdicts and reports as JSON.
Exit codes: 0 success, 2 usage, 3 budget exceeded, 4 math precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .errors import BudgetError, PreconditionError
from .experiment import ExperimentConfig, run_experiment
from .forms import parse_form, tightness_form, zero_cosets, zero_cosets_delta
from .gfcore import get_field
from .geometry import DEFAULT_MAX_ENUM, linear_set, system_of
from .hilbert import classify, fs_intersection_dim_eval, fs_intersection_dim_system, \
    hilbert_sequence
from .paperexamples import run_paper_examples
from .rankcodes import DEFAULT_MAX_CODEWORDS, delta_rank, gabidulin, is_mrd, \
    parse_code, qsum_dim, random_systematic, serialize_code


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_code(args):
    with open(args.codefile) as fh:
        text = fh.read()
    ctx = get_field(args.field) if args.field else None
    return parse_code(text, ctx)


def _emit_json(obj, path=None):
    _write(json.dumps(obj, indent=2) + "\n", path)


def cmd_gen(args) -> int:
    ctx = get_field(args.field)
    if args.family == "gabidulin":
        if args.evals:
            evals = [ctx.from_string(tok) for tok in args.evals.split(",")]
        else:
            evals = ctx.basis()[: args.n]
        if len(evals) != args.n:
            raise PreconditionError(
                f"need {args.n} evaluation points, have {len(evals)} "
                f"(n cannot exceed m = {ctx.m})")
        code = gabidulin(ctx, evals, args.k, args.s)
    else:
        code = random_systematic(ctx, args.n, args.k, args.seed)
    if args.check_mrd and not is_mrd(code, args.max_codewords):
        raise PreconditionError("generated code is not MRD")
    _write(serialize_code(code), args.output)
    print(f"# {args.family} code: q={ctx.q} m={ctx.m} n={code.n} k={code.k} "
          f"seed={args.seed} s={args.s}", file=sys.stderr)
    return 0


def cmd_hseq(args) -> int:
    code = _read_code(args)
    if args.emit_linear_set:
        ls = linear_set(system_of(code), args.max_enum)
        ctx = code.ctx
        lines = []
        for p in range(len(ls)):
            entries = " ".join(
                ctx.to_string(ctx.element(ls.points[p, j])) for j in range(ls.k))
            lines.append(f"{entries} {int(ls.weights[p])}")
        _write("\n".join(lines) + "\n", args.output)
        return 0
    rep = hilbert_sequence(code, args.max_enum, args.max_degree)
    lines = ["i,h_i,ideal_dim_i"]
    for i in range(rep.regularity + 4):
        lines.append(f"{i},{rep.value_at(i)},{rep.ideal_dim_at(i, code.k)}")
    lines.append(f"regularity,{rep.regularity},point_count,{rep.point_count}")
    _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_classify(args) -> int:
    code = _read_code(args)
    if code.k >= code.n:
        raise PreconditionError("classifier needs k < n")
    verdict, evidence = classify(code, measure=args.measure, max_enum=args.max_enum)
    out = {"verdict": verdict}
    out.update(evidence)
    _emit_json(out, args.output)
    return 0


def cmd_qsum(args) -> int:
    code = _read_code(args)
    upto = args.upto if args.upto is not None else max(code.n - code.k, 1)
    lines = ["i,dim_lambda_i"]
    for i in range(upto + 1):
        lines.append(f"{i},{qsum_dim(code, i)}")
    _write("\n".join(lines) + "\n", args.output)
    return 0


def cmd_fsdim(args) -> int:
    code = _read_code(args)
    r = delta_rank(code, args.s)
    ls = linear_set(system_of(code), args.max_enum)
    out = {
        "s": args.s,
        "delta_rank": r,
        "dim_system": fs_intersection_dim_system(code, args.s),
        "dim_eval": fs_intersection_dim_eval(ls, code.ctx, args.s),
        "predicted": _comb2(code.k - r),
    }
    _emit_json(out, args.output)
    return 0


def _comb2(a: int) -> int:
    return a * (a - 1) // 2 if a >= 2 else 0


def cmd_zeros(args) -> int:
    ctx = get_field(args.field)
    if args.tightness:
        form = tightness_form(ctx, args.k, args.s)
    elif args.form:
        with open(args.form) as fh:
            form = parse_form(fh.read(), ctx)
    else:
        raise PreconditionError("zeros needs --form FILE or --tightness")
    delta = gcd(form.s, ctx.m)
    rep = zero_cosets(form, args.max_enum) if delta == 1 \
        else zero_cosets_delta(form, args.max_enum)
    out = {
        "s": rep.s,
        "delta": rep.delta,
        "r": rep.r,
        "zero_count": rep.zero_count,
        "lower_bound": rep.lower_bound,
        "upper_bound": rep.upper_bound,
        "multiplier": rep.multiplier,
        "subspace_dims": rep.subspace_dims,
        "tight": rep.tight,
    }
    _emit_json(out, args.output)
    return 0


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig(field=args.field, n=args.n, k=args.k,
                           trials=args.trials, seed=args.seed,
                           record=tuple(args.record.split(",")),
                           max_enum=args.max_enum)
    summary, records = run_experiment(cfg)
    if args.csv:
        lines = ["trial,seed,degenerate,delta_rank,qsum1,h_qplus1,sequence"]
        for r in records:
            seq = ";".join(map(str, r.sequence)) if r.sequence else ""
            lines.append(f"{r.trial},{r.seed},{int(r.degenerate)},"
                         f"{r.delta_rank if r.delta_rank is not None else ''},"
                         f"{r.qsum1 if r.qsum1 is not None else ''},"
                         f"{r.h_qplus1 if r.h_qplus1 is not None else ''},{seq}")
        with open(args.csv, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    _emit_json(summary.as_dict(), args.output)
    return 0


def cmd_paper_examples(args) -> int:
    return 0 if run_paper_examples(print) else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rankinv",
        description="invariants and distinguishers for linear rank-metric codes")
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p, code_input=True):
        p.add_argument("--field", help="catalog key (e.g. gf256) or inline spec")
        p.add_argument("-o", "--output", help="write to file instead of stdout")
        p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                       help="budget for exhaustive enumerations")
        if code_input:
            p.add_argument("codefile", help="code file in the text format")

    p = sub.add_parser("gen", help="generate and serialize a code")
    p.add_argument("--field", required=True)
    p.add_argument("--family", choices=("gabidulin", "random"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--evals", help="comma-separated element strings for gabidulin")
    p.add_argument("--check-mrd", action="store_true")
    p.add_argument("--max-codewords", type=int, default=DEFAULT_MAX_CODEWORDS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("hseq", help="dimension sequence as CSV")
    add_common(p)
    p.add_argument("--max-degree", type=int, default=64)
    p.add_argument("--emit-linear-set", action="store_true",
                   help="print the linear set (point entries and weight) instead")
    p.set_defaults(func=cmd_hseq)

    p = sub.add_parser("classify", help="gabidulin/random verdict as JSON")
    add_common(p)
    p.add_argument("--measure", action="store_true",
                   help="also measure h_{q+1} from the linear set")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("qsum", help="q-sum dimensions as CSV")
    add_common(p)
    p.add_argument("--upto", type=int, help="largest i (default n-k)")
    p.set_defaults(func=cmd_qsum)

    p = sub.add_parser("fsdim", help="dim of F_s meet the vanishing ideal, both routes")
    add_common(p)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_fsdim)

    p = sub.add_parser("zeros", help="zero-coset census of a form")
    p.add_argument("--field", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--form", help="form file")
    p.add_argument("--tightness", action="store_true",
                   help="use the built-in bound-attaining form")
    p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("experiment", help="seeded batch of random codes")
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--record", default="delta,hq1,qsum",
                   help="comma list from delta,hq1,qsum,hseq")
    p.add_argument("--csv", help="write per-trial rows to this file")
    p.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("paper-examples", help="recompute the stored worked examples")
    p.set_defaults(func=cmd_paper_examples)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (PreconditionError, FileNotFoundError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def run():  # console entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
