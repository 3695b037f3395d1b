"""Command-line front end.

Exit codes: 0 when the queried property holds, 1 when it does not,
2 on usage, parse or size errors (and on oracle disagreement).
"""

from __future__ import annotations

import argparse
import sys

from . import boolmat, compiler, netlang, observe, oracle, reach


class CliError(Exception):
    pass


def _load_model(path: str) -> netlang.NetworkModel:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read model file: {exc}") from exc
    try:
        return netlang.parse_network(text)
    except netlang.NetworkParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _compile(model: netlang.NetworkModel, max_size: int | None) -> compiler.AlgebraicForm:
    try:
        if max_size is not None:
            return compiler.algebraic_form(model, max_vars=max_size)
        return compiler.algebraic_form(model)
    except compiler.SizeLimitError as exc:
        raise CliError(str(exc)) from exc


def _emit(title: str, mat) -> None:
    print(f"{title}:")
    print(mat.to_text())


def cmd_compile(args) -> int:
    model = _load_model(args.model)
    form = _compile(model, args.max_size)
    print(compiler.render_algebraic(form), end="")
    return 0


def cmd_controllability(args) -> int:
    model = _load_model(args.model)
    form = _compile(model, args.max_size)
    m = reach.one_step_matrix(form)
    c = reach.controllability_matrix(m)
    report = reach.ReachReport(c)
    print("controllable" if report.globally_controllable else "not controllable")
    if args.emit_matrices:
        _emit("M", m)
        _emit("C", c)
    status = 0 if report.globally_controllable else 1
    if args.oracle:
        agree = oracle.reach_oracle(model) == c
        print("oracle: agree" if agree else "oracle: DISAGREE")
        if not agree:
            return 2
    return status


def cmd_set_controllability(args) -> int:
    model = _load_model(args.model)
    form = _compile(model, args.max_size)
    try:
        with open(args.sets, encoding="utf-8") as fh:
            p0, pd = reach.load_set_spec(fh.read(), form.n)
    except (OSError, ValueError) as exc:
        raise CliError(f"bad set specification: {exc}") from exc
    for w in p0.warnings + pd.warnings:
        print(f"warning: {w}", file=sys.stderr)
    c = reach.controllability_matrix(reach.one_step_matrix(form))
    j0 = reach.index_matrix(p0)
    jd = reach.index_matrix(pd)
    cs = reach.set_controllability_matrix(c, j0, jd)
    holds = cs.is_all_ones()
    print("set controllable" if holds else "not set controllable")
    if args.emit_matrices:
        _emit("C", c)
        _emit("J0", j0)
        _emit("Jd", jd)
        _emit("C_S", cs)
    if args.oracle:
        cs_oracle = reach.set_controllability_matrix(oracle.reach_oracle(model), j0, jd)
        agree = cs_oracle == cs
        print("oracle: agree" if agree else "oracle: DISAGREE")
        if not agree:
            return 2
    return 0 if holds else 1


def cmd_output_controllability(args) -> int:
    model = _load_model(args.model)
    form = _compile(model, args.max_size)
    if form.p == 0 or form.trivial_output:
        raise CliError("model declares no outputs; output controllability is undefined")
    c = reach.controllability_matrix(reach.one_step_matrix(form))
    cy = reach.output_controllability_matrix(c, form)
    holds = cy.is_all_ones()
    print("output controllable" if holds else "not output controllable")
    if args.emit_matrices:
        _emit("C", c)
        _emit("C_Y", cy)
    if args.oracle:
        cy_oracle = reach.output_controllability_matrix(oracle.reach_oracle(model), form)
        agree = cy_oracle == cy
        print("oracle: agree" if agree else "oracle: DISAGREE")
        if not agree:
            return 2
    return 0 if holds else 1


def cmd_observability(args) -> int:
    model = _load_model(args.model)
    form = _compile(model, args.max_size)
    if form.p == 0 or form.trivial_output:
        raise CliError("model declares no outputs; observability is undefined")
    try:
        report = observe.observability_verdict(form, want_witnesses=args.witness)
    except observe.SizeLimitError as exc:
        raise CliError(str(exc)) from exc
    cs_row = None
    if args.emit_matrices and report.flags:
        bits = sum(1 << k for k, f in enumerate(report.flags) if f)
        cs_row = boolmat.BooleanMatrix(1, len(report.flags), [bits])
    print(observe.render_report(report, cs_row))
    if args.oracle:
        truth = dict(oracle.distinguish_oracle(model))
        mine = dict(zip(report.theta, report.flags))
        agree = truth == mine
        print("oracle: agree" if agree else "oracle: DISAGREE")
        if not agree:
            return 2
    return 0 if report.observable else 1


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(
        prog="bcn",
        description="Boolean control network analysis (controllability, "
        "set controllability, output controllability, observability).",
    )
    sub = root.add_subparsers(dest="command", required=True)

    def common(p, sets=False, witness=False):
        p.add_argument("model", help=".bcn model file")
        p.add_argument("--max-size", type=int, default=None, metavar="BITS",
                       help="override the n+m flat-compilation limit")
        if sets:
            p.add_argument("--sets", required=True, help="JSON set-specification file")
        p.add_argument("--emit-matrices", action="store_true",
                       help="dump the analysis matrices in canonical text form")
        if witness:
            p.add_argument("--witness", action="store_true",
                           help="attach shortest distinguishing control sequences")
        p.add_argument("--oracle", action="store_true",
                       help="cross-check against the brute-force oracle")

    p = sub.add_parser("compile", help="emit the algebraic form (L and H)")
    p.add_argument("model")
    p.add_argument("--max-size", type=int, default=None, metavar="BITS")
    p.add_argument("--emit", choices=["algebraic"], default="algebraic")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("controllability", help="decide controllability")
    common(p)
    p.set_defaults(func=cmd_controllability)

    p = sub.add_parser("set-controllability", help="decide set controllability")
    common(p, sets=True)
    p.set_defaults(func=cmd_set_controllability)

    p = sub.add_parser("output-controllability", help="decide output controllability")
    common(p)
    p.set_defaults(func=cmd_output_controllability)

    p = sub.add_parser("observability", help="decide observability")
    common(p, witness=True)
    p.set_defaults(func=cmd_observability)

    return root


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; keep its code.
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (oracle.SizeLimitError, compiler.SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
