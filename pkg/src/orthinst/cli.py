"""Command-line surface: parse, dispatch, render.

Subcommands: verify, monad, splitting, scan-lines, kronecker, cohomology,
moduli-dim, generate.  Exit codes: 0 when the requested check passes, 2 when
the mathematics says no (a condition is violated, generation is exhausted),
1 on usage or schema errors.  ``--json`` switches to machine output whose
bytes are deterministic for a fixed input and seed, except the timing field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import jsonio
from .cohomology import h_table, verify_instanton
from .errors import (
    GenerationExhausted,
    OrthinstError,
    RankMismatch,
    SchemaError,
    UsageError,
)
from .kronecker import gamma_eval, kronecker_conditions, scan_lines, splitting_type
from .linalg import RatMatrix
from .moduli import moduli_dim
from .monad import (
    LinFormMatrix,
    NondegStrategy,
    build_alpha,
    build_beta,
    build_beta_full,
    check_conditions,
    verify_monad_identity,
)
from .specfile import SpecFile, generate, parse_spec, serialize_spec

USAGE_EXIT = 1
MATH_EXIT = 2


@dataclass
class Report:
    command: tuple[str, ...]
    input_hash: str | None
    results: dict
    warnings: tuple[str, ...]
    timing_ms: float
    exit_code: int
    human: str = field(default="", repr=False)

    def to_json_dict(self) -> dict:
        return {
            "command": list(self.command),
            "input_hash": self.input_hash,
            "results": self.results,
            "warnings": list(self.warnings),
            "timing_ms": self.timing_ms,
            "exit_code": self.exit_code,
        }


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _grid(cells: list[list[str]]) -> str:
    if not cells:
        return "(empty)"
    widths = [max(len(row[j]) for row in cells) for j in range(len(cells[0]))]
    lines = []
    for row in cells:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines)


def format_rat_matrix(M: RatMatrix) -> str:
    return _grid(jsonio.matrix_json(M))


def format_linform_matrix(L: LinFormMatrix) -> str:
    return _grid(jsonio.linform_matrix_json(L))


def _build_parser() -> _Parser:
    p = _Parser(prog="orthinst", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def add_spec_cmd(name, help_text):
        q = sub.add_parser(name, help=help_text)
        q.add_argument("spec", help="path of a spec JSON file")
        q.add_argument("--json", action="store_true", dest="as_json")
        q.add_argument("--seed", type=int, default=0)
        return q

    q = add_spec_cmd("verify", "check the form conditions and prechecks")
    q.add_argument("--r", type=int, default=None, help="override the rank from the file")
    q.add_argument("--budget", type=int, default=1000)
    q.add_argument("--box", type=int, default=10)

    q = add_spec_cmd("monad", "build the monad maps and verify the identity")
    q.add_argument("--r", type=int, default=None)

    q = add_spec_cmd("splitting", "evaluate the line pencil at one point pair")
    q.add_argument("--P", type=_int_list, required=True)
    q.add_argument("--Q", type=_int_list, required=True)

    q = add_spec_cmd("scan-lines", "sample lines and tally splitting verdicts")
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--box", type=int, default=10)

    q = add_spec_cmd("kronecker", "check the pencil-module conditions")
    q.add_argument("--r", type=int, default=None)
    q.add_argument("--budget", type=int, default=200)
    q.add_argument("--box", type=int, default=10)

    q = add_spec_cmd("cohomology", "cohomology table and vanishing checks")
    q.add_argument("--r", type=int, default=None)
    q.add_argument("--kmin", type=int, default=-4)
    q.add_argument("--kmax", type=int, default=0)

    q = sub.add_parser("moduli-dim", help="moduli dimension count")
    q.add_argument("--c", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--json", action="store_true", dest="as_json")

    q = sub.add_parser("generate", help="generate a verified spec")
    q.add_argument("--c", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--mode", choices=["pure", "sum"], default="pure")
    q.add_argument("--terms", type=int, default=3, help="term count for sum mode")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("-o", "--output", default=None, help="write the spec here instead of stdout")
    q.add_argument("--json", action="store_true", dest="as_json")
    return p


def _load(args) -> tuple[SpecFile, str]:
    path = Path(args.spec)
    sf = parse_spec(path)
    digest = hashlib.sha256(path.read_bytes()).hexdigest()
    return sf, digest


def _effective_r(args, sf: SpecFile) -> int:
    return sf.r if getattr(args, "r", None) is None else args.r


def run_command(argv: list[str]) -> Report:
    """Dispatch one CLI invocation and return its report (never raises for
    usage or mathematical failures; those set the exit code)."""
    t0 = time.perf_counter()
    try:
        args = _build_parser().parse_args(argv)
        report = _dispatch(args, argv)
    except (UsageError, SchemaError, OSError, ValueError, OrthinstError) as e:
        code = USAGE_EXIT
        if isinstance(e, (GenerationExhausted, RankMismatch)):
            code = MATH_EXIT
        report = Report(
            command=tuple(argv),
            input_hash=None,
            results={"error": type(e).__name__, "message": str(e)},
            warnings=(),
            timing_ms=0.0,
            exit_code=code,
            human=f"error: {e}",
        )
    report.timing_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    return report


def _dispatch(args, argv) -> Report:
    cmd = args.cmd
    warnings: list[str] = []
    if cmd == "moduli-dim":
        info = moduli_dim(args.c, args.n)
        results = {"moduli": jsonio.moduli_json(info)}
        human = (
            f"moduli dimension for c={info.c}, n={info.n}: {info.dim}\n"
            f"  ambient {info.ambient_dim} - group {info.group_dim}"
            + ("\n  warning: negative dimension hints at emptiness" if info.possibly_empty else "")
        )
        if info.possibly_empty:
            warnings.append("negative dimension hints at emptiness")
        return Report(tuple(argv), None, results, tuple(warnings), 0.0, 0, human)

    if cmd == "generate":
        sf, attempts = generate(args.c, args.n, mode=args.mode, seed=args.seed, num_terms=args.terms)
        text = serialize_spec(sf)
        digest = hashlib.sha256(text.encode()).hexdigest()
        if args.output:
            Path(args.output).write_text(text)
            human = f"wrote verified spec to {args.output} (attempt {attempts})"
        else:
            human = text.rstrip("\n") + f"\n-- verified on attempt {attempts}"
        results = {"spec": sf.to_json_dict(), "attempts": attempts}
        return Report(tuple(argv), digest, results, (), 0.0, 0, human)

    sf, digest = _load(args)
    F = sf.flatten()

    if cmd == "verify":
        r = _effective_r(args, sf)
        rep = check_conditions(F, r, NondegStrategy(budget=args.budget, seed=args.seed, box=args.box))
        results = {"conditions": jsonio.condition_report_json(rep)}
        lines = [
            f"rank A = {rep.rank_a} (expected 2c+r = {rep.a1_expected})",
            f"A1 {'ok' if rep.a1_ok else 'FAIL'} | A2 {rep.a2.kind} | A3 {'ok' if rep.a3_ok else 'FAIL'}",
            f"precheck: {rep.precheck}",
        ]
        lines += [f"note: {note}" for note in rep.notes]
        lines.append("verdict: PASS" if rep.passed else "verdict: FAIL")
        return Report(tuple(argv), digest, results, tuple(rep.notes), 0.0, 0 if rep.passed else MATH_EXIT, "\n".join(lines))

    if cmd == "monad":
        r = _effective_r(args, sf)
        beta = build_beta(F, r)
        if 2 * sf.c + r == F.size:
            alpha = build_alpha(sf.c, sf.n)
        else:
            from .linalg import principal_rank_subset

            alpha = build_alpha(sf.c, sf.n, S=principal_rank_subset(F.M))
        # the vanishing statement lives on the unrestricted pair; below full
        # rank the displayed restricted maps are only a basis presentation
        identity_ok = verify_monad_identity(build_alpha(sf.c, sf.n), build_beta_full(F))
        results = {
            "alpha": jsonio.linform_matrix_json(alpha),
            "beta_t": jsonio.linform_matrix_json(beta.transpose()),
            "identity_zero": identity_ok,
        }
        human = (
            "alpha =\n" + format_linform_matrix(alpha) + "\n\n"
            "beta^t =\n" + format_linform_matrix(beta.transpose()) + "\n\n"
            + ("composition beta.alpha = 0: ok" if identity_ok else "composition beta.alpha != 0: FAIL")
        )
        return Report(tuple(argv), digest, results, (), 0.0, 0 if identity_ok else MATH_EXIT, human)

    if cmd == "splitting":
        g = gamma_eval(F, args.P, args.Q)
        v = splitting_type(F, args.P, args.Q)
        results = {"gamma": jsonio.gamma_json(g), "split": jsonio.verdict_json(v)}
        human = (
            f"gamma(P={args.P}, Q={args.Q}) =\n" + format_rat_matrix(g.M)
            + f"\ndet = {jsonio.rat_str(v.determinant)}"
            + (f", pfaffian = {jsonio.rat_str(v.pfaffian)}" if v.pfaffian is not None else "")
            + f"\nverdict: {v.verdict}"
        )
        return Report(tuple(argv), digest, results, (), 0.0, 0, human)

    if cmd == "scan-lines":
        rep = scan_lines(F, args.samples, seed=args.seed, box=args.box)
        results = {"scan": jsonio.scan_report_json(rep)}
        human = (
            f"{rep.samples} sampled lines: {rep.trivial} trivial, {rep.jumping} jumping, "
            f"{rep.degenerate} degenerate (fraction trivial {jsonio.rat_str(rep.fraction_trivial)})"
        )
        if rep.witnesses:
            human += "\njumping witnesses:"
            for w in rep.witnesses:
                human += f"\n  P={list(w.P)} Q={list(w.Q)} det={jsonio.rat_str(w.determinant)}"
        return Report(tuple(argv), digest, results, (), 0.0, 0, human)

    if cmd == "kronecker":
        r = _effective_r(args, sf)
        rep = kronecker_conditions(F, r, budget=args.budget, seed=args.seed, box=args.box)
        results = {"kronecker": jsonio.kronecker_report_json(rep)}
        human = (
            f"K1: {rep.k1.kind} | K2 (dual): {rep.k2.kind}\n"
            f"rank of the linearized map = {rep.rank_gamma_hat}; "
            f"2c+r = {rep.expected_rank} ({'match' if rep.matches_expected else 'MISMATCH'}), "
            f"2n+r = {rep.printed_alt_rank} ({'match' if rep.matches_printed_alt else 'mismatch'})\n"
            + ("verdict: PASS" if rep.passed else "verdict: FAIL")
        )
        return Report(tuple(argv), digest, results, (), 0.0, 0 if rep.passed else MATH_EXIT, human)

    if cmd == "cohomology":
        r = _effective_r(args, sf)
        table = h_table(F, r, args.kmin, args.kmax)
        inst = verify_instanton(F, r)
        results = {"table": jsonio.cohom_table_json(table), "instanton": jsonio.instanton_report_json(inst)}
        cells = [["h^i \\ k"] + [str(k) for k in range(table.kmin, table.kmax + 1)]]
        for i in range(table.n, -1, -1):
            cells.append([f"i={i}"] + [str(table.dim(i, k)) for k in range(table.kmin, table.kmax + 1)])
        human = _grid(cells)
        human += "\nconditions: " + ", ".join(f"{name}: {'ok' if ok else 'FAIL'}" for name, ok in inst.conditions)
        human += f"\ncharge recomputed = {inst.charge_computed} (expected {inst.charge_expected})"
        human += f"\nrank of the bundle = {inst.rank_bundle}; chi bookkeeping {'ok' if inst.chi_consistent else 'FAIL'}"
        for w in table.warnings:
            human += f"\nwarning: {w}"
        ok = inst.passed and not table.warnings
        return Report(tuple(argv), digest, results, table.warnings, 0.0, 0 if ok else MATH_EXIT, human)

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    as_json = "--json" in argv
    report = run_command(argv)
    if as_json:
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        print(report.human)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
