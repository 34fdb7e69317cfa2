"""JSON conversion of reports; exact numbers become "p/q" strings."""

from __future__ import annotations

from fractions import Fraction

from .cohomology import CohomTable, InstantonReport
from .kronecker import GammaEval, K12Status, KroneckerReport, ScanReport, SplitVerdict
from .linalg import RatMatrix
from .moduli import ModuliInfo, OrbitProbeReport
from .monad import A2Status, ConditionReport, LinFormMatrix


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def matrix_json(M: RatMatrix) -> list[list[str]]:
    return [[rat_str(x) for x in M.row(i)] for i in range(M.rows)]


def linform_matrix_json(L: LinFormMatrix) -> list[list[str]]:
    return [[str(e) for e in row] for row in L.entries]


def int_vec(v) -> list[int]:
    return [int(x) for x in v]


def a2_json(a2: A2Status) -> dict:
    out: dict = {"kind": a2.kind}
    if a2.samples is not None:
        out["samples"] = a2.samples
    if a2.witness_h is not None:
        out["h"] = int_vec(a2.witness_h)
    if a2.witness_v is not None:
        out["v"] = int_vec(a2.witness_v)
    return out


def condition_report_json(rep: ConditionReport) -> dict:
    return {
        "rank_A": rep.rank_a,
        "a1_expected": rep.a1_expected,
        "a1_ok": rep.a1_ok,
        "a2": a2_json(rep.a2),
        "a3_ok": rep.a3_ok,
        "q_subset": list(rep.q_subset),
        "precheck": rep.precheck,
        "notes": list(rep.notes),
        "passed": rep.passed,
    }


def gamma_json(g: GammaEval) -> dict:
    return {
        "P": [rat_str(x) for x in g.P],
        "Q": [rat_str(x) for x in g.Q],
        "matrix": matrix_json(g.M),
    }


def verdict_json(v: SplitVerdict) -> dict:
    out = {"verdict": v.verdict, "det": rat_str(v.determinant)}
    if v.pfaffian is not None:
        out["pfaffian"] = rat_str(v.pfaffian)
    return out


def scan_report_json(rep: ScanReport) -> dict:
    return {
        "samples": rep.samples,
        "trivial": rep.trivial,
        "jumping": rep.jumping,
        "degenerate": rep.degenerate,
        "witnesses": [
            {"P": int_vec(w.P), "Q": int_vec(w.Q), "det": rat_str(w.determinant)}
            for w in rep.witnesses
        ],
        "fraction_trivial": rat_str(rep.fraction_trivial),
        "seed": rep.seed,
        "box": rep.box,
    }


def k12_json(s: K12Status) -> dict:
    out: dict = {"kind": s.kind}
    if s.samples is not None:
        out["samples"] = s.samples
    if s.witness_v is not None:
        out["v"] = int_vec(s.witness_v)
    if s.witness_h is not None:
        out["h"] = int_vec(s.witness_h)
    return out


def kronecker_report_json(rep: KroneckerReport) -> dict:
    return {
        "k1": k12_json(rep.k1),
        "k2": k12_json(rep.k2),
        "rank_gamma_hat": rep.rank_gamma_hat,
        "expected_rank_2c_plus_r": rep.expected_rank,
        "printed_alt_rank_2n_plus_r": rep.printed_alt_rank,
        "matches_expected": rep.matches_expected,
        "matches_printed_alt": rep.matches_printed_alt,
        "passed": rep.passed,
    }


def cohom_table_json(table: CohomTable) -> dict:
    return {
        "c": table.c,
        "n": table.n,
        "r": table.r,
        "kmin": table.kmin,
        "kmax": table.kmax,
        "entries": {
            f"({i},{k})": {"dim": e.dim, "cert": e.cert}
            for (i, k), e in sorted(table.entries.items())
        },
        "warnings": list(table.warnings),
    }


def instanton_report_json(rep: InstantonReport) -> dict:
    return {
        "conditions": {name: ok for name, ok in rep.conditions},
        "charge_computed": rep.charge_computed,
        "charge_expected": rep.charge_expected,
        "chi_consistent": rep.chi_consistent,
        "rank_bundle": rep.rank_bundle,
        "passed": rep.passed,
    }


def moduli_json(info: ModuliInfo) -> dict:
    return {
        "c": info.c,
        "n": info.n,
        "ambient_dim": info.ambient_dim,
        "group_dim": info.group_dim,
        "dim": info.dim,
        "possibly_empty": info.possibly_empty,
    }


def orbit_probe_json(rep: OrbitProbeReport) -> dict:
    return {
        "trials": rep.trials,
        "panel_size": rep.panel_size,
        "violations": list(rep.violations),
        "isotropy_ok": rep.isotropy_ok,
        "passed": rep.passed,
    }
