"""Command-line entry point: ``halfspec <subcommand> ...``.

Every subcommand prints a RunReport as JSON on stdout and exits 0 iff all
of its checks pass.  Bundled fixtures can be referred to by bare file name
(``--input exp_pi.csv``) when no such file exists in the working directory.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from . import flow as fl
from . import io as hio
from .errors import HalfspecError, ParseError
from .invariants import (
    heat_trace,
    heat_trace_leading_coefficient,
    standard_operator_report,
    standard_operator_zeta,
    zeta_determinant,
)
from .operator import solve_bvp_full
from .scale import embedding_tail_norm, rayleigh_search
from .transform import ModeWindow, forward, inverse, parseval_gap

DEFAULT_K = 32
DEFAULT_N = 128
SMALL_T_GRID = (1e-4, 4e-4, 1e-3)


@dataclass
class Check:
    name: str
    passed: bool
    measured: float
    tolerance: float

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "measured": self.measured, "tolerance": self.tolerance}


@dataclass
class RunReport:
    subcommand: str
    inputs: dict
    outputs: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, measured: float, tolerance: float) -> None:
        measured = float(measured)
        self.checks.append(Check(name, bool(np.isfinite(measured) and measured <= tolerance), measured, tolerance))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return _finite({
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": [c.to_dict() for c in self.checks],
            "ok": self.ok,
        })

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)


def _finite(obj):
    """Replace non-finite floats by None so the report stays strict JSON."""
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, complex):
        return {"re": _finite(obj.real), "im": _finite(obj.imag)}
    return obj


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("halfspec") / "fixtures" / name))


def resolve_input(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    bundled = fixture_path(p.name)
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"input file not found: {path}")


def _window_for(N: int, K: int | None) -> ModeWindow:
    return ModeWindow(K if K is not None else min(DEFAULT_K, N // 2))


def cmd_transform(args) -> RunReport:
    src = resolve_input(args.input)
    report = RunReport("transform", {"input": str(src), "direction": args.direction, "K": args.K, "N": args.N})
    if args.direction == "forward":
        g = hio.read_grid(src, args.format)
        w = _window_for(g.N, args.K)
        c = forward(g, w)
        report.inputs.update(K=w.K, N=g.N)
        report.check("parseval_gap", parseval_gap(g, w), 1e-13)
        roundtrip = np.max(np.abs(forward(inverse(c, g.N), w).values - c.values))
        report.check("roundtrip", roundtrip, 1e-13)
        if args.output:
            hio.write_coeffs(c, args.output, args.format)
        report.outputs = {"K": w.K, "coefficients": [[v.real, v.imag] for v in c.values.tolist()]}
    else:
        c = hio.read_coeffs(src, args.format)
        N = args.N if args.N is not None else max(DEFAULT_N, 2 * c.window.K)
        g = inverse(c, N)
        report.inputs.update(K=c.window.K, N=N)
        roundtrip = np.max(np.abs(forward(g, c.window).values - c.values))
        report.check("roundtrip", roundtrip, 1e-13)
        report.check("parseval_gap", parseval_gap(g, c.window), 1e-13)
        if args.output:
            hio.write_grid(g, args.output, args.format)
        report.outputs = {"N": N, "samples": [[v.real, v.imag] for v in g.values.tolist()]}
    return report


def cmd_solve(args) -> RunReport:
    src = resolve_input(args.input)
    g = hio.read_grid(src, args.format)
    if args.N is not None and args.N != g.N:
        raise ParseError(f"--N={args.N} does not match the {g.N} samples in {src}")
    w = _window_for(g.N, args.K)
    sol = solve_bvp_full(g, w)
    report = RunReport("solve", {"input": str(src), "K": w.K, "N": g.N})
    report.outputs = {
        **sol.report(),
        "min_abs_frequency": float(np.min(np.abs(w.frequencies))),
        "parseval_gap_input": parseval_gap(g, w),
        "u": [[v.real, v.imag] for v in sol.u.values.tolist()],
    }
    report.check("residual", sol.residual, 1e-12)
    report.check("antiperiodicity_gap", sol.antiperiodicity_gap, 1e-12)
    if args.output:
        hio.write_grid(sol.u, args.output, args.format)
    return report


def cmd_zeta_det(args) -> RunReport:
    det = zeta_determinant()
    report = RunReport("zeta-det", {})
    report.outputs = det.to_dict()
    report.check("deriv_eq_minus_log2", abs(det.zeta_deriv_at_zero + math.log(2)), 1e-9)
    report.check("det_eq_2", abs(det.determinant - 2.0), 1e-9)
    report.check("closed_form_vs_finite_difference", det.cross_check_gap, 1e-7)
    return report


def cmd_standard_zeta(args) -> RunReport:
    report = RunReport("standard-zeta", {"s": args.s})
    z = standard_operator_zeta(args.s)
    report.outputs = {
        "zeta_with_zero_mode": z.with_zero_mode.to_dict(),
        "zeta_without_zero_mode": z.without_zero_mode.to_dict(),
        "at_zero": standard_operator_report(),
    }
    # well-posedness of the evaluation only; no determinant is asserted
    report.check("zeta_without_zero_mode_at_0_eq_minus_1",
                 abs(standard_operator_zeta(0.0).without_zero_mode.value + 1), 1e-11)
    return report


def cmd_heat_trace(args) -> RunReport:
    ts = np.geomspace(args.t_min, args.t_max, args.points)
    samples = [heat_trace(t) for t in ts]
    fit = heat_trace_leading_coefficient(SMALL_T_GRID)
    report = RunReport("heat-trace", {"t_min": args.t_min, "t_max": args.t_max, "points": args.points})
    report.outputs = {
        "samples": [s.to_dict() for s in samples],
        "small_t_fit": fit.to_dict(),
        "candidate_constants": {
            "inv_sqrt_pi": 1 / math.sqrt(math.pi),
            "half": 0.5,
            "sqrt_pi": math.sqrt(math.pi),
        },
    }
    report.check("triple_agreement", max(s.max_gap for s in samples), 1e-11)
    report.check("small_t_constant_sqrt_pi", fit.gap_sqrt_pi, 1e-6)
    return report


def family_from_spec(spec: dict) -> fl.PerturbationFamily:
    """Build a family from its JSON description.

    ``{"type": "scalar_shift", "K": 4, "c": -1}``,
    ``{"type": "rank_one", "K": 4, "mode": 0, "strength": -2}``,
    ``{"type": "matrix_path", "K": 1, "start": M0, "end": M1}`` with matrix
    entries either real or ``[re, im]``.
    """
    kind = spec.get("type")
    w = ModeWindow(int(spec.get("K", 4)))
    if kind == "scalar_shift":
        return fl.scalar_shift(w, float(spec["c"]))
    if kind == "rank_one":
        return fl.rank_one(w, int(spec.get("mode", 0)), float(spec["strength"]))
    if kind == "matrix_path":
        def mat(rows):
            return [[complex(*e) if isinstance(e, list) else complex(e) for e in row] for row in rows]
        return fl.matrix_path(w, mat(spec["start"]), mat(spec["end"]))
    raise ParseError(f"unknown family type {kind!r}")


def cmd_spectral_flow(args) -> RunReport:
    src = resolve_input(args.family)
    try:
        spec = json.loads(src.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if args.K is not None:
        spec["K"] = args.K
    fam = family_from_spec(spec)
    cfg = fl.FlowConfig(zero_tol=args.zero_tol)
    result = fl.compute_flow(fam, cfg)
    report = RunReport("spectral-flow", {"family": spec, "zero_tol": args.zero_tol})
    report.outputs = result.to_dict()
    report.check("endpoint_vs_crossing_sum", abs(result.flow - result.crossing_sum), 0)
    if "expected_flow" in spec:
        report.check("expected_flow", abs(result.flow - int(spec["expected_flow"])), 0)
    if args.curves:
        ts, curves = fl.eigencurves(fam, cfg.n_samples)
        header = "t," + ",".join(f"lambda{i + 1}" for i in range(curves.shape[1]))
        np.savetxt(args.curves, np.column_stack([ts, curves]), delimiter=",", header=header, comments="")
    return report


def cmd_embed_norm(args) -> RunReport:
    Ns = [int(n) for n in args.N_list.split(",")]
    rng = np.random.default_rng(args.seed)
    report = RunReport("embed-norm", {"N_list": Ns, "s": args.s, "seed": args.seed})
    rows = []
    for n in Ns:
        exact = embedding_tail_norm(n, args.s)
        measured = rayleigh_search(n, args.s, rng=rng)
        rows.append({"N": n, "formula": exact, "measured": measured})
        report.check(f"tail_rate_N{n}", abs(measured - exact), 1e-3)
    report.outputs = {"rows": rows}
    return report


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="halfspec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common_io(sp):
        sp.add_argument("--input", required=True)
        sp.add_argument("--output")
        sp.add_argument("--format", choices=("csv", "json"))
        sp.add_argument("--K", type=int)
        sp.add_argument("--N", type=int)

    sp = sub.add_parser("transform", help="forward/inverse twisted transform")
    common_io(sp)
    sp.add_argument("--direction", choices=("forward", "inverse"), default="forward")
    sp.set_defaults(func=cmd_transform)

    sp = sub.add_parser("solve", help="solve A~ u = g for antiperiodic u")
    common_io(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("zeta-det", help="zeta-regularized determinant of |A~|")
    sp.set_defaults(func=cmd_zeta_det)

    sp = sub.add_parser("standard-zeta", help="comparison with the periodic derivative operator")
    sp.add_argument("--s", type=float, default=2.0)
    sp.set_defaults(func=cmd_standard_zeta)

    sp = sub.add_parser("heat-trace", help="heat trace by direct sum, theta function and Poisson form")
    sp.add_argument("--t-min", type=float, default=0.01)
    sp.add_argument("--t-max", type=float, default=5.0)
    sp.add_argument("--points", type=int, default=20)
    sp.set_defaults(func=cmd_heat_trace)

    sp = sub.add_parser("spectral-flow", help="spectral flow of a perturbed family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--K", type=int)
    sp.add_argument("--zero-tol", type=float, default=1e-9)
    sp.add_argument("--curves", help="optional CSV dump of the eigencurves")
    sp.set_defaults(func=cmd_spectral_flow)

    sp = sub.add_parser("embed-norm", help="tail norm of the scale embedding")
    sp.add_argument("--N-list", default="0,10,100")
    sp.add_argument("--s", type=float, default=0.0)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_embed_norm)
    return p


def main(argv=None) -> int:
    precision = os.environ.get("HALFSPEC_PRECISION", "double")
    if precision != "double":
        print(json.dumps({"error": f"HALFSPEC_PRECISION={precision!r} unsupported; only 'double'"}), file=sys.stderr)
        return 2
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (HalfspecError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2
    print(report.to_json())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
