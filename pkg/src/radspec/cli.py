"""Command-line front end: single solves, the 25-state table, figure datasets.

Every emitted file carries a schema version and the full parameter set so
a run can be reproduced from its output alone; identical invocations
produce byte-identical files.  Plot rendering is out of scope - the CSV
and JSON datasets feed any external plotter.

Exit codes: 0 success, 2 usage or parse failure, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .envelope import envelope_bound
from .interpolation import (
    anchors_for_state,
    build_cubic,
    format_table1,
    interpolated_energy,
    table1,
)
from .nbody import quark_model_sweep
from .potentials import PotentialError, QuantumNumbers, RadialPotential, parse_potential
from .solver import EigenSolveConfig, EigensolverError, solve_radial

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    rows: list[dict]
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "rows": self.rows,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        lines = [f"# schema_version={self.schema_version}", f"# command={self.command}"]
        for key in sorted(self.parameters):
            lines.append(f"# {key}={_fmt(self.parameters[key])}")
        if self.rows:
            header = list(self.rows[0].keys())
            lines.append(",".join(header))
            for row in self.rows:
                lines.append(",".join(_fmt(row[k]) for k in header))
        return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _emit(record: OutputRecord, out: str | None, fmt: str) -> None:
    text = record.to_json() if fmt == "json" else record.to_csv()
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _parse_grid(spec: str) -> np.ndarray:
    try:
        lo_s, hi_s, n_s = spec.split(":")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
        if n < 2 or hi <= lo:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be lo:hi:steps with hi > lo, steps >= 2, got {spec!r}")
    return np.linspace(lo, hi, n)


def _config_from_args(args) -> EigenSolveConfig:
    return EigenSolveConfig(energy_tolerance=args.tol)


def cmd_eigen(args) -> int:
    try:
        pot = parse_potential(args.pot)
    except PotentialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cfg = _config_from_args(args)
    try:
        res = solve_radial(pot, QuantumNumbers(args.n, args.l), cfg)
    except EigensolverError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    record = OutputRecord(
        command="eigen",
        parameters={"pot": args.pot, "n": args.n, "l": args.l, "tol": args.tol},
        rows=[
            {
                "energy": res.energy,
                "nodes": res.nodes,
                "residual": res.residual,
                "converged": res.converged,
            }
        ],
    )
    _emit(record, args.out, args.format or "json")
    return EXIT_OK if res.converged else EXIT_NUMERICAL


def cmd_table1(args) -> int:
    cfg = _config_from_args(args)
    try:
        rows = table1(cfg)
    except EigensolverError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    record = OutputRecord(
        command="table1",
        parameters={"tol": args.tol},
        rows=[
            {
                "n": r.n,
                "l": r.ell,
                "P0": r.p_log,
                "P1": r.p_linear,
                "E_approx_half": r.e_approx_half,
                "E_half": r.e_exact_half,
                "percent_error": r.percent_error,
            }
            for r in rows
        ],
    )
    print(format_table1(rows))
    if args.out:
        _emit(record, args.out, args.format or "csv")
    elif args.format:
        _emit(record, None, args.format)
    return EXIT_OK


FIGURE_STATES = tuple(
    QuantumNumbers(n, ell) for ell in range(0, 6) for n in range(1, 6)
)  # 30 states: the l = 5 column is figure-only, not table-verified


def cmd_fig(args) -> int:
    cfg = _config_from_args(args)
    try:
        if args.id == 1:
            params, rows = _fig_power_eigenvalues(args, cfg)
        elif args.id == 2:
            params, rows = _fig_p_curves(args, cfg)
        elif args.id == 4:
            params, rows = _fig_envelope_curves(args, cfg)
        elif args.id in (5, 6):
            params, rows = _fig_quark_curves(args, cfg)
        else:
            print(f"error: unknown figure id {args.id}", file=sys.stderr)
            return EXIT_USAGE
    except EigensolverError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    record = OutputRecord(command=f"fig{args.id}", parameters=params, rows=rows)
    _emit(record, args.out, args.format or "csv")
    return EXIT_OK


def _state_curves(cfg):
    for qn in FIGURE_STATES:
        anchors = anchors_for_state(qn, cfg)
        yield qn, build_cubic(anchors)


def _fig_power_eigenvalues(args, cfg):
    """E(q) on a q grid over [-1, 2] excluding 0 (two branches)."""
    qgrid = args.qgrid if args.qgrid is not None else np.linspace(-1.0, 2.0, 25)
    params = {"qgrid": _grid_str(qgrid), "tol": args.tol}
    rows = []
    for qn, curve in _state_curves(cfg):
        for q in qgrid:
            if abs(q) < 1e-12:
                continue  # the log point belongs to the P-representation
            rows.append(
                {
                    "n": qn.n,
                    "l": qn.ell,
                    "q": float(q),
                    "energy": interpolated_energy(curve, float(q)),
                    "table_verified": qn.ell <= 4,
                }
            )
    return params, rows


def _fig_p_curves(args, cfg):
    """P(q) on a q grid over [-1, 2] including the log point q = 0."""
    qgrid = args.qgrid if args.qgrid is not None else np.linspace(-1.0, 2.0, 25)
    params = {"qgrid": _grid_str(qgrid), "tol": args.tol}
    rows = []
    for qn, curve in _state_curves(cfg):
        for q in qgrid:
            rows.append(
                {
                    "n": qn.n,
                    "l": qn.ell,
                    "q": float(q),
                    "P": curve(float(q)),
                    "table_verified": qn.ell <= 4,
                }
            )
    return params, rows


def _fig_envelope_curves(args, cfg):
    """Tangential envelope bounds and the exact curve F(v) for (2, 4)."""
    vgrid = args.vgrid if args.vgrid is not None else np.linspace(0.2, 5.0, 13)
    qn = QuantumNumbers(2, 4)
    params = {"vgrid": _grid_str(vgrid), "n": qn.n, "l": qn.ell, "tol": args.tol}
    rows = []
    for v in vgrid:
        v = float(v)
        f = RadialPotential.coulomb_plus_linear(1.0, 1.0)
        lower = envelope_bound(f, -1.0, qn, v, "lower")
        upper = envelope_bound(f, 1.0, qn, v, "upper")
        scaled = RadialPotential(power_terms=((-v, -1.0), (v, 1.0)))
        exact = solve_radial(scaled, qn, cfg).energy
        if not (lower <= exact <= upper):
            raise EigensolverError(
                f"envelope ordering violated at v={v}: {lower} / {exact} / {upper}"
            )
        rows.append({"v": v, "lower": lower, "exact": exact, "upper": upper})
    return params, rows


def _fig_quark_curves(args, cfg):
    """Bound curves versus the linear coupling for N = 2..5 quark systems."""
    if args.bgrid is not None:
        bgrid = args.bgrid
    elif args.id == 5:
        bgrid = np.linspace(0.05, 0.5, 10)
    else:
        bgrid = np.linspace(0.005, 0.05, 10)
    mass, coulomb_a = 0.3, 0.35
    params = {
        "bgrid": _grid_str(bgrid),
        "mass_gev": mass,
        "coulomb_a": coulomb_a,
        "tol": args.tol,
    }
    points = quark_model_sweep([2, 3, 4, 5], mass, coulomb_a, [float(b) for b in bgrid], cfg=cfg)
    rows = []
    for p in points:
        if p.lower > p.upper:
            raise EigensolverError(f"bound ordering violated at N={p.n_bodies}, b={p.linear_b}")
        rows.append(
            {
                "N": p.n_bodies,
                "b": p.linear_b,
                "lower": p.lower,
                "upper": p.upper,
                "exact": p.exact,
            }
        )
    return params, rows


def _grid_str(grid) -> str:
    a = np.asarray(grid, dtype=float)
    return f"{a[0]:.12g}:{a[-1]:.12g}:{len(a)}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radspec",
        description="Eigenvalues and spectral bounds for power-law and log central potentials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--tol", type=float, default=1e-9, help="relative energy tolerance")
        p.add_argument("--out", type=str, default=None, help="output file path")
        p.add_argument("--format", choices=["csv", "json"], default=None)

    p_eigen = sub.add_parser("eigen", help="solve one state of -Delta + V(r)")
    p_eigen.add_argument(
        "--pot",
        required=True,
        help="potential spec: terms joined by '+', each 'pow:<q> [* coeff]' or 'log [* coeff]'; "
        "a bare power means sgn(q)*r^q",
    )
    p_eigen.add_argument("-n", type=int, required=True, help="radial index n >= 1")
    p_eigen.add_argument("-l", type=int, required=True, help="angular momentum l >= 0")
    add_common(p_eigen)
    p_eigen.set_defaults(func=cmd_eigen)

    p_table = sub.add_parser("table1", help="25-state interpolation table at q = 1/2")
    add_common(p_table)
    p_table.set_defaults(func=cmd_table1)

    p_fig = sub.add_parser("fig", help="figure datasets (ids 1, 2, 4, 5, 6)")
    p_fig.add_argument("--id", type=int, required=True, help="figure id")
    p_fig.add_argument(
        "--qgrid", type=_parse_grid, default=None,
        help="q grid lo:hi:steps (use --qgrid=-1:2:25 for negative bounds)",
    )
    p_fig.add_argument("--vgrid", type=_parse_grid, default=None, help="coupling grid lo:hi:steps")
    p_fig.add_argument("--bgrid", type=_parse_grid, default=None, help="linear-coupling grid lo:hi:steps")
    add_common(p_fig)
    p_fig.set_defaults(func=cmd_fig)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    if getattr(args, "id", None) not in (None, 1, 2, 4, 5, 6):
        print(f"error: unknown figure id {args.id}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "n", None) is not None and args.n < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "l", None) is not None and args.l < 0:
        print("error: l must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
