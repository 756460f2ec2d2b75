"""Command-line front end: CSV emission for every figure-class computation.

Every subcommand prints a short human-readable summary to stdout and
writes plot-ready CSV where applicable.  Numeric output uses 9
significant digits; CSV layouts follow the per-module schemas (the
noise strength gamma leads the trajectory and interval tables).

Configuration precedence: command-line flags override a flat
``key = value`` config file (``--config``), which overrides built-in
defaults.  Config keys use the flag names with dashes replaced by
underscores; unknown keys are rejected.

Exit codes: 0 on success, 2 on configuration errors, 3 on numerical
failures.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

import numpy as np

from .channels import ChannelKind, relabel_for_channel
from .freezing import (
    check_ns_discord,
    check_ns_multipartite,
    check_ns_workdeficit,
    complementarity_audit,
    freezing_terminal,
    phase_diagram,
)
from .freezing_index import (
    default_gamma_grid,
    detect_intervals,
    freezing_index,
    sample_trajectory,
)
from .spin_models import XYParams, ed_oracle, qpt_scan, scaling_fit
from .states import (
    CorrelatorState,
    DiagonalState,
    canonical_state,
    diagonal_state,
    sweeping_state,
    trace_out_first,
)

__all__ = ["main", "run", "RunConfig", "ConfigError"]


class ConfigError(Exception):
    """Invalid or inconsistent run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """One validated subcommand invocation (fully merged options)."""

    command: str
    options: dict[str, Any]

    def __getitem__(self, key: str) -> Any:
        return self.options[key]

    @property
    def output(self) -> "Path | None":
        path = self.options.get("output")
        return Path(path) if path else None


def fmt(x: Any) -> str:
    """9-significant-digit rendering; strings pass through."""
    if isinstance(x, str):
        return x
    v = float(x)
    if math.isnan(v):
        return "nan"
    return f"{v:.9g}"


def _float_list(text: str) -> tuple[float, ...]:
    items = text.replace(",", " ").split()
    if not items:
        raise ValueError("empty list")
    return tuple(float(t) for t in items)


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.replace(",", " ").split())


def _default_jobs() -> int:
    raw = os.environ.get("QCFREEZE_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError as exc:
        raise ConfigError(f"QCFREEZE_JOBS={raw!r} is not an integer") from exc
    return max(1, jobs)


@dataclass(frozen=True)
class Opt:
    """One declared option: flag name, converter, default, help text."""

    name: str
    conv: Callable[[str], Any]
    default: Any = None
    help: str = ""
    choices: "tuple | None" = None
    required: bool = False

    @property
    def dest(self) -> str:
        return self.name.replace("-", "_")


def _state_opts(families: tuple[str, ...]) -> list[Opt]:
    opts = [
        Opt("family", str, families[0], f"state family {families}", choices=families),
        Opt("c11", float, 0.0, "xx correlator"),
        Opt("c22", float, None, "yy correlator (canonical/bd default: -c11*c33)"),
        Opt("c33", float, 0.0, "zz correlator"),
        Opt("c10", float, None, "x magnetization, measured qubit (canonical default: c11*c01)"),
        Opt("c01", float, 0.0, "x magnetization, second qubit"),
        Opt("c20", float, 0.0, "y magnetization, measured qubit"),
        Opt("c02", float, 0.0, "y magnetization, second qubit"),
        Opt("c30", float, 0.0, "z magnetization, measured qubit"),
        Opt("c03", float, 0.0, "z magnetization, second qubit"),
    ]
    if "diagonal" in families:
        opts += [
            Opt("pairs", int, 1, "qubit pair count of the diagonal family"),
            Opt("c1", float, 0.0, "full-length xx...x correlator"),
            Opt("c2", float, 0.0, "full-length yy...y correlator"),
            Opt("c3", float, 0.0, "full-length zz...z correlator"),
        ]
    if "sweeping" in families:
        opts += [
            Opt("qubits", int, 3, "qubit count of the sweeping family"),
            Opt("x", float, 0.6, "coherence parameter of the sweeping family"),
            Opt("alphas", _float_list, (0.2,), "comma-separated branch angles"),
        ]
    return opts


def _build_state(cfg: RunConfig):
    fam = cfg["family"]
    if fam == "bd":
        c22 = cfg["c22"]
        if c22 is None:
            c22 = -cfg["c11"] * cfg["c33"]
        return canonical_state(cfg["c11"], c22, cfg["c33"])
    if fam == "canonical":
        c22 = cfg["c22"]
        if c22 is None:
            c22 = -cfg["c11"] * cfg["c33"]
        c10 = cfg["c10"]
        if c10 is None:
            c10 = cfg["c11"] * cfg["c01"]
        return canonical_state(cfg["c11"], c22, cfg["c33"], c10, cfg["c01"])
    if fam == "corr":
        return CorrelatorState(
            c11=cfg["c11"],
            c22=cfg["c22"] if cfg["c22"] is not None else 0.0,
            c33=cfg["c33"],
            c10=cfg["c10"] if cfg["c10"] is not None else 0.0,
            c01=cfg["c01"],
            c20=cfg["c20"],
            c02=cfg["c02"],
            c30=cfg["c30"],
            c03=cfg["c03"],
        )
    if fam == "diagonal":
        return diagonal_state(cfg["pairs"], cfg["c1"], cfg["c2"], cfg["c3"])
    if fam == "sweeping":
        return sweeping_state(cfg["qubits"], cfg["x"], list(cfg["alphas"]))
    raise ConfigError(f"unknown family {fam!r}")


def _write_csv(path: Path, header: str, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header.split(","))
        for row in rows:
            writer.writerow([fmt(x) for x in row])
    print(f"wrote {path}")


def _out_path(cfg: RunConfig, default_name: str) -> Path:
    return cfg.output if cfg.output is not None else Path(default_name)


# ---------------------------------------------------------------------------
# subcommand runners


def _run_trajectory(cfg: RunConfig) -> int:
    state = _build_state(cfg)
    traj = sample_trajectory(
        state,
        channel=cfg["channel"],
        measure=cfg["measure"],
        gamma_grid=default_gamma_grid(cfg["gamma_step"]),
        method=cfg["method"],
    )
    path = _out_path(cfg, "trajectory.csv")
    _write_csv(path, "gamma,value", zip(traj.gammas, traj.values))
    print(
        f"trajectory family={cfg['family']} channel={cfg['channel']} "
        f"measure={cfg['measure']}: {len(traj)} points, "
        f"start={fmt(traj.values[0])} min={fmt(traj.values.min())} "
        f"max={fmt(traj.values.max())}"
    )
    return 0


def _run_phase_diagram(cfg: RunConfig) -> int:
    diagram = phase_diagram(
        cfg["c11"], cfg["step"], cfg["measure"], cfg["channel"]
    )
    path = _out_path(cfg, "phase_diagram.csv")
    _write_csv(path, "c33,c01,status,gamma_f,frozen_value", diagram.rows())
    unique, counts = np.unique(diagram.status, return_counts=True)
    stats = " ".join(f"{u}={c}" for u, c in zip(unique.tolist(), counts.tolist()))
    print(
        f"phase diagram c11={fmt(cfg['c11'])} measure={cfg['measure']} "
        f"channel={cfg['channel']}: {len(diagram)} points, {stats}, "
        f"freezing fraction={fmt(diagram.freezing_fraction())}"
    )
    return 0


def _relabelled_canonical(cfg: RunConfig) -> CorrelatorState:
    c22 = cfg["c22"]
    if c22 is None:
        c22 = -cfg["c11"] * cfg["c33"]
    c10 = cfg["c10"]
    if c10 is None:
        c10 = cfg["c11"] * cfg["c01"]
    state = CorrelatorState(
        c11=cfg["c11"],
        c22=c22,
        c33=cfg["c33"],
        c10=c10,
        c01=cfg["c01"],
        c20=cfg["c20"],
        c02=cfg["c02"],
        c30=cfg["c30"],
        c03=cfg["c03"],
    )
    return relabel_for_channel(state, ChannelKind.parse(cfg["channel"]))


def _run_check(cfg: RunConfig) -> int:
    state = _relabelled_canonical(cfg)
    check = check_ns_discord if cfg["measure"] == "qd" else check_ns_workdeficit
    report = check(state)
    verdict = "FREEZES" if report.satisfied else "NO FREEZING"
    line = f"{verdict} measure={report.measure} branch={report.branch}"
    if report.satisfied:
        line += (
            f" gamma_f={fmt(report.gamma_f)} frozen_value={fmt(report.frozen_value)}"
        )
    print(line)
    print(
        "clauses: "
        + " ".join(f"({k})={'ok' if v else 'FAIL'}" for k, v in report.clauses.items())
    )
    for msg in report.diagnostics:
        print(f"note: {msg}")
    if cfg.output is not None:
        with open(cfg.output, "w") as fh:
            fh.write(f"satisfied={report.satisfied}\n")
            fh.write(f"branch={report.branch}\n")
            if report.satisfied:
                fh.write(f"gamma_f={fmt(report.gamma_f)}\n")
                fh.write(f"frozen_value={fmt(report.frozen_value)}\n")
        print(f"wrote {cfg.output}")
    return 0


def _run_terminal(cfg: RunConfig) -> int:
    state = _relabelled_canonical(cfg)
    gamma_f = freezing_terminal(state, cfg["measure"])
    print(f"gamma_f={fmt(gamma_f)}")
    return 0


def _run_complementarity(cfg: RunConfig) -> int:
    audit = complementarity_audit(cfg["count"], cfg["seed"], cfg["measure"])
    s = audit.argmax_state
    print(
        f"complementarity audit measure={audit.measure} count={audit.count}: "
        f"max(frozen_value + gamma_f)={fmt(audit.max_sum)}"
    )
    print(
        f"argmax state c11={fmt(s.c11)} c22={fmt(s.c22)} c33={fmt(s.c33)} "
        f"c10={fmt(s.c10)} c01={fmt(s.c01)} "
        f"(frozen={fmt(audit.argmax_frozen)}, gamma_f={fmt(audit.argmax_gamma_f)})"
    )
    if audit.max_sum > 1.0 + 1e-9:
        raise RuntimeError(f"complementarity bound violated: {audit.max_sum!r}")
    return 0


def _run_index(cfg: RunConfig) -> int:
    state = _build_state(cfg)
    traj = sample_trajectory(
        state,
        channel=cfg["channel"],
        measure=cfg["measure"],
        gamma_grid=default_gamma_grid(cfg["gamma_step"]),
        method=cfg["method"],
    )
    intervals = detect_intervals(traj, cfg["delta"], cfg["min_width"])
    eta = freezing_index(traj, cfg["delta"], cfg["min_width"])
    path = _out_path(cfg, "intervals.csv")
    _write_csv(
        path,
        "gamma1,gamma2,mean_value",
        ((it.gamma1, it.gamma2, it.mean_value) for it in intervals),
    )
    print(
        f"freezing index={eta:.6f} ({len(intervals)} interval(s), "
        f"delta={fmt(cfg['delta'])}, min_width={fmt(cfg['min_width'])})"
    )
    return 0


def _run_multipartite(cfg: RunConfig) -> int:
    state = diagonal_state(cfg["pairs"], cfg["c1"], cfg["c2"], cfg["c3"])
    report = check_ns_multipartite(state)
    verdict = "FREEZES" if report.satisfied else "NO FREEZING"
    line = f"{verdict} qubits={state.n_qubits} branch={report.branch}"
    if report.satisfied:
        line += f" gamma_f={fmt(report.gamma_f)} frozen_value={fmt(report.frozen_value)}"
    print(line)
    for msg in report.diagnostics:
        print(f"note: {msg}")
    traj = sample_trajectory(
        state, channel=cfg["channel"], gamma_grid=default_gamma_grid(cfg["gamma_step"])
    )
    path = _out_path(cfg, "multipartite.csv")
    _write_csv(path, "gamma,value", zip(traj.gammas, traj.values))
    return 0


def _run_sweeping(cfg: RunConfig) -> int:
    full = sweeping_state(cfg["qubits"], cfg["x"], list(cfg["alphas"]))
    grid = default_gamma_grid(cfg["gamma_step"])
    mats = [full.matrix]
    while int(round(math.log2(mats[-1].shape[0]))) > 2:
        mats.append(trace_out_first(mats[-1]))
    sizes = [int(round(math.log2(m.shape[0]))) for m in mats]
    columns = []
    for mat, size in zip(mats, sizes):
        traj = sample_trajectory(
            mat,
            channel=cfg["channel"],
            measure=cfg["measure"],
            gamma_grid=grid,
            method=cfg["method"],
        )
        intervals = detect_intervals(traj, cfg["delta"], cfg["min_width"])
        columns.append(traj.values)
        span = (
            f"[{fmt(intervals[0].gamma1)}, {fmt(intervals[0].gamma2)}]"
            if intervals
            else "none"
        )
        print(
            f"{size}-qubit marginal measure={cfg['measure']}: "
            f"start={fmt(traj.values[0])}, first interval {span}"
        )
    header = "gamma," + ",".join(f"value_{n}q" for n in sizes)
    path = _out_path(cfg, "sweeping.csv")
    _write_csv(path, header, zip(grid, *columns))
    return 0


def _run_xy_scan(cfg: RunConfig) -> int:
    lams = np.linspace(cfg["lmin"], cfg["lmax"], cfg["points"])
    scan = qpt_scan(
        g=cfg["g"],
        lambdas=lams,
        channel=cfg["channel"],
        delta=cfg["delta"],
        size=cfg["size"],
        gamma_step=cfg["gamma_step"],
        measure=cfg["measure"],
        method=cfg["method"],
        refine_iters=cfg["refine_iters"],
        jobs=cfg["jobs"],
    )
    path = _out_path(cfg, "xy_scan.csv")
    _write_csv(path, "lambda,eta_f", zip(scan.lambdas, scan.eta))
    size_label = "thermodynamic" if scan.size is None else f"N={scan.size}"
    print(
        f"xy scan g={fmt(scan.g)} {size_label} delta={fmt(scan.delta)}: "
        f"lambda_c={fmt(scan.lambda_c)}"
        + (" (inconclusive)" if scan.inconclusive else "")
    )
    return 0


def _run_scaling(cfg: RunConfig) -> int:
    if cfg["input"]:
        points = []
        with open(cfg["input"], newline="") as fh:
            for row in csv.DictReader(fh):
                try:
                    points.append((int(row["N"]), float(row["lambda_c_N"])))
                except (KeyError, TypeError, ValueError) as exc:
                    raise ConfigError(
                        f"{cfg['input']} needs columns N,lambda_c_N"
                    ) from exc
    else:
        points = []
        for n in cfg["sizes"]:
            scan = qpt_scan(
                g=cfg["g"],
                lambdas=np.linspace(cfg["lmin"], cfg["lmax"], cfg["points"]),
                channel=cfg["channel"],
                delta=cfg["delta"],
                size=n,
                gamma_step=cfg["gamma_step"],
                measure=cfg["measure"],
                refine_iters=cfg["refine_iters"],
                jobs=cfg["jobs"],
            )
            points.append((n, scan.lambda_c))
            print(f"N={n}: lambda_c_N={fmt(scan.lambda_c)}")
    fit = scaling_fit(points)
    path = _out_path(cfg, "scaling.csv")
    _write_csv(path, "N,lambda_c_N", fit.points)
    print(f"lambda_c_inf={fmt(fit.lambda_c_inf)}")
    print(f"exponent={fmt(fit.exponent)}")
    print(f"amplitude={fmt(fit.amplitude)}")
    print(f"residual={fmt(fit.residual)}")
    if fit.warning:
        print(f"warning: {fit.warning}")
    return 0


def _run_ed_check(cfg: RunConfig) -> int:
    p = XYParams(g=cfg["g"], h=cfg["lam"], size=cfg["size"])
    result = ed_oracle(p)
    print(
        f"ed N={cfg['size']} g={fmt(cfg['g'])} lambda={fmt(cfg['lam'])}: "
        f"m_z={fmt(result.m_z)} c_xx={fmt(result.c_xx)} "
        f"c_yy={fmt(result.c_yy)} c_zz={fmt(result.c_zz)} "
        f"energy={fmt(result.energy)} sector={result.sector}"
        + (" degenerate" if result.degenerate else "")
    )
    return 0


# ---------------------------------------------------------------------------
# option tables and dispatch

_CHANNEL_OPT = Opt("channel", str, "bf", "flip channel", choices=("bf", "bpf", "pf"))
_CHANNEL_OPT_PF = Opt("channel", str, "pf", "flip channel", choices=("bf", "bpf", "pf"))
_MEASURE_OPT = Opt("measure", str, "qd", "correlation measure", choices=("qd", "qwd"))
_METHOD_OPT = Opt(
    "method", str, "hybrid", "optimizer route", choices=("regular", "bruteforce", "hybrid")
)
_STEP_OPT = Opt("gamma-step", float, 1e-3, "gamma grid step")
_OUTPUT_OPT = Opt("output", str, None, "CSV output path (default per subcommand)")
_JOBS_OPT = Opt("jobs", int, None, "worker processes (default: QCFREEZE_JOBS or 1)")

_COMMANDS: dict[str, tuple[list[Opt], Callable[[RunConfig], int], str]] = {
    "trajectory": (
        _state_opts(("canonical", "bd", "corr", "diagonal", "sweeping"))
        + [_CHANNEL_OPT, _MEASURE_OPT, _METHOD_OPT, _STEP_OPT, _OUTPUT_OPT],
        _run_trajectory,
        "measure-versus-noise trajectory of one state",
    ),
    "phase-diagram": (
        [
            Opt("c11", float, required=True, help="flip-axis correlator"),
            Opt("step", float, 0.005, "grid step in (c33, c01)"),
            _MEASURE_OPT,
            _CHANNEL_OPT,
            _OUTPUT_OPT,
        ],
        _run_phase_diagram,
        "freezing status over the transverse-correlator plane",
    ),
    "check": (
        _state_opts(("corr",)) + [_MEASURE_OPT, _CHANNEL_OPT, _OUTPUT_OPT],
        _run_check,
        "exact-freezing condition report for one state",
    ),
    "terminal": (
        _state_opts(("corr",)) + [_MEASURE_OPT, _CHANNEL_OPT],
        _run_terminal,
        "terminal noise strength of the frozen interval",
    ),
    "complementarity": (
        [
            Opt("count", int, 10_000, "number of sampled freezing states"),
            Opt("seed", int, 0, "sampler seed"),
            _MEASURE_OPT,
        ],
        _run_complementarity,
        "audit of frozen value + terminal over random freezing states",
    ),
    "index": (
        _state_opts(("canonical", "bd", "corr", "diagonal", "sweeping"))
        + [
            _CHANNEL_OPT,
            _MEASURE_OPT,
            _METHOD_OPT,
            _STEP_OPT,
            Opt("delta", float, 0.01, "effective-freezing tolerance"),
            Opt("min-width", float, 0.02, "smallest reported interval"),
            _OUTPUT_OPT,
        ],
        _run_index,
        "effective-freezing intervals and the freezing index",
    ),
    "multipartite": (
        [
            Opt("pairs", int, 1, "qubit pair count"),
            Opt("c1", float, 0.0, "full-length xx...x correlator"),
            Opt("c2", float, 0.0, "full-length yy...y correlator"),
            Opt("c3", float, 0.0, "full-length zz...z correlator"),
            _CHANNEL_OPT,
            _STEP_OPT,
            _OUTPUT_OPT,
        ],
        _run_multipartite,
        "diagonal multiqubit freezing report and trajectory",
    ),
    "sweeping": (
        [
            Opt("qubits", int, 4, "qubit count"),
            Opt("x", float, 0.6, "coherence parameter"),
            Opt("alphas", _float_list, (0.2, 0.25), "comma-separated branch angles"),
            _CHANNEL_OPT,
            _MEASURE_OPT,
            _METHOD_OPT,
            _STEP_OPT,
            Opt("delta", float, 1e-3, "effective-freezing tolerance"),
            Opt("min-width", float, 0.02, "smallest reported interval"),
            _OUTPUT_OPT,
        ],
        _run_sweeping,
        "plateaus of a sweeping state and all left-traced marginals",
    ),
    "xy-scan": (
        [
            Opt("g", float, 1.0, "anisotropy"),
            Opt("lmin", float, 0.6, "scan start"),
            Opt("lmax", float, 1.4, "scan end"),
            Opt("points", int, 81, "lambda grid points"),
            Opt("size", int, None, "chain length (omit for thermodynamic limit)"),
            Opt("delta", float, 0.01, "effective-freezing tolerance"),
            Opt("refine-iters", int, 1, "bisection passes sharpening lambda_c"),
            _CHANNEL_OPT,
            _MEASURE_OPT,
            _METHOD_OPT,
            Opt("gamma-step", float, 1e-3, "gamma grid step"),
            _JOBS_OPT,
            _OUTPUT_OPT,
        ],
        _run_xy_scan,
        "freezing-index scan across the XY chain transition",
    ),
    "scaling": (
        [
            Opt("sizes", _int_list, (48, 64, 96, 128, 192, 256, 512, 1024, 2048), "chain lengths"),
            Opt("g", float, 1.0, "anisotropy"),
            Opt("lmin", float, 0.9, "scan start"),
            Opt("lmax", float, 1.1, "scan end"),
            Opt("points", int, 21, "lambda grid points"),
            Opt("delta", float, 0.01, "effective-freezing tolerance"),
            Opt("refine-iters", int, 10, "bisection passes sharpening lambda_c"),
            Opt("gamma-step", float, 1e-3, "gamma grid step"),
            _CHANNEL_OPT_PF,
            _MEASURE_OPT,
            Opt("input", str, None, "fit precomputed N,lambda_c_N CSV instead of scanning"),
            _JOBS_OPT,
            _OUTPUT_OPT,
        ],
        _run_scaling,
        "finite-size scaling fit of the pseudocritical point",
    ),
    "ed": (
        [
            Opt("size", int, 8, "chain length (<= 12)"),
            Opt("g", float, 1.0, "anisotropy"),
            Opt("lam", float, 1.0, "dimensionless field h/J"),
        ],
        _run_ed_check,
        "exact-diagonalization oracle observables",
    ),
}


def _load_config_file(path: Path) -> dict[str, str]:
    if not path.exists():
        raise ConfigError(f"config file {path} not found")
    out: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def _merge(args: argparse.Namespace, opts: list[Opt]) -> RunConfig:
    table = {o.dest: o for o in opts}
    file_values: dict[str, str] = {}
    if args.config is not None:
        file_values = _load_config_file(Path(args.config))
        unknown = set(file_values) - set(table)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    merged: dict[str, Any] = {}
    for dest, opt in table.items():
        value = getattr(args, dest, None)
        if value is None and dest in file_values:
            try:
                value = opt.conv(file_values[dest])
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"config key {dest}: {exc}") from exc
            if opt.choices and value not in opt.choices:
                raise ConfigError(f"config key {dest}: {value!r} not in {opt.choices}")
        if value is None:
            value = opt.default
        if value is None and opt.required:
            raise ConfigError(f"missing required option --{opt.name}")
        merged[dest] = value
    if "jobs" in merged and merged["jobs"] is None:
        merged["jobs"] = _default_jobs()
    return RunConfig(command=args.command, options=merged)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcfreeze",
        description="Freezing of quantum correlations under local flip noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (opts, _runner, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", type=Path, default=None, help="flat key=value config file")
        for o in opts:
            p.add_argument(
                f"--{o.name}",
                type=o.conv,
                default=None,
                choices=o.choices,
                help=o.help + (f" (default {o.default})" if o.default is not None else ""),
            )
    return parser


def run(argv: "list[str] | None" = None) -> int:
    """Parse, merge, dispatch; returns the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge(args, _COMMANDS[args.command][0])
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[args.command][1](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
