"""Command-line front end.

    qutrit-dsd figure3 [--output figure3.csv]
    qutrit-dsd figure4
    qutrit-dsd figure5
    qutrit-dsd scan-alpha --alphas 4.1,4.2,4.5 [--rotated]
    qutrit-dsd analyze --input state.txt

Each command writes CSV (``t`` first, times in units of ``1/gamma_e``) and
prints a ``key = value`` summary on stdout.  Missing death times are written
as ``none``.

Exit codes: 0 success, 2 bad arguments, 3 parse error, 4 validation error,
5 I/O error, 6 numerical failure.
"""

import argparse
import csv
import sys
from dataclasses import dataclass

import numpy as np

from . import dsd, measures, states
from .dynamics import DecayParams
from .errors import AccuracyLoss, AlphaOutOfRange, NoConvergence, ParseError, POutOfRange, ValidationError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_IO = 5
EXIT_NUMERIC = 6

REFERENCE_RATIO = 0.5
FIGURES = {
    "figure3": dict(alpha=4.2, rotated=False),
    "figure4": dict(alpha=4.5, rotated=False),
    "figure5": dict(alpha=4.2, rotated=True),
}
DEFAULT_ALPHAS = (2.5, 3.0, 3.5, 4.0, 4.1, 4.2, 4.3, 4.4, 4.5, 4.6, 4.7, 4.8, 4.9, 5.0)


@dataclass
class RunConfig:
    command: str
    alpha: float | None = None
    gamma_ratio: float = REFERENCE_RATIO
    t_max: float = dsd.DEFAULT_T_MAX
    n_points: int = 2001
    tol: float = measures.NEGATIVITY_TOL
    input_path: str | None = None
    output_path: str | None = None
    rotated: bool = False
    family: str = "horodecki"

    @property
    def params(self):
        return DecayParams.from_ratio(self.gamma_ratio)


def fmt(x):
    if x is None:
        return "none"
    return f"{float(x):.12g}"


def initial_state(family, alpha, rotated=False):
    if family == "isotropic":
        return states.isotropic_state(alpha)
    if rotated:
        return states.horodecki_state_rotated(alpha)
    return states.horodecki_state(alpha)


def _write_csv(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _emit(summary, out=None):
    out = sys.stdout if out is None else out
    for key, value in summary.items():
        out.write(f"{key} = {value}\n")


def _report_items(report):
    return {
        "t_N": fmt(report.t_N),
        "t_R": fmt(report.t_R),
        "trajectory_type": report.trajectory_type.value,
        "horizon": fmt(report.horizon),
        "window": "none" if report.window is None else f"{fmt(report.window[0])},{fmt(report.window[1])}",
        "initially_ppt": str(report.initially_ppt).lower(),
        "entanglement_after_tN_unknown": str(report.entanglement_after_tN_unknown).lower(),
    }


def run_figure(which, cfg):
    """Write the data behind figure ``which`` (3, 4 or 5) and return the summary."""
    name = f"figure{which}"
    ref = FIGURES[name]
    alpha = ref["alpha"] if cfg.alpha is None else cfg.alpha
    rotated = ref["rotated"] or cfg.rotated
    deviations = []
    if alpha != ref["alpha"]:
        deviations.append(f"alpha={alpha:g}")
    if cfg.gamma_ratio != REFERENCE_RATIO:
        deviations.append(f"gamma_ratio={cfg.gamma_ratio:g}")
    if cfg.family != "horodecki":
        deviations.append(f"family={cfg.family}")
    if rotated != ref["rotated"]:
        deviations.append("rotated")

    rho0 = initial_state(cfg.family, alpha, rotated)
    traj = dsd.sample_trajectory(rho0, cfg.params, cfg.t_max, cfg.n_points, cfg.tol)
    if which == 5:
        header = ["t", "eig1", "eig2", "eig3"]
        lowest = traj.pt_lowest(3)
        rows = [[fmt(t), *map(fmt, e)] for t, e in zip(traj.times, lowest)]
    else:
        header = ["t", "negativity", "ccnr_score"]
        rows = [
            [fmt(t), fmt(n), fmt(c)]
            for t, n, c in zip(traj.times, traj.negativity, traj.ccnr_score)
        ]
    output = cfg.output_path or f"{name}.csv"
    _write_csv(output, header, rows)

    report = dsd.classify(rho0, cfg.params, cfg.t_max)
    summary = {}
    if deviations:
        summary["banner"] = "parameters differ from the reference setup: " + ", ".join(deviations)
    summary.update(command=name, family=cfg.family, alpha=fmt(alpha), rotated=str(rotated).lower(),
                   gamma_ratio=fmt(cfg.gamma_ratio))
    summary.update(_report_items(report))
    if report.t_N is not None and report.t_R is not None and report.t_R < report.t_N:
        summary["note"] = "t_R < t_N: realignment stops detecting while the state is still NPT"
    if which == 5:
        summary["max_of_min_pt_eigenvalue"] = fmt(np.max(traj.pt_min_eigenvalue))
    summary["rows"] = str(len(rows))
    summary["output"] = output
    return summary


def run_scan_alpha(cfg, alphas):
    rows = []
    for alpha in alphas:
        rho0 = initial_state(cfg.family, alpha, cfg.rotated)
        report = dsd.classify(rho0, cfg.params, cfg.t_max)
        note = []
        if report.initially_ppt:
            note.append("initially PPT")
        if any("threshold crossing" in n for n in report.notes):
            note.append("t_N is a threshold crossing")
        rows.append([fmt(alpha), fmt(report.t_N), fmt(report.t_R), report.trajectory_type.value, "; ".join(note)])
    output = cfg.output_path or "scan_alpha.csv"
    _write_csv(output, ["alpha", "t_N", "t_R", "trajectory_type", "note"], rows)
    return {"command": "scan-alpha", "family": cfg.family, "rotated": str(cfg.rotated).lower(),
            "gamma_ratio": fmt(cfg.gamma_ratio), "rows": str(len(rows)), "output": output}, rows


def run_analyze(cfg):
    with open(cfg.input_path) as fh:
        text = fh.read()
    rho = states.parse_density_matrix(text)
    if rho.shape != (9, 9):
        raise ValidationError("shape", f"expected a 9x9 two-qutrit matrix, got {rho.shape}")
    rho = states.validate_density_matrix(rho)
    sample = measures.criteria_sample(rho, cfg.tol)
    report = dsd.classify(rho, cfg.params, cfg.t_max)
    summary = {
        "command": "analyze",
        "input": cfg.input_path,
        "negativity": fmt(sample.negativity),
        "ccnr_score": fmt(sample.ccnr_score),
        "ppt": str(sample.is_ppt).lower(),
        "pt_min_eigenvalue": fmt(sample.pt_min_eigenvalue),
        "status": sample.status,
        "gamma_ratio": fmt(cfg.gamma_ratio),
    }
    summary.update(_report_items(report))
    if cfg.output_path:
        traj = dsd.sample_trajectory(rho, cfg.params, cfg.t_max, cfg.n_points, cfg.tol)
        _write_csv(cfg.output_path, ["t", "negativity", "ccnr_score"],
                   [[fmt(t), fmt(n), fmt(c)] for t, n, c in zip(traj.times, traj.negativity, traj.ccnr_score)])
        summary["output"] = cfg.output_path
    return summary


def _alpha_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=None,
                        help="family parameter (p for --family isotropic)")
    common.add_argument("--gamma-ratio", type=float, default=REFERENCE_RATIO, help="gamma_u / gamma_e")
    common.add_argument("--t-max", type=float, default=dsd.DEFAULT_T_MAX, help="horizon in units of 1/gamma_e")
    common.add_argument("--n-points", type=int, default=2001)
    common.add_argument("--tol", type=float, default=measures.NEGATIVITY_TOL)
    common.add_argument("--input", dest="input_path")
    common.add_argument("--output", dest="output_path")
    common.add_argument("--rotated", action="store_true", help="use the locally rotated family")
    common.add_argument("--family", choices=("horodecki", "isotropic"), default="horodecki")

    parser = argparse.ArgumentParser(prog="qutrit-dsd", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in FIGURES:
        sub.add_parser(name, parents=[common], help=f"data for {name}")
    scan = sub.add_parser("scan-alpha", parents=[common], help="death times across the family")
    scan.add_argument("--alphas", type=_alpha_list, default=list(DEFAULT_ALPHAS))
    sub.add_parser("analyze", parents=[common], help="criteria and dynamics of a state from a file")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        alpha=args.alpha,
        gamma_ratio=args.gamma_ratio,
        t_max=args.t_max,
        n_points=args.n_points,
        tol=args.tol,
        input_path=args.input_path,
        output_path=args.output_path,
        rotated=args.rotated,
        family=args.family,
    )
    try:
        if cfg.t_max <= 0 or cfg.n_points < 2 or cfg.gamma_ratio < 0 or cfg.tol < 0:
            raise ValueError("need t_max > 0, n_points >= 2, gamma_ratio >= 0 and tol >= 0")
        if cfg.command in FIGURES:
            _emit(run_figure(int(cfg.command[-1]), cfg))
        elif cfg.command == "scan-alpha":
            _emit(run_scan_alpha(cfg, args.alphas)[0])
        else:
            if not cfg.input_path:
                parser.error("analyze requires --input")
            _emit(run_analyze(cfg))
    except ParseError as exc:
        print(f"error: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"error: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NoConvergence, AccuracyLoss) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (AlphaOutOfRange, POutOfRange, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
