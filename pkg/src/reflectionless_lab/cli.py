"""Command-line interface.

    reflectionless-lab potential    --family scarf2 --a 2 --b 1
    reflectionless-lab wavefunction --family realsech --N 3 --n 0
    reflectionless-lab scatter      --family scarf2 --a 1.3 --b 0.4 --k 0.5,1,2
    reflectionless-lab verify       --suite n3
    reflectionless-lab catalog      --N 3 --m 1
    reflectionless-lab figure       --fig 1a

Exit codes: 0 success, 1 verification failure, 2 usage or domain error
(the error is also written to stderr as a JSON object).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import catalog, figures, scattering, spectra, verify
from .errors import ConvergenceError, DomainError, PoleError
from .potentials import Family, PotentialSpec, evaluate

SCHEMA_VERSION = 1
FAMILIES = [f.value for f in Family] + ["free"]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    spec: Optional[PotentialSpec] = None
    grid: tuple[float, float, int] = (-5.0, 5.0, 1001)
    k_list: list[float] = field(default_factory=list)
    tolerances: dict = field(default_factory=dict)
    output_format: str = "csv"
    output_path: Optional[str] = None

    def __post_init__(self):
        lo, hi, pts = self.grid
        if pts < 2:
            raise UsageError("a grid needs at least 2 points")
        if not hi > lo:
            raise UsageError("x-max must exceed x-min")
        for name, tol in self.tolerances.items():
            if not tol > 0:
                raise UsageError(f"tolerance {name} must be positive")
        if self.output_format not in ("csv", "json"):
            raise UsageError("format must be csv or json")


# serialization ------------------------------------------------------------

def fmt(v) -> str:
    """Round-trip decimal text: 17 significant digits for floats."""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _jsonable(v):
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.bool_,)):
        return bool(v)
    return v


def write_table(columns: Sequence[str], rows: list[list], cfg: RunConfig, meta: dict) -> str:
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for r in rows:
            w.writerow([fmt(v) for v in r])
        text = buf.getvalue()
    else:
        doc = {"schema_version": SCHEMA_VERSION, **meta, "columns": list(columns),
               "rows": [[_jsonable(v) for v in r] for r in rows]}
        text = json.dumps(doc, indent=1) + "\n"
    return _emit(text, cfg.output_path)


def write_json(doc: dict, path: Optional[str]) -> str:
    return _emit(json.dumps({"schema_version": SCHEMA_VERSION, **doc}, indent=1) + "\n", path)


def _emit(text: str, path: Optional[str]) -> str:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text


def read_csv(text: str) -> tuple[list[str], list[list[str]]]:
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


# spec construction ----------------------------------------------------------

def build_spec(args) -> Optional[PotentialSpec]:
    fam = args.family
    if fam == "free":
        return None
    parametric = args.branch == "parametric"

    def base_spec(name):
        if name == "realsech":
            return PotentialSpec.real_sech(_req(args.N, "--N"))
        if name == "scarf2":
            return PotentialSpec.scarf2(_req(args.a, "--a"), _req(args.b, "--b"))
        if name == "isofamily":
            return PotentialSpec.isospectral(_req(args.N, "--N"), _req(args.lam, "--lambda"))
        raise UsageError(f"--base must be realsech, scarf2 or isofamily, got {name!r}")

    if fam == "realsech":
        return PotentialSpec.real_sech(_req(args.N, "--N"))
    if fam == "scarf2":
        return PotentialSpec.scarf2(_req(args.a, "--a"), _req(args.b, "--b"), parametric)
    if fam == "scarf2ext":
        return PotentialSpec.scarf2_extended(_req(args.a, "--a"), _req(args.b, "--b"),
                                             _req(args.m, "--m"), parametric)
    if fam == "isofamily":
        return PotentialSpec.isospectral(_req(args.N, "--N"), _req(args.lam, "--lambda"))
    if fam == "pursey":
        return PotentialSpec.pursey(_req(args.N, "--N"))
    if fam == "am":
        return PotentialSpec.abraham_moses(_req(args.N, "--N"))
    if fam == "partner":
        return PotentialSpec.partner_of(base_spec(_req(args.base, "--base")), args.branch)
    raise UsageError(f"unknown family {fam!r}")


def _req(v, flag):
    if v is None:
        raise UsageError(f"{flag} is required for this family")
    return v


def _grid(args, default):
    lo = default[0] if args.x_min is None else args.x_min
    hi = default[1] if args.x_max is None else args.x_max
    pts = default[2] if args.points is None else args.points
    return (lo, hi, pts)


def _k_list(text: str) -> list[float]:
    try:
        ks = [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --k list {text!r}") from exc
    if not ks:
        raise UsageError("--k needs at least one value")
    return ks


def _spec_meta(spec):
    return {"spec": spec.to_dict() if spec is not None else {"family": "free"}}


# commands -----------------------------------------------------------------

def cmd_potential(cfg: RunConfig) -> int:
    x = np.linspace(*cfg.grid)
    v = np.zeros_like(x, dtype=complex) if cfg.spec is None else np.asarray(evaluate(cfg.spec, x), dtype=complex)
    rows = [[xi, vi.real, vi.imag] for xi, vi in zip(x, v)]
    write_table(["x", "re_V", "im_V"], rows, cfg, {"command": "potential", **_spec_meta(cfg.spec)})
    return 0


def cmd_wavefunction(cfg: RunConfig, n: int) -> int:
    if cfg.spec is None:
        raise DomainError("the free particle has no bound states")
    st = spectra.eigenfunction(cfg.spec, n)
    x = np.linspace(*cfg.grid)
    psi = np.asarray(st(x), dtype=complex) * np.ones_like(x)
    rows = [[xi, p.real, p.imag, abs(p)] for xi, p in zip(x, psi)]
    meta = {"command": "wavefunction", **_spec_meta(cfg.spec), "n": n, "energy": st.energy}
    write_table(["x", "re_psi", "im_psi", "abs_psi"], rows, cfg, meta)
    return 0


def _free_amplitudes(k, source, incidence, L, dx, tol):
    if source == "analytic":
        return scattering.ScatteringAmplitudes(k, 0j, 1 + 0j, "analytic", incidence)
    return scattering.numeric_scatter(lambda x: np.zeros_like(x, dtype=complex), k, L=L, dx=dx,
                                      incidence=incidence, tail_tol=tol["tail"], conv_tol=tol["conv"])


def cmd_scatter(cfg: RunConfig, sources, sides, L, dx) -> int:
    tol = cfg.tolerances
    jobs = [(k, src, side) for k in cfg.k_list for src in sources for side in sides]

    def run(job):
        k, src, side = job
        if cfg.spec is None:
            return _free_amplitudes(k, src, side, L, dx, tol)
        if src == "analytic":
            return scattering.analytic_amplitudes(cfg.spec, k, side)
        return scattering.numeric_scatter(cfg.spec, k, L=L, dx=dx, incidence=side,
                                          tail_tol=tol["tail"], conv_tol=tol["conv"])

    res = verify.parallel_map(run, jobs)
    rows = [[a.k, a.R.real, a.R.imag, abs(a.R), a.T.real, a.T.imag, abs(a.T) ** 2, a.source, a.incidence]
            for a in res]
    cols = ["k", "re_R", "im_R", "abs_R", "re_T", "im_T", "abs_T2", "source", "incidence"]
    write_table(cols, rows, cfg, {"command": "scatter", **_spec_meta(cfg.spec), "L": L, "dx": dx})
    return 0


def cmd_verify(suite: str, N: int, m: int, quick: bool, path: Optional[str]) -> int:
    checks = verify.run_suite(suite, N=N, m=m, quick=quick)
    ok = all(c.passed for c in checks)
    doc = {"command": "verify", "suite": suite, "quick": quick, "passed": ok,
           "n_checks": len(checks), "n_failed": sum(not c.passed for c in checks),
           "checks": [c.to_dict() for c in checks]}
    if suite == "count":
        doc["count"] = len(catalog.enumerate_catalog(N, m))
        doc["expected"] = catalog.expected_count(N, m)
    write_json(doc, path)
    return 0 if ok else 1


def cmd_catalog(N: int, m: int, path: Optional[str]) -> int:
    entries = catalog.enumerate_catalog(N, m)
    groups = catalog.distinct_potentials(entries)
    doc = {"command": "catalog", "N": N, "m": m, "count": len(entries),
           "expected_count": catalog.expected_count(N, m),
           "distinct_potentials": len(groups), "entries": [e.to_dict() for e in entries]}
    write_json(doc, path)
    return 0


def cmd_figure(cfg: RunConfig, fig: str, grid_override) -> int:
    rows = []
    for curve in figures.figure_curves(fig):
        x, y = figures.sample_curve(curve, grid_override)
        rows += [[curve.label, curve.kind, xi, yi.real, yi.imag] for xi, yi in zip(x, y)]
    write_table(["curve", "kind", "x", "re", "im"], rows, cfg, {"command": "figure", "figure": fig})
    return 0


# argument parsing -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_spec_args(p):
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--N", type=int)
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--m", type=int)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--branch", choices=["normal", "parametric"], default="normal")
    p.add_argument("--base", choices=["realsech", "scarf2", "isofamily"], help="base family of a partner")


def _add_grid_args(p):
    p.add_argument("--x-min", type=float)
    p.add_argument("--x-max", type=float)
    p.add_argument("--points", type=int)


def _add_out_args(p, formats=True):
    if formats:
        p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", "-o", help="output file (default stdout)")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reflectionless-lab", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("potential", help="sample a potential")
    _add_spec_args(p)
    _add_grid_args(p)
    _add_out_args(p)

    p = sub.add_parser("wavefunction", help="sample a normalized bound state")
    _add_spec_args(p)
    _add_grid_args(p)
    _add_out_args(p)
    p.add_argument("--n", type=int, default=0)

    p = sub.add_parser("scatter", help="reflection / transmission amplitudes")
    _add_spec_args(p)
    _add_out_args(p)
    p.add_argument("--k", default="0.5,1,2,4", help="comma-separated wave numbers")
    p.add_argument("--source", choices=["analytic", "numeric", "both"], default="both")
    p.add_argument("--incidence", choices=["left", "right", "both"], default="left")
    p.add_argument("--L", type=float, default=25.0)
    p.add_argument("--dx", type=float, default=1e-3)
    p.add_argument("--tail-tol", type=float, default=1e-8)
    p.add_argument("--conv-tol", type=float, default=1e-7)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["n3", "count", "scattering", "specfun", "all"], default="n3")
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--quick", action="store_true")
    _add_out_args(p, formats=False)

    p = sub.add_parser("catalog", help="enumerate reflectionless potentials")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    _add_out_args(p, formats=False)

    p = sub.add_parser("figure", help="curve data for an N = 3 illustration figure")
    p.add_argument("--fig", choices=sorted(figures.FIGURES), required=True)
    _add_grid_args(p)
    _add_out_args(p)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    fmt_ = getattr(args, "format", "csv")
    out = args.output
    if args.command == "verify":
        if args.N < 1 or args.m < 0:
            raise UsageError("verify needs N >= 1 and m >= 0")
        return cmd_verify(args.suite, args.N, args.m, args.quick, out)
    if args.command == "catalog":
        if args.N < 1 or args.m < 0:
            raise UsageError("catalog needs N >= 1 and m >= 0")
        return cmd_catalog(args.N, args.m, out)
    if args.command == "figure":
        override = None
        if any(v is not None for v in (args.x_min, args.x_max, args.points)):
            override = _grid(args, figures.POTENTIAL_GRID)
        cfg = RunConfig("figure", grid=override or figures.POTENTIAL_GRID, output_format=fmt_, output_path=out)
        return cmd_figure(cfg, args.fig, override)
    spec = build_spec(args)
    if args.command == "potential":
        cfg = RunConfig("potential", spec, _grid(args, figures.POTENTIAL_GRID), output_format=fmt_, output_path=out)
        return cmd_potential(cfg)
    if args.command == "wavefunction":
        cfg = RunConfig("wavefunction", spec, _grid(args, figures.WAVEFUNCTION_GRID),
                        output_format=fmt_, output_path=out)
        return cmd_wavefunction(cfg, args.n)
    cfg = RunConfig("scatter", spec, k_list=_k_list(args.k),
                    tolerances={"tail": args.tail_tol, "conv": args.conv_tol},
                    output_format=fmt_, output_path=out)
    sources = ["analytic", "numeric"] if args.source == "both" else [args.source]
    sides = ["left", "right"] if args.incidence == "both" else [args.incidence]
    return cmd_scatter(cfg, sources, sides, args.L, args.dx)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return run(argv)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except (UsageError, DomainError, PoleError, ConvergenceError, IndexError, KeyError, ValueError) as exc:
        err = {"schema_version": SCHEMA_VERSION, "error": type(exc).__name__, "message": str(exc).strip("'\"")}
        index = getattr(exc, "index", None)
        if index is not None:
            err["index"] = int(index)
        sys.stderr.write(json.dumps(err) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
