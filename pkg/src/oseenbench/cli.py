"""Run orchestration: configuration, convergence studies, parameter
sweeps, and CSV/markdown/dat emission.

Config files are plain ``key = value`` lines with ``#`` comments and
comma-separated lists; command-line flags override file values.  Two
identical invocations write byte-identical outputs except for the
wall_ms timing column.
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .benchmarks import (LevelCache, RunReport, make_example,
                         run_convergence, solve_on_level)
from .linsolve import SolverError
from .mesh import read_mesh

CSV_HEADER = ("level,h_max,ndof_u,ndof_p,l2u,eoc_l2u,h1u,eoc_h1u,"
              "l2p,eoc_l2p,div_norm,s_seminorm,picl2,wall_ms")

_METHOD_LABEL = {"sv": "SV", "supg": "SV-SUPG", "lsvs": "SV-LSVS"}

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_CHECK = 4


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    example: int = 2
    methods: list = field(default_factory=lambda: ["sv", "supg", "lsvs"])
    sigmas: list = field(default_factory=lambda: [1.0])
    mus: list = field(default_factory=lambda: [1e-5])
    delta0s: Optional[list] = None      # None: per-method defaults
    levels: list = field(default_factory=lambda: [1, 2, 3, 4])
    n: int = 4
    jitter: float = 0.2
    mesh_file: Optional[str] = None
    quad_volume: int = 8
    quad_error: int = 10
    quad_edge: int = 7
    solver_tol: float = 1e-10
    out: str = "results"
    sweep: Optional[str] = None
    big: bool = False
    check: bool = False

    def validate(self):
        if self.example not in (1, 2, 3, 4):
            raise ConfigError(f"example: expected 1..4, got {self.example}")
        if not self.methods:
            raise ConfigError("method: empty method list")
        for m in self.methods:
            if m not in _METHOD_LABEL:
                raise ConfigError(f"method: unknown method {m!r}")
        if not self.sigmas or any(s < 0 for s in self.sigmas):
            raise ConfigError("sigma: need a non-empty list of values >= 0")
        if not self.mus or any(m <= 0 for m in self.mus):
            raise ConfigError("mu: need a non-empty list of positive values")
        if self.delta0s is not None and (
                not self.delta0s or any(d < 0 for d in self.delta0s)):
            raise ConfigError("delta0: need a non-empty list of values >= 0")
        if not self.levels or min(self.levels) < 1:
            raise ConfigError("levels: levels are 1-based")
        if max(self.levels) > 4 and not self.big:
            raise ConfigError(
                f"levels: level {max(self.levels)} needs --big")
        if self.n < 1:
            raise ConfigError("n: subdivision count must be >= 1")
        if not 0.0 <= self.jitter <= 0.3:
            raise ConfigError("jitter: must lie in [0, 0.3]")
        if self.sweep not in (None, "mu", "delta0"):
            raise ConfigError(f"sweep: expected mu or delta0, "
                              f"got {self.sweep!r}")
        if self.solver_tol <= 0:
            raise ConfigError("solver_tol: must be positive")
        return self


def _parse_levels(text):
    text = text.strip()
    if ".." in text:
        a, b = text.split("..", 1)
        try:
            lo, hi = int(a), int(b)
        except ValueError:
            raise ConfigError(f"levels: cannot parse range {text!r}")
        if hi < lo:
            raise ConfigError(f"levels: empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"levels: cannot parse {text!r}")


def _float_list(key, text):
    try:
        return [float(s) for s in str(text).split(",") if s.strip()]
    except ValueError:
        raise ConfigError(f"{key}: cannot parse number in {text!r}")


_FILE_KEYS = {"example", "method", "sigma", "mu", "delta0", "levels",
              "n", "jitter", "mesh_file", "quad_volume", "quad_error",
              "quad_edge", "solver_tol", "out"}


def parse_config(file_text="", flags=None):
    """Resolve a RunConfig from a config file and flag overrides.

    ``flags`` is a mapping (typically vars(argparse namespace)); entries
    that are None are treated as absent.
    """
    values = {}
    for ln, raw in enumerate(file_text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"line {ln}: expected 'key = value'")
        key, val = (s.strip() for s in body.split("=", 1))
        if key not in _FILE_KEYS:
            raise ConfigError(f"line {ln}: unknown key {key!r}")
        values[key] = val
    if flags:
        for key, val in flags.items():
            if val is not None and key in _FILE_KEYS | {"sweep", "big",
                                                        "check"}:
                values[key] = val

    cfg = RunConfig()
    if "example" in values:
        try:
            cfg.example = int(values["example"])
        except ValueError:
            raise ConfigError(f"example: cannot parse {values['example']!r}")
    if "method" in values:
        raw = values["method"]
        items = raw if isinstance(raw, list) else \
            [s.strip().lower() for s in str(raw).split(",")]
        cfg.methods = [s for s in items if s]
    if "sigma" in values:
        cfg.sigmas = _float_list("sigma", values["sigma"]) \
            if not isinstance(values["sigma"], list) else values["sigma"]
    if "mu" in values:
        cfg.mus = _float_list("mu", values["mu"]) \
            if not isinstance(values["mu"], list) else values["mu"]
    if "delta0" in values:
        cfg.delta0s = _float_list("delta0", values["delta0"]) \
            if not isinstance(values["delta0"], list) else values["delta0"]
    if "levels" in values:
        cfg.levels = _parse_levels(str(values["levels"]))
    for key, conv in (("n", int), ("jitter", float), ("quad_volume", int),
                      ("quad_error", int), ("quad_edge", int),
                      ("solver_tol", float)):
        if key in values:
            try:
                setattr(cfg, key, conv(values[key]))
            except ValueError:
                raise ConfigError(f"{key}: cannot parse {values[key]!r}")
    if "mesh_file" in values:
        cfg.mesh_file = str(values["mesh_file"])
    if "out" in values:
        cfg.out = str(values["out"])
    if "sweep" in values:
        cfg.sweep = values["sweep"]
    if "big" in values:
        cfg.big = bool(values["big"])
    if "check" in values:
        cfg.check = bool(values["check"])
    if cfg.big and "levels" not in values:
        cfg.levels = [1, 2, 3, 4, 5]
    return cfg.validate()


# ---------------------------------------------------------------------------
# output formatting


def _fmt(x):
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.12e}"
    return str(x)


def _fmt_eoc(r):
    return "exact" if r is None else f"{r:.6f}"


def report_to_csv(report):
    """Fixed-schema CSV; EOC cells are empty on the first level and
    'exact' where an error vanished identically."""
    eoc_cols = {name: report.eoc(name)[0] if len(report.rows) > 1 else []
                for name in ("l2u", "h1u", "l2p")}
    lines = [CSV_HEADER]
    for k, row in enumerate(report.rows):
        eocs = {}
        for name in ("l2u", "h1u", "l2p"):
            rates = eoc_cols[name]
            eocs[name] = "" if k == 0 or not rates \
                else _fmt_eoc(rates[k - 1])
        lines.append(",".join([
            str(row.level), _fmt(row.h_max), str(row.ndof_u),
            str(row.ndof_p), _fmt(row.l2u), eocs["l2u"], _fmt(row.h1u),
            eocs["h1u"], _fmt(row.l2p), eocs["l2p"], _fmt(row.div_norm),
            _fmt(row.s_seminorm), _fmt(row.picl2),
            f"{row.wall_ms:.3f}",
        ]))
    return "\n".join(lines) + "\n"


def _run_tag(report):
    return (f"ex{report.example_id}_{report.method}"
            f"_sigma{report.sigma:g}_mu{report.mu:g}"
            f"_d0{report.delta0:g}")


def emit_report(reports):
    """Markdown report: one table per (example, sigma, mu) with method
    column groups and an average-EOC footer, plus diagnostics."""
    if not reports:
        raise ValueError("no reports to render")
    groups = {}
    for rep in reports:
        groups.setdefault((rep.example_id, rep.sigma, rep.mu), []).append(rep)

    out = ["# Oseen convergence report", ""]
    for (ex, sigma, mu), reps in groups.items():
        out.append(f"## Example {ex}, sigma={sigma:g}, mu={mu:g}")
        out.append("")
        labels = [_METHOD_LABEL[r.method] for r in reps]
        cols = ["level", "h_max"]
        for lab in labels:
            cols += [f"{lab} L2(u)", f"{lab} H1(u)", f"{lab} L2(p)"]
        out.append("| " + " | ".join(cols) + " |")
        out.append("|" + "---|" * len(cols))
        nlev = len(reps[0].rows)
        for k in range(nlev):
            row = [str(reps[0].rows[k].level),
                   f"{reps[0].rows[k].h_max:.4e}"]
            for rep in reps:
                r = rep.rows[k]
                row += [f"{r.l2u:.4e}", f"{r.h1u:.4e}", f"{r.l2p:.4e}"]
            out.append("| " + " | ".join(row) + " |")
        if nlev > 1:
            row = ["EOC", ""]
            for rep in reps:
                for name in ("l2u", "h1u", "l2p"):
                    _, avg = rep.eoc(name)
                    row.append(_fmt_eoc(avg) if avg is None
                               else f"{avg:.2f}")
            out.append("| " + " | ".join(row) + " |")
        out.append("")
        out.append("Diagnostics (per level: |div u_h|, |.|_S, "
                   "|pi_h p - p_h|):")
        out.append("")
        dcols = ["level"] + [f"{lab} div / S / pi" for lab in labels]
        out.append("| " + " | ".join(dcols) + " |")
        out.append("|" + "---|" * len(dcols))
        for k in range(nlev):
            row = [str(reps[0].rows[k].level)]
            for rep in reps:
                r = rep.rows[k]
                row.append(f"{r.div_norm:.2e} / {r.s_seminorm:.2e} / "
                           f"{r.picl2:.2e}")
            out.append("| " + " | ".join(row) + " |")
        out.append("")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# study driver


def _delta0_values(cfg, method):
    if method == "sv":
        return [None]
    if cfg.delta0s is None:
        return [None]
    return cfg.delta0s


def _load_base_mesh(cfg):
    if cfg.mesh_file is None:
        return None
    return read_mesh(Path(cfg.mesh_file).read_text())


def run_study(config):
    """Execute the configured runs; returns the reports and writes one
    CSV per run plus summary.csv and report.md (and .dat files for
    sweeps).  Raises SolverError with run coordinates on failure."""
    outdir = Path(config.out)
    outdir.mkdir(parents=True, exist_ok=True)
    cache = LevelCache(n=config.n, jitter=config.jitter,
                       base_mesh=_load_base_mesh(config))

    reports = []
    if config.sweep is None:
        for method in config.methods:
            for sigma in config.sigmas:
                for mu in config.mus:
                    for d0 in _delta0_values(config, method):
                        case = make_example(config.example, sigma, mu)
                        case.validate()
                        try:
                            rep = run_convergence(
                                case, method, config.levels, cache=cache,
                                delta0=d0,
                                volume_degree=config.quad_volume,
                                edge_degree=config.quad_edge,
                                error_degree=config.quad_error,
                                tol=config.solver_tol)
                        except SolverError as exc:
                            raise SolverError(
                                f"example {config.example}, {method}, "
                                f"sigma={sigma:g}, mu={mu:g}: {exc}")
                        reports.append(rep)
                        path = outdir / f"{_run_tag(rep)}.csv"
                        path.write_text(report_to_csv(rep))
    else:
        reports = _run_sweep(config, cache, outdir)

    _write_summary(outdir, reports)
    (outdir / "report.md").write_text(emit_report(reports))
    return reports


def _run_sweep(config, cache, outdir):
    """Error-vs-parameter sweeps at the top configured level."""
    level = max(config.levels)
    reports = []
    for method in config.methods:
        for sigma in config.sigmas:
            if config.sweep == "mu":
                values = config.mus
            else:
                if method == "sv":
                    continue
                values = config.delta0s or [1e-5, 1e-4, 1e-3, 1e-2,
                                            1e-1, 1e0, 1e1, 1e2, 1e3]
            rows = []
            rep = None
            for val in values:
                mu = val if config.sweep == "mu" else config.mus[0]
                d0 = None if config.sweep == "mu" else val
                case = make_example(config.example, sigma, mu)
                case.validate()
                try:
                    stats, _ = solve_on_level(
                        case, method, level, cache, delta0=d0,
                        volume_degree=config.quad_volume,
                        edge_degree=config.quad_edge,
                        error_degree=config.quad_error,
                        tol=config.solver_tol)
                except SolverError as exc:
                    raise SolverError(
                        f"sweep {config.sweep}={val:g}, {method}, "
                        f"sigma={sigma:g}: {exc}")
                rows.append((val, stats))
                rep = RunReport(example_id=config.example, method=method,
                                sigma=sigma, mu=mu,
                                delta0=d0 if d0 is not None else 0.0)
                rep.rows = [s for _, s in rows]
            reports.append(rep)

            tag = (f"sweep_{config.sweep}_ex{config.example}_{method}"
                   f"_sigma{sigma:g}_level{level}")
            head = (f"{config.sweep},l2u,h1u,l2p,div_norm,"
                    "s_seminorm,picl2")
            csv_lines = [head]
            dat_lines = [f"# {config.sweep} l2u h1u l2p"]
            for val, s in rows:
                csv_lines.append(
                    f"{val:g},{_fmt(s.l2u)},{_fmt(s.h1u)},{_fmt(s.l2p)},"
                    f"{_fmt(s.div_norm)},{_fmt(s.s_seminorm)},"
                    f"{_fmt(s.picl2)}")
                dat_lines.append(
                    f"{val:.6e} {s.l2u:.12e} {s.h1u:.12e} {s.l2p:.12e}")
            (outdir / f"{tag}.csv").write_text("\n".join(csv_lines) + "\n")
            (outdir / f"{tag}.dat").write_text("\n".join(dat_lines) + "\n")
    return reports


def _write_summary(outdir, reports):
    lines = ["example,method,sigma,mu,delta0," + CSV_HEADER]
    for rep in reports:
        body = report_to_csv(rep).splitlines()[1:]
        prefix = (f"{rep.example_id},{rep.method},{rep.sigma:g},"
                  f"{rep.mu:g},{rep.delta0:g}")
        lines += [f"{prefix},{row}" for row in body]
    (outdir / "summary.csv").write_text("\n".join(lines) + "\n")


def check_reports(reports, tol):
    """Self-check: solver residual within tolerance and exact discrete
    divergence-freeness on every run.  Returns a list of violations."""
    bad = []
    for rep in reports:
        for row in rep.rows:
            if row.residual > tol:
                bad.append(f"{_run_tag(rep)} level {row.level}: "
                           f"residual {row.residual:.2e}")
            if row.div_norm > 1e-10 * (1.0 + row.grad_norm):
                bad.append(f"{_run_tag(rep)} level {row.level}: "
                           f"|div u_h| = {row.div_norm:.2e}")
    return bad


def build_parser():
    ap = argparse.ArgumentParser(
        prog="oseenbench",
        description="Oseen benchmark solver on divergence-free elements")
    sub = ap.add_subparsers(dest="command", required=True)
    sv = sub.add_parser("solve", help="run a convergence study or sweep")
    sv.add_argument("--config", help="key = value config file")
    sv.add_argument("--example", type=int, choices=(1, 2, 3, 4))
    sv.add_argument("--method",
                    help="comma-separated subset of sv,supg,lsvs")
    sv.add_argument("--sigma", help="comma-separated reaction values")
    sv.add_argument("--mu", help="comma-separated viscosities")
    sv.add_argument("--delta0",
                    help="comma-separated stabilization weights")
    sv.add_argument("--levels", help="range a..b or comma list")
    sv.add_argument("--mesh-file", dest="mesh_file",
                    help="base mesh file (overrides the generator)")
    sv.add_argument("--n", type=int, help="base criss-cross subdivisions")
    sv.add_argument("--jitter", type=float,
                    help="base mesh jitter in [0, 0.3]")
    sv.add_argument("--out", help="output directory")
    sv.add_argument("--sweep", choices=("mu", "delta0"),
                    help="parameter sweep at the top level of the range")
    sv.add_argument("--big", action="store_true", default=None,
                    help="allow level-5 runs")
    sv.add_argument("--check", action="store_true", default=None,
                    help="verify residual/divergence gates; exit 4 on "
                         "failure")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        file_text = ""
        if args.config:
            file_text = Path(args.config).read_text()
        flags = {k: v for k, v in vars(args).items()
                 if k not in ("command", "config")}
        config = parse_config(file_text, flags)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        reports = run_study(config)
    except SolverError as exc:
        print(f"solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER

    if config.check:
        bad = check_reports(reports, config.solver_tol)
        if bad:
            for line in bad:
                print(f"check failed: {line}", file=sys.stderr)
            return EXIT_CHECK
    print(f"wrote {len(reports)} run(s) to {config.out}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
