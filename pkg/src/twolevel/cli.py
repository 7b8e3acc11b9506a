"""Command-line front end.

Exit codes: 0 success, 1 domain or feasibility error, 2 usage error.
Constants can be overridden with ``--k-b``/``--mu-b`` or the environment
variables ``TWOLEVEL_K_B`` and ``TWOLEVEL_MU_B``.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .cycles import (
    CarnotSpec,
    OttoSpec,
    build_carnot,
    build_otto,
    carnot_bounds,
    evaluate_carnot,
    evaluate_otto,
    inscribe_otto,
    otto_bounds,
    reverse_cycle,
    special_otto,
    three_gap_carnot,
)
from .diagrams import COORDS, cycle_path, export, panel
from .equilibrium import Constants, EquilibriumState, check_temperature, gap_from_field, hotness
from .errors import InfeasibleError, TwoLevelError
from .processes import Bath

ENV_K_B = "TWOLEVEL_K_B"
ENV_MU_B = "TWOLEVEL_MU_B"


@dataclass(frozen=True)
class RunConfig:
    units: str = "si"
    precision: int = 12
    format: str = "table"
    constants: Constants = Constants()

    def num(self, v):
        if v is None:
            return None
        return float(f"{v:.{self.precision}g}")

    def text(self, v) -> str:
        return "-" if v is None else f"{v:.{self.precision}g}"

    # reduced mode: k_B = 1, energies in kelvin, entropies in units of k_B
    def energy(self, e: float) -> float:
        return e / self.constants.k_b if self.units == "reduced" else e

    def entropy(self, s: float) -> float:
        return s / self.constants.k_b if self.units == "reduced" else s

    @property
    def energy_unit(self) -> str:
        return "K" if self.units == "reduced" else "J"

    @property
    def entropy_unit(self) -> str:
        return "k_B" if self.units == "reduced" else "J/K"


class UsageError(Exception):
    pass


def _positive_env(name: str):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"environment variable {name}={raw!r} is not a number")


def _config(args) -> RunConfig:
    if not 6 <= args.precision <= 17:
        raise UsageError(f"--precision must lie in [6, 17], got {args.precision}")
    k_b = args.k_b if args.k_b is not None else _positive_env(ENV_K_B)
    mu_b = args.mu_b if args.mu_b is not None else _positive_env(ENV_MU_B)
    kwargs = {}
    if k_b is not None:
        kwargs["k_b"] = k_b
    if mu_b is not None:
        kwargs["mu_b"] = mu_b
    try:
        constants = Constants(**kwargs)
    except TwoLevelError as exc:
        raise UsageError(str(exc))
    return RunConfig(args.units, args.precision, args.format, constants)


def _gap(value: float, args, cfg: RunConfig) -> float:
    return float(value) if args.gap_joules else gap_from_field(value, cfg.constants)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _emit(cfg: RunConfig, doc: dict, out=None):
    """Render ``doc`` (a dict of scalars and lists of row dicts)."""
    out = out or sys.stdout
    if cfg.format == "json":
        out.write(json.dumps(_jsonify(cfg, doc), indent=1) + "\n")
        return
    sep = "," if cfg.format == "csv" else None
    for key, value in doc.items():
        if isinstance(value, list):
            if not value:
                continue
            cols = list(value[0])
            rows = [[_cell(cfg, r[c]) for c in cols] for r in value]
            out.write(f"# {key}\n" if sep else f"{key}:\n")
            if sep:
                out.write(sep.join(cols) + "\n")
                for r in rows:
                    out.write(sep.join(r) + "\n")
            else:
                widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
                out.write("  " + "  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
                for r in rows:
                    out.write("  " + "  ".join(v.rjust(w) for v, w in zip(r, widths)) + "\n")
        elif isinstance(value, dict):
            for k2, v2 in value.items():
                out.write(f"{key}.{k2}{',' if sep else ' = '}{_cell(cfg, v2)}\n")
        else:
            out.write(f"{key}{',' if sep else ' = '}{_cell(cfg, value)}\n")


def _cell(cfg, v) -> str:
    if isinstance(v, bool) or isinstance(v, str):
        return str(v)
    return cfg.text(v)


def _jsonify(cfg, v):
    if isinstance(v, dict):
        return {k: _jsonify(cfg, x) for k, x in v.items()}
    if isinstance(v, list):
        return [_jsonify(cfg, x) for x in v]
    if isinstance(v, float):
        return cfg.num(v)
    return v


def _corner_rows(cfg, corners, names):
    return [{
        "corner": n,
        "T": c.temperature,
        "B": c.magnetic_field,
        "gap": cfg.energy(c.gap),
        "S": cfg.entropy(c.entropy),
        "E": cfg.energy(c.energy),
    } for n, c in zip(names, corners)]


def _leg_rows(cfg, report, names):
    rows = []
    for i, leg in enumerate(report.legs):
        rows.append({
            "leg": names[i],
            "kind": leg.kind,
            "q_in": cfg.energy(leg.q_in),
            "w_out": cfg.energy(leg.w_out),
            "dE": cfg.energy(leg.d_energy),
            "dS": cfg.entropy(leg.d_entropy),
            "s_gen": cfg.entropy(leg.s_gen),
        })
    return rows


def _summary(cfg, report):
    return {
        "mode": report.mode,
        "q_in_high": cfg.energy(report.q_in_high),
        "q_out_low": cfg.energy(report.q_out_low),
        "w_net": cfg.energy(report.w_net),
        "coefficient": report.coefficient,
        "coefficient_exact": report.coefficient_exact,
        "s_gen_total": cfg.entropy(report.s_gen_total),
        "closure_energy": cfg.energy(report.closure_energy),
        "closure_entropy": cfg.entropy(report.closure_entropy),
    }


def _bounds(b):
    return {"lower": b.lower, "value": b.value, "upper": b.upper}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_props(args, cfg: RunConfig):
    if (args.field is None) == (args.gap is None):
        raise UsageError("give exactly one of --field or --gap")
    t = check_temperature(args.temp)
    gap = float(args.gap) if args.gap is not None else gap_from_field(args.field, cfg.constants)
    s = EquilibriumState(t, gap, cfg.constants)
    _emit(cfg, {
        "command": "props",
        "units": cfg.units,
        "T": s.temperature,
        "gap": cfg.energy(s.gap),
        "x": s.x,
        "p": s.p,
        "E": cfg.energy(s.energy),
        "S": cfg.entropy(s.entropy),
        "M": cfg.entropy(s.massieu),
        "hotness": hotness(t),
    })


def _carnot_spec(args, cfg) -> CarnotSpec:
    if args.three_gap:
        if args.b_low is not None:
            raise UsageError("--three-gap derives the low gap; do not pass --b-low")
        return three_gap_carnot(args.t_high, args.t_low, _gap(args.b_high, args, cfg), cfg.constants)
    if args.b_low is None:
        raise UsageError("--b-low is required unless --three-gap is given")
    return CarnotSpec(args.t_high, args.t_low, _gap(args.b_high, args, cfg),
                      _gap(args.b_low, args, cfg), cfg.constants)


def cmd_carnot(args, cfg: RunConfig):
    spec = _carnot_spec(args, cfg)
    cycle = build_carnot(spec)
    report = reverse_cycle(cycle, args.reverse) if args.reverse else evaluate_carnot(cycle)
    names = ("1", "2", "3", "4")
    legs = ("1-2", "2-3", "3-4", "4-1")
    if args.reverse:
        legs = ("1-4", "4-3", "3-2", "2-1")
    doc = {"command": "carnot", "units": cfg.units,
           "corners": _corner_rows(cfg, cycle.corners, names),
           "legs": _leg_rows(cfg, report, legs),
           "summary": _summary(cfg, report)}
    if args.bounds:
        doc["bounds"] = _bounds(carnot_bounds(spec))
    _emit(cfg, doc)


def cmd_otto(args, cfg: RunConfig):
    if args.inscribe_from is not None:
        b_high, b_low = args.inscribe_from
        carnot = build_carnot(CarnotSpec(args.t_high, args.t_low, _gap(b_high, args, cfg),
                                         _gap(b_low, args, cfg), cfg.constants))
        spec = inscribe_otto(carnot)
    elif args.special:
        if args.bp_high is None:
            raise UsageError("--special needs --bp-high")
        spec = special_otto(args.t_high, args.t_low, _gap(args.bp_high, args, cfg), cfg.constants)
    else:
        if args.bp_high is None or args.bp_low is None:
            raise UsageError("give --bp-high and --bp-low, or --inscribe-from, or --special")
        spec = OttoSpec(args.t_high, args.t_low, _gap(args.bp_high, args, cfg),
                        _gap(args.bp_low, args, cfg), cfg.constants)
    cycle = build_otto(spec)
    bath_high = Bath(args.bath_high) if args.bath_high is not None else None
    bath_low = Bath(args.bath_low) if args.bath_low is not None else None
    if args.reverse:
        report = reverse_cycle(cycle, args.reverse, bath_high, bath_low)
        legs = ("1'-4'", "4'-3'", "3'-2'", "2'-1'")
    else:
        report = evaluate_otto(cycle, bath_high, bath_low)
        legs = ("1'-2'", "2'-3'", "3'-4'", "4'-1'")
    doc = {"command": "otto", "units": cfg.units,
           "t1_prime": cycle.t1, "t3_prime": cycle.t3,
           "corners": _corner_rows(cfg, cycle.corners, ("1'", "2'", "3'", "4'")),
           "legs": _leg_rows(cfg, report, legs),
           "summary": _summary(cfg, report)}
    if args.bounds:
        doc["bounds"] = _bounds(otto_bounds(spec))
    _emit(cfg, doc)


def cmd_diagram(args, cfg: RunConfig):
    if args.panel:
        series = panel(args.panel, args.samples, args.leg_samples, cfg.constants)
    else:
        coords = tuple(c.strip() for c in args.custom.split(","))
        if len(coords) != 2 or not all(c in COORDS for c in coords):
            raise UsageError(f"--custom needs two of {', '.join(COORDS)} separated by a comma")
        carnot = build_carnot(CarnotSpec(args.t_high, args.t_low, _gap(args.b_high, args, cfg),
                                         _gap(args.b_low, args, cfg), cfg.constants))
        series = cycle_path(carnot, coords, args.leg_samples)
        try:
            otto = build_otto(inscribe_otto(carnot))
        except InfeasibleError:
            otto = None
        if otto is not None:
            series += cycle_path(otto, coords, args.leg_samples)
    fmt = args.format if args.format in ("csv", "json") else "csv"
    path = export(series, fmt, args.out)
    sys.stdout.write(f"wrote {len(series)} series to {path}\n")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--units", choices=("si", "reduced"), default="si")
    p.add_argument("--precision", type=int, default=12, help="significant digits, 6..17")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--k-b", type=float, default=None, help=f"Boltzmann constant override (or ${ENV_K_B})")
    p.add_argument("--mu-b", type=float, default=None, help=f"Bohr magneton override (or ${ENV_MU_B})")
    p.add_argument("--gap-joules", action="store_true",
                   help="read gap arguments as joules instead of tesla")
    return p


def _temps(p, defaults=(None, None)):
    p.add_argument("--t-high", type=float, required=defaults[0] is None, default=defaults[0])
    p.add_argument("--t-low", type=float, required=defaults[1] is None, default=defaults[1])


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="twolevel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("props", parents=[common], help="equilibrium properties of one state")
    p.add_argument("--temp", type=float, required=True)
    p.add_argument("--field", type=float, help="magnetic field, tesla")
    p.add_argument("--gap", type=float, help="energy gap, joules")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("carnot", parents=[common], help="build and evaluate a Carnot cycle")
    _temps(p)
    p.add_argument("--b-high", type=float, required=True)
    p.add_argument("--b-low", type=float)
    p.add_argument("--three-gap", action="store_true")
    p.add_argument("--reverse", nargs="?", const="refrigeration", choices=("refrigeration", "heat_pump"))
    p.add_argument("--bounds", action="store_true")
    p.set_defaults(func=cmd_carnot)

    p = sub.add_parser("otto", parents=[common], help="build and evaluate an Otto-like cycle")
    _temps(p)
    how = p.add_mutually_exclusive_group()
    how.add_argument("--inscribe-from", type=float, nargs=2, metavar=("B_HIGH", "B_LOW"),
                     help="inscribe in the Carnot cycle with these extreme gaps")
    how.add_argument("--special", action="store_true", help="(gap ratio)^2 = t_low/t_high")
    p.add_argument("--bp-high", type=float)
    p.add_argument("--bp-low", type=float)
    p.add_argument("--bath-high", type=float)
    p.add_argument("--bath-low", type=float)
    p.add_argument("--reverse", nargs="?", const="refrigeration", choices=("refrigeration", "heat_pump"))
    p.add_argument("--bounds", action="store_true")
    p.set_defaults(func=cmd_otto)

    p = sub.add_parser("diagram", parents=[common], help="export diagram curves")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--panel", choices=("a", "b", "c", "d"))
    which.add_argument("--custom", metavar="X,Y", help=f"cycle paths in a plane, from {', '.join(COORDS)}")
    p.add_argument("--out", required=True)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("--leg-samples", type=int, default=64)
    _temps(p, (600.0, 300.0))
    p.add_argument("--b-high", type=float, default=1600.0)
    p.add_argument("--b-low", type=float, default=250.0)
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        args.func(args, cfg)
    except UsageError as exc:
        parser.error(str(exc))
    except TwoLevelError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
