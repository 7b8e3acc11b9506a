"""Sampled curves for thermodynamic diagrams, plus CSV/JSON export.

Nothing here draws anything; every function returns :class:`CurveSeries`
polylines that external plotting tools can consume.  Curves are sampled in
``x = delta/(k_B T)`` (or in a leg's own parameter), never directly in T.
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .cycles import CarnotCycle, OttoCycle
from .equilibrium import (
    SI,
    Constants,
    EquilibriumState,
    check_gap,
    check_positive_temperature,
    energy_ratio_x,
    entropy_x,
    massieu_x,
    population_x,
)
from .errors import RangeError

DEFAULT_SAMPLES = 256
DEFAULT_LEG_SAMPLES = 64
#: x interval used for curves parameterized by entropy
DEFAULT_X_RANGE = (0.05, 20.0)
SIGNIFICANT_DIGITS = 12

COORDS = ("h", "E", "S", "M", "T", "gap")
AXIS_NAMES = {
    "h": "hotness -1/(k_B T) [1/J]",
    "h_per_kelvin": "hotness -1/T [1/K]",
    "E": "energy E [J]",
    "S": "entropy S [J/K]",
    "M": "Massieu M [J/K]",
    "T": "temperature T [K]",
    "gap": "energy gap Delta [J]",
}


@dataclass
class CurveSeries:
    label: str
    x_name: str
    y_name: str
    points: List[Tuple[float, float]] = field(default_factory=list)

    def __post_init__(self):
        for x, y in self.points:
            if not (math.isfinite(x) and math.isfinite(y)):
                raise RangeError(f"series {self.label!r} contains a non-finite point ({x!r}, {y!r})")

    @property
    def xs(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def ys(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])


def _coordinate(state: EquilibriumState, name: str, per_kelvin: bool = False) -> float:
    if name == "h":
        if per_kelvin:
            return -1.0 / state.temperature
        return -1.0 / (state.constants.k_b * state.temperature)
    if name == "E":
        return state.energy
    if name == "S":
        return state.entropy
    if name == "M":
        return state.massieu
    if name == "T":
        return state.temperature
    if name == "gap":
        return state.gap
    raise ValueError(f"unknown coordinate {name!r}; choose from {COORDS}")


def _axis(name: str, per_kelvin: bool = False) -> str:
    return AXIS_NAMES["h_per_kelvin" if (name == "h" and per_kelvin) else name]


def _validate(p, e_ratio, s):
    # non-strict: p and S saturate in floating point at the ends of the x range
    if not (np.all((p >= 0) & (p <= 1)) and np.all(np.abs(e_ratio) <= 0.5)
            and np.all((s >= 0) & (s <= math.log(2)))):
        raise RangeError("sampled state violates equilibrium invariants")


def property_vs_hotness(prop: str, gap: float, h_range: Tuple[float, float],
                        n: int = DEFAULT_SAMPLES, constants: Constants = SI,
                        label: str = "") -> CurveSeries:
    """``prop`` in {"E", "S", "M"} at fixed gap versus ``h = -1/(k_B T)`` (1/J).

    The ``n`` samples are spread evenly over ``h_range``; a sample landing
    exactly on ``h = 0`` (infinite temperature) is dropped.  Positive ``h`` is
    the negative-temperature branch.
    """
    if prop not in ("E", "S", "M"):
        raise ValueError(f"property must be one of E, S, M; got {prop!r}")
    gap = check_gap(gap)
    lo, hi = map(float, h_range)
    if not (n >= 2 and lo < hi):
        raise RangeError(f"need n >= 2 and a non-empty hotness range, got n = {n}, range = {h_range}")
    h = np.linspace(lo, hi, n)
    h = h[h != 0.0]
    if h.size == 0:
        raise RangeError("hotness range contains no representable temperature")
    x = -gap * h
    e_ratio = energy_ratio_x(x)
    s = entropy_x(x)
    _validate(population_x(x), e_ratio, s)
    if prop == "E":
        y = gap * e_ratio
    elif prop == "S":
        y = constants.k_b * s
    else:
        y = constants.k_b * massieu_x(x)
    return CurveSeries(label or f"{prop} at gap={gap:.6g} J", _axis("h"), _axis(prop),
                       list(zip(h.tolist(), np.asarray(y).tolist())))


def _x_grid(n: int, x_range: Tuple[float, float]) -> np.ndarray:
    lo, hi = x_range
    if not (n >= 2 and 0 < lo < hi):
        raise RangeError(f"need n >= 2 and 0 < x_min < x_max, got n = {n}, range = {x_range}")
    return np.geomspace(lo, hi, n)


def property_vs_entropy(prop: str, gap: float, n: int = DEFAULT_SAMPLES,
                        x_range: Tuple[float, float] = DEFAULT_X_RANGE,
                        constants: Constants = SI, label: str = "") -> CurveSeries:
    """``prop`` in {"E", "T"} versus S at fixed gap, positive temperatures, S ascending."""
    if prop not in ("E", "T"):
        raise ValueError(f"property must be E or T; got {prop!r}")
    gap = check_gap(gap)
    x = _x_grid(n, x_range)[::-1]  # S decreases with x
    _validate(population_x(x), energy_ratio_x(x), entropy_x(x))
    s = constants.k_b * entropy_x(x)
    y = gap * energy_ratio_x(x) if prop == "E" else gap / (constants.k_b * x)
    return CurveSeries(label or f"{prop} at gap={gap:.6g} J", _axis("S"), _axis(prop),
                       list(zip(s.tolist(), np.asarray(y).tolist())))


def gap_vs_entropy(t: float, n: int = DEFAULT_SAMPLES,
                   x_range: Tuple[float, float] = DEFAULT_X_RANGE,
                   constants: Constants = SI, label: str = "") -> CurveSeries:
    """Gap versus S at fixed temperature ``t > 0``, S ascending."""
    t = check_positive_temperature(t)
    x = _x_grid(n, x_range)[::-1]
    _validate(population_x(x), energy_ratio_x(x), entropy_x(x))
    s = constants.k_b * entropy_x(x)
    y = x * constants.k_b * t
    return CurveSeries(label or f"gap at T={t:.6g} K", _axis("S"), _axis("gap"),
                       list(zip(s.tolist(), y.tolist())))


def _leg_states(a: EquilibriumState, b: EquilibriumState, kind: str, n: int) -> List[EquilibriumState]:
    k = a.constants
    u = np.linspace(0.0, 1.0, n)[1:-1]
    if kind == "isotherm":
        inner = [EquilibriumState(a.temperature, a.gap + f * (b.gap - a.gap), k) for f in u]
    elif kind == "isoentrope":
        inner = []
        for f in u:
            g = a.gap + f * (b.gap - a.gap)
            inner.append(EquilibriumState(a.temperature * g / a.gap, g, k))
    elif kind == "isogap":
        inner = [EquilibriumState(a.gap / (k.k_b * (a.x + f * (b.x - a.x))), a.gap, k) for f in u]
    else:
        raise ValueError(kind)
    return [a, *inner, b]


def cycle_path(cycle: Union[CarnotCycle, OttoCycle], coords: Tuple[str, str] = ("S", "T"),
               n_per_leg: int = DEFAULT_LEG_SAMPLES, per_kelvin: bool = False,
               label: str = "") -> List[CurveSeries]:
    """One series per leg of ``cycle`` in the ``coords`` plane.

    Leg endpoints are the cycle's own corner states, so consecutive legs
    share endpoints exactly and the path closes on itself.
    """
    if n_per_leg < 2:
        raise RangeError(f"n_per_leg must be >= 2, got {n_per_leg}")
    cx, cy = coords
    if isinstance(cycle, CarnotCycle):
        kinds = ("isotherm", "isoentrope", "isotherm", "isoentrope")
        names = ("1", "2", "3", "4")
        prefix = label or "carnot"
    else:
        kinds = ("isogap", "isoentrope", "isogap", "isoentrope")
        names = ("1'", "2'", "3'", "4'")
        prefix = label or "otto"
    out = []
    corners = cycle.corners
    for i, kind in enumerate(kinds):
        a, b = corners[i], corners[(i + 1) % 4]
        states = _leg_states(a, b, kind, n_per_leg)
        pts = [(_coordinate(s, cx, per_kelvin), _coordinate(s, cy, per_kelvin)) for s in states]
        out.append(CurveSeries(f"{prefix} {names[i]}-{names[(i + 1) % 4]}",
                               _axis(cx, per_kelvin), _axis(cy, per_kelvin), pts))
    return out


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.{SIGNIFICANT_DIGITS}g}"


def _round(v: float) -> float:
    return float(_fmt(v))


def to_csv(series: Sequence[CurveSeries]) -> str:
    """CSV text: a ``series,x,y`` header, then per series a
    ``# label,x_name,y_name`` comment line followed by ``label,x,y`` rows."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["series", "x", "y"])
    for s in series:
        meta = io.StringIO()
        csv.writer(meta, lineterminator="").writerow([s.label, s.x_name, s.y_name])
        buf.write("# " + meta.getvalue() + "\n")
        for x, y in s.points:
            w.writerow([s.label, _fmt(x), _fmt(y)])
    return buf.getvalue()


def to_json(series: Sequence[CurveSeries]) -> str:
    doc = [{"label": s.label, "x_name": s.x_name, "y_name": s.y_name,
            "points": [[_round(x), _round(y)] for x, y in s.points]} for s in series]
    return json.dumps(doc, indent=1) + "\n"


def from_json(text: str) -> List[CurveSeries]:
    return [CurveSeries(d["label"], d["x_name"], d["y_name"], [tuple(p) for p in d["points"]])
            for d in json.loads(text)]


def from_csv(text: str) -> List[CurveSeries]:
    out: List[CurveSeries] = []
    lines = text.splitlines()
    if not lines or lines[0] != "series,x,y":
        raise ValueError("missing 'series,x,y' header")
    for line in lines[1:]:
        if line.startswith("# "):
            label, x_name, y_name = next(csv.reader([line[2:]]))
            out.append(CurveSeries(label, x_name, y_name))
        else:
            label, x, y = next(csv.reader([line]))
            out[-1].points.append((float(x), float(y)))
    return out


def export(series: Iterable[CurveSeries], fmt: str, destination: Union[str, Path]) -> Path:
    """Write ``series`` to ``destination`` as ``csv`` or ``json``."""
    series = list(series)
    if fmt == "csv":
        text = to_csv(series)
    elif fmt == "json":
        text = to_json(series)
    else:
        raise ValueError(f"format must be csv or json, got {fmt!r}")
    path = Path(destination)
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return path


# ---------------------------------------------------------------------------
# figure panels
# ---------------------------------------------------------------------------

#: (t_high, t_low, b_high, b_low) of the Carnot cycle drawn in each panel
PANEL_CYCLES = {
    "a": (600.0, 300.0, 1600.0, 250.0),
    "b": (600.0, 300.0, 1600.0, 250.0),
    "c": (600.0, 300.0, 1600.0, 500.0),
    "d": (600.0, 300.0, 1600.0, 500.0),
}


def panel_cycles(name: str, constants: Constants = SI):
    """Carnot cycle of a panel and its inscribed Otto cycle."""
    from .cycles import CarnotSpec, build_carnot, build_otto, inscribe_otto
    from .equilibrium import gap_from_field

    t_high, t_low, b_high, b_low = PANEL_CYCLES[name]
    spec = CarnotSpec(t_high, t_low, gap_from_field(b_high, constants),
                      gap_from_field(b_low, constants), constants)
    carnot = build_carnot(spec)
    return carnot, build_otto(inscribe_otto(carnot))


def panel(name: str, n: int = DEFAULT_SAMPLES, n_per_leg: int = DEFAULT_LEG_SAMPLES,
          constants: Constants = SI) -> List[CurveSeries]:
    """Curve families and cycle overlays of one figure panel.

    Panels ``a``/``c`` plot E, S, M against hotness at the four corner gaps of
    the panel's Carnot cycle.  Panels ``b``/``d`` plot E and T against S at
    those gaps and the gap against S at the four corner temperatures of the
    Carnot and inscribed Otto cycles.  Both cycles are overlaid in every
    plane.
    """
    if name not in PANEL_CYCLES:
        raise ValueError(f"panel must be one of {sorted(PANEL_CYCLES)}, got {name!r}")
    carnot, otto = panel_cycles(name, constants)
    gaps = carnot.gaps
    out: List[CurveSeries] = []
    if name in ("a", "c"):
        t_low = carnot.spec.t_low
        h_max = 1.1 / (constants.k_b * t_low)
        for prop in ("E", "S", "M"):
            for g in gaps:
                b = g / (2 * constants.mu_b)
                out.append(property_vs_hotness(prop, g, (-h_max, h_max), n, constants,
                                               label=f"{prop} B={b:.6g}T"))
            out += cycle_path(carnot, ("h", prop), n_per_leg, label=f"carnot h-{prop}")
            out += cycle_path(otto, ("h", prop), n_per_leg, label=f"otto h-{prop}")
    else:
        for prop in ("E", "T"):
            for g in gaps:
                b = g / (2 * constants.mu_b)
                out.append(property_vs_entropy(prop, g, n, constants=constants,
                                               label=f"{prop} B={b:.6g}T"))
            out += cycle_path(carnot, ("S", prop), n_per_leg, label=f"carnot S-{prop}")
            out += cycle_path(otto, ("S", prop), n_per_leg, label=f"otto S-{prop}")
        temps = (carnot.spec.t_high, carnot.spec.t_low, otto.t1, otto.t3)
        for t in temps:
            out.append(gap_vs_entropy(t, n, constants=constants, label=f"gap T={t:.6g}K"))
        out += cycle_path(carnot, ("S", "gap"), n_per_leg, label="carnot S-gap")
        out += cycle_path(otto, ("S", "gap"), n_per_leg, label="otto S-gap")
    return out
