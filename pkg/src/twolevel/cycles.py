"""Carnot and Otto-like cycles of the two-level working substance.

A Carnot cycle runs isotherm 1-2 at ``t_high``, isoentrope 2-3, isotherm 3-4
at ``t_low`` and isoentrope 4-1.  Its free inputs are the extreme gaps
``gap_high`` (corner 1) and ``gap_low`` (corner 3); the other two gaps follow
from keeping ``delta/T`` fixed on the isoentropes.

An Otto-like cycle replaces the isotherms by fixed-gap legs 1'-2' (at
``gap_high``) and 3'-4' (at ``gap_low``), heated and cooled by bath contact.
Corners 2' and 4' sit at ``t_high`` and ``t_low``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .equilibrium import (
    SI,
    Constants,
    EquilibriumState,
    check_gap,
    check_positive_temperature,
    isoentropic_state,
)
from .errors import InfeasibleError, RangeError
from .processes import Bath, LegResult, isoentrope, isogap_between, isotherm_between

#: Relative tolerance used to call two derived gaps or temperatures equal.
DEGENERACY_RTOL = 1e-12


def _check_temperatures(t_high: float, t_low: float) -> Tuple[float, float]:
    t_high = check_positive_temperature(t_high)
    t_low = check_positive_temperature(t_low)
    if not t_low < t_high:
        raise InfeasibleError(f"need t_low < t_high, got t_low = {t_low!r} K, t_high = {t_high!r} K")
    return t_high, t_low


# ---------------------------------------------------------------------------
# Carnot
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CarnotSpec:
    t_high: float
    t_low: float
    gap_high: float
    gap_low: float
    constants: Constants = SI

    @property
    def t_ratio(self) -> float:
        return self.t_low / self.t_high

    @property
    def gap_ratio(self) -> float:
        return self.gap_low / self.gap_high

    def check(self) -> "CarnotSpec":
        """Raise :class:`InfeasibleError` unless ``gap_low < gap_high t_low/t_high``."""
        t_high, t_low = _check_temperatures(self.t_high, self.t_low)
        gap_high, gap_low = check_gap(self.gap_high), check_gap(self.gap_low)
        limit = gap_high * t_low / t_high
        if not gap_low < limit:
            raise InfeasibleError(
                f"Carnot cycle needs gap_low < gap_high * t_low / t_high = {limit!r} J "
                f"(so that S2 > S1); got gap_low = {gap_low!r} J")
        return self


@dataclass(frozen=True)
class CarnotCycle:
    spec: CarnotSpec
    corners: Tuple[EquilibriumState, EquilibriumState, EquilibriumState, EquilibriumState]

    @property
    def gaps(self) -> Tuple[float, float, float, float]:
        return tuple(c.gap for c in self.corners)

    @property
    def entropies(self) -> Tuple[float, float, float, float]:
        return tuple(c.entropy for c in self.corners)


def build_carnot(spec: CarnotSpec) -> CarnotCycle:
    spec.check()
    gap_2 = spec.gap_low * spec.t_high / spec.t_low
    gap_4 = spec.gap_high * spec.t_low / spec.t_high
    k = spec.constants
    c1 = EquilibriumState(spec.t_high, spec.gap_high, k)
    c2 = EquilibriumState(spec.t_high, gap_2, k)
    # corners joined by an isoentrope share x exactly
    c3 = isoentropic_state(c2, spec.gap_low, spec.t_low)
    c4 = isoentropic_state(c1, gap_4, spec.t_low)
    return CarnotCycle(spec, (c1, c2, c3, c4))


def three_gap_carnot(t_high: float, t_low: float, gap_high: float,
                     constants: Constants = SI) -> CarnotSpec:
    """Carnot spec with ``gap_low = gap_high (t_low/t_high)^2``, so that ``gap_2 == gap_4``."""
    t_high, t_low = _check_temperatures(t_high, t_low)
    gap_high = check_gap(gap_high)
    return CarnotSpec(t_high, t_low, gap_high, gap_high * (t_low / t_high) ** 2, constants)


# ---------------------------------------------------------------------------
# Otto
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OttoSpec:
    t_high: float
    t_low: float
    gap_high: float
    gap_low: float
    constants: Constants = SI

    @property
    def t_ratio(self) -> float:
        return self.t_low / self.t_high

    @property
    def gap_ratio(self) -> float:
        return self.gap_low / self.gap_high

    def check(self) -> "OttoSpec":
        """Raise unless ``t_low/t_high < gap_low/gap_high < 1``."""
        t_high, t_low = _check_temperatures(self.t_high, self.t_low)
        gap_high, gap_low = check_gap(self.gap_high), check_gap(self.gap_low)
        if not gap_low < gap_high:
            raise InfeasibleError(f"Otto cycle needs gap_low < gap_high; got {gap_low!r} >= {gap_high!r} J")
        if not gap_low / gap_high > t_low / t_high:
            raise InfeasibleError(
                f"Otto cycle needs gap_low/gap_high > t_low/t_high = {t_low / t_high!r} "
                f"(so that S2' > S1'); got {gap_low / gap_high!r}")
        return self


@dataclass(frozen=True)
class OttoCycle:
    spec: OttoSpec
    corners: Tuple[EquilibriumState, EquilibriumState, EquilibriumState, EquilibriumState]

    @property
    def t1(self) -> float:
        """Temperature of corner 1' (start of the heating leg)."""
        return self.corners[0].temperature

    @property
    def t3(self) -> float:
        """Temperature of corner 3' (start of the cooling leg)."""
        return self.corners[2].temperature

    @property
    def gaps(self) -> Tuple[float, float, float, float]:
        return tuple(c.gap for c in self.corners)

    @property
    def entropies(self) -> Tuple[float, float, float, float]:
        return tuple(c.entropy for c in self.corners)


def build_otto(spec: OttoSpec) -> OttoCycle:
    spec.check()
    t1 = spec.t_low * spec.gap_high / spec.gap_low
    t3 = spec.t_high * spec.gap_low / spec.gap_high
    k = spec.constants
    c2 = EquilibriumState(spec.t_high, spec.gap_high, k)
    c4 = EquilibriumState(spec.t_low, spec.gap_low, k)
    c1 = isoentropic_state(c4, spec.gap_high, t1)
    c3 = isoentropic_state(c2, spec.gap_low, t3)
    return OttoCycle(spec, (c1, c2, c3, c4))


def special_otto(t_high: float, t_low: float, gap_high: float, constants: Constants = SI) -> OttoSpec:
    """Otto spec with ``(gap_low/gap_high)^2 = t_low/t_high``; then ``t1' == t3'``."""
    t_high, t_low = _check_temperatures(t_high, t_low)
    gap_high = check_gap(gap_high)
    return OttoSpec(t_high, t_low, gap_high, gap_high * math.sqrt(t_low / t_high), constants)


def inscribe_otto(cycle: CarnotCycle) -> OttoSpec:
    """Otto spec sharing the Carnot temperatures, with gaps ``max``/``min`` of corners 2 and 4."""
    gap_2, gap_4 = cycle.corners[1].gap, cycle.corners[3].gap
    if abs(gap_2 - gap_4) <= DEGENERACY_RTOL * max(gap_2, gap_4):
        raise InfeasibleError(
            f"corner gaps 2 and 4 coincide ({gap_2!r} J); a three-gap Carnot cycle has no inscribed Otto cycle")
    s = cycle.spec
    spec = OttoSpec(s.t_high, s.t_low, max(gap_2, gap_4), min(gap_2, gap_4), s.constants)
    return spec.check()


def otto_corner_temperatures(gap_ratio: float, t_ratio: float) -> Tuple[float, float]:
    """``(t1'/t_high, t3'/t_high)`` of the Otto cycle inscribed in a Carnot cycle
    with ``gap_low/gap_high = gap_ratio`` and ``t_low/t_high = t_ratio``.

    Works directly from the corner gaps and does not require the inscribed
    spec to be feasible.
    """
    gap_2 = gap_ratio / t_ratio
    gap_4 = t_ratio
    rho = min(gap_2, gap_4) / max(gap_2, gap_4)
    return t_ratio / rho, rho


def otto_reverse_feasible(gap_ratio: float, t_ratio: float) -> bool:
    """False inside the window ``t^(5/2) < gap_ratio < t^(3/2)`` where the
    inscribed Otto cycle has ``t3' > t1'`` and cannot run as refrigerator or
    heat pump between two baths."""
    for name, value in (("gap_ratio", gap_ratio), ("t_ratio", t_ratio)):
        if not 0.0 < value < 1.0:
            raise RangeError(f"{name} must lie in (0, 1), got {value!r}")
    return not (t_ratio ** 2.5 < gap_ratio < t_ratio ** 1.5)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycleReport:
    """Leg-by-leg ledger of one cycle.

    ``q_in_high`` is the heat received on the high-temperature leg and
    ``q_out_low`` the heat rejected on the low-temperature leg; ``w_net`` is
    the net work delivered.  In refrigeration and heat-pump modes all three
    are negative.  ``coefficient`` is computed from the ledger;
    ``coefficient_exact`` is the closed-form value of the inputs (``None``
    when no closed form applies).
    """

    legs: Tuple[LegResult, ...]
    q_in_high: float
    q_out_low: float
    w_net: float
    coefficient: float
    coefficient_exact: Optional[float]
    s_gen_total: float
    closure_energy: float
    closure_entropy: float
    mode: str = "engine"

    @property
    def energy_scale(self) -> float:
        return max(max(abs(leg.d_energy), abs(leg.q_in), abs(leg.w_out)) for leg in self.legs)

    @property
    def entropy_scale(self) -> float:
        return max(abs(leg.d_entropy) for leg in self.legs)


def _report(legs, high: int, low: int, mode: str, exact: Optional[float]) -> CycleReport:
    q_in_high = legs[high].q_in
    q_out_low = -legs[low].q_in
    # first law over the closed loop; summing w_out instead would carry the
    # roundoff of every energy difference
    w_net = math.fsum(leg.q_in for leg in legs)
    if mode == "engine":
        coefficient = w_net / q_in_high
    elif mode == "refrigeration":
        coefficient = q_out_low / w_net
    else:
        coefficient = q_in_high / w_net
    return CycleReport(
        legs=tuple(legs),
        q_in_high=q_in_high,
        q_out_low=q_out_low,
        w_net=w_net,
        coefficient=coefficient,
        coefficient_exact=exact,
        s_gen_total=sum(leg.s_gen for leg in legs),
        closure_energy=sum(leg.d_energy for leg in legs),
        closure_entropy=sum(leg.d_entropy for leg in legs),
        mode=mode,
    )


def carnot_legs(cycle: CarnotCycle) -> Tuple[LegResult, ...]:
    c1, c2, c3, c4 = cycle.corners
    return (
        isotherm_between(c1, c2),
        isoentrope(c2, c3.gap, c3.temperature),
        isotherm_between(c3, c4),
        isoentrope(c4, c1.gap, c1.temperature),
    )


def evaluate_carnot(cycle: CarnotCycle) -> CycleReport:
    s = cycle.spec
    return _report(carnot_legs(cycle), 0, 2, "engine", 1.0 - s.t_low / s.t_high)


def otto_legs(cycle: OttoCycle, bath_high: Bath, bath_low: Bath) -> Tuple[LegResult, ...]:
    c1, c2, c3, c4 = cycle.corners
    return (
        isogap_between(c1, c2, bath_high),
        isoentrope(c2, c3.gap, c3.temperature),
        isogap_between(c3, c4, bath_low),
        isoentrope(c4, c1.gap, c1.temperature),
    )


def evaluate_otto(cycle: OttoCycle, bath_high: Optional[Bath] = None,
                  bath_low: Optional[Bath] = None) -> CycleReport:
    """Engine-mode ledger; baths default to ``t_high`` and ``t_low``."""
    s = cycle.spec
    bath_high = bath_high or Bath(s.t_high)
    bath_low = bath_low or Bath(s.t_low)
    legs = otto_legs(cycle, bath_high, bath_low)
    return _report(legs, 0, 2, "engine", 1.0 - s.gap_low / s.gap_high)


@dataclass(frozen=True)
class BoundsReport:
    lower: float
    value: float
    upper: float

    @property
    def strict(self) -> bool:
        return self.lower < self.value < self.upper


def carnot_bounds(spec: CarnotSpec) -> BoundsReport:
    spec.check()
    r, t = spec.gap_ratio, spec.t_ratio
    return BoundsReport(1.0 - t * t / r, 1.0 - t, 1.0 - r)


def otto_bounds(spec: OttoSpec) -> BoundsReport:
    spec.check()
    r, t = spec.gap_ratio, spec.t_ratio
    return BoundsReport(1.0 - r * r / t, 1.0 - r, 1.0 - t)


def reverse_cycle(cycle: Union[CarnotCycle, OttoCycle], mode: str = "refrigeration",
                  bath_high: Optional[Bath] = None, bath_low: Optional[Bath] = None) -> CycleReport:
    """Run a cycle backwards as a refrigerator or heat pump.

    The reversed path visits 1-4-3-2-1.  Heat, work, energy and entropy
    changes of every leg are the engine values negated.  For an Otto cycle the
    fixed-gap legs are re-evaluated against the reverse-mode baths (default:
    hot bath at ``t1'``, cold bath at ``t3'``), which fixes their entropy
    generation; reversal is refused when ``t3' >= t1'``.
    """
    if mode not in ("refrigeration", "heat_pump"):
        raise ValueError(f"mode must be 'refrigeration' or 'heat_pump', got {mode!r}")
    s = cycle.spec
    if isinstance(cycle, CarnotCycle):
        legs = [leg.reversed() for leg in reversed(carnot_legs(cycle))]
        dt = s.t_high - s.t_low
        exact = s.t_low / dt if mode == "refrigeration" else s.t_high / dt
        # reversed order: 1-4, 4-3 (low isotherm), 3-2, 2-1 (high isotherm)
        return _report(legs, 3, 1, mode, exact)

    if not cycle.t3 < cycle.t1:
        raise InfeasibleError(
            f"Otto cycle cannot run in reverse: t3' = {cycle.t3!r} K >= t1' = {cycle.t1!r} K, so no "
            f"hot bath at or below t1' can sit above a cold bath at or above t3' "
            f"(inside the window t^(5/2) < gap ratio < t^(3/2))")
    bath_high = bath_high or Bath(cycle.t1)
    bath_low = bath_low or Bath(cycle.t3)
    c1, c2, c3, c4 = cycle.corners
    legs = [
        isoentrope(c1, c4.gap, c4.temperature),
        isogap_between(c4, c3, bath_low),
        isoentrope(c3, c2.gap, c2.temperature),
        isogap_between(c2, c1, bath_high),
    ]
    return _report(legs, 3, 1, mode, None)


__all__ = [
    "CarnotSpec",
    "CarnotCycle",
    "OttoSpec",
    "OttoCycle",
    "CycleReport",
    "BoundsReport",
    "build_carnot",
    "three_gap_carnot",
    "evaluate_carnot",
    "carnot_bounds",
    "build_otto",
    "special_otto",
    "evaluate_otto",
    "otto_bounds",
    "inscribe_otto",
    "otto_corner_temperatures",
    "otto_reverse_feasible",
    "reverse_cycle",
]
