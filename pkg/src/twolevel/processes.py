"""Quasi-static process legs between equilibrium states.

Sign convention, fixed everywhere: ``q_in`` is heat received by the system,
``w_out`` is work delivered by the system.  Energy balance reads
``d_energy = q_in - w_out``; with a bath at ``t_q`` the entropy balance reads
``d_entropy = q_in / t_q + s_gen`` with ``s_gen >= 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.integrate import trapezoid

from .equilibrium import (
    SI,
    Constants,
    EquilibriumState,
    check_gap,
    check_positive_temperature,
    entropy_derivative_x,
    entropy_x,
    isoentropic_state,
)
from .errors import InfeasibleError, RangeError

#: Relative band below zero in which a computed s_gen is treated as roundoff.
SGEN_ROUNDOFF = 1e-15


@dataclass(frozen=True)
class Bath:
    """Heat reservoir at temperature ``t_q`` (K)."""

    t_q: float

    def __post_init__(self):
        object.__setattr__(self, "t_q", check_positive_temperature(self.t_q))


@dataclass(frozen=True)
class LegResult:
    q_in: float
    w_out: float
    d_energy: float
    d_entropy: float
    s_gen: float
    start: Optional[EquilibriumState] = None
    end: Optional[EquilibriumState] = None
    kind: str = ""
    bath: Optional[Bath] = None

    @property
    def energy_residual(self) -> float:
        return self.d_energy - (self.q_in - self.w_out)

    @property
    def entropy_residual(self) -> float:
        """``d_entropy - q_in/t_q - s_gen``; only defined when a bath is attached."""
        if self.bath is None:
            raise ValueError("leg has no bath; entropy balance needs a bath temperature")
        return self.d_entropy - self.q_in / self.bath.t_q - self.s_gen

    def reversed(self) -> "LegResult":
        """The same leg run backwards.  Only reversible legs can be reversed."""
        if self.s_gen != 0.0:
            raise InfeasibleError(
                f"leg {self.kind or '?'} generates entropy ({self.s_gen!r} J/K) and cannot be reversed")
        return LegResult(-self.q_in, -self.w_out, -self.d_energy, -self.d_entropy, 0.0,
                         start=self.end, end=self.start, kind=self.kind, bath=self.bath)


def _guard_sgen(s_gen: float, scale: float, message: str) -> float:
    if s_gen >= 0.0:
        return s_gen
    if s_gen >= -SGEN_ROUNDOFF * scale:
        return 0.0
    raise InfeasibleError(message)


def energy_change(a: EquilibriumState, b: EquilibriumState) -> float:
    """``E_b - E_a`` with the ground-state part split off.

    Near saturation both energies round to ``-delta/2``; writing
    ``E = delta p - delta/2`` keeps the excitation part exact.
    """
    return (b.gap * b.p - a.gap * a.p) - 0.5 * (b.gap - a.gap)


def isotherm_reversible(t: float, gap_a: float, gap_b: float, constants: Constants = SI) -> LegResult:
    """Reversible isotherm at ``t`` while the gap changes from ``gap_a`` to ``gap_b``.

    The bath sits at the system temperature, so ``q_in = T dS`` and no entropy
    is generated; the rest of the energy change is work.
    """
    t = check_positive_temperature(t)
    return isotherm_between(EquilibriumState(t, gap_a, constants), EquilibriumState(t, gap_b, constants))


def isotherm_between(a: EquilibriumState, b: EquilibriumState) -> LegResult:
    """:func:`isotherm_reversible` between two given states at one temperature."""
    t = check_positive_temperature(a.temperature)
    if b.temperature != t:
        raise RangeError(f"isotherm endpoints differ in temperature: {t!r} K vs {b.temperature!r} K")
    d_s = a.constants.k_b * (float(entropy_x(b.x)) - float(entropy_x(a.x)))
    d_e = energy_change(a, b)
    q = t * d_s
    return LegResult(q, q - d_e, d_e, d_s, 0.0, a, b, "isotherm", Bath(t))


def isoentrope(start: EquilibriumState, gap_b: float, t_b: Optional[float] = None) -> LegResult:
    """Reversible adiabatic change of gap: ``delta/T``, ``E/delta``, ``E/T`` stay fixed.

    The end temperature is ``T delta_b/delta`` unless given as ``t_b``.
    """
    gap_b = check_gap(gap_b)
    end = isoentropic_state(start, gap_b, t_b)
    d_e = start.energy_ratio * (gap_b - start.gap)
    return LegResult(0.0, -d_e, d_e, 0.0, 0.0, start, end, "isoentrope")


def isogap_with_bath(gap: float, t_a: float, t_b: float, bath: Bath,
                     constants: Constants = SI) -> LegResult:
    """Fixed-gap heating or cooling from ``t_a`` to ``t_b`` by contact with ``bath``.

    No work is exchanged.  Entropy generated is ``dS - q_in/t_q``.  Heat can
    only flow into the system while ``t_q >= T`` and out while ``t_q <= T``,
    so the bath must bound the whole temperature range of the leg; otherwise
    :class:`InfeasibleError` is raised.
    """
    t_a = check_positive_temperature(t_a)
    t_b = check_positive_temperature(t_b)
    return isogap_between(EquilibriumState(t_a, gap, constants), EquilibriumState(t_b, gap, constants), bath)


def isogap_between(a: EquilibriumState, b: EquilibriumState, bath: Bath) -> LegResult:
    """:func:`isogap_with_bath` between two given states of one gap."""
    t_a = check_positive_temperature(a.temperature)
    t_b = check_positive_temperature(b.temperature)
    if b.gap != a.gap:
        raise RangeError(f"isogap endpoints differ in gap: {a.gap!r} J vs {b.gap!r} J")
    if t_b > t_a and bath.t_q < t_b:
        raise InfeasibleError(
            f"bath at T_Q = {bath.t_q!r} K is colder than the system's final {t_b!r} K "
            f"and cannot heat it there")
    if t_b < t_a and bath.t_q > t_b:
        raise InfeasibleError(
            f"bath at T_Q = {bath.t_q!r} K is hotter than the system's final {t_b!r} K "
            f"and cannot cool it there")
    k = a.constants.k_b
    q = a.gap * (b.p - a.p)
    s_a, s_b = float(entropy_x(a.x)), float(entropy_x(b.x))
    d_s = k * (s_b - s_a)
    exchanged = q / bath.t_q
    scale = max(k * max(s_a, s_b), abs(exchanged))
    s_gen = _guard_sgen(
        d_s - exchanged, scale,
        f"bath at T_Q = {bath.t_q!r} K cannot take the system from {t_a!r} K to {t_b!r} K "
        f"at fixed gap: entropy generation would be {d_s - exchanged!r} J/K < 0")
    return LegResult(q, 0.0, q, d_s, s_gen, a, b, "isogap", bath)


def work_only_relaxation(start: EquilibriumState, end: EquilibriumState) -> LegResult:
    """Adiabatic (no heat) leg; the entropy rise is generated internally."""
    k = start.constants.k_b
    s_a, s_b = float(entropy_x(start.x)), float(entropy_x(end.x))
    d_s = k * (s_b - s_a)
    s_gen = _guard_sgen(
        d_s, k * max(s_a, s_b),
        f"work-only process would decrease entropy by {-d_s!r} J/K; impossible without heat")
    d_e = energy_change(start, end)
    return LegResult(0.0, -d_e, d_e, d_s, s_gen, start, end, "work-only")


def heat_only_feasible(state: EquilibriumState, d_gap: float, d_energy: float, bath: Bath) -> bool:
    """Whether a small heat-only step (no net work) is allowed by the second law.

    Requires ``(E/delta) d_gap <= (1 - T/T_Q) d_energy`` at positive T.
    """
    check_positive_temperature(state.temperature)
    return state.energy_ratio * d_gap <= (1.0 - state.temperature / bath.t_q) * d_energy


def general_leg_work(state: EquilibriumState, d_gap: float, q_in: float, s_gen: float,
                     bath: Bath) -> float:
    """Differential work delivered when heat ``q_in`` enters from ``bath`` and
    ``s_gen`` is generated while the gap changes by ``d_gap``."""
    if s_gen < 0:
        raise InfeasibleError(f"entropy generation must be non-negative, got {s_gen!r}")
    t = state.temperature
    return -state.energy_ratio * d_gap + (1.0 - t / bath.t_q) * q_in - t * s_gen


def integrate_isotherm_numerical(t: float, gap_a: float, gap_b: float, n_steps: int,
                                 constants: Constants = SI) -> LegResult:
    """Trapezoid-rule version of :func:`isotherm_reversible` (cross-check only).

    Accumulates ``T dS`` over the gap with ``n_steps`` panels; the work is then
    fixed by the exact energy change.
    """
    t = check_positive_temperature(t)
    if n_steps < 1:
        raise RangeError(f"n_steps must be >= 1, got {n_steps!r}")
    a = EquilibriumState(t, gap_a, constants)
    b = EquilibriumState(t, gap_b, constants)
    gaps = np.linspace(a.gap, b.gap, n_steps + 1)
    x = gaps / (constants.k_b * t)
    # T dS/d(gap) = T * dS/dx / (k_B T) = dS/dx in reduced units
    integrand = entropy_derivative_x(x)
    q = float(trapezoid(integrand, gaps))
    d_e = energy_change(a, b)
    return LegResult(q, q - d_e, d_e, q / t, 0.0, a, b, "isotherm-numerical", Bath(t))


__all__ = [
    "Bath",
    "LegResult",
    "isotherm_reversible",
    "isoentrope",
    "isogap_with_bath",
    "work_only_relaxation",
    "heat_only_feasible",
    "general_leg_work",
    "integrate_isotherm_numerical",
]
