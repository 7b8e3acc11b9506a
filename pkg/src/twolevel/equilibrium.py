"""Canonical equilibrium properties of a two-level system with gap ``delta``.

The levels sit at ``-delta/2`` and ``+delta/2``.  Every property of a Gibbs
state is a function of the single coordinate ``x = delta / (k_B T)`` plus the
energy scale ``delta``, so the kernels below are written in ``x`` and the
:class:`EquilibriumState` wrapper supplies the scales.

Temperatures may be negative (population inversion).  ``T = 0`` and
``T = +-inf`` are not representable; asking for them raises
:class:`~twolevel.errors.RangeError`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.special import entr, expit

from .errors import ConvergenceError, RangeError

#: Beyond this ``|x|`` the factor ``exp(-|x|)`` underflows; entropy is clamped to 0.
X_MAX = 745.0
#: Bisection controls for the monotone inversions.
BISECT_MAXITER = 200
BISECT_XTOL = 1e-14

LN2 = math.log(2.0)


@dataclass(frozen=True)
class Constants:
    """Physical constants used to convert between SI and reduced quantities.

    ``mu_b`` defaults to the four-digit Bohr magneton used for the field to
    gap conversion; ``k_b`` is the exact SI Boltzmann constant.
    """

    k_b: float = 1.380649e-23
    mu_b: float = 9.274e-24

    def __post_init__(self):
        for name in ("k_b", "mu_b"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise RangeError(f"constant {name} must be positive and finite, got {value!r}")


SI = Constants()


# ---------------------------------------------------------------------------
# kernels in the dimensionless coordinate x = delta / (k_B T)
# ---------------------------------------------------------------------------

def population_x(x):
    """Excited-level population ``1 / (1 + exp(x))``."""
    return expit(-np.asarray(x, dtype=float))


def energy_ratio_x(x):
    """Mean energy in units of the gap, ``E/delta = tanh(-x/2) / 2``."""
    return 0.5 * np.tanh(-0.5 * np.asarray(x, dtype=float))


def entropy_x(x):
    """Entropy in units of ``k_B``.

    Uses ``ln(1 + e^-a) + a e^-a / (1 + e^-a)`` with ``a = |x|``, which keeps
    full relative precision for large ``|x|``.  Values with ``|x| > X_MAX``
    are clamped to 0.
    """
    a = np.abs(np.asarray(x, dtype=float))
    with np.errstate(under="ignore"):
        ea = np.exp(-a)
        s = np.log1p(ea) + a * ea / (1.0 + ea)
    return np.where(a > X_MAX, 0.0, s)


def entropy_derivative_x(x):
    """``d(S/k_B)/dx = -x p (1 - p)``."""
    x = np.asarray(x, dtype=float)
    p = population_x(x)
    return -x * p * (1.0 - p)


def massieu_x(x):
    """Massieu function in units of ``k_B``: ``S/k_B + (x/2) tanh(x/2)``."""
    x = np.asarray(x, dtype=float)
    return entropy_x(x) + 0.5 * x * np.tanh(0.5 * x)


def entropy_from_ratio(e_ratio):
    """Fundamental relation ``S/k_B`` as a function of ``E/delta`` alone.

    Evaluated through the Shannon form in ``p = 1/2 + E/delta``, independently
    of :func:`entropy_x`.
    """
    e = np.asarray(e_ratio, dtype=float)
    return entr(0.5 + e) + entr(0.5 - e)


# ---------------------------------------------------------------------------
# validation helpers
# ---------------------------------------------------------------------------

def check_temperature(t: float) -> float:
    t = float(t)
    if not math.isfinite(t):
        raise RangeError(f"temperature must be finite, got {t!r} (T = +-inf is unrepresentable)")
    if t == 0.0:
        raise RangeError("temperature T = 0 is unrepresentable")
    return t


def check_gap(delta: float) -> float:
    delta = float(delta)
    if not (math.isfinite(delta) and delta > 0.0):
        raise RangeError(f"energy gap must be positive and finite, got {delta!r}")
    return delta


def check_positive_temperature(t: float) -> float:
    t = check_temperature(t)
    if t < 0:
        raise RangeError(f"a positive temperature is required here, got {t!r} K")
    return t


# ---------------------------------------------------------------------------
# states
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PropertySet:
    p: float
    energy: float
    entropy: float
    massieu: float


@dataclass(frozen=True)
class EquilibriumState:
    """Canonical Gibbs state at temperature ``temperature`` (K) and gap ``gap`` (J).

    All properties derive from ``x = delta/(k_B T)``.  States reached along an
    isoentrope keep the ``x`` of their origin bit for bit (see
    :func:`isoentropic_state`), so entropy and ``E/delta`` agree exactly at
    both ends even when ``T`` and ``delta`` carry rounding.
    """

    temperature: float
    gap: float
    constants: Constants = field(default=SI, repr=False)
    _x: float = field(init=False, repr=False, compare=False, default=math.nan)

    def __post_init__(self):
        object.__setattr__(self, "temperature", check_temperature(self.temperature))
        object.__setattr__(self, "gap", check_gap(self.gap))
        x = self.gap / (self.constants.k_b * self.temperature)
        if not math.isfinite(x) or x == 0.0:
            raise RangeError(f"x = delta/(k_B T) is not representable for {self!r}")
        object.__setattr__(self, "_x", x)

    @property
    def x(self) -> float:
        return self._x

    @property
    def saturated(self) -> bool:
        """True when ``|x| > X_MAX`` and entropy has been clamped to 0."""
        return abs(self.x) > X_MAX

    @property
    def p(self) -> float:
        return float(population_x(self.x))

    @property
    def energy_ratio(self) -> float:
        return float(energy_ratio_x(self.x))

    @property
    def energy(self) -> float:
        return self.gap * self.energy_ratio

    @property
    def entropy(self) -> float:
        return self.constants.k_b * float(entropy_x(self.x))

    @property
    def massieu(self) -> float:
        return self.constants.k_b * float(massieu_x(self.x))

    @property
    def hotness(self) -> float:
        """``-1/T`` in 1/K."""
        return hotness(self.temperature)

    @property
    def magnetic_field(self) -> float:
        """Magnetic field (T) equivalent to the gap for a spin-1/2."""
        return field_from_gap(self.gap, self.constants)

    def properties(self) -> PropertySet:
        return PropertySet(self.p, self.energy, self.entropy, self.massieu)

    def with_gap(self, gap: float) -> "EquilibriumState":
        return EquilibriumState(self.temperature, gap, self.constants)


def state_from_x(x: float, gap: float, constants: Constants = SI) -> EquilibriumState:
    return EquilibriumState(gap / (constants.k_b * x), gap, constants)


def isoentropic_state(start: EquilibriumState, gap: float,
                      temperature: Optional[float] = None) -> EquilibriumState:
    """State at ``gap`` on the isoentrope through ``start``.

    ``temperature`` defaults to ``T delta_new/delta``; a caller that knows the
    end temperature in closed form may pass it.  Either way the new state
    shares ``start.x`` exactly.
    """
    if temperature is None:
        temperature = start.temperature * (check_gap(gap) / start.gap)
    end = EquilibriumState(temperature, gap, start.constants)
    if abs(end.x - start.x) > 1e-13 * abs(start.x):
        raise RangeError(f"T = {temperature!r} K, delta = {gap!r} J is not on the isoentrope "
                         f"x = {start.x!r}")
    object.__setattr__(end, "_x", start.x)
    return end


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def gap_from_field(b: float, constants: Constants = SI) -> float:
    """Gap ``delta = 2 mu_B B`` (J) of a spin-1/2 in a field ``b`` (tesla)."""
    b = float(b)
    if not (math.isfinite(b) and b > 0):
        raise RangeError(f"magnetic field must be positive, got {b!r} T")
    return 2.0 * constants.mu_b * b


def field_from_gap(delta: float, constants: Constants = SI) -> float:
    return check_gap(delta) / (2.0 * constants.mu_b)


def excited_population(state: EquilibriumState) -> float:
    return state.p


def mean_energy(state: EquilibriumState) -> float:
    return state.energy


def entropy(state: EquilibriumState) -> float:
    return state.entropy


def massieu(state: EquilibriumState) -> float:
    return state.massieu


def entropy_from_energy(e: float, gap: float, constants: Constants = SI) -> float:
    """Entropy (J/K) from mean energy ``e`` and gap, via ``S(E/delta)``."""
    gap = check_gap(gap)
    ratio = float(e) / gap
    if not abs(ratio) < 0.5:
        raise RangeError(f"|E| must be below delta/2; got E/delta = {ratio!r}")
    return constants.k_b * float(entropy_from_ratio(ratio))


def temperature_from_energy(e: float, gap: float, constants: Constants = SI) -> float:
    """Invert the mean energy in closed form: ``x = -2 artanh(2E/delta)``."""
    gap = check_gap(gap)
    y = 2.0 * float(e) / gap
    if not abs(y) < 1.0:
        raise RangeError(f"|E| must be below delta/2 (T = 0 is unrepresentable); got 2E/delta = {y!r}")
    if y == 0.0:
        raise RangeError("E = 0 corresponds to T = +-inf, which is unrepresentable")
    x = -2.0 * math.atanh(y)
    return gap / (constants.k_b * x)


def bisect_decreasing(func, target: float, lo: float, hi: float,
                      xtol: float = BISECT_XTOL, maxiter: int = BISECT_MAXITER) -> float:
    """Solve ``func(x) = target`` for a non-increasing ``func`` on ``[lo, hi]``.

    Stops once the bracket is narrower than ``xtol`` or can no longer be
    split in floating point; returns whichever end lands closer to target.
    """
    f_lo, f_hi = func(lo), func(hi)
    if not (f_hi <= target <= f_lo):
        raise RangeError(
            f"target {target!r} outside bracket values [{f_hi!r}, {f_lo!r}] on [{lo!r}, {hi!r}]")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= xtol or mid <= lo or mid >= hi:
            break
        f_mid = func(mid)
        if f_mid > target:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    else:
        raise ConvergenceError(f"bisection did not converge; last bracket [{lo!r}, {hi!r}]")
    return lo if abs(f_lo - target) <= abs(f_hi - target) else hi


def x_from_reduced_entropy(s: float) -> float:
    """Return ``|x| > 0`` with ``S(|x|)/k_B = s``, for ``0 < s < ln 2``."""
    s = float(s)
    if not 0.0 < s < LN2:
        raise RangeError(f"entropy must lie in (0, k_B ln 2); got S/k_B = {s!r}")
    x = bisect_decreasing(lambda v: float(entropy_x(v)), s, 0.0, X_MAX)
    if x == 0.0:
        raise RangeError(f"S/k_B = {s!r} is indistinguishable from ln 2; delta/T would vanish")
    return x


def temperature_from_entropy(s_target: float, gap: float, branch: str = "positive",
                             constants: Constants = SI) -> float:
    """Temperature (K) at which the state with this gap has entropy ``s_target`` (J/K).

    ``branch`` selects the sign of T; the two branches give exactly opposite
    temperatures.
    """
    if branch not in ("positive", "negative"):
        raise ValueError(f"branch must be 'positive' or 'negative', got {branch!r}")
    gap = check_gap(gap)
    x = x_from_reduced_entropy(s_target / constants.k_b)
    t = gap / (constants.k_b * x)
    return t if branch == "positive" else -t


def gap_from_entropy(s_target: float, t: float, constants: Constants = SI) -> float:
    """Gap (J) at which a state at temperature ``t > 0`` has entropy ``s_target``."""
    t = check_positive_temperature(t)
    x = x_from_reduced_entropy(s_target / constants.k_b)
    return x * constants.k_b * t


def hotness(t: float) -> float:
    """``-1/T``: increases monotonically from cold to hot across both signs of T."""
    return -1.0 / check_temperature(t)


def is_hotter(a: float, b: float) -> bool:
    """True when temperature ``a`` is strictly hotter than ``b``.

    Every negative temperature is hotter than every positive one.
    """
    return hotness(a) > hotness(b)
