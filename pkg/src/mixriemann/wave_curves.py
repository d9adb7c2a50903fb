"""
Wave curves f_left(p), f_right(p) relating the star velocity to the star
pressure, plus the star densities and wave speeds that follow from p*.

Conventions: ``v* = v_left - f_left(p*)`` and ``v* = v_right + f_right(p*)``.
A side carries a shock if p > p_side and a rarefaction otherwise.

Along either outer wave chi and the concentrations are fixed, so the
pressure is affine in rho_1: p = A0 + A1 * rho_1 (see
:func:`mixriemann.eos.pressure_coefficients`).

Two shock branches are available. ``PAPER_LITERAL`` divides sqrt(p - p_side)
by the total density, reproducing the published benchmark tables.
``RH_CONSISTENT`` divides by sqrt of the total density, which is what the
Rankine-Hugoniot mass and momentum conditions actually require. The two
agree whenever the solution has no shock.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from . import eos
from .errors import ContractError, DegenerateWaveError, DomainError

LEFT = "left"
RIGHT = "right"

SHOCK = "shock"
RAREFACTION = "rarefaction"
ZERO_STRENGTH = "zero-strength"


class ShockMode(str, enum.Enum):
    PAPER_LITERAL = "paper-literal"
    RH_CONSISTENT = "rh-consistent"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SideData:
    """Per-side constants of a wave curve."""

    a0: float
    a1: float
    rho1: float
    rho_total: float
    # A0 + A1 * rho1, equal to the mixture pressure up to round-off
    p: float
    sound: float


@dataclass(frozen=True)
class MassFlux:
    q: tuple

    @property
    def total(self):
        return math.fsum(self.q)


@dataclass(frozen=True)
class WaveDescriptor:
    """
    Outer wave summary. ``head`` is the edge next to the initial state and
    ``tail`` the edge next to the contact; for a shock (or a zero-strength
    wave) both equal the single propagation speed.
    """

    kind: str
    head: float
    tail: float

    @property
    def speed(self):
        if self.kind == RAREFACTION:
            raise AttributeError("a rarefaction has head/tail speeds, not a single speed")
        return self.head


def _check_side(side):
    if side not in (LEFT, RIGHT):
        raise ContractError(f"side must be 'left' or 'right', got {side!r}")


def side_data(state, params):
    a0, a1 = eos.pressure_coefficients(params, state.chi, state.concentrations)
    r1 = state.rho[0]
    return SideData(a0=a0, a1=a1, rho1=r1, rho_total=state.density,
                    p=a0 + a1 * r1, sound=state.sound_speed(params))


def _log_ratio(p, dp, sd):
    """ln((p - A0) / (A1 rho1)); the log1p form is exact at p = p_side but
    loses p - A0 to cancellation close to A0."""
    x = dp / (sd.a1 * sd.rho1)
    if x > -0.5:
        return math.log1p(x)
    return math.log((p - sd.a0) / (sd.a1 * sd.rho1))


def _f_scalar(p, sd, mode):
    if not math.isfinite(p):
        raise DomainError(f"non-finite pressure {p!r}")
    if p <= sd.a0:
        raise DomainError(f"p = {p!r} must exceed A0 = {sd.a0!r}")
    dp = p - sd.p
    if dp > 0.0:
        # sqrt(p - p_side) * sqrt(1 - A1 rho1 / (p - A0)) without the cancellation
        g = dp / math.sqrt(p - sd.a0)
        if mode is ShockMode.PAPER_LITERAL:
            return g / sd.rho_total
        return g / math.sqrt(sd.rho_total)
    return _log_ratio(p, dp, sd) * sd.sound


def _f_array(p, sd, mode):
    if not np.all(np.isfinite(p)):
        raise DomainError("non-finite pressure")
    if np.any(p <= sd.a0):
        raise DomainError(f"all pressures must exceed A0 = {sd.a0!r}")
    dp = p - sd.p
    shock = dp > 0.0
    den = sd.rho_total if mode is ShockMode.PAPER_LITERAL else math.sqrt(sd.rho_total)
    out = np.empty_like(p)
    out[shock] = dp[shock] / np.sqrt(p[shock] - sd.a0) / den
    rare = ~shock
    x = dp[rare] / (sd.a1 * sd.rho1)
    near = x > -0.5
    lr = np.empty_like(x)
    lr[near] = np.log1p(x[near])
    lr[~near] = np.log((p[rare][~near] - sd.a0) / (sd.a1 * sd.rho1))
    out[rare] = lr * sd.sound
    return out


def f_from_side_data(p, sd, mode=ShockMode.RH_CONSISTENT):
    mode = ShockMode(mode)
    if np.ndim(p) == 0:
        return _f_scalar(float(p), sd, mode)
    return _f_array(np.asarray(p, dtype=float), sd, mode)


def f_side(p, state, side, params, mode=ShockMode.RH_CONSISTENT):
    """
    Velocity change across one outer wave as a function of the star pressure.

    ``p`` may be a float or an array. Raises :class:`DomainError` for
    ``p <= A0`` of that side.
    """
    _check_side(side)
    return f_from_side_data(p, side_data(state, params), mode)


def f_total(p, left, right, params, mode=ShockMode.RH_CONSISTENT):
    """f_left(p) + f_right(p) + (v_right - v_left); its root is p*."""
    sl = side_data(left, params)
    sr = side_data(right, params)
    return (f_from_side_data(p, sl, mode) + f_from_side_data(p, sr, mode)
            + (right.v - left.v))


def star_densities(p_star, state, params):
    """Partial densities behind an outer wave at pressure ``p_star``."""
    sd = side_data(state, params)
    if not math.isfinite(p_star) or p_star <= sd.a0:
        raise DomainError(f"p_star = {p_star!r} must exceed A0 = {sd.a0!r}")
    x = (p_star - sd.p) / (sd.a1 * sd.rho1)
    ratio = 1.0 + x if x > -0.5 else (p_star - sd.a0) / (sd.a1 * sd.rho1)
    if ratio <= 0.0:
        raise DomainError(f"p_star = {p_star!r} gives non-positive star density")
    return tuple(r * ratio for r in state.rho)


def shock_speed(state, star_state, v_star, side):
    """
    Shock speed from the component-1 mass jump and the relative mass fluxes
    Q_alpha = rho_alpha (v - S).

    Returns ``(S, MassFlux)``.
    """
    _check_side(side)
    if state.chi != star_state.chi:
        raise ContractError("chi must be equal on both sides of a shock")
    r, rs = state.rho[0], star_state.rho[0]
    if rs == r:
        raise DegenerateWaveError("zero-strength wave has no shock speed")
    # rho_1 (v - S) = rho_1* (v* - S), solved for S
    s = state.v + rs * (v_star - state.v) / (rs - r)
    q = tuple(ra * (state.v - s) for ra in state.rho)
    return s, MassFlux(q)


def rarefaction_speeds(state, star_state, v_star, side, params):
    """``(head, tail)`` characteristic speeds bounding a rarefaction fan."""
    _check_side(side)
    a = state.sound_speed(params)
    a_star = star_state.sound_speed(params)
    if side == LEFT:
        return state.v - a, v_star - a_star
    return state.v + a, v_star + a_star


def zero_strength(v_star, sd, side):
    s = v_star - sd.sound if side == LEFT else v_star + sd.sound
    return WaveDescriptor(ZERO_STRENGTH, s, s)

