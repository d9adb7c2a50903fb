"""
Sampling of the self-similar solution W(xi), xi = x / t.

Regions run left to right as L, LFAN (left rarefaction only), LSTAR, RSTAR,
RFAN (right rarefaction only), R. Every region owns its left edge, so a
sample exactly on a shock or on the contact returns the state to the right.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .state import RiemannState
from .wave_curves import LEFT, RAREFACTION, RIGHT

L, LFAN, LSTAR, RSTAR, RFAN, R = "L", "LFAN", "LSTAR", "RSTAR", "RFAN", "R"
REGION_ORDER = (L, LFAN, LSTAR, RSTAR, RFAN, R)


@dataclass(frozen=True)
class ProfileEntry:
    xi: float
    state: RiemannState
    p: float
    region: str


@dataclass(frozen=True)
class Profile:
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def regions(self):
        """Distinct region tags in order of appearance."""
        seen = []
        for e in self.entries:
            if not seen or seen[-1] != e.region:
                seen.append(e.region)
        return seen


def fan_state(xi, state, side, params, tail=None):
    """
    State inside a centred rarefaction fan.

    chi and the concentrations are fan invariants, so the sound speed A is
    constant and v -/+ A ln(rho_1) closes the state. ``tail`` (optional)
    is the fan edge next to the contact, used only for the range check.
    """
    a = state.sound_speed(params)
    if side == LEFT:
        head = state.v - a
        lo, hi = head, tail
    elif side == RIGHT:
        head = state.v + a
        lo, hi = tail, head
    else:
        raise ContractError(f"side must be 'left' or 'right', got {side!r}")
    slack = 1e-12 * max(abs(head), a)
    if (lo is not None and xi < lo - slack) or (hi is not None and xi > hi + slack):
        raise ContractError(f"xi = {xi!r} lies outside the {side} fan")

    if side == LEFT:
        v = xi + a
        ratio = math.exp((state.v - v) / a)
    else:
        v = xi - a
        ratio = math.exp((v - state.v) / a)
    return RiemannState(state.chi, tuple(r * ratio for r in state.rho), v)


def sample(solution, left, right, params, xi):
    """Return ``(state, region)`` of the solution at ``xi``."""
    vs = solution.v_star
    if xi < vs:
        wave = solution.left_wave
        if wave.kind == RAREFACTION:
            if xi < wave.head:
                return left, L
            if xi < wave.tail:
                return fan_state(xi, left, LEFT, params), LFAN
        elif xi < wave.head:
            return left, L
        return solution.star_state(LEFT, left, right), LSTAR

    wave = solution.right_wave
    if wave.kind == RAREFACTION:
        if xi < wave.tail:
            return solution.star_state(RIGHT, left, right), RSTAR
        if xi < wave.head:
            return fan_state(xi, right, RIGHT, params), RFAN
        return right, R
    if xi < wave.head:
        return solution.star_state(RIGHT, left, right), RSTAR
    return right, R


def wave_edges(solution):
    """All discontinuity / fan-edge abscissae, including the contact."""
    lw, rw = solution.left_wave, solution.right_wave
    edges = {lw.head, lw.tail, solution.v_star, rw.tail, rw.head}
    return sorted(edges)


def profile(solution, left, right, params, xi_min, xi_max, count):
    """
    Sample on a uniform grid plus every wave edge and its neighbours at
    +-1e-9 times the speed scale, so that jumps render as near-vertical lines.
    """
    if not (math.isfinite(xi_min) and math.isfinite(xi_max)) or xi_min >= xi_max:
        raise ContractError(f"need finite xi_min < xi_max, got [{xi_min}, {xi_max}]")
    if int(count) != count or count < 2:
        raise ContractError(f"count must be an integer >= 2, got {count!r}")

    edges = wave_edges(solution)
    delta = 1e-9 * max(max(abs(e) for e in edges), 1.0)
    xs = set(np.linspace(xi_min, xi_max, int(count)).tolist())
    for e in edges:
        for x in (e - delta, e, e + delta):
            if xi_min <= x <= xi_max:
                xs.add(x)

    entries = []
    for x in sorted(xs):
        st, tag = sample(solution, left, right, params, x)
        entries.append(ProfileEntry(x, st, st.pressure(params), tag))
    return Profile(tuple(entries))
