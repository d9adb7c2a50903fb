"""Root finding for the star pressure and assembly of the full star solution."""
import math
from dataclasses import dataclass

from .errors import BracketError, SolverError
from .state import RiemannState
from .wave_curves import (
    LEFT, RAREFACTION, RIGHT, SHOCK, ShockMode, WaveDescriptor, f_from_side_data,
    rarefaction_speeds, shock_speed, side_data, star_densities, zero_strength,
)

MAX_BRACKET_STEPS = 200
GROWTH = 8.0


@dataclass(frozen=True)
class StarSolution:
    p_star: float
    v_star: float
    left_wave: WaveDescriptor
    right_wave: WaveDescriptor
    rho_star_left: tuple
    rho_star_right: tuple
    mode: ShockMode
    iterations: int
    f_residual: float

    def star_state(self, side, left, right):
        """Constant state between the outer wave on ``side`` and the contact."""
        if side == LEFT:
            return RiemannState(left.chi, self.rho_star_left, self.v_star)
        return RiemannState(right.chi, self.rho_star_right, self.v_star)


class _PressureFunction:
    """f_total with the per-side constants computed once."""

    def __init__(self, left, right, params, mode):
        self.mode = ShockMode(mode)
        self.sl = side_data(left, params)
        self.sr = side_data(right, params)
        self.dv = right.v - left.v
        self.p_min = max(self.sl.a0, self.sr.a0)
        self.calls = 0

    def __call__(self, p):
        self.calls += 1
        return (f_from_side_data(p, self.sl, self.mode)
                + f_from_side_data(p, self.sr, self.mode) + self.dv)


def _bracket(fn):
    p_min = fn.p_min
    eps = 1e-9 * max(abs(p_min), 1.0)
    for _ in range(MAX_BRACKET_STEPS):
        p_lo = p_min + eps
        if p_lo > p_min:
            f_lo = fn(p_lo)
            if f_lo < 0.0:
                break
        eps *= 0.5
    else:
        raise BracketError(f"no lower bracket above A0 = {p_min!r}")

    p_hi = max(fn.sl.p, fn.sr.p, 2.0 * p_lo)
    if p_hi <= p_lo:
        p_hi = p_lo + abs(p_lo) + 1.0
    for _ in range(MAX_BRACKET_STEPS):
        f_hi = fn(p_hi)
        if f_hi > 0.0:
            return p_lo, p_hi, f_lo, f_hi
        if f_hi == 0.0:
            return p_hi, p_hi, f_hi, f_hi
        p_lo, f_lo = p_hi, f_hi
        p_hi = p_lo + GROWTH * (p_hi - p_min)
        if not math.isfinite(p_hi):
            break
    raise BracketError("pressure function did not change sign; check inputs are finite")


def bracket_root(left, right, params, mode=ShockMode.RH_CONSISTENT):
    """Return ``(p_lo, p_hi)`` with f_total(p_lo) < 0 < f_total(p_hi)."""
    lo, hi, _, _ = _bracket(_PressureFunction(left, right, params, mode))
    return lo, hi


def _velocity_scale(fn, left, right):
    return max(abs(left.v), abs(right.v), fn.sl.sound, fn.sr.sound)


def _find_root(fn, left, right, tol_rel, max_iter, newton=True):
    lo, hi, f_lo, _ = _bracket(fn)
    if lo == hi:
        return lo, f_lo, 0
    f_tol = 1e-10 * _velocity_scale(fn, left, right)
    x = 0.5 * (lo + hi)
    fx = fn(x)
    for it in range(1, max_iter + 1):
        if fx < 0.0:
            lo = x
        elif fx > 0.0:
            hi = x
        else:
            return x, fx, it
        if abs(fx) <= f_tol or hi - lo <= tol_rel * max(abs(x), 1.0):
            return x, fx, it

        x_new = None
        if newton:
            h = min(1e-7 * max(abs(x), 1.0), 0.5 * (x - fn.p_min))
            d = (fn(x + h) - fn(x - h)) / (2.0 * h)
            if d > 0.0 and math.isfinite(d):
                cand = x - fx / d
                if lo < cand < hi:
                    x_new = cand
        if x_new is not None:
            f_new = fn(x_new)
            if abs(f_new) >= abs(fx):
                x_new = None
        if x_new is None:
            x_new = 0.5 * (lo + hi)
            f_new = fn(x_new)
        elif abs(x_new - x) <= 0.5 * tol_rel * max(abs(x_new), 1.0):
            # Newton has stalled inside the tolerance; probe across the root
            # to collapse the bracket
            step = tol_rel * max(abs(x_new), 1.0)
            probe = x_new + step if f_new < 0.0 else x_new - step
            if lo < probe < hi:
                f_probe = fn(probe)
                if (f_probe > 0.0) != (f_new > 0.0):
                    if f_new < 0.0:
                        lo, hi = x_new, probe
                    else:
                        lo, hi = probe, x_new
        x, fx = x_new, f_new
    raise SolverError(
        f"no convergence after {max_iter} iterations",
        {"p": x, "f": fx, "bracket": (lo, hi)},
    )


def solve_star(left, right, params, mode=ShockMode.RH_CONSISTENT, tol_rel=1e-12,
               max_iter=200, newton=True):
    """
    Solve for the star pressure and velocity and classify both outer waves.

    Safeguarded Newton (central-difference derivative) inside a bracket, with
    a bisection step whenever Newton leaves the bracket or fails to reduce
    |f|. ``newton=False`` gives plain bisection.
    """
    fn = _PressureFunction(left, right, params, mode)
    p_star, f_res, iters = _find_root(fn, left, right, tol_rel, max_iter, newton)

    f_l = f_from_side_data(p_star, fn.sl, fn.mode)
    f_r = f_from_side_data(p_star, fn.sr, fn.mode)
    v_star = 0.5 * (left.v + right.v) + 0.5 * (f_r - f_l)

    rho_l = star_densities(p_star, left, params)
    rho_r = star_densities(p_star, right, params)
    star_l = RiemannState(left.chi, rho_l, v_star)
    star_r = RiemannState(right.chi, rho_r, v_star)

    waves = []
    for side, state, star, sd in ((LEFT, left, star_l, fn.sl), (RIGHT, right, star_r, fn.sr)):
        if abs(p_star - sd.p) <= 10.0 * tol_rel * max(abs(p_star), 1.0):
            waves.append(zero_strength(v_star, sd, side))
        elif p_star > sd.p:
            s, _ = shock_speed(state, star, v_star, side)
            waves.append(WaveDescriptor(SHOCK, s, s))
        else:
            head, tail = rarefaction_speeds(state, star, v_star, side, params)
            waves.append(WaveDescriptor(RAREFACTION, head, tail))

    return StarSolution(
        p_star=p_star, v_star=v_star, left_wave=waves[0], right_wave=waves[1],
        rho_star_left=rho_l, rho_star_right=rho_r, mode=fn.mode,
        iterations=iters, f_residual=f_res,
    )
