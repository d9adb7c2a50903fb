"""
Independent checks of Riemann solutions.

The oracle solver never touches the wave-curve functions f_left / f_right:
shock states come from solving the Rankine-Hugoniot conditions directly with
bisection, rarefaction states from the Riemann invariant v +- A ln(rho_1).
"""
import math
from dataclasses import dataclass

from . import eos
from .errors import BracketError, ContractError, SolverError
from .star_solver import StarSolution
from .state import RiemannState
from .wave_curves import (
    LEFT, RAREFACTION, RIGHT, SHOCK, ShockMode, WaveDescriptor, f_side, star_densities,
)


@dataclass(frozen=True)
class RhResidual:
    mass: tuple
    momentum: float
    mass_normalized: tuple
    momentum_normalized: float

    @property
    def max_mass(self):
        return max(abs(x) for x in self.mass_normalized)

    @property
    def max_normalized(self):
        return max(self.max_mass, abs(self.momentum_normalized))


def rh_residual(left_state, right_state, s, params):
    """
    Jump residuals of the partial-mass and momentum balances across a
    discontinuity moving at speed ``s``; left_state is the ' state and
    right_state the '' state.
    """
    p1 = left_state.pressure(params)
    p2 = right_state.pressure(params)
    v1, v2 = left_state.v, right_state.v
    mass, mass_n = [], []
    for r1, r2 in zip(left_state.rho, right_state.rho):
        terms = (r2 * v2, r1 * v1, s * r2, s * r1)
        res = (r2 * v2 - r1 * v1) - s * (r2 - r1)
        mass.append(res)
        mass_n.append(res / max(max(abs(t) for t in terms), 1.0))
    m1 = sum(r * v1 * v1 for r in left_state.rho)
    m2 = sum(r * v2 * v2 for r in right_state.rho)
    q1 = sum(r * v1 for r in left_state.rho)
    q2 = sum(r * v2 for r in right_state.rho)
    mom = (m2 - m1) + (p2 - p1) - s * (q2 - q1)
    scale = max(abs(m1), abs(m2), abs(p1), abs(p2), abs(s * q1), abs(s * q2), 1.0)
    return RhResidual(tuple(mass), mom, tuple(mass_n), mom / scale)


@dataclass(frozen=True)
class ContactReport:
    chi_jump: float
    pressure_jump: float
    velocity_jump: float
    # |s - v| on either side, s being the contact speed v*
    speed_residual: float
    pressure_scale: float
    velocity_scale: float

    def ok(self, rel_tol=1e-9):
        return (abs(self.pressure_jump) <= rel_tol * self.pressure_scale
                and abs(self.velocity_jump) <= rel_tol * self.velocity_scale
                and self.speed_residual <= rel_tol * self.velocity_scale)


def contact_check(solution, left, right, params):
    """Check that p and v are continuous across the contact and that it moves with v."""
    star_l = solution.star_state(LEFT, left, right)
    star_r = solution.star_state(RIGHT, left, right)
    p_l = star_l.pressure(params)
    p_r = star_r.pressure(params)
    # velocities reconstructed independently from each side
    v_l = left.v - f_side(solution.p_star, left, LEFT, params, solution.mode)
    v_r = right.v + f_side(solution.p_star, right, RIGHT, params, solution.mode)
    s = solution.v_star
    speed_res = 0.0
    if left.chi != right.chi:
        speed_res = max(abs(s - v_l), abs(s - v_r))
    return ContactReport(
        chi_jump=right.chi - left.chi,
        pressure_jump=p_r - p_l,
        velocity_jump=v_r - v_l,
        speed_residual=speed_res,
        pressure_scale=max(abs(p_l), abs(p_r), 1.0),
        velocity_scale=max(abs(left.v), abs(right.v), star_l.sound_speed(params),
                           star_r.sound_speed(params), 1.0),
    )


def _bisect(fn, lo, hi, f_lo, max_iter=400):
    """Bisection to floating-point exhaustion; fn(lo) and fn(hi) differ in sign."""
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0.0) == (f_lo < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise SolverError("bisection did not terminate", {"bracket": (lo, hi)})


def _shock_star_velocity(state, rho_star, side, params):
    """
    Solve the momentum jump condition for v*, with S eliminated through the
    component-1 mass jump. Returns ``(v*, S)``.
    """
    r1 = state.rho[0]
    rs1 = rho_star[0]
    v = state.v

    def speed(vs):
        # rho_1 (v - S) = rho_1* (v* - S)
        return (rs1 * vs - r1 * v) / (rs1 - r1)

    def residual(vs):
        star = RiemannState(state.chi, rho_star, vs)
        s = speed(vs)
        if side == LEFT:
            return rh_residual(state, star, s, params).momentum
        return rh_residual(star, state, s, params).momentum

    # compressive branch: v* < v behind a left shock, v* > v behind a right one
    sign = -1.0 if side == LEFT else 1.0
    f0 = residual(v)
    step = max(abs(v), state.sound_speed(params), 1.0)
    for _ in range(200):
        far = v + sign * step
        f_far = residual(far)
        if (f_far < 0.0) != (f0 < 0.0):
            break
        step *= 2.0
    else:
        raise BracketError("no Rankine-Hugoniot root on the compressive branch")
    lo, hi = (far, v) if side == LEFT else (v, far)
    f_lo = f_far if side == LEFT else f0
    vs = _bisect(residual, lo, hi, f_lo)
    return vs, speed(vs)


def _rarefaction_star_velocity(state, rho_star, side, params):
    a = eos.sound_speed(params, state.chi, state.rho)
    # v + A ln(rho_1) (left) / v - A ln(rho_1) (right) is invariant in the fan
    d = a * (math.log(rho_star[0]) - math.log(state.rho[0]))
    return state.v - d if side == LEFT else state.v + d


def _side_star(p, state, side, params, p_side):
    rho_star = star_densities(p, state, params)
    if p > p_side and rho_star[0] != state.rho[0]:
        vs, s = _shock_star_velocity(state, rho_star, side, params)
        return vs, rho_star, s
    return _rarefaction_star_velocity(state, rho_star, side, params), rho_star, None


def oracle_star(left, right, params, tol=1e-13):
    """
    Star solution from the jump conditions themselves (nested bisection).

    Solves v*_left(p) = v*_right(p), where each side's v* comes from the
    Rankine-Hugoniot conditions (shock, p > p_side) or the fan invariant
    (rarefaction). Slow by design.
    """
    p_l = eos.mixture_pressure(params, left.chi, left.rho)
    p_r = eos.mixture_pressure(params, right.chi, right.rho)
    a0_l, _ = eos.pressure_coefficients(params, left.chi, left.concentrations)
    a0_r, _ = eos.pressure_coefficients(params, right.chi, right.concentrations)
    p_min = max(a0_l, a0_r)
    calls = [0]

    def gap(p):
        calls[0] += 1
        vl = _side_star(p, left, LEFT, params, p_l)[0]
        vr = _side_star(p, right, RIGHT, params, p_r)[0]
        return vl - vr

    eps = 1e-9 * max(abs(p_min), 1.0)
    for _ in range(200):
        lo = p_min + eps
        if lo > p_min and gap(lo) > 0.0:
            break
        eps *= 0.5
    else:
        raise BracketError("oracle: no lower pressure bracket")
    hi = max(p_l, p_r, lo + abs(lo) + 1.0)
    for _ in range(200):
        g_hi = gap(hi)
        if g_hi <= 0.0:
            break
        lo = hi
        hi = hi + 8.0 * (hi - p_min)
    else:
        raise BracketError("oracle: no upper pressure bracket")
    if g_hi == 0.0:
        lo = hi

    g_lo = gap(lo)
    while g_lo != 0.0 and hi - lo > tol * max(abs(lo), abs(hi), 1.0):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g_mid = gap(mid)
        if g_mid == 0.0:
            lo = hi = mid
            break
        if (g_mid > 0.0) == (g_lo > 0.0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    p_star = 0.5 * (lo + hi)

    vl, rho_l, s_l = _side_star(p_star, left, LEFT, params, p_l)
    vr, rho_r, s_r = _side_star(p_star, right, RIGHT, params, p_r)
    v_star = 0.5 * (vl + vr)

    def descriptor(state, s, side):
        if s is not None:
            return WaveDescriptor(SHOCK, s, s)
        a = eos.sound_speed(params, state.chi, state.rho)
        if side == LEFT:
            return WaveDescriptor(RAREFACTION, state.v - a, v_star - a)
        return WaveDescriptor(RAREFACTION, state.v + a, v_star + a)

    return StarSolution(
        p_star=p_star, v_star=v_star,
        left_wave=descriptor(left, s_l, LEFT), right_wave=descriptor(right, s_r, RIGHT),
        rho_star_left=rho_l, rho_star_right=rho_r, mode=ShockMode.RH_CONSISTENT,
        iterations=calls[0], f_residual=vl - vr,
    )


def isothermal_reference(left, right, a):
    """
    Classical single-phase isothermal Euler solution with p = a^2 rho.

    Only valid for one component with both states in the same pure phase.
    Returns ``(p*, v*)``.
    """
    if left.n != 1 or right.n != 1:
        raise ContractError("isothermal reference needs a single component")
    if left.chi != right.chi or left.chi not in (-1.0, 1.0):
        raise ContractError("isothermal reference needs chi_left = chi_right = +-1")
    if not a > 0.0:
        raise ContractError("sound speed must be positive")
    a2 = a * a

    def wave(p, rho):
        pk = a2 * rho
        if p <= pk:
            return a * math.log(p / pk)
        rs = p / a2
        return math.sqrt((p - pk) * (rs - rho) / (rho * rs))

    rl, rr = left.rho[0], right.rho[0]

    def f(p):
        return wave(p, rl) + wave(p, rr) + (right.v - left.v)

    lo = min(rl, rr) * a2
    while f(lo) > 0.0:
        lo *= 0.5
    hi = max(rl, rr) * a2
    while f(hi) < 0.0:
        hi *= 2.0
    p_star = _bisect(f, lo, hi, f(lo))
    v_star = 0.5 * (left.v + right.v) + 0.5 * (wave(p_star, rr) - wave(p_star, rl))
    return p_star, v_star
