"""
Phase-field mixture equation of state.

Each component obeys an affine (stiffened-gas) isothermal law in each phase,

    p_k,alpha(rho_alpha) = a_k,alpha**2 * rho_alpha + d_k,alpha,   k in {L, V},

and the phases are blended by the interpolation function h(chi) plus a
double-well penalty W(chi):

    p = -W(chi) + h(chi) * sum_alpha p_L,alpha + (1 - h(chi)) * sum_alpha p_V,alpha

chi = -1 is pure vapor, chi = +1 is pure liquid. All quantities are SI.
"""
import math
from dataclasses import dataclass, field

from .errors import ContractError, DomainError, PositivityError

LIQUID = "liquid"
VAPOR = "vapor"


def _check_finite(*values):
    for x in values:
        if not math.isfinite(x):
            raise DomainError(f"non-finite input: {x!r}")


def _check_positive(rho):
    for i, r in enumerate(rho):
        if not math.isfinite(r):
            raise DomainError(f"non-finite density rho[{i}] = {r!r}")
        if r <= 0.0:
            raise PositivityError(f"density rho[{i}] = {r!r} must be > 0")


@dataclass(frozen=True)
class EosParameters:
    """
    Per-component sound speeds and pressure offsets for both phases.

    Parameters
    ----------
    a_v, a_l : sequence of float
        Isothermal sound speeds (m/s) of each component in the vapor and
        liquid phase.
    d_l : sequence of float
        Liquid partial-pressure offsets (Pa).
    d_v : sequence of float, optional
        Vapor offsets (Pa); defaults to zeros (ideal-gas vapor).
    w0 : float
        Double-well height (Pa).
    """

    a_v: tuple
    a_l: tuple
    d_l: tuple
    d_v: tuple = None
    w0: float = 0.0
    # cached sums of squares, filled in __post_init__
    a2_v: tuple = field(init=False, repr=False, compare=False)
    a2_l: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.a_v)
        d_v = (0.0,) * n if self.d_v is None else self.d_v
        object.__setattr__(self, "a_v", tuple(float(x) for x in self.a_v))
        object.__setattr__(self, "a_l", tuple(float(x) for x in self.a_l))
        object.__setattr__(self, "d_l", tuple(float(x) for x in self.d_l))
        object.__setattr__(self, "d_v", tuple(float(x) for x in d_v))
        object.__setattr__(self, "w0", float(self.w0))
        if n < 1:
            raise ContractError("at least one component is required")
        for name in ("a_l", "d_l", "d_v"):
            if len(getattr(self, name)) != n:
                raise ContractError(
                    f"{name} has {len(getattr(self, name))} entries, expected {n}")
        _check_finite(*self.a_v, *self.a_l, *self.d_l, *self.d_v, self.w0)
        if min(self.a_v) <= 0.0 or min(self.a_l) <= 0.0:
            raise ContractError("sound speeds must be > 0")
        if self.w0 < 0.0:
            raise ContractError("w0 must be >= 0")
        object.__setattr__(self, "a2_v", tuple(a * a for a in self.a_v))
        object.__setattr__(self, "a2_l", tuple(a * a for a in self.a_l))

    @property
    def n(self):
        return len(self.a_v)


def interp_h(chi):
    """Phase interpolation: 0 for chi <= -1, 1 for chi >= 1, C1 cubic between."""
    _check_finite(chi)
    if chi <= -1.0:
        return 0.0
    if chi >= 1.0:
        return 1.0
    return (0.5 - 0.25 * chi) * (chi + 1.0) ** 2


def interp_h_prime(chi):
    _check_finite(chi)
    if abs(chi) >= 1.0:
        return 0.0
    return 0.75 * (1.0 - chi * chi)


def double_well(chi, w0):
    """Return ``(W, W')`` for W(chi) = w0 (chi - 1)^2 (chi + 1)^2."""
    _check_finite(chi, w0)
    if w0 < 0.0:
        raise DomainError("w0 must be >= 0")
    s = chi * chi - 1.0
    return w0 * s * s, 4.0 * w0 * chi * s


def partial_pressure(params, phase, alpha, rho_alpha):
    """Affine partial pressure of component ``alpha`` (0-based) in ``phase``."""
    _check_positive((rho_alpha,))
    if phase == LIQUID:
        return params.a2_l[alpha] * rho_alpha + params.d_l[alpha]
    if phase == VAPOR:
        return params.a2_v[alpha] * rho_alpha + params.d_v[alpha]
    raise ContractError(f"unknown phase {phase!r}")


def mixture_pressure(params, chi, rho):
    _check_positive(rho)
    h = interp_h(chi)
    w, _ = double_well(chi, params.w0)
    p_l = sum(a2 * r + d for a2, r, d in zip(params.a2_l, rho, params.d_l))
    p_v = sum(a2 * r + d for a2, r, d in zip(params.a2_v, rho, params.d_v))
    return -w + h * p_l + (1.0 - h) * p_v


def pressure_coefficients(params, chi, c):
    """
    Affine coefficients of the pressure along a ray of fixed concentrations.

    With ``c[alpha] = rho[alpha] / rho[0]`` held fixed, the pressure is
    ``A0 + A1 * rho[0]``. Returns ``(A0, A1)``.
    """
    if c[0] != 1.0:
        raise ContractError(f"c[0] must be exactly 1, got {c[0]!r}")
    for x in c:
        if not x > 0.0:
            raise PositivityError(f"concentration {x!r} must be > 0")
    h = interp_h(chi)
    w, _ = double_well(chi, params.w0)
    a0 = -w + h * sum(params.d_l) + (1.0 - h) * sum(params.d_v)
    a1 = (h * sum(a2 * ci for a2, ci in zip(params.a2_l, c))
          + (1.0 - h) * sum(a2 * ci for a2, ci in zip(params.a2_v, c)))
    return a0, a1


def squared_stiffness(params, chi):
    """dp/drho_alpha for every component; independent of the densities."""
    h = interp_h(chi)
    return tuple(h * al + (1.0 - h) * av for al, av in zip(params.a2_l, params.a2_v))


def dp_dchi(params, chi, rho):
    _check_positive(rho)
    hp = interp_h_prime(chi)
    _, wp = double_well(chi, params.w0)
    p_l = sum(a2 * r + d for a2, r, d in zip(params.a2_l, rho, params.d_l))
    p_v = sum(a2 * r + d for a2, r, d in zip(params.a2_v, rho, params.d_v))
    return -wp + hp * (p_l - p_v)


def sound_speed(params, chi, rho):
    """
    Mixture sound speed A with A^2 = sum(A_alpha^2 rho_alpha) / sum(rho_alpha).

    A depends only on chi and the concentrations, so it does not change
    through a rarefaction fan.
    """
    _check_positive(rho)
    a2 = squared_stiffness(params, chi)
    return math.sqrt(sum(s * r for s, r in zip(a2, rho)) / sum(rho))
