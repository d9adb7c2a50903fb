"""Primitive state (chi, rho_1..rho_N, v) on one side of a Riemann problem."""
import math
from dataclasses import dataclass

from . import eos
from .errors import DomainError


@dataclass(frozen=True)
class RiemannState:
    chi: float
    rho: tuple
    v: float

    def __post_init__(self):
        object.__setattr__(self, "chi", float(self.chi))
        object.__setattr__(self, "rho", tuple(float(r) for r in self.rho))
        object.__setattr__(self, "v", float(self.v))
        if not (math.isfinite(self.chi) and math.isfinite(self.v)):
            raise DomainError("chi and v must be finite")
        if not self.rho:
            raise DomainError("at least one partial density is required")
        eos._check_positive(self.rho)

    @property
    def n(self):
        return len(self.rho)

    @property
    def density(self):
        return math.fsum(self.rho)

    @property
    def concentrations(self):
        r1 = self.rho[0]
        return (1.0,) + tuple(r / r1 for r in self.rho[1:])

    def pressure(self, params):
        return eos.mixture_pressure(params, self.chi, self.rho)

    def sound_speed(self, params):
        return eos.sound_speed(params, self.chi, self.rho)

    def as_vector(self):
        """Primitive vector ordered (chi, rho_1, ..., rho_N, v)."""
        return (self.chi,) + self.rho + (self.v,)
