"""
Exact Riemann solver for the 1-d isothermal two-phase, N-component system
with a phase-field mixture equation of state.
"""
from .eos import EosParameters, mixture_pressure, sound_speed
from .errors import (
    BracketError, ConfigError, ContractError, DegenerateWaveError, DomainError,
    MixRiemannError, PositivityError, SolverError,
)
from .sampler import Profile, profile, sample
from .star_solver import StarSolution, bracket_root, solve_star
from .state import RiemannState
from .verifier import contact_check, isothermal_reference, oracle_star, rh_residual
from .wave_curves import ShockMode, f_side, f_total

__version__ = "0.1.0"
