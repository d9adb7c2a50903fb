"""
Eigenstructure of the quasilinear system in primitive variables.

Variables are ordered u = (chi, rho_1, ..., rho_N, v). The Jacobian has v on
the diagonal, rho_alpha in the last column of the density rows and
(B, A_1^2, ..., A_N^2) / rho in the bottom row, where A_alpha^2 = dp/drho_alpha
and B = dp/dchi.
"""
from dataclasses import dataclass

import numpy as np

from . import eos

GENUINELY_NONLINEAR = "genuinely-nonlinear"
LINEARLY_DEGENERATE = "linearly-degenerate"


@dataclass(frozen=True)
class EigenSystem:
    eigenvalues: np.ndarray
    # column j is the right eigenvector of eigenvalues[j]
    eigenvectors: np.ndarray
    degenerate_branch: bool


@dataclass(frozen=True)
class FieldInfo:
    index: int
    eigenvalue: float
    kind: str
    # finite-difference estimate of grad(lambda) . k
    nonlinearity: float


def jacobian_primitive(params, state):
    n = state.n
    rho = state.density
    a2 = eos.squared_stiffness(params, state.chi)
    b = eos.dp_dchi(params, state.chi, state.rho)
    jac = np.zeros((n + 2, n + 2))
    np.fill_diagonal(jac, state.v)
    jac[1:n + 1, n + 1] = state.rho
    jac[n + 1, 0] = b / rho
    jac[n + 1, 1:n + 1] = np.asarray(a2) / rho
    return jac


def _pressure_scale(params, state):
    a0, a1 = eos.pressure_coefficients(params, state.chi, state.concentrations)
    return max(abs(a0) + a1 * state.rho[0], 1.0)


def eigen_system(params, state, b_zero_tol=1e-12):
    """
    Eigenvalues v - A, v (N-fold), v + A with an explicit eigenvector basis.

    The contact eigenvectors (-A_j^2, B e_j) collapse as B -> 0, so when
    ``|B| <= b_zero_tol * pressure_scale`` the alternative basis
    e_chi, (0, -A_j^2 e_1 + A_1^2 e_j, 0) is used instead.
    """
    n = state.n
    a = state.sound_speed(params)
    a2 = eos.squared_stiffness(params, state.chi)
    b = eos.dp_dchi(params, state.chi, state.rho)
    rho = np.asarray(state.rho)

    lam = np.empty(n + 2)
    lam[0] = state.v - a
    lam[1:n + 1] = state.v
    lam[n + 1] = state.v + a

    k = np.zeros((n + 2, n + 2))
    k[1:n + 1, 0] = -rho
    k[n + 1, 0] = a
    k[1:n + 1, n + 1] = rho
    k[n + 1, n + 1] = a

    degenerate = abs(b) <= b_zero_tol * _pressure_scale(params, state)
    if degenerate:
        k[0, 1] = 1.0
        for j in range(2, n + 1):
            k[1, j] = -a2[j - 1]
            k[j, j] = a2[0]
    else:
        for j in range(1, n + 1):
            k[0, j] = -a2[j - 1]
            k[j, j] = b
    return EigenSystem(lam, k, degenerate)


def _eigenvalue_funcs(params, n):
    def sound(u):
        return eos.sound_speed(params, u[0], u[1:n + 1])

    def outer(sign):
        return lambda u: u[n + 1] + sign * sound(u)

    funcs = [outer(-1.0)]
    funcs += [lambda u: u[n + 1]] * n
    funcs.append(outer(1.0))
    return funcs


def _gradient(func, u, rel_step):
    grad = np.empty(len(u))
    for i in range(len(u)):
        h = rel_step * max(abs(u[i]), 1.0)
        up = np.array(u, dtype=float)
        um = np.array(u, dtype=float)
        up[i] += h
        um[i] -= h
        grad[i] = (func(up) - func(um)) / (2.0 * h)
    return grad


def classify_fields(params, state, rel_step=1e-6):
    """Label each characteristic field by a central-difference grad(lambda).k."""
    es = eigen_system(params, state)
    u = np.asarray(state.as_vector())
    a = state.sound_speed(params)
    out = []
    for j, func in enumerate(_eigenvalue_funcs(params, state.n)):
        k = es.eigenvectors[:, j]
        g = float(_gradient(func, u, rel_step) @ k)
        kind = GENUINELY_NONLINEAR if abs(g) > 1e-8 * a else LINEARLY_DEGENERATE
        out.append(FieldInfo(j, float(es.eigenvalues[j]), kind, g))
    return out


def eigen_residuals(params, state, system=None):
    """Relative residuals ||J k - lambda k|| / (||J|| ||k||) per field."""
    jac = jacobian_primitive(params, state)
    es = system or eigen_system(params, state)
    jn = np.linalg.norm(jac, 2)
    res = []
    for j in range(state.n + 2):
        k = es.eigenvectors[:, j]
        r = jac @ k - es.eigenvalues[j] * k
        res.append(float(np.linalg.norm(r) / (jn * np.linalg.norm(k))))
    return res

