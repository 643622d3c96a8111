"""Logarithmic negativity of two-mode states in the Fock basis.

E_N = log(||rho^T||_1) = log(1 + 2 N(rho)), where rho^T is the partial
transpose on mode b and N(rho) the magnitude of the sum of its negative
eigenvalues. Fock-basis results default to log base 2; the gaussian module
works in nats. Use to_base to move between the two.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .core import DomainError, PreconditionError, StructuralError
from .fock import DensityOperator
from .evolution import one_one_coefficients, noon_coefficients


logger = logging.getLogger(__name__)

# ln 2: E_N in nats = LN2 * E_N in bits
LN2 = float(np.log(2))

# partial-transpose eigenvalues closer to zero than this are zero
EIGENVALUE_CLAMP = 1e-12


@dataclass(frozen=True)
class NegativityResult:
    """Log negativity E_N, negativity N_rho and the log base used"""
    E_N: float
    N_rho: float
    base: object = 2

    def __post_init__(self):
        if self.E_N < 0 or self.N_rho < 0:
            raise PreconditionError(f'negativity must be non-negative: E_N={self.E_N}, N={self.N_rho}')

    def in_base(self, base):
        return NegativityResult(to_base(self.E_N, self.base, base), self.N_rho, _check_base(base))


def _check_base(base):
    if base in (2, '2'):
        return 2
    if base == 'e' or base == np.e:
        return 'e'
    raise DomainError(f'log base must be 2 or e, got {base!r}')


def log_base(x, base=2):
    """log of x in base 2 or e"""
    return float(np.log2(x)) if _check_base(base) == 2 else float(np.log(x))


def to_base(value, from_base, to_base):
    """Convert a log negativity between bits and nats"""
    from_base, to_base = _check_base(from_base), _check_base(to_base)
    if from_base == to_base:
        return value
    return value / LN2 if to_base == 2 else value * LN2


def _as_matrix(rho):
    if isinstance(rho, DensityOperator):
        return rho.matrix, rho.cutoff.levels
    matrix = np.asarray(rho)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise StructuralError(f'expected a square matrix, got shape {matrix.shape}')
    levels = int(round(np.sqrt(matrix.shape[0])))
    if levels**2 != matrix.shape[0]:
        raise StructuralError(f'dimension {matrix.shape[0]} is not (n_max+1)**2 for any cutoff')
    return matrix, levels


def partial_transpose(rho):
    """Transpose on mode b: <n_a,n_b|rho^T|m_a,m_b> = <n_a,m_b|rho|m_a,n_b>

    rho may be a DensityOperator or a square array on the shared basis.
    """
    matrix, d = _as_matrix(rho)
    pt = matrix.reshape(d, d, d, d).transpose(0, 3, 2, 1)
    return pt.reshape(d*d, d*d)


def log_negativity_density(rho, base=2):
    """Log negativity of a density matrix through its partial-transpose spectrum

    Returns
    -------
    NegativityResult
    """
    matrix, _ = _as_matrix(rho)
    trace = np.trace(matrix).real
    if abs(trace - 1) > 1e-6:
        raise PreconditionError(f'density matrix trace {trace:.12g} deviates from 1 by more than 1e-6')

    eig = linalg.eigvalsh(partial_transpose(matrix))
    eig[np.abs(eig) < EIGENVALUE_CLAMP] = 0.0
    N_rho = float(-np.sum(eig[eig < 0]))
    return NegativityResult(log_base(1 + 2*N_rho, base), N_rho, _check_base(base))


def log_negativity_pure_bipartite(coeffs, base=2):
    """Log negativity of sum_k c_k |k, N-k>: log (sum_k |c_k|)^2

    The c_k are Schmidt coefficients of the state, so no diagonalization
    is needed.
    """
    mags = np.abs(np.asarray(coeffs, dtype=complex))
    norm2 = float(np.sum(mags**2))
    if abs(norm2 - 1) > 1e-10:
        raise PreconditionError(f'coefficients are not normalized: sum |c_k|^2 = {norm2:.12g}')
    return max(0.0, log_base(np.sum(mags)**2, base))


def one_one_logneg_analytic(tau):
    """E_N (bits) of the evolved |1,1> input

    Pairwise products enter as magnitudes, |a b| + |a d| + |d b|, which is
    the Schmidt-coefficient result for this state.
    """
    c = one_one_coefficients(tau)
    a, b, d = abs(c.alpha), abs(c.beta), abs(c.delta)
    return float(np.log2(1 + 2*(a*b + a*d + d*b)))


def noon_logneg_analytic(N, tau):
    """E_N (bits) of the evolved NOON input

    sum over k != m of |beta_k||beta_m| is taken as (sum |beta_k|)^2 - sum |beta_k|^2.
    """
    mags = np.abs(noon_coefficients(N, tau).beta)
    cross = np.sum(mags)**2 - np.sum(mags**2)
    return float(np.log2(1 + max(cross, 0.0)))
