"""Truncated two-mode Fock space.

States and operators live on the basis |n_a, n_b>, 0 <= n_a, n_b <= n_max,
laid out row-major in (n_a, n_b): index = n_a*(n_max+1) + n_b. Every module
of waveguidepy shares this layout.

Time is the dimensionless tau = J*t. The free term hbar*omega*(a^+a + b^+b)
of the coupler Hamiltonian commutes with the coupling and is dropped (rotating
frame); free_phase puts it back when needed.
"""

import logging
import functools
from dataclasses import dataclass

import numpy as np
from scipy import linalg, sparse

from .core import DomainError, PreconditionError, StructuralError


logger = logging.getLogger(__name__)

# allowed deviation of |psi| from 1 before evolving
NORM_TOLERANCE = 1e-6


@dataclass(frozen=True)
class ModeCutoff:
    """Maximum photon number per mode"""
    n_max: int

    def __post_init__(self):
        if isinstance(self.n_max, bool) or not isinstance(self.n_max, (int, np.integer)):
            raise DomainError(f'n_max must be an integer, got {self.n_max!r}')
        if self.n_max < 1:
            raise DomainError(f'n_max must be >= 1, got {self.n_max}')

    @property
    def levels(self):
        """Number of Fock levels per mode"""
        return self.n_max + 1

    @property
    def dim(self):
        """Dimension of the two-mode basis"""
        return self.levels ** 2

    def check_vector(self, vector):
        vector = np.asarray(vector)
        if vector.shape != (self.dim,):
            raise StructuralError(f'expected a vector of length {self.dim} for n_max={self.n_max}, '
                                  f'got shape {vector.shape}')

    def check_matrix(self, matrix):
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise StructuralError(f'expected a square matrix, got shape {matrix.shape}')
        if matrix.shape[0] != self.dim:
            raise StructuralError(f'matrix of dimension {matrix.shape[0]} does not match '
                                  f'the basis of n_max={self.n_max} (dimension {self.dim})')


def _as_cutoff(cutoff):
    return cutoff if isinstance(cutoff, ModeCutoff) else ModeCutoff(cutoff)


def _readonly(array):
    array.setflags(write=False)
    return array


class PureState:
    """Two-mode pure state: complex amplitudes over the shared basis

    Parameters
    ----------
    amplitudes : array
        complex vector of length (n_max+1)**2, row-major in (n_a, n_b)
    cutoff : ModeCutoff or int
    """

    def __init__(self, amplitudes, cutoff):
        self.cutoff = _as_cutoff(cutoff)
        amplitudes = np.array(amplitudes, dtype=complex)
        self.cutoff.check_vector(amplitudes)
        self.amplitudes = _readonly(amplitudes)

    def __repr__(self):
        return f'PureState(n_max={self.cutoff.n_max}, norm={self.norm:.12g})'

    @property
    def norm(self):
        return float(np.linalg.norm(self.amplitudes))

    def amplitude(self, n_a, n_b):
        """Amplitude <n_a, n_b|psi>"""
        return self.amplitudes[basis_index(n_a, n_b, self.cutoff)]

    def amplitude_grid(self):
        """Amplitudes as a (n_max+1, n_max+1) array indexed [n_a, n_b]"""
        return self.amplitudes.reshape(self.cutoff.levels, self.cutoff.levels)

    def number_populations(self):
        """Probability in each total photon number sector N = n_a + n_b"""
        total = _total_number(self.cutoff.n_max)
        return np.bincount(total, weights=np.abs(self.amplitudes)**2,
                           minlength=2*self.cutoff.n_max + 1)

    def density(self):
        """|psi><psi| as a DensityOperator"""
        return DensityOperator(np.outer(self.amplitudes, self.amplitudes.conj()), self.cutoff)

    def check_normalized(self, tolerance=NORM_TOLERANCE):
        if abs(self.norm - 1) > tolerance:
            raise PreconditionError(f'state is not normalized: |psi| = {self.norm:.12g}')


class DensityOperator:
    """Two-mode density matrix over the shared basis

    Parameters
    ----------
    matrix : array
        complex square matrix of dimension (n_max+1)**2
    cutoff : ModeCutoff or int
    """

    def __init__(self, matrix, cutoff):
        self.cutoff = _as_cutoff(cutoff)
        matrix = np.array(matrix, dtype=complex)
        self.cutoff.check_matrix(matrix)
        self.matrix = _readonly(matrix)

    def __repr__(self):
        return f'DensityOperator(n_max={self.cutoff.n_max}, trace={self.trace:.12g})'

    @property
    def trace(self):
        return float(np.trace(self.matrix).real)

    def hermiticity_error(self):
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def eigenvalues(self):
        return linalg.eigvalsh(self.matrix)

    def check_trace(self, tolerance=1e-6):
        if abs(self.trace - 1) > tolerance:
            raise PreconditionError(f'density operator trace {self.trace:.12g} deviates from 1 '
                                    f'by more than {tolerance}')

    def expectation(self, operator):
        """Tr[rho O]; O may be dense or sparse"""
        if sparse.issparse(operator):
            return complex((operator.multiply(self.matrix.T)).sum())
        return complex(np.einsum('ij,ji->', self.matrix, np.asarray(operator)))


class ModeOperator:
    """Annihilation operator of one mode, extended by the identity on the other"""

    def __init__(self, matrix, mode):
        self.matrix = _readonly(np.array(matrix, dtype=complex))
        self.mode = mode

    def __repr__(self):
        return f'ModeOperator(mode={self.mode}, dim={self.matrix.shape[0]})'

    @property
    def dag(self):
        """Creation operator"""
        return self.matrix.conj().T

    def apply(self, state):
        """Apply the operator to a PureState (result is not normalized)"""
        return PureState(self.matrix @ state.amplitudes, state.cutoff)

    def to_sparse(self):
        return sparse.csr_matrix(self.matrix)


def basis_index(n_a, n_b, cutoff):
    """Index of |n_a, n_b> in the row-major basis layout"""
    cutoff = _as_cutoff(cutoff)
    for name, n in [('n_a', n_a), ('n_b', n_b)]:
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise DomainError(f'{name} must be an integer, got {n!r}')
        if n < 0 or n > cutoff.n_max:
            raise DomainError(f'{name}={n} is outside [0, {cutoff.n_max}]')
    return int(n_a) * cutoff.levels + int(n_b)


@functools.lru_cache(maxsize=None)
def _labels(n_max):
    levels = n_max + 1
    n_a, n_b = np.divmod(np.arange(levels**2), levels)
    return _readonly(n_a), _readonly(n_b)


def basis_labels(cutoff):
    """Arrays (n_a, n_b) of photon numbers for every basis index"""
    return _labels(_as_cutoff(cutoff).n_max)


def _total_number(n_max):
    n_a, n_b = _labels(n_max)
    return n_a + n_b


def _single_mode_lowering(levels):
    return np.diag(np.sqrt(np.arange(1, levels)), k=1)


def mode_operator(mode, cutoff):
    """Annihilation operator a (mode='a') or b (mode='b') on the two-mode basis

    <n-1|a|n> = sqrt(n) on its own mode, identity on the other.
    """
    cutoff = _as_cutoff(cutoff)
    low = _single_mode_lowering(cutoff.levels)
    eye = np.eye(cutoff.levels)
    if mode == 'a':
        matrix = np.kron(low, eye)
    elif mode == 'b':
        matrix = np.kron(eye, low)
    else:
        raise DomainError(f'mode must be "a" or "b", got {mode!r}')
    return ModeOperator(matrix, mode)


@functools.lru_cache(maxsize=None)
def _hamiltonian(n_max):
    a = mode_operator('a', n_max).matrix
    b = mode_operator('b', n_max).matrix
    hop = a.conj().T @ b
    return _readonly((hop + hop.conj().T).real.copy())


def coupler_hamiltonian(cutoff):
    """Coupler Hamiltonian a^+b + b^+a in units of hbar*J (real symmetric)"""
    return _hamiltonian(_as_cutoff(cutoff).n_max).copy()


def number_operator(cutoff):
    """Total photon number a^+a + b^+b (diagonal)"""
    cutoff = _as_cutoff(cutoff)
    return np.diag(_total_number(cutoff.n_max).astype(float))


@functools.lru_cache(maxsize=None)
def _number_blocks(n_max):
    total = _total_number(n_max)
    H = _hamiltonian(n_max)
    blocks = []
    for N in range(2*n_max + 1):
        idx = _readonly(np.flatnonzero(total == N))
        blocks.append((idx, _readonly(H[np.ix_(idx, idx)].copy())))
    return tuple(blocks)


def _check_tau(tau):
    if not np.isfinite(tau):
        raise DomainError(f'tau must be finite, got {tau}')


def coupler_unitary(cutoff, tau):
    """Full propagator exp(-i tau (a^+b + b^+a)), built block by block"""
    cutoff = _as_cutoff(cutoff)
    _check_tau(tau)
    U = np.zeros((cutoff.dim, cutoff.dim), dtype=complex)
    for idx, block in _number_blocks(cutoff.n_max):
        U[np.ix_(idx, idx)] = linalg.expm(-1j * tau * block)
    return U


def evolve_unitary(state, tau):
    """Evolve a PureState through the lossless coupler for a time tau = J*t

    The propagator is exponentiated per total photon number sector, so the
    photon number distribution is preserved exactly.
    """
    _check_tau(tau)
    state.check_normalized()
    out = np.zeros_like(state.amplitudes)
    for idx, block in _number_blocks(state.cutoff.n_max):
        amp = state.amplitudes[idx]
        if not np.any(amp):
            continue
        out[idx] = linalg.expm(-1j * tau * block) @ amp
    return PureState(out, state.cutoff)


def evolve_density_unitary(rho, tau):
    """U(tau) rho U(tau)^+ for the lossless coupler"""
    U = coupler_unitary(rho.cutoff, tau)
    return DensityOperator(U @ rho.matrix @ U.conj().T, rho.cutoff)


def heisenberg_transform(tau):
    """Mode transform of the coupler: (a(t), b(t)) = M(tau) (a(0), b(0))"""
    _check_tau(tau)
    c, s = np.cos(tau), np.sin(tau)
    return np.array([[c, -1j*s], [-1j*s, c]])


def fock_state(n_a, n_b, cutoff):
    """The basis state |n_a, n_b>"""
    cutoff = _as_cutoff(cutoff)
    amp = np.zeros(cutoff.dim, dtype=complex)
    amp[basis_index(n_a, n_b, cutoff)] = 1
    return PureState(amp, cutoff)


def free_phase(state, omega_t):
    """Restore the rotating-frame phase exp(-i omega t (n_a + n_b))"""
    total = _total_number(state.cutoff.n_max)
    return PureState(state.amplitudes * np.exp(-1j * omega_t * total), state.cutoff)


def local_phase_rotation(cutoff, phi_a, phi_b):
    """Diagonal unitary exp(-i(phi_a n_a + phi_b n_b)) acting on each mode separately"""
    n_a, n_b = basis_labels(cutoff)
    return np.diag(np.exp(-1j * (phi_a * n_a + phi_b * n_b)))
