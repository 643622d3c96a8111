"""Closed-form evolutions through the coupler.

Lossless two-photon inputs |1,1> and |2,0>, N-photon NOON inputs, and the
exact density matrix of |1,1> in lossy guides. Amplitudes are labelled on
|k, N-k> (k photons in guide a). The loss ratio is gamma/J, so gamma*t is
loss_ratio*tau.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import special

from .core import DomainError, PreconditionError
from .fock import (ModeCutoff, PureState, DensityOperator, basis_index,
                   coupler_unitary, fock_state)


logger = logging.getLogger(__name__)

# tau at which |1,1> reaches the maximally entangled three-term state
ONE_ONE_PEAK_TAU = 0.5 * np.arctan(np.sqrt(2))


@dataclass(frozen=True)
class ThreeCoefficients:
    """Amplitudes of |2,0>, |1,1> and |0,2>"""
    alpha: complex
    beta: complex
    delta: complex

    def __post_init__(self):
        norm2 = abs(self.alpha)**2 + abs(self.beta)**2 + abs(self.delta)**2
        if not abs(norm2 - 1) <= 1e-10:
            raise PreconditionError(f'two-photon amplitudes are not normalized: {norm2:.12g}')

    def as_array(self):
        """Amplitudes ordered on |0,2>, |1,1>, |2,0>, i.e. by k in |k, 2-k>"""
        return np.array([self.delta, self.beta, self.alpha], dtype=complex)

    def as_state(self, cutoff=2):
        cutoff = cutoff if isinstance(cutoff, ModeCutoff) else ModeCutoff(cutoff)
        amp = np.zeros(cutoff.dim, dtype=complex)
        amp[basis_index(2, 0, cutoff)] = self.alpha
        amp[basis_index(1, 1, cutoff)] = self.beta
        amp[basis_index(0, 2, cutoff)] = self.delta
        return PureState(amp, cutoff)


@dataclass(frozen=True, eq=False)
class NoonCoefficients:
    """Amplitudes beta[k] of |k, N-k> for an evolved NOON input"""
    N: int
    beta: np.ndarray

    def __post_init__(self):
        beta = np.array(self.beta, dtype=complex)
        if beta.shape != (self.N + 1,):
            raise DomainError(f'expected {self.N + 1} NOON amplitudes, got shape {beta.shape}')
        norm2 = float(np.sum(np.abs(beta)**2))
        if not abs(norm2 - 1) <= 1e-10:
            raise PreconditionError(f'NOON amplitudes are not normalized: {norm2:.12g}')
        beta.setflags(write=False)
        object.__setattr__(self, 'beta', beta)

    def as_state(self, cutoff=None):
        cutoff = ModeCutoff(self.N) if cutoff is None else cutoff
        cutoff = cutoff if isinstance(cutoff, ModeCutoff) else ModeCutoff(cutoff)
        amp = np.zeros(cutoff.dim, dtype=complex)
        for k in range(self.N + 1):
            amp[basis_index(k, self.N - k, cutoff)] = self.beta[k]
        return PureState(amp, cutoff)


def _check_photons(N):
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)):
        raise DomainError(f'photon number must be an integer, got {N!r}')
    if N < 1:
        raise DomainError(f'photon number must be >= 1, got {N}')


def one_one_coefficients(tau):
    """|1,1> input: amplitudes after a time tau"""
    s2, c2 = np.sin(2*tau), np.cos(2*tau)
    return ThreeCoefficients(-1j*s2/np.sqrt(2), complex(c2), -1j*s2/np.sqrt(2))


def two_zero_coefficients(tau):
    """|2,0> input: amplitudes after a time tau"""
    c, s = np.cos(tau), np.sin(tau)
    return ThreeCoefficients(complex(c*c), -np.sqrt(2)*1j*c*s, complex(-s*s))


def _single_branch(N, tau):
    """Amplitudes on |k, N-k> of the evolved |N, 0>

    Magnitudes are built in log space so large N does not overflow the binomial.
    """
    k = np.arange(N + 1)
    c, s = np.cos(tau), np.sin(tau)
    log_mag = (0.5 * (special.gammaln(N + 1) - special.gammaln(k + 1) - special.gammaln(N - k + 1))
               + special.xlogy(k, abs(c)) + special.xlogy(N - k, abs(s)))
    sign = np.sign(c)**k * np.sign(s)**(N - k)
    return sign * np.exp(log_mag) * np.array([1, -1j, -1, 1j])[(N - k) % 4]


def noon_coefficients(N, tau):
    """NOON input (|N,0> + |0,N>)/sqrt(2): amplitudes after a time tau

    The state is assembled from the two evolved branches, |N,0> -> sum_k
    alpha_k |k,N-k> and |0,N> -> sum_k alpha_k |N-k,k>, so the amplitude of
    |k,N-k> is (alpha_k + alpha_{N-k})/sqrt(2). The branches stay orthogonal,
    which keeps the result normalized for every N (including the central
    term for even N).
    """
    _check_photons(N)
    alpha = _single_branch(N, tau)
    return NoonCoefficients(int(N), (alpha + alpha[::-1]) / np.sqrt(2))


def noon_state(N, cutoff=None):
    """(|N,0> + |0,N>)/sqrt(2)"""
    _check_photons(N)
    cutoff = ModeCutoff(int(N)) if cutoff is None else cutoff
    amp = (fock_state(N, 0, cutoff).amplitudes + fock_state(0, N, cutoff).amplitudes) / np.sqrt(2)
    return PureState(amp, cutoff)


def noon_evolved_state(N, tau, cutoff=None):
    return noon_coefficients(N, tau).as_state(cutoff)


def max_entangled_state():
    """|1,1> evolved to its negativity peak: equal-weight |2,0>, |1,1>, |0,2>"""
    return one_one_coefficients(ONE_ONE_PEAK_TAU)


def lossy_one_one_density(tau, loss_ratio):
    """Exact density matrix of the |1,1> input in identically lossy guides

    In the frame rotating with the coupler, loss acts on each photon alone:
    with x = exp(-2 gamma t),

        rho~ = (1-x)^2 |0,0><0,0| + x(1-x) (|1,0><1,0| + |0,1><0,1|) + x^2 |1,1><1,1|

    and rho = U(tau) rho~ U(tau)^+ with U the lossless coupler propagator.
    """
    if loss_ratio < 0:
        raise DomainError(f'loss ratio must be >= 0, got {loss_ratio}')
    if tau < 0:
        raise DomainError(f'tau must be >= 0, got {tau}')

    cutoff = ModeCutoff(2)
    x = np.exp(-2 * loss_ratio * tau)
    weights = {(0, 0): (1 - x)**2, (1, 0): x*(1 - x), (0, 1): x*(1 - x), (1, 1): x*x}
    rho_rot = np.zeros((cutoff.dim, cutoff.dim), dtype=complex)
    for (n_a, n_b), w in weights.items():
        i = basis_index(n_a, n_b, cutoff)
        rho_rot[i, i] = w

    U = coupler_unitary(cutoff, tau)
    return DensityOperator(U @ rho_rot @ U.conj().T, cutoff)
