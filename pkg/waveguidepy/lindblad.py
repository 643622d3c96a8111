"""Brute-force master-equation integration on the truncated Fock space.

This is the independent check for every closed form in waveguidepy. The
generator, in units of J, is

    d rho / d tau = -i [a^+b + b^+a, rho]
                    + (gamma/J) sum_{c=a,b} (2 c rho c^+ - c^+c rho - rho c^+c)

so a single photon survives with probability exp(-2 gamma t). It is
integrated with fixed-step classical RK4 on the vectorized density matrix,
and every run is repeated with half the step as a convergence check.

Squeezed inputs are built in the Fock basis with a cutoff chosen so that the
neglected population stays below 1e-10.
"""

import math
import logging
import functools
from dataclasses import dataclass

import numpy as np
from scipy import linalg, sparse, special

from .core import AccuracyError, DomainError, PreconditionError, TruncationError
from .fock import (ModeCutoff, PureState, DensityOperator, basis_index,
                   coupler_unitary, evolve_density_unitary)
from .gaussian import CovarianceMatrix


logger = logging.getLogger(__name__)

# allowed neglected population of a truncated squeezed state
TAIL_TOLERANCE = 1e-10

# first moments of covariance_from_density inputs must vanish to this level
MOMENT_TOLERANCE = 1e-8


@dataclass(frozen=True)
class IntegratorConfig:
    """Settings of the fixed-step RK4 integrator

    Parameters
    ----------
    step : float or None
        tau step; None selects min(1e-3, 1e-2/(1 + gamma/J))
    trace_tolerance : float
        bound on the trace error and on the trace distance between the runs
        at step and step/2
    check_convergence : bool
        repeat the run with half the step and compare
    """
    step: float = None
    trace_tolerance: float = 1e-8
    check_convergence: bool = True
    order: int = 4

    def __post_init__(self):
        if self.step is not None and not self.step > 0:
            raise DomainError(f'integrator step must be > 0, got {self.step}')
        if not self.trace_tolerance > 0:
            raise DomainError(f'trace_tolerance must be > 0, got {self.trace_tolerance}')
        if self.order != 4:
            raise DomainError('only the classical 4th-order scheme is available')

    def resolve_step(self, loss_ratio):
        if self.step is not None:
            return float(self.step)
        return min(1e-3, 1e-2 / (1 + loss_ratio))


def _check_loss(loss_ratio):
    if not loss_ratio >= 0:
        raise DomainError(f'loss ratio must be >= 0, got {loss_ratio}')


@functools.lru_cache(maxsize=None)
def _sparse_modes(n_max):
    levels = n_max + 1
    low = sparse.diags(np.sqrt(np.arange(1, levels)), 1, format='csr')
    eye = sparse.identity(levels, format='csr')
    a = sparse.kron(low, eye, format='csr').astype(complex)
    b = sparse.kron(eye, low, format='csr').astype(complex)
    return a, b


@functools.lru_cache(maxsize=None)
def _number_sum(n_max):
    """(N_i + N_j) for every matrix element, N the total photon number"""
    levels = n_max + 1
    n_a, n_b = np.divmod(np.arange(levels**2), levels)
    total = (n_a + n_b).astype(float)
    out = total[:, None] + total[None, :]
    out.setflags(write=False)
    return out


def liouvillian_rhs(rho, loss_ratio):
    """d rho / d tau for the lossy coupler

    Returns
    -------
    array
        complex matrix of the same dimension as rho
    """
    _check_loss(loss_ratio)
    n_max = rho.cutoff.n_max
    a, b = _sparse_modes(n_max)
    H = (a.conj().T @ b + b.conj().T @ a).tocsr()
    m = rho.matrix
    # rho and H are Hermitian: rho H = (H rho)^+ and c rho c^+ = c (c rho)^+
    Hm = H @ m
    out = -1j * (Hm - Hm.conj().T)
    if loss_ratio > 0:
        jump = np.zeros_like(m)
        for c in (a, b):
            cm = c @ m
            jump += c @ cm.conj().T
        out += loss_ratio * (2*jump - _number_sum(n_max) * m)
    return out


@functools.lru_cache(maxsize=8)
def liouvillian(n_max, loss_ratio):
    """Sparse superoperator acting on rho.ravel() (row-major vectorization)

    vec(A rho B) = (A kron B^T) vec(rho).
    """
    _check_loss(loss_ratio)
    a, b = _sparse_modes(n_max)
    dim = (n_max + 1)**2
    eye = sparse.identity(dim, format='csr', dtype=complex)
    H = (a.conj().T @ b + b.conj().T @ a).tocsr()
    L = -1j * (sparse.kron(H, eye) - sparse.kron(eye, H.T))
    if loss_ratio > 0:
        for c in (a, b):
            L = L + 2*loss_ratio * sparse.kron(c, c.conj())
        number = sparse.diags(_number_sum(n_max).ravel())
        L = L - loss_ratio * number
    return L.tocsr()


def _rk4_segment(L, vec, dim, tau_span, step):
    """Advance vec by tau_span with n = ceil(span/step) equal RK4 steps"""
    nsteps = max(1, int(math.ceil(tau_span / step - 1e-12)))
    h = tau_span / nsteps
    for _ in range(nsteps):
        k1 = L @ vec
        k2 = L @ (vec + 0.5*h*k1)
        k3 = L @ (vec + 0.5*h*k2)
        k4 = L @ (vec + h*k3)
        vec = vec + (h/6.0) * (k1 + 2*k2 + 2*k3 + k4)
        m = vec.reshape(dim, dim)
        vec = (0.5 * (m + m.conj().T)).ravel()
    return vec, nsteps


def _run(rho0, taus, loss_ratio, step):
    dim = rho0.cutoff.dim
    L = liouvillian(rho0.cutoff.n_max, float(loss_ratio))
    vec = np.array(rho0.matrix).ravel()
    out, t, total = [], 0.0, 0
    for tau in taus:
        if tau > t:
            vec, nsteps = _rk4_segment(L, vec, dim, tau - t, step)
            total += nsteps
            t = tau
        out.append(vec.reshape(dim, dim).copy())
    logger.debug(f'rk4: {total} steps of ~{step:.3g} to tau={t:.6g} (dim={dim})')
    return out


def _check_initial(rho0, loss_ratio):
    _check_loss(loss_ratio)
    if abs(rho0.trace - 1) > 1e-6:
        raise PreconditionError(f'initial density operator has trace {rho0.trace:.12g}')
    if rho0.hermiticity_error() > 1e-10:
        raise PreconditionError('initial density operator is not Hermitian')


def integrate_trajectory(rho0, taus, loss_ratio, config=None):
    """Integrate once along an increasing tau grid starting at tau = 0

    Every grid point is checked against a run with half the step (trace
    distance below config.trace_tolerance), for trace preservation and for
    positivity (eigenvalues >= -10*trace_tolerance).

    Returns
    -------
    list of DensityOperator, one per tau
    """
    config = IntegratorConfig() if config is None else config
    _check_initial(rho0, loss_ratio)
    taus = np.asarray(taus, dtype=float)
    if taus.size and (taus[0] < 0 or np.any(np.diff(taus) < 0)):
        raise DomainError('tau grid must be non-negative and non-decreasing')

    step = config.resolve_step(loss_ratio)
    coarse = _run(rho0, taus, loss_ratio, step)
    fine = _run(rho0, taus, loss_ratio, step/2) if config.check_convergence else coarse

    tol = config.trace_tolerance
    result = []
    for tau, m_coarse, m_fine in zip(taus, coarse, fine):
        if config.check_convergence:
            dist = _trace_distance_matrix(m_coarse, m_fine)
            if dist >= tol:
                raise AccuracyError(f'step halving changed the state at tau={tau:.6g} by {dist:.3e} '
                                    f'in trace distance (tolerance {tol:.1e}); reduce the step')
        rho = DensityOperator(m_fine, rho0.cutoff)
        if abs(rho.trace - rho0.trace) > tol:
            raise AccuracyError(f'trace drifted to {rho.trace:.12g} at tau={tau:.6g}')
        min_eig = float(np.min(rho.eigenvalues()))
        if min_eig < -10*tol:
            raise AccuracyError(f'negative eigenvalue {min_eig:.3e} at tau={tau:.6g}')
        result.append(rho)
    return result


def integrate_master_equation(rho0, tau_end, loss_ratio, config=None):
    """Integrate the lossy-coupler master equation from 0 to tau_end"""
    if not tau_end >= 0:
        raise DomainError(f'tau_end must be >= 0, got {tau_end}')
    if tau_end == 0:
        _check_initial(rho0, loss_ratio)
        return rho0
    return integrate_trajectory(rho0, [tau_end], loss_ratio, config)[0]


def propagate(rho0, taus, loss_ratio, config=None):
    """Density operators along taus: exact unitary for zero loss, RK4 otherwise"""
    if loss_ratio == 0:
        _check_initial(rho0, loss_ratio)
        return [evolve_density_unitary(rho0, tau) for tau in taus]
    return integrate_trajectory(rho0, taus, loss_ratio, config)


# ---------------------------------------------------------------------- #
# squeezed inputs

def _single_mode_amplitudes(r, levels):
    """Squeezed vacuum on one mode, amplitudes of |0>..|levels-1>

    c_2m = (tanh r)^m sqrt((2m)!) / (2^m m!) / sqrt(cosh r); odd levels vanish.
    The sign is the one for which <x^2> = exp(2r)/2.
    """
    amp = np.zeros(levels)
    amp[0] = 1.0 / np.sqrt(np.cosh(r))
    t = np.tanh(r)
    if t == 0:
        return amp
    m = np.arange(1, (levels - 1)//2 + 1)
    logmag = (m*np.log(abs(t)) + 0.5*special.gammaln(2*m + 1) - m*np.log(2)
              - special.gammaln(m + 1) - 0.5*np.log(np.cosh(r)))
    amp[2*m] = np.sign(t)**m * np.exp(logmag)
    return amp


def _single_mode_tail(r, n_max):
    """Population of one squeezed mode above n_max"""
    t2 = np.tanh(r)**2
    if t2 == 0:
        return 0.0
    m0 = n_max//2 + 1
    # terms fall off like t2^m
    mlast = m0 + max(200, int(80 / -np.log(t2)))
    m = np.arange(m0, mlast)
    logp = (m*np.log(t2) + special.gammaln(2*m + 1) - 2*m*np.log(2)
            - 2*special.gammaln(m + 1) - np.log(np.cosh(r)))
    return float(np.sum(np.exp(logp)))


def squeezed_tail(r, n_max, kind):
    """Neglected population of the two-mode squeezed input truncated at n_max

    kind 'single' is the product of two single-mode squeezed vacua, 'two' the
    two-mode squeezed vacuum.
    """
    if kind == 'single':
        keep = 1 - _single_mode_tail(r, n_max)
        return float(1 - keep*keep)
    if kind == 'two':
        return float(np.tanh(r)**(2*(n_max + 1)))
    raise DomainError(f'kind must be "single" or "two", got {kind!r}')


def required_cutoff(r, kind, tolerance=TAIL_TOLERANCE):
    """Smallest n_max whose neglected population is below tolerance"""
    n_max = 1
    while squeezed_tail(r, n_max, kind) >= tolerance:
        n_max += 1
    return n_max


def default_cutoff(r, kind, tolerance=TAIL_TOLERANCE):
    """ceil(8 + 20 sinh^2 r), raised until the tail criterion holds"""
    n_max = int(math.ceil(8 + 20*np.sinh(r)**2))
    while squeezed_tail(r, n_max, kind) >= tolerance:
        n_max += 1
    return n_max


def _squeezed_cutoff(r, cutoff, kind):
    if cutoff is None:
        return ModeCutoff(default_cutoff(r, kind))
    cutoff = cutoff if isinstance(cutoff, ModeCutoff) else ModeCutoff(cutoff)
    tail = squeezed_tail(r, cutoff.n_max, kind)
    if tail >= TAIL_TOLERANCE:
        need = required_cutoff(r, kind)
        raise TruncationError(f'n_max={cutoff.n_max} drops a population of {tail:.2e} for r={r}; '
                              f'n_max >= {need} is required', required_n_max=need)
    return cutoff


def single_mode_squeezed_fock(r, cutoff=None):
    """Both guides fed with single-mode squeezed vacuum of the same r

    Returns the (renormalized) truncated product state.
    """
    cutoff = _squeezed_cutoff(r, cutoff, 'single')
    one = _single_mode_amplitudes(r, cutoff.levels)
    amp = np.kron(one, one)
    return PureState(amp / np.linalg.norm(amp), cutoff)


def two_mode_squeezed_fock(r, cutoff=None):
    """exp[r(a^+b^+ - ab)]|0,0> = (1/cosh r) sum_n (tanh r)^n |n,n>, truncated"""
    cutoff = _squeezed_cutoff(r, cutoff, 'two')
    amp = np.zeros(cutoff.dim, dtype=complex)
    n = np.arange(cutoff.levels)
    idx = [basis_index(int(k), int(k), cutoff) for k in n]
    amp[idx] = np.tanh(r)**n / np.cosh(r)
    return PureState(amp / np.linalg.norm(amp), cutoff)


# ---------------------------------------------------------------------- #
# state diagnostics

@functools.lru_cache(maxsize=None)
def _quadratures(n_max):
    a, b = _sparse_modes(n_max)
    quads = []
    for c in (a, b):
        cd = c.conj().T
        quads.append(((c + cd) / np.sqrt(2)).tocsr())
        quads.append(((c - cd) / (1j*np.sqrt(2))).tocsr())
    return tuple(quads)


def covariance_from_density(rho):
    """Symmetrized second moments <{u, v}>/2 in the (x1, p1, x2, p2) ordering

    All inputs of this package are zero-mean; nonzero first moments raise
    PreconditionError.
    """
    a, b = _sparse_modes(rho.cutoff.n_max)
    for name, c in [('a', a), ('b', b)]:
        first = abs(rho.expectation(c))
        if first > MOMENT_TOLERANCE:
            raise PreconditionError(f'<{name}> = {first:.3e} is not zero')

    quads = _quadratures(rho.cutoff.n_max)
    sigma = np.zeros((4, 4))
    for i, u in enumerate(quads):
        for j in range(i, 4):
            v = quads[j]
            sigma[i, j] = sigma[j, i] = rho.expectation(0.5*(u @ v + v @ u)).real
    return CovarianceMatrix(sigma)


def _trace_distance_matrix(m1, m2):
    return 0.5 * float(np.sum(np.abs(linalg.eigvalsh(m1 - m2))))


def trace_distance(rho, sigma):
    """(1/2) ||rho - sigma||_1"""
    if rho.cutoff != sigma.cutoff:
        rho, sigma = _common_cutoff(rho, sigma)
    return _trace_distance_matrix(rho.matrix, sigma.matrix)


def _embed(rho, cutoff):
    """Place rho in the larger basis of cutoff"""
    n_a, n_b = np.divmod(np.arange(rho.cutoff.dim), rho.cutoff.levels)
    idx = n_a * cutoff.levels + n_b
    out = np.zeros((cutoff.dim, cutoff.dim), dtype=complex)
    out[np.ix_(idx, idx)] = rho.matrix
    return DensityOperator(out, cutoff)


def _common_cutoff(rho, sigma):
    cutoff = max(rho.cutoff, sigma.cutoff, key=lambda c: c.n_max)
    return _embed(rho, cutoff), _embed(sigma, cutoff)


def purity(rho):
    """Tr rho^2"""
    return float(np.real(np.vdot(rho.matrix, rho.matrix)))


def mean_photon_number(rho):
    """Tr[rho (a^+a + b^+b)]"""
    n_a, n_b = np.divmod(np.arange(rho.cutoff.dim), rho.cutoff.levels)
    return float(np.real(np.sum((n_a + n_b) * np.diag(rho.matrix))))
