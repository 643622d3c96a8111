"""Gaussian entanglement of squeezed light in the coupler.

Covariance matrices use the quadratures x = (a + a^+)/sqrt(2),
p = (a - a^+)/(i sqrt(2)) in the ordering (x1, p1, x2, p2), so the vacuum
is diag(1/2, 1/2, 1/2, 1/2) and a state is entangled when the smaller
symplectic eigenvalue of its partial transpose drops below 1/2.

Loss multiplies every second moment by x = exp(-2 gamma t) and refills the
vacuum: sigma(t) = x sigma_lossless(t) + (1 - x)/2 * I.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .core import DomainError, NumericalDomainError, PreconditionError, StructuralError
from .negativity import log_base


logger = logging.getLogger(__name__)

FORMULA_MODES = ('consistent', 'paper-exact')
SCENARIOS = ('sep-lossless', 'ent-lossless', 'sep-lossy', 'ent-lossy')

# symplectic form for (x1, p1, x2, p2)
OMEGA = np.kron(np.eye(2), np.array([[0., 1.], [-1., 0.]]))


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """4x4 real symmetric covariance matrix, blocks [[alpha, mu], [mu^T, beta]]"""
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (4, 4):
            raise StructuralError(f'covariance matrix must be 4x4, got shape {matrix.shape}')
        if np.max(np.abs(matrix - matrix.T)) > 1e-12:
            raise PreconditionError('covariance matrix is not symmetric')
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def vacuum(cls):
        return cls(0.5 * np.eye(4))

    @classmethod
    def from_blocks(cls, alpha, beta, mu):
        alpha, beta, mu = [np.asarray(m, dtype=float) for m in (alpha, beta, mu)]
        return cls(np.block([[alpha, mu], [mu.T, beta]]))

    @property
    def alpha(self):
        return self.matrix[:2, :2]

    @property
    def beta(self):
        return self.matrix[2:, 2:]

    @property
    def mu(self):
        return self.matrix[:2, 2:]

    def attenuate(self, x):
        """Loss with survival x: x*sigma + (1-x)/2"""
        return CovarianceMatrix(x * self.matrix + 0.5 * (1 - x) * np.eye(4))


@dataclass(frozen=True)
class SymplecticPair:
    nu_plus: float
    nu_minus: float

    def __post_init__(self):
        if not self.nu_plus >= self.nu_minus > 0:
            raise NumericalDomainError(f'symplectic eigenvalues must satisfy nu+ >= nu- > 0, '
                                       f'got ({self.nu_plus}, {self.nu_minus})')

    @property
    def nu_min(self):
        return self.nu_minus


@dataclass(frozen=True)
class GaussianScenarioParams:
    """Squeezing r, time tau = J*t, loss ratio gamma/J and the lossy formula variant"""
    r: float
    tau: float
    loss_ratio: float = 0.0
    formula_mode: str = 'consistent'

    def __post_init__(self):
        if not np.isfinite(self.r) or not np.isfinite(self.tau):
            raise DomainError(f'r and tau must be finite, got r={self.r}, tau={self.tau}')
        if self.loss_ratio < 0:
            raise DomainError(f'loss ratio must be >= 0, got {self.loss_ratio}')
        if not self.formula_mode in FORMULA_MODES:
            raise DomainError(f'formula_mode must be one of {FORMULA_MODES}, got {self.formula_mode!r}')

    @property
    def survival(self):
        """exp(-2 gamma t)"""
        return float(np.exp(-2 * self.loss_ratio * self.tau))


def _williamson_pair(matrix):
    """Symplectic eigenvalues of a 4x4 covariance matrix

    the moduli of the spectrum of i*Omega*sigma, each of which appears twice
    """
    eig = np.sort(np.abs(linalg.eigvals(1j * OMEGA @ matrix)))
    if not eig[0] > 0:
        raise NumericalDomainError('covariance matrix is singular')
    return SymplecticPair(float(eig[3]), float(eig[0]))


def symplectic_eigenvalues(sigma):
    """Symplectic eigenvalues of sigma itself"""
    return _williamson_pair(sigma.matrix)


def is_physical(sigma, tolerance=1e-10):
    """sigma > 0 and both symplectic eigenvalues >= 1/2 (uncertainty principle)"""
    if np.min(linalg.eigvalsh(sigma.matrix)) <= 0:
        return False
    try:
        return symplectic_eigenvalues(sigma).nu_min >= 0.5 - tolerance
    except NumericalDomainError:
        return False


def ppt_symplectic_eigenvalues(sigma):
    """Symplectic eigenvalues of the partially transposed state

    Transposition flips p2, sigma~ = L sigma L with L = diag(1, 1, 1, -1). An
    unphysical sigma raises NumericalDomainError.
    """
    if not is_physical(sigma, tolerance=1e-8):
        raise NumericalDomainError('covariance matrix violates the uncertainty principle')
    flip = np.array([1., 1., 1., -1.])
    return _williamson_pair(flip[:, None] * sigma.matrix * flip[None, :])


def log_negativity_gaussian(sigma, base='e'):
    """E_N = max(0, -log(2 nu~_min)); nats by default"""
    nu = ppt_symplectic_eigenvalues(sigma).nu_min
    return max(0.0, -log_base(2*nu, base))


def cov_separable_squeezed(r, tau):
    """Two equally squeezed single-mode vacua sent through the coupler

    c = (cosh 2r + sinh 2r cos 2tau)/2 is evaluated as
    (e^{2r} cos^2 tau + e^{-2r} sin^2 tau)/2, d with cos and sin swapped.
    """
    c, d = _separable_diagonal(r, tau)
    e = -0.5 * np.sinh(2*r) * np.sin(2*tau)
    return _separable_form(c, d, e)


def _separable_diagonal(r, tau):
    up, down = np.exp(2*r), np.exp(-2*r)
    cos2, sin2 = np.cos(tau)**2, np.sin(tau)**2
    return 0.5*(up*cos2 + down*sin2), 0.5*(up*sin2 + down*cos2)


def cov_entangled_squeezed(r, tau):
    """Two-mode squeezed vacuum exp[r(a^+b^+ - ab)]|00> sent through the coupler"""
    f = 0.5 * np.cosh(2*r)
    g = -0.5 * np.sinh(2*r) * np.sin(2*tau)
    h = 0.5 * np.sinh(2*r) * np.cos(2*tau)
    return _entangled_form(f, g, h)


def cov_separable_squeezed_lossy(r, tau, loss_ratio, formula_mode='consistent'):
    """Separable squeezed input in lossy guides

    'consistent' gives c' = 1/2 + x sinh^2 r + x/2 sinh 2r cos 2tau (and d'
    with the opposite sign), which reduces to the lossless matrix at x = 1.
    'paper-exact' keeps the published variant with x sinh^2(r)/2 on the
    diagonal instead; it is unphysical for strong squeezing at short times.
    """
    p = GaussianScenarioParams(r, tau, loss_ratio, formula_mode)
    x = p.survival
    sh2 = np.sinh(2*r)
    e = -0.5 * x * sh2 * np.sin(2*tau)
    if formula_mode == 'consistent':
        c, d = _separable_diagonal(r, tau)
        return _separable_form(0.5*(1 - x) + x*c, 0.5*(1 - x) + x*d, e)
    c = 0.5 * (1 + x*np.sinh(r)**2 + x*sh2*np.cos(2*tau))
    d = 0.5 * (1 + x*np.sinh(r)**2 - x*sh2*np.cos(2*tau))
    return _separable_form(c, d, e)


def cov_entangled_squeezed_lossy(r, tau, loss_ratio):
    """Two-mode squeezed input in lossy guides"""
    x = GaussianScenarioParams(r, tau, loss_ratio).survival
    f = 0.5 + x*np.sinh(r)**2
    g = -0.5 * x * np.sinh(2*r) * np.sin(2*tau)
    h = 0.5 * x * np.sinh(2*r) * np.cos(2*tau)
    return _entangled_form(f, g, h)


def _separable_form(c, d, e):
    return CovarianceMatrix.from_blocks(np.diag([c, d]), np.diag([c, d]),
                                        np.array([[0, e], [e, 0]]))


def _entangled_form(f, g, h):
    ab = np.array([[f, g], [g, f]])
    return CovarianceMatrix.from_blocks(ab, ab, np.diag([h, -h]))


def _check_scenario(scenario):
    if not scenario in SCENARIOS:
        raise DomainError(f'unknown Gaussian scenario {scenario!r}; expected one of {SCENARIOS}')


def scenario_covariance(scenario, params):
    """Covariance matrix of one of the four squeezed-light scenarios"""
    _check_scenario(scenario)
    r, tau = params.r, params.tau
    if scenario == 'sep-lossless':
        return cov_separable_squeezed(r, tau)
    if scenario == 'ent-lossless':
        return cov_entangled_squeezed(r, tau)
    if scenario == 'sep-lossy':
        return cov_separable_squeezed_lossy(r, tau, params.loss_ratio, params.formula_mode)
    return cov_entangled_squeezed_lossy(r, tau, params.loss_ratio)


def _sorted_pair(root, offset):
    return SymplecticPair(float(root + abs(offset)), float(root - abs(offset)))


def closed_form_nu(scenario, params):
    """Per-scenario closed forms for the partial-transpose symplectic eigenvalues

    sep: sqrt(c d) +- e; ent: sqrt((f+g)(f-g)) +- h; the lossy entangled case
    is written through m+- = 1 - x[1 - (cosh 2r +- sinh 2r sin 2tau)] as
    sqrt(m+ m-)/2 +- h', since f' -+ g' = m+-/2.
    """
    _check_scenario(scenario)
    r, tau = params.r, params.tau
    sh = np.sinh(2*r)
    if scenario == 'sep-lossless' or scenario == 'sep-lossy':
        sigma = scenario_covariance(scenario, params)
        (c, e), d = sigma.matrix[0, [0, 3]], sigma.matrix[1, 1]
        if c*d < 0:
            raise NumericalDomainError(f'c*d = {c*d:.6g} < 0; covariance is unphysical')
        return _sorted_pair(np.sqrt(c*d), e)
    if scenario == 'ent-lossless':
        # (f + g)(f - g) = (1 + sinh^2 2r cos^2 2tau)/4
        h = 0.5*sh*np.cos(2*tau)
        return _sorted_pair(np.sqrt(0.25 + h*h), h)
    x = params.survival
    s, up, down = np.sin(2*tau), np.exp(2*r), np.exp(-2*r)
    # cosh 2r +- sinh 2r sin 2tau
    c_plus = 0.5*(up*(1 + s) + down*(1 - s))
    c_minus = 0.5*(up*(1 - s) + down*(1 + s))
    m_plus = 1 - x + x*c_plus
    m_minus = 1 - x + x*c_minus
    h = 0.5 * x * sh * np.cos(2*tau)
    return _sorted_pair(0.5*np.sqrt(m_plus*m_minus), h)


def squeezed_log_negativity(kind, params, base='e'):
    """E_N of the separable ('sep') or entangled ('ent') squeezed input

    The lossless formulas are used when the loss ratio is zero, except for
    the paper-exact separable variant which differs from them even then.
    """
    if not kind in ('sep', 'ent'):
        raise DomainError(f'kind must be "sep" or "ent", got {kind!r}')
    lossy = params.loss_ratio > 0 or (kind == 'sep' and params.formula_mode == 'paper-exact')
    scenario = f'{kind}-lossy' if lossy else f'{kind}-lossless'
    return log_negativity_gaussian(scenario_covariance(scenario, params), base)
