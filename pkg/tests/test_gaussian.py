
from .context import waveguidepy
from waveguidepy import gaussian
from waveguidepy.gaussian import GaussianScenarioParams

import unittest
import numpy as np


R = 0.9


def _logneg(kind, tau, loss_ratio=0.0, r=R):
    return gaussian.squeezed_log_negativity(kind, GaussianScenarioParams(r, tau, loss_ratio))


class TestCovariance(unittest.TestCase):
    """Covariance matrices and symplectic spectra"""

    def test__cov__vacuum(self):
        vac = gaussian.CovarianceMatrix.vacuum()
        self.assertTrue(gaussian.is_physical(vac))
        nu = gaussian.symplectic_eigenvalues(vac)
        self.assertAlmostEqual(nu.nu_plus, 0.5, places=14)
        self.assertAlmostEqual(nu.nu_minus, 0.5, places=14)
        self.assertEqual(gaussian.log_negativity_gaussian(vac), 0.0)

    def test__cov__structure(self):
        with self.assertRaises(waveguidepy.StructuralError):
            gaussian.CovarianceMatrix(np.eye(3))
        m = 0.5*np.eye(4)
        m[0, 1] = 0.1
        with self.assertRaises(waveguidepy.PreconditionError):
            gaussian.CovarianceMatrix(m)

    def test__cov__blocks(self):
        sigma = gaussian.cov_entangled_squeezed(R, 0.3)
        f = 0.5*np.cosh(2*R)
        self.assertAlmostEqual(sigma.alpha[0, 0], f, places=14)
        self.assertTrue(np.array_equal(sigma.alpha, sigma.beta))
        self.assertAlmostEqual(sigma.mu[0, 0], -sigma.mu[1, 1], places=14)

    def test__cov__separable_start(self):
        sigma = gaussian.cov_separable_squeezed(R, 0.0)
        self.assertAlmostEqual(sigma.matrix[0, 0], 0.5*np.exp(2*R), places=12)
        self.assertAlmostEqual(sigma.matrix[1, 1], 0.5*np.exp(-2*R), places=12)
        self.assertEqual(sigma.matrix[0, 3], 0.0)

    def test__cov__unphysical(self):
        with self.assertRaises(waveguidepy.NumericalDomainError):
            gaussian.ppt_symplectic_eigenvalues(gaussian.CovarianceMatrix(0.2*np.eye(4)))
        with self.assertRaises(waveguidepy.NumericalDomainError):
            gaussian.SymplecticPair(0.3, 0.4)

    def test__cov__attenuate(self):
        sigma = gaussian.cov_separable_squeezed(R, 0.4)
        self.assertTrue(np.allclose(sigma.attenuate(0.0).matrix, 0.5*np.eye(4)))
        self.assertTrue(np.allclose(sigma.attenuate(1.0).matrix, sigma.matrix))

    def test__cov__lossy_is_attenuated(self):
        for tau in np.linspace(0, 3, 13):
            params = GaussianScenarioParams(R, tau, 0.2)
            x = params.survival
            sep = gaussian.cov_separable_squeezed_lossy(R, tau, 0.2)
            ent = gaussian.cov_entangled_squeezed_lossy(R, tau, 0.2)
            self.assertTrue(np.allclose(sep.matrix, gaussian.cov_separable_squeezed(R, tau).attenuate(x).matrix,
                                        atol=1e-13))
            self.assertTrue(np.allclose(ent.matrix, gaussian.cov_entangled_squeezed(R, tau).attenuate(x).matrix,
                                        atol=1e-13))

    def test__cov__no_loss_limit(self):
        for tau in [0.0, 0.5, 2.0]:
            self.assertTrue(np.allclose(gaussian.cov_separable_squeezed_lossy(R, tau, 0.0).matrix,
                                        gaussian.cov_separable_squeezed(R, tau).matrix, atol=1e-14))
            self.assertTrue(np.allclose(gaussian.cov_entangled_squeezed_lossy(R, tau, 0.0).matrix,
                                        gaussian.cov_entangled_squeezed(R, tau).matrix, atol=1e-14))

    def test__cov__paper_exact(self):
        params = GaussianScenarioParams(R, 0.0, 0.1, 'paper-exact')
        with self.assertRaises(waveguidepy.NumericalDomainError):
            gaussian.squeezed_log_negativity('sep', params)
        with self.assertRaises(waveguidepy.NumericalDomainError):
            gaussian.closed_form_nu('sep-lossy', params)
        # strong attenuation brings the printed variant back to a physical state
        late = GaussianScenarioParams(R, 3.0, 0.3, 'paper-exact')
        self.assertGreaterEqual(gaussian.squeezed_log_negativity('sep', late), 0.0)

    def test__cov__paper_exact_no_loss(self):
        # without loss the two variants differ only by sinh^2(r)/2 on the diagonal
        shift = 0.5 * np.sinh(R)**2
        for tau in np.linspace(0, np.pi, 9):
            paper = gaussian.cov_separable_squeezed_lossy(R, tau, 0.0, 'paper-exact').matrix
            consistent = gaussian.cov_separable_squeezed_lossy(R, tau, 0.0).matrix
            self.assertTrue(np.allclose(consistent, gaussian.cov_separable_squeezed(R, tau).matrix,
                                        rtol=0, atol=1e-12))
            self.assertTrue(np.allclose(paper - consistent, -shift * np.eye(4), rtol=0, atol=1e-12))

    def test__cov__strong_squeezing(self):
        # the squeezed quadrature is e^{-2r}/2 and must not cancel to zero
        sigma = gaussian.cov_separable_squeezed(6.0, np.pi/2)
        self.assertAlmostEqual(sigma.matrix[0, 0] / (0.5*np.exp(-12)), 1.0, delta=1e-9)
        self.assertAlmostEqual(sigma.matrix[1, 1] / (0.5*np.exp(12)), 1.0, delta=1e-9)
        self.assertTrue(gaussian.is_physical(sigma))
        self.assertLess(gaussian.log_negativity_gaussian(sigma), 1e-9)
        lossy = gaussian.cov_separable_squeezed_lossy(6.0, np.pi/2, 0.0)
        self.assertTrue(np.allclose(lossy.matrix, sigma.matrix, rtol=1e-12, atol=0))

    def test__cov__params(self):
        with self.assertRaises(waveguidepy.DomainError):
            GaussianScenarioParams(R, 0.1, -0.1)
        with self.assertRaises(waveguidepy.DomainError):
            GaussianScenarioParams(R, 0.1, 0.1, 'printed')
        with self.assertRaises(waveguidepy.DomainError):
            GaussianScenarioParams(np.nan, 0.1)
        with self.assertRaises(waveguidepy.DomainError):
            gaussian.scenario_covariance('sep', GaussianScenarioParams(R, 0.1))
        with self.assertRaises(waveguidepy.DomainError):
            gaussian.squeezed_log_negativity('both', GaussianScenarioParams(R, 0.1))


class TestSqueezedEntanglement(unittest.TestCase):
    """E_N of the squeezed-light scenarios (nats)"""

    def test__squeezed__separable_lossless(self):
        for k in range(4):
            self.assertLess(_logneg('sep', k*np.pi/2), 1e-10)
            self.assertAlmostEqual(_logneg('sep', np.pi/4 + k*np.pi/2), 2*R, delta=1e-10)

    def test__squeezed__separable_lossless_spectrum(self):
        # at tau = k pi/2 the transposed state is a product state, nu~- = 1/2
        for k in range(4):
            params = GaussianScenarioParams(R, k*np.pi/2)
            sigma = gaussian.cov_separable_squeezed(R, k*np.pi/2)
            general = gaussian.ppt_symplectic_eigenvalues(sigma)
            closed = gaussian.closed_form_nu('sep-lossless', params)
            self.assertLess(abs(general.nu_minus - closed.nu_minus), 1e-12)
            self.assertLess(abs(general.nu_plus - closed.nu_plus), 1e-12)
            self.assertAlmostEqual(general.nu_minus, 0.5, delta=1e-12)
            self.assertLess(gaussian.log_negativity_gaussian(sigma), 1e-10)

    def test__squeezed__entangled_lossless(self):
        self.assertAlmostEqual(_logneg('ent', 0.0), 2*R, delta=1e-10)
        for k in range(4):
            self.assertLess(_logneg('ent', np.pi/4 + k*np.pi/2), 1e-10)

    def test__squeezed__phase_relation(self):
        taus = np.linspace(0, np.pi, 401)
        ent = np.array([_logneg('ent', t) for t in taus])
        sep = np.array([_logneg('sep', t + np.pi/4) for t in taus])
        self.assertLess(np.max(np.abs(ent - sep)), 1e-10)

    def test__squeezed__base(self):
        params = GaussianScenarioParams(R, np.pi/4)
        bits = gaussian.squeezed_log_negativity('sep', params, base=2)
        self.assertAlmostEqual(bits, 2*R/np.log(2), places=10)

    def test__squeezed__loss_first_period(self):
        taus = np.linspace(0, np.pi/2, 1001)
        weak = max(_logneg('sep', t, 0.1) for t in taus)
        strong = max(_logneg('sep', t, 0.3) for t in taus)
        self.assertAlmostEqual(weak - strong, 0.4, delta=0.15)

    def test__squeezed__separable_window(self):
        # E_N vanishes on a whole neighbourhood of tau = pi/2 for gamma/J = 0.3
        taus = np.linspace(np.pi/2 - 0.05, np.pi/2 + 0.05, 11)
        for t in taus:
            self.assertEqual(_logneg('sep', t, 0.3), 0.0)

    def test__squeezed__entangled_lossy_peaks(self):
        peaks = [_logneg('ent', k*np.pi/2, 0.1) for k in range(5)]
        self.assertTrue(all(b < a for a, b in zip(peaks, peaks[1:])))

    def test__squeezed__closed_form_examples(self):
        params = GaussianScenarioParams(R, 0.0, 0.0)
        nu = gaussian.closed_form_nu('ent-lossy', params)
        self.assertAlmostEqual(nu.nu_min, 0.5*np.exp(-2*R), places=14)
        params = GaussianScenarioParams(R, np.pi/4)
        closed = gaussian.closed_form_nu('sep-lossless', params)
        general = gaussian.ppt_symplectic_eigenvalues(gaussian.cov_separable_squeezed(R, np.pi/4))
        self.assertLess(abs(closed.nu_minus - general.nu_minus), 1e-12)
        self.assertLess(abs(closed.nu_plus - general.nu_plus), 1e-12)


class TestGaussianProperties(unittest.TestCase):
    """Randomized checks over the four scenarios"""

    def setUp(self):
        self.rng = np.random.default_rng(1984)

    def _random_params(self):
        return GaussianScenarioParams(self.rng.uniform(0, 1.5), self.rng.uniform(0, 4*np.pi),
                                      self.rng.uniform(0, 1.0))

    def test__properties__physical(self):
        for _ in range(1000):
            params = self._random_params()
            for scenario in gaussian.SCENARIOS:
                sigma = gaussian.scenario_covariance(scenario, params)
                self.assertTrue(gaussian.is_physical(sigma), msg=f'{scenario} {params}')

    def test__properties__closed_forms(self):
        for _ in range(1000):
            params = self._random_params()
            for scenario in gaussian.SCENARIOS:
                closed = gaussian.closed_form_nu(scenario, params)
                general = gaussian.ppt_symplectic_eigenvalues(gaussian.scenario_covariance(scenario, params))
                self.assertLess(abs(closed.nu_minus - general.nu_minus), 1e-10, msg=f'{scenario} {params}')
                self.assertLess(abs(closed.nu_plus - general.nu_plus), 1e-10, msg=f'{scenario} {params}')

    def test__properties__symplectic_product(self):
        # nu+ nu- = sqrt(det sigma) for the state and its partial transpose
        for _ in range(1000):
            params = self._random_params()
            sigma = gaussian.scenario_covariance('ent-lossy', params)
            nu = gaussian.symplectic_eigenvalues(sigma)
            pt = gaussian.ppt_symplectic_eigenvalues(sigma)
            root = np.sqrt(np.linalg.det(sigma.matrix))
            self.assertAlmostEqual(nu.nu_plus*nu.nu_minus, root, delta=1e-9*max(1, root))
            self.assertAlmostEqual(pt.nu_plus*pt.nu_minus, root, delta=1e-9*max(1, root))


if __name__ == '__main__':
    unittest.main()
