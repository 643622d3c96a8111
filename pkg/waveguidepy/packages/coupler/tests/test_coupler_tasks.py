import unittest
import os
import tempfile

import numpy as np

import waveguidepy
from waveguidepy.packages.coupler import (SweepTask, SweepResult, ScenarioConfig, write_config,
                                          wgsweep, wgextrema, wgpresets, wgconvloss)


class TestSweepTask(unittest.TestCase):
    """wgsweep called from python"""

    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)

    def test__wgsweep__params(self):
        out = wgsweep(scenario='two-zero', tau_points=21, noprompt=True, verbose=0)
        self.assertEqual(out.returncode, 0)
        result = out.custom['result']
        self.assertEqual(len(result), 21)
        self.assertEqual(out.custom['config'].scenario, 'two-zero')
        self.assertAlmostEqual(result.tau[-1], np.pi, places=12)
        self.assertIn('max E_N', out.stdout)

    def test__wgsweep__config_file(self):
        config = ScenarioConfig(scenario='noon-3', tau_points=21)
        cfg = os.path.join(self.tmpdir.name, 'noon3.cfg')
        outfile = os.path.join(self.tmpdir.name, 'noon3.csv')
        write_config(config, cfg)

        # the file wins over the scenario parameters
        out = wgsweep(config=cfg, outfile=outfile, scenario='one-one', noprompt=True)
        self.assertEqual(out.custom['config'], config)
        back = SweepResult.read_csv(outfile)
        self.assertEqual(len(back), 21)
        self.assertTrue(np.allclose(back.E_N, out.custom['result'].E_N, rtol=0, atol=1e-14))

    def test__wgsweep__clobber(self):
        outfile = os.path.join(self.tmpdir.name, 'exists.csv')
        with open(outfile, 'w') as fp:
            fp.write('keep\n')
        with self.assertRaises(waveguidepy.ValidationError):
            wgsweep(outfile=outfile, tau_points=5, noprompt=True)
        with open(outfile) as fp:
            self.assertEqual(fp.read(), 'keep\n')

        wgsweep(outfile=outfile, tau_points=5, clobber=True, noprompt=True)
        self.assertEqual(len(SweepResult.read_csv(outfile)), 5)

    def test__wgsweep__bad_params(self):
        with self.assertRaises(waveguidepy.ValidationError):
            wgsweep(method='fast', noprompt=True)
        with self.assertRaises(waveguidepy.ValidationError):
            wgsweep(tau_points=1, noprompt=True)
        with self.assertRaises(waveguidepy.ValidationError):
            wgsweep(photons=3, noprompt=True)
        with self.assertRaises(waveguidepy.DomainError):
            wgsweep(scenario='three-zero', noprompt=True)

    def test__wgsweep__task_attributes(self):
        task = SweepTask()
        task.scenario = 'ent-squeezed'
        task.tau_points = 11
        task.r = 0.5
        out = task(noprompt=True)
        config = out.custom['config']
        self.assertEqual((config.scenario, config.r, config.tau_points), ('ent-squeezed', 0.5, 11))
        self.assertEqual(config.log_base, 'e')
        with self.assertRaises(waveguidepy.ValidationError):
            task.method = 'fast'

    def test__wgsweep__docs(self):
        self.assertIn('log negativity', SweepTask().task_docs())
        self.assertIn('loss_ratio', SweepTask().__doc__)


class TestOtherTasks(unittest.TestCase):
    """wgextrema, wgpresets and wgconvloss"""

    def test__wgextrema(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            outfile = os.path.join(tmpdir, 'two.csv')
            wgsweep(scenario='two-zero', outfile=outfile, noprompt=True)
            out = wgextrema(infile=outfile, noprompt=True)
        self.assertEqual(out.returncode, 0)
        maxima = [x for x in out.custom['extrema'] if x.kind == 'max']
        self.assertEqual(len(maxima), 2)
        self.assertAlmostEqual(maxima[0].tau, np.pi/4, delta=1e-6)
        self.assertAlmostEqual(maxima[1].tau, 3*np.pi/4, delta=1e-6)
        self.assertIn('zero-onset', out.stdout)

    def test__wgextrema__missing(self):
        with self.assertRaises(OSError):
            wgextrema(infile='/nonexistent/sweep.csv', noprompt=True)
        with self.assertRaises(waveguidepy.ValidationError):
            wgextrema(noprompt=True)

    def test__wgpresets(self):
        out = wgpresets(noprompt=True)
        names = [p.name for p in out.custom['presets']]
        self.assertEqual(names, ['lithium-niobate', 'algaas', 'silica'])
        self.assertIn('1/51', out.stdout)

        out = wgpresets(material='silica', noprompt=True)
        self.assertEqual(len(out.custom['presets']), 1)
        with self.assertRaises(waveguidepy.PresetError):
            wgpresets(material='diamond', noprompt=True)

    def test__wgconvloss(self):
        out = wgconvloss(db_per_cm=0.87, speed=3e10, noprompt=True)
        self.assertAlmostEqual(out.custom['rate'] / 1e9, 3.005, delta=1e-3)
        out = wgconvloss(inverse=True, rate=3e9, speed=3e10, noprompt=True)
        self.assertAlmostEqual(out.custom['db_per_cm'], 0.8686, delta=1e-4)
        with self.assertRaises(waveguidepy.ValidationError):
            wgconvloss(db_per_cm=-1, noprompt=True)


if __name__ == '__main__':
    unittest.main()
