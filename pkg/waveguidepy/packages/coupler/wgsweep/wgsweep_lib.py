import os
import logging

import numpy as np

from waveguidepy.core import WGTask, WGResult, ValidationError
from ..scenario import ScenarioConfig, read_config, run_sweep, config_schema

__appname__ = 'wgsweep'


class SweepTask(WGTask):
    """Entanglement sweep of one coupler scenario"""

    name = 'wgsweep'

    def exec_task(self):

        params = self.params
        logger = self.logger

        # return code: 0 if task runs sucessful; set to 0 at the end
        returncode = 1

        if params['config'] != '':
            config = read_config(params['config'])
            logger.info(f"scenario read from {params['config']}")
        else:
            config = ScenarioConfig.from_params({k: params[k] for k in config_schema()})

        outfile = params['outfile']
        if outfile != '' and os.path.exists(outfile) and params['clobber'] == 'no':
            raise ValidationError(f'The output file {outfile} already exists. Use clobber=yes to overwrite')

        result = run_sweep(config)

        E = result.E_N
        imax = int(np.argmax(E))
        logger.info(f'{config.scenario}: {len(result)} points, max E_N = {E[imax]:.6g} '
                    f'(base {config.log_base}) at tau = {result.tau[imax]:.6g}')

        if outfile != '':
            result.write_csv(outfile)
            logger.info(f'sweep written to {outfile}')

        returncode = 0
        outMsg, errMsg = self.logger.output
        return WGResult(returncode, outMsg, errMsg, params, custom={'result': result, 'config': config})

    def task_docs(self):
        return wgsweep.__doc__


def wgsweep(args=None, **kwargs):
    """Compute the log negativity E_N(tau) of one coupler scenario

    'wgsweep' follows two evanescently coupled waveguides fed with photon
    number states (|1,1>, |2,0>, NOON) or squeezed light (two single-mode
    squeezed vacua, or a two-mode squeezed vacuum), with optional identical
    loss in the guides, and tabulates the logarithmic negativity on a grid
    of the scaled time tau = J*t.

    The scenario comes either from a key=value configuration file (config)
    or from the parameters below. Closed forms are used with method=analytic,
    the truncated Fock-space master equation with method=numeric, and both
    (checked against each other) with method=both.


    Parameters:
    -----------
    (config) [file name]
          Scenario configuration file. When given, the scenario parameters
          of the call are ignored.

    (outfile) [file name]
          Output CSV with the columns tau, tau_over_pi, E_N, diagnostic,
          method (and E_N_numeric, abs_diff for method=both).

    (scenario=one-one) [string]
          one-one, two-zero, noon-N (e.g. noon-4), sep-squeezed or
          ent-squeezed.

    (r=0.9) [real]
          Squeezing parameter of the squeezed scenarios.

    (loss_ratio=0) [real]
          Loss rate over coupling rate, gamma/J.

    (tau_start=0, tau_end=pi, tau_points=401)
          The tau grid.

    (method=analytic) [string]
          analytic, numeric or both.

    (base=auto) [string]
          Log base of E_N: 2, e, or auto (2 for photon-number inputs, e for
          squeezed inputs).

    (formula_mode=consistent) [string]
          Lossy separable squeezed covariance: consistent (reduces to the
          lossless form without loss) or paper-exact.

    (n_max=0, step=0, tolerance=1e-6, max_noon_numeric=8, max_cutoff=30)
          Numeric settings: Fock cutoff (0 automatic), integrator step (0
          default), method=both threshold and resource guards.

    (clobber=no) [boolean]
          If set to yes, overwrite the output file.

    """
    task = SweepTask('wgsweep')
    result = task(args, **kwargs)
    return result
