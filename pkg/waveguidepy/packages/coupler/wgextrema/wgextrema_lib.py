from waveguidepy.core import WGTask, WGResult
from ..scenario import SweepResult
from ..extrema import find_extrema

__appname__ = 'wgextrema'


class ExtremaTask(WGTask):
    """Maxima and zero intervals of a sweep file"""

    name = 'wgextrema'

    def exec_task(self):

        params = self.params
        logger = self.logger
        returncode = 1

        result = SweepResult.read_csv(params['infile'])
        extrema = find_extrema(result, zero_threshold=params['zero_threshold'])

        logger.info(f"{'kind':12} {'tau':>14} {'tau/pi':>12} {'E_N':>12}")
        for ext in extrema:
            logger.info(f'{ext.kind:12} {ext.tau:14.8f} {ext.tau/3.141592653589793:12.6f} {ext.E_N:12.6f}')

        returncode = 0
        outMsg, errMsg = self.logger.output
        return WGResult(returncode, outMsg, errMsg, params, custom={'extrema': extrema})

    def task_docs(self):
        return wgextrema.__doc__


def wgextrema(args=None, **kwargs):
    """List the local maxima and the zero intervals of an E_N(tau) sweep

    Reads a CSV written by wgsweep. Maxima are found by comparing each row
    with its neighbours and refined with a parabola through the three
    points; rows with E_N below zero_threshold are grouped into intervals
    reported by their onset and offset.


    Parameters:
    -----------
    infile [file name]
          Sweep CSV file (needs at least 3 rows).

    (zero_threshold=1e-9) [real]
          E_N below this value counts as zero.

    """
    task = ExtremaTask('wgextrema')
    result = task(args, **kwargs)
    return result
