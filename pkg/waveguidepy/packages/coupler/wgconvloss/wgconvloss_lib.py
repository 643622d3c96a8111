from waveguidepy.core import WGTask, WGResult
from ..materials import loss_db_per_cm_to_rate, rate_to_loss_db_per_cm

__appname__ = 'wgconvloss'


class ConvLossTask(WGTask):
    """Convert between dB/cm and loss rates"""

    name = 'wgconvloss'

    def exec_task(self):

        params = self.params
        logger = self.logger
        returncode = 1

        if params['inverse'] == 'yes':
            value = rate_to_loss_db_per_cm(params['rate'], params['speed'])
            logger.info(f"{params['rate']:.6e} 1/s = {value:.6e} dB/cm")
            custom = {'db_per_cm': value}
        else:
            value = loss_db_per_cm_to_rate(params['db_per_cm'], params['speed'])
            logger.info(f"{params['db_per_cm']:.6e} dB/cm = {value:.6e} 1/s")
            custom = {'rate': value}

        returncode = 0
        outMsg, errMsg = self.logger.output
        return WGResult(returncode, outMsg, errMsg, params, custom=custom)

    def task_docs(self):
        return wgconvloss.__doc__


def wgconvloss(args=None, **kwargs):
    """Convert a waveguide power loss in dB/cm to the field decay rate gamma

    gamma = loss * ln(10)/10 * v/2, with v the propagation speed. With
    inverse=yes a rate is converted back to dB/cm.


    Parameters:
    -----------
    (db_per_cm=0) [real]
          Power loss in dB/cm.

    (speed=2.99792458e10) [real]
          Propagation speed in cm/s.

    (inverse=no) [boolean]
          Convert rate to dB/cm.

    (rate=0) [real]
          Loss rate in 1/s, for inverse=yes.

    """
    task = ConvLossTask('wgconvloss')
    result = task(args, **kwargs)
    return result
