from waveguidepy.core import WGTask, WGResult
from ..materials import PRESETS, preset, preset_ratio_range

__appname__ = 'wgpresets'


class PresetsTask(WGTask):
    """Print the waveguide material presets"""

    name = 'wgpresets'

    def exec_task(self):

        params = self.params
        logger = self.logger
        returncode = 1

        names = [params['material']] if params['material'] != '' else list(PRESETS)
        presets = [preset(name) for name in names]

        logger.info(f"{'material':16} {'J (1/s)':>10} {'gamma (1/s)':>12} {'gamma/J':>8}  range")
        for p in presets:
            low, high = preset_ratio_range(p.name)
            span = f'1/{1/high:.0f} - 1/{1/low:.0f}' if p.J_range else f'~1/{1/p.ratio:.0f}'
            logger.info(f'{p.name:16} {p.J:10.3e} {p.gamma:12.3e} {p.ratio:8.4f}  {span}')

        returncode = 0
        outMsg, errMsg = self.logger.output
        return WGResult(returncode, outMsg, errMsg, params, custom={'presets': presets})

    def task_docs(self):
        return wgpresets.__doc__


def wgpresets(args=None, **kwargs):
    """List the coupling and loss rates of the waveguide material presets

    Presets: lithium-niobate (J quoted as a range, the midpoint is used),
    algaas and silica. Use the ratio gamma/J as loss_ratio in wgsweep.


    Parameters:
    -----------
    (material) [string]
          Show one preset only.

    """
    task = PresetsTask('wgpresets')
    result = task(args, **kwargs)
    return result
