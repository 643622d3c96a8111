__description__ = """
Tasks for two evanescently coupled, lossy waveguides.

packages/coupler/
            |-- __init__.py
            |-- setup.py
            |-- requirements.txt
            |-- materials.py      material presets and unit conversions
            |-- scenario.py       ScenarioConfig, sweeps and CSV output
            |-- extrema.py        maxima and zero intervals of sweeps
            |-- configs/          example scenario configurations
            |-- wgsweep
                |-- wgsweep.py
                |-- wgsweep_lib.py
                |-- wgsweep.par
            |-- wgextrema ...
            |-- wgpresets ...
            |-- wgconvloss ...

Each task directory holds the executable script, the library module with the
WGTask subclass and the task function, and the parameter file.
"""

import os

from .wgsweep.wgsweep_lib import SweepTask, wgsweep
from .wgextrema.wgextrema_lib import ExtremaTask, wgextrema
from .wgpresets.wgpresets_lib import PresetsTask, wgpresets
from .wgconvloss.wgconvloss_lib import ConvLossTask, wgconvloss
from .scenario import ScenarioConfig, SweepResult, read_config, write_config, run_sweep
from .extrema import Extremum, find_extrema, zero_intervals
from .materials import (MaterialPreset, preset, preset_ratio_range, loss_db_per_cm_to_rate,
                        rate_to_loss_db_per_cm, time_from_length, length_from_time)

CONFIG_DIR = os.path.join(os.path.dirname(__file__), 'configs')


def shipped_config(name):
    """Path of one of the example configurations, e.g. shipped_config('fig2-one-one')"""
    return os.path.join(CONFIG_DIR, f'{name}.cfg')


__all__ = ['SweepTask', 'wgsweep', 'ExtremaTask', 'wgextrema', 'PresetsTask', 'wgpresets',
           'ConvLossTask', 'wgconvloss', 'ScenarioConfig', 'SweepResult', 'read_config',
           'write_config', 'run_sweep', 'Extremum', 'find_extrema', 'zero_intervals',
           'MaterialPreset', 'preset', 'preset_ratio_range', 'loss_db_per_cm_to_rate',
           'rate_to_loss_db_per_cm', 'time_from_length', 'length_from_time', 'shipped_config']
