"""

DESCRIPTION:
-----------
waveguidepy computes the entanglement (logarithmic negativity) of light in
two evanescently coupled, lossy waveguides: photon-number inputs (|1,1>,
|2,0>, NOON states) through the truncated Fock space, and squeezed inputs
through their covariance matrices. A brute-force master-equation integrator
checks every closed form.

>>> import waveguidepy as wgp
>>> result = wgp.wgsweep(scenario='one-one', tau_end=1.5708, tau_points=101)
>>> print(result.stdout)
...

REQUIREMENTS:
--------------
python (versions later than 3.7)
numpy, scipy, astropy


EXAMPLE USAGE:
--------------
- Library functions work on dimensionless time tau = J*t:
>>> from waveguidepy import fock, negativity
>>> state = fock.evolve_unitary(fock.fock_state(1, 1, 2), 0.25*3.14159)
>>> negativity.log_negativity_density(state.density()).E_N
1.0...

- Tasks take parameters as keywords, a dict, or task attributes:
>>> task = wgp.SweepTask()
>>> task.scenario = 'two-zero'
>>> result = task(method='both', noprompt=True)
>>> table = result.custom['result'].table

- A shipped example configuration:
>>> result = wgp.wgsweep(config=wgp.coupler.shipped_config('fig5-sep-squeezed'))


All tasks take additional optional parameters:
- verbose: In all cases, the text printed by the task is captured, and
    returned in WGResult.stdout/stderr. Addionally:
    - 0 (also False or 'no'): Just return the text, no progress printing.
    - 1 (also True or 'yes'): the text is also printed to the screen as the
        task runs.
    - 2: Similar to 1, but also prints the text to a log file.
    - 20: In addition to capturing and returning the text, log it to a file,
        but not to the screen.
        In both cases of 2 and 20, the default log file name is {taskname}.log.
        A logfile parameter can be passed to the task to override the file name.
- noprompt: do not query missing required parameters.
- stderr: If True, make `stderr` separate from `stdout`.


COMMAND LINE:
-------------
waveguidepy run --config fig2-one-one.cfg --out fig2.csv
waveguidepy extrema --in fig2.csv
waveguidepy presets
waveguidepy convert-loss --db-per-cm 0.87 --speed 3e10

"""
import os
from .core import (WGTask, WGTaskException, WGResult, WGParam, WGLogger,
                   ValidationError, DomainError, PreconditionError, StructuralError,
                   NumericalDomainError, TruncationError, ResourceGuardError, ConfigError,
                   PresetError, AccuracyError)
from . import utils
from . import fock, evolution, negativity, gaussian, lindblad

# help function
def help(): print(__doc__)

# version
from .version import __version__


# a helper function to check a package exists
def _package_exists(package):
    thisdir = os.path.dirname(__file__)
    return os.path.exists(os.path.join(thisdir, 'packages', package))


if _package_exists('coupler'):
    from .packages import coupler
    from .packages.coupler import *
