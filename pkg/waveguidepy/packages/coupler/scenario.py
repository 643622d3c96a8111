"""Scenario configuration and entanglement sweeps for the coupler.

A ScenarioConfig names the input state and the time grid; run_sweep turns it
into a SweepResult, one row per tau, using the closed forms (method=analytic),
the Fock-space oracle (method=numeric) or both.
"""

import io
import os
import re
import logging
import dataclasses
from dataclasses import dataclass

import numpy as np
from astropy.table import Table

from waveguidepy import utils
from waveguidepy.core import (WGTask, WGParam, ValidationError, DomainError, ConfigError,
                              AccuracyError, ResourceGuardError)
from waveguidepy import fock, evolution, negativity, gaussian, lindblad


logger = logging.getLogger(__name__)

# the wgsweep parameter file doubles as the configuration schema
SCHEMA_PFILE = os.path.join(os.path.dirname(__file__), 'wgsweep', 'wgsweep.par')

PHOTON_SCENARIOS = ('one-one', 'two-zero')
SQUEEZED_SCENARIOS = ('sep-squeezed', 'ent-squeezed')
METHODS = ('analytic', 'numeric', 'both')

CSV_COLUMNS = ['tau', 'tau_over_pi', 'E_N', 'diagnostic', 'method']
BOTH_COLUMNS = ['E_N_numeric', 'abs_diff']

# rows with E_N below this are part of a zero interval
ZERO_THRESHOLD = 1e-9


@dataclass(frozen=True)
class ScenarioConfig:
    """One coupler scenario and its tau grid (tau = J*t)"""
    scenario: str = 'one-one'
    r: float = 0.9
    loss_ratio: float = 0.0
    tau_start: float = 0.0
    tau_end: float = np.pi
    tau_points: int = 401
    method: str = 'analytic'
    base: str = 'auto'
    formula_mode: str = 'consistent'
    n_max: int = 0
    step: float = 0.0
    tolerance: float = 1e-6
    max_noon_numeric: int = 8
    max_cutoff: int = 30

    def __post_init__(self):
        if not self.scenario in PHOTON_SCENARIOS + SQUEEZED_SCENARIOS and \
                _noon_photons(self.scenario) is None:
            raise DomainError(f'unknown scenario {self.scenario!r}; expected one of '
                              f'{", ".join(PHOTON_SCENARIOS + SQUEEZED_SCENARIOS)} or noon-N')
        if self.tau_points < 2:
            raise DomainError(f'tau_points must be >= 2, got {self.tau_points}')
        if not self.tau_end > self.tau_start:
            raise DomainError(f'tau_end ({self.tau_end}) must be larger than tau_start ({self.tau_start})')
        if self.tau_start < 0 and (self.loss_ratio > 0 or self.method != 'analytic'):
            raise DomainError('negative times are only available for lossless analytic sweeps')
        if self.loss_ratio < 0:
            raise DomainError(f'loss_ratio must be >= 0, got {self.loss_ratio}')
        if not self.method in METHODS:
            raise DomainError(f'method must be one of {METHODS}, got {self.method!r}')
        if not str(self.base) in ('auto', '2', 'e'):
            raise DomainError(f'base must be auto, 2 or e, got {self.base!r}')
        if not self.formula_mode in gaussian.FORMULA_MODES:
            raise DomainError(f'formula_mode must be one of {gaussian.FORMULA_MODES}')
        if self.n_max < 0 or self.step < 0 or not self.tolerance > 0:
            raise DomainError('n_max and step must be >= 0 and tolerance > 0')
        if self.max_noon_numeric < 1 or self.max_cutoff < 1:
            raise DomainError('max_noon_numeric and max_cutoff must be >= 1')

    @property
    def noon_photons(self):
        return _noon_photons(self.scenario)

    @property
    def is_squeezed(self):
        return self.scenario in SQUEEZED_SCENARIOS

    @property
    def log_base(self):
        """Resolved log base: 2 or 'e'"""
        if str(self.base) == 'auto':
            return 'e' if self.is_squeezed else 2
        return 2 if str(self.base) == '2' else 'e'

    def taus(self):
        return np.linspace(self.tau_start, self.tau_end, self.tau_points)

    def to_params(self):
        """Fields as a dict in schema order"""
        return {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}

    @classmethod
    def from_params(cls, params, source='parameters'):
        """Build a config from {field: value}; values are typed and checked by the schema"""
        schema = config_schema()
        values = {}
        for key, value in params.items():
            if not key in schema:
                raise ConfigError(f'{source}: unknown config key {key!r}')
            par = schema[key]
            try:
                value = WGParam.param_type(value, par.type)
                par.validate(value)
            except ValidationError as err:
                raise ConfigError(f'{source}: bad value for {key}: {err}') from None
            values[key] = value
        return cls(**values)


def _noon_photons(scenario):
    """N of a noon-N tag, None for other tags"""
    match = re.fullmatch(r'noon-(\d+)', str(scenario))
    if match is None:
        if str(scenario).startswith('noon'):
            raise DomainError(f'bad NOON scenario {scenario!r}; use noon-N with N >= 1')
        return None
    N = int(match.group(1))
    if N < 1:
        raise DomainError(f'NOON photon number must be >= 1, got {N}')
    return N


def config_schema():
    """{field: WGParam} for the ScenarioConfig fields, from the wgsweep parameter file"""
    names = [f.name for f in dataclasses.fields(ScenarioConfig)]
    return {p.pname: p for p in WGTask.read_pfile(SCHEMA_PFILE) if p.pname in names}


def read_config(path):
    """Read a flat key=value scenario document"""
    return ScenarioConfig.from_params(utils.read_keyvalue(path), source=path)


def write_config(config, path):
    """Write every field in schema order; read_config gives back the same config"""
    pairs = {key: (repr(float(val)) if isinstance(val, float) else val)
             for key, val in config.to_params().items()}
    utils.write_keyvalue(path, pairs)


class SweepResult:
    """Rows of (tau, tau/pi, E_N, diagnostic, method), sorted by tau

    The diagnostic is the smallest partial-transpose symplectic eigenvalue
    for analytic squeezed rows and the negativity N(rho) otherwise. With
    method=both the numeric E_N and |analytic - numeric| are added.
    """

    def __init__(self, table, config=None):
        self.table = table
        self.config = config

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f'SweepResult({len(self)} rows, columns={self.table.colnames})'

    @property
    def tau(self):
        return np.asarray(self.table['tau'], dtype=float)

    @property
    def E_N(self):
        return np.asarray(self.table['E_N'], dtype=float)

    @classmethod
    def empty(cls, config=None):
        return cls(_new_table([], [], [], [], None), config)

    def _write(self, target):
        formats = {name: '.16e' for name in self.table.colnames if name != 'method'}
        self.table.write(target, format='ascii.csv', formats=formats)

    def to_csv(self):
        """CSV text with full double precision"""
        buf = io.StringIO()
        self._write(buf)
        return buf.getvalue()

    def write_csv(self, path):
        text = self.to_csv()
        try:
            with open(path, 'w') as fp:
                fp.write(text)
        except OSError as err:
            raise OSError(f'cannot write {path}: {err.strerror or err}') from err

    @classmethod
    def read_csv(cls, path):
        try:
            with open(path, 'r') as fp:
                lines = [l for l in fp.read().splitlines() if l.strip()]
        except OSError as err:
            raise OSError(f'cannot read {path}: {err.strerror or err}') from err
        if not lines:
            raise ValidationError(f'{path} is empty')
        header = lines[0].split(',')
        missing = [c for c in CSV_COLUMNS if not c in header]
        if missing:
            raise ValidationError(f'{path} is not a sweep file; missing columns {missing}')
        if len(lines) == 1:
            return cls(_new_table([], [], [], [], None))
        return cls(Table.read(lines, format='ascii.csv'))


def _new_table(taus, E_N, diagnostic, methods, numeric):
    taus = np.asarray(taus, dtype=float)
    cols = [taus, taus / np.pi, np.asarray(E_N, dtype=float),
            np.asarray(diagnostic, dtype=float), np.asarray(methods, dtype=str)]
    names = list(CSV_COLUMNS)
    if numeric is not None:
        numeric = np.asarray(numeric, dtype=float)
        cols += [numeric, np.abs(cols[2] - numeric)]
        names += BOTH_COLUMNS
    return Table(cols, names=names)


# ---------------------------------------------------------------------- #
# evaluation routes

def _bits_to(value, base):
    return negativity.to_base(value, 2, base)


def _analytic(config, taus):
    """E_N and diagnostic from the closed forms"""
    base = config.log_base
    N = config.noon_photons
    lossy = config.loss_ratio > 0

    if config.is_squeezed:
        kind = config.scenario[:3]
        E, nu = [], []
        for tau in taus:
            params = gaussian.GaussianScenarioParams(config.r, tau, config.loss_ratio, config.formula_mode)
            scenario = f'{kind}-lossy' if lossy or (kind == 'sep' and config.formula_mode == 'paper-exact') \
                else f'{kind}-lossless'
            sigma = gaussian.scenario_covariance(scenario, params)
            nu_min = gaussian.ppt_symplectic_eigenvalues(sigma).nu_min
            nu.append(nu_min)
            E.append(max(0.0, -negativity.log_base(2*nu_min, base)))
        return np.array(E), np.array(nu)

    if lossy and config.scenario != 'one-one':
        raise ValidationError(f'no closed form for {config.scenario} with loss; use method=numeric')

    if config.scenario == 'one-one' and lossy:
        res = [negativity.log_negativity_density(evolution.lossy_one_one_density(tau, config.loss_ratio), base)
               for tau in taus]
        return np.array([x.E_N for x in res]), np.array([x.N_rho for x in res])

    if config.scenario == 'one-one':
        bits = np.array([negativity.one_one_logneg_analytic(tau) for tau in taus])
    elif config.scenario == 'two-zero':
        bits = np.array([negativity.log_negativity_pure_bipartite(evolution.two_zero_coefficients(tau).as_array())
                         for tau in taus])
    else:
        bits = np.array([negativity.noon_logneg_analytic(N, tau) for tau in taus])
    # ||rho^T|| = 2^E = 1 + 2 N(rho)
    return np.array([_bits_to(b, base) for b in bits]), (2**bits - 1) / 2


def _initial_state(config):
    N = config.noon_photons
    if config.scenario == 'one-one':
        return fock.fock_state(1, 1, 2)
    if config.scenario == 'two-zero':
        return fock.fock_state(2, 0, 2)
    if N is not None:
        if N > config.max_noon_numeric:
            raise ResourceGuardError(f'numeric NOON runs are limited to N <= {config.max_noon_numeric} '
                                     f'(max_noon_numeric); got N={N}')
        return evolution.noon_state(N)

    kind = 'single' if config.scenario == 'sep-squeezed' else 'two'
    n_max = config.n_max if config.n_max > 0 else lindblad.default_cutoff(config.r, kind)
    if n_max > config.max_cutoff:
        raise ResourceGuardError(f'numeric run at r={config.r} needs n_max={n_max}, above '
                                 f'max_cutoff={config.max_cutoff}; use method=analytic or raise max_cutoff')
    if kind == 'single':
        return lindblad.single_mode_squeezed_fock(config.r, n_max)
    return lindblad.two_mode_squeezed_fock(config.r, n_max)


def _numeric(config, taus):
    """E_N and N(rho) from the Fock-space oracle"""
    rho0 = _initial_state(config).density()
    logger.info(f'numeric run: n_max={rho0.cutoff.n_max}, {len(taus)} points, loss_ratio={config.loss_ratio}')
    integ = lindblad.IntegratorConfig(step=config.step if config.step > 0 else None)
    states = lindblad.propagate(rho0, taus, config.loss_ratio, integ)
    res = [negativity.log_negativity_density(rho, config.log_base) for rho in states]
    return np.array([x.E_N for x in res]), np.array([x.N_rho for x in res])


def run_sweep(config):
    """Evaluate E_N on the config's tau grid

    Returns
    -------
    SweepResult

    Raises AccuracyError if method=both and the routes differ by
    config.tolerance or more anywhere on the grid.
    """
    taus = config.taus()
    logger.info(f'sweep {config.scenario}: tau in [{config.tau_start:.6g}, {config.tau_end:.6g}], '
                f'{config.tau_points} points, method={config.method}, base={config.log_base}')

    numeric = None
    if config.method == 'numeric':
        E, diag = _numeric(config, taus)
    else:
        E, diag = _analytic(config, taus)
        if config.method == 'both':
            numeric, _ = _numeric(config, taus)

    result = SweepResult(_new_table(taus, E, diag, [config.method]*len(taus), numeric), config)
    if numeric is not None:
        worst = float(np.max(result.table['abs_diff']))
        logger.info(f'largest analytic-numeric difference: {worst:.3e}')
        if worst >= config.tolerance:
            raise AccuracyError(f'analytic and numeric E_N differ by {worst:.3e} '
                                f'(tolerance {config.tolerance:.1e})')
    return result
