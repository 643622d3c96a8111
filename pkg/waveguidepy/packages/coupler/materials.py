"""Waveguide material presets and unit helpers.

Rates are in s^-1, lengths in cm and speeds in cm/s. Rates, lengths and speeds
may also be given as astropy Quantities.
"""

import logging
from dataclasses import dataclass

import numpy as np
from astropy import constants as const
from astropy import units as u

from waveguidepy.core import DomainError, PresetError


logger = logging.getLogger(__name__)

# speed of light in vacuum, cm/s
C_CGS = const.c.cgs.value

# dB of power per neper of field amplitude: 10*log10(e^2)
_DB_PER_NEPER = 20.0 / np.log(10)


@dataclass(frozen=True)
class MaterialPreset:
    """Coupling rate J, loss rate gamma (both s^-1) and their ratio gamma/J

    J_range is set when only a bracket of J is known; J is then its midpoint.
    """
    name: str
    J: float
    gamma: float
    ratio: float
    J_range: tuple = None

    def __post_init__(self):
        if not self.J > 0 or self.gamma < 0:
            raise DomainError(f'{self.name}: J must be > 0 and gamma >= 0')
        if abs(self.ratio - self.gamma/self.J) > 0.01 * self.gamma/self.J:
            raise DomainError(f'{self.name}: ratio {self.ratio} differs from gamma/J '
                              f'= {self.gamma/self.J:.4g} by more than 1%')

    @classmethod
    def build(cls, name, J, gamma, J_range=None):
        return cls(name, float(J), float(gamma), float(gamma)/float(J), J_range)


PRESETS = {
    p.name: p for p in [
        MaterialPreset.build('lithium-niobate', 0.5*(1.83e10 + 4.92e10), 3e9, J_range=(1.83e10, 4.92e10)),
        MaterialPreset.build('algaas', 2.46e11, 2.7e10),
        MaterialPreset.build('silica', 1.53e11, 3e9),
    ]
}


def preset(name):
    """Look up a material preset by name"""
    try:
        return PRESETS[name]
    except KeyError:
        raise PresetError(f'unknown material preset {name!r}; known presets: '
                          f'{", ".join(PRESETS)}') from None


def preset_ratio_range(name):
    """(smallest, largest) gamma/J allowed by the preset's J bracket"""
    p = preset(name)
    if p.J_range is None:
        return (p.ratio, p.ratio)
    return (p.gamma / max(p.J_range), p.gamma / min(p.J_range))


def _value(x, unit):
    if isinstance(x, u.Quantity):
        return float(x.to_value(unit))
    return float(x)


def _check_speed(speed):
    if not speed > 0:
        raise DomainError(f'propagation speed must be > 0, got {speed}')


def loss_db_per_cm_to_rate(loss_db, propagation_speed):
    """Field decay rate gamma from a power loss in dB/cm

    10 log10(P_in/P_out) per cm = 20 log10(e) gamma / v, so
    gamma = loss_db * ln(10)/10 * v/2.
    """
    loss_db = float(loss_db)
    speed = _value(propagation_speed, u.cm / u.s)
    _check_speed(speed)
    if loss_db < 0:
        raise DomainError(f'loss must be >= 0 dB/cm, got {loss_db}')
    return float(loss_db / _DB_PER_NEPER * speed)


def rate_to_loss_db_per_cm(rate, propagation_speed):
    """Inverse of loss_db_per_cm_to_rate"""
    rate = _value(rate, 1 / u.s)
    speed = _value(propagation_speed, u.cm / u.s)
    _check_speed(speed)
    if rate < 0:
        raise DomainError(f'loss rate must be >= 0, got {rate}')
    return float(rate * _DB_PER_NEPER / speed)


def time_from_length(length, refractive_index, J):
    """tau = J t with t = n l / c the transit time through a guide of length l"""
    length = _value(length, u.cm)
    J = _value(J, 1 / u.s)
    if length < 0 or not refractive_index > 0 or not J > 0:
        raise DomainError('length must be >= 0, refractive index and J > 0')
    return float(J * refractive_index * length / C_CGS)


def length_from_time(tau, refractive_index, J):
    """Guide length (cm) that gives a dimensionless time tau"""
    J = _value(J, 1 / u.s)
    if tau < 0 or not refractive_index > 0 or not J > 0:
        raise DomainError('tau must be >= 0, refractive index and J > 0')
    return float(tau * C_CGS / (J * refractive_index))
