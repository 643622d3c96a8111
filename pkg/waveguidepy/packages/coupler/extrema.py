"""Maxima and zero intervals of E_N(tau) curves."""

import logging
from dataclasses import dataclass

import numpy as np

from waveguidepy.core import ValidationError
from .scenario import SweepResult, ZERO_THRESHOLD


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Extremum:
    tau: float
    E_N: float
    kind: str  # max | zero-onset | zero-offset


def _as_arrays(result, E_N=None):
    if isinstance(result, SweepResult):
        return result.tau, result.E_N
    tau, E = np.asarray(result, dtype=float), np.asarray(E_N, dtype=float)
    if tau.shape != E.shape or tau.ndim != 1:
        raise ValidationError('tau and E_N must be 1-d arrays of the same length')
    return tau, E


def _parabola_vertex(t, e):
    """Vertex of the parabola through three points; None if they are collinear"""
    (t0, t1, t2), (e0, e1, e2) = t, e
    denom = (t0 - t1) * (t0 - t2) * (t1 - t2)
    A = (t2*(e1 - e0) + t1*(e0 - e2) + t0*(e2 - e1)) / denom
    if A >= 0:
        return None
    B = (t2**2*(e0 - e1) + t1**2*(e2 - e0) + t0**2*(e1 - e2)) / denom
    C = (t1*t2*(t1 - t2)*e0 + t2*t0*(t2 - t0)*e1 + t0*t1*(t0 - t1)*e2) / denom
    tv = -B / (2*A)
    if not t0 <= tv <= t2:
        return None
    return tv, C - B**2 / (4*A)


def _zero_runs(E, threshold):
    """(first, last) row indices of every run with E < threshold"""
    zero = E < threshold
    runs, start = [], None
    for i, z in enumerate(zero):
        if z and start is None:
            start = i
        if not z and start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, len(E) - 1))
    return runs


def find_extrema(result, E_N=None, zero_threshold=ZERO_THRESHOLD):
    """Local maxima and zero intervals of a sweep

    result is a SweepResult, or the tau array with E_N given separately.
    Maxima come from a 3-point comparison refined by a parabola through the
    neighbours; rows with E_N < zero_threshold form zero intervals, reported
    as a zero-onset/zero-offset pair.

    Returns
    -------
    list of Extremum, sorted by tau
    """
    tau, E = _as_arrays(result, E_N)
    if len(tau) < 3:
        raise ValidationError(f'find_extrema needs at least 3 rows, got {len(tau)}')

    found = []
    for i in range(1, len(E) - 1):
        if E[i] > E[i-1] and E[i] >= E[i+1] and E[i] >= zero_threshold:
            vertex = _parabola_vertex(tau[i-1:i+2], E[i-1:i+2])
            t_max, e_max = vertex if vertex is not None else (tau[i], E[i])
            found.append(Extremum(float(t_max), float(max(e_max, E[i])), 'max'))

    for first, last in _zero_runs(E, zero_threshold):
        found.append(Extremum(float(tau[first]), 0.0, 'zero-onset'))
        found.append(Extremum(float(tau[last]), 0.0, 'zero-offset'))

    order = {'zero-onset': 0, 'max': 1, 'zero-offset': 2}
    return sorted(found, key=lambda x: (x.tau, order[x.kind]))


def zero_intervals(result, E_N=None, zero_threshold=ZERO_THRESHOLD, interior_only=False):
    """(onset, offset) tau pairs of the intervals where E_N vanishes

    With interior_only, intervals touching either end of the grid are left
    out, since their true extent is not known.
    """
    tau, E = _as_arrays(result, E_N)
    pairs = []
    for first, last in _zero_runs(E, zero_threshold):
        if interior_only and (first == 0 or last == len(E) - 1):
            continue
        pairs.append((float(tau[first]), float(tau[last])))
    return pairs


def local_maxima(result, E_N=None, zero_threshold=ZERO_THRESHOLD):
    """(tau, E_N) of the refined local maxima"""
    return [(x.tau, x.E_N) for x in find_extrema(result, E_N, zero_threshold) if x.kind == 'max']
