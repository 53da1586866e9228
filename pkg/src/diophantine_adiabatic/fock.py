r"""Single-mode truncated Fock space for the su(1,1) representation of the infinite square well.

Basis states :math:`|n\rangle`, ``n = 0..m``, carry the actions

.. math::
    K_+|n\rangle = \sqrt{(n+1)(n+3)}\,|n+1\rangle, \quad
    K_-|n\rangle = \sqrt{n(n+2)}\,|n-1\rangle, \quad
    K_3|n\rangle = (2n+3)|n\rangle,

with the overflow ``K_+|m> -> 0`` dropped at the truncation edge. Energies are
in units where :math:`\hbar^2/(2ma^2) = 1`.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

__all__ = [
    "bessel_i2", "coherent_amplitudes", "norm_defect", "truncation_dimension",
    "k_plus", "k_minus", "k3", "number_op", "energy_level",
]

_SERIES_RTOL = 1e-16


def _i2_ratio_terms(h: float):
    """Yield the I2 series terms divided by the leading term ``h/2``, with ``h = (x/2)^2``."""
    term = 1.0
    j = 0
    while True:
        yield term
        term *= h / ((j + 1) * (j + 3))
        j += 1


def _i2_ratio_sum(h: float) -> float:
    """``I2(x) / (h/2)``; the cutoff is only tested once the terms are decreasing."""
    terms = []
    total = 0.0
    for j, term in enumerate(_i2_ratio_terms(h)):
        terms.append(term)
        total += term
        if j * j > h and term < _SERIES_RTOL * total:
            break
    return math.fsum(terms)


def bessel_i2(x: float) -> float:
    """Modified Bessel function of the first kind, order 2, by its power series.

    Summation stops once a term drops below ``1e-16`` of the partial sum.
    """
    if x < 0:
        raise DomainError(f"bessel_i2 requires x >= 0, got {x}")
    if x == 0:
        return 0.0
    h = (x / 2.0) ** 2
    return 0.5 * h * _i2_ratio_sum(h)


def coherent_amplitudes(z: complex, m: int) -> np.ndarray:
    r"""Truncated Barut-Girardello coherent state, components ``0..m``.

    Component ``n`` is :math:`|z| z^n / \sqrt{I_2(2|z|)\, n!\,(n+2)!}`. The
    normalization is that of the untruncated state, so the returned vector has
    norm slightly below one. ``z = 0`` gives the vacuum (the analytic limit).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    out = np.zeros(m + 1, dtype=complex)
    r = abs(z)
    if r == 0:
        out[0] = 1.0
        return out
    # |z| / sqrt(2 I2(2|z|)) with the leading r^2/2 of I2 cancelled against |z|
    c = 1.0 / math.sqrt(_i2_ratio_sum(r * r))
    for n in range(m + 1):
        out[n] = c
        c *= z / math.sqrt((n + 1) * (n + 3))
    return out


def norm_defect(z: complex, m: int) -> float:
    """``|1 - ||coherent_amplitudes(z, m)|| |``.

    Evaluated from the discarded tail of the I2 series instead of from the
    retained norm, which avoids cancellation once the defect is below ~1e-8.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    r = abs(z)
    if r == 0:
        return 0.0
    h = r * r
    kept, tail = [], []
    for j, term in enumerate(_i2_ratio_terms(h)):
        if j <= m:
            kept.append(term)
            continue
        tail.append(term)
        # past the peak of the series and negligible against the tail itself
        if j * j > h and term <= _SERIES_RTOL * tail[0]:
            break
    kept_sum, tail_sum = math.fsum(kept), math.fsum(tail)
    missing = tail_sum / (kept_sum + tail_sum)  # 1 - ||v||^2
    return missing / (1.0 + math.sqrt(1.0 - missing))


def truncation_dimension(z: complex, epsilon: float) -> int:
    """Smallest cutoff ``m`` with ``norm_defect(z, m) <= epsilon``."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    m = 0
    while norm_defect(z, m) > epsilon:
        m += 1
    return m


def k_plus(m: int) -> np.ndarray:
    """Raising operator; the transition out of ``|m>`` is dropped."""
    out = np.zeros((m + 1, m + 1))
    n = np.arange(m)
    out[n + 1, n] = np.sqrt((n + 1.0) * (n + 3.0))
    return out


def k_minus(m: int) -> np.ndarray:
    return k_plus(m).T.copy()


def k3(m: int) -> np.ndarray:
    return np.diag(2.0 * np.arange(m + 1) + 3.0)


def number_op(m: int) -> np.ndarray:
    return np.diag(np.arange(m + 1, dtype=float))


def energy_level(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return n * (n + 2)
