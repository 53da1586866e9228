"""Multi-mode problem setup: initial product state and the interpolated Hamiltonians."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import fock
from .diophantine import DiophantineEquation, evaluate
from .errors import ValueOverflow
from .linalg import embed, kron_all

__all__ = ["ProblemSetup", "initial_state", "build_h_i", "build_h_d", "h_a", "SAFE_INTEGER"]

SAFE_INTEGER = 2**53


@dataclass(frozen=True)
class ProblemSetup:
    """An equation with ``k`` unknowns, each encoded in a mode truncated at ``m``.

    ``zs`` holds one coherent label per mode; a single value is broadcast to
    every mode.
    """

    equation: DiophantineEquation
    m: int
    zs: tuple[complex, ...]
    occupations: np.ndarray = field(init=False, repr=False, compare=False)

    def __init__(self, equation: DiophantineEquation, m: int, zs: complex | Sequence[complex]):
        if m < 0:
            raise ValueError("m must be non-negative")
        zs = (zs,) if np.isscalar(zs) else tuple(zs)
        if len(zs) == 1 and equation.k != 1:
            zs = zs * equation.k
        if len(zs) != equation.k:
            raise ValueError(f"need 1 or {equation.k} coherent labels, got {len(zs)}")
        object.__setattr__(self, "equation", equation)
        object.__setattr__(self, "m", int(m))
        object.__setattr__(self, "zs", tuple(complex(z) for z in zs))
        if self.k:
            occ = np.array(np.unravel_index(np.arange(self.total_dim), (m + 1,) * self.k)).T
        else:
            occ = np.zeros((1, 0), dtype=int)
        occ.setflags(write=False)
        object.__setattr__(self, "occupations", occ)

    @property
    def k(self) -> int:
        return self.equation.k

    @property
    def dim(self) -> int:
        return self.m + 1

    @property
    def total_dim(self) -> int:
        return self.dim ** self.k

    def index_to_tuple(self, index: int) -> tuple[int, ...]:
        return tuple(int(n) for n in self.occupations[index])

    def tuple_to_index(self, occupation: Sequence[int]) -> int:
        return int(np.ravel_multi_index(tuple(occupation), (self.dim,) * self.k))


def initial_state(setup: ProblemSetup) -> np.ndarray:
    """Product of truncated coherent states, renormalized to unit norm."""
    psi = kron_all([np.ones(1, dtype=complex)]
                   + [fock.coherent_amplitudes(z, setup.m) for z in setup.zs])
    return psi / np.linalg.norm(psi)


def build_h_i(setup: ProblemSetup) -> np.ndarray:
    """Sum over modes of ``(K+ - z*)(K- - z)``, each embedded in the product space."""
    eye = np.eye(setup.dim)
    kp, km = fock.k_plus(setup.m), fock.k_minus(setup.m)
    h = np.zeros((setup.total_dim, setup.total_dim), dtype=complex)
    for mode, z in enumerate(setup.zs):
        single = (kp - np.conj(z) * eye) @ (km - z * eye)
        h += embed(single, mode, setup.k)
    return h


def h_d_diagonal(setup: ProblemSetup) -> list[int]:
    """Exact integer diagonal ``D(n_1..n_k)^2`` in basis order."""
    return [evaluate(setup.equation, setup.index_to_tuple(i)) ** 2
            for i in range(setup.total_dim)]


def build_h_d(setup: ProblemSetup) -> np.ndarray:
    """Diagonal problem Hamiltonian ``D(N_1..N_k)^2``.

    Raises
    ------
    ValueOverflow
        If any entry exceeds 2**53 and so cannot be stored exactly as a float.
    """
    diag = h_d_diagonal(setup)
    worst = max(diag)
    if worst > SAFE_INTEGER:
        i = diag.index(worst)
        raise ValueOverflow(
            f"D^2 = {worst} at {setup.index_to_tuple(i)} exceeds 2**53; lower m")
    return np.diag(np.array(diag, dtype=float)).astype(complex)


def h_a(t: float, T: float, h_i: np.ndarray, h_d: np.ndarray) -> np.ndarray:
    if not T > 0:
        raise ValueError("T must be positive")
    if not 0 <= t <= T:
        raise ValueError(f"t={t} outside [0, {T}]")
    if t == 0:
        return h_i.copy()
    if t == T:
        return h_d.copy()
    s = t / T
    return (1.0 - s) * h_i + s * h_d
