"""Cayley-transform integration of the interpolated Schrodinger equation (hbar = 1)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .hamiltonian import ProblemSetup, build_h_d, build_h_i, h_a, initial_state
from .linalg import solve

__all__ = [
    "EvolutionConfig", "Trajectory", "cayley_step", "evolve", "p_max",
    "number_expectation", "STATE_STORAGE_LIMIT", "DEGENERACY_TOL",
]

STATE_STORAGE_LIMIT = 1024
DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class EvolutionConfig:
    T: float
    dt: float = 1.0
    midpoint_rule: bool = True

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if not self.T > 0:
            raise ValueError(f"T must be positive, got {self.T}")
        if self.T / self.dt < 1 - 1e-12:
            raise ValueError(f"T/dt must be at least 1 (T={self.T}, dt={self.dt})")

    @property
    def n_steps(self) -> int:
        n = round(self.T / self.dt)
        if abs(n * self.dt - self.T) > 1e-9 * max(self.T, 1.0):
            raise ValueError(f"T={self.T} is not a whole number of steps dt={self.dt}")
        return n


@dataclass(frozen=True)
class Trajectory:
    """Samples of one evolution of length ``T``; index 0 is the initial state.

    ``states`` is ``None`` when the space is larger than
    :data:`STATE_STORAGE_LIMIT`; the per-sample summaries are always kept.
    """

    T: float
    dt: float
    times: np.ndarray
    p_max: np.ndarray
    argmax: tuple[tuple[int, ...], ...]
    degenerate: tuple[bool, ...]
    norm_drift: np.ndarray
    states: Optional[np.ndarray]
    final_state: np.ndarray

    @property
    def n_steps(self) -> int:
        return len(self.times) - 1

    def probabilities(self) -> Optional[np.ndarray]:
        return None if self.states is None else np.abs(self.states) ** 2


def cayley_step(h: np.ndarray, dt: float, psi: np.ndarray) -> np.ndarray:
    """``(1 + i dt h/2)^-1 (1 - i dt h/2) psi``; exactly unitary for Hermitian ``h``."""
    half = 0.5j * dt * h
    a = half.copy()
    a[np.diag_indices_from(a)] += 1.0
    return solve(a, psi - half @ psi)


def p_max(psi: np.ndarray, setup: ProblemSetup) -> tuple[float, tuple[int, ...], bool]:
    """Largest basis-state probability, its occupation tuple, and whether it is tied."""
    probs = np.abs(psi) ** 2
    i = int(np.argmax(probs))
    best = float(probs[i])
    degenerate = int(np.count_nonzero(probs >= best - DEGENERACY_TOL)) > 1
    return best, setup.index_to_tuple(i), degenerate


def number_expectation(psi: np.ndarray, setup: ProblemSetup, mode: int) -> float:
    """``<psi|N_mode|psi>`` for the number operator embedded on ``mode``."""
    if not 0 <= mode < setup.k:
        raise IndexError(f"mode {mode} out of range for k={setup.k}")
    probs = np.abs(psi) ** 2
    return float(probs @ setup.occupations[:, mode])


def evolve(setup: ProblemSetup, config: EvolutionConfig,
           h_i: np.ndarray | None = None, h_d: np.ndarray | None = None) -> Trajectory:
    """Run one adiabatic passage of duration ``config.T`` from the coherent product state.

    The Hamiltonian for the step ``[t_j, t_j + dt]`` is taken at ``t_j + dt/2``
    when ``config.midpoint_rule`` is set and at ``t_j`` otherwise. ``h_i`` and
    ``h_d`` may be passed in to reuse them across a sweep.
    """
    if h_i is None:
        h_i = build_h_i(setup)
    if h_d is None:
        h_d = build_h_d(setup)
    n, dt, T = config.n_steps, config.dt, config.T
    offset = 0.5 * dt if config.midpoint_rule else 0.0
    keep_states = setup.total_dim <= STATE_STORAGE_LIMIT

    psi = initial_state(setup)
    times = dt * np.arange(n + 1)
    times[-1] = T
    pm = np.empty(n + 1)
    drift = np.empty(n + 1)
    argmax, degenerate = [], []
    states = np.empty((n + 1, setup.total_dim), dtype=complex) if keep_states else None

    for j in range(n + 1):
        if j:
            t = min(dt * (j - 1) + offset, T)
            psi = cayley_step(h_a(t, T, h_i, h_d), dt, psi)
        p, tup, deg = p_max(psi, setup)
        pm[j] = p
        argmax.append(tup)
        degenerate.append(deg)
        drift[j] = np.linalg.norm(psi) - 1.0
        if keep_states:
            states[j] = psi
    for arr in (times, pm, drift) + ((states,) if keep_states else ()):
        arr.setflags(write=False)
    final = psi.copy()
    final.setflags(write=False)
    return Trajectory(T, dt, times, pm, tuple(argmax), tuple(degenerate), drift, states, final)
