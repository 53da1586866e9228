"""Outer loop: lengthen the passage time until one number state holds more than half the probability.

The verdict is read off the dominant state: it is a witness when the equation
vanishes there, otherwise the equation has no solution inside the truncated
box ``{0..m}^k``. A no-solution outcome always carries that bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .diophantine import DiophantineEquation, brute_force_search, evaluate
from .evolution import EvolutionConfig, Trajectory, evolve
from .hamiltonian import ProblemSetup, build_h_d, build_h_i

__all__ = [
    "SweepConfig", "SolvableWithWitness", "NoSolutionWithinTruncation", "Inconclusive",
    "Verdict", "run_algorithm", "verdict_crosscheck", "sweep_times",
]

THRESHOLD = 0.5


@dataclass(frozen=True)
class SweepConfig:
    t_initial: float = 5.0
    t_increment: float = 5.0
    t_max: float = 200.0
    dt: float = 1.0
    midpoint_rule: bool = True

    def __post_init__(self):
        if not self.t_initial > 0 or not self.t_increment > 0 or not self.dt > 0:
            raise ValueError("t_initial, t_increment and dt must be positive")
        if self.t_initial > self.t_max:
            raise ValueError(f"t_initial={self.t_initial} exceeds t_max={self.t_max}")


@dataclass(frozen=True)
class SolvableWithWitness:
    witness: tuple[int, ...]


@dataclass(frozen=True)
class NoSolutionWithinTruncation:
    """The dominant state is not a root; only ``{0..bound}^k`` has been ruled out."""

    ground: tuple[int, ...]
    bound: int


@dataclass(frozen=True)
class Inconclusive:
    reason: str


Outcome = Union[SolvableWithWitness, NoSolutionWithinTruncation, Inconclusive]


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    crossing_T: float | None
    final_p_max: float
    degenerate: bool
    trajectories: dict[float, Trajectory] = field(default_factory=dict, repr=False, compare=False)

    @property
    def name(self) -> str:
        return type(self.outcome).__name__


def sweep_times(sweep: SweepConfig) -> list[float]:
    times = []
    j = 0
    while True:
        T = sweep.t_initial + j * sweep.t_increment
        if T > sweep.t_max * (1 + 1e-12):
            return times
        times.append(T)
        j += 1


def run_algorithm(setup: ProblemSetup, sweep: SweepConfig | None = None,
                  keep_trajectories: bool = True) -> Verdict:
    """Sweep ``T`` upward and stop at the first final state with ``P_max > 1/2``.

    Each ``T`` is an independent passage from the initial state. A tie for the
    dominant state at the crossing gives :class:`Inconclusive`, as does
    reaching ``t_max`` without a crossing.
    """
    sweep = sweep or SweepConfig()
    h_i, h_d = build_h_i(setup), build_h_d(setup)
    trajectories: dict[float, Trajectory] = {}
    p_final = 0.0
    for T in sweep_times(sweep):
        traj = evolve(setup, EvolutionConfig(T, sweep.dt, sweep.midpoint_rule), h_i, h_d)
        if keep_trajectories:
            trajectories[T] = traj
        p_final, tup, degenerate = float(traj.p_max[-1]), traj.argmax[-1], traj.degenerate[-1]
        if p_final <= THRESHOLD:
            continue
        if degenerate:
            outcome = Inconclusive("degenerate ground state")
        elif evaluate(setup.equation, tup) == 0:
            outcome = SolvableWithWitness(tup)
        else:
            outcome = NoSolutionWithinTruncation(tup, setup.m)
        return Verdict(outcome, T, p_final, degenerate, trajectories)
    return Verdict(Inconclusive("no adiabatic crossing by t_max"), None, p_final, False,
                   trajectories)


def verdict_crosscheck(verdict: Verdict, equation: DiophantineEquation, m: int) -> bool:
    """Compare a verdict with exhaustive search over ``{0..m}^k``."""
    outcome = verdict.outcome
    if isinstance(outcome, Inconclusive):
        raise ValueError("cannot cross-check an inconclusive verdict")
    solutions = brute_force_search(equation, m)
    if isinstance(outcome, SolvableWithWitness):
        return outcome.witness in solutions
    return not solutions
