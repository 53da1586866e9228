"""Truncated-Fock-space simulator of an adiabatic decision procedure for Diophantine equations."""
from .decision import (Inconclusive, NoSolutionWithinTruncation, SolvableWithWitness,
                       SweepConfig, Verdict, run_algorithm, verdict_crosscheck)
from .diophantine import DiophantineEquation, brute_force_search, evaluate, parse, to_source
from .errors import (DiophantineSyntaxError, DomainError, NegativeExponent, SingularMatrix,
                     ValueOverflow)
from .evolution import EvolutionConfig, Trajectory, cayley_step, evolve, number_expectation, p_max
from .fock import (bessel_i2, coherent_amplitudes, energy_level, k3, k_minus, k_plus,
                   norm_defect, number_op, truncation_dimension)
from .hamiltonian import ProblemSetup, build_h_d, build_h_i, h_a, initial_state
from .linalg import kron, solve

__version__ = "0.1.0"
