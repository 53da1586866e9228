"""Dense complex linear algebra used by the simulator.

Composite indices are row-major over modes: for ``kron(a, b)`` the index is
``i_a * dim(b) + i_b``, so mode 1 varies slowest.
"""
from __future__ import annotations

from functools import reduce

import numpy as np

from .errors import SingularMatrix

__all__ = ["kron", "kron_all", "solve", "is_hermitian", "embed"]


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def kron_all(mats) -> np.ndarray:
    return reduce(np.kron, mats)


def embed(op: np.ndarray, mode: int, k: int) -> np.ndarray:
    """Place single-mode ``op`` on ``mode`` of a ``k``-mode product space."""
    eye = np.eye(op.shape[0])
    return kron_all([op if i == mode else eye for i in range(k)])


def solve(a: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """LU solve of ``a x = rhs``; raises :class:`SingularMatrix` on a zero pivot."""
    try:
        return np.linalg.solve(a, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrix(str(exc)) from exc


def is_hermitian(a: np.ndarray, rtol: float = 1e-12) -> bool:
    scale = np.max(np.abs(a)) if a.size else 0.0
    return bool(np.max(np.abs(a - a.conj().T), initial=0.0) <= rtol * scale)
