"""Density matrices as meaning states.

States may be sub- or super-normalized: updates deliberately change the
trace, and nothing here renormalizes silently. ``renormalize`` is the
one explicit exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import linalg
from .errors import DimensionMismatchError, IncompleteFamilyError, ZeroTraceError

#: Traces at or below this are treated as an annihilated state.
TRACE_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class PureState:
    """A ket with arbitrary (positive) norm; amplitudes need not be unit."""

    amplitudes: np.ndarray

    def __init__(self, amplitudes):
        amps = linalg.as_complex_vector(amplitudes)
        if amps.size == 0:
            raise ValueError("state must have positive dimension")
        if float(np.linalg.norm(amps)) == 0.0:
            raise ValueError("state must have nonzero norm")
        object.__setattr__(self, "amplitudes", linalg.frozen(amps))

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "PureState":
        return PureState(self.amplitudes / self.norm())

    @staticmethod
    def basis(dim: int, index: int) -> "PureState":
        amps = np.zeros(dim, dtype=np.complex128)
        amps[index] = 1.0
        return PureState(amps)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian PSD matrix; trace may be any non-negative real."""

    matrix: np.ndarray

    def __init__(self, matrix):
        m = linalg.as_complex_matrix(matrix, square=True)
        if not linalg.is_hermitian(m):
            raise ValueError(
                f"density matrix must be Hermitian within {linalg.ATOL}"
            )
        if linalg.min_eigenvalue(m) < -linalg.ATOL:
            raise ValueError(
                f"density matrix must be PSD within {linalg.ATOL}"
            )
        object.__setattr__(self, "matrix", linalg.frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    @staticmethod
    def identity(dim: int) -> "DensityMatrix":
        return DensityMatrix(np.eye(dim))

    @staticmethod
    def maximally_mixed(dim: int) -> "DensityMatrix":
        return DensityMatrix(np.eye(dim) / dim)


@dataclass(frozen=True, eq=False)
class Projector:
    """Hermitian idempotent matrix (a Birkhoff-von Neumann proposition)."""

    matrix: np.ndarray

    def __init__(self, matrix):
        m = linalg.as_complex_matrix(matrix, square=True)
        if not linalg.is_hermitian(m):
            raise ValueError("projector must be Hermitian")
        if linalg.max_abs(m @ m - m) > linalg.ATOL:
            raise ValueError(
                f"projector must be idempotent within {linalg.ATOL}"
            )
        object.__setattr__(self, "matrix", linalg.frozen(m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @staticmethod
    def onto_pure(psi: PureState) -> "Projector":
        """Rank-1 projector onto the ray of ``psi`` (normalized internally)."""
        v = psi.amplitudes / psi.norm()
        return Projector(np.outer(v, v.conj()))

    @staticmethod
    def identity(dim: int) -> "Projector":
        return Projector(np.eye(dim))


def from_pure(psi: PureState) -> DensityMatrix:
    """|ψ⟩⟨ψ| (rank 1, trace ‖ψ‖²)."""
    v = psi.amplitudes
    return DensityMatrix(np.outer(v, v.conj()))


def projector_update(rho: DensityMatrix, p: Projector) -> DensityMatrix:
    """Impose the proposition ``p``: P ρ P. Trace-non-increasing."""
    if rho.dim != p.dim:
        raise DimensionMismatchError(
            f"state dim {rho.dim} != projector dim {p.dim}"
        )
    return DensityMatrix(linalg.hermitize(p.matrix @ rho.matrix @ p.matrix))


def decohere(rho: DensityMatrix, projectors: Sequence[Projector]) -> DensityMatrix:
    """Σᵢ Pᵢ ρ Pᵢ over an orthogonal complete projector family.

    Trace-preserving; with a rank-1 orthonormal family this keeps the
    diagonal and zeroes the off-diagonal entries in that basis.
    """
    if not projectors:
        raise IncompleteFamilyError("empty projector family")
    total = np.zeros((rho.dim, rho.dim), dtype=np.complex128)
    for p in projectors:
        if p.dim != rho.dim:
            raise DimensionMismatchError(
                f"projector dim {p.dim} != state dim {rho.dim}"
            )
        total += p.matrix
    if linalg.max_abs(total - np.eye(rho.dim)) > linalg.ATOL:
        raise IncompleteFamilyError(
            "projectors do not form an orthogonal resolution of the identity"
        )
    out = np.zeros_like(total)
    for p in projectors:
        out += p.matrix @ rho.matrix @ p.matrix
    return DensityMatrix(linalg.hermitize(out))


def renormalize(rho: DensityMatrix) -> DensityMatrix:
    """Scale to unit trace; raises ZeroTraceError on annihilated states."""
    tr = rho.trace
    if tr <= TRACE_FLOOR:
        raise ZeroTraceError(
            f"trace {tr:.3g} is at or below the floor {TRACE_FLOOR}; "
            "the update annihilated the state"
        )
    return DensityMatrix(rho.matrix / tr)


def purity(rho: DensityMatrix) -> float:
    """trace(ρ²)/trace(ρ)²; equals 1 exactly for rank-1 states."""
    tr = rho.trace
    if tr <= TRACE_FLOOR:
        raise ZeroTraceError(f"trace {tr:.3g} is too small to define purity")
    tr2 = float(np.trace(rho.matrix @ rho.matrix).real)
    return tr2 / (tr * tr)
