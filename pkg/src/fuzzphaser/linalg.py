"""Dense complex matrix kernel.

Hermitian eigendecomposition with eigenvalue grouping, principal matrix
square root, Kronecker products, embedding of operators on selected
subsystems, and partial traces. Everything is dense, row-major and
desk-scale: per-wire dimensions of a few dozen, joint dimensions capped
at ``DIM_CAP``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    DimensionOverflowError,
    NotHermitianError,
    NotPSDError,
    NumericalFailureError,
)

#: Absolute tolerance for Hermiticity / PSD / idempotence checks.
ATOL = 1e-9

#: Default relative gap below which eigenvalues are merged into one eigenspace.
GROUP_TOL = 1e-8

#: Hard cap on joint (tensor-product) dimensions.
DIM_CAP = 4096


def as_complex_matrix(matrix, square: bool = False) -> np.ndarray:
    """Coerce input to a finite complex128 2-D array (a fresh copy)."""
    m = np.array(matrix, dtype=np.complex128, order="C")
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def as_complex_vector(vector) -> np.ndarray:
    """Coerce input to a finite complex128 1-D array (a fresh copy)."""
    v = np.array(vector, dtype=np.complex128)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got ndim={v.ndim}")
    if not np.all(np.isfinite(v.view(np.float64))):
        raise ValueError("vector entries must be finite (no NaN/Inf)")
    return v


def max_abs(a) -> float:
    """Max-norm: largest entrywise absolute value (0 for empty input)."""
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def hermitize(matrix: np.ndarray) -> np.ndarray:
    """Return the Hermitian part (M + M†) / 2."""
    return (matrix + matrix.conj().T) / 2


def is_hermitian(matrix: np.ndarray, tol: float = ATOL) -> bool:
    """Check ‖M − M†‖_max ≤ tol."""
    return max_abs(matrix - matrix.conj().T) <= tol


def frozen(a: np.ndarray) -> np.ndarray:
    """Return a read-only view-safe copy of an array."""
    out = np.array(a)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Eigenvalue/eigenspace-projector pairs of a Hermitian matrix.

    Terms are ordered by strictly decreasing eigenvalue; each projector
    covers the full (possibly degenerate) eigenspace, so a basis rotation
    inside a degenerate space cannot change the decomposition.
    """

    terms: tuple[tuple[float, np.ndarray], ...]
    dim: int

    def __post_init__(self):
        if self.dim <= 0:
            raise ValueError("dim must be positive")
        ranks = 0
        prev = math.inf
        projs = [p for _, p in self.terms]
        for value, proj in self.terms:
            if value >= prev:
                raise ValueError("eigenvalues must be strictly decreasing")
            prev = value
            if proj.shape != (self.dim, self.dim):
                raise ValueError("projector has wrong shape")
            if max_abs(proj @ proj - proj) > ATOL or not is_hermitian(proj):
                raise ValueError("projector is not Hermitian idempotent")
            ranks += int(round(float(np.trace(proj).real)))
        for i in range(len(projs)):
            for j in range(i + 1, len(projs)):
                if max_abs(projs[i] @ projs[j]) > ATOL:
                    raise ValueError("projectors are not mutually orthogonal")
        if ranks != self.dim:
            raise ValueError(
                f"eigenspace ranks sum to {ranks}, expected {self.dim}"
            )

    @property
    def eigenvalues(self) -> tuple[float, ...]:
        return tuple(value for value, _ in self.terms)

    @property
    def projectors(self) -> tuple[np.ndarray, ...]:
        return tuple(proj for _, proj in self.terms)

    def reconstruct(self) -> np.ndarray:
        """Σᵢ xᵢ Pᵢ."""
        out = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for value, proj in self.terms:
            out += value * proj
        return out


def grouped_eigh(
    matrix, group_tol: float = GROUP_TOL
) -> list[tuple[float, np.ndarray]]:
    """Eigendecompose a Hermitian matrix, merging near-degenerate eigenvalues.

    Eigenvalues whose adjacent gap is at most ``group_tol * max(1, ‖M‖)``
    (spectral norm) are merged into one group. Returns (value, column
    block of orthonormal eigenvectors) pairs, values strictly decreasing;
    the group value is the mean of its members.
    """
    m = as_complex_matrix(matrix, square=True)
    if not is_hermitian(m):
        raise NotHermitianError(
            f"matrix is not Hermitian within {ATOL} "
            f"(deviation {max_abs(m - m.conj().T):.3g})"
        )
    try:
        evals, evecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"eigensolver failed: {exc}") from exc
    threshold = group_tol * max(1.0, max_abs(evals))
    boundaries = [0]
    for i in range(1, evals.size):
        if evals[i] - evals[i - 1] > threshold:
            boundaries.append(i)
    boundaries.append(evals.size)
    groups = [
        (float(np.mean(evals[a:b])), evecs[:, a:b])
        for a, b in zip(boundaries[:-1], boundaries[1:])
    ]
    groups.reverse()
    return groups


def hermitian_eig(matrix, group_tol: float = GROUP_TOL) -> SpectralDecomposition:
    """Eigendecompose a Hermitian matrix into eigenspace projectors.

    Near-degenerate eigenvalues are merged per ``grouped_eigh``, which
    keeps downstream updates well-defined under near-degeneracy: the
    projector, not any eigenvector choice, is the canonical object.
    """
    groups = grouped_eigh(matrix, group_tol=group_tol)
    terms = tuple(
        (value, frozen(hermitize(vecs @ vecs.conj().T))) for value, vecs in groups
    )
    return SpectralDecomposition(terms=terms, dim=int(np.asarray(matrix).shape[0]))


def matrix_sqrt(matrix, tol: float = ATOL) -> np.ndarray:
    """Principal square root of a PSD matrix.

    Eigenvalues in [-tol, 0) are treated as roundoff and clipped to 0;
    anything below -tol means the input is genuinely indefinite.
    """
    m = as_complex_matrix(matrix, square=True)
    if not is_hermitian(m):
        raise NotPSDError("matrix is not Hermitian, so not PSD")
    try:
        evals, evecs = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(f"eigensolver failed: {exc}") from exc
    if evals.size and evals[0] < -tol:
        raise NotPSDError(f"matrix has eigenvalue {evals[0]:.3g} < -{tol}")
    roots = np.sqrt(np.clip(evals, 0.0, None))
    return hermitize((evecs * roots) @ evecs.conj().T)


def min_eigenvalue(matrix) -> float:
    """Smallest eigenvalue of a Hermitian matrix (input is hermitized)."""
    m = as_complex_matrix(matrix, square=True)
    evals = np.linalg.eigvalsh(hermitize(m))
    return float(evals[0]) if evals.size else 0.0


def kron(a, b, dim_cap: int = DIM_CAP) -> np.ndarray:
    """Kronecker product with a joint-dimension cap."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if max(rows, cols) > dim_cap:
        raise DimensionOverflowError(
            f"kron result is {rows}x{cols}, exceeding the cap {dim_cap}"
        )
    return np.kron(a, b)


def kron_all(matrices: Iterable[np.ndarray], dim_cap: int = DIM_CAP) -> np.ndarray:
    """Left-to-right Kronecker product of a sequence (identity for empty)."""
    out = np.eye(1, dtype=np.complex128)
    for m in matrices:
        out = kron(out, m, dim_cap=dim_cap)
    return out


def _check_slots(slots, n: int) -> list[int]:
    if isinstance(slots, (set, frozenset)):
        slot_list = sorted(slots)
    else:
        slot_list = [int(s) for s in slots]
    if len(set(slot_list)) != len(slot_list):
        raise DimensionMismatchError(f"slots must be distinct, got {slot_list}")
    for s in slot_list:
        if not 0 <= s < n:
            raise DimensionMismatchError(f"slot {s} out of range for {n} wires")
    return slot_list


def embed_on_subsystem(op, slot_dims: Sequence[int], slots) -> np.ndarray:
    """Extend ``op`` by identities so it acts on the selected tensor factors.

    ``slots`` is a sequence of wire indices; its order fixes which tensor
    factor of ``op`` acts on which wire (a plain set is applied in sorted
    order). Non-contiguous or permuted slots are handled by index
    permutation; ascending contiguous slots take a direct kron fast path.
    """
    dims = [int(d) for d in slot_dims]
    if any(d <= 0 for d in dims):
        raise DimensionMismatchError(f"wire dimensions must be positive: {dims}")
    n = len(dims)
    slot_list = _check_slots(slots, n)
    op = as_complex_matrix(op, square=True)
    op_dim = math.prod(dims[s] for s in slot_list)
    if op.shape[0] != op_dim:
        raise DimensionMismatchError(
            f"operator dim {op.shape[0]} != product of slot dims {op_dim}"
        )
    total = math.prod(dims)
    if total > DIM_CAP:
        raise DimensionOverflowError(
            f"joint dimension {total} exceeds the cap {DIM_CAP}"
        )
    lo, hi = min(slot_list, default=0), max(slot_list, default=-1)
    if slot_list == list(range(lo, hi + 1)):
        left = np.eye(math.prod(dims[:lo]), dtype=np.complex128)
        right = np.eye(math.prod(dims[hi + 1 :]), dtype=np.complex128)
        return np.kron(np.kron(left, op), right)
    rest = [w for w in range(n) if w not in slot_list]
    order = slot_list + rest
    full = np.kron(op, np.eye(total // op_dim, dtype=np.complex128))
    tens = full.reshape([dims[w] for w in order] * 2)
    inv = np.argsort(order)
    tens = tens.transpose(list(inv) + [n + int(i) for i in inv])
    return np.ascontiguousarray(tens.reshape(total, total))


def partial_trace(matrix, dims: Sequence[int], keep) -> np.ndarray:
    """Trace out every wire not in ``keep`` (kept wires stay in wire order)."""
    dims = [int(d) for d in dims]
    m = as_complex_matrix(matrix, square=True)
    total = math.prod(dims)
    if m.shape[0] != total:
        raise DimensionMismatchError(
            f"matrix dim {m.shape[0]} != product of wire dims {total}"
        )
    keep_list = sorted(_check_slots(keep, len(dims)))
    tens = m.reshape(dims * 2)
    current = list(range(len(dims)))
    for w in sorted(set(current) - set(keep_list), reverse=True):
        pos = current.index(w)
        tens = np.trace(tens, axis1=pos, axis2=len(current) + pos)
        current.remove(w)
    kept_dim = math.prod(dims[w] for w in keep_list)
    return np.ascontiguousarray(tens.reshape(kept_dim, kept_dim))
