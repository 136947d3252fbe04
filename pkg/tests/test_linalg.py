import numpy as np
import pytest

from fuzzphaser import linalg
from fuzzphaser.errors import (
    DimensionMismatchError,
    DimensionOverflowError,
    NotHermitianError,
    NotPSDError,
)
from fuzzphaser.sampling import random_unitary


def _hermitian(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return linalg.hermitize(g)


class TestCoercion:
    def test_as_complex_matrix_copies_and_casts(self):
        src = np.eye(2)
        out = linalg.as_complex_matrix(src)
        assert out.dtype == np.complex128
        out_writable = np.array(out)
        out_writable[0, 0] = 5.0
        assert src[0, 0] == 1.0

    def test_as_complex_matrix_rejects_bad_shapes(self):
        with pytest.raises(ValueError):
            linalg.as_complex_matrix([1.0, 2.0])
        with pytest.raises(ValueError):
            linalg.as_complex_matrix([[1.0, 2.0]], square=True)
        with pytest.raises(ValueError):
            linalg.as_complex_matrix([[np.nan, 0.0], [0.0, 1.0]])

    def test_as_complex_vector_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            linalg.as_complex_vector([1.0, np.inf])

    def test_max_abs(self):
        assert linalg.max_abs(np.array([[1.0, -3.0], [2.0, 0.5]])) == 3.0
        assert linalg.max_abs(np.array([])) == 0.0

    def test_hermitize_and_check(self):
        m = np.array([[1.0, 2.0], [0.0, 3.0]])
        h = linalg.hermitize(m)
        assert linalg.is_hermitian(h)
        assert not linalg.is_hermitian(m)


class TestGroupedEigh:
    def test_exact_degeneracy_merges(self):
        groups = linalg.grouped_eigh(np.diag([3.0, 1.0, 1.0]))
        assert len(groups) == 2
        assert groups[0][0] == pytest.approx(3.0)
        assert groups[1][0] == pytest.approx(1.0)
        assert groups[0][1].shape == (3, 1)
        assert groups[1][1].shape == (3, 2)

    def test_near_degeneracy_merges(self):
        # gap 5e-13 is far below GROUP_TOL * max(1, norm)
        groups = linalg.grouped_eigh(np.diag([3.0, 1.0 + 5e-13, 1.0]))
        assert len(groups) == 2
        assert groups[1][1].shape == (3, 2)

    def test_distinct_values_stay_separate(self):
        groups = linalg.grouped_eigh(np.diag([3.0, 1.5, 1.0]))
        assert [round(v, 6) for v, _ in groups] == [3.0, 1.5, 1.0]

    def test_values_strictly_decreasing(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            vals = [v for v, _ in linalg.grouped_eigh(_hermitian(5, rng))]
            assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError):
            linalg.grouped_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestSpectralDecomposition:
    def test_reconstruct_random(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            m = _hermitian(4, rng)
            decomp = linalg.hermitian_eig(m)
            assert linalg.max_abs(decomp.reconstruct() - m) < 1e-9

    def test_projectors_resolve_identity(self):
        decomp = linalg.hermitian_eig(np.diag([2.0, 2.0, 5.0]))
        total = sum(decomp.projectors)
        assert linalg.max_abs(total - np.eye(3)) < 1e-12
        assert decomp.eigenvalues == pytest.approx((5.0, 2.0))

    def test_degenerate_projector_is_basis_free(self):
        # rotate inside the degenerate eigenspace; projector cannot move
        rng = np.random.default_rng(3)
        u = random_unitary(2, rng)
        rot = np.block([
            [u, np.zeros((2, 1))],
            [np.zeros((1, 2)), np.ones((1, 1))],
        ])
        m = np.diag([1.0, 1.0, 4.0])
        rotated = rot @ m @ rot.conj().T
        p1 = linalg.hermitian_eig(m).projectors[1]
        p2 = linalg.hermitian_eig(linalg.hermitize(rotated)).projectors[1]
        assert linalg.max_abs(p1 - p2) < 1e-9


class TestMatrixSqrt:
    def test_oracle(self):
        root = linalg.matrix_sqrt(np.array([[2.0, 1.0], [1.0, 2.0]]))
        s = np.sqrt(3.0)
        expected = np.array([[(s + 1) / 2, (s - 1) / 2], [(s - 1) / 2, (s + 1) / 2]])
        assert linalg.max_abs(root - expected) < 1e-12

    def test_squares_back(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            sigma = g @ g.conj().T
            root = linalg.matrix_sqrt(sigma)
            assert linalg.max_abs(root @ root - sigma) < 1e-9
            assert linalg.min_eigenvalue(root) > -1e-12

    def test_roundoff_negative_is_clipped(self):
        m = np.diag([1.0, -1e-12])
        root = linalg.matrix_sqrt(m)
        assert root[1, 1] == 0.0

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSDError):
            linalg.matrix_sqrt(np.diag([1.0, -0.5]))
        with pytest.raises(NotPSDError):
            linalg.matrix_sqrt(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestKron:
    def test_kron_matches_numpy(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        b = np.eye(3)
        assert np.array_equal(linalg.kron(a, b), np.kron(a, b))

    def test_kron_all_empty_is_scalar_identity(self):
        assert np.array_equal(linalg.kron_all([]), np.eye(1))

    def test_cap_enforced(self):
        big = np.eye(100)
        with pytest.raises(DimensionOverflowError):
            linalg.kron(big, big)


class TestEmbed:
    def test_single_slot(self):
        x = np.array([[0.0, 1.0], [1.0, 0.0]])
        out = linalg.embed_on_subsystem(x, [2, 2], [1])
        assert linalg.max_abs(out - np.kron(np.eye(2), x)) == 0.0

    def test_slot_order_permutes_factors(self):
        z = np.diag([1.0, -1.0])
        x = np.array([[0.0, 1.0], [1.0, 0.0]])
        op = np.kron(z, x)
        out = linalg.embed_on_subsystem(op, [2, 2], [1, 0])
        assert linalg.max_abs(out - np.kron(x, z)) < 1e-12

    def test_non_contiguous_slots(self):
        rng = np.random.default_rng(9)
        a = _hermitian(2, rng)
        b = _hermitian(2, rng)
        op = np.kron(a, b)
        out = linalg.embed_on_subsystem(op, [2, 3, 2], [0, 2])
        expected = np.kron(np.kron(a, np.eye(3)), b)
        assert linalg.max_abs(out - expected) < 1e-12

    def test_set_slots_apply_sorted(self):
        z = np.diag([1.0, -1.0])
        x = np.array([[0.0, 1.0], [1.0, 0.0]])
        op = np.kron(z, x)
        out = linalg.embed_on_subsystem(op, [2, 2], {1, 0})
        assert linalg.max_abs(out - op) < 1e-12

    def test_rejects_bad_slots(self):
        with pytest.raises(DimensionMismatchError):
            linalg.embed_on_subsystem(np.eye(2), [2, 2], [0, 0])
        with pytest.raises(DimensionMismatchError):
            linalg.embed_on_subsystem(np.eye(2), [2, 2], [5])
        with pytest.raises(DimensionMismatchError):
            linalg.embed_on_subsystem(np.eye(3), [2, 2], [0])


class TestPartialTrace:
    def test_kron_factors_recovered(self):
        a = np.array([[2.0, 1.0], [1.0, 3.0]])
        b = np.array([[1.0, 0.5], [0.5, 4.0]])
        joint = np.kron(a, b)
        keep0 = linalg.partial_trace(joint, [2, 2], [0])
        keep1 = linalg.partial_trace(joint, [2, 2], [1])
        assert linalg.max_abs(keep0 - 5.0 * a) < 1e-12
        assert linalg.max_abs(keep1 - 5.0 * b) < 1e-12

    def test_three_wires(self):
        rng = np.random.default_rng(13)
        parts = [_hermitian(d, rng) for d in (2, 3, 2)]
        joint = np.kron(np.kron(parts[0], parts[1]), parts[2])
        traces = [np.trace(p) for p in parts]
        out = linalg.partial_trace(joint, [2, 3, 2], [1])
        expected = traces[0] * traces[2] * parts[1]
        assert linalg.max_abs(out - expected) < 1e-9

    def test_keep_all_is_identity_map(self):
        rng = np.random.default_rng(17)
        m = _hermitian(6, rng)
        out = linalg.partial_trace(m, [2, 3], [0, 1])
        assert linalg.max_abs(out - m) == 0.0

    def test_dimension_check(self):
        with pytest.raises(DimensionMismatchError):
            linalg.partial_trace(np.eye(5), [2, 2], [0])
