import numpy as np
import pytest

from helpers import random_state
from qfrt import linalg
from qfrt.base_transforms import (
    BaseTransform,
    cst1_transform,
    cst4_transform,
    dct4_matrix,
    dft_matrix,
    dst4_matrix,
    fourier_transform,
    hartley_transform,
    make_transform,
    verify_order,
)
from qfrt.circuits import H, circuit_unitary, phase
from qfrt.errors import NotDyadicOrderError

F2_EXPECTED = 0.5 * np.array(
    [[1, 1, 1, 1], [1, -1j, -1, 1j], [1, -1, 1, -1], [1, 1j, -1, -1j]]
)

DHT4_EXPECTED = 0.5 * np.array(
    [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], dtype=complex
)

_S2 = 2.0 ** -0.5

# 3-point DCT-I block, 1-point DST-I block.
CST1_N1_EXPECTED = np.array(
    [
        [0.5, _S2, 0.5, 0],
        [_S2, 0.0, -_S2, 0],
        [0.5, -_S2, 0.5, 0],
        [0.0, 0.0, 0.0, 1],
    ],
    dtype=complex,
)

_C1, _C3 = np.cos(np.pi / 8), np.cos(3 * np.pi / 8)
_S1, _S3 = np.sin(np.pi / 8), np.sin(3 * np.pi / 8)
CST4_N1_EXPECTED = np.array(
    [
        [_C1, _C3, 0, 0],
        [_C3, -_C1, 0, 0],
        [0, 0, _S1, _S3],
        [0, 0, _S3, -_S1],
    ],
    dtype=complex,
)


class TestFourier:
    def test_single_qubit_is_hadamard(self):
        t = fourier_transform(1)
        assert linalg.max_norm_diff(t.dense, H) <= 1e-15
        assert linalg.max_norm_diff(linalg.matrix_power(t.dense, 4), np.eye(2)) <= 1e-12

    def test_two_qubit_matrix(self):
        assert linalg.max_norm_diff(fourier_transform(2).dense, F2_EXPECTED) <= 1e-12

    def test_order_four(self):
        t = fourier_transform(3)
        assert t.order_exponent == 2 and t.order == 4
        assert linalg.max_norm_diff(linalg.matrix_power(t.dense, 4), np.eye(8)) <= 1e-10

    @pytest.mark.parametrize("q", [1, 2, 3, 4])
    def test_circuit_matches_dense(self, q):
        t = fourier_transform(q)
        assert t.circuit is not None
        assert linalg.max_norm_diff(circuit_unitary(t.circuit), t.dense) <= 1e-8


class TestHartley:
    def test_single_qubit_is_hadamard(self):
        assert linalg.max_norm_diff(hartley_transform(1).dense, H) <= 1e-15

    def test_two_qubit_matrix(self):
        assert linalg.max_norm_diff(hartley_transform(2).dense, DHT4_EXPECTED) <= 1e-14

    @pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
    def test_involution(self, q):
        d = hartley_transform(q).dense
        assert linalg.max_norm_diff(d @ d, np.eye(1 << q)) <= 1e-12

    @pytest.mark.parametrize("q", [1, 2, 3, 4, 5])
    def test_cas_equals_re_minus_im_of_dft(self, q):
        f = dft_matrix(1 << q)
        assert linalg.max_norm_diff(hartley_transform(q).dense, f.real - f.imag) <= 1e-12


class TestCst1:
    def test_smallest_block(self):
        t = cst1_transform(1)
        assert t.data_qubits == 2
        assert linalg.max_norm_diff(t.dense, CST1_N1_EXPECTED) <= 1e-14

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_involution(self, n):
        d = cst1_transform(n).dense
        assert linalg.max_norm_diff(d @ d, np.eye(d.shape[0])) <= 1e-10

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_cross_block_entries_exactly_zero(self, n):
        d = cst1_transform(n).dense
        cut = (1 << n) + 1
        assert np.all(d[:cut, cut:] == 0)
        assert np.all(d[cut:, :cut] == 0)


class TestCst4:
    def test_smallest_block(self):
        t = cst4_transform(1)
        assert t.data_qubits == 2
        assert linalg.max_norm_diff(t.dense, CST4_N1_EXPECTED) <= 1e-14
        # involutory because cos^2(pi/8) + cos^2(3 pi/8) = 1
        assert linalg.max_norm_diff(t.dense @ t.dense, np.eye(4)) <= 1e-12

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_involution(self, n):
        d = cst4_transform(n).dense
        assert linalg.max_norm_diff(d @ d, np.eye(d.shape[0])) <= 1e-10

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_selector_qubit(self, n):
        rng = np.random.default_rng(20 + n)
        t = cst4_transform(n)
        big_n = 1 << n
        u = random_state(n, rng)
        cos_in = np.concatenate([u, np.zeros(big_n)])
        cos_out = t.dense @ cos_in
        assert np.max(np.abs(cos_out[big_n:])) == 0.0
        assert np.max(np.abs(cos_out[:big_n] - dct4_matrix(big_n) @ u)) <= 1e-10
        sin_in = np.concatenate([np.zeros(big_n), u])
        sin_out = t.dense @ sin_in
        assert np.max(np.abs(sin_out[:big_n])) == 0.0
        assert np.max(np.abs(sin_out[big_n:] - dst4_matrix(big_n) @ u)) <= 1e-10


@pytest.mark.parametrize(
    "transform",
    [hartley_transform(2), hartley_transform(3), cst1_transform(2), cst4_transform(2)],
    ids=["hartley2", "hartley3", "cst1_2", "cst4_2"],
)
def test_involutions_are_real_symmetric(transform):
    d = transform.dense
    assert np.max(np.abs(d.imag)) <= 1e-12
    assert linalg.max_norm_diff(d, d.T) <= 1e-12


class TestVerifyOrder:
    def test_hartley(self):
        assert verify_order(hartley_transform(3)) == 1

    def test_fourier(self):
        assert verify_order(fourier_transform(3)) == 2
        assert verify_order(fourier_transform(2)) == 2

    def test_two_point_fourier_is_involution(self):
        # the 2-point kernel is the Hadamard, so the minimal exponent drops to 1
        assert verify_order(fourier_transform(1)) == 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_cosine_sine_blocks(self, n):
        assert verify_order(cst1_transform(n)) == 1
        assert verify_order(cst4_transform(n)) == 1

    def test_identity(self):
        t = BaseTransform("id", 1, 0, np.eye(2, dtype=complex))
        assert verify_order(t) == 0

    def test_non_dyadic_operator(self):
        t = BaseTransform("odd", 1, 1, phase(0.3))
        with pytest.raises(NotDyadicOrderError):
            verify_order(t)

    def test_max_exponent_cap(self):
        with pytest.raises(ValueError):
            verify_order(hartley_transform(1), max_exponent=7)


class TestMakeTransform:
    def test_dispatch(self):
        assert make_transform("fourier", 2).id == "fourier"
        assert make_transform("hartley", 2).id == "hartley"
        assert make_transform("cst1", 2).data_qubits == 3
        assert make_transform("cst4", 1).data_qubits == 2

    def test_unknown_id(self):
        with pytest.raises(KeyError, match="hartley"):
            make_transform("dct2", 2)
