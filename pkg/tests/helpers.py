"""Shared helpers for the test suite."""
import numpy as np

from qfrt.circuits import Circuit, GateOp


def random_unitary(dim, rng):
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_dyadic_unitary(dim, n, rng):
    """Random unitary whose eigenvalues are 2**n-th roots of unity."""
    v = random_unitary(dim, rng)
    phases = np.exp(2j * np.pi * rng.integers(0, 1 << n, size=dim) / (1 << n))
    return v @ np.diag(phases) @ v.conj().T


def random_state(num_qubits, rng):
    v = rng.standard_normal(1 << num_qubits) + 1j * rng.standard_normal(1 << num_qubits)
    return v / np.linalg.norm(v)


_NAMED_1Q = ("x", "y", "z", "h", "s", "r", "b", "bdag")


def random_circuit(num_qubits, num_gates, rng):
    """Mixed random circuit: named gates, controlled phases, swaps, and
    dense 1-2 qubit payloads with up to two controls."""
    ops = []
    for _ in range(num_gates):
        wires = [int(w) for w in rng.permutation(num_qubits)]
        kind = rng.integers(0, 4)
        if kind == 0:
            ops.append(GateOp(str(rng.choice(_NAMED_1Q)), targets=(wires[0],)))
        elif kind == 1:
            nc = int(rng.integers(0, min(2, num_qubits - 1) + 1))
            ops.append(
                GateOp("p", targets=(wires[0],), controls=tuple(wires[1:1 + nc]),
                       params=(float(rng.uniform(-np.pi, np.pi)),))
            )
        elif kind == 2 and num_qubits >= 2:
            ops.append(GateOp("swap", targets=(wires[0], wires[1])))
        else:
            t = int(rng.integers(1, min(2, num_qubits) + 1))
            nc = int(rng.integers(0, min(2, num_qubits - t) + 1))
            ops.append(
                GateOp("unitary", targets=tuple(wires[:t]),
                       controls=tuple(wires[t:t + nc]),
                       matrix=random_unitary(1 << t, rng))
            )
    return Circuit(num_qubits, tuple(ops))
