"""Time the Pauli-rotation kernel: numba backend vs pure-numpy fallback.

Usage:  python benchmarks/bench_kernels.py

The workload is the simulator's hot loop: a long sequence of weight-mixed
Pauli rotations applied to a 2^Q state vector.  Set TRIJUNCTION_NUMBA=0 to
check that the dispatched path matches the fallback timing.
"""

import time

import numpy as np

from trijunction import kernels

ROTATIONS = 400
QUBITS = (8, 10, 12, 13)


def workload(rng, num_qubits):
    dim = 1 << num_qubits
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    psi /= np.linalg.norm(psi)
    ops = [
        (
            int(rng.integers(0, dim)),
            int(rng.integers(0, dim)),
            float(rng.uniform(-1, 1)),
        )
        for _ in range(ROTATIONS)
    ]
    return psi, ops


def run(fn, psi, ops, num_qubits):
    out = psi
    t0 = time.perf_counter()
    for x, z, theta in ops:
        out = fn(out, num_qubits, x, z, 0, theta)
    return time.perf_counter() - t0, out


def main():
    rng = np.random.default_rng(0)
    print(f"dispatched backend: {kernels.active_backend()}")
    print(f"{ROTATIONS} rotations per measurement\n")
    print(f"{'Q':>3} {'dim':>6} {'numpy [ms]':>12} {'dispatch [ms]':>14} {'speedup':>8}")
    # warm-up for JIT compilation
    psi, ops = workload(rng, 4)
    run(kernels.apply_rotation, psi, ops[:2], 4)
    for q in QUBITS:
        psi, ops = workload(rng, q)
        t_numpy, out_a = run(kernels.rotate_state_numpy, psi, ops, q)
        t_fast, out_b = run(kernels.apply_rotation, psi, ops, q)
        assert np.allclose(out_a, out_b), "backend results diverged"
        print(
            f"{q:>3} {1 << q:>6} {t_numpy * 1e3:>12.2f} {t_fast * 1e3:>14.2f} "
            f"{t_numpy / t_fast:>8.2f}x"
        )


if __name__ == "__main__":
    main()
