"""Small-instance ground truth via dense state vectors.

The Heisenberg-interaction Hamiltonian of a weighted graph acts on 2^n
amplitudes. Per edge {i,j} the term w * (1/2)(I - XX - YY - ZZ) maps
|01> -> |01> - |10> and |10> -> |10> - |01> on the bit pair and annihilates
|00>, |11>, so it is applied with slice arithmetic and never materialized
as a dense 2^n x 2^n matrix.

Bit convention: qubit q is axis q of amplitudes.reshape([2]*n), i.e. bit q of
index i is (i >> (n-1-q)) & 1, so a bit string reads like the binary index.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse.linalg import LinearOperator, eigsh

from .graphs import WeightedGraph

DEFAULT_QUBIT_CAP = 20
BRUTE_FORCE_CAP = 24


class ResourceLimitError(RuntimeError):
    """Instance exceeds the configured qubit cap."""


class ConvergenceError(RuntimeError):
    """Eigensolver failed to certify convergence."""


def _check_cap(n, cap):
    if n > cap:
        raise ResourceLimitError(f"{n} qubits exceeds the cap of {cap}")


def _block(n, i, j, bi, bj):
    sl = [slice(None)] * n
    sl[i] = bi
    sl[j] = bj
    return tuple(sl)


def basis_state(n: int, bits) -> np.ndarray:
    """Computational basis state |bits> as a 2^n amplitude vector."""
    if len(bits) != n:
        raise ValueError("bit string length must equal qubit count")
    psi = np.zeros([2] * n, dtype=complex)
    psi[tuple(int(b) for b in bits)] = 1.0
    return psi.reshape(-1)


def apply_hamiltonian(g: WeightedGraph, psi: np.ndarray,
                      cap: int = DEFAULT_QUBIT_CAP) -> np.ndarray:
    """Return H_G |psi> (unnormalized), preserving the input dtype."""
    _check_cap(g.n, cap)
    t = np.asarray(psi).reshape([2] * g.n)
    out = np.zeros_like(t)
    for u, v, w in g.edges:
        a01 = t[_block(g.n, u, v, 0, 1)]
        a10 = t[_block(g.n, u, v, 1, 0)]
        diff = w * (a01 - a10)
        out[_block(g.n, u, v, 0, 1)] += diff
        out[_block(g.n, u, v, 1, 0)] -= diff
    return out.reshape(-1)


def energy(g: WeightedGraph, psi: np.ndarray, cap: int = DEFAULT_QUBIT_CAP) -> float:
    """<psi| H_G |psi> for a normalized state."""
    psi = np.asarray(psi)
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > 1e-8:
        raise ValueError(f"state is not normalized (norm {norm})")
    val = np.vdot(psi, apply_hamiltonian(g, psi, cap=cap))
    if abs(val.imag) > 1e-10:
        raise AssertionError(f"energy has imaginary part {val.imag}")
    return float(val.real)


def max_eigenvalue(g: WeightedGraph, tol: float = 1e-8,
                   cap: int = DEFAULT_QUBIT_CAP, maxiter: int = 20000) -> float:
    """Largest eigenvalue of H_G, certified by the residual ||H v - lam v|| <= tol."""
    _check_cap(g.n, cap)
    if not g.edges:
        return 0.0
    dim = 2 ** g.n
    # H_G is real symmetric in the computational basis
    if dim <= 512:
        cols = np.empty((dim, dim))
        eye = np.eye(dim)
        for k in range(dim):
            cols[:, k] = apply_hamiltonian(g, eye[:, k])
        lams, vecs = np.linalg.eigh(cols)
        lam, vec = float(lams[-1]), vecs[:, -1]
    else:
        op = LinearOperator((dim, dim), dtype=float,
                            matvec=lambda x: apply_hamiltonian(g, x, cap=cap))
        rng = np.random.default_rng(7)  # fixed start for reproducible failures
        lams, vecs = eigsh(op, k=1, which="LA", tol=0,
                           v0=rng.standard_normal(dim), maxiter=maxiter)
        lam, vec = float(lams[0]), vecs[:, 0]
    residual = np.linalg.norm(apply_hamiltonian(g, vec) - lam * vec)
    if residual > max(tol, 1e-12) * max(1.0, abs(lam)):
        raise ConvergenceError(f"residual {residual} exceeds tolerance {tol}")
    return lam


def simulate_variational_state(g: WeightedGraph, bits, theta: float,
                               cap: int = DEFAULT_QUBIT_CAP) -> np.ndarray:
    """Apply the commuting gate product prod_{{j,k} in E} exp(i theta P(j)P(k)) to |bits>.

    P(j) = X if bit j is 1, else Y. Gates commute, so they are applied in edge
    order; edge weights do not enter the circuit.
    """
    _check_cap(g.n, cap)
    n = g.n
    if len(bits) != n:
        raise ValueError("bit string length must equal qubit count")
    bits = tuple(int(b) for b in bits)
    t = basis_state(n, bits).reshape([2] * n)
    c, s = np.cos(theta), np.sin(theta)
    for u, v, _ in g.edges:
        pauli_u = "X" if bits[u] else "Y"
        pauli_v = "X" if bits[v] else "Y"
        flipped = np.empty_like(t)
        for bu in (0, 1):
            for bv in (0, 1):
                ph = 1 + 0j
                if pauli_u == "Y":
                    ph *= 1j * (1 - 2 * bu)  # Y|b> = i(-1)^b |1-b>
                if pauli_v == "Y":
                    ph *= 1j * (1 - 2 * bv)
                flipped[_block(n, u, v, 1 - bu, 1 - bv)] = ph * t[_block(n, u, v, bu, bv)]
        t = c * t + 1j * s * flipped
    return t.reshape(-1)


def brute_force_maxcut(g: WeightedGraph) -> tuple[float, tuple[int, ...]]:
    """Exact Max Cut value and an optimizing bit string by exhaustive enumeration."""
    _check_cap(g.n, BRUTE_FORCE_CAP)
    n = g.n
    idx = np.arange(2 ** n, dtype=np.int64)
    total = np.zeros(2 ** n)
    for u, v, w in g.edges:
        bu = (idx >> (n - 1 - u)) & 1
        bv = (idx >> (n - 1 - v)) & 1
        total += w * (bu ^ bv)
    k = int(np.argmax(total))
    bits = tuple(int((k >> (n - 1 - q)) & 1) for q in range(n))
    return float(total[k]), bits
