"""Independent, deliberately naive reference implementations used by the tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import comb

import numpy as np
import sympy

from hyperlu.hypergraph import Hypergraph, parse_hypergraph

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def random_hypergraph(rng: random.Random, n: int, max_edges: int | None = None, min_size: int = 1,
                      max_size: int | None = None) -> Hypergraph:
    max_size = n if max_size is None else max_size
    max_edges = 2 * n if max_edges is None else max_edges
    edges = set()
    for _ in range(rng.randint(0, max_edges)):
        k = rng.randint(min_size, max_size)
        edges.add(tuple(sorted(rng.sample(range(1, n + 1), k))))
    return parse_hypergraph(n, edges)


def signs_by_gates(G: Hypergraph) -> list[int]:
    """Apply each C_e to |+>^n as a diagonal over explicit bit tuples."""
    n = G.n
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        s = 1
        for e in G.edge_lists():
            if all(bits[v - 1] for v in e):
                s = -s
        out.append(s)
    return out


def kron_all(mats):
    out = np.array([[1]], dtype=complex)
    for m in mats:
        out = np.kron(out, m)
    return out


def pauli_string(n: int, ops: dict[int, np.ndarray]) -> np.ndarray:
    return kron_all([ops.get(a, I2) for a in range(1, n + 1)])


def full_system_rank(G: Hypergraph) -> int:
    """Rank of the real linear map M -> M|psi> via sympy on explicit matrices."""
    n = G.n
    psi = np.array(signs_by_gates(G), dtype=complex)
    cols = [psi]
    for P in (X, Y, Z):
        for a in range(1, n + 1):
            cols.append(pauli_string(n, {a: P}) @ psi)
    # theta multiplies psi itself; real and imaginary parts as separate equations
    rows = []
    for i in range(len(psi)):
        rows.append([int(round(c[i].real)) for c in cols])
        rows.append([int(round(c[i].imag)) for c in cols])
    return sympy.Matrix(rows).rank()


def sympy_nullity(G: Hypergraph) -> int:
    return 3 * G.n + 1 - full_system_rank(G)


def element_matrix(M, n: int) -> np.ndarray:
    out = float(M.theta) * np.eye(1 << n, dtype=complex)
    for P, coeffs in ((X, M.r), (Y, M.s), (Z, M.t)):
        for a, c in enumerate(coeffs, 1):
            if c:
                out = out + float(c) * pauli_string(n, {a: P})
    return out


def pascal_parity(limit: int) -> list[list[int]]:
    rows = [[1]]
    for w in range(1, limit + 1):
        prev = rows[-1]
        rows.append([1] + [(prev[k - 1] + prev[k]) % 2 for k in range(1, w)] + [1])
    return rows


def partial_trace(rho: np.ndarray, n: int, traced: list[int]) -> np.ndarray:
    """Partial trace with einsum on an n-qubit density matrix."""
    t = rho.reshape([2] * (2 * n))
    letters = "abcdefghijklmnopqrstuvwxyz"
    ins = list(letters[:n])
    outs = list(letters[n:2 * n].upper())
    for q in traced:
        outs[q - 1] = ins[q - 1]
    keep = [q for q in range(1, n + 1) if q not in traced]
    res = "".join(ins[q - 1] for q in keep) + "".join(outs[q - 1] for q in keep)
    out = np.einsum("".join(ins) + "".join(outs) + "->" + res, t)
    k = len(keep)
    return out.reshape(1 << k, 1 << k)


def exact_density(G: Hypergraph) -> list[list[Fraction]]:
    s = signs_by_gates(G)
    N = len(s)
    return [[Fraction(s[i] * s[j], N) for j in range(N)] for i in range(N)]


def exact_partial_trace(rho: list[list[Fraction]], n: int, a: int) -> list[list[Fraction]]:
    N = 1 << (n - 1)
    out = [[Fraction(0)] * N for _ in range(N)]
    shift = n - a

    def lift(i, b):
        hi = i >> shift
        lo = i & ((1 << shift) - 1)
        return (hi << (shift + 1)) | (b << shift) | lo

    for i in range(N):
        for j in range(N):
            out[i][j] = rho[lift(i, 0)][lift(j, 0)] + rho[lift(i, 1)][lift(j, 1)]
    return out


def dicke_vector(n: int, k: int) -> np.ndarray:
    v = np.array([1.0 if bin(i).count("1") == k else 0.0 for i in range(1 << n)])
    return v / np.sqrt(comb(n, k))


def symmetrized_product(points) -> np.ndarray:
    """Normalized sum over permutations of the tensor product of Bloch-point qubits."""
    qubits = []
    for x, y, z in points:
        th = np.arccos(np.clip(z, -1, 1))
        ph = np.arctan2(y, x)
        qubits.append(np.array([np.cos(th / 2), np.exp(1j * ph) * np.sin(th / 2)]))
    n = len(qubits)
    total = np.zeros(1 << n, dtype=complex)
    for perm in itertools.permutations(range(n)):
        v = np.array([1.0 + 0j])
        for i in perm:
            v = np.kron(v, qubits[i])
        total += v
    return total / np.linalg.norm(total)


def overlap_up_to_phase(a: np.ndarray, b: np.ndarray) -> float:
    return abs(np.vdot(a / np.linalg.norm(a), b / np.linalg.norm(b)))
