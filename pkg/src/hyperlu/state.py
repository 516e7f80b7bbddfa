"""Sign vectors of hypergraph states and the LU algebra action on them.

A hypergraph state on n qubits is ``2^{-n/2} sum_I c_I |I>`` with ``c_I = +-1``.
:class:`SignState` stores the exponent bits ``f_I`` with ``c_I = (-1)^{f_I}``
indexed by basis string ``I`` read as an integer with qubit 1 most
significant; the same integer is the vertex-set word of ``supp(I)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptyHyperedge, LengthMismatch, NotAHypergraphState, VertexOutOfRange
from .hypergraph import Hypergraph, mask_from_vertices, vertex_bit

MAX_SIGN_QUBITS = 24


def basis_indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def gf2_zeta(bits: np.ndarray, n: int) -> np.ndarray:
    """Subset-sum transform over GF(2): out[S] = xor of bits[T] for T subset of S.

    Applying it twice gives the identity, so it is also the Mobius inverse.
    """
    out = np.array(bits, dtype=np.uint8, copy=True)
    for i in range(n):
        view = out.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return out


@dataclass(frozen=True, eq=False)
class SignState:
    """Unnormalized hypergraph-style state: ``bits[I] = 1`` means ``c_I = -1``."""

    n: int
    bits: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=np.uint8)
        if b.shape != (1 << self.n,):
            raise LengthMismatch(f"expected {1 << self.n} entries, got {b.shape}")
        if b.max(initial=0) > 1:
            raise ValueError("sign bits must be 0 or 1")
        b = b.copy()
        b.flags.writeable = False
        object.__setattr__(self, "bits", b)

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignState":
        s = np.asarray(signs)
        if not np.all((s == 1) | (s == -1)):
            raise ValueError("entries must be +1 or -1")
        n = len(s).bit_length() - 1
        if len(s) != 1 << n:
            raise LengthMismatch("length must be a power of two")
        return cls(n, (s < 0).astype(np.uint8))

    @property
    def signs(self) -> np.ndarray:
        return 1 - 2 * self.bits.astype(np.int8)

    def sign(self, index: int) -> int:
        return -1 if self.bits[index] else 1

    def sign_string(self) -> str:
        return "".join("-" if b else "+" for b in self.bits)

    def __eq__(self, other):
        if not isinstance(other, SignState):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))


def plus_state(n: int) -> SignState:
    return SignState(n, np.zeros(1 << n, dtype=np.uint8))


def _flip_supersets(bits: np.ndarray, n: int, word: int):
    idx = basis_indices(n)
    bits[(idx & word) == word] ^= 1


def apply_ce(psi: SignState, e: Iterable[int]) -> SignState:
    """Generalized controlled-Z on the vertex labels in ``e``."""
    e = list(e)
    if not e:
        raise EmptyHyperedge("C_e needs a nonempty vertex set")
    word = mask_from_vertices(psi.n, e)
    bits = psi.bits.copy()
    _flip_supersets(bits, psi.n, word)
    return SignState(psi.n, bits)


def build_state(G: Hypergraph) -> SignState:
    """Sign at basis index S is (-1)^(number of edges contained in S)."""
    if G.n > MAX_SIGN_QUBITS:
        raise VertexOutOfRange(f"sign vectors limited to {MAX_SIGN_QUBITS} qubits")
    if len(G.edges) <= G.n:
        bits = np.zeros(1 << G.n, dtype=np.uint8)
        for e in G.edges:
            _flip_supersets(bits, G.n, e)
        return SignState(G.n, bits)
    indicator = np.zeros(1 << G.n, dtype=np.uint8)
    indicator[list(G.edges)] = 1
    return SignState(G.n, gf2_zeta(indicator, G.n))


def signs_to_hypergraph(psi: SignState) -> Hypergraph:
    """Unique hypergraph whose state has these signs (GF(2) Mobius inversion)."""
    if psi.bits[0]:
        raise NotAHypergraphState("sign of |0...0> is -1: a global phase, not a hypergraph state")
    indicator = gf2_zeta(psi.bits, psi.n)
    return Hypergraph(psi.n, tuple(int(w) for w in np.flatnonzero(indicator)))


def _check_vertex(n: int, a: int):
    if not 1 <= a <= n:
        raise VertexOutOfRange(f"vertex {a} not in 1..{n}")


def x_image(G: Hypergraph, a: int) -> tuple[Hypergraph, int]:
    """Hypergraph G' and global sign with X_a |psi_G> = sign * |psi_G'>."""
    _check_vertex(G.n, a)
    bit = vertex_bit(G.n, a)
    words = list(G.edges)
    phase = 1
    for e in G.edges:
        if e & bit:
            reduced = e & ~bit
            if reduced:
                words.append(reduced)
            else:
                phase = -phase
    return Hypergraph.from_edge_words(G.n, words), phase


def p_sign(G: Hypergraph, a: int, index: int) -> int:
    """Eigenvalue of P_a (product of C_{e\\a} over edges e containing a) on |index>."""
    _check_vertex(G.n, a)
    bit = vertex_bit(G.n, a)
    s = 1
    for e in G.edges:
        if e & bit and (index & (e & ~bit)) == (e & ~bit):
            s = -s
    return s


def p_sign_bits(G: Hypergraph, a: int) -> np.ndarray:
    """Vectorized p_sign over all basis indices, as exponent bits."""
    _check_vertex(G.n, a)
    bit = vertex_bit(G.n, a)
    idx = basis_indices(G.n)
    out = np.zeros(1 << G.n, dtype=np.uint8)
    for e in G.edges:
        if e & bit:
            r = e & ~bit
            out ^= ((idx & r) == r).astype(np.uint8)
    return out


def z_bits(n: int, a: int) -> np.ndarray:
    """Bit i_a of every basis index (Z_a eigenvalue is (-1)^bit)."""
    return ((basis_indices(n) >> (n - a)) & 1).astype(np.uint8)


def _to_exact(x) -> Fraction:
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    return Fraction(float(x))


@dataclass(frozen=True)
class AlgebraElement:
    """``M = theta + sum_a (r_a X_a + s_a Y_a + t_a Z_a)``.

    Coefficients are kept as given (ints, Fractions or floats). The LU
    algebra element proper is ``iM``.
    """

    theta: object
    r: tuple
    s: tuple
    t: tuple

    def __post_init__(self):
        r, s, t = tuple(self.r), tuple(self.s), tuple(self.t)
        if not len(r) == len(s) == len(t):
            raise LengthMismatch("r, s, t must have equal length")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    @property
    def n(self) -> int:
        return len(self.r)

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(0, (0,) * n, (0,) * n, (0,) * n)

    @classmethod
    def from_paulis(cls, n: int, terms: Iterable[tuple[object, str, int]], theta=0) -> "AlgebraElement":
        """Build from ``(coefficient, 'X'|'Y'|'Z', vertex)`` triples."""
        cols = {"X": [0] * n, "Y": [0] * n, "Z": [0] * n}
        for c, p, a in terms:
            _check_vertex(n, a)
            cols[p.upper()][a - 1] += c
        return cls(theta, cols["X"], cols["Y"], cols["Z"])

    @classmethod
    def from_vector(cls, n: int, vec: Sequence) -> "AlgebraElement":
        """Inverse of :meth:`vector`: ``[theta, r_1..r_n, s_1..s_n, t_1..t_n]``."""
        if len(vec) != 3 * n + 1:
            raise LengthMismatch(f"expected {3 * n + 1} coefficients")
        vec = list(vec)
        return cls(vec[0], vec[1:n + 1], vec[n + 1:2 * n + 1], vec[2 * n + 1:])

    def vector(self) -> list:
        return [self.theta, *self.r, *self.s, *self.t]

    def __str__(self):
        parts = []
        if self.theta:
            parts.append((self.theta, ""))
        for name, coeffs in (("X", self.r), ("Y", self.s), ("Z", self.t)):
            for a, c in enumerate(coeffs, 1):
                if c:
                    parts.append((c, f"{name}{a}"))
        if not parts:
            return "0"
        out = []
        for i, (c, op) in enumerate(parts):
            neg = c < 0
            mag = -c if neg else c
            coeff = "" if (mag == 1 and op) else str(mag)
            term = f"{coeff}{op}"
            if i == 0:
                out.append(f"-{term}" if neg else term)
            else:
                out.append(f"{'-' if neg else '+'} {term}")
        return " ".join(out)


def weight(M: AlgebraElement) -> int:
    """Number of qubits on which M acts nontrivially."""
    return sum(1 for a in range(M.n) if M.r[a] or M.s[a] or M.t[a])


def _integer_scaled(M: AlgebraElement) -> tuple[list[int], int]:
    vec = [_to_exact(x) for x in M.vector()]
    d = lcm(*(v.denominator for v in vec)) if vec else 1
    return [int(v * d) for v in vec], d


def phi_m_parts(G: Hypergraph, M: AlgebraElement) -> tuple[np.ndarray, np.ndarray, int]:
    """Exact real and imaginary parts of the diagonal of Phi_M, times a common denominator.

    Returns ``(real, imag, d)`` with integer arrays so that the diagonal is
    ``(real + 1j * imag) / d``.
    """
    if M.n != G.n:
        raise LengthMismatch(f"element has {M.n} qubits, hypergraph has {G.n}")
    n = G.n
    ints, d = _integer_scaled(M)
    big = max((abs(x) for x in ints), default=0) * (n + 1) >= 2 ** 62
    dtype = object if big else np.int64
    theta, r, s, t = ints[0], ints[1:n + 1], ints[n + 1:2 * n + 1], ints[2 * n + 1:]
    real = np.full(1 << n, theta, dtype=dtype)
    imag = np.zeros(1 << n, dtype=dtype)
    for a in range(1, n + 1):
        ra, sa, ta = r[a - 1], s[a - 1], t[a - 1]
        if not (ra or sa or ta):
            continue
        p = 1 - 2 * p_sign_bits(G, a).astype(np.int64)
        z = 1 - 2 * z_bits(n, a).astype(np.int64)
        if ra:
            real = real + ra * p
        if ta:
            real = real + ta * z
        if sa:
            imag = imag - sa * z * p
    return real, imag, d


def phi_m_diagonal(G: Hypergraph, M: AlgebraElement) -> np.ndarray:
    """Diagonal of Phi_M in the computational basis, as complex floats."""
    real, imag, d = phi_m_parts(G, M)
    return (real.astype(float) + 1j * imag.astype(float)) / d


def phi_m_is_zero(G: Hypergraph, M: AlgebraElement) -> bool:
    real, imag, _ = phi_m_parts(G, M)
    return not np.any(real) and not np.any(imag)
