"""Dense state vectors and density matrices used as an independent oracle.

Two regimes:

* exact: amplitudes ``(re + i*im) / (den * sqrt(2)**half_exp)`` with integer
  arrays ``re``, ``im``; densities ``num / den`` with an integer matrix.
  Sign vectors, Pauli operators and any 1-qubit matrix with rational real and
  imaginary parts stay in this regime.
* float: complex128 arrays, entered as soon as a non-rational unitary is
  applied.

Density matrices are capped at 12 qubits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable

import numpy as np

from .errors import DimensionMismatch, NotUnitary, TooLarge, VertexOutOfRange
from .state import SignState

MAX_DENSE_QUBITS = 12
_FLOAT_TOL = 1e-12


def _guard(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == np.int64 and arr.size and int(np.abs(arr).max()) >= 2 ** 40:
        return arr.astype(object)
    return arr


@dataclass(frozen=True, eq=False)
class DenseState:
    n: int
    exact: bool
    re: np.ndarray | None = None
    im: np.ndarray | None = None
    den: int = 1
    half_exp: int = 0
    amps: np.ndarray | None = None

    def to_complex(self) -> np.ndarray:
        if not self.exact:
            return self.amps
        scale = self.den * 2.0 ** (self.half_exp / 2)
        return (self.re.astype(float) + 1j * self.im.astype(float)) / scale

    def is_real_exact(self) -> bool:
        return self.exact and not np.any(self.im)


def dense_state(psi: SignState) -> DenseState:
    s = psi.signs.astype(np.int64)
    return DenseState(psi.n, True, re=s, im=np.zeros_like(s), den=1, half_exp=psi.n)


def dense_from_complex(amps) -> DenseState:
    a = np.asarray(amps, dtype=complex)
    n = a.size.bit_length() - 1
    if a.size != 1 << n:
        raise DimensionMismatch("length must be a power of two")
    return DenseState(n, False, amps=a)


def _gaussian_rational(x) -> tuple[Fraction, Fraction] | None:
    if isinstance(x, (int, Rational)):
        return Fraction(x), Fraction(0)
    z = complex(x)
    if z.real.is_integer() and z.imag.is_integer():
        return Fraction(int(z.real)), Fraction(int(z.imag))
    return None


def _exact_unitary(U) -> tuple[list[list[int]], list[list[int]], int] | None:
    """Integer real/imag parts of D*U with common denominator D, or None."""
    parts = [[_gaussian_rational(U[i][j]) for j in range(2)] for i in range(2)]
    if any(p is None for row in parts for p in row):
        return None
    d = lcm(*(q.denominator for row in parts for p in row for q in p))
    ur = [[int(parts[i][j][0] * d) for j in range(2)] for i in range(2)]
    ui = [[int(parts[i][j][1] * d) for j in range(2)] for i in range(2)]
    # U U^dagger = I  <=>  (D U)(D U)^dagger = D^2 I
    for i in range(2):
        for k in range(2):
            re = sum(ur[i][j] * ur[k][j] + ui[i][j] * ui[k][j] for j in range(2))
            im = sum(ui[i][j] * ur[k][j] - ur[i][j] * ui[k][j] for j in range(2))
            if re != (d * d if i == k else 0) or im != 0:
                raise NotUnitary("matrix is not unitary")
    return ur, ui, d


def dense_apply_1q(state: DenseState, a: int, U) -> DenseState:
    """Apply a 2x2 unitary to qubit ``a`` (1-based, qubit 1 most significant)."""
    if not 1 <= a <= state.n:
        raise VertexOutOfRange(f"qubit {a} not in 1..{state.n}")
    shape = (1 << (a - 1), 2, 1 << (state.n - a))
    exact = _exact_unitary(U) if state.exact else None
    if exact is not None:
        ur, ui, d = exact
        re = state.re.reshape(shape)
        im = state.im.reshape(shape)
        new_re = np.empty_like(re)
        new_im = np.empty_like(im)
        for i in range(2):
            new_re[:, i, :] = sum(ur[i][j] * re[:, j, :] - ui[i][j] * im[:, j, :] for j in range(2))
            new_im[:, i, :] = sum(ur[i][j] * im[:, j, :] + ui[i][j] * re[:, j, :] for j in range(2))
        return DenseState(state.n, True, re=_guard(new_re.reshape(-1)), im=_guard(new_im.reshape(-1)),
                          den=state.den * d, half_exp=state.half_exp)
    M = np.asarray(U, dtype=complex)
    if M.shape != (2, 2):
        raise DimensionMismatch("expected a 2x2 matrix")
    if not np.allclose(M @ M.conj().T, np.eye(2), atol=_FLOAT_TOL, rtol=0):
        raise NotUnitary("matrix is not unitary within 1e-12")
    v = state.to_complex().reshape(shape)
    out = np.einsum("ij,ajb->aib", M, v)
    return DenseState(state.n, False, amps=out.reshape(-1))


def states_equal(x: DenseState, y: DenseState, tol: float = 1e-9) -> bool:
    if x.n != y.n:
        return False
    if x.exact and y.exact:
        # compare (re/den) * sqrt2^-h exactly; differing half-exponent parity never matches
        if (x.half_exp - y.half_exp) % 2:
            return not (np.any(x.re) or np.any(x.im) or np.any(y.re) or np.any(y.im))
        hx, hy = x.half_exp, y.half_exp
        fx = x.den * 2 ** max(0, (hx - hy) // 2)
        fy = y.den * 2 ** max(0, (hy - hx) // 2)
        return (np.array_equal(x.re * fy, y.re * fx)
                and np.array_equal(x.im * fy, y.im * fx))
    return bool(np.allclose(x.to_complex(), y.to_complex(), atol=tol, rtol=0))


@dataclass(frozen=True, eq=False)
class DenseDensity:
    """Density matrix; exact ones are ``num / den`` with an integer ``num``."""

    n: int
    exact: bool
    num: np.ndarray | None = None
    den: int = 1
    mat: np.ndarray | None = None

    def to_complex(self) -> np.ndarray:
        if self.exact:
            return self.num.astype(float) / self.den
        return self.mat

    def trace(self):
        if self.exact:
            return Fraction(int(np.trace(self.num)), self.den)
        return complex(np.trace(self.mat))

    def entry(self, i: int, j: int):
        if self.exact:
            return Fraction(int(self.num[i, j]), self.den)
        return complex(self.mat[i, j])

    def reduced(self) -> "DenseDensity":
        """Same matrix with numerator and denominator divided by their gcd."""
        if not self.exact:
            return self
        g = self.den
        for x in np.unique(self.num):
            g = gcd(g, int(x))
            if g == 1:
                break
        if g in (0, 1):
            return self
        return DenseDensity(self.n, True, num=self.num // g, den=self.den // g)

    def __eq__(self, other):
        if not isinstance(other, DenseDensity):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.exact and other.exact:
            return bool(np.array_equal(self.num * other.den, other.num * self.den))
        return bool(np.allclose(self.to_complex(), other.to_complex(), atol=1e-9, rtol=0))

    __hash__ = None


def _check_cap(n: int):
    if n > MAX_DENSE_QUBITS:
        raise TooLarge(f"dense densities limited to {MAX_DENSE_QUBITS} qubits (got {n})")


def dense_density(psi) -> DenseDensity:
    """|psi><psi| for a SignState or DenseState."""
    if isinstance(psi, SignState):
        _check_cap(psi.n)
        s = psi.signs.astype(np.int64)
        return DenseDensity(psi.n, True, num=np.outer(s, s), den=1 << psi.n)
    _check_cap(psi.n)
    if psi.is_real_exact():
        v = psi.re
        return DenseDensity(psi.n, True, num=_guard(np.outer(v, v)), den=psi.den ** 2 * 2 ** psi.half_exp)
    v = psi.to_complex()
    return DenseDensity(psi.n, False, mat=np.outer(v, v.conj()))


def dense_partial_trace(rho: DenseDensity, qubits: Iterable[int]) -> DenseDensity:
    """Trace out the given 1-based qubits; tracing everything leaves a 1x1 matrix."""
    qs = sorted(set(qubits), reverse=True)
    for q in qs:
        if not 1 <= q <= rho.n:
            raise VertexOutOfRange(f"qubit {q} not in 1..{rho.n}")
    n = rho.n
    arr = rho.num if rho.exact else rho.mat
    for q in qs:
        t = arr.reshape(1 << (q - 1), 2, 1 << (n - q), 1 << (q - 1), 2, 1 << (n - q))
        arr = t[:, 0, :, :, 0, :] + t[:, 1, :, :, 1, :]
        n -= 1
        arr = arr.reshape(1 << n, 1 << n)
    if rho.exact:
        return DenseDensity(n, True, num=arr, den=rho.den)
    return DenseDensity(n, False, mat=arr)


def weighted_sum(terms: Iterable[tuple[Fraction, DenseDensity]]) -> DenseDensity:
    """Exact sum of ``w * rho`` over rational weights and exact densities."""
    terms = [(Fraction(w), r) for w, r in terms]
    if not terms:
        raise ValueError("empty sum")
    n = terms[0][1].n
    if any(r.n != n for _, r in terms):
        raise DimensionMismatch("densities on different qubit counts")
    if not all(r.exact for _, r in terms):
        return DenseDensity(n, False, mat=sum(float(w) * r.to_complex() for w, r in terms))
    den = lcm(*(w.denominator * r.den for w, r in terms))
    num = None
    for w, r in terms:
        factor = w.numerator * (den // (w.denominator * r.den))
        part = _guard(r.num * factor)
        num = part if num is None else _guard(num + part)
    return DenseDensity(n, True, num=num, den=den)


PAULI = {
    "I": ((1, 0), (0, 1)),
    "X": ((0, 1), (1, 0)),
    "Y": ((0, -1j), (1j, 0)),
    "Z": ((1, 0), (0, -1)),
}
