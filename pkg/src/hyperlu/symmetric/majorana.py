"""Dicke expansion, Majorana polynomial, its roots and the Bloch-sphere points.

Projection convention: a root lambda is conjugated to w = conj(lambda) and
lifted by inverse stereographic projection from the north pole (the |0> axis)
onto the unit sphere through the equatorial plane:

    w  ->  (2 Re w, 2 Im w, |w|^2 - 1) / (1 + |w|^2)

so lambda = 0 lands on the south pole (|1>), lambda = 1 on +x (|+>), and a
root at infinity (a degree drop, only possible for general symmetric input)
on the north pole (|0>). With this choice a single qubit a|0> + b|1> has
root a/b and its point is the qubit's Bloch vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Sequence

import numpy as np

from .. import poly
from ..errors import DegreeZero, DimensionMismatch, NotSymmetric
from ..state import SignState, basis_indices
from .parity import sizes_from_pattern

CLUSTER_RADII = (1e-6, 1e-5, 1e-4, 1e-3, 1e-2, 1e-1)
DERIV_TOL = 1e-12
ROOT_EPS = 1e-9


def _weights(n: int) -> np.ndarray:
    return np.bitwise_count(basis_indices(n).astype(np.uint64)).astype(np.int64)


def is_permutation_invariant(psi: SignState) -> bool:
    s = psi.signs
    w = _weights(psi.n)
    first = np.zeros(psi.n + 1, dtype=np.int64)
    # the lowest index of weight k is 2^k - 1
    for k in range(psi.n + 1):
        first[k] = s[(1 << k) - 1]
    return bool(np.array_equal(s, first[w]))


@dataclass(frozen=True, eq=False)
class DickeCoeffs:
    """psi = sum_k d_k |D_n^(k)> with |D_n^(k)> the normalized weight-k Dicke state.

    For hypergraph input ``signs`` holds the common sign at each weight and
    d_k = signs[k] sqrt(C(n,k) / 2^n) exactly; ``signs`` is None for general
    amplitude input, where ``d`` may be complex.
    """

    n: int
    d: np.ndarray
    signs: tuple[int, ...] | None = None

    @property
    def exact(self) -> bool:
        return self.signs is not None


def dicke_coeffs(psi) -> DickeCoeffs:
    """Dicke coefficients of a SignState or of a symmetric amplitude vector."""
    if isinstance(psi, SignState):
        if not is_permutation_invariant(psi):
            raise NotSymmetric("sign vector differs within a weight class")
        n = psi.n
        signs = tuple(int(psi.signs[(1 << k) - 1]) for k in range(n + 1))
        d = np.array([signs[k] * np.sqrt(comb(n, k) / 2 ** n) for k in range(n + 1)])
        return DickeCoeffs(n, d, signs)
    amps = np.asarray(psi, dtype=complex)
    n = amps.size.bit_length() - 1
    if amps.size != 1 << n:
        raise DimensionMismatch("amplitude vector length must be a power of two")
    amps = amps / np.linalg.norm(amps)
    w = _weights(n)
    rep = np.array([amps[(1 << k) - 1] for k in range(n + 1)])
    if np.max(np.abs(amps - rep[w])) > 1e-12:
        raise NotSymmetric("amplitudes differ within a weight class")
    d = np.array([rep[k] * np.sqrt(comb(n, k)) for k in range(n + 1)])
    if not np.any(d.imag):
        d = d.real
    return DickeCoeffs(n, d)


@dataclass(frozen=True)
class MajoranaPolynomial:
    """p(z) = sum_k (-1)^k sqrt(C(n,k)) d_k z^k, lowest degree first.

    In exact mode p = ``ints`` / sqrt(``norm_sq``) with integer ``ints``.
    """

    coeffs: tuple
    ints: tuple[int, ...] | None = None
    norm_sq: int | None = None

    def exact_coeffs(self) -> list[Fraction] | None:
        """Rational coefficients when sqrt(norm_sq) is an integer, else None."""
        if self.ints is None:
            return None
        r = isqrt(self.norm_sq)
        if r * r != self.norm_sq:
            return None
        return [Fraction(c, r) for c in self.ints]

    def __str__(self):
        if self.ints is None:
            return " + ".join(f"({c:.6g})z^{k}" for k, c in enumerate(self.coeffs))
        ex = self.exact_coeffs()
        pre = f"1/{isqrt(self.norm_sq)}" if ex else f"1/sqrt({self.norm_sq})"
        body = []
        for k, c in enumerate(self.ints):
            if c == 0:
                continue
            term = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            mag = abs(c)
            txt = str(mag) if (mag != 1 or not term) else ""
            body.append(("-" if c < 0 else "+", txt + term))
        s = "".join(f" {sg} {t}" for sg, t in body).strip()
        s = s[2:] if s.startswith("+ ") else "-" + s[2:]
        return f"{pre} ({s})"


def majorana_polynomial(d: DickeCoeffs) -> MajoranaPolynomial:
    n = d.n
    if d.exact:
        ints = tuple((-1) ** k * d.signs[k] * comb(n, k) for k in range(n + 1))
        return MajoranaPolynomial(tuple(c / 2 ** (n / 2) for c in ints), ints, 2 ** n)
    c = [(-1) ** k * np.sqrt(comb(n, k)) * d.d[k] for k in range(n + 1)]
    return MajoranaPolynomial(tuple(c))


# roots -----------------------------------------------------------------------

def _is_rational(c) -> bool:
    return isinstance(c, (int, Fraction)) or (isinstance(c, (float, np.floating)) and float(c).is_integer())


def _sorted_roots(pairs: list[tuple[complex, int]]) -> list[tuple[complex, int]]:
    return sorted(pairs, key=lambda p: (round(p[0].real, 9), round(p[0].imag, 9)))


def _derivative_check(coeffs: np.ndarray, centre: complex, k: int) -> bool:
    """A genuine k-fold root makes p, p', ..., p^(k-1) all small at the centre."""
    p = np.asarray(coeffs, dtype=complex)
    for _ in range(k):
        v = poly.horner(p, np.array([centre]))[0][0]
        scale = float(np.sum(np.abs(p) * (1 + abs(centre)) ** np.arange(len(p))))
        if abs(v) > DERIV_TOL * scale:
            return False
        p = np.array(poly.derivative(list(p)))
    return True


def _refine(coeffs: np.ndarray, centre: complex, k: int, radius: float) -> complex:
    """Newton on p^(k-1), which has a simple root at a k-fold root of p."""
    if k == 1:
        return centre
    q = np.asarray(coeffs, dtype=complex)
    for _ in range(k - 1):
        q = np.array(poly.derivative(list(q)))
    z = np.array([centre])
    for _ in range(20):
        v, dv = poly.horner(q, z)
        if dv[0] == 0:
            break
        nxt = z - v / dv
        if abs(nxt[0] - z[0]) <= 1e-16 * (1 + abs(z[0])):
            z = nxt
            break
        z = nxt
    return complex(z[0]) if abs(z[0] - centre) <= radius * (1 + abs(centre)) else centre


def _linkage(z: np.ndarray, radius: float) -> list[list[int]]:
    parent = list(range(len(z)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(z)):
        for j in range(i + 1, len(z)):
            if abs(z[i] - z[j]) <= radius * (1 + abs(z[i])):
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(len(z)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _cluster(z: np.ndarray, coeffs: np.ndarray) -> list[tuple[complex, int]]:
    """Merge the scattered copies of multiple roots.

    A k-fold root comes back from the simple-root iteration as k points
    spread by roughly eps^(1/k). Single-linkage groups are formed at growing
    radii; a group becomes one root when Newton on p^(k-1) from its mean
    converges to a point where p, ..., p^(k-1) all vanish.
    """
    label = list(range(len(z)))
    centre = {i: complex(z[i]) for i in range(len(z))}
    for radius in CLUSTER_RADII:
        for g in _linkage(z, radius):
            if len(g) < 2 or len({label[i] for i in g}) == 1:
                continue
            c = _refine(coeffs, complex(np.mean(z[g])), len(g), radius)
            if _derivative_check(coeffs, c, len(g)):
                for i in g:
                    label[i] = g[0]
                centre[g[0]] = c
    counts: dict[int, int] = {}
    for lab in label:
        counts[lab] = counts.get(lab, 0) + 1
    return [(centre[lab], k) for lab, k in counts.items()]


def _close_pairs(pairs: list[tuple[complex, int]]) -> list[tuple[complex, int]]:
    vals = poly.conjugate_close(np.array([v for v, _ in pairs]))
    return [(complex(v), k) for v, (_, k) in zip(vals, pairs)]


def polynomial_roots(coeffs: Sequence, seed: int = 0) -> list[tuple[complex, int]]:
    """Roots of sum_k c_k z^k as ``(value, multiplicity)`` pairs.

    Integer or rational coefficients are split exactly into squarefree factors
    first, so multiplicities are exact; otherwise multiplicities come from
    clustering the simple-root iteration. Real input yields a conjugation
    closed multiset.
    """
    c = list(coeffs)
    if len(poly.trim(c)) < 2:
        raise DegreeZero("polynomial has degree zero")
    if len(poly.trim(c)) != len(c):
        raise DegreeZero("leading coefficient must be nonzero")
    real = all(np.isreal(x) for x in c)
    if all(_is_rational(x) for x in c):
        pairs = []
        for f, mult in poly.squarefree_factors([Fraction(x) if not isinstance(x, float) else Fraction(int(x)) for x in c]):
            z = poly.aberth([float(x) for x in f], seed=seed)
            z = poly.conjugate_close(z)
            pairs += [(complex(r), mult) for r in z]
        return _sorted_roots(pairs)
    arr = np.array(c, dtype=complex)
    pairs = _cluster(poly.aberth(arr, seed=seed), arr)
    if real:
        pairs = _close_pairs(pairs)
    return _sorted_roots(pairs)


def expand_roots(roots: list[tuple[complex, int]]) -> np.ndarray:
    return np.array([r for r, k in roots for _ in range(k)], dtype=complex)


def roots_to_bloch(roots) -> np.ndarray:
    """Unit vectors for roots; accepts (value, multiplicity) pairs or bare values."""
    vals = expand_roots(roots) if roots and isinstance(roots[0], tuple) else np.asarray(roots, dtype=complex)
    pts = []
    for lam in vals:
        if not np.isfinite(lam):
            pts.append((0.0, 0.0, 1.0))
            continue
        w = np.conj(lam)
        a = abs(w) ** 2
        pts.append((2 * w.real / (1 + a), 2 * w.imag / (1 + a), (a - 1) / (1 + a)))
    return np.array(pts, dtype=float).reshape(-1, 3)


def bloch_to_root(p) -> complex:
    """Inverse of the projection; the north pole maps to infinity."""
    x, y, z = p
    if z >= 1 - 1e-15:
        return complex(np.inf)
    return complex(x, -y) / (1 - z)


@dataclass(frozen=True, eq=False)
class MajoranaConfig:
    n: int
    poly: MajoranaPolynomial
    roots: list[tuple[complex, int]]
    points: np.ndarray
    at_infinity: int = 0
    dicke: DickeCoeffs | None = field(default=None, repr=False)

    def flat_roots(self) -> np.ndarray:
        return expand_roots(self.roots)


def majorana_config(psi, seed: int = 0) -> MajoranaConfig:
    d = psi if isinstance(psi, DickeCoeffs) else dicke_coeffs(psi)
    P = majorana_polynomial(d)
    if P.ints is not None:
        # integer coefficients keep the exact squarefree path
        trimmed = poly.trim(P.ints)
    else:
        trimmed = poly.trim([0 if abs(c) < 1e-14 else c for c in P.coeffs])
    # each missing top degree is a root at infinity
    inf = d.n - (len(trimmed) - 1)
    roots = polynomial_roots(trimmed, seed=seed) if len(trimmed) > 1 else []
    pts = roots_to_bloch(roots)
    if inf:
        pts = np.vstack([pts, np.tile([0.0, 0.0, 1.0], (inf, 1))])
        roots = roots + [(complex(np.inf), inf)]
    return MajoranaConfig(d.n, P, roots, pts.reshape(-1, 3), inf, d)


def symmetrized_state(points) -> np.ndarray:
    """Normalized symmetrized product of the single-qubit states at the points.

    Each point is mapped to the qubit with that Bloch vector and the n-fold
    permutation-symmetrized product is built by weight (Dicke coefficients).
    """
    P = np.asarray(points, dtype=float).reshape(-1, 3)
    n = len(P)
    # product of (a_i + b_i t): coefficient of t^k is the weight-k elementary sum
    e = np.array([1.0 + 0j])
    for x, y, z in P:
        theta = np.arccos(np.clip(z, -1, 1))
        phi = np.arctan2(y, x)
        a, b = np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)
        e = np.convolve(e, [a, b])
    w = _weights(n)
    amps = np.array([e[k] / comb(n, k) for k in range(n + 1)])[w]
    return amps / np.linalg.norm(amps)


def is_hypergraph_dicke(d: DickeCoeffs, tol: float = 1e-9) -> tuple[int, ...] | None:
    """Sign pattern s_k if sqrt(2^n) d_k = s_k sqrt(C(n,k)) for all k, else None."""
    if d.exact:
        return d.signs
    n = d.n
    v = np.asarray(d.d) * np.sqrt(2.0 ** n)
    pat = []
    for k in range(n + 1):
        mag = np.sqrt(comb(n, k))
        if abs(v[k] - mag) <= tol:
            pat.append(1)
        elif abs(v[k] + mag) <= tol:
            pat.append(-1)
        else:
            return None
    return tuple(pat)


def complete_sizes_from_pattern(pattern: Sequence[int]) -> list[int] | None:
    """Edge sizes whose complete hypergraph gives the pattern; None if d_0 < 0."""
    bits = [0 if s > 0 else 1 for s in pattern]
    sizes = sizes_from_pattern(bits)
    if 0 in sizes:
        return None
    return sizes


def reciprocal_pairing(roots, tol: float = 1e-9) -> list[tuple[complex, complex]] | None:
    """Pair the roots so that lambda mu = -1 within tol, if possible."""
    left = list(expand_roots(roots) if roots and isinstance(roots[0], tuple) else roots)
    pairs = []
    while left:
        lam = left.pop(0)
        errs = [abs(lam * mu + 1) for mu in left]
        if not errs:
            return None
        j = int(np.argmin(errs))
        if errs[j] > tol:
            return None
        pairs.append((complex(lam), complex(left.pop(j))))
    return pairs


def cross_ratio(z1: complex, z2: complex, z3: complex, z4: complex) -> complex:
    return (z1 - z3) * (z2 - z4) / ((z1 - z4) * (z2 - z3))
