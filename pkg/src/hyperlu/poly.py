"""Polynomials as coefficient lists, lowest degree first.

Exact helpers work over Fractions; the root finder is Aberth's simultaneous
iteration in complex128.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DegreeZero


def trim(p: Sequence) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def derivative(p: Sequence) -> list:
    return [k * p[k] for k in range(1, len(p))]


def sub(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def divmod_exact(p: Sequence, q: Sequence) -> tuple[list, list]:
    p = [Fraction(x) for x in trim(p)]
    q = [Fraction(x) for x in trim(q)]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    rem = p[:]
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / q[-1]
        quot[shift] = c
        for i, qi in enumerate(q):
            rem[shift + i] -= c * qi
        rem = trim(rem)
    return trim(quot), rem


def monic(p: Sequence) -> list:
    p = trim(p)
    return [Fraction(x) / p[-1] for x in p]


def gcd(p: Sequence, q: Sequence) -> list:
    a, b = trim(p), trim(q)
    while b:
        a, b = b, divmod_exact(a, b)[1]
    return monic(a) if a else []


def squarefree_factors(p: Sequence) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: p = c * prod f_i^i with f_i squarefree and coprime.

    Returns the non-constant ``(f_i, i)`` pairs.
    """
    f = [Fraction(x) for x in trim(p)]
    if len(f) < 2:
        return []
    df = derivative(f)
    c = gcd(f, df)
    w = divmod_exact(f, c)[0]
    y = divmod_exact(df, c)[0]
    z = sub(y, derivative(w))
    out = []
    i = 1
    while degree(w) > 0:
        g = gcd(w, z) if z else monic(w)
        if degree(g) > 0:
            out.append((g, i))
        w = divmod_exact(w, g)[0]
        y = divmod_exact(z, g)[0] if z else []
        z = sub(y, derivative(w))
        i += 1
    return out


def horner(p: np.ndarray, z):
    """Evaluate p and p' at z (p lowest degree first)."""
    v = np.zeros_like(z, dtype=complex)
    dv = np.zeros_like(z, dtype=complex)
    for c in p[::-1]:
        dv = dv * z + v
        v = v * z + c
    return v, dv


def aberth(coeffs: Sequence, seed: int = 0, tol: float = 1e-15, max_iter: int = 500,
           restarts: int = 8) -> np.ndarray:
    """All complex roots of a polynomial with (assumed) simple roots."""
    p = np.array(trim(coeffs), dtype=complex)
    deg = len(p) - 1
    if deg < 1:
        raise DegreeZero("polynomial has no roots")
    if deg == 1:
        return np.array([-p[0] / p[1]])
    rng = np.random.default_rng(seed)
    a = np.abs(p / p[-1])
    radius = 1 + float(np.max(a[:-1]))
    # inner and outer bounds give a reasonable starting circle
    lo = float(np.abs(p[0])) / (float(np.abs(p[0])) + float(np.max(np.abs(p[1:])))) if p[0] != 0 else 0.0
    r0 = np.sqrt(max(lo, 1e-3) * radius)
    best = None
    for attempt in range(restarts):
        phase = rng.uniform(0, 2 * np.pi)
        # complex jitter: iterates that land exactly on the real axis stay there
        jitter = 1 + 0.1 * (rng.standard_normal(deg) + 1j * rng.standard_normal(deg)) * (attempt > 0)
        z = r0 * jitter * np.exp(1j * (phase + 2 * np.pi * np.arange(deg) / deg))
        for _ in range(max_iter):
            v, dv = horner(p, z)
            with np.errstate(divide="ignore", invalid="ignore"):
                ratio = v / dv
                diff = z[:, None] - z[None, :]
                np.fill_diagonal(diff, 1)
                s = np.sum(1 / diff, axis=1) - 1.0  # remove the diagonal's 1/1
                step = ratio / (1 - ratio * s)
            # colliding iterates (multiple roots) give non-finite steps; hold them
            step = np.where(np.isfinite(step), step, 0)
            z = z - step
            if np.all(np.abs(step) <= tol * (1 + np.abs(z))):
                break
        if np.all(np.isfinite(z)):
            resid = float(np.max(np.abs(horner(p, z)[0]) / np.maximum(1, np.abs(z)) ** deg))
            if best is None or resid < best[0]:
                best = (resid, z.copy())
            if resid < 1e-11 * float(np.max(np.abs(p))):
                break
    return _newton_polish(p, best[1])


def _newton_polish(p: np.ndarray, z: np.ndarray, steps: int = 3) -> np.ndarray:
    # near a multiple root a Newton step can overshoot; keep only improvements
    for _ in range(steps):
        v, dv = horner(p, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = z - v / dv
        better = np.isfinite(cand) & (np.abs(horner(p, np.where(np.isfinite(cand), cand, z))[0]) < np.abs(v))
        z = np.where(better, cand, z)
    return z


def conjugate_close(roots: np.ndarray) -> np.ndarray:
    """Pair roots of a real polynomial with their conjugates exactly."""
    z = np.array(roots, dtype=complex)
    done = np.zeros(len(z), dtype=bool)
    for i in np.argsort(-np.abs(z.imag)):
        if done[i]:
            continue
        others = [j for j in range(len(z)) if j != i and not done[j]]
        if others:
            j = min(others, key=lambda k: abs(z[k] - np.conj(z[i])))
            if abs(z[j] - np.conj(z[i])) < abs(z[i].imag):
                mid = (z[i] + np.conj(z[j])) / 2
                z[i], z[j] = mid, np.conj(mid)
                done[i] = done[j] = True
                continue
        z[i] = z[i].real
        done[i] = True
    return z
