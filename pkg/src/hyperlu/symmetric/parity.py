"""X^{(x)n} / Y^{(x)n} symmetry of complete hypergraph states via binomial parity.

The m-complete n-qubit state has sign (-1)^C(wt I, m) on |I>; X^{(x)n} and
Y^{(x)n} send weight w to weight n - w, so both symmetries reduce to parity
conditions on binomial coefficients, evaluated here with Kummer's criterion:
C(r+s, s) is odd iff r and s share no binary 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..dense import PAULI, dense_apply_1q, dense_state
from ..errors import ArgOutOfRange, BadParams
from ..state import SignState


class XSymmetry(enum.Enum):
    PLUS = "+X"
    MINUS = "-X"
    NEITHER = "neither"


def binom_parity(w: int, m: int) -> int:
    """C(w, m) mod 2."""
    if w < 0 or m < 0:
        raise ArgOutOfRange("binomial arguments must be nonnegative")
    if m > w:
        return 0
    return int((w - m) & m == 0)


def _sizes(n: int, m) -> list[int]:
    # an empty size list is the all-plus state
    sizes = [m] if isinstance(m, int) else list(m)
    for s in sizes:
        if not 1 <= s <= n:
            raise ArgOutOfRange(f"edge size {s} not in 1..{n}")
    return sizes


def weight_parities(n: int, m: int | Iterable[int]) -> list[int]:
    """Sign exponent at each Hamming weight 0..n of the (sizes)-complete state."""
    sizes = _sizes(n, m)
    return [sum(binom_parity(w, s) for s in sizes) % 2 for w in range(n + 1)]


def x_symmetry_class(n: int, m: int | Iterable[int]) -> XSymmetry:
    f = weight_parities(n, m)
    if all(f[w] == f[n - w] for w in range(n + 1)):
        return XSymmetry.PLUS
    if all(f[w] != f[n - w] for w in range(n + 1)):
        return XSymmetry.MINUS
    return XSymmetry.NEITHER


def _y_shift(n: int) -> int | None:
    # Y^{(x)n}|I> = i^n (-1)^wt(I) |I^c>; i^n = (-1)^(n/2) for even n, and odd n
    # leaves an imaginary factor that no real sign vector can absorb
    return n // 2 % 2 if n % 2 == 0 else None


def y_symmetric(n: int, m: int | Iterable[int]) -> bool:
    f = weight_parities(n, m)
    c = _y_shift(n)
    return c is not None and all((f[w] + w + c) % 2 == f[n - w] for w in range(n + 1))


def condition_table(n: int, m: int | Iterable[int]) -> list[dict]:
    """Per-weight parities behind the X and Y verdicts (for reports)."""
    f = weight_parities(n, m)
    c = _y_shift(n) or 0
    return [{"w": w, "parity_w": f[w], "parity_n_minus_w": f[n - w],
             "x_plus": f[w] == f[n - w], "x_minus": f[w] != f[n - w],
             "y": (f[w] + w + c) % 2 == f[n - w]} for w in range(n + 1)]


# dense confirmation ---------------------------------------------------------

def pauli_tensor_image(psi: SignState, pauli: str):
    """P^{(x)n} |psi> as exact integer (re, im) vectors, unnormalized."""
    st = dense_state(psi)
    for a in range(1, psi.n + 1):
        st = dense_apply_1q(st, a, PAULI[pauli])
    return st.re, st.im


def dense_x_class(psi: SignState) -> XSymmetry:
    re, im = pauli_tensor_image(psi, "X")
    s = psi.signs.astype(np.int64)
    if np.any(im):
        return XSymmetry.NEITHER
    if np.array_equal(re, s):
        return XSymmetry.PLUS
    if np.array_equal(re, -s):
        return XSymmetry.MINUS
    return XSymmetry.NEITHER


def dense_y_symmetric(psi: SignState) -> bool:
    re, im = pauli_tensor_image(psi, "Y")
    return not np.any(im) and np.array_equal(re, psi.signs.astype(np.int64))


def is_palindrome(psi: SignState) -> bool:
    return bool(np.array_equal(psi.bits, psi.bits[::-1]))


def is_anti_palindrome(psi: SignState) -> bool:
    return bool(np.all(psi.bits != psi.bits[::-1]))


# constructed families ---------------------------------------------------------

@dataclass(frozen=True)
class FamilyInstance:
    kind: str
    j: int
    l: int
    n: int
    m: int
    expected: str  # "+X", "-X" or "+Y"


def pauli_family(kind: str, j: int, l: int, m: int | None = None) -> FamilyInstance:
    """Instances of the four complete-state families with a known Pauli symmetry.

    (a) 1 <= m <= 2^j - 1, n = (l+1) 2^j + m - 1        -> +X
    (b) l odd, m = 2^j, n = (l+1) 2^j + m - 1             -> +X
    (c) l even, m = 2^j, n = (l+1) 2^j + m - 1            -> -X
    (d) l >= 1, m = 2^j + 1, n = 2^(j+1) l                -> +Y
    """
    if j < 1:
        raise BadParams("j must be >= 1")
    kind = kind.lower()
    if kind == "a":
        if l < 0 or m is None or not 1 <= m <= 2 ** j - 1:
            raise BadParams("part (a) needs l >= 0 and 1 <= m <= 2^j - 1")
        return FamilyInstance("a", j, l, (l + 1) * 2 ** j + m - 1, m, "+X")
    if kind in ("b", "c"):
        if m is not None and m != 2 ** j:
            raise BadParams(f"part ({kind}) fixes m = 2^j")
        if kind == "b" and (l < 1 or l % 2 == 0):
            raise BadParams("part (b) needs odd l >= 1")
        if kind == "c" and (l < 0 or l % 2):
            raise BadParams("part (c) needs even l >= 0")
        m = 2 ** j
        return FamilyInstance(kind, j, l, (l + 1) * 2 ** j + m - 1, m, "+X" if kind == "b" else "-X")
    if kind == "d":
        if l < 1:
            raise BadParams("part (d) needs l >= 1")
        if m is not None and m != 2 ** j + 1:
            raise BadParams("part (d) fixes m = 2^j + 1")
        return FamilyInstance("d", j, l, 2 ** (j + 1) * l, 2 ** j + 1, "+Y")
    raise BadParams(f"unknown part {kind!r}")


def checker_verdict(n: int, m: int | Iterable[int]) -> dict:
    """Both parity verdicts in one dict."""
    return {"x": x_symmetry_class(n, m).value, "y": y_symmetric(n, m)}


def sizes_from_pattern(bits) -> list[int]:
    """Edge sizes m with sum_m C(w, m) = bits[w] (mod 2) for every weight w.

    Binomial inversion mod 2: C(w, m) is odd iff m is a bitwise subset of w,
    so the coefficient of size m is the XOR of bits[w] over w subset of m.
    A returned 0 means a global sign.
    """
    return [m for m in range(len(bits))
            if sum(bits[w] for w in range(m + 1) if w & m == w) % 2]
