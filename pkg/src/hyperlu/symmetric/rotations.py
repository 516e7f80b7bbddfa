"""Rotations of the Bloch sphere, their SU(2) lifts, and the search for
rotations permuting a multiset of Majorana points."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.spatial.transform import Rotation as _SciRot

from ..dense import PAULI, dense_apply_1q, dense_state
from ..errors import ArgOutOfRange, NotSymmetric, TooLarge
from ..state import SignState

MAX_TENSOR_QUBITS = 16


def _canonical_quat(q) -> tuple[float, float, float, float]:
    q = np.asarray(q, dtype=float)
    q = q / np.linalg.norm(q)
    # q and -q are the same rotation; pick the first nonzero component positive
    for c in q:
        if abs(c) > 1e-12:
            if c < 0:
                q = -q
            break
    return tuple(float(c) for c in q)


@dataclass(frozen=True)
class Rotation:
    """Unit quaternion (w, x, y, z) and the sign of its SU(2) lift.

    The lift is ``sign * (w I - i (x X + y Y + z Z))``; both signs give the
    same rotation of the sphere.
    """

    quat: tuple[float, float, float, float]
    sign: int = 1

    def __post_init__(self):
        if abs(np.linalg.norm(self.quat) - 1) > 1e-12:
            raise ArgOutOfRange("rotation quaternion must have unit norm")
        if self.sign not in (1, -1):
            raise ArgOutOfRange("lift sign must be +1 or -1")

    @classmethod
    def identity(cls) -> "Rotation":
        return cls((1.0, 0.0, 0.0, 0.0))

    @classmethod
    def from_axis_angle(cls, axis, angle: float) -> "Rotation":
        axis = np.asarray(axis, dtype=float)
        axis = axis / np.linalg.norm(axis)
        s = np.sin(angle / 2)
        return cls(_canonical_quat([np.cos(angle / 2), *(s * axis)]))

    @classmethod
    def half_turn(cls, axis) -> "Rotation":
        return cls.from_axis_angle(axis, np.pi)

    @classmethod
    def from_matrix(cls, R: np.ndarray) -> "Rotation":
        x, y, z, w = _SciRot.from_matrix(R).as_quat()
        return cls(_canonical_quat([w, x, y, z]))

    def matrix(self) -> np.ndarray:
        w, x, y, z = self.quat
        return _SciRot.from_quat([x, y, z, w]).as_matrix()

    def su2(self) -> np.ndarray:
        w, x, y, z = self.quat
        I, X, Y, Z = (np.array(PAULI[k], dtype=complex) for k in "IXYZ")
        U = w * I - 1j * (x * X + y * Y + z * Z)
        return self.sign * U

    def lifted(self, sign: int) -> "Rotation":
        return Rotation(self.quat, sign)

    def compose(self, other: "Rotation") -> "Rotation":
        """``self`` after ``other``."""
        w1, x1, y1, z1 = self.quat
        w2, x2, y2, z2 = other.quat
        q = (w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
             w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
             w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
             w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2)
        return Rotation(_canonical_quat(q))

    def distance(self, other: "Rotation") -> float:
        """Distance between rotations, insensitive to quaternion sign."""
        a, b = np.array(self.quat), np.array(other.quat)
        return float(min(np.linalg.norm(a - b), np.linalg.norm(a + b)))

    def angle(self) -> float:
        return float(2 * np.arccos(min(1.0, abs(self.quat[0]))))

    def axis(self) -> np.ndarray | None:
        v = np.array(self.quat[1:])
        nv = np.linalg.norm(v)
        return None if nv < 1e-12 else v / nv

    def describe(self) -> str:
        ax = self.axis()
        if ax is None:
            return "identity"
        deg = round(np.degrees(self.angle()), 6)
        a = [round(float(c), 6) + 0.0 for c in ax]  # + 0.0 turns -0.0 into 0.0
        return f"{deg:g} deg about ({a[0]:.6f}, {a[1]:.6f}, {a[2]:.6f})"


def _frame(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    c = np.cross(a, b)
    c /= np.linalg.norm(c)
    return np.column_stack([a, c, np.cross(a, c)])


def _multiset_match(P: np.ndarray, Q: np.ndarray, tol: float) -> bool:
    D = np.linalg.norm(P[:, None, :] - Q[None, :, :], axis=2)
    rows, cols = linear_sum_assignment(D)
    return bool(np.max(D[rows, cols]) <= tol)


def _dedupe(rots: list[Rotation], tol: float) -> list[Rotation]:
    out: list[Rotation] = []
    for R in rots:
        if all(R.distance(S) > tol for S in out):
            out.append(R)
    return out


def _closed(group: list[Rotation], tol: float) -> bool:
    return all(any(A.compose(B).distance(C) <= tol for C in group)
               for A, B in itertools.product(group, repeat=2))


def _search(P: np.ndarray, tol: float) -> tuple[list[Rotation], bool]:
    ident = Rotation.identity()
    p0 = P[0]
    cross = np.linalg.norm(np.cross(p0, P), axis=1)
    k = int(np.argmax(cross))
    if cross[k] <= 1e-6:
        # all points on one axis: the symmetry group is continuous
        warnings.warn("Majorana points are collinear; symmetry group is infinite, "
                      "returning only identity and the axis-reversing half-turn if any",
                      RuntimeWarning, stacklevel=3)
        perp = np.cross(p0, [1.0, 0.0, 0.0])
        if np.linalg.norm(perp) < 0.5:
            perp = np.cross(p0, [0.0, 1.0, 0.0])
        flip = Rotation.half_turn(perp)
        found = [ident]
        if _multiset_match(P @ flip.matrix().T, P, tol) and flip.distance(ident) > tol:
            found.append(flip)
        return found, True
    p1 = P[k]
    F = _frame(p0, p1)
    d01 = float(p0 @ p1)
    found = [ident]
    for i, j in itertools.permutations(range(len(P)), 2):
        if abs(float(P[i] @ P[j]) - d01) > max(1e3 * tol, 1e-6):
            continue
        if np.linalg.norm(np.cross(P[i], P[j])) <= 1e-6:
            continue
        M = _frame(P[i], P[j]) @ F.T
        if _multiset_match(P @ M.T, P, tol):
            found.append(Rotation.from_matrix(M))
    group = _dedupe(found, max(tol, 1e-12) * 10)
    return group, _closed(group, max(tol, 1e-12) * 100)


def find_point_symmetries(points, tol: float = 1e-9) -> list[Rotation]:
    """All rotations mapping the point multiset onto itself, identity first."""
    P = np.atleast_2d(np.asarray(points, dtype=float))
    if P.shape[0] < 1 or P.shape[1] != 3:
        raise ArgOutOfRange("need at least one 3-vector")
    if not 1e-12 <= tol <= 1e-6:
        raise ArgOutOfRange("tolerance must lie in [1e-12, 1e-6]")
    group, closed = _search(P, tol)
    if not closed and tol < 1e-7:
        warnings.warn(f"rotation set not closed at tol={tol:g}; retrying at 1e-7",
                      RuntimeWarning, stacklevel=2)
        group, closed = _search(P, 1e-7)
    if not closed:
        warnings.warn("rotation set not closed under composition", RuntimeWarning, stacklevel=2)
    return group


# tensor-power action -----------------------------------------------------------

def _symmetric_check(psi: SignState) -> None:
    from .majorana import is_permutation_invariant
    if not is_permutation_invariant(psi):
        raise NotSymmetric("state is not permutation invariant")


def tensor_power_image(psi: SignState, U: np.ndarray) -> np.ndarray:
    """U^{(x)n} |psi>, normalized, as complex amplitudes."""
    if psi.n > MAX_TENSOR_QUBITS:
        raise TooLarge(f"tensor-power check limited to {MAX_TENSOR_QUBITS} qubits")
    st = dense_state(psi)
    for a in range(1, psi.n + 1):
        st = dense_apply_1q(st, a, U)
    return st.to_complex()


def tensor_symmetry_phase(psi: SignState, R: Rotation, tol: float = 1e-9) -> complex | None:
    """Phase e^{i phi} with U^{(x)n} psi = e^{i phi} psi for the + lift, or None."""
    _symmetric_check(psi)
    v = dense_state(psi).to_complex()
    w = tensor_power_image(psi, R.lifted(1).su2())
    ov = complex(np.vdot(v, w))
    if abs(abs(ov) - 1) > tol:
        return None
    if np.max(np.abs(w - ov * v)) > tol:
        return None
    return ov / abs(ov)


def verify_tensor_symmetry(psi: SignState, R: Rotation, tol: float = 1e-9) -> bool:
    """True iff some lift U of R has U^{(x)n} psi equal to psi up to a global phase.

    The phase is the free e^{i theta} of the local unitary group; see
    ``tensor_symmetry_phase`` for its value. The lift sign only contributes
    (-1)^n, so both lifts agree on the verdict.
    """
    return tensor_symmetry_phase(psi, R, tol) is not None
