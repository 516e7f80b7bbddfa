import warnings

import numpy as np
import pytest

from hyperlu.errors import NotSymmetric
from hyperlu.families import pair_and_triple
from hyperlu.hypergraph import make_complete
from hyperlu.state import build_state
from hyperlu.symmetric.majorana import majorana_config
from hyperlu.symmetric.rotations import (Rotation, find_point_symmetries, tensor_symmetry_phase,
                                         verify_tensor_symmetry)


def _random_rotation(rng):
    return Rotation.from_axis_angle(rng.normal(size=3), rng.uniform(0, 2 * np.pi))


def test_su2_matches_rotation_matrix():
    rng = np.random.default_rng(0)
    paulis = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.diag([1, -1])]
    for _ in range(20):
        R = _random_rotation(rng)
        U = R.su2()
        for i, P in enumerate(paulis):
            image = U @ P @ U.conj().T
            want = sum(R.matrix()[j, i] * paulis[j] for j in range(3))
            assert np.allclose(image, want, atol=1e-12)


def test_compose_matches_matrices():
    rng = np.random.default_rng(1)
    a, b = _random_rotation(rng), _random_rotation(rng)
    assert np.allclose(a.compose(b).matrix(), a.matrix() @ b.matrix(), atol=1e-12)


def test_rectangle_has_klein_group():
    pts = np.array([[0.6, 0, 0.8], [-0.6, 0, 0.8], [0.6, 0, -0.8], [-0.6, 0, -0.8]])
    assert len(find_point_symmetries(pts)) == 4


def test_generic_points_only_identity():
    rng = np.random.default_rng(5)
    pts = rng.normal(size=(5, 3))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    G = find_point_symmetries(pts)
    assert len(G) == 1 and G[0].angle() < 1e-9


def test_collinear_points_warn():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        G = find_point_symmetries([[0, 0, 1], [0, 0, 1], [0, 0, -1], [0, 0, -1]])
    assert w
    assert len(G) == 2


def test_four_three_group():
    psi = build_state(make_complete(4, [3]))
    G = find_point_symmetries(majorana_config(psi).points)
    assert len(G) == 4
    assert all(verify_tensor_symmetry(psi, R) for R in G)
    assert verify_tensor_symmetry(psi, Rotation.half_turn([0, 1, 0]))
    assert not verify_tensor_symmetry(psi, Rotation.half_turn([1, 0, 0]))
    assert not verify_tensor_symmetry(psi, Rotation.half_turn([0, 0, 1]))


def test_six_three_x_half_turn():
    psi = build_state(make_complete(6, [3]))
    assert verify_tensor_symmetry(psi, Rotation.half_turn([1, 0, 0]))
    assert abs(tensor_symmetry_phase(psi, Rotation.half_turn([1, 0, 0])) + 1) < 1e-12


@pytest.mark.parametrize("n", range(3, 9))
def test_symmetry_bridge(n):
    # point symmetries lift to tensor symmetries, and the Pauli half-turns
    # that are tensor symmetries show up among the point symmetries
    for m in range(3, n + 1):
        psi = build_state(make_complete(n, [m]))
        G = find_point_symmetries(majorana_config(psi).points)
        assert all(verify_tensor_symmetry(psi, R) for R in G)
        for axis in np.eye(3):
            H = Rotation.half_turn(axis)
            if verify_tensor_symmetry(psi, H):
                assert any(H.distance(R) < 1e-7 for R in G)


def test_non_symmetric_refused():
    with pytest.raises(NotSymmetric):
        verify_tensor_symmetry(build_state(pair_and_triple()), Rotation.identity())
