from fractions import Fraction

import numpy as np
import pytest

from hyperlu.errors import NotSymmetric
from hyperlu.families import pair_and_triple
from hyperlu.hypergraph import Hypergraph, make_complete
from hyperlu.state import build_state
from hyperlu.symmetric.majorana import (bloch_to_root, complete_sizes_from_pattern, cross_ratio,
                                        dicke_coeffs, is_hypergraph_dicke, is_permutation_invariant,
                                        majorana_config, majorana_polynomial, polynomial_roots,
                                        reciprocal_pairing, roots_to_bloch, symmetrized_state)

from oracles import dicke_vector, overlap_up_to_phase, symmetrized_product


def test_four_three_polynomial():
    P = majorana_polynomial(dicke_coeffs(build_state(make_complete(4, [3]))))
    assert P.exact_coeffs() == [Fraction(c, 4) for c in (1, -4, 6, 4, 1)]
    assert str(P) == "1/4 (1 - 4z + 6z^2 + 4z^3 + z^4)"


def test_four_three_pairing_and_cross_ratio():
    cfg = majorana_config(build_state(make_complete(4, [3])))
    pairs = reciprocal_pairing(cfg.roots)
    assert pairs is not None
    assert all(abs(l * m + 1) <= 1e-9 for l, m in pairs)
    (l, m), _ = pairs
    assert abs(cross_ratio(l, m, 1j, -1j).imag) <= 1e-9


def test_symmetrized_points_reproduce_state():
    for n in range(2, 9):
        for m in range(1, n + 1):
            psi = build_state(make_complete(n, [m]))
            cfg = majorana_config(psi)
            assert len(cfg.points) == n
            target = psi.signs.astype(float)
            assert overlap_up_to_phase(symmetrized_state(cfg.points), target) > 1 - 1e-9
            if n <= 6:
                assert overlap_up_to_phase(symmetrized_product(cfg.points), target) > 1 - 1e-9


def test_points_on_unit_sphere():
    cfg = majorana_config(build_state(make_complete(7, [3, 5])))
    assert np.allclose(np.linalg.norm(cfg.points, axis=1), 1, atol=1e-12)


def test_roots_are_roots():
    cfg = majorana_config(build_state(make_complete(8, [3])))
    c = np.array(cfg.poly.coeffs, dtype=complex)
    for z in cfg.flat_roots():
        assert abs(np.polyval(c[::-1], z)) <= 1e-8 * max(1, abs(z)) ** len(c)


def test_projection_round_trip():
    rng = np.random.default_rng(1)
    for z in rng.normal(size=20) + 1j * rng.normal(size=20):
        p = roots_to_bloch([(z, 1)])[0]
        assert abs(bloch_to_root(p) - z) <= 1e-8 * max(1, abs(z))


def test_multiplicities():
    # (z - 1)^3 (z + 2)
    coeffs = np.polynomial.polynomial.polyfromroots([1, 1, 1, -2])
    roots = polynomial_roots(list(coeffs))
    mults = sorted(m for _, m in roots)
    assert mults == [1, 3]


def test_exact_integer_path_multiplicity():
    roots = polynomial_roots([1, -4, 6, -4, 1])
    assert len(roots) == 1 and roots[0][1] == 4 and abs(roots[0][0] - 1) < 1e-12


def test_dicke_states():
    # |D_n^(k)>: root 0 with multiplicity k and n - k roots at infinity
    for n, k in [(4, 0), (4, 2), (5, 5), (3, 1)]:
        cfg = majorana_config(dicke_vector(n, k))
        assert cfg.at_infinity == n - k
        assert overlap_up_to_phase(symmetrized_state(cfg.points), dicke_vector(n, k)) > 1 - 1e-9


def test_d42_is_not_a_hypergraph_state():
    d = dicke_coeffs(dicke_vector(4, 2))
    assert is_hypergraph_dicke(d) is None


def test_non_symmetric_state_refused():
    assert not is_permutation_invariant(build_state(pair_and_triple()))
    with pytest.raises(NotSymmetric):
        dicke_coeffs(build_state(pair_and_triple()))


def test_plus_state_points_all_at_plus_x():
    cfg = majorana_config(build_state(Hypergraph(4)))
    assert np.allclose(cfg.points, [[1, 0, 0]] * 4, atol=1e-6)


def test_complete_sizes_from_pattern():
    d = dicke_coeffs(build_state(make_complete(6, [2, 5])))
    assert complete_sizes_from_pattern(is_hypergraph_dicke(d)) == [2, 5]
    assert complete_sizes_from_pattern([-1, 1, 1]) is None
