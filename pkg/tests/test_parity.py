import pytest

from hyperlu.errors import BadParams
from hyperlu.hypergraph import make_complete
from hyperlu.state import build_state
from hyperlu.symmetric.parity import (XSymmetry, binom_parity, checker_verdict, condition_table,
                                      dense_x_class, dense_y_symmetric, pauli_family, is_anti_palindrome,
                                      is_palindrome, sizes_from_pattern, weight_parities,
                                      x_symmetry_class, y_symmetric)

from oracles import pascal_parity


def test_binom_parity_matches_pascal():
    rows = pascal_parity(64)
    for w in range(65):
        for m in range(w + 1):
            assert binom_parity(w, m) == rows[w][m]


def test_binom_parity_outside_range():
    assert binom_parity(3, 5) == 0


def test_checker_matches_dense():
    for n in range(3, 13):
        for m in range(3, n + 1):
            psi = build_state(make_complete(n, [m]))
            assert x_symmetry_class(n, m) == dense_x_class(psi)
            assert y_symmetric(n, m) == dense_y_symmetric(psi)


def test_mixed_sizes_match_dense():
    for n in range(2, 10):
        for sizes in ([1, 3], [2, 4], [2, 3, n]):
            sizes = sorted({s for s in sizes if s <= n})
            psi = build_state(make_complete(n, sizes))
            assert x_symmetry_class(n, sizes) == dense_x_class(psi)
            assert y_symmetric(n, sizes) == dense_y_symmetric(psi)


@pytest.mark.parametrize("n,m,want", [(6, 3, XSymmetry.PLUS), (3, 2, XSymmetry.MINUS)])
def test_small_x_cases(n, m, want):
    assert x_symmetry_class(n, m) is want


def test_four_three_is_y_symmetric():
    assert y_symmetric(4, 3)
    assert x_symmetry_class(4, 3) is XSymmetry.NEITHER


def test_palindromes():
    assert is_palindrome(build_state(make_complete(6, [3])))
    assert is_anti_palindrome(build_state(make_complete(3, [2])))


def test_family_instances_match_checker():
    for kind in "abcd":
        for j in (1, 2, 3):
            for l in range(0, 4):
                ms = range(1, 2 ** j) if kind == "a" else [None]
                for m in ms:
                    try:
                        inst = pauli_family(kind, j, l, m)
                    except BadParams:
                        continue
                    if inst.n > 14:
                        continue
                    v = checker_verdict(inst.n, inst.m)
                    if inst.expected == "+Y":
                        assert v["y"]
                    else:
                        assert v["x"] == inst.expected


def test_family_rejects_bad_params():
    for args in [("a", 2, 1, 0), ("b", 1, 2, None), ("c", 1, 1, None), ("d", 1, 0, None), ("e", 1, 1, None)]:
        with pytest.raises(BadParams):
            pauli_family(*args)


def test_sizes_from_pattern_inverts_weight_parities():
    for n in range(1, 12):
        for sizes in ([1], [2], [3], [1, 2], [2, 5]):
            sizes = [s for s in sizes if s <= n]
            bits = weight_parities(n, sizes)
            assert sizes_from_pattern(bits) == sizes


def test_condition_table_rows():
    rows = condition_table(4, 3)
    assert len(rows) == 5


def test_y_for_complete_graph_with_n_two_mod_four():
    # i^n = -1 is absorbed by the weight-independent sign flip
    for n in (2, 6, 10):
        assert y_symmetric(n, 2)
        assert dense_y_symmetric(build_state(make_complete(n, [2])))
