"""Acceptance criteria, one PASS/FAIL line each (shown in the terminal summary)."""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from hyperlu.dense import dense_density, dense_partial_trace
from hyperlu.families import (chain_family, two_qubit_relation, four_cycle_relation, pair_and_triple, leaf_example, four_qubit_example,
                              polygon_element, polygon_family, polygon_relation, relation_holds,
                              star_elements, star_family)
from hyperlu.hypergraph import delete, make_complete, shrink
from hyperlu.ptrace import (expansion_terms, mixture_density, reconstruct_candidates, trace_iterated,
                            trace_one, trace_set)
from hyperlu.stabilizer import stabilizer_algebra, structural_report
from hyperlu.state import build_state, signs_to_hypergraph
from hyperlu.symmetric.majorana import cross_ratio, majorana_config, reciprocal_pairing
from hyperlu.symmetric.parity import (XSymmetry, binom_parity, checker_verdict, dense_x_class,
                                      dense_y_symmetric, pauli_family)
from hyperlu.symmetric.rotations import Rotation, find_point_symmetries, verify_tensor_symmetry
from hyperlu.errors import BadParams

from conftest import ACCEPTANCE
from oracles import pascal_parity, random_hypergraph

PAIR_TOL = 1e-9
CROSS_RATIO_TOL = 1e-9


@contextmanager
def criterion(label, budget=None):
    """Record PASS/FAIL for the block; a time budget in seconds is part of the check."""
    info = {}
    t0 = time.perf_counter()
    ok = False
    try:
        yield info
        ok = True
    finally:
        dt = time.perf_counter() - t0
        timed = budget is None or dt < budget
        status = "PASS" if ok and timed else "FAIL"
        extra = f" ({info['detail']})" if "detail" in info else ""
        limit = f" budget {budget:g} s" if budget is not None else ""
        ACCEPTANCE.append(f"{status}  {label}: {dt:.3f} s{limit}{extra}")
    assert timed, f"{label} took {dt:.3f} s, budget {budget} s"


def test_c01_pair_and_triple_signs():
    with criterion("1 sign vector of edges {1,2},{2,3,4}") as info:
        G = pair_and_triple()
        build_state(G)
        best = min(_timed(lambda: build_state(G)) for _ in range(20))
        psi = build_state(G)
        minus = {format(int(i), "04b") for i in np.flatnonzero(psi.bits)}
        info["detail"] = f"best build {best * 1e3:.3f} ms"
        assert minus == {"0111", "1100", "1101", "1110"}
        assert best < 1e-3


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def test_c02_relations():
    with criterion("2 gate relations (m=2, m=4, polygon r=2..5)", budget=1.0):
        rels = [two_qubit_relation(), four_cycle_relation()] + [polygon_relation(r) for r in (2, 3, 4, 5)]
        assert all(relation_holds(R) for R in rels)


def test_c03a_leaf_example():
    with criterion("3a six-qubit leaf example: dim 1, span {-Xa-Xb+Xc+Xd}") as info:
        G, M = leaf_example()
        B = stabilizer_algebra(G)
        info["detail"] = f"dimension {B.dimension}: " + ", ".join(map(str, B.basis))
        assert B.dimension == 1 and B.spans_same([M])


def test_c03b_four_qubit_example():
    with criterion("3b four-qubit example: dim 1, span {-Z1-Z2+X3+X4}"):
        G, M = four_qubit_example()
        B = stabilizer_algebra(G)
        assert B.dimension == 1 and B.spans_same([M])


def test_c03c_polygon():
    for r, budget in ((2, None), (3, 60.0)):
        with criterion(f"3c polygon r={r}: dim 1, span {{sum_j (X_aj - X_bj)}}", budget=budget):
            B = stabilizer_algebra(polygon_family(r))
            assert B.dimension == 1 and B.spans_same([polygon_element(r)])


def test_c03d_star():
    with criterion("3d star family (k,m) in {(2,3),(3,3),(4,3),(3,4)}: dim k-1"):
        for k, m in [(2, 3), (3, 3), (4, 3), (3, 4)]:
            B = stabilizer_algebra(star_family(k, m))
            assert B.dimension == k - 1 and B.spans_same(star_elements(k, m))


def test_c04_structure():
    with criterion("4 large-edge structure: s = t = 0, r_b = 0 on unshared b") as info:
        rng = random.Random(2024)
        violations = uniform = 0
        for i in range(200):
            n = rng.randint(3, 8)
            if i % 2:
                m = rng.randint(3, n)
                G = random_hypergraph(rng, n, max_edges=8, min_size=m, max_size=m)
            else:
                G = random_hypergraph(rng, n, max_edges=8, min_size=3)
            rep = structural_report(G)
            if rep.real_x_form_applies and not rep.real_x_form_holds:
                violations += 1
            if rep.unshared_zero_applies:
                uniform += 1
                violations += not rep.unshared_zero_holds
        info["detail"] = f"{violations} violations, {uniform} uniform samples"
        assert violations == 0 and uniform > 50


def test_c05_complete_trivial():
    with criterion("5 m-complete states, 3 <= m <= n <= 8: dim 0"):
        for n in range(3, 9):
            for m in range(3, n + 1):
                assert stabilizer_algebra(make_complete(n, [m])).dimension == 0


def test_c06_report():
    with criterion("6 connected-graph criterion: polygon mismatch flagged, verified pattern gives dim 0") as info:
        for r in (2, 3):
            rep = structural_report(polygon_family(r))
            assert rep.predicts_zero and rep.dimension == 1 and rep.mismatch
        checked = 0
        for k, m in [(2, 3), (3, 3), (4, 3), (3, 4)]:
            rep = structural_report(chain_family(k, m))
            if k >= 3:
                assert rep.pattern_verified
            if rep.pattern_verified:
                checked += 1
                assert rep.dimension == 0 and not rep.mismatch
        info["detail"] = f"{checked} verified-pattern instances"


def test_c07_majorana_four_three():
    with criterion("7 4-qubit 3-complete Majorana geometry", budget=1.0) as info:
        psi = build_state(make_complete(4, [3]))
        cfg = majorana_config(psi)
        assert cfg.poly.exact_coeffs() == [Fraction(c, 4) for c in (1, -4, 6, 4, 1)]
        pairs = reciprocal_pairing(cfg.roots, tol=PAIR_TOL)
        assert pairs is not None
        (l, m), _ = pairs
        cr = cross_ratio(l, m, 1j, -1j)
        assert abs(cr.imag) <= CROSS_RATIO_TOL
        G = find_point_symmetries(cfg.points)
        assert len(G) == 4
        assert verify_tensor_symmetry(psi, Rotation.half_turn([0, 1, 0]))
        partners = [R for R in G if R.angle() > 1 and R.distance(Rotation.half_turn([0, 1, 0])) > 1e-6]
        assert len(partners) == 2 and all(verify_tensor_symmetry(psi, R) for R in partners)
        info["detail"] = f"|Im cross ratio| = {abs(cr.imag):.1e}"


def test_c08_family_verdicts():
    with criterion("8 Pauli-symmetric families (j <= 3, l <= 3, n <= 14) vs dense") as info:
        count = 0
        for kind in "abcd":
            for j in (1, 2, 3):
                for l in range(0, 4):
                    for m in (range(1, 2 ** j) if kind == "a" else [None]):
                        try:
                            inst = pauli_family(kind, j, l, m)
                        except BadParams:
                            continue
                        if inst.n > 14:
                            continue
                        psi = build_state(make_complete(inst.n, [inst.m]))
                        v = checker_verdict(inst.n, inst.m)
                        dx, dy = dense_x_class(psi).value, dense_y_symmetric(psi)
                        assert v == {"x": dx, "y": dy}
                        assert (dy if inst.expected == "+Y" else dx == inst.expected)
                        count += 1
        for n, m, want in [(6, 3, "+X"), (3, 2, "-X"), (4, 3, "+Y")]:
            psi = build_state(make_complete(n, [m]))
            assert dense_y_symmetric(psi) if want == "+Y" else dense_x_class(psi) == XSymmetry(want)
        info["detail"] = f"{count} instances"


def test_c09_kummer():
    with criterion("9 binomial parity vs mod-2 Pascal, 0 <= m <= w <= 64") as info:
        rows = pascal_parity(64)
        cases = [(w, m) for w in range(65) for m in range(w + 1)]
        assert len(cases) == 2145
        assert all(binom_parity(w, m) == rows[w][m] for w, m in cases)
        info["detail"] = f"{len(cases)} cases"


def test_c10_partial_traces():
    with criterion("10 partial-trace calculus, 200 random hypergraphs n <= 8"):
        rng = random.Random(10)
        for _ in range(200):
            n = rng.randint(2, 8)
            G = random_hypergraph(rng, n)
            rho = dense_density(build_state(G))
            for a in range(1, n + 1):
                assert mixture_density(trace_one(G, a)) == dense_partial_trace(rho, [a])
            U = rng.sample(range(1, n + 1), rng.randint(1, min(3, n - 1)))
            direct = trace_set(G, U)
            assert len(expansion_terms(G, U)) == 2 ** len(U)
            assert mixture_density(direct) == dense_partial_trace(rho, U)
            for order in itertools.permutations(U):
                assert trace_iterated(G, order).same_as(direct)


def test_c11_reconstruction():
    with criterion("11 reconstruction from (delete, shrink), 100 random G n <= 8") as info:
        rng = random.Random(11)
        sizes = set()
        for _ in range(100):
            n = rng.randint(2, 8)
            G = random_hypergraph(rng, n)
            H, K = delete(G, 1), shrink(G, 1)
            cands = reconstruct_candidates(H, K)
            sizes.add(len(cands))
            assert G in [c.hypergraph for c in cands]
            target = trace_one(G, 1)
            for c in cands:
                assert trace_one(c.hypergraph, 1).same_as(target)
                assert c.hypergraph.has_edge([1]) == (c.sign == -1)
        info["detail"] = f"candidate counts {sorted(sizes)}"


def test_c12_mobius_round_trip():
    with criterion("12 hypergraph -> signs -> hypergraph, 1000 random n <= 12"):
        rng = random.Random(12)
        for _ in range(1000):
            n = rng.randint(1, 12)
            G = random_hypergraph(rng, n, max_edges=3 * n)
            assert signs_to_hypergraph(build_state(G)) == G
