"""Linear relations among products of generalized controlled-Z gates, and the
hypergraph families built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable

import numpy as np

from .errors import BadParams, RelationDoesNotHold, TooLarge
from .hypergraph import Hypergraph, mask_from_vertices, parse_hypergraph
from .state import AlgebraElement, basis_indices

MAX_RELATION_QUBITS = 20


@dataclass(frozen=True)
class GateRelation:
    """``sum_S c_S prod_{e in S} C_e = 0`` on m qubits.

    ``terms`` holds ``(c_S, S)`` with S a frozenset of edge words over m
    vertices (vertex 1 most significant). The empty S stands for the identity.
    """

    m: int
    terms: tuple[tuple[object, frozenset[int]], ...]

    def __post_init__(self):
        seen = set()
        norm = []
        for c, S in self.terms:
            S = frozenset(S)
            if c == 0:
                raise BadParams("relation coefficients must be nonzero")
            if S in seen:
                raise BadParams("relation terms must be distinct edge sets")
            if any(e == 0 or e >> self.m for e in S):
                raise BadParams(f"edge outside 1..{self.m}")
            seen.add(S)
            norm.append((c, S))
        object.__setattr__(self, "terms", tuple(norm))

    @classmethod
    def from_lists(cls, m: int, terms: Iterable[tuple[object, Iterable[Iterable[int]]]]) -> "GateRelation":
        """Build from ``(coefficient, [[vertices of edge], ...])`` pairs."""
        return cls(m, tuple((c, frozenset(mask_from_vertices(m, e) for e in S)) for c, S in terms))


def relation_values(R: GateRelation) -> np.ndarray:
    """Value of the relation's left side on every basis string, scaled to integers."""
    if R.m > MAX_RELATION_QUBITS:
        raise TooLarge(f"relations limited to {MAX_RELATION_QUBITS} qubits")
    coeffs = [Fraction(c) for c, _ in R.terms]
    d = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    idx = basis_indices(R.m)
    total = np.zeros(1 << R.m, dtype=object if any(abs(c * d) > 2 ** 40 for c in coeffs) else np.int64)
    for c, (_, S) in zip(coeffs, R.terms):
        bits = np.zeros(1 << R.m, dtype=np.uint8)
        for e in S:
            bits ^= ((idx & e) == e).astype(np.uint8)
        total = total + int(c * d) * (1 - 2 * bits.astype(np.int64))
    return total


def relation_holds(R: GateRelation) -> bool:
    return not np.any(relation_values(R))


def two_qubit_relation() -> GateRelation:
    """-C_1 - C_2 + C_12 + C_1 C_2 C_12 = 0."""
    return GateRelation.from_lists(2, [(-1, [[1]]), (-1, [[2]]), (1, [[1, 2]]), (1, [[1], [2], [1, 2]])])


def four_cycle_relation() -> GateRelation:
    """C_234 C_341 - C_341 C_412 + C_412 C_123 - C_123 C_234 = 0."""
    return GateRelation.from_lists(4, [
        (1, [[2, 3, 4], [3, 4, 1]]),
        (-1, [[3, 4, 1], [4, 1, 2]]),
        (1, [[4, 1, 2], [1, 2, 3]]),
        (-1, [[1, 2, 3], [2, 3, 4]]),
    ])


def _succ(k: int, r: int) -> int:
    return k % (2 * r) + 1


def polygon_relation(r: int) -> GateRelation:
    """sum_j (C_{S-{2j-1}} C_{S-{2j}} - C_{S-{2j}} C_{S-{2j+1}}) = 0 on S = {1..2r}, indices cyclic."""
    if r < 2:
        raise BadParams("polygon relation needs r >= 2")
    S = set(range(1, 2 * r + 1))
    terms = []
    for j in range(1, r + 1):
        terms.append((1, [sorted(S - {2 * j - 1}), sorted(S - {2 * j})]))
        terms.append((-1, [sorted(S - {2 * j}), sorted(S - {_succ(2 * j, r)})]))
    return GateRelation.from_lists(2 * r, terms)


def build_from_relation(R: GateRelation) -> tuple[Hypergraph, AlgebraElement]:
    """Add one auxiliary vertex per term so that P of that vertex equals the term.

    Auxiliary vertices get labels m+1, m+2, ... in term order. The returned
    element ``sum_S c_S X_{v_S}`` makes Phi_M equal the relation's left side.
    """
    if any(c not in (1, -1) for c, _ in R.terms):
        raise BadParams("only +-1 coefficients are supported")
    if not relation_holds(R):
        raise RelationDoesNotHold("relation does not vanish on every basis string")
    m = R.m
    n = m + len(R.terms)
    words = []
    paulis = []
    for k, (c, S) in enumerate(R.terms):
        v = m + 1 + k
        vbit = 1 << (n - v)
        for e in S:
            # edge words over m vertices sit in the top m bits of an n-vertex word
            words.append((e << (n - m)) | vbit)
        paulis.append((int(c), "X", v))
    return Hypergraph(n, tuple(words)), AlgebraElement.from_paulis(n, paulis)


def polygon_labels(r: int) -> dict[str, int]:
    """Vertex labels: 1..2r, then a_1, b_1, ..., a_r, b_r."""
    out = {}
    for j in range(1, r + 1):
        out[f"a{j}"] = 2 * r + 2 * j - 1
        out[f"b{j}"] = 2 * r + 2 * j
    return out


def polygon_family(r: int) -> Hypergraph:
    """4r vertices and 4r edges; its stabilizer is spanned by sum_j (X_{a_j} - X_{b_j})."""
    if r < 2:
        raise BadParams("polygon family needs r >= 2")
    S = set(range(1, 2 * r + 1))
    lab = polygon_labels(r)
    edges = []
    for j in range(1, r + 1):
        a, b = lab[f"a{j}"], lab[f"b{j}"]
        edges += [
            [a, *(S - {2 * j - 1})],
            [a, *(S - {2 * j})],
            [b, *(S - {2 * j})],
            [b, *(S - {_succ(2 * j, r)})],
        ]
    return parse_hypergraph(4 * r, edges)


def polygon_element(r: int) -> AlgebraElement:
    lab = polygon_labels(r)
    terms = []
    for j in range(1, r + 1):
        terms += [(1, "X", lab[f"a{j}"]), (-1, "X", lab[f"b{j}"])]
    return AlgebraElement.from_paulis(4 * r, terms)


def star_family(k: int, m: int) -> Hypergraph:
    """Vertices 1..k each joined to the common set {k+1, ..., k+m-1}."""
    if k < 2 or m < 3:
        raise BadParams("star family needs k >= 2 and m >= 3")
    common = list(range(k + 1, k + m))
    return parse_hypergraph(k + m - 1, [[v, *common] for v in range(1, k + 1)])


def star_elements(k: int, m: int) -> list[AlgebraElement]:
    n = k + m - 1
    return [AlgebraElement.from_paulis(n, [(1, "X", 1), (-1, "X", j)]) for j in range(2, k + 1)]


def chain_family(k: int, m: int) -> Hypergraph:
    """Path of k vertices 1..k; consecutive ones share a private (m-1)-set.

    The essential hypergraph is the path graph, each shared set belongs to
    exactly two essential vertices, and the stabilizer algebra is zero.
    """
    if k < 2 or m < 3:
        raise BadParams("chain family needs k >= 2 and m >= 3")
    n = k + (k - 1) * (m - 1)
    edges = []
    nxt = k + 1
    for i in range(1, k):
        R = list(range(nxt, nxt + m - 1))
        nxt += m - 1
        edges += [[i, *R], [i + 1, *R]]
    return parse_hypergraph(n, edges)


def pair_and_triple() -> Hypergraph:
    return parse_hypergraph(4, [[1, 2], [2, 3, 4]])


def leaf_example() -> tuple[Hypergraph, AlgebraElement]:
    """Six qubits 1, 2, a=3, b=4, c=5, d=6 and the element -X_a - X_b + X_c + X_d."""
    G = parse_hypergraph(6, [[3, 1], [4, 2], [5, 1, 2], [6, 1], [6, 2], [6, 1, 2]])
    M = AlgebraElement.from_paulis(6, [(-1, "X", 3), (-1, "X", 4), (1, "X", 5), (1, "X", 6)])
    return G, M


def four_qubit_example() -> tuple[Hypergraph, AlgebraElement]:
    """Edges 123, 124, 14, 24 and the element -Z_1 - Z_2 + X_3 + X_4."""
    G = parse_hypergraph(4, [[1, 2, 3], [1, 2, 4], [1, 4], [2, 4]])
    M = AlgebraElement.from_paulis(4, [(-1, "Z", 1), (-1, "Z", 2), (1, "X", 3), (1, "X", 4)])
    return G, M
