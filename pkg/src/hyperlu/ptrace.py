"""Partial traces of hypergraph states as mixtures of hypergraph states.

Tracing out qubit a leaves the equal mixture of the states of delete(G, a)
and shrink(G, a); tracing a set U expands into 2^|U| delete/shrink words.
The converse direction rebuilds the n-qubit candidates whose one-qubit trace
is a given equal mixture.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .dense import DenseDensity, dense_density, weighted_sum
from .errors import CannotTraceAll, SizeMismatch, TooFewQubits, VertexOutOfRange
from .hypergraph import Hypergraph, delete, shrink_with_phase
from .state import SignState, build_state, signs_to_hypergraph


@dataclass(frozen=True)
class Component:
    weight: Fraction
    hypergraph: Hypergraph
    # global signs met while shrinking singleton edges; densities ignore them
    phase_flags: tuple[int, ...] = (1,)


@dataclass(frozen=True)
class HypergraphMixture:
    n: int
    components: tuple[Component, ...]

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[tuple[Fraction, Hypergraph, int]]) -> "HypergraphMixture":
        """Merge terms with equal hypergraphs; components sorted canonically."""
        acc: dict[Hypergraph, list] = {}
        for w, G, flag in terms:
            if G.n != n:
                raise SizeMismatch("mixture components on different vertex counts")
            slot = acc.setdefault(G, [Fraction(0), set()])
            slot[0] += Fraction(w)
            slot[1].add(flag)
        comps = [Component(w, G, tuple(sorted(flags))) for G, (w, flags) in acc.items()]
        comps.sort(key=lambda c: (len(c.hypergraph.edges), c.hypergraph.edges))
        mix = cls(n, tuple(comps))
        if sum(c.weight for c in comps) != 1:
            raise ValueError("mixture weights must sum to 1")
        return mix

    def weights(self) -> dict[Hypergraph, Fraction]:
        return {c.hypergraph: c.weight for c in self.components}

    def same_as(self, other: "HypergraphMixture") -> bool:
        """Equal as weighted hypergraph sets (phase flags ignored)."""
        return self.n == other.n and self.weights() == other.weights()

    def __len__(self):
        return len(self.components)


def _check(G: Hypergraph, a: int):
    if not 1 <= a <= G.n:
        raise VertexOutOfRange(f"vertex {a} not in 1..{G.n}")


def trace_one(G: Hypergraph, a: int) -> HypergraphMixture:
    _check(G, a)
    if G.n < 2:
        raise TooFewQubits("need at least two qubits to trace one out")
    S, phase = shrink_with_phase(G, a)
    half = Fraction(1, 2)
    return HypergraphMixture.from_terms(G.n - 1, [(half, delete(G, a), 1), (half, S, phase)])


def expansion_terms(G: Hypergraph, U: Iterable[int]) -> list[tuple[Fraction, Hypergraph, int, tuple[int, ...]]]:
    """Unmerged terms ``(weight, hypergraph, phase, deleted vertices)``, one per T subset of U."""
    U = sorted(set(U))
    for a in U:
        _check(G, a)
    if not U:
        raise VertexOutOfRange("empty vertex set")
    if len(U) >= G.n:
        raise CannotTraceAll("cannot trace out every qubit")
    w = Fraction(1, 2 ** len(U))
    out = []
    for choice in itertools.product((True, False), repeat=len(U)):
        H, phase = G, 1
        # highest label first, so the remaining labels stay valid
        for a, is_delete in sorted(zip(U, choice), reverse=True):
            if is_delete:
                H = delete(H, a)
            else:
                H, p = shrink_with_phase(H, a)
                phase *= p
        T = tuple(a for a, d in zip(U, choice) if d)
        out.append((w, H, phase, T))
    return out


def trace_set(G: Hypergraph, U: Iterable[int]) -> HypergraphMixture:
    """2^-|U| sum over T subset of U of D_T S_(U-T) G, merged."""
    terms = expansion_terms(G, U)
    return HypergraphMixture.from_terms(terms[0][1].n, [(w, H, p) for w, H, p, _ in terms])


def trace_iterated(G: Hypergraph, order: Iterable[int]) -> HypergraphMixture:
    """Trace the original labels one at a time in the given order."""
    order = list(order)
    if len(set(order)) != len(order):
        raise VertexOutOfRange("repeated vertex")
    if len(order) >= G.n:
        raise CannotTraceAll("cannot trace out every qubit")
    terms = [(Fraction(1), G, 1)]
    done: list[int] = []
    for a in order:
        _check(G, a)
        cur = a - sum(1 for b in done if b < a)
        nxt = []
        for w, H, p in terms:
            S, q = shrink_with_phase(H, cur)
            nxt += [(w / 2, delete(H, cur), p), (w / 2, S, p * q)]
        terms = nxt
        done.append(a)
    return HypergraphMixture.from_terms(G.n - len(order), terms)


def mixture_density(mix: HypergraphMixture) -> DenseDensity:
    return weighted_sum((c.weight, dense_density(build_state(c.hypergraph))) for c in mix.components)


class PairRelation(enum.Enum):
    SAME = "SamePairing"
    SWAPPED = "SwappedPairing"
    NOT_EQUAL = "NotEqual"


def mixture_pair_relation(H: Hypergraph, K: Hypergraph, H2: Hypergraph, K2: Hypergraph) -> PairRelation:
    """How rho_H + rho_K = rho_H2 + rho_K2 can hold: same pairing, swapped, or not at all."""
    if len({H.n, K.n, H2.n, K2.n}) != 1:
        raise SizeMismatch("hypergraphs on different vertex counts")
    if H == H2 and K == K2:
        return PairRelation.SAME
    if H == K2 and K == H2:
        return PairRelation.SWAPPED
    return PairRelation.NOT_EQUAL


@dataclass(frozen=True)
class Candidate:
    hypergraph: Hypergraph
    sign: int       # branch (|0> psi_first + sign |1> psi_second) / sqrt 2
    swapped: bool   # first half is psi_K rather than psi_H


def _concat(first: SignState, second: SignState, sign: int) -> SignState:
    tail = second.bits if sign == 1 else second.bits ^ 1
    return SignState(first.n + 1, np.concatenate([first.bits, tail]).astype(np.uint8))


def reconstruct_candidates(H: Hypergraph, K: Hypergraph) -> list[Candidate]:
    """n-qubit hypergraphs G' with trace over qubit 1 equal to (rho_H + rho_K) / 2.

    The '-' branch is exactly the case where {1} is an edge of G'.
    """
    if H.n != K.n:
        raise SizeMismatch("H and K must have the same vertex count")
    psi_h, psi_k = build_state(H), build_state(K)
    out: list[Candidate] = []
    seen: set[Hypergraph] = set()
    for swapped, sign in ((False, 1), (False, -1), (True, 1), (True, -1)):
        first, second = (psi_k, psi_h) if swapped else (psi_h, psi_k)
        G = signs_to_hypergraph(_concat(first, second, sign))
        if G in seen:
            continue
        tr = trace_one(G, 1)
        comps = [c.hypergraph for c in tr.components for _ in range(2 if c.weight == 1 else 1)]
        if mixture_pair_relation(comps[0], comps[1], H, K) is PairRelation.NOT_EQUAL:
            continue
        if G.has_edge([1]) != (sign == -1):
            raise AssertionError("singleton {1} does not match the branch sign")
        seen.add(G)
        out.append(Candidate(G, sign, swapped))
    return out
