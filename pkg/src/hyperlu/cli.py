"""Command-line interface.

Every subcommand prints a plain-text summary, or with ``--json`` a result
document (command, sha256 of the inputs, payload, tool version). Exit codes:
0 success, 1 usage error, 2 parse error, 3 computation refused.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction
from math import comb

import numpy as np

from . import __version__, io
from .errors import HyperLUError, ParseError
from .families import (build_from_relation, polygon_element, polygon_family, relation_holds,
                       star_elements, star_family)
from .hypergraph import Hypergraph, complete_sizes, essential_hypergraph, make_complete
from .ptrace import reconstruct_candidates, trace_set
from .stabilizer import stabilizer_algebra, structural_report
from .state import build_state
from .symmetric import majorana as maj
from .symmetric import parity
from .symmetric.rotations import MAX_TENSOR_QUBITS, find_point_symmetries, tensor_symmetry_phase

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_REFUSED = 0, 1, 2, 3
MAX_PRINTED_SIGNS = 16


class UsageError(Exception):
    pass


class SizeRefusal(HyperLUError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


class _Ctx:
    """Inputs read so far, for the result digest."""

    def __init__(self, command: str, argv: list[str]):
        self.command = command
        self.chunks = [command.encode()]
        self.argv = argv

    def read(self, path: str) -> bytes:
        with open(path, "rb") as fh:
            data = fh.read()
        self.chunks.append(data)
        return data

    def hypergraph(self, path: str) -> Hypergraph:
        return io.parse_hypergraph_text(self.read(path).decode("utf-8"))


# helpers ------------------------------------------------------------------------

def _edges(G: Hypergraph) -> list[list[int]]:
    return [list(e) for e in G.edge_lists()]


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def _bits(i: int, n: int) -> str:
    return format(i, f"0{n}b")


def _frac(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        vals = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers") from None
    if not vals:
        raise UsageError(f"{what} is empty")
    return vals


def _complex(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


# commands ------------------------------------------------------------------------

def cmd_build(args, ctx):
    G = ctx.hypergraph(args.file)
    psi = build_state(G)
    n = G.n
    sym = maj.is_permutation_invariant(psi)
    payload = {"n": n, "edges": _edges(G), "permutation_invariant": sym}
    text = []
    if n <= MAX_PRINTED_SIGNS:
        minus = [_bits(i, n) for i in np.flatnonzero(psi.bits)]
        payload["signs"] = psi.sign_string()
        payload["minus_indices"] = minus
        text += [f"n={n}", f"signs: {psi.sign_string()}", "minus at: " + (" ".join(minus) or "(none)")]
    elif not sym:
        raise SizeRefusal(f"sign vector not printed for n > {MAX_PRINTED_SIGNS} unless symmetric")
    if sym:
        pat = "".join(_sign_char(int(psi.signs[(1 << k) - 1])) for k in range(n + 1))
        payload["weight_signs"] = pat
        text.append(f"signs by weight 0..{n}: {pat}")
    return payload, "\n".join(text)


def cmd_stabilizer(args, ctx):
    G = ctx.hypergraph(args.file)
    B = stabilizer_algebra(G)
    rep = structural_report(G, B)
    elems = B.basis
    payload = {
        "n": G.n,
        "dimension": B.dimension,
        "columns": "theta, r_1..r_n (X), s_1..s_n (Y), t_1..t_n (Z)",
        "basis": [list(v) for v in B.vectors],
        "basis_text": [str(e) for e in elems],
        "report": rep.as_dict(),
    }
    text = [f"dimension {B.dimension}"]
    text += [f"  {e}" for e in elems]
    d = rep.as_dict()
    text.append("structural checks:")
    tx = d["theta_plus_x_form"]
    text.append(f"  theta + X form (min edge size >= 3): applies={tx['applies']} holds={tx['holds']}")
    uz = d["unshared_vertex_zero"]
    text.append(f"  r_b = 0 on unshared vertices {uz['vertices']}: applies={uz['applies']} holds={uz['holds']}")
    cg = d["connected_graph_criterion"]
    if cg["hypotheses"] is not None:
        text.append(f"  connected-graph criterion: hypotheses={cg['hypotheses']}")
        text.append(f"    predicts zero={cg['predicts_zero']} pattern verified={cg['two_minus_pattern_verified']}"
                    f" mismatch={cg['mismatch']}")
        if cg["mismatch"]:
            text.append("    MISMATCH: hypotheses hold but the algebra is not zero")
    return payload, "\n".join(text)


def cmd_essential(args, ctx):
    G = ctx.hypergraph(args.file)
    E = essential_hypergraph(G)
    out = io.format_hypergraph(E)
    return {"n": E.n, "edges": _edges(E), "file": out}, out.rstrip("\n")


def cmd_relation_check(args, ctx):
    R = io.parse_relation_text(ctx.read(args.file).decode("utf-8"))
    ok = relation_holds(R)
    payload = {"m": R.m, "terms": len(R.terms), "holds": ok}
    text = ["holds" if ok else "does not hold"]
    if ok and args.build and all(c in (1, -1) for c, _ in R.terms):
        G, M = build_from_relation(R)
        B = stabilizer_algebra(G)
        payload["built"] = {"n": G.n, "edges": _edges(G), "element": str(M),
                            "element_in_algebra": B.spans_same(list(B.basis) + [M]) and B.dimension > 0}
        text.append(f"hypergraph on {G.n} vertices, stabilizing element {M}")
    return payload, "\n".join(text)


def cmd_family(args, ctx):
    ctx.chunks.append(" ".join(ctx.argv).encode())
    kind = args.kind
    props: dict = {}
    if kind == "polygon":
        G = polygon_family(args.r)
        props = {"stabilizer_dimension": 1, "stabilizer_element": str(polygon_element(args.r))}
    elif kind == "star":
        G = star_family(args.k, args.m)
        props = {"stabilizer_dimension": args.k - 1,
                 "stabilizer_elements": [str(e) for e in star_elements(args.k, args.m)]}
    elif kind == "complete":
        sizes = _parse_int_list(args.sizes, "--sizes")
        G = make_complete(args.n, sizes)
        props = {"sizes": sizes, "x_symmetry": parity.x_symmetry_class(args.n, sizes).value,
                 "y_symmetric": parity.y_symmetric(args.n, sizes)}
        if len(sizes) == 1 and sizes[0] >= 3:
            props["stabilizer_dimension"] = 0
    else:
        inst = parity.pauli_family(args.part, args.j, args.l, args.m)
        G = make_complete(inst.n, [inst.m])
        props = {"part": inst.kind, "j": inst.j, "l": inst.l, "n": inst.n, "m": inst.m,
                 "symmetry": inst.expected}
    body = io.format_hypergraph(G)
    head = "".join(f"# expected {k}: {v}\n" for k, v in props.items())
    return {"kind": kind, "expected": props, "file": body}, (head + body).rstrip("\n")


def cmd_symmetric(args, ctx):
    G = ctx.hypergraph(args.file)
    psi = build_state(G)
    n = G.n
    if not maj.is_permutation_invariant(psi):
        return {"n": n, "permutation_invariant": False}, "not permutation invariant"
    sizes = complete_sizes(G)
    d = maj.dicke_coeffs(psi)
    pat = "".join(_sign_char(s) for s in d.signs)
    xcls = parity.x_symmetry_class(n, sizes)
    ysym = parity.y_symmetric(n, sizes)
    payload = {
        "n": n, "permutation_invariant": True, "complete_sizes": sizes, "weight_signs": pat,
        "dicke_squared": [io.rational(Fraction(comb(n, k), 2 ** n)) for k in range(n + 1)],
        "x_verdict": xcls.value, "y_verdict": ysym,
        "conditions": parity.condition_table(n, sizes),
        "palindrome": parity.is_palindrome(psi), "anti_palindrome": parity.is_anti_palindrome(psi),
    }
    text = [f"permutation invariant; complete sizes {sizes}", f"signs by weight 0..{n}: {pat}",
            f"X verdict: {xcls.value}", f"Y verdict: {ysym}"]
    if n <= MAX_TENSOR_QUBITS:
        dx = parity.dense_x_class(psi)
        dy = parity.dense_y_symmetric(psi)
        payload["dense"] = {"x": dx.value, "y": dy, "agrees": dx == xcls and dy == ysym}
        text.append(f"dense check: X {dx.value}, Y {dy} ({'agrees' if dx == xcls and dy == ysym else 'DISAGREES'})")
    return payload, "\n".join(text)


def cmd_majorana(args, ctx):
    G = ctx.hypergraph(args.file)
    psi = build_state(G)
    cfg = maj.majorana_config(psi)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        group = find_point_symmetries(cfg.points)
    rots = []
    for R in group:
        entry = {"description": R.describe(), "float_quaternion": [round(q, 12) + 0.0 for q in R.quat]}
        if G.n <= MAX_TENSOR_QUBITS:
            ph = tensor_symmetry_phase(psi, R)
            entry["tensor_symmetry"] = ph is not None
            entry["float_phase"] = None if ph is None else _complex(np.round(ph, 12) + 0)
        rots.append(entry)
    P = cfg.poly
    payload = {
        "n": G.n,
        "polynomial": {"integer_coefficients": list(P.ints), "norm_squared": P.norm_sq,
                       "exact": None if P.exact_coeffs() is None else [io.rational(c) for c in P.exact_coeffs()],
                       "text": str(P)},
        "float_roots": [{"value": _complex(np.round(r, 12) + 0), "multiplicity": k} for r, k in cfg.roots],
        "float_points": [[round(float(x), 12) + 0.0 for x in p] for p in cfg.points],
        "group_order": len(group),
        "rotations": rots,
        "warnings": [str(w.message) for w in caught],
    }
    text = [f"p(z) = {P}", "roots:"]
    text += [f"  {r.real:+.12f} {r.imag:+.12f}i" + (f"  (x{k})" if k > 1 else "") for r, k in cfg.roots]
    text.append("points:")
    text += [f"  ({p[0]:+.9f}, {p[1]:+.9f}, {p[2]:+.9f})" for p in cfg.points]
    text.append(f"rotation group of order {len(group)}:")
    text += [f"  {r['description']}" + ("" if "tensor_symmetry" not in r else
                                         f"  tensor symmetry: {r['tensor_symmetry']}") for r in rots]
    text += [f"warning: {w}" for w in payload["warnings"]]
    if args.svg:
        from .plotting import save_bloch_svg
        axes = [(R.axis(), "C0") for R in group if R.axis() is not None]
        save_bloch_svg(cfg.points, args.svg, title=f"n={G.n}", axes=axes)
        payload["svg"] = args.svg
        text.append(f"wrote {args.svg}")
    return payload, "\n".join(text)


def _mixture_payload(mix):
    return [{"weight": io.rational(c.weight), "edges": _edges(c.hypergraph), "phase_flags": list(c.phase_flags)}
            for c in mix.components]


def cmd_ptrace(args, ctx):
    G = ctx.hypergraph(args.file)
    U = _parse_int_list(args.qubits, "--qubits")
    ctx.chunks.append(",".join(map(str, sorted(set(U)))).encode())
    mix = trace_set(G, U)
    payload = {"n": mix.n, "traced": sorted(set(U)), "components": _mixture_payload(mix)}
    text = [f"mixture on {mix.n} qubits ({len(mix)} components):"]
    for c in mix.components:
        edges = " ".join("{" + ",".join(map(str, e)) + "}" for e in c.hypergraph.edge_lists()) or "(no edges)"
        text.append(f"  {_frac(c.weight)}  {edges}")
    return payload, "\n".join(text)


def cmd_reconstruct(args, ctx):
    H = ctx.hypergraph(args.h_file)
    K = ctx.hypergraph(args.k_file)
    q = args.qubit
    n = H.n + 1
    if not 1 <= q <= n:
        raise UsageError(f"--qubit must lie in 1..{n}")
    ctx.chunks.append(str(q).encode())
    # candidates carry the new qubit at position 1; move it to q
    perm = [q] + [v if v < q else v + 1 for v in range(1, n)]
    cands = reconstruct_candidates(H, K)
    out = []
    text = [f"{len(cands)} candidate(s) on {n} qubits, traced qubit {q} (relabelling {perm}):"]
    for c in cands:
        Gq = c.hypergraph.permuted(perm)
        out.append({"edges": _edges(Gq), "branch": _sign_char(c.sign), "swapped": c.swapped,
                    "singleton_edge": Gq.has_edge([q])})
        edges = " ".join("{" + ",".join(map(str, e)) + "}" for e in Gq.edge_lists()) or "(no edges)"
        text.append(f"  [{_sign_char(c.sign)}{' swapped' if c.swapped else ''}] {edges}")
    return {"n": n, "qubit": q, "permutation": perm, "candidates": out}, "\n".join(text)


def cmd_export_dot(args, ctx):
    G = ctx.hypergraph(args.file)
    dot = io.to_dot(G)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(dot)
    return {"dot": dot}, dot.rstrip("\n")


# parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON result document")
    p = _Parser(prog="hyperlu", description="LU symmetries of hypergraph states")
    p.add_argument("--version", action="version", version=f"hyperlu {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("build", parents=[common], help="sign vector of a hypergraph state")
    s.add_argument("file")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("stabilizer", parents=[common], help="exact LU stabilizer algebra")
    s.add_argument("file")
    s.set_defaults(func=cmd_stabilizer)

    s = sub.add_parser("essential", parents=[common], help="essential hypergraph")
    s.add_argument("file")
    s.set_defaults(func=cmd_essential)

    s = sub.add_parser("relation-check", parents=[common], help="verify a gate relation")
    s.add_argument("file")
    s.add_argument("--build", action="store_true", help="also build the hypergraph realizing it")
    s.set_defaults(func=cmd_relation_check)

    s = sub.add_parser("family", help="emit a hypergraph from a named family")
    fam = s.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    f = fam.add_parser("polygon", parents=[common])
    f.add_argument("--r", type=int, required=True)
    f = fam.add_parser("star", parents=[common])
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f = fam.add_parser("complete", parents=[common])
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--sizes", required=True, help="comma-separated edge sizes")
    f = fam.add_parser("pauli", parents=[common], help="complete states with a known Pauli symmetry")
    f.add_argument("--kind", dest="part", choices="abcd", required=True)
    f.add_argument("--j", type=int, required=True)
    f.add_argument("--l", type=int, required=True)
    f.add_argument("--m", type=int, default=None, help="edge size for part a")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("symmetric", parents=[common], help="Pauli tensor-power symmetries")
    s.add_argument("file")
    s.set_defaults(func=cmd_symmetric)

    s = sub.add_parser("majorana", parents=[common], help="Majorana polynomial, points and rotations")
    s.add_argument("file")
    s.add_argument("--svg", metavar="PATH", help="write a Bloch-sphere plot")
    s.set_defaults(func=cmd_majorana)

    s = sub.add_parser("ptrace", parents=[common], help="partial trace as a hypergraph mixture")
    s.add_argument("file")
    s.add_argument("--qubits", required=True, help="comma-separated 1-based qubits")
    s.set_defaults(func=cmd_ptrace)

    s = sub.add_parser("reconstruct", parents=[common], help="states whose one-qubit trace is (H + K)/2")
    s.add_argument("h_file")
    s.add_argument("k_file")
    s.add_argument("--qubit", type=int, default=1, help="label of the traced qubit (default 1)")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT drawing")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    ctx = _Ctx(args.command, argv)
    try:
        payload, text = args.func(args, ctx)
    except UsageError as exc:
        print(f"hyperlu: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hyperlu: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"hyperlu: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HyperLUError as exc:
        print(f"hyperlu: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    if args.json:
        doc = io.result_document(args.command, io.digest(*ctx.chunks), payload, __version__)
        sys.stdout.write(io.dumps(doc))
    else:
        print(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
