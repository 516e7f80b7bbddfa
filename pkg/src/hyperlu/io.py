"""Text formats: hypergraph files, relation files, DOT export, JSON results.

Hypergraph file::

    # comment
    n=4
    1 2
    2 3 4

The first non-blank line (after stripping ``#`` comments) is ``n=<int>``;
every later line is one edge as space-separated 1-based labels.

Relation file::

    m=2
    -1: 1
    -1: 2
    +1: 1,2
    +1: 1;2;1,2

Each term is ``<coefficient>: <edges>`` with edges separated by ``;`` and the
vertices of one edge by ``,``. An empty edge list is the identity.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any

import jsonschema

from .errors import ParseError
from .families import GateRelation
from .hypergraph import MAX_VERTICES, Hypergraph, mask_from_vertices

_HEADER = re.compile(r"\s*([nm])\s*=\s*(\S*)\s*$")
_COEF = re.compile(r"[+-]?\d+(/\d+)?$")


def _strip(line: str) -> str:
    return line.split("#", 1)[0]


def _tokens(line: str):
    """(column, token) pairs, columns 1-based."""
    for m in re.finditer(r"\S+", line):
        yield m.start() + 1, m.group()


def _header(lines: list[str], key: str, limit: int) -> tuple[int, int]:
    for lineno, raw in enumerate(lines, 1):
        text = _strip(raw)
        if not text.strip():
            continue
        m = _HEADER.match(text)
        if not m or m.group(1) != key:
            raise ParseError(f"expected header '{key}=<int>'", lineno, len(text) - len(text.lstrip()) + 1)
        col = m.start(2) + 1
        if not m.group(2).isdigit():
            raise ParseError(f"'{key}' must be a positive integer", lineno, col)
        value = int(m.group(2))
        if not 1 <= value <= limit:
            raise ParseError(f"'{key}' must lie in 1..{limit}", lineno, col)
        return lineno, value
    raise ParseError(f"missing header '{key}=<int>'", max(len(lines), 1), 1)


def _vertex(tok: str, n: int, lineno: int, col: int) -> int:
    if not tok.isdigit():
        raise ParseError(f"bad vertex label {tok!r}", lineno, col)
    v = int(tok)
    if not 1 <= v <= n:
        raise ParseError(f"vertex {v} not in 1..{n}", lineno, col)
    return v


def parse_hypergraph_text(text: str) -> Hypergraph:
    lines = text.splitlines()
    start, n = _header(lines, "n", MAX_VERTICES)
    words: list[int] = []
    seen: dict[int, int] = {}
    for lineno in range(start + 1, len(lines) + 1):
        line = _strip(lines[lineno - 1])
        toks = list(_tokens(line))
        if not toks:
            continue
        verts = []
        for col, tok in toks:
            v = _vertex(tok, n, lineno, col)
            if v in verts:
                raise ParseError(f"vertex {v} repeated in edge", lineno, col)
            verts.append(v)
        w = mask_from_vertices(n, verts)
        if w in seen:
            raise ParseError(f"duplicate edge (first on line {seen[w]})", lineno, toks[0][0])
        seen[w] = lineno
        words.append(w)
    return Hypergraph(n, tuple(words))


def read_hypergraph(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph_text(fh.read())


def format_hypergraph(G: Hypergraph) -> str:
    lines = [f"n={G.n}"] + [" ".join(map(str, e)) for e in G.edge_lists()]
    return "\n".join(lines) + "\n"


def parse_relation_text(text: str) -> GateRelation:
    lines = text.splitlines()
    start, m = _header(lines, "m", MAX_VERTICES)
    terms = []
    for lineno in range(start + 1, len(lines) + 1):
        line = _strip(lines[lineno - 1])
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected '<coefficient>: <edges>'", lineno, len(line) - len(line.lstrip()) + 1)
        head, body = line.split(":", 1)
        coef = head.strip()
        if not _COEF.match(coef):
            raise ParseError(f"bad coefficient {coef!r}", lineno, len(head) - len(head.lstrip()) + 1)
        offset = len(head) + 2  # column of the first character after ':'
        edges = []
        pos = 0
        for chunk in body.split(";"):
            col0 = offset + pos
            pos += len(chunk) + 1
            if not chunk.strip():
                if len(body.split(";")) > 1:
                    raise ParseError("empty edge", lineno, col0)
                continue
            verts = []
            cpos = 0
            for part in chunk.split(","):
                col = col0 + cpos + (len(part) - len(part.lstrip()))
                cpos += len(part) + 1
                tok = part.strip()
                v = _vertex(tok, m, lineno, col)
                if v in verts:
                    raise ParseError(f"vertex {v} repeated in edge", lineno, col)
                verts.append(v)
            edges.append(mask_from_vertices(m, verts))
        if len(set(edges)) != len(edges):
            raise ParseError("edge repeated within a term", lineno, offset)
        c = Fraction(coef)
        terms.append((int(c) if c.denominator == 1 else c, frozenset(edges)))
    try:
        return GateRelation(m, tuple(terms))
    except ValueError as exc:
        raise ParseError(str(exc), start, 1) from exc


def read_relation(path: str) -> GateRelation:
    with open(path, encoding="utf-8") as fh:
        return parse_relation_text(fh.read())


def format_relation(R: GateRelation) -> str:
    from .hypergraph import vertices_of
    out = [f"m={R.m}"]
    for c, S in R.terms:
        edges = sorted((vertices_of(R.m, e) for e in S), key=lambda t: (len(t), t))
        cs = f"+{c}" if c > 0 else str(c)
        out.append(f"{cs}: " + ";".join(",".join(map(str, e)) for e in edges))
    return "\n".join(out) + "\n"


# DOT --------------------------------------------------------------------------

def to_dot(G: Hypergraph, name: str = "H") -> str:
    """Undirected DOT graph: 2-edges as plain edges, larger edges through a
    small diamond hub, singleton edges as double-circled vertices."""
    singles = {e[0] for e in G.edge_lists() if len(e) == 1}
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(1, G.n + 1):
        lines.append(f"  {v} [peripheries=2];" if v in singles else f"  {v};")
    hub = 0
    for e in G.edge_lists():
        if len(e) == 2:
            lines.append(f"  {e[0]} -- {e[1]};")
        elif len(e) > 2:
            hub += 1
            h = f"e{hub}"
            lines.append(f'  {h} [shape=diamond, label="", width=0.2, height=0.2, style=filled, fillcolor=black];')
            lines += [f"  {h} -- {v};" for v in e]
    lines.append("}")
    return "\n".join(lines) + "\n"


# JSON result documents ---------------------------------------------------------

RATIONAL = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

RESULT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "input_digest", "payload", "version"],
    "additionalProperties": False,
    "properties": {
        "command": {"enum": ["build", "stabilizer", "essential", "relation-check", "family",
                             "symmetric", "majorana", "ptrace", "reconstruct", "export-dot"]},
        "input_digest": {"type": "string", "pattern": "^sha256:[0-9a-f]{64}$"},
        "payload": {"type": "object"},
        "version": {"type": "string"},
    },
    "$defs": {"rational": RATIONAL},
}


def rational(x) -> list[int]:
    """Rationals travel as [numerator, denominator]."""
    f = Fraction(x)
    return [f.numerator, f.denominator]


def from_rational(pair) -> Fraction:
    return Fraction(pair[0], pair[1])


def digest(*chunks: bytes) -> str:
    h = hashlib.sha256()
    for c in chunks:
        h.update(len(c).to_bytes(8, "big"))
        h.update(c)
    return "sha256:" + h.hexdigest()


def _check_no_floats(obj, path="payload"):
    # rationals must not leak out as decimals; floats are allowed only in
    # explicitly numeric fields (roots, points), which carry a "float_" prefix
    if isinstance(obj, dict):
        for k, v in obj.items():
            if not str(k).startswith("float_"):
                _check_no_floats(v, f"{path}.{k}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _check_no_floats(v, f"{path}[{i}]")
    elif isinstance(obj, float):
        raise jsonschema.ValidationError(f"float at {path}; rationals are [num, den] pairs")


def result_document(command: str, input_digest: str, payload: dict, version: str) -> dict:
    doc = {"command": command, "input_digest": input_digest, "payload": payload, "version": version}
    validate_document(doc)
    return doc


def validate_document(doc: dict) -> None:
    jsonschema.validate(doc, RESULT_SCHEMA)
    _check_no_floats(doc["payload"])


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> dict:
    doc = json.loads(text)
    validate_document(doc)
    return doc
