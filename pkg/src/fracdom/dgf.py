"""Text formats: DGF digraph files and vertex-weight files.

DGF: '#' comment lines are allowed anywhere; the first non-comment line
is ``n <count>``; every following non-comment line is ``u v`` meaning
the arc u -> v (0-indexed).  Emission is canonical: no comments, arcs
in lexicographic order, one trailing newline, so emit(parse(text)) is
byte-deterministic.

Weight files: one ``v num/den`` line per vertex; vertices not listed
default to weight 0.  Emission lists every vertex explicitly.
"""

from __future__ import annotations

from .digraph import Digraph
from .errors import GraphError, ParseError
from .rational import RZERO, format_rat, parse_rat


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_dgf(text: str) -> Digraph:
    """Parse DGF text into a Digraph; ParseError carries the line number."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError("missing 'n <count>' header") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"expected 'n <count>', got {header!r}", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
    if n < 0:
        raise ParseError(f"negative vertex count {n}", lineno)

    arcs = []
    out = [0] * n  # incremental validation mirrors the Digraph constructor

    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad arc endpoints {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"arc ({u}, {v}) outside vertex range 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"loop arc ({u}, {v})", lineno)
        if (out[u] >> v) & 1 or (out[v] >> u) & 1:
            raise ParseError(f"arc ({u}, {v}) duplicates or reverses an earlier arc", lineno)
        out[u] |= 1 << v
        arcs.append((u, v))
    try:
        return Digraph(n, arcs)
    except GraphError as exc:  # unreachable given the per-line checks
        raise ParseError(str(exc)) from exc


def emit_dgf(g: Digraph) -> str:
    """Canonical DGF text for a digraph."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs())
    return "\n".join(lines) + "\n"


def parse_weights(text: str, n: int):
    """Parse a weight file into an n-tuple of rationals (missing -> 0)."""
    values = [RZERO] * n
    seen = set()
    for lineno, line in _content_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'v num/den', got {line!r}", lineno)
        try:
            v = int(parts[0])
        except ValueError:
            raise ParseError(f"bad vertex index {parts[0]!r}", lineno) from None
        if not 0 <= v < n:
            raise ParseError(f"vertex {v} outside range 0..{n - 1}", lineno)
        if v in seen:
            raise ParseError(f"duplicate weight for vertex {v}", lineno)
        seen.add(v)
        try:
            values[v] = parse_rat(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad rational {parts[1]!r}", lineno) from exc
    return tuple(values)


def emit_weights(weights) -> str:
    """Canonical weight-file text: every vertex, 'v num/den' per line."""
    lines = [f"{v} {format_rat(w)}" for v, w in enumerate(weights)]
    return "\n".join(lines) + ("\n" if lines else "")
