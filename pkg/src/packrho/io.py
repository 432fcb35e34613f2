"""Graph and coloring file formats.

* graph6 - the standard 6-bit printable encoding (upper triangle, column
  by column); an optional ``>>graph6<<`` header is accepted.
* DIMACS ``.col`` - ``c`` comments, one ``p edge N M`` line, ``e u v`` edges
  with 1-based vertex ids.
* edge list - optional ``n N`` header, then ``u v`` per line (0-based),
  ``#`` comments.  Without the header n is one more than the largest id.
* coloring files - one 1-based color per line in vertex-id order, ``#``
  comments.

Writers always emit edges sorted, so output is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError
from .graph import Graph

FORMATS = ("graph6", "dimacs", "edgelist")


@dataclass(frozen=True)
class GraphDocument:
    format: str
    text: str
    name: str | None = None


def parse(doc: GraphDocument) -> Graph:
    if doc.format == "graph6":
        return parse_graph6(doc.text)
    if doc.format == "dimacs":
        return parse_dimacs(doc.text)
    if doc.format == "edgelist":
        return parse_edgelist(doc.text)
    raise ValueError(f"unknown graph format {doc.format!r}")


def write(g: Graph, format: str, name: str | None = None) -> GraphDocument:
    if format == "graph6":
        text = write_graph6(g) + "\n"
    elif format == "dimacs":
        text = write_dimacs(g, name)
    elif format == "edgelist":
        text = write_edgelist(g)
    else:
        raise ValueError(f"unknown graph format {format!r}")
    return GraphDocument(format, text, name)


def guess_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".col", ".dimacs"):
        return "dimacs"
    return "edgelist"


def read_graph(path: str | Path, format: str | None = None) -> Graph:
    text = Path(path).read_text()
    return parse(GraphDocument(format or guess_format(path), text, Path(path).name))


# ---------------------------------------------------------------------------
# graph6

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def write_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adjacency_bits[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    offset = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        offset = len(_HEADER)
    if not s:
        raise ParseError("byte 0", "empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {pos + offset}", f"invalid graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] != 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        body = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        body = vals[8:]
    else:
        raise ParseError(f"byte {offset}", "truncated graph6 size field")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(
            f"byte {offset + len(vals) - len(body)}",
            f"expected {need} data bytes for n={n}, got {len(body)}",
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# DIMACS

def write_dimacs(g: Graph, name: str | None = None) -> str:
    lines = []
    if name:
        lines.append(f"c {name}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        where = f"line {lineno}"
        if tok[0] == "p":
            if n is not None:
                raise ParseError(where, "second 'p' line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError(where, "expected 'p edge N M'")
            try:
                n, _ = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError(where, "non-integer in 'p' line") from None
        elif tok[0] == "e":
            if n is None:
                raise ParseError(where, "edge before 'p' line")
            if len(tok) != 3:
                raise ParseError(where, "expected 'e u v'")
            try:
                u, v = int(tok[1]) - 1, int(tok[2]) - 1
            except ValueError:
                raise ParseError(where, "non-integer vertex id") from None
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(where, f"vertex out of range 1..{n}")
            if u == v:
                raise ParseError(where, "loop")
            edges.append((u, v))
        else:
            raise ParseError(where, f"unknown line type {tok[0]!r}")
    if n is None:
        raise ParseError("line 1", "missing 'p' line")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge list

def write_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        where = f"line {lineno}"
        if tok[0] == "n":
            if len(tok) != 2 or not tok[1].isdigit():
                raise ParseError(where, "expected 'n N'")
            n = int(tok[1])
            continue
        if len(tok) != 2:
            raise ParseError(where, "expected 'u v'")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(where, "non-integer vertex id") from None
        if u < 0 or v < 0:
            raise ParseError(where, "negative vertex id")
        if u == v:
            raise ParseError(where, "loop")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    if n is None:
        n = top
    elif top > n:
        raise ParseError("header", f"vertex id {top - 1} exceeds n={n}")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# coloring files

def parse_coloring(text: str) -> list[int]:
    colors = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            c = int(line)
        except ValueError:
            raise ParseError(f"line {lineno}", f"not an integer: {line!r}") from None
        if c < 1:
            raise ParseError(f"line {lineno}", "colors are 1-based")
        colors.append(c)
    return colors


def write_coloring(colors, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.extend(str(c) for c in colors)
    return "\n".join(lines) + "\n"
