"""Text serialization for uniform hypergraphs (.hg files).

Layout, one record per line:

    c free-form comment
    p hyp <n> <m> <s>
    e <v1> <v2> ... <vs>

The problem line appears exactly once and is followed by exactly m edge
lines.  Vertex ids are 1-based in the file and 0-based in memory.  The
writer emits edges lexicographically sorted with strictly increasing ids
inside each edge, LF line endings, and no trailing whitespace, so equal
hypergraphs always serialize to identical bytes.
"""

from __future__ import annotations

import os

from kindep.hypergraph import Hypergraph, HypergraphError


class HgParseError(HypergraphError):
    """Malformed .hg input; message carries the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_hg(text: str) -> Hypergraph:
    """Parse .hg text into a canonical Hypergraph.

    Comment lines and blank lines are skipped.  Out-of-order vertex ids
    within an edge line are tolerated and canonicalized; duplicate ids,
    wrong arity, out-of-range ids, and duplicate edges are errors.
    """
    n = m = s = -1
    header_line = 0
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if header_line:
                raise HgParseError(line_no, f"second problem line (first at line {header_line})")
            if len(fields) != 5 or fields[1] != "hyp":
                raise HgParseError(line_no, f"malformed problem line {line!r}, expected 'p hyp <n> <m> <s>'")
            try:
                n, m, s = (int(f) for f in fields[2:])
            except ValueError:
                raise HgParseError(line_no, f"non-integer field in problem line {line!r}") from None
            if n < 1 or m < 0 or s < 2:
                raise HgParseError(line_no, f"problem line values out of range: n={n} m={m} s={s}")
            header_line = line_no
        elif fields[0] == "e":
            if not header_line:
                raise HgParseError(line_no, "edge line before problem line")
            try:
                ids = [int(f) for f in fields[1:]]
            except ValueError:
                raise HgParseError(line_no, f"non-integer vertex id in edge line {line!r}") from None
            if len(ids) != s:
                raise HgParseError(line_no, f"edge has {len(ids)} vertices, expected {s}")
            for v in ids:
                if not 1 <= v <= n:
                    raise HgParseError(line_no, f"vertex id {v} out of range [1, {n}]")
            edge = tuple(sorted(v - 1 for v in ids))
            for a, b in zip(edge, edge[1:]):
                if a == b:
                    raise HgParseError(line_no, f"duplicate vertex {a + 1} within edge")
            if edge in seen:
                raise HgParseError(line_no, f"duplicate edge (first at line {seen[edge]})")
            seen[edge] = line_no
            edges.append(edge)
        else:
            raise HgParseError(line_no, f"unrecognized line type {fields[0]!r}")
    if not header_line:
        raise HgParseError(max(1, text.count("\n") + 1), "missing problem line")
    if len(edges) != m:
        raise HgParseError(
            max(1, text.count("\n") + 1),
            f"problem line announced {m} edges, found {len(edges)}",
        )
    return Hypergraph(n, s, tuple(edges))


def write_hg(h: Hypergraph, comments: tuple[str, ...] = ()) -> str:
    """Serialize to canonical .hg text (terminated by a final LF)."""
    lines = [f"c {c}".rstrip() for c in comments]
    lines.append(f"p hyp {h.n} {h.e} {h.s}")
    # edges are already canonically sorted on the value itself
    for edge in h.edges:
        lines.append("e " + " ".join(str(v + 1) for v in edge))
    return "\n".join(lines) + "\n"


def load_hg(path: str | os.PathLike[str]) -> Hypergraph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_hg(fh.read())


def save_hg(h: Hypergraph, path: str | os.PathLike[str], comments: tuple[str, ...] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(write_hg(h, comments))
