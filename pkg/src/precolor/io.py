"""Text formats: DIMACS ``.col`` graphs and ``v c`` (pre)coloring files.

All files are 1-indexed on disk; ids are shifted to 0-based at this boundary.
"""

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path

from .graph import Graph, GraphError


class FormatError(ValueError):
    """Raised when a file does not follow its grammar."""


def load_dimacs(text: str) -> Graph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise FormatError(f"line {lineno}: malformed header {raw.strip()!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(f"line {lineno}: malformed header {raw.strip()!r}") from None
            if n < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative counts in header")
        elif tag == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: malformed edge line {raw.strip()!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(f"line {lineno}: non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise FormatError(f"line {lineno}: self-loop at vertex {u}")
            key = (min(u, v) - 1, max(u, v) - 1)
            if key in seen:
                raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            edges.append(key)
        else:
            raise FormatError(f"line {lineno}: unknown line type {tag!r}")
    if n is None:
        raise FormatError("missing 'p edge n m' header")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but {len(edges)} were given")
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def save_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_assignment(text: str, n: int | None = None) -> dict[int, int]:
    """Parse ``v c`` lines (1-indexed vertex, positive color, ``#`` comments)."""
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'vertex color', got {raw.strip()!r}")
        try:
            v, c = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field") from None
        if v < 1 or (n is not None and v > n):
            raise FormatError(f"line {lineno}: vertex {v} out of range")
        if c < 1:
            raise FormatError(f"line {lineno}: color must be positive, got {c}")
        if v - 1 in out:
            raise FormatError(f"line {lineno}: vertex {v} assigned twice")
        out[v - 1] = c
    return out


def load_precoloring(text: str, n: int | None = None) -> dict[int, int]:
    return load_assignment(text, n)


def load_coloring(text: str, n: int) -> dict[int, int]:
    f = load_assignment(text, n)
    missing = [v for v in range(n) if v not in f]
    if missing:
        raise FormatError(f"coloring does not cover vertex {missing[0] + 1}")
    return f


def save_assignment(f: Mapping[int, int], header: str | None = None) -> str:
    lines = [f"# {header}"] if header else []
    lines.extend(f"{v + 1} {f[v]}" for v in sorted(f))
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return load_dimacs(Path(path).read_text())


def write_graph(path: str | Path, g: Graph) -> None:
    Path(path).write_text(save_dimacs(g))
