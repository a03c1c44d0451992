"""Reading and writing graphs: graph6 strings and plain edge lists."""
from __future__ import annotations

from typing import List, Tuple

from .errors import InvalidInput
from .graph import Graph


def _decode_n(data: List[int]) -> Tuple[int, int]:
    if not data:
        raise InvalidInput("empty graph6 string")
    if data[0] < 63:
        return data[0], 1
    if len(data) >= 4 and data[1] < 63:
        return (data[1] << 12) | (data[2] << 6) | data[3], 4
    if len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        return n, 8
    raise InvalidInput("truncated graph6 size field")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional '>>graph6<<' header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InvalidInput("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= b <= 63 for b in data):
        raise InvalidInput(f"invalid graph6 character in {s!r}")
    n, used = _decode_n(data)
    if n < 1:
        raise InvalidInput("graph6 graph has no vertices")
    body = data[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise InvalidInput(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for b in body:
        bits.extend((b >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise InvalidInput("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):      # upper triangle, column by column
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i + 1, j + 1) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(b + 63) for b in head + body)


def parse_edge_list(text: str) -> Graph:
    """One ``i j`` pair per line; '#' starts a comment; a lone integer declares a vertex.

    Integer labels are renumbered 1..n in sorted order; the originals are kept
    in ``Graph.labels``.
    """
    edges = []
    vertices = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise InvalidInput(f"line {lineno}: expected integers, got {raw.strip()!r}") from None
        if len(nums) == 1:
            vertices.add(nums[0])
        elif len(nums) == 2:
            if nums[0] == nums[1]:
                raise InvalidInput(f"line {lineno}: loop at vertex {nums[0]}")
            edges.append(tuple(nums))
        else:
            raise InvalidInput(f"line {lineno}: expected 'i j', got {raw.strip()!r}")
    if not edges and not vertices:
        raise InvalidInput("no edges or vertices in input")
    return Graph.from_labelled_edges(edges, vertices)


def format_edge_list(g: Graph) -> str:
    return "".join(f"{i} {j}\n" for i, j in g.sorted_edges())


def parse_graph(text: str) -> Graph:
    """Edge list if the text looks like one (digits and whitespace), graph6 otherwise."""
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines()).strip()
    if not stripped:
        raise InvalidInput("empty input")
    body = stripped.replace(",", " ")
    if all(ch.isdigit() or ch.isspace() for ch in body) and (" " in body or "\n" in body or "\t" in body):
        return parse_edge_list(text)
    lines = [l for l in stripped.splitlines() if l.strip()]
    if len(lines) != 1:
        raise InvalidInput("graph6 input must be a single line")
    return parse_graph6(lines[0])
