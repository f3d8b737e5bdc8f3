"""Immutable bit-row graphs, graph6 / edge-list I/O and induced-subgraph cycle primitives.

Vertex sets are plain ``int`` bitmasks throughout the package: bit ``v`` set
means vertex ``v`` is in the set.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InputError

MAX_VERTICES = 64
GRAPH6_HEADER = ">>graph6<<"


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitmask of ``v``.  Instances are validated on
    construction and never mutated.
    """

    n: int
    adj: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise InputError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise InputError("adjacency has wrong number of rows")
        full = self.full
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"row {v} has bits outside [0, {self.n})")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), label)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def induced_edge_count(self, s: int) -> int:
        return sum(popcount(self.adj[v] & s) for v in bits(s)) // 2

    def with_label(self, label: str) -> "Graph":
        return Graph(self.n, self.adj, label)


# ---------------------------------------------------------------- parsing

def parse_edge_list(text: str, label: str = "") -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("empty edge list", line=1)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise InputError(f"expected header 'n m', got {header!r}", line=lineno)
    n, m = int(parts[0]), int(parts[1])
    if n > MAX_VERTICES:
        raise InputError(f"n={n} exceeds {MAX_VERTICES}", line=lineno)
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"header declares {m} edges, found {len(body)} lines", line=lineno)
    rows = [0] * n
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise InputError(f"malformed edge line {ln!r}", line=lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise InputError(f"vertex index out of range in {ln!r} (n={n})", line=lineno)
        if u == v:
            raise InputError(f"self-loop {ln!r}", line=lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), label)


def to_edge_list(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"


def _graph6_pairs(n: int) -> Iterator[tuple[int, int]]:
    # upper triangle, column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~"] + [chr(((n >> sh) & 63) + 63) for sh in (12, 6, 0)]
    vec = [1 if g.adj[i] >> j & 1 else 0 for i, j in _graph6_pairs(n)]
    vec += [0] * (-len(vec) % 6)
    for k in range(0, len(vec), 6):
        val = 0
        for b in vec[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str, label: str = "") -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise InputError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise InputError(f"invalid graph6 byte in {s!r}")
    if data[0] == 63:
        if len(data) >= 2 and data[1] == 63:
            raise InputError("graph6 with n >= 258048 not supported")
        if len(data) < 4:
            raise InputError("truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise InputError(f"graph6 declares n={n} > {MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise InputError(f"graph6 bit vector has {len(body)} bytes, expected {need}")
    rows = [0] * n
    k = 0
    for i, j in _graph6_pairs(n):
        if body[k // 6] >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        k += 1
    return Graph(n, tuple(rows), label)


# ---------------------------------------------------------------- induced-subgraph primitives

def component_masks(g: Graph, s: int) -> list[int]:
    comps = []
    rest = s
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & s & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def is_acyclic(g: Graph, s: int) -> bool:
    """True iff the subgraph induced by ``s`` is a forest (|E| = |S| - #components)."""
    return g.induced_edge_count(s) == popcount(s) - len(component_masks(g, s))


def is_connected(g: Graph, s: int) -> bool:
    return len(component_masks(g, s)) <= 1


def is_bipartite(g: Graph, s: int) -> bool:
    """Breadth-first layering per component; an edge inside a layer means an odd cycle."""
    rest = s
    adj = g.adj
    while rest:
        layer = rest & -rest
        seen = layer
        while layer:
            nxt = 0
            for v in bits(layer):
                if adj[v] & layer:
                    return False
                nxt |= adj[v]
            layer = nxt & s & ~seen
            seen |= layer
        rest &= ~seen
    return True


def blocks(g: Graph, s: int) -> list[int]:
    """Biconnected blocks (vertex masks) of the subgraph induced by ``s``.

    Iterative Hopcroft-Tarjan with a vertex stack.  Bridges come out as
    two-vertex blocks; isolated vertices produce no block.
    """
    adj = g.adj
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: list[int] = []
    t = 0
    for root in bits(s):
        if root in disc:
            continue
        disc[root] = low[root] = t
        t += 1
        stack = [root]
        # frames: (vertex, parent, remaining neighbour mask)
        frames = [(root, -1, adj[root] & s)]
        while frames:
            v, parent, rem = frames[-1]
            if rem:
                w = (rem & -rem).bit_length() - 1
                frames[-1] = (v, parent, rem & (rem - 1))
                if w not in disc:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append(w)
                    frames.append((w, v, adj[w] & s))
                elif w != parent:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            frames.pop()
            if parent < 0:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                blk = 1 << parent
                while True:
                    x = stack.pop()
                    blk |= 1 << x
                    if x == v:
                        break
                out.append(blk)
    return out


def cycle_masks(g: Graph, s: int) -> tuple[int, int]:
    """Return ``(on_cycle, on_odd_cycle)`` vertex masks for the subgraph induced by ``s``.

    A vertex lies on a cycle iff it belongs to a block with at least three
    vertices, and on an odd cycle iff it belongs to a non-bipartite block.
    """
    if popcount(s) < 3 or is_acyclic(g, s):
        return 0, 0
    oc = ooc = 0
    for b in blocks(g, s):
        if popcount(b) >= 3:
            oc |= b
            if not is_bipartite(g, b):
                ooc |= b
    return oc, ooc


def on_cycle(g: Graph, s: int, v: int) -> bool:
    return bool(cycle_masks(g, s)[0] >> v & 1)


def on_odd_cycle(g: Graph, s: int, v: int) -> bool:
    return bool(cycle_masks(g, s)[1] >> v & 1)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Relabel ``vertices`` to ``0..k-1`` in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    es = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edges(len(vertices), es)
