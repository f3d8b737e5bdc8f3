"""Deterministic graph families, random sources and exhaustive streams.

Randomised families draw from :class:`random.Random` (MT19937), seeded with
the 64-bit ``seed`` of the :class:`FamilySpec`; the stream is identical on
every platform for a given Python major version >= 3.2.

Vertex labelling
----------------
double_star(n)            u1=0, u2=1, v_i = i+1 (i = 1..n)
subdivided_double_star    u1=0, path interior 1..s, u2=s+1, v_i = s+1+i;
                          pendant paths (if any) follow in vertex order
sun                       1-based labels 1..6 map to 0..5
fan(n)                    hub=0, path 1..n-1
mop_random(n)             triangle 0,1,2 then vertex k glued onto a random
                          outer edge, in insertion order
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Iterator

from .errors import InputError
from .graph import Graph, bits, popcount

FAMILIES = (
    "double_star", "subdivided_double_star", "sun", "cycle", "path",
    "complete", "fan", "mop_random", "gnp", "all_labeled",
)

SUN_EDGES_1 = ((3, 4), (4, 5), (5, 6), (1, 6), (1, 2), (2, 3), (2, 4), (2, 6), (4, 6))


@dataclass(frozen=True)
class FamilyFlags:
    planar: bool = False
    maximal_outerplanar: bool = False
    bipartite_known: bool = False


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    s: int = 0
    p: float = 0.5
    count: int = 1
    seed: int = 0
    pendant: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")

    @classmethod
    def from_dict(cls, d: dict) -> "FamilySpec":
        known = {k: d[k] for k in ("family", "n", "s", "p", "count", "seed", "pendant") if k in d}
        extra = set(d) - set(known)
        if extra:
            raise InputError(f"unknown FamilySpec fields: {sorted(extra)}")
        return cls(**known)

    def as_dict(self) -> dict:
        return asdict(self)

    @property
    def flags(self) -> FamilyFlags:
        f, n = self.family, self.n
        if f in ("fan", "mop_random", "sun"):
            return FamilyFlags(planar=True, maximal_outerplanar=True)
        if f == "double_star":
            return FamilyFlags(planar=True, maximal_outerplanar=n is not None and n <= 2)
        if f == "subdivided_double_star":
            return FamilyFlags(planar=True)
        if f == "cycle":
            return FamilyFlags(planar=True, maximal_outerplanar=n == 3,
                               bipartite_known=n is not None and n % 2 == 0)
        if f == "path":
            return FamilyFlags(planar=True, bipartite_known=True)
        if f == "complete":
            return FamilyFlags(planar=n is not None and n <= 4, maximal_outerplanar=n == 3,
                               bipartite_known=n is not None and n <= 2)
        return FamilyFlags()

    def label(self, index: int = 0) -> str:
        f = self.family
        if f == "sun":
            return "sun"
        if f == "subdivided_double_star":
            tail = f",pendant={self.pendant}" if self.pendant else ""
            return f"subdivided_double_star(n={self.n},s={self.s}{tail})"
        if f == "gnp":
            return f"gnp(n={self.n},p={self.p},seed={self.seed})#{index}"
        if f == "mop_random":
            return f"mop_random(n={self.n},seed={self.seed})#{index}"
        if f == "all_labeled":
            return f"all_labeled(n={self.n})#{index}"
        return f"{f}({self.n})"


# ---------------------------------------------------------------- constructors

def double_star(n: int) -> Graph:
    if n < 1:
        raise InputError("double_star needs n >= 1")
    es = [(0, 1)] + [(0, i + 1) for i in range(1, n + 1)] + [(1, i + 1) for i in range(1, n + 1)]
    return Graph.from_edges(n + 2, es, f"double_star({n})")


def subdivided_double_star(n: int, s: int = 0, pendant: int = 0) -> Graph:
    """Double star with the u1u2 edge replaced by a path with ``s`` interior vertices.

    ``pendant > 0`` hangs a path of that many vertices off every core vertex.
    """
    if n < 1 or s < 0 or pendant < 0:
        raise InputError("subdivided_double_star needs n >= 1, s >= 0, pendant >= 0")
    u1, u2 = 0, s + 1
    spine = list(range(s + 2))
    es = list(zip(spine, spine[1:]))
    core = s + 2 + n
    for i in range(1, n + 1):
        es += [(u1, u2 + i), (u2, u2 + i)]
    nxt = core
    for v in range(core):
        prev = v
        for _ in range(pendant):
            es.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, es, f"subdivided_double_star(n={n},s={s})")


def sun() -> Graph:
    return Graph.from_edges(6, [(a - 1, b - 1) for a, b in SUN_EDGES_1], "sun")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def path(n: int) -> Graph:
    if n < 0:
        raise InputError("path needs n >= 0")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"path({n})")


def complete(n: int) -> Graph:
    if n < 0 or n > 64:
        raise InputError("complete needs 0 <= n <= 64")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], f"complete({n})")


def fan(n: int) -> Graph:
    """Hub joined to every vertex of a path on ``n - 1`` vertices."""
    if n < 3:
        raise InputError("fan needs n >= 3")
    es = [(0, i) for i in range(1, n)] + [(i, i + 1) for i in range(1, n - 1)]
    return Graph.from_edges(n, es, f"fan({n})")


def mop_random(n: int, rng: random.Random) -> Graph:
    """Random maximal outerplanar graph: glue each new vertex onto a random outer edge."""
    if n < 3:
        raise InputError("mop_random needs n >= 3")
    outer = [0, 1, 2]
    es = [(0, 1), (1, 2), (0, 2)]
    for v in range(3, n):
        i = rng.randrange(len(outer))
        a, b = outer[i], outer[(i + 1) % len(outer)]
        es += [(a, v), (b, v)]
        outer.insert(i + 1, v)
    return Graph.from_edges(n, es)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise InputError("gnp needs 0 <= p <= 1")
    es = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p]
    return Graph.from_edges(n, es)


def all_labeled(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labelled graphs; bit k of the index is the k-th graph6 pair."""
    if not 0 <= n <= 8:
        raise InputError("all_labeled needs 0 <= n <= 8")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k in bits(code):
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def _need_n(spec: FamilySpec) -> int:
    if spec.n is None:
        raise InputError(f"family {spec.family} needs --n")
    return spec.n


def generate(spec: FamilySpec) -> Iterator[Graph]:
    """Stream of labelled graphs for ``spec`` (one graph for the fixed families)."""
    f = spec.family
    if f == "sun":
        yield sun()
        return
    n = _need_n(spec)
    if f == "all_labeled":
        for i, g in enumerate(all_labeled(n)):
            yield g.with_label(spec.label(i))
        return
    if f in ("gnp", "mop_random"):
        if spec.count < 0:
            raise InputError("count must be >= 0")
        rng = random.Random(spec.seed)
        for i in range(spec.count):
            g = gnp(n, spec.p, rng) if f == "gnp" else mop_random(n, rng)
            yield g.with_label(spec.label(i))
        return
    builders = {
        "double_star": lambda: double_star(n),
        "subdivided_double_star": lambda: subdivided_double_star(n, spec.s, spec.pendant),
        "cycle": lambda: cycle(n),
        "path": lambda: path(n),
        "complete": lambda: complete(n),
        "fan": lambda: fan(n),
    }
    yield builders[f]().with_label(spec.label())


def generate_one(spec: FamilySpec) -> Graph:
    return next(iter(generate(spec)))


def unique_mop_coloring(g: Graph) -> tuple[int, int, int]:
    """Class sizes (descending) of the 3-colouring of a maximal outerplanar graph.

    Peels degree-2 vertices (ears); each ear's two neighbours are adjacent, so
    on re-insertion the ear takes the one remaining colour.  Any failure means
    the graph is not maximal outerplanar.
    """
    if g.n < 3:
        raise AssertionError("maximal outerplanar graphs have n >= 3")
    if g.m != 2 * g.n - 3:
        raise AssertionError(f"edge count {g.m} != 2n-3: not maximal outerplanar")
    alive = g.full
    order: list[tuple[int, int]] = []
    while popcount(alive) > 3:
        ear = next((v for v in bits(alive) if popcount(g.adj[v] & alive) == 2), None)
        if ear is None:
            raise AssertionError("no ear found: not maximal outerplanar")
        nb = g.adj[ear] & alive
        a, b = bits(nb)
        if not g.has_edge(a, b):
            raise AssertionError("ear neighbours not adjacent: not maximal outerplanar")
        order.append((ear, nb))
        alive &= ~(1 << ear)
    tri = list(bits(alive))
    if g.induced_edge_count(alive) != 3:
        raise AssertionError("residual triangle missing: not maximal outerplanar")
    colour = {v: c for c, v in enumerate(tri)}
    for ear, nb in reversed(order):
        used = {colour[w] for w in bits(nb)}
        colour[ear] = ({0, 1, 2} - used).pop()
    for u, v in g.edges():
        if colour[u] == colour[v]:
            raise AssertionError("improper colouring: not maximal outerplanar")
    sizes = [0, 0, 0]
    for c in colour.values():
        sizes[c] += 1
    return tuple(sorted(sizes, reverse=True))  # type: ignore[return-value]


__all__ = [
    "FAMILIES", "FamilyFlags", "FamilySpec", "all_labeled", "complete", "cycle", "double_star",
    "fan", "generate", "generate_one", "gnp", "mop_random", "path", "subdivided_double_star",
    "sun", "unique_mop_coloring",
]
