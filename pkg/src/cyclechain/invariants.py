"""Classical auxiliary invariants: girth, cycle-free vertex counts, packings,
covers, chromatic data, maximum induced tree and k-tuple domination."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ResourceError, check_cap
from .graph import Graph, bits, component_masks, cycle_masks, is_bipartite, popcount

DEFAULT_CYCLE_LIMIT = 200_000


def girth(g: Graph) -> int:
    """Length of a shortest cycle, or 1 when ``g`` is a forest."""
    best = 0
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for u in queue:
            if best and 2 * dist[u] + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if not best or length < best:
                        best = length
    return best or 1


def kappa(g: Graph) -> tuple[int, int]:
    """Vertices lying on no cycle: ``(count, mask)``."""
    oc, _ = cycle_masks(g, g.full)
    rest = g.full & ~oc
    return popcount(rest), rest


def kappa_odd(g: Graph) -> tuple[int, int]:
    """Vertices lying on no odd cycle: ``(count, mask)``."""
    _, ooc = cycle_masks(g, g.full)
    rest = g.full & ~ooc
    return popcount(rest), rest


def chordless_cycles(g: Graph, odd_only: bool = False, limit: int = DEFAULT_CYCLE_LIMIT) -> list[int]:
    """Vertex masks of all chordless (induced) cycles, sorted ascending.

    Each cycle is grown as an induced path from its smallest vertex; an
    induced cycle is determined by its vertex set.
    """
    adj = g.adj
    found: set[int] = set()

    for s in range(g.n):
        higher = g.full & ~((1 << (s + 1)) - 1)
        # stack of (last vertex, path mask, path length)
        stack = [(x, 1 << s | 1 << x, 2) for x in bits(adj[s] & higher)]
        while stack:
            x, pmask, plen = stack.pop()
            forbidden = pmask & ~(1 << x) & ~(1 << s)
            for w in bits(adj[x] & higher & ~pmask):
                if adj[w] & forbidden:
                    continue
                if adj[w] >> s & 1:
                    if not odd_only or (plen + 1) % 2:
                        found.add(pmask | 1 << w)
                        if len(found) > limit:
                            raise ResourceError(f"more than {limit} chordless cycles")
                else:
                    stack.append((w, pmask | 1 << w, plen + 1))
    return sorted(found)


def max_set_packing(sets: list[int]) -> list[int]:
    """Maximum collection of pairwise disjoint masks (exact branch and bound)."""
    best: list[int] = []
    cands0 = sorted(set(sets), key=lambda m: (popcount(m), m))
    if not cands0:
        return []

    def rec(cands: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands:
            return
        union = 0
        for c in cands:
            union |= c
        shortest = min(popcount(c) for c in cands)
        if len(chosen) + min(len(cands), popcount(union) // shortest) <= len(best):
            return
        v = (union & -union).bit_length() - 1
        for c in cands:
            if c >> v & 1:
                chosen.append(c)
                rec([d for d in cands if not d & c], chosen)
                chosen.pop()
        rec([d for d in cands if not d >> v & 1], chosen)

    rec(cands0, [])
    return sorted(best)


def min_hitting_set(sets: list[int]) -> int:
    """Smallest vertex mask meeting every mask in ``sets`` (exact branch and bound)."""
    cands0 = sorted(set(sets), key=lambda m: (popcount(m), m))
    if not cands0:
        return 0
    best = 0
    for c in cands0:
        best |= c & -c
    # greedy upper bound, refined below
    best_size = popcount(best)

    def disjoint_lb(cands: list[int]) -> int:
        used = count = 0
        for c in cands:
            if not c & used:
                used |= c
                count += 1
        return count

    def rec(cands: list[int], chosen: int) -> None:
        nonlocal best, best_size
        if not cands:
            if popcount(chosen) < best_size or (popcount(chosen) == best_size and chosen < best):
                best, best_size = chosen, popcount(chosen)
            return
        if popcount(chosen) + disjoint_lb(cands) > best_size:
            return
        c = cands[0]
        for v in bits(c):
            rec([d for d in cands if not d >> v & 1], chosen | 1 << v)

    rec(cands0, 0)
    return best


def max_cycle_packing(g: Graph, limit: int = DEFAULT_CYCLE_LIMIT) -> tuple[int, list[int]]:
    p = max_set_packing(chordless_cycles(g, limit=limit))
    return len(p), p


def max_odd_cycle_packing(g: Graph, limit: int = DEFAULT_CYCLE_LIMIT) -> tuple[int, list[int]]:
    p = max_set_packing(chordless_cycles(g, odd_only=True, limit=limit))
    return len(p), p


def decycling_set(g: Graph, limit: int = DEFAULT_CYCLE_LIMIT) -> tuple[int, int]:
    """Minimum vertex set whose removal leaves a forest, as a hitting set of chordless cycles."""
    h = min_hitting_set(chordless_cycles(g, limit=limit))
    return popcount(h), h


def odd_cycle_cover(g: Graph, limit: int = DEFAULT_CYCLE_LIMIT) -> tuple[int, int]:
    """Minimum vertex set whose removal leaves a bipartite graph."""
    h = min_hitting_set(chordless_cycles(g, odd_only=True, limit=limit))
    return popcount(h), h


# ---------------------------------------------------------------- colouring

def color_subset(g: Graph, s: int, k: int) -> dict[int, int] | None:
    """A proper ``k``-colouring of the subgraph induced by ``s``, or None."""
    verts = sorted(bits(s), key=lambda v: (-popcount(g.adj[v] & s), v))
    if not verts:
        return {}
    if k <= 0:
        return None
    colour: dict[int, int] = {}
    adj = g.adj

    def rec(i: int, used: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        taken = 0
        for w in bits(adj[v] & s):
            if w in colour:
                taken |= 1 << colour[w]
        for c in range(min(k, used + 1)):
            if not taken >> c & 1:
                colour[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                del colour[v]
        return False

    return dict(colour) if rec(0, 0) else None


def chromatic_number(g: Graph) -> tuple[int, dict[int, int]]:
    if g.n == 0:
        return 0, {}
    k = 1 if g.m == 0 else 2
    while True:
        col = color_subset(g, g.full, k)
        if col is not None:
            return k, col
        k += 1


def chromatic_data(g: Graph, cap: int | None = None) -> tuple[int, int]:
    """``(chi, best_two_classes)``.

    ``best_two_classes`` is the largest possible size of the union of the two
    biggest colour classes over proper chi-colourings, i.e. the largest
    bipartite vertex set whose complement is (chi-2)-colourable.
    """
    chi, _ = chromatic_number(g)
    if chi <= 2:
        return chi, g.n
    check_cap(g.n, cap, "best_two_classes")
    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            w = 0
            for v in combo:
                w |= 1 << v
            if is_bipartite(g, w) and color_subset(g, g.full & ~w, chi - 2) is not None:
                return chi, size
    raise AssertionError("unreachable: a chi-colouring always exists")


# ---------------------------------------------------------------- subset searches

def max_induced_tree(g: Graph, cap: int | None = None) -> tuple[int, int]:
    """Largest vertex set inducing a tree (smallest mask on ties)."""
    check_cap(g.n, cap, "max_induced_tree")
    best, best_mask = 0, 0
    for s in range(1, 1 << g.n):
        k = popcount(s)
        if k <= best:
            continue
        if g.induced_edge_count(s) == k - 1 and len(component_masks(g, s)) == 1:
            best, best_mask = k, s
    return best, best_mask


def k_tuple_domination(g: Graph, k: int, cap: int | None = None) -> tuple[int, int]:
    """Smallest S with every outside vertex having at least ``k`` neighbours in S.

    Vertices inside S impose no condition.  Ties go to the smallest mask.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    check_cap(g.n, cap, "k_tuple_domination")
    adj = g.adj
    for size in range(g.n + 1):
        hits = []
        for combo in combinations(range(g.n), size):
            s = 0
            for v in combo:
                s |= 1 << v
            if all(popcount(adj[u] & s) >= k for u in bits(g.full & ~s)):
                hits.append(s)
        if hits:
            return size, min(hits)
    return g.n, g.full


@dataclass(frozen=True)
class InvariantBundle:
    girth: int
    kappa: int
    kappa_set: int
    kappa_odd: int
    kappa_odd_set: int
    tau: int
    cycle_packing: tuple[int, ...]
    tau_odd: int
    odd_cycle_packing: tuple[int, ...]
    chi: int
    best_two_classes: int
    nabla: int
    nabla_set: int
    tau_cover: int
    tau_cover_set: int
    t: int
    t_set: int
    gamma2: int
    gamma2_set: int

    def as_dict(self) -> dict:
        from .graph import bits as _bits

        def vs(m: int) -> list[int]:
            return list(_bits(m))

        return {
            "girth": self.girth,
            "kappa": self.kappa,
            "kappa_odd": self.kappa_odd,
            "tau": self.tau,
            "tau_odd": self.tau_odd,
            "chi": self.chi,
            "best_two_classes": self.best_two_classes,
            "nabla": self.nabla,
            "tau_cover": self.tau_cover,
            "t": self.t,
            "gamma2": self.gamma2,
            "sets": {
                "kappa": vs(self.kappa_set),
                "kappa_odd": vs(self.kappa_odd_set),
                "cycle_packing": [vs(c) for c in self.cycle_packing],
                "odd_cycle_packing": [vs(c) for c in self.odd_cycle_packing],
                "nabla": vs(self.nabla_set),
                "tau_cover": vs(self.tau_cover_set),
                "t": vs(self.t_set),
                "gamma2": vs(self.gamma2_set),
            },
        }


def compute_invariants(g: Graph, cap: int | None = None, cycle_limit: int = DEFAULT_CYCLE_LIMIT) -> InvariantBundle:
    check_cap(g.n, cap, "invariants")
    k, kset = kappa(g)
    ko, koset = kappa_odd(g)
    cycles = chordless_cycles(g, limit=cycle_limit)
    odd = [c for c in cycles if popcount(c) % 2]
    pack = max_set_packing(cycles)
    opack = max_set_packing(odd)
    nab = min_hitting_set(cycles)
    cover = min_hitting_set(odd)
    chi, two = chromatic_data(g, cap)
    t, tset = max_induced_tree(g, cap)
    g2, g2set = k_tuple_domination(g, 2, cap)
    return InvariantBundle(
        girth=girth(g),
        kappa=k, kappa_set=kset,
        kappa_odd=ko, kappa_odd_set=koset,
        tau=len(pack), cycle_packing=tuple(pack),
        tau_odd=len(opack), odd_cycle_packing=tuple(opack),
        chi=chi, best_two_classes=two,
        nabla=popcount(nab), nabla_set=nab,
        tau_cover=popcount(cover), tau_cover_set=cover,
        t=t, t_set=tset,
        gamma2=g2, gamma2_set=g2set,
    )
