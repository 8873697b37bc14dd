"""The graph P(Gamma, A, B): vertices are group elements, x ~ y iff some left
translate gA contains both.  Exact independence/clique numbers, criticality,
the alternating test, and isomorphism."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, DomainError
from .nearfact import NearFactorization, are_equivalent, verify

MAX_ORDER = 200


@dataclass(frozen=True)
class NfGraph:
    nf: NearFactorization
    n: int
    adj: tuple[int, ...]  # bitmask neighbourhoods

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return tuple(out)

    @property
    def non_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] >> v & 1
        )

    def complement_adj(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple((full & ~self.adj[u]) & ~(1 << u) for u in range(self.n))


def build_p_graph(nf: NearFactorization) -> NfGraph:
    """Hyperedges are the left translates gA; adjacency is co-membership."""
    if not verify(nf).is_nf:
        raise DomainError("graph construction expects a verified near-factorization")
    g = nf.group
    n = g.order
    mt = g.mul_table
    adj = [0] * n
    for t in range(n):
        edge = [mt[t][a] for a in nf.A]
        for i, u in enumerate(edge):
            for v in edge[i + 1 :]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return NfGraph(nf, n, tuple(adj))


def _check_order(n: int):
    if n > MAX_ORDER:
        raise CapabilityError(f"exact graph analysis capped at order {MAX_ORDER}")


def _max_clique(adj: tuple[int, ...], cand: int, lower: int = 0) -> int:
    """Exact maximum clique size within the vertex mask `cand`, branch and
    bound with a greedy colouring bound."""
    best = lower

    def colour_order(mask: int) -> tuple[list[int], list[int]]:
        order: list[int] = []
        bounds: list[int] = []
        colour = 0
        while mask:
            colour += 1
            avail = mask
            while avail:
                v = avail.bit_length() - 1
                order.append(v)
                bounds.append(colour)
                avail &= ~adj[v]
                avail &= ~(1 << v)
                mask &= ~(1 << v)
        return order, bounds

    def expand(mask: int, size: int):
        nonlocal best
        order, bounds = colour_order(mask)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            if size + 1 > best:
                best = size + 1
            nxt = mask & adj[v]
            if nxt:
                expand(nxt, size + 1)
            mask &= ~(1 << v)

    if cand:
        expand(cand, 0)
    return best


def _has_clique(adj: tuple[int, ...], cand: int, target: int) -> bool:
    """Is there a clique of the given size inside the mask?"""
    if target <= 0:
        return True
    if cand.bit_count() < target:
        return False
    return _max_clique(adj, cand, target - 1) >= target


def clique_number(g: NfGraph) -> int:
    _check_order(g.n)
    return _max_clique(g.adj, (1 << g.n) - 1)


def independence_number(g: NfGraph) -> int:
    _check_order(g.n)
    return _max_clique(g.complement_adj(), (1 << g.n) - 1)


@dataclass(frozen=True)
class CriticalReport:
    alpha: int
    omega: int
    alpha_critical_edges: tuple[tuple[int, int], ...]
    omega_critical_nonedges: tuple[tuple[int, int], ...]
    alternating: bool


def _is_perfect_matching(pairs, n: int) -> bool:
    seen: set[int] = set()
    for u, v in pairs:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return len(seen) == n


def critical_report(g: NfGraph) -> CriticalReport:
    """alpha-critical edges (removal raises alpha), omega-critical non-edges
    (insertion raises omega), and whether both families are spanning
    matchings."""
    _check_order(g.n)
    comp = g.complement_adj()
    alpha = _max_clique(comp, (1 << g.n) - 1)
    omega = _max_clique(g.adj, (1 << g.n) - 1)

    # removing edge uv raises alpha iff some (alpha-1)-clique of the
    # complement lies in the common complement-neighbourhood of u and v
    a_crit = tuple(
        (u, v)
        for u, v in g.edges
        if _has_clique(comp, comp[u] & comp[v], alpha - 1)
    )
    # adding non-edge xy raises omega iff some (omega-1)-clique lies in the
    # common neighbourhood of x and y
    w_crit = tuple(
        (u, v)
        for u, v in g.non_edges
        if _has_clique(g.adj, g.adj[u] & g.adj[v], omega - 1)
    )
    alternating = _is_perfect_matching(a_crit, g.n) and _is_perfect_matching(w_crit, g.n)
    return CriticalReport(alpha, omega, a_crit, w_crit, alternating)


def is_alternating(nf: NearFactorization) -> bool:
    return critical_report(build_p_graph(nf)).alternating


def verify_vertex_map(g1: NfGraph, g2: NfGraph, mapping) -> bool:
    """Does the vertex map preserve adjacency in both directions?"""
    if g1.n != g2.n or sorted(mapping) != list(range(g1.n)):
        return False
    for u in range(g1.n):
        for v in range(u + 1, g1.n):
            if (g1.adj[u] >> v & 1) != (g2.adj[mapping[u]] >> mapping[v] & 1):
                return False
    return True


def _refine_colours(adj: tuple[int, ...], n: int, colours: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            neigh = adj[v]
            counts: dict[int, int] = {}
            w = 0
            m = neigh
            while m:
                if m & 1:
                    counts[colours[w]] = counts.get(colours[w], 0) + 1
                m >>= 1
                w += 1
            sigs.append((colours[v], tuple(sorted(counts.items()))))
        relabel = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [relabel[s] for s in sigs]
        if new == colours:
            return colours
        colours = new


def graphs_isomorphic(g1: NfGraph, g2: NfGraph) -> bool:
    """Exact isomorphism.  An equivalence witness between the underlying
    near-factorizations supplies the certificate theta(x) = f(x) h; otherwise
    fall back to colour-refinement backtracking."""
    if g1.n != g2.n:
        raise DomainError("isomorphism comparison needs equal orders")
    if len(g1.edges) != len(g2.edges):
        return False
    if g1.nf.group == g2.nf.group:
        w = are_equivalent(g1.nf, g2.nf)
        if w is not None:
            grp = g1.nf.group
            mt = grp.mul_table
            theta = [mt[w.map.f.table[x]][w.map.h] for x in range(g1.n)]
            if verify_vertex_map(g1, g2, theta):
                return True
            raise DomainError("equivalence certificate failed adjacency check")
    return _iso_search(g1, g2)


def _iso_search(g1: NfGraph, g2: NfGraph) -> bool:
    _check_order(g1.n)
    n = g1.n
    c1 = _refine_colours(g1.adj, n, [0] * n)
    c2 = _refine_colours(g2.adj, n, [0] * n)
    if sorted(c1) != sorted(c2):
        return False
    order = sorted(range(n), key=lambda v: (c1.count(c1[v]), c1[v], v))
    mapping = [-1] * n
    used = 0

    def backtrack(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        u = order[idx]
        for v in range(n):
            if used >> v & 1 or c2[v] != c1[u]:
                continue
            ok = True
            for w in order[:idx]:
                if (g1.adj[u] >> w & 1) != (g2.adj[v] >> mapping[w] & 1):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used |= 1 << v
                if backtrack(idx + 1):
                    return True
                used &= ~(1 << v)
                mapping[u] = -1
        return False

    return backtrack(0)
