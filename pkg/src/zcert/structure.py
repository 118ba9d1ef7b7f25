"""Exact structural parameters and Hamiltonicity ground-truth oracles.

Everything here is exact at desk scale: independence number by branch and
bound, vertex connectivity by unit-capacity max-flow on the split-vertex
digraph, Hamiltonian cycle/path by bitmask dynamic programming.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, bits

DEFAULT_MAX_ORACLE_N = 24
_ORACLE_ENV = "ZC_MAX_ORACLE_N"


class InstanceTooLargeError(ValueError):
    """Hamiltonicity oracle called above the size guard."""


class NotBalancedBipartiteError(ValueError):
    """Balanced-bipartite hypothesis violated."""


@dataclass(frozen=True)
class IndependenceCertificate:
    beta: int
    witness: int  # bitmask of one maximum independent set


@dataclass(frozen=True)
class BipartitionCertificate:
    is_bipartite: bool
    side_a: int  # bitmask; both sides empty when not bipartite
    side_b: int


def independence_number(g: Graph) -> IndependenceCertificate:
    """Maximum independent set by branch and bound.

    Branches on a highest-degree candidate vertex; prunes with a greedy
    clique-cover upper bound. Exact; practical well past n = 30.
    """
    adj = g.adj
    best_size = 0
    best_set = 0

    def clique_cover_bound(cand: int) -> int:
        # each greedy clique can contribute at most one vertex
        cliques = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique = 1 << v
            common = adj[v] & cand
            while common:
                u = (common & -common).bit_length() - 1
                clique |= 1 << u
                common &= adj[u]
            cand &= ~clique
            cliques += 1
        return cliques

    def branch(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        if size > best_size:
            best_size, best_set = size, chosen
        if not cand:
            return
        if size + clique_cover_bound(cand) <= best_size:
            return
        # branch vertex: max degree within the candidate set
        v = max(bits(cand), key=lambda u: (adj[u] & cand).bit_count())
        bit = 1 << v
        branch(cand & ~(adj[v] | bit), chosen | bit, size + 1)
        branch(cand & ~bit, chosen, size)

    branch((1 << g.n) - 1, 0, 0)
    return IndependenceCertificate(beta=best_size, witness=best_set)


def _reachable(adj: tuple[int, ...], start: int, domain: int) -> int:
    """Bitmask of vertices reachable from start inside the domain mask."""
    seen = (1 << start) & domain
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & domain & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _reachable(g.adj, 0, full) == full


def _maxflow_vertex_disjoint(g: Graph, s: int, t: int) -> int:
    """Number of internally vertex-disjoint s-t paths (s, t nonadjacent).

    Unit-capacity max-flow on the split-vertex digraph, via augmenting-path
    search. Node 2v = v_in, 2v+1 = v_out.
    """
    n = g.n
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = 1 if v not in (s, t) else n  # s, t uncapped
        cap[2 * v + 1][2 * v] = 0
    for u in range(n):
        for v in bits(g.adj[u]):
            cap[2 * u + 1][2 * v] = 1
            cap[2 * v][2 * u + 1] = cap[2 * v].get(2 * u + 1, 0)
    src, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        prev = {src: -1}
        queue = [src]
        while queue and sink not in prev:
            nxt = []
            for x in queue:
                for y, c in cap[x].items():
                    if c > 0 and y not in prev:
                        prev[y] = x
                        nxt.append(y)
            queue = nxt
        if sink not in prev:
            return flow
        y = sink
        while y != src:
            x = prev[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity: n-1 for complete graphs, 0 if disconnected.

    Even-style reduction: fix a minimum-degree vertex s; take min flow over
    non-neighbours of s and over nonadjacent pairs of neighbours of s.
    """
    n = g.n
    if n == 0:
        raise ValueError("connectivity undefined for the empty graph")
    if all(row.bit_count() == n - 1 for row in g.adj):
        return n - 1
    if not is_connected(g):
        return 0
    degs = g.degrees()
    s = min(range(n), key=lambda v: degs[v])
    best = degs[s]
    closed = g.adj[s] | (1 << s)
    full = (1 << n) - 1
    for t in bits(full & ~closed):
        best = min(best, _maxflow_vertex_disjoint(g, s, t))
        if best == 0:
            return 0
    nbrs = list(bits(g.adj[s]))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1:]:
            if not (g.adj[x] >> y) & 1:
                best = min(best, _maxflow_vertex_disjoint(g, x, y))
    return best


def bipartition(g: Graph) -> BipartitionCertificate:
    """2-colour each component by BFS; report sides or non-bipartiteness."""
    n = g.n
    color = [-1] * n
    side_a = side_b = 0
    for root in range(n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for v in bits(g.adj[u]):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return BipartitionCertificate(False, 0, 0)
    for v in range(n):
        if color[v] == 0:
            side_a |= 1 << v
        else:
            side_b |= 1 << v
    return BipartitionCertificate(True, side_a, side_b)


def is_regular_balanced_bipartite(g: Graph) -> bool:
    """Regular, bipartite, and some bipartition has equal side sizes.

    Components may be recoloured independently, so balance is a subset-sum
    question over per-component side imbalances.
    """
    if g.n == 0 or g.n % 2 == 1:
        return False
    degs = g.degrees()
    if min(degs) != max(degs):
        return False
    cert = bipartition(g)
    if not cert.is_bipartite:
        return False
    # per-component imbalance, each component orientable either way
    full = (1 << g.n) - 1
    seen = 0
    imbalances = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = _reachable(g.adj, v, full)
        seen |= comp
        imbalances.append(abs((comp & cert.side_a).bit_count()
                              - (comp & cert.side_b).bit_count()))
    sums = {0}
    for d in imbalances:
        sums = {s + d for s in sums} | {abs(s - d) for s in sums}
    return 0 in sums


def _oracle_limit() -> int:
    raw = os.environ.get(_ORACLE_ENV)
    return int(raw) if raw else DEFAULT_MAX_ORACLE_N


def has_hamiltonian_cycle(g: Graph) -> bool:
    """Exact Hamiltonian cycle decision, Held-Karp bitmask DP."""
    n = g.n
    if n > _oracle_limit():
        raise InstanceTooLargeError(
            f"n={n} exceeds the oracle guard ({_oracle_limit()}); "
            f"set {_ORACLE_ENV} to override")
    if n < 3:
        return False
    if any(row.bit_count() < 2 for row in g.adj) or not is_connected(g):
        return False
    adj = g.adj
    full = (1 << n) - 1
    # dp[mask] = bitmask of vertices a 0-anchored path over mask can end at
    dp = [0] * (full + 1)
    dp[1] = 1
    for mask in range(1, full + 1):
        if not mask & 1:
            continue
        ends = dp[mask]
        if not ends:
            continue
        rest = full & ~mask
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[w] & ends:
                dp[mask | (1 << w)] |= 1 << w
    return bool(dp[full] & adj[0])


def has_hamiltonian_path(g: Graph) -> bool:
    """Exact Hamiltonian path decision (K1 and K2 count as traceable)."""
    n = g.n
    if n > _oracle_limit():
        raise InstanceTooLargeError(
            f"n={n} exceeds the oracle guard ({_oracle_limit()}); "
            f"set {_ORACLE_ENV} to override")
    if n == 0:
        return False
    if n == 1:
        return True
    if not is_connected(g):
        return False
    adj = g.adj
    full = (1 << n) - 1
    dp = [0] * (full + 1)
    for v in range(n):
        dp[1 << v] = 1 << v
    for mask in range(1, full + 1):
        ends = dp[mask]
        if not ends:
            continue
        rest = full & ~mask
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[w] & ends:
                dp[mask | (1 << w)] |= 1 << w
    return dp[full] != 0


def chvatal_erdos_hamiltonian(g: Graph) -> bool:
    """Independence number at most connectivity, with connectivity >= 2."""
    if g.n < 3:
        raise ValueError("hypothesis requires at least 3 vertices")
    kappa = vertex_connectivity(g)
    if kappa < 2:
        return False
    return independence_number(g).beta <= kappa


def chvatal_erdos_traceable(g: Graph) -> bool:
    """Independence number at most connectivity + 1."""
    if g.n == 0:
        raise ValueError("empty graph")
    return independence_number(g).beta <= vertex_connectivity(g) + 1


def moon_moser_condition(g: Graph) -> bool:
    """Degree-sum hypothesis over nonadjacent cross pairs of a balanced
    bipartite graph: d(x) + d(y) >= m + 1 with m the common side size."""
    cert = bipartition(g)
    if not cert.is_bipartite:
        raise NotBalancedBipartiteError("graph is not bipartite")
    side_a, side_b = cert.side_a, cert.side_b
    if side_a.bit_count() != side_b.bit_count():
        # try to rebalance disconnected components before giving up
        rebalanced = _balanced_sides(g, cert)
        if rebalanced is None:
            raise NotBalancedBipartiteError("no balanced bipartition exists")
        side_a, side_b = rebalanced
    m = side_a.bit_count()
    if m < 1:
        raise NotBalancedBipartiteError("empty sides")
    degs = g.degrees()
    for x in bits(side_a):
        for y in bits(side_b & ~g.adj[x]):
            if degs[x] + degs[y] < m + 1:
                return False
    return True


def _balanced_sides(g: Graph, cert: BipartitionCertificate):
    """Search component recolourings for an equal-size bipartition."""
    if g.n % 2 == 1:
        return None
    full = (1 << g.n) - 1
    seen = 0
    comps = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = _reachable(g.adj, v, full)
        seen |= comp
        comps.append((comp & cert.side_a, comp & cert.side_b))
    target = g.n // 2
    # DP over achievable side-A sizes, tracking one witness assignment
    states: dict[int, tuple[int, int]] = {0: (0, 0)}
    for ca, cb in comps:
        nxt: dict[int, tuple[int, int]] = {}
        for size, (a_mask, b_mask) in states.items():
            for pa, pb in ((ca, cb), (cb, ca)):
                ns = size + pa.bit_count()
                if ns <= target and ns not in nxt:
                    nxt[ns] = (a_mask | pa, b_mask | pb)
        states = nxt
    if target not in states:
        return None
    a_mask, b_mask = states[target]
    return a_mask, b_mask


def proof_edge_inequality(g: Graph, members: int) -> bool:
    """Check sum_{u in I} d(u) = |E(I, V-I)| <= e <= sum_{v not in I} d(v)
    for an independent vertex set I given as a bitmask."""
    for u in bits(members):
        if g.adj[u] & members:
            raise ValueError("vertex set is not independent")
    degs = g.degrees()
    inside = sum(degs[u] for u in bits(members))
    e = g.edge_count
    outside = 2 * e - inside
    cross = sum((g.adj[u] & ~members).bit_count() for u in bits(members))
    return inside == cross and inside <= e <= outside


def radon_degree_inequality(g: Graph, members: int) -> bool:
    """Check 2*|I| * sum d^2 <= sum d^3 * sum 1/d + e^2 over an independent
    set I whose members all have positive degree."""
    degs = [g.degree(u) for u in bits(members)]
    if not degs:
        return True
    if any(d == 0 for d in degs):
        raise ValueError("inequality needs positive degrees inside the set")
    size = len(degs)
    lhs = 2 * size * sum(d * d for d in degs)
    rhs = (Fraction(sum(d ** 3 for d in degs))
           * sum(Fraction(1, d) for d in degs)
           + g.edge_count ** 2)
    return lhs <= rhs
