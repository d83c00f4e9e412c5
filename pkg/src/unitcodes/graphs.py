"""Unit graphs of Z_n (+) Z_m: canonical construction, structural
invariants by independent algorithms, incidence matrices, and exporters.

Vertex order is (a, b) -> a*m + b; edges are (u, w) with u < w sorted
lexicographically, so every derived artifact (exports, incidence columns)
is deterministic across runs and platforms.

Conventions for degenerate values: diameter of a disconnected graph and
girth of a forest are "infinite" (None here, tagged strings in JSON);
edge connectivity of a disconnected graph is 0.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, maximum_flow, shortest_path

from .gfmatrix import GfMatrix, PrimeField
from .rings import RingSpec, euler_phi


@dataclass(frozen=True)
class UnitGraph:
    spec: RingSpec
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return self.spec.size

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertex_label(self, v: int) -> tuple[int, int]:
        return self.spec.element(v)


@dataclass(frozen=True)
class GraphInvariants:
    connected: bool
    num_components: int
    diameter: Optional[int]  # None = infinite (disconnected)
    bipartite: bool
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]]
    girth: Optional[int]  # None = infinite (forest)
    min_degree: int
    edge_connectivity: int


def build(spec: RingSpec) -> UnitGraph:
    """Brute-force construction: u ~ w iff their element sum is a unit."""
    n, m = spec.n, spec.m
    coprime_n = np.array([math.gcd(a, n) == 1 for a in range(n)])
    coprime_m = np.array([math.gcd(b, m) == 1 for b in range(m)])

    # unit_sum[u, w] == True iff vertices u, w sum to a unit
    a = np.arange(n)
    b = np.arange(m)
    sum_a_unit = coprime_n[(a[:, None] + a[None, :]) % n]
    sum_b_unit = coprime_m[(b[:, None] + b[None, :]) % m]
    unit_sum = np.logical_and(
        np.kron(sum_a_unit, np.ones((m, m), dtype=bool)),
        np.tile(sum_b_unit, (n, n)),
    )
    np.fill_diagonal(unit_sum, False)

    us, ws = np.nonzero(np.triu(unit_sum))
    edges = tuple(zip(us.tolist(), ws.tolist()))

    adj: list[list[int]] = [[] for _ in range(n * m)]
    for u, w in edges:
        adj[u].append(w)
        adj[w].append(u)
    adjacency = tuple(tuple(sorted(nb)) for nb in adj)
    return UnitGraph(spec=spec, edges=edges, adjacency=adjacency)


def edge_count_formula(spec: RingSpec) -> int:
    """Closed-form edge count; pure arithmetic, no graph build."""
    n, m = spec.n, spec.m
    phi = euler_phi(n) * euler_phi(m)
    if n % 2 == 1 and m % 2 == 1:
        return (n * m - 1) * phi // 2
    return n * m * phi // 2


def _adjacency_csr(g: UnitGraph, data_value: int = 1) -> csr_matrix:
    nv = g.num_vertices
    if not g.edges:
        return csr_matrix((nv, nv), dtype=np.int64)
    us = np.fromiter((u for u, _ in g.edges), dtype=np.int64)
    ws = np.fromiter((w for _, w in g.edges), dtype=np.int64)
    rows = np.concatenate([us, ws])
    cols = np.concatenate([ws, us])
    data = np.full(rows.shape, data_value, dtype=np.int64)
    return csr_matrix((data, (rows, cols)), shape=(nv, nv))


def _bipartition(g: UnitGraph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """2-coloring by BFS over every component; None if an odd cycle exists."""
    color = [-1] * g.num_vertices
    for start in range(g.num_vertices):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = frozenset(v for v, c in enumerate(color) if c == 0)
    side1 = frozenset(v for v, c in enumerate(color) if c == 1)
    return side0, side1


def shortest_cycle(g: UnitGraph) -> Optional[list[int]]:
    """A shortest cycle as a list of edge indices, or None for a forest.

    Per-root BFS: a non-tree edge closing at depths (d(u), d(w)) yields a
    closed walk; trimming the two tree paths at their lowest common
    ancestor leaves a simple cycle (tree paths cannot re-meet). The
    minimum over all roots and closing edges is the girth.
    """
    best_len: Optional[int] = None
    best_cycle: Optional[list[tuple[int, int]]] = None
    nv = g.num_vertices
    for root in range(nv):
        if best_len == 3:
            break
        dist = [-1] * nv
        parent = [-1] * nv
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best_len is not None and 2 * dist[u] >= best_len:
                continue
            for w in g.adjacency[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if best_len is None or cand < best_len:
                        cycle = _extract_cycle(u, w, parent)
                        if best_len is None or len(cycle) < best_len:
                            best_len = len(cycle)
                            best_cycle = cycle
    if best_cycle is None:
        return None
    edge_index = {e: i for i, e in enumerate(g.edges)}
    return sorted(edge_index[e] for e in best_cycle)


def _extract_cycle(u: int, w: int, parent: list[int]) -> list[tuple[int, int]]:
    """Simple cycle through BFS-tree paths of u and w plus the edge (u, w)."""

    def path(v: int) -> list[int]:
        out = [v]
        while parent[v] != -1:
            v = parent[v]
            out.append(v)
        return out  # v .. root

    pu, pw = path(u), path(w)
    seen = {v: i for i, v in enumerate(pu)}
    for j, v in enumerate(pw):
        if v in seen:
            lca_u, lca_w = seen[v], j
            break
    verts = pu[: lca_u + 1] + list(reversed(pw[:lca_w]))
    edges = [(u, w)] + [(verts[i], verts[i + 1]) for i in range(len(verts) - 1)]
    return [(min(a, b), max(a, b)) for a, b in edges]


def girth(g: UnitGraph) -> Optional[int]:
    cyc = shortest_cycle(g)
    return None if cyc is None else len(cyc)


def edge_connectivity(g: UnitGraph) -> int:
    """Max-flow min-cut oracle: fix s = vertex 0, minimize unit-capacity
    max flow over all targets. Disconnected graphs have connectivity 0."""
    nv = g.num_vertices
    if nv <= 1 or not g.edges:
        return 0
    adj = _adjacency_csr(g)
    ncomp, _ = connected_components(adj, directed=False)
    if ncomp > 1:
        return 0
    best = min(len(nb) for nb in g.adjacency)  # lambda <= delta
    for t in range(1, nv):
        flow = maximum_flow(adj, 0, t).flow_value
        best = min(best, int(flow))
    return best


def invariants(g: UnitGraph) -> GraphInvariants:
    adj = _adjacency_csr(g)
    ncomp, _ = connected_components(adj, directed=False)
    connected = ncomp == 1
    if connected:
        dists = shortest_path(adj, method="D", unweighted=True, directed=False)
        diameter: Optional[int] = int(dists.max())
    else:
        diameter = None
    sides = _bipartition(g)
    return GraphInvariants(
        connected=connected,
        num_components=int(ncomp),
        diameter=diameter,
        bipartite=sides is not None,
        bipartition=sides,
        girth=girth(g),
        min_degree=min(len(nb) for nb in g.adjacency),
        edge_connectivity=edge_connectivity(g),
    )


def incidence_matrix(g: UnitGraph, r: int) -> GfMatrix:
    """|V| x |E| unoriented incidence matrix over GF(r); columns follow
    the canonical edge order."""
    field = PrimeField(r)
    mat = np.zeros((g.num_vertices, g.num_edges), dtype=np.int64)
    for j, (u, w) in enumerate(g.edges):
        mat[u, j] = 1
        mat[w, j] = 1
    return GfMatrix(field, mat)


def edge_list_text(g: UnitGraph) -> str:
    lines = [f"{g.num_vertices} {g.num_edges}"]
    lines += [f"{u} {w}" for u, w in g.edges]
    return "\n".join(lines) + "\n"


def incidence_text(g: UnitGraph) -> str:
    mat = incidence_matrix(g, 2).array()
    lines = [f"{g.num_vertices} {g.num_edges}"]
    lines += [" ".join(str(int(x)) for x in row) for row in mat]
    return "\n".join(lines) + "\n"


def dot_text(g: UnitGraph) -> str:
    lines = ["graph unitgraph {"]
    for v in range(g.num_vertices):
        a, b = g.vertex_label(v)
        lines.append(f'  v{v} [label="({a},{b})"];')
    for u, w in g.edges:
        lines.append(f"  v{u} -- v{w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


EXPORTERS = {
    "edges": edge_list_text,
    "incidence": incidence_text,
    "dot": dot_text,
}


def export(g: UnitGraph, fmt: str) -> bytes:
    try:
        render = EXPORTERS[fmt]
    except KeyError:
        raise ValueError(f"unknown export format {fmt!r}; expected one of {sorted(EXPORTERS)}")
    return render(g).encode("ascii")
