"""Simple directed graphs, strongly connected components, and condensation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class SimpleDigraph:
    """A directed graph without parallel edges on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for s, t in self.edges:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise ValueError(f"edge ({s}, {t}) has an endpoint out of range")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for s, t in self.edges:
            adj[s].append(t)
        for row in adj:
            row.sort()
        return adj


@dataclass(frozen=True)
class ClusterPartition:
    """SCC partition: cluster_id per vertex plus the clusters as sorted tuples."""

    cluster_id: tuple[int, ...]
    clusters: tuple[tuple[int, ...], ...]


def strongly_connected_components(g: SimpleDigraph) -> ClusterPartition:
    """Tarjan's single-pass lowlink algorithm, iterative to spare the call stack.

    Components are numbered in completion order, which is the reverse
    topological order of the condensation: an edge between clusters always
    goes from a higher cluster index to a lower one.  Roots are scanned in
    vertex order and neighbor lists are sorted, so the numbering is
    deterministic.
    """
    nv = g.vertex_count
    adj = g.adjacency()
    order = [-1] * nv
    low = [0] * nv
    on_stack = [False] * nv
    comp_of = [-1] * nv
    stack: list[int] = []
    components: list[tuple[int, ...]] = []
    counter = 0

    for root in range(nv):
        if order[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, next_child = work.pop()
            if next_child == 0:
                order[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            neighbors = adj[v]
            for i in range(next_child, len(neighbors)):
                u = neighbors[i]
                if order[u] == -1:
                    work.append((v, i + 1))
                    work.append((u, 0))
                    descended = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], order[u])
            if descended:
                continue
            if low[v] == order[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp_of[u] = len(components)
                    comp.append(u)
                    if u == v:
                        break
                comp.sort()
                components.append(tuple(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    return ClusterPartition(tuple(comp_of), tuple(components))


def is_strongly_connected(g: SimpleDigraph) -> bool:
    if g.vertex_count == 0:
        raise ValueError("graph has no vertices")
    return len(strongly_connected_components(g).clusters) == 1


def _check_partition(g: SimpleDigraph, p: ClusterPartition) -> None:
    if len(p.cluster_id) != g.vertex_count:
        raise ValueError("partition does not cover the vertex set")
    seen: set[int] = set()
    for cid, cluster in enumerate(p.clusters):
        for v in cluster:
            if not 0 <= v < g.vertex_count or v in seen:
                raise ValueError("clusters do not partition the vertex set")
            if p.cluster_id[v] != cid:
                raise ValueError("cluster_id disagrees with the cluster list")
            seen.add(v)
    if len(seen) != g.vertex_count:
        raise ValueError("clusters do not partition the vertex set")


def _is_acyclic(vertex_count: int, edges: Iterable[tuple[int, int]]) -> bool:
    indeg = [0] * vertex_count
    adj: list[list[int]] = [[] for _ in range(vertex_count)]
    for s, t in edges:
        adj[s].append(t)
        indeg[t] += 1
    ready = [v for v in range(vertex_count) if indeg[v] == 0]
    removed = 0
    while ready:
        v = ready.pop()
        removed += 1
        for u in adj[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                ready.append(u)
    return removed == vertex_count


def condensation(g: SimpleDigraph, p: ClusterPartition) -> SimpleDigraph:
    """The simple graph induced on clusters by the inter-cluster edges of g.

    Raises if the partition is structurally inconsistent with g or if the
    induced graph is cyclic, which means p was not the SCC partition.
    """
    _check_partition(g, p)
    cid = p.cluster_id
    edges = frozenset(
        (cid[s], cid[t]) for s, t in g.edges if cid[s] != cid[t]
    )
    if not _is_acyclic(len(p.clusters), edges):
        raise ValueError(
            "partition is not the strongly-connected-component partition of g"
        )
    return SimpleDigraph(len(p.clusters), edges)
