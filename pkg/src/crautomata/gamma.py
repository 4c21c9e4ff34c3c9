"""The level-graph hierarchy and the complete-reachability decision.

Level 1 is the graph on states whose edges are the (excluded, duplicate)
pairs of defect-1 words.  While the current level is not strongly connected,
its clusters form the next level of the cluster forest; the next graph is
the condensation of the previous one plus the edges freshly forced by words
of the next defect.  The process stops with SUCCESS on a strongly connected
level and with FAILURE when every new cluster has a leafage of at most k
states after step k; it always stops by step n-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Dfa, StateSet, Word
from .canonical import CanonicalWordSet, _Entry
from .digraph import (
    SimpleDigraph,
    condensation,
    strongly_connected_components,
)

SUCCESS = "SUCCESS"
FAILURE = "FAILURE"


class ClusterForest:
    """Layered containment forest over the original states.

    Nodes get dense ids in creation order; level 1 holds one node per state
    (node id = state index).  Each higher-level node owns a group of nodes of
    the level below; its leafage is the disjoint union of theirs, and within
    every level the leafages partition the state set.
    """

    def __init__(self, n: int):
        self._n = n
        self._levels: list[list[int]] = [list(range(n))]
        self._parent: list[int | None] = [None] * n
        self._children: list[tuple[int, ...]] = [()] * n
        self._level_of: list[int] = [1] * n
        self._leafage: list[int] = [1 << q for q in range(n)]

    @property
    def n(self) -> int:
        return self._n

    @property
    def level_count(self) -> int:
        return len(self._levels)

    @property
    def node_count(self) -> int:
        return len(self._parent)

    def level_nodes(self, level: int) -> list[int]:
        if not 1 <= level <= self.level_count:
            raise ValueError(f"no level {level} in a forest of {self.level_count}")
        return list(self._levels[level - 1])

    def parent_of(self, node: int) -> int | None:
        return self._parent[node]

    def children_of(self, node: int) -> tuple[int, ...]:
        return self._children[node]

    def level_of(self, node: int) -> int:
        return self._level_of[node]

    def leafage_mask(self, node: int) -> int:
        return self._leafage[node]

    def leafage(self, node: int) -> StateSet:
        return StateSet.from_mask(self._leafage[node])

    def add_level(self, groups: list[list[int]]) -> list[int]:
        """Append a level whose nodes own the given groups of current top nodes."""
        top = self._levels[-1]
        grouped = [node for group in groups for node in group]
        if sorted(grouped) != sorted(top):
            raise ValueError("groups must partition the current top level")
        new_ids = []
        level = self.level_count + 1
        for group in groups:
            nid = len(self._parent)
            mask = 0
            for member in group:
                self._parent[member] = nid
                mask |= self._leafage[member]
            self._parent.append(None)
            self._children.append(tuple(group))
            self._level_of.append(level)
            self._leafage.append(mask)
            new_ids.append(nid)
        self._levels.append(new_ids)
        return new_ids


@dataclass(frozen=True)
class GammaLevel:
    """One level of the hierarchy.

    ``vertices[i]`` is the forest node behind graph vertex i.  ``forcing``
    maps each freshly forced edge to the shortlex-least word of defect
    ``level`` forcing it; ``inherited`` marks the condensation-induced edges.
    An edge may be both inherited and freshly forced.
    """

    level: int
    vertices: tuple[int, ...]
    graph: SimpleDigraph
    forcing: dict[tuple[int, int], Word]
    inherited: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class GammaResult:
    outcome: str
    terminal_step: int
    levels: tuple[GammaLevel, ...]
    forest: ClusterForest

    @property
    def success(self) -> bool:
        return self.outcome == SUCCESS


def build_gamma1(dfa: Dfa, cws: CanonicalWordSet) -> GammaLevel:
    """The level-1 graph on states, one edge per defect-1 signature."""
    forcing: dict[tuple[int, int], Word] = {}
    for w, em, dm in cws.signatures_of_defect(1):
        # Defect-1 signatures are singleton pairs ({x}, {d}).
        edge = (em.bit_length() - 1, dm.bit_length() - 1)
        if edge not in forcing:
            forcing[edge] = w
    graph = SimpleDigraph(dfa.n, frozenset(forcing))
    return GammaLevel(1, tuple(range(dfa.n)), graph, forcing, frozenset())


def build_next_level(
    prev: GammaLevel, forest: ClusterForest, xd_k: list[_Entry]
) -> GammaLevel:
    """Condensation of the previous level plus the defect-k forced edges.

    Expects the SCC partition of ``prev`` to be the forest's top level
    already.  For each defect-k signature (X, D): X fits inside the leafage
    of at most one cluster (leafages partition the states), and when it does,
    an edge runs from that cluster to every other cluster whose leafage
    meets D.  One signature may force several edges.
    """
    k = prev.level + 1
    vertices = forest.level_nodes(k)
    leaf = [forest.leafage_mask(nid) for nid in vertices]

    owner = {}
    for pos, mask in enumerate(leaf):
        for q in range(mask.bit_length()):
            if (mask >> q) & 1:
                owner[q] = pos

    prev_pos = {nid: pos for pos, nid in enumerate(prev.vertices)}
    cid = [0] * len(prev.vertices)
    for pos, nid in enumerate(vertices):
        for child in forest.children_of(nid):
            cid[prev_pos[child]] = pos

    inherited = frozenset(
        (cid[s], cid[t]) for s, t in prev.graph.edges if cid[s] != cid[t]
    )

    forcing: dict[tuple[int, int], Word] = {}
    for w, em, dm in xd_k:
        src = owner[em.bit_length() - 1]
        if em & ~leaf[src]:
            continue
        for dst, mask in enumerate(leaf):
            if dst != src and mask & dm:
                edge = (src, dst)
                if edge not in forcing:
                    forcing[edge] = w

    graph = SimpleDigraph(len(vertices), inherited | set(forcing))
    return GammaLevel(k, tuple(vertices), graph, forcing, inherited)


def build_gamma(dfa: Dfa) -> GammaResult:
    """Run the hierarchy until SUCCESS or FAILURE.

    Canonical words are grown one defect level at a time, resuming the
    enumeration frontier rather than restarting it.  Levels with no fresh
    edges and no condensation progress are simply iterated past; the leafage
    test bounds the number of steps by n-1.
    """
    n = dfa.n
    forest = ClusterForest(n)
    if n == 1:
        level = GammaLevel(1, (0,), SimpleDigraph(1, frozenset()), {}, frozenset())
        forest.add_level([[0]])
        return GammaResult(SUCCESS, 1, (level,), forest)

    cws = CanonicalWordSet(dfa)
    cws.grow(1)
    level = build_gamma1(dfa, cws)
    levels = [level]
    k = 1
    while True:
        part = strongly_connected_components(level.graph)
        groups = [
            [level.vertices[v] for v in cluster] for cluster in part.clusters
        ]
        forest.add_level(groups)
        if len(part.clusters) == 1:
            return GammaResult(SUCCESS, k, tuple(levels), forest)
        new_nodes = forest.level_nodes(k + 1)
        if all(forest.leafage_mask(nid).bit_count() <= k for nid in new_nodes):
            return GammaResult(FAILURE, k, tuple(levels), forest)
        k += 1
        if k > n - 1:  # unreachable: with >= 2 clusters every leafage is < n
            raise RuntimeError("hierarchy failed to settle within n-1 steps")
        cws.grow(k)
        level = build_next_level(level, forest, cws.signatures_of_defect(k))
        levels.append(level)


def decide_complete_reachability(dfa: Dfa) -> tuple[bool, GammaResult]:
    """True iff every non-empty subset of states is the image of the full set."""
    result = build_gamma(dfa)
    return result.success, result


def unreachable_witness(result: GammaResult, dfa: Dfa) -> StateSet:
    """A subset guaranteed unreachable after FAILURE.

    Take a cluster of the terminal level that is minimal in the reachability
    order (a sink of the condensation; ties broken by the smallest state in
    the leafage) and return the complement of its leafage.
    """
    if result.outcome != FAILURE:
        raise ValueError("an unreachable witness only exists for FAILURE results")
    last = result.levels[-1]
    part = strongly_connected_components(last.graph)
    cond = condensation(last.graph, part)
    has_out = {s for s, _ in cond.edges}
    best_mask = None
    for i, cluster in enumerate(part.clusters):
        if i in has_out:
            continue
        mask = 0
        for v in cluster:
            mask |= result.forest.leafage_mask(last.vertices[v])
        if best_mask is None or (mask & -mask) < (best_mask & -best_mask):
            best_mask = mask
    assert best_mask is not None  # an acyclic condensation always has a sink
    full = (1 << dfa.n) - 1
    return StateSet.from_mask(full & ~best_mask)
