"""Constructive reachability: a word mapping Q onto any requested subset.

Works backwards from the target.  At each round, find the least hierarchy
level with an edge penetrating the current target (source cluster outside,
target cluster inside); such an edge is always freshly forced there, and its
word w lets the target be rewritten as the image of a strictly larger set:
the full w-preimage of one duplicate state plus one chosen preimage of every
other target state.  Rounds repeat until the larger set is Q; the final word
is the concatenation of the step words, outermost round first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import (
    Dfa,
    StateSet,
    Word,
    excl_dupl,
    transformation_of,
)
from .gamma import GammaResult, SUCCESS


@dataclass(frozen=True)
class ReachStep:
    """One expansion round: ``target`` is recovered as ``source . word``."""

    level: int
    edge: tuple[int, int]
    word: Word
    source: StateSet
    target: StateSet


def expand_step(dfa: Dfa, p: StateSet, w: Word, dup_state: int) -> StateSet:
    """The preimage set R with R . w = p and |R| > |p|.

    R is the full w-preimage of ``dup_state`` together with the
    smallest-index preimage of every other state of p.  Preconditions (the
    word excludes nothing of p; ``dup_state`` is a duplicate state of w lying
    in p) are enforced because their failure signals a bug in level
    selection.
    """
    pair = excl_dupl(dfa, w)
    if not pair.excl.isdisjoint(p):
        raise ValueError("the word excludes part of the target set")
    if dup_state not in pair.dupl or dup_state not in p:
        raise ValueError("dup_state must be a duplicate state inside the target set")
    trans = transformation_of(dfa, w)
    first_pre: list[int | None] = [None] * dfa.n
    mask = 0
    for q, image in enumerate(trans):
        if image == dup_state:
            mask |= 1 << q
        elif first_pre[image] is None:
            first_pre[image] = q
    for r in p:
        if r != dup_state:
            mask |= 1 << first_pre[r]
    return StateSet.from_mask(mask)


def reach_word(
    dfa: Dfa, result: GammaResult, p: StateSet
) -> tuple[Word, list[ReachStep]]:
    """A word w with Q . w = p, plus the expansion trace that produced it.

    Steps are returned in application order: the first step starts from Q,
    each target equals the next source, and the last target is p.
    """
    if result.outcome != SUCCESS:
        raise ValueError("reach words exist only when the hierarchy succeeded")
    if not p:
        raise ValueError("the target subset must be non-empty")
    if p.mask >> dfa.n:
        raise ValueError("target subset contains states outside the automaton")

    full = (1 << dfa.n) - 1
    current = p.mask
    rounds: list[ReachStep] = []
    while current != full:
        chosen = None
        for level in result.levels:
            inside = [
                result.forest.leafage_mask(nid) & ~current == 0
                for nid in level.vertices
            ]
            pens = sorted(
                e for e in level.graph.edges if not inside[e[0]] and inside[e[1]]
            )
            if pens:
                chosen = (level, pens[0])
                break
        if chosen is None:
            raise RuntimeError("no penetrating edge found; hierarchy is inconsistent")
        level, edge = chosen
        w = level.forcing.get(edge)
        if w is None:
            raise RuntimeError(
                "penetrating edge at the least level must be freshly forced"
            )
        dupl_mask = excl_dupl(dfa, w).dupl.mask
        target_leaf = result.forest.leafage_mask(level.vertices[edge[1]])
        dup_candidates = dupl_mask & target_leaf
        dup_state = (dup_candidates & -dup_candidates).bit_length() - 1
        target = StateSet.from_mask(current)
        source = expand_step(dfa, target, w, dup_state)
        rounds.append(ReachStep(level.level, edge, w, source, target))
        current = source.mask

    steps = list(reversed(rounds))
    word: Word = ()
    for step in steps:
        word += step.word
    return word, steps
