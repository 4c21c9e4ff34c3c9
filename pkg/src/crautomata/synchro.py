"""Synchronizing words for completely reachable automata.

The reset word is assembled in two phases.  The halving phase repeatedly
prepends a shortest avoiding word: if state p of the current image has the
single preimage q under the suffix built so far, any word whose image misses
q knocks p out of the image.  This drives the image size to at most n/2 in
at most n/2 - 1 rounds of cost at most n each.  The compression phase then
appends shortest image-shrinking words until a single state remains.  On
completely reachable input the total length stays within a cubic bound that
is roughly 7n^3/48, well under the classic (n-1)^2 conjecture territory for
small n but proven unconditionally here.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .automaton import (
    Dfa,
    StateSet,
    Word,
    apply_letter_mask,
    apply_word_mask,
    excl_dupl,
    transformation_of,
)
from .oracle import DEFAULT_MAX_STATES, reset_threshold_exact


def cerny_bound(n: int) -> int:
    """(n-1)^2, the conjectured tight reset length for synchronizing automata."""
    if n < 1:
        raise ValueError(f"state count must be at least 1, got {n}")
    return (n - 1) ** 2


def cubic_reset_bound(n: int) -> int:
    """Guaranteed reset length for completely reachable automata.

    Exact integer arithmetic: both numerators are divisible by 48 for the
    matching parity, so the floor division is exact.
    """
    if n < 1:
        raise ValueError(f"state count must be at least 1, got {n}")
    if n % 2 == 0:
        return (7 * n**3 + 18 * n**2 - 64 * n + 48) // 48
    return (7 * n**3 + 15 * n**2 - 55 * n + 33) // 48


def avoiding_length_bound(n: int) -> int:
    """Every state of a completely reachable automaton is avoidable within n letters."""
    return n


def halving_length_bound(n: int) -> int:
    """One max-defect letter plus at most ceil(n/2)-1 avoiding words of length n."""
    return n * ((n + 1) // 2 - 1) + 1


def compress_length_bound(n: int, k: int) -> int:
    """Shrinking a k-subset of a completely reachable automaton costs at most C(n-k+2, 2)."""
    if not 2 <= k <= n:
        raise ValueError(f"subset size {k} out of range 2..{n}")
    return math.comb(n - k + 2, 2)


def avoiding_word(dfa: Dfa, q: int) -> Word | None:
    """Shortest (then shortlex-least) word u with q not in Q . u, or None.

    Breadth-first search over images of the full state set; completely
    reachable automata with at least two states always admit one of length
    at most n.
    """
    if not 0 <= q < dfa.n:
        raise ValueError(f"state index {q} out of range 0..{dfa.n - 1}")
    full = (1 << dfa.n) - 1
    target_bit = 1 << q
    if dfa.n == 1:
        return None
    seen = {full}
    queue: deque[tuple[int, Word]] = deque([(full, ())])
    while queue:
        mask, word = queue.popleft()
        for a in range(dfa.m):
            nxt = apply_letter_mask(dfa.delta, mask, a)
            if nxt in seen:
                continue
            if not nxt & target_bit:
                return word + (a,)
            seen.add(nxt)
            queue.append((nxt, word + (a,)))
    return None


def compress_word(dfa: Dfa, p: StateSet) -> Word | None:
    """Shortest (then shortlex-least) word shrinking the image of p, or None.

    Singletons cannot shrink, so they yield None straight away.
    """
    if not p:
        raise ValueError("cannot compress an empty state set")
    if p.mask >> dfa.n:
        raise ValueError("state set contains states outside the automaton")
    size = len(p)
    if size == 1:
        return None
    seen = {p.mask}
    queue: deque[tuple[int, Word]] = deque([(p.mask, ())])
    while queue:
        mask, word = queue.popleft()
        for a in range(dfa.m):
            nxt = apply_letter_mask(dfa.delta, mask, a)
            if nxt in seen:
                continue
            if nxt.bit_count() < size:
                return word + (a,)
            seen.add(nxt)
            queue.append((nxt, word + (a,)))
    return None


def halving_word(dfa: Dfa) -> Word:
    """A word taking the full state set to at most floor(n/2) states.

    Start from a letter of maximal defect (first in the alphabet on ties).
    While the image P is still larger than n/2, pick the smallest state p of
    P with a unique preimage q under the current word, prepend a shortest
    word avoiding q, and repeat; each round removes at least p from the
    image.  Requires some letter of positive defect, and complete
    reachability for the avoiding words to exist.
    """
    best_letter = 0
    best_defect = -1
    full = (1 << dfa.n) - 1
    for a in range(dfa.m):
        d = dfa.n - apply_letter_mask(dfa.delta, full, a).bit_count()
        if d > best_defect:
            best_letter = a
            best_defect = d
    if best_defect == 0:
        raise ValueError(
            "every letter is a permutation, so no word can shrink the image"
        )
    w: Word = (best_letter,)
    while 2 * apply_word_mask(dfa, full, w).bit_count() > dfa.n:
        image = apply_word_mask(dfa, full, w)
        dupl_mask = excl_dupl(dfa, w).dupl.mask
        unique_mask = image & ~dupl_mask
        p = (unique_mask & -unique_mask).bit_length() - 1
        trans = transformation_of(dfa, w)
        q = trans.index(p)
        u = avoiding_word(dfa, q)
        if u is None:
            raise ValueError(
                f"state {q} occurs in every image; "
                "the automaton is not completely reachable"
            )
        w = u + w
    return w


@dataclass(frozen=True)
class ResetReport:
    """A reset word together with the per-phase lengths and the bounds hit."""

    n: int
    word: Word
    halving_length: int
    compression_lengths: tuple[int, ...]
    cerny_bound: int
    cubic_bound: int

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def within_cerny(self) -> bool:
        return self.length <= self.cerny_bound

    @property
    def within_cubic(self) -> bool:
        return self.length <= self.cubic_bound


def reset_word(dfa: Dfa) -> ResetReport:
    """A synchronizing word built as halving followed by compressions.

    Intended for completely reachable automata; other inputs may raise
    ValueError when an avoiding or compressing word fails to exist.
    """
    if dfa.n == 1:
        return ResetReport(1, (), 0, (), cerny_bound(1), cubic_reset_bound(1))
    w = halving_word(dfa)
    halving_length = len(w)
    compression_lengths: list[int] = []
    full = (1 << dfa.n) - 1
    image = apply_word_mask(dfa, full, w)
    while image.bit_count() > 1:
        u = compress_word(dfa, StateSet.from_mask(image))
        if u is None:
            raise ValueError(
                "image cannot be compressed further; the automaton is not synchronizing"
            )
        compression_lengths.append(len(u))
        w = w + u
        image = apply_word_mask(dfa, image, u)
    return ResetReport(
        dfa.n,
        w,
        halving_length,
        tuple(compression_lengths),
        cerny_bound(dfa.n),
        cubic_reset_bound(dfa.n),
    )


@dataclass(frozen=True)
class TwoLetterReport:
    """Structural facts specific to two-letter automata."""

    n: int
    permutation_letters: tuple[int, ...]
    single_cycle: tuple[bool, ...]
    reset_threshold: int | None
    cerny_bound: int

    @property
    def within_cerny(self) -> bool | None:
        if self.reset_threshold is None:
            return None
        return self.reset_threshold <= self.cerny_bound


def check_two_letter_properties(
    dfa: Dfa, max_states: int = DEFAULT_MAX_STATES
) -> TwoLetterReport:
    """Permutation-letter structure and the exact reset threshold.

    For completely reachable two-letter automata with n >= 2, a permutation
    letter is necessarily a single n-cycle, and the exact reset threshold
    stays within (n-1)^2.  The threshold is computed by the powerset oracle
    and is None when no reset word exists.
    """
    if dfa.m != 2:
        raise ValueError(f"expected a two-letter automaton, got {dfa.m} letters")
    perm_letters = []
    cycles = []
    for a in range(dfa.m):
        t = tuple(dfa.delta[q][a] for q in range(dfa.n))
        if len(set(t)) != dfa.n:
            continue
        perm_letters.append(a)
        orbit = 1
        q = t[0]
        while q != 0:
            q = t[q]
            orbit += 1
        cycles.append(orbit == dfa.n)
    threshold = reset_threshold_exact(dfa, max_states)
    return TwoLetterReport(
        dfa.n,
        tuple(perm_letters),
        tuple(cycles),
        threshold,
        cerny_bound(dfa.n),
    )
