"""Core data model: automata, state sets, words, and the excl/dupl algebra.

States are dense integers 0..n-1 so that transition tables are flat tuples
and state sets are bit masks.  Words are tuples of letter indices and act on
the right: q . uv = (q . u) . v.  The letter order is the declaration order
of the alphabet and defines the shortlex order used everywhere downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]
Transformation = tuple[int, ...]

EMPTY_WORD: Word = ()


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(states: Iterable[int]) -> int:
    mask = 0
    for q in states:
        if q < 0:
            raise ValueError(f"state index must be non-negative, got {q}")
        mask |= 1 << q
    return mask


class StateSet:
    """An immutable set of state indices backed by a bit mask.

    Iteration yields members in strictly increasing order, which is the
    canonical order used for serialization and tie-breaking.
    """

    __slots__ = ("mask",)

    def __init__(self, states: Iterable[int] = ()):
        object.__setattr__(self, "mask", mask_of(states))

    @classmethod
    def from_mask(cls, mask: int) -> "StateSet":
        if mask < 0:
            raise ValueError("mask must be non-negative")
        s = cls.__new__(cls)
        object.__setattr__(s, "mask", mask)
        return s

    @classmethod
    def full(cls, n: int) -> "StateSet":
        return cls.from_mask((1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("StateSet is immutable")

    def __contains__(self, q: int) -> bool:
        return q >= 0 and (self.mask >> q) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, StateSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __or__(self, other: "StateSet") -> "StateSet":
        return StateSet.from_mask(self.mask | other.mask)

    def __and__(self, other: "StateSet") -> "StateSet":
        return StateSet.from_mask(self.mask & other.mask)

    def __sub__(self, other: "StateSet") -> "StateSet":
        return StateSet.from_mask(self.mask & ~other.mask)

    def issubset(self, other: "StateSet") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "StateSet") -> bool:
        return self.mask & other.mask == 0

    def min(self) -> int:
        if not self.mask:
            raise ValueError("min() of an empty StateSet")
        return (self.mask & -self.mask).bit_length() - 1

    def __repr__(self) -> str:
        return f"StateSet({{{', '.join(str(q) for q in self)}}})"


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic finite automaton.

    ``n`` states 0..n-1, an ordered alphabet of ``m`` distinct letter names,
    and a total transition table ``delta`` with ``delta[q][a]`` the successor
    of state ``q`` under letter index ``a``.
    """

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.n < 1:
            raise ValueError(f"state count must be at least 1, got {self.n}")
        if len(self.alphabet) < 1:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet names must be distinct")
        if any(not name for name in self.alphabet):
            raise ValueError("alphabet names must be non-empty")
        if len(self.delta) != self.n:
            raise ValueError(
                f"transition table has {len(self.delta)} rows, expected {self.n}"
            )
        for q, row in enumerate(self.delta):
            if len(row) != self.m:
                raise ValueError(
                    f"transition row {q} has {len(row)} entries, expected {self.m}"
                )
            for a, target in enumerate(row):
                if not 0 <= target < self.n:
                    raise ValueError(
                        f"transition ({q}, {self.alphabet[a]}) -> {target} "
                        f"is out of range 0..{self.n - 1}"
                    )

    @property
    def m(self) -> int:
        return len(self.alphabet)

    def states(self) -> StateSet:
        return StateSet.full(self.n)

    def check_word(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        for a in w:
            if not 0 <= a < self.m:
                raise ValueError(f"letter index {a} out of range 0..{self.m - 1}")
        return w


@dataclass(frozen=True)
class ExclDuplPair:
    """The (excl, dupl) signature of a word.

    ``excl`` holds the states with no preimage under the word, ``dupl`` the
    states with at least two.  The two sets are disjoint, and one is empty
    exactly when the other is (permutation words).
    """

    excl: StateSet
    dupl: StateSet

    def __post_init__(self):
        if not self.excl.isdisjoint(self.dupl):
            raise ValueError("excl and dupl must be disjoint")
        if bool(self.excl) != bool(self.dupl):
            raise ValueError("excl is empty exactly when dupl is empty")

    @property
    def defect(self) -> int:
        return len(self.excl)

    def key(self) -> tuple[int, int]:
        return (self.excl.mask, self.dupl.mask)


@dataclass(frozen=True)
class PreimageTable:
    """Per-letter preimage sets: ``masks[a][q]`` is the bit mask of qa^-1."""

    masks: tuple[tuple[int, ...], ...]

    def preimages(self, a: int, q: int) -> StateSet:
        return StateSet.from_mask(self.masks[a][q])


def apply_letter_mask(delta: Sequence[Sequence[int]], mask: int, a: int) -> int:
    """Image of a state-set bit mask under a single letter."""
    out = 0
    while mask:
        low = mask & -mask
        out |= 1 << delta[low.bit_length() - 1][a]
        mask ^= low
    return out


def apply_word_mask(dfa: Dfa, mask: int, w: Sequence[int]) -> int:
    for a in w:
        mask = apply_letter_mask(dfa.delta, mask, a)
    return mask


def apply_word(dfa: Dfa, p: StateSet, w: Sequence[int]) -> StateSet:
    """Image {q . w | q in p} of a non-empty state set under a word."""
    if not p:
        raise ValueError("cannot apply a word to an empty state set")
    if p.mask >> dfa.n:
        raise ValueError("state set contains states outside the automaton")
    w = dfa.check_word(w)
    return StateSet.from_mask(apply_word_mask(dfa, p.mask, w))


def transformation_of(dfa: Dfa, w: Sequence[int]) -> Transformation:
    """The map q -> q . w as a tuple of length n."""
    w = dfa.check_word(w)
    image = list(range(dfa.n))
    for a in w:
        row = dfa.delta
        image = [row[q][a] for q in image]
    return tuple(image)


def transformation_signature(n: int, t: Transformation) -> ExclDuplPair:
    """The (excl, dupl) signature of an explicit transformation."""
    counts = [0] * n
    for q in t:
        counts[q] += 1
    excl = 0
    dupl = 0
    for q, c in enumerate(counts):
        if c == 0:
            excl |= 1 << q
        elif c >= 2:
            dupl |= 1 << q
    return ExclDuplPair(StateSet.from_mask(excl), StateSet.from_mask(dupl))


def defect(dfa: Dfa, w: Sequence[int]) -> int:
    """Number of states missing from the image of Q under the word."""
    return dfa.n - apply_word_mask(dfa, (1 << dfa.n) - 1, dfa.check_word(w)).bit_count()


def excl_dupl(dfa: Dfa, w: Sequence[int]) -> ExclDuplPair:
    """States with zero preimages (excl) and at least two (dupl) under w."""
    return transformation_signature(dfa.n, transformation_of(dfa, w))


def preimage_table(dfa: Dfa) -> PreimageTable:
    """Precomputed single-letter preimage masks; each letter's sets partition Q."""
    masks = []
    for a in range(dfa.m):
        col = [0] * dfa.n
        for q in range(dfa.n):
            col[dfa.delta[q][a]] |= 1 << q
        masks.append(tuple(col))
    return PreimageTable(tuple(masks))


def extend_signature_masks(
    pre_a: Sequence[int], excl_mask: int, dupl_mask: int, n: int
) -> tuple[int, int]:
    """Mask-level signature extension by one letter.

    Given the signature (excl_mask, dupl_mask) of a word u and the preimage
    masks of letter a, return the signature of ua: a state joins the new excl
    when its whole a-preimage lies in excl(u); it joins the new dupl when its
    a-preimage meets dupl(u) or keeps at least two survivors outside excl(u).
    """
    keep = ~excl_mask
    new_excl = 0
    new_dupl = 0
    for q in range(n):
        pm = pre_a[q]
        alive = pm & keep
        if alive == 0:
            new_excl |= 1 << q
        elif pm & dupl_mask or alive & (alive - 1):
            new_dupl |= 1 << q
    return new_excl, new_dupl


def extend_excl_dupl(
    pair_u: ExclDuplPair, dfa: Dfa, a: int, table: PreimageTable
) -> ExclDuplPair:
    """Signature of ua from the signature of u alone (never consults u)."""
    if not 0 <= a < dfa.m:
        raise ValueError(f"letter index {a} out of range 0..{dfa.m - 1}")
    excl, dupl = extend_signature_masks(
        table.masks[a], pair_u.excl.mask, pair_u.dupl.mask, dfa.n
    )
    return ExclDuplPair(StateSet.from_mask(excl), StateSet.from_mask(dupl))


def shortlex_key(w: Word) -> tuple[int, Word]:
    """Sort key for the length-then-letter-order word ordering."""
    return (len(w), w)
