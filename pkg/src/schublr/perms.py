"""Permutations in one-line notation and integer partitions.

Permutations are functions on the positive integers that fix all but finitely
many points.  The word ``(w(1), ..., w(n))`` determines the function; two
words that differ only by trailing fixed points describe the same function,
so every :class:`Permutation` is stored in canonical form with trailing fixed
points stripped (the identity is ``(1,)``).  All positions and values are
1-indexed.

Word-level helpers operate on plain integer tuples and are what the chain
enumeration hot paths use; the dataclasses wrap them for the public surface.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    BadShape,
    InvalidPositions,
    MalformedPartition,
    MalformedPermutation,
    NotACode,
    NotGrassmannian,
    TooManyParts,
)

Word = tuple[int, ...]


# ---------------------------------------------------------------------------
# word-level helpers


def is_one_line_word(word: Sequence[int]) -> bool:
    """Check that ``word`` is a permutation of 1..n for n = len(word).

    >>> [is_one_line_word(w) for w in [(1,), (2, 1), (2, 2, 1), (1, 3)]]
    [True, True, False, False]
    """
    n = len(word)
    if n == 0:
        return False
    seen = 0
    for v in word:
        if not isinstance(v, int) or v < 1 or v > n:
            return False
        bit = 1 << v
        if seen & bit:
            return False
        seen |= bit
    return True


def canonical_word(word: Sequence[int]) -> Word:
    """Strip trailing fixed points, keeping at least one entry.

    >>> canonical_word((2, 3, 4, 1, 5))
    (2, 3, 4, 1)
    >>> canonical_word((1, 2, 3))
    (1,)
    """
    n = len(word)
    while n > 1 and word[n - 1] == n:
        n -= 1
    return tuple(word[:n])


def extend_word(word: Sequence[int], n: int) -> Word:
    """Append fixed points so the word has length at least ``n``."""
    if len(word) >= n:
        return tuple(word)
    return tuple(word) + tuple(range(len(word) + 1, n + 1))


def word_length(word: Sequence[int]) -> int:
    """Number of inversions #{(p, q) : p < q, word[p] > word[q]}."""
    n = len(word)
    return sum(
        1 for p in range(n) for q in range(p + 1, n) if word[p] > word[q]
    )


def word_lehmer_code(word: Sequence[int]) -> Word:
    """Per-position count of smaller values strictly to the right."""
    n = len(word)
    return tuple(
        sum(1 for q in range(p + 1, n) if word[q] < word[p]) for p in range(n)
    )


# ---------------------------------------------------------------------------
# public types


@dataclass(frozen=True)
class Permutation:
    """One-line notation, canonical (no trailing fixed points).

    ``word[p-1]`` is the image of position ``p``; positions beyond the word
    are fixed.  Construction canonicalizes, so permutations of the same
    function compare equal regardless of the ambient symmetric group they
    were written in.
    """

    word: Word

    def __post_init__(self):
        word = tuple(self.word)
        if not is_one_line_word(word):
            raise MalformedPermutation(f"not a permutation word: {word!r}")
        object.__setattr__(self, "word", canonical_word(word))

    def __call__(self, p: int) -> int:
        """Image of position ``p`` (1-indexed), fixed beyond the word."""
        if p < 1:
            raise InvalidPositions(f"position must be positive: {p}")
        return self.word[p - 1] if p <= len(self.word) else p

    @property
    def size(self) -> int:
        """Length of the canonical word."""
        return len(self.word)

    def extended(self, n: int) -> Word:
        return extend_word(self.word, n)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.word)


IDENTITY = Permutation((1,))


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing nonnegative integers, trailing zeros stripped."""

    parts: Word

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise MalformedPartition(f"parts must be nonnegative: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise BadShape(f"parts must weakly decrease: {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def two_row(self) -> tuple[int, int]:
        """The pair (m1, m2), requiring at most two nonzero parts."""
        if len(self.parts) > 2:
            raise TooManyParts(f"expected at most two rows: {self.parts!r}")
        m1 = self.parts[0] if self.parts else 0
        m2 = self.parts[1] if len(self.parts) > 1 else 0
        return m1, m2

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


# ---------------------------------------------------------------------------
# parsing


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation, e.g. ``"1,4,3,2"``.

    >>> parse_permutation("1,4,3,2").word
    (1, 4, 3, 2)
    """
    try:
        values = tuple(int(tok) for tok in text.strip().split(","))
    except ValueError as exc:
        raise MalformedPermutation(f"cannot parse {text!r}") from exc
    if not is_one_line_word(values):
        raise MalformedPermutation(f"not a permutation of 1..n: {text!r}")
    return Permutation(values)


def parse_partition(text: str) -> Partition:
    """Parse comma-separated weakly decreasing integers, e.g. ``"4,3"``."""
    try:
        parts = tuple(int(tok) for tok in text.strip().split(","))
    except ValueError as exc:
        raise MalformedPartition(f"cannot parse {text!r}") from exc
    return Partition(parts)


# ---------------------------------------------------------------------------
# operations


def length(w: Permutation) -> int:
    """Coxeter length, i.e. the inversion count of the word.

    >>> length(Permutation((1, 4, 3, 2)))
    3
    """
    return word_length(w.word)


def apply_transposition(w: Permutation, a: int, b: int) -> Permutation:
    """Right-multiply by t_ab: swap the values at positions a and b.

    The word is extended with fixed points on demand, so ``b`` may exceed the
    canonical word length.

    >>> apply_transposition(Permutation((1, 4, 3, 2)), 3, 5).word
    (1, 4, 5, 2, 3)
    """
    if a < 1 or a >= b:
        raise InvalidPositions(f"need 1 <= a < b, got a={a}, b={b}")
    word = list(extend_word(w.word, b))
    word[a - 1], word[b - 1] = word[b - 1], word[a - 1]
    return Permutation(tuple(word))


def lehmer_code(w: Permutation) -> Word:
    """Lehmer code of the canonical word: c[p] = #{q > p : w(q) < w(p)}.

    The sum of the entries is ``length(w)``.
    """
    return word_lehmer_code(w.word)


def code_to_permutation(code: Sequence[int]) -> Permutation:
    """Inverse of :func:`lehmer_code` up to trailing zeros.

    Any finite vector of nonnegative integers is realizable once the ambient
    group is taken large enough (position p needs at least c[p] values to its
    right), so the only rejected inputs are negative entries.

    >>> code_to_permutation((2, 0)).word
    (3, 1, 2)
    """
    code = tuple(code)
    if any(not isinstance(c, int) or c < 0 for c in code):
        raise NotACode(f"code entries must be nonnegative: {code!r}")
    n = max([p + c for p, c in enumerate(code, start=1)] + [1, len(code)])
    padded = code + (0,) * (n - len(code))
    available = list(range(1, n + 1))
    word = tuple(available.pop(c) for c in padded)
    return Permutation(word)


def is_grassmannian(w: Permutation, k: int) -> bool:
    """True iff w increases on positions 1..k and on positions k+1..n.

    >>> is_grassmannian(Permutation((1, 2, 5, 3, 4)), 3)
    True
    """
    if k < 1:
        raise InvalidPositions(f"k must be positive: {k}")
    word = w.extended(max(len(w.word), k))
    n = len(word)
    first = all(word[p] < word[p + 1] for p in range(min(k, n) - 1))
    second = all(word[p] < word[p + 1] for p in range(k, n - 1))
    return first and second


def grassmannian_to_partition(w: Permutation, k: int) -> Partition:
    """The partition (w(k)-k, ..., w(2)-2, w(1)-1) of a k-Grassmannian w.

    >>> grassmannian_to_partition(Permutation((1, 2, 5, 3, 4)), 3).parts
    (2,)
    """
    if not is_grassmannian(w, k):
        raise NotGrassmannian(f"{w} is not {k}-Grassmannian")
    return Partition(tuple(w(p) - p for p in range(k, 0, -1)))


def partition_to_grassmannian(lam: Partition, k: int) -> Permutation:
    """The unique k-Grassmannian permutation whose partition is ``lam``.

    Round-trips with :func:`grassmannian_to_partition`.

    >>> partition_to_grassmannian(Partition((2, 1)), 5).word
    (1, 2, 3, 5, 7, 4, 6)
    """
    if k < 1:
        raise InvalidPositions(f"k must be positive: {k}")
    if len(lam.parts) > k:
        raise TooManyParts(f"{lam} has more than k={k} parts")
    rev = tuple(reversed(extend_parts(lam, k)))
    first = [p + rev[p - 1] for p in range(1, k + 1)]
    n = max(first + [k])
    rest = sorted(set(range(1, n + 1)) - set(first))
    return Permutation(tuple(first + rest))


def extend_parts(lam: Partition, k: int) -> Word:
    """Pad a partition with zeros to exactly k parts."""
    return lam.parts + (0,) * (k - len(lam.parts))


def symmetric_group(n: int) -> Iterator[Permutation]:
    """All n! permutations of S_n, as canonical :class:`Permutation` values."""
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


def sort_key(w: Permutation) -> Word:
    """Deterministic ordering key: the canonical word itself."""
    return w.word
