"""Pieri chains, chain equivalence, and the indexed-case classification.

The product of a Schubert polynomial with a complete homogeneous polynomial
h_m(x_1..x_k) expands multiplicity-free over the endpoints of *chains*:
sequences of transpositions t_{a_i b_i} with a_i <= k < b_i, the a_i weakly
increasing, the b_i pairwise distinct, and every prefix raising the Coxeter
length by exactly one.  The canonical enumeration below (a ascending, then b
ascending, depth first) visits each endpoint exactly once; that uniqueness is
asserted against the polynomial oracle by the test suite rather than assumed.

A chain admits many valid *representations*: reorderings of transpositions
that still gain length one per step and reach the same endpoint.  Both the
equivalence relation and the case classification quantify over
representations, so both are implemented on top of a representation search
(cheap: within one representation the target position of each step forces
the column, leaving at most m! branches).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import (
    BoundViolation,
    InvalidPositions,
    MalformedPermutation,
    MismatchedChains,
    NotClassifiable,
)
from .perms import (
    Permutation,
    Word,
    canonical_word,
    extend_word,
)

Step = tuple[int, int]

_WORD_INTERN: dict[Word, Word] = {}


def _intern(word: Word) -> Word:
    cached = _WORD_INTERN.get(word)
    if cached is None:
        _WORD_INTERN[word] = word
        cached = word
    return cached


# ---------------------------------------------------------------------------
# single steps


def is_pieri_step(w: Permutation, a: int, b: int, k: int) -> bool:
    """Single-step criterion: w(a) < w(b) with no w(i) between, a < i < b.

    Equivalent to length(w * t_ab) == length(w) + 1 for a <= k < b.

    >>> is_pieri_step(Permutation((1, 4, 3, 2)), 1, 4, 3)
    True
    """
    if a < 1 or a > k or b <= k:
        raise BoundViolation(f"need 1 <= a <= k < b, got a={a}, b={b}, k={k}")
    word = extend_word(w.word, b)
    return _step_ok(word, a, b)


def _step_ok(word: Sequence[int], a: int, b: int) -> bool:
    va, vb = word[a - 1], word[b - 1]
    if va >= vb:
        return False
    return all(not (va < word[p - 1] < vb) for p in range(a + 1, b))


# ---------------------------------------------------------------------------
# canonical chain enumeration (word level, used by everything downstream)


def _step_scan(cur: list[int], k: int, n_amb: int, a: int, used: int):
    """Yield the valid targets b for column a on the running word.

    Walking right from a, a position can serve as b iff its value exceeds
    cur[a] and undercuts every larger-than-cur[a] value seen on the way
    (once some value v > cur[a] is passed, any b with value above v is
    blocked by it).
    """
    va = cur[a - 1]
    ceiling = 0
    for p in range(a + 1, n_amb + 1):
        v = cur[p - 1]
        if v < va:
            continue
        if ceiling == 0 or v < ceiling:
            if p > k and not (used >> p) & 1:
                yield p
            ceiling = v
            if ceiling == va + 1:
                return


def _walk_chains(word: Word, m: int, k: int) -> Iterator[tuple[Step, ...]]:
    """All canonical chains of length m from ``word``, in (a, b)-ascending
    depth-first order."""
    n_amb = max(len(word), k) + m
    cur = list(extend_word(word, n_amb))
    steps: list[Step] = []

    def dfs(depth: int, a_lo: int, used: int):
        if depth == m:
            yield tuple(steps)
            return
        for a in range(a_lo, k + 1):
            for b in list(_step_scan(cur, k, n_amb, a, used)):
                va, vb = cur[a - 1], cur[b - 1]
                cur[a - 1], cur[b - 1] = vb, va
                steps.append((a, b))
                yield from dfs(depth + 1, a, used | (1 << b))
                steps.pop()
                cur[a - 1], cur[b - 1] = va, vb

    yield from dfs(0, 1, 0)


@lru_cache(maxsize=1 << 16)
def expand_words(word: Word, m: int, k: int) -> frozenset[Word]:
    """Canonical endpoint words of all length-m chains from ``word``."""
    if m < 0:
        return frozenset()
    n_amb = max(len(word), k) + m
    cur = list(extend_word(word, n_amb))
    out: set[Word] = set()

    def dfs(depth: int, a_lo: int, used: int):
        if depth == m:
            out.add(_intern(canonical_word(cur)))
            return
        for a in range(a_lo, k + 1):
            va = cur[a - 1]
            ceiling = 0
            for b in range(a + 1, n_amb + 1):
                vb = cur[b - 1]
                if vb < va:
                    continue
                if ceiling == 0 or vb < ceiling:
                    if b > k and not (used >> b) & 1:
                        cur[a - 1], cur[b - 1] = vb, va
                        dfs(depth + 1, a, used | (1 << b))
                        cur[a - 1], cur[b - 1] = va, vb
                    ceiling = vb
                    if ceiling == va + 1:
                        break

    dfs(0, 1, 0)
    return frozenset(out)


def double_pieri_count_words(
    word: Word, k: int, m_first: int, m_second: int
) -> dict[Word, int]:
    """Endpoint multiplicities of two chained Pieri expansions.

    Streams a fused depth-first search (first m_first steps, then a fresh
    chain of m_second steps) and counts leaf endpoints; only the endpoint
    count map is materialized.  Each (intermediate, endpoint) pair is hit
    exactly once because canonical chains are endpoint-unique, so the count
    of v equals the number of intermediates u reaching it.
    """
    if m_first < 0 or m_second < 0:
        return {}
    n_amb = max(len(word), k) + m_first + m_second
    cur = list(extend_word(word, n_amb))
    counts: dict[Word, int] = {}

    def dfs(depth: int, a_lo: int, used: int, stage_len: int, last: bool):
        if depth == stage_len:
            if last:
                w = canonical_word(cur)
                counts[w] = counts.get(w, 0) + 1
            else:
                dfs(0, 1, 0, m_second, True)
            return
        for a in range(a_lo, k + 1):
            va = cur[a - 1]
            ceiling = 0
            for b in range(a + 1, n_amb + 1):
                vb = cur[b - 1]
                if vb < va:
                    continue
                if ceiling == 0 or vb < ceiling:
                    if b > k and not (used >> b) & 1:
                        cur[a - 1], cur[b - 1] = vb, va
                        dfs(depth + 1, a, used | (1 << b), stage_len, last)
                        cur[a - 1], cur[b - 1] = va, vb
                    ceiling = vb
                    if ceiling == va + 1:
                        break

    dfs(0, 1, 0, m_first, False)
    return counts


# ---------------------------------------------------------------------------
# public chain objects


@dataclass(frozen=True)
class PieriChain:
    """A base permutation, the variable bound k, and ordered steps (a, b)."""

    base: Permutation
    k: int
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))

    def validate(self) -> None:
        """Check the chain conditions; raises on the first failure."""
        cur = list(extend_word(self.base.word, self._ambient()))
        used: set[int] = set()
        for a, b in self.steps:
            if a < 1 or a > self.k or b <= self.k:
                raise BoundViolation(
                    f"step ({a},{b}) violates a <= k < b for k={self.k}"
                )
            if b in used:
                raise InvalidPositions(f"repeated b position {b}")
            if not _step_ok(cur, a, b):
                raise InvalidPositions(
                    f"step ({a},{b}) does not raise the length by one"
                )
            used.add(b)
            cur[a - 1], cur[b - 1] = cur[b - 1], cur[a - 1]

    def _ambient(self) -> int:
        positions = [len(self.base.word), self.k] + [b for _, b in self.steps]
        return max(positions)

    def endpoint(self) -> Permutation:
        cur = list(extend_word(self.base.word, self._ambient()))
        for a, b in self.steps:
            cur[a - 1], cur[b - 1] = cur[b - 1], cur[a - 1]
        return Permutation(tuple(cur))

    def render(self) -> str:
        steps = "".join(f"({a},{b})" for a, b in self.steps)
        return f"w={self.base} k={self.k} steps={steps}"


_CHAIN_RE = re.compile(
    r"^\s*w=(?P<w>[\d,]+)\s+k=(?P<k>\d+)\s+steps=(?P<steps>(\(\d+,\d+\))*)\s*$"
)


def parse_chain(text: str) -> PieriChain:
    """Parse the chain text format ``w=1,4,3,2 k=3 steps=(3,5)(3,6)``."""
    match = _CHAIN_RE.match(text)
    if not match:
        raise MalformedPermutation(f"cannot parse chain text: {text!r}")
    from .perms import parse_permutation

    base = parse_permutation(match.group("w"))
    k = int(match.group("k"))
    steps = tuple(
        (int(a), int(b))
        for a, b in re.findall(r"\((\d+),(\d+)\)", match.group("steps"))
    )
    return PieriChain(base, k, steps)


def enumerate_chains(w: Permutation, m: int, k: int) -> list[PieriChain]:
    """All canonical chains of length m from w (a ascending, then b).

    m = 0 yields the single empty chain.
    """
    if m < 0 or k < 1:
        raise InvalidPositions(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    return [PieriChain(w, k, steps) for steps in _walk_chains(w.word, m, k)]


def pieri_expand(w: Permutation, m: int, k: int) -> frozenset[Permutation]:
    """Support of h_m(x_1..x_k) * S_w: the deduplicated chain endpoints.

    The expansion is multiplicity-free, so this set carries the whole
    product (all coefficients are 1).
    """
    if m < 0 or k < 1:
        raise InvalidPositions(f"need m >= 0 and k >= 1, got m={m}, k={k}")
    return frozenset(Permutation(v) for v in expand_words(w.word, m, k))


# ---------------------------------------------------------------------------
# representations: valid reorderings reaching a fixed endpoint


def representations(
    base: Permutation, k: int, target: Permutation, m: int
) -> list[tuple[Step, ...]]:
    """All valid length-m step sequences from base to target.

    The a's need not be weakly increasing.  Within any valid sequence the
    set of b's is forced (the positions beyond k where base and target
    differ) and the column of each step is forced by its b (the value
    target(b) must currently stand in that column), so the search branches
    only over the order of the b's.
    """
    n_amb = max(base.size, target.size, k + 1)
    base_w = list(extend_word(base.word, n_amb))
    target_w = extend_word(target.word, n_amb)
    diffs = [
        p for p in range(k + 1, n_amb + 1) if base_w[p - 1] != target_w[p - 1]
    ]
    if len(diffs) != m:
        return []
    out: list[tuple[Step, ...]] = []
    steps: list[Step] = []

    def dfs(remaining: frozenset[int]):
        if not remaining:
            if tuple(base_w) == target_w:
                out.append(tuple(steps))
            return
        for b in sorted(remaining):
            parked = target_w[b - 1]
            a = base_w.index(parked) + 1
            if a > k or a >= b:
                continue
            if not _step_ok(base_w, a, b):
                continue
            base_w[a - 1], base_w[b - 1] = base_w[b - 1], base_w[a - 1]
            steps.append((a, b))
            dfs(remaining - {b})
            steps.pop()
            base_w[a - 1], base_w[b - 1] = base_w[b - 1], base_w[a - 1]

    dfs(frozenset(diffs))
    return out


# ---------------------------------------------------------------------------
# equivalence of chains


def _runs(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs (value, length) of a sequence."""
    runs: list[tuple[int, int]] = []
    for v in seq:
        if runs and runs[-1][0] == v:
            runs[-1] = (v, runs[-1][1] + 1)
        else:
            runs.append((v, 1))
    return runs


def _columns_contiguous(seq: Sequence[int]) -> bool:
    seen_closed: set[int] = set()
    for i, v in enumerate(seq):
        if v in seen_closed:
            return False
        if i + 1 < len(seq) and seq[i + 1] != v:
            seen_closed.add(v)
    return True


def _compatible_representations(r1: Sequence[Step], r2: Sequence[Step]) -> bool:
    if [b for _, b in r1] != [b for _, b in r2]:
        return False
    a1 = [a for a, _ in r1]
    a2 = [a for a, _ in r2]
    if not (_columns_contiguous(a1) and _columns_contiguous(a2)):
        return False
    m = len(a1)
    if any((a1[i] == a1[i + 1]) != (a2[i] == a2[i + 1]) for i in range(m - 1)):
        return False
    # Runs align by the block-pattern match; a single-step run pins its
    # column, while a repeated run may trade its column for another.
    pos = 0
    for col, size in _runs(a1):
        if size == 1 and a2[pos] != col:
            return False
        pos += size
    return True


def chains_equivalent(c1: PieriChain, c2: PieriChain) -> bool:
    """Equivalence of two chains sharing base, k, and length.

    True iff some representations of the two endpoints have identical
    b-sequences, columns contiguous in both, matching run patterns, and
    identical columns on all single-step runs (multi-step runs may differ
    in column).  Equivalent chains with distinct endpoints never share a
    Pieri successor; the suite checks that exhaustively at desk scale.
    """
    if c1.base != c2.base or c1.k != c2.k or len(c1.steps) != len(c2.steps):
        raise MismatchedChains(
            "chains must share base permutation, k, and length"
        )
    c1.validate()
    c2.validate()
    u1, u2 = c1.endpoint(), c2.endpoint()
    if u1 == u2:
        return True
    m = len(c1.steps)
    reps1 = representations(c1.base, c1.k, u1, m)
    reps2 = representations(c2.base, c2.k, u2, m)
    return any(
        _compatible_representations(r1, r2) for r1 in reps1 for r2 in reps2
    )


# ---------------------------------------------------------------------------
# indexed-case classification


@dataclass(frozen=True)
class CaseSignature:
    """The tuple (i, j, I1, I2) labelling a chain's shape.

    j counts the steps landing inside {k+1..n2} and I2 records their targets
    in order; the remaining steps use the consecutive positions past n2 and
    share one column; i counts the leading steps on columns other than that
    tail column, their multiplicities forming the multiset I1 (stored as a
    decreasing tuple).
    """

    i: int
    j: int
    i1: tuple[int, ...]
    i2: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "i1", tuple(self.i1))
        object.__setattr__(self, "i2", tuple(tuple(p) for p in self.i2))
        if not (0 <= self.i <= self.j):
            raise NotClassifiable(f"need 0 <= i <= j, got i={self.i}, j={self.j}")
        if sum(self.i1) != self.i or len(self.i1) > self.j:
            raise NotClassifiable(f"I1 {self.i1!r} inconsistent with i={self.i}")
        if [p for p, _ in self.i2] != list(range(1, self.j + 1)):
            raise NotClassifiable(f"I2 {self.i2!r} inconsistent with j={self.j}")
        ys = [y for _, y in self.i2]
        if len(set(ys)) != len(ys):
            raise NotClassifiable(f"repeated y-values in {self.i2!r}")

    def sort_key(self):
        return (self.i, self.j, self.i2, self.i1)

    def render(self) -> str:
        i1 = "{" + ",".join(str(x) for x in self.i1) + "}"
        i2 = "[" + ",".join(f"({p},{y})" for p, y in self.i2) + "]"
        return f"({self.i},{self.j},{i1},{i2})"


def _shape_signature(rep: Sequence[Step], n2: int) -> CaseSignature | None:
    """Signature of one representation if it has the indexed-case shape."""
    m = len(rep)
    if m == 0:
        return CaseSignature(0, 0, (), ())
    bs = [b for _, b in rep]
    a_seq = [a for a, _ in rep]
    j = sum(1 for b in bs if b <= n2)
    if any(b > n2 for b in bs[:j]):
        return None
    if bs[j:] != list(range(n2 + 1, n2 + 1 + m - j)):
        return None
    start = m - 1
    while start > 0 and a_seq[start - 1] == a_seq[m - 1]:
        start -= 1
    if j < m and start > j:
        return None
    runs = _runs(a_seq[:start])
    cols = [c for c, _ in runs]
    if len(set(cols)) != len(cols) or a_seq[m - 1] in cols:
        return None
    i1 = tuple(sorted((size for _, size in runs), reverse=True))
    i2 = tuple((l + 1, bs[l]) for l in range(j))
    return CaseSignature(start, j, i1, i2)


def classify_chain(chain: PieriChain, n2: int) -> CaseSignature:
    """The indexed-case signature of a chain whose base lies in S_{n2}.

    Searches over valid representations for one of the indexed-case shape;
    when several shapes fit (distinct y-orders can both be realizable), the
    smallest signature under (i, j, I2, I1) ordering is returned, which
    makes the result independent of the representation the caller supplies.
    """
    if chain.k > n2:
        raise NotClassifiable(f"need k <= n2, got k={chain.k}, n2={n2}")
    if chain.base.size > n2:
        raise NotClassifiable(
            f"base {chain.base} does not lie in S_{n2}"
        )
    chain.validate()
    m = len(chain.steps)
    if m == 0:
        return CaseSignature(0, 0, (), ())
    target = chain.endpoint()
    signatures = set()
    for rep in representations(chain.base, chain.k, target, m):
        sig = _shape_signature(rep, n2)
        if sig is not None:
            signatures.add(sig)
    if not signatures:
        raise NotClassifiable(f"no indexed-case representation for {chain.render()}")
    return min(signatures, key=CaseSignature.sort_key)


def _partitions_at_most(total: int, max_parts: int) -> list[tuple[int, ...]]:
    """Multisets of positive integers with the given sum and part bound,
    as decreasing tuples."""
    if total == 0:
        return [()]
    out: list[tuple[int, ...]] = []

    def build(remaining: int, cap: int, parts: list[int]):
        if remaining == 0:
            out.append(tuple(parts))
            return
        if len(parts) == max_parts:
            return
        for nxt in range(min(cap, remaining), 0, -1):
            parts.append(nxt)
            build(remaining - nxt, nxt, parts)
            parts.pop()

    build(total, total, [])
    return out


def enumerate_case_signatures(n2: int, k: int) -> frozenset[CaseSignature]:
    """The full indexed set M for the spread n2 - k.

    |M| = 1, 3, 13 for spreads 0, 1, 2.
    """
    if k < 1 or n2 < k:
        raise InvalidPositions(f"need 1 <= k <= n2, got k={k}, n2={n2}")
    spread = n2 - k
    sigs: set[CaseSignature] = set()
    for j in range(spread + 1):
        i2_choices = [
            tuple((l + 1, y) for l, y in enumerate(ys))
            for ys in itertools.permutations(range(k + 1, n2 + 1), j)
        ]
        for i in range(j + 1):
            for i1 in _partitions_at_most(i, j):
                for i2 in i2_choices:
                    sigs.add(CaseSignature(i, j, i1, i2))
    return frozenset(sigs)


def less_minimal_partition(
    sigs: Sequence[CaseSignature] | frozenset[CaseSignature],
) -> tuple[frozenset[CaseSignature], frozenset[CaseSignature]]:
    """Split signatures by the less-minimal criterion.

    A signature is less-minimal iff no signature in scope sits two or more
    levels below it in j; equivalently its j is within 1 of the minimum.
    """
    sigs = frozenset(sigs)
    if not sigs:
        return frozenset(), frozenset()
    j_min = min(s.j for s in sigs)
    less = frozenset(s for s in sigs if s.j <= j_min + 1)
    return less, sigs - less


def clear_pieri_cache() -> None:
    expand_words.cache_clear()
    _WORD_INTERN.clear()
