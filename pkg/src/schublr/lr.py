"""Two-row generalized Littlewood-Richardson coefficients and bound scans.

The coefficient of S_v in S_w * s_(m1,m2)(x_1..x_k) is computed by two
rounds of chain expansion (h_{m2} first, then h_{m1}) minus the matching
double expansion for (m2-1, m1+1); the two-row identity
s_(m1,m2) = h_{m1} h_{m2} - h_{m1+1} h_{m2-1} makes the difference exact.
Every coefficient must come out nonnegative; a negative difference is an
implementation bug and raises immediately.

Scanners sweep parameter grids, record per-cell maxima, and collect bound
violations as data with full chain witnesses.  Cells are independent, so
scans can fan out over worker processes; reports are sorted before
serialization and are byte-deterministic apart from the timing block.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import (
    BoundViolation,
    HypothesisNotMet,
    InvalidPositions,
    KTooSmall,
    NegativeCoefficient,
)
from .perms import Partition, Permutation, Word, extend_word
from .pieri import (
    CaseSignature,
    classify_chain,
    double_pieri_count_words,
    enumerate_chains,
    expand_words,
)

WordFilter = Callable[[Word, int], bool]

# At this size the per-u expansion sets stop being worth memoizing and the
# fused streaming walk wins on memory.
_STREAMING_WORD_LEN = 9


def _product_count_words(
    word: Word, k: int, m_first: int, m_second: int
) -> dict[Word, int]:
    if m_first < 0 or m_second < 0:
        return {}
    if len(word) >= _STREAMING_WORD_LEN:
        return double_pieri_count_words(word, k, m_first, m_second)
    counts: dict[Word, int] = {}
    for u in expand_words(word, m_first, k):
        for v in expand_words(u, m_second, k):
            counts[v] = counts.get(v, 0) + 1
    return counts


def _lr_count_words(word: Word, k: int, m1: int, m2: int) -> dict[Word, int]:
    if m2 > m1:
        raise InvalidPositions(f"two-row shape needs m1 >= m2, got ({m1},{m2})")
    if m2 >= 1 and k < 2:
        raise KTooSmall(f"two-row expansion needs k >= 2, got k={k}")
    first = _product_count_words(word, k, m2, m1)
    if m2 == 0:
        return first
    second = _product_count_words(word, k, m2 - 1, m1 + 1)
    out: dict[Word, int] = {}
    for v, c in first.items():
        diff = c - second.pop(v, 0)
        if diff < 0:
            raise NegativeCoefficient(
                f"coefficient {diff} at {v} for w={word}, k={k}, lam=({m1},{m2})"
            )
        if diff:
            out[v] = diff
    if second:
        stray = next(iter(second))
        raise NegativeCoefficient(
            f"subtrahend-only term at {stray} for w={word}, k={k}, lam=({m1},{m2})"
        )
    return out


def product_h_h(
    w: Permutation, k: int, m_first: int, m_second: int
) -> dict[Permutation, int]:
    """Schubert coefficients of h_{m_second} * h_{m_first} * S_w.

    The coefficient of v counts the intermediates u with u in the h_{m_first}
    expansion of w and v in the h_{m_second} expansion of u; the value is
    symmetric in the two degrees.
    """
    counts = _product_count_words(w.word, k, m_first, m_second)
    return {Permutation(v): c for v, c in counts.items()}


def lr_two_row(w: Permutation, k: int, lam: Partition) -> dict[Permutation, int]:
    """Expansion of S_w * s_lam(x_1..x_k) for a shape with at most two rows.

    Every coefficient is a nonnegative integer; the empty shape gives {w: 1}.
    """
    m1, m2 = lam.two_row()
    counts = _lr_count_words(w.word, k, m1, m2)
    return {Permutation(v): c for v, c in counts.items()}


def case_census(
    w: Permutation, k: int, lam: Partition, v: Permutation
) -> Counter[CaseSignature]:
    """Signatures of the intermediates through which v is reached.

    Uses the h_{m2}-then-h_{m1} factorization and classifies the chain from
    w to each intermediate u with v in the second-round expansion of u.  The
    ambient group index is max(k, |w|).
    """
    m1, m2 = lam.two_row()
    n2 = max(k, w.size)
    census: Counter[CaseSignature] = Counter()
    v_word = v.word
    for chain in enumerate_chains(w, m2, k):
        u = chain.endpoint()
        if v_word in expand_words(u.word, m1, k):
            census[classify_chain(chain, n2)] += 1
    return census


# ---------------------------------------------------------------------------
# scan reports


@dataclass(frozen=True)
class CellResult:
    n2: int
    w: Word
    k: int
    lam: tuple[int, int]
    n_terms: int
    max_coeff: int
    argmax: tuple[Word, ...]

    def sort_key(self):
        return (self.n2, self.k, self.lam, self.w)

    def to_dict(self) -> dict:
        return {
            "n2": self.n2,
            "w": list(self.w),
            "k": self.k,
            "lambda": list(self.lam),
            "terms": self.n_terms,
            "max_coeff": self.max_coeff,
            "argmax": [list(v) for v in self.argmax],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CellResult":
        return cls(
            n2=data["n2"],
            w=tuple(data["w"]),
            k=data["k"],
            lam=tuple(data["lambda"]),
            n_terms=data["terms"],
            max_coeff=data["max_coeff"],
            argmax=tuple(tuple(v) for v in data["argmax"]),
        )


@dataclass(frozen=True)
class ViolationRecord:
    n2: int
    w: Word
    k: int
    lam: tuple[int, int]
    v: Word
    coeff: int
    bound: int
    witnesses: tuple = ()

    def to_dict(self) -> dict:
        return {
            "n2": self.n2,
            "w": list(self.w),
            "k": self.k,
            "lambda": list(self.lam),
            "v": list(self.v),
            "coeff": self.coeff,
            "bound": self.bound,
            "witnesses": [
                {
                    "u": list(u),
                    "chain_w_to_u": [list(s) for s in c1],
                    "chain_u_to_v": [list(s) for s in c2],
                }
                for u, c1, c2 in self.witnesses
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ViolationRecord":
        return cls(
            n2=data["n2"],
            w=tuple(data["w"]),
            k=data["k"],
            lam=tuple(data["lambda"]),
            v=tuple(data["v"]),
            coeff=data["coeff"],
            bound=data["bound"],
            witnesses=tuple(
                (
                    tuple(item["u"]),
                    tuple(tuple(s) for s in item["chain_w_to_u"]),
                    tuple(tuple(s) for s in item["chain_u_to_v"]),
                )
                for item in data["witnesses"]
            ),
        )


@dataclass
class ScanReport:
    config: dict
    cells: list[CellResult] = field(default_factory=list)
    violations: list[ViolationRecord] = field(default_factory=list)
    global_max: int = 0
    timing: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "cells": [c.to_dict() for c in self.cells],
            "violations": [v.to_dict() for v in self.violations],
            "global_max": self.global_max,
            "timing": self.timing,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScanReport":
        return cls(
            config=data["config"],
            cells=[CellResult.from_dict(c) for c in data["cells"]],
            violations=[ViolationRecord.from_dict(v) for v in data["violations"]],
            global_max=data["global_max"],
            timing=data["timing"],
        )


# ---------------------------------------------------------------------------
# scan cells and drivers

# A cell is (n2, word, k, m1, m2, bound); the worker recomputes everything it
# needs from those six values so cells pickle cheaply.
Cell = tuple[int, Word, int, int, int, int]


def _violation_witnesses(word: Word, k: int, m1: int, m2: int, v: Word):
    """Chain pairs from w through some u to the offending v (h_{m2} first)."""
    witnesses = []
    base = Permutation(word)
    for chain in enumerate_chains(base, m2, k):
        u = chain.endpoint()
        if v not in expand_words(u.word, m1, k):
            continue
        for inner in enumerate_chains(u, m1, k):
            if inner.endpoint().word == v:
                witnesses.append((u.word, chain.steps, inner.steps))
    return tuple(witnesses)


def _run_cell(cell: Cell) -> tuple[CellResult, list[ViolationRecord]]:
    n2, word, k, m1, m2, bound = cell
    counts = _lr_count_words(word, k, m1, m2)
    max_coeff = max(counts.values(), default=0)
    argmax = tuple(sorted(v for v, c in counts.items() if c == max_coeff)) if counts else ()
    result = CellResult(
        n2=n2,
        w=word,
        k=k,
        lam=(m1, m2),
        n_terms=len(counts),
        max_coeff=max_coeff,
        argmax=argmax,
    )
    violations = [
        ViolationRecord(
            n2=n2,
            w=word,
            k=k,
            lam=(m1, m2),
            v=v,
            coeff=c,
            bound=bound,
            witnesses=_violation_witnesses(word, k, m1, m2, v),
        )
        for v, c in sorted(counts.items())
        if c > bound
    ]
    return result, violations


def _run_cells(
    cells: list[Cell], workers: int
) -> tuple[list[CellResult], list[ViolationRecord]]:
    results: list[CellResult] = []
    violations: list[ViolationRecord] = []
    # Pool startup only pays off on real grids; tiny scans run inline.
    if workers > 1 and len(cells) < 4 * workers:
        workers = 1
    if workers <= 1:
        for cell_result, cell_violations in map(_run_cell, cells):
            results.append(cell_result)
            violations.extend(cell_violations)
    else:
        chunk = max(1, len(cells) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for cell_result, cell_violations in pool.map(
                _run_cell, cells, chunksize=chunk
            ):
                results.append(cell_result)
                violations.extend(cell_violations)
    results.sort(key=CellResult.sort_key)
    violations.sort(key=lambda v: (v.n2, v.k, v.lam, v.w, v.v))
    return results, violations


def _finish_report(
    config: dict,
    cells: list[Cell],
    workers: int,
    started: float,
) -> ScanReport:
    results, violations = _run_cells(cells, workers)
    return ScanReport(
        config=config,
        cells=results,
        violations=violations,
        global_max=max((c.max_coeff for c in results), default=0),
        timing={"elapsed_seconds": round(time.perf_counter() - started, 6)},
    )


def _two_row_shapes(m1_max: int) -> list[tuple[int, int]]:
    return [(m1, m2) for m1 in range(m1_max + 1) for m2 in range(m1 + 1)]


def _words_of(n2: int) -> list[Word]:
    return [
        Permutation(word).word
        for word in itertools.permutations(range(1, n2 + 1))
    ]


def has_antidominant_tail(word: Word, k: int, n2: int) -> bool:
    """w(k+1) > w(k+2) > ... > w(n2) on the embedded word."""
    full = extend_word(word, n2)
    return all(full[p - 1] > full[p] for p in range(k + 1, n2))


def verify_theorem_1(
    n2_max: int,
    m1_max: int,
    workers: int = 1,
    raise_on_violation: bool = True,
) -> ScanReport:
    """Check the small-spread coefficient bounds over an exhaustive grid.

    For every w in S_{n2} with n2 <= n2_max, every two-row shape with
    m1 <= m1_max, and k in {n2, n2-1, n2-2} with k >= 2, the coefficients
    must lie in {0,1} for the first two spreads and {0,1,2} for spread two.
    """
    started = time.perf_counter()
    cells: list[Cell] = []
    for n2 in range(2, n2_max + 1):
        for k in (n2, n2 - 1, n2 - 2):
            if k < 2:
                continue
            bound = 1 if k >= n2 - 1 else 2
            for word in _words_of(n2):
                for m1, m2 in _two_row_shapes(m1_max):
                    cells.append((n2, word, k, m1, m2, bound))
    config = {
        "scan": "theorem1",
        "n2_max": n2_max,
        "m1_max": m1_max,
        "bounds": {"spread 0": 1, "spread 1": 1, "spread 2": 2},
    }
    report = _finish_report(config, cells, workers, started)
    if report.violations and raise_on_violation:
        raise BoundViolation(
            f"{len(report.violations)} bound violations recorded", report
        )
    return report


def verify_theorem_2(
    n2: int,
    k: int,
    lam: Partition,
    w_filter: str = "all",
    workers: int = 1,
    raise_on_violation: bool = True,
) -> ScanReport:
    """Check c <= 2^(n2-k) (n2-k)! over all w in S_{n2} for one (k, lam).

    Requires the hypothesis n2 - k < m2; with w_filter="antidominant_tail"
    only permutations with w(k+1) > ... > w(n2) are scanned, against the
    sharper bound 2^(n2-k).
    """
    m1, m2 = lam.two_row()
    if k < 2 or k > n2:
        raise InvalidPositions(f"need 2 <= k <= n2, got k={k}, n2={n2}")
    if n2 - k >= m2:
        raise HypothesisNotMet(
            f"theorem requires n2 - k < m2, got n2-k={n2 - k}, m2={m2}"
        )
    if w_filter not in ("all", "antidominant_tail"):
        raise InvalidPositions(f"unknown w_filter {w_filter!r}")
    spread = n2 - k
    bound = 2**spread if w_filter == "antidominant_tail" else 2**spread * math.factorial(spread)
    started = time.perf_counter()
    cells: list[Cell] = []
    for word in _words_of(n2):
        if w_filter == "antidominant_tail" and not has_antidominant_tail(word, k, n2):
            continue
        cells.append((n2, word, k, m1, m2, bound))
    config = {
        "scan": "theorem2",
        "n2": n2,
        "k": k,
        "lambda": [m1, m2],
        "w_filter": w_filter,
        "bound": bound,
    }
    report = _finish_report(config, cells, workers, started)
    if report.violations and raise_on_violation:
        raise BoundViolation(
            f"{len(report.violations)} bound violations recorded", report
        )
    return report


def scan_conjecture(
    n2_values: Iterable[int],
    k_values: Iterable[int] | None,
    m1_max: int,
    w_filter: str | None = None,
    workers: int = 1,
) -> ScanReport:
    """Sweep cells against the conjectured bound c <= n2 - k.

    Violations are recorded as data, never raised: a genuine counterexample
    is a finding.  For k = n2 the literal bound reads 0 yet coefficients 1
    occur, contradicting the proven spread-0 bound of 1; the scanner
    therefore checks max(1, n2 - k) and flags the adjustment in the config.
    """
    if w_filter not in (None, "antidominant_tail"):
        raise InvalidPositions(f"unknown w_filter {w_filter!r}")
    started = time.perf_counter()
    n2_list = sorted(set(n2_values))
    cells: list[Cell] = []
    for n2 in n2_list:
        ks = sorted(set(k_values)) if k_values is not None else range(2, n2 + 1)
        for k in ks:
            if k < 2 or k > n2:
                continue
            bound = max(1, n2 - k)
            for word in _words_of(n2):
                if w_filter == "antidominant_tail" and not has_antidominant_tail(
                    word, k, n2
                ):
                    continue
                for m1, m2 in _two_row_shapes(m1_max):
                    cells.append((n2, word, k, m1, m2, bound))
    config = {
        "scan": "conjecture",
        "n2": n2_list,
        "k": sorted(set(k_values)) if k_values is not None else "all",
        "m1_max": m1_max,
        "w_filter": w_filter,
        "checked_bound": "max(1, n2-k)",
        "k_eq_n2_note": (
            "literal conjectured bound n2-k is 0 at k=n2; cells there are "
            "checked against 1, the proven spread-0 bound"
        ),
    }
    return _finish_report(config, cells, workers, started)


def scan_cell(w: Permutation, k: int, lam: Partition, workers: int = 1) -> ScanReport:
    """Single-cell report for (w, k, lam) against the conjectured bound."""
    m1, m2 = lam.two_row()
    n2 = max(k, w.size)
    started = time.perf_counter()
    bound = max(1, n2 - k)
    config = {
        "scan": "cell",
        "n2": n2,
        "w": list(w.word),
        "k": k,
        "lambda": [m1, m2],
        "checked_bound": "max(1, n2-k)",
    }
    return _finish_report(config, [(n2, w.word, k, m1, m2, bound)], workers, started)
