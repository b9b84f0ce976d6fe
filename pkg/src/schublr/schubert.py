"""Schubert polynomials, Schur polynomials, and the basis-reduction oracle.

The Schubert polynomial of the longest element of S_n is the staircase
monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}; every other one is reached by
divided differences along descents.  Results are memoized per canonical
permutation; the memo behaves as a get-or-compute cache (duplicate
computation under races is harmless because the function is pure).

``expand_in_schubert_basis`` is the independent oracle used to cross-check
every chain-based product in this package: it peels leading terms in the
rightmost-dominant order, converting each leading exponent vector to a
permutation through the Lehmer code.
"""

from __future__ import annotations

import itertools
import json
import os
from typing import Dict

from .errors import (
    DegreeExceedsVariables,
    KTooSmall,
    NotSchubertSpanned,
    TooManyParts,
)
from .perms import (
    Partition,
    Permutation,
    Word,
    code_to_permutation,
    word_length,
)
from .poly import Monomial, SparsePolynomial, monomial_sort_key

SchubertExpansion = Dict[Permutation, int]

# Canonical word -> polynomial.  Plain dict reads/writes are atomic under the
# GIL; concurrent workers may at worst recompute an entry.
_SCHUBERT_CACHE: dict[Word, SparsePolynomial] = {}

CACHE_FORMAT_VERSION = 1
CACHE_FILENAME = "schubert_cache.json"


def _staircase(n: int) -> SparsePolynomial:
    return SparsePolynomial.monomial(tuple(range(n - 1, 0, -1)))


def schubert(w: Permutation) -> SparsePolynomial:
    """The Schubert polynomial of ``w``.

    >>> schubert(Permutation((1, 3, 2))).render()
    'x2 + x1'
    """
    word = w.word
    cached = _SCHUBERT_CACHE.get(word)
    if cached is not None:
        return cached
    n = len(word)
    if word_length(word) == n * (n - 1) // 2:
        result = _staircase(n)
    else:
        # Smallest ascent of w; w*s_i is one step longer with descent at i.
        i = next(p for p in range(1, n) if word[p - 1] < word[p])
        up = list(word)
        up[i - 1], up[i] = up[i], up[i - 1]
        result = schubert(Permutation(tuple(up))).divided_difference(i)
    _SCHUBERT_CACHE[word] = result
    return result


def complete_homogeneous(m: int, k: int) -> SparsePolynomial:
    """h_m(x_1..x_k): all monomials of total degree m; h_0 = 1, h_{<0} = 0."""
    if k < 1:
        raise KTooSmall(f"need at least one variable, got k={k}")
    if m < 0:
        return SparsePolynomial.zero()
    terms = {}
    for combo in itertools.combinations_with_replacement(range(k), m):
        exps = [0] * k
        for v in combo:
            exps[v] += 1
        terms[tuple(exps)] = 1
    return SparsePolynomial(terms)


def elementary(m: int, k: int) -> SparsePolynomial:
    """e_m(x_1..x_k): all squarefree monomials of degree m."""
    if k < 1:
        raise KTooSmall(f"need at least one variable, got k={k}")
    if m < 0:
        return SparsePolynomial.zero()
    if m > k:
        raise DegreeExceedsVariables(f"e_{m} needs at least {m} variables, got {k}")
    terms = {}
    for combo in itertools.combinations(range(k), m):
        exps = [0] * k
        for v in combo:
            exps[v] = 1
        terms[tuple(exps)] = 1
    return SparsePolynomial(terms)


def schur_ssyt(lam: Partition, k: int) -> SparsePolynomial:
    """Schur polynomial as the content generating function of tableaux.

    Fillings of the diagram of ``lam`` with entries in 1..k, rows weakly
    increasing and columns strictly increasing, each contributing the
    monomial x^(content).
    """
    parts = lam.parts
    if len(parts) > k:
        raise TooManyParts(f"{lam} has more than k={k} parts")
    if not parts:
        return SparsePolynomial.one()

    terms: dict[Monomial, int] = {}
    rows = len(parts)
    tableau = [[0] * parts[r] for r in range(rows)]
    content = [0] * k

    def fill(r: int, c: int):
        if r == rows:
            mono = tuple(content)
            terms[mono] = terms.get(mono, 0) + 1
            return
        nr, nc = (r, c + 1) if c + 1 < parts[r] else (r + 1, 0)
        low = tableau[r][c - 1] if c > 0 else 1
        if r > 0 and c < parts[r - 1]:
            low = max(low, tableau[r - 1][c] + 1)
        for v in range(low, k + 1):
            tableau[r][c] = v
            content[v - 1] += 1
            fill(nr, nc)
            content[v - 1] -= 1

    fill(0, 0)
    return SparsePolynomial(terms)


def schur_jacobi_trudi_two_row(lam: Partition, k: int) -> SparsePolynomial:
    """s_(m1,m2) = h_{m1} h_{m2} - h_{m1+1} h_{m2-1} in k >= 2 variables."""
    m1, m2 = lam.two_row()
    if k < 2:
        raise KTooSmall(f"the two-row identity needs k >= 2, got k={k}")
    first = complete_homogeneous(m1, k) * complete_homogeneous(m2, k)
    if m2 == 0:
        return first
    second = complete_homogeneous(m1 + 1, k) * complete_homogeneous(m2 - 1, k)
    return first - second


def expand_in_schubert_basis(f: SparsePolynomial) -> SchubertExpansion:
    """Expand an integer combination of Schubert polynomials.

    Repeatedly converts the leading exponent vector to a permutation via the
    Lehmer code and subtracts that Schubert polynomial.  Guards: the leading
    monomial must strictly decrease every round, and the number of rounds is
    capped at 64x the starting term count; either failure raises
    NotSchubertSpanned (it would indicate input outside the Schubert span or
    a broken term order, not a valid state).
    """
    expansion: SchubertExpansion = {}
    if not f:
        return expansion
    cap = 64 * len(f)
    width = f.width()
    previous_key = None
    for _ in range(cap):
        if not f:
            return expansion
        lead = f.leading_monomial()
        key = monomial_sort_key(lead, max(width, len(lead)))
        if previous_key is not None and key >= previous_key:
            raise NotSchubertSpanned(
                f"leading monomial failed to decrease at {lead}"
            )
        previous_key = key
        coeff = f.terms[lead]
        w = code_to_permutation(lead)
        expansion[w] = coeff
        f = f - schubert(w) * coeff
    if f:
        raise NotSchubertSpanned("round cap exceeded during reduction")
    return expansion


# ---------------------------------------------------------------------------
# optional on-disk persistence of the memo table (used by the CLI)


def save_schubert_cache(directory: str) -> str:
    """Write the memo table under ``directory``; returns the file path."""
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, CACHE_FILENAME)
    payload = {
        "version": CACHE_FORMAT_VERSION,
        "entries": [
            [list(word), [[list(m), c] for m, c in poly.terms.items()]]
            for word, poly in _SCHUBERT_CACHE.items()
        ],
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(payload, handle)
    return path


def load_schubert_cache(directory: str) -> int:
    """Merge a previously saved memo table; returns entries loaded.

    Corrupt or version-mismatched files are ignored: correctness never
    depends on the cache being present.
    """
    path = os.path.join(directory, CACHE_FILENAME)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        if payload.get("version") != CACHE_FORMAT_VERSION:
            return 0
        count = 0
        for word, terms in payload["entries"]:
            poly = SparsePolynomial({tuple(m): c for m, c in terms})
            _SCHUBERT_CACHE[tuple(word)] = poly
            count += 1
        return count
    except (OSError, ValueError, KeyError, TypeError):
        return 0


def clear_schubert_cache() -> None:
    _SCHUBERT_CACHE.clear()
