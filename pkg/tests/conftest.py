"""Shared oracles for the test suite.

Everything here is deliberately independent of the library's own code paths:
brute-force inversion counting, exhaustive code inversion, and a Schubert
construction that lets the caller pick the descent order.  Expected values in
the tests were computed with these oracles and then frozen.
"""

import itertools

from schublr.perms import Permutation
from schublr.poly import SparsePolynomial


def brute_inversions(word):
    """Inversion count straight from the definition."""
    return sum(
        1
        for p, q in itertools.combinations(range(len(word)), 2)
        if word[p] > word[q]
    )


def brute_code(word):
    """Lehmer code straight from the definition."""
    return tuple(
        sum(1 for q in range(p + 1, len(word)) if word[q] < word[p])
        for p in range(len(word))
    )


def search_code_inverse(code, n):
    """Find the permutation of S_n with the given code by exhaustion."""
    target = tuple(code) + (0,) * (n - len(code))
    hits = [
        word
        for word in itertools.permutations(range(1, n + 1))
        if brute_code(word) == target
    ]
    assert len(hits) == 1, (code, hits)
    return hits[0]


def schubert_by_descent_order(w: Permutation, pick) -> SparsePolynomial:
    """Build a Schubert polynomial descending from the staircase.

    ``pick(ascents)`` chooses which ascent of the current permutation to
    raise next, so different strategies exercise different divided
    difference orders.
    """
    word = list(w.word)
    n = len(word)
    ops = []
    while True:
        ascents = [p for p in range(1, n) if word[p - 1] < word[p]]
        if not ascents:
            break
        i = pick(ascents)
        ops.append(i)
        word[i - 1], word[i] = word[i], word[i - 1]
    poly = SparsePolynomial.monomial(tuple(range(n - 1, 0, -1)))
    for i in reversed(ops):
        poly = poly.divided_difference(i)
    return poly


def random_polynomial(rng, max_vars=4, max_degree=6, max_terms=6):
    """Small random integer polynomial for operator property checks."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        width = rng.randint(1, max_vars)
        exps = [0] * width
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(width)] += 1
        coeff = rng.randint(-9, 9)
        if coeff:
            exps_t = tuple(exps)
            terms[exps_t] = terms.get(exps_t, 0) + coeff
    return SparsePolynomial(terms)
