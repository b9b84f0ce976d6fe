"""Sparse multivariate polynomials with exact integer coefficients.

Terms map exponent tuples (entry p = exponent of x_{p+1}, trailing zeros
stripped) to nonzero Python ints.  Python integers are arbitrary precision,
so arithmetic is exact by construction and no overflow detection is needed.

The term order used throughout is *rightmost-dominant*: m > m' iff at the
largest variable index where the exponents differ, m has the larger exponent.
Under this order the leading monomial of a Schubert polynomial is x^code(w),
which is what licenses the Schubert-basis reduction in :mod:`schublr.schubert`
(asserted by tests over all of S_5, not assumed).
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import ZeroPolynomial

Monomial = tuple[int, ...]


def strip_monomial(exps: Iterable[int]) -> Monomial:
    exps = tuple(exps)
    n = len(exps)
    while n > 0 and exps[n - 1] == 0:
        n -= 1
    return exps[:n]


def monomial_sort_key(mono: Monomial, width: int) -> Monomial:
    """Key realizing the rightmost-dominant order as tuple comparison.

    Pads to ``width`` and reverses, so lexicographic comparison of keys
    inspects the largest variable index first.
    """
    padded = mono + (0,) * (width - len(mono))
    return tuple(reversed(padded))


class SparsePolynomial:
    """Immutable-by-convention sparse polynomial over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable = ()):
        data: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            if coeff == 0:
                continue
            mono = strip_monomial(exps)
            new = data.get(mono, 0) + coeff
            if new:
                data[mono] = new
            else:
                data.pop(mono, None)
        self._terms = data

    # -- constructors

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "SparsePolynomial":
        return cls({(): c})

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls.constant(1)

    @classmethod
    def variable(cls, i: int) -> "SparsePolynomial":
        """The variable x_i (1-indexed)."""
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "SparsePolynomial":
        return cls({tuple(exps): coeff})

    # -- inspection

    @property
    def terms(self) -> dict[Monomial, int]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == SparsePolynomial.constant(other)._terms
        return NotImplemented

    def width(self) -> int:
        """Number of variables actually appearing."""
        return max((len(m) for m in self._terms), default=0)

    def coefficient(self, exps: Iterable[int]) -> int:
        return self._terms.get(strip_monomial(exps), 0)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in decreasing rightmost-dominant order."""
        w = self.width()
        return sorted(
            self._terms.items(),
            key=lambda item: monomial_sort_key(item[0], w),
            reverse=True,
        )

    # -- arithmetic

    def __add__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        data = dict(self._terms)
        for mono, coeff in other._terms.items():
            new = data.get(mono, 0) + coeff
            if new:
                data[mono] = new
            else:
                data.pop(mono, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = data
        return out

    def __neg__(self) -> "SparsePolynomial":
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            other = SparsePolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other) -> "SparsePolynomial":
        if isinstance(other, int):
            if other == 0:
                return SparsePolynomial.zero()
            out = SparsePolynomial.__new__(SparsePolynomial)
            out._terms = {m: c * other for m, c in self._terms.items()}
            return out
        data: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                long, short = (m1, m2) if len(m1) >= len(m2) else (m2, m1)
                mono = tuple(
                    e + (short[i] if i < len(short) else 0)
                    for i, e in enumerate(long)
                )
                new = data.get(mono, 0) + c1 * c2
                if new:
                    data[mono] = new
                else:
                    data.pop(mono, None)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = data
        return out

    __rmul__ = __mul__
    __radd__ = __add__

    # -- the operators the engine needs

    def swap_variables(self, i: int) -> "SparsePolynomial":
        """Apply the simple transposition s_i exchanging x_i and x_{i+1}."""
        data: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            exps = list(mono) + [0] * max(0, i + 1 - len(mono))
            exps[i - 1], exps[i] = exps[i], exps[i - 1]
            data[strip_monomial(exps)] = coeff
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = data
        return out

    def divided_difference(self, i: int) -> "SparsePolynomial":
        """(f - s_i f) / (x_i - x_{i+1}), computed term by term.

        For a term x_i^a x_{i+1}^b m with m free of x_i, x_{i+1} the quotient
        is the finite geometric sum m * sum_t x_i^{a-1-t} x_{i+1}^{b+t}
        (negated and mirrored when a < b), so the division is exact by
        construction and never performs polynomial division.
        """
        data: dict[Monomial, int] = {}

        def accumulate(mono, coeff):
            mono = strip_monomial(mono)
            new = data.get(mono, 0) + coeff
            if new:
                data[mono] = new
            else:
                data.pop(mono, None)

        for mono, coeff in self._terms.items():
            exps = list(mono) + [0] * max(0, i + 1 - len(mono))
            a, b = exps[i - 1], exps[i]
            if a == b:
                continue
            if a > b:
                for t in range(a - b):
                    exps[i - 1] = a - 1 - t
                    exps[i] = b + t
                    accumulate(tuple(exps), coeff)
            else:
                for t in range(b - a):
                    exps[i - 1] = a + t
                    exps[i] = b - 1 - t
                    accumulate(tuple(exps), -coeff)
        out = SparsePolynomial.__new__(SparsePolynomial)
        out._terms = data
        return out

    def leading_monomial(self) -> Monomial:
        """Maximal monomial in the rightmost-dominant order."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        w = self.width()
        return max(self._terms, key=lambda m: monomial_sort_key(m, w))

    # -- rendering

    def render(self) -> str:
        """Debug text, terms sorted by the term order: ``2*x1^2*x2 + ...``"""
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [
                f"x{p}" if e == 1 else f"x{p}^{e}"
                for p, e in enumerate(mono, start=1)
                if e
            ]
            if not factors:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{coeff}*" + "*".join(factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.render()})"


# Free-function aliases mirroring the operation names.


def add(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f + g


def multiply(f: SparsePolynomial, g: SparsePolynomial) -> SparsePolynomial:
    return f * g


def divided_difference(f: SparsePolynomial, i: int) -> SparsePolynomial:
    return f.divided_difference(i)


def leading_monomial(f: SparsePolynomial) -> Monomial:
    return f.leading_monomial()
