"""Multi-index utilities.

Exponent multi-indices are plain tuples of non-negative ints.  The canonical
monomial order everywhere is graded lexicographic: compare total degree
first, then the exponent tuples lexicographically.  All canonical bases,
elimination pivots and report listings use this order.
"""

from __future__ import annotations

from math import comb, factorial


def degree(nu):
    return sum(nu)


def mfactorial(nu):
    """nu! = prod(nu_i!)"""
    out = 1
    for e in nu:
        out *= factorial(e)
    return out


def leq(nu, mu):
    """Componentwise partial order nu <= mu."""
    return all(a <= b for a, b in zip(nu, mu))


def add(nu, mu):
    return tuple(a + b for a, b in zip(nu, mu))


def sub(nu, mu):
    return tuple(a - b for a, b in zip(nu, mu))


def unit(n, i):
    """The i-th coordinate multi-index e_i (0-based)."""
    return tuple(1 if j == i else 0 for j in range(n))


def grlex_key(nu):
    return (sum(nu), nu)


def monomials_of_degree(n, k):
    """All multi-indices of total degree exactly k in n variables, in
    canonical (lex-ascending) order."""
    if n == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in monomials_of_degree(n - 1, k - first):
            yield (first,) + rest


def monomials_up_to(n, k):
    """All multi-indices with total degree <= k, in grlex order."""
    for d in range(k + 1):
        yield from monomials_of_degree(n, d)


def count_of_degree(n, k):
    """Number of degree-k monomials in n variables."""
    return comb(n + k - 1, k)


def count_up_to(n, k):
    """Number of monomials of degree <= k in n variables."""
    return comb(n + k, k)


def binomial_product(mu, nu):
    """prod(C(mu_i, nu_i)); the coefficient linking normalized derivatives
    to Taylor coefficients."""
    out = 1
    for a, b in zip(mu, nu):
        out *= comb(a, b)
    return out


def is_downward_closed(indices):
    """True iff the set contains every multi-index below each member."""
    pool = set(indices)
    for nu in pool:
        for i, e in enumerate(nu):
            if e > 0:
                below = nu[:i] + (e - 1,) + nu[i + 1:]
                if below not in pool:
                    return False
    return True


def minimal_outside(indices, n):
    """Minimal (under componentwise <=) multi-indices not in the set.

    For a downward-closed staircase these generate the complement as a
    monomial ideal; they are pairwise indivisible by minimality.
    """
    pool = set(indices)
    if not pool:
        return [tuple(0 for _ in range(n))]
    # Candidates: every nu+e_i for nu in the staircase, plus the origin-axis
    # corners; a minimal outside element always sits directly above the
    # staircase in some direction (or is an axis power when the axis leaves).
    candidates = set()
    for nu in pool:
        for i in range(n):
            candidates.add(nu[:i] + (nu[i] + 1,) + nu[i + 1:])
    candidates -= pool
    minimal = []
    for cand in sorted(candidates, key=grlex_key):
        if all(not leq(other, cand) for other in minimal):
            minimal.append(cand)
    return minimal


