"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from leastjet.errors import NotAnImmersion
from leastjet.expressions import parse_expression
from leastjet.jets import Jet
from leastjet.least import FunctionSpace
from leastjet.monomials import is_downward_closed
from leastjet.parametrization import Parametrization
from leastjet.poly import Poly
from leastjet.scalar import Scalar


def S(x):
    return Scalar(Fraction(x)) if not isinstance(x, tuple) else Scalar(*x)


def poly(variables, terms):
    return Poly(variables, {tuple(k): Scalar(Fraction(v))
                            for k, v in terms.items()})


def jet_at(p, base):
    return Jet.from_poly(p, tuple(Scalar(Fraction(b)) for b in base))


def space_at(var_names, term_dicts, base, labels=None):
    gens = [jet_at(poly(var_names, tm), base) for tm in term_dicts]
    return FunctionSpace(gens, labels=labels)


EXA1_TERMS = [{(0, 0): 1}, {(1, 0): 1}, {(0, 1): 1},
              {(0, 2): 1, (1, 2): 1}, {(0, 3): 1}]


def exa1_space(base):
    """Z = span(1, s, t, t^2 + s t^2, t^3) at the given base point."""
    return space_at(("s", "t"), EXA1_TERMS, base,
                    labels=["1", "s", "t", "t2+st2", "t3"])


def parse_param(text, base, variables=None, target_variables=None):
    return Parametrization.parse(
        text, tuple(Scalar(Fraction(b)) for b in base), variables,
        target_variables)


# -- independent oracles ----------------------------------------------------


def brute_force_order_ideals(n, size, box):
    """Filter every size-subset of the box for downward closure."""
    universe = list(itertools.product(range(box + 1), repeat=n))
    out = set()
    for combo in itertools.combinations(universe, size):
        if is_downward_closed(combo):
            out.add(frozenset(combo))
    return out


def permutation_determinant(entries):
    """Leibniz-formula determinant over any commutative ring elements."""
    m = len(entries)
    total = None
    for perm in itertools.permutations(range(m)):
        sign = _perm_sign(perm)
        term = entries[0][perm[0]]
        for i in range(1, m):
            term = term * entries[i][perm[i]]
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def _perm_sign(perm):
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def sympy_curve_orders(component_exprs, base, degree, prec=60):
    """Least-space orders of C[Phi]^degree for a 1-variable polynomial
    parametrisation, via sympy row reduction: expand every monomial
    pullback at the base point, reduce the coefficient matrix, and read the
    lowest nonzero degree of each echelon row."""
    import sympy as sp
    t = sp.Symbol("t")
    comps = [sp.sympify(e) for e in component_exprs]
    shifted = [c.subs(t, base + t) for c in comps]
    values = [c.subs(t, base) for c in comps]
    rows = []
    for total in range(degree + 1):
        for alpha in itertools.product(range(degree + 1),
                                       repeat=len(comps)):
            if sum(alpha) != total:
                continue
            expr = sp.expand(sp.prod(
                [(sh - v) ** a if a else sp.Integer(1)
                 for sh, v, a in zip(shifted, values, alpha)]
                + [sp.prod([v ** a for v, a in zip(values, alpha)])
                   * 0 + 1]))
            expr = sp.expand(sp.prod(
                [sh ** a for sh, a in zip(shifted, alpha)]) if alpha
                else sp.Integer(1))
            rows.append([expr.coeff(t, k) for k in range(prec)])
    mat = sp.Matrix(rows)
    reduced, _ = mat.rref()
    orders = set()
    for i in range(reduced.rows):
        row = reduced.row(i)
        nz = [k for k in range(prec) if row[k] != 0]
        if nz:
            orders.add(min(nz))
    return orders


def random_scalar(rng, span=6, denom=4):
    return Scalar(Fraction(rng.randint(-span, span),
                           rng.randint(1, denom)))


def random_poly(rng, variables, max_degree, span=5):
    terms = {}
    n = len(variables)
    for nu in itertools.product(range(max_degree + 1), repeat=n):
        if sum(nu) > max_degree or rng.random() < 0.4:
            continue
        c = rng.randint(-span, span)
        if c:
            terms[nu] = Scalar(c)
    if not terms:
        terms[tuple(0 for _ in range(n))] = Scalar(1)
    return Poly(variables, terms)


def random_parametrization(rng, n_max=2, m_max=4, deg_max=3):
    """A random polynomial immersion with a rational base point."""
    while True:
        n = rng.randint(1, n_max)
        m = rng.randint(max(n, 2), m_max)
        variables = ("t",) if n == 1 else ("s", "t")
        base = tuple(Scalar(Fraction(rng.randint(-2, 2),
                                     rng.randint(1, 2)))
                     for _ in range(n))
        texts = []
        for j in range(m):
            p = random_poly(rng, variables, rng.randint(1, deg_max), span=3)
            texts.append(p)
        trees = [parse_expression(str(p).replace("^", "^"), variables)
                 if False else None for p in texts]
        try:
            comps = [_poly_tree(p, variables) for p in texts]
            return Parametrization(comps, base, variables)
        except NotAnImmersion:
            continue


def _poly_tree(p, variables):
    """Wrap an existing Poly as a constant-evaluating expression node."""
    from leastjet import expressions as ex

    class _PolyNode(ex.Node):
        def __init__(self, poly):
            self.poly = poly

        def _key(self):
            return self.poly

        def is_polynomial(self):
            return True

        def evaluate(self, var_jets, order):
            first = var_jets[0]
            out = Jet.from_poly(self.poly, first.base, first.variables)
            return out if order == float("inf") else out.truncate(order)

        def to_text(self):
            return str(self.poly)

    return _PolyNode(p)


@pytest.fixture
def rng():
    return random.Random(20240809)
