"""Least spaces by graded elimination.

The least space of a finite-dimensional function space Z at b is the span
of the least parts of its elements.  Row-reducing the coefficient matrix of
a basis of Z over grlex-ordered monomial columns makes every echelon row's
leading block its least part, and those least parts span: any combination's
least part is a combination of the least parts of the rows sharing its
lowest leading degree.  A final per-degree reduced echelon pass makes the
stored basis canonical, so least-space equality is structural equality.
"""

from __future__ import annotations

from math import inf as ORD_INF

from .errors import (DependentGenerators, SingularMatrix,
                     TruncationInsufficient)
from .linalg import determinant, rref
from .monomials import degree as mi_degree
from .monomials import grlex_key, monomials_of_degree
from .poly import Poly, dual_name
from .scalar import Scalar


class FunctionSpace:
    """A finite-dimensional space of germs at one base point, presented by
    independent generator jets (independence is verified exactly on
    construction, up to the common truncation order)."""

    def __init__(self, generators, labels=None):
        if not generators:
            raise ValueError("a FunctionSpace needs at least one generator")
        first = generators[0]
        for g in generators:
            if g.variables != first.variables or g.base != first.base:
                raise ValueError("generators live at different base points")
        self.generators = list(generators)
        self.labels = list(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != len(generators):
            raise ValueError("one label per generator")
        self.variables = first.variables
        self.base = first.base
        self.dimension = len(generators)
        self._verify_independent()

    def _verify_independent(self):
        columns = sorted({nu for g in self.generators for nu in g.terms},
                         key=grlex_key)
        col_index = {nu: i for i, nu in enumerate(columns)}
        rows = []
        for g in self.generators:
            row = [Scalar(0)] * len(columns)
            for nu, c in g.terms.items():
                row[col_index[nu]] = c
            rows.append(row)
        r = len(rref(rows))
        if r < self.dimension:
            if all(g.exact for g in self.generators):
                raise DependentGenerators(
                    "generators are linearly dependent",
                    rank=r, count=self.dimension)
            raise TruncationInsufficient(
                "generators are dependent up to the stored truncation order",
                rank=r, count=self.dimension)

    def effective_order(self):
        return min((g.effective_order() for g in self.generators),
                   default=ORD_INF)

    def coefficient_rows(self):
        """(columns in grlex order, coefficient matrix rows)."""
        columns = sorted({nu for g in self.generators for nu in g.terms},
                         key=grlex_key)
        col_index = {nu: i for i, nu in enumerate(columns)}
        rows = []
        for g in self.generators:
            row = [Scalar(0)] * len(columns)
            for nu, c in g.terms.items():
                row[col_index[nu]] = c
            rows.append(row)
        return columns, rows


class LeastSpace:
    """Canonical graded basis of a least space.

    ``basis`` is flat, ascending by (degree, leading monomial); each degree
    block is in reduced row echelon form over grlex-ordered monomials, so
    two least spaces are equal iff their bases match term by term.
    ``verified_order`` is None when the input was exact, else the order up
    to which the result is certified.
    """

    def __init__(self, dual_variables, blocks, verified_order=None):
        self.dual_variables = tuple(dual_variables)
        self.blocks = dict(sorted(blocks.items()))
        self.basis = [p for _, ps in sorted(blocks.items()) for p in ps]
        self.dimension = len(self.basis)
        self.verified_order = verified_order

    @classmethod
    def from_polys(cls, dual_variables, polys, verified_order=None):
        """Canonicalize an arbitrary homogeneous spanning family."""
        dual_variables = tuple(dual_variables)
        by_degree = {}
        for p in polys:
            if p.is_zero():
                continue
            if not p.is_homogeneous():
                raise ValueError("least-space members must be homogeneous")
            by_degree.setdefault(p.degree(), []).append(p)
        blocks = {}
        for k, ps in sorted(by_degree.items()):
            monos = list(monomials_of_degree(len(dual_variables), k))
            col = {nu: i for i, nu in enumerate(monos)}
            rows = []
            for p in ps:
                row = [Scalar(0)] * len(monos)
                for nu, c in p.terms.items():
                    row[col[nu]] = c
                rows.append(row)
            rref(rows)
            out = []
            for row in rows:
                terms = {monos[i]: c for i, c in enumerate(row)
                         if not c.is_zero()}
                if terms:
                    out.append(Poly(dual_variables, terms))
            if out:
                blocks[k] = out
        return cls(dual_variables, blocks, verified_order)

    # -- queries -----------------------------------------------------------

    def max_degree(self):
        """theta: the largest degree carried by the space (0 if empty)."""
        return max(self.blocks) if self.blocks else 0

    def degree_block(self, k):
        return self.blocks.get(k, [])

    def block_dimension(self, k):
        return len(self.blocks.get(k, []))

    def full_through_degree(self):
        """lambda: the largest k such that every monomial of each degree
        <= k is present."""
        from .monomials import count_of_degree
        n = len(self.dual_variables)
        k = -1
        while self.block_dimension(k + 1) == count_of_degree(n, k + 1):
            k += 1
        return k

    def is_monomial(self):
        return all(p.is_monomial() for p in self.basis)

    def staircase(self):
        """The exponent set, when the basis is monomial."""
        if not self.is_monomial():
            raise ValueError("least space is not spanned by monomials")
        return sorted((next(iter(p.terms)) for p in self.basis),
                      key=grlex_key)

    def contains_homogeneous(self, p):
        if p.is_zero():
            return True
        k = p.degree()
        block = self.blocks.get(k)
        if not block:
            return False
        monos = list(monomials_of_degree(len(self.dual_variables), k))
        col = {nu: i for i, nu in enumerate(monos)}
        rows = []
        for q in block:
            row = [Scalar(0)] * len(monos)
            for nu, c in q.terms.items():
                row[col[nu]] = c
            rows.append(row)
        cand = [Scalar(0)] * len(monos)
        for nu, c in p.terms.items():
            cand[col[nu]] = c
        rows.append(cand)
        return len(rref(rows)) == len(block)

    def contains(self, p):
        """Membership of an arbitrary polynomial: every homogeneous part
        must lie in its degree block (the basis is graded)."""
        return all(self.contains_homogeneous(part)
                   for part in p.homogeneous_parts().values())

    def __eq__(self, other):
        if not isinstance(other, LeastSpace):
            return NotImplemented
        return (self.dual_variables == other.dual_variables
                and self.blocks == other.blocks)

    def __str__(self):
        return "span(" + ", ".join(str(p) for p in self.basis) + ")"

    def __repr__(self):
        return f"LeastSpace({self})"


def compute_least_space(space):
    """Graded elimination realizing Span(f_b-least-part : f in Z)."""
    columns, rows = space.coefficient_rows()
    rref(rows)
    valid = space.effective_order()
    least_polys = []
    duals = tuple(dual_name(v) for v in space.variables)
    for row in rows:
        entries = [(columns[i], c) for i, c in enumerate(row)
                   if not c.is_zero()]
        if not entries:
            if all(g.exact for g in space.generators):
                raise DependentGenerators(
                    "generators turned out dependent during elimination")
            raise TruncationInsufficient(
                "a row vanished through its truncation order during "
                "elimination; its least part may live beyond it")
        lead_degree = min(mi_degree(nu) for nu, _ in entries)
        if lead_degree > valid:
            raise TruncationInsufficient(
                "an eliminated row leads beyond the verified order",
                lead_degree=lead_degree, verified=valid)
        terms = {nu: c for nu, c in entries if mi_degree(nu) == lead_degree}
        least_polys.append(Poly(duals, terms))
    verified = None if valid is ORD_INF else valid
    return LeastSpace.from_polys(duals, least_polys, verified)


def is_d_invariant(space):
    """Closure under all partial derivatives; on failure returns the
    escaping (basis element, variable index, derivative)."""
    for p in space.basis:
        for i in range(len(space.dual_variables)):
            dp = p.diff(i)
            if dp.is_zero():
                continue
            if not space.contains_homogeneous(dp):
                return False, (p, i, dp)
    return True, None


def apply_linear_substitution(space, matrix, new_dual_variables=None):
    """Transport a least space through an invertible linear change: each
    basis element p(tau) becomes p(J sigma), then re-canonicalize."""
    if determinant(matrix).is_zero():
        raise SingularMatrix("substitution matrix is singular")
    new_vars = (tuple(new_dual_variables) if new_dual_variables
                else space.dual_variables)
    images = [p.linear_substitute(matrix, new_vars) for p in space.basis]
    return LeastSpace.from_polys(new_vars, images, space.verified_order)
