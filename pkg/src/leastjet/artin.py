"""Artinian quotient structure on a function space at D-invariant points.

At a D-invariant point the annihilator of the least space is an ideal, so
the Taylor projector becomes a factor homomorphism and Z inherits an
Artinian algebra structure: multiply representatives, truncate, project.
All algebra axioms are verified exhaustively at construction.
"""

from __future__ import annotations

from .errors import (ComputationError, DimensionMismatch, NotDInvariant,
                     SingularMatrix)
from .least import LeastSpace, is_d_invariant
from .linalg import inverse, rref
from .monomials import monomials_of_degree
from .pairing import annihilator_basis
from .poly import Poly
from .scalar import Scalar


class ArtinAlgebra:
    """Structure constants for Z at a D-invariant point.

    ``constants[i][j][k]`` is the k-th coefficient of the projected product
    g_i g_j.  ``unit`` is the coefficient vector of T(1); ``unit_index`` is
    set when that vector is a coordinate vector (the usual case: the
    constant 1 is itself a generator).
    """

    def __init__(self, projector, constants, unit, nilpotency_index,
                 annihilator):
        self.projector = projector
        self.space = projector.space
        self.least = projector.least
        self.dimension = projector.space.dimension
        self.basis_labels = (projector.space.labels
                             or list(range(self.dimension)))
        self.constants = constants
        self._sparse = None
        self.unit = unit
        self.unit_index = None
        if sum(0 if c.is_zero() else 1 for c in unit) == 1:
            idx = next(i for i, c in enumerate(unit) if not c.is_zero())
            if unit[idx] == 1:
                self.unit_index = idx
        self.nilpotency_index = nilpotency_index
        self.annihilator = annihilator

    def _sparse_constants(self):
        if self._sparse is None:
            self._sparse = [
                [[(k, c) for k, c in enumerate(row) if not c.is_zero()]
                 for row in plane]
                for plane in self.constants]
        return self._sparse

    def multiply(self, x, y):
        """Product of coefficient vectors via the structure constants."""
        d = self.dimension
        sparse = self._sparse_constants()
        out = [Scalar(0)] * d
        for i in range(d):
            if x[i].is_zero():
                continue
            plane = sparse[i]
            for j in range(d):
                if y[j].is_zero():
                    continue
                f = x[i] * y[j]
                for k, c in plane[j]:
                    out[k] = out[k] + f * c
        return out

    def evaluation(self, x):
        """Value at the base point of the represented class."""
        out = Scalar(0)
        for c, g in zip(x, self.space.generators):
            out = out + c * g.value()
        return out

    def maximal_ideal_basis(self):
        """Coefficient vectors spanning the classes vanishing at b."""
        row = [[g.value() for g in self.space.generators]]
        from .linalg import kernel_basis
        return kernel_basis(row, self.dimension)


def build_artin_algebra(projector):
    least = projector.least
    ok, witness = is_d_invariant(least)
    if not ok:
        p, i, dp = witness
        raise NotDInvariant(
            "least space is not D-invariant; the projector kernel is not an "
            "ideal", element=str(p), variable=i, derivative=str(dp))
    space = projector.space
    d = space.dimension
    theta = least.max_degree()
    constants = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            product = (space.generators[i] * space.generators[j]).truncate(
                theta)
            coeffs, _ = projector.project(product)
            constants[i][j] = coeffs
            constants[j][i] = coeffs
    unit, _ = projector.project(
        _constant_one(space))
    algebra = ArtinAlgebra(projector, constants, unit, 0,
                           annihilator_basis(least, theta + 1))
    _verify_axioms(algebra, theta)
    return algebra


def _constant_one(space):
    from .jets import Jet
    return Jet.constant(space.variables, space.base, 1)


def _verify_axioms(algebra, theta):
    d = algebra.dimension
    c = algebra.constants
    basis = [[Scalar(1) if k == i else Scalar(0) for k in range(d)]
             for i in range(d)]
    # unit law
    for j in range(d):
        if algebra.multiply(algebra.unit, basis[j]) != basis[j]:
            raise ComputationError(
                "unit law failed in the Artinian structure", index=j)
    # associativity on every basis triple
    for i in range(d):
        for j in range(d):
            ij = c[i][j]
            for k in range(d):
                left = algebra.multiply(ij, basis[k])
                right = algebra.multiply(basis[i], c[j][k])
                if left != right:
                    raise ComputationError(
                        "associativity failed on a basis triple",
                        triple=(i, j, k))
    # nilpotency of the maximal ideal: some power of the non-unit classes
    # must vanish; Ker T contains m^(theta+1) so theta+1 steps suffice.
    power = algebra.maximal_ideal_basis()
    ideal = [list(v) for v in power]
    index = 1
    while power:
        nxt = []
        for x in power:
            for y in ideal:
                prod = algebra.multiply(x, y)
                if any(not z.is_zero() for z in prod):
                    nxt.append(prod)
        if not nxt:
            break
        rows = [list(v) for v in nxt]
        rref(rows)
        power = [r for r in rows if any(not z.is_zero() for z in r)]
        index += 1
        if index > theta + 1:
            raise ComputationError(
                "maximal ideal power did not vanish within theta+1 steps",
                theta=theta)
    # smallest e with M^e = 0
    algebra.nilpotency_index = (index + 1) if ideal else 1


def transport_matrix(jacobian):
    """The substitution acting on annihilators when generators are
    precomposed with the linear change J: inverse conjugate transpose.

    If the least space moves by p -> p(J tau), the pairing identity
    S(p(J tau), f) = S(p, f(conj(J)^T t)) sends annihilators through the
    inverse of conj(J)^T.
    """
    n = len(jacobian)
    conj_t = [[jacobian[j][i].conj() for j in range(n)] for i in range(n)]
    return inverse(conj_t)


def compare_under_linear_change(algebra_a, algebra_b, jacobian):
    """Canonical-isomorphism check at the ideal level.

    ``jacobian`` is the matrix J with B's generators = A's generators
    precomposed with t' -> J t' (so B's least space is A's under the
    substitution by J).  True iff the induced substitution maps A's
    per-degree annihilator kernels exactly onto B's.
    """
    if algebra_a.dimension != algebra_b.dimension:
        raise DimensionMismatch(
            "algebras have different dimensions",
            a=algebra_a.dimension, b=algebra_b.dimension)
    try:
        matrix = transport_matrix(jacobian)
    except SingularMatrix:
        raise SingularMatrix("coordinate-change Jacobian is singular")
    ann_a = algebra_a.annihilator
    ann_b = algebra_b.annihilator
    bound = min(ann_a.degree_bound, ann_b.degree_bound)
    vars_b = ann_b.variables
    for k in range(bound + 1):
        moved = [h.linear_substitute(matrix, vars_b)
                 for h in ann_a.per_degree.get(k, [])]
        if not _same_span(moved, ann_b.per_degree.get(k, []), vars_b, k):
            return False
    return True


def _same_span(polys_a, polys_b, variables, degree):
    monos = list(monomials_of_degree(len(variables), degree))
    col = {nu: i for i, nu in enumerate(monos)}

    def rows_of(ps):
        out = []
        for p in ps:
            row = [Scalar(0)] * len(monos)
            for nu, c in p.terms.items():
                row[col[nu]] = c
            out.append(row)
        rref(out)
        return [r for r in out if any(not c.is_zero() for c in r)]

    return rows_of(polys_a) == rows_of(polys_b)
