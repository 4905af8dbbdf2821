"""The apolarity pairing, Taylor projectors and annihilator bases.

The pairing S(p, f) = sum nu! a_nu conj(b_nu) couples dual polynomials to
power series; it is linear in p and conjugate-linear in f.  Monomials tau^nu
act as the nu-th derivative evaluation at the base point, which is why the
projector below generalizes Taylor truncation.
"""

from __future__ import annotations

from math import inf as ORD_INF

from .errors import SingularMatrix, TruncationInsufficient
from .least import LeastSpace, compute_least_space
from .linalg import inverse, kernel_basis, mat_vec, rref
from .monomials import mfactorial, monomials_of_degree
from .poly import Poly, prime_name
from .scalar import Scalar


def dual_pair(p, f):
    """S(p, f) over the common support; conjugation on the jet side."""
    if len(p.variables) != len(f.variables):
        raise ValueError("pairing arity mismatch")
    if p.degree() > f.effective_order():
        raise TruncationInsufficient(
            "dual polynomial reaches beyond the jet's verified order",
            degree=p.degree(), order=f.order)
    out = Scalar(0)
    for nu, a in p.terms.items():
        b = f.terms.get(nu)
        if b is not None:
            out = out + a * b.conj() * mfactorial(nu)
    return out


def jet_of_shifted_poly(variables, base, poly, exact=True):
    """Wrap a polynomial in the shifted coordinates t' = t - b as a Jet."""
    from .jets import Jet
    return Jet(variables, base, 0, poly.terms, exact)


class Projector:
    """The least-interpolation retraction onto a function space.

    Holds the space Z, its least space, and the Gram matrix
    G[i][j] = S(q_i, g_j), which the de Boor-Ron non-degeneracy theorem
    makes invertible; that is asserted at construction.
    """

    def __init__(self, space, least=None):
        self.space = space
        self.least = least if least is not None else compute_least_space(
            space)
        if self.least.dimension != space.dimension:
            raise TruncationInsufficient(
                "least space dimension disagrees with the function space")
        self.gram = [[dual_pair(q, g) for g in space.generators]
                     for q in self.least.basis]
        try:
            self._gram_inverse = inverse(self.gram)
        except SingularMatrix:
            raise TruncationInsufficient(
                "Gram matrix of the pairing is singular; increase the "
                "truncation order")

    def max_degree(self):
        return self.least.max_degree()

    def project(self, f):
        """Taylor-project f onto Z.

        Returns (coefficients over Z's generators, reconstituted jet).
        Defined by S(q_i, f) = S(q_i, sum_j c_j g_j) for all i; since the
        pairing conjugates its second slot this reads G conj(c) = r.
        """
        if f.effective_order() < self.max_degree():
            raise TruncationInsufficient(
                "jet is truncated below the least space's top degree",
                needed=self.max_degree(), available=f.order)
        r = [dual_pair(q, f) for q in self.least.basis]
        x = mat_vec(self._gram_inverse, r)
        coeffs = [c.conj() for c in x]
        out = None
        for c, g in zip(coeffs, self.space.generators):
            part = g.scale(c)
            out = part if out is None else out + part
        return coeffs, out


def taylor_project(projector, f):
    return projector.project(f)


class AnnihilatorBasis:
    """Per-degree exact kernels of the pairing against a least space, plus
    monomial ideal generators when the least space is a staircase."""

    def __init__(self, variables, degree_bound, per_degree,
                 monomial_generators=None):
        self.variables = tuple(variables)
        self.degree_bound = degree_bound
        self.per_degree = dict(sorted(per_degree.items()))
        self.monomial_generators = monomial_generators

    def __str__(self):
        if self.monomial_generators is not None:
            gens = ", ".join(str(p) for p in self.monomial_generators)
            return f"({gens})"
        lines = []
        for k, ps in self.per_degree.items():
            lines.append(f"deg {k}: " + ", ".join(str(p) for p in ps))
        return "; ".join(lines)


def annihilator_basis(least, degree_bound=None, variables=None):
    """Degreewise annihilator of a least space.

    For each k <= degree_bound, the exact kernel of h |-> S(., h) against
    the degree-k block, as polynomials in the shifted source coordinates.
    Because the pairing is diagonal in degree, these slices exhaust the
    annihilator of the whole space up to the bound.
    """
    if degree_bound is None:
        degree_bound = least.max_degree() + 1
    if degree_bound < least.max_degree():
        raise ValueError("degree bound below the least space's top degree")
    n = len(least.dual_variables)
    if variables is None:
        variables = _default_primed(least.dual_variables)
    per_degree = {}
    for k in range(degree_bound + 1):
        monos = list(monomials_of_degree(n, k))
        col = {nu: i for i, nu in enumerate(monos)}
        block = least.degree_block(k)
        rows = []
        for q in block:
            row = [Scalar(0)] * len(monos)
            for nu, c in q.terms.items():
                # S(q, h) = 0 conjugated: sum conj(nu! q_nu) h_nu = 0
                row[col[nu]] = (c * mfactorial(nu)).conj()
            rows.append(row)
        if rows:
            kernel = kernel_basis(rows, len(monos))
        else:
            kernel = [[Scalar(1) if i == j else Scalar(0)
                       for i in range(len(monos))] for j in range(len(monos))]
        mat = [list(v) for v in kernel]
        rref(mat)
        polys = []
        for v in mat:
            terms = {monos[i]: c for i, c in enumerate(v) if not c.is_zero()}
            if terms:
                polys.append(Poly(variables, terms))
        per_degree[k] = polys
    mono_gens = None
    if least.is_monomial():
        from .monomials import minimal_outside
        staircase = least.staircase()
        mono_gens = [Poly.monomial(variables, nu)
                     for nu in minimal_outside(staircase, n)]
    return AnnihilatorBasis(variables, degree_bound, per_degree, mono_gens)


# Dual names come from source names (t -> tau); the annihilator lives back
# on the source side, displayed in primed coordinates (tau -> t').
_REVERSE_DUAL = {
    "sigma": "s", "tau": "t", "xi": "x", "eta": "y", "zeta": "z",
    "omega": "w", "upsilon": "u", "phi": "v",
}


def _default_primed(dual_variables):
    out = []
    for v in dual_variables:
        head = v.rstrip("0123456789")
        tail = v[len(head):]
        if head in _REVERSE_DUAL:
            out.append(prime_name(_REVERSE_DUAL[head] + tail))
        elif head.startswith("d"):
            out.append(prime_name(head[1:] + tail))
        else:
            out.append(prime_name(v))
    return tuple(out)
