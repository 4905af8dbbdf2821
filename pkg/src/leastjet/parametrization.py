"""Embedding germs, pullbacks, the adjoint push-forward and C[Phi]^d.

A Parametrization is m expression-tree components in n source variables
with a rational base point b; the image point a = Phi(b) and the exact
Jacobian rank check happen at construction.  Pullbacks recentre the target
polynomial at a and compose with the shifted component jets Phi - a, whose
vanishing orders keep truncated arithmetic honest.
"""

from __future__ import annotations

from math import inf as ORD_INF

from .errors import (NotAnImmersion, StabilityCheckFailed,
                     TruncationInsufficient)
from .expressions import max_builtin_hint, parse_component_tuple
from .jets import Jet, truncated_compose
from .least import FunctionSpace, LeastSpace, compute_least_space
from .linalg import Echelon, rank
from .monomials import degree as mi_degree
from .monomials import grlex_key, monomials_up_to, unit
from .pairing import dual_pair
from .poly import Poly, dual_name
from .scalar import Scalar, as_scalar

DEFAULT_SOURCE_NAMES = {1: ("t",), 2: ("s", "t")}
DEFAULT_TARGET_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z"),
                        4: ("x", "y", "z", "w")}


def default_source_names(n):
    return DEFAULT_SOURCE_NAMES.get(n, tuple(f"t{i+1}" for i in range(n)))


def default_target_names(m):
    return DEFAULT_TARGET_NAMES.get(m, tuple(f"x{i+1}" for i in range(m)))


class Parametrization:
    def __init__(self, components, base, variables=None,
                 target_variables=None):
        self.base = tuple(as_scalar(b) for b in base)
        self.n = len(self.base)
        self.m = len(components)
        self.components = list(components)
        self.variables = (tuple(variables) if variables
                          else default_source_names(self.n))
        if len(self.variables) != self.n:
            raise ValueError("variable list does not match the base point")
        self.target_variables = (tuple(target_variables) if target_variables
                                 else default_target_names(self.m))
        if len(self.target_variables) != self.m:
            raise ValueError("need one target variable per component")
        self.exact = all(c.is_polynomial() for c in self.components)
        self.builtin_hint = max(
            (max_builtin_hint(c) for c in self.components), default=0)
        self._jet_cache = {}
        jets = self.component_jets(1)
        self.image = tuple(j.value() for j in jets)
        jac = [[jets[j].coeff(unit(self.n, i)) for i in range(self.n)]
               for j in range(self.m)]
        self.jacobian = jac
        if rank(jac) < self.n:
            raise NotAnImmersion(
                "Jacobian rank at the base point is below the source "
                "dimension", rank=rank(jac), n=self.n)

    @classmethod
    def parse(cls, text, base, variables=None, target_variables=None):
        variables = (tuple(variables) if variables
                     else default_source_names(len(base)))
        components = parse_component_tuple(text, variables)
        return cls(components, base, variables, target_variables)

    def to_text(self):
        return "(" + ", ".join(c.to_text() for c in self.components) + ")"

    # -- jets ---------------------------------------------------------------

    def component_jets(self, order):
        """Expansions of the components at b, truncated at ``order`` (exact
        components stay exact)."""
        key = order if not self.exact else "exact"
        if key not in self._jet_cache:
            coords = [Jet.coordinate(self.variables, self.base, i)
                      for i in range(self.n)]
            eff = ORD_INF if self.exact else order
            self._jet_cache[key] = [c.evaluate(coords, eff)
                                    for c in self.components]
        return self._jet_cache[key]

    def shifted_component_jets(self, order):
        """Phi - a: the components recentred to vanish at b."""
        jets = self.component_jets(order)
        return [j - j.value() for j in jets]

    def default_truncation(self, d):
        """No truncation for polynomial components; otherwise twice the
        degree times the largest built-in expansion hint."""
        if self.exact:
            return ORD_INF
        return max(2 * d * self.builtin_hint, 2)

    def dual_target_variables(self):
        return tuple(dual_name(v) for v in self.target_variables)

    def dual_source_variables(self):
        return tuple(dual_name(v) for v in self.variables)

    def __repr__(self):
        return (f"Parametrization({self.to_text()} at "
                f"({', '.join(str(b) for b in self.base)}))")


def pullback_polynomial(param, F, order=None):
    """F(Phi) expanded at b: recentre F at a = Phi(b), then compose with
    the shifted components."""
    if order is None:
        order = param.default_truncation(max(F.degree(), 1))
    shifted_F = F.shift(param.image)
    comps = param.shifted_component_jets(order)
    return truncated_compose(shifted_F, comps, order)


def adjoint_pushforward(param, p, order=None):
    """The push-forward of a dual polynomial through the parametrisation.

    The image sum_mu c_mu xi^mu has c_mu = S(p, (Phi-a)^mu)/mu!; the sum is
    finite because ord((Phi-a)^mu) >= |mu| kills every |mu| > deg p.
    """
    from .monomials import mfactorial
    d = p.degree()
    if d < 0:
        return Poly.zero(param.dual_target_variables())
    if order is None:
        order = d if not param.exact else ORD_INF
    if order < d:
        raise TruncationInsufficient(
            "push-forward needs component jets through the polynomial's "
            "degree", needed=d, available=order)
    comps = param.shifted_component_jets(max(order, d) if order is not ORD_INF
                                         else order)
    out = {}
    powers = {(): None}
    for mu in monomials_up_to(param.m, d):
        if mi_degree(mu) == 0:
            jet_mu = Jet.constant(param.variables, param.base, 1)
        else:
            i = next(k for k, e in enumerate(mu) if e > 0)
            prev = mu[:i] + (mu[i] - 1,) + mu[i + 1:]
            jet_mu = (powers[prev] * comps[i]).truncate(
                d if order is ORD_INF else order)
        powers[mu] = jet_mu
        c = dual_pair(p, jet_mu)
        if not c.is_zero():
            out[mu] = c / mfactorial(mu)
    return Poly(param.dual_target_variables(), out)


class PolynomialFunctionSpace:
    """C[Phi]^d with its dimension ladder.

    ``space`` holds the independent monomial pullbacks (labels are the
    exponents alpha); dims[e] = dim C[Phi]^e and chi is its increment, the
    Hilbert function of the Zariski closure.
    """

    def __init__(self, param, degree, space, dims, truncation, exact):
        self.param = param
        self.degree = degree
        self.space = space
        self.dims = dims
        self.chi = [dims[0]] + [dims[e] - dims[e - 1]
                                for e in range(1, len(dims))]
        self.truncation = truncation
        self.exact = exact

    def dim(self, e=None):
        return self.dims[self.degree if e is None else e]

    def subspace(self, e):
        """Basis of C[Phi]^e: the kept pullbacks of degree <= e (grlex
        processing makes each prefix a greedy basis of its level)."""
        gens = [g for g, lab in zip(self.space.generators, self.space.labels)
                if mi_degree(lab) <= e]
        labs = [lab for lab in self.space.labels if mi_degree(lab) <= e]
        return FunctionSpace(gens, labels=labs)

    def least_space(self, e=None):
        if e is None or e == self.degree:
            return compute_least_space(self.space)
        return compute_least_space(self.subspace(e))


def polynomial_function_space(param, degree, order=None,
                              check_stability=True):
    """Graded elimination over the monomial pullbacks x^alpha, |alpha| <= d,
    producing an exact basis plus per-degree dimensions."""
    if order is None:
        order = param.default_truncation(degree)
    result = _build_pfs(param, degree, order)
    if check_stability and not param.exact and order is not ORD_INF:
        double = _build_pfs(param, degree, 2 * order)
        if double.dims != result.dims:
            raise StabilityCheckFailed(
                "dimension ladder changed when the truncation was doubled",
                dims=result.dims, redoubled=double.dims)
        for e in range(degree + 1):
            if (result.least_space(e).blocks.keys()
                    != double.least_space(e).blocks.keys()):
                raise StabilityCheckFailed(
                    "least-space degrees changed when the truncation was "
                    "doubled", level=e)
        return double
    return result


def _build_pfs(param, degree, order):
    kept = []
    labels = []
    dims = []
    # one fixed grlex column space bounds every pullback's support
    if param.exact:
        comp_degs = [max((mi_degree(nu) for nu in j.terms), default=0)
                     for j in param.component_jets(1)]
        bound = degree * max(comp_degs + [1])
    else:
        bound = order
    columns = list(monomials_up_to(param.n, bound))
    col_index = {nu: i for i, nu in enumerate(columns)}
    echelon = Echelon(len(columns))

    current_degree = 0
    for alpha in monomials_up_to(param.m, degree):
        while mi_degree(alpha) > current_degree:
            dims.append(len(kept))
            current_degree += 1
        F = Poly.monomial(param.target_variables, alpha)
        jet = pullback_polynomial(param, F, order)
        if jet.is_zero_through_truncation():
            if jet.exact:
                continue
            raise TruncationInsufficient(
                "a monomial pullback vanished through the truncation order",
                monomial=alpha, order=order)
        row = [Scalar(0)] * len(columns)
        for nu, c in jet.terms.items():
            row[col_index[nu]] = c
        if echelon.add(row):
            kept.append(jet)
            labels.append(alpha)
    while len(dims) <= degree:
        dims.append(len(kept))
    space = FunctionSpace(kept, labels=labels)
    return PolynomialFunctionSpace(param, degree, space, dims,
                                   None if order is ORD_INF else order,
                                   param.exact)


class BosCalviTangentSet:
    """Push-forwards of a least-space basis: higher-order tangents of the
    embedded germ, dual to the polynomial functions of degree <= d."""

    def __init__(self, degree, tangents, source_least):
        self.degree = degree
        self.tangents = list(tangents)
        self.source_least = source_least

    @property
    def cardinality(self):
        return len(self.tangents)

    def monomial_appears(self, exponent):
        """Whether xi^exponent shows up with a nonzero coefficient somewhere
        in the linear span (equivalently: in some spanning tangent)."""
        exponent = tuple(exponent)
        return any(not t.coeff(exponent).is_zero() for t in self.tangents)

    def spans_independently(self):
        columns = sorted({nu for t in self.tangents for nu in t.terms},
                         key=grlex_key)
        col = {nu: i for i, nu in enumerate(columns)}
        rows = []
        for t in self.tangents:
            row = [Scalar(0)] * len(columns)
            for nu, c in t.terms.items():
                row[col[nu]] = c
            rows.append(row)
        return rank(rows) == len(self.tangents)

    def __iter__(self):
        return iter(self.tangents)


def bos_calvi_tangents(param, degree, order=None):
    pfs = polynomial_function_space(param, degree, order)
    least = compute_least_space(pfs.space)
    push_order = (ORD_INF if param.exact
                  else max(least.max_degree(),
                           pfs.truncation or least.max_degree()))
    tangents = [adjoint_pushforward(param, p, push_order)
                for p in least.basis]
    out = BosCalviTangentSet(degree, tangents, least)
    if not out.spans_independently():
        raise TruncationInsufficient(
            "pushed-forward tangents came out dependent; raise the "
            "truncation order")
    return out
