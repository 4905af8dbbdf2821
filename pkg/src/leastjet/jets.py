"""Truncated power series (jets) at a base point, and the least operator.

A Jet stores the expansion of a germ in the shifted coordinates t' = t - b
as a residue class mod m^(K+1).  ``exact=True`` means the stored terms ARE
the whole function (a polynomial): no truncation loss ever happened, so the
jet may be used at any order.  Inexact jets propagate a verified order
through arithmetic, exploiting vanishing orders so that products of
maximal-ideal elements keep more valid digits than min(K1, K2).
"""

from __future__ import annotations

from math import inf as ORD_INF

from .errors import TruncationAmbiguous, TruncationInsufficient
from .monomials import add as mi_add
from .monomials import binomial_product, degree as mi_degree
from .monomials import grlex_key, sub as mi_sub
from .poly import Poly, dual_name, prime_name
from .scalar import Scalar, as_scalar


class Jet:
    __slots__ = ("variables", "base", "order", "terms", "exact")

    def __init__(self, variables, base, order, terms, exact):
        self.variables = tuple(variables)
        self.base = tuple(as_scalar(b) for b in base)
        if len(self.base) != len(self.variables):
            raise ValueError("base point arity mismatch")
        clean = {}
        max_deg = 0
        for nu, c in (terms or {}).items():
            c = as_scalar(c)
            if c.is_zero():
                continue
            nu = tuple(nu)
            d = mi_degree(nu)
            if not exact and d > order:
                raise ValueError("stored term beyond truncation order")
            max_deg = max(max_deg, d)
            clean[nu] = c
        self.terms = clean
        self.exact = bool(exact)
        self.order = max(max_deg, 0) if exact else int(order)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_poly(cls, p, base, variables=None):
        """Exact jet of the polynomial p at ``base`` (re-expansion)."""
        variables = tuple(variables) if variables else p.variables
        shifted = p.shift(base)
        return cls(variables, base, 0, shifted.terms, exact=True)

    @classmethod
    def zero(cls, variables, base, order=0, exact=True):
        return cls(variables, base, order, {}, exact)

    @classmethod
    def constant(cls, variables, base, value):
        zero_mi = tuple(0 for _ in variables)
        return cls(variables, base, 0, {zero_mi: value}, exact=True)

    @classmethod
    def coordinate(cls, variables, base, i):
        """The exact jet of the i-th coordinate function t_i = b_i + t'_i."""
        n = len(variables)
        zero_mi = tuple(0 for _ in range(n))
        e_i = tuple(1 if j == i else 0 for j in range(n))
        return cls(variables, base, 0, {zero_mi: base[i], e_i: 1}, exact=True)

    # -- bookkeeping ------------------------------------------------------

    def effective_order(self):
        return ORD_INF if self.exact else self.order

    def order_lower_bound(self):
        """A degree below which the true germ certainly has no term."""
        if self.terms:
            return min(mi_degree(nu) for nu in self.terms)
        return ORD_INF if self.exact else self.order + 1

    def is_zero_through_truncation(self):
        return not self.terms

    def value(self):
        """The value at the base point (constant term)."""
        zero_mi = tuple(0 for _ in self.variables)
        return self.terms.get(zero_mi, Scalar(0))

    def coeff(self, nu):
        return self.terms.get(tuple(nu), Scalar(0))

    def _check(self, other):
        if self.variables != other.variables or self.base != other.base:
            raise ValueError("jets live at different base points")

    def truncate(self, new_order):
        """Residue class mod m^(new_order+1); exactness survives only if no
        term is dropped."""
        if self.exact and self.order <= new_order:
            return self
        kept = {nu: c for nu, c in self.terms.items()
                if mi_degree(nu) <= new_order}
        if self.exact:
            return Jet(self.variables, self.base, new_order, kept,
                       exact=(len(kept) == len(self.terms)))
        return Jet(self.variables, self.base, min(self.order, new_order),
                   kept, exact=False)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Jet.constant(self.variables, self.base, other)
        self._check(other)
        if self.exact and other.exact:
            order, exact = 0, True
        else:
            order = min(self.effective_order(), other.effective_order())
            exact = False
        terms = dict(self.terms)
        for nu, c in other.terms.items():
            s = terms.get(nu, Scalar(0)) + c
            if s.is_zero():
                terms.pop(nu, None)
            else:
                terms[nu] = s
        if not exact:
            terms = {nu: c for nu, c in terms.items()
                     if mi_degree(nu) <= order}
        return Jet(self.variables, self.base, order, terms, exact)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.variables, self.base, self.order,
                   {nu: -c for nu, c in self.terms.items()}, self.exact)

    def __sub__(self, other):
        if isinstance(other, (int, Scalar)):
            other = Jet.constant(self.variables, self.base, other)
        return self + (-other)

    def scale(self, scalar):
        scalar = as_scalar(scalar)
        if scalar.is_zero():
            return Jet(self.variables, self.base, self.order, {}, self.exact)
        return Jet(self.variables, self.base, self.order,
                   {nu: c * scalar for nu, c in self.terms.items()},
                   self.exact)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        self._check(other)
        if self.exact and other.exact:
            order, exact = ORD_INF, True
        else:
            # fg - FG = F*e_g + G*e_f + e_f*e_g with e_* in m^(K+1):
            # each cross term only pollutes degrees above K + ord(partner).
            order = ORD_INF
            if not self.exact:
                order = min(order, self.order + other.order_lower_bound())
            if not other.exact:
                order = min(order, other.order + self.order_lower_bound())
            exact = False
        out = {}
        for nu, a in self.terms.items():
            for mu, b in other.terms.items():
                key = mi_add(nu, mu)
                if mi_degree(key) > order:
                    continue
                s = out.get(key, Scalar(0)) + a * b
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        if exact:
            return Jet(self.variables, self.base, 0, out, True)
        if order is ORD_INF:  # exact zero factor against inexact partner
            return Jet(self.variables, self.base, 0, {}, True)
        return Jet(self.variables, self.base, order, out, False)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative jet power")
        out = Jet.constant(self.variables, self.base, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def conj(self):
        return Jet(self.variables, self.base, self.order,
                   {nu: c.conj() for nu, c in self.terms.items()},
                   self.exact)

    def diff(self, i):
        """Formal partial derivative by t_i."""
        out = {}
        for nu, c in self.terms.items():
            if nu[i] > 0:
                key = nu[:i] + (nu[i] - 1,) + nu[i + 1:]
                out[key] = c * nu[i]
        order = self.order if self.exact else max(self.order - 1, 0)
        return Jet(self.variables, self.base, order, out, self.exact)

    def normalized_derivative(self, nu):
        """(1/nu!) d^nu f as a jet: the nu-th jet-bundle fibre coordinate."""
        out = {}
        for mu, c in self.terms.items():
            if all(a >= b for a, b in zip(mu, nu)):
                out[mi_sub(mu, nu)] = c * binomial_product(mu, nu)
        order = self.order if self.exact else max(
            self.order - mi_degree(nu), 0)
        return Jet(self.variables, self.base, order, out, self.exact)

    # -- the least operator ------------------------------------------------

    def order_of(self):
        """Vanishing order at the base point; ORD_INF for the exact zero."""
        if self.terms:
            return min(mi_degree(nu) for nu in self.terms)
        if self.exact:
            return ORD_INF
        raise TruncationAmbiguous(
            "jet is zero through its truncation order but not exact",
            order=self.order)

    def least_part(self):
        """(lowest nonzero homogeneous part as a Poly in dual variables,
        vanishing order); (0, ORD_INF) for the exact zero germ."""
        duals = tuple(dual_name(v) for v in self.variables)
        if not self.terms:
            if self.exact:
                return Poly.zero(duals), ORD_INF
            raise TruncationAmbiguous(
                "jet is zero through its truncation order but not exact",
                order=self.order)
        k = self.order_of()
        terms = {nu: c for nu, c in self.terms.items() if mi_degree(nu) == k}
        return Poly(duals, terms), k

    def to_poly(self, primed=True):
        """The stored terms as a Poly in the shifted coordinates."""
        names = tuple(prime_name(v) if primed else v for v in self.variables)
        return Poly(names, self.terms)

    # -- display -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return (self.variables == other.variables and self.base == other.base
                and self.terms == other.terms and self.exact == other.exact
                and (self.exact or self.order == other.order))

    def __str__(self):
        body = str(self.to_poly())
        tag = "exact" if self.exact else f"order<={self.order}"
        return f"{body} ({tag})"

    def __repr__(self):
        return f"Jet({self})"


def least_part(f):
    """Module-level alias for the least operator."""
    return f.least_part()


def order_of(f):
    return f.order_of()


def truncated_compose(F, components, K):
    """Taylor expansion of F(components) mod m^(K+1).

    ``F`` is a Poly in m variables; ``components`` are m jets over a common
    base whose constant terms vanish (the caller recentres F first).  Exact
    flag survives iff every input is exact and nothing was dropped at K.
    """
    if len(components) != len(F.variables):
        raise ValueError("component count does not match F's arity")
    if not components:
        raise ValueError("empty composition")
    first = components[0]
    for g in components:
        first._check(g)
        if g.effective_order() < K:
            raise TruncationInsufficient(
                "component jet is truncated below the requested order",
                requested=K, available=g.order)
        if not g.value().is_zero():
            raise ValueError(
                "component does not vanish at the base point; recentre first")
    out = Jet.zero(first.variables, first.base)
    caches = [{} for _ in components]

    def power(i, e):
        if e == 0:
            return Jet.constant(first.variables, first.base, 1)
        cache = caches[i]
        if e not in cache:
            cache[e] = (power(i, e - 1) * components[i]).truncate(K)
        return cache[e]

    for nu, c in sorted(F.terms.items(), key=lambda kv: grlex_key(kv[0])):
        term = Jet.constant(first.variables, first.base, c)
        for i, e in enumerate(nu):
            if e:
                term = (term * power(i, e)).truncate(K)
        out = out + term
    return out.truncate(K)
