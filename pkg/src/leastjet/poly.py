"""Exact multivariate polynomials over Gaussian rationals.

A Poly carries its variable names; polynomials over different variable
tuples never mix silently.  Coefficients are Scalars, zero coefficients are
never stored, and all listings follow the canonical grlex order.
"""

from __future__ import annotations

from .monomials import degree as mi_degree
from .monomials import grlex_key, unit
from .scalar import Scalar, as_scalar

# Dual/source variable naming: each source letter has a conventional dual
# (Greek) name; numbered variables keep their number (t2 -> tau2).
DUAL_LETTER = {
    "s": "sigma", "t": "tau", "x": "xi", "y": "eta", "z": "zeta",
    "w": "omega", "u": "upsilon", "v": "phi",
}


def dual_name(var):
    head = var.rstrip("0123456789")
    tail = var[len(head):]
    return DUAL_LETTER.get(head, "d" + head) + tail


def prime_name(var):
    """Shifted-coordinate display name (t -> t')."""
    return var + "'"


class Poly:
    """terms: dict multi-index tuple -> nonzero Scalar."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            for nu, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    if len(nu) != len(self.variables):
                        raise ValueError("multi-index arity mismatch")
                    clean[tuple(nu)] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, value):
        return cls(variables, {tuple(0 for _ in variables): as_scalar(value)})

    @classmethod
    def monomial(cls, variables, nu, coeff=1):
        return cls(variables, {tuple(nu): as_scalar(coeff)})

    @classmethod
    def variable(cls, variables, i):
        return cls.monomial(variables, unit(len(variables), i))

    # -- queries ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mi_degree(nu) for nu in self.terms)

    def low_degree(self):
        if not self.terms:
            return -1
        return min(mi_degree(nu) for nu in self.terms)

    def is_homogeneous(self):
        degs = {mi_degree(nu) for nu in self.terms}
        return len(degs) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def coeff(self, nu):
        return self.terms.get(tuple(nu), Scalar(0))

    def homogeneous_part(self, k):
        return Poly(self.variables,
                    {nu: c for nu, c in self.terms.items()
                     if mi_degree(nu) == k})

    def homogeneous_parts(self):
        """dict degree -> homogeneous Poly, ascending."""
        split = {}
        for nu, c in self.terms.items():
            split.setdefault(mi_degree(nu), {})[nu] = c
        return {k: Poly(self.variables, t)
                for k, t in sorted(split.items())}

    def support(self):
        return sorted(self.terms, key=grlex_key)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for nu, c in other.terms.items():
            s = terms.get(nu, Scalar(0)) + c
            if s.is_zero():
                terms.pop(nu, None)
            else:
                terms[nu] = s
        return Poly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {nu: -c for nu, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def scale(self, scalar):
        scalar = as_scalar(scalar)
        if scalar.is_zero():
            return Poly.zero(self.variables)
        return Poly(self.variables,
                    {nu: c * scalar for nu, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        self._check(other)
        out = {}
        for nu, a in self.terms.items():
            for mu, b in other.terms.items():
                key = tuple(x + y for x, y in zip(nu, mu))
                s = out.get(key, Scalar(0)) + a * b
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return Poly(self.variables, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power of a Poly")
        out = Poly.constant(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self):
        return Poly(self.variables,
                    {nu: c.conj() for nu, c in self.terms.items()})

    def diff(self, i):
        """Exact formal partial derivative by the i-th variable (0-based)."""
        out = {}
        for nu, c in self.terms.items():
            if nu[i] > 0:
                key = nu[:i] + (nu[i] - 1,) + nu[i + 1:]
                out[key] = c * nu[i]
        return Poly(self.variables, out)

    # -- substitution -----------------------------------------------------

    def substitute(self, images):
        """Replace each variable by the given Poly (all over one target
        variable tuple); classic composition, exact."""
        if len(images) != len(self.variables):
            raise ValueError("need one image per variable")
        target = images[0].variables if images else self.variables
        out = Poly.zero(target)
        powers = [{0: Poly.constant(target, 1)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        for nu, c in self.terms.items():
            term = Poly.constant(target, c)
            for i, e in enumerate(nu):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def linear_substitute(self, matrix, new_variables=None):
        """p(v) -> p(M v): replace the variable vector by ``matrix`` times
        the (possibly renamed) new variable vector."""
        n = len(self.variables)
        new_vars = tuple(new_variables) if new_variables else self.variables
        images = []
        for i in range(n):
            row = {}
            for j in range(len(new_vars)):
                c = as_scalar(matrix[i][j])
                if not c.is_zero():
                    row[unit(len(new_vars), j)] = c
            images.append(Poly(new_vars, row))
        return self.substitute(images)

    def shift(self, offsets):
        """p(v) -> p(v + offsets) for a constant Scalar vector."""
        images = []
        for i, c in enumerate(offsets):
            img = Poly.variable(self.variables, i) + Poly.constant(
                self.variables, c)
            images.append(img)
        return self.substitute(images)

    def evaluate(self, point):
        out = Scalar(0)
        for nu, c in self.terms.items():
            v = c
            for x, e in zip(point, nu):
                x = as_scalar(x)
                for _ in range(e):
                    v = v * x
            out = out + v
        return out

    def rename(self, new_variables):
        return Poly(new_variables, self.terms)

    # -- comparison / display --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.variables == other.variables
                    and self.terms == other.terms)
        if isinstance(other, (int, Scalar)):
            other = Poly.constant(self.variables, other)
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for nu in self.support():
            c = self.terms[nu]
            factors = []
            for var, e in zip(self.variables, nu):
                if e == 1:
                    factors.append(var)
                elif e > 1:
                    factors.append(f"{var}^{e}")
            cs = str(c)
            needs_parens = ("+" in cs[1:]) or ("-" in cs[1:])
            if not factors:
                chunks.append(f"({cs})" if needs_parens else cs)
                continue
            mono = "*".join(factors)
            if cs == "1":
                chunks.append(mono)
            elif cs == "-1":
                chunks.append(f"-{mono}")
            elif needs_parens:
                chunks.append(f"({cs})*{mono}")
            else:
                chunks.append(f"{cs}*{mono}")
        out = chunks[0]
        for chunk in chunks[1:]:
            if chunk.startswith("-"):
                out += " - " + chunk[1:]
            else:
                out += " + " + chunk
        return out

    def __repr__(self):
        return f"Poly({self})"
