"""Zero-estimate tables, transcendency-slope proxy and point classification.

theta(d) is the top degree of the least space of C[Phi]^d (the maximal
vanishing order of a nonzero degree-<=d polynomial pulled back to the germ);
lambda(d) the largest k with every degree-<=k monomial present.  The
transcendency index is a limsup and not desk-computable, so the report only
carries the raw theta table plus a through-origin log-log slope as a proxy,
flagged as approximate.
"""

from __future__ import annotations

import math
from math import comb

from .errors import ComputationError
from .least import compute_least_space, is_d_invariant
from .parametrization import polynomial_function_space
from .wronskian import is_bundle_point


class PointClassification:
    """bundle / D-invariant / Taylorian flags for one point and degree.

    ``taylorian`` is None for n >= 2 (not applicable: even bundle points of
    surfaces fail it); for curves the three flags provably agree, which is
    asserted at construction.
    """

    def __init__(self, n, degree, bundle, d_invariant, taylorian,
                 gap_witness, bundle_certificate, d_witness):
        self.n = n
        self.degree = degree
        self.bundle = bundle
        self.d_invariant = d_invariant
        self.taylorian = taylorian
        self.gap_witness = gap_witness
        self.bundle_certificate = bundle_certificate
        self.d_witness = d_witness
        if bundle and not d_invariant:
            raise ComputationError(
                "internal inconsistency: bundle point with a non-D-invariant "
                "least space")
        if n == 1 and not (bundle == d_invariant == taylorian):
            raise ComputationError(
                "internal inconsistency: the curve equivalences failed",
                bundle=bundle, d_invariant=d_invariant, taylorian=taylorian)


def classify_point(param, degree, order=None, seed=0):
    pfs = polynomial_function_space(param, degree, order)
    least = compute_least_space(pfs.space)
    d_inv, witness = is_d_invariant(least)
    bundle, certificate = is_bundle_point(pfs.space, seed=seed)
    taylorian = None
    gap_witness = None
    if param.n == 1:
        dim = least.dimension
        present = set(least.blocks)
        gap_free = present == set(range(dim))
        taylorian = gap_free
        if not gap_free:
            gap_witness = min(k for k in range(least.max_degree())
                              if k not in present)
    return PointClassification(param.n, degree, bundle, d_inv, taylorian,
                               gap_witness, certificate, witness)


class ZeroEstimateRow:
    def __init__(self, degree, dim, chi, theta, lam, lower, upper,
                 d_invariant, bounds_hold):
        self.degree = degree
        self.dim = dim
        self.chi = chi
        self.theta = theta
        self.lam = lam
        self.lower = lower
        self.upper = upper
        self.d_invariant = d_invariant
        self.bounds_hold = bounds_hold

    def as_dict(self):
        return {
            "degree": self.degree,
            "dim": self.dim,
            "chi": self.chi,
            "theta": self.theta,
            "lambda": self.lam,
            "lowerBound": self.lower,
            "upperBound": self.upper,
            "dInvariant": self.d_invariant,
            "boundsHold": self.bounds_hold,
        }


class ZeroEstimateReport:
    def __init__(self, rows, slope, linear_bound, seed, truncation, exact):
        self.rows = rows
        self.slope = slope
        self.slope_caveat = "desk-scale proxy for limsup"
        self.linear_bound = linear_bound
        self.seed = seed
        self.truncation = truncation
        self.exact = exact

    def theta_values(self):
        return [r.theta for r in self.rows]


def zero_estimate_table(param, d_max, order=None, seed=0,
                        check_stability=True):
    if d_max < 1:
        raise ValueError("need d_max >= 1")
    pfs = polynomial_function_space(param, d_max, order,
                                    check_stability=check_stability)
    n, m = param.n, param.m
    rows = []
    for e in range(d_max + 1):
        least = pfs.least_space(e)
        d_inv, _ = is_d_invariant(least)
        theta = least.max_degree()
        lam = least.full_through_degree()
        dim = pfs.dims[e]
        lower = comb(n + e, n) + theta - e
        upper = comb(m + e, m)
        bounds_hold = (lower <= dim <= upper) if d_inv else None
        rows.append(ZeroEstimateRow(e, dim, pfs.chi[e], theta, lam, lower,
                                    upper, d_inv, bounds_hold))
    slope = _loglog_slope(rows)
    linear_bound = _linear_bound_flag(param, rows)
    return ZeroEstimateReport(rows, slope, linear_bound, seed,
                              pfs.truncation, pfs.exact)


def _loglog_slope(rows):
    """Through-origin least squares of log theta(e) on log e, e >= 2.

    The proxied quantity log_e theta(e) has no intercept, so the fit is
    forced through the origin; this is the only float in the package and it
    is reported as approximate.
    """
    xs, ys = [], []
    for r in rows:
        if r.degree >= 2 and r.theta >= 1:
            xs.append(math.log(r.degree))
            ys.append(math.log(r.theta))
    if len(xs) < 2:
        return None
    num = sum(x * y for x, y in zip(xs, ys))
    den = sum(x * x for x in xs)
    return round(num / den, 6)


def _linear_bound_flag(param, rows):
    """Algebraicity heuristic: does theta(e) <= a e + b hold over the table
    for small integers a <= n * (max polynomial component degree)?

    Components that are not polynomials contribute degree 1, which makes
    genuinely transcendental germs (whose theta grows superlinearly) fail
    the small-coefficient fit on any nontrivial range.
    """
    comp_degree = 1
    if param.exact:
        jets = param.component_jets(1)
        comp_degree = max(
            (max(sum(nu) for nu in j.terms) if j.terms else 1 for j in jets),
            default=1)
    a_cap = max(param.n * comp_degree, 1)
    b_cap = max(param.n * comp_degree * comp_degree, 1)
    for a in range(1, a_cap + 1):
        for b in range(0, b_cap + 1):
            if all(r.theta <= a * r.degree + b for r in rows):
                return {"satisfied": True, "a": a, "b": b, "aCap": a_cap}
    return {"satisfied": False, "a": None, "b": None, "aCap": a_cap}
