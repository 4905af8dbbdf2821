"""Young-like sets, generalized Wronskians, jet ranks and bundle points.

Jet coordinates are the normalized derivatives (1/nu!) d^nu, so the k-jet
matrix of a function space at b is literally the coefficient matrix of its
generators in the shifted coordinates, cut at degree k.  A point is a bundle
point of all the jet spaces when every one of those ranks attains its
generic maximum; by Walker's theorem the witnessing column sets can be taken
downward closed (Young-like).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import inf as ORD_INF

from .errors import CombinatorialBlowup, TruncationInsufficient
from .jets import Jet
from .linalg import rref
from .monomials import count_of_degree, degree as mi_degree
from .monomials import grlex_key, is_downward_closed, monomials_up_to, unit
from .scalar import Scalar


class YoungLikeSet:
    """A downward-closed finite set of exponent multi-indices."""

    __slots__ = ("indices",)

    def __init__(self, indices):
        self.indices = tuple(sorted(indices, key=grlex_key))
        if not is_downward_closed(self.indices):
            raise ValueError("set is not downward closed")

    @property
    def size(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __eq__(self, other):
        if isinstance(other, YoungLikeSet):
            return self.indices == other.indices
        return NotImplemented

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return f"YoungLikeSet({list(self.indices)})"


def enumerate_young_like(n, m, cap=20000):
    """All downward-closed m-subsets of N_0^n, each exactly once.

    Ideals are grown along their unique grlex-maximal-removal chains: every
    order ideal loses its grlex-largest element to a smaller ideal, so
    extending only by corners beyond the current grlex maximum enumerates
    each ideal once, in a deterministic order.
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    origin = tuple(0 for _ in range(n))
    out = []

    def addable(ideal):
        cands = set()
        for nu in ideal:
            for i in range(n):
                cand = nu[:i] + (nu[i] + 1,) + nu[i + 1:]
                if cand in ideal:
                    continue
                if all(cand[j] == 0 or cand[:j] + (cand[j] - 1,)
                       + cand[j + 1:] in ideal for j in range(n)):
                    cands.add(cand)
        return sorted(cands, key=grlex_key)

    def grow(ideal, last_key):
        if len(ideal) == m:
            out.append(YoungLikeSet(ideal))
            if len(out) > cap:
                raise CombinatorialBlowup(
                    "Young-like enumeration exceeded the configured cap",
                    n=n, m=m, cap=cap)
            return
        for cand in addable(ideal):
            if grlex_key(cand) > last_key:
                grow(ideal | {cand}, grlex_key(cand))

    grow({origin}, grlex_key(origin))
    return out


def generalized_wronskian(jets, young):
    """Determinant of the matrix of normalized derivatives u_nu(f_i) for
    nu in the Young-like set, expanded as a jet.

    Column scaling by 1/nu! multiplies Walker's determinant by a nonzero
    constant, so the vanishing locus is convention-independent.
    """
    cols = list(young)
    m = len(jets)
    if len(cols) != m:
        raise ValueError("Young-like set size must match the family size")
    first = jets[0]
    for f in jets:
        first._check(f)
    need = max(mi_degree(nu) for nu in cols)
    for f in jets:
        if f.effective_order() < need:
            raise TruncationInsufficient(
                "jet truncated below the highest derivative order",
                needed=need, available=f.order)
    entries = [[f.normalized_derivative(nu) for nu in cols] for f in jets]
    # Laplace expansion with a subset cache over used-column bitmasks.
    zero = Jet.zero(first.variables, first.base)
    minors = {0: Jet.constant(first.variables, first.base, 1)}
    for i in range(m):
        nxt = {}
        for mask, val in minors.items():
            if val.is_zero_through_truncation() and val.exact:
                continue
            seen = 0
            for j in range(m):
                bit = 1 << j
                if mask & bit:
                    seen += 1
                    continue
                term = val * entries[i][j]
                # picking column j after i rows adds (i - seen) inversions
                if (i - seen) % 2 == 1:
                    term = -term
                key = mask | bit
                nxt[key] = term if key not in nxt else nxt[key] + term
        minors = nxt or {0: zero}
    return minors.get((1 << m) - 1, zero)


class JetRankProfile:
    """Exact jet-evaluation ranks at a point, with generic ranks estimated
    from a seeded rational sample (exact generators only)."""

    def __init__(self, ranks, generic_ranks, seed, sample_points, proved):
        self.ranks = ranks
        self.generic_ranks = generic_ranks
        self.seed = seed
        self.sample_points = sample_points
        self.proved = proved

    def __repr__(self):
        return (f"JetRankProfile(ranks={self.ranks}, "
                f"generic={self.generic_ranks})")


def _coefficient_rows_upto(space, kmax, shift=None):
    """Rows of normalized-derivative values at the (possibly shifted) base,
    over grlex columns of degree <= kmax."""
    cols = list(monomials_up_to(len(space.variables), kmax))
    col_index = {nu: i for i, nu in enumerate(cols)}
    rows = []
    for g in space.generators:
        terms = g.terms
        if shift is not None:
            terms = g.to_poly(primed=False).shift(shift).terms
        row = [Scalar(0)] * len(cols)
        for nu, c in terms.items():
            if mi_degree(nu) <= kmax:
                row[col_index[nu]] = c
        rows.append(row)
    return cols, rows


def _pivot_profile(cols, rows, kmax):
    """(pivot multi-indices, ranks r_0..r_kmax) of one grlex RREF pass."""
    work = [list(r) for r in rows]
    pivots = rref(work)
    pivot_mis = [cols[c] for c in pivots]
    ranks = []
    for k in range(kmax + 1):
        ranks.append(sum(1 for nu in pivot_mis if mi_degree(nu) <= k))
    return pivot_mis, ranks


def sample_points(n, count, seed):
    rng = random.Random(seed)
    pts = []
    for _ in range(count):
        pts.append(tuple(
            Scalar(Fraction(rng.randint(-12, 12), rng.randint(1, 6)))
            for _ in range(n)))
    return pts


def jet_rank_profile(space, kmax, seed=0, samples=5):
    """dim R_k(b) for k = 0..kmax, plus sampled generic maxima."""
    if space.effective_order() < kmax:
        raise TruncationInsufficient(
            "generators truncated below the requested jet order",
            needed=kmax, available=space.effective_order())
    cols, rows = _coefficient_rows_upto(space, kmax)
    _, ranks = _pivot_profile(cols, rows, kmax)
    exact = all(g.exact for g in space.generators)
    pts = []
    generic = None
    if exact:
        generic = list(ranks)
        pts = sample_points(len(space.variables), samples, seed)
        for pt in pts:
            delta = tuple(p - b for p, b in zip(pt, space.base))
            _, r = _pivot_profile(
                *_coefficient_rows_upto(space, kmax, shift=delta), kmax)
            generic = [max(a, b) for a, b in zip(generic, r)]
    return JetRankProfile(ranks, generic, seed, pts, proved=exact)


class BundleCertificate:
    """On success carries the witnessing Young-like set; on failure the
    full rank profile against the generic one."""

    def __init__(self, young=None, profile=None, status="proved"):
        self.young = young
        self.profile = profile
        self.status = status

    def __repr__(self):
        if self.young is not None:
            return f"BundleCertificate(young={self.young!r})"
        return f"BundleCertificate(profile={self.profile!r})"


def is_bundle_point(space, seed=0, samples=5):
    """Whether the base point is a bundle point of all the jet spaces.

    Ranks at b are read from one grlex elimination over columns of degree
    <= m-1.  At a true bundle point the pivot set is downward closed (the
    least space is D-invariant, and derivatives shift grlex leading
    monomials coordinatewise), so it doubles as the Young-like witness
    whose Wronskian is nonzero at b; a non-Young-like pivot set therefore
    refutes bundleness outright.  Generic ranks come from the seeded
    sample, recorded in the certificate.
    """
    m = space.dimension
    kmax = m - 1
    if space.effective_order() < kmax:
        raise TruncationInsufficient(
            "generators truncated below jet order m-1",
            needed=kmax, available=space.effective_order())
    cols, rows = _coefficient_rows_upto(space, kmax)
    pivot_mis, ranks = _pivot_profile(cols, rows, kmax)
    profile = jet_rank_profile(space, kmax, seed=seed, samples=samples)
    if len(pivot_mis) < m or not is_downward_closed(pivot_mis):
        return False, BundleCertificate(profile=profile, status="proved")
    if profile.generic_ranks is None:
        # Inexact generators: compare against the a-priori caps only.
        caps = [min(m, count_of_degree_sum(len(space.variables), k))
                for k in range(kmax + 1)]
        if ranks == caps:
            return True, BundleCertificate(young=YoungLikeSet(pivot_mis))
        return False, BundleCertificate(
            profile=profile, status="verified-up-to-truncation")
    if ranks == profile.generic_ranks:
        return True, BundleCertificate(young=YoungLikeSet(pivot_mis))
    return False, BundleCertificate(profile=profile, status="sampled")


def count_of_degree_sum(n, k):
    """Number of monomials of degree <= k in n variables."""
    return sum(count_of_degree(n, j) for j in range(k + 1))
