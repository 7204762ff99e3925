"""Reduced zero-dimensional point schemes in P^3: Hilbert functions,
h-vectors, Gorenstein symmetry, Cayley-Bacharach tests and the degree-8
classifier (complete-intersection type vs twisted-cubic type)."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import ExactMatrix, Polynomial, binomial, monomial_basis


def normalize_point(coords):
    """Scale so the first nonzero coordinate is 1."""
    pt = tuple(Fraction(c) for c in coords)
    if len(pt) != 4:
        raise ValueError("points live in P^3: four coordinates required")
    lead = next((c for c in pt if c != 0), None)
    if lead is None:
        raise ValueError("(0,0,0,0) is not a projective point")
    return tuple(c / lead for c in pt)


@dataclass(frozen=True)
class PointScheme:
    points: tuple

    def __post_init__(self):
        pts = tuple(normalize_point(p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    @property
    def degree(self):
        return len(self.points)

    def without(self, k):
        return PointScheme(self.points[:k] + self.points[k + 1:])

    def apply_matrix(self, m):
        """Projective change of coordinates by an invertible 4x4 matrix."""
        moved = []
        for pt in self.points:
            moved.append(tuple(sum(row[j] * pt[j] for j in range(4)) for row in m))
        return PointScheme(tuple(moved))

    def to_json(self):
        return json.dumps(
            {"points": [[str(c) for c in pt] for pt in self.points]}, indent=2
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        return cls(tuple(tuple(Fraction(c) for c in pt) for pt in data["points"]))


def _monomial_value(exps, pt):
    v = Fraction(1)
    for c, e in zip(pt, exps):
        for _ in range(e):
            v *= c
    return v


def evaluation_matrix(scheme, t):
    """Rows indexed by degree-t monomials, columns by the points."""
    basis = monomial_basis(t)
    return ExactMatrix(
        [[_monomial_value(e, pt) for pt in scheme.points] for e in basis]
    )


def hilbert_function(scheme, t):
    """dim of the degree-t part of the coordinate ring of the scheme."""
    if t < 0:
        return 0
    if not scheme.points:
        return 0
    return evaluation_matrix(scheme, t).rank()


def ideal_dimension(scheme, t):
    """Number of independent degree-t forms vanishing on the scheme."""
    if t < 0:
        raise ValueError("degree must be >= 0")
    return binomial(t + 3, 3) - hilbert_function(scheme, t)


@dataclass(frozen=True)
class HilbertProfile:
    hf: tuple  # values for t = 0 .. socle_degree (hf stabilizes there)
    hvec: tuple  # first differences
    socle_degree: int

    def value(self, t):
        if t < 0:
            return 0
        return self.hf[t] if t < len(self.hf) else self.hf[-1]


def hilbert_profile(scheme):
    if not scheme.points:
        raise ValueError("profile of the empty scheme is undefined")
    deg = scheme.degree
    hf = [hilbert_function(scheme, 0)]
    t = 0
    while hf[-1] < deg:
        t += 1
        hf.append(hilbert_function(scheme, t))
    hvec = tuple(b - a for a, b in zip([0] + hf[:-1], hf))
    return HilbertProfile(tuple(hf), hvec, t)


def gorenstein_symmetry(profile, degree):
    """hf(t) + hf(sigma - 1 - t) = degree for all t (hvec palindromic)."""
    sigma = profile.socle_degree
    return all(
        profile.value(t) + profile.value(sigma - 1 - t) == degree
        for t in range(-1, sigma + 1)
    )


@dataclass
class CBResult:
    holds: bool
    twist: int
    offender: tuple = None  # point whose removal enlarges the linear system
    base_dimension: int = None

    def __bool__(self):
        return self.holds


def cayley_bacharach(scheme, m):
    """Leave-one-out test: removing any single point must not enlarge the
    space of degree-m forms through the scheme."""
    if m < 0:
        return CBResult(True, m, base_dimension=0)
    base = ideal_dimension(scheme, m)
    for k in range(scheme.degree):
        if ideal_dimension(scheme.without(k), m) != base:
            return CBResult(False, m, scheme.points[k], base)
    if not scheme.points:
        # the empty scheme has no length-(deg-1) subscheme except itself
        return CBResult(False, m, None, base)
    return CBResult(True, m, base_dimension=base)


@dataclass
class AgVerdict:
    is_ag: bool
    profile: HilbertProfile
    symmetry_ok: bool
    cb: CBResult

    def __bool__(self):
        return self.is_ag

    @property
    def failed_condition(self):
        if self.is_ag:
            return None
        return "hilbert-symmetry" if not self.symmetry_ok else "cayley-bacharach"


def ag_check(scheme):
    """Arithmetically Gorenstein iff the Hilbert function is symmetric
    around the socle degree and the scheme is CB in twist sigma - 1."""
    profile = hilbert_profile(scheme)
    symmetry = gorenstein_symmetry(profile, scheme.degree)
    cb = cayley_bacharach(scheme, profile.socle_degree - 1)
    return AgVerdict(symmetry and cb.holds, profile, symmetry, cb)


def _span_dimension(polys, t):
    """Dimension of the span of degree-t polynomials in the monomial basis."""
    basis = monomial_basis(t)
    rows = [[q.coefficient(e) for e in basis] for q in polys]
    if not rows:
        return 0
    return ExactMatrix(rows).rank()


def quadrics_through(scheme):
    """Basis of the degree-2 part of the ideal of the scheme."""
    kernel = evaluation_matrix(scheme, 2).transpose().kernel_basis()
    basis = monomial_basis(2)
    return [
        Polynomial({e: c for e, c in zip(basis, vec) if c}) for vec in kernel
    ]


def _quadric_ideal_quotient(scheme, quadrics, t):
    """Hilbert value at t of the quotient by the ideal the quadrics generate."""
    products = [
        Polynomial({e: 1}) * q for q in quadrics for e in monomial_basis(t - 2)
    ]
    return binomial(t + 3, 3) - _span_dimension(products, t)


@dataclass
class Degree8Verdict:
    kind: str  # plane-excluded | not-aG | n4-type | n6-type
    ag: AgVerdict = None
    quadric_quotient: tuple = None  # quotient Hilbert values at t = 3, 4, 5

    def __str__(self):
        return self.kind


def classify_degree8(scheme):
    """Dichotomy for degree-8 aG schemes: either the quadrics through the
    scheme cut it out (complete intersection, order-4 resolution) or they
    cut out a twisted cubic (order-6 resolution)."""
    if scheme.degree != 8:
        raise ValueError(f"classifier needs degree 8, got {scheme.degree}")
    if hilbert_function(scheme, 1) < 4:
        return Degree8Verdict("plane-excluded")
    ag = ag_check(scheme)
    if not ag:
        return Degree8Verdict("not-aG", ag)
    quadrics = quadrics_through(scheme)
    quotient = tuple(
        _quadric_ideal_quotient(scheme, quadrics, t) for t in (3, 4, 5)
    )
    stabilized = any(
        quotient[i] == quotient[i + 1] == 8 for i in range(len(quotient) - 1)
    )
    return Degree8Verdict("n4-type" if stabilized else "n6-type", ag, quotient)


def make_cube_points():
    """The eight points (a, b, c, 1) with a, b, c in {0, 1}: the complete
    intersection of the three split quadrics x_i * (x_i - x3)."""
    return PointScheme(
        tuple(
            (Fraction(a), Fraction(b), Fraction(c), Fraction(1))
            for a in (0, 1)
            for b in (0, 1)
            for c in (0, 1)
        )
    )


def make_twisted_cubic_points(params):
    """Points (1, t, t^2, t^3) on the twisted cubic at the given parameters."""
    ts = [Fraction(t) for t in params]
    if len(set(ts)) != len(ts):
        raise ValueError("twisted-cubic parameters must be pairwise distinct")
    return PointScheme(tuple((Fraction(1), t, t * t, t ** 3) for t in ts))


def make_random_points(seed, count):
    """Reproducible scheme of random points with small integer coordinates."""
    rng = random.Random(seed)
    seen, pts = set(), []
    while len(pts) < count:
        pt = normalize_point([rng.randint(-9, 9) for _ in range(3)] + [1])
        if pt not in seen:
            seen.add(pt)
            pts.append(pt)
    return PointScheme(tuple(pts))
