"""Quartic surfaces in P^3: pfaffian / determinantal representations and a
finite-field smoothness probe."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import FieldError, Polynomial, _is_prime
from .pfaffian import ShapeError, SkewPolyMatrix, determinant, pfaffian


def as_poly(x, p=None):
    return x if isinstance(x, Polynomial) else Polynomial.constant(x, p)


@dataclass(frozen=True)
class QuarticSurface:
    f: Polynomial

    def __post_init__(self):
        if self.f.p is not None:
            raise ValueError("quartic surfaces are defined over the rationals")
        if self.f.is_zero() or not self.f.is_homogeneous(4):
            raise ValueError("defining form must be a nonzero quartic")


_UPPER_SLOTS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def pfaffian_rep_from_quadrics(q1, q2, q3, q4, q5, q6):
    """4x4 skew matrix whose pfaffian is q1*q2 + q3*q4 + q5*q6."""
    quadrics = [q1, q2, q3, q4, q5, q6]
    for k, q in enumerate(quadrics, start=1):
        if not q.is_homogeneous(2):
            raise ValueError(f"q{k} must be homogeneous quadratic or zero, got {q}")
    # pf = m12*m34 - m13*m24 + m14*m23
    placed = [q1, q3, q5, q6, -q4, q2]
    upper = {slot: poly for slot, poly in zip(_UPPER_SLOTS, placed) if poly}
    return SkewPolyMatrix(4, upper, (0, 0, 0, 0))


@dataclass
class RepresentationCheck:
    matches: bool
    scale: Fraction = None
    reason: str = ""

    def __bool__(self):
        return self.matches


def verify_representation(m, surface, mode="pfaffian"):
    """Check pf(M) (or det(M)) = lambda * f for a nonzero rational lambda."""
    if mode == "pfaffian":
        if not isinstance(m, SkewPolyMatrix):
            raise ShapeError("pfaffian mode needs a skew-symmetric matrix")
        g = as_poly(pfaffian(m))
    elif mode == "determinant":
        g = as_poly(determinant(m))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    f = surface.f
    if g.is_zero():
        return RepresentationCheck(False, None, f"{mode} vanishes identically")
    if g.degree() != f.degree():
        return RepresentationCheck(
            False, None, f"degree mismatch: {mode} has degree {g.degree()}, f has 4"
        )
    anchor = next(iter(f.terms))
    lam = g.coefficient(anchor) / f.terms[anchor]
    if lam and g == f * lam:
        return RepresentationCheck(True, lam)
    return RepresentationCheck(False, None, f"{mode} is not proportional to f")


@dataclass
class PhiBlockResult:
    matrix: SkewPolyMatrix
    pf: Polynomial
    det_a: Polynomial
    sign: int = None  # pf = sign * det(A); None when degenerate
    degenerate: bool = False


def build_phi_n8(b, a):
    """Assemble the order-8 block matrix [[B, A], [-A^T, 0]].

    B is a 4x4 skew matrix of quadrics, A a 4x4 matrix of linear forms.
    The pfaffian equals det(A) up to a sign which is computed, not assumed.
    """
    if isinstance(b, SkewPolyMatrix):
        if b.n != 4:
            raise ShapeError("B must have order 4")
        b_upper = {ij: e for ij, e in b.upper.items()}
    else:
        b_upper = {ij: e for ij, e in b.items()}
    for (i, j), e in b_upper.items():
        if e and not e.is_homogeneous(2):
            raise ShapeError(f"B entry ({i + 1},{j + 1}) must be quadratic, got {e}")
    if len(a) != 4 or any(len(row) != 4 for row in a):
        raise ShapeError("A must be 4x4")
    for i, row in enumerate(a):
        for j, e in enumerate(row):
            if e and not e.is_homogeneous(1):
                raise ShapeError(f"A entry ({i + 1},{j + 1}) must be linear, got {e}")

    upper = dict(b_upper)
    for i in range(4):
        for j in range(4):
            if a[i][j]:
                upper[(i, 4 + j)] = a[i][j]
    phi = SkewPolyMatrix(8, upper, (0, 0, 0, 0, 1, 1, 1, 1))

    pf = as_poly(pfaffian(phi))
    det_a = as_poly(determinant([list(row) for row in a]))
    if det_a.is_zero():
        return PhiBlockResult(phi, pf, det_a, None, degenerate=True)
    anchor = next(iter(det_a.terms))
    lam = pf.coefficient(anchor) / det_a.terms[anchor]
    if lam not in (1, -1) or pf != det_a * lam:
        raise ShapeError("pfaffian of the block matrix is not +/- det(A)")
    return PhiBlockResult(phi, pf, det_a, int(lam))


@dataclass
class PrimeVerdict:
    prime: int
    smooth: bool
    witness: tuple = None  # projective point where f and all partials vanish


@dataclass
class SmoothnessCertificate:
    verdicts: list = field(default_factory=list)

    @property
    def all_smooth(self):
        return all(v.smooth for v in self.verdicts)

    def witnesses(self):
        return [(v.prime, v.witness) for v in self.verdicts if not v.smooth]


def _poly_mod_arrays(poly, p):
    exps = np.array(sorted(poly.terms), dtype=np.int64)
    coeffs = np.array(
        [
            (poly.terms[tuple(e)].numerator * pow(poly.terms[tuple(e)].denominator, -1, p)) % p
            for e in exps.tolist()
        ],
        dtype=np.int64,
    )
    return exps, coeffs


def _eval_mod(exps, coeffs, pows, p):
    n = pows[0][0].shape[0]
    total = np.zeros(n, dtype=np.int64)
    for e, c in zip(exps, coeffs):
        t = np.full(n, int(c), dtype=np.int64)
        for var in range(4):
            if e[var]:
                t = t * pows[var][e[var]] % p
        total = (total + t) % p
    return total


def _chart_points(p, k):
    """Coordinates of the chart of P^3(F_p) whose first nonzero slot is k."""
    free = 3 - k
    grids = np.meshgrid(*[np.arange(p, dtype=np.int64)] * free, indexing="ij") if free else []
    n = p ** free
    coords = [np.zeros(n, dtype=np.int64) for _ in range(4)]
    coords[k][:] = 1
    for t, g in enumerate(grids):
        coords[k + 1 + t] = g.reshape(-1)
    return coords


def smoothness_probe(surface, primes):
    """Probabilistic smoothness certificate via exhaustive enumeration of
    P^3(F_p) for each given prime of good reduction.

    A "smooth" verdict means: no point of the reduced surface has all four
    partial derivatives vanishing; it certifies smoothness mod p only.
    """
    f = surface.f
    cert = SmoothnessCertificate()
    for p in primes:
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if any(c.denominator % p == 0 for c in f.terms.values()):
            raise FieldError(f"bad prime {p}: a coefficient denominator vanishes")
        fe, fc = _poly_mod_arrays(f, p)
        parts = [_poly_mod_arrays(f.derivative(i), p) for i in range(4)]
        witness = None
        for k in range(4):
            coords = _chart_points(p, k)
            maxdeg = 4
            pows = []
            for var in range(4):
                col = coords[var]
                table = [np.ones_like(col)]
                for _ in range(maxdeg):
                    table.append(table[-1] * col % p)
                pows.append(table)
            on_surface = _eval_mod(fe, fc, pows, p) == 0
            if not on_surface.any():
                continue
            idx = np.nonzero(on_surface)[0]
            sing = np.ones(idx.shape, dtype=bool)
            for pe, pc in parts:
                if len(pe) == 0:
                    continue
                sub_pows = [[t[idx] for t in table] for table in pows]
                sing &= _eval_mod(pe, pc, sub_pows, p) == 0
                if not sing.any():
                    break
            if sing.any():
                at = idx[np.nonzero(sing)[0][0]]
                witness = tuple(int(coords[var][at]) for var in range(4))
                break
        cert.verdicts.append(PrimeVerdict(p, witness is None, witness))
    return cert


@dataclass
class IncidenceReport:
    all_on_surface: bool
    offenders: list  # points where f does not vanish

    def __bool__(self):
        return self.all_on_surface


def points_on_surface(scheme, surface):
    """Evaluate the defining quartic at every point of the scheme."""
    offenders = [pt for pt in scheme.points if surface.f.evaluate(pt) != 0]
    return IncidenceReport(not offenders, offenders)
