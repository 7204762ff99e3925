"""Picard-lattice arithmetic on a quartic K3 surface: intersection numbers,
Riemann-Roch, the aCM line-bundle case table, decomposable-bundle tags,
slope / Gieseker stability verdicts and the S-equivalence boundary pairing.

Everything here is integer / rational arithmetic on lattice data; the
cohomological hypotheses that are not lattice-computable enter as explicit
caller-supplied flags and the operations refuse to run without them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


class LatticeError(ValueError):
    pass


class FlagError(ValueError):
    """A required cohomological hypothesis flag was not supplied."""


@dataclass(frozen=True)
class PicardLattice:
    gram: tuple  # rho x rho symmetric integer matrix
    h: tuple  # hyperplane class, h.h = 4

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        h = tuple(int(x) for x in self.h)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "h", h)
        rho = len(gram)
        if rho < 1 or any(len(row) != rho for row in gram):
            raise LatticeError("Gram matrix must be square of rank >= 1")
        if len(h) != rho:
            raise LatticeError("hyperplane class length must match the rank")
        for i in range(rho):
            for j in range(rho):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")
            if gram[i][i] % 2:
                raise LatticeError(
                    "K3 parity fails: basis self-intersections must be even"
                )
        if self.pair(h, h) != 4:
            raise LatticeError(f"h.h must be 4, got {self.pair(h, h)}")

    @property
    def rank(self):
        return len(self.gram)

    def pair(self, d1, d2):
        d1, d2 = self.as_class(d1), self.as_class(d2)
        return sum(
            d1[i] * self.gram[i][j] * d2[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def as_class(self, d):
        d = tuple(int(x) for x in d)
        if len(d) != self.rank:
            raise LatticeError(
                f"class vector has length {len(d)}, lattice rank is {self.rank}"
            )
        return d

    def complement(self, d):
        """The class 2h - d (the quotient of the c1 = 2h extension)."""
        d = self.as_class(d)
        return tuple(2 * hh - dd for hh, dd in zip(self.h, d))

    def to_json(self):
        return json.dumps({"gram": [list(r) for r in self.gram], "h": list(self.h)})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        return cls(tuple(map(tuple, data["gram"])), tuple(data["h"]))


def pair(lattice, d1, d2):
    return lattice.pair(d1, d2)


@dataclass(frozen=True)
class CohomologyFlags:
    """Hypotheses the lattice cannot decide; supplied by the caller with a
    geometric justification."""

    h0_D_minus_h_vanishes: bool = False
    h0_2h_minus_D_vanishes: bool = False
    D_irreducible: bool = False
    D_effective: bool = False


def euler_characteristic(lattice, rank, c1, c2):
    """Riemann-Roch on a K3: chi = 2r + c1^2/2 - c2."""
    sq = lattice.pair(c1, c1)
    if sq % 2:
        raise LatticeError(f"c1^2 = {sq} is odd, impossible on a K3 lattice")
    return 2 * rank + sq // 2 - c2


def genus_and_h0(lattice, d, flags):
    """(arithmetic genus, h^0) of an irreducible effective divisor:
    p_a = 1 + D^2/2 and h^0 = 2 + D^2/2."""
    if not (flags.D_irreducible and flags.D_effective):
        raise FlagError(
            "genus/h0 formulas apply to irreducible effective divisors only; "
            "set D_irreducible and D_effective"
        )
    sq = lattice.pair(d, d)
    return 1 + sq // 2, 2 + sq // 2


def watanabe_classify(lattice, d, flags):
    """Case table for initialized aCM line bundles O(D) on a quartic K3:

      a: D^2 = -2 and 1 <= Dh <= 3
      b: D^2 =  0 and 3 <= Dh <= 4
      c: D^2 =  2 and Dh = 5
      d: D^2 =  4, Dh = 6 and h^0(D-h) = h^0(2h-D) = 0

    Returns 'none' when no case matches (e.g. multiples of h).
    """
    d = lattice.as_class(d)
    if not flags.D_effective:
        raise FlagError("classification applies to effective divisors; set D_effective")
    if all(x == 0 for x in d):
        raise LatticeError("the zero divisor is not classified")
    sq, dh = lattice.pair(d, d), lattice.pair(d, lattice.h)
    if sq == -2 and 1 <= dh <= 3:
        return "a"
    if sq == 0 and 3 <= dh <= 4:
        return "b"
    if sq == 2 and dh == 5:
        return "c"
    if (
        sq == 4
        and dh == 6
        and flags.h0_D_minus_h_vanishes
        and flags.h0_2h_minus_D_vanishes
    ):
        return "d"
    return "none"


def decomposable_case(lattice, d, globally_generated=False):
    """Tag for split bundles O(D) + O(2h-D) with c2 = D.(2h-D) = 8."""
    if lattice.pair(d, lattice.complement(d)) != 8:
        return "none"
    sq, dh = lattice.pair(d, d), lattice.pair(d, lattice.h)
    if (sq, dh) == (0, 4):
        return "t2gg-split" if globally_generated else "t2ngg-split-quartics"
    if (sq, dh) in ((2, 5), (-2, 3)):
        return "t2ngg-split-quintic-cubic"
    if (sq, dh) == (4, 6):
        return "t2Exotic-split"
    return "none"


def reduced_hilbert_poly(lattice, rank, c1, c2):
    """Coefficients (quadratic, linear, constant) of chi(twist by t)/rank."""
    if rank not in (1, 2):
        raise LatticeError("rank must be 1 or 2")
    c1h = lattice.pair(c1, lattice.h)
    chi = euler_characteristic(lattice, rank, c1, c2)
    return (Fraction(2), Fraction(c1h, rank), Fraction(chi, rank))


@dataclass
class StabilityVerdict:
    kind: str  # unstable | strictly_semistable | stable_candidate
    mu_sub: Fraction
    mu_total: Fraction
    reduced_sub: tuple
    reduced_total: tuple


def stability_classify(lattice, d):
    """Stability of a c1 = 2h, c2 = 8 extension with sub-line-bundle O(D):
    slope comparison first, reduced-Hilbert-polynomial constant term on ties."""
    d = lattice.as_class(d)
    comp = lattice.complement(d)
    if lattice.pair(d, comp) != 8:
        raise LatticeError(
            f"D.(2h-D) = {lattice.pair(d, comp)} != 8: not a c2 = 8 extension datum"
        )
    dh = lattice.pair(d, lattice.h)
    sq = lattice.pair(d, d)
    reduced_sub = reduced_hilbert_poly(lattice, 1, d, 0)
    reduced_total = reduced_hilbert_poly(
        lattice, 2, tuple(2 * x for x in lattice.h), 8
    )
    if dh > 4:
        kind = "unstable"
    elif dh == 4:
        # D.(2h-D) = 8 forces D^2 = 0; Gieseker tie at equal slope
        kind = "strictly_semistable" if sq == 0 else "unstable"
    else:
        kind = "stable_candidate"
    return StabilityVerdict(kind, Fraction(dh), Fraction(4), reduced_sub, reduced_total)


def extension_family_dim(lattice, d, flags):
    """h^1 of O(2D-2h) assuming the two h^0 vanishings: equals -chi, i.e.
    -(2 + 2(D-h)^2); the extension family has projective dimension h^1 - 1."""
    if not (flags.h0_D_minus_h_vanishes and flags.h0_2h_minus_D_vanishes):
        raise FlagError(
            "family dimension needs both h^0 vanishing flags "
            "(h0_D_minus_h_vanishes, h0_2h_minus_D_vanishes)"
        )
    d = lattice.as_class(d)
    dmh = tuple(dd - hh for dd, hh in zip(d, lattice.h))
    chi = 2 + 2 * lattice.pair(dmh, dmh)
    if chi > 0:
        raise FlagError(
            f"chi(O(2D-2h)) = {chi} > 0 contradicts the supplied vanishing flags"
        )
    return -chi


def s_equivalence_pair(lattice, d1, d2):
    """Boundary pairing: the split bundles of D1 and D2 are S-equivalent
    iff D2 equals D1 or 2h - D1; both classes must satisfy Dh = 4, D^2 = 0."""
    d1, d2 = lattice.as_class(d1), lattice.as_class(d2)
    for d in (d1, d2):
        if lattice.pair(d, lattice.h) != 4 or lattice.pair(d, d) != 0:
            raise LatticeError(
                "S-equivalence pairing applies to classes with Dh = 4, D^2 = 0"
            )
    return d2 == d1 or d2 == lattice.complement(d1)
