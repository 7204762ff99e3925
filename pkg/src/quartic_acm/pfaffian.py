"""Skew-symmetric polynomial matrices, exact pfaffians and determinants.

Works over any exact ring whose elements support + - * (ints, Fractions,
Polynomial); the pfaffian sign convention is pf([[0, a], [-a, 0]]) = +a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import Polynomial, poly_parse


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class SkewPolyMatrix:
    """Even-order skew matrix of forms with a graded shape d-vector.

    ``upper`` maps 0-based (i, j) with i < j to the entry; the lower
    triangle is implied by antisymmetry and the diagonal is zero.
    Entry (i, j) is expected homogeneous of degree 2 - d[i] - d[j].
    """

    n: int
    upper: dict
    d: tuple = field(default=None)

    def __post_init__(self):
        if self.n % 2 or self.n <= 0:
            raise ShapeError(f"order must be a positive even integer, got {self.n}")
        object.__setattr__(self, "d", tuple(self.d) if self.d is not None else (0,) * self.n)
        if len(self.d) != self.n:
            raise ShapeError("d-vector length must equal the order")
        clean = {}
        for (i, j), entry in self.upper.items():
            if not (0 <= i < j < self.n):
                raise ShapeError(f"bad upper-triangle index ({i}, {j})")
            if not isinstance(entry, Polynomial):
                entry = Polynomial.constant(entry)
            if entry:
                clean[(i, j)] = entry
        object.__setattr__(self, "upper", clean)

    def entry(self, i, j):
        if i == j:
            return Polynomial.zero()
        if i < j:
            return self.upper.get((i, j), Polynomial.zero())
        return -self.upper.get((j, i), Polynomial.zero())

    def full(self):
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def swap(self, i, j):
        """Simultaneously swap rows i, j and columns i, j."""
        perm = list(range(self.n))
        perm[i], perm[j] = perm[j], perm[i]
        upper = {}
        for a in range(self.n):
            for b in range(a + 1, self.n):
                e = self.entry(perm[a], perm[b])
                if e:
                    upper[(a, b)] = e
        d = tuple(self.d[k] for k in perm)
        return SkewPolyMatrix(self.n, upper, d)

    def to_json(self):
        return json.dumps(
            {
                "n": self.n,
                "d": list(self.d),
                "upper": {
                    f"{i + 1},{j + 1}": str(e) for (i, j), e in sorted(self.upper.items())
                },
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        upper = {}
        for key, poly_text in data["upper"].items():
            i, j = (int(t) for t in key.split(","))
            upper[(i - 1, j - 1)] = poly_parse(poly_text)
        return cls(data["n"], upper, tuple(data.get("d") or ()) or None)


def _pf(entry, idx):
    # expansion along the first remaining row; pf(empty) = 1
    if not idx:
        return 1
    first, rest = idx[0], idx[1:]
    total = None
    sign = 1
    for k, j in enumerate(rest):
        e = entry(first, j)
        if e:
            sub = _pf(entry, rest[:k] + rest[k + 1:])
            term = sign * e * sub
            total = term if total is None else total + term
        sign = -sign
    return 0 if total is None else total


def pfaffian(m):
    """Pfaffian by recursive first-row expansion; even order <= 8 only."""
    if isinstance(m, SkewPolyMatrix):
        n, entry = m.n, m.entry
    else:
        n = len(m)
        if any(len(row) != n for row in m):
            raise ShapeError("matrix is not square")
        entry = lambda i, j: m[i][j]
    if n % 2:
        raise ShapeError(f"pfaffian needs even order, got {n}")
    if n > 8:
        raise ShapeError("orders above 8 are not supported")
    return _pf(entry, tuple(range(n)))


def determinant(m):
    """Exact determinant by cofactor expansion, memoized on row subsets."""
    if isinstance(m, SkewPolyMatrix):
        m = m.full()
    n = len(m)
    if any(len(row) != n for row in m):
        raise ShapeError("matrix is not square")
    if n > 8:
        raise ShapeError("orders above 8 are not supported")
    memo = {}

    def det(rows):
        if not rows:
            return 1
        if rows in memo:
            return memo[rows]
        col = n - len(rows)
        total = None
        sign = 1
        for k, i in enumerate(rows):
            e = m[i][col]
            if e if isinstance(e, Polynomial) else e != 0:
                term = sign * e * det(rows[:k] + rows[k + 1:])
                total = term if total is None else total + term
            sign = -sign
        result = 0 if total is None else total
        memo[rows] = result
        return result

    return det(tuple(range(n)))


@dataclass
class ShapeReport:
    valid: bool
    d: tuple
    violations: list

    def __bool__(self):
        return self.valid


def validate_shape(m):
    """Check the graded block shape used by rank-2 resolutions:

    d-vector sorted with exactly four 0s then (n-4) 1s, every entry
    homogeneous of degree 2 - d_i - d_j, no nonzero constant entries, and
    the bottom-right (n-4) x (n-4) block identically zero.
    """
    violations = []
    d = m.d
    if m.n not in (4, 6, 8):
        violations.append(f"order {m.n} outside {{4, 6, 8}}")
    if sorted(d) != list(d) or any(x not in (0, 1) for x in d) or d.count(0) != 4:
        violations.append(f"d-vector {d} must be four 0s followed by 1s")
    if sum(d) != m.n - 4:
        violations.append(f"degree bookkeeping fails: sum(d)={sum(d)} != n-4={m.n - 4}")
    for i in range(m.n):
        for j in range(i + 1, m.n):
            e = m.entry(i, j)
            if e.is_zero():
                continue
            want = 2 - d[i] - d[j]
            if not e.is_homogeneous(want):
                violations.append(
                    f"entry ({i + 1},{j + 1}) should be homogeneous of degree {want}, got {e}"
                )
            elif want <= 0:
                violations.append(
                    f"entry ({i + 1},{j + 1}) lies in the zero block but is {e}"
                )
            elif e.degree() == 0:
                violations.append(f"entry ({i + 1},{j + 1}) is a nonzero constant")
    return ShapeReport(not violations, d, violations)
