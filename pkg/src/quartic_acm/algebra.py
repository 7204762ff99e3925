"""Exact scalar arithmetic, multivariate polynomials in x0..x3 and exact
linear algebra (rank / kernel / reduced echelon form).

Coefficients live either in Q (python Fractions) or in a prime field F_p
(ints in [0, p)); the field tag ``p`` is carried by every Polynomial and
ExactMatrix, with ``p=None`` meaning the rationals.  No floats anywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

NVARS = 4

Exponents = tuple  # 4-tuple of non-negative ints


class ParseError(ValueError):
    pass


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    for q in range(2, int(math.isqrt(p)) + 1):
        if p % q == 0:
            return False
    return True


def coerce_scalar(c, p):
    """Bring an int / Fraction / string into the field tagged by p."""
    if isinstance(c, str):
        c = Fraction(c)
    if p is None:
        return Fraction(c)
    c = Fraction(c)
    if c.denominator % p == 0:
        raise FieldError(f"denominator of {c} vanishes mod {p}")
    return (c.numerator * pow(c.denominator, -1, p)) % p


def scalar_inv(c, p):
    if p is None:
        if c == 0:
            raise ZeroDivisionError("division by zero scalar")
        return 1 / Fraction(c)
    if c % p == 0:
        raise ZeroDivisionError("division by zero scalar")
    return pow(c, -1, p)


def grlex_key(exponents):
    # graded lexicographic, x0 > x1 > x2 > x3
    return (sum(exponents), tuple(-e for e in exponents))


@lru_cache(maxsize=None)
def monomial_basis(degree):
    """All degree-d monomials in 4 variables, graded-lex ordered.

    Length is C(degree+3, 3).
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    out = []
    for e0 in range(degree, -1, -1):
        for e1 in range(degree - e0, -1, -1):
            for e2 in range(degree - e0 - e1, -1, -1):
                out.append((e0, e1, e2, degree - e0 - e1 - e2))
    return tuple(out)


class Polynomial:
    """Dense-by-degree multivariate polynomial; terms is a map
    exponent-4-tuple -> nonzero coefficient."""

    __slots__ = ("terms", "p")

    def __init__(self, terms=None, p=None):
        self.p = p
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != NVARS or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps}")
                c = coerce_scalar(c, p)
                if c:
                    clean[exps] = clean.get(exps, coerce_scalar(0, p)) + c
                    if p is not None:
                        clean[exps] %= p
                    if not clean[exps]:
                        del clean[exps]
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, p=None):
        return cls({}, p)

    @classmethod
    def constant(cls, c, p=None):
        return cls({(0, 0, 0, 0): c}, p)

    @classmethod
    def variable(cls, i, p=None):
        e = [0] * NVARS
        e[i] = 1
        return cls({tuple(e): 1}, p)

    # -- structure ----------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree=None):
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), coerce_scalar(0, self.p))

    def _check_field(self, other):
        if self.p != other.p:
            raise FieldError(f"mixed fields: mod {self.p} vs mod {other.p}")

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.p)
        self._check_field(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(terms, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.p)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.p)
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.constant(other, self.p) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = coerce_scalar(other, self.p)
            return Polynomial({e: a * c for e, a in self.terms.items()}, self.p)
        self._check_field(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return Polynomial(terms, self.p)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.p)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.p)
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / evaluation ----------------------------------------
    def derivative(self, i):
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                terms[tuple(e2)] = c * e[i]
        return Polynomial(terms, self.p)

    def evaluate(self, point):
        """Exact evaluation at a 4-tuple of scalars."""
        pt = [coerce_scalar(v, self.p) for v in point]
        total = coerce_scalar(0, self.p)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(pt, e):
                for _ in range(k):
                    t = t * v
            total = total + t
        return total % self.p if self.p is not None else total

    def reduce_mod(self, p):
        """Coefficientwise reduction into F_p; rejects bad primes."""
        if self.p is not None:
            raise FieldError("already over a finite field")
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        return Polynomial(dict(self.terms), p)

    # -- display --------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i}")
                elif k > 1:
                    factors.append(f"x{i}^{k}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = parts[0]
        for part in parts[1:]:
            s += " - " + part[1:] if part.startswith("-") else " + " + part
        return s

    def __repr__(self):
        return f"Polynomial({self})"


def reduce_mod_p(poly, p):
    return poly.reduce_mod(p)


_TOKEN = re.compile(r"\s*(?:(\d+/\d+|\d+)|(x[0-3])|([+\-*^()]))")


def _tokenize(text):
    pos, tokens = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:]!r}")
        num, var, op = m.groups()
        if num:
            tokens.append(("num", Fraction(num)))
        elif var:
            tokens.append(("var", int(var[1])))
        else:
            tokens.append((op, op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, p):
        self.tokens = tokens
        self.i = 0
        self.p = p

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expression(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        total = self.term() * sign
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.take()[0] == "-":
                    sign = -sign
            total = total + self.term() * sign
        return total

    def term(self):
        out = self.factor()
        while self.peek() == "*":
            self.take()
            out = out * self.factor()
        return out

    def factor(self):
        kind = self.peek()
        if kind is None:
            raise ParseError("unexpected end of input")
        if kind == "(":
            self.take()
            inner = self.expression()
            if self.peek() != ")":
                raise ParseError("missing closing parenthesis")
            self.take()
            base = inner
        elif kind == "num":
            base = Polynomial.constant(self.take()[1], self.p)
        elif kind == "var":
            base = Polynomial.variable(self.take()[1], self.p)
        else:
            raise ParseError(f"unexpected token {kind!r}")
        if self.peek() == "^":
            self.take()
            if self.peek() != "num":
                raise ParseError("exponent must be an integer")
            exp = self.take()[1]
            if exp.denominator != 1:
                raise ParseError("exponent must be an integer")
            base = base ** int(exp)
        return base


def poly_parse(text, expected_degree=None, p=None):
    """Parse a polynomial in x0..x3 with + - * ^ and rational coefficients.

    If expected_degree is given, the result must be homogeneous of that
    exact degree (and nonzero).
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    parser = _Parser(tokens, p)
    poly = parser.expression()
    if parser.i != len(tokens):
        raise ParseError(f"trailing tokens near {tokens[parser.i]}")
    if expected_degree is not None:
        if poly.is_zero() or not poly.is_homogeneous(expected_degree):
            raise ParseError(
                f"expected a homogeneous polynomial of degree {expected_degree}, "
                f"got {poly}"
            )
    return poly


class ExactMatrix:
    """Dense matrix over Q or F_p with exact elimination."""

    __slots__ = ("rows", "cols", "entries", "p")

    def __init__(self, entries, p=None):
        self.p = p
        self.entries = [[coerce_scalar(c, p) for c in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, rows, cols, p=None):
        return cls([[0] * cols for _ in range(rows)], p)

    def transpose(self):
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.p,
        )

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        v = [coerce_scalar(c, self.p) for c in v]
        out = []
        for row in self.entries:
            s = sum(a * b for a, b in zip(row, v))
            out.append(s % self.p if self.p is not None else s)
        return out

    def rref(self):
        """Returns (reduced rows, pivot column list)."""
        m = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = scalar_inv(m[r][c], self.p)
            m[r] = [x * inv % self.p if self.p is not None else x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [
                        (a - f * b) % self.p if self.p is not None else a - f * b
                        for a, b in zip(m[i], m[r])
                    ]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Vectors v with M.v = 0, one per free column."""
        m, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [coerce_scalar(0, self.p)] * self.cols
            v[fc] = coerce_scalar(1, self.p)
            for r, pc in enumerate(pivots):
                val = -m[r][fc]
                v[pc] = val % self.p if self.p is not None else val
            basis.append(v)
        return basis

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, mod {self.p})"


def binomial(n, k):
    return math.comb(n, k) if 0 <= k <= n else 0
