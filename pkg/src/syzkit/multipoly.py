"""Homogeneous polynomials in x0..xN with exact coefficients.

Monomials are exponent tuples.  Every degree-d slice is ordered graded
lexicographically with x0 largest, so ``monomial_basis(ctx, d)[0]`` is
``x0^d``; all matrices downstream index their columns by this order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import (
    ContextMismatch,
    InhomogeneousError,
    LengthMismatch,
    PolynomialSyntaxError,
    UnknownVariable,
)
from .scalars import Field

Monomial = tuple


def degree(mono: Monomial) -> int:
    return sum(mono)


@dataclass(frozen=True)
class RingContext:
    """The polynomial ring Q[x0..xN] (or F_p[...]) with ``num_vars = N + 1``."""

    num_vars: int
    field: Field

    def __post_init__(self):
        if self.num_vars < 2:
            raise ValueError("need at least two variables (N >= 1)")

    @property
    def N(self) -> int:
        return self.num_vars - 1

    def variable(self, i: int) -> Poly:
        if not 0 <= i < self.num_vars:
            raise UnknownVariable(f"x{i} not in x0..x{self.N}")
        e = [0] * self.num_vars
        e[i] = 1
        return Poly(self, 1, {tuple(e): self.field.one})

    def zero(self, d: int) -> Poly:
        return Poly(self, d, {})

    def with_field(self, field: Field) -> RingContext:
        return RingContext(self.num_vars, field)


@lru_cache(maxsize=None)
def _basis(n: int, d: int) -> tuple:
    def rec(k, left):
        if k == n - 1:
            yield (left,)
            return
        for a in range(left, -1, -1):
            for rest in rec(k + 1, left - a):
                yield (a,) + rest

    return tuple(rec(0, d))


@lru_cache(maxsize=None)
def _index(n: int, d: int) -> dict:
    return {m: i for i, m in enumerate(_basis(n, d))}


def monomial_basis(ctx: RingContext, d: int) -> tuple:
    """All C(N+d, d) monomials of degree d, graded lex with x0 > x1 > ... > xN."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return _basis(ctx.num_vars, d)


def monomial_index(ctx: RingContext, d: int) -> dict:
    return _index(ctx.num_vars, d)


def sym_dim(num_vars: int, d: int) -> int:
    return comb(num_vars - 1 + d, d) if d >= 0 else 0


class Poly:
    """Sparse homogeneous polynomial; ``terms`` maps exponent tuples to nonzero raw coefficients."""

    __slots__ = ("context", "degree", "terms")

    def __init__(self, context: RingContext, degree: int, terms: dict):
        self.context = context
        self.degree = degree
        self.terms = {m: c for m, c in terms.items() if c}
        for m in self.terms:
            if len(m) != context.num_vars or sum(m) != degree:
                raise InhomogeneousError(f"monomial {m} does not have degree {degree}")

    @property
    def field(self) -> Field:
        return self.context.field

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: Poly):
        if self.context != other.context:
            raise ContextMismatch("polynomials live in different rings")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        if self.degree != other.degree and self.terms and other.terms:
            raise InhomogeneousError("sum of polynomials of different degrees")
        d = self.degree if self.terms else other.degree
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = f.add(out[m], c) if m in out else c
        return Poly(self.context, d, out)

    def __neg__(self) -> Poly:
        f = self.field
        return Poly(self.context, self.degree, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c) -> Poly:
        f = self.field
        c = f.normalize(c)
        return Poly(self.context, self.degree, {m: f.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.context == other.context and self.terms == other.terms
                and (self.degree == other.degree or not self.terms))

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def leading_coefficient(self):
        if not self.terms:
            return self.field.zero
        return self.terms[max(self.terms)]

    def monic(self) -> Poly:
        """Scaled so the graded-lex leading coefficient is 1 (zero stays zero)."""
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, degree={self.degree})"


HomogeneousPoly = Poly


def multiply(f: Poly, g: Poly) -> Poly:
    f._check(g)
    fld = f.field
    out = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            c = fld.mul(c1, c2)
            out[m] = fld.add(out[m], c) if m in out else c
    return Poly(f.context, f.degree + g.degree, out)


def monomial_times(mono: Monomial, f: Poly) -> Poly:
    return Poly(f.context, f.degree + sum(mono),
                {tuple(a + b for a, b in zip(mono, m)): c for m, c in f.terms.items()})


def coordinates(f: Poly) -> list:
    """Dense coefficient vector of ``f`` in ``monomial_basis`` order."""
    basis = monomial_basis(f.context, f.degree)
    zero = f.field.zero
    return [f.terms.get(m, zero) for m in basis]


def from_coordinates(v, d: int, context: RingContext) -> Poly:
    basis = monomial_basis(context, d)
    if len(v) != len(basis):
        raise LengthMismatch(f"expected {len(basis)} coordinates, got {len(v)}")
    f = context.field
    return Poly(context, d, {m: f.normalize(c) for m, c in zip(basis, v) if c})


# -- text format ------------------------------------------------------------

def _format_mono(mono: Monomial) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    """Graded-lex ordered text, e.g. ``x0*x2 - x1^2``; parse_poly inverts it."""
    if not f.terms:
        return "0"
    fld = f.field
    out = []
    for m in sorted(f.terms, reverse=True):
        c = f.terms[m]
        negative = fld.is_rational and c < 0
        mag = -c if negative else c
        mono = _format_mono(m)
        if not mono:
            body = fld.format(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{fld.format(mag)}*{mono}"
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    text = re.sub(r"#[^\n]*", "", text)
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("var", int(m.group(3)), m.start(2)))
        elif m.group(4) is not None:
            tokens.append(("name", m.group(4), m.start(4)))
        else:
            tokens.append(("op", m.group(5), m.start(5)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, num_vars, param):
        self.toks = _tokenize(text)
        self.i = 0
        self.num_vars = num_vars
        self.param = param

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, ch):
        kind, val, pos = self.take()
        if kind != "op" or val != ch:
            raise PolynomialSyntaxError(f"expected {ch!r} at offset {pos}", pos)

    def at_op(self, ch):
        kind, val, _ = self.peek()
        return kind == "op" and val == ch

    def parse(self):
        """Return a list of (sign, coeff Fraction, exponents, param power) terms."""
        terms = []
        sign = 1
        if self.at_op("-") or self.at_op("+"):
            sign = -1 if self.take()[1] == "-" else 1
        terms.append(self.term(sign))
        while True:
            kind, val, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and val in "+-":
                self.take()
                terms.append(self.term(-1 if val == "-" else 1))
            else:
                raise PolynomialSyntaxError(f"unexpected {val!r} at offset {pos}", pos)
        return terms

    def exponent(self):
        if self.at_op("^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolynomialSyntaxError(f"expected exponent at offset {pos}", pos)
            return val
        return 1

    def term(self, sign):
        coeff = Fraction(1)
        exps = [0] * self.num_vars
        tpow = 0
        kind, val, pos = self.peek()
        have_factor = False
        if kind == "int":
            self.take()
            num = val
            den = 1
            if self.at_op("/"):
                self.take()
                k2, den, p2 = self.take()
                if k2 != "int" or den == 0:
                    raise PolynomialSyntaxError(f"expected positive denominator at offset {p2}", p2)
            coeff = Fraction(num, den)
            if not self.at_op("*"):
                return sign, coeff, tuple(exps), tpow
            self.take()
        while True:
            kind, val, pos = self.take()
            if kind == "var":
                if val >= self.num_vars:
                    raise UnknownVariable(f"x{val} at offset {pos} exceeds x{self.num_vars - 1}")
                exps[val] += self.exponent()
            elif kind == "name" and self.param is not None and val == self.param:
                tpow += self.exponent()
            elif kind == "name":
                raise PolynomialSyntaxError(f"unknown symbol {val!r} at offset {pos}", pos)
            else:
                raise PolynomialSyntaxError(f"expected a variable at offset {pos}", pos)
            have_factor = True
            if not self.at_op("*"):
                break
            self.take()
        assert have_factor
        return sign, coeff, tuple(exps), tpow


def _parse_terms(text, num_vars, param=None):
    if text.strip() == "" or re.sub(r"#[^\n]*", "", text).strip() == "":
        raise PolynomialSyntaxError("empty polynomial", 0)
    return _Parser(text, num_vars, param).parse()


def parse_poly(text: str, context: RingContext, degree: int | None = None) -> Poly:
    """Parse ASCII polynomial text such as ``"x0*x2 - x1^2"``.

    ``degree`` tags the result when the text is the zero polynomial.
    """
    terms = _parse_terms(text, context.num_vars)
    fld = context.field
    out = {}
    degrees = set()
    for sign, coeff, exps, _ in terms:
        if coeff == 0:
            continue
        degrees.add(sum(exps))
        c = fld.normalize(sign * coeff)
        out[exps] = fld.add(out[exps], c) if exps in out else c
    if len(degrees) > 1:
        raise InhomogeneousError(f"terms of degrees {sorted(degrees)} in {text.strip()!r}")
    out = {m: c for m, c in out.items() if c}
    if out:
        d = sum(next(iter(out)))
        if degree is not None and degree != d:
            raise InhomogeneousError(f"expected degree {degree}, got {d}")
    else:
        d = degree if degree is not None else (degrees.pop() if degrees else 0)
    return Poly(context, d, out)


def parse_parametric(text: str, context: RingContext, param: str) -> tuple:
    """Parse a polynomial whose coefficients are polynomials in ``param``.

    Returns ``(degree, {monomial: {param_power: raw coefficient}})``;
    homogeneity is required in the x-variables only.
    """
    terms = _parse_terms(text, context.num_vars, param)
    fld = context.field
    out = {}
    degrees = set()
    for sign, coeff, exps, tpow in terms:
        if coeff == 0:
            continue
        degrees.add(sum(exps))
        c = fld.normalize(sign * coeff)
        slot = out.setdefault(exps, {})
        slot[tpow] = fld.add(slot[tpow], c) if tpow in slot else c
    if len(degrees) > 1:
        raise InhomogeneousError(f"terms of degrees {sorted(degrees)} in {text.strip()!r}")
    clean = {}
    for m, coeffs in out.items():
        coeffs = {k: v for k, v in coeffs.items() if v}
        if coeffs:
            clean[m] = coeffs
    d = degrees.pop() if degrees else 0
    return d, clean
