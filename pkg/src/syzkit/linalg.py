"""Exact dense linear algebra over Q and F_p.

Rational matrices are eliminated fraction-free: every row is scaled to a
primitive integer vector, rows are combined with integer multipliers and
divided by their content, and pivots are scaled to 1 only at the end.
Pivot choice is the first row with a nonzero entry in the current column,
so results are reproducible bit for bit.
"""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd, lcm

from .errors import AmbientMismatch, ComputationTooLarge, FieldMismatch, LengthMismatch
from .scalars import Field

DEFAULT_SIZE_GUARD = 2_000_000


def size_guard() -> int:
    raw = os.environ.get("SYZKIT_SIZE_GUARD")
    return int(raw) if raw else DEFAULT_SIZE_GUARD


def check_size(nrows: int, ncols: int, what: str = "matrix"):
    if nrows * ncols > size_guard():
        raise ComputationTooLarge(
            f"{what} of size {nrows}x{ncols} exceeds the guard of {size_guard()} entries")


class Matrix:
    """Dense matrix of raw field values stored as a list of rows."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows, ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise LengthMismatch(f"row of length {len(r)} in a matrix with {ncols} columns")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = [[field.normalize(x) for x in r] for r in rows]

    @classmethod
    def _raw(cls, field, rows, ncols):
        m = cls.__new__(cls)
        m.field, m.rows, m.nrows, m.ncols = field, rows, len(rows), ncols
        return m

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        z = field.zero
        return cls._raw(field, [[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: Field, columns, nrows: int) -> Matrix:
        cols = [list(c) for c in columns]
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> Matrix:
        return Matrix._raw(self.field, [list(c) for c in zip(*self.rows)] if self.nrows else
                           [[] for _ in range(self.ncols)], self.nrows)

    def columns(self):
        return [[r[j] for r in self.rows] for j in range(self.ncols)]

    def apply(self, v) -> list:
        if len(v) != self.ncols:
            raise LengthMismatch(f"vector of length {len(v)} for {self.ncols} columns")
        f = self.field
        v = [f.normalize(x) for x in v]
        out = []
        for r in self.rows:
            s = sum(a * b for a, b in zip(r, v) if a and b)
            out.append(f.normalize(s))
        return out

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ncols != other.nrows:
            raise LengthMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        cols = other.columns()
        rows = [[f.normalize(sum(a * b for a, b in zip(r, c) if a and b)) for c in cols]
                for r in self.rows]
        return Matrix._raw(f, rows, other.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field})"

    def reduce_mod(self, p: int) -> Matrix:
        """Image of a rational matrix in F_p (entries' denominators must be prime to p)."""
        fp = Field.prime(p)
        return Matrix._raw(fp, [[fp.reduce_from(self.field, x) for x in r] for r in self.rows],
                           self.ncols)


ExactMatrix = Matrix


# -- elimination kernels ------------------------------------------------------

def _integer_rows(rows):
    out = []
    for r in rows:
        den = lcm(*(x.denominator for x in r)) if r else 1
        ir = [int(x * den) if den != 1 else int(x) for x in r]
        if any(ir):
            g = gcd(*ir)
            if g > 1:
                ir = [x // g for x in ir]
            out.append(ir)
    return out


def _int_eliminate(rows, ncols, reduced):
    n = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        piv = None
        for i in range(r, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        a = prow[c]
        start = 0 if reduced else r + 1
        for i in range(start, n):
            if i == r:
                continue
            row = rows[i]
            b = row[c]
            if not b:
                continue
            g = gcd(a, b)
            a1, b1 = a // g, b // g
            if a1 == 1:
                new = [x - b1 * y for x, y in zip(row, prow)]
            else:
                new = [a1 * x - b1 * y for x, y in zip(row, prow)]
            cont = gcd(*new)
            if cont > 1:
                new = [x // cont for x in new]
            rows[i] = new
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _mod_eliminate(rows, ncols, p, reduced):
    n = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == n:
            break
        piv = None
        for i in range(r, n):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = [x * inv % p for x in rows[r]]
        rows[r] = prow
        start = 0 if reduced else r + 1
        for i in range(start, n):
            if i == r:
                continue
            row = rows[i]
            b = row[c]
            if not b:
                continue
            rows[i] = [(x - b * y) % p for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _eliminate(m: Matrix, reduced: bool):
    check_size(m.nrows, m.ncols)
    f = m.field
    if f.is_rational:
        rows, pivots = _int_eliminate(_integer_rows(m.rows), m.ncols, reduced)
        if reduced:
            rows = [[Fraction(x, row[c]) for x in row] for row, c in zip(rows, pivots)]
        return rows, pivots
    rows = [list(r) for r in m.rows if any(r)]
    return _mod_eliminate(rows, m.ncols, f.characteristic, reduced)


def rref(m: Matrix):
    """Return ``(R, rank, pivot_columns)`` with R the unique RREF of ``m`` (zero rows dropped)."""
    rows, pivots = _eliminate(m, reduced=True)
    return Matrix._raw(m.field, rows, m.ncols), len(pivots), pivots


def rank(m: Matrix) -> int:
    return len(_eliminate(m, reduced=False)[1])


def kernel_basis(m: Matrix) -> Subspace:
    """The subspace {v : m v = 0} in canonical RREF form."""
    R, _, pivots = rref(m)
    f = m.field
    pivset = set(pivots)
    vectors = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        v = [f.zero] * m.ncols
        v[free] = f.one
        for row, pc in zip(R.rows, pivots):
            if row[free]:
                v[pc] = f.neg(row[free])
        vectors.append(v)
    return Subspace.span(f, m.ncols, vectors)


def solve(m: Matrix, b) -> list | None:
    """A particular solution x of ``m x = b``, or None if the system is inconsistent."""
    if len(b) != m.nrows:
        raise LengthMismatch(f"right-hand side of length {len(b)} for {m.nrows} rows")
    f = m.field
    aug = Matrix._raw(f, [list(r) + [f.normalize(x)] for r, x in zip(m.rows, b)], m.ncols + 1)
    R, _, pivots = rref(aug)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [f.zero] * m.ncols
    for row, pc in zip(R.rows, pivots):
        x[pc] = row[-1]
    return x


# -- subspaces ----------------------------------------------------------------

class Subspace:
    """A linear subspace of field^ambient_dim stored as its RREF basis.

    Equality is canonical-form identity, so two spans compare equal exactly
    when they are the same set.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: Field, ambient_dim: int, basis_rows, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis_rows
        self.pivots = pivots

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors) -> Subspace:
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(field, ambient_dim, [], [])
        R, _, pivots = rref(Matrix(field, vectors, ambient_dim))
        return cls(field, ambient_dim, R.rows, pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim).rows,
                   list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> Matrix:
        return Matrix._raw(self.field, self.basis, self.ambient_dim)

    def _check(self, other: Subspace):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"ambient dimensions {self.ambient_dim} and {other.ambient_dim}")

    def reduce(self, v) -> list:
        """Normal form of ``v`` modulo this subspace (zero iff v is contained)."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        f = self.field
        w = [f.normalize(x) for x in v]
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c:
                w = [f.sub(x, f.mul(c, y)) if y else x for x, y in zip(w, row)]
        return w

    def contains_vector(self, v) -> bool:
        return not any(self.reduce(v))

    def coordinates_of(self, v) -> list:
        """Coefficients of ``v`` in the RREF basis; v must lie in the subspace."""
        if not self.contains_vector(v):
            raise ValueError("vector is not in the subspace")
        f = self.field
        return [f.normalize(v[pc]) for pc in self.pivots]

    def combine(self, coeffs) -> list:
        f = self.field
        out = [f.zero] * self.ambient_dim
        for c, row in zip(coeffs, self.basis):
            if c:
                out = [f.add(x, f.mul(c, y)) for x, y in zip(out, row)]
        return out

    def contains_subspace(self, other: Subspace) -> bool:
        self._check(other)
        return all(self.contains_vector(v) for v in other.basis)

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        self._check(other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.field, self.ambient_dim)
        f = self.field
        stacked = Matrix.from_columns(
            f, self.basis + [[f.neg(x) for x in v] for v in other.basis], self.ambient_dim)
        ker = kernel_basis(stacked)
        vectors = [self.combine(k[:self.dim]) for k in ker.basis]
        return Subspace.span(f, self.ambient_dim, vectors)

    def complement_in(self, container: Subspace) -> list:
        """Basis vectors of ``container`` (in order) extending this subspace to it."""
        self._check(container)
        current = self
        extra = []
        for v in container.basis:
            if not current.contains_vector(v):
                extra.append(v)
                current = current.sum(Subspace.span(self.field, self.ambient_dim, [v]))
        return extra

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, tuple(map(tuple, self.basis))))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, field={self.field})"


def subspace_algebra(a: Subspace, b: Subspace, op: str, vector=None):
    """Dispatch helper over the lattice operations by name."""
    if op == "sum":
        return a.sum(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "contains_vector":
        return a.contains_vector(vector)
    if op == "contains_subspace":
        return a.contains_subspace(b)
    if op == "equal":
        a._check(b)
        return a == b
    raise ValueError(f"unknown subspace operation {op!r}")
