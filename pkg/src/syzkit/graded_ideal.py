"""Homogeneous ideals given by generators, computed one graded piece at a time."""

from __future__ import annotations

import threading

from .errors import ContextMismatch, InhomogeneousError
from .linalg import Subspace, check_size
from .multipoly import (
    Poly,
    RingContext,
    coordinates,
    from_coordinates,
    monomial_basis,
    monomial_index,
    monomial_times,
    sym_dim,
)
from .scalars import Field


class GradedIdeal:
    """Ideal of Sym(V) generated by homogeneous polynomials.

    ``piece(d)`` is the span of all monomial multiples of generators landing
    in degree d; pieces are cached under a lock so an ideal can be shared
    between threads.
    """

    def __init__(self, context: RingContext, generators):
        gens = []
        for g in generators:
            if g.context != context:
                raise ContextMismatch("generator from a different ring")
            if g.is_zero():
                raise InhomogeneousError("zero generator")
            gens.append(g)
        self.context = context
        self.generators = tuple(gens)
        self._pieces = {}
        self._lock = threading.Lock()

    @property
    def field(self) -> Field:
        return self.context.field

    @property
    def num_vars(self) -> int:
        return self.context.num_vars

    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def piece(self, d: int) -> Subspace:
        if d < 0:
            raise ValueError("degree must be non-negative")
        with self._lock:
            cached = self._pieces.get(d)
        if cached is not None:
            return cached
        sub = self._compute_piece(d)
        with self._lock:
            return self._pieces.setdefault(d, sub)

    def _compute_piece(self, d: int) -> Subspace:
        ctx = self.context
        dim = sym_dim(ctx.num_vars, d)
        vectors = []
        for g in self.generators:
            if g.degree > d:
                continue
            shifts = monomial_basis(ctx, d - g.degree)
            check_size(len(vectors) + len(shifts), dim, f"degree-{d} piece")
            for m in shifts:
                vectors.append(coordinates(monomial_times(m, g)))
        return Subspace.span(ctx.field, dim, vectors)

    def piece_dim(self, d: int) -> int:
        return self.piece(d).dim

    def hilbert_quotient(self, d: int) -> int:
        """dim Sym^d V - dim I_d."""
        return sym_dim(self.num_vars, d) - self.piece(d).dim

    def contains(self, f: Poly) -> bool:
        if f.context != self.context:
            raise ContextMismatch("polynomial from a different ring")
        if f.is_zero():
            return True
        return self.piece(f.degree).contains_vector(coordinates(f))

    def multiply_by_variables(self, d: int) -> Subspace:
        """The span of V * I_d inside Sym^{d+1}."""
        ctx = self.context
        idx = monomial_index(ctx, d + 1)
        dim = sym_dim(ctx.num_vars, d + 1)
        basis = monomial_basis(ctx, d)
        vectors = []
        for row in self.piece(d).basis:
            for i in range(ctx.num_vars):
                v = [ctx.field.zero] * dim
                for m, c in zip(basis, row):
                    if c:
                        shifted = m[:i] + (m[i] + 1,) + m[i + 1:]
                        v[idx[shifted]] = c
                vectors.append(v)
        return Subspace.span(ctx.field, dim, vectors)

    def generation_check(self, d: int) -> bool:
        """True iff I_{d+1} = V * I_d, i.e. no new generators are needed in degree d + 1."""
        if d < 1:
            raise ValueError("degree must be at least 1")
        return self.piece(d + 1) == self.multiply_by_variables(d)

    def piece_polys(self, d: int) -> list:
        """The RREF basis of I_d as polynomials (leading coefficient 1, graded-lex order)."""
        return [from_coordinates(row, d, self.context) for row in self.piece(d).basis]

    def change_field(self, field: Field) -> GradedIdeal:
        """The same generators read in another field (Q -> F_p reduction)."""
        ctx = self.context.with_field(field)
        gens = []
        for g in self.generators:
            terms = {m: field.reduce_from(self.field, c) for m, c in g.terms.items()}
            gens.append(Poly(ctx, g.degree, terms))
        return GradedIdeal(ctx, [g for g in gens if not g.is_zero()])

    def __repr__(self):
        return f"GradedIdeal({len(self.generators)} generators in {self.num_vars} variables)"


def graded_piece(ideal: GradedIdeal, d: int) -> Subspace:
    return ideal.piece(d)


def hilbert_quotient(ideal: GradedIdeal, d: int) -> int:
    return ideal.hilbert_quotient(d)


def ideal_membership(ideal: GradedIdeal, f: Poly) -> bool:
    return ideal.contains(f)


def generation_check(ideal: GradedIdeal, d: int) -> bool:
    return ideal.generation_check(d)
