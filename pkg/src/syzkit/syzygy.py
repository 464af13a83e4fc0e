"""Linear syzygies among quadrics and the degree-2 part of the second syzygy ideal.

A linear syzygy is stored as the tensor s = sum_j x_j (x) Q_j in V (x) I_2
with sum_j x_j * Q_j = 0.  The quadrics involved in s are the span of the
Q_j; the image of phi is the sum of these spans over a basis of syzygies.
Subspaces of quadrics are always expressed in Sym^2 monomial coordinates,
so they can be compared across ideals.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field as dc_field

from .errors import (
    InvariantViolation,
    NotAQuadricInIdeal,
    NotASubideal,
    SpecializationError,
)
from .graded_ideal import GradedIdeal
from .koszul import k_p1_ideal_form, koszul_group_dim
from .linalg import Matrix, Subspace, solve
from .multipoly import Poly, RingContext, coordinates, from_coordinates, multiply, sym_dim


class SyzygyElement:
    """delta(gamma) for a linear syzygy gamma, as coordinates in V (x) I_2.

    ``tensor[j * m + b]`` is the coefficient of x_j (x) quadric_basis[b],
    where m = len(quadric_basis).
    """

    p = 2

    def __init__(self, context: RingContext, quadric_basis, tensor):
        self.context = context
        self.quadric_basis = tuple(quadric_basis)
        f = context.field
        self.tensor = [f.normalize(c) for c in tensor]
        if len(self.tensor) != context.num_vars * len(self.quadric_basis):
            raise ValueError("tensor length does not match V (x) I_2")

    @classmethod
    def from_components(cls, ideal: GradedIdeal, components) -> SyzygyElement:
        """Build from the quadrics (Q_0, ..., Q_N) paired with x_0, ..., x_N."""
        components = list(components)
        if len(components) != ideal.num_vars:
            raise ValueError(f"need {ideal.num_vars} components")
        piece = ideal.piece(2)
        tensor = []
        for q in components:
            v = coordinates(q) if not q.is_zero() else [ideal.field.zero] * piece.ambient_dim
            if q.degree != 2 and not q.is_zero():
                raise NotAQuadricInIdeal(f"{q} is not a quadric")
            if not piece.contains_vector(v):
                raise NotAQuadricInIdeal(f"{q} is not in I_2")
            tensor.extend(piece.coordinates_of(v))
        return cls(ideal.context, ideal.piece_polys(2), tensor)

    @property
    def rank(self) -> int:
        return len(self.quadric_basis)

    def component(self, j: int) -> Poly:
        m = self.rank
        out = self.context.zero(2)
        for b, c in enumerate(self.tensor[j * m:(j + 1) * m]):
            if c:
                out = out + self.quadric_basis[b].scale(c)
        return out

    def components(self) -> list:
        return [self.component(j) for j in range(self.context.num_vars)]

    def relation(self) -> Poly:
        """sum_j x_j * Q_j, which vanishes for a genuine syzygy."""
        out = self.context.zero(3)
        for j, q in enumerate(self.components()):
            out = out + multiply(self.context.variable(j), q)
        return out

    def is_valid(self) -> bool:
        return self.relation().is_zero()

    def combine(self, coeffs, others) -> SyzygyElement:
        """coeffs[0] * self + sum coeffs[i] * others[i-1]; all on the same I_2 basis."""
        f = self.context.field
        out = [f.zero] * len(self.tensor)
        for c, s in zip(coeffs, [self] + list(others)):
            c = f.normalize(c)
            if c:
                out = [f.add(x, f.mul(c, y)) for x, y in zip(out, s.tensor)]
        return SyzygyElement(self.context, self.quadric_basis, out)

    def is_zero(self) -> bool:
        return not any(self.tensor)

    def to_pairs(self) -> list:
        """[(variable index, quadric text), ...] for nonzero components."""
        return [(j, str(q)) for j, q in enumerate(self.components()) if not q.is_zero()]

    def __eq__(self, other):
        if not isinstance(other, SyzygyElement):
            return NotImplemented
        return self.components() == other.components()

    def __repr__(self):
        body = " + ".join(f"x{j} (x) ({q})" for j, q in self.to_pairs()) or "0"
        return f"SyzygyElement({body})"


def syzygy_basis(ideal: GradedIdeal) -> list:
    """RREF basis of ker(V (x) I_2 -> I_3), one SyzygyElement per basis vector."""
    if ideal.max_generator_degree() > 2:
        warnings.warn("ideal has generators of degree > 2; linear syzygies of the quadrics "
                      "alone may not reflect K_{2,1}", stacklevel=2)
    kernel = k_p1_ideal_form(ideal, 2)
    quadrics = ideal.piece_polys(2)
    out = []
    for row in kernel.basis:
        s = SyzygyElement(ideal.context, quadrics, row)
        if not s.is_valid():
            raise InvariantViolation(f"kernel vector is not a syzygy: {s!r}")
        out.append(s)
    return out


def contract(s: SyzygyElement, functional) -> Poly:
    """The quadric sum_j lambda_j Q_j, i.e. gamma-bar evaluated at a dual vector."""
    functional = list(functional)
    if len(functional) != s.context.num_vars:
        raise ValueError(f"functional must have length {s.context.num_vars}")
    f = s.context.field
    out = s.context.zero(2)
    for lam, q in zip(functional, s.components()):
        lam = f.normalize(lam)
        if lam:
            out = out + q.scale(lam)
    return out


def _quadric_space(context: RingContext, polys) -> Subspace:
    dim = sym_dim(context.num_vars, 2)
    return Subspace.span(context.field, dim, [coordinates(q) for q in polys if not q.is_zero()])


def involved_quadrics(s: SyzygyElement) -> Subspace:
    """Span of the components Q_j, in Sym^2 coordinates."""
    return _quadric_space(s.context, s.components())


def _solve_functional(s: SyzygyElement, q: Poly):
    comps = s.components()
    dim = sym_dim(s.context.num_vars, 2)
    zero = [s.context.field.zero] * dim
    cols = [coordinates(c) if not c.is_zero() else zero for c in comps]
    m = Matrix.from_columns(s.context.field, cols, dim)
    return solve(m, coordinates(q))


@dataclass
class PhiReport:
    dim_image: int
    dim_I2: int
    image: Subspace
    complement_basis: list

    @property
    def surjective(self) -> bool:
        return self.dim_image == self.dim_I2

    def image_polys(self, context: RingContext) -> list:
        return [from_coordinates(row, 2, context) for row in self.image.basis]

    def to_json(self) -> dict:
        return {
            "dim_image": self.dim_image,
            "dim_I2": self.dim_I2,
            "surjective": self.surjective,
            "complement": [str(q) for q in self.complement_basis],
        }


def phi_image(ideal: GradedIdeal, basis=None) -> PhiReport:
    """Image of phi: K_{2,1} (x) V^dual -> I_2, compared against I_2."""
    if basis is None:
        basis = syzygy_basis(ideal)
    ctx = ideal.context
    comps = [q for s in basis for q in s.components()]
    image = _quadric_space(ctx, comps)
    i2 = ideal.piece(2)
    if not i2.contains_subspace(image):
        raise InvariantViolation("image of phi escapes I_2")
    extra = image.complement_in(i2)
    complement = [from_coordinates(image.reduce(v), 2, ctx).monic() for v in extra]
    report = PhiReport(image.dim, i2.dim, image, complement)
    if report.surjective != (not complement):
        raise InvariantViolation("complement basis inconsistent with dimensions")
    return report


# -- verdicts -------------------------------------------------------------------

EQUALS_SELF = "EQUALS_SELF"
EQUALS_CONTAINING = "EQUALS_CONTAINING"
INCONCLUSIVE = "INCONCLUSIVE"

DEGREE_TWO_CAVEAT = ("equality is decided on the degree-2 span Im(phi); the syzygy ideal is "
                     "not saturated and scheme structure is not compared")


@dataclass
class Verdict:
    kind: str
    lemma: str
    syzygy_ideal_deg2: list
    assumed_hypotheses: list
    phi: PhiReport
    context_index: int | None = None
    context_dim_I2: int | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lemma": self.lemma,
            "syzygy_ideal_deg2": [str(q) for q in self.syzygy_ideal_deg2],
            "assumed_hypotheses": list(self.assumed_hypotheses),
        }

    def describe(self) -> str:
        phi = self.phi
        if self.kind == EQUALS_SELF:
            return (f"EQUALS_SELF (Lemma: phi surjective); "
                    f"dim Im(phi)={phi.dim_image} = dim I_2")
        if self.kind == EQUALS_CONTAINING:
            n = len(phi.complement_basis)
            noun = "quadric" if n == 1 else "quadrics"
            return (f"EQUALS_CONTAINING: degree-2 syzygy ideal equals I_{{Z,2}} "
                    f"(dim {self.context_dim_I2}); {n} {noun} of I_2 uninvolved")
        return (f"INCONCLUSIVE: dim Im(phi)={phi.dim_image} < dim I_2={phi.dim_I2} "
                f"and no context ideal explains the gap")


def syz2_verdict(ideal: GradedIdeal, context_ideals=None) -> Verdict:
    """Decide Syz_2 at the level of degree-2 spans.

    phi surjective gives EQUALS_SELF.  Otherwise a context ideal Z inside I
    explains the image when Im(phi_I) lies in I_{Z,2}, every syzygy of I
    lives in V (x) I_{Z,2}, and phi_Z is surjective.
    """
    basis = syzygy_basis(ideal)
    phi = phi_image(ideal, basis)
    image_polys = phi.image_polys(ideal.context)
    if phi.surjective:
        return Verdict(EQUALS_SELF, "phi-surjective", image_polys,
                       ["the generators give the ideal of X in degree 2", DEGREE_TWO_CAVEAT],
                       phi)
    i2 = ideal.piece(2)
    for k, z in enumerate(context_ideals or []):
        if z.context != ideal.context:
            continue
        z2 = z.piece(2)
        if not i2.contains_subspace(z2):
            continue
        if not z2.contains_subspace(phi.image):
            continue
        if not syzygies_contained_in(ideal, z):
            continue
        if not phi_image(z).surjective:
            continue
        if phi.image != z2:
            raise InvariantViolation("context ideal passed every check but Im(phi) != I_{Z,2}")
        assumed = [
            "Z satisfies (N_2) (assumed by user, not certified)",
            "X = Z cut by the uninvolved quadric scheme-theoretically (assumed by user)",
            DEGREE_TWO_CAVEAT,
        ]
        return Verdict(EQUALS_CONTAINING, "uninvolved-quadric-cut", image_polys, assumed,
                       phi, context_index=k, context_dim_I2=z2.dim)
    return Verdict(INCONCLUSIVE, "none", image_polys, [DEGREE_TWO_CAVEAT], phi)


# -- involvement --------------------------------------------------------------------

WITNESS_FOUND = "WitnessFound"
NOT_IN_PHI_IMAGE = "NotInPhiImage"
NO_WITNESS_FOUND = "NoWitnessFound"


@dataclass
class InvolvementResult:
    status: str
    witness: SyzygyElement | None = None
    functional: list | None = None
    trials: int = 0
    seed: int | None = None

    def verify(self, q: Poly) -> bool:
        if self.status != WITNESS_FOUND:
            return False
        return contract(self.witness, self.functional) == q

    def to_json(self) -> dict:
        out = {"status": self.status, "trials": self.trials, "seed": self.seed}
        if self.witness is not None:
            out["witness"] = [[j, q] for j, q in self.witness.to_pairs()]
            out["functional"] = [str(c) for c in self.functional]
        return out


def _draw_coefficient(rng: random.Random, width: int) -> int:
    c = rng.randint(-width, width - 1)
    return c if c < 0 else c + 1


def involvement_witness(ideal: GradedIdeal, q: Poly, trials: int = 64, seed: int = 0,
                        basis=None) -> InvolvementResult:
    """Search for a syzygy gamma and dual vector lambda with gamma-bar(lambda) = q.

    q outside Im(phi) is a certificate of non-involvement.  Otherwise every
    basis syzygy is tried, then random integer combinations (coefficients
    in [-3, 3] minus 0, widening to [-20, 20] for the second half of the
    trials).  NoWitnessFound does not prove non-involvement.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if q.context != ideal.context or (q.degree != 2 and not q.is_zero()):
        raise NotAQuadricInIdeal(f"{q} is not a quadric of this ring")
    if not ideal.contains(q):
        raise NotAQuadricInIdeal(f"{q} is not in I_2")
    if basis is None:
        basis = syzygy_basis(ideal)
    phi = phi_image(ideal, basis)
    if not phi.image.contains_vector(coordinates(q)):
        return InvolvementResult(NOT_IN_PHI_IMAGE, trials=0, seed=seed)

    used = 0
    for s in basis:
        used += 1
        lam = _solve_functional(s, q)
        if lam is not None:
            return _found(s, lam, q, used, seed)

    rng = random.Random(seed)
    remaining = max(trials - len(basis), 0)
    for t in range(remaining):
        width = 3 if t < remaining / 2 else 20
        coeffs = [_draw_coefficient(rng, width) for _ in basis]
        gamma = basis[0].combine(coeffs, basis[1:])
        used += 1
        lam = _solve_functional(gamma, q)
        if lam is not None:
            return _found(gamma, lam, q, used, seed)
    return InvolvementResult(NO_WITNESS_FOUND, trials=used, seed=seed)


def _found(s, lam, q, used, seed):
    result = InvolvementResult(WITNESS_FOUND, s, lam, used, seed)
    if not result.verify(q):
        raise InvariantViolation("witness does not contract to the target quadric")
    return result


def syzygies_contained_in(y: GradedIdeal, z: GradedIdeal) -> bool:
    """True iff every linear syzygy of Y lies in V (x) I_{Z,2}; requires I_{Z,2} in I_{Y,2}."""
    y2, z2 = y.piece(2), z.piece(2)
    if y.context != z.context or not y2.contains_subspace(z2):
        raise NotASubideal("I_{Z,2} is not contained in I_{Y,2}")
    for s in syzygy_basis(y):
        for comp in s.components():
            if not comp.is_zero() and not z2.contains_vector(coordinates(comp)):
                return False
    return True


# -- one-parameter families ---------------------------------------------------------

@dataclass
class ParametricIdeal:
    """Generators whose coefficients are polynomials in one parameter.

    Each generator is ``(degree, {monomial: {param power: coeff}})``.
    """

    context: RingContext
    param: str
    generators: list

    def specialize(self, t) -> GradedIdeal:
        f = self.context.field
        t = f.normalize(t)
        gens = []
        for k, (deg, terms) in enumerate(self.generators):
            out = {}
            for m, coeffs in terms.items():
                c = f.zero
                for power, a in coeffs.items():
                    c = f.add(c, f.mul(a, f.normalize(t ** power) if f.is_rational
                                       else pow(t, power, f.characteristic)))
                if c:
                    out[m] = c
            if not out:
                raise SpecializationError(f"generator {k + 1} vanishes identically at "
                                          f"{self.param} = {f.format(t)}")
            gens.append(Poly(self.context, deg, out))
        return GradedIdeal(self.context, gens)

    @classmethod
    def constant(cls, ideal: GradedIdeal, param: str = "t") -> ParametricIdeal:
        gens = [(g.degree, {m: {0: c} for m, c in g.terms.items()}) for g in ideal.generators]
        return cls(ideal.context, param, gens)


@dataclass
class FamilyRow:
    t: object
    special: bool
    h2: int
    h3: int
    k21: int
    dim_phi: int

    def to_json(self, field) -> dict:
        return {"t": field.format(self.t), "h2": self.h2, "h3": self.h3,
                "k21": self.k21, "dim_phi": self.dim_phi}


@dataclass
class FamilyScan:
    rows: list
    seed: int
    hilbert_constant: bool
    k21_constant: bool
    max_dim_phi: int
    max_random_dim_phi: int | None
    drops: list = dc_field(default_factory=list)

    def consistent_with_semicontinuity(self) -> bool:
        """Every special sample has dim Im(phi) <= the maximum over random samples."""
        if self.max_random_dim_phi is None:
            return True
        return all(r.dim_phi <= self.max_random_dim_phi for r in self.rows if r.special)


def family_rank_scan(family: ParametricIdeal, sample_points, random_samples: int = 0,
                     seed: int = 0) -> FamilyScan:
    """Evaluate h_2, h_3, dim K_{2,1} and dim Im(phi) along sampled parameter values.

    Reports observations only: constancy of the Hilbert values and K_{2,1}
    across samples, and the samples where dim Im(phi) is below the maximum.
    """
    f = family.context.field
    points = [(f.normalize(t), True) for t in sample_points]
    rng = random.Random(seed)
    seen = {t for t, _ in points}
    while len(points) < len(sample_points) + random_samples:
        t = f.normalize(rng.randint(-10**6, 10**6))
        if t not in seen:
            seen.add(t)
            points.append((t, False))
    rows = []
    for t, special in points:
        ideal = family.specialize(t)
        phi = phi_image(ideal)
        rows.append(FamilyRow(t, special, ideal.hilbert_quotient(2), ideal.hilbert_quotient(3),
                              koszul_group_dim(ideal, 2, 1), phi.dim_image))
    max_phi = max((r.dim_phi for r in rows), default=0)
    randoms = [r.dim_phi for r in rows if not r.special]
    return FamilyScan(
        rows=rows,
        seed=seed,
        hilbert_constant=len({(r.h2, r.h3) for r in rows}) <= 1,
        k21_constant=len({r.k21 for r in rows}) <= 1,
        max_dim_phi=max_phi,
        max_random_dim_phi=max(randoms) if randoms else None,
        drops=[r.t for r in rows if r.dim_phi < max_phi],
    )
