"""Catalog of test varieties given by explicit generators."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenerationFailed, NotSkew
from .graded_ideal import GradedIdeal
from .multipoly import Poly, RingContext, monomial_basis, parse_poly
from .scalars import Field
from .syzygy import SyzygyElement

TWISTED_CUBIC = "TwistedCubic"
RNC = "RNC"
SCROLL = "Scroll"
VERONESE = "Veronese"
HYPERELLIPTIC_G2 = "HyperellipticG2"
ELLIPTIC_QUINTIC = "EllipticQuintic"

RESAMPLE_BUDGET = 100


@dataclass(frozen=True)
class CatalogSpec:
    kind: str
    params: tuple = ()
    seed: int = 0

    def __post_init__(self):
        if self.kind == RNC and (len(self.params) != 1 or self.params[0] < 2):
            raise ValueError("RNC needs a degree d >= 2")
        if self.kind == SCROLL and (len(self.params) != 2 or min(self.params) < 1):
            raise ValueError("Scroll needs e1, e2 >= 1")
        if self.seed < 0:
            raise ValueError("seeds are non-negative")
        if self.kind not in (TWISTED_CUBIC, RNC, SCROLL, VERONESE, HYPERELLIPTIC_G2,
                             ELLIPTIC_QUINTIC):
            raise ValueError(f"unknown catalog kind {self.kind!r}")

    @property
    def name(self) -> str:
        if self.kind == TWISTED_CUBIC:
            return "twisted-cubic"
        if self.kind == RNC:
            return f"rnc:{self.params[0]}"
        if self.kind == SCROLL:
            return f"scroll:{self.params[0]},{self.params[1]}"
        if self.kind == VERONESE:
            return "veronese"
        if self.kind == HYPERELLIPTIC_G2:
            return "hyperelliptic-g2"
        return "elliptic-quintic"


def parse_catalog_name(name: str, seed: int = 0) -> CatalogSpec:
    """``twisted-cubic``, ``rnc:D``, ``scroll:E1,E2``, ``veronese``,
    ``hyperelliptic-g2`` or ``elliptic-quintic``."""
    n = name.strip().lower()
    if n == "twisted-cubic":
        return CatalogSpec(TWISTED_CUBIC, seed=seed)
    if m := re.fullmatch(r"rnc:?(\d+)", n):
        return CatalogSpec(RNC, (int(m.group(1)),), seed=seed)
    if m := re.fullmatch(r"scroll:?(\d+),(\d+)", n):
        return CatalogSpec(SCROLL, (int(m.group(1)), int(m.group(2))), seed=seed)
    if n == "veronese":
        return CatalogSpec(VERONESE, seed=seed)
    if n in ("hyperelliptic-g2", "hyperell-g2"):
        return CatalogSpec(HYPERELLIPTIC_G2, seed=seed)
    if n == "elliptic-quintic":
        return CatalogSpec(ELLIPTIC_QUINTIC, seed=seed)
    raise ValueError(f"unknown catalog variety {name!r}")


@dataclass
class CatalogVariety:
    spec: CatalogSpec
    ideal: GradedIdeal
    gamma: dict | None = None
    syzygy: SyzygyElement | None = None


def two_by_two_minors(top, bottom) -> list:
    """All 2x2 minors top[i]*bottom[j] - top[j]*bottom[i], i < j."""
    out = []
    for i in range(len(top)):
        for j in range(i + 1, len(top)):
            out.append(top[i] * bottom[j] - top[j] * bottom[i])
    return out


def pfaffian_4x4(m, idx=(0, 1, 2, 3)):
    a, b, c, d = idx
    return m[a][b] * m[c][d] - m[a][c] * m[b][d] + m[a][d] * m[b][c]


def pfaffians(m) -> list:
    """The five signed principal 4x4 Pfaffians of a 5x5 skew matrix of linear forms.

    Pf_i is the Pfaffian with row and column i removed, times (-1)^i.
    """
    if len(m) != 5 or any(len(r) != 5 for r in m):
        raise NotSkew("need a 5x5 matrix")
    for i in range(5):
        if not m[i][i].is_zero():
            raise NotSkew(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, 5):
            if m[i][j] != -m[j][i]:
                raise NotSkew(f"entries ({i},{j}) and ({j},{i}) are not opposite")
    out = []
    for i in range(5):
        rest = tuple(k for k in range(5) if k != i)
        pf = pfaffian_4x4(m, rest)
        out.append(-pf if i % 2 else pf)
    return out


def _rnc(ctx: RingContext, d: int) -> list:
    x = [ctx.variable(i) for i in range(d + 1)]
    return two_by_two_minors(x[:d], x[1:])


def _scroll(ctx: RingContext, e1: int, e2: int) -> list:
    x = [ctx.variable(i) for i in range(e1 + e2 + 2)]
    top = x[0:e1] + x[e1 + 1:e1 + 1 + e2]
    bottom = x[1:e1 + 1] + x[e1 + 2:e1 + 2 + e2]
    return two_by_two_minors(top, bottom)


def _veronese(ctx: RingContext) -> list:
    x = [ctx.variable(i) for i in range(6)]
    sym = [[x[0], x[1], x[2]], [x[1], x[3], x[4]], [x[2], x[4], x[5]]]
    out = []
    for r1, r2 in ((0, 1), (0, 2), (1, 2)):
        for c1, c2 in ((0, 1), (0, 2), (1, 2)):
            out.append(sym[r1][c1] * sym[r2][c2] - sym[r1][c2] * sym[r2][c1])
    # the symmetric matrix has only six distinct minors up to sign
    unique = []
    for q in out:
        if not any(q == u or q == -u for u in unique):
            unique.append(q)
    return unique


def _twisted_cubic(ctx: RingContext):
    q01 = parse_poly("x0*x2 - x1^2", ctx)
    q02 = parse_poly("x0*x3 - x1*x2", ctx)
    q12 = parse_poly("x1*x3 - x2^2", ctx)
    return q01, q02, q12


def reference_gamma(ctx: RingContext) -> dict:
    """The element of Lambda^2 V (x) V whose image is x0 (x) Q12 - x1 (x) Q02 + x2 (x) Q01."""
    f = ctx.field

    def mono(i):
        e = [0] * ctx.num_vars
        e[i] = 1
        return tuple(e)

    half = f.normalize(Fraction(1, 2))
    return {
        ((0, 1), mono(3)): half,
        ((0, 2), mono(2)): f.normalize(-1),
        ((0, 3), mono(1)): half,
        ((1, 2), mono(1)): f.one,
        ((1, 3), mono(0)): f.neg(half),
    }


def _has_hilbert(ideal: GradedIdeal, expected) -> bool:
    return all(ideal.hilbert_quotient(t) == expected(t) for t in range(1, 5))


def _random_linear_form(ctx: RingContext, rng: random.Random, width: int) -> Poly:
    basis = monomial_basis(ctx, 1)
    return Poly(ctx, 1, {m: ctx.field.normalize(rng.randint(-width, width)) for m in basis})


def _hyperelliptic(ctx: RingContext, seed: int) -> GradedIdeal:
    scroll = _scroll(ctx, 1, 2)
    rng = random.Random(seed)
    basis = monomial_basis(ctx, 2)
    for _ in range(RESAMPLE_BUDGET):
        extra = Poly(ctx, 2, {m: ctx.field.normalize(rng.randint(-3, 3)) for m in basis})
        if extra.is_zero():
            continue
        ideal = GradedIdeal(ctx, scroll + [extra])
        if _has_hilbert(ideal, lambda t: 6 * t - 1):
            return ideal
    raise GenerationFailed(f"no genus-2 sextic found within {RESAMPLE_BUDGET} samples")


def _elliptic_quintic(ctx: RingContext, seed: int) -> GradedIdeal:
    rng = random.Random(seed)
    for _ in range(RESAMPLE_BUDGET):
        m = [[ctx.zero(1) for _ in range(5)] for _ in range(5)]
        for i in range(5):
            for j in range(i + 1, 5):
                form = _random_linear_form(ctx, rng, 2)
                m[i][j] = form
                m[j][i] = -form
        gens = [q for q in pfaffians(m) if not q.is_zero()]
        if len(gens) != 5:
            continue
        ideal = GradedIdeal(ctx, gens)
        if ideal.piece(2).dim == 5 and _has_hilbert(ideal, lambda t: 5 * t):
            return ideal
    raise GenerationFailed(f"no elliptic quintic found within {RESAMPLE_BUDGET} samples")


def generate(spec: CatalogSpec, field: Field | None = None) -> CatalogVariety:
    field = field or Field.rationals()
    kind = spec.kind
    if kind == TWISTED_CUBIC:
        ctx = RingContext(4, field)
        q01, q02, q12 = _twisted_cubic(ctx)
        ideal = GradedIdeal(ctx, [q01, q02, q12])
        syz = SyzygyElement.from_components(ideal, [q12, -q02, q01, ctx.zero(2)])
        return CatalogVariety(spec, ideal, reference_gamma(ctx), syz)
    if kind == RNC:
        d = spec.params[0]
        ctx = RingContext(d + 1, field)
        return CatalogVariety(spec, GradedIdeal(ctx, _rnc(ctx, d)))
    if kind == SCROLL:
        e1, e2 = spec.params
        ctx = RingContext(e1 + e2 + 2, field)
        return CatalogVariety(spec, GradedIdeal(ctx, _scroll(ctx, e1, e2)))
    if kind == VERONESE:
        ctx = RingContext(6, field)
        return CatalogVariety(spec, GradedIdeal(ctx, _veronese(ctx)))
    if kind == HYPERELLIPTIC_G2:
        ctx = RingContext(5, field)
        return CatalogVariety(spec, _hyperelliptic(ctx, spec.seed))
    ctx = RingContext(5, field)
    return CatalogVariety(spec, _elliptic_quintic(ctx, spec.seed))


def twisted_cubic(field: Field | None = None) -> CatalogVariety:
    return generate(CatalogSpec(TWISTED_CUBIC), field)


def rational_normal_curve(d: int, field: Field | None = None) -> CatalogVariety:
    return generate(CatalogSpec(RNC, (d,)), field)


def scroll(e1: int = 1, e2: int = 2, field: Field | None = None) -> CatalogVariety:
    return generate(CatalogSpec(SCROLL, (e1, e2)), field)


def veronese(field: Field | None = None) -> CatalogVariety:
    return generate(CatalogSpec(VERONESE), field)


def hyperelliptic_g2(seed: int = 0, field: Field | None = None) -> CatalogVariety:
    return generate(CatalogSpec(HYPERELLIPTIC_G2, seed=seed), field)


def elliptic_quintic(seed: int = 0, field: Field | None = None) -> CatalogVariety:
    return generate(CatalogSpec(ELLIPTIC_QUINTIC, seed=seed), field)
