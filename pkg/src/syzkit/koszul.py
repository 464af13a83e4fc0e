"""Koszul complexes, Koszul cohomology dimensions and Betti tables.

The differential is

    delta(x_{i1} ^ ... ^ x_{ip} (x) P) = sum_k (-1)^k x_{i1} ^ .. ^ x_{ik}-hat ^ .. (x) x_{ik} P

with k counted from 1, so delta(x_i ^ x_j (x) P) = x_i (x) x_j P - x_j (x) x_i P.

Coordinates on Lambda^p V (x) W_q are slot-major: the index of
(wedge slot J, basis element w) is ``J * dim W_q + w``, wedge slots in
lexicographic order of index tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import comb

from .graded_ideal import GradedIdeal
from .linalg import Matrix, Subspace, check_size, kernel_basis, rank
from .multipoly import monomial_basis, monomial_index

AMBIENT = "Ambient"
IDEAL = "Ideal"
QUOTIENT = "Quotient"


@lru_cache(maxsize=None)
def exterior_basis(n: int, p: int) -> tuple:
    """Strictly increasing index tuples of length p from range(n), lexicographic."""
    if p < 0 or p > n:
        return ()
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def exterior_index(n: int, p: int) -> dict:
    return {J: i for i, J in enumerate(exterior_basis(n, p))}


def wedge_dim(n: int, p: int) -> int:
    return comb(n, p) if 0 <= p <= n else 0


class _Slice:
    """A graded piece W_q used as a Koszul coefficient space.

    ``elements[w]`` is basis element w as a sparse {monomial: coeff} map in
    Sym^q; ``coords(vec)`` maps a sparse degree-q vector to sparse W_q
    coordinates (only meaningful for vectors that lie in W_q).
    """

    def __init__(self, ideal: GradedIdeal, kind: str, q: int):
        self.kind = kind
        self.q = q
        ctx = ideal.context
        f = ctx.field
        self.field = f
        if q < 0:
            self.elements = []
            self.dim = 0
            return
        basis = monomial_basis(ctx, q)
        if kind == AMBIENT:
            self.elements = [{m: f.one} for m in basis]
            self._index = monomial_index(ctx, q)
        elif kind == IDEAL:
            piece = ideal.piece(q)
            self.elements = [{m: c for m, c in zip(basis, row) if c} for row in piece.basis]
            self._pivot_monos = [basis[pc] for pc in piece.pivots]
        elif kind == QUOTIENT:
            piece = ideal.piece(q)
            pivset = set(piece.pivots)
            standard = [j for j in range(len(basis)) if j not in pivset]
            std_pos = {j: k for k, j in enumerate(standard)}
            self.elements = [{basis[j]: f.one} for j in standard]
            # normal form of each monomial in standard-monomial coordinates
            nf = {}
            for j, m in enumerate(basis):
                if j in std_pos:
                    nf[m] = {std_pos[j]: f.one}
            for row, pc in zip(piece.basis, piece.pivots):
                nf[basis[pc]] = {std_pos[j]: f.neg(c) for j, c in enumerate(row)
                                 if c and j != pc}
            self._nf = nf
        else:
            raise ValueError(f"unknown slice kind {kind!r}")
        self.dim = len(self.elements)

    def coords(self, vec: dict) -> dict:
        f = self.field
        out = {}
        if self.kind == AMBIENT:
            for m, c in vec.items():
                out[self._index[m]] = c
        elif self.kind == IDEAL:
            for k, m in enumerate(self._pivot_monos):
                c = vec.get(m)
                if c:
                    out[k] = c
        else:
            for m, c in vec.items():
                for k, v in self._nf[m].items():
                    out[k] = f.add(out[k], f.mul(c, v)) if k in out else f.mul(c, v)
        return {k: v for k, v in out.items() if v}


def _differential(ideal: GradedIdeal, p: int, source: _Slice, target: _Slice) -> Matrix:
    n = ideal.num_vars
    f = ideal.field
    src_wedges = exterior_basis(n, p)
    tgt_index = exterior_index(n, p - 1)
    nrows = wedge_dim(n, p - 1) * target.dim
    ncols = len(src_wedges) * source.dim
    check_size(nrows, ncols, f"Koszul differential ({p})")
    zero = f.zero
    rows = [[zero] * ncols for _ in range(nrows)]
    if nrows == 0 or ncols == 0:
        return Matrix._raw(f, rows, ncols)
    minus_one = f.neg(f.one)
    for ji, J in enumerate(src_wedges):
        for pos, var in enumerate(J):
            sign = f.one if pos % 2 else minus_one
            K = J[:pos] + J[pos + 1:]
            row_base = tgt_index[K] * target.dim
            for w, elem in enumerate(source.elements):
                shifted = {}
                for m, c in elem.items():
                    shifted[m[:var] + (m[var] + 1,) + m[var + 1:]] = c
                col = ji * source.dim + w
                for k, c in target.coords(shifted).items():
                    r = rows[row_base + k]
                    r[col] = f.add(r[col], f.mul(sign, c))
    return Matrix._raw(f, rows, ncols)


def koszul_matrix(p: int, q: int, kind: str, ideal: GradedIdeal) -> Matrix:
    """Matrix of delta_{p,q}: Lambda^p V (x) W_q -> Lambda^{p-1} V (x) W_{q+1}.

    W is Sym (Ambient), the ideal pieces (Ideal) or the quotient ring with
    standard monomials as coset representatives (Quotient).
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    return _differential(ideal, p, _Slice(ideal, kind, q), _Slice(ideal, kind, q + 1))


def koszul_group_dim(ideal: GradedIdeal, p: int, q: int) -> int:
    """dim K_{p,q} of the coordinate ring Sym(V)/I."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    n = ideal.num_vars
    if p > n:
        return 0
    outgoing = koszul_matrix(p, q, QUOTIENT, ideal)
    kernel = outgoing.ncols - (rank(outgoing) if p > 0 else 0)
    if q == 0 or p + 1 > n:
        return kernel
    incoming = koszul_matrix(p + 1, q - 1, QUOTIENT, ideal)
    return kernel - rank(incoming)


def ideal_form_matrix(ideal: GradedIdeal, p: int) -> Matrix:
    """Lambda^{p-1} V (x) I_2 -> Lambda^{p-2} V (x) Sym^3, columns indexed by (slot, I_2 RREF row)."""
    return _differential(ideal, p - 1, _Slice(ideal, IDEAL, 2), _Slice(ideal, AMBIENT, 3))


def k_p1_ideal_form(ideal: GradedIdeal, p: int) -> Subspace:
    """K_{p,1} realised as ker(Lambda^{p-1} V (x) I_2 -> Lambda^{p-2} V (x) I_3)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return kernel_basis(ideal_form_matrix(ideal, p))


# -- sparse tensor helpers --------------------------------------------------------

def tensor_to_vector(ideal: GradedIdeal, p: int, q: int, tensor: dict) -> list:
    """Dense Ambient coordinates of {(wedge tuple, monomial): coeff}."""
    n = ideal.num_vars
    f = ideal.field
    widx = exterior_index(n, p)
    midx = monomial_index(ideal.context, q)
    dimq = len(midx)
    v = [f.zero] * (wedge_dim(n, p) * dimq)
    for (J, m), c in tensor.items():
        k = widx[tuple(J)] * dimq + midx[tuple(m)]
        v[k] = f.add(v[k], f.normalize(c))
    return v


def vector_to_tensor(ideal: GradedIdeal, p: int, q: int, v) -> dict:
    n = ideal.num_vars
    basis = monomial_basis(ideal.context, q)
    dimq = len(basis)
    wedges = exterior_basis(n, p)
    return {(wedges[k // dimq], basis[k % dimq]): c for k, c in enumerate(v) if c}


def apply_differential(ideal: GradedIdeal, p: int, q: int, tensor: dict) -> dict:
    """delta_{p,q} on a sparse Ambient tensor, via koszul_matrix."""
    m = koszul_matrix(p, q, AMBIENT, ideal)
    return vector_to_tensor(ideal, p - 1, q + 1, m.apply(tensor_to_vector(ideal, p, q, tensor)))


# -- Betti tables and (N_p) ---------------------------------------------------------

@dataclass
class BettiTable:
    """dim K_{p,q} for 0 <= p <= pmax, 0 <= q <= qmax; missing keys mean not computed."""

    pmax: int
    qmax: int
    entries: dict = dc_field(default_factory=dict)

    def __getitem__(self, pq):
        return self.entries[pq]

    def to_json(self) -> dict:
        return {
            "pmax": self.pmax,
            "qmax": self.qmax,
            "entries": [{"p": p, "q": q, "dim": d} for (p, q), d in sorted(self.entries.items())],
        }

    def format(self) -> str:
        ps = range(self.pmax + 1)
        width = max([len(str(d)) for d in self.entries.values()] + [1])
        head = "       " + " ".join(str(p).rjust(width) for p in ps)
        totals = [sum(d for (pp, _), d in self.entries.items() if pp == p) for p in ps]
        lines = [head, "total: " + " ".join(str(t).rjust(width) for t in totals)]
        for q in range(self.qmax + 1):
            cells = []
            for p in ps:
                d = self.entries.get((p, q))
                cells.append(("?" if d is None else "." if d == 0 else str(d)).rjust(width))
            lines.append(f"{q:>5}: " + " ".join(cells))
        return "\n".join(lines)


def betti_table(ideal: GradedIdeal, pmax: int, qmax: int) -> BettiTable:
    if pmax < 1 or qmax < 1:
        raise ValueError("pmax and qmax must be at least 1")
    table = BettiTable(pmax, qmax)
    for p in range(pmax + 1):
        for q in range(qmax + 1):
            table.entries[(p, q)] = koszul_group_dim(ideal, p, q)
    return table


@dataclass
class NpResult:
    p: int
    qmax: int
    quadratic_generation: bool
    checked: dict
    failures: list

    @property
    def holds(self) -> bool:
        return self.quadratic_generation and not self.failures

    @property
    def fails_at(self):
        return self.failures[0] if self.failures else None

    def describe(self) -> str:
        window = f"checked K_(i,q) for 1 <= i <= {self.p}, 2 <= q <= {self.qmax}"
        if self.holds:
            return f"(N_{self.p}) holds up to q={self.qmax} ({window}; not a certificate for all q)"
        if not self.failures:
            return f"(N_{self.p}) fails: ideal not generated by quadrics in degree 3 ({window})"
        i, q = self.fails_at
        return (f"(N_{self.p}) fails at (i,q)=({i},{q}): "
                f"dim K_({i},{q}) = {self.checked[(i, q)]} ({window})")


def np_check(ideal: GradedIdeal, p: int, qmax: int = 3) -> NpResult:
    """Check K_{i,q} = 0 for 1 <= i <= p, 2 <= q <= qmax plus I_3 = V * I_2."""
    if p < 1 or qmax < 2:
        raise ValueError("need p >= 1 and qmax >= 2")
    checked = {}
    failures = []
    for i in range(1, p + 1):
        for q in range(2, qmax + 1):
            d = koszul_group_dim(ideal, i, q)
            checked[(i, q)] = d
            if d:
                failures.append((i, q))
    generated = ideal.generation_check(2)
    return NpResult(p, qmax, generated, checked, failures)
