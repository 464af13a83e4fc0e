"""Koszul cohomology, Betti tables and second syzygy schemes by exact linear algebra."""

from .graded_ideal import GradedIdeal
from .koszul import BettiTable, betti_table, k_p1_ideal_form, koszul_group_dim, koszul_matrix, np_check
from .linalg import Matrix, Subspace, kernel_basis, rank, rref
from .multipoly import Poly, RingContext, monomial_basis, parse_poly
from .scalars import Field, FieldElement
from .syzygy import (
    ParametricIdeal,
    SyzygyElement,
    contract,
    family_rank_scan,
    involved_quadrics,
    involvement_witness,
    phi_image,
    syz2_verdict,
    syzygies_contained_in,
    syzygy_basis,
)
from .varieties import CatalogSpec, generate

__version__ = "0.1.0"
