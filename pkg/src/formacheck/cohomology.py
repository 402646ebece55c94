"""Degreewise cohomology of the model and the duality checker.

All ranks are computed with exact rational elimination; a degree is
"bijective" only when the induced map has full rank on both sides.  The
verdict never claims anything beyond the configured degree cap.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import GradedAlgebra
from .linalg import MatQ, RowSpace, Vec, kernel_basis, rref
from .model import Model, differential_matrix, monomials_of_degree, phi_tilde


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    model_cohomology_dim: int
    target_dim: int
    induced_map_rank: int
    injective: bool
    surjective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


@dataclass(frozen=True)
class QuasiIsoReport:
    cap: int
    reports: tuple[DegreeReport, ...]
    overall: bool
    first_failure: Optional[int]


def cohomology_basis(model: Model, n: int) -> tuple[int, list[Vec]]:
    """Dimension and representatives of H^n of the model.

    Representatives are kernel vectors of d_n reduced against the RREF of
    the image of d_(n-1) (and against previously chosen representatives),
    with leading coefficient 1: a deterministic basis of the quotient.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    d_out = differential_matrix(model, n)
    cycles = kernel_basis(d_out)
    span = RowSpace(d_out.cols)
    image_rank = 0
    if n > 0:
        d_in = differential_matrix(model, n - 1)
        for j in range(d_in.cols):
            if span.add(tuple(d_in.entries[i][j] for i in range(d_in.rows))) is not None:
                image_rank += 1
    reps = []
    for v in cycles:
        reduced = span.add(v)
        if reduced is not None:
            reps.append(reduced)
    assert len(reps) == len(cycles) - image_rank
    return len(reps), reps


def induced_map(model: Model, h: GradedAlgebra, n: int) -> DegreeReport:
    """Rank of H(phi~) in degree n, with injectivity/surjectivity flags.

    Well defined because phi~ is a cochain map into (H, 0); above the top
    degree of h the target is zero and the check degenerates to "model
    cohomology vanishes".
    """
    dim_model, reps = cohomology_basis(model, n)
    idx = h.degree_indices(n)
    basis_n = monomials_of_degree(model, n)
    columns = []
    for rep in reps:
        combo = {basis_n[i]: c for i, c in enumerate(rep) if c != 0}
        image = phi_tilde(model, h, combo)
        columns.append(tuple(image[k] for k in idx))
    matrix = MatQ.from_rows(
        [[col[i] for col in columns] for i in range(len(idx))], cols=len(columns))
    rank = rref(matrix).rank
    return DegreeReport(
        degree=n,
        model_cohomology_dim=dim_model,
        target_dim=len(idx),
        induced_map_rank=rank,
        injective=rank == dim_model,
        surjective=rank == len(idx),
    )


def verify_quasi_iso(model: Model, h: GradedAlgebra, cap: int,
                     threads: Optional[int] = None) -> QuasiIsoReport:
    """Degreewise comparison of model cohomology with H, for 0 <= n <= cap.

    Degrees are independent work units; `threads` > 1 fans them out over a
    thread pool.  The report is explicitly capped: no claim is made beyond
    the checked range.
    """
    if cap < h.top_degree:
        raise ValueError(
            f"cap {cap} is below the top degree {h.top_degree}; the check would be vacuous")
    degrees = range(cap + 1)
    if threads is not None and threads > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            reports = tuple(pool.map(lambda n: induced_map(model, h, n), degrees))
    else:
        reports = tuple(induced_map(model, h, n) for n in degrees)
    failing = [r.degree for r in reports if not r.bijective]
    return QuasiIsoReport(
        cap=cap,
        reports=reports,
        overall=not failing,
        first_failure=failing[0] if failing else None,
    )


class ChainComplexError(ValueError):
    """Raised when boundary matrices do not square to zero."""

    def __init__(self, degree: int, message: str):
        super().__init__(message)
        self.degree = degree


@dataclass(frozen=True)
class ChainComplexQ:
    """Finite chain complex over Q: dims for C_0..C_N and boundaries
    boundaries[k] = d_(k+1): C_(k+1) -> C_k."""

    dims: tuple[int, ...]
    boundaries: tuple[MatQ, ...]

    def __post_init__(self):
        if len(self.boundaries) != max(len(self.dims) - 1, 0):
            raise ValueError("need exactly one boundary matrix per adjacent pair")
        for k, b in enumerate(self.boundaries):
            if (b.rows, b.cols) != (self.dims[k], self.dims[k + 1]):
                raise ValueError(
                    f"boundary {k + 1} has shape {b.rows}x{b.cols}, "
                    f"expected {self.dims[k]}x{self.dims[k + 1]}")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, n: int) -> MatQ:
        """d_n: C_n -> C_(n-1); zero-shaped outside 1..top."""
        if 1 <= n <= self.top:
            return self.boundaries[n - 1]
        rows = self.dims[n - 1] if 0 <= n - 1 <= self.top else 0
        cols = self.dims[n] if 0 <= n <= self.top else 0
        return MatQ.zeros(rows, cols)


def validate_square_zero(c: ChainComplexQ):
    for n in range(2, c.top + 1):
        if not c.boundary(n - 1).matmul(c.boundary(n)).is_zero():
            raise ChainComplexError(
                n, f"boundary squared is nonzero: d_{n - 1} o d_{n} != 0")


@dataclass(frozen=True)
class DualityRow:
    degree: int
    homology_dim: int
    dual_cohomology_dim: int
    equal: bool


def duality_check(c: ChainComplexQ) -> list[DualityRow]:
    """Homology of c against cohomology of the degreewise dual complex.

    The dual has differentials transpose(d_(n+1)): C^n -> C^(n+1); both
    sides are computed by independent rank eliminations, and over Q they
    must agree in every degree (any inequality is a bug, here or in the
    input construction).
    """
    validate_square_zero(c)
    homology_rank = {n: rref(c.boundary(n)).rank for n in range(1, c.top + 1)}
    dual_rank = {n: rref(c.boundary(n + 1).transpose()).rank for n in range(c.top)}
    rows = []
    for n in range(c.top + 1):
        hom = c.dims[n] - homology_rank.get(n, 0) - homology_rank.get(n + 1, 0)
        coh = c.dims[n] - dual_rank.get(n, 0) - dual_rank.get(n - 1, 0)
        rows.append(DualityRow(n, hom, coh, hom == coh))
    return rows
