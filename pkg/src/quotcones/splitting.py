"""Splitting types of kernels and cokernels of graded matrices on the line.

Every vector bundle on the line is a direct sum of twists; this module
recovers those twists from explicit polynomial matrices by pure field-level
rank computations.  The key device is the twist-nullity profile: for a
column-graded presentation phi of a quotient sheaf, nu(e) counts the
independent row covectors of forms of degree e annihilating phi.  Such
covectors are exactly the maps out of the quotient into a degree-e twist, so
first differences of nu read off the torsion-free summand degrees, and the
degree deficit against sum(colDegs) is the torsion length.  Torsion is
invisible to nu by design and is pinned down by degree conservation plus the
gcd-of-minors test.

Membership tests here implement the open-locus conditions (unbalancedness,
scroll degeneracy, directrix incidence, non-reduced torsion support); points
of the boundary of the closures are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .cones import QuotParams
from .errors import (
    DegenerateInput,
    DirectrixUndefined,
    InternalInconsistency,
    NotInjective,
    NotSurjective,
    ShapeError,
)
from .fields import field_from_json
from .forms import BinaryForm, bf_discriminant, bf_gcd
from .polymatrix import (
    PolyMatrix,
    RowPolyMatrix,
    generic_rank,
    is_generically_injective,
    is_generically_surjective,
    maximal_minors,
    polymat_det,
)


@dataclass(frozen=True)
class SplittingType:
    """Multiset of line-bundle degrees plus a torsion length.

    For quotients of the trivial bundle the degrees are the twists of the
    locally free part (all >= 0) and sum(degrees) + torsion = sum(colDegs).
    For kernels the degrees are the a_i of a sum of O(-a_i); torsion is 0.
    """

    degrees: tuple
    torsion: int

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def is_balanced(self) -> bool:
        return bool(self.degrees) and max(self.degrees) - min(self.degrees) <= 1


@dataclass(frozen=True)
class LinearSubspace:
    """Basis of the cone over a fixed linear subspace of the ambient space."""

    field: object
    vectors: tuple

    def __post_init__(self):
        if not self.vectors:
            raise ShapeError("subspace needs at least one basis vector")
        n = len(self.vectors[0])
        if any(len(v) != n for v in self.vectors):
            raise ShapeError("basis vectors have mixed lengths")
        if not 1 <= len(self.vectors) <= n - 1:
            raise ShapeError("basis size must be between 1 and n - 1")
        if linalg.rank(self.field, [list(v) for v in self.vectors]) != len(self.vectors):
            raise ShapeError("basis vectors are linearly dependent")

    @classmethod
    def build(cls, field, vectors) -> "LinearSubspace":
        return cls(field, tuple(tuple(field.coerce(c) for c in v) for v in vectors))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def ambient(self) -> int:
        return len(self.vectors[0])

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "field": self.field.to_json(),
            "vectors": [[fmt(c) for c in v] for v in self.vectors],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LinearSubspace":
        field = field_from_json(obj["field"])
        return cls.build(field, [[field.parse_scalar(c) for c in v] for v in obj["vectors"]])


def annihilator_system(entries, col_degs, e: int, zeros):
    """Scalar rows of the linear system f * phi = 0.

    Unknowns are the n*(e+1) coefficients f_{i,t2} of a row covector of
    forms of degree e; for each column j and each output coefficient
    t in 0..colDegs[j]+e there is one equation.  ``zeros[j]`` supplies a
    correctly graded zero for slots outside a column's coefficient range,
    which keeps the same builder usable for the parameter families.
    """
    n = len(entries)
    rows = []
    for j, m in enumerate(col_degs):
        zj = zeros[j]
        for t in range(m + e + 1):
            row = []
            for i in range(n):
                coeffs = entries[i][j].coeffs
                for t2 in range(e + 1):
                    t1 = t - t2
                    row.append(coeffs[t1] if 0 <= t1 <= m else zj)
            rows.append(row)
    return rows


def kernel_system(entries, row_degs, t: int, zeros):
    """Scalar rows of the linear system psi * g = 0 for a column vector g of
    forms of degree t; one equation per row i and output coefficient."""
    ncols = len(entries[0])
    rows = []
    for i, deg in enumerate(row_degs):
        zi = zeros[i]
        for tp in range(deg + t + 1):
            row = []
            for c in range(ncols):
                coeffs = entries[i][c].coeffs
                for t2 in range(t + 1):
                    t1 = tp - t2
                    row.append(coeffs[t1] if 0 <= t1 <= deg else zi)
            rows.append(row)
    return rows


def left_nullity(phi: PolyMatrix, e: int) -> int:
    """Dimension of the degree-e row covectors annihilating phi."""
    if e < 0:
        raise DegenerateInput("twist must be nonnegative")
    zeros = [phi.field.zero()] * phi.ncols
    rows = annihilator_system(phi.entries, phi.col_degs, e, zeros)
    return linalg.nullity(phi.field, rows)


def right_nullity(psi: RowPolyMatrix, t: int) -> int:
    """Dimension of the degree-t column vectors in the kernel of psi."""
    if t < 0:
        raise DegenerateInput("twist must be nonnegative")
    zeros = [psi.field.zero()] * psi.nrows
    rows = kernel_system(psi.entries, psi.row_degs, t, zeros)
    return linalg.nullity(psi.field, rows)


def _degrees_from_profile(profile, rank: int, label: str):
    degrees = []
    prev_nu, prev_count = 0, 0
    for e, nu in enumerate(profile):
        count = nu - prev_nu
        mult = count - prev_count
        if mult < 0 or count > rank:
            raise InternalInconsistency(f"{label}: twist-nullity profile {profile} is not monotone")
        degrees.extend([e] * mult)
        prev_nu, prev_count = nu, count
    if prev_count != rank:
        raise InternalInconsistency(
            f"{label}: profile {profile} accounts for {prev_count} of {rank} summands"
        )
    return degrees


def quotient_splitting(phi: PolyMatrix) -> SplittingType:
    """Splitting type (summand degrees, torsion length) of coker(phi).

    nu(e) counts maps from the quotient to the degree-e twist, so
    delta nu(e) = #{summands of degree <= e}; scanning e = 0..sum(colDegs)
    determines the multiset completely, and the degree deficit is the
    torsion length.
    """
    if not is_generically_injective(phi):
        raise NotInjective("matrix is not generically injective")
    total = phi.total_degree
    r = phi.nrows - phi.ncols
    profile = [left_nullity(phi, e) for e in range(total + 1)]
    degrees = _degrees_from_profile(profile, r, "quotient_splitting")
    tau = total - sum(degrees)
    if tau < 0:
        raise InternalInconsistency(f"negative torsion length {tau}")
    return SplittingType(tuple(degrees), tau)


def kernel_splitting(psi: RowPolyMatrix) -> SplittingType:
    """Splitting type of ker(psi) as a sum of O(-a_i); torsion is 0.

    The twist profile t -> right_nullity(psi, t) has first differences
    #{a_i <= t}, and every a_i lies in [0, sum(rowDegs)].
    """
    if not is_generically_surjective(psi):
        raise NotSurjective("matrix is not generically surjective")
    total = psi.total_degree
    k_rank = psi.ncols - psi.nrows
    profile = [right_nullity(psi, t) for t in range(total + 1)]
    degrees = _degrees_from_profile(profile, k_rank, "kernel_splitting")
    return SplittingType(tuple(degrees), 0)


def is_locally_free(phi: PolyMatrix) -> bool:
    """True iff coker(phi) is a vector bundle: the gcd of all maximal minors
    is constant (equivalently the torsion length is 0)."""
    if not is_generically_injective(phi):
        raise NotInjective("matrix is not generically injective")
    gcd = None
    for minor in maximal_minors(phi):
        if not minor:
            continue
        gcd = minor if gcd is None else bf_gcd(gcd, minor)
        if gcd.degree == 0:
            return True
    if gcd is None:
        raise InternalInconsistency("generically injective matrix with all minors zero")
    return gcd.degree == 0


def is_unbalanced(s: SplittingType, vector_part_only: bool = False) -> bool:
    """True iff the summand degrees spread by at least 2.

    Callers must opt in explicitly to judge only the vector part of a
    quotient with torsion.
    """
    if not s.degrees:
        raise DegenerateInput("empty degree multiset")
    if s.torsion and not vector_part_only:
        raise DegenerateInput("torsion present; pass vector_part_only=True to judge the bundle part")
    return max(s.degrees) - min(s.degrees) >= 2


def scroll_degenerate(phi: PolyMatrix) -> bool:
    """True iff the image scroll of the presented subsheaf lies in a
    hyperplane: some constant covector annihilates phi."""
    if not is_generically_injective(phi):
        raise NotInjective("matrix is not generically injective")
    return left_nullity(phi, 0) > 0


def criterion_matrix(phi: PolyMatrix, params: QuotParams | None = None):
    """The square coefficient matrix of the twisted-annihilator system.

    With r = n - k dividing d = sum(colDegs), the system f * phi = 0 at
    twist d/r - 1 has n*d/r unknowns and equally many equations; its
    determinant vanishes exactly when the (locally free) quotient is
    unbalanced.
    """
    n, k = phi.nrows, phi.ncols
    d = phi.total_degree
    r = n - k
    if params is not None and (params.n, params.r, params.d) != (n, r, d):
        raise ShapeError(f"params {params} do not match a {n} x {k} matrix of total degree {d}")
    if r < 1 or d % r != 0:
        raise ShapeError(f"criterion matrix needs r >= 1 dividing d, got r={r}, d={d}")
    d2 = d // r
    zeros = [phi.field.zero()] * k
    rows = annihilator_system(phi.entries, phi.col_degs, d2 - 1, zeros)
    if len(rows) != n * d2:
        raise InternalInconsistency("criterion system is not square")
    return rows


def criterion_det(phi: PolyMatrix, params: QuotParams | None = None):
    """Determinant of the criterion matrix; zero iff left_nullity(phi, d/r - 1) > 0."""
    return linalg.det(phi.field, criterion_matrix(phi, params))


def torsion_support_distinct(phi: PolyMatrix) -> bool:
    """For a square presentation of a torsion quotient: true iff the support
    consists of deg-many distinct points, i.e. disc(det phi) != 0."""
    if phi.nrows != phi.ncols:
        raise ShapeError("torsion support test needs a square matrix")
    if phi.total_degree < 2:
        raise DegenerateInput("support multiplicity needs total degree >= 2")
    det = polymat_det(phi)
    if not det:
        raise NotInjective("determinant vanishes identically")
    return bool(bf_discriminant(det))


def directrix_meets(cols: PolyMatrix, lam: LinearSubspace) -> bool:
    """Incidence of the directrix scroll with a fixed linear subspace.

    ``cols`` holds the minimal-twist columns of the presentation (all of one
    degree d1 >= 1); ``lam`` must have linear dimension n - 1 - #cols.  The
    fiber of the directrix meets the subspace at some point of the line iff
    the n x (n-1) matrix [cols | basis of lam] drops rank somewhere, iff the
    gcd of its maximal minors is nonconstant.
    """
    n, ell = cols.nrows, cols.ncols
    if lam.ambient != n:
        raise ShapeError(f"subspace lives in dimension {lam.ambient}, matrix in {n}")
    if len(set(cols.col_degs)) != 1:
        raise ShapeError("directrix columns must share one degree")
    if cols.col_degs[0] < 1:
        raise DirectrixUndefined("directrix columns of degree 0 give a constant scroll")
    if lam.dim != n - 1 - ell:
        raise ShapeError(f"subspace dimension {lam.dim}, expected {n - 1 - ell}")
    if generic_rank(cols) < ell:
        raise DirectrixUndefined("column span drops rank generically")
    combined = []
    for i in range(n):
        row = list(cols.entries[i])
        for v in lam.vectors:
            row.append(BinaryForm(0, (v[i],)))
        combined.append(row)
    degs = tuple(cols.col_degs) + (0,) * lam.dim
    big = PolyMatrix.build(cols.field, degs, combined)
    gcd = None
    for skip in range(n):
        minor = polymat_det(big.submatrix_rows([i for i in range(n) if i != skip]))
        if not minor:
            continue
        gcd = minor if gcd is None else bf_gcd(gcd, minor)
        if gcd.degree == 0:
            return False
    if gcd is None:
        # Rank < n-1 at every point: the fibers meet the subspace everywhere.
        return True
    return gcd.degree > 0
