"""Graded matrices of binary forms and their exact determinants.

``PolyMatrix`` is the column-graded artifact: an n x k matrix whose entry
(i, j) is zero or homogeneous of degree exactly colDegs[j].  It presents a
map from a direct sum of twisted line bundles into the trivial rank-n bundle
and is the JSON-serializable object the CLI consumes.  ``RowPolyMatrix`` is
the row-graded mirror presenting a surjection onto a sum of line bundles; it
is kept separate so the two kernel computations stay independent of each
other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .errors import ShapeError, UnsupportedRegime
from .fields import PrimeField, field_from_json
from .forms import BinaryForm


def _validate_grid(field, entries, degs, by_column: bool):
    for i, row in enumerate(entries):
        for j, form in enumerate(row):
            want = degs[j] if by_column else degs[i]
            if not isinstance(form, BinaryForm):
                raise ShapeError(f"entry ({i}, {j}) is not a BinaryForm")
            if form.degree != want:
                raise ShapeError(
                    f"entry ({i}, {j}) has degree {form.degree}, expected {want}"
                )
            for c in form.coeffs:
                field.coerce(c)


@dataclass(frozen=True)
class PolyMatrix:
    """Column-graded n x k matrix of binary forms over one field."""

    field: object
    nrows: int
    ncols: int
    col_degs: tuple
    entries: tuple

    def __post_init__(self):
        if self.nrows < 1 or self.ncols < 1:
            raise ShapeError("matrix needs at least one row and one column")
        if len(self.col_degs) != self.ncols or any(d < 0 for d in self.col_degs):
            raise ShapeError("column degrees must be nonnegative, one per column")
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise ShapeError("entry grid does not match declared shape")
        _validate_grid(self.field, self.entries, self.col_degs, by_column=True)

    @classmethod
    def build(cls, field, col_degs, entries) -> "PolyMatrix":
        entries = tuple(tuple(row) for row in entries)
        return cls(field, len(entries), len(col_degs), tuple(col_degs), entries)

    @property
    def total_degree(self) -> int:
        return sum(self.col_degs)

    def entry(self, i: int, j: int) -> BinaryForm:
        return self.entries[i][j]

    def evaluate(self, x0, y0):
        """Scalar matrix of all entries evaluated at the point (x0 : y0)."""
        return [[f.evaluate(x0, y0) for f in row] for row in self.entries]

    def transpose_rows(self) -> "RowPolyMatrix":
        """Row-graded transpose: column degrees become row degrees."""
        flipped = tuple(
            tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols)
        )
        return RowPolyMatrix(self.field, self.ncols, self.nrows, self.col_degs, flipped)

    def submatrix_rows(self, rows) -> "PolyMatrix":
        picked = tuple(self.entries[i] for i in rows)
        return PolyMatrix(self.field, len(picked), self.ncols, self.col_degs, picked)

    def to_json(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "field": self.field.to_json(),
            "n": self.nrows,
            "k": self.ncols,
            "colDegs": list(self.col_degs),
            "entries": [[[fmt(c) for c in f.coeffs] for f in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PolyMatrix":
        field = field_from_json(obj["field"])
        degs = tuple(int(d) for d in obj["colDegs"])
        entries = []
        for row in obj["entries"]:
            forms = []
            for j, coeffs in enumerate(row):
                forms.append(BinaryForm(degs[j], [field.parse_scalar(c) for c in coeffs]))
            entries.append(tuple(forms))
        return cls(field, int(obj["n"]), int(obj["k"]), degs, tuple(entries))


@dataclass(frozen=True)
class RowPolyMatrix:
    """Row-graded r x n matrix: entry (i, j) is zero or of degree rowDegs[i]."""

    field: object
    nrows: int
    ncols: int
    row_degs: tuple
    entries: tuple

    def __post_init__(self):
        if self.nrows < 1 or self.ncols < 1:
            raise ShapeError("matrix needs at least one row and one column")
        if len(self.row_degs) != self.nrows or any(d < 0 for d in self.row_degs):
            raise ShapeError("row degrees must be nonnegative, one per row")
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise ShapeError("entry grid does not match declared shape")
        _validate_grid(self.field, self.entries, self.row_degs, by_column=False)

    @classmethod
    def build(cls, field, row_degs, entries) -> "RowPolyMatrix":
        entries = tuple(tuple(row) for row in entries)
        return cls(field, len(entries), len(entries[0]), tuple(row_degs), entries)

    @property
    def total_degree(self) -> int:
        return sum(self.row_degs)

    def evaluate(self, x0, y0):
        return [[f.evaluate(x0, y0) for f in row] for row in self.entries]


def _eval_points(field, count: int):
    if isinstance(field, PrimeField) and field.p < count:
        raise UnsupportedRegime(
            f"prime {field.p} too small for {count} distinct evaluation points"
        )
    one = field.one()
    return [(field.from_int(t), one) for t in range(count)]


def generic_rank(matrix) -> int:
    """Rank over the function field of the line.

    Every maximal minor is a form of degree at most the total grading degree
    D, so the maximum scalar rank over any D + 1 distinct points already
    equals the generic rank; no symbolic elimination is needed.
    """
    best = 0
    cap = min(matrix.nrows, matrix.ncols)
    for x0, y0 in _eval_points(matrix.field, matrix.total_degree + 1):
        best = max(best, linalg.rank(matrix.field, matrix.evaluate(x0, y0)))
        if best == cap:
            break
    return best


def is_generically_injective(phi: PolyMatrix) -> bool:
    return generic_rank(phi) == phi.ncols


def is_generically_surjective(psi: RowPolyMatrix) -> bool:
    return generic_rank(psi) == psi.nrows


def polymat_det(matrix: PolyMatrix) -> BinaryForm:
    """Determinant of a square column-graded matrix.

    Homogeneous of degree sum(colDegs) by the grading; computed division-free
    so it works verbatim for nested coefficients in the family modules.
    """
    if matrix.nrows != matrix.ncols:
        raise ShapeError(f"determinant of a {matrix.nrows} x {matrix.ncols} matrix")
    res = linalg.ring_det([list(row) for row in matrix.entries])
    if res is None:
        return BinaryForm.zero(matrix.total_degree, matrix.field.zero())
    return res


def maximal_minors(phi: PolyMatrix):
    """All k x k minors of an n x k matrix (k <= n), as binary forms."""
    if phi.ncols > phi.nrows:
        raise ShapeError("more columns than rows: no maximal minors of column size")
    out = []
    for rows in combinations(range(phi.nrows), phi.ncols):
        out.append(polymat_det(phi.submatrix_rows(rows)))
    return out


def random_polymatrix(field, nrows: int, col_degs, rng) -> PolyMatrix:
    entries = [
        [BinaryForm(d, tuple(field.random(rng) for _ in range(d + 1))) for d in col_degs]
        for _ in range(nrows)
    ]
    return PolyMatrix.build(field, tuple(col_degs), entries)


def random_row_matrix(field, row_degs, ncols: int, rng) -> RowPolyMatrix:
    entries = [
        [BinaryForm(d, tuple(field.random(rng) for _ in range(d + 1))) for _ in range(ncols)]
        for d in row_degs
    ]
    return RowPolyMatrix.build(field, tuple(row_degs), entries)


def random_invertible(field, n: int, rng):
    """Random invertible constant n x n matrix, as scalar rows."""
    while True:
        rows = [[field.random(rng) for _ in range(n)] for _ in range(n)]
        if linalg.det(field, rows):
            return rows
