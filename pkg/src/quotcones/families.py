"""One-parameter families of graded matrices and their measured intersection numbers.

The base curve of a test family is realized as a projective parameter line:
a section of a degree-a bundle becomes a binary form of degree a in the
parameter pair (s0, s1).  A family entry is therefore a binary form in
(x, y) whose coefficients are binary forms in (s0, s1) — bihomogeneous of
the bidegree dictated by the family kind.  The measured intersection number
with a divisor is the parameter-degree of an exactly computed determinant
(or discriminant of a determinant), with roots at s = infinity counted
automatically by the homogeneous bookkeeping.  A trial is degenerate when
that polynomial vanishes identically; genericity is certified a posteriori
by the measured degree reaching its predicted value.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass

from . import linalg
from .cones import QuotParams
from .errors import (
    DegenerateInput,
    GenericityFailure,
    InternalInconsistency,
    ShapeError,
    UnsupportedRegime,
)
from .fields import PrimeField
from .forms import BinaryForm, bf_discriminant, random_form
from .polymatrix import (
    PolyMatrix,
    RowPolyMatrix,
    is_generically_injective,
    is_generically_surjective,
)
from .splitting import annihilator_system, kernel_system

_MAX_RESAMPLES = 16


def stable_seed(master_seed: int, index: int) -> int:
    """Deterministic, platform-independent per-trial seed."""
    digest = hashlib.sha256(f"{master_seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _check_vec(vec, length: int, what: str):
    if len(vec) != length:
        raise ShapeError(f"{what} has length {len(vec)}, expected {length}")
    if any(v < 0 for v in vec):
        raise DegenerateInput(f"{what} must be componentwise nonnegative")


@dataclass(frozen=True)
class CurveFamily:
    """A sampled one-parameter family of graded matrices.

    For kind "alpha" the entries form an n x k grid, entry (i, j)
    bihomogeneous of bidegree (a_j, m_j); for kind "beta" an r x n grid of
    bidegree (b_i, n_i) per row.  Entries are binary forms in (x, y) with
    coefficients binary forms in (s0, s1).
    """

    kind: str
    params: QuotParams
    degree_vec: tuple
    field: object
    entries: tuple
    seed: int


@dataclass(frozen=True)
class TrialReport:
    kind: str
    params: tuple
    vec: tuple
    seed: int
    measured: int | None
    predicted: int
    agreed: bool
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": list(self.params),
            "vec": list(self.vec),
            "seed": self.seed,
            "measured": self.measured,
            "predicted": self.predicted,
            "agreed": self.agreed,
            "degenerate": self.degenerate,
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def _random_bientry(field, s_deg: int, xy_deg: int, rng) -> BinaryForm:
    return BinaryForm(xy_deg, tuple(random_form(field, s_deg, rng) for _ in range(xy_deg + 1)))


def specialize_alpha(fam: CurveFamily, sigma) -> PolyMatrix:
    """Evaluate the parameter at (sigma : 1), yielding an ordinary matrix."""
    one = fam.field.one()
    entries = [
        [BinaryForm(f.degree, tuple(c.evaluate(sigma, one) for c in f.coeffs)) for f in row]
        for row in fam.entries
    ]
    return PolyMatrix.build(fam.field, fam.params.m_vec, entries)


def specialize_beta(fam: CurveFamily, sigma) -> RowPolyMatrix:
    one = fam.field.one()
    entries = [
        [BinaryForm(f.degree, tuple(c.evaluate(sigma, one) for c in f.coeffs)) for f in row]
        for row in fam.entries
    ]
    return RowPolyMatrix.build(fam.field, fam.params.n_vec, entries)


def sample_alpha_family(
    p: QuotParams, a_vec, seed: int, field=None
) -> CurveFamily:
    """Random subsheaf family: n x k entries of bidegree (a_j, m_j).

    A random specialization must be generically injective; otherwise the
    family is resampled, up to a bounded retry count.
    """
    field = field or PrimeField()
    _check_vec(a_vec, p.k, "a_vec")
    rng = random.Random(seed)
    for _ in range(_MAX_RESAMPLES):
        entries = tuple(
            tuple(_random_bientry(field, a_vec[j], p.m_vec[j], rng) for j in range(p.k))
            for _ in range(p.n)
        )
        fam = CurveFamily("alpha", p, tuple(a_vec), field, entries, seed)
        if is_generically_injective(specialize_alpha(fam, field.random(rng))):
            return fam
    raise GenericityFailure(f"no generically injective alpha family after {_MAX_RESAMPLES} tries")


def sample_beta_family(
    p: QuotParams, b_vec, seed: int, field=None
) -> CurveFamily:
    """Random quotient family: r x n entries of bidegree (b_i, n_i)."""
    if p.r < 1:
        raise UnsupportedRegime("no quotient family exists when r = 0")
    field = field or PrimeField()
    _check_vec(b_vec, p.r, "b_vec")
    rng = random.Random(seed)
    for _ in range(_MAX_RESAMPLES):
        entries = tuple(
            tuple(_random_bientry(field, b_vec[i], p.n_vec[i], rng) for _ in range(p.n))
            for i in range(p.r)
        )
        fam = CurveFamily("beta", p, tuple(b_vec), field, entries, seed)
        if is_generically_surjective(specialize_beta(fam, field.random(rng))):
            return fam
    raise GenericityFailure(f"no generically surjective beta family after {_MAX_RESAMPLES} tries")


def _family_zero(field, s_deg: int) -> BinaryForm:
    return BinaryForm.zero(s_deg, field.zero())


def _measure_det(rows, expected_degree: int):
    """Parameter-degree of a graded determinant; None when identically zero."""
    det = linalg.ring_det(rows)
    if det is None or not det:
        return None
    if det.degree != expected_degree:
        raise InternalInconsistency(
            f"graded determinant has degree {det.degree}, grading says {expected_degree}"
        )
    return det.degree


def measure_alpha_Ddeg(fam: CurveFamily) -> TrialReport:
    """Degree in the parameter of the degenerate-quotient determinant.

    For r >= 1 with r | d this is the determinant of the twisted-annihilator
    criterion system, predicted degree sum a_i (m_i + d2).  For r = 0 it is
    the discriminant in (x, y) of det(family), predicted 2(d-1) sum a_i.
    """
    if fam.kind != "alpha":
        raise ShapeError("measure_alpha_Ddeg needs an alpha family")
    p = fam.params
    a_vec = fam.degree_vec
    if p.r >= 1:
        if p.d % p.r != 0:
            raise UnsupportedRegime("criterion system is square only when r divides d")
        d2 = p.d // p.r
        predicted = sum(a * (m + d2) for a, m in zip(a_vec, p.m_vec))
        zeros = [_family_zero(fam.field, a) for a in a_vec]
        rows = annihilator_system(fam.entries, p.m_vec, d2 - 1, zeros)
        measured = _measure_det(rows, predicted)
    else:
        if p.d < 2:
            raise DegenerateInput("discriminant needs total degree >= 2")
        predicted = 2 * (p.d - 1) * sum(a_vec)
        det = linalg.ring_det([list(row) for row in fam.entries])
        if det is None or not det:
            measured = None
        else:
            disc = bf_discriminant(det)
            measured = disc.degree if disc else None
            if measured is not None and measured != predicted:
                raise InternalInconsistency(
                    f"discriminant degree {measured}, grading says {predicted}"
                )
    agreed = measured == predicted
    return TrialReport(
        "alpha-Ddeg",
        (p.n, p.r, p.d),
        tuple(a_vec),
        fam.seed,
        measured,
        predicted,
        agreed,
        measured is None,
    )


def measure_beta_Dunb(fam: CurveFamily) -> TrialReport:
    """Degree in the parameter of the unbalanced-subsheaf determinant.

    Needs k | d so that the kernel-section system at twist d1 - 1 is square;
    predicted degree is sum b_i (n_i + d1).
    """
    if fam.kind != "beta":
        raise ShapeError("measure_beta_Dunb needs a beta family")
    p = fam.params
    if p.d % p.k != 0:
        raise UnsupportedRegime("kernel criterion system is square only when k divides d")
    b_vec = fam.degree_vec
    d1 = p.d // p.k
    predicted = sum(b * (n + d1) for b, n in zip(b_vec, p.n_vec))
    zeros = [_family_zero(fam.field, b) for b in b_vec]
    rows = kernel_system(fam.entries, p.n_vec, d1 - 1, zeros)
    if len(rows) != p.n * d1:
        raise InternalInconsistency("kernel criterion system is not square")
    measured = _measure_det(rows, predicted)
    agreed = measured == predicted
    return TrialReport(
        "beta-Dunb",
        (p.n, p.r, p.d),
        tuple(b_vec),
        fam.seed,
        measured,
        predicted,
        agreed,
        measured is None,
    )


def closed_form_prop42(p: QuotParams, which: str, vec) -> int | None:
    """Closed-form pairing of a test curve with an effective generator.

    ``which`` is one of "alpha-unb", "beta-unb", "alpha-deg", "beta-deg".
    Returns None for the two combinations without a stated formula
    (beta-unb when k does not divide d, alpha-deg when r >= 1 does not
    divide d).
    """
    if which == "alpha-unb":
        _check_vec(vec, p.k, "a_vec")
        if p.ell1 is None:
            return 0
        return p.d1 * (p.ell1 + 1) * sum(vec[: p.ell1])
    if which == "beta-unb":
        if p.r < 1:
            raise UnsupportedRegime("no beta curve when r = 0")
        _check_vec(vec, p.r, "b_vec")
        if p.ell1 is not None:
            return None
        d1 = p.d // p.k
        return sum(b * (n + d1) for b, n in zip(vec, p.n_vec))
    if which == "alpha-deg":
        _check_vec(vec, p.k, "a_vec")
        if p.r == 0:
            return 2 * (p.d - 1) * sum(vec)
        if p.d % p.r != 0:
            return None
        d2 = p.d // p.r
        return sum(a * (m + d2) for a, m in zip(vec, p.m_vec))
    if which == "beta-deg":
        if p.r < 1:
            raise UnsupportedRegime("no beta curve when r = 0")
        _check_vec(vec, p.r, "b_vec")
        if p.ell2 is None:
            return 0
        return p.d2 * (p.ell2 + 1) * sum(vec[: p.ell2])
    raise ShapeError(f"unknown pairing {which!r}")


def run_alpha_ddeg_trials(p: QuotParams, a_vec, master_seed: int, trials: int, field=None):
    """Seeded independent alpha-family trials; reproducible per (seed, index)."""
    out = []
    for i in range(trials):
        seed = stable_seed(master_seed, i)
        fam = sample_alpha_family(p, a_vec, seed, field)
        out.append(measure_alpha_Ddeg(fam))
    return out


def run_beta_dunb_trials(p: QuotParams, b_vec, master_seed: int, trials: int, field=None):
    out = []
    for i in range(trials):
        seed = stable_seed(master_seed, i)
        fam = sample_beta_family(p, b_vec, seed, field)
        out.append(measure_beta_Dunb(fam))
    return out
