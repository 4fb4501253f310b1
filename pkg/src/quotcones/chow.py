"""Truncated intersection calculus on the product of the base curve with the line.

Classes live in degrees 0..2 with f (fiber of the projection to the curve)
and h (pullback of a point of the line) satisfying f^2 = h^2 = 0 and
f.h = 1.  Only sums of pulled-back line bundles ever appear, so integer
coefficients suffice.  The two curve pairings are computed both in closed
form and through the Chern calculus and must agree; a mismatch is a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cones import QuotParams
from .errors import (
    DegenerateInput,
    InternalInconsistency,
    NotUnital,
    ShapeError,
    UnsupportedRegime,
)


@dataclass(frozen=True)
class SurfaceClass:
    """Truncated class deg0 + (a f + b h) + c (f.h)."""

    deg0: int
    deg1: tuple
    deg2: int

    @classmethod
    def one(cls) -> "SurfaceClass":
        return cls(1, (0, 0), 0)

    def __add__(self, other: "SurfaceClass") -> "SurfaceClass":
        return SurfaceClass(
            self.deg0 + other.deg0,
            (self.deg1[0] + other.deg1[0], self.deg1[1] + other.deg1[1]),
            self.deg2 + other.deg2,
        )

    def __mul__(self, other: "SurfaceClass") -> "SurfaceClass":
        a, b = self.deg1
        a2, b2 = other.deg1
        return SurfaceClass(
            self.deg0 * other.deg0,
            (self.deg0 * a2 + other.deg0 * a, self.deg0 * b2 + other.deg0 * b),
            self.deg0 * other.deg2 + other.deg0 * self.deg2 + a * b2 + a2 * b,
        )


@dataclass(frozen=True)
class LineBundleOnS:
    """Pullback of a degree-``base_deg`` bundle from the curve, twisted by
    ``fiber_twist`` along the line."""

    base_deg: int
    fiber_twist: int

    def chern(self) -> SurfaceClass:
        return SurfaceClass(1, (self.base_deg, self.fiber_twist), 0)


def chern_total(bundles) -> SurfaceClass:
    """Whitney product of the total Chern classes of line-bundle summands."""
    total = SurfaceClass.one()
    for lb in bundles:
        total = total * lb.chern()
    return total


def whitney_quotient(c_sub: SurfaceClass) -> SurfaceClass:
    """Total Chern class of the quotient of a trivial bundle by a subbundle
    with class ``c_sub``: the truncated inverse series."""
    if c_sub.deg0 != 1:
        raise NotUnital(f"degree-0 part must be 1, got {c_sub.deg0}")
    a, b = c_sub.deg1
    c1_sq = 2 * a * b
    return SurfaceClass(1, (-a, -b), c1_sq - c_sub.deg2)


class CurvePairing(NamedTuple):
    """Intersection numbers of a test curve with the basis divisors."""

    y: int
    d: int


def _check_vec(vec, length: int, what: str):
    if len(vec) != length:
        raise ShapeError(f"{what} has length {len(vec)}, expected {length}")
    if any(v < 0 for v in vec):
        raise DegenerateInput(f"{what} must be componentwise nonnegative")


def alpha_DY(p: QuotParams, a_vec) -> CurvePairing:
    """Pairings of the subsheaf-family curve with Y and D.

    Closed forms: sum(a_i) and sum(a_i (d + m_i)); re-derived through
    chern_total and whitney_quotient and asserted equal.
    """
    _check_vec(a_vec, p.k, "a_vec")
    y_closed = sum(a_vec)
    d_closed = sum(a * (p.d + m) for a, m in zip(a_vec, p.m_vec))
    c_sub = chern_total(LineBundleOnS(-a, -m) for a, m in zip(a_vec, p.m_vec))
    c_quot = whitney_quotient(c_sub)
    if (c_quot.deg1[0], c_quot.deg2) != (y_closed, d_closed):
        raise InternalInconsistency(
            f"alpha pairings disagree: closed ({y_closed}, {d_closed}), "
            f"chern ({c_quot.deg1[0]}, {c_quot.deg2})"
        )
    return CurvePairing(y=y_closed, d=d_closed)


def beta_DY(p: QuotParams, b_vec) -> CurvePairing:
    """Pairings of the quotient-family curve with Y and D.

    Closed forms: sum(b_i) and sum(b_i (d - n_i)); dual-checked as in
    alpha_DY, here without the quotient inversion since the family already
    is the quotient.
    """
    if p.r == 0:
        raise UnsupportedRegime("no quotient-family curve exists when r = 0")
    _check_vec(b_vec, p.r, "b_vec")
    y_closed = sum(b_vec)
    d_closed = sum(b * (p.d - n) for b, n in zip(b_vec, p.n_vec))
    c_quot = chern_total(LineBundleOnS(b, n) for b, n in zip(b_vec, p.n_vec))
    if (c_quot.deg1[0], c_quot.deg2) != (y_closed, d_closed):
        raise InternalInconsistency(
            f"beta pairings disagree: closed ({y_closed}, {d_closed}), "
            f"chern ({c_quot.deg1[0]}, {c_quot.deg2})"
        )
    return CurvePairing(y=y_closed, d=d_closed)
