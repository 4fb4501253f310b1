"""Rank-2 Picard lattice of the Quot scheme: bases, nef and effective cones.

The scheme parametrizes degree-d, rank-r quotient sheaves of the trivial
rank-n bundle on the line; for k = n - r >= 2 and d >= 1 its Picard group is
free of rank 2 with basis (D, Y).  Everything here is closed-form integer
arithmetic on that lattice: the nef cone, the two effective generators with
their multipliers, the base change to the pushforward basis, and exact cone
predicates via 2 x 2 determinant sign tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateCone, ParamError, UnsupportedRegime


def balanced_partition(total: int, parts: int) -> tuple:
    """The unique nondecreasing partition of ``total`` into ``parts`` parts
    with max - min <= 1 (small parts first)."""
    if parts < 1 or total < 0:
        raise ParamError(f"cannot partition {total} into {parts} parts")
    base, extra = divmod(total, parts)
    return tuple([base] * (parts - extra) + [base + 1] * extra)


@dataclass(frozen=True)
class QuotParams:
    """Parameters (n, r, d) with their derived balanced-partition data.

    k = n - r, d1 = floor(d/k); when k does not divide d, ell1 is the number
    of small parts, i.e. d = k*d1 + (k - ell1) with 0 < ell1 < k.  The r-side
    data d2, ell2, n_vec mirror this and are absent when r = 0.
    """

    n: int
    r: int
    d: int
    k: int
    d1: int
    ell1: int | None
    d2: int | None
    ell2: int | None
    m_vec: tuple
    n_vec: tuple

    def __str__(self) -> str:
        return f"(n={self.n}, r={self.r}, d={self.d})"


def make_params(n: int, r: int, d: int) -> QuotParams:
    """Validate the standing hypotheses and derive all partition data."""
    if n < 2 or d < 1 or r < 0 or r > n - 2:
        raise ParamError(f"need n >= 2, 0 <= r <= n-2, d >= 1; got (n={n}, r={r}, d={d})")
    k = n - r
    d1 = d // k
    ell1 = None if d % k == 0 else k * (d1 + 1) - d
    m_vec = balanced_partition(d, k)
    if r > 0:
        d2 = d // r
        ell2 = None if d % r == 0 else r * (d2 + 1) - d
        n_vec = balanced_partition(d, r)
    else:
        d2, ell2, n_vec = None, None, ()
    assert sum(m_vec) == d and max(m_vec) - min(m_vec) <= 1
    assert ell1 is None or 0 < ell1 < k
    assert r == 0 or (sum(n_vec) == d and max(n_vec) - min(n_vec) <= 1)
    assert ell2 is None or 0 < ell2 < r
    return QuotParams(n, r, d, k, d1, ell1, d2, ell2, m_vec, n_vec)


@dataclass(frozen=True)
class DivisorClass:
    """Integer class a*D + b*Y in the (D, Y) basis.

    ``scale_unknown`` marks a class known only up to an unknown positive
    multiple (the r = 0, k | d unbalanced-locus generator).  The zero class
    is an error sentinel, never a cone generator.
    """

    d_coef: int
    y_coef: int
    scale_unknown: bool = False

    @property
    def is_zero(self) -> bool:
        return self.d_coef == 0 and self.y_coef == 0

    def ray(self) -> tuple:
        return (self.d_coef, self.y_coef)

    def content(self) -> int:
        if self.is_zero:
            return 0
        return math.gcd(self.d_coef, self.y_coef)

    def primitive(self) -> "DivisorClass":
        if self.is_zero:
            raise DegenerateCone("the zero class spans no ray")
        g = self.content()
        return DivisorClass(self.d_coef // g, self.y_coef // g)

    def pair_with_curve(self, dot_d: int, dot_y: int) -> int:
        """Intersection with a curve whose pairings with D and Y are given."""
        return dot_d * self.d_coef + dot_y * self.y_coef

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.d_coef + other.d_coef, self.y_coef + other.y_coef)

    def __rmul__(self, c: int) -> "DivisorClass":
        return DivisorClass(c * self.d_coef, c * self.y_coef)


def _cross(u: tuple, v: tuple) -> int:
    return u[0] * v[1] - u[1] * v[0]


def _primitive_ray(ray: tuple):
    if ray == (0, 0):
        raise DegenerateCone("zero vector spans no ray")
    g = math.gcd(ray[0], ray[1])
    return (ray[0] // g, ray[1] // g), g


@dataclass(frozen=True)
class Cone2:
    """Planar cone spanned by two primitive rays, stored counterclockwise.

    The positive scales divided out of the input generators are retained so a
    cone built from honest divisor classes remembers their multipliers.
    """

    rays: tuple
    scales: tuple

    @classmethod
    def from_rays(cls, ray1: tuple, ray2: tuple) -> "Cone2":
        (p1, s1), (p2, s2) = _primitive_ray(ray1), _primitive_ray(ray2)
        orient = _cross(p1, p2)
        if orient == 0:
            raise DegenerateCone(f"rays {ray1} and {ray2} are parallel")
        if orient < 0:
            (p1, s1), (p2, s2) = (p2, s2), (p1, s1)
        return cls((p1, p2), (s1, s2))


def cone_contains(cone: Cone2, cls: DivisorClass) -> bool:
    """Exact membership via the two 2 x 2 determinant sign tests."""
    v = cls.ray()
    r1, r2 = cone.rays
    return _cross(r1, v) >= 0 and _cross(v, r2) >= 0


def cone_subset(inner: Cone2, outer: Cone2) -> bool:
    return all(cone_contains(outer, DivisorClass(*r)) for r in inner.rays)


def boundary_slopes(cone: Cone2) -> tuple:
    """Slopes y/d of the two boundary rays, ascending; None marks a vertical ray."""
    slopes = []
    for d_coef, y_coef in cone.rays:
        slopes.append(None if d_coef == 0 else Fraction(y_coef, d_coef))
    slopes.sort(key=lambda s: (s is None, s))
    return tuple(slopes)


def nef_cone(p: QuotParams) -> Cone2:
    """Nef cone: spanned by Y and 2dY - D."""
    return Cone2.from_rays((0, 1), (-1, 2 * p.d))


@dataclass(frozen=True)
class EffectiveCone:
    """Generators of the effective cone with the multipliers of their classes.

    unb_mult is None when the multiplier is an unknown positive constant
    (r = 0 with k | d).  deg_empty flags the r = 0, d = 1 case where the
    degenerate-support class is 0 and spans no ray; the cone is then None.
    """

    unb_ray: tuple
    unb_mult: int | None
    deg_ray: tuple | None
    deg_mult: int | None
    deg_empty: bool
    cone: Cone2 | None

    @property
    def unb_class(self) -> DivisorClass:
        if self.unb_mult is None:
            return DivisorClass(*self.unb_ray, scale_unknown=True)
        return DivisorClass(self.unb_mult * self.unb_ray[0], self.unb_mult * self.unb_ray[1])

    @property
    def deg_class(self) -> DivisorClass | None:
        if self.deg_empty:
            return None
        return DivisorClass(self.deg_mult * self.deg_ray[0], self.deg_mult * self.deg_ray[1])


def effective_unb(p: QuotParams):
    """Primitive ray and multiplier of the unbalanced-locus generator.

    Returns (ray, mult) with mult None for the unknown-positive r = 0, k | d
    constant.  Refuses the k-nondividing regime with d < k, where the stated
    multiplier d1*(ell1 + 1) degenerates to 0 and no divisor is defined.
    """
    if p.ell1 is not None and p.d1 == 0:
        raise UnsupportedRegime(
            f"{p}: d < k with k not dividing d; the unbalanced locus has no divisor class here"
        )
    ray = (-1, p.d + -(-p.d // p.k))  # ceil(d/k)
    if p.ell1 is not None:
        mult = p.d1 * (p.ell1 + 1)
    elif p.r == 0:
        mult = None
    else:
        mult = 1
    return ray, mult


def effective_deg(p: QuotParams):
    """Primitive ray and multiplier of the degenerate-locus generator.

    Returns (ray, mult, empty).  For r > 0 the ray is (1, -d + ceil(d/r))
    with multiplier 1 or d2*(ell2 + 1); for r = 0 the class is 2(d-1) * Y,
    which is empty (zero class) exactly when d = 1.  The regime d < r is
    refused: there the stated multiplier d2*(ell2 + 1) degenerates to 0 (the
    dual directrix is a constant plane and its incidence locus is not a
    divisor), mirroring the refused d < k regime on the unbalanced side.
    """
    if p.r == 0:
        if p.d == 1:
            return None, None, True
        return (0, 1), 2 * (p.d - 1), False
    if p.ell2 is not None and p.d2 == 0:
        raise UnsupportedRegime(
            f"{p}: d < r with r not dividing d; the degenerate locus has no divisor class here"
        )
    ray = (1, -p.d + -(-p.d // p.r))  # ceil(d/r)
    mult = 1 if p.ell2 is None else p.d2 * (p.ell2 + 1)
    return ray, mult, False


def effective_cone(p: QuotParams) -> EffectiveCone:
    """Both effective generators; the spanned cone is None only when r = 0, d = 1."""
    unb_ray, unb_mult = effective_unb(p)
    deg_ray, deg_mult, empty = effective_deg(p)
    cone = None if empty else Cone2.from_rays(unb_ray, deg_ray)
    return EffectiveCone(unb_ray, unb_mult, deg_ray, deg_mult, empty, cone)


def stromme_to_DY(p: QuotParams, uv: tuple) -> DivisorClass:
    """Base change from the pushforward basis (c1 of the twist-(d-1)
    pushforward, difference to the twist-d one) into (D, Y)."""
    u, v = uv
    return DivisorClass(-u, 2 * p.d * u + v)


def DY_to_stromme(p: QuotParams, cls: DivisorClass) -> tuple:
    u = -cls.d_coef
    return (u, cls.y_coef - 2 * p.d * u)
