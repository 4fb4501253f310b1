"""Binary forms in (x, y) and univariate polynomials in a family parameter.

A ``BinaryForm`` of degree m stores m + 1 coefficients; entry t is the
coefficient of x^t y^(m-t).  Zero forms keep their declared degree so that
graded bookkeeping (column degrees, determinant degrees) stays exact through
every computation.  Coefficients are field scalars, or — for one level of
nesting used by the one-parameter families — binary forms in a second
variable pair.  Arithmetic only ever combines equal degrees.

``ParamPoly`` is the univariate engine underneath: trimmed coefficient list,
``degree is None`` standing in for degree -infinity of the zero polynomial.
"""

from __future__ import annotations

from .errors import DegenerateInput, ShapeError, UnsupportedRegime
from .fields import field_of


class ParamPoly:
    """Univariate polynomial with trimmed coefficients (ascending powers)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        """Degree, or None as the -infinity sentinel of the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "ParamPoly") -> "ParamPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ParamPoly(out)

    def __neg__(self) -> "ParamPoly":
        return ParamPoly([-c for c in self.coeffs])

    def __sub__(self, other: "ParamPoly") -> "ParamPoly":
        return self + (-other)

    def __mul__(self, other: "ParamPoly") -> "ParamPoly":
        if not self or not other:
            return ParamPoly(())
        out = [self.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ParamPoly(out)

    def divmod(self, other: "ParamPoly"):
        """Exact-field polynomial division: returns (quotient, remainder)."""
        if not other:
            raise DegenerateInput("division by the zero polynomial")
        if not self:
            return ParamPoly(()), ParamPoly(())
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        if len(rem) < len(div):
            return ParamPoly(()), ParamPoly(rem)
        q = [lead * 0] * (len(rem) - len(div) + 1)
        for shift in range(len(rem) - len(div), -1, -1):
            c = rem[shift + len(div) - 1]
            if not c:
                continue
            f = c / lead
            q[shift] = f
            for i, dc in enumerate(div):
                rem[shift + i] = rem[shift + i] - f * dc
        return ParamPoly(q), ParamPoly(rem)

    def evaluate(self, at):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * at + c
        return acc

    def __repr__(self) -> str:
        return f"ParamPoly({list(self.coeffs)!r})"


class BinaryForm:
    """Homogeneous binary form; coefficient t multiplies x^t y^(degree-t)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        coeffs = tuple(coeffs)
        if degree < 0 or len(coeffs) != degree + 1:
            raise ShapeError(
                f"form of degree {degree} needs {degree + 1} coefficients, got {len(coeffs)}"
            )
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_ints(cls, field, coeffs) -> "BinaryForm":
        coeffs = [field.from_int(c) for c in coeffs]
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def zero(cls, degree: int, zero_coeff) -> "BinaryForm":
        return cls(degree, (zero_coeff,) * (degree + 1))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise ShapeError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            deg = self.degree + other.degree
            # The zero accumulator must live in the graded piece of the
            # product, which matters when coefficients are nested forms.
            zero = (self.coeffs[0] * other.coeffs[0]) * 0
            out = [zero] * (deg + 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return BinaryForm(deg, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "BinaryForm":
        """Multiply every coefficient by a scalar of the coefficient domain."""
        return BinaryForm(self.degree, tuple(a * c for a in self.coeffs))

    def evaluate(self, x0, y0):
        """Value at the point (x0 : y0); returns a coefficient-domain element."""
        acc = self.coeffs[0] * (y0 ** self.degree)
        xp = x0
        for t in range(1, self.degree + 1):
            acc = acc + self.coeffs[t] * xp * (y0 ** (self.degree - t))
            xp = xp * x0
        return acc

    def deriv_x(self) -> "BinaryForm":
        if self.degree == 0:
            raise DegenerateInput("derivative of a constant form")
        return BinaryForm(
            self.degree - 1, tuple(self.coeffs[t + 1] * (t + 1) for t in range(self.degree))
        )

    def deriv_y(self) -> "BinaryForm":
        if self.degree == 0:
            raise DegenerateInput("derivative of a constant form")
        return BinaryForm(
            self.degree - 1, tuple(self.coeffs[t] * (self.degree - t) for t in range(self.degree))
        )

    def dehomogenize(self) -> ParamPoly:
        """Univariate polynomial f(x, 1); trailing zeros trimmed."""
        return ParamPoly(self.coeffs)

    @classmethod
    def homogenize(cls, poly: ParamPoly, degree: int) -> "BinaryForm":
        """Pad a univariate polynomial back up to a form of the given degree."""
        if poly.degree is not None and poly.degree > degree:
            raise ShapeError(f"polynomial of degree {poly.degree} exceeds target {degree}")
        if not poly:
            raise DegenerateInput("cannot homogenize the zero polynomial without a sample zero")
        zero = poly.coeffs[0] * 0
        coeffs = list(poly.coeffs) + [zero] * (degree + 1 - len(poly.coeffs))
        return cls(degree, coeffs)

    def __repr__(self) -> str:
        return f"BinaryForm(degree={self.degree}, coeffs={list(self.coeffs)!r})"


def bf_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Gcd of two binary forms, monic in its leading nonzero coefficient.

    The leading coefficient is the one of the highest x-power present.  A
    common y-power is split off first, then the dehomogenized univariate gcd
    is computed by the Euclidean algorithm and homogenized back.
    """
    if not f and not g:
        raise DegenerateInput("gcd of two zero forms")
    if not f or not g:
        nz = g if f.is_zero else f
        lead = nz.dehomogenize().coeffs[-1]
        return nz.scale(1 / lead)
    uf, ug = f.dehomogenize(), g.dehomogenize()
    yval = min(f.degree - uf.degree, g.degree - ug.degree)
    a, b = uf, ug
    while b:
        _, r = a.divmod(b)
        a, b = b, r
    a = ParamPoly([c / a.coeffs[-1] for c in a.coeffs])
    return BinaryForm.homogenize(a, a.degree + yval)


def bf_divide_exact(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Exact quotient f / g; raises if g does not divide f."""
    if not g:
        raise DegenerateInput("division by the zero form")
    if not f:
        if f.degree < g.degree:
            raise DegenerateInput("degree of the quotient would be negative")
        return BinaryForm.zero(f.degree - g.degree, f.coeffs[0] * 0)
    uf, ug = f.dehomogenize(), g.dehomogenize()
    if f.degree - uf.degree < g.degree - ug.degree:
        raise DegenerateInput("not divisible: y-adic valuation too small")
    q, r = uf.divmod(ug)
    if r:
        raise DegenerateInput("not divisible: nonzero remainder")
    return BinaryForm.homogenize(q, f.degree - g.degree)


def _sylvester_rows(f: BinaryForm, g: BinaryForm):
    m, n = f.degree, g.degree
    zero = f.coeffs[0] * 0
    fa = list(reversed(f.coeffs))
    gb = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([zero] * i + fa + [zero] * (n - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gb + [zero] * (m - 1 - i))
    return rows


def bf_resultant(f: BinaryForm, g: BinaryForm):
    """Resultant with respect to the declared degrees (Sylvester determinant).

    Vanishing leading coefficients are legitimate: they record roots at
    (1 : 0) and are counted by the determinant exactly as the line-bundle
    degree bookkeeping demands.  Returns a scalar for scalar coefficients and
    a binary form in the inner variables for nested coefficients.
    """
    from . import linalg

    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        raise DegenerateInput("resultant of two constants is trivial")
    rows = _sylvester_rows(f, g)
    sample = f.coeffs[0]
    if isinstance(sample, BinaryForm):
        res = linalg.ring_det(rows)
        if res is None:
            return BinaryForm.zero(sample.degree * (m + n), sample.coeffs[0] * 0)
        return res
    return linalg.det(field_of(sample), rows)


def bf_discriminant(f: BinaryForm):
    """Discriminant, normalized so the quadratic a x^2 + b xy + c y^2 gives b^2 - 4ac.

    Computed as (-1)^(d(d-1)/2) * Res(f_x, f_y) / d^(d-2); the division is
    exact over the integers, hence over any field whose characteristic does
    not divide d.  Zero exactly when f has a repeated root over the algebraic
    closure.  Works coefficient-nested as well (used by the one-parameter
    families), returning a form in the inner variables.
    """
    if f.degree < 2:
        raise DegenerateInput(f"discriminant needs degree >= 2, got {f.degree}")
    if not f:
        raise DegenerateInput("discriminant of the zero form")
    d = f.degree
    res = bf_resultant(f.deriv_x(), f.deriv_y())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    denom = d ** (d - 2)
    inner = f.coeffs[0]
    while isinstance(inner, BinaryForm):
        inner = inner.coeffs[0]
    fld = field_of(inner)
    denom_elem = fld.from_int(denom)
    if not denom_elem:
        raise UnsupportedRegime(
            f"discriminant normalization needs the characteristic not to divide {d}"
        )
    factor = fld.from_int(sign) / denom_elem
    if isinstance(res, BinaryForm):
        return res.scale(factor)
    return res * factor


def random_form(field, degree: int, rng) -> BinaryForm:
    return BinaryForm(degree, tuple(field.random(rng) for _ in range(degree + 1)))
