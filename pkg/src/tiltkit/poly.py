"""Exact dense univariate polynomials over the rationals, and finitely
supported signed measures on rational grids.

A :class:`Poly` is a tuple of ``Fraction`` coefficients, index ``k`` holding
the coefficient of ``x**k``.  Trailing zeros are stripped at construction,
so equality and hashing are structural; the zero polynomial is the empty
tuple with ``degree == -1`` as sentinel.  Nothing here auto-normalizes to
unit mass: :func:`normalize` is explicit and call sites must opt in.

A :class:`GridMeasure` realizes a finitely supported signed measure on the
grid ``(1/denom) * Z``: index ``k`` of ``masses`` is the mass of the point
``(offset + k) / denom``.  Convolution of measures is coefficient
convolution of the mass polynomials after moving both to a common grid.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import EmptySupport, NonzeroRemainder, ParseError, ZeroAtOne

# The coefficient field: arbitrary-precision rationals, eagerly reduced,
# denominator always positive, zero canonically 0/1.
Rational = Fraction

CoeffLike = Union[int, str, Fraction]


def _frac(value: CoeffLike) -> Fraction:
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {value!r}") from exc


class Poly:
    """Dense polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[CoeffLike] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the zero-polynomial sentinel."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self) -> frozenset[int]:
        """Indices of nonzero coefficients."""
        return frozenset(k for k, c in enumerate(self.coeffs) if c != 0)

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x**k (zero beyond the stored range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({to_text(self)!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            return mul(self, other)
        return self.scale(_frac(other))

    def __rmul__(self, other) -> Poly:
        return self.scale(_frac(other))

    def scale(self, c: Fraction) -> Poly:
        return Poly(c * a for a in self.coeffs)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x: CoeffLike) -> Fraction:
        """Exact evaluation by Horner's rule."""
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k > 0)

    def dilate(self, f: int) -> Poly:
        """Substitute x -> x**f, spreading indices by the factor f >= 1."""
        if f < 1:
            raise ValueError("dilation factor must be >= 1")
        if f == 1 or self.is_zero:
            return self
        out = [Fraction(0)] * (f * self.degree + 1)
        for k, c in enumerate(self.coeffs):
            out[f * k] = c
        return Poly(out)

    def shift_up(self, k: int) -> Poly:
        """Multiply by x**k."""
        if self.is_zero or k == 0:
            return self
        return Poly([Fraction(0)] * k + list(self.coeffs))

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        """Exact rational long division: self = q * divisor + r."""
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, lead = divisor.degree, divisor.leading
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        while len(rem) - 1 >= dd and rem:
            factor = rem[-1] / lead
            pos = len(rem) - 1 - dd
            quo[pos] = factor
            for i, c in enumerate(divisor.coeffs):
                rem[pos + i] -= factor * c
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo), Poly(rem)

    def div_exact(self, divisor: Poly) -> Poly:
        return div_exact(self, divisor)

    def normalized(self) -> Poly:
        return normalize(self)


def monomial(k: int, c: CoeffLike = 1) -> Poly:
    return Poly([0] * k + [c])


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def mul(p: Poly, q: Poly) -> Poly:
    """Exact coefficient convolution (semigroup product)."""
    if p.is_zero or q.is_zero:
        return ZERO
    out = [Fraction(0)] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            if b != 0:
                out[i + j] += a * b
    return Poly(out)


def div_exact(p: Poly, q: Poly) -> Poly:
    """Quotient p / q when q divides p exactly over the rationals.

    Raises :class:`NonzeroRemainder` otherwise.
    """
    quo, rem = p.divmod(q)
    if not rem.is_zero:
        raise NonzeroRemainder(f"{to_text(q)} does not divide {to_text(p)}")
    return quo


def normalize(p: Poly) -> Poly:
    """Scale p so its coefficients sum to one (unit total mass).

    Raises :class:`ZeroAtOne` when p(1) = 0 and no such scaling exists.
    """
    total = p(1)
    if total == 0:
        raise ZeroAtOne("polynomial sums to zero; cannot normalize")
    if total == 1:
        return p
    return p.scale(1 / total)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd over the rationals (zero if both inputs are zero)."""
    a, b = p, q
    while not b.is_zero:
        a, b = b, a.divmod(b)[1]
    if a.is_zero:
        return ZERO
    return a.scale(1 / a.leading)


# -- text and JSON forms ---------------------------------------------------

_NUM_RE = re.compile(r"^\d+(?:/\d+)?$")
_XPART_RE = re.compile(r"^x(?:\^(\d+))?$")


def _parse_term(term: str) -> tuple[int, Fraction]:
    body = term
    sign = 1
    if body and body[0] in "+-":
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    if not body:
        raise ParseError(f"bad polynomial term: {term!r}")
    coef_text, star, xpart = body.partition("*")
    if not star:
        if body.startswith("x"):
            coef_text, xpart = "", body
        else:
            coef_text, xpart = body, ""
    if coef_text:
        if not _NUM_RE.match(coef_text):
            raise ParseError(f"bad polynomial term: {term!r}")
        coef = sign * _frac(coef_text)
    else:
        coef = Fraction(sign)
    if not xpart:
        if star:
            raise ParseError(f"bad polynomial term: {term!r}")
        return 0, coef
    m = _XPART_RE.match(xpart)
    if not m:
        raise ParseError(f"bad polynomial term: {term!r}")
    return int(m.group(1) or 1), coef


def parse_poly(text: str) -> Poly:
    """Parse ``c0 + c1*x + c2*x^2`` syntax with rationals written a/b."""
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty polynomial text")
    pieces = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(pieces) != compact:
        raise ParseError(f"bad polynomial text: {text!r}")
    coeffs: dict[int, Fraction] = {}
    for piece in pieces:
        exp, coef = _parse_term(piece)
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + coef
    out = [Fraction(0)] * (max(coeffs) + 1)
    for exp, coef in coeffs.items():
        out[exp] = coef
    return Poly(out)


def to_text(p: Poly) -> str:
    """Canonical text form; zero terms are skipped, zero poly is ``0``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = str(abs(c))
        if k == 0:
            body = mag
        elif k == 1:
            body = f"{mag}*x"
        else:
            body = f"{mag}*x^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def poly_to_json(p: Poly) -> dict:
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> Poly:
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ParseError("polynomial JSON must be an object with a 'coeffs' list")
    return Poly(obj["coeffs"])


def poly_dumps(p: Poly) -> str:
    return json.dumps(poly_to_json(p))


def poly_loads(text: str) -> Poly:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    return poly_from_json(obj)


# -- grid measures ----------------------------------------------------------


class GridMeasure:
    """Finitely supported signed measure on the grid (1/denom) * Z.

    ``masses.coeff(k)`` is the mass of the point ``(offset + k) / denom``.
    The first and last stored masses are nonzero, and the total mass never
    vanishes (signed measures with zero total cannot be renormalized and
    are rejected up front).
    """

    __slots__ = ("denom", "offset", "masses")

    def __init__(self, denom: int, offset: int, masses: Poly):
        if denom < 1:
            raise ValueError("grid denominator must be a positive integer")
        if masses.is_zero:
            raise EmptySupport("measure must have at least one support point")
        if masses.coeff(0) == 0:
            raise ValueError("lowest grid index must carry nonzero mass")
        if masses(1) == 0:
            raise ValueError("total mass must be nonzero")
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "masses", masses)

    def __setattr__(self, name, value):
        raise AttributeError("GridMeasure is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, GridMeasure):
            return (
                self.denom == other.denom
                and self.offset == other.offset
                and self.masses == other.masses
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.denom, self.offset, self.masses))

    def __repr__(self) -> str:
        pts = ", ".join(f"{pt}:{m}" for pt, m in zip(self.support_points(), self.mass_values()))
        return f"GridMeasure({{{pts}}})"

    def support_points(self) -> list[Fraction]:
        return [
            Fraction(self.offset + k, self.denom)
            for k, c in enumerate(self.masses.coeffs)
            if c != 0
        ]

    def mass_values(self) -> list[Fraction]:
        return [c for c in self.masses.coeffs if c != 0]

    def total_mass(self) -> Fraction:
        return self.masses(1)

    def with_denominator(self, new_denom: int) -> GridMeasure:
        """Re-express on a finer grid; new_denom must be a multiple of denom."""
        if new_denom % self.denom:
            raise ValueError("new denominator must be a multiple of the old one")
        f = new_denom // self.denom
        if f == 1:
            return self
        return GridMeasure(new_denom, self.offset * f, self.masses.dilate(f))

    def canonical(self) -> GridMeasure:
        """Re-derive the minimal grid for the current support."""
        return to_grid(self.support_points(), self.mass_values())

    def __mul__(self, other: GridMeasure) -> GridMeasure:
        return conv(self, other)


def point_mass(z: Fraction | int) -> GridMeasure:
    """The unit point mass at a rational point."""
    z = _frac(z)
    return GridMeasure(z.denominator, z.numerator, ONE)


def to_grid(points: Sequence[CoeffLike], masses: Sequence[CoeffLike]) -> GridMeasure:
    """Canonical grid form of a finitely supported measure.

    The denominator is the lcm of the point denominators, the offset the
    minimal numerator on that grid.
    """
    pts = [_frac(p) for p in points]
    ms = [_frac(m) for m in masses]
    if not pts:
        raise EmptySupport("at least one support point required")
    if len(pts) != len(ms):
        raise ValueError("points and masses must have equal length")
    if len(set(pts)) != len(pts):
        raise ValueError("support points must be distinct")
    if any(m == 0 for m in ms):
        raise ValueError("masses must be nonzero")
    denom = lcm(*(p.denominator for p in pts))
    nums = [p.numerator * (denom // p.denominator) for p in pts]
    offset = min(nums)
    out = [Fraction(0)] * (max(nums) - offset + 1)
    for n, m in zip(nums, ms):
        out[n - offset] = m
    return GridMeasure(denom, offset, Poly(out))


def conv(m1: GridMeasure, m2: GridMeasure) -> GridMeasure:
    """Convolution: align grids, add offsets, multiply mass polynomials."""
    denom = lcm(m1.denom, m2.denom)
    a = m1.with_denominator(denom)
    b = m2.with_denominator(denom)
    return GridMeasure(denom, a.offset + b.offset, mul(a.masses, b.masses))


def measure_to_json(m: GridMeasure) -> dict:
    return {
        "denom": m.denom,
        "offset": m.offset,
        "masses": [str(c) for c in m.masses.coeffs],
    }


def measure_from_json(obj: dict) -> GridMeasure:
    if not isinstance(obj, dict) or not {"denom", "offset", "masses"} <= set(obj):
        raise ParseError("measure JSON needs 'denom', 'offset' and 'masses'")
    return GridMeasure(int(obj["denom"]), int(obj["offset"]), Poly(obj["masses"]))
