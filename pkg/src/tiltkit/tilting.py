"""The exponential tilting family, on polynomials and on grid measures.

The map is parameterized multiplicatively: ``tilt(p, g)`` sends ``p`` to
``p(g*x) / p(g)``, which reweights the coefficient (mass) at index ``k`` by
``g**k`` and renormalizes.  The additive rate ``b`` of the classical
``exp(-b*s)`` reweighting corresponds to ``g = exp(-b)``, which is
irrational for rational nonzero ``b``; keeping ``g`` as the parameter keeps
every value exact.  :func:`gamma_from_beta` converts a float rate to a
rational ``g`` at caller-chosen precision for boundary use.

On a grid with denominator ``n`` the measure tilt applies ``g`` per grid
step, i.e. ``g`` plays ``exp(-b/n)``; refining the grid leaves the tilted
measure unchanged.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PoleAtGamma, PreconditionViolated, ZeroPolynomial, ZeroTotalMass
from .poly import CoeffLike, GridMeasure, Poly, _frac


def _positive(value: CoeffLike, what: str) -> Fraction:
    g = _frac(value)
    if g <= 0:
        raise PreconditionViolated(f"{what} must be positive, got {g}")
    return g


def tilt(p: Poly, gamma: CoeffLike) -> Poly:
    """Tilt a polynomial: coefficient k becomes p_k * gamma**k / p(gamma)."""
    g = _positive(gamma, "tilt parameter")
    if p.is_zero:
        raise ZeroPolynomial("cannot tilt the zero polynomial")
    total = p(g)
    if total == 0:
        raise PoleAtGamma(f"polynomial vanishes at {g}")
    power = Fraction(1)
    out = []
    for c in p.coeffs:
        out.append(c * power / total)
        power *= g
    return Poly(out)


def tilt_measure(m: GridMeasure, g: CoeffLike) -> GridMeasure:
    """Tilt a grid measure: mass at grid index k is scaled by g**k, then
    the measure is renormalized to total mass one.  The parameter acts per
    grid step of size 1/denom."""
    g = _positive(g, "tilt parameter")
    total = m.masses(g)
    if total == 0:
        raise ZeroTotalMass("tilted signed measure has zero total mass")
    power = Fraction(1)
    out = []
    for c in m.masses.coeffs:
        out.append(c * power / total)
        power *= g
    return GridMeasure(m.denom, m.offset, Poly(out))


def gamma_from_beta(beta: float, max_denominator: int = 10**12) -> Fraction:
    """Rational approximation of exp(-beta) for boundary interop.

    The result is exact only in the trivial case beta = 0; precision is
    controlled by ``max_denominator``.
    """
    if max_denominator < 1:
        raise PreconditionViolated("max_denominator must be >= 1")
    return Fraction(math.exp(-beta)).limit_denominator(max_denominator)
