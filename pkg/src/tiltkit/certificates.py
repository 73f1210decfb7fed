"""Positivity certificates: explicit exponents n with q * (x+g)**n >= 0.

For q with no positive roots and positive total mass, some power of
``(x + g)`` (any g > 0) clears every negative coefficient.  The certificate
stores the minimal such exponent together with the expanded product, so a
verifier can recheck it without trusting the search.

Multiplying a non-negative-coefficient polynomial by ``(x + g)`` keeps all
coefficients non-negative, so the property is upward closed in n and the
incremental search below returns the true minimum.  No a-priori bound on n
is computed; the mandatory ``cap`` keeps the search a total function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceeded, NotInM, PreconditionViolated, ZeroPolynomial
from .poly import CoeffLike, Poly, _frac, mul
from .positivity import in_M, is_nonneg, positive_root_count


@dataclass(frozen=True)
class PolyaCertificate:
    """Witness that q * (x + gamma)**n has non-negative coefficients."""

    gamma: Fraction
    n: int
    product: Poly


def polya_exponent(q: Poly, gamma: CoeffLike, cap: int) -> PolyaCertificate:
    """Minimal n <= cap with q * (x+gamma)**n coefficientwise >= 0.

    Raises :class:`NotInM` when no exponent can exist (a positive root, or
    non-positive total mass), :class:`CapExceeded` when the minimum lies
    beyond ``cap``.
    """
    g = _frac(gamma)
    if g <= 0:
        raise PreconditionViolated(f"certificate base must be positive, got {g}")
    if cap < 0:
        raise PreconditionViolated("cap must be >= 0")
    if q.is_zero:
        raise ZeroPolynomial("cannot certify the zero polynomial")
    if positive_root_count(q) > 0:
        raise NotInM("polynomial has a positive root; no certificate exists")
    if q(1) < 0:
        raise NotInM("total mass is negative; no non-negative product exists")
    base = Poly([g, 1])
    product = q
    for n in range(cap + 1):
        if is_nonneg(product):
            return PolyaCertificate(gamma=g, n=n, product=product)
        product = mul(product, base)
    raise CapExceeded(cap)


def verify_certificate(q: Poly, cert: PolyaCertificate) -> bool:
    """Recheck a certificate: the product is q * (x+gamma)**n, it is
    coefficientwise non-negative, and n is minimal (n-1 fails)."""
    try:
        g = _frac(cert.gamma)
    except Exception:
        return False
    if g <= 0 or cert.n < 0 or q.is_zero:
        return False
    expected = mul(q, Poly([g, 1]) ** cert.n)
    if expected != cert.product or not is_nonneg(cert.product):
        return False
    if cert.n > 0 and is_nonneg(mul(q, Poly([g, 1]) ** (cert.n - 1))):
        return False
    return True
