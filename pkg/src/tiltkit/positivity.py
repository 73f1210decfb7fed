"""Exact membership tests for the two coefficient cones.

``P(N)`` is the cone of polynomials with non-negative coefficients; ``M(N)``
the larger cone of polynomials with no roots on the positive axis and
nonzero total mass (both taken up to positive scaling).  Membership in the
second cone is decided exactly by a Sturm chain: the number of distinct
roots in (0, oo) is the drop in sign variations between 0+ and +oo, with
the sign at 0+ read off the lowest nonzero coefficient and the sign at
+oo off the leading coefficient.

Sturm counts *distinct* roots, so inputs are reduced to their square-free
part first; membership only needs the zero/nonzero distinction, which the
reduction preserves.
"""

from __future__ import annotations

from .errors import ZeroPolynomial
from .poly import Poly, poly_gcd


class SturmChain:
    """Signed-remainder chain of a polynomial and its derivative."""

    __slots__ = ("chain",)

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ZeroPolynomial("Sturm chain of the zero polynomial")
        chain = [p]
        d = p.derivative()
        if not d.is_zero:
            chain.append(d)
            while chain[-1].degree > 0:
                rem = chain[-2].divmod(chain[-1])[1]
                if rem.is_zero:
                    break
                chain.append(-rem)
        object.__setattr__(self, "chain", tuple(chain))

    def __setattr__(self, name, value):
        raise AttributeError("SturmChain is immutable")

    def __iter__(self):
        return iter(self.chain)

    def __len__(self):
        return len(self.chain)

    def variations_at_zero_plus(self) -> int:
        # sign just right of zero = sign of the lowest-order nonzero term
        signs = []
        for q in self.chain:
            for c in q.coeffs:
                if c != 0:
                    signs.append(1 if c > 0 else -1)
                    break
        return _variations(signs)

    def variations_at_infinity(self) -> int:
        signs = [1 if q.leading > 0 else -1 for q in self.chain]
        return _variations(signs)


def _variations(signs: list[int]) -> int:
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a * b < 0:
            count += 1
    return count


def is_nonneg(p: Poly) -> bool:
    """True iff every coefficient is >= 0 (the zero polynomial passes)."""
    return all(c >= 0 for c in p.coeffs)


def squarefree_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'), removing repeated roots."""
    if p.is_zero:
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree == 0:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p
    return p.div_exact(g)


def positive_root_count(p: Poly) -> int:
    """Exact number of distinct roots of p in (0, oo)."""
    if p.is_zero:
        raise ZeroPolynomial("root count of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    chain = SturmChain(sf)
    return chain.variations_at_zero_plus() - chain.variations_at_infinity()


def in_M(p: Poly) -> bool:
    """True iff p has no positive roots and nonzero total mass.

    This is cone membership up to positive scaling: a nonzero ``p`` with
    ``positive_root_count(p) == 0`` keeps one sign on (0, oo), and dividing
    by ``p(1) != 0`` makes it strictly positive there.
    """
    if p.is_zero:
        raise ZeroPolynomial("membership of the zero polynomial")
    return p(1) != 0 and positive_root_count(p) == 0
