"""Cone separation: exact LP feasibility and separating witnesses.

For a non-negative polynomial ``p`` let ``S_p`` be the set of positive-axis
positive polynomials ``q`` whose product with ``p`` has non-negative
coefficients.  When two non-negative polynomials with ``deg p' <= deg p``
and ``p_0 != 0`` differ (after scaling to unit mass), some ``q`` lies in
``S_p`` but not in ``S_{p'}``; :func:`separate` constructs one:

1. pad both polynomials by ``(x+1)**deg(p)`` if ``p`` has an internal zero
   coefficient, making every coefficient strictly positive;
2. solve, exactly, the linear system asking for an ``s`` of degree n+1
   whose product with ``p`` is non-negative through index n+1 while
   ``(p' * s)_{n+1} <= -1``;
3. add ``C * x**(n+2)`` with the smallest C >= 0 clearing the remaining
   product coefficients, plus one, so they end up strictly positive.

The required constant is a lower bound: C must dominate
``-(p*s)_k / p_{k-(n+2)}`` over the affected indices, clamped at zero.

:func:`lp_feasibility` is a phase-1 simplex over exact rationals with
Bland's anti-cycling rule; free variables are split into differences of
non-negatives and each row gets a surplus and an artificial variable.  The
final tableau yields either an exact feasible point or exact non-negative
multipliers combining the constraints into 0 >= 1, never both or neither.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CapTooSmall, PreconditionViolated
from .poly import CoeffLike, Poly, _frac, mul, normalize
from .positivity import in_M, is_nonneg


@dataclass(frozen=True)
class LPInstance:
    """Constraint system  A s >= b  over the rationals."""

    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    @staticmethod
    def build(rows: Sequence[Sequence[CoeffLike]], rhs: Sequence[CoeffLike]) -> "LPInstance":
        r = tuple(tuple(_frac(c) for c in row) for row in rows)
        b = tuple(_frac(c) for c in rhs)
        if len(r) != len(b):
            raise PreconditionViolated("row count must match rhs length")
        widths = {len(row) for row in r}
        if len(widths) > 1:
            raise PreconditionViolated("all rows must have equal width")
        return LPInstance(rows=r, rhs=b)

    @property
    def num_vars(self) -> int:
        return len(self.rows[0]) if self.rows else 0


@dataclass(frozen=True)
class LPOutcome:
    """Exactly one of: a feasible point, or a Farkas infeasibility dual."""

    solution: Optional[tuple[Fraction, ...]] = None
    dual: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if (self.solution is None) == (self.dual is None):
            raise ValueError("outcome must carry exactly one branch")

    @property
    def is_feasible(self) -> bool:
        return self.solution is not None


def verify_outcome(inst: LPInstance, outcome: LPOutcome) -> bool:
    """Exact recheck: A s >= b, or lam >= 0, A^T lam = 0, <b, lam> = 1."""
    if outcome.is_feasible:
        s = outcome.solution
        return all(
            sum(a * v for a, v in zip(row, s)) >= b
            for row, b in zip(inst.rows, inst.rhs)
        )
    lam = outcome.dual
    if len(lam) != len(inst.rows) or any(l < 0 for l in lam):
        return False
    combos = [
        sum(row[j] * l for row, l in zip(inst.rows, lam))
        for j in range(inst.num_vars)
    ]
    return all(c == 0 for c in combos) and sum(
        b * l for b, l in zip(inst.rhs, lam)
    ) == 1


def lp_feasibility(inst: LPInstance) -> LPOutcome:
    """Exact Farkas alternative for ``A s >= b``."""
    m = len(inst.rows)
    ns = inst.num_vars
    if m == 0:
        return LPOutcome(solution=tuple())

    # Rows are flipped to make the right-hand side non-negative; the flip
    # signs must be undone when assembling the dual multipliers.
    flip = [Fraction(1) if b >= 0 else Fraction(-1) for b in inst.rhs]

    # Columns: s+ (ns) | s- (ns) | surplus (m) | artificial (m) | rhs.
    width = 2 * ns + 2 * m + 1
    art0 = 2 * ns + m
    tableau: list[list[Fraction]] = []
    for i, (row, b) in enumerate(zip(inst.rows, inst.rhs)):
        t = [Fraction(0)] * width
        for j, a in enumerate(row):
            t[j] = flip[i] * a
            t[ns + j] = -flip[i] * a
        t[2 * ns + i] = -flip[i]
        t[art0 + i] = Fraction(1)
        t[-1] = flip[i] * b
        tableau.append(t)

    # Phase-1 objective row: reduced costs of min(sum of artificials) with
    # the artificial basis; last cell holds minus the objective value.
    obj = [Fraction(0)] * width
    for t in tableau:
        for j in range(width):
            obj[j] -= t[j]
    for i in range(m):
        obj[art0 + i] = Fraction(0)

    basis = [art0 + i for i in range(m)]

    while True:
        entering = -1
        for j in range(width - 1):
            if obj[j] < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best: Optional[Fraction] = None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            raise RuntimeError("phase-1 objective unbounded; invariant broken")
        pivot = tableau[leaving][entering]
        prow = [c / pivot for c in tableau[leaving]]
        tableau[leaving] = prow
        for i in range(m):
            if i != leaving and tableau[i][entering] != 0:
                f = tableau[i][entering]
                tableau[i] = [c - f * pc for c, pc in zip(tableau[i], prow)]
        if obj[entering] != 0:
            f = obj[entering]
            obj = [c - f * pc for c, pc in zip(obj, prow)]
        basis[leaving] = entering

    value = -obj[-1]
    if value == 0:
        assign = [Fraction(0)] * (width - 1)
        for i, col in enumerate(basis):
            assign[col] = tableau[i][-1]
        solution = tuple(assign[j] - assign[ns + j] for j in range(ns))
        outcome = LPOutcome(solution=solution)
    else:
        # Shadow prices: y_i = 1 - (reduced cost of artificial i).  They
        # satisfy y^T M <= 0 columnwise and y^T rhs = value > 0, so the
        # unflipped, rescaled multipliers form an exact Farkas certificate.
        lam = tuple(flip[i] * (1 - obj[art0 + i]) / value for i in range(m))
        outcome = LPOutcome(dual=lam)

    if not verify_outcome(inst, outcome):
        raise RuntimeError("simplex produced an outcome that fails recheck")
    return outcome


@dataclass(frozen=True)
class SeparationWitness:
    """q whose product with p stays non-negative while the product with p'
    goes negative at ``neg_index``."""

    q: Poly
    neg_index: int


def in_cone(p: Poly, q: Poly) -> bool:
    """Membership of q in S_p: q positive on the positive axis and p*q
    coefficientwise non-negative."""
    if q.is_zero or q(1) == 0:
        return False
    return in_M(q) and is_nonneg(mul(p, q))


def _check_preconditions(p: Poly, pprime: Poly) -> tuple[Poly, Poly]:
    if p.is_zero or pprime.is_zero:
        raise PreconditionViolated("inputs must be nonzero")
    if p(1) == 0 or pprime(1) == 0:
        raise PreconditionViolated("inputs must have nonzero total mass")
    pn = normalize(p)
    qn = normalize(pprime)
    if not is_nonneg(pn) or not is_nonneg(qn):
        raise PreconditionViolated("inputs must be non-negative after normalization")
    if qn.degree > pn.degree:
        raise PreconditionViolated("deg p' must not exceed deg p")
    if pn.coeff(0) == 0:
        raise PreconditionViolated("p must have a nonzero constant coefficient")
    if pn == qn:
        raise PreconditionViolated("p and p' coincide after normalization")
    return pn, qn


def _separation_core(pn: Poly, qn: Poly) -> tuple[Poly, Poly, int]:
    """Returns (witness q, padding r, neg_index) for normalized inputs."""
    n0 = pn.degree
    if any(pn.coeff(k) == 0 for k in range(n0 + 1)):
        pad = Poly([1, 1]) ** n0
    else:
        pad = Poly([1])
    work_p = mul(pn, pad)
    work_q = mul(qn, pad)
    n = work_p.degree

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for k in range(n + 2):
        rows.append([work_p.coeff(k - j) for j in range(n + 2)])
        rhs.append(Fraction(0))
    rows.append([-work_q.coeff(n + 1 - j) for j in range(n + 2)])
    rhs.append(Fraction(1))

    outcome = lp_feasibility(LPInstance.build(rows, rhs))
    if not outcome.is_feasible:
        raise RuntimeError("separation system infeasible; invariant broken")
    s = Poly(outcome.solution)

    ps = mul(work_p, s)
    c_floor = Fraction(0)
    for k in range(n + 2, 2 * n + 3):
        denom = work_p.coeff(k - (n + 2))
        if denom > 0:
            need = -ps.coeff(k) / denom
            if need > c_floor:
                c_floor = need
    big_c = c_floor + 1
    core = s + Poly([0] * (n + 2) + [big_c])
    return core, pad, n + 1


def separate(p: Poly, pprime: Poly) -> SeparationWitness:
    """A witness q in S_p \\ S_{p'} for distinct non-negative p, p'."""
    pn, qn = _check_preconditions(p, pprime)
    core, pad, neg_index = _separation_core(pn, qn)
    witness = mul(core, pad)
    assert is_nonneg(mul(pn, witness))
    assert mul(qn, witness).coeff(neg_index) < 0
    return SeparationWitness(q=witness, neg_index=neg_index)


def separate_dense(p: Poly, pprime: Poly, denom_cap: int) -> SeparationWitness:
    """A separating witness whose coefficient denominators all divide
    ``denom_cap``.

    The exact witness is perturbed by ``eps * (x+1)**deg(q)``, which makes
    every coefficient of ``p * q`` strictly positive while the separating
    coefficient stays negative, then each coefficient is rounded to the
    grid ``(1/denom_cap) * Z``.  Both product conditions are re-verified on
    the rounded polynomial; :class:`CapTooSmall` is raised when the grid is
    too coarse to keep them.
    """
    if denom_cap < 1:
        raise PreconditionViolated("denom_cap must be a positive integer")
    pn, qn = _check_preconditions(p, pprime)
    core, pad, neg_index = _separation_core(pn, qn)
    q = mul(core, pad)

    bump = Poly([1, 1]) ** q.degree
    neg0 = mul(qn, q).coeff(neg_index)
    drift = mul(qn, bump).coeff(neg_index)
    if drift <= 0:
        eps = Fraction(1)
    else:
        eps = min(Fraction(1), -neg0 / (2 * drift))
    q_eps = q + bump.scale(eps)

    rounded = Poly(
        Fraction(round(c * denom_cap), denom_cap) for c in q_eps.coeffs
    )
    if rounded.is_zero:
        raise CapTooSmall("witness rounds to zero on this grid")
    kept = mul(pn, rounded)
    if any(c <= 0 for c in kept.coeffs[: kept.degree + 1]):
        raise CapTooSmall("rounding lost strict positivity of p * q")
    if mul(qn, rounded).coeff(neg_index) >= 0:
        raise CapTooSmall("rounding lost the separating negative coefficient")
    return SeparationWitness(q=rounded, neg_index=neg_index)
