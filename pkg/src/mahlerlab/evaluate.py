"""Certified evaluation of Laurent polynomials at torsion points, and the
exact vanishing test.

Evaluation: every monomial of P at a torsion point is itself a root of unity
scaled by the coefficient, with exponent computed exactly mod N, so P(zeta)
is a short sum of certified unit-circle enclosures.  Radii shrink
geometrically as the working precision grows.

Exact zero test: reduce the point to its exact order N', substitute to get a
univariate Q(t) of degree < N' with Q(zeta_{N'}) = P(zeta) for the primitive
root zeta_{N'}, and test divisibility by the cyclotomic polynomial Phi_{N'}.
One exact integer division decides vanishing; the decision is Galois
invariant.
"""

from __future__ import annotations

import math

from .balls import CertifiedComplex, unit_root
from .cyclo import cyclotomic
from .errors import PrecisionExhausted
from .laurent import LaurentPoly, UniPoly
from .torsion import TorsionPoint

MIN_PRECISION = 32
DEFAULT_START_PRECISION = 64
PRECISION_CAP = 8192


def evaluate(p: LaurentPoly, z: TorsionPoint, precision=DEFAULT_START_PRECISION):
    """Certified disk enclosing P(zeta) at the given precision in bits."""
    if p.dim != z.dim:
        raise ValueError("dimension mismatch between polynomial and point")
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION}")
    acc = CertifiedComplex.exact_int(0, precision)
    n = z.order
    for exps, c in sorted(p.terms.items()):
        k = sum(e * a for e, a in zip(exps, z.exps)) % n
        acc = acc + unit_root(n, k, precision) * c
    return acc


def substitute_monomial(p: LaurentPoly, z: TorsionPoint) -> UniPoly:
    """Q(t) = P(t^{a_1}, ..., t^{a_d}) reduced mod t^N - 1.

    Evaluating Q at any primitive N-th root of unity recovers P at the
    corresponding Galois conjugate of zeta.
    """
    if p.dim != z.dim:
        raise ValueError("dimension mismatch between polynomial and point")
    n = z.order
    coeffs = [0] * n
    for exps, c in p.terms.items():
        k = sum(e * a for e, a in zip(exps, z.exps)) % n
        coeffs[k] += c
    return UniPoly(coeffs)


def is_zero_at(p: LaurentPoly, z: TorsionPoint) -> bool:
    """Exact test of P(zeta) = 0 via one cyclotomic divisibility check."""
    zp = z.primitive_form()
    q = substitute_monomial(p, zp)
    if q.is_zero:
        return True
    n1 = zp.order
    if n1 == 1:
        return False  # q is a nonzero constant
    return cyclotomic(n1).divides(q)


def log_abs_certified(
    p: LaurentPoly,
    z: TorsionPoint,
    max_error,
    start_precision=DEFAULT_START_PRECISION,
    precision_cap=PRECISION_CAP,
):
    """(log|P(zeta)|, precision_used) with |error| <= max_error, or
    (None, precision_used) when P vanishes exactly at the point.

    Escalation policy: start at `start_precision` bits and double until the
    enclosure either excludes zero with the log certified, or the exact test
    confirms a zero.  The trivial field-norm lower bound on |P(zeta)| for
    nonvanishing P makes termination certain at desk scale; the hard cap
    turns pathological inputs into a diagnostic error instead of a hang.
    """
    prec = max(MIN_PRECISION, start_precision)
    zero_checked = False
    while prec <= precision_cap:
        ball = evaluate(p, z, prec)
        if ball.contains_zero():
            if not zero_checked:
                if is_zero_at(p, z):
                    return None, prec
                zero_checked = True
        else:
            val = ball.log_abs(max_error)
            if val is not None:
                return val, prec
        prec *= 2
    raise PrecisionExhausted(
        f"could not certify log|P| at {z!r} within {precision_cap} bits",
        point=z,
        precision=precision_cap,
    )


def is_zero_heuristic_then_exact(p, z, prec=DEFAULT_START_PRECISION):
    """Cheap enclosure first, exact divisibility only when needed."""
    ball = evaluate(p, z, prec)
    if not ball.contains_zero():
        return False
    return is_zero_at(p, z)


def min_nonzero_modulus_lower_bound(p: LaurentPoly, n: int):
    """Liouville-style crude lower bound on |P(zeta)| over nonvanishing
    N-torsion points: the full Galois-orbit product of the nonzero algebraic
    integer P(zeta) is a nonzero rational integer, so a single factor is at
    least (sum of |coefficients|)^(1 - phi(N) * d-ish).  Only used for
    reporting; never as a substitute for certification."""
    from .cyclo import totient

    s = p.coeff_abs_sum()
    if s <= 0:
        raise ValueError("zero polynomial")
    return -(totient(n)) * math.log(s)
