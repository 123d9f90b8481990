"""Certified complex roots of integer polynomials.

Pipeline: strip content, split off the cyclotomic part exactly (those roots
are known roots of unity, exactly on the circle), strip powers of x, then
Yun-decompose the remainder into squarefree factors and isolate each
factor's roots numerically with mpmath.  Each numeric approximation r is
certified by the classical inclusion disk
    |z - r| <= deg(f) * |f(r) / f'(r)|,
which always contains at least one root of f; when the disks are pairwise
disjoint, a counting argument pins exactly one root per disk.  Precision
escalates until disjointness holds.

Every enclosure is classified against the unit circle: inside, outside, or
flagged as straddling at the working precision (Salem-type conjugates sit
exactly on the circle and can never be separated; cyclotomic roots never
reach this code path because they are removed exactly first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .balls import CertifiedComplex
from .cyclo import cyclotomic_part, totient
from .errors import PrecisionExhausted
from .laurent import UniPoly, squarefree_decomposition

# classification labels
INSIDE = "inside"
OUTSIDE = "outside"
ON_CIRCLE = "on_circle"  # exact root of unity (cyclotomic factor)
FLAGGED = "flagged_on_circle"  # straddles the circle at the working precision


@dataclass(frozen=True)
class RootEnclosure:
    ball: CertifiedComplex
    multiplicity: int
    location: str
    unit_order: int | None = None  # set for exact roots of unity

    def abs_interval(self):
        return self.ball.abs_interval()


def _certify_squarefree(f: UniPoly, prec_bits):
    """Isolating disks for all roots of a squarefree integer polynomial at
    the given precision, or None when the disks fail to separate."""
    n = f.degree()
    dps = max(30, int(prec_bits * 0.30103) + 10)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c) for c in reversed(f.coeffs)]
        try:
            approx = mpmath.polyroots(coeffs, maxsteps=200, extraprec=prec_bits)
        except mpmath.libmp.libhyper.NoConvergence:
            return None
        fp = f.derivative()
        disks = []
        for r in approx:
            val = _horner_mpc(f, r)
            dval = _horner_mpc(fp, r)
            if dval == 0:
                return None
            rho = float(n * abs(val) / abs(dval)) * (1 + 1e-12) + 1e-320
            disks.append((mpmath.mpc(r), rho))
        # pairwise disjoint?
        for i in range(len(disks)):
            for j in range(i + 1, len(disks)):
                d = abs(disks[i][0] - disks[j][0])
                if float(d) <= disks[i][1] + disks[j][1]:
                    return None
    return disks


def _horner_mpc(f: UniPoly, x):
    acc = mpmath.mpc(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def roots_certified(a: UniPoly, precision=128, precision_cap=8192):
    """Certified enclosures of all complex roots of A, with multiplicities.

    Raises PrecisionExhausted when numeric isolation cannot separate the
    root cluster within the precision cap (exact-circle roots of cyclotomic
    factors never get that far; they are split off exactly first).
    """
    if a.is_zero:
        raise ValueError("zero polynomial has no well-defined root set")
    out = []
    _, cyc_factors, rest = cyclotomic_part(a)
    for m, mult in sorted(cyc_factors.items()):
        for k in range(1, m + 1):
            if math.gcd(k, m) == 1:
                from .balls import unit_root

                out.append(
                    RootEnclosure(
                        ball=unit_root(m, k, precision),
                        multiplicity=mult,
                        location=ON_CIRCLE,
                        unit_order=m,
                    )
                )
    # powers of x
    v = 0
    cs = list(rest.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
        v += 1
    if v:
        out.append(
            RootEnclosure(
                ball=CertifiedComplex.exact_int(0, precision),
                multiplicity=v,
                location=INSIDE,
            )
        )
        rest = UniPoly(cs)
    if rest.degree() < 1:
        return out
    for f, mult in squarefree_decomposition(rest):
        if f.degree() < 1:
            continue
        prec = precision
        disks = None
        while prec <= precision_cap:
            disks = _certify_squarefree(f, prec)
            if disks is not None:
                break
            prec *= 2
        if disks is None:
            raise PrecisionExhausted(
                f"could not isolate roots of {f!r} within {precision_cap} bits",
                precision=precision_cap,
            )
        for mid, rho in disks:
            ball = CertifiedComplex(mid, rho, prec)
            lo, hi = ball.abs_interval()
            if lo > 1.0:
                loc = OUTSIDE
            elif hi < 1.0:
                loc = INSIDE
            else:
                loc = FLAGGED
            out.append(RootEnclosure(ball=ball, multiplicity=mult, location=loc))
    return out


def mahler_d1(a: UniPoly, tol=1e-12, precision_cap=8192):
    """Mahler measure of a univariate integer polynomial via Jensen's
    formula: log|lead| plus the log-moduli of the roots outside the unit
    circle.  Cyclotomic factors are removed exactly, so e.g. products of
    cyclotomics return exactly 0.0.  Absolute error at most `tol`.
    """
    if a.is_zero:
        raise ValueError("Mahler measure of the zero polynomial is undefined")
    lead = abs(a.lead)
    base = math.log(lead) if lead != 1 else 0.0
    if a.degree() < 1:
        return base
    prec = 128
    while prec <= precision_cap:
        total_lo = base
        total_hi = base
        for enc in roots_certified(a, precision=prec, precision_cap=precision_cap):
            if enc.location == ON_CIRCLE:
                continue  # exact roots of unity contribute nothing
            lo_abs, hi_abs = enc.abs_interval()
            lo_term = math.log(lo_abs) if lo_abs > 1.0 else 0.0
            hi_term = math.log(hi_abs) if hi_abs > 1.0 else 0.0
            total_lo += enc.multiplicity * lo_term
            total_hi += enc.multiplicity * hi_term
        if total_hi - total_lo <= tol:
            return 0.5 * (total_lo + total_hi)
        prec *= 2
    raise PrecisionExhausted(
        f"mahler_d1 could not reach tolerance {tol}", precision=precision_cap
    )


def unimodular_root_angles(a: UniPoly, precision=192):
    """Angles (as high-precision mpf, in [0, 1) turns) of the roots flagged
    on the unit circle, sorted increasingly.  Used for Diophantine probes of
    narrow approaches by roots of unity."""
    out = []
    for enc in roots_certified(a, precision=precision):
        if enc.location == FLAGGED:
            with mpmath.workprec(precision + 20):
                theta = mpmath.arg(enc.ball.mid) / (2 * mpmath.pi)
                out.append((theta % 1, enc))
    out.sort(key=lambda t: float(t[0]))
    return out
