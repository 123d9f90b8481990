"""Algebraic Z^d-actions as data: exact periodic-point component counts,
entropy via Mahler measure, growth tables, and equidistribution diagnostics.

For a cyclic action R_d/(P) the number of connected components of the group
of N.Z^d-periodic points is the exact integer |prod P(zeta)| over the
nonvanishing N-torsion points.  For d = 1 this is a resultant with the
shared cyclotomic factors of P and x^N - 1 divided out exactly; for d >= 2
it is a certified floating product whose enclosure is narrowed until it
pins the unique integer (the product over a Galois-stable set of algebraic
integers is a rational integer, so "width < 1/2 then round" is exact,
not a heuristic).

Toral automorphisms A in GL(m, Z) count periodic points by the exact
determinant |det(A^N - I)|; rational det != +-1 is admitted with the same
formula under a solenoid flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .errors import CapExceeded, PrecisionExhausted
from .evaluate import evaluate, is_zero_at
from .intlinalg import bareiss_det, identity, mat_pow, mat_sub, smith_normal_form
from .laurent import LaurentPoly, UniPoly
from .mahler import make_record, mahler_quadrature
from .resultants import torsion_product
from .roots import mahler_d1
from .torsion import TorsionPoint, torus_grid

FIBONACCI_MATRIX = ((0, 1), (1, 1))


@dataclass(frozen=True)
class CyclicAction:
    """The Z^d-action dual to R_d/(P) for a nonzero Laurent polynomial P."""

    p: LaurentPoly

    def __post_init__(self):
        if self.p.is_zero:
            raise ValueError("cyclic action requires a nonzero polynomial (finite entropy)")

    @property
    def dim(self):
        return self.p.dim


@dataclass(frozen=True)
class ToralAction:
    """An integer matrix acting on the m-torus; det = +-1 for an honest
    automorphism, other nonzero determinants are solenoid-flagged."""

    matrix: tuple

    def __init__(self, matrix):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        m = len(rows)
        if m == 0 or any(len(r) != m for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "matrix", rows)
        if self.det == 0:
            raise ValueError("matrix must be nonsingular")

    @property
    def size(self):
        return len(self.matrix)

    @property
    def det(self):
        return bareiss_det([list(r) for r in self.matrix])

    @property
    def is_automorphism(self):
        return self.det in (1, -1)

    @property
    def is_solenoid(self):
        return not self.is_automorphism

    def char_poly(self) -> UniPoly:
        """Characteristic polynomial det(t I - A), monic, exact
        (Faddeev-LeVerrier; the divisions are exact by construction)."""
        m = self.size
        a = [list(r) for r in self.matrix]
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        mk = [row[:] for row in a]
        for k in range(1, m + 1):
            tr = sum(mk[i][i] for i in range(m))
            c, rem = divmod(-tr, k)
            assert rem == 0, "Faddeev-LeVerrier division must be exact"
            coeffs[m - k] = c
            if k < m:
                for i in range(m):
                    mk[i][i] += c
                mk = [[sum(a[i][t] * mk[t][j] for t in range(m)) for j in range(m)] for i in range(m)]
        return UniPoly(coeffs)


# ---------------------------------------------------------------------------
# component counts


def component_count(action: CyclicAction, n: int, precision_cap=1 << 20):
    """Exact |prod_{zeta in mu_N^d, P(zeta) != 0} P(zeta)| as a big integer."""
    p = action.p
    if p.dim == 1:
        return torsion_product(p.to_unipoly(), n).value
    return _certified_product(p, n, precision_cap=precision_cap)


def _certified_product(p: LaurentPoly, n: int, precision_cap=1 << 20):
    """Certified product over nonzero torsion points, escalated until the
    enclosure pins a unique integer."""
    points = [TorsionPoint(n, e) for e in torus_grid(n, p.dim)]
    # the zero set is decided exactly once; it does not depend on precision
    zeros = set()
    nonzero_pts = []
    for pt in points:
        ball = evaluate(p, pt, 64)
        if ball.contains_zero() and is_zero_at(p, pt):
            zeros.add(pt)
        else:
            nonzero_pts.append(pt)

    # estimate the bits the product needs: |P| <= coeff sum per factor
    s = max(p.coeff_abs_sum(), 2)
    prec = 64
    est_bits = int(len(nonzero_pts) * math.log2(s)) + 64
    while prec < est_bits:
        prec *= 2

    while prec <= precision_cap:
        with mpmath.workprec(prec):
            prod = mpmath.mpc(1)
            log_rel = 0.0  # sum of log(1 + per-factor relative half-width)
            ok = True
            for pt in nonzero_pts:
                ball = evaluate(p, pt, prec)
                lo, hi = ball.abs_interval()
                if lo <= 0.0:
                    ok = False
                    break
                rel = ball.rad / lo
                log_rel += math.log1p(rel) + math.log1p(2.0 ** (3 - prec))
                prod *= ball.mid
            if ok:
                total_rel = math.expm1(log_rel)
                mag = abs(prod)
                half_width = mag * total_rel
                target = mpmath.nint(prod.real)
                err_real = abs(prod.real - target) + half_width
                imag_ok = abs(prod.imag) <= half_width * mpmath.mpf("1.000001") + mpmath.mpf(2) ** (-prec // 2)
                if err_real < mpmath.mpf(1) / 2 and imag_ok:
                    return abs(int(target))
        prec *= 2
    raise PrecisionExhausted(
        f"certified product over mu_{n}^{p.dim} did not stabilize",
        precision=precision_cap,
    )


def toral_count(action: ToralAction, n: int):
    """|det(A^N - I)| exactly, or None when A^N - I is singular (the fixed
    set is then positive dimensional: an infinite-count flag)."""
    a_n = mat_pow([list(r) for r in action.matrix], n)
    d = bareiss_det(mat_sub(a_n, identity(action.size)))
    if d == 0:
        return None
    return abs(d)


def entropy(action, quadrature_resolution=1024, tol=1e-12):
    """Topological entropy: Mahler measure of the defining polynomial
    (cyclic case) or of the companion polynomial (toral case).  Certified
    for univariate routes; quadrature estimate for cyclic d >= 2."""
    if isinstance(action, ToralAction):
        return mahler_d1(action.char_poly(), tol=tol)
    if isinstance(action, CyclicAction):
        if action.p.dim == 1:
            return mahler_d1(action.p.to_unipoly(), tol=tol)
        est, _ = mahler_quadrature(action.p, resolution=quadrature_resolution)
        return est
    raise TypeError("expected CyclicAction or ToralAction")


def growth_table(action, n_list, workers=1, **entropy_opts):
    """ConvergenceRecords of (1/N^d) log(count) against the entropy."""
    h = entropy(action, **entropy_opts)
    records = []
    for n in n_list:
        if isinstance(action, ToralAction):
            count = toral_count(action, n)
            dim = 1
            if count is None:
                records.append(
                    make_record(n, math.nan, h, {"singular": True, "count_digits": 0})
                )
                continue
        else:
            count = component_count(action, n)
            dim = action.dim
        stat = math.log(count) / n**dim if count > 0 else -math.inf
        records.append(
            make_record(n, stat, h, {"count_digits": len(str(count)), "singular": False})
        )
    return records


# ---------------------------------------------------------------------------
# periodic points and equidistribution diagnostics


def periodic_points_toral(action: ToralAction, n: int, cap=100000):
    """The finite group of N-periodic points of the toral automorphism,
    as exact rational coordinates in [0,1)^m.

    (A^N - I) x in Z^m is solved through the Smith normal form
    U (A^N - I) V = S: the points are V (t_1/s_1, ..., t_m/s_m) mod 1.
    Returns (count, points) where points is None when count exceeds the
    enumeration cap (summary-only mode).
    """
    m = action.size
    a_n = mat_pow([list(r) for r in action.matrix], n)
    mat = mat_sub(a_n, identity(m))
    d = bareiss_det(mat)
    if d == 0:
        raise ValueError("A^N - I is singular; the fixed set is not finite")
    count = abs(d)
    if count > cap:
        return count, None
    _, s, v = smith_normal_form(mat)
    diag = [s[i][i] for i in range(m)]
    points = []
    idx = [0] * m
    while True:
        coords = []
        for r in range(m):
            val = sum(Fraction(v[r][j], diag[j]) * idx[j] for j in range(m))
            coords.append(val % 1)
        points.append(tuple(coords))
        for j in range(m - 1, -1, -1):
            idx[j] += 1
            if idx[j] < diag[j]:
                break
            idx[j] = 0
        else:
            break
    assert len(points) == count, "group order must equal |det|"
    assert len(set(points)) == count, "enumerated points must be distinct"
    points.sort()
    return count, points


def discrepancy(points, dyadic_levels=6):
    """Star-discrepancy diagnostic of a finite point set in [0,1)^m.

    m = 1: the exact value via the sorted-gap formula
    D* = max_i max(i/n - x_i, x_i - (i-1)/n).
    m >= 2: a documented estimator, not exact D*: the maximum deviation
    |count/n - volume| over the fixed dyadic family of anchored boxes
    [0, k/2^L) per axis at the given level.  A lower bound for true D*.
    """
    pts = list(points)
    if not pts:
        raise ValueError("discrepancy of an empty point set")
    first = pts[0]
    m = len(first) if isinstance(first, tuple) else 1
    n = len(pts)
    if m == 1:
        xs = sorted(Fraction(x[0] if isinstance(x, tuple) else x) for x in pts)
        best = Fraction(0)
        for i, x in enumerate(xs, start=1):
            best = max(best, Fraction(i, n) - x, x - Fraction(i - 1, n))
        return float(best)
    arr = np.array([[float(c) for c in pt] for pt in pts])
    levels = 2**dyadic_levels
    best = 0.0
    # exact box counting over the dyadic grid (vectorized per box corner)
    corners = np.stack(
        np.meshgrid(*[np.arange(1, levels + 1) / levels for _ in range(m)], indexing="ij"),
        axis=-1,
    ).reshape(-1, m)
    for corner in corners:
        inside = np.all(arr < corner, axis=1)
        vol = float(np.prod(corner))
        best = max(best, abs(inside.mean() - vol))
    return best
