"""Exact resultants and exact products of a polynomial over roots of unity.

Sign convention, fixed package-wide: Res(A, B) = lead(A)^deg(B) * prod B(alpha)
over the roots alpha of A (with multiplicity), equivalently the determinant
of the Sylvester matrix Syl(A, B).  Conjugate products such as
prod |alpha_i^N - 1| are realized through these resultants; every consumer
takes absolute values.

The heart of the module is `torsion_product`: the exact big integer
|prod_{zeta^N = 1, A(zeta) != 0} A(zeta)|,
with zero factors removed exactly.  Writing W = x^N - 1 and E for the
product of the cyclotomic polynomials Phi_M (M | N) that divide A (plus
Phi_1 when the zeta = 1 factor is excluded), the contributing points are the
roots of S = W / E, and the product factors as
    |content|^deg(S) * |Res(S, A0)| * prod_M |Res(S, Phi_M)|^{e_M}
over the cyclotomic part A = content * prod Phi_M^{e_M} * A0.  Each piece is
computed without ever constructing the degree-(N - deg E) polynomial S:

  * Res(S, B) = +- Res(B, W) / Res(B, E) whenever B shares no root with E;
    Res(B, W) reduces to a small resultant after x^N mod B (binary powering).
  * For M | N with Phi_M | A the quotient degenerates to 0/0; since the
    roots eta of Phi_M are simple roots of W = S * E, the identity
    S(eta) = W'(eta) / E'(eta) = N eta^{N-1} / E'(eta) gives
    |Res(Phi_M, S)| = N^phi(M) / |Res(Phi_M, E')|.

All arithmetic is exact; the only growth is in integer size.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclo import cyclotomic, cyclotomic_part, divisors, totient
from .laurent import UniPoly, x_pow_mod


# ---------------------------------------------------------------------------
# subresultant resultant


def resultant(a: UniPoly, b: UniPoly):
    """Exact resultant of two nonzero integer polynomials (subresultant
    pseudo-remainder sequence, Ducos/Cohen bookkeeping for the sign)."""
    if a.is_zero or b.is_zero:
        raise ValueError("resultant of a zero polynomial is not defined here")
    if a.degree() == 0:
        return a.coeffs[0] ** b.degree()
    if b.degree() == 0:
        return b.coeffs[0] ** a.degree()
    s = 1
    if a.degree() < b.degree():
        if (a.degree() & 1) and (b.degree() & 1):
            s = -s
        a, b = b, a
    g = 1
    h = 1
    while True:
        d = a.degree() - b.degree()
        if (a.degree() & 1) and (b.degree() & 1):
            s = -s
        r = a.pseudo_rem(b)
        if r.is_zero:
            return 0
        a, b = b, r
        denom = g * h**d
        b = UniPoly([c // denom for c in b.coeffs])
        g = a.lead
        h = h if d == 0 else (g**d) // (h ** (d - 1)) if d > 1 else g
        if b.degree() == 0:
            break
    # h^(1 - deg a) * lead(b)^(deg a), kept exact
    da = a.degree()
    val = b.coeffs[0] ** da
    if da > 1:
        num, den = val, h ** (da - 1)
        q, rem = divmod(num, den)
        assert rem == 0, "subresultant invariant violated"
        val = q
    return s * val


def sylvester_matrix(a: UniPoly, b: UniPoly):
    """Sylvester matrix of A and B; its determinant is Res(A, B).  Used by
    tests as an independent oracle for the PRS implementation."""
    m, n = a.degree(), b.degree()
    size = m + n
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + ac + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + bc + [0] * (size - n - 1 - i))
    return rows


# ---------------------------------------------------------------------------
# resultants against x^N - 1 without building degree-N polynomials


def _res_small(a: UniPoly, b: UniPoly):
    if b.is_zero:
        return 0
    if a.degree() == 0:
        return a.coeffs[0] ** max(b.degree(), 0)
    if b.degree() == 0:
        return b.coeffs[0] ** a.degree()
    return resultant(a, b)


def res_with_x_pow_n_minus_1(b: UniPoly, n: int):
    """Res(B, x^N - 1) exactly, via x^N mod B by binary powering.

    Res(B, W) = lead(B)^(deg W - deg R) * Res(B, R) for R = W mod B; the
    rational remainder (non-monic B) is cleared by lambda^deg(B) scaling.
    """
    if b.is_zero:
        raise ValueError("zero polynomial")
    if b.degree() == 0:
        return b.coeffs[0] ** n
    rem = x_pow_mod(n, b)
    rem[0] -= 1
    # clear denominators
    lam = 1
    for c in rem:
        if isinstance(c, Fraction):
            lam = lam * c.denominator // math.gcd(lam, c.denominator)
    scaled = UniPoly([int(c * lam) for c in rem])
    if scaled.is_zero:
        return 0
    dr = scaled.degree()
    val = _res_small(b, scaled)  # = lam^deg(B) * Res(B, R)
    num = b.lead ** (n - dr) * val
    den = lam ** b.degree()
    q, r = divmod(num, den)
    assert r == 0, "denominator clearing failed to divide out"
    return q


def _excluded_product(excluded):
    e = UniPoly([1])
    for m in sorted(excluded):
        e = e * cyclotomic(m)
    return e


class TorsionProduct:
    """Result of an exact product over mu_N with zeros skipped."""

    __slots__ = ("value", "n", "zero_orders", "zero_count", "skip_order_one")

    def __init__(self, value, n, zero_orders, skip_order_one):
        self.value = value
        self.n = n
        self.zero_orders = dict(zero_orders)
        self.zero_count = sum(totient(m) for m in zero_orders)
        self.skip_order_one = skip_order_one

    def __repr__(self):
        return (
            f"TorsionProduct(value={self.value}, N={self.n}, "
            f"zero_orders={sorted(self.zero_orders)}, skip1={self.skip_order_one})"
        )


def torsion_product(a: UniPoly, n: int, skip_order_one=False) -> TorsionProduct:
    """|prod A(zeta)| over zeta in mu_N with A(zeta) != 0, as an exact
    nonnegative integer; optionally also excluding the point zeta = 1.

    `zero_orders` in the result maps each exact order M (M | N) at which A
    vanishes to its multiplicity in A; the number of skipped points is
    sum phi(M) over those orders (excluding the zeta = 1 exclusion, which is
    bookkept separately by `skip_order_one`).
    """
    if a.is_zero:
        raise ValueError("zero polynomial has no torsion product")
    n = int(n)
    if n < 1:
        raise ValueError("N must be >= 1")
    content, cyc_factors, a0 = cyclotomic_part(a)
    bad = {m: e for m, e in cyc_factors.items() if n % m == 0}
    excluded = set(bad)
    if skip_order_one:
        excluded.add(1)
    if len(excluded) == len(divisors(n)):
        # every point of mu_N is excluded; empty product
        return TorsionProduct(1, n, bad, skip_order_one)
    e_poly = _excluded_product(excluded)
    deg_s = n - e_poly.degree()

    total = abs(content) ** deg_s

    # non-cyclotomic part: Res(S, A0) = +- Res(A0, W) / Res(A0, E)
    if a0.degree() >= 1:
        num = res_with_x_pow_n_minus_1(a0, n)
        den = _res_small(a0, e_poly) if e_poly.degree() >= 1 else 1
        assert den != 0, "A0 unexpectedly shares a root with the excluded set"
        q, r = divmod(abs(num), abs(den))
        assert r == 0, "torsion product: non-cyclotomic division not exact"
        total *= q
    elif not a0.is_zero and a0.degree() == 0:
        total *= abs(a0.coeffs[0]) ** deg_s

    # cyclotomic factors of A
    for m, mult in cyc_factors.items():
        phim = cyclotomic(m)
        if n % m == 0:
            # Phi_M roots are excluded points; S(eta) = N eta^{N-1} / E'(eta)
            # |prod_eta S(eta)| = N^phi(M) / |Res(Phi_M, E')|
            dprime = e_poly.derivative()
            den = _res_small(phim, dprime)
            assert den != 0, "excluded-set derivative vanished at a root"
            num = n ** totient(m)
            q, r = divmod(num, abs(den))
            assert r == 0, "torsion product: derivative trick division not exact"
            piece = q
        else:
            num = res_with_x_pow_n_minus_1(phim, n)
            den = _res_small(phim, e_poly) if e_poly.degree() >= 1 else 1
            assert den != 0
            q, r = divmod(abs(num), abs(den))
            assert r == 0, "torsion product: cyclotomic division not exact"
            piece = q
        total *= piece**mult

    return TorsionProduct(total, n, bad, skip_order_one)


def torsion_product_bruteforce(a: UniPoly, n: int, skip_order_one=False, dps=60):
    """Independent floating oracle for torsion_product (tests only):
    multiply |A| over the N-th roots of unity with mpmath and round."""
    import mpmath

    with mpmath.workdps(dps):
        total = mpmath.mpf(1)
        count = 0
        for k in range(n):
            if skip_order_one and k == 0:
                continue
            z = mpmath.e ** (2j * mpmath.pi * k / n)
            v = mpmath.mpf(0) * 1j
            v = sum(c * z**i for i, c in enumerate(a.coeffs))
            av = abs(v)
            if av < mpmath.mpf(10) ** (-dps // 2):
                count += 1
                continue
            total *= av
        return int(mpmath.nint(total)), count
