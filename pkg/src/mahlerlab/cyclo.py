"""Cyclotomic polynomials, Euler's totient, and exact detection of the
cyclotomic part of an integer polynomial.

Phi_N is computed by the recursive exact division
Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d and cached.  Detection of
cyclotomic factors of a polynomial A uses the finiteness of
{M : phi(M) <= deg A} together with a cheap floating pre-filter before any
exact division is attempted.
"""

from __future__ import annotations

import cmath
import functools
import math

from .laurent import UniPoly


def factorize(n):
    """Prime factorization as a dict prime -> exponent (trial division)."""
    n = int(n)
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n):
    """Euler's phi, the degree of the N-th cyclotomic field."""
    result = int(n)
    for p in factorize(n):
        result -= result // p
    return result


def divisors(n):
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def units_mod(n, count=None):
    """The units mod n in increasing order, optionally truncated."""
    out = []
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            out.append(j)
            if count is not None and len(out) == count:
                break
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic(n) -> UniPoly:
    """The N-th cyclotomic polynomial Phi_N, exactly."""
    n = int(n)
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if n == 1:
        return UniPoly([-1, 1])
    num = UniPoly([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in divisors(n):
        if d < n:
            num = num.exact_div(cyclotomic(d))
    return num


def x_pow_minus_1(n) -> UniPoly:
    return UniPoly([-1] + [0] * (n - 1) + [1])


def cyclotomic_index_candidates(max_degree):
    """All M with phi(M) <= max_degree.  phi(M) >= sqrt(M/2) bounds the
    search to M <= 2*max_degree^2."""
    if max_degree < 1:
        return []
    cap = 2 * max_degree * max_degree + 2
    return [m for m in range(1, cap + 1) if totient(m) <= max_degree]


def cyclotomic_part(a: UniPoly):
    """Split A = content * (prod Phi_M^{e_M}) * A0 with A0 free of
    cyclotomic factors.

    Returns (content_with_sign, {M: e_M}, A0) where A0 is primitive with
    positive leading coefficient times the residual sign folded into
    content.  A float pre-filter (|A(zeta_M)| large implies Phi_M does not
    divide) avoids useless exact divisions.
    """
    if a.is_zero:
        raise ValueError("zero polynomial")
    cont = a.content()
    sign = 1 if a.lead > 0 else -1
    rest = UniPoly([c // (sign * cont) for c in a.coeffs])
    factors = {}
    deg = rest.degree()
    if deg >= 1:
        for m in cyclotomic_index_candidates(deg):
            # reject M quickly when |A(e^{2 pi i/M})| is clearly nonzero: the
            # double-precision Horner error stays far below this threshold,
            # so a true cyclotomic factor can never be filtered away
            z = cmath.exp(2j * math.pi / m)
            try:
                coeff_sum = float(sum(abs(c) for c in rest.coeffs))
                threshold = max(coeff_sum * (rest.degree() + 1) * 1e-12, 1e-300)
                if abs(rest.evaluate(z)) > threshold:
                    continue
            except OverflowError:
                pass  # coefficients too large for floats; fall back to exact test
            phi = cyclotomic(m)
            while phi.degree() <= rest.degree() and phi.divides(rest):
                rest = rest.exact_div_rational(phi)
                factors[m] = factors.get(m, 0) + 1
    return sign * cont, factors, rest


def order_of_root_of_unity_factor(a: UniPoly):
    """Convenience wrapper: the set of M with Phi_M | A."""
    _, factors, _ = cyclotomic_part(a)
    return set(factors)
