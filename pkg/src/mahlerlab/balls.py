"""Complex ball arithmetic: midpoint at a stated binary precision plus a
shared radius.

The enclosure contract: the true value always lies in the closed disk
|z - mid| <= rad.  Midpoints are mpmath complex numbers computed at the
working precision; radii are plain floats whose arithmetic is made safe by
rounding every radius operation one float step upward (math.nextafter), so a
radius never underestimates.

This is deliberately small: only the operations the laboratory needs
(addition, multiplication, integer scaling, powers, |.| and log|.| bounds,
roots of unity).  It is not a general interval library.
"""

from __future__ import annotations

import math

import mpmath
from mpmath import mpf, mpc

_INF = math.inf


def _up(x):
    """Round a nonnegative float up by one step: a cheap directed rounding."""
    if x != x:  # NaN guard; propagate as infinite radius
        return _INF
    return math.nextafter(x, _INF)


def _up_add(a, b):
    return _up(a + b)


def _up_mul(a, b):
    return _up(a * b)


def _abs_upper(z: mpc):
    """A float upper bound for |z| (hypot of upper-rounded components)."""
    re = abs(float(z.real))
    im = abs(float(z.imag))
    # float(mpf) rounds to nearest; one nextafter step absorbs it
    return _up(math.hypot(_up(re), _up(im)))


def _round_slack(z: mpc, prec):
    """Upper bound for the rounding error of forming z at prec bits:
    a few ulps per component."""
    scale = _up_add(abs(float(z.real)), abs(float(z.imag)))
    return _up_mul(scale, math.ldexp(1.0, 2 - prec))


class CertifiedComplex:
    """Disk enclosure mid +- rad for a complex number, at `prec` bits."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad, prec):
        object.__setattr__(self, "mid", mid)
        object.__setattr__(self, "rad", float(rad))
        object.__setattr__(self, "prec", int(prec))
        if self.rad < 0:
            raise ValueError("radius must be nonnegative")

    def __setattr__(self, name, value):
        raise AttributeError("CertifiedComplex is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def exact_int(cls, n, prec):
        return cls(mpc(n, 0), 0.0, prec)

    @classmethod
    def from_mpc(cls, z, rad, prec):
        return cls(mpc(z), rad, prec)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        with mpmath.workprec(prec):
            m = self.mid + other.mid
        rad = _up_add(_up_add(self.rad, other.rad), _round_slack(m, prec))
        return CertifiedComplex(m, rad, prec)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return CertifiedComplex(-self.mid, self.rad, self.prec)

    def __sub__(self, other):
        return self.__add__(self._coerce(other).__neg__())

    def __mul__(self, other):
        if isinstance(other, int):
            with mpmath.workprec(self.prec):
                m = self.mid * other
            rad = _up_mul(self.rad, _up(abs(float(other))))
            # integer scaling of an mpf still rounds once per component
            rad = _up_add(rad, _round_slack(m, self.prec))
            return CertifiedComplex(m, rad, self.prec)
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        with mpmath.workprec(prec):
            m = self.mid * other.mid
        a1 = _abs_upper(self.mid)
        a2 = _abs_upper(other.mid)
        rad = _up_add(_up_mul(a1, other.rad), _up_mul(a2, self.rad))
        rad = _up_add(rad, _up_mul(self.rad, other.rad))
        # componentwise products each round at prec; bound by the magnitude
        # product times a few ulps
        slack = _up_mul(_up_mul(a1, a2), math.ldexp(1.0, 3 - prec))
        rad = _up_add(rad, slack)
        return CertifiedComplex(m, rad, prec)

    def __rmul__(self, other):
        return self.__mul__(other)

    def pow_int(self, n):
        if n < 0:
            raise ValueError("negative powers not supported")
        result = CertifiedComplex.exact_int(1, self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _coerce(self, other):
        if isinstance(other, CertifiedComplex):
            return other
        if isinstance(other, int):
            return CertifiedComplex.exact_int(other, self.prec)
        raise TypeError(f"cannot combine CertifiedComplex with {type(other)!r}")

    # -- predicates and bounds ----------------------------------------------

    def abs_interval(self):
        """(lo, hi) floats with lo <= |value| <= hi."""
        a = _abs_upper(self.mid)
        hi = _up_add(a, self.rad)
        # lower bound: |mid| can be overestimated by at most 2 float steps
        lo = (a - 2 * abs(math.ulp(a))) - self.rad
        return (max(lo, 0.0), hi)

    def contains_zero(self):
        lo, _ = self.abs_interval()
        return lo <= 0.0

    def contains_value(self, z):
        """True if the exact complex number z provably lies in the disk
        (conservative: may return False near the boundary)."""
        with mpmath.workprec(self.prec + 30):
            d = abs(self.mid - mpc(z))
        return float(d) * (1 + 1e-12) <= self.rad or d == 0

    def log_abs_interval(self):
        """(lo, hi) floats enclosing log|value|; lo = -inf if 0 may be inside."""
        lo_abs, hi_abs = self.abs_interval()
        hi = _up(math.log(hi_abs)) if hi_abs > 0 else -_INF
        if lo_abs <= 0.0:
            return (-_INF, hi)
        lo = math.nextafter(math.log(lo_abs), -_INF)
        return (lo, hi)

    def log_abs(self, max_error):
        """Midpoint log|.| if certified within max_error, else None."""
        lo, hi = self.log_abs_interval()
        if not math.isfinite(lo) or hi - lo > 2 * max_error:
            return None
        return 0.5 * (lo + hi)

    def midpoint_complex(self):
        return complex(self.mid)

    def contains_disk(self, other, slack=1e-13):
        """True if other's disk is contained in this one's value set, up to a
        relative float slack (used by enclosure-monotonicity tests)."""
        with mpmath.workprec(max(self.prec, other.prec) + 30):
            d = float(abs(self.mid - other.mid))
        return d + other.rad <= self.rad * (1 + slack) + 1e-320

    def __repr__(self):
        return f"CertifiedComplex({complex(self.mid)!r} +- {self.rad:.3e} @ {self.prec}b)"


def unit_root(order, k, prec):
    """Certified enclosure of e^{2 pi i k / order} at `prec` bits.

    The midpoint is computed with 20 guard bits; a radius of 2^(2-prec)
    generously covers the argument rounding, the sin/cos evaluation and the
    final rounding to the working precision.
    """
    k = int(k) % int(order)
    with mpmath.workprec(prec + 20):
        angle = 2 * mpmath.pi * k / order
        z = mpc(mpmath.cos(angle), mpmath.sin(angle))
    with mpmath.workprec(prec):
        z = mpc(z.real + mpf(0), z.imag + mpf(0))
    return CertifiedComplex(z, math.ldexp(1.0, 2 - prec), prec)
