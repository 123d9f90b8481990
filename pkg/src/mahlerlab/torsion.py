"""Torsion points of the d-torus.

A point of mu_N^d is stored by its exponent vector a in (Z/N)^d: the complex
point is (e^{2 pi i a_1/N}, ..., e^{2 pi i a_d/N}).  Galois conjugation by a
unit j mod N is exponentwise multiplication by j.
"""

from __future__ import annotations

import math


class TorsionPoint:
    """A point of mu_N^d given by its exponent vector, reduced to [0, N)."""

    __slots__ = ("order", "exps")

    def __init__(self, order, exps):
        order = int(order)
        if order < 1:
            raise ValueError("order must be a positive integer")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "exps", tuple(int(a) % order for a in exps))

    def __setattr__(self, name, value):
        raise AttributeError("TorsionPoint is immutable")

    @property
    def dim(self):
        return len(self.exps)

    def exact_order(self):
        """The exact multiplicative order of the point: N / gcd(N, a_1..a_d)."""
        g = self.order
        for a in self.exps:
            g = math.gcd(g, a)
        return self.order // g

    def primitive_form(self):
        """The same complex point written with its exact order as modulus."""
        n1 = self.exact_order()
        g = self.order // n1
        return TorsionPoint(n1, tuple(a // g for a in self.exps))

    def galois_conjugate(self, j):
        """Conjugate by the automorphism zeta -> zeta^j; j must be a unit mod N."""
        if math.gcd(j, self.order) != 1:
            raise ValueError(f"j={j} is not coprime to N={self.order}")
        return TorsionPoint(self.order, tuple(a * j for a in self.exps))

    def inverse(self):
        """Complex conjugate point zeta^{-1}."""
        return TorsionPoint(self.order, tuple(-a for a in self.exps))

    def power_exponent(self, n):
        """Exponent c with zeta^n = e^{2 pi i c / N} for an integer vector n."""
        if len(n) != self.dim:
            raise ValueError("length mismatch")
        return sum(ni * ai for ni, ai in zip(n, self.exps)) % self.order

    def angles(self):
        """The arguments 2 pi a_i / N as floats."""
        return tuple(2.0 * math.pi * a / self.order for a in self.exps)

    def complex_point(self):
        return tuple(
            complex(math.cos(t), math.sin(t)) for t in self.angles()
        )

    def __eq__(self, other):
        return (
            isinstance(other, TorsionPoint)
            and self.order == other.order
            and self.exps == other.exps
        )

    def __hash__(self):
        return hash((self.order, self.exps))

    def __repr__(self):
        return f"TorsionPoint(N={self.order}, a={self.exps})"


def torus_grid(order, dim):
    """Iterate all exponent vectors of mu_N^d in odometer order, last
    coordinate fastest."""
    exps = [0] * dim
    while True:
        yield tuple(exps)
        for i in range(dim - 1, -1, -1):
            exps[i] += 1
            if exps[i] < order:
                break
            exps[i] = 0
        else:
            return
