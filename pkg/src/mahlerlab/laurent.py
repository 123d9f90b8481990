"""Exact integer Laurent polynomials in d variables, and dense univariate
integer polynomials.

``LaurentPoly`` is the central data type of the whole laboratory: a finite
map from exponent vectors in Z^d to nonzero big-integer coefficients.  All
arithmetic is exact.  Instances are immutable by convention (no mutating
methods; the term map is copied on construction) and safe to share across
threads.

``UniPoly`` is a dense univariate companion used for cyclotomic polynomials,
companion polynomials of integer matrices, resultants and root finding.
Coefficients are stored constant term first; the leading coefficient is
nonzero unless the polynomial is zero (empty tuple).

Text format for Laurent polynomials: terms like ``3*x1^2*x2^-1`` joined by
``+`` / ``-``.  Bare variable names ``x, y, z, w`` (or ``t`` for the
univariate case) are accepted as aliases for ``x1..x4``.  JSON format:
``{"dim": d, "terms": [{"exps": [...], "coeff": "<decimal string>"}]}`` with
coefficients as strings so arbitrary sizes survive any JSON reader.
"""

from __future__ import annotations

import json
import math
import re


# ---------------------------------------------------------------------------
# LaurentPoly


class LaurentPoly:
    """Integer Laurent polynomial in ``dim`` commuting variables.

    Invariants: no stored zero coefficient; every exponent vector has length
    ``dim``; the zero polynomial is the empty map.
    """

    __slots__ = ("dim", "terms", "_hash")

    def __init__(self, dim, terms=None):
        if dim < 1:
            raise ValueError("dim must be a positive integer")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != dim:
                raise ValueError(f"exponent vector {exps} has length != dim={dim}")
            c = int(c)
            if c:
                clean[exps] = c
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, dim):
        return cls(dim, {})

    @classmethod
    def constant(cls, dim, c):
        return cls(dim, {(0,) * dim: c})

    @classmethod
    def variable(cls, i, dim):
        """The coordinate ``x_{i+1}`` (0-based index ``i``) in dimension dim."""
        if not 0 <= i < dim:
            raise ValueError("variable index out of range")
        e = [0] * dim
        e[i] = 1
        return cls(dim, {tuple(e): 1})

    @classmethod
    def monomial(cls, dim, exps, coeff=1):
        return cls(dim, {tuple(exps): coeff})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly(self.dim, t)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return LaurentPoly(self.dim, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self.__add__(self._coerce(other).__neg__())

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.dim, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    del t[e]
        return LaurentPoly(self.dim, t)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers not supported (multiply by a monomial instead)")
        result = LaurentPoly.constant(self.dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.dim, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other)!r}")

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.dim == other.dim
            and self.terms == other.terms
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.dim, tuple(sorted(self.terms.items()))))
            object.__setattr__(self, "_hash", h)
        return h

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def num_terms(self):
        return len(self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def height(self):
        """log of the maximum absolute value of a coefficient."""
        if not self.terms:
            raise ValueError("height of the zero polynomial is undefined")
        return math.log(max(abs(c) for c in self.terms.values()))

    def coeff_abs_sum(self):
        return sum(abs(c) for c in self.terms.values())

    def degree(self):
        """Degree under the standard embedding of the d-torus in projective
        d-space.

        Convention for Laurent (negative-exponent) terms: the maximum over
        terms of the sum of positive exponent parts, plus the maximum over
        terms of the sum of negative exponent parts.  For honest polynomials
        this is the usual total degree; for a single monomial x^e it returns
        sum(|e_i|).  This choice is fixed here and documented; nothing else
        in the package depends on its fine structure.
        """
        if not self.terms:
            return -1
        pos = max(sum(e for e in exps if e > 0) for exps in self.terms)
        neg = max(sum(-e for e in exps if e < 0) for exps in self.terms)
        return pos + neg

    def exponent_range(self):
        """Per-coordinate (min, max) exponents over the support."""
        if not self.terms:
            return [(0, 0)] * self.dim
        lo = [min(e[i] for e in self.terms) for i in range(self.dim)]
        hi = [max(e[i] for e in self.terms) for i in range(self.dim)]
        return list(zip(lo, hi))

    def is_polynomial(self):
        return all(lo >= 0 for lo, _ in self.exponent_range())

    def content(self):
        import math as _m

        g = 0
        for c in self.terms.values():
            g = _m.gcd(g, abs(c))
        return g

    def shift_nonnegative(self):
        """Multiply by the smallest monomial making all exponents >= 0.

        Multiplication by a unit +- x^v changes neither absolute values on
        the torus nor the Mahler measure; this is the standard normalization
        before univariate manipulations.
        """
        shifts = tuple(max(0, -lo) for lo, _ in self.exponent_range())
        if not any(shifts):
            return self
        t = {tuple(a + b for a, b in zip(e, shifts)): c for e, c in self.terms.items()}
        return LaurentPoly(self.dim, t)

    def partial_degree(self, i):
        """Largest exponent of coordinate i over the support (0 if zero poly)."""
        if not self.terms:
            return 0
        return max(e[i] for e in self.terms)

    def coefficient_in(self, i, k):
        """Coefficient of x_i^k as a LaurentPoly in the remaining dim-1 variables."""
        t = {}
        for e, c in self.terms.items():
            if e[i] == k:
                t[e[:i] + e[i + 1:]] = c
        return LaurentPoly(self.dim - 1, t) if self.dim > 1 else LaurentPoly(1, {(0,): t.get((), 0)})

    def eval_complex(self, zs):
        """Plain floating evaluation at a point (tests and quick looks only;
        certified evaluation lives in mahlerlab.evaluate)."""
        total = 0j
        for e, c in self.terms.items():
            v = complex(c)
            for z, k in zip(zs, e):
                v *= z ** k
            total += v
        return total

    # -- univariate bridge --------------------------------------------------

    def to_unipoly(self):
        """Convert a 1-variable Laurent polynomial to a UniPoly after
        clearing negative exponents by a unit monomial."""
        if self.dim != 1:
            raise ValueError("to_unipoly requires dim == 1")
        p = self.shift_nonnegative()
        if not p.terms:
            return UniPoly(())
        deg = max(e[0] for e in p.terms)
        coeffs = [0] * (deg + 1)
        for (e,), c in p.terms.items():
            coeffs[e] = c
        return UniPoly(coeffs)

    @classmethod
    def from_unipoly(cls, u, dim=1):
        t = {}
        for k, c in enumerate(u.coeffs):
            if c:
                e = [0] * dim
                e[0] = k
                t[tuple(e)] = c
        return cls(dim, t)

    # -- serialization ------------------------------------------------------

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items(), reverse=True):
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = f"x{i + 1}" if self.dim > 1 else "x"
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = " * ".join(factors)
            else:
                body = " * ".join([str(mag)] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        return json.dumps(
            {
                "dim": self.dim,
                "terms": [
                    {"exps": list(e), "coeff": str(c)}
                    for e, c in sorted(self.terms.items())
                ],
            }
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        dim = int(data["dim"])
        terms = {tuple(t["exps"]): int(t["coeff"]) for t in data["terms"]}
        return cls(dim, terms)

    @classmethod
    def parse(cls, text, dim=None):
        return _parse_laurent(text, dim=dim)

    def __repr__(self):
        return f"LaurentPoly({self.dim}, {self.to_text()!r})"


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z]\w*)|(?P<op>\*\*|[-+*^()]))"
)
_BARE_NAMES = {"x": 1, "y": 2, "z": 3, "w": 4, "t": 1, "s": 2, "u": 3}


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial text at {text[pos:]!r}")
        pos = m.end()
        if m.lastgroup == "num":
            out.append(("num", int(m.group("num"))))
        elif m.lastgroup == "var":
            out.append(("var", m.group("var")))
        else:
            op = m.group("op")
            out.append(("op", "^" if op == "**" else op))
    return out


def _var_index(name, indexed_seen, bare_seen):
    m = re.fullmatch(r"[A-Za-z](\d+)", name)
    if m:
        indexed_seen.add(name)
        return int(m.group(1))
    if name in _BARE_NAMES:
        bare_seen.add(name)
        return _BARE_NAMES[name]
    raise ValueError(f"unknown variable {name!r} (use x1..xd or x,y,z,w)")


def _parse_laurent(text, dim=None):
    """Parse a sum of monomial terms: `coeff * x1^e1 * ... xd^ed` joined by
    +/-.  Exponents may be negative; `**` is accepted for `^`."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    indexed, bare = set(), set()
    terms = []  # list of (coeff, {index: exp})
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] == ("op", "+") or i < n and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i >= n:
            raise ValueError("dangling sign in polynomial text")
        coeff = sign
        exps = {}
        expect_factor = True
        while i < n:
            kind, val = tokens[i]
            if kind == "op" and val in "+-":
                break
            if kind == "op" and val == "*":
                i += 1
                expect_factor = True
                continue
            if not expect_factor:
                # implicit product like "3x" or "x y"
                pass
            if kind == "num":
                coeff *= val
                i += 1
            elif kind == "var":
                idx = _var_index(val, indexed, bare)
                i += 1
                e = 1
                if i < n and tokens[i] == ("op", "^"):
                    i += 1
                    esign = 1
                    if i < n and tokens[i] == ("op", "-"):
                        esign = -1
                        i += 1
                    if i >= n or tokens[i][0] != "num":
                        raise ValueError("expected integer exponent after ^")
                    e = esign * tokens[i][1]
                    i += 1
                exps[idx] = exps.get(idx, 0) + e
            else:
                raise ValueError(f"unexpected token {val!r} in polynomial text")
            expect_factor = False
        terms.append((coeff, exps))
    if indexed and bare:
        raise ValueError("do not mix indexed (x1, x2) and bare (x, y) variable names")
    max_idx = max((max(e) for _, e in terms if e), default=1)
    d = dim if dim is not None else max(max_idx, 1)
    if max_idx > d:
        raise ValueError(f"variable index {max_idx} exceeds dim={d}")
    tmap = {}
    for coeff, exps in terms:
        key = tuple(exps.get(j + 1, 0) for j in range(d))
        s = tmap.get(key, 0) + coeff
        if s:
            tmap[key] = s
        else:
            tmap.pop(key, None)
    return LaurentPoly(d, tmap)


# ---------------------------------------------------------------------------
# UniPoly


class UniPoly:
    """Dense univariate integer polynomial, constant term first.

    Invariant: the last stored coefficient is nonzero unless the polynomial
    is zero (empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def x_power(cls, k, coeff=1):
        return cls([0] * k + [coeff])

    @classmethod
    def from_roots_companion(cls):  # pragma: no cover - placeholder guard
        raise NotImplementedError

    @property
    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if self.is_zero or other.is_zero:
            return UniPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly([other])
        raise TypeError(f"cannot combine UniPoly with {type(other)!r}")

    def content(self):
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        return g

    def primitive_part(self):
        g = self.content()
        if g in (0, 1):
            return self
        return UniPoly([c // g for c in self.coeffs])

    def height(self):
        if self.is_zero:
            raise ValueError("height of the zero polynomial is undefined")
        return math.log(max(abs(c) for c in self.coeffs))

    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def reverse(self):
        """t^deg * P(1/t)."""
        return UniPoly(list(reversed(self.coeffs)))

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction inputs, floating for
        complex inputs."""
        acc = 0 if not isinstance(x, complex) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_exact(self, other):
        """Division with remainder over Z, requiring every quotient step to
        be an exact integer division (raises otherwise).  Always valid for
        monic divisors."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [0] * max(0, len(r) - len(other.coeffs) + 1)
        d = other.degree()
        lc = other.lead
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            c, rem = divmod(r[-1], lc)
            if rem:
                raise ValueError("division step is not exact over Z")
            k = len(r) - 1 - d
            q[k] = c
            for i, b in enumerate(other.coeffs):
                r[k + i] -= c * b
        return UniPoly(q), UniPoly(r)

    def exact_div(self, other):
        q, r = self.divmod_exact(other)
        if not r.is_zero:
            raise ValueError("polynomial division has nonzero remainder")
        return q

    def divides(self, other):
        """True if self divides other exactly over Z."""
        if self.is_zero:
            return other.is_zero
        try:
            other.exact_div_rational(self)
        except ValueError:
            return False
        return True

    def pseudo_rem(self, other):
        """Pseudo-remainder: lead(other)^(deg a - deg b + 1) * a mod b, all
        arithmetic over Z."""
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError
        a = list(self.coeffs)
        b = other.coeffs
        db = other.degree()
        lb = other.lead
        e = len(a) - len(b) + 1
        if e <= 0:
            return UniPoly(a)
        while len(a) - 1 >= db and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) - 1 < db:
                break
            la = a[-1]
            k = len(a) - 1 - db
            a = [c * lb for c in a]
            for i, bc in enumerate(b):
                a[k + i] -= la * bc
            e -= 1
        mult = lb ** max(e, 0)
        return UniPoly([c * mult for c in a])

    def to_text(self, var="t"):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree(), -1, -1):
            c = self[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = var if mag == 1 else f"{mag}*{var}"
            else:
                body = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"UniPoly({self.to_text()!r})"


def _dense_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def x_pow_mod(n, modulus: UniPoly):
    """x^n mod `modulus` by binary powering.

    Exact over Z when the modulus is monic (the common case: x^N - 1 and
    cyclotomic polynomials), otherwise exact over Q with Fraction
    coefficients.  Returns a dense coefficient list, constant term first,
    of length deg(modulus).
    """
    from fractions import Fraction

    m = modulus
    if m.is_zero or m.degree() < 1:
        raise ValueError("modulus must have degree >= 1")
    d = m.degree()
    monic_unit = m.lead in (1, -1)
    lc = m.lead

    def reduce(vec):
        for k in range(len(vec) - 1, d - 1, -1):
            c = vec[k]
            if not c:
                continue
            if monic_unit:
                q = c * lc if lc == -1 else c
            else:
                q = Fraction(c, lc)
            for i, bc in enumerate(m.coeffs):
                vec[k - d + i] -= q * bc
        return vec[:d]

    result = [1] + [0] * (d - 1)
    base = reduce([0, 1] + [0] * max(0, d - 1))[:d]
    e = int(n)
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    while e:
        if e & 1:
            result = reduce(_dense_mul(result, base))
        e >>= 1
        if e:
            base = reduce(_dense_mul(base, base))
    return result


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Primitive gcd over Z via the subresultant remainder sequence."""
    if a.is_zero:
        return b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    f, g = a.primitive_part(), b.primitive_part()
    if f.degree() < g.degree():
        f, g = g, f
    while not g.is_zero:
        r = f.pseudo_rem(g).primitive_part()
        f, g = g, r
    f = f.primitive_part()
    return f if f.lead > 0 else -f


def squarefree_decomposition(a: UniPoly):
    """Yun's algorithm over Z: returns [(factor, multiplicity)] with the
    factors primitive and pairwise coprime, plus the integer content sign
    already stripped by the caller if needed."""
    if a.is_zero:
        raise ValueError("squarefree decomposition of zero polynomial")
    p = a.primitive_part()
    if p.degree() == 0:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    if g.degree() == 0:
        return [(p, 1)]
    w = p.exact_div_rational(g)
    i = 1
    while w.degree() > 0:
        y = poly_gcd(w, g)
        f = w.exact_div_rational(y)
        if f.degree() > 0:
            out.append((f, i))
        w, g = y, g.exact_div_rational(y)
        i += 1
    return out


def _exact_div_rational(self, other):
    """Exact division allowing intermediate rationals (result must be an
    integer polynomial)."""
    from fractions import Fraction

    other = self._coerce(other)
    if other.is_zero:
        raise ZeroDivisionError
    r = [Fraction(c) for c in self.coeffs]
    q = [Fraction(0)] * max(0, len(r) - len(other.coeffs) + 1)
    d = other.degree()
    lc = Fraction(other.lead)
    while len(r) - 1 >= d:
        while r and not r[-1]:
            r.pop()
        if len(r) - 1 < d:
            break
        c = r[-1] / lc
        k = len(r) - 1 - d
        q[k] = c
        for i, b in enumerate(other.coeffs):
            r[k + i] -= c * b
    if any(x != 0 for x in r):
        raise ValueError("polynomial division has nonzero remainder")
    if any(x.denominator != 1 for x in q):
        raise ValueError("quotient is not integral")
    return UniPoly([int(x) for x in q])


UniPoly.exact_div_rational = _exact_div_rational
