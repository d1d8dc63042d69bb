"""Exact scalar domains: Gaussian rationals and real square-root extensions of Q.

GaussianRational is the coefficient field Q(i) used by the twisted-torus
coefficient algebra.  SqrtFieldElement models the subfield of R spanned over Q
by square roots of square-free positive integers; products never need integer
factorization beyond a gcd because square-free labels multiply by
sqrt(a)*sqrt(b) = g*sqrt((a/g)*(b/g)) with g = gcd(a, b).
"""

from fractions import Fraction
from math import gcd

from .linalg import solve_dense

__all__ = [
    "GaussianRational",
    "SqrtFieldElement",
    "is_square_free",
    "sqrt_pairing",
]

_ZERO = Fraction(0)


class GaussianRational:
    """A number re + im*i with rational re, im."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        """re**2 + im**2."""
        return self.re * self.re + self.im * self.im

    def is_zero(self):
        return not self.re and not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def is_square_free(n):
    """True when n >= 1 and no prime square divides n."""
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return False
        else:
            p += 1
    return True


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        else:
            p += 1
    if n > 1:
        out.append(n)
    return out


class SqrtFieldElement:
    """Element of Q(sqrt(p) : p prime), stored as {square-free label: coefficient}.

    The label a stands for sqrt(a); label 1 is the rational part.  Supports of
    all elements stay square-free under the gcd product rule, so no
    factorization is ever required for arithmetic (only for inverses, which
    factor the support labels to enumerate the subfield they generate).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for a, c in coeffs.items():
                c = Fraction(c)
                if not c:
                    continue
                if not is_square_free(a):
                    raise ValueError(f"label {a} is not a square-free positive integer")
                clean[a] = c
        self.coeffs = clean

    @classmethod
    def from_rational(cls, x):
        return cls({1: Fraction(x)})

    @classmethod
    def sqrt(cls, a):
        if not is_square_free(a):
            raise ValueError(f"sqrt label {a} must be a square-free positive integer")
        return cls({a: Fraction(1)})

    @classmethod
    def _coerce(cls, x):
        if isinstance(x, SqrtFieldElement):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_rational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for a, c in o.coeffs.items():
            v = out.get(a, _ZERO) + c
            if v:
                out[a] = v
            elif a in out:
                del out[a]
        r = SqrtFieldElement.__new__(SqrtFieldElement)
        r.coeffs = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = SqrtFieldElement.__new__(SqrtFieldElement)
        r.coeffs = {a: -c for a, c in self.coeffs.items()}
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for a, c in self.coeffs.items():
            for b, d in o.coeffs.items():
                g = gcd(a, b)
                key = (a // g) * (b // g)
                v = out.get(key, _ZERO) + c * d * g
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        r = SqrtFieldElement.__new__(SqrtFieldElement)
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via a multiplication-matrix solve.

        The support labels generate a finite-degree subfield with basis all
        square-free products of their prime factors; invert the "multiply by
        self" matrix on that basis.
        """
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        if set(self.coeffs) == {1}:
            return SqrtFieldElement({1: 1 / self.coeffs[1]})
        primes = sorted({p for a in self.coeffs for p in _prime_factors(a)})
        basis = [1]
        for p in primes:
            basis = basis + [b * p for b in basis]
        basis.sort()
        index = {a: i for i, a in enumerate(basis)}
        n = len(basis)
        cols = []
        for b in basis:
            col = [_ZERO] * n
            prod = self * SqrtFieldElement.sqrt(b)
            for a, c in prod.coeffs.items():
                col[index[a]] = c
            cols.append(col)
        a_rows = [[cols[j][i] for j in range(n)] for i in range(n)]
        rhs = [_ZERO] * n
        rhs[index[1]] = Fraction(1)
        x = solve_dense(a_rows, rhs)
        if x is None:  # unreachable: nonzero field elements are invertible
            raise ZeroDivisionError("singular multiplication matrix")
        return SqrtFieldElement({basis[j]: x[j] for j in range(n)})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def rational_part(self):
        """Coefficient of the label 1."""
        return self.coeffs.get(1, _ZERO)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "SqrtFieldElement({})"
        parts = ", ".join(f"{a}: {c}" for a, c in sorted(self.coeffs.items()))
        return f"SqrtFieldElement({{{parts}}})"


def sqrt_pairing(u, v):
    """Symmetric Q-bilinear pairing with sqrt(a) ~ sqrt(b) equal to a if a == b else 0.

    Equals the rational part of u*v: distinct square-free labels multiply into a
    non-rational label, equal labels multiply to the integer a.
    """
    return (u * v).rational_part()
