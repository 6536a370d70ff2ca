"""Exact arithmetic over F_p and F_{p^2}, plus truncated power series.

Provides:

- :class:`Fp`: the prime field F_p for an odd prime p >= 5.
- :class:`Fp2`: the quadratic extension F_{p^2} = F_p[x]/(x^2 - r) with r the
  smallest quadratic non-residue; elements are pairs ``(a, b)`` meaning
  ``a + b*sqrt(r)``.
- :func:`find_zeta`: a deterministic (p+1)-th root of -1 in F_{p^2}.
- :func:`pochhammer`: the falling-factorial normalization scalar used by the
  symmetric-power basis construction.
- :class:`Series1`: sparse univariate truncated series (Laurent exponents
  allowed) over Fp or Fp2, with power-of-Frobenius substitution.
- :class:`Series3`: sparse trivariate truncated series over F_p with the three
  partial derivations.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

from functools import lru_cache


# ---------------------------------------------------------------------------
# primes
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    """Trial-division primality test (adequate for the sizes used here)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Fp:
    """The prime field F_p (p an odd prime >= 5); elements are ints in [0, p)."""

    def __init__(self, p: int):
        _check_prime(p)
        self.p = p
        self.zero = 0
        self.one = 1

    # -- element operations -------------------------------------------------
    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, n: int):
        if n < 0:
            return self.inv(pow(a, -n, self.p))
        return pow(a, n, self.p)

    def frob(self, a, s: int = 1):
        """x -> x^(p^s); the identity on F_p."""
        return a % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def elements(self):
        return range(self.p)

    def __repr__(self):
        return f"Fp({self.p})"

    def __eq__(self, other):
        return isinstance(other, Fp) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class Fp2:
    """F_{p^2} as F_p[x]/(x^2 - r), r the smallest quadratic non-residue.

    Elements are pairs ``(a, b)`` of ints in [0, p), meaning a + b*sqrt(r).
    """

    def __init__(self, p: int):
        _check_prime(p)
        self.p = p
        self.r = self._least_nonresidue(p)
        self.zero = (0, 0)
        self.one = (1, 0)

    @staticmethod
    def _least_nonresidue(p: int) -> int:
        squares = {(x * x) % p for x in range(p)}
        for r in range(2, p):
            if r not in squares:
                return r
        raise AssertionError("no quadratic non-residue found")

    # -- element operations -------------------------------------------------
    def from_int(self, n: int):
        return (n % self.p, 0)

    def embed(self, a: int):
        """Embed an F_p element."""
        return (a % self.p, 0)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def sub(self, x, y):
        return ((x[0] - y[0]) % self.p, (x[1] - y[1]) % self.p)

    def neg(self, x):
        return ((-x[0]) % self.p, (-x[1]) % self.p)

    def mul(self, x, y):
        a, b = x
        c, d = y
        return ((a * c + self.r * b * d) % self.p, (a * d + b * c) % self.p)

    def inv(self, x):
        a, b = x
        n = (a * a - self.r * b * b) % self.p
        if n == 0:
            if a % self.p == 0 and b % self.p == 0:
                raise ZeroDivisionError("inverse of zero in F_{p^2}")
            raise AssertionError("norm vanished on a nonzero element")
        ninv = pow(n, self.p - 2, self.p)
        return ((a * ninv) % self.p, (-b * ninv) % self.p)

    def pow(self, x, n: int):
        if n < 0:
            return self.inv(self.pow(x, -n))
        result = self.one
        base = x
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frob(self, x, s: int = 1):
        """x -> x^(p^s): conjugation when s is odd, identity when s is even."""
        if s % 2 == 0:
            return (x[0] % self.p, x[1] % self.p)
        return (x[0] % self.p, (-x[1]) % self.p)

    def is_zero(self, x) -> bool:
        return x[0] % self.p == 0 and x[1] % self.p == 0

    def eq(self, x, y) -> bool:
        return self.is_zero(self.sub(x, y))

    def elements(self):
        for a in range(self.p):
            for b in range(self.p):
                yield (a, b)

    def multiplicative_order(self, x) -> int:
        n = self.p * self.p - 1
        order = n
        for q in prime_factors(n):
            while order % q == 0 and self.eq(self.pow(x, order // q), self.one):
                order //= q
        return order

    def generator(self):
        """The lexicographically smallest generator of the multiplicative group."""
        n = self.p * self.p - 1
        qs = prime_factors(n)
        for x in self.elements():
            if self.is_zero(x):
                continue
            if all(not self.eq(self.pow(x, n // q), self.one) for q in qs):
                return x
        raise AssertionError("no generator found")

    def __repr__(self):
        return f"Fp2({self.p}; x^2-{self.r})"

    def __eq__(self, other):
        return isinstance(other, Fp2) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))


@lru_cache(maxsize=None)
def find_zeta(p: int):
    """A deterministic (p+1)-th root of -1 in F_{p^2}.

    Returns ``zeta = g**((p^2-1)//(2*(p+1)))`` for the lexicographically
    smallest generator g of the multiplicative group.  The output satisfies
    ``zeta^(p+1) = -1``.
    """
    K = Fp2(p)
    g = K.generator()
    zeta = K.pow(g, (p * p - 1) // (2 * (p + 1)))
    assert K.eq(K.pow(zeta, p + 1), K.neg(K.one))
    return zeta


def all_zetas(p: int):
    """All (p+1)-th roots of -1 in F_{p^2} (there are exactly p+1)."""
    K = Fp2(p)
    return [x for x in K.elements() if K.eq(K.pow(x, p + 1), K.neg(K.one))]


# ---------------------------------------------------------------------------
# pochhammer
# ---------------------------------------------------------------------------

def pochhammer(m: int, i: int, p: int) -> int:
    """Falling factorial m*(m-1)*...*(m-i+1) reduced mod p.

    This is the per-index normalization scalar that makes the lowered
    highest-weight bases span genuine GL2-subrepresentations (verified by the
    equivariance tests in the representation module).

    Raises ``ValueError`` for i > m or i < 0, and an error mentioning
    "pochhammer vanishes" when the product is divisible by p.
    """
    _check_prime(p)
    if i < 0 or i > m:
        raise ValueError(f"pochhammer index out of range: i={i}, m={m}")
    result = 1
    for j in range(i):
        factor = (m - j) % p
        if factor == 0:
            raise ValueError(f"pochhammer vanishes: factor {m - j} divisible by {p}")
        result = (result * factor) % p
    return result


def pochhammer_exact(m: int, i: int) -> int:
    """Falling factorial over the integers (used for characteristic-0 work)."""
    if i < 0 or i > m:
        raise ValueError(f"pochhammer index out of range: i={i}, m={m}")
    result = 1
    for j in range(i):
        result *= (m - j)
    return result


# ---------------------------------------------------------------------------
# univariate truncated series (Laurent exponents permitted)
# ---------------------------------------------------------------------------

class Series1:
    """Sparse univariate truncated series sum_e c_e * t^e with e < cutoff.

    Exponents may be negative (needed for intermediate steps of semilinear
    chases); truncation discards exponents >= cutoff.  Coefficients live in
    the supplied field object (:class:`Fp` or :class:`Fp2`).
    """

    __slots__ = ("field", "cutoff", "coeffs", "truncation_loss")

    def __init__(self, field, cutoff: int, coeffs=None, truncation_loss: bool = False):
        self.field = field
        self.cutoff = cutoff
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                if e >= cutoff:
                    continue
                if not field.is_zero(c):
                    clean[e] = c
        self.coeffs = clean
        self.truncation_loss = truncation_loss

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field, cutoff):
        return cls(field, cutoff)

    @classmethod
    def monomial(cls, field, cutoff, exp: int, coeff=None):
        if coeff is None:
            coeff = field.one
        return cls(field, cutoff, {exp: coeff})

    @classmethod
    def const(cls, field, cutoff, c):
        return cls(field, cutoff, {0: c})

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def order(self):
        """Lowest exponent with nonzero coefficient, or None for zero."""
        if not self.coeffs:
            return None
        return min(self.coeffs)

    def leading_coeff(self):
        if not self.coeffs:
            raise ZeroDivisionError("zero series has no leading coefficient")
        return self.coeffs[self.order()]

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return (self.field == other.field and self.cutoff == other.cutoff
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.cutoff, tuple(sorted(self.coeffs.items()))))

    # -- arithmetic ---------------------------------------------------------
    def _like(self, coeffs, loss=False):
        return Series1(self.field, self.cutoff, coeffs,
                       truncation_loss=self.truncation_loss or loss)

    def add(self, other):
        F = self.field
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = F.add(out.get(e, F.zero), c)
        return Series1(F, self.cutoff, out,
                       truncation_loss=self.truncation_loss or other.truncation_loss)

    def neg(self):
        F = self.field
        return self._like({e: F.neg(c) for e, c in self.coeffs.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scal(self, c):
        F = self.field
        return self._like({e: F.mul(c, v) for e, v in self.coeffs.items()})

    def mul(self, other):
        F = self.field
        out = {}
        loss = self.truncation_loss or other.truncation_loss
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e >= self.cutoff:
                    continue
                prod = F.mul(c1, c2)
                out[e] = F.add(out.get(e, F.zero), prod)
        return Series1(F, self.cutoff, out, truncation_loss=loss)

    def shift(self, e0: int):
        """Multiply by t^e0."""
        out = {}
        for e, c in self.coeffs.items():
            if e + e0 < self.cutoff:
                out[e + e0] = c
        return self._like(out)

    def inverse(self):
        """Inverse of a series whose lowest term is invertible.

        Writes f = c*t^e*(1+g) with order(g) >= 1 and expands the geometric
        series, exact below the cutoff.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero series")
        F = self.field
        e0 = self.order()
        c0 = self.coeffs[e0]
        c0inv = F.inv(c0)
        # u = f / (c0 t^e0) = 1 + g
        u = self.shift(-e0).scal(c0inv)
        g = u.sub(Series1.const(F, self.cutoff, F.one))
        # inv(u) = sum (-g)^k
        acc = Series1.const(F, self.cutoff, F.one)
        term = Series1.const(F, self.cutoff, F.one)
        ng = g.neg()
        while True:
            term = term.mul(ng)
            if term.is_zero():
                break
            acc = acc.add(term)
        return acc.scal(c0inv).shift(-e0)

    def div(self, other):
        return self.mul(other.inverse())

    # -- semilinear substitution -------------------------------------------
    def frobenius_substitute(self, s: int = 1):
        """t^e -> t^(p^s * e) and coefficients a -> a^(p^s)."""
        F = self.field
        q = F.p ** s
        out = {}
        loss = False
        for e, c in self.coeffs.items():
            e2 = e * q
            if e2 >= self.cutoff:
                loss = True
                continue
            out[e2] = F.frob(c, s)
        return Series1(F, self.cutoff, out,
                       truncation_loss=self.truncation_loss or loss)

    def __repr__(self):
        if not self.coeffs:
            return "Series1(0)"
        terms = " + ".join(f"{c}*t^{e}" for e, c in sorted(self.coeffs.items()))
        return f"Series1({terms}; K={self.cutoff})"


# ---------------------------------------------------------------------------
# trivariate truncated series over F_p
# ---------------------------------------------------------------------------

class Series3:
    """Sparse series in t11, t12, t22 over F_p, truncated at total degree K.

    Monomial keys are triples of nonnegative exponents ``(a, b, c)`` for
    ``t11^a * t12^b * t22^c``.  Supports the three commuting derivations.
    """

    __slots__ = ("p", "cutoff", "coeffs")

    VARS = ("t11", "t12", "t22")

    def __init__(self, p: int, cutoff: int, coeffs=None):
        _check_prime(p)
        self.p = p
        self.cutoff = cutoff
        clean = {}
        if coeffs:
            for mono, c in coeffs.items():
                if sum(mono) >= cutoff:
                    continue
                c %= p
                if c:
                    clean[mono] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, p, cutoff):
        return cls(p, cutoff)

    @classmethod
    def const(cls, p, cutoff, c):
        return cls(p, cutoff, {(0, 0, 0): c})

    @classmethod
    def var(cls, p, cutoff, name: str, coeff: int = 1):
        idx = cls.VARS.index(name)
        mono = tuple(1 if i == idx else 0 for i in range(3))
        return cls(p, cutoff, {mono: coeff})

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> int:
        return self.coeffs.get((0, 0, 0), 0)

    def __eq__(self, other):
        if not isinstance(other, Series3):
            return NotImplemented
        return (self.p == other.p and self.cutoff == other.cutoff
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.p, self.cutoff, tuple(sorted(self.coeffs.items()))))

    # -- arithmetic ---------------------------------------------------------
    def add(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = (out.get(m, 0) + c) % self.p
        return Series3(self.p, self.cutoff, out)

    def neg(self):
        return Series3(self.p, self.cutoff,
                       {m: (-c) % self.p for m, c in self.coeffs.items()})

    def sub(self, other):
        return self.add(other.neg())

    def scal(self, c: int):
        c %= self.p
        return Series3(self.p, self.cutoff,
                       {m: (c * v) % self.p for m, v in self.coeffs.items()})

    def mul(self, other):
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                if sum(m) >= self.cutoff:
                    continue
                out[m] = (out.get(m, 0) + c1 * c2) % self.p
        return Series3(self.p, self.cutoff, out)

    def derivation(self, name: str):
        """Partial derivative with respect to t11, t12 or t22."""
        idx = self.VARS.index(name)
        out = {}
        for m, c in self.coeffs.items():
            if m[idx] == 0:
                continue
            m2 = list(m)
            m2[idx] -= 1
            out[tuple(m2)] = (out.get(tuple(m2), 0) + c * m[idx]) % self.p
        return Series3(self.p, self.cutoff, out)

    def truncate_below(self, degree: int):
        """Keep only the terms of total degree < degree."""
        return Series3(self.p, min(self.cutoff, degree), dict(self.coeffs))

    def inverse(self):
        """Inverse of a unit (nonzero constant term)."""
        c0 = self.constant_term()
        if c0 == 0:
            raise ZeroDivisionError("not a unit in the local ring")
        c0inv = pow(c0, self.p - 2, self.p)
        u = self.scal(c0inv)
        g = u.sub(Series3.const(self.p, self.cutoff, 1))
        acc = Series3.const(self.p, self.cutoff, 1)
        term = Series3.const(self.p, self.cutoff, 1)
        ng = g.neg()
        for _ in range(self.cutoff + 1):
            term = term.mul(ng)
            if term.is_zero():
                break
            acc = acc.add(term)
        return acc.scal(c0inv)

    def __repr__(self):
        if not self.coeffs:
            return "Series3(0)"
        parts = []
        for m, c in sorted(self.coeffs.items()):
            mono = "*".join(f"{v}^{e}" for v, e in zip(self.VARS, m) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return f"Series3({' + '.join(parts)}; K={self.cutoff})"
