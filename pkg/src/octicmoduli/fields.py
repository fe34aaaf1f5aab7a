"""Exact scalar arithmetic over Q, F_p (p >= 11) and F_{p^k}.

Elements are small immutable objects with operator overloading so that the
binary-form layer can be written generically.  Rationals are represented by
``fractions.Fraction`` directly; finite field elements carry a reference to
their field.  All operations are pure, hence safe to share between workers.

Characteristics 2, 3, 5 and 7 are rejected outright: the covariant formulae
of this package carry denominators divisible by those primes.
"""

from fractions import Fraction
from math import isqrt

from .errors import (
    CompositeModulus, EmptyInput, ReducibleModulus, SmallCharacteristic,
    ZeroNorm,
)

_SMALL_PRIMES = (2, 3, 5, 7)


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid far beyond any modulus we accept
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _egcd(a, b):
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b)."""
    if b == 0:
        return (a, 1, 0)
    g, x, y = _egcd(b, a % b)
    return (g, y, x - (a // b) * y)


def ext_gcd_multi(degrees):
    """gcd and Bezout coefficients of a sequence of positive integers.

    Folds the two-argument extended gcd left to right in index order, which
    makes the returned coefficients deterministic: ext_gcd_multi((5, 7))
    gives (1, [3, -2]).
    """
    degrees = list(degrees)
    if not degrees:
        raise EmptyInput("ext_gcd_multi needs at least one integer")
    g = degrees[0]
    coeffs = [1]
    for d in degrees[1:]:
        g2, x, y = _egcd(g, d)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
        g = g2
    return g, coeffs


# ---------------------------------------------------------------------------
# rationals


class Rationals:
    """The field Q; elements are fractions.Fraction values."""

    kind = "Q"
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value)
        raise TypeError("cannot coerce %r into Q" % (value,))

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def is_zero(self, a):
        return a == 0

    def sqrt(self, a):
        """Square root of a perfect square, the non-negative one; else None."""
        a = self(a)
        if a < 0:
            return None
        num, den = a.numerator, a.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return None

    def element_key(self, a):
        return (a.numerator, a.denominator)

    def serialize(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


QQ = Rationals()


# ---------------------------------------------------------------------------
# prime fields


class FpElement:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value % field.p

    def _lift(self, other):
        if isinstance(other, FpElement):
            return other
        if isinstance(other, int):
            return FpElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._lift(other)
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        return other / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return FpElement(self.field, pow(self.value, n, self.field.p))

    def __neg__(self):
        return FpElement(self.field, -self.value)

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in %r" % (self.field,))
        return FpElement(self.field, pow(self.value, -1, self.field.p))

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.p
        return (isinstance(other, FpElement) and other.field.p == self.field.p
                and other.value == self.value)

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d" % self.value


class PrimeField:
    """F_p for a prime p; covariant arithmetic needs p >= 11.

    Small characteristics are rejected unless allow_small is set; the
    weighted-projective algorithms are characteristic-agnostic and accept
    them, while every covariant entry point re-checks the bound.
    """

    kind = "Fp"

    def __init__(self, p, allow_small=False):
        if p in _SMALL_PRIMES and not allow_small:
            raise SmallCharacteristic("characteristic %d not supported" % p)
        if not _is_prime(p):
            raise CompositeModulus("%d is not prime" % p)
        self.p = p
        self.characteristic = p
        self.order = p

    def __call__(self, value):
        if isinstance(value, FpElement) and value.field.p == self.p:
            return value
        if isinstance(value, int):
            return FpElement(self, value)
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return FpElement(self, num * pow(den, -1, self.p))
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError("cannot coerce %r into F_%d" % (value, self.p))

    @property
    def zero(self):
        return FpElement(self, 0)

    @property
    def one(self):
        return FpElement(self, 1)

    def is_zero(self, a):
        return a.value == 0

    def elements(self):
        for v in range(self.p):
            yield FpElement(self, v)

    def sqrt(self, a):
        """Deterministic square root: the root with smaller least residue."""
        a = self(a)
        r = _sqrt_mod_prime(a.value, self.p)
        if r is None:
            return None
        return FpElement(self, min(r, (self.p - r) % self.p))

    def element_key(self, a):
        return a.value

    def serialize(self):
        return "Fp:%d" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return "F_%d" % self.p


def _sqrt_mod_prime(a, p):
    """Tonelli-Shanks; returns one root of x^2 = a mod p, or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p-1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


# ---------------------------------------------------------------------------
# dense univariate polynomial helpers over F_p (coefficient lists, low first)


def _poly_trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_mulmod(f, g, mod, p):
    res = [0] * (len(f) + len(g) - 1) if f and g else []
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                res[i + j] = (res[i + j] + fi * gj) % p
    return _poly_rem(res, mod, p)


def _poly_rem(f, mod, p):
    f = list(f)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while len(f) > dm:
        c = f[-1] * inv_lead % p
        if c:
            off = len(f) - 1 - dm
            for i, mi in enumerate(mod):
                f[off + i] = (f[off + i] - c * mi) % p
        f.pop()
    return _poly_trim(f)


def _poly_powmod(f, n, mod, p):
    result = [1]
    f = _poly_rem(f, mod, p)
    while n:
        if n & 1:
            result = _poly_mulmod(result, f, mod, p)
        f = _poly_mulmod(f, f, mod, p)
        n >>= 1
    return result


def _poly_gcd(f, g, p):
    f, g = _poly_trim(list(f)), _poly_trim(list(g))
    while g:
        f, g = g, _poly_rem(f, g, p)
        g = _poly_trim(list(g))
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f

def _poly_divmod(f, g, p):
    f = _poly_trim(list(f))
    g = _poly_trim(list(g))
    q = [0] * max(0, len(f) - len(g) + 1)
    inv_lead = pow(g[-1], -1, p)
    while len(f) >= len(g) and f:
        c = f[-1] * inv_lead % p
        off = len(f) - len(g)
        q[off] = c
        for i, gi in enumerate(g):
            f[off + i] = (f[off + i] - c * gi) % p
        _poly_trim(f)
    return q, f


def _poly_sub(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
           for i in range(n)]
    return _poly_trim(out)


def _is_irreducible(mod, p):
    """Test irreducibility of a monic polynomial over F_p.

    Walks the Frobenius chain x^(p^j) mod f once, so each candidate costs
    k small power computations regardless of how many divisors k has.
    """
    k = len(mod) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    x = [0, 1]
    crit = {k // q for q in set(_prime_factors(k))}
    xp = x
    for j in range(1, k + 1):
        xp = _poly_powmod(xp, p, mod, p)
        if j in crit:
            if len(_poly_gcd(_poly_sub(xp, x, p), mod, p)) != 1:
                return False
        if j == k:
            if _poly_sub(xp, x, p):
                return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_MODULUS_CACHE = {}


def _default_modulus(p, k):
    """Smallest monic irreducible t^k + c_{k-1} t^{k-1} + ... + c_0, the
    coefficient tuples ordered lexicographically with c_0 varying fastest
    (low-degree coefficients move first, so sparse moduli come early);
    cached per (p, k)."""
    if (p, k) in _MODULUS_CACHE:
        return _MODULUS_CACHE[(p, k)]

    def candidates():
        def rec(i, cur):
            if i < 0:
                yield list(cur) + [1]
                return
            for c in range(p):
                cur[i] = c
                yield from rec(i - 1, cur)
            cur[i] = 0
        yield from rec(k - 1, [0] * k)

    for mod in candidates():
        if _is_irreducible(mod, p):
            _MODULUS_CACHE[(p, k)] = tuple(mod)
            return _MODULUS_CACHE[(p, k)]
    raise ReducibleModulus("no irreducible modulus found (impossible)")


# ---------------------------------------------------------------------------
# extension fields


class ExtElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        k = field.k
        c = [x % field.p for x in coeffs]
        if len(c) < k:
            c += [0] * (k - len(c))
        elif len(c) > k:
            c = _poly_rem(c, list(field.modulus), field.p)
            c += [0] * (k - len(c))
        self.field = field
        self.coeffs = tuple(c)

    def _lift(self, other):
        if isinstance(other, ExtElement):
            return other
        if isinstance(other, (int, FpElement, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElement(self.field,
                          [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElement(self.field,
                          [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._lift(other)
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        prod = _poly_mulmod(list(self.coeffs), list(other.coeffs),
                            list(self.field.modulus), self.field.p)
        return ExtElement(self.field, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        return other / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return ExtElement(self.field, [-a for a in self.coeffs])

    def inverse(self):
        p = self.field.p
        f = _poly_trim(list(self.coeffs))
        if not f:
            raise ZeroDivisionError("inverse of zero in %r" % (self.field,))
        # extended Euclid on (f, modulus)
        r0, r1 = list(self.field.modulus), f
        s0, s1 = [], [1]
        while _poly_trim(list(r1)):
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            # s_new = s0 - q*s1
            qs1 = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs1[i + j] = (qs1[i + j] + qi * sj) % p
            s_new = [( (s0[i] if i < len(s0) else 0)
                       - (qs1[i] if i < len(qs1) else 0)) % p
                     for i in range(max(len(s0), len(qs1)))]
            s0, s1 = s1, s_new
        r0 = _poly_trim(list(r0))
        inv_c = pow(r0[0], -1, p)
        return ExtElement(self.field, [c * inv_c % p for c in s0])

    def __eq__(self, other):
        if isinstance(other, (int, FpElement, Fraction)):
            other = self.field(other)
        return (isinstance(other, ExtElement) and other.field == self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return "ext(%s)" % ",".join(str(c) for c in self.coeffs)


class ExtField:
    """F_{p^k} = F_p[t] / (modulus), modulus monic irreducible of degree k."""

    kind = "Fpk"

    def __init__(self, p, k, modulus=None, allow_small=False):
        if p in _SMALL_PRIMES and not allow_small:
            raise SmallCharacteristic("characteristic %d not supported" % p)
        if not _is_prime(p):
            raise CompositeModulus("%d is not prime" % p)
        if k < 1:
            raise ReducibleModulus("extension degree must be >= 1")
        if modulus is None:
            modulus = _default_modulus(p, k)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ReducibleModulus("modulus must be monic of degree k")
            if not _is_irreducible(list(modulus), p):
                raise ReducibleModulus("modulus is reducible over F_%d" % p)
        self.p = p
        self.k = k
        self.modulus = modulus
        self.characteristic = p
        self.order = p ** k
        self.prime_field = PrimeField(p)

    def __call__(self, value):
        if isinstance(value, ExtElement) and value.field == self:
            return value
        if isinstance(value, FpElement) and value.field.p == self.p:
            return ExtElement(self, [value.value])
        if isinstance(value, int):
            return ExtElement(self, [value])
        if isinstance(value, Fraction):
            return ExtElement(self, [self.prime_field(value).value])
        if isinstance(value, (list, tuple)):
            return ExtElement(self, list(value))
        if isinstance(value, str):
            return self(Fraction(value))
        raise TypeError("cannot coerce %r into %r" % (value, self))

    @property
    def zero(self):
        return ExtElement(self, [0])

    @property
    def one(self):
        return ExtElement(self, [1])

    def is_zero(self, a):
        return not any(a.coeffs)

    def gen(self):
        return ExtElement(self, [0, 1])

    def elements(self):
        """All elements, in canonical (lexicographic coefficient) order."""
        def rec(i, cur):
            if i == self.k:
                yield ExtElement(self, cur)
                return
            for c in range(self.p):
                yield from rec(i + 1, cur + [c])
        yield from rec(0, [])

    def frobenius(self, a, times=1):
        return a ** (self.p ** times)

    def sqrt(self, a):
        """Square root in F_q, deterministic: the root with smaller key."""
        a = self(a)
        if not a:
            return a
        q = self.order
        if a ** ((q - 1) // 2) != self.one:
            return None
        # Tonelli-Shanks over F_q with a deterministic non-residue scan
        Q, s = q - 1, 0
        while Q % 2 == 0:
            Q //= 2
            s += 1
        if s == 1:
            r = a ** ((q + 1) // 4)
        else:
            z = None
            for cand in self.elements():
                if cand and cand ** ((q - 1) // 2) != self.one:
                    z = cand
                    break
            m, c, t, r = s, z ** Q, a ** Q, a ** ((Q + 1) // 2)
            while t != self.one:
                t2, i = t, 0
                while t2 != self.one:
                    t2 = t2 * t2
                    i += 1
                b = c ** (1 << (m - i - 1))
                m, c = i, b * b
                t, r = t * c, r * b
        neg = -r
        return min(r, neg, key=self.element_key)

    def element_key(self, a):
        return a.coeffs

    def serialize(self):
        return "Fpk:%d:%d:%s" % (self.p, self.k,
                                 ",".join(str(c) for c in self.modulus))

    def __eq__(self, other):
        return (isinstance(other, ExtField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("Fpk", self.p, self.k, self.modulus))

    def __repr__(self):
        return "F_%d^%d" % (self.p, self.k)


# ---------------------------------------------------------------------------
# quadratic extensions of Q (used by the reconstruction fallback)


class QuadElement:
    __slots__ = ("field", "a", "b")

    def __init__(self, field, a, b):
        self.field = field
        self.a = Fraction(a)
        self.b = Fraction(b)

    def _lift(self, other):
        if isinstance(other, QuadElement):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElement(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElement(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._lift(other)
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.field.d
        return QuadElement(self.field,
                           self.a * other.a + d * self.b * other.b,
                           self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        return other / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __neg__(self):
        return QuadElement(self.field, -self.a, -self.b)

    def inverse(self):
        d = self.field.d
        nrm = self.a * self.a - d * self.b * self.b
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero in %r" % (self.field,))
        return QuadElement(self.field, self.a / nrm, -self.b / nrm)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return (isinstance(other, QuadElement) and other.field == self.field
                and other.a == self.a and other.b == self.b)

    def __hash__(self):
        return hash((self.field.d, self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return str(self.a)
        return "(%s + %s*sqrt(%s))" % (self.a, self.b, self.field.d)


class QuadExtQ:
    """Q(sqrt(d)) for a non-square rational d; arithmetic only.

    This is internal plumbing for the conic parametrization fallback when no
    rational point is supplied; it deliberately stays out of field_make.
    """

    kind = "Qsqrt"
    characteristic = 0

    def __init__(self, d):
        self.d = Fraction(d)
        if QQ.sqrt(self.d) is not None:
            raise ValueError("d is a perfect square; use Q instead")

    def __call__(self, value):
        if isinstance(value, QuadElement) and value.field == self:
            return value
        if isinstance(value, (int, Fraction)):
            return QuadElement(self, value, 0)
        if isinstance(value, str):
            return QuadElement(self, Fraction(value), 0)
        raise TypeError("cannot coerce %r into %r" % (value, self))

    @property
    def zero(self):
        return QuadElement(self, 0, 0)

    @property
    def one(self):
        return QuadElement(self, 1, 0)

    def is_zero(self, a):
        return not a

    def gen(self):
        return QuadElement(self, 0, 1)

    def sqrt(self, a):
        a = self(a)
        if a.b == 0:
            r = QQ.sqrt(a.a)
            if r is not None:
                return QuadElement(self, r, 0)
            if QQ.sqrt(a.a / self.d) is not None:
                return QuadElement(self, 0, QQ.sqrt(a.a / self.d))
        return None

    def element_key(self, a):
        return (a.a.numerator, a.a.denominator, a.b.numerator, a.b.denominator)

    def serialize(self):
        return "Qsqrt:%s" % self.d

    def __eq__(self, other):
        return isinstance(other, QuadExtQ) and other.d == self.d

    def __hash__(self):
        return hash(("Qsqrt", self.d))

    def __repr__(self):
        return "Q(sqrt(%s))" % self.d


# ---------------------------------------------------------------------------
# public constructors and the extension-specific operations


def field_make(spec, allow_small=False):
    """Build a field from a spec.

    Accepts "Q", "Fp:<p>", "Fpk:<p>:<k>[:<c0,c1,...,ck>]", an integer prime,
    or a (p, k) tuple.  allow_small admits characteristics below 11 for
    purely weighted-projective work.
    """
    if isinstance(spec, (Rationals, PrimeField, ExtField, QuadExtQ)):
        return spec
    if isinstance(spec, int):
        return PrimeField(spec, allow_small=allow_small)
    if isinstance(spec, tuple):
        if len(spec) == 2:
            return ExtField(spec[0], spec[1], allow_small=allow_small)
        if len(spec) == 3:
            return ExtField(spec[0], spec[1], spec[2],
                            allow_small=allow_small)
        raise TypeError("tuple spec must be (p, k) or (p, k, modulus)")
    if isinstance(spec, str):
        parts = spec.split(":")
        if parts[0] == "Q" and len(parts) == 1:
            return QQ
        if parts[0] == "Fp" and len(parts) == 2:
            return PrimeField(int(parts[1]), allow_small=allow_small)
        if parts[0] == "Fpk" and len(parts) in (3, 4):
            p, k = int(parts[1]), int(parts[2])
            if len(parts) == 4:
                modulus = tuple(int(c) for c in parts[3].split(","))
                return ExtField(p, k, modulus, allow_small=allow_small)
            return ExtField(p, k, allow_small=allow_small)
        raise ValueError("unrecognized field spec %r" % spec)
    raise TypeError("unrecognized field spec %r" % (spec,))


def sqrt_opt(field, a):
    """x with x^2 = a in the field, or None; the choice is deterministic."""
    return field.sqrt(a)


def norm_solve(ext, lam):
    """Solve Norm_{F_{p^m}/F_p}(a) = lam, i.e. a^((p^m-1)/(p-1)) = lam.

    For small fields the scan returns the smallest solution in canonical
    element order.  For larger fields, the first element (in canonical
    order) whose norm generates F_p^* is raised to the discrete log of lam
    with respect to that norm; deterministic, and no factorization of
    p^m - 1 is ever needed.
    """
    p = ext.characteristic
    if isinstance(ext, PrimeField):
        lam = ext(lam)
        if not lam:
            raise ZeroNorm("norm equation with zero target")
        return lam
    lam_val = ext.prime_field(lam) if not isinstance(lam, FpElement) else lam
    if lam_val.value == 0:
        raise ZeroNorm("norm equation with zero target")
    q = ext.order
    e = (q - 1) // (p - 1)
    if q <= 4096:
        for cand in ext.elements():
            if cand and cand ** e == ext(lam_val.value):
                return cand
        raise ZeroNorm("no norm preimage found (impossible)")
    fac = sorted(set(_prime_factors(p - 1)))
    for b in ext.elements():
        if not b:
            continue
        nb = (b ** e).coeffs[0]
        if nb == 0:
            continue
        if any(pow(nb, (p - 1) // qq, p) == 1 for qq in fac):
            continue     # norm does not generate F_p^*
        # discrete log of lam base nb inside F_p^*
        acc = 1
        for x in range(p - 1):
            if acc == lam_val.value:
                return b ** x
            acc = acc * nb % p
        break
    raise ZeroNorm("no norm preimage found (impossible)")
