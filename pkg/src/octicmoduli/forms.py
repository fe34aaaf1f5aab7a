"""Binary forms with exact coefficients: GL2 action, transvectants,
resultant discriminant and projective roots.

A form of degree n is sum(a_i * X^i * Z^(n-i)), stored as the coefficient
tuple (a_0, ..., a_n).  The degree is a fixed attribute: a degree-7
polynomial embedded in degree 8 is a different value (it has picked up a
root at infinity).
"""

from fractions import Fraction
from math import comb

from . import unipoly
from .errors import (
    DegreeTooSmall, OrderTooHigh, SingularMatrix, WrongDegree, ZeroForm,
)
from .fields import ExtField, PrimeField


def _falling(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


class BinaryForm:
    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree, coeffs):
        coeffs = tuple(field(c) for c in coeffs)
        if len(coeffs) != degree + 1:
            raise WrongDegree("degree %d form needs %d coefficients, got %d"
                              % (degree, degree + 1, len(coeffs)))
        self.field = field
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_univariate(cls, field, degree, poly_coeffs):
        """Embed a univariate polynomial (low-first) into fixed degree."""
        c = list(poly_coeffs)
        if len(c) > degree + 1:
            raise WrongDegree("univariate degree exceeds %d" % degree)
        c += [0] * (degree + 1 - len(c))
        return cls(field, degree, c)

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, BinaryForm) and other.field == self.field
                and other.degree == self.degree and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __add__(self, other):
        if other.degree != self.degree:
            raise WrongDegree("cannot add forms of different degrees")
        return BinaryForm(self.field, self.degree,
                          [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if other.degree != self.degree:
            raise WrongDegree("cannot subtract forms of different degrees")
        return BinaryForm(self.field, self.degree,
                          [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm(self.field, self.degree, [-a for a in self.coeffs])

    def scale(self, c):
        c = self.field(c)
        return BinaryForm(self.field, self.degree,
                          [a * c for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, BinaryForm):
            return self.scale(other)
        zero = self.field.zero
        out = [zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return BinaryForm(self.field, self.degree + other.degree, out)

    __rmul__ = scale

    def evaluate(self, x, z):
        x, z = self.field(x), self.field(z)
        n = self.degree
        acc = self.field.zero
        xp = self.field.one
        zpows = [self.field.one]
        for _ in range(n):
            zpows.append(zpows[-1] * z)
        for i, a in enumerate(self.coeffs):
            if a:
                acc = acc + a * xp * zpows[n - i]
            xp = xp * x
        return acc

    def diff_x(self, times=1):
        c = list(self.coeffs)
        deg = self.degree
        for _ in range(times):
            c = [c[i + 1] * (i + 1) for i in range(deg)]
            deg -= 1
        return BinaryForm(self.field, deg, c)

    def diff_z(self, times=1):
        c = list(self.coeffs)
        deg = self.degree
        for _ in range(times):
            c = [c[i] * (deg - i) for i in range(deg)]
            deg -= 1
        return BinaryForm(self.field, deg, c)

    def to_field(self, field, embed=None):
        """Move coefficients to another field; embed maps one element."""
        if embed is None:
            embed = field
        return BinaryForm(field, self.degree, [embed(c) for c in self.coeffs])

    def serialize(self):
        """Field spec plus a JSON-style coefficient array [a_0, ..., a_n];
        rationals as "num/den" strings, residues as integers."""
        import json
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                out.append("%d/%d" % (c.numerator, c.denominator))
            elif hasattr(c, "coeffs"):
                out.append(list(int(x) for x in c.coeffs))
            else:
                out.append(int(c.value))
        return "%s %s" % (self.field.serialize(), json.dumps(out))

    @classmethod
    def deserialize(cls, text):
        import json
        from .fields import field_make
        spec, _, payload = text.partition(" ")
        field = field_make(spec, allow_small=True)
        coeffs = []
        for entry in json.loads(payload):
            if isinstance(entry, str):
                coeffs.append(field(Fraction(entry)))
            elif isinstance(entry, list):
                coeffs.append(field(entry))
            else:
                coeffs.append(field(entry))
        return cls(field, len(coeffs) - 1, coeffs)

    def __repr__(self):
        return "BinaryForm(%r, deg=%d, %s)" % (self.field, self.degree,
                                               list(self.coeffs))


class Gl2Matrix:
    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, field, a, b, c, d):
        self.field = field
        self.a, self.b = field(a), field(b)
        self.c, self.d = field(c), field(d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __mul__(self, other):
        return Gl2Matrix(self.field,
                         self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def __add__(self, other):
        return Gl2Matrix(self.field, self.a + other.a, self.b + other.b,
                         self.c + other.c, self.d + other.d)

    def inverse(self):
        dt = self.det()
        if not dt:
            raise SingularMatrix("matrix is singular")
        inv = self.field.one / dt
        return Gl2Matrix(self.field, self.d * inv, -self.b * inv,
                         -self.c * inv, self.a * inv)

    def scale(self, c):
        return Gl2Matrix(self.field, self.a * c, self.b * c,
                         self.c * c, self.d * c)

    def apply_entrywise(self, fn):
        return Gl2Matrix(self.field, fn(self.a), fn(self.b),
                         fn(self.c), fn(self.d))

    def __eq__(self, other):
        return (isinstance(other, Gl2Matrix) and (self.a, self.b, self.c,
                self.d) == (other.a, other.b, other.c, other.d))

    def __repr__(self):
        return "[[%r, %r], [%r, %r]]" % (self.a, self.b, self.c, self.d)


def transvect(f, g, h):
    """h-th transvectant (f, g)_h, including the factorial normalization.

    Computed through the closed coefficient formula
      (f,g)_h = 1/(ff(r1,h) ff(r2,h)) * sum_k (-1)^k C(h,k) F_k G_k
    with F_k the (h-k, k) mixed partial of f and G_k the (k, h-k) one.
    """
    r1, r2 = f.degree, g.degree
    if h < 0 or h > min(r1, r2):
        raise OrderTooHigh("transvectant order %d exceeds degrees (%d, %d)"
                           % (h, r1, r2))
    char = f.field.characteristic
    if 0 < char < 11:
        from .errors import SmallCharacteristic
        raise SmallCharacteristic(
            "covariant formulas need characteristic 0 or >= 11")
    field = f.field
    norm = field(Fraction(1, _falling(r1, h) * _falling(r2, h)))
    zero = field.zero
    out = [zero] * (r1 + r2 - 2 * h + 1)
    for k in range(h + 1):
        fk = f.diff_x(h - k).diff_z(k)
        gk = g.diff_x(k).diff_z(h - k)
        sign = -1 if k % 2 else 1
        cf = field(sign * comb(h, k))
        for i, a in enumerate(fk.coeffs):
            if a:
                for j, b in enumerate(gk.coeffs):
                    if b:
                        out[i + j] = out[i + j] + cf * a * b
    return BinaryForm(field, r1 + r2 - 2 * h, [c * norm for c in out])


def omega_pair(f, g):
    """Unnormalized Omega^2 contraction of f against a quadratic g.

    Maps an order-r covariant to order r-2; equals 2*r*(r-1)*(f, g)_2.
    The quartic construction applies this operator nest four times.
    """
    r1, r2 = f.degree, g.degree
    if r2 != 2 or r1 < 2:
        raise OrderTooHigh("omega_pair expects a quadratic second argument")
    t = transvect(f, g, 2)
    return t.scale(f.field(_falling(r1, 2) * _falling(r2, 2)))


def gl2_act(mat, f):
    """Substitution action: (M.f)(X, Z) = f(aX + bZ, cX + dZ).

    Composition is contravariant: gl2_act(M, gl2_act(N, f)) equals
    gl2_act(N * M, f).
    """
    if not mat.det():
        raise SingularMatrix("matrix is singular")
    field = f.field
    n = f.degree
    # powers of the two substituted linear forms
    lin1 = BinaryForm(field, 1, [mat.b, mat.a])   # aX + bZ
    lin2 = BinaryForm(field, 1, [mat.d, mat.c])   # cX + dZ
    pow1 = [BinaryForm(field, 0, [field.one])]
    pow2 = [BinaryForm(field, 0, [field.one])]
    for _ in range(n):
        pow1.append(pow1[-1] * lin1)
        pow2.append(pow2[-1] * lin2)
    out = BinaryForm(field, n, [field.zero] * (n + 1))
    for i, a in enumerate(f.coeffs):
        if a:
            out = out + (pow1[i] * pow2[n - i]).scale(a)
    return out


def sylvester_resultant(f, g):
    """Resultant of two binary forms via the Sylvester matrix."""
    m, n = f.degree, g.degree
    field = f.field
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))   # X^m ... Z^m
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([field.zero] * i + fc + [field.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([field.zero] * i + gc + [field.zero] * (size - n - 1 - i))
    return _det_fraction_free(field, rows)


def _det_fraction_free(field, rows):
    """Bareiss determinant; works over any exact field."""
    n = len(rows)
    if n == 0:
        return field.one
    m = [list(r) for r in rows]
    sign = field.one
    prev = field.one
    for k in range(n - 1):
        if not m[k][k]:
            piv = None
            for r in range(k + 1, n):
                if m[r][k]:
                    piv = r
                    break
            if piv is None:
                return field.zero
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def disc_resultant(f):
    """Discriminant oracle: Sylvester resultant of the two partials.

    Zero exactly when f has a multiple root in the algebraic closure.  For
    a degree-n form this quantity has weight n(n-1) under substitution.
    """
    if f.degree < 2:
        raise DegreeTooSmall("discriminant needs degree >= 2")
    return sylvester_resultant(f.diff_x(), f.diff_z())


# ---------------------------------------------------------------------------
# projective roots over a splitting field


_EMBED_CACHE = {}


def embed_field(small, big):
    """Embedding F_{p^k} -> F_{p^K} (k | K), deterministic choice of root."""
    key = (small.serialize(), big.serialize())
    if key in _EMBED_CACHE:
        return _EMBED_CACHE[key]
    if isinstance(small, PrimeField):
        if isinstance(big, PrimeField):
            fn = lambda a: big(a.value)
        else:
            fn = lambda a: big(a.value)
        _EMBED_CACHE[key] = fn
        return fn
    if small.k == big.k and small.modulus == big.modulus:
        fn = lambda a: big(list(a.coeffs))
        _EMBED_CACHE[key] = fn
        return fn
    if big.k % small.k:
        raise ValueError("no embedding F_%d^%d -> F_%d^%d"
                         % (small.p, small.k, big.p, big.k))
    modulus = [big(c) for c in small.modulus]
    rts = unipoly.roots(big, modulus)
    if not rts:
        raise ValueError("modulus has no root in the bigger field")
    root = rts[0][0]

    def fn(a, _root=root, _big=big):
        acc = _big.zero
        for c in reversed(a.coeffs):
            acc = acc * _root + c
        return acc

    _EMBED_CACHE[key] = fn
    return fn


def splitting_extension(field, degrees):
    """Smallest extension of the base prime field containing all roots."""
    e = 1
    for d in degrees:
        g = _gcd_int(e, d)
        e = e // g * d
    if isinstance(field, PrimeField):
        k = 1
    else:
        k = field.k
    total = k * e
    if total == 1:
        return field
    return ExtField(field.characteristic, total)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def roots_in_splitting_field(f):
    """All projective roots (x : z) of f with multiplicity, over one
    deterministic extension containing the splitting field.

    The root at infinity (1 : 0) appears when the top coefficient vanishes.
    Returns (ext_field, [((x, z), multiplicity), ...]).
    """
    if f.is_zero():
        raise ZeroForm("zero form has no root divisor")
    field = f.field
    if isinstance(field, (PrimeField, ExtField)):
        pass
    else:
        raise TypeError("splitting fields implemented for finite fields only")
    n = f.degree
    # affine part: u(x) = sum a_i x^i, top coefficient index d
    d = max(i for i, c in enumerate(f.coeffs) if c)
    uni = list(f.coeffs[:d + 1])
    facs = unipoly.factor(field, uni)
    ext = splitting_extension(field, [unipoly.degree(g) for g, _ in facs])
    emb = embed_field(field, ext)
    out = []
    if n - d > 0:
        out.append(((ext.one, ext.zero), n - d))
    for g, mult in facs:
        gg = [emb(c) for c in g]
        for r, m2 in unipoly.roots(ext, gg):
            out.append(((r, ext.one), mult * m2))
    return ext, out
