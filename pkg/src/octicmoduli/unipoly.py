"""Generic dense univariate polynomials over a field object.

Coefficient lists are stored low-degree first.  The factorization routines
(squarefree / distinct-degree / equal-degree) are for finite fields only and
use a deterministically seeded splitting sequence so results are stable
across runs.  Degrees here never exceed ~20, so schoolbook arithmetic is
plenty.
"""

import random

from .fields import ExtField, PrimeField


def trim(f):
    while f and not f[-1]:
        f.pop()
    return f


def degree(f):
    return len(f) - 1


def add(f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(a + b)
    return trim(out)


def sub(field, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(a - b)
    return trim(out)


def mul(field, f, g):
    if not f or not g:
        return []
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = out[i + j] + fi * gj
    return trim(out)


def scale(f, c):
    return trim([a * c for a in f])


def divmod_poly(field, f, g):
    f = trim(list(f))
    g = trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [field.zero] * max(0, len(f) - len(g) + 1)
    inv_lead = field.one / g[-1]
    while f and len(f) >= len(g):
        c = f[-1] * inv_lead
        off = len(f) - len(g)
        q[off] = c
        for i, gi in enumerate(g):
            f[off + i] = f[off + i] - c * gi
        trim(f)
    return trim(q), f


def rem(field, f, g):
    return divmod_poly(field, f, g)[1]


def monic(field, f):
    f = trim(list(f))
    if not f:
        return f
    inv = field.one / f[-1]
    return [c * inv for c in f]


def gcd(field, f, g):
    f, g = trim(list(f)), trim(list(g))
    while g:
        f, g = g, rem(field, f, g)
    return monic(field, f)


def powmod(field, f, n, modp):
    result = [field.one]
    f = rem(field, list(f), modp)
    while n:
        if n & 1:
            result = rem(field, mul(field, result, f), modp)
        f = rem(field, mul(field, f, f), modp)
        n >>= 1
    return result


def evaluate(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(field, f):
    return trim([f[i] * i for i in range(1, len(f))])


def _field_order(field):
    if isinstance(field, PrimeField):
        return field.p
    if isinstance(field, ExtField):
        return field.order
    raise TypeError("factorization needs a finite field, got %r" % (field,))


def _poly_seed(field, f):
    if isinstance(field, ExtField):
        flat = tuple(c for e in f for c in e.coeffs)
    else:
        flat = tuple(c.value for c in f)
    return hash((_field_order(field),) + flat) & 0x7FFFFFFF


def _random_poly(field, deg, rng):
    q = _field_order(field)
    if isinstance(field, ExtField):
        p, k = field.p, field.k
        return trim([field([rng.randrange(p) for _ in range(k)])
                     for _ in range(deg + 1)])
    return trim([field(rng.randrange(q)) for _ in range(deg + 1)])


def squarefree_part_factors(field, f):
    """Yun decomposition [(squarefree factor, multiplicity)].

    Valid when deg f < characteristic, which always holds here (octics,
    char >= 11).
    """
    f = monic(field, f)
    out = []
    g = gcd(field, f, derivative(field, f))
    w, _ = divmod_poly(field, f, g)
    i = 1
    while degree(w) > 0:
        y = gcd(field, w, g)
        fac, _ = divmod_poly(field, w, y)
        if degree(fac) > 0:
            out.append((monic(field, fac), i))
        w = y
        g, _ = divmod_poly(field, g, y)
        i += 1
    return out


def distinct_degree_factors(field, f):
    """[(product of irreducible factors of degree d, d)] for squarefree f."""
    q = _field_order(field)
    out = []
    x = [field.zero, field.one]
    h = list(x)
    d = 0
    f = monic(field, f)
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = powmod(field, h, q, f)
        g = gcd(field, f, sub(field, h, x))
        if degree(g) > 0:
            out.append((g, d))
            f, _ = divmod_poly(field, f, g)
            h = rem(field, h, f)
    if degree(f) > 0:
        out.append((f, degree(f)))
    return out


def equal_degree_split(field, f, d, rng):
    """Cantor-Zassenhaus split of a squarefree product of degree-d primes."""
    q = _field_order(field)
    n = degree(f)
    if n == d:
        return [f]
    while True:
        r = _random_poly(field, rng.randrange(1, n), rng)
        if degree(r) < 1:
            continue
        g = gcd(field, f, r)
        if 0 < degree(g) < n:
            pass
        else:
            h = powmod(field, r, (q ** d - 1) // 2, f)
            g = gcd(field, f, sub(field, h, [field.one]))
        if 0 < degree(g) < n:
            f1, _ = divmod_poly(field, f, g)
            return (equal_degree_split(field, g, d, rng)
                    + equal_degree_split(field, f1, d, rng))


def factor(field, f):
    """Full factorization over a finite field: [(monic irreducible, mult)].

    Deterministic: the internal randomness is seeded from the polynomial.
    """
    f = trim(list(f))
    if degree(f) < 1:
        return []
    rng = random.Random(_poly_seed(field, f))
    out = []
    for sqf, mult in squarefree_part_factors(field, f):
        for prod, d in distinct_degree_factors(field, sqf):
            for irr in equal_degree_split(field, prod, d, rng):
                out.append((monic(field, irr), mult))
    out.sort(key=lambda fm: (degree(fm[0]), _sort_key(field, fm[0])))
    return out


def _sort_key(field, f):
    return tuple(field.element_key(c) for c in f)


def roots(field, f):
    """Roots in the field itself, as [(root, multiplicity)], sorted."""
    out = []
    for irr, mult in factor(field, f):
        if degree(irr) == 1:
            out.append((-irr[0], mult))
    out.sort(key=lambda rm: field.element_key(rm[0]))
    return out


def rational_roots(f):
    """Rational roots of a polynomial with Fraction coefficients, as
    [(root, multiplicity)] sorted.

    The coefficients here routinely have hundreds of digits, so instead of
    the divisor search the roots are found modulo one good word-size
    prime, Hensel-lifted, and recognized by rational reconstruction with
    an exact final check.
    """
    from fractions import Fraction
    from math import gcd as igcd

    from .fields import PrimeField
    from .linsolve import PRIMES30, rational_reconstruct

    f = trim(list(f))
    if degree(f) < 1:
        return []
    den = 1
    for c in f:
        c = Fraction(c)
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in f]
    g = 0
    for c in ints:
        g = igcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    shift = 0
    while ints and ints[0] == 0:
        ints.pop(0)
        shift += 1
    out = {}
    if shift:
        out[Fraction(0)] = shift
    if len(ints) <= 1:
        return sorted(out.items())

    poly = [Fraction(c) for c in ints]
    # detect roots on the squarefree part so repeated rational roots do
    # not block the good-prime search
    sqf = poly
    d_over_q = [poly[i] * i for i in range(1, len(poly))]
    g_q = _gcd_q(poly, d_over_q)
    if len(g_q) > 1:
        sqf, _ = divmod_q(poly, g_q)
    sq_den = 1
    for c in sqf:
        sq_den = sq_den * c.denominator // igcd(sq_den, c.denominator)
    sq_ints = [int(c * sq_den) for c in sqf]
    # a height bound loose enough for reconstruction to succeed
    height = max(max(abs(c) for c in ints), max(abs(c) for c in sq_ints))
    bound = 4 * height * height + 16
    candidates = set()
    for p in PRIMES30:
        if sq_ints[-1] % p == 0:
            continue
        field = PrimeField(p)
        fp = [field(c) for c in sq_ints]
        if degree(gcd(field, fp, derivative(field, fp))) > 0:
            continue        # repeated roots mod p; try another prime
        ints = sq_ints
        for r0, _ in roots(field, fp):
            r = r0.value
            modulus = p
            while modulus < bound:
                # quadratic Hensel step
                modulus *= modulus
                fr = _eval_int(ints, r, modulus)
                dfr = _eval_int([c * (i + 1) for i, c in
                                 enumerate(ints[1:])], r, modulus)
                r = (r - fr * pow(dfr, -1, modulus)) % modulus
            cand = rational_reconstruct(r, modulus)
            if cand is not None:
                candidates.add(cand)
        break
    for cand in candidates:
        if evaluate_q(poly, cand) == 0:
            mult = 0
            cur = poly
            while evaluate_q(cur, cand) == 0:
                cur, _ = divmod_q(cur, [-cand, Fraction(1)])
                mult += 1
            out[cand] = mult
    return sorted(out.items())


def _eval_int(coeffs, x, modulus):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % modulus
    return acc


def _gcd_q(f, g):
    from fractions import Fraction
    f, g = list(f), list(g)
    while any(g):
        _, r = divmod_q(f, g)
        f, g = g, r
    while f and f[-1] == 0:
        f.pop()
    if f:
        lead = f[-1]
        f = [c / lead for c in f]
    return f


def evaluate_q(f, x):
    acc = x * 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def divmod_q(f, g):
    from fractions import Fraction
    f = list(f)
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    while f and len(f) >= len(g) and any(f):
        while f and f[-1] == 0:
            f.pop()
        if not f or len(f) < len(g):
            break
        c = f[-1] / g[-1]
        off = len(f) - len(g)
        q[off] = c
        for i, gi in enumerate(g):
            f[off + i] = f[off + i] - c * gi
        while f and f[-1] == 0:
            f.pop()
    return q, f
