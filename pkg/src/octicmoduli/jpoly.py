"""Weighted-homogeneous polynomials in the nine generators J2..J10.

A JPolynomial maps exponent vectors (e2, ..., e10) to rational
coefficients; every monomial shares the declared weighted degree
sum(w * e_w).  These polynomials are what the interpolation layer produces
and what the stratum systems, syzygies and reconstruction caches are made
of.  They evaluate over any field of characteristic 0 or >= 11.
"""

from fractions import Fraction

WEIGHTS = (2, 3, 4, 5, 6, 7, 8, 9, 10)


def wdeg(expvec):
    return sum(w * e for w, e in zip(WEIGHTS, expvec))


def monomial_basis(d, num_vars=9):
    """All exponent vectors (e2, ..., e10) with weighted degree d.

    Only the first num_vars generators may appear (num_vars=6 restricts to
    J2..J7).  Sorted descending in graded reverse lexicographic order with
    J2 < J3 < ... < J10; since every vector shares the weighted degree, the
    comparison is the classical revlex tie-break.
    """
    out = []

    def rec(idx, rem, cur):
        if idx == num_vars:
            if rem == 0:
                out.append(tuple(cur) + (0,) * (9 - num_vars))
            return
        w = WEIGHTS[idx]
        top = rem // w
        for e in range(top + 1):
            rec(idx + 1, rem - e * w, cur + [e])

    rec(0, d, [])
    out.sort(key=grevlex_key, reverse=True)
    return out


def grevlex_key(expvec):
    """Sort key: larger key = larger monomial in grevlex (J2 < ... < J10)."""
    # among equal weighted degrees: a > b iff the last nonzero entry of
    # a - b is negative
    return tuple(-e for e in reversed(expvec))


class JPolynomial:
    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        self.terms = {}
        if terms:
            for ev, c in terms.items():
                c = Fraction(c)
                if c:
                    if wdeg(ev) != degree:
                        raise ValueError("monomial %r has degree %d, not %d"
                                         % (ev, wdeg(ev), degree))
                    self.terms[tuple(ev)] = c

    @classmethod
    def zero(cls, degree=0):
        return cls(degree, {})

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls(0, {(0,) * 9: c} if c else {})

    @classmethod
    def generator(cls, w):
        ev = [0] * 9
        ev[w - 2] = 1
        return cls(w, {tuple(ev): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, JPolynomial) and other.terms == self.terms)

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if other.degree != self.degree:
            raise ValueError("degree mismatch %d vs %d"
                             % (self.degree, other.degree))
        terms = dict(self.terms)
        for ev, c in other.terms.items():
            nc = terms.get(ev, Fraction(0)) + c
            if nc:
                terms[ev] = nc
            else:
                terms.pop(ev, None)
        return JPolynomial(self.degree, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, JPolynomial):
            if self.is_zero() or other.is_zero():
                return JPolynomial.zero(self.degree + other.degree)
            terms = {}
            for ev1, c1 in self.terms.items():
                for ev2, c2 in other.terms.items():
                    ev = tuple(a + b for a, b in zip(ev1, ev2))
                    nc = terms.get(ev, Fraction(0)) + c1 * c2
                    if nc:
                        terms[ev] = nc
                    else:
                        terms.pop(ev, None)
            return JPolynomial(self.degree + other.degree, terms)
        return self.scale(other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return JPolynomial.zero(self.degree)
        return JPolynomial(self.degree,
                           {ev: cc * c for ev, cc in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def evaluate(self, field, jvals):
        """Evaluate at a 9-tuple of field elements (j2, ..., j10)."""
        jvals = [field(v) for v in jvals]
        maxe = [0] * 9
        for ev in self.terms:
            for i, e in enumerate(ev):
                if e > maxe[i]:
                    maxe[i] = e
        pows = []
        for i in range(9):
            cur = [field.one]
            for _ in range(maxe[i]):
                cur.append(cur[-1] * jvals[i])
            pows.append(cur)
        acc = field.zero
        for ev, c in self.terms.items():
            t = field(c)
            for i, e in enumerate(ev):
                if e:
                    t = t * pows[i][e]
            acc = acc + t
        return acc

    def arrays_mod(self, p):
        """(coeff_vector, exponent_matrix) with coefficients reduced mod p."""
        import numpy as np
        evs = sorted(self.terms, key=grevlex_key, reverse=True)
        coeffs = np.array(
            [int(Fraction(self.terms[ev]).numerator
                 * pow(self.terms[ev].denominator, -1, p)) % p for ev in evs],
            dtype=np.int64)
        exps = np.array(evs, dtype=np.int64).reshape(len(evs), 9)
        return coeffs, exps

    def max_exponents(self):
        maxe = [0] * 9
        for ev in self.terms:
            for i, e in enumerate(ev):
                if e > maxe[i]:
                    maxe[i] = e
        return maxe

    def serialize(self):
        """Cache line: 'degree; e2,...,e10: num/den; ...' in grevlex order."""
        parts = ["%d" % self.degree]
        for ev in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[ev]
            parts.append("%s: %d/%d" % (",".join(str(e) for e in ev),
                                        c.numerator, c.denominator))
        return "; ".join(parts)

    @classmethod
    def deserialize(cls, line):
        chunks = line.strip().split("; ")
        degree = int(chunks[0])
        terms = {}
        for chunk in chunks[1:]:
            ev_str, c_str = chunk.split(": ")
            ev = tuple(int(e) for e in ev_str.split(","))
            num, den = c_str.split("/")
            terms[ev] = Fraction(int(num), int(den))
        return cls(degree, terms)

    def __repr__(self):
        if not self.terms:
            return "JPolynomial(0)"
        names = ["J%d" % w for w in WEIGHTS]
        bits = []
        for ev in sorted(self.terms, key=grevlex_key, reverse=True)[:6]:
            mono = "*".join("%s^%d" % (names[i], e) if e > 1 else names[i]
                            for i, e in enumerate(ev) if e) or "1"
            bits.append("%s*%s" % (self.terms[ev], mono))
        more = "" if len(self.terms) <= 6 else " + ... (%d terms)" % len(self.terms)
        return "JPolynomial(%s%s)" % (" + ".join(bits), more)


class JPolyX:
    """Polynomial in one extra variable X with JPolynomial coefficients.

    Used to assemble the degree-5 equation satisfied by J8 out of the
    syzygy blocks; coeffs[i] multiplies X^i.
    """

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        while self.coeffs and self.coeffs[-1].is_zero():
            self.coeffs.pop()

    @classmethod
    def const(cls, jp):
        return cls([jp])

    @classmethod
    def x_plus(cls, jp):
        return cls([jp, JPolynomial.constant(1)])

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else JPolynomial.zero()
            b = other.coeffs[i] if i < len(other.coeffs) else JPolynomial.zero()
            if a.is_zero():
                out.append(b)
            elif b.is_zero():
                out.append(a)
            else:
                out.append(a + b)
        return JPolyX(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return JPolyX([jp.scale(c) for jp in self.coeffs])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return JPolyX([])
        out = [JPolynomial.zero() for _ in
               range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                prod = a * b
                if out[i + j].is_zero():
                    out[i + j] = prod
                else:
                    out[i + j] = out[i + j] + prod
        return JPolyX(out)

    def __neg__(self):
        return self.scale(-1)
