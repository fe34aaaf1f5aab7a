"""Polynomial ring Q[a0..a8] dressed up as a coefficient field, so the
transvectant machinery can run on a generic octic and produce symbolic
coefficient expansions for the calibration test."""

from fractions import Fraction


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @classmethod
    def const(cls, c):
        c = Fraction(c)
        return cls({(0,) * 9: c} if c else {})

    @classmethod
    def gen(cls, i):
        ev = [0] * 9
        ev[i] = 1
        return cls({tuple(ev): Fraction(1)})

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for ev, c in other.terms.items():
            nc = out.get(ev, Fraction(0)) + c
            if nc:
                out[ev] = nc
            else:
                out.pop(ev, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return self + other.__neg__()

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return MultiPoly({ev: -c for ev, c in self.terms.items()})

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                ev = tuple(a + b for a, b in zip(e1, e2))
                nc = out.get(ev, Fraction(0)) + c1 * c2
                if nc:
                    out[ev] = nc
                else:
                    out.pop(ev, None)
        return MultiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        return isinstance(other, MultiPoly) and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "MultiPoly(%d terms)" % len(self.terms)


class SymRing:
    """Field-protocol wrapper around MultiPoly (no division by
    non-constants ever happens in the transvectant formulas)."""

    characteristic = 0

    def __call__(self, value):
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.const(value)

    @property
    def zero(self):
        return MultiPoly()

    @property
    def one(self):
        return MultiPoly.const(1)

    def is_zero(self, a):
        return not a

    def __eq__(self, other):
        return isinstance(other, SymRing)

    def __hash__(self):
        return hash("SymRing")

    def __repr__(self):
        return "Q[a0..a8]"


def generic_octic():
    from octicmoduli.forms import BinaryForm
    ring = SymRing()
    return BinaryForm(ring, 8, [MultiPoly.gen(i) for i in range(9)])
