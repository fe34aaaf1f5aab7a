"""Weighted projective spaces: equality, canonical representatives and
enumeration, plus the genus-3 moduli enumeration over prime fields.

A point is a tuple (u_1 : ... : u_m), not all zero, up to the rescaling
u_i -> lambda^{d_i} u_i.  Equality and normalization follow the support /
extended-gcd construction: classes are compared without ever leaving the
base field.
"""

from .errors import WeightMismatch
from .fields import PrimeField, ext_gcd_multi

SHIODA_WEIGHTS = (2, 3, 4, 5, 6, 7, 8, 9, 10)


class WeightedPoint:
    __slots__ = ("field", "weights", "coords")

    def __init__(self, field, weights, coords):
        weights = tuple(int(w) for w in weights)
        coords = tuple(field(c) for c in coords)
        if len(weights) != len(coords):
            raise WeightMismatch("%d weights for %d coordinates"
                                 % (len(weights), len(coords)))
        if len(weights) < 2:
            raise WeightMismatch("a weighted projective space needs m >= 2")
        if not any(coords):
            raise WeightMismatch("the zero vector is not a point")
        self.field = field
        self.weights = weights
        self.coords = coords

    def support(self):
        return tuple(i for i, c in enumerate(self.coords) if c)

    def key(self):
        """Hashable exact canonical form (after wps_normalize)."""
        return tuple(self.field.element_key(c) if c else None
                     for c in self.coords)

    def __repr__(self):
        return "(" + " : ".join(repr(c) for c in self.coords) + ")"


def wps_equal(u, v):
    """Equality test in the weighted projective space.

    Compares supports, then checks V_i/U_i = Lambda^{d_i/d} on the common
    support, where Lambda is the Bezout-weighted product of the ratios.
    """
    if u.weights != v.weights:
        raise WeightMismatch("points live in different spaces")
    su, sv = u.support(), v.support()
    if su != sv:
        return False
    d, cs = ext_gcd_multi([u.weights[i] for i in su])
    ratios = [v.coords[i] / u.coords[i] for i in su]
    lam = u.field.one
    for r, c in zip(ratios, cs):
        lam = lam * r ** c
    for i, r in zip(su, ratios):
        if r != lam ** (u.weights[i] // d):
            return False
    return True


def wps_normalize(u):
    """The unique representative with prod u_i^{c_i} = 1 on the support,
    the c_i being the deterministic Bezout coefficients of the support
    weights."""
    su = u.support()
    d, cs = ext_gcd_multi([u.weights[i] for i in su])
    lam = u.field.one
    for i, c in zip(su, cs):
        lam = lam * u.coords[i] ** c
    coords = list(u.coords)
    for i in su:
        coords[i] = u.coords[i] / lam ** (u.weights[i] // d)
    return WeightedPoint(u.field, u.weights, coords)


def _support_subsets(m):
    """Nonempty subsets of range(m), by increasing cardinality then
    lexicographic order."""
    from itertools import combinations
    for size in range(1, m + 1):
        yield from combinations(range(m), size)


def wps_enumerate(field, weights):
    """All classes of the weighted projective space over a finite field,
    one canonical representative each.

    For each support, Bezout coefficients c_i are fixed once and all
    vectors with prod u_i^{c_i} = 1 are produced; each class with that
    support appears exactly once.
    """
    weights = tuple(int(w) for w in weights)
    if len(weights) < 2:
        raise WeightMismatch("a weighted projective space needs m >= 2")
    if isinstance(field, PrimeField):
        yield from _wps_enumerate_prime(field, weights)
        return
    if hasattr(field, "order") and hasattr(field, "elements"):
        yield from _wps_enumerate_generic(field, weights)
        return
    raise WeightMismatch("enumeration needs a finite field")


def _wps_enumerate_prime(field, weights):
    p = field.p
    nonzero = list(range(1, p))
    for supp in _support_subsets(len(weights)):
        d, cs = ext_gcd_multi([weights[i] for i in supp])
        # enumerate all-but-last coordinates freely, solve the product
        # constraint for the last one
        k = len(supp)
        c_last = cs[-1] % (p - 1)
        import itertools
        for prefix in itertools.product(nonzero, repeat=k - 1):
            prod = 1
            for val, c in zip(prefix, cs):
                prod = prod * pow(val, c % (p - 1), p) % p
            # need prod * last^c_last = 1 (mod p)
            target = pow(prod, -1, p)
            for last in _power_preimages(p, c_last, target):
                coords = [0] * len(weights)
                for i, val in zip(supp, prefix + (last,)):
                    coords[i] = val
                yield WeightedPoint(field, weights, coords)


def _wps_enumerate_generic(field, weights):
    """Small extension fields: the same support walk with element scans."""
    import itertools
    order = field.order - 1
    nonzero = [x for x in field.elements() if x]
    for supp in _support_subsets(len(weights)):
        d, cs = ext_gcd_multi([weights[i] for i in supp])
        k = len(supp)
        c_last = cs[-1] % order
        for prefix in itertools.product(nonzero, repeat=k - 1):
            prod = field.one
            for val, c in zip(prefix, cs):
                prod = prod * val ** (c % order)
            target = field.one / prod
            for last in nonzero:
                if last ** c_last == target:
                    coords = [field.zero] * len(weights)
                    for i, val in zip(supp, prefix + (last,)):
                        coords[i] = val
                    yield WeightedPoint(field, weights, coords)


def _power_preimages(p, e, target):
    """x in F_p^* with x^e = target, via the cyclic group structure."""
    from math import gcd
    g = gcd(e, p - 1) if e else 0
    if e == 0:
        if target == 1:
            return list(range(1, p))
        return []
    # brute scan is fine for census-scale fields; keeps the choice of
    # generator out of the picture
    return [x for x in range(1, p) if pow(x, e, p) == target]


def moduli_enumerate(field, filter_singular=True, on_progress=None):
    """Representatives of every point of the genus-3 hyperelliptic moduli
    space over F_p (weights 2..10, subject to the five relations).

    Steps: enumerate (j2..j7) classes; for each, rescale through the
    cosets of k*/(k*)^delta with delta the gcd of the support weights;
    solve the degree-5 equation for J8 and the relations for (J9, J10);
    deduplicate through canonical forms.  With filter_singular, classes
    with vanishing discriminant (no smooth curve) are dropped.
    """
    from .census_fast import moduli_enumerate_fast
    yield from moduli_enumerate_fast(field, filter_singular,
                                     on_progress=on_progress)


def moduli_enumerate_slow(field, filter_singular=True):
    """Reference implementation of moduli_enumerate in pure field
    arithmetic; same output, noticeably slower.  Kept as the oracle the
    vectorized path is tested against."""
    from .covariants import (
        IdenticallyZeroQuintic, discriminant_J, j8_candidates, solve_j9_j10,
    )
    p = field.p
    seen = set()
    gen = _smallest_primitive_root(p)
    for pt in wps_enumerate(field, (2, 3, 4, 5, 6, 7)):
        supp = pt.support()
        delta, _ = ext_gcd_multi([pt.weights[i] for i in supp])
        from math import gcd
        ncosets = gcd(delta, p - 1)
        for t in range(ncosets):
            pi = pow(gen, t, p)
            j27 = [field.zero] * 6
            for i in supp:
                j27[i] = pt.coords[i] * field(pi) ** (pt.weights[i] // delta)
            try:
                cands = j8_candidates(field, j27)
            except IdenticallyZeroQuintic:
                cands = list(field.elements())
            for j8 in cands:
                for j9, j10 in solve_j9_j10(field, j27 + [j8]):
                    coords = tuple(j27) + (j8, j9, j10)
                    if not any(coords):
                        continue
                    wp = WeightedPoint(field, SHIODA_WEIGHTS, coords)
                    key = wps_normalize(wp).key()
                    if key in seen:
                        continue
                    seen.add(key)
                    if filter_singular and \
                            not discriminant_J(field, coords):
                        continue
                    yield wp


def _smallest_primitive_root(p):
    from .fields import _prime_factors
    factors = sorted(set(_prime_factors(p - 1)))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ValueError("no primitive root (p not prime?)")
