"""The fundamental covariants of binary octics and everything built on
them: the nine generator invariants J2..J10, the catalogue of 69 covariant
generators, invariant-to-J-polynomial interpolation, the five syzygies
among J8, J9, J10, and the degree-14 discriminant in J-coordinates.

The catalogue lists, for each generator, a recipe over earlier entries:
either a transvectant of a previous generator (or product of two) against
the base form.  Orders never exceed 10 except for the two order-18
entries, which keeps every formula valid in characteristic 0 and >= 11.
"""

import random
from fractions import Fraction

import numpy as np

from . import store
from .errors import (
    IdenticallyZeroQuintic, RankDeficiency, SingularForm, UnknownIdentifier,
    Unresolved, WrongDegree,
)
from .fields import ExtField, PrimeField, QQ
from .forms import BinaryForm, transvect
from .jpoly import JPolyX, JPolynomial, monomial_basis
from .linsolve import solve_rational
from .unipoly import rational_roots, roots as field_roots

# ---------------------------------------------------------------------------
# catalogue


def _build_catalogue():
    """(degree, order, recipe) per identifier; recipe is
    ("base",), ("tr", left, h) or ("trprod", left1, left2, h),
    the transvectant always being taken against the base form."""
    cat = {"f": (1, 8, ("base",))}

    def tr(name, left, h):
        d, r, _ = cat[left]
        cat[name] = (d + 1, r + 8 - 2 * h, ("tr", left, h))

    def trp(name, left1, left2, h):
        d1, r1, _ = cat[left1]
        d2, r2, _ = cat[left2]
        cat[name] = (d1 + d2 + 1, r1 + r2 + 8 - 2 * h,
                     ("trprod", left1, left2, h))

    tr("C2_0", "f", 8); tr("C2_4", "f", 6)
    tr("C2_8", "f", 4); tr("C2_12", "f", 2)

    tr("C3_0", "C2_8", 8); tr("C3_4", "C2_8", 6); tr("C3_6", "C2_8", 5)
    tr("C3_8", "C2_8", 4); tr("C3_10", "C2_8", 3); tr("C3_12", "C2_8", 2)
    tr("C3_14", "C2_8", 1); tr("C3_18", "C2_12", 1)

    tr("C4_0", "C3_8", 8); tr("C4_4", "C3_4", 4); tr("C4_4p", "C3_8", 6)
    tr("C4_6", "C3_4", 3); tr("C4_8", "C3_4", 2); tr("C4_10", "C3_4", 1)
    tr("C4_10p", "C3_8", 3); tr("C4_12", "C3_8", 2); tr("C4_14", "C3_8", 1)
    tr("C4_18", "C3_12", 1)

    tr("C5_0", "C4_8", 8); tr("C5_2", "C4_10", 8); tr("C5_4", "C4_10", 7)
    tr("C5_4p", "C4_8", 6); tr("C5_6", "C4_10", 6); tr("C5_6p", "C4_8", 5)
    tr("C5_8", "C4_10", 5); tr("C5_10", "C4_8", 3); tr("C5_10p", "C4_10", 4)
    tr("C5_10pp", "C4_10p", 4); tr("C5_14", "C4_10", 2)

    trp("C6_0", "C3_4", "C2_4", 8)
    tr("C6_2", "C5_8", 7); tr("C6_4", "C5_8", 6); tr("C6_4p", "C5_4p", 4)
    tr("C6_6", "C5_8", 5); tr("C6_6p", "C5_4p", 3); tr("C6_6pp", "C5_10p", 6)
    tr("C6_8", "C5_4p", 2); tr("C6_10", "C5_4p", 1)

    trp("C7_0", "C2_4", "C4_4p", 8)
    # the worked reconstruction example pins which of the two degree-7
    # order-2 generators is the unprimed one
    tr("C7_2", "C6_6pp", 6); trp("C7_2p", "C2_4", "C4_6", 8)
    trp("C7_4", "C2_4", "C4_6", 7); tr("C7_4p", "C6_6pp", 5)
    tr("C7_6", "C6_6pp", 4); tr("C7_6p", "C6_2", 2)
    trp("C7_6pp", "C2_4", "C4_6", 6)

    trp("C8_0", "C3_4", "C4_4", 8)
    trp("C8_2", "C2_8", "C5_2", 8); trp("C8_2p", "C3_6", "C4_4", 8)
    trp("C8_4", "C3_6", "C4_4", 7); trp("C8_4p", "C3_4", "C4_6", 7)
    trp("C8_6", "C3_6", "C4_4", 6); trp("C8_6p", "C3_4", "C4_6", 6)

    trp("C9_0", "C2_4", "C6_4", 8)
    # the exceptional-point fixtures pin the degree-9 naming: the primed
    # generator is the one built on the (6,6) covariant
    trp("C9_2", "C4_6", "C4_4p", 8); trp("C9_2p", "C2_4", "C6_6p", 8)
    trp("C9_2pp", "C2_4", "C6_4", 7); trp("C9_4", "C2_4", "C6_4", 6)

    trp("C10_0", "C4_4", "C5_4p", 8)
    trp("C10_2", "C7_2p", "C2_4", 6); trp("C10_2p", "C4_6", "C5_4", 8)

    trp("C11_2", "C8_4p", "C2_4", 7); trp("C11_2p", "C5_6p", "C5_4p", 8)

    trp("C12_2", "C6_6p", "C5_4p", 8)
    return cat


CATALOGUE = _build_catalogue()

#: the fourteen order-2 generators, by increasing degree then plainness
ORDER2_IDS = [name for name, (d, r, _) in sorted(
    CATALOGUE.items(), key=lambda kv: (kv[1][0], kv[0])) if r == 2]

#: the nine invariants of the catalogue
INVARIANT_IDS = [name for name, (d, r, _) in sorted(
    CATALOGUE.items(), key=lambda kv: (kv[1][0], kv[0])) if r == 0]


def catalogue_degree_order(identifier):
    if identifier not in CATALOGUE:
        raise UnknownIdentifier("no catalogue entry %r" % identifier)
    d, r, _ = CATALOGUE[identifier]
    return d, r


def covariant_eval(identifier, f, cache=None):
    """Evaluate one catalogue entry on an octic, bottom-up over the DAG.

    Passing a dict as cache shares intermediate covariants between calls
    on the same form.
    """
    if identifier not in CATALOGUE:
        raise UnknownIdentifier("no catalogue entry %r" % identifier)
    if f.degree != 8:
        raise WrongDegree("catalogue covariants take octics")
    if cache is None:
        cache = {}

    def ev(name):
        if name in cache:
            return cache[name]
        _, _, recipe = CATALOGUE[name]
        if recipe[0] == "base":
            val = f
        elif recipe[0] == "tr":
            _, left, h = recipe
            val = transvect(ev(left), f, h)
        else:
            _, left1, left2, h = recipe
            val = transvect(ev(left1) * ev(left2), f, h)
        cache[name] = val
        return val

    return ev(identifier)


# ---------------------------------------------------------------------------
# Shioda invariants


def shioda(f):
    """The nine generator invariants (J2, ..., J10) of an octic.

    Built from the classical chain of auxiliary covariants; the
    coefficient expansions of J2, J3, J4 are pinned by the calibration
    test, which fixes every normalization here.
    """
    if f.degree != 8:
        raise WrongDegree("Shioda invariants take octics")
    field = f.field
    g = transvect(f, f, 4)          # degree 2, order 8
    k = transvect(f, f, 6)          # degree 2, order 4
    h = transvect(k, k, 2)          # degree 4, order 4
    m = transvect(f, k, 4)          # degree 3, order 4
    n = transvect(f, h, 4)          # degree 5, order 4
    p = transvect(g, k, 4)          # degree 4, order 4
    q = transvect(g, h, 4)          # degree 6, order 4

    def inv(a, b, order):
        t = transvect(a, b, order)
        return t.coeffs[0]

    return (
        inv(f, f, 8),
        inv(f, g, 8),
        inv(k, k, 4),
        inv(m, k, 4),
        inv(k, h, 4),
        inv(m, h, 4),
        inv(p, h, 4),
        inv(n, h, 4),
        inv(q, h, 4),
    )


_DISC_J = None


def discriminant_J(field, jtuple):
    """The discriminant as a weighted degree-14 polynomial in J2..J10.

    Vanishes exactly on the classes of octics with a multiple root; agrees
    with the resultant oracle up to one universal constant.
    """
    global _DISC_J
    if _DISC_J is None:
        polys = store.read_data_polys("discriminant_j.jpoly")
        _DISC_J = polys[0][1]
    return _DISC_J.evaluate(field, jtuple)


def is_isomorphic(f, g):
    """Whether two simple-root octics define isomorphic curves."""
    from . import wps
    from .forms import disc_resultant
    if not disc_resultant(f):
        raise SingularForm("first form has a multiple root")
    if not disc_resultant(g):
        raise SingularForm("second form has a multiple root")
    jf = shioda(f)
    jg = shioda(g)
    return wps.wps_equal(wps.WeightedPoint(f.field, (2, 3, 4, 5, 6, 7, 8, 9,
                                                     10), jf),
                         wps.WeightedPoint(g.field, (2, 3, 4, 5, 6, 7, 8, 9,
                                                     10), jg))


# ---------------------------------------------------------------------------
# sampling and interpolation


def random_octic(rng, field=QQ, bound=20):
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(9)]
        if any(coeffs):
            return BinaryForm(field, 8, coeffs)


class _SampleSet:
    """Random rational octics with their J-values, reducible mod p."""

    def __init__(self, count, seed, bound=20):
        rng = random.Random(seed)
        self.forms = []
        self.jvals = []           # rows of 9 Fractions
        while len(self.forms) < count:
            f = random_octic(rng, QQ, bound)
            self.forms.append(f)
            self.jvals.append(shioda(f))

    def jmatrix_mod(self, p):
        rows = len(self.jvals)
        out = np.zeros((rows, 9), dtype=np.int64)
        for i, row in enumerate(self.jvals):
            for j, v in enumerate(row):
                out[i, j] = (v.numerator * pow(v.denominator, -1, p)) % p
        return out


def _basis_columns_mod(jmat, basis, p):
    """Matrix whose (i, j) entry is basis[j] evaluated at sample i, mod p."""
    rows = jmat.shape[0]
    maxe = [0] * 9
    for ev in basis:
        for i, e in enumerate(ev):
            if e > maxe[i]:
                maxe[i] = e
    pow_tables = []
    for v in range(9):
        tbl = np.ones((maxe[v] + 1, rows), dtype=np.int64)
        for e in range(1, maxe[v] + 1):
            tbl[e] = tbl[e - 1] * jmat[:, v] % p
        pow_tables.append(tbl)
    cols = np.empty((len(basis), rows), dtype=np.int64)
    for j, ev in enumerate(basis):
        acc = np.ones(rows, dtype=np.int64)
        for v, e in enumerate(ev):
            if e:
                acc = acc * pow_tables[v][e] % p
        cols[j] = acc
    return cols.T


def _values_mod(values, p):
    out = np.zeros(len(values), dtype=np.int64)
    for i, v in enumerate(values):
        v = Fraction(v)
        out[i] = (v.numerator * pow(v.denominator, -1, p)) % p
    return out


class ExpressResult:
    """Canonical J-polynomial for an invariant plus solve diagnostics."""

    __slots__ = ("polynomial", "nullity", "rank")

    def __init__(self, polynomial, nullity, rank):
        self.polynomial = polynomial
        self.nullity = nullity
        self.rank = rank


MAX_EXPRESS_DEGREE = 44

_EXPRESS_SEED = 0x0C71C


def express_in_J(program, degree, seed=_EXPRESS_SEED, samples=None):
    """Write an invariant (given as an evaluation program on octics) as a
    polynomial in J2..J10 of the stated weighted degree.

    Evaluation-interpolation: the weighted monomial basis is evaluated on
    random rational octics along with the program, and the resulting
    linear system is solved exactly.  From degree 16 on the system is
    underdetermined modulo the syzygies; the canonical representative sets
    the coefficients of non-pivot monomials (grevlex order, J2 < ... <
    J10) to zero, and the nullity is reported.
    """
    outs = express_many([(program, degree)], seed=seed, samples=samples)
    return outs[0]


def express_many(programs_with_degrees, seed=_EXPRESS_SEED, samples=None):
    """Interpolate several invariants against one shared sample set."""
    degrees = [d for _, d in programs_with_degrees]
    if max(degrees) > MAX_EXPRESS_DEGREE:
        raise RankDeficiency("degree %d beyond configured interpolation "
                             "bound %d" % (max(degrees), MAX_EXPRESS_DEGREE))
    bases = {d: monomial_basis(d) for d in set(degrees)}
    need = max(len(b) for b in bases.values()) + 10
    if samples is None:
        samples = _SampleSet(need, seed)
    values = []
    for program, _ in programs_with_degrees:
        values.append([program(f) for f in samples.forms])

    results = [None] * len(programs_with_degrees)
    for d in sorted(set(degrees)):
        basis = bases[d]
        nrows = len(basis) + 10
        idxs = [i for i, (_, dd) in enumerate(programs_with_degrees)
                if dd == d]

        def build(p, _basis=basis, _n=nrows, _idxs=idxs):
            jm = samples.jmatrix_mod(p)[:_n]
            A = _basis_columns_mod(jm, _basis, p)
            B = np.stack([_values_mod(values[i][:_n], p) for i in _idxs],
                         axis=1)
            return A, B

        def verify(cols, _basis=basis, _idxs=idxs, _d=d):
            rng = random.Random((seed << 8) ^ (0xF00D + _d))
            for _ in range(2):
                f = random_octic(rng)
                jv = shioda(f)
                for cj, i in zip(cols, _idxs):
                    poly = _poly_from_coeffs(_d, _basis, cj)
                    if poly.evaluate(QQ, jv) != Fraction(
                            programs_with_degrees[i][0](f)):
                        return False
            return True

        outcome = solve_rational(build, len(basis), len(idxs), verify=verify)
        for cj, i in zip(outcome.solution, idxs):
            poly = _poly_from_coeffs(d, basis, cj)
            results[i] = ExpressResult(poly, outcome.nullity, outcome.rank)
    return results


def _poly_from_coeffs(degree, basis, coeffs):
    terms = {ev: c for ev, c in zip(basis, coeffs) if c}
    return JPolynomial(degree, terms)


# ---------------------------------------------------------------------------
# the five syzygies


class SyzygyCoefficients:
    """The coefficient blocks of the five relations among J8, J9, J10.

    R1: J8^2          + A6 J10 + A7 J9 + A8 J8 + A16 = 0
    R2: J8 J9         + B7 J10 + B8 J9 + B9 J8 + B17 = 0
    R3: J8 J10 + C0 J9^2 + C8 J10 + C9 J9 + C10 J8 + C18 = 0
    R4: J9 J10        + D9 J10 + D10 J9 + D11 J8 + D19 = 0
    R5: J10^2 + E0 J2 J9^2 + E10 J10 + E11 J9 + E12 J8 + E20 = 0

    Every block is a polynomial in J2..J7 alone; C0 and E0 are rational
    constants.
    """

    BLOCK_NAMES = [
        ("A6", 6), ("A7", 7), ("A8", 8), ("A16", 16),
        ("B7", 7), ("B8", 8), ("B9", 9), ("B17", 17),
        ("C0", 0), ("C8", 8), ("C9", 9), ("C10", 10), ("C18", 18),
        ("D9", 9), ("D10", 10), ("D11", 11), ("D19", 19),
        ("E0", 0), ("E10", 10), ("E11", 11), ("E12", 12), ("E20", 20),
    ]

    def __init__(self, blocks):
        self.blocks = dict(blocks)
        for name, d in self.BLOCK_NAMES:
            if name not in self.blocks:
                raise ValueError("missing syzygy block %s" % name)
            if self.blocks[name].degree != d and not self.blocks[name].is_zero():
                raise ValueError("block %s has degree %d, expected %d"
                                 % (name, self.blocks[name].degree, d))

    def __getitem__(self, name):
        return self.blocks[name]

    def evaluate_blocks(self, field, j27):
        """All blocks at a (j2...j7) prefix; returns a name -> value dict."""
        jt = tuple(j27) + (field.zero,) * 3
        return {name: poly.evaluate(field, jt)
                for name, poly in self.blocks.items()}

    def relations_residuals(self, field, jtuple):
        """The five relation values at a full 9-tuple (zero on real orbits)."""
        j8, j9, j10 = jtuple[6], jtuple[7], jtuple[8]
        v = self.evaluate_blocks(field, jtuple[:6])
        j2 = field(jtuple[0])
        return (
            j8 * j8 + v["A6"] * j10 + v["A7"] * j9 + v["A8"] * j8 + v["A16"],
            j8 * j9 + v["B7"] * j10 + v["B8"] * j9 + v["B9"] * j8 + v["B17"],
            j8 * j10 + v["C0"] * j9 * j9 + v["C8"] * j10 + v["C9"] * j9
            + v["C10"] * j8 + v["C18"],
            j9 * j10 + v["D9"] * j10 + v["D10"] * j9 + v["D11"] * j8
            + v["D19"],
            j10 * j10 + v["E0"] * j2 * j9 * j9 + v["E10"] * j10
            + v["E11"] * j9 + v["E12"] * j8 + v["E20"],
        )

    def to_named_list(self):
        return [(name, self.blocks[name]) for name, _ in self.BLOCK_NAMES]

    @classmethod
    def from_named_list(cls, named):
        return cls(dict(named))


_SYZYGY_ID = "syzygies-R1..R5"
_syzygies_cached = None


def derive_syzygies(force=False, seed=0x5E55):
    """Determine the five relation coefficient blocks by interpolation.

    Each relation is linear in its unknown block coefficients once the
    leading monomials are pinned (coefficient 1), so evaluating the ten
    invariants on enough random rational octics and requiring the relation
    to vanish yields an exactly solvable system with a unique solution.
    The result is cached on disk.
    """
    global _syzygies_cached
    if _syzygies_cached is not None and not force:
        return _syzygies_cached
    if not force:
        stored = store.read_artifact(_SYZYGY_ID)
        if stored is not None:
            _syzygies_cached = SyzygyCoefficients.from_named_list(stored)
            return _syzygies_cached

    # layout of each relation: (unknown blocks with their J8/J9/J10
    # multiplier index) and the known leading part
    # multiplier index: 0 -> 1, 1 -> J8, 2 -> J9, 3 -> J10, 4 -> J9^2,
    # 5 -> J2*J9^2
    relations = [
        ([("A6", 3), ("A7", 2), ("A8", 1), ("A16", 0)],
         lambda j: j[6] * j[6]),
        ([("B7", 3), ("B8", 2), ("B9", 1), ("B17", 0)],
         lambda j: j[6] * j[7]),
        ([("C0", 4), ("C8", 3), ("C9", 2), ("C10", 1), ("C18", 0)],
         lambda j: j[6] * j[8]),
        ([("D9", 3), ("D10", 2), ("D11", 1), ("D19", 0)],
         lambda j: j[7] * j[8]),
        ([("E0", 5), ("E10", 3), ("E11", 2), ("E12", 1), ("E20", 0)],
         lambda j: j[8] * j[8]),
    ]
    degree_of = dict(SyzygyCoefficients.BLOCK_NAMES)
    max_basis = max(len(monomial_basis(d, num_vars=6))
                    for _, d in SyzygyCoefficients.BLOCK_NAMES if d)
    samples = _SampleSet(max_basis * 3 + 40, seed)
    blocks = {}
    for spec, lead in relations:
        bases = {name: monomial_basis(degree_of[name], num_vars=6)
                 for name, _ in spec}
        ncols = sum(len(bases[name]) for name, _ in spec)
        nrows = ncols + 12

        def build(p, _spec=spec, _bases=bases, _lead=lead, _n=nrows):
            jm = samples.jmatrix_mod(p)[:_n]
            mults = {
                0: np.ones(_n, dtype=np.int64),
                1: jm[:, 6], 2: jm[:, 7], 3: jm[:, 8],
                4: jm[:, 7] * jm[:, 7] % p,
                5: jm[:, 0] * (jm[:, 7] * jm[:, 7] % p) % p,
            }
            cols = []
            for name, mi in _spec:
                block_cols = _basis_columns_mod(jm, _bases[name], p)
                cols.append(block_cols * mults[mi][:, None] % p)
            A = np.concatenate(cols, axis=1)
            lead_vals = [_lead(row) for row in
                         [[Fraction(v) for v in jv]
                          for jv in samples.jvals[:_n]]]
            B = (-_values_mod(lead_vals, p)) % p
            return A, B.reshape(-1, 1)

        outcome = solve_rational(build, ncols, 1)
        if outcome.nullity:
            raise RankDeficiency("syzygy block solve was not unique")
        sol = outcome.solution[0]
        off = 0
        for name, _ in spec:
            basis = bases[name]
            blocks[name] = _poly_from_coeffs(degree_of[name], basis,
                                             sol[off:off + len(basis)])
            off += len(basis)

    syz = SyzygyCoefficients(blocks)
    # exact spot check on a fresh octic before caching
    rng = random.Random(seed ^ 0xA5A5)
    for _ in range(3):
        jv = shioda(random_octic(rng))
        if any(r != 0 for r in syz.relations_residuals(QQ, jv)):
            raise RankDeficiency("derived syzygies fail on a random octic")
    store.write_artifact(_SYZYGY_ID, syz.to_named_list())
    _syzygies_cached = syz
    return syz


# ---------------------------------------------------------------------------
# solving for J8, J9, J10


_j8_quintic_cached = None


def j8_quintic():
    """The monic degree-5 polynomial in X = J8 with coefficients in
    J2..J7, as a JPolyX.

    Assembled from the syzygy blocks: R1, R2, R3 and (J9 - B9) R2 - B7 R4
    are linear in (1, J9, J9^2, J10); a common solution with first
    coordinate 1 forces the 4x4 determinant to vanish, and that
    determinant is the quintic (normalized to leading coefficient 1).
    """
    global _j8_quintic_cached
    if _j8_quintic_cached is not None:
        return _j8_quintic_cached
    s = derive_syzygies()
    C = JPolynomial.constant
    X = JPolyX

    def const(name):
        return X.const(s[name])

    # rows: coefficients of (1, J9, J9^2, J10)
    zero = X.const(JPolynomial.zero())
    row1 = [X([s["A16"], s["A8"], C(1)]), const("A7"), zero, const("A6")]
    row2 = [X([s["B17"], s["B9"]]), X.x_plus(s["B8"]), zero, const("B7")]
    row3 = [X([s["C18"], s["C10"]]), const("C9"), const("C0"),
            X.x_plus(s["C8"])]
    # (J9 - B9) R2 - B7 R4, expanded on (1, J9, J9^2, J10): the J9*J10
    # cross terms cancel and what is left is linear again
    row4 = [
        X([(s["B9"] * s["B17"]).scale(-1) - s["B7"] * s["D19"],
           (s["B9"] * s["B9"]).scale(-1) - s["B7"] * s["D11"]]),
        X.const(s["B17"] - s["B9"] * s["B8"] - s["B7"] * s["D10"]),
        X.x_plus(s["B8"]),
        X.const((s["B7"] * s["B9"]).scale(-1) - s["B7"] * s["D9"]),
    ]
    rows = [row1, row2, row3, row4]
    det = _det4_jpolyx(rows)
    lead = det.coeffs[-1]
    if len(det.coeffs) != 6 or lead.degree != 0:
        raise RankDeficiency("J8 elimination did not produce a quintic")
    lead_c = lead.terms.get((0,) * 9, Fraction(0))
    quintic = JPolyX([c.scale(Fraction(1) / lead_c) for c in det.coeffs])
    _j8_quintic_cached = quintic
    return quintic


def _det4_jpolyx(rows):
    from itertools import permutations
    total = JPolyX([])
    for perm in permutations(range(4)):
        sign = 1
        seen = list(perm)
        # parity via inversion count
        inv = sum(1 for i in range(4) for j in range(i + 1, 4)
                  if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        term = rows[0][perm[0]]
        for i in range(1, 4):
            term = term * rows[i][perm[i]]
        total = total + term.scale(sign)
    return total


def j8_candidates(field, j27):
    """Values of J8 consistent with the prefix (j2, ..., j7): the roots in
    the base field of the quintic specialized at the prefix."""
    quintic = j8_quintic()
    jt = tuple(field(v) for v in j27) + (field.zero,) * 3
    coeffs = [c.evaluate(field, jt) for c in quintic.coeffs]
    if all(not c for c in coeffs):
        raise IdenticallyZeroQuintic("quintic vanished identically")
    if field.characteristic == 0:
        rts = rational_roots(coeffs)
    elif isinstance(field, PrimeField) and field.p <= 1000:
        rts = [(x, 1) for x in field.elements()
               if not _eval_poly(field, coeffs, x)]
    else:
        rts = field_roots(field, coeffs)
    return [r for r, _ in rts]


def _eval_poly(field, coeffs, x):
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def solve_j9_j10(field, j28):
    """All (J9, J10) pairs completing a (j2, ..., j8) prefix.

    Generic case: delta = A6 J8 + A6 B8 - A7 B7 is nonzero and the first
    two relations give the unique candidate, verified on all five.  When
    delta vanishes over a finite field, all q^2 pairs are scanned; over an
    infinite field that situation is reported as Unresolved.
    """
    s = derive_syzygies()
    j28 = [field(v) for v in j28]
    j8 = j28[6]
    v = s.evaluate_blocks(field, j28[:6])
    delta = v["A6"] * j8 + v["A6"] * v["B8"] - v["A7"] * v["B7"]
    if delta:
        inv = field.one / delta
        j9 = (v["B7"] * j8 * j8 - v["A6"] * v["B9"] * j8 - v["A6"] * v["B17"]
              + v["B7"] * v["A8"] * j8 + v["A16"] * v["B7"]) * inv
        j10 = -(j8 ** 3 + j8 * j8 * v["B8"] - v["A7"] * v["B9"] * j8
                - v["A7"] * v["B17"] + v["A8"] * j8 * j8
                + v["A8"] * j8 * v["B8"] + v["A16"] * j8
                + v["A16"] * v["B8"]) * inv
        full = tuple(j28) + (j9, j10)
        if any(r for r in s.relations_residuals(field, full)):
            return []
        return [(j9, j10)]
    if isinstance(field, PrimeField):
        if field.p > 1 << 16:
            raise Unresolved("delta = 0 and the field is too large to scan")
        out = []
        for a in field.elements():
            for b in field.elements():
                full = tuple(j28) + (a, b)
                if not any(s.relations_residuals(field, full)):
                    out.append((a, b))
        return out
    if isinstance(field, ExtField):
        if field.order > 1 << 16:
            raise Unresolved("delta = 0 and the field is too large to scan")
        out = []
        for a in field.elements():
            for b in field.elements():
                full = tuple(j28) + (a, b)
                if not any(s.relations_residuals(field, full)):
                    out.append((a, b))
        return out
    raise Unresolved("delta = 0 over an infinite field")
