"""Automorphism strata of genus-3 hyperelliptic curves: detection from
invariants and per-stratum closed-form reconstruction.

Eleven possible automorphism groups stratify the moduli space.  Each
stratum away from the generic one carries a system of weighted-homogeneous
equations in J2..J10 (loaded from the packaged data files); detection
walks the systems from the smallest stratum up, and reconstruction inverts
the normal-model parametrizations, at worst over a bounded extension
(cubic for the three-involutions stratum, degree 8 for the Klein-four
one).
"""

from fractions import Fraction

from . import store, unipoly
from .covariants import shioda
from .errors import (
    GuardInconsistency, SingularLocus, Unresolved,
)
from .fields import ExtField, PrimeField, QQ, QuadExtQ, sqrt_opt
from .forms import BinaryForm, embed_field
from .wps import SHIODA_WEIGHTS, WeightedPoint, wps_equal

#: detection order: dimension 0 strata first, then up the lattice; a tuple
#: is classified by the first system it satisfies
STRATA_ORDER = ("C2xS4", "V8", "U6", "C14", "C2xD8", "D12", "C2xC4",
                "C2p3", "C4", "D4")

ALL_STRATA = STRATA_ORDER + ("C2",)

_systems_cache = None
_d4_model_eqs = None
_c2p3_cubic = None


def stratum_systems():
    """name -> list of JPolynomial equations (empty for C2)."""
    global _systems_cache
    if _systems_cache is None:
        by_name = {}
        for key, poly in store.read_data_polys("stratum_systems.txt"):
            name = key.split(".")[0]
            by_name.setdefault(name, []).append(poly)
        by_name["C2"] = []
        _systems_cache = by_name
    return _systems_cache


def _d4_equations():
    global _d4_model_eqs
    if _d4_model_eqs is None:
        eqs = {}
        for key, poly in store.read_data_polys("d4_model_equations.txt"):
            name, xpart = key.rsplit(".", 1)
            eqs.setdefault(name, {})[int(xpart[1:])] = poly
        _d4_model_eqs = eqs
    return _d4_model_eqs


def _c2p3_cubic_coeffs():
    global _c2p3_cubic
    if _c2p3_cubic is None:
        cubic = {}
        for key, poly in store.read_data_polys("c2p3_cubic.txt"):
            cubic[int(key.rsplit(".x", 1)[1])] = poly
        _c2p3_cubic = cubic
    return _c2p3_cubic


def stratum_residuals(field, jtuple):
    """Every stratum's equation system evaluated at the tuple."""
    jtuple = tuple(field(v) for v in jtuple)
    return {name: tuple(eq.evaluate(field, jtuple) for eq in eqs)
            for name, eqs in stratum_systems().items() if name != "C2"}


def stratum_holds(field, jtuple, name):
    jtuple = tuple(field(v) for v in jtuple)
    eqs = stratum_systems()[name]
    return all(not eq.evaluate(field, jtuple) for eq in eqs)


def detect_group(field, jtuple):
    """First stratum in the cascade whose system vanishes; C2 otherwise.

    For singular tuples the answer is the label of the matched system; the
    actual automorphism group of a singular orbit may be larger.
    """
    jtuple = tuple(field(v) for v in jtuple)
    for name in STRATA_ORDER:
        if name == "C14":
            # the vanishing pattern alone: j7 must be the only survivor
            if stratum_holds(field, jtuple, name) and jtuple[5]:
                return name
            continue
        if stratum_holds(field, jtuple, name):
            return name
    return "C2"


# ---------------------------------------------------------------------------
# square roots with bounded field extensions


class FieldContext:
    """A working field plus a bag of named values that follow it through
    extensions.  Each extension re-embeds every live value, so arithmetic
    can freely mix values created at different stages."""

    def __init__(self, field, values=None):
        self.field = field
        self.v = dict(values or {})

    def _grow(self, new_field, embed_one):
        self.v = {k: embed_one(x) for k, x in self.v.items()}
        self.field = new_field
        return embed_one

    def _extend_degree(self, factor_degree):
        f = self.field
        if isinstance(f, PrimeField):
            new = ExtField(f.p, factor_degree)
            return self._grow(new, lambda x: new(x.value))
        if isinstance(f, ExtField):
            new = ExtField(f.p, f.k * factor_degree)
            emb = embed_field(f, new)
            return self._grow(new, emb)
        raise Unresolved("cannot extend %r" % (f,))

    def sqrt(self, name):
        """Replace nothing; return sqrt of self.v[name], extending the
        working field when the value is not a square in it."""
        a = self.v[name]
        r = sqrt_opt(self.field, a)
        if r is not None:
            return r
        f = self.field
        if f is QQ:
            new = QuadExtQ(a)
            self._grow(new, lambda x: new(x))
            return new.gen()
        if isinstance(f, QuadExtQ):
            raise Unresolved("square root needs a degree-4 extension of Q")
        emb = self._extend_degree(2)
        r = sqrt_opt(self.field, emb(a))
        if r is None:
            raise Unresolved("no square root after a quadratic extension")
        return r

    def roots(self, coeffs):
        """Roots of a univariate polynomial over the working field,
        extending by the first irreducible factor when it has none;
        base-field roots are preferred."""
        field = self.field
        if field.characteristic == 0:
            if field is QQ:
                return [r for r, _ in unipoly.rational_roots(coeffs)]
            raise Unresolved("root search over %r unsupported" % (field,))
        facs = unipoly.factor(field, coeffs)
        lin = [-g[0] for g, _ in facs if unipoly.degree(g) == 1]
        if lin:
            return lin
        if not facs:
            return []
        g = facs[0][0]
        emb = self._extend_degree(unipoly.degree(g))
        gg = [emb(c) for c in g]
        return [r for r, _ in unipoly.roots(self.field, gg)]


# ---------------------------------------------------------------------------
# per-stratum reconstruction


def _even8(field, a8, a6, a4, a2, a0):
    return BinaryForm(field, 8, [a0, field.zero, a2, field.zero, a4,
                                 field.zero, a6, field.zero, a8])


def reconstruct_stratum(stratum, field, jtuple, _redispatch=True):
    """A model octic whose invariants are WPS-equal to the tuple, using the
    closed form of the stratum's lemma; may move to a bounded extension.

    Degenerate branch guards re-dispatch to the larger group exactly as
    the lemmas direct.
    """
    jt = tuple(field(v) for v in jtuple)
    j2, j3, j4, j5, j6, j7 = jt[0], jt[1], jt[2], jt[3], jt[4], jt[5]
    one, zero = field.one, field.zero

    if stratum == "C2xS4":
        return BinaryForm(field, 8, [1, 0, 0, 0, 14, 0, 0, 0, 1])
    if stratum == "V8":
        return BinaryForm(field, 8, [-1, 0, 0, 0, 0, 0, 0, 0, 1])
    if stratum == "U6":
        return BinaryForm(field, 8, [0, -1, 0, 0, 0, 0, 0, 1, 0])
    if stratum == "C14":
        return BinaryForm(field, 8, [-1, 0, 0, 0, 0, 0, 0, 1, 0])

    if stratum == "C2xD8":
        guard = j2 ** 3 - j3 * j3 * 30
        if guard:
            a4 = (j5 * j2 + j4 * j3 * 6) * 35 / (guard + guard)
        elif j4:
            a4 = j5 * 35 / (j4 * 3)
        else:
            if _redispatch:
                return reconstruct_stratum("C2xS4", field, jtuple)
            raise GuardInconsistency("both branch guards vanish")
        a0 = -a4 * a4 / field(140) + j2 / field(2)
        return _even8(field, one, zero, a4, zero, a0)

    if stratum == "D12":
        guard = j2 ** 3 - j3 * j3 * 30
        if guard:
            a4 = (j4 * j3 * 4 - j5 * j2) * 280 / (-guard)
        elif j4:
            a4 = j5 * 35 / (j4 * 3)
        else:
            if _redispatch:
                return reconstruct_stratum("C2xS4", field, jtuple)
            raise GuardInconsistency("both branch guards vanish")
        a1 = a4 * a4 * 2 / field(35) - j2 * 4
        return BinaryForm(field, 8, [0, a1, 0, 0, a4, 0, 0, 1, 0])

    if stratum == "C2xC4":
        g1 = j4 * 6 - j2 * j2
        g2 = j6 * 36 + j2 ** 3
        g3 = j4 * 96 - j2 * j2
        g4 = j4 * 147 - j2 * j2 * 2
        g5 = j6 * 3087 - j2 ** 3 * 2
        if not g1 and not g2:
            if _redispatch:
                return reconstruct_stratum("V8", field, jtuple)
            raise GuardInconsistency("V8 point inside the C2xC4 stratum")
        if not g3:
            if _redispatch:
                return reconstruct_stratum("U6", field, jtuple)
            raise GuardInconsistency("U6 point inside the C2xC4 stratum")
        if not g4 and not g5:
            raise SingularLocus("no smooth curve has these invariants")
        if not g1:
            a = field(Fraction(196, 3))
        elif not g4:
            a = field(-84)
        else:
            num = (j4 * j4 * 36288 - j4 * j2 * j2 * 3906 + j6 * j2 * 14400
                   + j2 ** 4 * 43) * 98
            a = num / (g3 * g4 * 9)
        a2_ = a * a
        return BinaryForm(field, 8,
                          [-16, 0, a * 8, 0, 0, 0, a2_ * 2, 0, a2_])

    if stratum == "C2p3":
        dd = (j6 * (-18) + j4 * j2 * 9 + j3 * j3 * 60 - j2 ** 3 * 2)
        if not dd:
            if _redispatch:
                return reconstruct_stratum("C2xD8", field, jtuple,
                                           _redispatch=True)
            raise GuardInconsistency("cubic denominator vanishes")
        cubic = _c2p3_cubic_coeffs()
        ctx = FieldContext(field, {("j", i): v for i, v in enumerate(jt)})
        ctx.v["dd"] = dd
        roots = ctx.roots([cubic[e].evaluate(field, jt) for e in range(4)])
        last_err = None
        for idx, _ in enumerate(roots):
            ctx.v["a4"] = roots[idx]
            wf = ctx.field
            a4 = ctx.v["a4"]
            lj2, lj3, lj4 = ctx.v[("j", 0)], ctx.v[("j", 1)], ctx.v[("j", 2)]
            lj5, lj6, lj7 = ctx.v[("j", 3)], ctx.v[("j", 4)], ctx.v[("j", 5)]
            nu_num = (lj6 * 18 - lj4 * lj2 * 9 - lj3 * lj3 * 60
                      + lj2 ** 3 * 2) * a4 \
                - lj7 * 810 + lj5 * lj2 * 270 - lj4 * lj3 * 810
            nu = nu_num / (ctx.v["dd"] * 10)
            a6 = nu * nu * (-28) - a4 * a4 / wf(5) + lj2 * 14
            if not a6:
                last_err = SingularLocus("vanishing sextic coefficient")
                continue
            a8 = nu * a6
            lam = wf.one / a6
            return BinaryForm(wf, 8,
                              [lam * lam * a8, wf.zero, lam * a6, wf.zero,
                               a4, wf.zero, a6, wf.zero, a8])
        raise last_err or SingularLocus("no usable cubic root")

    if stratum == "C4":
        from .reconstruct import TRIPLES_C4, reconstruct_generic
        return reconstruct_generic(field, jt, triple_order=TRIPLES_C4)

    if stratum == "D4":
        return _reconstruct_d4(field, jt)

    if stratum == "C2":
        from .reconstruct import reconstruct_generic
        return reconstruct_generic(field, jt)

    raise GuardInconsistency("unknown stratum %r" % (stratum,))


def c4_determinants(field, jtuple):
    """The five conic determinants that cover the C4 stratum."""
    from .reconstruct import TRIPLES_C4, r_polynomial
    jt = tuple(field(v) for v in jtuple)
    return tuple(r_polynomial(t).evaluate(field, jt) for t in TRIPLES_C4)


def _linear_solution(field, jt, names):
    """Solve the first usable c1*X + c0 = 0 from the named equations.

    Returns (value, "ok"), (None, "inconsistent") when some equation reads
    0 = c0 != 0 and none is solvable, or (None, "trivial") when all the
    equations vanish identically.
    """
    d4 = _d4_equations()
    saw_inconsistent = False
    for name in names:
        coeffs = {e: p.evaluate(field, jt) for e, p in d4[name].items()}
        c1 = coeffs.get(1, field.zero)
        c0 = coeffs.get(0, field.zero)
        if c1:
            return -c0 / c1, "ok"
        if c0:
            saw_inconsistent = True
    return None, ("inconsistent" if saw_inconsistent else "trivial")


def _reconstruct_d4(field, jt):
    d4 = _d4_equations()
    a4, status = _linear_solution(field, jt, ["A4_1", "A4_2"])
    if a4 is None:
        return _reconstruct_d4_singular(field, jt, status)

    # a0 from the first non-trivial pure quadratic c2 X^2 + c0 = 0
    a0sq = None
    saw_inconsistent = False
    for name in ("A0_1", "A0_2"):
        coeffs = {e: p.evaluate(field, jt) for e, p in d4[name].items()}
        c2 = coeffs.get(2, field.zero)
        c0 = coeffs.get(0, field.zero)
        if c2:
            a0sq = -c0 / c2
            break
        if c0:
            saw_inconsistent = True
    if a0sq is None:
        return _reconstruct_d4_singular(
            field, jt, "inconsistent" if saw_inconsistent else "trivial")

    ctx = FieldContext(field, {("j", i): v for i, v in enumerate(jt)})
    ctx.v["a4"] = a4
    ctx.v["a0sq"] = a0sq
    ctx.v["a0"] = ctx.sqrt("a0sq")

    pairs = []          # (a2 candidates construction)
    if ctx.v["a0"]:
        a0, a4v = ctx.v["a0"], ctx.v["a4"]
        j2l, j3l, j4l = ctx.v[("j", 0)], ctx.v[("j", 1)], ctx.v[("j", 2)]
        ctx.v["p4"] = a0 * 15750
        ctx.v["p2"] = (a0 * a0 * a4v * 105000 + a4v ** 3 * 510
                       - a4v * j2l * 23100 - j3l * 686000)
        p0 = (a0 ** 3 * a4v * a4v * 705600 - a0 ** 3 * j2l * 10804500
              + a0 * a4v ** 4 * 3024 - a0 * a4v * a4v * j2l * 244755
              - a0 * a4v * j3l * 1440600 + a0 * j4l * 15126300
              + a0 * j2l * j2l * 2881200)
        ctx.v["disc"] = ctx.v["p2"] * ctx.v["p2"] - ctx.v["p4"] * p0 * 4
        ctx.v["rdisc"] = ctx.sqrt("disc")
        for sgn, key in ((1, "y+"), (-1, "y-")):
            ctx.v[key] = (-ctx.v["p2"] + ctx.v["rdisc"] * sgn) \
                / (ctx.v["p4"] + ctx.v["p4"])
        for key in ("y+", "y-"):
            if ctx.v[key] or key == "y+":
                ctx.v["a2" + key] = ctx.sqrt(key)
                pairs.append("a2" + key)
    else:
        ctx.v["a2one"] = ctx.field.one
        pairs.append("a2one")

    candidate_keys = []
    for n, key in enumerate(pairs):
        ctx.v["cand%d+" % n] = ctx.v[key]
        ctx.v["cand%d-" % n] = -ctx.v[key]
        candidate_keys += ["cand%d+" % n, "cand%d-" % n]

    last = None
    for ck in candidate_keys:
        a2c = ctx.v[ck]
        a0c, a4c = ctx.v["a0"], ctx.v["a4"]
        lj = [ctx.v[("j", i)] for i in range(9)]
        if a2c:
            a6_keys = None
            a6s = [-(a0c * a0c * 140 + a4c * a4c - lj[0] * 70) / (a2c * 5)]
        else:
            if not a0c:
                continue
            ctx.v["a6sq"] = (a4c ** 3 * 24 - a4c * lj[0] * 2940
                             + lj[1] * 68600) / (a0c * 1575)
            r = ctx.sqrt("a6sq")
            a2c = ctx.v[ck]
            a0c, a4c = ctx.v["a0"], ctx.v["a4"]
            lj = [ctx.v[("j", i)] for i in range(9)]
            a6s = [r, -r]
        wf = ctx.field
        for a6 in a6s:
            model = _even8(wf, a0c, a6, a4c, a2c, a0c)
            if model.is_zero():
                continue
            jv = shioda(model)
            if not any(jv):
                continue
            last = model
            if wps_equal(WeightedPoint(wf, SHIODA_WEIGHTS, jv),
                         WeightedPoint(wf, SHIODA_WEIGHTS, lj)):
                return model
    if last is not None:
        return last
    return _reconstruct_d4_singular(field, jt, "exhausted")


def _reconstruct_d4_singular(field, jt, reason):
    """Fallback family a8 x^8 + a6 x^6 + a4 x^4 + a2 x^2 for tuples that
    defeat the even-model equations (multiple-root classes)."""
    d4 = _d4_equations()
    a4 = None
    for name in ("A4S_1", "A4S_2", "A4S_3"):
        coeffs = {e: p.evaluate(field, jt) for e, p in d4[name].items()}
        c1 = coeffs.get(1, field.zero)
        c0 = coeffs.get(0, field.zero)
        if c1:
            a4 = -c0 / c1
            break
    if a4 is None:
        a4 = field.zero
    a2 = field.one
    a6 = -(a4 * a4 - jt[0] * 70) / (a2 * 5)
    a8 = (-a4 ** 3 * 17 / field(525) + a4 * jt[0] * 22 / field(15)
          + jt[1] * 392 / field(9))
    return BinaryForm(field, 8, [field.zero, field.zero, a2, field.zero,
                                 a4, field.zero, a6, field.zero, a8])
