"""Full census of genus-3 hyperelliptic curves over F_p: enumeration of
all moduli points, per-stratum counting against the closed formulas, model
reconstruction, and Galois descent of models to the prime field.

Expected counts over F_p (p >= 11): one class per dimension-0 stratum,
p - 3 per dimension-1 stratum, p^2 - 2p + 2 for each of the two
dimension-2 strata, p^3 - 2p^2 + 3 for the Klein-four stratum and
p^5 - p^3 + p - 2 generic classes; the grand total is p^5.  The two
largest formulas are flagged, not hard-failed, on mismatch; the total is a
hard failure.
"""

import random
import time

import numpy as np

from . import census_fast
from .covariants import shioda
from .errors import (
    CountMismatch, ExhaustedCandidates, MultipleRoot, NotRationalClass,
)
from .fields import ExtField, PrimeField, norm_solve
from .forms import (
    BinaryForm, Gl2Matrix, disc_resultant, embed_field, gl2_act,
    roots_in_splitting_field,
)
from .strata import detect_group, reconstruct_stratum
from .wps import SHIODA_WEIGHTS, WeightedPoint, wps_equal, wps_normalize


def expected_counts(p):
    return {
        "C2xS4": 1, "V8": 1, "U6": 1, "C14": 1,
        "C2xD8": p - 3, "D12": p - 3, "C2xC4": p - 3,
        "C2p3": p * p - 2 * p + 2, "C4": p * p - 2 * p + 2,
        "D4": p ** 3 - 2 * p ** 2 + 3,
        "C2": p ** 5 - p ** 3 + p - 2,
    }

#: formulas the source labels as unproven; mismatches flag, not fail
UNPROVEN = ("D4", "C2")


# ---------------------------------------------------------------------------
# explicit isomorphisms and descent


def _triple_matrix(field, p1, p2, p3):
    """Matrix sending p1, p2, p3 to (1:0), (0:1), (1:1) projectively."""
    alpha = p1[1] * p3[0] - p1[0] * p3[1]
    beta = p2[1] * p3[0] - p2[0] * p3[1]
    return Gl2Matrix(field,
                     alpha * p2[1], -(alpha * p2[0]),
                     beta * p1[1], -(beta * p1[0]))


def _proportional(f, g):
    """Scalar c with f = c * g, or None."""
    c = None
    for a, b in zip(f.coeffs, g.coeffs):
        if bool(a) != bool(b):
            return None
        if b:
            r = a / b
            if c is None:
                c = r
            elif r != c:
                return None
    return c


def find_isomorphism(f, g, all_candidates=False):
    """(M, e) with gl2_act(M, f) = e * g, via root-triple matching over
    the splitting field; None when the forms are not equivalent.

    With all_candidates, the full list of verified pairs is returned (the
    candidates differ by automorphisms of f).
    """
    ext_f, roots_f = roots_in_splitting_field(f)
    ext_g, roots_g = roots_in_splitting_field(g)
    if any(m > 1 for _, m in roots_f) or any(m > 1 for _, m in roots_g):
        raise MultipleRoot("isomorphism search needs simple roots")
    # move everything into one field
    kf = ext_f.k if isinstance(ext_f, ExtField) else 1
    kg = ext_g.k if isinstance(ext_g, ExtField) else 1
    kk = kf * kg // _gcd(kf, kg)
    if kk == 1:
        big = f.field if not isinstance(f.field, ExtField) else ext_f
    else:
        big = ExtField(f.field.characteristic, kk)
    emb_f = embed_field(ext_f, big) if isinstance(ext_f, ExtField) \
        else (lambda a: big(a.value))
    emb_g = embed_field(ext_g, big) if isinstance(ext_g, ExtField) \
        else (lambda a: big(a.value))
    rf = [(emb_f(x), emb_f(z)) for (x, z), _ in roots_f]
    rg = [(emb_g(x), emb_g(z)) for (x, z), _ in roots_g]
    fb = f.to_field(big, _lift_map(f.field, big))
    gb = g.to_field(big, _lift_map(g.field, big))
    return _isomorphisms_from_roots(big, fb, gb, rf, rg, all_candidates)


def _isomorphisms_from_roots(big, fb, gb, rf, rg, all_candidates):
    """Root-matching search.  A Mobius map carrying all roots of g onto
    roots of f makes f(Mx) and g share their (simple) root divisor, hence
    be proportional; the scalar is read off at one non-root point."""
    base_m = _triple_matrix(big, rf[0], rf[1], rf[2]).inverse()
    root_set = {(_elt_key(x), _elt_key(z)) for x, z in _scaled_points(rf)}
    found = []
    seen = set()
    from itertools import permutations
    for s_tuple in permutations(range(len(rg)), 3):
        s1, s2, s3 = (rg[i] for i in s_tuple)
        m2 = _triple_matrix(big, s1, s2, s3)
        if not m2.det():
            continue
        mat = base_m * m2
        canon = _canonical_matrix(mat)
        if canon in seen:
            continue
        seen.add(canon)
        if not _maps_roots(mat, rg, root_set):
            continue
        e = _scalar_at_point(big, fb, gb, mat)
        if e is None:
            continue
        found.append((mat, e))
        if not all_candidates:
            return found[0]
    if all_candidates:
        return found
    return None


def _scalar_at_point(big, fb, gb, mat):
    """e with f(M x0) = e g(x0) at a point avoiding the roots, plus a
    consistency check at a second point."""
    e = None
    checked = 0
    x = big.one
    z = big.one
    while checked < 2:
        gv = gb.evaluate(x, z)
        if gv:
            ix = mat.a * x + mat.b * z
            iz = mat.c * x + mat.d * z
            fv = fb.evaluate(ix, iz)
            if not fv:
                return None
            r = fv / gv
            if e is None:
                e = r
            elif e != r:
                return None
            checked += 1
        x = x + big.one
    return e


def _elt_key(x):
    return x.coeffs if hasattr(x, "coeffs") else x.value


def _scaled_points(points):
    """Projective canonical scaling: last nonzero coordinate = 1."""
    out = []
    for x, z in points:
        if z:
            out.append((x / z, z / z))
        else:
            out.append((x / x, z * 0))
    return out


def _maps_roots(mat, sources, target_set):
    for x, z in sources:
        ix = mat.a * x + mat.b * z
        iz = mat.c * x + mat.d * z
        if iz:
            key = (_elt_key(ix / iz), _elt_key(iz / iz))
        else:
            key = (_elt_key(ix / ix), _elt_key(iz * 0))
        if key not in target_set:
            return False
    return True


def _canonical_matrix(mat):
    for entry in (mat.a, mat.b, mat.c, mat.d):
        if entry:
            inv = entry.field.one / entry
            m2 = mat.scale(inv)
            return (m2.a.coeffs if hasattr(m2.a, "coeffs") else m2.a.value,
                    m2.b.coeffs if hasattr(m2.b, "coeffs") else m2.b.value,
                    m2.c.coeffs if hasattr(m2.c, "coeffs") else m2.c.value,
                    m2.d.coeffs if hasattr(m2.d, "coeffs") else m2.d.value)
    raise ValueError("zero matrix")


def _lift_map(small, big):
    if small is big:
        return big
    if isinstance(small, PrimeField):
        return lambda a: big(a.value)
    return embed_field(small, big)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _frobenius_form(f, times=1):
    p = f.field.characteristic
    return BinaryForm(f.field, f.degree,
                      [c ** (p ** times) for c in f.coeffs])


def _frobenius_matrix(m, times=1):
    p = m.field.characteristic
    return m.apply_entrywise(lambda x: x ** (p ** times))


def descend(f, base, seed=0x0DE5CE17):
    """A base-field model of an octic defined over an extension, given
    that its invariant class is rational over the base prime field.

    Finds a Frobenius twisting matrix among the root-matching candidates
    whose twisted norm is scalar, rescales it by a norm preimage, averages
    a random matrix through the cocycle until invertible, and normalizes
    the transported form to base coefficients.
    """
    if not isinstance(base, PrimeField):
        raise NotRationalClass("descent targets the prime field")
    p = base.p
    if isinstance(f.field, PrimeField):
        return f
    # the class must be rational: normalized invariants in the base field
    jt = shioda(f)
    norm_pt = wps_normalize(WeightedPoint(f.field, SHIODA_WEIGHTS, jt))
    for c in norm_pt.coords:
        if c and not _in_prime_field(c):
            raise NotRationalClass("invariant class is not rational")

    ext_f, roots_f = roots_in_splitting_field(f)
    if any(mlt > 1 for _, mlt in roots_f):
        raise MultipleRoot("descent needs simple roots")
    big = ext_f if isinstance(ext_f, ExtField) else f.field
    rf = [(x, z) for (x, z), _ in roots_f]
    # the Frobenius image of f has the Frobenius images of the roots
    rg = [(x ** p, z ** p) for x, z in rf]
    fb = f.to_field(big, _lift_map(f.field, big))
    gb = _frobenius_form(fb)
    candidates = _isomorphisms_from_roots(big, fb, gb, rf, rg, True)
    if not candidates:
        raise ExhaustedCandidates("no Frobenius twisting candidate")
    m = big.k
    rng = random.Random(seed)
    for mat, _e in candidates:
        # twisted norm C_m = M * M^sigma * ... * M^{sigma^{m-1}}
        tw = mat
        cur = mat
        for i in range(1, m):
            cur = _frobenius_matrix(cur)
            tw = tw * cur
        if tw.b or tw.c or tw.a != tw.d or not tw.a:
            continue
        lam = tw.a
        if not _in_prime_field(lam):
            continue
        lam_p = base(_prime_value(lam))
        a = norm_solve(big, lam_p)
        mprime = mat.scale(big.one / a)
        # average a random matrix through the cocycle until invertible
        for _ in range(64):
            pmat = Gl2Matrix(big, *[_random_elt(big, rng) for _ in range(4)])
            avg = pmat
            cof = mprime
            cur = pmat
            for i in range(1, m):
                cur = _frobenius_matrix(cur)
                avg = avg + cof * cur
                cof = cof * _frobenius_matrix(mprime, i)
            if avg.det():
                g0 = gl2_act(avg, fb)
                lead = next(c for c in g0.coeffs if c)
                g = g0.scale(big.one / lead)
                if all(_in_prime_field(c) or not c for c in g.coeffs):
                    out = BinaryForm(base, 8,
                                     [_prime_value(c) for c in g.coeffs])
                    if disc_resultant(out):
                        return out
    raise ExhaustedCandidates("descent failed for every candidate")


def _in_prime_field(x):
    if hasattr(x, "coeffs"):
        return not any(x.coeffs[1:])
    return True


def _prime_value(x):
    if hasattr(x, "coeffs"):
        return int(x.coeffs[0])
    return int(x.value)


def _random_elt(field, rng):
    return field([rng.randrange(field.p) for _ in range(field.k)])


# ---------------------------------------------------------------------------
# the census driver


class CensusReport:
    def __init__(self, p, counts, total, flags, elapsed, models=None):
        self.p = p
        self.counts = counts
        self.total = total
        self.flags = flags
        self.elapsed = elapsed
        self.models = models

    def lines(self):
        out = ["p=%d total=%d elapsed=%.1fs" % (self.p, self.total,
                                                self.elapsed)]
        for name in census_fast.strata_labels():
            out.append("%s,%d" % (name, self.counts.get(name, 0)))
        for flag in self.flags:
            out.append("flag: %s" % flag)
        if self.models is not None:
            for rec in self.models:
                out.append("%s; %s; %s; ext-degree %d" % rec)
        return out


def run_census(p, want_models=False, jobs=1, model_limit=None,
               on_progress=None, report_path=None):
    """Enumerate all moduli classes over F_p, classify and tally them, and
    (optionally) exhibit one F_p model per class.

    Raises CountMismatch when the grand total differs from p^5; stratum
    counts with unproven closed forms only flag.  With a report_path the
    per-class model lines are appended as they finish and already-recorded
    classes are skipped on resume.
    """
    t0 = time.time()
    field = PrimeField(p)
    rows = census_fast.moduli_rows(field, filter_singular=True,
                                   on_progress=on_progress)
    labels = census_fast.classify_rows(field, rows)
    names = census_fast.strata_labels()
    counts = {}
    for k, name in enumerate(names):
        counts[name] = int((labels == k).sum())
    total = int(rows.shape[0])

    expected = expected_counts(p)
    flags = []
    if total != p ** 5:
        raise CountMismatch("census total %d != %d = p^5" % (total, p ** 5))
    for name, want in expected.items():
        got = counts.get(name, 0)
        if got != want:
            msg = "stratum %s count %d != expected %d" % (name, got, want)
            if name in UNPROVEN:
                flags.append(msg)
            else:
                raise CountMismatch(msg)

    models = None
    if want_models:
        picked = list(range(total)) if model_limit is None else \
            list(_spread_indices(total, model_limit))
        done = _read_checkpoint(report_path)
        work = []
        models = []
        for i in picked:
            key = ",".join(str(int(v)) for v in rows[i])
            if key in done:
                models.append(done[key])
            else:
                work.append((p, tuple(int(v) for v in rows[i]),
                             names[int(labels[i])]))
        if jobs > 1 and len(work) > 1:
            import multiprocessing
            with multiprocessing.Pool(jobs) as pool:
                for rec in pool.imap(_model_worker, work, chunksize=16):
                    models.append(rec)
                    _append_checkpoint(report_path, rec)
        else:
            for item in work:
                rec = _model_worker(item)
                models.append(rec)
                _append_checkpoint(report_path, rec)
    return CensusReport(p, counts, total, flags, time.time() - t0, models)


def _model_worker(item):
    p, row, stratum = item
    field = PrimeField(p)
    jt = [field(v) for v in row]
    model, extdeg = class_model(field, jt, stratum)
    return (",".join(str(v) for v in row), stratum,
            ",".join(_coeff_str(c) for c in model.coeffs), extdeg)


def _read_checkpoint(path):
    import os
    done = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                parts = line.rstrip("\n").split("; ")
                if len(parts) == 4:
                    done[parts[0]] = (parts[0], parts[1], parts[2],
                                      int(parts[3].split()[-1]))
    return done


def _append_checkpoint(path, rec):
    if path:
        with open(path, "a") as fh:
            fh.write("%s; %s; %s; ext-degree %d\n" % rec)


def _coeff_str(c):
    return str(c.value if hasattr(c, "value") else c)


def _spread_indices(total, limit):
    if limit >= total:
        return range(total)
    step = max(1, total // limit)
    return range(0, total, step)[:limit]


def class_model(field, jt, stratum=None):
    """One F_p model for a moduli class, with the extension degree the
    closed-form reconstruction passed through before descent."""
    if stratum is None:
        stratum = detect_group(field, jt)
    model = reconstruct_stratum(stratum, field, jt)
    extdeg = model.field.k if isinstance(model.field, ExtField) else 1
    if extdeg > 1:
        model = descend(model, field)
    jv = shioda(model)
    if not wps_equal(WeightedPoint(field, SHIODA_WEIGHTS, jv),
                     WeightedPoint(field, SHIODA_WEIGHTS, jt)):
        raise CountMismatch("reconstructed model invariants differ")
    return model, extdeg
