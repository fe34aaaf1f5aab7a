import random
from fractions import Fraction

import pytest

from octicmoduli.covariants import random_octic, shioda
from octicmoduli.errors import SingularLocus
from octicmoduli.fields import PrimeField, QQ
from octicmoduli.forms import BinaryForm, disc_resultant
from octicmoduli.strata import (
    ALL_STRATA, STRATA_ORDER, c4_determinants, detect_group,
    reconstruct_stratum, stratum_residuals, stratum_systems,
)
from octicmoduli.wps import SHIODA_WEIGHTS, WeightedPoint, wps_equal

from conftest import lifted_jtuple, smooth_normal_model


def roundtrip_ok(field, jtuple, stratum):
    model = reconstruct_stratum(stratum, field, jtuple)
    wf = model.field
    jm = shioda(model)
    lj = lifted_jtuple(wf, jtuple) if wf is not field else list(jtuple)
    return wps_equal(WeightedPoint(wf, SHIODA_WEIGHTS, jm),
                     WeightedPoint(wf, SHIODA_WEIGHTS, lj))


def test_stratum_residual_examples(F11):
    f = BinaryForm(QQ, 8, [1, 0, 0, 0, 14, 0, 0, 0, 1])
    res = stratum_residuals(QQ, shioda(f))
    assert all(v == 0 for v in res["C2xS4"])

    v8 = BinaryForm(QQ, 8, [-1, 0, 0, 0, 0, 0, 0, 0, 1])
    jv = shioda(v8)
    assert all(v == 0 for v in res_for(jv, "V8"))
    assert jv[2] * 6 == jv[0] ** 2
    assert jv[4] * 36 == -jv[0] ** 3
    assert jv[6] * 420 == -jv[0] ** 4
    assert jv[8] * 2520 == jv[0] ** 5

    rng = random.Random(12)
    for _ in range(4):
        f = random_octic(rng)
        res = stratum_residuals(QQ, shioda(f))
        for name, vec in res.items():
            assert any(v != 0 for v in vec), name


def res_for(jtuple, name):
    return stratum_residuals(QQ, jtuple)[name]


def test_detect_group_examples():
    u6 = BinaryForm(QQ, 8, [0, -1, 0, 0, 0, 0, 0, 1, 0])   # x^7 - x
    assert detect_group(QQ, shioda(u6)) == "U6"
    c14 = BinaryForm(QQ, 8, [-1, 0, 0, 0, 0, 0, 0, 1, 0])  # x^7 - 1
    assert detect_group(QQ, shioda(c14)) == "C14"
    # parametrized family member with dihedral symmetry of order 12
    d12 = BinaryForm(QQ, 8, [0, Fraction(-48) - Fraction(8, 81), 0, 0,
                             Fraction(-7, 9), 0, 0, 1, 0])
    assert detect_group(QQ, shioda(d12)) == "D12"


def test_stratum_lattice_consistency():
    """Invariants of dimension-0 strata satisfy every ancestor system."""
    ancestors = {
        "C14": [],
        "U6": ["C2xC4", "D12", "C4", "D4"],
        "V8": ["C2xC4", "C2xD8", "C4", "D4"],
        "C2xS4": ["D12", "C2xD8", "C2p3", "D4"],
    }
    models = {
        "C14": [-1, 0, 0, 0, 0, 0, 0, 1, 0],
        "U6": [0, -1, 0, 0, 0, 0, 0, 1, 0],
        "V8": [-1, 0, 0, 0, 0, 0, 0, 0, 1],
        "C2xS4": [1, 0, 0, 0, 14, 0, 0, 0, 1],
    }
    for name, coeffs in models.items():
        jv = shioda(BinaryForm(QQ, 8, coeffs))
        res = stratum_residuals(QQ, jv)
        for up in ancestors[name]:
            assert all(v == 0 for v in res[up]), (name, up)


def test_scale_equivariance(F11):
    rng = random.Random(13)
    systems = stratum_systems()
    for _ in range(6):
        stratum = rng.choice(ALL_STRATA[:-1])
        f = smooth_normal_model(stratum, F11, rng)
        jv = list(shioda(f))
        lam = F11(rng.randrange(1, 11))
        scaled = [v * lam ** w for v, w in zip(jv, SHIODA_WEIGHTS)]
        for name in STRATA_ORDER:
            holds1 = all(not eq.evaluate(F11, jv) for eq in systems[name])
            holds2 = all(not eq.evaluate(F11, scaled)
                         for eq in systems[name])
            assert holds1 == holds2


@pytest.mark.parametrize("stratum", ALL_STRATA)
def test_roundtrip_per_stratum_f11(stratum, F11):
    rng = random.Random(hash(stratum) & 0xFFF)
    hits = 0
    attempts = 0
    while hits < 8 and attempts < 40:
        attempts += 1
        f = smooth_normal_model(stratum, F11, rng)
        jv = shioda(f)
        det = detect_group(F11, jv)
        if det != stratum:
            # degenerate parameters land in a larger group; it must sit
            # above in the lattice, i.e. be detected earlier
            assert ALL_STRATA.index(det) < ALL_STRATA.index(stratum)
            continue
        assert roundtrip_ok(F11, jv, det)
        hits += 1
    assert hits >= 3


@pytest.mark.parametrize("stratum", ALL_STRATA)
def test_roundtrip_per_stratum_q(stratum):
    rng = random.Random(hash(stratum) & 0xFFFF)
    for _ in range(4):
        f = smooth_normal_model(stratum, QQ, rng, bound=5)
        jv = shioda(f)
        det = detect_group(QQ, jv)
        if det != stratum:
            assert ALL_STRATA.index(det) < ALL_STRATA.index(stratum)
            continue
        assert roundtrip_ok(QQ, jv, det)


def test_d4_nineteen_determinants():
    """All 19 determinants vanish exactly on Klein-four models; random
    octics keep at least one alive."""
    from octicmoduli.reconstruct import TRIPLES_19, r_polynomial
    rng = random.Random(14)
    for _ in range(10):
        f = smooth_normal_model("D4", QQ, rng)
        jv = shioda(f)
        for triple in TRIPLES_19:
            assert r_polynomial(triple).evaluate(QQ, jv) == 0
    for _ in range(10):
        f = random_octic(rng)
        jv = shioda(f)
        assert any(r_polynomial(t).evaluate(QQ, jv) != 0
                   for t in TRIPLES_19)


def test_c4_determinants_guarantee():
    rng = random.Random(15)
    hits = 0
    for _ in range(12):
        f = smooth_normal_model("C4", QQ, rng)
        jv = shioda(f)
        if detect_group(QQ, jv) != "C4":
            continue
        dets = c4_determinants(QQ, jv)
        assert any(v != 0 for v in dets)
        hits += 1
    assert hits >= 5


def test_c4_degenerate_table_row():
    # x (x^2 - 1)(x^4 + a x^2 + 1): the unit-constant row has a larger
    # automorphism group containing C2 x C4
    from conftest import octic_from_univariate, polymul
    rng = random.Random(16)
    for a in (2, 3, 5):
        f = octic_from_univariate(
            QQ, polymul(polymul([0, 1], [-1, 0, 1]), [1, 0, a, 0, 1]))
        if not disc_resultant(f):
            continue
        jv = shioda(f)
        det = detect_group(QQ, jv)
        assert det != "C4"
        assert all(v == 0 for v in stratum_residuals(QQ, jv)["C2xC4"])


def test_c4_mod47_exceptional_point():
    """At one special class in characteristic 47 exactly one of the five
    covering determinants survives."""
    F47 = PrimeField(47)
    t = [F47(v) for v in (1, 0, 1, 0, 3, 0, 43, 0, 18)]
    from octicmoduli.reconstruct import TRIPLES_C4, r_polynomial
    vals = [r_polynomial(tr).evaluate(F47, t) for tr in TRIPLES_C4]
    nonzero = [i for i, v in enumerate(vals) if v]
    assert nonzero == [1]       # only the primed degree-7 triple
    assert detect_group(F47, t) == "C4"


def test_c2xc4_singular_locus():
    # 147 j4 = 2 j2^2 and 3087 j6 = 2 j2^3 admits no smooth curve
    from conftest import octic_from_univariate, polymul
    f = octic_from_univariate(
        QQ, polymul(polymul(polymul([0, 1], [-1, 1]), [1, 1]),
                    polymul([1, 0, 1], [1, 0, 1])))
    assert disc_resultant(f) == 0
    jv = shioda(f)
    assert jv[2] * 147 == jv[0] ** 2 * 2
    assert jv[4] * 3087 == jv[0] ** 3 * 2
    with pytest.raises(SingularLocus):
        reconstruct_stratum("C2xC4", QQ, jv)


def test_d4_appendix_count_and_degrees():
    systems = stratum_systems()
    degs = sorted(eq.degree for eq in systems["D4"])
    assert len(degs) == 24
    assert degs[0] == 16 and degs[-1] == 24
