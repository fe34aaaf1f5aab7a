"""Vectorized moduli enumeration over F_p.

This is the throughput engine behind moduli_enumerate and the census: the
same algorithm as the pure-field reference implementation, executed on
numpy arrays of least residues.  Discrete logarithms to a fixed primitive
root turn the weighted-projective constraints into affine arithmetic
modulo p - 1.  Everything stays int64; products of two residues never
exceed 2^60 for the census-scale primes accepted here.
"""

from itertools import combinations
from math import gcd

import numpy as np

from .fields import PrimeField, ext_gcd_multi
from .jpoly import WEIGHTS

MAX_FAST_PRIME = 1 << 20


class _ModCtx:
    """Tables for F_p arithmetic on arrays."""

    def __init__(self, p):
        self.p = p
        self.g = _primitive_root(p)
        pw = np.ones(p - 1, dtype=np.int64)
        for i in range(1, p - 1):
            pw[i] = pw[i - 1] * self.g % p
        self.POW = pw
        log = np.zeros(p, dtype=np.int64)
        log[pw] = np.arange(p - 1)
        self.LOG = log

    def inv(self, arr):
        """Vector inverse of nonzero residues."""
        return self.POW[(-self.LOG[arr]) % (self.p - 1)]


def _primitive_root(p):
    from .fields import _prime_factors
    fac = sorted(set(_prime_factors(p - 1)))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ValueError("no primitive root")


def _eval_jpoly_rows(poly, rows, p, cache={}):
    """Evaluate a JPolynomial on an (N, 9) residue matrix; (N,) output."""
    key = (id(poly), p)
    if key not in cache:
        cache[key] = poly.arrays_mod(p)
    coeffs, exps = cache[key]
    n = rows.shape[0]
    maxe = exps.max(axis=0) if len(coeffs) else np.zeros(9, dtype=np.int64)
    pows = []
    for v in range(9):
        tbl = np.ones((int(maxe[v]) + 1, n), dtype=np.int64)
        for e in range(1, int(maxe[v]) + 1):
            tbl[e] = tbl[e - 1] * rows[:, v] % p
        pows.append(tbl)
    acc = np.zeros(n, dtype=np.int64)
    for m in range(len(coeffs)):
        term = np.full(n, int(coeffs[m]), dtype=np.int64)
        for v in range(9):
            e = int(exps[m, v])
            if e:
                term = term * pows[v][e] % p
        acc = (acc + term) % p
    return acc


def _enumerate_prefix_reps(ctx):
    """Representatives of the weight (2..7) projective space: rows of
    residues (N, 6) plus the support gcd per row block."""
    p = ctx.p
    order = p - 1
    blocks = []
    for size in range(1, 7):
        for supp in combinations(range(6), size):
            ws = [WEIGHTS[i] for i in supp]
            d, cs = ext_gcd_multi(ws)
            k = len(supp)
            if k == 1:
                rows_e = np.zeros((1, 1), dtype=np.int64)
            else:
                free = np.indices((order,) * (k - 1)).reshape(k - 1, -1).T
                rhs = (-(free * np.array([c % order for c in cs[:-1]],
                                         dtype=np.int64)).sum(axis=1)) % order
                c_last = cs[-1] % order
                g0 = gcd(c_last, order) if c_last else order
                if c_last == 0:
                    keep = rhs % order == 0
                    free = free[keep]
                    rows_e = np.concatenate(
                        [np.repeat(free, order, axis=0),
                         np.tile(np.arange(order, dtype=np.int64),
                                 len(free)).reshape(-1, 1)], axis=1)
                else:
                    keep = rhs % g0 == 0
                    free = free[keep]
                    rhs = rhs[keep]
                    sub = order // g0
                    inv = pow(c_last // g0, -1, sub) if sub > 1 else 0
                    base = (rhs // g0 * inv) % sub if sub > 1 else \
                        np.zeros(len(rhs), dtype=np.int64)
                    parts = [np.concatenate(
                        [free, ((base + t * sub) % order).reshape(-1, 1)],
                        axis=1) for t in range(g0)]
                    rows_e = np.concatenate(parts, axis=0) if parts else \
                        np.zeros((0, k), dtype=np.int64)
            vals = ctx.POW[rows_e % order]
            rows = np.zeros((len(vals), 6), dtype=np.int64)
            for col, i in enumerate(supp):
                rows[:, i] = vals[:, col]
            blocks.append((rows, d))
    return blocks


def _syzygy_arrays(p):
    from .covariants import derive_syzygies, j8_quintic
    syz = derive_syzygies()
    quintic = j8_quintic()
    return syz, quintic


def moduli_enumerate_fast(field, filter_singular=True, on_progress=None,
                          want_arrays=False):
    """Vectorized enumeration; yields WeightedPoint per class (or, with
    want_arrays, returns the (N, 9) array of canonical representatives)."""
    from .wps import SHIODA_WEIGHTS, WeightedPoint

    rows = moduli_rows(field, filter_singular, on_progress)
    if want_arrays:
        return rows
    def gen():
        for row in rows:
            yield WeightedPoint(field, SHIODA_WEIGHTS,
                                [field(int(v)) for v in row])
    return gen()


def moduli_rows(field, filter_singular=True, on_progress=None):
    """The canonical representative rows (N, 9) of every moduli point."""
    if not isinstance(field, PrimeField):
        raise TypeError("fast enumeration runs over prime fields")
    p = field.p
    if p > MAX_FAST_PRIME:
        raise ValueError("prime too large for the census engine")
    ctx = _ModCtx(p)
    syz, quintic = _syzygy_arrays(p)
    qc = [quintic.coeffs[i] for i in range(6)]

    out_rows = []
    blocks = _enumerate_prefix_reps(ctx)
    total_blocks = len(blocks)
    for b_idx, (rows6, delta) in enumerate(blocks):
        if on_progress:
            on_progress(b_idx, total_blocks)
        gamma = gcd(delta, p - 1)
        reps = []
        for t in range(gamma):
            pi = int(ctx.POW[t % (p - 1)])
            scaled = rows6.copy()
            for i in range(6):
                w = WEIGHTS[i]
                scaled[:, i] = scaled[:, i] * pow(pi, w // delta, p) % p
            reps.append(scaled)
        rows6x = np.concatenate(reps, axis=0)
        n = rows6x.shape[0]
        rows9 = np.zeros((n, 9), dtype=np.int64)
        rows9[:, :6] = rows6x

        cvals = [_eval_jpoly_rows(c, rows9, p) for c in qc]
        # block values needed for the (J9, J10) solve
        bl = {name: _eval_jpoly_rows(syz[name], rows9, p)
              for name in ("A6", "A7", "A8", "A16",
                           "B7", "B8", "B9", "B17")}
        pairs_rows = []
        pairs_j8 = []
        for x in range(p):
            acc = cvals[5].copy()
            for i in range(4, -1, -1):
                acc = (acc * x + cvals[i]) % p
            hit = np.nonzero(acc == 0)[0]
            if hit.size:
                pairs_rows.append(hit)
                pairs_j8.append(np.full(hit.size, x, dtype=np.int64))
        if not pairs_rows:
            continue
        idx = np.concatenate(pairs_rows)
        j8 = np.concatenate(pairs_j8)

        A6, A7, A8v, A16 = (bl["A6"][idx], bl["A7"][idx], bl["A8"][idx],
                            bl["A16"][idx])
        B7, B8, B9, B17 = (bl["B7"][idx], bl["B8"][idx], bl["B9"][idx],
                           bl["B17"][idx])
        delta_v = (A6 * j8 + A6 * B8 % p - A7 * B7 % p) % p

        gen_mask = delta_v != 0
        cand_rows = []
        if gen_mask.any():
            gi = np.nonzero(gen_mask)[0]
            dinv = ctx.inv(delta_v[gi])
            x = j8[gi]
            j9 = ((B7[gi] * x % p * x + (-A6[gi] * B9[gi]) % p * x
                   - A6[gi] * B17[gi] + B7[gi] * A8v[gi] % p * x
                   + A16[gi] * B7[gi]) % p) * dinv % p
            j10 = (-(x * x % p * x + x * x % p * B8[gi]
                     - A7[gi] * B9[gi] % p * x - A7[gi] * B17[gi]
                     + A8v[gi] * x % p * x + A8v[gi] * x % p * B8[gi]
                     + A16[gi] * x + A16[gi] * B8[gi])) % p * dinv % p
            full = np.zeros((gi.size, 9), dtype=np.int64)
            full[:, :6] = rows6x[idx[gi]]
            full[:, 6] = x
            full[:, 7] = j9
            full[:, 8] = j10
            ok = _relations_hold(syz, full, p)
            cand_rows.append(full[ok])
        # degenerate rows: scan all (j9, j10)
        deg_idx = np.nonzero(~gen_mask)[0]
        if deg_idx.size:
            base = np.zeros((deg_idx.size, 9), dtype=np.int64)
            base[:, :6] = rows6x[idx[deg_idx]]
            base[:, 6] = j8[deg_idx]
            grid = np.zeros((deg_idx.size * p * p, 9), dtype=np.int64)
            grid[:, :7] = np.repeat(base[:, :7], p * p, axis=0)
            j9j10 = np.indices((p, p)).reshape(2, -1).T
            grid[:, 7] = np.tile(j9j10[:, 0], deg_idx.size)
            grid[:, 8] = np.tile(j9j10[:, 1], deg_idx.size)
            ok = _relations_hold(syz, grid, p)
            cand_rows.append(grid[ok])
        if not cand_rows:
            continue
        allrows = np.concatenate(cand_rows, axis=0)
        nz = allrows.any(axis=1)
        out_rows.append(allrows[nz])

    if not out_rows:
        return np.zeros((0, 9), dtype=np.int64)
    rows9 = np.concatenate(out_rows, axis=0)
    rows9 = normalize_rows(ctx, rows9)
    rows9 = np.unique(rows9, axis=0)
    if filter_singular:
        global _DISC_POLY
        if _DISC_POLY is None:
            from . import store
            _DISC_POLY = store.read_data_polys("discriminant_j.jpoly")[0][1]
        disc = _eval_jpoly_rows(_DISC_POLY, rows9, p)
        rows9 = rows9[disc != 0]
    return rows9


_DISC_POLY = None


def normalize_rows(ctx, rows):
    """Vectorized canonical representatives (same convention as
    wps_normalize) for rows of weight (2..10) tuples."""
    p = ctx.p
    order = p - 1
    n = rows.shape[0]
    out = rows.copy()
    nonzero = rows != 0
    patterns = nonzero.dot(1 << np.arange(9, dtype=np.int64))
    for pat in np.unique(patterns):
        supp = [i for i in range(9) if (int(pat) >> i) & 1]
        sel = np.nonzero(patterns == pat)[0]
        d, cs = ext_gcd_multi([WEIGHTS[i] for i in supp])
        lam_log = np.zeros(sel.size, dtype=np.int64)
        for i, c in zip(supp, cs):
            lam_log = (lam_log + (c % order) * ctx.LOG[rows[sel, i]]) % order
        for i in supp:
            e = WEIGHTS[i] // d
            new_log = (ctx.LOG[rows[sel, i]] - e * lam_log) % order
            out[sel, i] = ctx.POW[new_log]
    return out


def classify_rows(field, rows):
    """Stratum label per row, by the detection cascade, fully vectorized.

    Returns an integer array indexing into strata_labels().
    """
    from .strata import STRATA_ORDER, stratum_systems
    p = field.p
    systems = stratum_systems()
    n = rows.shape[0]
    label = np.full(n, len(STRATA_ORDER), dtype=np.int64)   # default C2
    unassigned = np.ones(n, dtype=bool)
    for k, name in enumerate(STRATA_ORDER):
        if not unassigned.any():
            break
        holds = np.ones(n, dtype=bool)
        for eq in systems[name]:
            vals = _eval_jpoly_rows(eq, rows, p)
            holds &= vals == 0
            if not holds.any():
                break
        if name == "C14":
            holds &= rows[:, 5] != 0
        newly = holds & unassigned
        label[newly] = k
        unassigned &= ~newly
    return label


def strata_labels():
    from .strata import STRATA_ORDER
    return list(STRATA_ORDER) + ["C2"]


def _relations_hold(syz, rows, p):
    """Boolean mask: all five relations vanish on each row."""
    v = {name: _eval_jpoly_rows(poly, rows, p)
         for name, poly in syz.blocks.items()}
    j2 = rows[:, 0]
    j8, j9, j10 = rows[:, 6], rows[:, 7], rows[:, 8]
    r1 = (j8 * j8 + v["A6"] * j10 + v["A7"] * j9 + v["A8"] * j8
          + v["A16"]) % p
    r2 = (j8 * j9 + v["B7"] * j10 + v["B8"] * j9 + v["B9"] * j8
          + v["B17"]) % p
    r3 = (j8 * j10 + v["C0"] * j9 % p * j9 + v["C8"] * j10 + v["C9"] * j9
          + v["C10"] * j8 + v["C18"]) % p
    r4 = (j9 * j10 + v["D9"] * j10 + v["D10"] * j9 + v["D11"] * j8
          + v["D19"]) % p
    r5 = (j10 * j10 + v["E0"] * j2 % p * j9 % p * j9 + v["E10"] * j10
          + v["E11"] * j9 + v["E12"] * j8 + v["E20"]) % p
    return (r1 == 0) & (r2 == 0) & (r3 == 0) & (r4 == 0) & (r5 == 0)
