#!/usr/bin/env python3
"""Independent numpy reference runs that produce the golden files used by the
acceptance suite.

Everything here is evaluated directly from definitions (dense coefficient
arrays, explicit kernel tables, explicit window averages) and shares no code
with the C++ library.

    python3 tests/oracle/reference_runs.py --out tests/golden
"""
import argparse
import json
import math

import numpy as np


def grid_points(n):
    return -np.pi + 2.0 * np.pi * np.arange(n) / n


def l1(values):
    nx, ny = values.shape
    return float(np.abs(values).sum() * (2 * np.pi / nx) * (2 * np.pi / ny))


class Dense:
    """c[j, k] for |j| <= bj, |k| <= bk, zero outside."""

    def __init__(self, bj, bk, fn):
        self.bj, self.bk = bj, bk
        j = np.arange(-bj, bj + 1)
        k = np.arange(-bk, bk + 1)
        self.a = fn(j[:, None], k[None, :]).astype(complex)

    def get(self, j, k):
        if abs(j) > self.bj or abs(k) > self.bk:
            return 0.0
        return self.a[j + self.bj, k + self.bk]


def synth_exp(c, wj, wk, n):
    """sum_jk wj(j) wk(k) c_jk e^{i(jx+ky)} sampled on an n x n grid."""
    x = grid_points(n)
    j = np.arange(-c.bj, c.bj + 1)
    k = np.arange(-c.bk, c.bk + 1)
    coef = c.a * wj(j)[:, None] * wk(k)[None, :]
    bx = np.exp(1j * np.outer(j, x))
    by = np.exp(1j * np.outer(k, x))
    return bx.T @ coef @ by


def partial_w(m):
    return lambda j: (np.abs(j) <= m).astype(float)


def cesaro_w(m):
    return lambda j: np.where(np.abs(j) <= m, 1.0 - np.abs(j) / (m + 1.0), 0.0)


def vp_w(m, lm):
    def w(j):
        a = np.abs(j).astype(float)
        out = np.where(a <= m, 1.0, (lm + 1.0 - a) / (lm - m))
        return np.where(a <= lm, out, 0.0)
    return w


def half_kernel(sign, mag, x):
    """1/2 + sum_{t=1}^{mag} e^{i sign t x}."""
    if mag == 0:
        return np.full_like(x, 0.5, dtype=complex)
    t = np.arange(1, mag + 1)
    return 0.5 + np.exp(1j * sign * np.outer(t, x)).sum(axis=0)


def slots(lo, hi):
    out = []
    for mag in range(lo, hi + 1):
        out.append((1, mag))
        out.append((-1, mag))
    return out


def diff(c, p, q, sj, sk):
    s, j = sj
    t, k = sk
    total = 0.0
    for a in range(p + 1):
        for b in range(q + 1):
            total += ((-1) ** (a + b) * math.comb(p, a) * math.comb(q, b)
                      * c.get(s * (j + a), t * (k + b)))
    return total


def slot_sum(c, jr, kr, p, q, weight, n, cache):
    js = slots(*jr)
    ks = slots(*kr)
    if not js or not ks:
        return np.zeros((n, n), complex)
    x = grid_points(n)
    bx = np.array([cache.setdefault(sj, half_kernel(*sj, x)) for sj in js])
    by = np.array([cache.setdefault(sk, half_kernel(*sk, x)) for sk in ks])
    d = np.array([[weight(sj[1], sk[1]) * diff(c, p, q, sj, sk) for sk in ks] for sj in js])
    return bx.T @ d @ by


def r_components(c, m, n, lm, ln, npts):
    dm, dn = lm - m, ln - n
    u = lambda a: (lm - a) / dm
    v = lambda b: (ln - b) / dn
    cache = {}
    S = lambda jr, kr, p, q, w: slot_sum(c, jr, kr, p, q, w, npts, cache)
    r1 = (S((m, lm - 1), (n, ln - 1), 1, 1, lambda a, b: u(a) * v(b))
          + S((0, m - 1), (n, ln - 1), 1, 1, lambda a, b: v(b))
          + S((m, lm - 1), (0, n - 1), 1, 1, lambda a, b: u(a)))
    r2 = (S((0, m - 1), (n + 1, ln), 1, 0, lambda a, b: 1 / dn)
          + S((m + 1, lm), (0, n - 1), 0, 1, lambda a, b: 1 / dm)
          + S((m, lm - 1), (n + 1, ln), 1, 0, lambda a, b: u(a) / dn)
          + S((m + 1, lm), (n, ln - 1), 0, 1, lambda a, b: v(b) / dm))
    r3 = S((0, m - 1), (n, n), 1, 0, lambda a, b: 1.0)
    r4 = S((m, m), (0, n - 1), 0, 1, lambda a, b: 1.0)
    r5 = S((m + 1, lm), (n + 1, ln), 0, 0, lambda a, b: 1 / (dm * dn))
    r0 = S((m, m), (n, n), 0, 0, lambda a, b: 1.0)
    return [r0, r1, r2, r3, r4, r5]


def poisson(r, t):
    return (1 - r * r) / (1 - 2 * r * np.cos(t) + r * r)


def geometric(rx, ry, bj, bk):
    return Dense(bj, bk, lambda j, k: rx ** np.abs(j) * ry ** np.abs(k) + 0 * j * k)


def convergence_ladder(r, lam, ladder, npts):
    rows = []
    x = grid_points(npts)
    f = np.outer(poisson(r, x), poisson(r, x))
    for m in ladder:
        lm = math.floor(lam * m)
        c = geometric(r, r, lm + 1, lm + 1)
        s = synth_exp(c, partial_w(m), partial_w(m), npts)
        sig = synth_exp(c, cesaro_w(m), cesaro_w(m), npts)
        vp = synth_exp(c, vp_w(m, lm), vp_w(m, lm), npts)
        comps = r_components(c, m, m, lm, lm, npts)
        recon = comps[1] + comps[2] - comps[3] - comps[4] + comps[5] - comps[0]
        resid = float(np.abs(recon - (vp - s)).max() / max(np.abs(vp - s).max(), 1e-300))
        rows.append({
            "m": m, "n": m, "lambda": lam, "quad_n": npts,
            "norm_S_f": l1(s - f), "norm_sigma_f": l1(sig - f),
            "norm_V_f": l1(vp - f), "norm_V_S": l1(vp - s),
            "component_norms": [l1(g) for g in comps],
            "decomposition_relative_residual": resid,
        })
        print(f"  m={m:3d} S-f={rows[-1]['norm_S_f']:.6e} sigma-f={rows[-1]['norm_sigma_f']:.6e} "
              f"V-S={rows[-1]['norm_V_S']:.6e} resid={resid:.1e}")
    return rows


def e_norms(maxk, npts):
    x = grid_points(npts)
    out = {}
    for k in (1, 2, 8, 256, 512):
        if k > maxk:
            continue
        t = np.arange(0, k + 1)
        vals = np.exp(1j * np.outer(t, x)).sum(axis=0)
        out[str(k)] = float(np.abs(vals).sum() * 2 * np.pi / npts)
    return out


def log_weight(t):
    return math.log(max(abs(t), 2))


def condition_profiles(r, lambdas, nrange, trunc):
    c = geometric(r, r, trunc + 1, trunc + 1)
    mags = lambda lo, hi: slots(lo, hi)
    p31, p32 = [], []
    for kk in nrange:
        s31 = 0.0
        s32 = 0.0
        for sk in ((1, kk), (-1, kk)):
            for sj in mags(0, trunc):
                s31 += log_weight(sj[1]) * log_weight(kk) * abs(diff(c, 1, 0, sj, sk))
                s32 += log_weight(sj[1]) * log_weight(kk) * abs(diff(c, 0, 1, sk, sj))
        p31.append(s31)
        p32.append(s32)
    c33, c34 = {}, {}
    for lam in lambdas:
        v33, v34 = [], []
        for nn in nrange:
            ln = math.floor(lam * nn)
            a = 0.0
            b = 0.0
            for sk in mags(nn, ln):
                for sj in mags(0, trunc):
                    w = log_weight(sj[1]) * log_weight(sk[1])
                    a += w * abs(diff(c, 1, 1, sj, sk))
                    b += w * abs(diff(c, 1, 1, sk, sj))
            v33.append(a)
            v34.append(b)
        c33[str(lam)] = v33
        c34[str(lam)] = v34
    return {"C31": p31, "C32": p32, "C33": c33, "C34": c34}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/golden")
    ap.add_argument("--quad-n", type=int, default=2048)
    args = ap.parse_args()

    print("convergence ladder r=0.8 lambda=1.5")
    ladder = convergence_ladder(0.8, 1.5, [4, 8, 16, 32, 64], args.quad_n)
    print("decomposition ladder r=0.7 lambda=1.5")
    decomp = convergence_ladder(0.7, 1.5, [8, 16, 32], args.quad_n)
    kern = e_norms(512, 1 << 16)
    print("E norms", kern)
    nrange = [4, 8, 16, 32, 64]
    cond = condition_profiles(0.8, [1.25, 1.5, 2.0], nrange, 160)

    golden = {
        "generator": "tests/oracle/reference_runs.py",
        "quad_n": args.quad_n,
        "geometric_r08_lambda15": ladder,
        "geometric_r07_lambda15": decomp,
        "e_norms": kern,
        "conditions_geometric_r08": {"n_range": nrange, "truncation": 160, **cond},
    }
    with open(f"{args.out}/reference_runs.json", "w") as fh:
        json.dump(golden, fh, indent=2)
        fh.write("\n")


if __name__ == "__main__":
    main()
