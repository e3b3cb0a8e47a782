#!/usr/bin/env python3
"""Generate tables of nontrivial zeta-zero ordinates.

Strategy: vectorized Riemann-Siegel Z(t) scan (main sum + C0 correction)
to bracket sign changes, Brent refinement, and mpmath polishing for the
low range where the one-term remainder is weakest.  A theta-based count
audit catches close pairs the coarse scan might step over, and a random
sample is re-polished with mpmath.mp.siegelz to measure the actual
accuracy of the fast path.

Outputs:
  data/zeros_100k.txt   first 100000 ordinates, 12 decimals
  tests/data/zeros_30.txt  first 30 ordinates, 18 decimals (fixture)

Run from the repository root:  python3 scripts/gen_zeros.py
"""

import sys
import time
import numpy as np
from mpmath import mp, fp, mpf
from scipy.optimize import brentq

TARGET_COUNT = 100000
T_END = 74940.0          # a little past the 100000th zero (~74920.83)
SCAN_STEP = 0.03
MP_POLISH_COUNT = 2000   # polish this many lowest zeros with mp.siegelz
VALIDATE_SAMPLES = 250

TWO_PI = 2.0 * np.pi


def theta(t):
    """Riemann-Siegel theta, asymptotic series (longdouble)."""
    t = np.asarray(t, dtype=np.longdouble)
    lt = np.log(t / TWO_PI)
    return (t / 2.0 * lt - t / 2.0 - np.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3))


def _psi(p):
    """C0 correction factor; stable near the removable points p=1/4, 3/4."""
    p = np.asarray(p, dtype=np.longdouble)
    c = np.cos(TWO_PI * p)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.cos(TWO_PI * (p * p - p - 1.0 / 16.0)) / c
    h1 = p - 0.25
    alt1 = np.sin(TWO_PI * h1 * (h1 - 0.5)) / (-np.sin(TWO_PI * h1))
    h2 = p - 0.75
    alt2 = np.sin(TWO_PI * h2 * (h2 + 0.5)) / (np.sin(TWO_PI * h2))
    out = np.where(np.abs(h1) < 0.02, alt1, direct)
    out = np.where(np.abs(h2) < 0.02, alt2, out)
    return out


def rs_z_block(ts, N):
    """Z(t) for an array of t sharing the same main-sum length N."""
    ts = np.asarray(ts, dtype=np.longdouble)
    tau = np.sqrt(ts / TWO_PI)
    p = tau - N
    th = theta(ts)
    ns = np.arange(1, N + 1, dtype=np.longdouble)
    logns = np.log(ns)
    rsqrt = 1.0 / np.sqrt(ns)
    out = np.empty(len(ts), dtype=np.longdouble)
    chunk = max(1, 4_000_000 // max(N, 1))
    for i in range(0, len(ts), chunk):
        sl = slice(i, min(i + chunk, len(ts)))
        phase = th[sl, None] - ts[sl, None] * logns[None, :]
        out[sl] = 2.0 * (np.cos(phase) * rsqrt[None, :]).sum(axis=1)
    corr = (-1.0) ** (N - 1) * (ts / TWO_PI) ** (-0.25) * _psi(p)
    return np.asarray(out + corr, dtype=float)


def rs_z_scalar(t):
    N = int(np.floor(np.sqrt(t / TWO_PI)))
    return float(rs_z_block(np.array([t]), N)[0])


def scan(t_lo, t_hi, step):
    """Return brackets (a, b) with a sign change of Z in [t_lo, t_hi]."""
    brackets = []
    n_lo = max(1, int(np.floor(np.sqrt(t_lo / TWO_PI))))
    n_hi = int(np.floor(np.sqrt(t_hi / TWO_PI)))
    prev_t = None
    prev_z = None
    for N in range(n_lo, n_hi + 1):
        a = max(t_lo, TWO_PI * N * N)
        b = min(t_hi, TWO_PI * (N + 1) * (N + 1))
        if b <= a:
            continue
        ts = np.arange(a, b, step)
        if len(ts) == 0:
            continue
        zs = rs_z_block(ts, N)
        if prev_t is not None and ts[0] - prev_t < 2 * step:
            if prev_z * zs[0] < 0:
                brackets.append((prev_t, ts[0]))
        sgn = zs[:-1] * zs[1:]
        for i in np.nonzero(sgn < 0)[0]:
            brackets.append((ts[i], ts[i + 1]))
        for i in np.nonzero(zs == 0.0)[0]:
            brackets.append((ts[i] - step / 2, ts[i] + step / 2))
        prev_t, prev_z = ts[-1], zs[-1]
    return brackets


def refine(brackets):
    zs = []
    for (a, b) in brackets:
        try:
            r = brentq(rs_z_scalar, a, b, xtol=1e-10, maxiter=120)
        except ValueError:
            continue
        zs.append(r)
    return zs


def mp_secant(t0, steps=4):
    """A few secant steps on mp.siegelz starting from a double estimate."""
    a = mpf(t0) - mpf("1e-6")
    b = mpf(t0)
    fa = mp.siegelz(a)
    fb = mp.siegelz(b)
    for _ in range(steps):
        if fb == fa:
            break
        c = b - fb * (b - a) / (fb - fa)
        a, fa = b, fb
        b, fb = c, mp.siegelz(c)
    return b


def audit(zs):
    """theta-count drift: flag windows where zeros look missing/spurious."""
    t = np.array(zs)
    e = theta(t) / np.pi + 1.0 - np.arange(1, len(t) + 1)
    e = np.asarray(e, dtype=float)
    w = 11
    med = np.copy(e)
    half = w // 2
    for i in range(len(e)):
        lo, hi = max(0, i - half), min(len(e), i + half + 1)
        med[i] = np.median(e[lo:hi])
    bad = np.nonzero(np.abs(med) > 1.2)[0]
    regions = []
    for i in bad:
        lo = t[max(0, i - 4)] - 0.2
        hi = t[min(len(t) - 1, i + 4)] + 0.2
        if regions and lo <= regions[-1][1]:
            regions[-1] = (regions[-1][0], hi)
        else:
            regions.append((lo, hi))
    return regions


def main():
    mp.dps = 30
    t0 = time.time()

    # self-check of the Z formula against mpmath's multi-term version
    rng = np.random.default_rng(20140331)
    for t in rng.uniform(100.0, 70000.0, size=40):
        mine = rs_z_scalar(t)
        ref = fp.siegelz(float(t))
        tol = 0.5 * (t / TWO_PI) ** (-0.75) + 1e-6
        assert abs(mine - ref) < tol, (t, mine, ref)
    print("Z self-check ok  [%.1fs]" % (time.time() - t0), flush=True)

    brackets = scan(10.0, T_END, SCAN_STEP)
    print("scan: %d brackets  [%.1fs]" % (len(brackets), time.time() - t0), flush=True)
    zs = refine(brackets)
    zs.sort()

    for round_ in range(3):
        regions = audit(zs)
        if not regions:
            break
        print("audit round %d: rescanning %d regions" % (round_, len(regions)), flush=True)
        added = 0
        for (lo, hi) in regions:
            for (a, b) in scan(lo, hi, SCAN_STEP / 25.0):
                try:
                    r = brentq(rs_z_scalar, a, b, xtol=1e-10, maxiter=120)
                except ValueError:
                    continue
                if min((abs(r - z) for z in zs), default=1.0) > 1e-6:
                    zs.append(r)
                    added += 1
        zs.sort()
        print("  added %d zeros" % added, flush=True)
    else:
        regions = audit(zs)
        if regions:
            print("FATAL: audit still flags %d regions" % len(regions))
            sys.exit(1)

    assert len(zs) >= TARGET_COUNT, len(zs)
    zs = zs[:TARGET_COUNT]
    print("have %d zeros, last = %.6f  [%.1fs]" % (len(zs), zs[-1], time.time() - t0), flush=True)
    assert 74919.0 < zs[-1] < 74923.0, zs[-1]

    # polish the low range with mp.siegelz
    for i in range(min(MP_POLISH_COUNT, len(zs))):
        zs[i] = float(mp_secant(zs[i]))
    print("mp polish done  [%.1fs]" % (time.time() - t0), flush=True)

    # spot checks against mpmath.zetazero
    import mpmath
    for n in (1, 2, 3, 10, 100, 500):
        ref = mpmath.zetazero(n).imag
        d = abs(float(ref) - zs[n - 1])
        assert d < 1e-9, (n, d)
    print("zetazero spot checks ok", flush=True)

    # measure fast-path accuracy on a random sample
    idx = rng.integers(MP_POLISH_COUNT, TARGET_COUNT, size=VALIDATE_SAMPLES)
    worst = 0.0
    for i in idx:
        ref = float(mp_secant(zs[i]))
        worst = max(worst, abs(ref - zs[i]))
    print("fast-path sample: worst deviation %.3g" % worst, flush=True)
    assert worst < 3e-4, worst

    with open("data/zeros_100k.txt", "w") as f:
        f.write("# nontrivial zeta zero ordinates, first %d\n" % TARGET_COUNT)
        f.write("# generated by scripts/gen_zeros.py; first %d ordinates ~1e-12,"
                " rest validated to %.1e\n" % (MP_POLISH_COUNT, max(worst, 1e-9)))
        for z in zs:
            f.write("%.12f\n" % z)

    mp.dps = 25
    with open("tests/data/zeros_30.txt", "w") as f:
        f.write("# first 30 nontrivial zeta zero ordinates\n")
        for n in range(1, 31):
            f.write(mp.nstr(mpmath.zetazero(n).imag, 20, strip_zeros=False) + "\n")

    print("done  [%.1fs]" % (time.time() - t0), flush=True)


if __name__ == "__main__":
    main()
