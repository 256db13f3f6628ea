#!/usr/bin/env python3
"""Generate frozen multiprecision reference values for the Meijer G evaluator.

Runs mpmath's Mellin-Barnes based meijerg() at 40 significant digits over a
set of parameter lists shaped like the ones the closed-form channel
expressions produce (turbulence/pointing mixtures, product-channel CDF
kernels, exponential-weighted kernels), plus the classical identity cases.

Output: tests/data/meijerg_reference.json, consumed by the C++ test suite.
Re-run only if the case list changes; the values are frozen on purpose so the
C++ evaluator is always checked against an independent implementation.
"""
import json
import os
import random

import mpmath as mp

mp.mp.dps = 40


def delta(k, x):
    return [(x + j) / float(k) for j in range(k)]


def mg(a_front, a_rest, b_front, b_rest, z):
    val = mp.meijerg([a_front, a_rest], [b_front, b_rest], mp.mpf(z), zeroprec=800)
    if isinstance(val, mp.mpc):
        assert abs(val.imag) < abs(val.real) * mp.mpf('1e-25'), val
        val = val.real
    return val


def case(name, a_front, a_rest, b_front, b_rest, z):
    return {
        "name": name,
        "m": len(b_front), "n": len(a_front),
        "a": [float(x) for x in (a_front + a_rest)],
        "b": [float(x) for x in (b_front + b_rest)],
        "z": float(z),
        "value": mp.nstr(mg(a_front, a_rest, b_front, b_rest, z), 24),
    }


def link_lists(alpha, beta_m, xi, r):
    """Per-mixture-term parameter blocks of one turbulence/pointing link."""
    x2 = xi * xi
    bottom = delta(r, x2) + delta(r, alpha) + delta(r, float(beta_m))
    top = delta(r, 1.0 + x2)
    return top, bottom


def main():
    rng = random.Random(20240917)
    cases = []

    def rnd_link(r):
        alpha = round(rng.uniform(1.3, 8.4), 3)
        beta_m = rng.randint(1, 4)
        xi = round(rng.uniform(1.05, 6.9), 3)
        return (alpha, beta_m, xi) + link_lists(alpha, beta_m, xi, r)

    # single-link density kernel G^{3,0}_{1,3}
    for i in range(1):
        a, m, xi, top, bot = rnd_link(1)
        z = round(rng.uniform(0.2, 6.0), 4)
        cases.append(case(f"single_pdf_{i}", [], top, bot, [], z))

    # product-channel density kernel G^{6,0}_{2,6}
    for i in range(2):
        a1, m1, x1, top1, bot1 = rnd_link(1)
        a2, m2, x2, top2, bot2 = rnd_link(1)
        z = round(rng.uniform(0.05, 8.0), 4)
        cases.append(case(f"pair_pdf_{i}", [], top2 + top1, bot1 + bot2, [], z))

    # product-channel distribution kernel G^{6r,1}_{2r+1,6r+1}, r = 1
    for i in range(2):
        a1, m1, x1, top1, bot1 = rnd_link(1)
        a2, m2, x2, top2, bot2 = rnd_link(1)
        z = round(rng.uniform(0.02, 20.0), 4)
        cases.append(case(f"pair_cdf_r1_{i}", [1.0], top2 + top1, bot1 + bot2, [0.0], z))

    # same kernel at r = 2 (multiplication-theorem expansion)
    for i in range(1):
        a1, m1, x1, top1, bot1 = rnd_link(2)
        a2, m2, x2, top2, bot2 = rnd_link(2)
        z = round(rng.uniform(0.05, 10.0), 4)
        cases.append(case(f"pair_cdf_r2_{i}", [1.0], top2 + top1, bot1 + bot2, [0.0], z))

    # distribution-vs-density cross kernel G^{6r+1,6r}_{8r+1,8r+1}, r = 1
    for i in range(2):
        a1, m1, x1, top1, bot1 = rnd_link(1)
        a2, m2, x2, top2, bot2 = rnd_link(1)
        a3, m3, x3, top3, bot3 = rnd_link(1)
        a_front = [1.0 - v for v in bot1] + [1.0 - v for v in bot2]
        a_rest = [1.0] + top3 + top1
        b_front = bot1 + bot3 + [0.0]
        b_rest = [1.0 - v for v in top1] + [1.0 - v for v in top2]
        z = round(rng.uniform(0.5, 60.0), 4)
        cases.append(case(f"cross_kernel_r1_{i}", a_front, a_rest, b_front, b_rest, z))

    # exponential-weighted kernel G^{3,6r}_{6r+1,2r+3}, r = 1
    for i in range(2):
        a1, m1, x1, top1, bot1 = rnd_link(1)
        a2, m2, x2, top2, bot2 = rnd_link(1)
        s0 = round(rng.uniform(0.9, 3.6), 4)
        a_front = [1.0 - s0 - v for v in bot1] + [1.0 - s0 - v for v in bot2]
        a_rest = [1.0 - s0]
        b_front = [0.0, 0.5, -s0]
        b_rest = [1.0 - s0 - v for v in top2] + [1.0 - s0 - v for v in top1]
        z = round(rng.uniform(0.1, 4.0), 4)
        cases.append(case(f"exp_kernel_r1_{i}", a_front, a_rest, b_front, b_rest, z))

    # the G^{6,1}_{3,7} list with repeated parameters (xi_h = xi_g = 6.7,
    # alpha 2.296, beta 2) at z = 1: exercises the coincident-pole path
    x2 = 6.7 * 6.7
    cases.append(case("pair_cdf_repeated", [1.0], [1 + x2, 1 + x2],
                      [x2, 2.296, 1.0, x2, 2.296, 1.0], [0.0], 1.0))

    out = os.path.join(os.path.dirname(__file__), "..", "data",
                       "meijerg_reference.json")
    with open(out, "w") as fh:
        json.dump({"dps": 40, "cases": cases}, fh, indent=1)
    print(f"wrote {len(cases)} cases to {out}")


if __name__ == "__main__":
    main()
