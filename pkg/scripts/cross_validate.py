"""Compare the library against mpmath at 40 digits on random inputs and report worst errors."""

import argparse
import random

import mpmath

from ptrig import CubicEquation, QuinticTrinomial, cos_p, gen_point, GenTrigParams, solve_cubic, solve_quintic_trinomial
from ptrig.numerics import match_roots


def worst_cos_p(rng, n):
    worst = 0.0
    for _ in range(n):
        phi = rng.uniform(-50, 50)
        ref = [r for r in mpmath.polyroots([1, 0, 3, 3 * mpmath.mpf(phi) - 4], extraprec=100) if abs(mpmath.im(r)) < 1e-30]
        worst = max(worst, abs(cos_p(phi) - float(mpmath.re(ref[0]))))
    return worst


def worst_cubic(rng, n):
    worst = 0.0
    for _ in range(n):
        a, b, c = (rng.uniform(-10, 10) for _ in range(3))
        ref = [complex(z) for z in mpmath.polyroots([1, a, b, c], extraprec=100)]
        worst = max(worst, match_roots(solve_cubic(CubicEquation(a, b, c)).roots, ref))
    return worst


def worst_quintic(rng, n):
    worst = 0.0
    for _ in range(n):
        p, lam = rng.uniform(-10, 10), rng.uniform(-10, 10)
        ref = [complex(z) for z in mpmath.polyroots([1, 0, 0, 0, p, lam], extraprec=100, maxsteps=200)]
        worst = max(worst, match_roots(solve_quintic_trinomial(QuinticTrinomial(p, lam)).roots, ref))
    return worst


def worst_circle(rng, n):
    params = GenTrigParams(2, 2)
    worst = 0.0
    for _ in range(n):
        phi = rng.uniform(0, float(mpmath.pi))
        worst = max(worst, abs(gen_point(params, phi).c - float(mpmath.cos(phi))))
    return worst


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    mpmath.mp.dps = 40
    rng = random.Random(args.seed)
    for name, fn in (("cos_p", worst_cos_p), ("cubic", worst_cubic), ("quintic", worst_quintic),
                     ("circle C(phi|2,2)", worst_circle)):
        print(f"{name:20s} worst error {fn(rng, args.n):.3e} over {args.n} samples")


if __name__ == "__main__":
    main()
