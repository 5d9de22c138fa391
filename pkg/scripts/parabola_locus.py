"""Points (cos_p, sin_p) traced along the parabola y = 1 - x**2, as CSV."""

import argparse
import csv
import sys

from ptrig import cos_p, sin_p


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="start", type=float, default=-2.0)
    ap.add_argument("--to", dest="stop", type=float, default=14 / 3)
    ap.add_argument("--steps", type=int, default=201)
    ap.add_argument("--out", default="-", help="output path, '-' for stdout")
    args = ap.parse_args(argv)

    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.writer(out)
    writer.writerow(["phi", "x", "y", "y_minus_parabola"])
    worst = 0.0
    for k in range(args.steps):
        phi = args.start + (args.stop - args.start) * k / (args.steps - 1)
        x, y = cos_p(phi), sin_p(phi)
        gap = y - (1 - x * x)
        worst = max(worst, abs(gap))
        writer.writerow([repr(phi), repr(x), repr(y), repr(gap)])
    if out is not sys.stdout:
        out.close()
    print(f"{args.steps} points, max |y - (1 - x^2)| = {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
