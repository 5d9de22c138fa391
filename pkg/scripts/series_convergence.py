"""Terms needed by each series as the argument approaches its convergence radius."""

import argparse
import sys

from ptrig import DEFAULT, NoConvergence, bring_series, cos_m_series, cos_p, cos_p_series
from ptrig.hyperseries import BRING_RADIUS, COS_M_RADIUS
from ptrig.polysolve import bring_root
from ptrig.gentrig import cos_m
from ptrig.special_core import COS_P_SERIES_LIMIT


def measure(series, exact, x, cfg):
    try:
        res = series(x, cfg)
    except NoConvergence:
        return f">{cfg.max_terms}", float("nan")
    value = res.value.real if isinstance(res.value, complex) else res.value
    return res.terms_used, abs(value - exact(x))


def rows(fractions, cfg):
    for f in fractions:
        yield ("cos_p_series", f, *measure(cos_p_series, cos_p, (4 - f * COS_P_SERIES_LIMIT) / 3, cfg))
        yield ("cos_m_series", f, *measure(cos_m_series, cos_m, (8 - f * COS_M_RADIUS) / 5, cfg))
        yield ("bring_series", f, *measure(bring_series, bring_root, f * BRING_RADIUS, cfg))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-terms", type=int, default=20000)
    args = ap.parse_args(argv)
    cfg = DEFAULT.with_(max_terms=args.max_terms)
    fractions = [0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99, 0.999]
    print("series,fraction_of_radius,terms_used,abs_error")
    for name, f, terms, err in rows(fractions, cfg):
        print(f"{name},{f},{terms},{err:.3e}")
    sys.stdout.flush()


if __name__ == "__main__":
    main()
