"""Budget-constrained multi-object auctions: exact values and Monte Carlo checks."""

import json
from fractions import Fraction

from ._core import (
    AuctionError,
    __version__,
    _estimate_json,
    best_response,
    c_sequence,
    cdf_F,
    density_g,
    density_h,
    density_s,
    ks_threshold,
    pdf_f,
    r_closed,
    sharp_p,
    wins_vs_marginal,
)


def _rational_text(value):
    if isinstance(value, (int, Fraction, str)):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    raise TypeError(f"cannot use {value!r} as a rational")


def estimate(mode="two-bidder", n=2, k=2, adversary="copycat", bids=(), sizes=(),
             samples=1_000_000, seed=0, threads=0):
    """Run a scenario and return the report as a dict (same schema as the CLI)."""
    scenario = {
        "mode": mode,
        "n": n,
        "k": k,
        "adversary": adversary,
        "bids": [_rational_text(b) for b in bids],
        "sizes": [_rational_text(s) for s in sizes],
        "samples": samples,
        "seed": seed,
        "threads": threads,
    }
    return json.loads(_estimate_json(json.dumps(scenario)))


def exact_value(report, bidder=0):
    """Exact expected wins of a bidder in a report, as a Fraction (or None)."""
    value = report["exact"][bidder]["value"]
    if value is None:
        return None
    return Fraction(int(value["num"]), int(value["den"]))

__all__ = [
    "AuctionError",
    "__version__",
    "best_response",
    "c_sequence",
    "cdf_F",
    "density_g",
    "density_h",
    "density_s",
    "estimate",
    "exact_value",
    "ks_threshold",
    "pdf_f",
    "r_closed",
    "sharp_p",
    "wins_vs_marginal",
]
