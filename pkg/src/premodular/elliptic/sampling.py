"""Seeded draws of (tau, B) and the resulting curve points."""

from __future__ import annotations

import random

from ..errors import ConstructionError, ConvergenceError, PoleError
from .curve import sample_liouville_point
from .torus import TorusContext


def random_tau(rng, im=(0.9, 1.6)):
    return complex(rng.uniform(-0.5, 0.5), rng.uniform(*im))


def random_sigma(rng, ctx, margin=0.05):
    """sigma = r + s tau with (r, s) kept ``margin`` away from the 2-torsion grid."""
    while True:
        r, s = rng.random(), rng.random()
        if all(min(abs(v - h) for h in (0.0, 0.5, 1.0)) > margin for v in (r, s)):
            return ctx.from_rs(r, s)


def seeded_points(n, count, seed=0, B_box=6.0, M=None, max_tries=200):
    """``count`` pairs (ctx, point) for random tau and B; draws that hit a degeneracy are redrawn."""
    rng = random.Random(f"{seed}:{n}")
    out, tries = [], 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise ConstructionError("too many degenerate draws")
        ctx = TorusContext(random_tau(rng), M=M)
        B = complex(rng.uniform(-B_box, B_box), rng.uniform(-B_box, B_box))
        try:
            out.append((ctx, sample_liouville_point(n, B, ctx)))
        except (ConstructionError, ConvergenceError, PoleError):
            continue
    return out
