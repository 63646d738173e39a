"""Shared plain-random generators for property and acceptance tests.

Kept separate from hypothesis strategies so the timed acceptance loops
can draw a fixed number of deterministic samples from random.Random.
All generated profiles use odd slot ranks; the cone's rank-parity
property (free rank odd) holds exactly for that class.
"""

import random
from math import gcd

from hfcone.cone import Framing
from hfcone.profiles import LocalData, SurgeryProfile

# genus drawn with weights favoring small windows
_GENUS_POOL = [0, 1, 1, 1, 1, 2, 2, 2, 2, 3]
_RANK_POOL = [1, 1, 1, 3, 3, 5]


def random_profile(rng: random.Random) -> SurgeryProfile:
    g = rng.choice(_GENUS_POOL)
    if g == 0:
        return SurgeryProfile(
            "rnd:g=0",
            0,
            {0: LocalData(1, (rng.choice((1, -1)),), (rng.choice((1, -1)),))},
        )
    ranks = {s: rng.choice(_RANK_POOL) for s in range(g)}
    overrides = {}
    for s in range(-g + 1, g):
        r = ranks[abs(s)]
        v = tuple(rng.randint(-2, 2) for _ in range(r))
        h = tuple(rng.randint(-2, 2) for _ in range(r))
        overrides[s] = LocalData(r, v, h)
    overrides[g] = LocalData(1, (rng.choice((1, -1)),), (0,))
    overrides[-g] = LocalData(1, (0,), (rng.choice((1, -1)),))
    return SurgeryProfile(f"rnd:g={g}", g, overrides)


def random_framing(rng: random.Random, pmax: int = 30, qmax: int = 8) -> Framing:
    while True:
        p = rng.randint(1, pmax)
        q = rng.randint(1, qmax)
        if gcd(p, q) == 1:
            return Framing(rng.choice((1, -1)) * p, q)


def random_lspace_alexander(rng: random.Random, gmax: int = 6) -> list[int]:
    """Coefficient list (t^g down to t^-g) of a random L-space staircase
    polynomial: alternating +-1 at symmetric exponents g > e_1 > ... > 0."""
    g = rng.randint(1, gmax)
    positives = sorted(rng.sample(range(1, g + 1), rng.randint(1, g)), reverse=True)
    if positives[0] != g:
        positives.insert(0, g)
    exps = positives + [0] + [-e for e in reversed(positives)]
    coeffs = [0] * (2 * g + 1)
    sign = 1
    for e in exps:
        coeffs[g - e] = sign
        sign = -sign
    return coeffs
