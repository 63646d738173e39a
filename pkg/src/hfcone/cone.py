"""The truncated surgery mapping cone.

For a framing p/q (q >= 1, sign carried by p) and a residue class
i in [0, |p|), the cone couples copies of the profile slots

    phi(s) = floor((i + p s) / q)

indexed by s: the A-slot at position s maps to the B-slot at position s
by v_{phi(s)} and to the B-slot at position s + 1 by h_{phi(s)}. The
homology of the cone is ker(D) + coker(D) for the assembled block matrix
D, which splits because integer kernels are free; torsion can only enter
through the cokernel and is reported as-is.

Slot direction convention: h raises the B-slot index by one. The
opposite choice swaps the roles of +p and -p (it computes the mirror
answers). The convention used here is pinned by regression fixtures:
1/q surgery on the trivial profile must give Z, and +1 surgery on the
genus-1 staircase profile must give Z while -1 gives Z^3.

Truncation: with G = max(genus, 1), slots with phi(s) >= G carry a unit
v and slots with phi(s) <= -G carry a unit h, so the infinite complex
retracts onto a finite window. For p > 0 the window keeps one more
A-slot than B-slots; for p < 0 one more B-slot than A-slots. Enlarging
the window never changes the answer (property-tested), it only pads the
matrix with unit rows.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .exactla import AbelianGroup, IntMatrix, smith_normal_form
from .profiles import SurgeryProfile


class FramingError(ValueError):
    """Not a valid surgery slope."""


_FRAMING_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")


@dataclass(frozen=True)
class Framing:
    """Reduced slope p/q with q >= 1; the sign lives in p."""

    p: int
    q: int = 1

    def __post_init__(self) -> None:
        if self.q < 0:
            object.__setattr__(self, "p", -self.p)
            object.__setattr__(self, "q", -self.q)
        if self.q == 0:
            raise FramingError("q must be nonzero")
        if self.p == 0:
            raise FramingError("p must be nonzero (0-surgery is not a rational homology sphere)")
        if gcd(abs(self.p), self.q) != 1:
            raise FramingError(f"{self.p}/{self.q} is not reduced")

    @staticmethod
    def parse(text: str) -> "Framing":
        m = _FRAMING_RE.match(text.strip())
        if not m:
            raise FramingError(f"cannot parse framing {text!r}; expected 'p' or 'p/q'")
        p = int(m.group(1))
        q = int(m.group(2)) if m.group(2) is not None else 1
        return Framing(p, q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def phi(i: int, p: int, q: int, s: int) -> int:
    """floor((i + p*s)/q), the profile slot feeding cone position s."""
    if q < 1:
        raise ValueError("q must be positive")
    return (i + p * s) // q


def _ceil_div(a: int, b: int) -> int:
    # b > 0
    return -((-a) // b)


@dataclass(frozen=True)
class Window:
    """Truncation window: A-slots [a_lo, a_hi], B-slots [b_lo, b_hi]."""

    a_lo: int
    a_hi: int
    b_lo: int
    b_hi: int


def truncation_window(profile: SurgeryProfile, framing: Framing, i: int, pad: int = 0) -> Window:
    """Smallest window outside which every slot is a cancelling unit pair.

    pad >= 1 enlarges both A ends; the B range follows the same end rule,
    which is what the stability property tests exercise.
    """
    if pad < 0:
        raise ValueError("pad must be nonnegative")
    g_bound = max(profile.genus, 1)
    p, q = framing.p, framing.q
    if p > 0:
        # phi is nondecreasing in s
        a_hi = _ceil_div(g_bound * q - i, p)  # first s with phi(s) >= G
        a_lo = (-g_bound * q + q - 1 - i) // p  # last s with phi(s) <= -G
        a_lo -= pad
        a_hi += pad
        return Window(a_lo, a_hi, a_lo + 1, a_hi)
    # phi is nonincreasing in s
    a_lo = (i - g_bound * q) // (-p)  # last s with phi(s) >= G
    a_hi = _ceil_div(i + g_bound * q - q + 1, -p)  # first s with phi(s) <= -G
    a_lo -= pad
    a_hi += pad
    return Window(a_lo, a_hi, a_lo, a_hi + 1)


def _cone_matrix(profile: SurgeryProfile, framing: Framing, i: int, window: Window) -> IntMatrix:
    p, q = framing.p, framing.q
    slots = list(range(window.a_lo, window.a_hi + 1))
    local = [profile.local(phi(i, p, q, s)) for s in slots]
    offsets = {}
    width = 0
    for s, data in zip(slots, local):
        offsets[s] = width
        width += data.rank
    rows = []
    for t in range(window.b_lo, window.b_hi + 1):
        row = [0] * width
        if window.a_lo <= t <= window.a_hi:
            data = local[t - window.a_lo]
            base = offsets[t]
            for j, x in enumerate(data.v):
                row[base + j] = x
        if window.a_lo <= t - 1 <= window.a_hi:
            data = local[t - 1 - window.a_lo]
            base = offsets[t - 1]
            for j, x in enumerate(data.h):
                row[base + j] += x
        rows.append(row)
    return IntMatrix.from_rows(rows)


def spinc_group(profile: SurgeryProfile, framing: Framing, i: int, pad: int = 0) -> AbelianGroup:
    """HF-hat of the surgered manifold in the spin-c class i, as
    ker + coker of the truncated cone matrix."""
    if not 0 <= i < abs(framing.p):
        raise ValueError(f"spin-c class {i} outside [0, {abs(framing.p)})")
    window = truncation_window(profile, framing, i, pad)
    d = _cone_matrix(profile, framing, i, window)
    divisors, rank = smith_normal_form(d)
    free = (d.cols - rank) + (d.rows - rank)
    return AbelianGroup(free, tuple(x for x in divisors if x > 1))


@dataclass(frozen=True)
class SpincEntry:
    i: int
    group: AbelianGroup
    is_l_structure: bool


@dataclass(frozen=True)
class SurgeryReport:
    """Per-spin-c groups for one surgery, plus the aggregate counts."""

    framing: Framing
    spinc: tuple[SpincEntry, ...]
    ell: int
    total_rank: int


def surgery_report(profile: SurgeryProfile, framing: Framing) -> SurgeryReport:
    """spinc_group for every class i in ascending order; ell counts the
    classes whose group is exactly Z."""
    entries = []
    for i in range(abs(framing.p)):
        group = spinc_group(profile, framing, i)
        entries.append(SpincEntry(i, group, group.is_z))
    return SurgeryReport(
        framing=framing,
        spinc=tuple(entries),
        ell=sum(1 for e in entries if e.is_l_structure),
        total_rank=sum(e.group.free_rank for e in entries),
    )
