"""Chain-level knot complexes and the surgery data derived from them.

A complex is stored as its i = 0 slice: generators x with an Alexander
grading A(x), arrows x -> U^a y (a >= 0 is the i-drop; the j-drop is then
A(x) - A(y) + a and must also be >= 0), and a conjugation involution that
negates gradings. The full bifiltered complex is this data translated by
powers of U, and the finite complexes the surgery formula needs are
subquotients:

* B = the i = 0 column: every generator once with b = 0, keeping arrows
  with a = 0;
* A_s = the hook max(i, j - s) = 0: generator x sits at U^b x with
  b = max(0, A(x) - s), keeping arrows whose image stays on the hook.

The two maps to B are, on the chain level,

* v_s(U^b x) = x when b = 0 (plain projection), else 0;
* h_s(U^b x) = conj(x) when A(x) >= s (projection of the other arm of the
  hook, transported by U^-s and the conjugation), else 0.

homology() returns the group together with an explicit cycle basis for
the free part, so induced maps on homology can be expressed as integer
matrices. Torsion never arises for the complexes shipped here; if a user
complex produces torsion in some H(A_s) the computation refuses it
explicitly rather than guessing a convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import (
    AbelianGroup,
    IntMatrix,
    mat_vec,
    mul,
    snf_with_transforms,
)
from .profiles import LocalData, SurgeryProfile


class InvalidComplexError(ValueError):
    """The complex violates its structural invariants."""


class TorsionError(ValueError):
    """Homology has torsion where a free group is required."""


class StaircaseError(ValueError):
    """Coefficients do not describe a staircase complex."""


@dataclass(frozen=True)
class Generator:
    name: str
    alexander: int


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    u_power: int
    coeff: int


@dataclass(frozen=True)
class CfkComplex:
    generators: tuple[Generator, ...]
    arrows: tuple[Arrow, ...]
    conj: tuple[int, ...]

    @property
    def genus(self) -> int:
        return max(abs(g.alexander) for g in self.generators)


def validate(c: CfkComplex) -> list[str]:
    """All invariant violations, as human-readable strings; [] means valid."""
    out: list[str] = []
    n = len(c.generators)
    if n == 0:
        return ["complex has no generators"]
    for a in c.arrows:
        if not (0 <= a.source < n and 0 <= a.target < n):
            out.append(f"arrow {a} references a missing generator")
            continue
        if a.coeff == 0:
            out.append(f"arrow {a} has zero coefficient")
        if a.u_power < 0:
            out.append(f"negative u_power on arrow {_arrow_str(c, a)}")
        x, y = c.generators[a.source], c.generators[a.target]
        if x.alexander - y.alexander + a.u_power < 0:
            out.append(f"arrow {_arrow_str(c, a)} raises the j-filtration")
    if out:
        return out
    if sorted(c.conj) != list(range(n)):
        return [f"conj {c.conj} is not a permutation of the generators"]
    for i, j in enumerate(c.conj):
        if c.conj[j] != i:
            out.append(f"conj is not an involution at generator {i}")
        if c.generators[j].alexander != -c.generators[i].alexander:
            out.append(f"conj does not negate the grading of {c.generators[i].name}")
    if out:
        return out
    # d^2 = 0 over Z[U]: group compositions by (source, target, total U power)
    square: dict[tuple[int, int, int], int] = {}
    for a1 in c.arrows:
        for a2 in c.arrows:
            if a1.target == a2.source:
                key = (a1.source, a2.target, a1.u_power + a2.u_power)
                square[key] = square.get(key, 0) + a1.coeff * a2.coeff
    for (src, tgt, power), total in sorted(square.items()):
        if total:
            out.append(
                f"d^2 != 0: {c.generators[src].name} -> U^{power} {c.generators[tgt].name}"
                f" has coefficient {total}"
            )
    # conjugation symmetry: J applied to the arrow set reproduces the arrow set
    def key_of(arrows):
        tally: dict[tuple[int, int, int], int] = {}
        for a in arrows:
            k = (a.source, a.target, a.u_power)
            tally[k] = tally.get(k, 0) + a.coeff
        return {k: v for k, v in tally.items() if v}

    conj_arrows = []
    for a in c.arrows:
        dx = c.generators[a.source].alexander - c.generators[a.target].alexander
        conj_arrows.append(
            Arrow(c.conj[a.source], c.conj[a.target], a.u_power + dx, a.coeff)
        )
    if key_of(conj_arrows) != key_of(c.arrows):
        out.append("arrow set is not conjugation symmetric")
    if out:
        return out
    # the central complex must have the homology of the three-sphere
    hb = homology(bhat(c), _allow_torsion=True)
    if not hb.group.is_z:
        out.append(f"H(B) is {hb.group.describe()}, expected Z")
    return out


def _arrow_str(c: CfkComplex, a: Arrow) -> str:
    return f"{c.generators[a.source].name} -> U^{a.u_power} {c.generators[a.target].name}"


def _require_valid(c: CfkComplex) -> None:
    problems = validate(c)
    if problems:
        raise InvalidComplexError("; ".join(problems))


@dataclass(frozen=True)
class SliceComplex:
    """Finite complex on basis U^b x, one element per generator."""

    basis: tuple[tuple[int, int], ...]  # (generator index, u power b)
    differential: IntMatrix  # entry [target][source]


def ahat(c: CfkComplex, s: int) -> SliceComplex:
    """The hook complex A_s."""
    shifts = [max(0, g.alexander - s) for g in c.generators]
    return _slice(c, shifts)


def bhat(c: CfkComplex) -> SliceComplex:
    """The central complex B: the i = 0 column."""
    return _slice(c, [0] * len(c.generators))


def _slice(c: CfkComplex, shifts: Sequence[int]) -> SliceComplex:
    n = len(c.generators)
    rows = [[0] * n for _ in range(n)]
    for a in c.arrows:
        # the arrow U^{b_x} x -> U^{b_x + a} y survives iff it lands on the slice
        if shifts[a.source] + a.u_power == shifts[a.target]:
            rows[a.target][a.source] += a.coeff
    return SliceComplex(
        basis=tuple((i, shifts[i]) for i in range(n)),
        differential=IntMatrix.from_rows(rows),
    )


@dataclass(frozen=True)
class SliceHomology:
    """ker/im of a slice differential, with a chosen free-part cycle basis.

    basis_cycles[j] is a cycle (coordinates over the slice basis) whose
    class is the j-th free generator. class_vector() expresses any cycle
    in that basis.
    """

    group: AbelianGroup
    basis_cycles: tuple[tuple[int, ...], ...]
    _v_inv: IntMatrix
    _rank_d: int
    _u_prime: IntMatrix
    _rank_y: int

    def class_vector(self, cycle: Sequence[int]) -> tuple[int, ...]:
        full = mat_vec(self._v_inv, list(cycle))
        if any(full[: self._rank_d]):
            raise ValueError("vector is not a cycle")
        z = mat_vec(self._u_prime, full[self._rank_d :])
        # positions below rank_y carry the (trivial here) torsion coordinates
        return tuple(z[self._rank_y :])


def homology(s: SliceComplex, _allow_torsion: bool = False) -> SliceHomology:
    """Homology of a slice with an explicit free-part cycle basis.

    Torsion is refused (TorsionError) unless explicitly tolerated; the
    surgery data derivation has no convention for torsion classes.
    """
    d = s.differential
    n = d.cols
    dec = snf_with_transforms(d)
    r = dec.rank
    # kernel lattice basis: the last n - r columns of v
    v_rows = dec.v.to_rows()
    kernel = IntMatrix.from_rows([row[r:] for row in v_rows]) if n else IntMatrix.zero(0, 0)
    # image of the differential in kernel coordinates; the top block being
    # zero is exactly the statement that the differential squares to zero
    vinv_d = mul(dec.v_inv, d)
    vinv_d_rows = vinv_d.to_rows()
    if any(x for row in vinv_d_rows[:r] for x in row):
        raise ValueError("slice differential does not square to zero")
    y = IntMatrix.from_rows(vinv_d_rows[r:]) if n - r else IntMatrix.zero(0, n)
    ydec = snf_with_transforms(y)
    torsion = tuple(e for e in ydec.divisors if e > 1)
    if torsion and not _allow_torsion:
        raise TorsionError(
            f"homology has torsion {torsion}; only free homology is supported here"
        )
    free_rank = (n - r) - ydec.rank
    reps = mul(kernel, ydec.u_inv)
    rep_rows = reps.to_rows()
    cycles = tuple(
        tuple(rep_rows[i][j] for i in range(n)) for j in range(ydec.rank, n - r)
    )
    return SliceHomology(
        group=AbelianGroup(free_rank, torsion),
        basis_cycles=cycles,
        _v_inv=dec.v_inv,
        _rank_d=r,
        _u_prime=ydec.u,
        _rank_y=ydec.rank,
    )


def _induced_row(
    c: CfkComplex,
    s: int,
    source: SliceHomology,
    source_basis: tuple[tuple[int, int], ...],
    target: SliceHomology,
    use_conj: bool,
) -> tuple[int, ...]:
    n = len(c.generators)
    coords = []
    for w in source.basis_cycles:
        image = [0] * n
        for k, (gi, b) in enumerate(source_basis):
            if not w[k]:
                continue
            if use_conj:
                if c.generators[gi].alexander >= s:
                    image[c.conj[gi]] += w[k]
            else:
                if b == 0:
                    image[gi] += w[k]
        cls = target.class_vector(image)
        coords.append(cls[0] if cls else 0)
    return tuple(coords)


def induced_v(c: CfkComplex, s: int) -> IntMatrix:
    """Matrix of v_s on homology, target basis H(B) = Z."""
    a = ahat(c, s)
    row = _induced_row(c, s, homology(a), a.basis, homology(bhat(c)), use_conj=False)
    return IntMatrix.from_rows([list(row)])


def induced_h(c: CfkComplex, s: int) -> IntMatrix:
    """Matrix of h_s on homology, target basis H(B) = Z."""
    a = ahat(c, s)
    row = _induced_row(c, s, homology(a), a.basis, homology(bhat(c)), use_conj=True)
    return IntMatrix.from_rows([list(row)])


def mirror(c: CfkComplex) -> CfkComplex:
    """The dual complex: gradings negated, arrows reversed with the same
    U power. Surgery p/q on the original matches surgery -p/q here."""
    gens = tuple(Generator(g.name, -g.alexander) for g in c.generators)
    arrows = tuple(Arrow(a.target, a.source, a.u_power, a.coeff) for a in c.arrows)
    return CfkComplex(gens, arrows, c.conj)


def staircase_from_alexander(
    coeffs: Sequence[int], top: int | None = None
) -> CfkComplex:
    """Staircase complex of an L-space knot from its Alexander polynomial.

    coeffs lists the coefficients from t^top down to t^-top (every exponent,
    zeros included). They must be symmetric and the nonzero ones must
    alternate +1, -1, ... starting with +1; the step lengths of the
    staircase are the gaps between nonzero exponents.
    """
    coeffs = [int(x) for x in coeffs]
    if not coeffs or len(coeffs) % 2 == 0:
        raise StaircaseError("coefficient list must have odd length (t^g down to t^-g)")
    span = (len(coeffs) - 1) // 2
    if top is not None and top != span:
        raise StaircaseError(f"top exponent {top} does not match {len(coeffs)} coefficients")
    if coeffs != coeffs[::-1]:
        raise StaircaseError("coefficients are not symmetric")
    if sum(coeffs) != 1:
        raise StaircaseError("polynomial does not evaluate to 1 at t = 1")
    if coeffs[0] == 0:
        raise StaircaseError("leading coefficient is zero")
    nz = [(span - idx, c) for idx, c in enumerate(coeffs) if c]
    expected = 1
    for _, c in nz:
        if c != expected:
            raise StaircaseError(
                "nonzero coefficients must alternate +1, -1, ... from the top"
            )
        expected = -expected
    exps = [e for e, _ in nz]
    gens = tuple(Generator(f"x{i}", e) for i, e in enumerate(exps))
    arrows: list[Arrow] = []
    for i in range(1, len(exps), 2):
        arrows.append(Arrow(i, i + 1, 0, 1))
        arrows.append(Arrow(i, i - 1, exps[i - 1] - exps[i], 1))
    n = len(exps)
    c = CfkComplex(gens, tuple(arrows), tuple(n - 1 - i for i in range(n)))
    _require_valid(c)
    return c


def to_profile(c: CfkComplex, name: str | None = None) -> SurgeryProfile:
    """Derive the surgery profile: ranks of H(A_s) and induced maps for
    every |s| <= genus. Basis signs are chosen so that the first nonzero
    coordinate of each (v, h) column is positive, which makes staircase
    complexes reproduce the built-in profiles on the nose."""
    _require_valid(c)
    g = c.genus
    hb = homology(bhat(c))
    overrides = {}
    for s in range(-g, g + 1):
        a = ahat(c, s)
        ha = homology(a)
        v = list(_induced_row(c, s, ha, a.basis, hb, use_conj=False))
        h = list(_induced_row(c, s, ha, a.basis, hb, use_conj=True))
        for j in range(len(v)):
            lead = v[j] if v[j] else h[j]
            if lead < 0:
                v[j] = -v[j]
                h[j] = -h[j]
        overrides[s] = LocalData(ha.group.free_rank, tuple(v), tuple(h))
    return SurgeryProfile(name or f"derived:g={g}", g, overrides)
