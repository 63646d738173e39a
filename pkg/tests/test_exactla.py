"""Smith form, kernel and cokernel over Z, checked against sympy."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from hfcone.exactla import (
    AbelianGroup,
    EliminationOverflow,
    IntMatrix,
    cokernel_group,
    kernel_rank,
    mat_vec,
    mul,
    smith_normal_form,
    snf_with_transforms,
)


def test_identity_smith():
    assert smith_normal_form(IntMatrix.identity(2)) == ([1, 1], 2)


def test_zero_matrix_smith():
    assert smith_normal_form(IntMatrix.zero(3, 4)) == ([], 0)


def test_small_nontrivial_smith():
    m = IntMatrix.from_rows([[2, 4], [6, 8]])
    assert smith_normal_form(m) == ([2, 4], 2)


def test_kernel_rank_identity():
    assert kernel_rank(IntMatrix.identity(2)) == 0


def test_kernel_rank_zero_matrix():
    assert kernel_rank(IntMatrix.zero(3, 4)) == 4


def test_kernel_rank_row_vector():
    assert kernel_rank(IntMatrix.from_rows([[1, 0, 0]])) == 2


def test_cokernel_identity():
    assert cokernel_group(IntMatrix.identity(2)) == AbelianGroup(0, ())


def test_cokernel_single_torsion():
    assert cokernel_group(IntMatrix.from_rows([[3]])) == AbelianGroup(0, (3,))


def test_cokernel_surjective_projection():
    m = IntMatrix.from_rows([[1, 0, 0], [0, 1, 0]])
    assert cokernel_group(m) == AbelianGroup(0, ())


def test_cokernel_mixed():
    m = IntMatrix.from_rows([[2, 0], [0, 0]])
    assert cokernel_group(m) == AbelianGroup(1, (2,))


def test_group_describe():
    assert AbelianGroup(0, ()).describe() == "0"
    assert AbelianGroup(1, ()).describe() == "Z^1"
    assert AbelianGroup(2, (2, 4)).describe() == "Z^2 + Z/2 + Z/4"
    assert AbelianGroup(0, (3,)).describe() == "Z/3"


def test_group_validation():
    with pytest.raises(ValueError):
        AbelianGroup(-1, ())
    with pytest.raises(ValueError):
        AbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroup(0, (2, 3))  # 2 does not divide 3
    assert AbelianGroup(0, (2, 6)).torsion == (2, 6)


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ValueError):
        mul(IntMatrix.identity(2), IntMatrix.identity(3))
    with pytest.raises(ValueError):
        mat_vec(IntMatrix.identity(2), [1, 2, 3])


def test_overflow_is_detected():
    big = 2**62
    m = IntMatrix.from_rows([[3, big], [big, 3]])
    with pytest.raises(EliminationOverflow):
        smith_normal_form(m)


def test_entry_magnitude_checked_on_construction():
    with pytest.raises(EliminationOverflow):
        IntMatrix.from_rows([[2**63 + 1]])


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-9, 9), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


def _sympy_divisors(rows):
    s = sympy_snf(Matrix(rows))
    diag = [abs(s[i, i]) for i in range(min(s.rows, s.cols))]
    return sorted(d for d in diag if d)


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_smith_matches_sympy(rows):
    divisors, rank = smith_normal_form(IntMatrix.from_rows(rows))
    assert divisors == _sympy_divisors(rows)
    assert rank == len(divisors)


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_divisor_chain_and_rank_identities(rows):
    m = IntMatrix.from_rows(rows)
    divisors, rank = smith_normal_form(m)
    for a, b in zip(divisors, divisors[1:]):
        assert b % a == 0
    assert all(d > 0 for d in divisors)
    assert kernel_rank(m) + rank == m.cols
    assert cokernel_group(m).free_rank + rank == m.rows


@given(matrices, st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_smith_invariant_under_unimodular_ops(rows, rng):
    base = smith_normal_form(IntMatrix.from_rows(rows))
    work = [list(r) for r in rows]
    nrows, ncols = len(work), len(work[0])
    for _ in range(8):
        kind = rng.randrange(4)
        if kind == 0 and nrows > 1:
            i, j = rng.sample(range(nrows), 2)
            work[i], work[j] = work[j], work[i]
        elif kind == 1 and nrows > 1:
            i, j = rng.sample(range(nrows), 2)
            k = rng.randint(-3, 3)
            work[i] = [a + k * b for a, b in zip(work[i], work[j])]
        elif kind == 2 and ncols > 1:
            i, j = rng.sample(range(ncols), 2)
            for row in work:
                row[i], row[j] = row[j], row[i]
        elif kind == 3 and ncols > 1:
            i, j = rng.sample(range(ncols), 2)
            k = rng.randint(-3, 3)
            for row in work:
                row[i] += k * row[j]
    assert smith_normal_form(IntMatrix.from_rows(work)) == base


@given(matrices)
@settings(max_examples=100, deadline=None)
def test_transform_decomposition_identities(rows):
    m = IntMatrix.from_rows(rows)
    dec = snf_with_transforms(m)
    assert mul(mul(dec.u, m), dec.v).entries == dec.s.entries
    assert mul(dec.u, dec.u_inv).entries == IntMatrix.identity(m.rows).entries
    assert mul(dec.v, dec.v_inv).entries == IntMatrix.identity(m.cols).entries
    diag = [dec.s.at(i, i) for i in range(min(m.rows, m.cols))]
    assert [d for d in diag if d] == list(dec.divisors)
