import pytest
from hypothesis import given, settings, strategies as st

from gsl import Field
from gsl.linalg import (Subspace, subspace_from, subspace_intersect,
                        subspace_sum)

F2 = Field(2)
F4 = Field(2, 2)
F5 = Field(5)


def vectors(field, n):
    return st.lists(st.lists(st.integers(0, field.q - 1), min_size=n, max_size=n),
                    min_size=0, max_size=6)


@pytest.mark.parametrize("F", [F2, F4, F5], ids=lambda F: F.name)
def test_insert_and_membership(F):
    S = Subspace(F, 4)
    assert S.insert([1, 0, 0, 1])
    assert S.insert([0, 1, 0, 1])
    diff = [1, F.neg(1), 0, 0]  # first row minus the second
    assert not S.insert(diff)
    assert S.dim == 2
    assert S.contains(diff)
    assert not S.contains([0, 0, 1, 0])
    assert S.contains([0, 0, 0, 0])


def test_residue_is_canonical_and_idempotent():
    S = subspace_from(F5, 3, [[1, 2, 1], [0, 3, 1]])
    for v in ([1, 1, 1], [4, 0, 2], [0, 0, 0]):
        r = S.residue(v)
        assert S.residue(r) == r
        # v - r lies in S
        diff = [F5.sub(a, b) for a, b in zip(v, r)]
        assert S.contains(diff)
    # residues are supported away from the pivots
    for l in S.pivots():
        assert S.residue([1, 1, 1])[l] == 0


def test_leading_index_convention():
    # pivots sit on the largest nonzero coordinate, so residues are
    # supported on low indices
    S = subspace_from(F2, 3, [[1, 0, 1]])
    assert S.pivots() == [2]
    assert S.residue([0, 0, 1]) == [1, 0, 0]
    assert S.complement_indices() == [0, 1]


def test_rref_rows_are_fully_reduced():
    S = subspace_from(F5, 4, [[0, 1, 1, 1], [1, 2, 3, 0], [1, 1, 0, 0]])
    rows = S.basis()
    pivots = S.pivots()
    for row, l in zip(rows, pivots):
        assert row[l] == 1
        for other in pivots:
            if other != l:
                assert row[other] == 0


@settings(max_examples=60)
@given(data=st.data(), F=st.sampled_from([F2, F4, F5]))
def test_sum_and_intersection_dimension_formula(data, F):
    n = 5
    A = subspace_from(F, n, data.draw(vectors(F, n)))
    B = subspace_from(F, n, data.draw(vectors(F, n)))
    U = subspace_sum(A, B)
    W = subspace_intersect(A, B)
    assert U.dim + W.dim == A.dim + B.dim
    for v in W.basis():
        assert A.contains(v) and B.contains(v)
    for v in A.basis():
        assert U.contains(v)


def test_intersection_example():
    A = subspace_from(F2, 3, [[1, 0, 0], [0, 1, 0]])
    B = subspace_from(F2, 3, [[0, 1, 0], [0, 0, 1]])
    W = subspace_intersect(A, B)
    assert W.dim == 1
    assert W.contains([0, 1, 0])


def test_right_kernel():
    # rows read as equations: x0 + x2 = 0, x1 + 2 x2 = 0 over GF(5)
    S = subspace_from(F5, 3, [[1, 0, 1], [0, 1, 2]])
    ker = S.right_kernel_basis()
    assert len(ker) == 1
    v = ker[0]
    for row in S.basis():
        acc = 0
        for a, b in zip(row, v):
            acc = F5.add(acc, F5.mul(a, b))
        assert acc == 0


@settings(max_examples=40)
@given(data=st.data(), F=st.sampled_from([F2, F4]))
def test_right_kernel_dimension(data, F):
    n = 5
    S = subspace_from(F, n, data.draw(vectors(F, n)))
    ker = S.right_kernel_basis()
    assert len(ker) == n - S.dim
    K = subspace_from(F, n, ker)
    assert K.dim == n - S.dim


def test_copy_is_independent():
    S = subspace_from(F2, 3, [[1, 1, 0]])
    T = S.copy()
    T.insert([0, 0, 1])
    assert S.dim == 1 and T.dim == 2
