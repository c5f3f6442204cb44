from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcslab.errors import PreconditionError
from lcslab.linalg import (
    Echelon,
    determinant,
    intersection_dim,
    is_subspace,
    quotient_dim,
    rank,
    solve_combination,
    span,
    subspace_sum,
)


def dense_rank(rows):
    # textbook Gaussian elimination on dense Fraction rows
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = Fraction(1)
        for i in range(n):
            prod *= m[i][perm[i]]
        total += (-1) ** inv * prod
    return total


entries = st.integers(-3, 3)


def matrices(max_rows=5, cols=4):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), max_size=max_rows)


@given(matrices())
def test_rank_matches_dense_elimination(rows):
    assert rank(rows, 4) == (dense_rank(rows) if rows else 0)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz_det(m)


@given(matrices(), matrices())
@settings(max_examples=60)
def test_dimension_formula(a, b):
    S, T = span(a, 4), span(b, 4)
    assert S.dim + T.dim == subspace_sum(S, T).dim + intersection_dim(S, T)


@given(matrices())
def test_rref_is_canonical(rows):
    S = span(rows, 4)
    assert span(list(reversed(rows)), 4) == S
    assert span(S.rref, 4).rref == S.rref


@given(matrices(), st.lists(entries, min_size=4, max_size=4))
def test_contains_iff_rank_unchanged(rows, v):
    S = span(rows, 4)
    assert S.contains(v) == (rank(rows + [v], 4) == S.dim)


def test_quotient_requires_containment():
    S = span([[1, 0, 0]], 3)
    T = span([[0, 1, 0]], 3)
    with pytest.raises(PreconditionError):
        quotient_dim(S, T)
    assert quotient_dim(subspace_sum(S, T), T) == 1
    assert is_subspace(T, subspace_sum(S, T))


def test_ambient_mismatch():
    with pytest.raises(PreconditionError):
        subspace_sum(span([[1]], 1), span([[1, 0]], 2))
    with pytest.raises(PreconditionError):
        span([[1, 2, 3]], 2)


@given(st.lists(st.lists(entries, min_size=4, max_size=4), max_size=3), st.lists(entries, min_size=3, max_size=3))
def test_solve_combination_reconstructs_target(rows, coeffs):
    ech = Echelon(4)
    indep = [r for r in rows if ech.add(r)]
    target = [sum(c * r[i] for c, r in zip(coeffs, indep)) for i in range(4)]
    sol = solve_combination(indep, target, 4)
    assert sol is not None
    assert [sum(c * r[i] for c, r in zip(sol, indep)) for i in range(4)] == target


def test_solve_combination_outside_span():
    assert solve_combination([[1, 0, 0]], [0, 1, 0], 3) is None


def test_sparse_and_dense_agree():
    assert span([{0: 1, 2: 2}], 3) == span([[1, 0, 2]], 3)


def test_coordinates():
    S = span([[1, 1, 0], [0, 1, 1]], 3)
    # against the RREF rows [1, 0, -1] and [0, 1, 1]
    assert S.coordinates([1, 2, 1]) == [1, 2]
    with pytest.raises(PreconditionError):
        S.coordinates([1, 0, 0])
