from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcslab.errors import PreconditionError
from lcslab.lie import (
    RootSystem,
    WeightBoxOverflow,
    ZPoly,
    b2_hypersurface,
    b2_invariant,
    b2_plane_curve,
    b2_superelliptic,
    e_poly,
    euler_char,
    euler_char_recursive,
    f_V_poly,
    h_poly,
    nu,
    root_system,
    type_A,
    zero_sum_poly,
    zero_sum_poly_naive,
)


@pytest.mark.parametrize("name,want", [("A1", 2), ("A2", 10), ("A3", 152)])
def test_nu(name, want):
    assert nu(root_system(name)) == want


def test_a1_and_a2_polynomials():
    assert zero_sum_poly(type_A(1)) == ZPoly([1, 0, 1])
    assert zero_sum_poly(type_A(2)) == ZPoly([1, 0, 3, 2, 3, 0, 1])


@pytest.mark.parametrize("r", [1, 2, 3])
def test_dp_matches_enumeration(r):
    R = type_A(r)
    assert zero_sum_poly(R) == zero_sum_poly_naive(R)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_subset_invariants(r):
    R = type_A(r)
    F = zero_sum_poly(R).coeffs
    half = len(R.roots) // 2
    assert F[-1] == 1 and len(F) == len(R.roots) + 1
    for k in range(half + 1):
        assert F[2 * k] >= comb(half, k)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_h_at_plus_minus_one(r):
    R = type_A(r)
    H = h_poly(R)
    assert H(1) == H(-1) == R.weyl_order
    assert zero_sum_poly(R)(-1) == H(-1)


def test_h_for_a1():
    assert h_poly(type_A(1)) == ZPoly([1, 0, 1])


@pytest.mark.parametrize("r,want", [(1, 0), (2, 1), (3, 32)])
def test_invariant_dims(r, want):
    res = b2_invariant(type_A(r))
    assert res.dim_b2_invariant == want == (res.nu - res.weyl) // 4


def test_a2_e_polynomial():
    res = b2_invariant(type_A(2))
    assert res.E(-1) == 0
    assert res.E == ZPoly([0, 0, 0, 1, 1])


def test_e_poly_of_equal_inputs_is_zero():
    F = ZPoly([1, 2, 3])
    assert e_poly(F, F) == ZPoly()


def test_e_poly_needs_divisibility():
    with pytest.raises(PreconditionError):
        e_poly(ZPoly([1, 0, 1]), ZPoly([0]))


def test_f_v_trivial_is_zero_sum():
    R = type_A(2)
    assert f_V_poly(R, {(0, 0, 0): 1}) == zero_sum_poly(R)


def test_f_v_adjoint_a1_by_enumeration():
    R = type_A(1)
    chi = {(1, -1): 1, (0, 0): 1, (-1, 1): 1}
    want = [0] * 3
    for k in range(3):
        for S in combinations(R.roots, k):
            s = tuple(sum(v[i] for v in S) for i in range(2))
            want[k] += chi.get(s, 0)
    F = f_V_poly(R, chi)
    assert F == ZPoly(want)
    assert F(0) == chi[(0, 0)]


def test_root_system_validation():
    with pytest.raises(PreconditionError):
        RootSystem("bad", ((1,),), 2, (2,))
    with pytest.raises(PreconditionError):
        RootSystem("bad", ((1,), (-1,)), 3, (2,))
    with pytest.raises(PreconditionError):
        root_system("E8")


def test_weight_box_overflow():
    import lcslab.lie as lie

    old = lie.MAX_BOX
    lie.MAX_BOX = 10
    try:
        with pytest.raises(WeightBoxOverflow):
            zero_sum_poly(type_A(2))
    finally:
        lie.MAX_BOX = old


@given(st.integers(1, 10), st.integers(1, 10))
def test_euler_char_closed_form(d, n):
    assert euler_char(d, n) == euler_char_recursive(d, n) == 1 - (1 - d) ** n


def test_euler_char_one_variable():
    assert all(euler_char(d, 1) == d for d in range(1, 8))


def test_b2_hypersurface_parity():
    assert b2_hypersurface(3, 2) == 4
    assert b2_hypersurface(3, 3) == 0
    assert b2_hypersurface(4, 4) == 81


def test_curves():
    assert b2_plane_curve(3) == 4
    assert b2_plane_curve(5) == 16
    assert b2_superelliptic(3, (2, 2, 3)) == 7
    assert b2_superelliptic(5, (2,)) == 1
    assert b2_superelliptic(4, (2,)) == 2


def test_invalid_parameters():
    with pytest.raises(PreconditionError):
        euler_char(0, 2)
    with pytest.raises(PreconditionError):
        b2_superelliptic(2, ())
