from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcslab.derham import (
    DGQuotientSpec,
    DiffForm,
    closed_dim,
    cohomology_dim,
    d,
    epsilon_columns,
    epsilon_matrix,
    even_closed_positive_dim,
    exact_dim,
    fedosov,
    inv_fedosov,
    quotient_table,
    rA_component,
    wedge,
)
from lcslab.errors import PreconditionError

N = 3


def forms(n=N, max_terms=3):
    exps = st.tuples(*[st.integers(0, 2)] * n)
    mask = st.integers(0, (1 << n) - 1)
    coeff = st.integers(-3, 3)
    return st.dictionaries(st.tuples(exps, mask), coeff, max_size=max_terms).map(
        lambda t: DiffForm(t, n)
    )


def homogeneous(f, parity):
    return f.parity_part(parity)


@given(forms())
def test_d_squared_is_zero(f):
    assert d(d(f)).is_zero()


@given(forms(), forms(), forms())
@settings(max_examples=50)
def test_wedge_associative(f, g, h):
    assert wedge(wedge(f, g), h) == wedge(f, wedge(g, h))


@given(forms(), forms())
@settings(max_examples=50)
def test_graded_commutativity(f, g):
    for p in range(N + 1):
        for q in range(N + 1):
            a, b = f.component(p), g.component(q)
            assert wedge(a, b) == wedge(b, a).scale((-1) ** (p * q))


@given(forms(), forms())
@settings(max_examples=50)
def test_leibniz_rule(f, g):
    for p in range(N + 1):
        a = f.component(p)
        assert d(wedge(a, g)) == wedge(d(a), g) + wedge(a, d(g)).scale((-1) ** p)


@given(forms(), forms(), forms())
@settings(max_examples=40)
def test_fedosov_product_is_associative_on_even_forms(f, g, h):
    f, g, h = (homogeneous(u, 0) for u in (f, g, h))
    assert fedosov(fedosov(f, g), h) == fedosov(f, fedosov(g, h))


@given(forms(), forms())
@settings(max_examples=50)
def test_inverse_fedosov_recovers_wedge(f, g):
    # building * from the wedge and then undoing it with the minus sign
    f, g = homogeneous(f, 0), homogeneous(g, 0)
    star = fedosov(f, g)
    undo = star - wedge(d(f), d(g)).scale(1)
    assert undo == wedge(f, g)
    assert inv_fedosov(f, g) + wedge(d(f), d(g)).scale(2) == fedosov(f, g)


def test_coordinate_one_form_sign_convention():
    x, y = DiffForm.var(0, 2), DiffForm.var(1, 2)
    assert d(wedge(x, DiffForm.dvar(1, 2))) == DiffForm.monomial((0, 0), (0, 1))
    assert d(wedge(y, DiffForm.dvar(0, 2))) == DiffForm.monomial((0, 0), (0, 1)).scale(-1)


def test_closed_dim_example():
    assert closed_dim(3, 2, (1, 1, 1)) == 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_closed_dim_recurrence(n):
    deg = tuple(range(1, n + 1))
    prev = 0
    for p in range(1, n + 1):
        D = closed_dim(n, p, deg)
        assert D == comb(n, p - 1) - prev == comb(n - 1, p - 1)
        assert exact_dim(n, p, deg) == D
        prev = D


def test_no_closed_zero_forms_in_positive_degree():
    assert closed_dim(3, 0, (1, 2, 1)) == 0


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_even_closed_count(n):
    assert even_closed_positive_dim(n, (1,) * n) == 2 ** (n - 2)


def test_closed_dim_range():
    with pytest.raises(PreconditionError):
        closed_dim(3, 4, (1, 1, 1))


def test_epsilon_three():
    e = epsilon_matrix(3)
    assert e.matrix == ((1, 1), (1, -1))
    assert e.columns == ((1, 4), (1, 2, 3, 4))
    assert e.determinant == -2


def test_epsilon_four_block_structure():
    e = epsilon_matrix(4)
    m = e.matrix
    assert e.determinant != 0
    assert [r[:2] for r in m[:2]] == [r[:2] for r in m[2:]]


def test_epsilon_five_invertible():
    e = epsilon_matrix(5)
    assert len(e.matrix) == len(epsilon_columns(5)) == 8
    assert e.determinant != 0


def test_epsilon_needs_three():
    with pytest.raises(PreconditionError):
        epsilon_matrix(2)


SPHERE = DGQuotientSpec.from_polynomials(
    [{(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (0, 0, 0): -1}], 3
)


def test_free_plane_cohomology():
    spec = DGQuotientSpec(2, ())
    t = quotient_table(spec, 6)
    for D in t.reliable:
        assert [t.cohomology_dim(p, D) for p in range(3)] == [1, 0, 0]
    assert rA_component(spec, 1, 3).dim == 2 * 6


def test_sphere_cohomology():
    t = quotient_table(SPHERE, 8)
    for D in t.reliable:
        assert t.odd_cohomology(D) == 0
        assert t.cohomology_dim(2, D) == (1 if D >= 3 else 0)
    assert cohomology_dim(SPHERE, 2, 3, cutoff=5) == 1


def test_sphere_stable_across_cutoffs():
    a, b = quotient_table(SPHERE, 6), quotient_table(SPHERE, 8)
    for D in a.reliable:
        for p in range(4):
            assert a.cohomology_dim(p, D) == b.cohomology_dim(p, D)
            assert a.quotient_dim(p, D) == b.quotient_dim(p, D)


def test_sphere_quotient_functions_have_2d_plus_1_functions_per_degree():
    # harmonic polynomials of degree k on the sphere: 2k + 1 of them
    t = quotient_table(SPHERE, 7)
    for D in range(6):
        assert t.quotient_dim(0, D) == sum(2 * k + 1 for k in range(D + 1))


def test_beyond_cutoff_is_refused():
    t = quotient_table(SPHERE, 5)
    with pytest.raises(PreconditionError):
        t.cohomology_dim(2, 5)


def test_relations_must_be_even():
    with pytest.raises(PreconditionError):
        DGQuotientSpec(2, (DiffForm.dvar(0, 2),))


@pytest.mark.parametrize("poly", [{(1, 1): 1, (0, 0): -1}, {(2, 1): 1, (0, 0): -1}])
def test_punctured_curves_have_one_class(poly):
    spec = DGQuotientSpec.from_polynomials([poly], 2)
    t = quotient_table(spec, 8)
    assert t.cohomology_dim(1, 7) == 1
    assert t.quotient_dim(2, 7) == 0
