import pytest
from hypothesis import given
from hypothesis import strategies as st

from lcslab.charmod import CharSeries, DecompositionError, char_B, char_F, decompose
from lcslab.errors import PreconditionError


def brute_char_F(p, k, T):
    # expand s^k t^k (t^{p-k} + ... + s^{p-k}) * sum s^i t^j term by term
    out = {}
    for i in range(p - k + 1):
        a0, b0 = k + i, p - i
        for a in range(a0, T + 1):
            for b in range(b0, T + 1 - a):
                out[(a, b)] = out.get((a, b), 0) + 1
    return out


@pytest.mark.parametrize("p,k", [(1, 1), (2, 1), (3, 2), (4, 1), (4, 4)])
def test_char_F_matches_expansion(p, k):
    assert char_F(p, k, 9).coeffs == brute_char_F(p, k, 9)


def test_char_F11_is_one_off_the_axes():
    c = char_F(1, 1, 6)
    for a in range(7):
        for b in range(7 - a):
            assert c[a, b] == (1 if a and b else 0)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_row_one_of_F_p1(p):
    c = char_F(p, 1, 9)
    for r in range(8):
        assert c[r, 1] == (1 if r >= p else 0)


@pytest.mark.parametrize("m", [3, 4, 5])
def test_row_two_of_F_m1(m):
    c = char_F(m - 1, 1, 10)
    for r in range(8):
        want = 0 if r <= m - 3 else 1 if r == m - 2 else 2
        assert c[r, 2] == want


def test_invalid_diagram():
    with pytest.raises(PreconditionError):
        char_F(1, 2, 5)
    with pytest.raises(PreconditionError):
        char_F(2, 0, 5)


@given(st.integers(1, 7).flatmap(lambda p: st.tuples(st.just(p), st.integers(1, min(p, 8 - p)))))
def test_decompose_single_module(pk):
    # certified region of truncation 10 is p + k <= 8
    p, k = pk
    dec = decompose(char_F(p, k, 10))
    assert dec.multiplicities == {(p, k): 1}


@given(st.dictionaries(st.sampled_from([(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)]), st.integers(1, 3)))
def test_decompose_recovers_combinations(mults):
    total = CharSeries(10, {})
    for (p, k), m in mults.items():
        total = total + char_F(p, k, 10).scale(m)
    assert decompose(total).multiplicities == mults


def test_diagrams_past_the_margin_are_not_reported():
    assert decompose(char_F(5, 4, 10)).multiplicities == {}


def test_decompose_negative_multiplicity():
    with pytest.raises(DecompositionError):
        decompose(char_F(3, 1, 10) - char_F(2, 1, 10))


def test_decompose_rejects_one_row_diagrams():
    # the module of functions has character 1/((1-s)(1-t)) and leads with s^0 t^0
    s = CharSeries(8, {(a, b): 1 for a in range(9) for b in range(9 - a)})
    with pytest.raises(DecompositionError):
        decompose(s)


def test_char_B2():
    c = char_B(2, 7)
    assert c == char_F(1, 1, 7)


def test_char_B3_B4():
    assert char_B(3, 8) == char_F(2, 1, 8)
    assert char_B(4, 8) == char_F(3, 1, 8) + char_F(3, 2, 8)
    assert decompose(char_B(4, 9)).multiplicities == {(3, 1): 1, (3, 2): 1}


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_char_B_symmetric(k):
    c = char_B(k, 8)
    assert c.swapped() == c


@pytest.mark.parametrize("m", [5, 6])
def test_b2m_multiplicities(m):
    dec = decompose(char_B(m, 10))
    got = dec.multiplicities
    assert got.get((m - 1, 1), 0) == 1
    assert got.get((m - 1, 2), 0) == (m - 2) // 2
    assert got.get((m - 2, 2), 0) == (m - 3) // 2


def test_truncation_bounds():
    with pytest.raises(PreconditionError):
        CharSeries(3, {(3, 1): 1})
