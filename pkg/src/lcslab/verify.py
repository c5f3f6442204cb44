"""The acceptance suite as data: each check has an id, a provenance tag and a runner.

Runners return ``(passed, detail)``.  ``degmax`` caps the degrees a check
explores; ``None`` means the full default range.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Callable

from lcslab import charmod, derham, fs, lcs, lie
from lcslab.lcs import AlgebraSpec
from lcslab.ncalg import NcPoly, build_b, build_b2


@dataclass(frozen=True)
class Check:
    id: int
    name: str
    tag: str
    run: Callable[[int | None], tuple[bool, str]]


def _cap(default: int, degmax: int | None) -> int:
    return default if degmax is None else min(default, degmax)


def _positive_degrees(n: int, lo: int, hi: int):
    for total in range(lo, hi + 1):
        yield from (d for d in lcs.total_degree_multidegrees(n, total) if all(d))


def _first_failure(items) -> tuple[bool, str]:
    bad = [x for x in items if x is not None]
    return (not bad, "ok" if not bad else f"first mismatch: {bad[0]}")


def check_b22(degmax=None):
    spec = AlgebraSpec.free(2)
    top = _cap(10, degmax)
    got = {l: lcs.b_dim_total(spec, 2, l) for l in range(2, top + 1)}
    return _first_failure(
        (l, v, l - 1) if v != l - 1 else None for l, v in got.items()
    )


def check_b32(degmax=None):
    spec = AlgebraSpec.free(3)
    top = _cap(7, degmax)
    out = [
        (d, lcs.b_dim(spec, 2, d)) if lcs.b_dim(spec, 2, d) != 2 else None
        for d in _positive_degrees(3, 3, top)
    ]
    out += [
        (l, lcs.b_dim_total(spec, 2, l)) if lcs.b_dim_total(spec, 2, l) != l * l - 1 else None
        for l in range(2, top + 1)
    ]
    return _first_failure(out)


def check_b42(degmax=None):
    spec = AlgebraSpec.free(4)
    top = _cap(6, degmax)
    out = []
    for d in _positive_degrees(4, 4, top):
        dim, rk = lcs.b_dim(spec, 2, d), lcs.b2_basis_rank(4, d)
        out.append(None if dim == rk == 4 else (d, dim, rk))
    return _first_failure(out)


def check_nilpotent(degmax=None):
    top = _cap(7, degmax)
    out = []
    for m in ((2, 2), (2, 3), (3, 3)):
        spec = AlgebraSpec(2, m)
        for d in _positive_degrees(2, 2, top):
            want = 0 if any(i >= k for i, k in zip(d, m)) else 1
            got = lcs.b_dim(spec, 2, d)
            out.append(None if got == want else (m, d, got, want))
    return _first_failure(out)


def check_phi_oracle(degmax=None):
    top = _cap(7, degmax)
    out = []
    for n in (2, 3, 4):
        for total in range(top + 1):
            for e in lcs.total_degree_multidegrees(n, total):
                word = tuple(g for g in range(n) for _ in range(e[g]))
                ok = fs.phi(NcPoly.word(word, n)) == fs.phi_monomial_closed_form(e)
                out.append(None if ok else ("monomial", e))
                if all(e):
                    left = NcPoly.word(word[: -e[-1]], n)
                    right = NcPoly.word(word[-e[-1]:], n)
                    br = left * right - right * left
                    ok = fs.phi(br) == fs.phi_bracket_closed_form(e)
                    out.append(None if ok else ("bracket", e))
    return _first_failure(out)


def check_closed_counts(degmax=None):
    top = _cap(7, degmax)
    out = []
    for n in range(1, 6):
        for d in _positive_degrees(n, n, top):
            for p in range(1, n + 1):
                got = derham.closed_dim(n, p, d)
                out.append(None if got == comb(n - 1, p - 1) else (n, p, d, got))
            if n >= 2:
                ev = derham.even_closed_positive_dim(n, d)
                out.append(None if ev == 2 ** (n - 2) else (n, "even", d, ev))
    return _first_failure(out)


def check_epsilon(degmax=None):
    m3 = derham.epsilon_matrix(3)
    out = [None if m3.matrix == ((1, 1), (1, -1)) else ("n=3", m3.matrix)]
    for n in (3, 4, 5):
        out.append(None if derham.epsilon_matrix(n).determinant != 0 else ("singular", n))
    return _first_failure(out)


def check_rows(degmax=None):
    spec = AlgebraSpec.free(2)
    out = []

    def fits(total):
        return degmax is None or total <= degmax

    for m in range(2, 7):
        for r in range(1, 8):
            if fits(r + 1):
                want = 1 if r >= m - 1 else 0
                got = lcs.b_dim(spec, m, (r, 1))
                out.append(None if got == want else ("row1", m, r, got))
                if want:
                    el = build_b2(1, m - 2, r - m + 2)
                    rk = lcs.rank_modulo_next(spec, m, (r, 1), [el])
                    out.append(None if rk == 1 else ("row1 basis", m, r))
            if fits(r + 2):
                if m <= r + 1:
                    want = m - 1
                elif m == r + 2:
                    want = (r + 1) // 2
                else:
                    want = 0
                got = lcs.b_dim(spec, m, (r, 2))
                out.append(None if got == want else ("row2", m, r, got, want))
                if m <= r + 1:
                    els = [build_b(1, i, m - 3 - i, r - m + 3) for i in range(m - 2)]
                    els.append(build_b2(2, m - 2, r - m + 2))
                    rk = lcs.rank_modulo_next(spec, m, (r, 2), els)
                    out.append(None if rk == m - 1 else ("row2 basis", m, r, rk))
    return _first_failure(out)


def check_char_small(degmax=None):
    T = _cap(8, degmax)
    out = [
        None if charmod.char_B(3, T) == charmod.char_F(2, 1, T) else "char B3",
        None
        if charmod.char_B(4, T) == charmod.char_F(3, 1, T) + charmod.char_F(3, 2, T)
        else "char B4",
    ]
    # (3, 2) is certified only once truncation - margin >= 5
    Td = max(T, 5 + charmod.SAFETY_MARGIN)
    d3 = charmod.decompose(charmod.char_B(3, Td)).multiplicities
    d4 = charmod.decompose(charmod.char_B(4, Td)).multiplicities
    out.append(None if d3 == {(2, 1): 1} else ("decompose B3", d3))
    out.append(None if d4 == {(3, 1): 1, (3, 2): 1} else ("decompose B4", d4))
    return _first_failure(out)


def check_char_b5(degmax=None):
    # (4, 2) is certified only once truncation - margin >= 6
    T = max(_cap(10, degmax), 6 + charmod.SAFETY_MARGIN)
    dec = charmod.decompose(charmod.char_B(5, T))
    want = {(4, 1): 1, (4, 2): 1, (3, 2): 1}
    got = {k: dec.multiplicities.get(k, 0) for k in want}
    ok = got == want and all(p + k <= dec.certified_up_to for p, k in want)
    return ok, f"multiplicities {got}, certified for p+k <= {dec.certified_up_to}"


def check_nonsplit(degmax=None):
    ok = lcs.nonsplit_witness_check()
    return ok, "ok" if ok else "witness failed"


def check_appendix(degmax=None):
    out = []
    for n, top in ((2, _cap(6, degmax)), (3, _cap(5, degmax))):
        for total in range(1, top + 1):
            for d in lcs.total_degree_multidegrees(n, total):
                out.append(None if fs.tripcom_check(n, d) else ("tripcom", d))
                out.append(None if fs.imd_check(n, d) else ("imd", d))
    for total in range(1, _cap(5, degmax) + 1):
        for d in lcs.total_degree_multidegrees(2, total):
            h = fs.hc1_dim(2, d)
            out.append(None if h == 0 else ("hc1", d, h))
    return _first_failure(out)


def check_sphere(degmax=None):
    cutoff = 8
    spec = derham.DGQuotientSpec.from_polynomials(
        [{(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (0, 0, 0): -1}], 3
    )
    t = derham.quotient_table(spec, cutoff)
    out = []
    for D in t.reliable:
        if t.odd_cohomology(D):
            out.append(("odd cohomology", D))
        h2 = t.cohomology_dim(2, D)
        want = 1 if D >= 3 else 0
        if h2 != want:
            out.append(("H2", D, h2))
        if t.exact_dim(2, D) != t.quotient_dim(2, D) - want:
            out.append(("exact 2-forms", D))
    return _first_failure(out)


def check_roots(degmax=None):
    out = []
    for r, want in ((1, 0), (2, 1), (3, 32)):
        R = lie.type_A(r)
        got = lie.b2_invariant(R).dim_b2_invariant
        out.append(None if got == want else (R.name, got))
    for r in (1, 2):
        R = lie.type_A(r)
        out.append(None if lie.zero_sum_poly(R) == lie.zero_sum_poly_naive(R) else ("DP", R.name))
    return _first_failure(out)


def check_hypersurface(degmax=None):
    out = []
    for d, n in product(range(1, 11), repeat=2):
        ok = lie.euler_char(d, n) == lie.euler_char_recursive(d, n) == 1 - (1 - d) ** n
        out.append(None if ok else ("chi", d, n))
        want = (d - 1) ** n if n % 2 == 0 else 0
        out.append(None if lie.b2_hypersurface(d, n) == want else ("b2", d, n))
    out.append(None if lie.b2_plane_curve(3) == 4 else "plane curve")
    out.append(None if lie.b2_superelliptic(3, (2, 2, 3)) == 7 else "superelliptic")
    out.append(None if lie.b2_superelliptic(4, (2,)) == 2 else "superelliptic r=1")
    return _first_failure(out)


CHECKS: tuple[Check, ...] = (
    Check(1, "B_{2,2}[l] = l-1 for l = 2..10", "PAPER", check_b22),
    Check(2, "B_{3,2}: 2 per positive degree, l^2-1 per total degree", "PAPER", check_b32),
    Check(3, "B_{4,2} = 4 and canonical brackets independent", "PAPER", check_b42),
    Check(4, "nilpotent relations kill B_2 exactly when i_s >= m_s", "PAPER", check_nilpotent),
    Check(5, "phi fold equals the monomial and bracket closed forms", "PAPER", check_phi_oracle),
    Check(6, "closed form counts C(n-1,p-1) and 2^(n-2)", "PAPER", check_closed_counts),
    Check(7, "sign matrix invertible, n=3 matrix [[1,1],[1,-1]]", "PAPER", check_epsilon),
    Check(8, "rows (r,1) and (r,2) of B_{2,m} with basis elements", "PAPER", check_rows),
    Check(9, "char B3 = F(2,1), char B4 = F(3,1)+F(3,2)", "PAPER", check_char_small),
    Check(10, "B_{2,5} multiplicities of (4,1), (4,2), (3,2)", "PAPER", check_char_b5),
    Check(11, "non-split witness 4[[x,y],[x^2,y]] nonzero mod L_5", "PAPER", check_nonsplit),
    Check(12, "triple-commutator and commutator-image checks, HC_1 = 0", "DERIVED", check_appendix),
    Check(13, "sphere: no odd cohomology, one 2-class, exact 2-forms", "PAPER", check_sphere),
    Check(14, "(nu - |W|)/4 = 0, 1, 32 for A1, A2, A3", "PAPER", check_roots),
    Check(15, "hypersurface and curve formulas", "PAPER", check_hypersurface),
)

SUITES = {"all": None, "paper": "PAPER", "derived": "DERIVED"}


@dataclass(frozen=True)
class Result:
    check: Check
    passed: bool
    detail: str
    seconds: float


def run_check(check: Check, degmax: int | None = None) -> Result:
    t0 = time.perf_counter()
    passed, detail = check.run(degmax)
    return Result(check, bool(passed), detail, time.perf_counter() - t0)


def run_suite(suite: str = "all", degmax: int | None = None) -> list[Result]:
    if suite not in SUITES:
        raise KeyError(suite)
    tag = SUITES[suite]
    return [run_check(c, degmax) for c in CHECKS if tag is None or c.tag == tag]
