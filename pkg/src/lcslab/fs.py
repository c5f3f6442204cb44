"""The Feigin-Shoikhet map into even forms and the B_2(A) pipeline for quotients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from lcslab.derham import (
    DGQuotientSpec,
    DiffForm,
    _d_terms,
    d,
    fedosov,
    graded_ideal_echelon,
    graded_quotient_basis,
    mask_of,
    quotient_table,
)
from lcslab.errors import PreconditionError, check_degree
from lcslab.lcs import AlgebraSpec, _triple_ideal, component_basis, lcs_component
from lcslab.linalg import Echelon
from lcslab.ncalg import NcPoly, Word, sub_multidegrees, words_of_multidegree


@lru_cache(maxsize=65536)
def _phi_word(word: Word, n: int) -> DiffForm:
    if not word:
        return DiffForm.const(1, n)
    return fedosov(_phi_word(word[:-1], n), DiffForm.var(word[-1], n))


def phi(p: NcPoly, n: int | None = None) -> DiffForm:
    """Image under the homomorphism x_i -> x_i into (even forms, Fedosov product)."""
    n = p.ngens if n is None else n
    if n < p.ngens:
        raise PreconditionError(f"need at least {p.ngens} variables")
    out = DiffForm.zero(n)
    for w, c in p.items():
        out = out + _phi_word(w, n).scale(c)
    return out


def phi_monomial_closed_form(exps: tuple[int, ...]) -> DiffForm:
    """x^i * sum over even S of the wedge of i_k dx_k / x_k, indices increasing."""
    n = len(exps)
    support = [k for k in range(n) if exps[k]]
    terms = {}
    for size in range(0, len(support) + 1, 2):
        for S in combinations(support, size):
            m = mask_of(S)
            coeff = 1
            for k in S:
                coeff *= exps[k]
            new = tuple(e - ((m >> k) & 1) for k, e in enumerate(exps))
            terms[(new, m)] = coeff
    return DiffForm(terms, n)


def phi_bracket_closed_form(exps: tuple[int, ...]) -> DiffForm:
    """sum over even S containing the last index of 2 x^i wedge_{k in S} i_k dx_k / x_k."""
    n = len(exps)
    if any(e < 1 for e in exps):
        raise PreconditionError("the bracket formula needs a strictly positive multidegree")
    terms = {}
    for size in range(2, n + 1, 2):
        for rest in combinations(range(n - 1), size - 1):
            S = rest + (n - 1,)
            m = mask_of(S)
            coeff = 2
            for k in S:
                coeff *= exps[k]
            new = tuple(e - ((m >> k) & 1) for k, e in enumerate(exps))
            terms[(new, m)] = coeff
    return DiffForm(terms, n)


def _in_l2(p: NcPoly) -> bool:
    spec = AlgebraSpec.free(p.ngens)
    by_deg: dict[tuple[int, ...], dict] = {}
    for w, c in p.items():
        deg = tuple(w.count(g) for g in range(p.ngens))
        by_deg.setdefault(deg, {})[w] = c
    return all(
        lcs_component(spec, 2, deg).contains(NcPoly(t, p.ngens)) for deg, t in by_deg.items()
    )


def phi_closed_check(p: NcPoly) -> bool:
    """For p in L_2: phi(p) is closed and has no 0-form part."""
    if not _in_l2(p):
        raise PreconditionError("phi_closed_check needs an element of L_2")
    img = phi(p)
    return d(img).is_zero() and img.component(0).is_zero()


# -- B_2 of pseudosmooth quotients ---------------------------------------------


def relation_spec_from_nc(relations: list[NcPoly], nvars: int | None = None) -> DGQuotientSpec:
    """R(A) for A = T V/(L): forms modulo the ideal generated by phi(L) and d phi(L)."""
    n = nvars or max(r.ngens for r in relations)
    return DGQuotientSpec(n, tuple(phi(r, n) for r in relations))


@dataclass(frozen=True)
class B2Row:
    degree: int
    exact_even: int
    odd_cohomology: int
    b2: int
    upper_bound: bool


def pseudosmooth_b2_dims(spec: DGQuotientSpec, cutoff: int) -> list[B2Row]:
    """Cumulative dims (weight <= D, D < cutoff) of B_2(A) for a pseudosmooth A.

    Smoothness is taken on trust.  With no odd cohomology B_2 is the space of
    exact even forms; otherwise the odd cohomology is added and the value is
    only an upper bound, since the image Y(A) of HC_1 is not computed.
    """
    t = quotient_table(spec, cutoff)
    rows = []
    for D in t.reliable:
        exact = t.exact_even(D)
        odd = t.odd_cohomology(D)
        rows.append(B2Row(D, exact, odd, exact + odd, odd != 0))
    return rows


# -- brute-force checks of the triple-commutator quotient ---------------------


def _algebra_spec(spec_or_n) -> AlgebraSpec:
    if isinstance(spec_or_n, AlgebraSpec):
        return spec_or_n
    return AlgebraSpec.free(int(spec_or_n))


def _relation_forms(spec: AlgebraSpec) -> list[DiffForm]:
    # phi(x_i^m) = x_i^m: powers of one letter pick up no dx's
    if spec.relations is None:
        return []
    out = []
    for i, m in enumerate(spec.relations):
        exps = [0] * spec.ngens
        exps[i] = m
        out.append(DiffForm.monomial(exps))
    return out


def _graded_ra(spec: AlgebraSpec, deg: tuple[int, ...], parity: int):
    n = spec.ngens
    keys = graded_quotient_basis(n, deg, parity)
    cols = {k: i for i, k in enumerate(keys)}
    ech = graded_ideal_echelon(_relation_forms(spec), n, deg, parity, cols)
    return keys, cols, ech


def even_ra_dim(spec: AlgebraSpec, deg: tuple[int, ...]) -> int:
    keys, _, ech = _graded_ra(spec, deg, 0)
    return len(keys) - ech.dim


def exact_even_ra_dim(spec: AlgebraSpec, deg: tuple[int, ...]) -> int:
    _, cols, ech = _graded_ra(spec, deg, 0)
    base = ech.dim
    for e, m in graded_quotient_basis(spec.ngens, deg, 1):
        ech.add({cols[k]: v for k, v in _d_terms(e, m, 1)})
    return ech.dim - base


def _deg(spec: AlgebraSpec, deg) -> tuple[int, ...]:
    deg = tuple(int(c) for c in deg)
    if len(deg) != spec.ngens or any(c < 0 for c in deg):
        raise PreconditionError(f"bad multidegree {deg}")
    check_degree(sum(deg))
    return deg


def triple_quotient_dim(spec: AlgebraSpec, deg: tuple[int, ...]) -> int:
    return component_basis(spec, deg).dim - _triple_ideal(spec, deg)[0].dim


def commutator_image_dim(spec: AlgebraSpec, deg: tuple[int, ...]) -> int:
    """dim of the image of [A, A][deg] in A / A[[A,A],A]A."""
    ideal = _triple_ideal(spec, deg)[0]
    ech = ideal.copy()
    basis = component_basis(spec, deg)
    for g in lcs_component(spec, 2, deg).generators:
        ech.add(basis.vector(g))
    return ech.dim - ideal.dim


def tripcom_check(spec_or_n, deg) -> bool:
    spec = _algebra_spec(spec_or_n)
    deg = _deg(spec, deg)
    return triple_quotient_dim(spec, deg) == even_ra_dim(spec, deg)


def imd_check(spec_or_n, deg) -> bool:
    spec = _algebra_spec(spec_or_n)
    deg = _deg(spec, deg)
    return commutator_image_dim(spec, deg) == exact_even_ra_dim(spec, deg)


# -- first cyclic homology of a graded algebra, by brute force -----------------


def hc1_dim(spec_or_n, deg) -> int:
    """dim ker(wedge^2 A / W(A) -> [A, A]) at one multidegree."""
    spec = _algebra_spec(spec_or_n)
    deg = _deg(spec, deg)
    words: list[Word] = []
    for e in sub_multidegrees(deg):
        words += [w for w in words_of_multidegree(e) if spec.allowed(w)]
    order = {w: i for i, w in enumerate(sorted(words, key=lambda w: (len(w), w)))}
    by_deg: dict[tuple[int, ...], list[Word]] = {}
    for w in words:
        by_deg.setdefault(tuple(w.count(g) for g in range(spec.ngens)), []).append(w)

    def comp(e):
        return tuple(a - b for a, b in zip(deg, e))

    pairs = []
    for e, ws in by_deg.items():
        for a in ws:
            for b in by_deg.get(comp(e), []):
                if order[a] < order[b]:
                    pairs.append((a, b))
    pair_index = {pr: i for i, pr in enumerate(pairs)}

    def wedge_vec(a: Word, b: Word, c: Fraction, into: dict) -> None:
        if a == b or not spec.allowed(a) or not spec.allowed(b):
            return
        if order[a] > order[b]:
            a, b, c = b, a, -c
        i = pair_index[(a, b)]
        into[i] = into.get(i, 0) + c

    target = component_basis(spec, deg)
    bracket_rank = Echelon(target.dim)
    for a, b in pairs:
        vec: dict[int, Fraction] = {}
        for w, c in ((a + b, 1), (b + a, -1)):
            i = target.index.get(w)
            if i is not None:
                vec[i] = vec.get(i, 0) + c
        bracket_rank.add({i: c for i, c in vec.items() if c})
    kernel = len(pairs) - bracket_rank.dim

    w_span = Echelon(len(pairs))
    for e1 in by_deg:
        for e2 in by_deg:
            e3 = comp(tuple(x + y for x, y in zip(e1, e2)))
            if any(c < 0 for c in e3) or e3 not in by_deg:
                continue
            for a in by_deg[e1]:
                for b in by_deg[e2]:
                    for c in by_deg[e3]:
                        vec: dict = {}
                        wedge_vec(a + b, c, Fraction(1), vec)
                        wedge_vec(b + c, a, Fraction(1), vec)
                        wedge_vec(c + a, b, Fraction(1), vec)
                        vec = {i: v for i, v in vec.items() if v}
                        if vec:
                            w_span.add(vec)
    return kernel - w_span.dim
