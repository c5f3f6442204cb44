"""Graded pieces of the lower central series L_1 = A, L_k = [A, L_{k-1}].

``A`` is the free algebra on ``ngens`` generators, optionally modulo the
monomial relations x_i^{m_i} = 0.  Every component is computed inside a
single multidegree, where the words of that multidegree (in lexicographic
order, words containing a forbidden power dropped) index the columns.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from lcslab.errors import PreconditionError, check_degree
from lcslab.linalg import Echelon, GradedSubspace, solve_combination
from lcslab.ncalg import (
    NcPoly,
    Word,
    bracket,
    has_forbidden_run,
    multidegree,
    sub_multidegrees,
    words_of_multidegree,
)

Terms = dict[Word, Fraction]


@dataclass(frozen=True)
class AlgebraSpec:
    ngens: int
    relations: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.ngens < 1:
            raise PreconditionError("ngens must be positive")
        if self.relations is not None:
            rel = tuple(int(m) for m in self.relations)
            if len(rel) != self.ngens:
                raise PreconditionError(f"need {self.ngens} relation powers, got {len(rel)}")
            if any(m < 1 for m in rel):
                raise PreconditionError("relation powers must be >= 1")
            object.__setattr__(self, "relations", rel)

    @classmethod
    def free(cls, ngens: int) -> AlgebraSpec:
        return cls(ngens)

    def allowed(self, word: Word) -> bool:
        return self.relations is None or not has_forbidden_run(word, self.relations)


def _as_degree(spec: AlgebraSpec, d: Sequence[int]) -> tuple[int, ...]:
    d = tuple(int(c) for c in d)
    if len(d) != spec.ngens:
        raise PreconditionError(f"multidegree {d} has wrong length for {spec.ngens} generators")
    if any(c < 0 for c in d):
        raise PreconditionError(f"multidegree {d} has a negative entry")
    return d


class Basis:
    """Canonical monomial basis of the component A[d]."""

    def __init__(self, spec: AlgebraSpec, d: tuple[int, ...]):
        self.spec = spec
        self.degree = d
        self.words = tuple(w for w in words_of_multidegree(d) if spec.allowed(w))
        self.index = {w: i for i, w in enumerate(self.words)}

    @property
    def dim(self) -> int:
        return len(self.words)

    def vector(self, terms) -> dict[int, Fraction]:
        """Coordinates of a polynomial of this multidegree; forbidden words vanish."""
        items = terms.items() if hasattr(terms, "items") else terms
        out: dict[int, Fraction] = {}
        for w, c in items:
            i = self.index.get(w)
            if i is None:
                if multidegree(w, self.spec.ngens) != self.degree:
                    raise PreconditionError(f"word {w} is not of multidegree {self.degree}")
                continue
            out[i] = out.get(i, 0) + c
        return {i: c for i, c in out.items() if c}

    def poly(self, vec) -> NcPoly:
        return NcPoly({self.words[i]: c for i, c in vec.items()}, self.spec.ngens)


@lru_cache(maxsize=None)
def component_basis(spec: AlgebraSpec, d: tuple[int, ...]) -> Basis:
    return Basis(spec, d)


def _bracket_terms(m: Word, b: Terms) -> Terms:
    out: Terms = {}
    for w, c in b.items():
        left, right = m + w, w + m
        if left == right:
            continue
        out[left] = out.get(left, 0) + c
        out[right] = out.get(right, 0) - c
    return out


@dataclass(frozen=True, eq=False)
class LcsComponent:
    """L_k(A)[d] together with an independent generating set of brackets."""

    spec: AlgebraSpec
    k: int
    degree: tuple[int, ...]
    echelon: Echelon
    generators: tuple[Terms, ...]

    @property
    def dim(self) -> int:
        return self.echelon.dim

    @cached_property
    def space(self) -> GradedSubspace:
        return self.echelon.freeze()

    @property
    def basis(self) -> Basis:
        return component_basis(self.spec, self.degree)

    def generator_polys(self) -> list[NcPoly]:
        return [NcPoly(g, self.spec.ngens) for g in self.generators]

    def contains(self, p: NcPoly) -> bool:
        return self.echelon.contains(self.basis.vector(_homogeneous_terms(p, self.degree)))


def _homogeneous_terms(p: NcPoly, d: tuple[int, ...]) -> Terms:
    if p.is_zero():
        return {}
    degs = p.multidegrees()
    if degs != {d}:
        raise PreconditionError(f"polynomial has multidegrees {sorted(degs)}, expected {d}")
    return p.terms


def lcs_component(spec: AlgebraSpec, k: int, d: Sequence[int]) -> LcsComponent:
    if k < 1:
        raise PreconditionError("series index k must be >= 1")
    d = _as_degree(spec, d)
    check_degree(sum(d))
    return _lcs_component(spec, k, d)


@lru_cache(maxsize=None)
def _lcs_component(spec: AlgebraSpec, k: int, d: tuple[int, ...]) -> LcsComponent:
    basis = component_basis(spec, d)
    ech = Echelon(basis.dim)
    gens: list[Terms] = []
    if k == 1:
        for w in basis.words:
            ech.add({basis.index[w]: 1})
            gens.append({w: Fraction(1)})
        return LcsComponent(spec, k, d, ech, tuple(gens))
    if sum(d) < k:
        return LcsComponent(spec, k, d, ech, ())
    # L_k[d] sits inside L_{k-1}[d]; reaching that dimension means we are done
    bound = _lcs_component(spec, k - 1, d).dim
    zero = tuple(0 for _ in d)
    for e in sub_multidegrees(d):
        if e == zero or e == d:
            continue
        rest = tuple(a - b for a, b in zip(d, e))
        if sum(rest) < k - 1:
            continue
        lower = _lcs_component(spec, k - 1, rest)
        if not lower.generators:
            continue
        for m in words_of_multidegree(e):
            if not spec.allowed(m):
                continue
            for b in lower.generators:
                terms = _bracket_terms(m, b)
                vec = basis.vector(terms)
                if vec and ech.add(vec):
                    gens.append({w: c for w, c in terms.items() if c and spec.allowed(w)})
                    if ech.dim == bound:
                        return LcsComponent(spec, k, d, ech, tuple(gens))
    return LcsComponent(spec, k, d, ech, tuple(gens))


def lcs_dim(spec: AlgebraSpec, k: int, d: Sequence[int]) -> int:
    return lcs_component(spec, k, d).dim


def b_dim(spec: AlgebraSpec, k: int, d: Sequence[int]) -> int:
    """dim B_k[d] = dim L_k[d] - dim L_{k+1}[d]."""
    return lcs_dim(spec, k, d) - lcs_dim(spec, k + 1, d)


def total_degree_multidegrees(ngens: int, total: int):
    """All multidegrees of the given total degree, in lexicographic order."""
    def rec(prefix, left, slots):
        if slots == 1:
            yield prefix + (left,)
            return
        for c in range(left + 1):
            yield from rec(prefix + (c,), left - c, slots - 1)

    return list(rec((), total, ngens))


def b_dim_total(spec: AlgebraSpec, k: int, total: int) -> int:
    return sum(b_dim(spec, k, d) for d in total_degree_multidegrees(spec.ngens, total))


# -- the canonical basis of B_2 at strictly positive multidegree -------------


def permutation_order(n: int) -> list[tuple[int, ...]]:
    """P_n in recursive row order, as 1-based sequences (p(1), ..., p(n)).

    Starts with the identity; the next 2^k entries are the first 2^k composed
    on the right with the transposition (k+2, k+3).
    """
    if n < 2:
        raise PreconditionError("P_n needs n >= 2")
    perms = [tuple(range(1, n + 1))]
    for k in range(n - 2):
        a, b = k + 2, k + 3
        swap = {a: b, b: a}
        perms += [tuple(p[swap.get(i, i) - 1] for i in range(1, n + 1)) for p in perms]
    return perms


def canonical_b2_basis(n: int, d: Sequence[int]) -> list[NcPoly]:
    d = tuple(int(c) for c in d)
    if n < 2:
        raise PreconditionError("B_2 of a one-generator algebra is zero")
    if len(d) != n:
        raise PreconditionError(f"multidegree {d} has wrong length for {n} generators")
    if any(c < 1 for c in d):
        raise PreconditionError(
            f"multidegree {d} has a zero entry; drop unused generators and use a smaller n"
        )
    out = []
    for p in permutation_order(n):
        left = tuple(g - 1 for g in p[:-1] for _ in range(d[g - 1]))
        last = p[-1] - 1
        right = (last,) * d[last]
        out.append(bracket(NcPoly.word(left, n), NcPoly.word(right, n)))
    return out


def express_in_b2_basis(p: NcPoly, n: int, d: Sequence[int]) -> list[Fraction]:
    """Coefficients c with p - sum c_i basis_i in L_3[d], for p in L_2[d]."""
    spec = AlgebraSpec.free(n)
    d = _as_degree(spec, d)
    if p.ngens != n:
        raise PreconditionError(f"polynomial has {p.ngens} generators, expected {n}")
    basis_polys = canonical_b2_basis(n, d)
    l2 = lcs_component(spec, 2, d)
    if not l2.contains(p):
        raise PreconditionError("element is not in L_2 at this multidegree")
    l3 = lcs_component(spec, 3, d)
    cb = l2.basis
    residuals = [l3.echelon.reduce(cb.vector(b.terms)) for b in basis_polys]
    target = l3.echelon.reduce(cb.vector(_homogeneous_terms(p, d)))
    coeffs = solve_combination(residuals, target, cb.dim)
    if coeffs is None:  # pragma: no cover - would contradict the spanning property
        raise PreconditionError("element is not spanned by the canonical basis modulo L_3")
    return coeffs


def b2_basis_rank(n: int, d: Sequence[int]) -> int:
    """Rank of the canonical brackets modulo L_3[d]."""
    spec = AlgebraSpec.free(n)
    d = _as_degree(spec, d)
    l3 = lcs_component(spec, 3, d)
    cb = l3.basis
    ech = l3.echelon.copy()
    start = ech.dim
    for b in canonical_b2_basis(n, d):
        ech.add(cb.vector(b.terms))
    return ech.dim - start


def rank_modulo_next(spec: AlgebraSpec, k: int, d: Sequence[int], polys: Sequence[NcPoly]) -> int:
    """Rank of elements of L_k[d] modulo L_{k+1}[d]."""
    d = _as_degree(spec, d)
    lk = lcs_component(spec, k, d)
    if not all(lk.contains(p) for p in polys):
        raise PreconditionError(f"elements must lie in L_{k}{d}")
    nxt = lcs_component(spec, k + 1, d)
    ech = nxt.echelon.copy()
    start = ech.dim
    for p in polys:
        ech.add(lk.basis.vector(_homogeneous_terms(p, d)))
    return ech.dim - start


# -- the two-sided ideal generated by triple commutators --------------------


def triple_ideal_component(spec: AlgebraSpec, d: Sequence[int]) -> GradedSubspace:
    d = _as_degree(spec, d)
    check_degree(sum(d))
    return _triple_ideal(spec, d)[0].freeze()


@lru_cache(maxsize=None)
def _triple_ideal(spec: AlgebraSpec, d: tuple[int, ...]) -> tuple[Echelon, tuple[Terms, ...]]:
    # J[d] = L_3[d] + sum_i (x_i J[d - e_i] + J[d - e_i] x_i)
    basis = component_basis(spec, d)
    ech = Echelon(basis.dim)
    gens: list[Terms] = []

    def offer(terms: Terms) -> None:
        vec = basis.vector(terms)
        if vec and ech.add(vec):
            gens.append({w: c for w, c in terms.items() if spec.allowed(w)})

    if sum(d) < 3:
        return ech, ()
    for g in _lcs_component(spec, 3, d).generators:
        offer(g)
    for i, c in enumerate(d):
        if c == 0 or ech.dim == basis.dim:
            continue
        rest = d[:i] + (c - 1,) + d[i + 1:]
        for g in _triple_ideal(spec, rest)[1]:
            offer({(i,) + w: v for w, v in g.items()})
            offer({w + (i,): v for w, v in g.items()})
    return ech, tuple(gens)


# -- the extension witness in B_{2,4} ----------------------------------------


def nonsplit_witness_terms() -> dict[str, NcPoly]:
    x, y = NcPoly.gen(0, 2), NcPoly.gen(1, 2)
    b = bracket
    first = -3 * b(x, b(x, b(x, y * y)))
    second = b(b(x, y), b(x * x, y)) - 2 * b(y, b(x * x, b(x, y)))
    third = b(b(x, y), b(x * x, y)) + 2 * b(x, b(y, b(x * x, y))) + 3 * b(x, b(x, b(x, y * y)))
    target = 4 * b(b(x, y), b(x * x, y))
    return {"first": first, "second": second, "third": third, "target": target}


def nonsplit_witness_check() -> bool:
    """The three W_2-images sum to 4[[x,y],[x^2,y]], which is nonzero modulo L_5."""
    t = nonsplit_witness_terms()
    identity = t["first"] + t["second"] + t["third"] == t["target"]
    spec = AlgebraSpec.free(2)
    nonzero = not lcs_component(spec, 5, (3, 2)).contains(t["target"])
    return identity and nonzero


def clear_caches() -> None:
    """Drop memoized components (for timing from a cold start)."""
    _lcs_component.cache_clear()
    _triple_ideal.cache_clear()
    component_basis.cache_clear()
    words_of_multidegree.cache_clear()
