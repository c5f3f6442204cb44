"""Noncommutative polynomials over Q in a fixed number of generators.

Words are tuples of 0-based generator indices; the empty tuple is the unit.
The JSON wire format uses 1-based indices and ``"p/q"`` coefficient strings.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb

from lcslab.errors import PreconditionError

Word = tuple[int, ...]


def word_key(word: Word) -> tuple[int, Word]:
    """Sort key for the canonical degree-lexicographic order."""
    return (len(word), word)


def multidegree(word: Word, ngens: int) -> tuple[int, ...]:
    counts = [0] * ngens
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def words_of_multidegree(d: tuple[int, ...]) -> tuple[Word, ...]:
    """All words with the given letter counts, in lexicographic order."""
    total = sum(d)
    out: list[Word] = []
    counts = list(d)
    prefix: list[int] = []

    def rec() -> None:
        if len(prefix) == total:
            out.append(tuple(prefix))
            return
        for g, c in enumerate(counts):
            if c:
                counts[g] -= 1
                prefix.append(g)
                rec()
                prefix.pop()
                counts[g] += 1

    rec()
    return tuple(out)


def count_words(d: Sequence[int]) -> int:
    n, out = 0, 1
    for c in d:
        n += c
        out *= comb(n, c)
    return out


def sub_multidegrees(d: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Every e with 0 <= e <= d componentwise."""
    return itertools.product(*(range(c + 1) for c in d))


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use int, Fraction or 'p/q' strings")
    return Fraction(c)


class NcPoly:
    """Sparse element of the free algebra Q<x_0, ..., x_{n-1}>.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "ngens", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None, ngens: int = 2):
        if ngens < 1:
            raise PreconditionError("ngens must be positive")
        clean: dict[Word, Fraction] = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            for letter in w:
                if not 0 <= letter < ngens:
                    raise PreconditionError(f"letter {letter} out of range for {ngens} generators")
            c = _coerce(c)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        self._terms = clean
        self.ngens = ngens
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Word, Fraction], ngens: int) -> NcPoly:
        obj = object.__new__(cls)
        obj._terms = terms
        obj.ngens = ngens
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, i: int, ngens: int) -> NcPoly:
        return cls({(i,): 1}, ngens)

    @classmethod
    def one(cls, ngens: int) -> NcPoly:
        return cls({(): 1}, ngens)

    @classmethod
    def zero(cls, ngens: int) -> NcPoly:
        return cls._raw({}, ngens)

    @classmethod
    def word(cls, word: Iterable[int], ngens: int, coeff=1) -> NcPoly:
        return cls({tuple(word): coeff}, ngens)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {multidegree(w, self.ngens) for w in self._terms}

    def multidegree(self) -> tuple[int, ...]:
        """The common multidegree of a nonzero homogeneous element."""
        degs = self.multidegrees()
        if len(degs) != 1:
            raise PreconditionError(f"polynomial is not multihomogeneous: {sorted(degs)}")
        return degs.pop()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: NcPoly) -> None:
        if not isinstance(other, NcPoly):
            raise TypeError(f"expected NcPoly, got {type(other).__name__}")
        if other.ngens != self.ngens:
            raise PreconditionError(f"generator count mismatch: {self.ngens} vs {other.ngens}")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly({(): other}, self.ngens)
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly._raw(out, self.ngens)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw({w: -c for w, c in self._terms.items()}, self.ngens)

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            other = NcPoly({(): other}, self.ngens)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> NcPoly:
        c = _coerce(c)
        if not c:
            return NcPoly.zero(self.ngens)
        return NcPoly._raw({w: c * v for w, v in self._terms.items()}, self.ngens)

    def __mul__(self, other):
        if not isinstance(other, NcPoly):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> NcPoly:
        if k < 0:
            raise PreconditionError("negative powers are undefined")
        out = NcPoly.one(self.ngens)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, NcPoly):
            return self.ngens == other.ngens and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == NcPoly({(): other}, self.ngens)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ngens, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NcPoly({self.pretty()!r}, ngens={self.ngens})"

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or default_names(self.ngens)
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(_power_runs(w, names)) if w else ""
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _power_runs(word: Word, names: Sequence[str]) -> list[str]:
    out = []
    for g, run in itertools.groupby(word):
        k = len(list(run))
        out.append(names[g] if k == 1 else f"{names[g]}^{k}")
    return out


def default_names(ngens: int) -> list[str]:
    if ngens <= 3:
        return ["x", "y", "z"][:ngens]
    return [f"x{i + 1}" for i in range(ngens)]


def mul(p: NcPoly, q: NcPoly) -> NcPoly:
    p._check(q)
    out: dict[Word, Fraction] = {}
    for w1, c1 in p._terms.items():
        for w2, c2 in q._terms.items():
            w = w1 + w2
            v = out.get(w, 0) + c1 * c2
            if v:
                out[w] = v
            else:
                del out[w]
    return NcPoly._raw(out, p.ngens)


def bracket(p: NcPoly, q: NcPoly) -> NcPoly:
    return mul(p, q) - mul(q, p)


def ad_power(a: NcPoly, times: int, b: NcPoly) -> NcPoly:
    for _ in range(times):
        b = bracket(a, b)
    return b


def _derivation(p: NcPoly, image: dict[int, NcPoly]) -> NcPoly:
    """Extend a map on generators to a derivation; unlisted generators go to 0."""
    out = NcPoly.zero(p.ngens)
    for w, c in p._terms.items():
        for pos, letter in enumerate(w):
            img = image.get(letter)
            if img is None or img.is_zero():
                continue
            left = NcPoly._raw({w[:pos]: c}, p.ngens)
            right = NcPoly._raw({w[pos + 1:]: Fraction(1)}, p.ngens)
            out = out + mul(mul(left, img), right)
    return out


def _check_index(i: int, ngens: int) -> None:
    if not 0 <= i < ngens:
        raise PreconditionError(f"generator index {i} out of range for {ngens} generators")


def partial(p: NcPoly, gen: int) -> NcPoly:
    """The derivation sending x_gen to 1 and every other generator to 0."""
    _check_index(gen, p.ngens)
    out: dict[Word, Fraction] = {}
    for w, c in p._terms.items():
        for pos, letter in enumerate(w):
            if letter == gen:
                v = w[:pos] + w[pos + 1:]
                s = out.get(v, 0) + c
                if s:
                    out[v] = s
                else:
                    del out[v]
    return NcPoly._raw(out, p.ngens)


def gl_action(i: int, j: int, p: NcPoly) -> NcPoly:
    """E_ij acting as the derivation x_j -> x_i."""
    _check_index(i, p.ngens)
    _check_index(j, p.ngens)
    out: dict[Word, Fraction] = {}
    for w, c in p._terms.items():
        for pos, letter in enumerate(w):
            if letter == j:
                v = w[:pos] + (i,) + w[pos + 1:]
                s = out.get(v, 0) + c
                if s:
                    out[v] = s
                else:
                    del out[v]
    return NcPoly._raw(out, p.ngens)


def derivation(p: NcPoly, image: Mapping[int, NcPoly]) -> NcPoly:
    """Apply the derivation determined by ``image`` (generator -> polynomial)."""
    for g in image:
        _check_index(g, p.ngens)
    return _derivation(p, dict(image))


# -- monomial relations x_i^{m_i} = 0 ---------------------------------------


def has_forbidden_run(word: Word, powers: Sequence[int]) -> bool:
    """True iff some x_i^{m_i} occurs as a contiguous subword."""
    for g, run in itertools.groupby(word):
        if sum(1 for _ in run) >= powers[g]:
            return True
    return False


def monomial_quotient_reduce(p: NcPoly, powers: Sequence[int]) -> NcPoly:
    if len(powers) != p.ngens:
        raise PreconditionError(f"need {p.ngens} relation powers, got {len(powers)}")
    if any(m < 1 for m in powers):
        raise PreconditionError("relation powers must be positive")
    return NcPoly._raw(
        {w: c for w, c in p._terms.items() if not has_forbidden_run(w, powers)}, p.ngens
    )


# -- named elements from the B_{2,m} analysis (x = x_0, y = x_1) ------------


def _xy():
    return NcPoly.gen(0, 2), NcPoly.gen(1, 2)


def build_b(l: int, i: int, j: int, k: int) -> NcPoly:
    """ad_x^i ad_y ad_x^j ad_{x^k} (y^l)."""
    if min(i, j) < 0 or l < 1 or k < 1:
        raise PreconditionError("build_b needs i, j >= 0 and l, k >= 1")
    x, y = _xy()
    inner = bracket(x ** k, y ** l)
    return ad_power(x, i, bracket(y, ad_power(x, j, inner)))


def build_b2(l: int, i: int, j: int) -> NcPoly:
    """ad_x^i ad_{x^j} (y^l)."""
    if i < 0 or l < 1 or j < 1:
        raise PreconditionError("build_b2 needs i >= 0 and l, j >= 1")
    x, y = _xy()
    return ad_power(x, i, bracket(x ** j, y ** l))


def build_c(a: int, b: int, i: int, j: int) -> NcPoly:
    """ad_x^a ad_y^b ad_{x^i} (y^j)."""
    if min(a, b) < 0 or i < 1 or j < 1:
        raise PreconditionError("build_c needs a, b >= 0 and i, j >= 1")
    x, y = _xy()
    return ad_power(x, a, ad_power(y, b, bracket(x ** i, y ** j)))


# -- JSON wire format -------------------------------------------------------


def _fmt_coeff(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def to_json_obj(p: NcPoly) -> list[dict]:
    return [{"word": [g + 1 for g in w], "coeff": _fmt_coeff(c)} for w, c in p.sorted_terms()]


def to_json(p: NcPoly) -> str:
    return json.dumps(to_json_obj(p))


def from_json_obj(obj: list, ngens: int) -> NcPoly:
    if not isinstance(obj, list):
        raise PreconditionError("NcPoly JSON must be an array of {word, coeff} objects")
    terms: dict[Word, Fraction] = {}
    for entry in obj:
        try:
            word = tuple(int(g) - 1 for g in entry["word"])
            coeff = Fraction(str(entry["coeff"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"bad NcPoly term {entry!r}: {exc}") from None
        terms[word] = terms.get(word, 0) + coeff
    return NcPoly(terms, ngens)


def from_json(text: str, ngens: int) -> NcPoly:
    return from_json_obj(json.loads(text), ngens)
