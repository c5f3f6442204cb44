"""Bigraded character series of W_2-modules and their decomposition.

A series is stored as its coefficients s^a t^b for a + b <= truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from lcslab.errors import LcsLabError, PreconditionError, check_degree
from lcslab.lcs import AlgebraSpec, b_dim

SAFETY_MARGIN = 2


@dataclass(frozen=True)
class CharSeries:
    truncation: int
    coeffs: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.truncation < 0:
            raise PreconditionError("truncation must be >= 0")
        clean = {}
        for (a, b), c in self.coeffs.items():
            if a < 0 or b < 0 or a + b > self.truncation:
                raise PreconditionError(f"monomial s^{a} t^{b} outside the truncation")
            if c:
                clean[(a, b)] = int(c)
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, ab: tuple[int, int]) -> int:
        return self.coeffs.get(ab, 0)

    def _aligned(self, other: CharSeries) -> int:
        if not isinstance(other, CharSeries):
            raise TypeError("expected a CharSeries")
        return min(self.truncation, other.truncation)

    def truncate(self, T: int) -> CharSeries:
        return CharSeries(T, {k: v for k, v in self.coeffs.items() if sum(k) <= T})

    def __add__(self, other: CharSeries) -> CharSeries:
        T = self._aligned(other)
        out = dict(self.truncate(T).coeffs)
        for k, v in other.truncate(T).coeffs.items():
            out[k] = out.get(k, 0) + v
        return CharSeries(T, out)

    def __sub__(self, other: CharSeries) -> CharSeries:
        return self + other.scale(-1)

    def scale(self, c: int) -> CharSeries:
        return CharSeries(self.truncation, {k: c * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, CharSeries):
            return NotImplemented
        T = self._aligned(other)
        return self.truncate(T).coeffs == other.truncate(T).coeffs

    def swapped(self) -> CharSeries:
        """The image under s <-> t."""
        return CharSeries(self.truncation, {(b, a): v for (a, b), v in self.coeffs.items()})

    def times_one_minus_s_t(self) -> dict[tuple[int, int], int]:
        """(1 - s)(1 - t) * self, exact for a + b <= truncation."""
        out: dict[tuple[int, int], int] = {}
        for (a, b), v in self.coeffs.items():
            for da, db, sgn in ((0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)):
                key = (a + da, b + db)
                if sum(key) <= self.truncation:
                    out[key] = out.get(key, 0) + sgn * v
        return {k: v for k, v in out.items() if v}


def _check_diagram(p: int, k: int) -> None:
    if not (isinstance(p, int) and isinstance(k, int)) or not p >= k >= 1:
        raise PreconditionError(f"invalid two-row diagram ({p}, {k}): need p >= k >= 1")


def char_F(p: int, k: int, truncation: int) -> CharSeries:
    """s^k t^k (t^{p-k} + ... + s^{p-k}) / ((1 - s)(1 - t)), truncated."""
    _check_diagram(p, k)
    coeffs = {}
    for a in range(truncation + 1):
        for b in range(truncation + 1 - a):
            # monomials s^{k+i} t^{p-i} with k+i <= a and p-i <= b
            n = sum(1 for i in range(p - k + 1) if a >= k + i and b >= p - i)
            if n:
                coeffs[(a, b)] = n
    return CharSeries(truncation, coeffs)


def char_B(k: int, truncation: int) -> CharSeries:
    """Character of B_k of the free algebra on two generators."""
    if k < 1:
        raise PreconditionError("k must be >= 1")
    check_degree(truncation)
    spec = AlgebraSpec.free(2)
    coeffs = {}
    for a in range(truncation + 1):
        for b in range(truncation + 1 - a):
            dim = b_dim(spec, k, (a, b))
            if dim:
                coeffs[(a, b)] = dim
    return CharSeries(truncation, coeffs)


class DecompositionError(LcsLabError):
    pass


@dataclass(frozen=True)
class Decomposition:
    multiplicities: dict[tuple[int, int], int]
    certified_up_to: int  # diagrams with p + k <= this are certified

    def as_list(self) -> list[dict]:
        return [{"diagram": [p, k], "mult": m} for (p, k), m in sorted(self.multiplicities.items())]


def decompose(series: CharSeries, margin: int = SAFETY_MARGIN) -> Decomposition:
    """Write ``series`` as a nonnegative combination of char_F(p, k) on the reliable region.

    Scans (1 - s)(1 - t) * series in order of total degree, then degree in t,
    so the first surviving monomial of char_F(p, k) is s^p t^k.
    """
    if margin < 0:
        raise PreconditionError("margin must be >= 0")
    reliable = series.truncation - margin
    if reliable < 0:
        raise PreconditionError("truncation smaller than the safety margin")
    rem = {k: v for k, v in series.times_one_minus_s_t().items() if sum(k) <= reliable}
    mults: dict[tuple[int, int], int] = {}
    while rem:
        (a, b) = min(rem, key=lambda ab: (ab[0] + ab[1], ab[1]))
        c = rem[(a, b)]
        if c < 0:
            raise DecompositionError(f"negative multiplicity {c} at diagram ({a}, {b})")
        if b < 1 or a < b:
            raise DecompositionError(
                f"monomial s^{a} t^{b} does not lead any two-row diagram; remainder is not zero"
            )
        mults[(a, b)] = c
        # (1 - s)(1 - t) char_F(a, b) = sum_i s^{b+i} t^{a-i}
        for i in range(a - b + 1):
            key = (b + i, a - i)
            v = rem.get(key, 0) - c
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return Decomposition(mults, reliable)
