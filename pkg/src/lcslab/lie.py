"""Root-system counts and Hilbert-series formulas for B_2 of invariant algebras, plus
closed formulas for hypersurfaces and curves."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Mapping, Sequence

from lcslab.errors import PreconditionError

MAX_DP_STATES = 2_000_000
MAX_BOX = 10**8


class WeightBoxOverflow(PreconditionError):
    pass


class ZPoly:
    """Integer polynomial in z with trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    def __add__(self, other: ZPoly) -> ZPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return ZPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> ZPoly:
        return ZPoly([-x for x in self.coeffs])

    def __sub__(self, other: ZPoly) -> ZPoly:
        return self + (-other)

    def __mul__(self, other: ZPoly) -> ZPoly:
        if not self.coeffs or not other.coeffs:
            return ZPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return ZPoly(out)

    def divexact(self, divisor: ZPoly) -> ZPoly:
        """Quotient by a monic-up-to-sign divisor; raises if the division leaves a remainder."""
        if not divisor.coeffs:
            raise PreconditionError("division by zero polynomial")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise PreconditionError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        q = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = rem[i + dd] * lead
            q[i] = c
            for j, y in enumerate(divisor.coeffs):
                rem[i + j] -= c * y
        if any(rem):
            raise PreconditionError("polynomial division is not exact")
        return ZPoly(q)

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ZPoly({list(self.coeffs)})"


Z = ZPoly([0, 1])
ONE = ZPoly([1])


@dataclass(frozen=True)
class RootSystem:
    name: str
    roots: tuple[tuple[int, ...], ...]
    weyl_order: int
    degrees: tuple[int, ...]

    def __post_init__(self):
        rs = set(self.roots)
        if len(rs) != len(self.roots):
            raise PreconditionError("repeated roots")
        if any(tuple(-x for x in r) not in rs for r in self.roots):
            raise PreconditionError("roots must be closed under negation")
        if len({len(r) for r in self.roots}) > 1:
            raise PreconditionError("roots must live in one lattice")
        if math.prod(self.degrees) != self.weyl_order:
            raise PreconditionError("product of the invariant degrees must equal |W|")


def type_A(r: int) -> RootSystem:
    """sl(r+1): roots e_i - e_j in Z^{r+1}."""
    if r < 1:
        raise PreconditionError("rank must be >= 1")
    n = r + 1
    roots = []
    for i, j in permutations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        roots.append(tuple(v))
    return RootSystem(f"A{r}", tuple(sorted(roots)), math.factorial(n), tuple(range(2, n + 1)))


BUILTIN = {f"A{r}": type_A(r) for r in range(1, 5)}


def root_system(name: str) -> RootSystem:
    try:
        return BUILTIN[name.upper()]
    except KeyError:
        raise PreconditionError(f"unknown root system {name!r}; built-ins: {sorted(BUILTIN)}") from None


def _subset_sum_table(roots: Sequence[tuple[int, ...]]) -> dict[tuple[int, ...], list[int]]:
    """weight -> coefficients of z^|S| over subsets S with that vector sum."""
    dim = len(roots[0]) if roots else 0
    lo = [sum(min(r[i], 0) for r in roots) for i in range(dim)]
    hi = [sum(max(r[i], 0) for r in roots) for i in range(dim)]
    if math.prod(h - l + 1 for h, l in zip(hi, lo)) > MAX_BOX:
        raise WeightBoxOverflow("weight box too large for the subset-sum table")
    table: dict[tuple[int, ...], list[int]] = {(0,) * dim: [1]}
    for r in roots:
        new = {k: list(v) for k, v in table.items()}
        for w, poly in table.items():
            key = tuple(a + b for a, b in zip(w, r))
            tgt = new.setdefault(key, [])
            if len(tgt) < len(poly) + 1:
                tgt.extend([0] * (len(poly) + 1 - len(tgt)))
            for i, c in enumerate(poly):
                tgt[i + 1] += c
        table = new
        if len(table) > MAX_DP_STATES:
            raise WeightBoxOverflow("subset-sum table exceeded its state limit")
    return table


def f_V_poly(R: RootSystem, chi_V: Mapping[tuple[int, ...], int]) -> ZPoly:
    """Constant term of chi_{V*} * prod (1 + z e^alpha)."""
    table = _subset_sum_table(R.roots)
    out = ZPoly()
    for mu, mult in chi_V.items():
        mu = tuple(mu)
        if R.roots and len(mu) != len(R.roots[0]):
            raise PreconditionError("weight has the wrong length")
        out = out + ZPoly([mult * c for c in table.get(mu, [])])
    return out


def zero_sum_poly(R: RootSystem) -> ZPoly:
    """sum over zero-sum subsets S of R of z^|S|."""
    dim = len(R.roots[0])
    return f_V_poly(R, {(0,) * dim: 1})


def zero_sum_poly_naive(R: RootSystem) -> ZPoly:
    if len(R.roots) > 20:
        raise PreconditionError("naive enumeration is limited to 20 roots")
    dim = len(R.roots[0])
    out = [0] * (len(R.roots) + 1)
    for k in range(len(R.roots) + 1):
        for S in combinations(R.roots, k):
            if all(sum(r[i] for r in S) == 0 for i in range(dim)):
                out[k] += 1
    return ZPoly(out)


def nu(R: RootSystem) -> int:
    return zero_sum_poly(R)(1)


def h_poly(R: RootSystem) -> ZPoly:
    """prod (z^{2 d_i} - 1)/(z^2 - 1)."""
    out = ONE
    z2m1 = ZPoly([-1, 0, 1])
    for d in R.degrees:
        if d < 1:
            raise PreconditionError("invariant degrees must be positive")
        out = out * ZPoly([-1] + [0] * (2 * d - 1) + [1]).divexact(z2m1)
    return out


def e_poly(F: ZPoly, H: ZPoly) -> ZPoly:
    """z (F - H) / (1 + z)."""
    return Z * (F - H).divexact(ZPoly([1, 1]))


@dataclass(frozen=True)
class InvariantB2:
    nu: int
    weyl: int
    dim_b2_invariant: int
    E: ZPoly


def b2_invariant(R: RootSystem) -> InvariantB2:
    """dim B_2(A)^G as (E(1) + E(-1))/2, cross-checked against (nu - |W|)/4."""
    F = zero_sum_poly(R)
    E = e_poly(F, h_poly(R))
    twice = E(1) + E(-1)
    n = F(1)
    if twice % 2 or (n - R.weyl_order) % 4 or twice // 2 != (n - R.weyl_order) // 4:
        raise AssertionError("inconsistent Hilbert series for the invariant count")
    return InvariantB2(n, R.weyl_order, twice // 2, E)


# -- hypersurfaces and curves --------------------------------------------------


def _pos(name: str, v: int) -> None:
    if not isinstance(v, int) or v < 1:
        raise PreconditionError(f"{name} must be a positive integer")


def euler_char_recursive(d: int, n: int) -> int:
    _pos("d", d)
    _pos("n", n)
    chi = d
    for _ in range(n - 1):
        chi = d - (d - 1) * chi
    return chi


def euler_char(d: int, n: int) -> int:
    """Euler characteristic of a smooth affine hypersurface of degree d in C^n."""
    closed = 1 - (1 - d) ** n
    if closed != euler_char_recursive(d, n):
        raise AssertionError("closed form disagrees with the recurrence")
    return closed


def b2_hypersurface(d: int, n: int) -> int:
    _pos("d", d)
    _pos("n", n)
    return (d - 1) ** n if n % 2 == 0 else 0


def b2_plane_curve(d: int) -> int:
    _pos("d", d)
    return (d - 1) ** 2


def b2_superelliptic(m: int, ps: Sequence[int]) -> int:
    """y^m = prod (x - a_i)^{p_i}: m(r - 1) + gcd(p_1, ..., p_r, m)."""
    _pos("m", m)
    if not ps:
        raise PreconditionError("need at least one root multiplicity")
    for p in ps:
        _pos("p_i", p)
    return m * (len(ps) - 1) + math.gcd(m, *ps)
