"""Exact row reduction over Q for subspaces of canonically indexed components.

Vectors are either dense sequences of length ``ambient_dim`` or sparse
mappings ``column -> value``.  Internally rows are sparse dicts keyed by
column, with arithmetic in ``gmpy2.mpq`` (falling back to ``Fraction``).
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import cached_property

from lcslab.errors import PreconditionError

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Row = dict[int, object]


def _to_sparse(v, ambient_dim: int) -> Row:
    if isinstance(v, Mapping):
        out = {}
        for c, x in v.items():
            if not 0 <= c < ambient_dim:
                raise PreconditionError(f"column {c} outside ambient dimension {ambient_dim}")
            if x:
                out[c] = _Q(x)
        return out
    if len(v) != ambient_dim:
        raise PreconditionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    return {c: _Q(x) for c, x in enumerate(v) if x}


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


class Echelon:
    """Incrementally built echelon basis; each row's pivot is its least column.

    Rows are normalised so the pivot entry is 1 and are never changed once
    inserted, so insertion order fully determines the result.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.rows: dict[int, Row] = {}

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, v: Row) -> Row:
        rows = self.rows
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = v.get(c)
            if not a:
                continue
            for col, x in rows[c].items():
                nv = v.get(col, 0) - a * x
                if nv:
                    if col not in v and col in rows:
                        heapq.heappush(heap, col)
                    v[col] = nv
                else:
                    v.pop(col, None)
        return v

    def reduce(self, v) -> Row:
        """Residual of ``v`` after eliminating every pivot column."""
        return self._reduce(_to_sparse(v, self.ambient_dim))

    def add(self, v) -> bool:
        """Insert ``v``; return whether it was independent of the current rows."""
        if self.dim == self.ambient_dim:
            return False
        r = self.reduce(v)
        if not r:
            return False
        lead = min(r)
        inv = 1 / r[lead]
        self.rows[lead] = {c: x * inv for c, x in r.items()}
        return True

    def add_row_unchecked(self, r: Row) -> None:
        lead = min(r)
        inv = 1 / r[lead]
        self.rows[lead] = {c: x * inv for c, x in r.items()}

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def freeze(self) -> GradedSubspace:
        return GradedSubspace(self.ambient_dim, dict(self.rows))

    def copy(self) -> Echelon:
        e = Echelon(self.ambient_dim)
        e.rows = dict(self.rows)
        return e


class GradedSubspace:
    """Immutable subspace of Q^ambient_dim with a reduced row echelon basis."""

    __slots__ = ("ambient_dim", "_echelon", "__dict__")

    def __init__(self, ambient_dim: int, echelon_rows: dict[int, Row]):
        self.ambient_dim = ambient_dim
        self._echelon = echelon_rows

    @property
    def dim(self) -> int:
        return len(self._echelon)

    @property
    def pivot_cols(self) -> tuple[int, ...]:
        return tuple(sorted(self._echelon))

    @cached_property
    def _rref_rows(self) -> dict[int, Row]:
        # back-substitute from the last pivot upwards
        out: dict[int, Row] = {}
        pivots = sorted(self._echelon, reverse=True)
        for p in pivots:
            row = dict(self._echelon[p])
            for c in sorted(c for c in row if c != p and c in out):
                a = row.get(c)
                if not a:
                    continue
                for col, x in out[c].items():
                    nv = row.get(col, 0) - a * x
                    if nv:
                        row[col] = nv
                    else:
                        row.pop(col, None)
            out[p] = row
        return out

    @property
    def rref(self) -> list[list[Fraction]]:
        """Dense RREF rows, ordered by pivot column."""
        rows = []
        for p in self.pivot_cols:
            dense = [Fraction(0)] * self.ambient_dim
            for c, x in self._rref_rows[p].items():
                dense[c] = _frac(x)
            rows.append(dense)
        return rows

    def sparse_rows(self) -> list[dict[int, Fraction]]:
        return [
            {c: _frac(x) for c, x in sorted(self._rref_rows[p].items())} for p in self.pivot_cols
        ]

    def echelon(self) -> Echelon:
        e = Echelon(self.ambient_dim)
        e.rows = dict(self._echelon)
        return e

    def reduce(self, v) -> dict[int, Fraction]:
        r = self.echelon().reduce(v)
        return {c: _frac(x) for c, x in sorted(r.items())}

    def contains(self, v) -> bool:
        return not self.echelon().reduce(v)

    def coordinates(self, v) -> list[Fraction]:
        """Coefficients of ``v`` against the RREF rows (in pivot order)."""
        sv = _to_sparse(v, self.ambient_dim)
        if self.echelon().reduce(dict(sv)):
            raise PreconditionError("vector is not in the subspace")
        return [_frac(sv.get(p, 0)) for p in self.pivot_cols]

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rref_rows == other._rref_rows

    def __repr__(self) -> str:
        return f"GradedSubspace(dim={self.dim}, ambient_dim={self.ambient_dim})"


def span(vectors: Iterable, ambient_dim: int) -> GradedSubspace:
    e = Echelon(ambient_dim)
    for v in vectors:
        e.add(v)
    return e.freeze()


def contains(S: GradedSubspace, v) -> bool:
    return S.contains(v)


def _same_ambient(S: GradedSubspace, T: GradedSubspace) -> None:
    if S.ambient_dim != T.ambient_dim:
        raise PreconditionError(f"ambient mismatch: {S.ambient_dim} vs {T.ambient_dim}")


def subspace_sum(S: GradedSubspace, T: GradedSubspace) -> GradedSubspace:
    _same_ambient(S, T)
    e = S.echelon()
    for row in T._echelon.values():
        e.add(dict(row))
    return e.freeze()


def is_subspace(T: GradedSubspace, S: GradedSubspace) -> bool:
    _same_ambient(S, T)
    e = S.echelon()
    return all(not e.reduce(dict(row)) for row in T._echelon.values())


def quotient_dim(S: GradedSubspace, T: GradedSubspace) -> int:
    """dim S/T; requires T to be contained in S."""
    if not is_subspace(T, S):
        raise PreconditionError("quotient_dim needs T contained in S")
    return S.dim - T.dim


def intersection_dim(S: GradedSubspace, T: GradedSubspace) -> int:
    return S.dim + T.dim - subspace_sum(S, T).dim


def rank(vectors: Iterable, ambient_dim: int) -> int:
    return span(vectors, ambient_dim).dim


def solve_combination(
    vectors: Sequence, target, ambient_dim: int
) -> list[Fraction] | None:
    """Coefficients c with sum c_i vectors_i == target, or None if none exist.

    The vectors must be linearly independent.
    """
    # augment each vector with a unit tag column so the reduction records the combination
    k = len(vectors)
    big = ambient_dim + k
    e = Echelon(big)
    for i, v in enumerate(vectors):
        sv = _to_sparse(v, ambient_dim)
        sv[ambient_dim + i] = _Q(1)
        if not e.add(sv):
            raise PreconditionError("solve_combination needs independent vectors")
    t = _to_sparse(target, ambient_dim)
    r = e.reduce(t)
    if any(c < ambient_dim for c in r):
        return None
    # the residual is -(sum c_i e_{tag_i}) restricted to tag columns
    return [_frac(-r.get(ambient_dim + i, 0)) for i in range(k)]


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise PreconditionError("determinant needs a square matrix")
    m = [[Fraction(x) for x in r] for r in matrix]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det
