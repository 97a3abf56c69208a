"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`.  Matrices act on column
vectors, so ``f.apply(v)`` is ``f @ v``.  Subspaces are stored by their reduced
row-echelon basis, which makes equality of subspaces structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    """Raised when vectors or matrices of incompatible sizes are combined."""


class NonInvariantSubspace(ValueError):
    """Raised when a map is asked to act on a subquotient it does not preserve."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use ints, strings or Fractions")
    return Fraction(x)


def vec(entries: Iterable) -> Vector:
    return tuple(to_fraction(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    # in-place Gauss-Jordan; returns nonzero rows and pivot columns
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot_row = rows[r]
        inv = 1 / pivot_row[c]
        if inv != 1:
            for j in range(c, ncols):
                pivot_row[j] *= inv
        for i in range(nrows):
            if i != r:
                factor = rows[i][c]
                if factor:
                    row = rows[i]
                    for j in range(c, ncols):
                        if pivot_row[j]:
                            row[j] -= factor * pivot_row[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _check_lengths(vectors: Sequence[Sequence], ambient: int | None) -> int:
    lengths = {len(v) for v in vectors}
    if ambient is not None:
        lengths.add(ambient)
    if len(lengths) > 1:
        raise DimensionMismatch(f"vectors of differing lengths {sorted(lengths)}")
    if not lengths:
        raise DimensionMismatch("cannot infer the ambient dimension of an empty list")
    return lengths.pop()


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    work = [[to_fraction(x) for x in row] for row in rows]
    if any(len(row) != ncols for row in work):
        raise DimensionMismatch("row length does not match column count")
    reduced, pivots = _rref(work, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[free]
        basis.append(tuple(x))
    return basis


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    work = [[to_fraction(x) for x in row] for row in rows]
    return len(_rref(work, ncols)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient`` held by its reduced row-echelon basis."""

    ambient: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient: int | None = None) -> Subspace:
        return echelonize(vectors, ambient)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing the pivot columns of this subspace."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                out = [a - c * b for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient {self.ambient}")
        return not any(self.reduce(vec(v)))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __le__(self, other: Subspace) -> bool:
        _same_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def __lt__(self, other: Subspace) -> bool:
        return self <= other and self.dim < other.dim

    def __add__(self, other: Subspace) -> Subspace:
        return meet_join(self, other)[1]

    def __and__(self, other: Subspace) -> Subspace:
        return meet_join(self, other)[0]

    def annihilator(self) -> list[Vector]:
        """Row vectors ``a`` with ``a . v = 0`` for all ``v`` in the subspace."""
        if not self.basis:
            return [unit_vector(self.ambient, i) for i in range(self.ambient)]
        return nullspace(self.basis, self.ambient)

    def coordinates(self, v: Sequence) -> Vector:
        """Coefficients of ``v`` in the echelon basis; ``v`` must lie in the subspace."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(to_fraction(v[p]) for p in self.pivots)

    def __repr__(self) -> str:
        rows = [[str(x) for x in row] for row in self.basis]
        return f"Subspace(ambient={self.ambient}, basis={rows})"


def _same_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise DimensionMismatch(f"ambient dimensions {a.ambient} and {b.ambient} differ")


def echelonize(vectors: Iterable[Sequence], ambient: int | None = None) -> Subspace:
    """Canonical subspace spanned by ``vectors``."""
    vectors = [vec(v) for v in vectors]
    n = _check_lengths(vectors, ambient)
    rows, _ = _rref([list(v) for v in vectors], n)
    return Subspace(n, tuple(tuple(r) for r in rows))


def meet_join(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    """Return ``(a & b, a + b)``."""
    _same_ambient(a, b)
    n = a.ambient
    join = echelonize(a.basis + b.basis, n)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(n), join
    if a <= b:
        return a, b
    if b <= a:
        return b, a
    meet = echelonize(nullspace(a.annihilator() + b.annihilator(), n), n)
    return meet, join


def intersect_all(spaces: Iterable[Subspace], ambient: int) -> Subspace:
    out = Subspace.full(ambient)
    for s in spaces:
        out = out & s
    return out


def sum_all(spaces: Iterable[Subspace], ambient: int) -> Subspace:
    return echelonize([b for s in spaces for b in s.basis], ambient)


@dataclass(frozen=True)
class LinearMap:
    """A dense rational matrix acting on column vectors."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> LinearMap:
        grid = tuple(vec(r) for r in rows)
        if cols is None:
            if not grid:
                raise DimensionMismatch("empty matrix needs an explicit column count")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> LinearMap:
        columns = [vec(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch("column length does not match row count")
        grid = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(rows, len(columns), grid)

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> LinearMap:
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> LinearMap:
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> LinearMap:
        n = len(values)
        return cls(n, n, tuple(tuple(to_fraction(values[i]) if i == j else Fraction(0)
                                     for j in range(n)) for i in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(x for row in self.entries for x in row)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for a map with {self.cols} columns")
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), Fraction(0))
                     for row in self.entries)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> LinearMap:
        return LinearMap(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def __matmul__(self, other: LinearMap) -> LinearMap:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        other_cols = other.transpose().entries
        return LinearMap(self.rows, other.cols,
                         tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0))
                                     for col in other_cols) for row in self.entries))

    def __add__(self, other: LinearMap) -> LinearMap:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shapes differ")
        return LinearMap(self.rows, self.cols,
                         tuple(tuple(a + b for a, b in zip(r, s))
                               for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: LinearMap) -> LinearMap:
        return self + other.scale(-1)

    def scale(self, c) -> LinearMap:
        c = to_fraction(c)
        return LinearMap(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def power(self, k: int) -> LinearMap:
        if not self.is_square:
            raise DimensionMismatch("only square maps have powers")
        out = LinearMap.identity(self.rows)
        for _ in range(k):
            out = self @ out
        return out

    def rank(self) -> int:
        return rank(self.entries, self.cols)

    def kernel(self) -> Subspace:
        return echelonize(nullspace(self.entries, self.cols), self.cols)

    def image(self, s: Subspace | None = None) -> Subspace:
        if s is None:
            s = Subspace.full(self.cols)
        if s.ambient != self.cols:
            raise DimensionMismatch("subspace does not live in the domain")
        return echelonize([self.apply(b) for b in s.basis], self.rows)

    def preimage(self, s: Subspace) -> Subspace:
        if s.ambient != self.rows:
            raise DimensionMismatch("subspace does not live in the codomain")
        conditions = [tuple(sum((a * row[j] for a, row in zip(alpha, self.entries)), Fraction(0))
                            for j in range(self.cols))
                      for alpha in s.annihilator()]
        if not conditions:
            return Subspace.full(self.cols)
        return echelonize(nullspace(conditions, self.cols), self.cols)

    def maps_into(self, source: Subspace, target: Subspace) -> bool:
        return all(target.contains(self.apply(b)) for b in source.basis)

    def __repr__(self) -> str:
        return f"LinearMap({[[str(x) for x in r] for r in self.entries]})"


def image_kernel_preimage(f: LinearMap, s: Subspace) -> tuple[Subspace, Subspace, Subspace]:
    """``(f(s), ker f, f^{-1}(s))`` for an endomorphism ``f``.

    ``s`` serves both as a domain subspace (image) and a codomain subspace
    (preimage); use :meth:`LinearMap.image` and :meth:`LinearMap.preimage`
    directly for maps between different spaces.
    """
    if s.ambient != f.cols or s.ambient != f.rows:
        raise DimensionMismatch("subspace ambient must match both domain and codomain")
    return f.image(s), f.kernel(), f.preimage(s)


class Subquotient:
    """The space ``sub / smaller`` with a fixed basis.

    The basis is the echelon form of ``sub`` reduced modulo ``smaller``; its
    pivot columns avoid the pivots of ``smaller``, and coordinates of a class
    are read off at those columns.
    """

    def __init__(self, sub: Subspace, smaller: Subspace | None = None):
        if smaller is None:
            smaller = Subspace.zero(sub.ambient)
        _same_ambient(sub, smaller)
        if not smaller <= sub:
            raise ValueError("the smaller subspace is not contained in the larger one")
        self.sub = sub
        self.smaller = smaller
        self.complement = echelonize([smaller.reduce(b) for b in sub.basis], sub.ambient)
        self.columns = self.complement.pivots

    @property
    def dim(self) -> int:
        return self.complement.dim

    @property
    def ambient(self) -> int:
        return self.sub.ambient

    def coords(self, v: Sequence) -> Vector:
        if not self.sub.contains(v):
            raise ValueError("vector does not lie in the numerator subspace")
        r = self.smaller.reduce(vec(v))
        return tuple(r[c] for c in self.columns)

    def lift_vector(self, coords: Sequence) -> Vector:
        out = [Fraction(0)] * self.ambient
        for c, row in zip(coords, self.complement.basis):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def project(self, s: Subspace) -> Subspace:
        """Image in this subquotient of ``s ∩ sub``."""
        inside = s & self.sub
        return echelonize([self.coords(b) for b in inside.basis], self.dim)

    def lift(self, s: Subspace) -> Subspace:
        """Full preimage in the ambient space of a subspace of this subquotient."""
        if s.ambient != self.dim:
            raise DimensionMismatch("subspace does not live in this subquotient")
        return echelonize([self.lift_vector(b) for b in s.basis] + list(self.smaller.basis),
                          self.ambient)

    def induced_map(self, f: LinearMap, target: Subquotient | None = None) -> LinearMap:
        """Matrix of the map induced by ``f`` from this subquotient to ``target``."""
        target = self if target is None else target
        if not f.maps_into(self.sub, target.sub) or not f.maps_into(self.smaller, target.smaller):
            raise NonInvariantSubspace("map does not carry the subquotient into the target")
        cols = [target.coords(f.apply(b)) for b in self.complement.basis]
        return LinearMap.from_columns(cols, target.dim) if cols else LinearMap.zero(target.dim, 0)


def induce_on_subquotient(f: LinearMap, sub: Subspace, smaller: Subspace) -> LinearMap:
    """Induced endomorphism of ``sub / smaller``."""
    return Subquotient(sub, smaller).induced_map(f)


def kron(a: LinearMap, b: LinearMap) -> LinearMap:
    """Kronecker product, matching the basis order ``e_i ⊗ f_j -> i * dim_b + j``."""
    rows = []
    for ra in a.entries:
        for rb in b.entries:
            rows.append(tuple(x * y for x in ra for y in rb))
    return LinearMap(a.rows * b.rows, a.cols * b.cols, tuple(rows))
