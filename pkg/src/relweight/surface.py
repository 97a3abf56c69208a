"""Homology of punctured surfaces, curve systems and Picard-Lefschetz operators.

``H_1`` of a genus ``g`` surface with ``n`` punctures has coordinates
``a_1..a_g, b_1..b_g`` followed by ``n - 1`` puncture classes ``e_1..e_{n-1}``
(the classes of small loops, with their one relation already divided out).
The intersection pairing has ``<a_i, b_i> = 1`` and pairs puncture classes to
zero with everything.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .filtered import Filtration, hom_filtration, scalar_on_graded, tensor_power
from .linalg import (
    LinearMap,
    Subquotient,
    Subspace,
    echelonize,
    kron,
    nullspace,
    unit_vector,
    vec,
)
from .nilwf import NilpotentOperator, monodromy_filtration


class InvalidCurveSystem(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceModel:
    genus: int
    punctures: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0:
            raise ValueError("genus and puncture count must be non-negative")

    @property
    def dim(self) -> int:
        return 2 * self.genus + max(self.punctures - 1, 0)

    @property
    def h_dim(self) -> int:
        return 2 * self.genus

    @property
    def stable(self) -> bool:
        return 2 - 2 * self.genus - self.punctures < 0

    def a(self, i: int) -> tuple:
        return unit_vector(self.dim, i - 1)

    def b(self, i: int) -> tuple:
        return unit_vector(self.dim, self.genus + i - 1)

    def e(self, i: int) -> tuple:
        return unit_vector(self.dim, 2 * self.genus + i - 1)

    def label(self, i: int) -> str:
        g = self.genus
        if i < g:
            return f"a{i + 1}"
        if i < 2 * g:
            return f"b{i - g + 1}"
        return f"e{i - 2 * g + 1}"

    def intersection_form(self) -> LinearMap:
        n, g = self.dim, self.genus
        rows = [[0] * n for _ in range(n)]
        for i in range(g):
            rows[i][g + i] = 1
            rows[g + i][i] = -1
        return LinearMap.from_rows(rows, n)

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.genus
        return sum((Fraction(x[i]) * y[g + i] - Fraction(x[g + i]) * y[i] for i in range(g)),
                   Fraction(0))

    def h_part(self, v: Sequence) -> tuple:
        return vec(v[: 2 * self.genus])

    def closed(self) -> SurfaceModel:
        return SurfaceModel(self.genus, 0)


def punctured_homology(g: int, n: int) -> Filtration:
    """Weight filtration on ``H_1`` of a genus ``g`` surface minus ``n`` points.

    Puncture classes have weight -2 and everything else weight -1.
    """
    s = SurfaceModel(g, n)
    steps = {-1: Subspace.full(s.dim)}
    if n > 1:
        steps[-2] = echelonize([s.e(i) for i in range(1, n)], s.dim)
    return Filtration(s.dim, steps)


@dataclass(frozen=True)
class CurveSystem:
    """Homology classes (lifted to the punctured surface) of a set of disjoint curves.

    Only the homological shadow is checked: pairwise intersection numbers
    vanish and each class is zero or primitive.  Whether the classes are
    realised by disjoint simple closed curves is up to the caller.
    """

    classes: tuple
    labels: tuple

    @classmethod
    def build(cls, surface: SurfaceModel, classes: Sequence[Sequence[int]],
              labels: Sequence[str] | None = None) -> CurveSystem:
        """Validate and build; classes shorter than ``surface.dim`` are padded with zeros."""
        padded = []
        for c in classes:
            c = [int(x) for x in c]
            if len(c) > surface.dim:
                raise InvalidCurveSystem(f"class {c} is longer than dim H_1 = {surface.dim}")
            padded.append(tuple(c + [0] * (surface.dim - len(c))))
        if labels is None:
            labels = [f"c{i}" for i in range(len(padded))]
        if len(labels) != len(padded):
            raise InvalidCurveSystem("one label per curve is required")
        cs = cls(tuple(padded), tuple(labels))
        cs.validate(surface)
        return cs

    def validate(self, surface: SurfaceModel) -> None:
        for c, name in zip(self.classes, self.labels):
            if len(c) != surface.dim:
                raise InvalidCurveSystem(f"{name}: class has length {len(c)}, expected {surface.dim}")
            if any(c) and math.gcd(*c) != 1:
                raise InvalidCurveSystem(f"{name}: class {list(c)} is not primitive")
        for i, c in enumerate(self.classes):
            for j in range(i + 1, len(self.classes)):
                p = surface.pair(c, self.classes[j])
                if p:
                    raise InvalidCurveSystem(
                        f"{self.labels[i]} and {self.labels[j]} have intersection number {p}")

    def __len__(self) -> int:
        return len(self.classes)

    def without(self, label: str) -> CurveSystem:
        keep = [(c, l) for c, l in zip(self.classes, self.labels) if l != label]
        if len(keep) == len(self.classes):
            raise KeyError(label)
        return CurveSystem(tuple(c for c, _ in keep), tuple(l for _, l in keep))

    def with_curve(self, label: str, cls_: Sequence[int]) -> CurveSystem:
        return CurveSystem(self.classes + (tuple(int(x) for x in cls_),), self.labels + (label,))


def pl_matrix(surface: SurfaceModel, classes: Sequence[Sequence]) -> LinearMap:
    """Matrix of ``x -> sum_c <c, x> c``."""
    n = surface.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    basis = [unit_vector(n, j) for j in range(n)]
    for c in classes:
        pairing = [surface.pair(c, e) for e in basis]
        for i in range(n):
            if c[i]:
                for j in range(n):
                    if pairing[j]:
                        rows[i][j] += c[i] * pairing[j]
    return LinearMap.from_rows(rows, n)


def picard_lefschetz(surface: SurfaceModel, cs: CurveSystem) -> NilpotentOperator:
    """Logarithm of the product of Dehn twists about the curves of ``cs``."""
    cs.validate(surface)
    n = NilpotentOperator(pl_matrix(surface, cs.classes))
    if not n.power(2).is_zero():
        raise AssertionError("Picard-Lefschetz operator does not square to zero")
    w = punctured_homology(surface.genus, surface.punctures)
    if not w.preserved_by(n.matrix):
        raise AssertionError("Picard-Lefschetz operator does not preserve the weight filtration")
    if not n.matrix.maps_into(w.step(-2), Subspace.zero(surface.dim)):
        raise AssertionError("Picard-Lefschetz operator is nonzero on puncture classes")
    return n


def h_operator(surface: SurfaceModel, cs: CurveSystem) -> NilpotentOperator:
    """The Picard-Lefschetz operator on ``H_1`` of the closed surface."""
    closed = surface.closed()
    return NilpotentOperator(pl_matrix(closed, [surface.h_part(c) for c in cs.classes]))


@dataclass(frozen=True)
class SpanInfo:
    span: Subspace
    isotropic: bool
    lagrangian: bool


def span_and_isotropy(surface: SurfaceModel, cs: CurveSystem) -> SpanInfo:
    """Span of the curve classes in ``H_1`` of the closed surface."""
    span = echelonize([surface.h_part(c) for c in cs.classes], surface.h_dim) \
        if cs.classes else Subspace.zero(surface.h_dim)
    closed = surface.closed()
    isotropic = all(closed.pair(x, y) == 0 for x in span.basis for y in span.basis)
    return SpanInfo(span, isotropic, isotropic and span.dim == surface.genus)


def bounding_pair_model(g: int) -> tuple[Filtration, NilpotentOperator]:
    """``(W, N)`` for the twist difference of a bounding pair.

    The surface has two punctures, one on each side of the pair.  Both curves
    have class ``a_1`` in ``H_1(S)``; their lifts differ by the puncture class
    ``e``, so ``N(x) = <a_1, x> e``.
    """
    if g < 1:
        raise ValueError("a bounding pair needs genus at least 1")
    s = SurfaceModel(g, 2)
    c0 = s.a(1)
    c1 = tuple(x + y for x, y in zip(s.a(1), s.e(1)))
    n = pl_matrix(s, [c1]) - pl_matrix(s, [c0])
    expected = LinearMap.from_columns(
        [tuple(s.pair(c0, unit_vector(s.dim, j)) * x for x in s.e(1)) for j in range(s.dim)],
        s.dim)
    assert n == expected
    return punctured_homology(g, 2), NilpotentOperator(n)


@dataclass(frozen=True)
class ABDecomposition:
    """Graded pieces of the monodromy filtration on ``H_1(S)``.

    ``a`` and ``h0`` are spans of lifts chosen by the subquotient complement
    convention; ``b`` is ``M_{-2}``.  ``xi`` acts by +1 on ``a``, 0 on ``h0``
    and -1 on ``b``.
    """

    a: Subspace
    h0: Subspace
    b: Subspace
    xi: LinearMap
    monodromy: Filtration


def ab_decomposition(surface: SurfaceModel, cs: CurveSystem) -> ABDecomposition:
    n = h_operator(surface, cs)
    dim = surface.h_dim
    m = monodromy_filtration(n, -1)
    b = m.step(-2)
    h0_lifts = Subquotient(m.step(-1), b).complement
    a_lifts = Subquotient(Subspace.full(dim), m.step(-1)).complement
    columns_basis = list(a_lifts.basis) + list(h0_lifts.basis) + list(b.basis)
    eigen = [1] * a_lifts.dim + [0] * h0_lifts.dim + [-1] * b.dim
    if dim == 0:
        xi = LinearMap.zero(0)
    else:
        p = LinearMap.from_columns(columns_basis, dim)
        # xi = P diag P^{-1}; solve via columns of the inverse
        inverse_cols = [_solve(p, unit_vector(dim, j)) for j in range(dim)]
        p_inv = LinearMap.from_columns(inverse_cols, dim)
        xi = p @ LinearMap.diagonal(eigen) @ p_inv
    return ABDecomposition(a_lifts, h0_lifts, b, xi, m)


def _solve(p: LinearMap, rhs) -> tuple:
    # unique solution of p x = rhs for invertible p
    aug = [list(row) + [r] for row, r in zip(p.entries, rhs)]
    sol = nullspace(aug, p.cols + 1)
    (v,) = sol
    scale = -1 / v[-1]
    return tuple(x * scale for x in v[:-1])


def tensor_xi(xi: LinearMap, n: int) -> LinearMap:
    """``xi`` acting as a derivation on the ``n``-th tensor power."""
    d = xi.rows
    total = LinearMap.zero(d ** n)
    for i in range(n):
        term = LinearMap.identity(1)
        for j in range(n):
            term = kron(term, xi if i == j else LinearMap.identity(d))
        total = total + term
    return total


def xi_eigenvalues(dec: ABDecomposition, n: int) -> dict[int, Fraction | None]:
    """Scalar by which ``xi`` acts on each ``Gr^M_k`` of ``H^{⊗n}`` (``None`` if not scalar)."""
    if n > 3:
        raise ValueError("tensor powers above 3 are not supported")
    filt = tensor_power(dec.monodromy, n)
    op = tensor_xi(dec.xi, n)
    if not filt.preserved_by(op):
        raise AssertionError("xi does not preserve the monodromy filtration")
    return scalar_on_graded(op, filt)


def xi_eigenvalue_check(dec: ABDecomposition, n: int) -> bool:
    """True iff ``xi`` is scalar ``k + n`` on every nonzero ``Gr^M_k H^{⊗n}``.

    The filtration on ``H`` has steps at 0, -1, -2, so a pure tensor of pieces
    of weights ``w_i`` has eigenvalue ``sum (w_i + 1) = k + n``.
    """
    return all(c is not None and c == k + n for k, c in xi_eigenvalues(dec, n).items())


def symplectic_algebra(genus: int) -> Subspace:
    """``sp(H)`` inside ``End(H)`` (flattened row-major): matrices ``X`` with ``JX`` symmetric."""
    d = 2 * genus
    j = SurfaceModel(genus).intersection_form()
    conditions = []
    for r in range(d):
        for c in range(r + 1, d):
            row = [Fraction(0)] * (d * d)
            for k in range(d):
                row[k * d + c] += j.entries[r][k]
                row[k * d + r] -= j.entries[c][k]
            conditions.append(row)
    if not conditions:
        return Subspace.full(d * d)
    return echelonize(nullspace(conditions, d * d), d * d)


def sp_graded_dims(surface: SurfaceModel, cs: CurveSystem) -> dict[int, int]:
    """``dim Gr^M_k sp(H)`` for the monodromy filtration of the curve system."""
    m = monodromy_filtration(h_operator(surface, cs), -1)
    end = hom_filtration(m, m)
    sp = symplectic_algebra(surface.genus)
    return end.project(Subquotient(sp)).gr_dims()
