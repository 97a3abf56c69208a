"""Increasing filtrations of finite-dimensional rational vector spaces.

A :class:`Filtration` stores only the weights where it jumps.  Below the lowest
jump the filtration is zero, and from the highest jump on it is the whole
space.  Two filtrations are equal exactly when they have the same jumps.

Tensor products are taken in the Kronecker basis ``e_i ⊗ f_j -> i * dim_b + j``.
Homomorphisms ``V -> W`` are ``dim W x dim V`` matrices flattened row by row.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .linalg import (
    DimensionMismatch,
    LinearMap,
    Subquotient,
    Subspace,
    echelonize,
    nullspace,
)


class NotFiltrationPreserving(ValueError):
    """A map sends some step of the source outside the matching target step."""


class GradedPiece(NamedTuple):
    weight: int
    dim: int
    basis: tuple  # representatives in the ambient space


class Filtration:
    """An exhaustive, separated increasing filtration of ``Q^ambient``.

    ``steps`` maps weights to subspaces; the recorded steps must be nested in
    weight order.  Weights that are not recorded take the value of the nearest
    recorded weight below them (zero if there is none), and everything above
    the highest recorded weight is the full space.
    """

    __slots__ = ("ambient", "_jumps")

    def __init__(self, ambient: int, steps: Mapping[int, Subspace] | None = None):
        self.ambient = ambient
        steps = dict(steps or {})
        previous = Subspace.zero(ambient)
        jumps: dict[int, Subspace] = {}
        for w in sorted(steps):
            s = steps[w]
            if s.ambient != ambient:
                raise DimensionMismatch(f"step {w} lives in dimension {s.ambient}, expected {ambient}")
            if not previous <= s:
                raise ValueError(f"filtration is not increasing at weight {w}")
            if s != previous:
                jumps[w] = s
            previous = s
        if not previous.is_full():
            top = max(steps) + 1 if steps else 0
            jumps[top] = Subspace.full(ambient)
        self._jumps = jumps

    @classmethod
    def trivial(cls, ambient: int, weight: int = 0) -> Filtration:
        """The filtration with a single jump, so the space is pure of ``weight``."""
        return cls(ambient, {weight: Subspace.full(ambient)})

    @classmethod
    def from_chain(cls, ambient: int, chain: Mapping[int, Iterable]) -> Filtration:
        """Build from weight -> spanning vectors."""
        return cls(ambient, {w: echelonize(list(vs), ambient) for w, vs in chain.items()})

    @property
    def dim(self) -> int:
        return self.ambient

    @property
    def jumps(self) -> dict[int, Subspace]:
        return dict(self._jumps)

    @property
    def weights(self) -> list[int]:
        """Weights ``m`` with ``Gr_m`` nonzero, in increasing order."""
        return list(self._jumps)

    @property
    def lowest(self) -> int | None:
        return next(iter(self._jumps), None)

    @property
    def highest(self) -> int | None:
        return next(reversed(self._jumps), None) if self._jumps else None

    def step(self, m: int) -> Subspace:
        out = Subspace.zero(self.ambient)
        for w, s in self._jumps.items():
            if w > m:
                break
            out = s
        return out

    __getitem__ = step

    def gr(self, m: int) -> GradedPiece:
        q = Subquotient(self.step(m), self.step(m - 1))
        return GradedPiece(m, q.dim, q.complement.basis)

    def gr_dims(self) -> dict[int, int]:
        out = {}
        previous = 0
        for w, s in self._jumps.items():
            out[w] = s.dim - previous
            previous = s.dim
        return out

    def shift(self, k: int) -> Filtration:
        """Reindex so that the old weight ``m`` becomes ``m + k``."""
        return Filtration(self.ambient, {w + k: s for w, s in self._jumps.items()})

    def window(self, pad: int = 0) -> range:
        if not self._jumps:
            return range(0)
        return range(self.lowest - pad, self.highest + pad + 1)

    def preserved_by(self, f: LinearMap, shift: int = 0) -> bool:
        """True iff ``f(F_m) ⊆ F_{m+shift}`` for every ``m``."""
        return all(f.maps_into(s, self.step(w + shift)) for w, s in self._jumps.items())

    def project(self, q: Subquotient) -> Filtration:
        """Filtration induced on a subquotient, in its coordinates."""
        return Filtration(q.dim, {w: q.project(s) for w, s in self._jumps.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filtration):
            return NotImplemented
        return self.ambient == other.ambient and self._jumps == other._jumps

    def __hash__(self) -> int:
        return hash((self.ambient, tuple(self._jumps.items())))

    def __repr__(self) -> str:
        dims = {w: s.dim for w, s in self._jumps.items()}
        return f"Filtration(ambient={self.ambient}, step_dims={dims})"


FilteredSpace = Filtration


@dataclass(frozen=True)
class FilteredMap:
    """A linear map between filtered spaces raising weights by at most ``shift``."""

    map: LinearMap
    source: Filtration
    target: Filtration
    shift: int = 0

    def __post_init__(self):
        if (self.map.cols, self.map.rows) != (self.source.ambient, self.target.ambient):
            raise DimensionMismatch("map shape does not match the filtered spaces")
        for w, s in self.source.jumps.items():
            if not self.map.maps_into(s, self.target.step(w + self.shift)):
                raise NotFiltrationPreserving(
                    f"F_{w} of the source is not sent into F_{w + self.shift} of the target")


def gr(fs: Filtration, m: int) -> GradedPiece:
    return fs.gr(m)


def _convolve(a: Mapping[int, int], b: Mapping[int, int], sign: int = 1) -> dict[int, int]:
    out: dict[int, int] = {}
    for j, x in a.items():
        for k, y in b.items():
            key = k + sign * j
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in sorted(out.items()) if v}


def tensor_dims(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    """Graded dimensions of a tensor product, from those of the factors."""
    return _convolve(a, b)


def hom_dims(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    """Graded dimensions of ``Hom(a, b)``: weight ``m`` collects ``Gr_k a -> Gr_{m+k} b``."""
    return _convolve(a, b, sign=-1)


def _kron(u, v):
    return tuple(x * y for x in u for y in v)


def tensor_filtration(a: Filtration, b: Filtration) -> Filtration:
    n = a.ambient * b.ambient
    if n == 0:
        return Filtration(0)
    steps = {}
    for m in range(a.lowest + b.lowest, a.highest + b.highest + 1):
        vectors = []
        for j, sa in a.jumps.items():
            sb = b.step(m - j)
            vectors.extend(_kron(u, v) for u in sa.basis for v in sb.basis)
        steps[m] = echelonize(vectors, n) if vectors else Subspace.zero(n)
    return Filtration(n, steps)


def tensor_power(a: Filtration, n: int) -> Filtration:
    out = Filtration.trivial(1)
    for _ in range(n):
        out = tensor_filtration(out, a)
    return out


def hom_filtration(a: Filtration, b: Filtration) -> Filtration:
    """``F_m Hom(a, b) = {phi : phi(F_k a) ⊆ F_{m+k} b for all k}``."""
    da, db = a.ambient, b.ambient
    n = da * db
    if n == 0:
        return Filtration(0)
    annihilators = {}
    steps = {}
    for m in range(b.lowest - a.highest, b.highest - a.lowest + 1):
        conditions = []
        for k, sa in a.jumps.items():
            target = b.step(m + k)
            if target not in annihilators:
                annihilators[target] = target.annihilator() if not target.is_full() else []
            for alpha in annihilators[target]:
                for v in sa.basis:
                    # alpha . (phi v) = sum_{r,c} alpha_r v_c phi_{rc}
                    conditions.append(tuple(ar * vc for ar in alpha for vc in v))
        steps[m] = echelonize(nullspace(conditions, n), n) if conditions else Subspace.full(n)
    return Filtration(n, steps)


def dual_filtration(a: Filtration) -> Filtration:
    return hom_filtration(a, Filtration.trivial(1))


def hom_dual_filtration(a: Filtration, b: Filtration | None = None) -> Filtration:
    """``Hom(a, b)``, or the dual of ``a`` when ``b`` is omitted."""
    return dual_filtration(a) if b is None else hom_filtration(a, b)


def induced_filtrations(fs: Filtration, sub: Subspace) -> tuple[Filtration, Filtration]:
    """Filtrations induced on ``sub`` and on ``V / sub``, each in its own coordinates.

    Coordinates on ``sub`` are those of its echelon basis; coordinates on the
    quotient are those of :class:`~relweight.linalg.Subquotient`.
    """
    if sub.ambient != fs.ambient:
        raise DimensionMismatch("subspace and filtration live in different spaces")
    on_sub = fs.project(Subquotient(sub))
    on_quotient = fs.project(Subquotient(Subspace.full(fs.ambient), sub))
    return on_sub, on_quotient


def graded_sequence_exact(fs: Filtration, sub: Subspace) -> bool:
    """Whether ``0 -> Gr sub -> Gr V -> Gr V/sub -> 0`` has matching dimensions in every weight."""
    on_sub, on_quotient = induced_filtrations(fs, sub)
    ds, dq, dv = on_sub.gr_dims(), on_quotient.gr_dims(), fs.gr_dims()
    weights = set(ds) | set(dq) | set(dv)
    return all(ds.get(m, 0) + dq.get(m, 0) == dv.get(m, 0) for m in weights)


def subquotient_filtrations(fs: Filtration, u: Subspace, w: Subspace) -> tuple[Filtration, Filtration]:
    """The two filtrations on ``w / u``.

    The first restricts the quotient filtration of ``V / u`` to ``w / u``; the
    second pushes the filtration induced on ``w`` into ``w / u``.  Requires
    ``u ⊆ w``.
    """
    if not u <= w:
        raise ValueError("the quotient kernel must lie inside the subspace")
    quotient = Subquotient(Subspace.full(fs.ambient), u)
    image_of_w = quotient.project(w)
    target = Subquotient(image_of_w)
    via_quotient = {}
    via_sub = {}
    for m, s in fs.jumps.items():
        via_quotient[m] = target.project(quotient.project(s + u))
        via_sub[m] = target.project(quotient.project(s & w))
    return Filtration(target.dim, via_quotient), Filtration(target.dim, via_sub)


def subquotient_agreement(fs: Filtration, u: Subspace, w: Subspace) -> bool:
    first, second = subquotient_filtrations(fs, u, w)
    return first == second


def _kernel_cokernel(f: FilteredMap) -> tuple[Filtration, Filtration]:
    ker = f.map.kernel()
    im = f.map.image()
    return (f.source.project(Subquotient(ker)),
            f.target.project(Subquotient(Subspace.full(f.target.ambient), im)))


def strict_by_intersection(f: FilteredMap) -> bool:
    """``W_{m+s} V2 ∩ f(V1) = f(W_m V1)`` for all ``m``."""
    im = f.map.image()
    window = set(f.source.window(1)) | {w - f.shift for w in f.target.window(1)}
    return all((f.target.step(m + f.shift) & im) == f.map.image(f.source.step(m))
               for m in window)


def strict_by_exactness(f: FilteredMap) -> bool:
    """Exactness of ``0 -> Gr ker -> Gr V1 -> Gr V2 -> Gr coker -> 0`` in every weight."""
    ker, coker = _kernel_cokernel(f)
    dk, dc = ker.gr_dims(), coker.gr_dims()
    d1, d2 = f.source.gr_dims(), f.target.gr_dims()
    window = set(f.source.window(1)) | {w - f.shift for w in f.target.window(1)}
    for m in window:
        src = Subquotient(f.source.step(m), f.source.step(m - 1))
        dst = Subquotient(f.target.step(m + f.shift), f.target.step(m + f.shift - 1))
        r = src.induced_map(f.map, dst).rank() if src.dim and dst.dim else 0
        if dk.get(m, 0) != d1.get(m, 0) - r:
            return False
        if r != d2.get(m + f.shift, 0) - dc.get(m + f.shift, 0):
            return False
    return True


def strictness(f: FilteredMap) -> bool:
    """Strictness of a filtered map, checked by both criteria.

    Raises ``AssertionError`` if the two criteria ever disagree.
    """
    a = strict_by_intersection(f)
    b = strict_by_exactness(f)
    if a != b:
        raise AssertionError("intersection and graded-exactness criteria disagree")
    return a


def bigraded_dims(fs: Filtration, second: Filtration, order: str = "both") -> dict[tuple[int, int], int]:
    """Dimensions of ``Gr^F_m Gr^G_k`` keyed by ``(m, k)``.

    With ``order="both"`` the table is computed as ``Gr^F Gr^G`` and as
    ``Gr^G Gr^F`` and the two must agree entrywise.
    """
    if fs.ambient != second.ambient:
        raise DimensionMismatch("filtrations live in different spaces")
    if order == "both":
        a = bigraded_dims(fs, second, "FG")
        b = bigraded_dims(fs, second, "GF")
        if a != b:
            raise AssertionError("bigraded dimensions depend on the order of grading")
        return a
    outer, inner = (second, fs) if order == "FG" else (fs, second)
    table = {}
    for k in outer.weights:
        piece = Subquotient(outer.step(k), outer.step(k - 1))
        for m, d in inner.project(piece).gr_dims().items():
            key = (m, k) if order == "FG" else (k, m)
            table[key] = d
    return dict(sorted(table.items()))


def scalar_on_graded(f: LinearMap, fs: Filtration) -> dict[int, Fraction | None]:
    """For each weight, the scalar by which ``f`` acts on ``Gr_m`` (``None`` if not scalar)."""
    out = {}
    for m in fs.weights:
        g = Subquotient(fs.step(m), fs.step(m - 1)).induced_map(f)
        c = g.entries[0][0]
        out[m] = c if g == LinearMap.diagonal([c] * g.rows) else None
    return out
