"""Weight filtrations of nilpotent operators, plain and relative.

The weight filtration ``W(N)`` of a nilpotent ``N`` is centred at 0: ``N``
lowers weight by 2 and ``N^k`` identifies ``Gr_k`` with ``Gr_{-k}``.  The
monodromy filtration is the same filtration recentred at a chosen weight.

Given a second filtration ``W`` preserved by ``N``, a relative weight
filtration ``M`` is one that ``N`` lowers by 2 and that induces on every
``Gr^W_m`` the monodromy filtration of the induced operator, centred at ``m``.
It need not exist; when it does it is unique.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .filtered import Filtration
from .linalg import LinearMap, NonInvariantSubspace, Subquotient, Subspace

DEFAULT_DEPTH = 3
LATTICE_CAP = 512


class NotNilpotent(ValueError):
    pass


class LatticeOverflow(RuntimeError):
    """The bounded subspace lattice grew past :data:`LATTICE_CAP`."""


class NilpotentOperator:
    """A square rational matrix certified nilpotent.

    ``nilpotency_index`` is the largest ``m`` with ``N^m != 0`` (0 for the zero map).
    """

    __slots__ = ("matrix", "nilpotency_index", "_powers")

    def __init__(self, matrix: LinearMap):
        if not matrix.is_square:
            raise NotNilpotent("a nilpotent operator must be square")
        powers = [LinearMap.identity(matrix.rows)]
        while not powers[-1].is_zero():
            if len(powers) > matrix.rows:
                raise NotNilpotent("matrix is not nilpotent")
            powers.append(matrix @ powers[-1])
        self.matrix = matrix
        self.nilpotency_index = max(len(powers) - 2, 0)
        self._powers = powers

    @classmethod
    def from_rows(cls, rows) -> NilpotentOperator:
        return cls(LinearMap.from_rows(rows))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def power(self, k: int) -> LinearMap:
        if k < len(self._powers):
            return self._powers[k]
        return LinearMap.zero(self.dim)

    def apply(self, v):
        return self.matrix.apply(v)

    def __eq__(self, other):
        return isinstance(other, NilpotentOperator) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"NilpotentOperator({self.matrix!r})"


def weight_filtration(n: NilpotentOperator) -> Filtration:
    """``W(N)``, built by peeling off ``ker N^m`` and ``im N^m`` and recursing.

    With ``m`` the nilpotency index, ``W_{m-1} = ker N^m`` and ``W_{-m} = im N^m``;
    the steps strictly between are pulled back from the weight filtration of
    the operator induced on ``ker N^m / im N^m``.
    """
    dim = n.dim
    m = n.nilpotency_index
    if m == 0:
        return Filtration.trivial(dim, 0)
    top = n.power(m)
    middle = Subquotient(top.kernel(), top.image())
    inner = weight_filtration(NilpotentOperator(middle.induced_map(n.matrix)))
    steps = {k: middle.lift(inner.step(k)) for k in range(-m, m)}
    steps[m] = Subspace.full(dim)
    return Filtration(dim, steps)


def monodromy_filtration(n: NilpotentOperator, center: int) -> Filtration:
    return weight_filtration(n).shift(center)


def weight_axioms_hold(n: NilpotentOperator, filt: Filtration, center: int = 0) -> bool:
    """Direct check that ``filt`` is the weight filtration of ``n`` centred at ``center``."""
    if filt.ambient != n.dim:
        return False
    if not filt.preserved_by(n.matrix, -2):
        return False
    if n.dim == 0:
        return True
    lo, hi = filt.lowest, filt.highest
    reach = max(abs(lo - center), abs(hi - center))
    for k in range(0, reach + 1):
        src = Subquotient(filt.step(center + k), filt.step(center + k - 1))
        dst = Subquotient(filt.step(center - k), filt.step(center - k - 1))
        if src.dim != dst.dim:
            return False
        if src.dim and src.induced_map(n.power(k), dst).rank() != src.dim:
            return False
    return True


def graded_operators(n: NilpotentOperator, w: Filtration) -> dict[int, NilpotentOperator]:
    """The operators ``Gr^W_m N`` on each nonzero graded piece."""
    if not w.preserved_by(n.matrix):
        raise NonInvariantSubspace("the operator does not preserve the filtration")
    return {m: NilpotentOperator(Subquotient(w.step(m), w.step(m - 1)).induced_map(n.matrix))
            for m in w.weights}


def graded_monodromy(n: NilpotentOperator, w: Filtration) -> dict[int, Filtration]:
    """``M^(m)``: the monodromy filtration of ``Gr^W_m N`` centred at ``m``."""
    return {m: monodromy_filtration(op, m) for m, op in graded_operators(n, w).items()}


@dataclass
class Verdict:
    """Outcome of :func:`verify_relative`; truthy when every clause holds."""

    ok: bool
    clause: int | None = None
    weight: int | None = None
    witness: tuple | None = None
    graded_weight: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _relevant_weights(*filts: Filtration, pad: int = 2) -> range:
    lows = [f.lowest for f in filts if f.lowest is not None]
    highs = [f.highest for f in filts if f.highest is not None]
    if not lows:
        return range(0)
    return range(min(lows) - pad, max(highs) + pad + 1)


def verify_relative(n: NilpotentOperator, w: Filtration, m: Filtration) -> Verdict:
    """Check both clauses of the definition of a relative weight filtration.

    Clause 1 is ``N M_k ⊆ M_{k-2}``; clause 2 asks that ``M`` induce ``M^(j)``
    on ``Gr^W_j`` for every ``j``.  The first failure found is reported with
    the weight and a witness vector (ambient coordinates for clause 1,
    coordinates on ``Gr^W_j`` for clause 2).
    """
    if m.ambient != n.dim or w.ambient != n.dim:
        raise ValueError("operator and filtrations live in different spaces")
    if not w.preserved_by(n.matrix):
        raise NonInvariantSubspace("the operator does not preserve W")
    for k in _relevant_weights(m):
        target = m.step(k - 2)
        for b in m.step(k).basis:
            if not target.contains(n.apply(b)):
                return Verdict(False, 1, k, b,
                               message=f"N M_{k} is not contained in M_{k - 2}")
    expected = graded_monodromy(n, w)
    for j, mj in expected.items():
        piece = Subquotient(w.step(j), w.step(j - 1))
        induced = m.project(piece)
        if induced == mj:
            continue
        for k in _relevant_weights(induced, mj):
            a, b = induced.step(k), mj.step(k)
            if a != b:
                extra = next((v for v in a.basis if not b.contains(v)), None)
                if extra is None:
                    extra = next(v for v in b.basis if not a.contains(v))
                return Verdict(False, 2, k, extra, graded_weight=j,
                               message=f"M_{k} induces the wrong step on Gr^W_{j}")
    return Verdict(True, message="relative weight filtration")


@dataclass(frozen=True)
class Exists:
    filtration: Filtration
    method: str = ""


@dataclass(frozen=True)
class CertifiedNonexistent:
    """The unique candidate forced by the graded data fails clause ``clause`` at ``weight``."""

    weight: int
    witness: tuple
    candidate: Filtration
    clause: int = 1


@dataclass(frozen=True)
class Inconclusive:
    search_depth: int
    candidates_examined: int = field(default=0, compare=False)


RelativeWFOutcome = Union[Exists, CertifiedNonexistent, Inconclusive]


def _lattice(n: NilpotentOperator, w: Filtration, depth: int) -> list[Subspace]:
    dim = n.dim
    seen = {Subspace.zero(dim), Subspace.full(dim), *w.jumps.values()}
    frontier = set(seen)
    for _ in range(depth):
        new = set()
        current = sorted(seen, key=_subspace_key)
        for a in frontier:
            new.add(n.matrix.image(a))
            new.add(n.matrix.preimage(a))
            for b in current:
                new.add(a + b)
                new.add(a & b)
        frontier = new - seen
        seen |= frontier
        if len(seen) > LATTICE_CAP:
            raise LatticeOverflow(f"subspace lattice exceeded {LATTICE_CAP} elements")
        if not frontier:
            break
    return sorted(seen, key=_subspace_key)


def _subspace_key(s: Subspace):
    return (s.dim, tuple(tuple((x.numerator, x.denominator) for x in row) for row in s.basis))


def _search(n: NilpotentOperator, w: Filtration, expected: dict[int, Filtration], depth: int):
    lattice = _lattice(n, w, depth)
    pieces = {j: Subquotient(w.step(j), w.step(j - 1)) for j in expected}
    weights = list(_relevant_weights(*expected.values(), pad=0))
    options = []
    for k in weights:
        matching = [s for s in lattice
                    if all(pieces[j].project(s) == expected[j].step(k) for j in expected)]
        options.append(matching)
    examined = 0

    def extend(chain):
        nonlocal examined
        i = len(chain)
        if i == len(weights):
            examined += 1
            yield list(chain)
            return
        for s in options[i]:
            if chain and not chain[-1] <= s:
                continue
            below = chain[i - 2] if i >= 2 else Subspace.zero(n.dim)
            if not n.matrix.maps_into(s, below):
                continue
            chain.append(s)
            yield from extend(chain)
            chain.pop()

    for chain in extend([]):
        candidate = Filtration(n.dim, dict(zip(weights, chain)))
        if verify_relative(n, w, candidate):
            return candidate, examined
    return None, examined


def construct_relative(n: NilpotentOperator, w: Filtration, depth: int = DEFAULT_DEPTH) -> RelativeWFOutcome:
    """Decide existence of the relative weight filtration of ``n`` on ``(V, w)``.

    Cases are tried in order: ``n`` already lowers ``w`` by two; ``w`` has a
    single jump; every graded operator vanishes, which forces ``M = W``; and
    finally a bounded search over subspaces generated from the steps of ``w``
    by sums, intersections, images and preimages.  Non-existence is only
    certified in the forced case; an unsuccessful search is inconclusive.
    """
    if not w.preserved_by(n.matrix):
        raise NonInvariantSubspace("the operator does not preserve W")
    if w.preserved_by(n.matrix, -2):
        return Exists(w, "strict")
    if len(w.weights) == 1:
        return Exists(monodromy_filtration(n, w.weights[0]), "single weight")
    expected = graded_monodromy(n, w)
    if all(expected[j] == Filtration.trivial(expected[j].ambient, j) for j in expected):
        verdict = verify_relative(n, w, w)
        if verdict:
            return Exists(w, "forced")
        return CertifiedNonexistent(verdict.weight, verdict.witness, w, verdict.clause)
    found, examined = _search(n, w, expected, depth)
    if found is not None:
        return Exists(found, "search")
    return Inconclusive(depth, examined)


def relative_wf_curve_formula(w: Filtration, n: NilpotentOperator) -> Filtration:
    """``M_{-2} = im N + W_{-2}``, ``M_{-1} = ker N + W_{-2}``, ``M_0 = V``.

    Valid for a punctured-surface homology filtration (weights -2 and -1)
    and an operator with square zero that kills ``W_{-2}``.
    """
    if w.ambient != n.dim:
        raise ValueError("operator and filtration live in different spaces")
    if not set(w.weights) <= {-2, -1}:
        raise ValueError("expected a filtration with jumps at -2 and -1 only")
    low = w.step(-2)
    if not n.power(2).is_zero():
        raise ValueError("the operator must square to zero")
    if not n.matrix.maps_into(low, Subspace.zero(n.dim)):
        raise ValueError("the operator must vanish on W_{-2}")
    steps = {
        -2: n.matrix.image() + low,
        -1: n.matrix.kernel() + low,
        0: Subspace.full(n.dim),
    }
    return Filtration(n.dim, steps)

