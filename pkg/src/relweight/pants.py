"""Pants decompositions as black/white graphs, A-moves and handlebody invariants.

Black vertices are pairs of pants; white vertices are the decomposing curves
(valence 2) or boundary components (valence 1).  Each internal white carries
the homology class of its curve in ``H_1(S)`` of the closed surface, a vector
of length ``2g`` in the basis ``a_1..a_g, b_1..b_g``.  Classes are only
meaningful up to sign and are stored with their first nonzero entry positive.

Everything here is homological: an A-move is accepted when the rewired graph
is a valid pants graph and the new class satisfies the pants relations, not
because a curve realising it has been exhibited.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

from .filtered import Filtration
from .linalg import Subspace, echelonize, unit_vector
from .nilwf import monodromy_filtration
from .surface import CurveSystem, SurfaceModel, h_operator, span_and_isotropy

INTERNAL = "internal"
BOUNDARY = "boundary"


class AMoveError(ValueError):
    pass


def canonical_sign(v: Sequence[int]) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    lead = next((x for x in v if x), 0)
    return tuple(-x for x in v) if lead < 0 else v


@dataclass(frozen=True)
class White:
    id: str
    kind: str
    cls: tuple


@dataclass(frozen=True)
class PantsGraph:
    genus: int
    boundary: int
    blacks: tuple
    whites: tuple
    edges: tuple

    @classmethod
    def build(cls, genus: int, boundary: int, blacks: Iterable[str],
              whites: Iterable[tuple[str, str, Sequence[int] | None]],
              edges: Iterable[tuple[str, str]]) -> PantsGraph:
        ws = []
        for wid, kind, c in whites:
            c = (0,) * (2 * genus) if c is None else canonical_sign(c)
            ws.append(White(str(wid), kind, c))
        return cls(genus, boundary, tuple(str(b) for b in blacks), tuple(ws),
                   tuple((str(b), str(w)) for b, w in edges))

    def white(self, wid: str) -> White:
        for w in self.whites:
            if w.id == wid:
                return w
        raise KeyError(wid)

    def legs(self, black: str) -> list[str]:
        return [w for b, w in self.edges if b == black]

    def ends(self, wid: str) -> list[str]:
        return [b for b, w in self.edges if w == wid]

    @property
    def internal_whites(self) -> list[White]:
        return [w for w in self.whites if w.kind == INTERNAL]

    def classes(self) -> list[tuple]:
        return [w.cls for w in self.internal_whites]

    def surface(self) -> SurfaceModel:
        return SurfaceModel(self.genus, 0)

    def curve_system(self) -> CurveSystem:
        ws = self.internal_whites
        return CurveSystem(tuple(w.cls for w in ws), tuple(w.id for w in ws))

    def betti(self) -> int:
        vertices = len(self.blacks) + len(self.whites)
        return len(self.edges) - vertices + self.components()

    def components(self) -> int:
        adjacency: dict[str, set[str]] = {("b", b): set() for b in self.blacks}
        adjacency.update({("w", w.id): set() for w in self.whites})
        for b, w in self.edges:
            adjacency[("b", b)].add(("w", w))
            adjacency[("w", w)].add(("b", b))
        seen = set()
        count = 0
        for v in adjacency:
            if v in seen:
                continue
            count += 1
            stack = [v]
            while stack:
                u = stack.pop()
                if u in seen:
                    continue
                seen.add(u)
                stack.extend(adjacency[u] - seen)
        return count


@dataclass
class Validation:
    ok: bool
    message: str = "valid"

    def __bool__(self) -> bool:
        return self.ok


def _pants_relation(classes: Sequence[tuple]) -> bool:
    # some choice of signs makes the three boundary classes sum to zero
    for signs in itertools.product((1, -1), repeat=len(classes) - 1):
        total = list(classes[0])
        for s, c in zip(signs, classes[1:]):
            total = [x + s * y for x, y in zip(total, c)]
        if not any(total):
            return True
    return False


def validate(pg: PantsGraph, g: int | None = None, n: int | None = None) -> Validation:
    """Check every structural invariant of a pants graph; report the first failure."""
    g = pg.genus if g is None else g
    n = pg.boundary if n is None else n
    black_ids = set(pg.blacks)
    white_ids = [w.id for w in pg.whites]
    if len(black_ids) != len(pg.blacks) or len(set(white_ids)) != len(white_ids):
        return Validation(False, "duplicate vertex ids")
    if black_ids & set(white_ids):
        return Validation(False, "black and white vertices share an id")
    for b, w in pg.edges:
        if b not in black_ids or w not in white_ids:
            return Validation(False, f"edge ({b}, {w}) must join a black vertex to a white one")
    for b in pg.blacks:
        if len(pg.legs(b)) != 3:
            return Validation(False, f"black vertex {b} has valence {len(pg.legs(b))}, expected 3")
    for w in pg.whites:
        if w.kind not in (INTERNAL, BOUNDARY):
            return Validation(False, f"white vertex {w.id} has unknown kind {w.kind!r}")
        want = 2 if w.kind == INTERNAL else 1
        if len(pg.ends(w.id)) != want:
            return Validation(False, f"{w.kind} white vertex {w.id} has valence "
                                     f"{len(pg.ends(w.id))}, expected {want}")
    if 2 - 2 * g - n >= 0:
        return Validation(False, f"(g, n) = ({g}, {n}) is not stable")
    counts = (len(pg.blacks), len(pg.internal_whites), len(pg.whites) - len(pg.internal_whites))
    expected = (2 * g - 2 + n, 3 * g - 3 + n, n)
    if counts != expected:
        return Validation(False, f"(black, internal, boundary) counts {counts} do not match "
                                 f"{expected} for genus {g} with {n} boundary components")
    if pg.components() != 1:
        return Validation(False, "graph is disconnected")
    if pg.betti() != g:
        return Validation(False, f"first Betti number {pg.betti()} differs from genus {g}")
    surface = SurfaceModel(g)
    for w in pg.whites:
        if len(w.cls) != 2 * g:
            return Validation(False, f"class of {w.id} has length {len(w.cls)}, expected {2 * g}")
        if w.kind == BOUNDARY and any(w.cls):
            return Validation(False, f"boundary white {w.id} must have class 0")
        if any(w.cls) and math.gcd(*w.cls) != 1:
            return Validation(False, f"class of {w.id} is not primitive")
    internal = pg.internal_whites
    for x, y in itertools.combinations(internal, 2):
        if surface.pair(x.cls, y.cls):
            return Validation(False, f"classes of {x.id} and {y.id} intersect")
    for b in pg.blacks:
        if not _pants_relation([pg.white(w).cls for w in pg.legs(b)]):
            return Validation(False, f"boundary classes at {b} violate the pants relation")
    span = echelonize(pg.classes(), 2 * g) if internal else Subspace.zero(2 * g)
    if span.dim != g:
        return Validation(False, f"classes span a subspace of dimension {span.dim}, "
                                 f"not a Lagrangian of dimension {g}")
    return Validation(True)


def cycle_basis(pg: PantsGraph) -> list[dict[str, int]]:
    """Fundamental cycles of the graph, as signed multiplicities of internal whites.

    Each internal white is an edge from its first to its second black end.
    """
    ends = {w.id: pg.ends(w.id) for w in pg.internal_whites}
    if not pg.blacks:
        return []
    root = pg.blacks[0]
    parent: dict[str, tuple[str, str, int] | None] = {root: None}
    queue = deque([root])
    tree = set()
    while queue:
        b = queue.popleft()
        for wid, (u, v) in ends.items():
            if b not in (u, v) or u == v:
                continue
            other, sign = (v, 1) if b == u else (u, -1)
            if other not in parent:
                parent[other] = (b, wid, sign)
                tree.add(wid)
                queue.append(other)

    def path_to_root(b):
        out: dict[str, int] = {}
        while parent[b] is not None:
            prev, wid, sign = parent[b]
            out[wid] = out.get(wid, 0) + sign
            b = prev
        return out

    cycles = []
    for wid, (u, v) in ends.items():
        if wid in tree:
            continue
        cycle = {wid: 1}
        # u -> v along wid, then back v -> root -> u through the tree
        for k, s in path_to_root(v).items():
            cycle[k] = cycle.get(k, 0) - s
        for k, s in path_to_root(u).items():
            cycle[k] = cycle.get(k, 0) + s
        cycles.append({k: s for k, s in cycle.items() if s})
    return cycles


def with_meridian_classes(pg: PantsGraph, lagrangian: Sequence[Sequence[int]] | None = None) -> PantsGraph:
    """Assign to each curve the class of the meridian disc it bounds.

    The meridian of a white pairs with the ``i``-th fundamental cycle by the
    white's multiplicity in it; sending that cycle's dual to ``lagrangian[i]``
    (default ``a_i``) gives the class.
    """
    g = pg.genus
    if lagrangian is None:
        lagrangian = [unit_vector(2 * g, i) for i in range(g)]
    cycles = cycle_basis(pg)
    if len(cycles) != len(lagrangian):
        raise ValueError(f"graph has {len(cycles)} independent cycles, "
                         f"expected {len(lagrangian)}")
    whites = []
    for w in pg.whites:
        c = [0] * (2 * g)
        for z, basis_vector in zip(cycles, lagrangian):
            k = z.get(w.id, 0)
            if k:
                c = [x + k * int(y) for x, y in zip(c, basis_vector)]
        whites.append(replace(w, cls=canonical_sign(c)))
    return replace(pg, whites=tuple(whites))


def a_move(pg: PantsGraph, white: str, pairing: int, new_class: Sequence[int]) -> PantsGraph:
    """Replace the curve ``white`` inside the four-holed sphere formed by its two pants.

    With legs ``x1, x2`` at the first black end and ``y1, y2`` at the second,
    ``pairing=0`` joins ``x1`` with ``y1`` and ``pairing=1`` joins ``x1`` with
    ``y2``.  The new curve keeps the id ``white`` and gets ``new_class``.
    """
    check = validate(pg)
    if not check:
        raise AMoveError(f"input graph is invalid: {check.message}")
    w = pg.white(white)
    if w.kind != INTERNAL:
        raise AMoveError(f"{white} is a boundary component, not a curve")
    b1, b2 = pg.ends(white)
    if b1 == b2:
        raise AMoveError(f"{white} has a single black end; its pants do not form a four-holed sphere")
    if pairing not in (0, 1):
        raise AMoveError("pairing must be 0 or 1")
    x = pg.legs(b1)
    x.remove(white)
    y = pg.legs(b2)
    y.remove(white)
    y_first, y_second = (y[0], y[1]) if pairing == 0 else (y[1], y[0])
    new_class = canonical_sign(new_class)
    if len(new_class) != 2 * pg.genus:
        raise AMoveError("new class has the wrong length")
    surface = pg.surface()
    retained = [v for v in pg.internal_whites if v.id != white]
    for v in retained:
        if surface.pair(new_class, v.cls):
            raise AMoveError(f"new class meets the class of {v.id}")
    leg_span = echelonize([pg.white(v).cls for v in x + y], 2 * pg.genus)
    if not leg_span.contains(new_class):
        raise AMoveError("new class is not in the span of the classes of the four legs")
    others = [e for e in pg.edges if e[0] not in (b1, b2)]
    rewired = others + [(b1, x[0]), (b1, y_first), (b1, white),
                        (b2, x[1]), (b2, y_second), (b2, white)]
    whites = tuple(replace(v, cls=new_class) if v.id == white else v for v in pg.whites)
    out = replace(pg, whites=whites, edges=tuple(rewired))
    check = validate(out)
    if not check:
        raise AMoveError(f"A-move produces an invalid graph: {check.message}")
    return out


def candidate_classes(pg: PantsGraph, white: str, pairing: int) -> list[tuple]:
    """Classes ``±x ± y`` that the pants relation allows for the new curve."""
    b1, b2 = pg.ends(white)
    x = pg.legs(b1)
    x.remove(white)
    y = pg.legs(b2)
    y.remove(white)
    partner = y[0] if pairing == 0 else y[1]
    cx, cy = pg.white(x[0]).cls, pg.white(partner).cls
    out = {canonical_sign([p + s * q for p, q in zip(cx, cy)]) for s in (1, -1)}
    return sorted(out)


def a_move_neighbors(pg: PantsGraph) -> list[PantsGraph]:
    out = []
    for w in pg.internal_whites:
        b1, b2 = pg.ends(w.id)
        if b1 == b2:
            continue
        for pairing in (0, 1):
            for c in candidate_classes(pg, w.id, pairing):
                try:
                    out.append(a_move(pg, w.id, pairing, c))
                except AMoveError:
                    continue
    return out


def canonical_form(pg: PantsGraph) -> tuple:
    """Isomorphism invariant key: graphs agree iff some relabelling of vertices matches
    kinds, classes and incidences."""
    best = None
    for perm in itertools.permutations(range(len(pg.blacks))):
        index = dict(zip(pg.blacks, perm))
        whites = sorted((w.kind, w.cls, tuple(sorted(index[b] for b in pg.ends(w.id))))
                        for w in pg.whites)
        key = tuple(whites)
        if best is None or key < best:
            best = key
    return (pg.genus, pg.boundary, best)


@dataclass(frozen=True)
class Reachability:
    reachable: bool
    moves: int | None = None
    explored: int = 0

    @property
    def status(self) -> str:
        return "reachable" if self.reachable else "not_within_bound"


def a_move_reachable(pg1: PantsGraph, pg2: PantsGraph, bound: int) -> Reachability:
    """Breadth-first search for a chain of at most ``bound`` A-moves from ``pg1`` to ``pg2``."""
    for pg in (pg1, pg2):
        check = validate(pg)
        if not check:
            raise ValueError(check.message)
    if (pg1.genus, pg1.boundary) != (pg2.genus, pg2.boundary):
        raise ValueError("graphs describe different surfaces")
    goal = canonical_form(pg2)
    start = canonical_form(pg1)
    if start == goal:
        return Reachability(True, 0, 1)
    seen = {start}
    frontier = [pg1]
    for depth in range(1, bound + 1):
        following = []
        for pg in frontier:
            for nb in a_move_neighbors(pg):
                key = canonical_form(nb)
                if key in seen:
                    continue
                if key == goal:
                    return Reachability(True, depth, len(seen) + 1)
                seen.add(key)
                following.append((key, nb))
        following.sort(key=lambda kv: kv[0])
        frontier = [nb for _, nb in following]
        if not frontier:
            break
    return Reachability(False, None, len(seen))


@dataclass(frozen=True)
class HandlebodyInvariant:
    """Span of the curve classes and the monodromy filtration they induce on ``H_1(S)``."""

    span: Subspace
    monodromy_filtration_on_h: Filtration


def handlebody_invariant(pg: PantsGraph, surface: SurfaceModel | None = None) -> HandlebodyInvariant:
    check = validate(pg)
    if not check:
        raise ValueError(check.message)
    surface = pg.surface() if surface is None else surface.closed()
    cs = pg.curve_system()
    span = span_and_isotropy(surface, cs).span
    return HandlebodyInvariant(span, monodromy_filtration(h_operator(surface, cs), -1))


class SpanChanged(ValueError):
    pass


def homology_neutral_edit(surface: SurfaceModel, cs: CurveSystem,
                          insert: tuple[str, Sequence[int]] | None = None,
                          delete: str | None = None) -> CurveSystem:
    """Insert a curve ``(label, class)`` or delete one by label, keeping the span fixed."""
    if (insert is None) == (delete is None):
        raise ValueError("give exactly one of insert or delete")
    if insert is not None:
        label, c = insert
        c = list(c) + [0] * (surface.dim - len(c))
        edited = cs.with_curve(label, c)
        edited.validate(surface)
    else:
        edited = cs.without(delete)
    before = span_and_isotropy(surface, cs).span
    after = span_and_isotropy(surface, edited).span
    if before != after:
        raise SpanChanged(f"edit changes the span from dimension {before.dim} to {after.dim}")
    return edited


def theta_graph(lagrangian: Sequence[Sequence[int]] | None = None) -> PantsGraph:
    """Genus 2: two pants glued along all three boundary curves."""
    pg = PantsGraph.build(2, 0, ["p", "q"], [(w, INTERNAL, None) for w in ("u", "v", "w")],
                          [("p", "u"), ("p", "v"), ("p", "w"), ("q", "u"), ("q", "v"), ("q", "w")])
    return with_meridian_classes(pg, lagrangian)


def dumbbell_graph(lagrangian: Sequence[Sequence[int]] | None = None) -> PantsGraph:
    """Genus 2: each pants glued to itself along a curve, joined by a separating curve."""
    pg = PantsGraph.build(2, 0, ["p", "q"], [(w, INTERNAL, None) for w in ("u", "v", "w")],
                          [("p", "u"), ("p", "u"), ("p", "w"), ("q", "v"), ("q", "v"), ("q", "w")])
    return with_meridian_classes(pg, lagrangian)


def graph_from_ends(genus: int, ends: Mapping[str, Sequence[str]],
                    lagrangian: Sequence[Sequence[int]] | None = None) -> PantsGraph:
    """Pants graph with meridian classes from ``white id -> black ends``.

    Whites with one end are boundary components; the number of those is the
    boundary count.
    """
    blacks = sorted({b for bs in ends.values() for b in bs})
    whites = [(w, INTERNAL if len(bs) == 2 else BOUNDARY, None) for w, bs in ends.items()]
    edges = [(b, w) for w, bs in ends.items() for b in bs]
    boundary = sum(1 for bs in ends.values() if len(bs) == 1)
    return with_meridian_classes(PantsGraph.build(genus, boundary, blacks, whites, edges), lagrangian)
