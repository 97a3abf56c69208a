"""Random generators and independent oracles shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from relweight.filtered import Filtration
from relweight.linalg import LinearMap, Subspace, echelonize, unit_vector
from relweight.nilwf import NilpotentOperator
from relweight.pants import dumbbell_graph, graph_from_ends, theta_graph
from relweight.surface import CurveSystem, SurfaceModel


def random_unimodular(n: int, rng: random.Random, steps: int | None = None):
    """An integer matrix of determinant 1 and its inverse, built from row operations."""
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    q = [row[:] for row in p]
    for _ in range(steps if steps is not None else 2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        # P <- E P with E = I + c e_ij; inverse picks up E^{-1} on the right
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]
        for row in q:
            row[j] -= c * row[i]
    return LinearMap.from_rows(p), LinearMap.from_rows(q)


def conjugate(m: LinearMap, rng: random.Random):
    p, q = random_unimodular(m.rows, rng)
    return p @ m @ q, p


def random_nilpotent(rng: random.Random, max_dim: int = 8) -> NilpotentOperator:
    n = rng.randint(1, max_dim)
    density = rng.random()
    rows = [[rng.choice((-2, -1, 1, 2)) if j > i and rng.random() < density else 0
             for j in range(n)] for i in range(n)]
    m, _ = conjugate(LinearMap.from_rows(rows), rng)
    return NilpotentOperator(m)


def random_subspace(n: int, rng: random.Random, k: int | None = None) -> Subspace:
    k = rng.randint(0, n) if k is None else k
    vecs = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
    return echelonize(vecs, n) if vecs else Subspace.zero(n)


def random_filtration(n: int, rng: random.Random, spread: int = 3) -> Filtration:
    """Random chain of subspaces with random jump weights."""
    vecs = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n + 1)]
    cuts = sorted(rng.sample(range(1, n + 2), rng.randint(1, min(n + 1, 3))))
    w = rng.randint(-spread, 0)
    steps = {}
    for c in cuts:
        steps[w] = echelonize(vecs[:c], n)
        w += rng.randint(1, 2)
    return Filtration(n, steps)


def random_strict_pair(rng: random.Random, max_dim: int = 7):
    """``(N, W)`` with ``N W_k ⊆ W_{k-2}`` for every ``k``, in a random basis."""
    n = rng.randint(1, max_dim)
    weights = sorted(rng.randint(-3, 3) for _ in range(n))
    rows = [[rng.randint(-2, 2) if weights[i] <= weights[j] - 2 else 0 for j in range(n)]
            for i in range(n)]
    m, p = conjugate(LinearMap.from_rows(rows), rng)
    cols = [p.column(j) for j in range(n)]
    steps = {w: echelonize([cols[j] for j in range(n) if weights[j] <= w], n)
             for w in set(weights)}
    return NilpotentOperator(m), Filtration(n, steps)


def random_symplectic(g: int, rng: random.Random) -> LinearMap:
    """Product of integral transvections ``x -> x + c <v, x> v``."""
    s = SurfaceModel(g)
    j = s.intersection_form()
    out = LinearMap.identity(2 * g)
    for _ in range(3 * g):
        v = [rng.randint(-1, 1) for _ in range(2 * g)]
        c = rng.choice((-1, 1))
        jv = [sum(Fraction(v[r]) * j.entries[r][k] for r in range(2 * g)) for k in range(2 * g)]
        t = LinearMap.from_rows([[int(r == k) + c * v[r] * jv[k] for k in range(2 * g)]
                                 for r in range(2 * g)])
        out = t @ out
    return out


def random_curve_system(rng: random.Random):
    """A random valid curve system on a stable ``(g, n)`` with ``g, n <= 3``."""
    while True:
        g, n = rng.randint(0, 3), rng.randint(0, 3)
        if 2 - 2 * g - n < 0:
            break
    s = SurfaceModel(g, n)
    phi = random_symplectic(g, rng) if g else LinearMap.identity(0)
    isotropic = [phi.column(i) for i in range(g)]
    pool = list(isotropic)
    if g >= 2:
        pool.append(tuple(x + y for x, y in zip(isotropic[0], isotropic[1])))
    classes = []
    for h in rng.sample(pool, rng.randint(0, len(pool))):
        lift = [rng.randint(-1, 1) for _ in range(max(n - 1, 0))]
        classes.append(list(h) + lift)
    for _ in range(rng.randint(0, 2)):
        # separating curve: zero in H_1(S), possibly a sum of puncture classes
        lift = [rng.randint(0, 1) for _ in range(max(n - 1, 0))]
        classes.append([0] * (2 * g) + lift)
    labels = [f"c{i}" for i in range(len(classes))]
    return s, CurveSystem.build(s, classes, labels)


def jordan_gr_dims(n: NilpotentOperator) -> dict[int, int]:
    """Gr dims of W(N) predicted from ranks of powers, computed with sympy."""
    mat = sympy.Matrix(n.matrix.entries)
    d = n.dim
    ranks = [d]
    power = sympy.eye(d)
    while ranks[-1]:
        power = power * mat
        ranks.append(power.rank())
    ranks += [0, 0]
    out: dict[int, int] = {}
    for size in range(1, len(ranks) - 1):
        blocks = ranks[size - 1] - 2 * ranks[size] + ranks[size + 1]
        for w in range(-(size - 1), size, 2):
            out[w] = out.get(w, 0) + blocks
    return {w: c for w, c in sorted(out.items()) if c}


def sympy_rank(vectors, n: int) -> int:
    return sympy.Matrix(vectors).rank() if vectors else 0


GENUS3_SHAPES = {
    "k4": {"ab": "AB", "ac": "AC", "ad": "AD", "bc": "BC", "bd": "BD", "cd": "CD"},
    "chain": {"l1": "AA", "e1": "AB", "f": "BC", "g": "BC", "e2": "CD", "l2": "DD"},
    "star": {"e1": "AB", "e2": "AC", "e3": "AD", "l1": "BB", "l2": "CC", "l3": "DD"},
    "necklace": {"p": "AB", "q": "AB", "r": "CD", "s": "CD", "t": "AC", "u": "BD"},
}


def pants_catalog():
    """Named genus 2 and 3 pants graphs, each with a- and b-Lagrangian classes."""
    out = {}
    for g, shapes in ((2, {"theta": theta_graph, "dumbbell": dumbbell_graph}),
                      (3, GENUS3_SHAPES)):
        lag = {"a": [unit_vector(2 * g, i) for i in range(g)],
               "b": [unit_vector(2 * g, g + i) for i in range(g)]}
        for name, shape in shapes.items():
            for side, basis in lag.items():
                if callable(shape):
                    out[f"{name}-{side}"] = shape(basis)
                else:
                    ends = {w: list(e) for w, e in shape.items()}
                    out[f"{name}-{side}"] = graph_from_ends(g, ends, basis)
    return out
