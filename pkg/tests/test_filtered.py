import random

import pytest

from helpers import random_filtration, random_subspace
from relweight.filtered import (
    FilteredMap,
    Filtration,
    NotFiltrationPreserving,
    bigraded_dims,
    dual_filtration,
    gr,
    graded_sequence_exact,
    hom_dims,
    hom_dual_filtration,
    hom_filtration,
    induced_filtrations,
    scalar_on_graded,
    strict_by_exactness,
    strict_by_intersection,
    strictness,
    subquotient_agreement,
    subquotient_filtrations,
    tensor_dims,
    tensor_filtration,
)
from relweight.linalg import LinearMap, Subspace, echelonize
from relweight.surface import punctured_homology


def line(n, *v):
    return echelonize([v], n)


def test_normalisation_and_equality():
    f = Filtration(3, {-5: Subspace.zero(3), 0: line(3, 1, 0, 0), 1: line(3, 1, 0, 0),
                       2: Subspace.full(3)})
    assert f.weights == [0, 2]
    assert f == Filtration(3, {0: line(3, 1, 0, 0), 2: Subspace.full(3)})
    assert f.step(-1) == Subspace.zero(3) and f.step(1).dim == 1 and f.step(99).dim == 3
    assert f[0] == f.step(0)


def test_top_step_is_completed():
    f = Filtration(2, {0: line(2, 1, 0)})
    assert f.step(1) == Subspace.full(2)
    assert f.gr_dims() == {0: 1, 1: 1}


def test_non_monotone_steps_rejected():
    with pytest.raises(ValueError):
        Filtration(2, {0: line(2, 1, 0), 1: line(2, 0, 1)})


def test_gr_examples():
    t = Filtration.trivial(3)
    assert t.gr_dims() == {0: 3}
    assert gr(t, 1).dim == 0
    w = punctured_homology(1, 2)
    assert w.gr_dims() == {-2: 1, -1: 2}
    piece = gr(w, -1)
    assert piece.weight == -1 and len(piece.basis) == 2


def test_gr_dims_sum_to_dimension():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(1, 6)
        f = random_filtration(n, rng)
        assert sum(f.gr_dims().values()) == n


def test_tensor_examples():
    a = Filtration.trivial(2)
    assert tensor_filtration(a, a).gr_dims() == {0: 4}
    w = punctured_homology(1, 2)
    assert tensor_filtration(w, w).gr_dims() == {-4: 1, -3: 4, -2: 4}
    point = Filtration.trivial(1, 3)
    assert tensor_filtration(w, point).gr_dims() == w.shift(3).gr_dims() == {1: 1, 2: 2}


def test_dual_and_hom_examples():
    w = punctured_homology(1, 2)
    assert dual_filtration(w).gr_dims() == {1: 2, 2: 1}
    assert hom_dual_filtration(w).gr_dims() == {1: 2, 2: 1}
    pure = Filtration.trivial(2, 5)
    assert hom_filtration(pure, pure).gr_dims() == {0: 4}
    m = Filtration.from_chain(4, {-2: [[1, 0, 0, 0]], -1: [[1, 0, 0, 0], [0, 1, 0, 0],
                                                              [0, 0, 1, 0]]})
    m = Filtration(4, {**m.jumps, 0: Subspace.full(4)})
    assert m.gr_dims() == {-2: 1, -1: 2, 0: 1}
    assert hom_filtration(m, m).gr_dims() == {-2: 1, -1: 4, 0: 6, 1: 4, 2: 1}


def test_hom_filtration_steps_are_filtered_maps():
    rng = random.Random(5)
    for _ in range(10):
        a = random_filtration(3, rng)
        b = random_filtration(2, rng)
        h = hom_filtration(a, b)
        for k in h.weights:
            for phi in h.step(k).basis:
                f = LinearMap.from_rows([phi[r * 3:(r + 1) * 3] for r in range(2)])
                for m in a.window(1):
                    assert f.maps_into(a.step(m), b.step(m + k))


def test_convolution_oracles():
    rng = random.Random(11)
    for _ in range(25):
        a = random_filtration(rng.randint(1, 4), rng)
        b = random_filtration(rng.randint(1, 4), rng)
        assert tensor_filtration(a, b).gr_dims() == tensor_dims(a.gr_dims(), b.gr_dims())
        assert hom_filtration(a, b).gr_dims() == hom_dims(a.gr_dims(), b.gr_dims())
        assert dual_filtration(a).gr_dims() == {-k: d for k, d in sorted(
            a.gr_dims().items(), reverse=True)}


def test_induced_filtration_examples():
    w = punctured_homology(1, 2)
    on_sub, on_q = induced_filtrations(w, Subspace.full(3))
    assert on_sub == w and on_q.ambient == 0
    on_sub, on_q = induced_filtrations(w, Subspace.zero(3))
    assert on_sub.ambient == 0 and on_q == w
    on_sub, on_q = induced_filtrations(w, w.step(-2))
    assert on_sub.gr_dims() == {-2: 1}
    assert on_q.gr_dims() == {-1: 2}


def test_graded_sequence_exact():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(1, 5)
        assert graded_sequence_exact(random_filtration(n, rng), random_subspace(n, rng))


def test_subquotient_agreement_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        f = random_filtration(n, rng)
        w = random_subspace(n, rng)
        u = w & random_subspace(n, rng)
        assert subquotient_agreement(f, u, w)
    f = random_filtration(4, rng)
    assert subquotient_agreement(f, Subspace.zero(4), random_subspace(4, rng))
    assert subquotient_agreement(f, random_subspace(4, rng), Subspace.full(4))


def test_subquotient_requires_nesting():
    f = Filtration.trivial(2)
    with pytest.raises(ValueError):
        subquotient_filtrations(f, line(2, 1, 0), line(2, 0, 1))


def test_strictness_examples():
    w = punctured_homology(1, 2)
    ident = FilteredMap(LinearMap.identity(3), w, w)
    assert strictness(ident)
    on_sub, _ = induced_filtrations(w, w.step(-2))
    inclusion = LinearMap.from_columns(list(w.step(-2).basis), 3)
    sub = Filtration(1, {-2: Subspace.full(1)})
    assert on_sub.gr_dims() == sub.gr_dims()
    assert strictness(FilteredMap(inclusion, sub, w))
    # weight-0 generator sent into W_{-1} of the target
    v1 = Filtration.trivial(1)
    v2 = Filtration(2, {-1: line(2, 1, 0), 0: Subspace.full(2)})
    f = FilteredMap(LinearMap.from_rows([[1], [0]]), v1, v2)
    assert not strictness(f)


def test_filtered_map_must_preserve():
    v1 = Filtration(1, {-1: Subspace.full(1)})
    v2 = Filtration(1, {0: Subspace.full(1)})
    with pytest.raises(NotFiltrationPreserving):
        FilteredMap(LinearMap.identity(1), v1, v2)


def test_two_strictness_checks_agree():
    rng = random.Random(13)
    strict_seen = non_strict_seen = 0
    for _ in range(80):
        a = random_filtration(rng.randint(1, 4), rng, spread=1)
        b = random_filtration(rng.randint(1, 4), rng, spread=1)
        h = hom_filtration(a, b)
        base = h.step(0)
        if base.dim == 0:
            continue
        coeffs = [rng.randint(-2, 2) for _ in base.basis]
        phi = [sum(c * v[k] for c, v in zip(coeffs, base.basis)) for k in range(h.ambient)]
        f = FilteredMap(LinearMap.from_rows([phi[r * a.ambient:(r + 1) * a.ambient]
                                             for r in range(b.ambient)]), a, b)
        s = strict_by_intersection(f)
        assert s == strict_by_exactness(f)
        strict_seen += s
        non_strict_seen += not s
    assert strict_seen and non_strict_seen


def test_bigraded_examples():
    rng = random.Random(17)
    f = random_filtration(4, rng)
    diagonal = bigraded_dims(f, f)
    assert all(m == k for m, k in diagonal)
    assert {m: d for (m, _k), d in diagonal.items()} == f.gr_dims()
    trivial = Filtration.trivial(4)
    table = bigraded_dims(trivial, f)
    assert {k: d for (_m, k), d in table.items()} == f.gr_dims()


def test_bigraded_orders_agree():
    rng = random.Random(19)
    for _ in range(30):
        n = rng.randint(1, 5)
        f, g = random_filtration(n, rng), random_filtration(n, rng)
        table = bigraded_dims(f, g)
        assert table == bigraded_dims(f, g, order="FG") == bigraded_dims(f, g, order="GF")
        assert sum(table.values()) == n


def test_scalar_on_graded():
    f = Filtration(2, {0: line(2, 1, 0), 1: Subspace.full(2)})
    op = LinearMap.from_rows([[3, 7], [0, 5]])
    assert scalar_on_graded(op, f) == {0: 3, 1: 5}
    g = Filtration.trivial(2)
    assert scalar_on_graded(op, g) == {0: None}
