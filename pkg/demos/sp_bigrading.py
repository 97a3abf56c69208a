"""
The monodromy grading on sp(H)
==============================

For a curve system on a closed surface, the monodromy filtration on H
induces one on End(H) and hence on sp(H).  The element xi acts on the
graded pieces of tensor powers of H by scalars.
"""
from relweight.surface import (
    CurveSystem,
    SurfaceModel,
    ab_decomposition,
    sp_graded_dims,
    xi_eigenvalues,
)

s = SurfaceModel(2)
cs = CurveSystem.build(s, [s.a(1)])
print("g = 2, one curve:", sp_graded_dims(s, cs))

dec = ab_decomposition(s, cs)
print("dims of A, H_0, B:", dec.a.dim, dec.h0.dim, dec.b.dim)
for n in (1, 2):
    print(f"xi on Gr^M of H^(x{n}):", {k: str(c) for k, c in xi_eigenvalues(dec, n).items()})

# Lagrangian systems: the top piece has dimension g(g+1)/2
for g in (2, 3):
    s = SurfaceModel(g)
    cs = CurveSystem.build(s, [s.a(i) for i in range(1, g + 1)])
    print(f"g = {g}, Lagrangian:", sp_graded_dims(s, cs))
