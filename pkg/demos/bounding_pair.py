"""
A bounding pair has no relative weight filtration
=================================================

The twist difference of two disjoint homologous curves acts trivially on
both graded pieces of W, which forces M = W, and M = W is not lowered by two.
"""
from relweight import construct_relative
from relweight.nilwf import graded_monodromy, verify_relative
from relweight.surface import bounding_pair_model

for g in (1, 2, 3):
    w, n = bounding_pair_model(g)
    forced = graded_monodromy(n, w)
    print(f"genus {g}: graded monodromy", {j: f.gr_dims() for j, f in forced.items()})
    out = construct_relative(n, w)
    print(f"  {type(out).__name__} at k = {out.weight}, witness {[str(x) for x in out.witness]}")
    print("  N(witness) =", [str(x) for x in n.apply(out.witness)])
    print("  check:", verify_relative(n, w, out.candidate).message)
