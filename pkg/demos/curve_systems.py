"""
Curve systems and their relative weight filtration
==================================================

A curve system on a punctured surface gives a nilpotent operator on H_1.
Its relative weight filtration exists and has a closed form; the general
search finds the same filtration.
"""
from relweight import construct_relative, relative_wf_curve_formula, verify_relative
from relweight.surface import CurveSystem, SurfaceModel, picard_lefschetz, punctured_homology

s = SurfaceModel(1, 2)          # genus 1, two punctures: basis a, b, e
cs = CurveSystem.build(s, [s.a(1)], ["alpha"])
n = picard_lefschetz(s, cs)
w = punctured_homology(1, 2)
print("N b =", [str(x) for x in n.apply(s.b(1))])
print("W:", w.gr_dims())

m = relative_wf_curve_formula(w, n)
print("closed form M:", m.gr_dims())
print("verified:", bool(verify_relative(n, w, m)))

out = construct_relative(n, w)
print("search:", type(out).__name__, out.method, "agrees:", out.filtration == m)

# a larger example: two curves on genus 2 with a puncture-carrying lift
s = SurfaceModel(2, 3)
cs = CurveSystem.build(s, [[1, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 1]], ["x", "y"])
n = picard_lefschetz(s, cs)
w = punctured_homology(2, 3)
m = relative_wf_curve_formula(w, n)
print("\ngenus 2, 3 punctures, M:", m.gr_dims(), bool(verify_relative(n, w, m)))
