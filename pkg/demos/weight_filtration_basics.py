"""
Weight filtration of a nilpotent matrix
=======================================

Build W(N) for a Jordan block and for a less obvious matrix, then check
the two defining properties directly.
"""
from relweight import NilpotentOperator, monodromy_filtration, weight_filtration
from relweight.nilwf import weight_axioms_hold

# one 3x3 Jordan block: N e3 = e2, N e2 = e1
jordan = NilpotentOperator.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
w = weight_filtration(jordan)
print("Jordan block, Gr dims:", w.gr_dims())
for k in w.weights:
    print(f"  W_{k} basis:", [list(map(str, v)) for v in w.step(k).basis])

# blocks of sizes 2 and 1, disguised by a change of basis
n = NilpotentOperator.from_rows([[1, -1, 1], [1, -1, 1], [0, 0, 0]])
w = weight_filtration(n)
print("\nsizes 2 + 1, Gr dims:", w.gr_dims())
print("axioms hold:", weight_axioms_hold(n, w))

# recentring only moves the indices
print("centred at 5:", monodromy_filtration(n, 5).gr_dims())
