"""
Representation dimensions and the one-irreducible bound
=======================================================

Compare dim V_[k,k] and dim V_[k,k,1] with g(g+1)/2 and list where the
single-irreducible estimate is not enough by itself.
"""
from relweight.repdim import dims_table, insufficient_pairs, lyndon_words, witt_dim

print("free Lie algebra on 3 generators:", [witt_dim(3, m) for m in range(1, 7)])
print("Lyndon words of length 3 on 2 letters:", list(lyndon_words(2, 3)))

print("\ng  m  lambda     dim   bound")
for row in dims_table([3, 4, 7], range(1, 5)):
    mark = "" if row.sufficient else "  <- not enough"
    print(f"{row.g}  {row.m}  {str(list(row.partition)):9} {row.dim:5} {row.bound:6}{mark}")

print("\ncovered but insufficient:", insufficient_pairs())
