"""
Pants graphs and A-moves
========================

Two pants decompositions of a genus 2 surface bounding the same handlebody
are one A-move apart; choosing the other Lagrangian changes the invariant.
"""
from relweight.pants import (
    a_move,
    a_move_neighbors,
    a_move_reachable,
    dumbbell_graph,
    handlebody_invariant,
    theta_graph,
    validate,
)

A = [[1, 0, 0, 0], [0, 1, 0, 0]]
B = [[0, 0, 1, 0], [0, 0, 0, 1]]

dumbbell, theta = dumbbell_graph(A), theta_graph(A)
print("dumbbell classes:", dumbbell.classes(), validate(dumbbell).message)
print("theta classes:   ", theta.classes(), validate(theta).message)

moved = a_move(dumbbell, "w", 0, (1, 1, 0, 0))
print("after one A-move:", moved.classes())
print("search:", a_move_reachable(dumbbell, theta, 3).status)

inv = handlebody_invariant(theta)
print("span of theta:", [[str(x) for x in v] for v in inv.span.basis])
print("all neighbours share it:",
      all(handlebody_invariant(nb) == inv for nb in a_move_neighbors(theta)))
print("b-Lagrangian theta shares it:", handlebody_invariant(theta_graph(B)) == inv)
