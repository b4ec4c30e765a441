"""Eight unit sticks for a trefoil.

Each of the five arcs becomes two unit sticks meeting at an apex in its page,
which gives ten sticks. At the lowest axis point the two sticks there are
removed, a neighbouring stick is swung in its page until its end nearly
touches the axis, the other neighbour is swung until the two free ends are
exactly one unit apart, and a new stick closes the gap. Doing the same at the
top leaves eight sticks.
"""

import numpy as np

from equistick import get_entry, polygon_to_diagram, realize, realize_doubled, jones_polynomial

p = get_entry("3_1").presentation

doubled = realize_doubled(p)
print(f"doubled form: {doubled.n_edges} sticks, clearance {doubled.clearance:.3e}")

poly = realize(p)
print(f"reduced form: {poly.n_edges} sticks, clearance {poly.clearance:.3e}")
print("edge lengths - 1:", np.array2string(poly.edge_lengths() - 1, precision=2))
print("\nvertices (label, x, y, z):")
for label, v in zip(poly.labels, poly.vertices):
    print(f"  {label:>6}  {v[0]: .6f} {v[1]: .6f} {v[2]: .6f}")

d = polygon_to_diagram(poly.vertices, seed=0)
print(f"\na random projection has {d.num_crossings} crossings and V(t) = {jones_polynomial(d).format()}")
