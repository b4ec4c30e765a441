"""Telling knots apart: Jones polynomial and determinant from a grid diagram.

Laying the pages out as columns of a grid gives a planar diagram with
vertical strands passing over horizontal ones. The Kauffman bracket of that
diagram gives the Jones polynomial; a checkerboard colouring gives the
Goeritz matrix, whose minor is the determinant.
"""

from equistick import arcpres_to_diagram, determinant, format_pd, get_entry, jones_polynomial
from equistick.invariants import state_sum_bracket, kauffman_bracket

for name in ("3_1", "4_1", "5_1", "8_19"):
    entry = get_entry(name)
    d = arcpres_to_diagram(entry.presentation)
    j = jones_polynomial(d)
    print(f"{name}: {entry.arc_index} arcs, grid with {d.num_crossings} crossings, writhe {d.writhe}")
    print(f"      V(t) = {j.format()}")
    print(f"      det  = {determinant(d)}  |V(-1)| = {abs(j.evaluate(-1))}")

d = arcpres_to_diagram(get_entry("3_1").presentation)
print("\nPD code of the trefoil grid diagram:")
print(format_pd(d))

# Two ways to the same bracket: all 2^c smoothings, or one crossing at a time.
print("\nstate sum   :", state_sum_bracket(d).format("A"))
print("contraction :", kauffman_bracket(d).format("A"))
