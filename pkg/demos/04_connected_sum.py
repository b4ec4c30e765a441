"""Connected sums on a shared axis.

Both factors live in one open book: the first in pages between 0.1pi and 0.9pi,
the second between 1.1pi and 1.9pi. Deleting one arc from each and sharing
its endpoints joins them. Reducing each side at its own extremes removes four
sticks per side, so two trefoils need 12 sticks.
"""

from equistick import (
    arcpres_to_diagram,
    choose_splice_arcs,
    determinant,
    equal_up_to_mirror,
    get_entry,
    jones_polynomial,
    merge_presentations,
    polygon_to_diagram,
    realize_composite,
)

t = get_entry("3_1")
plan = choose_splice_arcs(t.presentation, t.presentation)
merged, sides = merge_presentations(plan)
print("splice pages:", plan.arc1, plan.arc2)
print("merged presentation:", merged)
print("page sides:", sides)

poly = realize_composite(plan)
d = polygon_to_diagram(poly.vertices, clearance=poly.clearance)
print(f"\n{poly.n_edges} sticks, clearance {poly.clearance:.2e}")
j = jones_polynomial(d)
granny = t.expected_jones * t.expected_jones
print("V(t) of the projection:", j.format())
print("trefoil V(t) squared:  ", granny.format())
print("equal up to mirror:    ", equal_up_to_mirror(j, granny))
print("determinant:", determinant(d))

# The granny knot and the square knot differ by the chirality of one factor.
square = t.expected_jones * t.expected_jones.mirror()
print("square knot V(t):      ", square.format())
print("projection is square:  ", equal_up_to_mirror(j, square))

print("\nfigure-eight plus 8_19:")
plan = choose_splice_arcs(get_entry("4_1").presentation, get_entry("8_19").presentation)
poly = realize_composite(plan)
print(f"  {poly.n_edges} sticks (= 2*6 + 2*7 - 8)")
print("  merged grid determinant:", determinant(arcpres_to_diagram(merge_presentations(plan)[0])))
