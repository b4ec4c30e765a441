"""Arc presentations: pages, binding indices and the two rotations.

A knot in an open book meets each half-plane page in one arc whose ends sit on
the binding axis. Writing down which pair of axis points each page joins is
enough to recover the knot.
"""

from equistick import arcpres, validate

trefoil = validate([(1, 3), (2, 4), (3, 5), (1, 4), (2, 5)])
print("trefoil:", trefoil)
print("pages meeting binding index 1:", trefoil.arcs_at(1))

print("\nWalking the knot (page, from index, to index):")
for step in trefoil.traversal():
    print("  ", step)

# Rotating the book or sliding the axis labels cyclically give the same knot.
print("\npage rotation by 2:   ", arcpres.page_rotate(trefoil, 2))
print("binding rotation by 1:", arcpres.binding_rotate(trefoil, 1))

# The stick reduction needs no arc joining the lowest and highest index.
p = validate([(1, 4), (2, 4), (1, 3), (2, 3)])
print("\nhas an arc {1,4}:", p)
print("after normalizing: ", arcpres.normalize_no_extremal_arc(p))

print("\ntext form round trip:")
text = arcpres.serialize_text(trefoil)
print(text, end="")
assert arcpres.parse_text(text) == trefoil

try:
    validate([(1, 2), (1, 3), (1, 2)])
except arcpres.DegreeError as exc:
    print("\nrejected:", exc)
