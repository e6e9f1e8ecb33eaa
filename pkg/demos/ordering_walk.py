"""Contraction orderings: how the leftover vertices fold into a non-face."""

from fillable import (
    attachment_forest,
    closure_bar,
    contraction_ordering,
    gen_rp2_six,
    minimal_non_faces,
    skeleton,
    validate_ordering,
)

K6 = skeleton(gen_rp2_six(), 1)

for M in minimal_non_faces(K6)[:3]:
    ordering = contraction_ordering(K6, M)
    print(f"non-face {M}: contract {ordering.order}")
    assert validate_ordering(K6, M, ordering)

print()

# the ordering is read off a forest of attachment trees rooted in M
M = (2, 3, 6)
forest = attachment_forest(K6, M)
for tree in forest.trees:
    print(f"root {tree.root}: edges {tree.edges}")

# closure_bar is the complex the ordering actually lives in
bar = closure_bar(K6)
print("closure has", len(bar.faces(2)), "triangles, K6 has", len(K6.faces(2)))
