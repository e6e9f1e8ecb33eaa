"""The identity family from codimension-two skeletons of simplex boundaries.

For each m the (m-3)-skeleton of the boundary of the (m-1)-simplex has the m
facets of that boundary as its minimal non-faces.  Omitting one facet leaves a
filling, and comparing two such fillings expresses one bracket through the
other m-1 with alternating signs.
"""

from fillable import gen_simplex_skeleton, render_identity, sphere_identity

for m in range(3, 8):
    S = gen_simplex_skeleton(m, m - 2)
    ident = sphere_identity(S, tuple(range(1, m)))
    print(f"m={m}:")
    print("  ", render_identity(ident, "text"))
    print("  ", render_identity(ident, "latex"))
