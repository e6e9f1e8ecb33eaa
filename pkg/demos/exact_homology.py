"""Exact integer linear algebra: Smith normal form and homology with torsion."""

import numpy as np

from fillable import (
    boundary_matrix,
    gen_cross_polytope_boundary,
    gen_rp2_six,
    reduced_homology,
    smith_normal_form,
)

A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
dec = smith_normal_form(A)
print("A =", A)
print("S =", dec.S.tolist())
check = dec.U.dot(np.array(A, dtype=object)).dot(dec.V)
print("U A V == S:", check.tolist() == dec.S.tolist())
print()

rp2 = gen_rp2_six()
d2 = boundary_matrix(rp2, 2)
print("projective plane, boundary matrix dimensions:", d2.shape)
profile = reduced_homology(rp2)
print("betti numbers:", [profile.betti(d) for d in range(3)])
print("torsion in degree 1:", profile.torsion(1))
print()

# an honest 2-sphere for contrast: one free class on top, no torsion anywhere
octa = gen_cross_polytope_boundary(1)
profile = reduced_homology(octa)
print("octahedron betti numbers:", [profile.betti(d) for d in range(3)])
print("octahedron torsion in degree 1:", profile.torsion(1))
