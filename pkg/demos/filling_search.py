"""Search for fillings and inspect the contractibility certificates."""

from fillable import filling_shape, find_fillings, gen_simplex_skeleton, reduced_homology

K = gen_simplex_skeleton(4, 1)
print("complex: 1-skeleton of the tetrahedron boundary (the K4 graph)")
profile = reduced_homology(K)
print("betti numbers:", [profile.betti(d) for d in range(K.dim + 1)])
print("required shape:", filling_shape(K))
print()

fillings = find_fillings(K)
print(f"{len(fillings)} fillings found:")
for filling in fillings:
    faces = ", ".join("".join(str(v) for v in M) for M in filling.non_faces)
    print(f"  {{{faces}}}  certified by {filling.certificate.kind}")
print()

# one certificate in full: the sequence of free collapses down to a point
cert = fillings[0].certificate
print("collapse sequence for the first filling:")
for free_face, coface in cert.collapse_steps:
    print(f"  remove {free_face} from {coface}")
