"""A bracket relation with a coefficient of 2, from the projective plane.

The complete graph on six vertices is the 1-skeleton of the six-vertex
triangulation of the projective plane.  Its twenty triangles split into the
ten faces of the triangulation and ten complementary triples; the ten missing
triples are exactly the minimal non-faces of K6.  Swapping single triples in
and out produces fillings whose comparison yields an identity that is not a
Jacobi relation: one coefficient is 2, witnessing the torsion upstairs.
"""

from fillable import (
    RP2_FILLING_TRIPLES,
    derive_identity,
    gen_rp2_six,
    is_filling,
    reduced_homology,
    render_identity,
    skeleton,
)


def main():
    rp2 = gen_rp2_six()
    profile = reduced_homology(rp2)
    print("projective plane homology:")
    print("  betti:", [profile.betti(d) for d in range(3)])
    print("  torsion:", profile.torsion(1))
    print()

    K6 = skeleton(rp2, 1)
    pool = set(RP2_FILLING_TRIPLES)
    filling_a = is_filling(K6, sorted((pool - {(4, 5, 6)}) | {(1, 2, 3)}))
    filling_b = is_filling(K6, sorted((pool - {(1, 2, 4)}) | {(1, 2, 3)}))
    print("filling A:", " ".join("".join(map(str, M)) for M in filling_a.non_faces))
    print("filling B:", " ".join("".join(map(str, M)) for M in filling_b.non_faces))
    print()

    target = filling_b.non_faces.index((4, 5, 6))
    ident = derive_identity(K6, filling_a, filling_b, target)
    print(render_identity(ident, "text"))
    print("unique:", ident.unique)


if __name__ == "__main__":
    main()
