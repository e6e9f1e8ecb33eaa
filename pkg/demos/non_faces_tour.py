"""Tour of minimal non-faces for the built-in generator complexes."""

from fillable import (
    SimplicialComplex,
    gen_cross_polytope_boundary,
    gen_rp2_six,
    gen_simplex_skeleton,
    minimal_non_faces,
    skeleton,
)


def show(name, K):
    non_faces = minimal_non_faces(K)
    print(f"{name}: {len(K.vertices)} vertices, dim {K.dim}")
    for M in non_faces:
        print("   ", " ".join(str(v) for v in M))
    print()


def main():
    # a path on four vertices misses one edge and both diagonals
    path = SimplicialComplex([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
    show("path P4", path)

    # the square: two missing diagonals, nothing else
    square = SimplicialComplex([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (1, 4)])
    show("square", square)

    show("0-skeleton of the triangle boundary", gen_simplex_skeleton(3, 0))
    show("1-skeleton of the 4-simplex boundary", gen_simplex_skeleton(5, 1))

    S = gen_cross_polytope_boundary(1)
    show("octahedron boundary, 1-skeleton", skeleton(S, 1))

    # the six-vertex projective plane: its 2-skeleton is all of K6 plus
    # ten of the twenty triangles, so ten triangles are minimal non-faces
    show("six-vertex projective plane", gen_rp2_six())


if __name__ == "__main__":
    main()
