"""Derive the graded Jacobi identity from two fillings of three points.

Three points admit three two-edge fillings.  Comparing two of them along a
shared target edge produces a relation among the three brackets, and
specializing the points to spheres of chosen dimensions turns the relation
into the graded Jacobi identity.
"""

from fillable import (
    bracket_text,
    derive_identity,
    gen_simplex_skeleton,
    graded_lie_check,
    is_filling,
    render_identity,
    specialize_spheres,
)


def main():
    K = gen_simplex_skeleton(3, 0)
    filling_a = is_filling(K, [(2, 3), (1, 3)])
    filling_b = is_filling(K, [(1, 3), (1, 2)])
    target = filling_b.non_faces.index((1, 2))

    ident = derive_identity(K, filling_a, filling_b, target)
    print(render_identity(ident, "text"))
    print(render_identity(ident, "latex"))
    print()

    for grading in [(1, 1, 1), (1, 2, 3), (2, 2, 2)]:
        terms = specialize_spheres(ident, grading)
        rendered = ""
        for t in terms:
            sign = " - " if t.coeff < 0 else (" + " if rendered else "")
            magnitude = "" if abs(t.coeff) == 1 else f"{abs(t.coeff)}*"
            rendered += f"{sign}{magnitude}{bracket_text(t.word)}"
        ok = graded_lie_check(terms, grading)
        print(f"degrees {grading}: {rendered} = 0   [{'ok' if ok else 'FAILED'}]")


if __name__ == "__main__":
    main()
