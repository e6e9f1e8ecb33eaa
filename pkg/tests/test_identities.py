import json

import pytest

from fillable.chains import Chain
from fillable.complexes import (
    SimplicialComplex,
    gen_rp2_six,
    gen_simplex_skeleton,
    skeleton,
)
from fillable.fillings import Filling, is_filling
from fillable.identities import (
    GradedBracketTerm,
    WhiteheadExpr,
    WhiteheadIdentity,
    bracket_text,
    build_expr,
    derive_identity,
    graded_lie_check,
    identity_residual,
    parse_identity_json,
    render_identity,
    specialize_spheres,
    sphere_identity,
)


def test_build_expr_and_describe():
    K6 = skeleton(gen_rp2_six(), 1)
    expr = build_expr(K6, (1, 2, 3), (4, 5, 6))
    assert expr.rho == (1, 2, 3, 4, 5, 6)
    assert expr.describe() == "[[[w(123),e_4],e_5],e_6] . rho->123456"
    with pytest.raises(ValueError):
        build_expr(K6, (1, 2, 3), (4, 5))
    with pytest.raises(ValueError):
        build_expr(K6, (1, 2, 3), (4, 5, 7))


def test_sphere_identity_m3_structure():
    ident = sphere_identity(gen_simplex_skeleton(3, 1), (1, 2))
    assert ident.lhs.non_face == (1, 2)
    assert ident.lhs.ordering == (3,)
    assert [(c, e.non_face, e.ordering) for c, e in ident.rhs] == [
        (-1, (2, 3), (1,)),
        (1, (1, 3), (2,)),
    ]
    assert ident.unique and ident.pure
    assert ident.coefficient((1, 3)) == 1
    assert ident.coefficient((9, 10)) == 0
    assert identity_residual(ident).is_zero
    prov = ident.provenance
    assert prov.solution == (-1, 1)
    assert prov.kernel_dim == 0
    assert prov.certificate_a == "collapse_sequence"


def test_derive_identity_drops_zeros_but_keeps_full_solution():
    points = gen_simplex_skeleton(4, 0)
    fa = is_filling(points, [(1, 2), (1, 3), (1, 4)])
    fb = is_filling(points, [(1, 2), (2, 3), (2, 4)])
    ident = derive_identity(points, fa, fb, 1)
    assert ident.lhs.non_face == (2, 3)
    assert [(c, e.non_face) for c, e in ident.rhs] == [(-1, (1, 2)), (1, (1, 3))]
    assert ident.provenance.solution == (-1, 1, 0)
    assert ident.unique


def test_derive_identity_validates_inputs():
    points = gen_simplex_skeleton(4, 0)
    fa = is_filling(points, [(1, 2), (1, 3), (1, 4)])
    fb = is_filling(points, [(1, 2), (2, 3), (2, 4)])
    with pytest.raises(ValueError):
        derive_identity(points, fa, fb, 5)

    impure = Filling(non_faces=((1, 2), (1, 3, 4)), certificate=fa.certificate, pure=False)
    with pytest.raises(ValueError):
        derive_identity(points, impure, fb, 0)

    shifted = Filling(non_faces=((1, 2, 3),), certificate=fa.certificate, pure=True)
    with pytest.raises(ValueError):
        derive_identity(points, fa, shifted, 0)


def test_derive_identity_ordering_override():
    points = gen_simplex_skeleton(4, 0)
    fa = is_filling(points, [(1, 2), (1, 3), (1, 4)])
    fb = is_filling(points, [(1, 2), (2, 3), (2, 4)])
    ident = derive_identity(points, fa, fb, 1, orderings={(2, 3): (4, 1)})
    assert ident.lhs.ordering == (4, 1)
    with pytest.raises(ValueError):
        derive_identity(points, fa, fb, 1, orderings={(2, 3): (1, 1)})


def test_specialize_spheres_signs():
    ident = sphere_identity(gen_simplex_skeleton(3, 1), (1, 2))
    for degrees, signs in [
        ((1, 1, 1), (1, 1, 1)),
        ((1, 2, 3), (1, -1, -1)),
        ((2, 2, 2), (1, 1, -1)),
        ({1: 3, 2: 1, 3: 2}, (1, -1, -1)),
    ]:
        terms = specialize_spheres(ident, degrees)
        assert tuple(t.coeff for t in terms) == signs
        assert [bracket_text(t.word) for t in terms] == [
            "[[e_1,e_2],e_3]",
            "[[e_2,e_3],e_1]",
            "[[e_1,e_3],e_2]",
        ]
        assert graded_lie_check(terms, degrees)


def test_specialize_rejects_bad_gradings():
    ident = sphere_identity(gen_simplex_skeleton(3, 1), (1, 2))
    with pytest.raises(ValueError):
        specialize_spheres(ident, (0, 1, 1))
    with pytest.raises(ValueError):
        specialize_spheres(ident, {1: 1, 2: 1})


def test_specialize_higher_products_stay_opaque():
    ident = sphere_identity(gen_simplex_skeleton(4, 2), (2, 3, 4))
    terms = specialize_spheres(ident, (1, 1, 1, 1))
    assert bracket_text(terms[0].word) == "[w(234),e_1]"
    with pytest.raises(ValueError):
        graded_lie_check(terms, (1, 1, 1, 1))


def test_graded_lie_check_axioms():
    # graded antisymmetry across parities
    for p, q in [(1, 1), (1, 2), (2, 2), (3, 2)]:
        sign = 1 if (p * q) % 2 else -1
        terms = [
            GradedBracketTerm(1, (1, 2)),
            GradedBracketTerm(-sign, (2, 1)),
        ]
        assert graded_lie_check(terms, {1: p, 2: q})
        assert not graded_lie_check([GradedBracketTerm(1, (1, 2))], {1: p, 2: q})
    broken = [
        GradedBracketTerm(1, ((1, 2), 3)),
        GradedBracketTerm(1, ((2, 3), 1)),
        GradedBracketTerm(-1, ((1, 3), 2)),
    ]
    assert not graded_lie_check(broken, (1, 1, 1))


def test_render_text_and_latex():
    ident = sphere_identity(gen_simplex_skeleton(3, 1), (1, 2))
    assert render_identity(ident) == "w_12 = -w_23 + w_13"
    assert render_identity(ident, "latex") == "w_{\\sigma_3}=-w_{\\sigma_1}+w_{\\sigma_2}"
    with pytest.raises(ValueError):
        render_identity(ident, "html")

    hardie = sphere_identity(gen_simplex_skeleton(4, 2), (1, 2, 3))
    assert render_identity(hardie) == "w_123 = w_234 - w_134 + w_124"
    assert (
        render_identity(hardie, "latex")
        == "w_{\\sigma_4}=w_{\\sigma_1}-w_{\\sigma_2}+w_{\\sigma_3}"
    )


def test_render_general_latex_and_empty_rhs():
    expr = WhiteheadExpr(non_face=(4, 5, 6), ordering=(1, 2, 3), rho=(4, 5, 6, 1, 2, 3))
    other = WhiteheadExpr(non_face=(1, 2, 3), ordering=(4, 5, 6), rho=(1, 2, 3, 4, 5, 6))
    ident = WhiteheadIdentity(lhs=expr, rhs=((2, other),), unique=True)
    assert render_identity(ident) == "w_456 = 2*w_123"
    assert render_identity(ident, "latex") == "w_{456}=2w_{123}"

    empty = WhiteheadIdentity(lhs=expr, rhs=(), unique=True)
    assert render_identity(empty) == "w_456 = 0"
    assert render_identity(empty, "latex") == "w_{456}=0"

    wide = WhiteheadExpr(non_face=(10, 11), ordering=(), rho=(10, 11))
    wide_id = WhiteheadIdentity(lhs=wide, rhs=(), unique=True)
    assert render_identity(wide_id) == "w_10,11 = 0"


def test_json_round_trip():
    ident = sphere_identity(gen_simplex_skeleton(4, 2), (2, 3, 4))
    doc = render_identity(ident, "json")
    data = json.loads(doc)
    assert list(data) == ["lhs", "rhs", "pure", "unique"]
    assert data["lhs"] == {"non_face": [2, 3, 4], "ordering": [1]}
    again = parse_identity_json(doc)
    assert render_identity(again, "json") == doc
    assert render_identity(again) == render_identity(ident)

    with pytest.raises(ValueError):
        parse_identity_json(json.dumps({"lhs": {}, "rhs": []}))
    tampered = json.loads(doc)
    tampered["pure"] = False
    with pytest.raises(ValueError):
        parse_identity_json(json.dumps(tampered))


def test_identity_residual_detects_corruption():
    ident = sphere_identity(gen_simplex_skeleton(3, 1), (1, 2))
    assert identity_residual(ident).is_zero
    (c0, e0), (c1, e1) = ident.rhs
    corrupted = WhiteheadIdentity(lhs=ident.lhs, rhs=((-c0, e0), (c1, e1)), unique=True)
    assert not identity_residual(corrupted).is_zero
