import itertools

import pytest

from fillable.complexes import (
    SimplicialComplex,
    gen_rp2_six,
    gen_simplex_skeleton,
    skeleton,
)
from fillable.orderings import (
    AttachmentTree,
    ContractionOrdering,
    DisconnectedClosure,
    _bfs_levels,
    attachment_forest,
    contraction_ordering,
    validate_ordering,
)


def test_contraction_ordering_on_complete_closure():
    K6 = skeleton(gen_rp2_six(), 1)
    co = contraction_ordering(K6, (1, 2, 3))
    assert co.non_face == (1, 2, 3)
    assert co.order == (4, 5, 6)
    assert validate_ordering(K6, (1, 2, 3), co)


def test_contraction_ordering_rejects_non_minimal_input():
    K6 = skeleton(gen_rp2_six(), 1)
    with pytest.raises(ValueError):
        contraction_ordering(K6, (1, 2))  # an edge, hence a face
    with pytest.raises(ValueError):
        attachment_forest(K6, (1, 2, 3, 4))  # contains non-faces properly


def test_attachment_forest_groups_under_smallest_anchor():
    K6 = skeleton(gen_rp2_six(), 1)
    forest = attachment_forest(K6, (2, 3, 6))
    # the closure's 1-skeleton is complete, so everything hangs off vertex 2
    assert forest.trees == (
        AttachmentTree(root=2, edges=((1, 2), (2, 4), (2, 5))),
    )


def test_every_permutation_validates_on_complete_closure():
    square = SimplicialComplex(range(1, 5), [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert contraction_ordering(square, (1, 3)).order == (2, 4)
    for perm in itertools.permutations((2, 4)):
        assert validate_ordering(square, (1, 3), perm)


def test_validate_ordering_multiset_mismatches():
    K6 = skeleton(gen_rp2_six(), 1)
    assert not validate_ordering(K6, (1, 2, 3), (4, 5))
    assert not validate_ordering(K6, (1, 2, 3), (4, 5, 5))
    assert not validate_ordering(K6, (1, 2, 3), (4, 5, 7))
    assert not validate_ordering(K6, (1, 2, 3), (3, 4, 5))


def test_ordering_iterates_like_its_order():
    co = ContractionOrdering(non_face=(1, 2), order=(3, 4))
    assert list(co) == [3, 4]


def test_bfs_levels_depth_and_parent():
    # a path hung off a two-vertex anchor, with one tie to break
    adj = {
        1: {3},
        2: {3},
        3: {1, 2, 4},
        4: {3, 5},
        5: {4},
    }
    depth, parent = _bfs_levels([1, 2, 3, 4, 5], adj, (1, 2))
    assert depth == {1: 0, 2: 0, 3: 1, 4: 2, 5: 3}
    assert parent == {3: 1, 4: 3, 5: 4}


def test_bfs_levels_unreachable_vertex():
    adj = {1: set(), 2: set()}
    with pytest.raises(DisconnectedClosure):
        _bfs_levels([1, 2], adj, (1,))


def test_orderings_for_every_simplex_skeleton_non_face():
    from fillable.complexes import minimal_non_faces

    for m, k in [(3, 0), (4, 0), (4, 1), (5, 1), (5, 2)]:
        K = gen_simplex_skeleton(m, k)
        for M in minimal_non_faces(K):
            co = contraction_ordering(K, M)
            assert validate_ordering(K, M, co)
            assert co.order == tuple(sorted(set(K.vertices) - set(M)))
