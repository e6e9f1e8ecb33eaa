import random
from itertools import combinations

import numpy as np
import pytest

from fillable.chains import (
    Chain,
    NoSolution,
    boundary,
    boundary_matrix,
    chain_boundary,
    reduced_homology,
    smith_normal_form,
    solve_chain_relation,
)
from fillable.complexes import (
    SimplicialComplex,
    gen_cross_polytope_boundary,
    gen_rp2_six,
    gen_simplex_skeleton,
    skeleton,
)
from oracles import (
    bareiss_det,
    determinantal_divisor,
    naive_smith_diagonal,
    rational_rank,
)


def test_chain_arithmetic():
    a = Chain(0, {(1,): 2, (2,): -1})
    b = Chain(0, {(2,): 1, (3,): 5})
    assert (a + b).terms == {(1,): 2, (3,): 5}
    assert (a - a).is_zero
    assert (-a).terms == {(1,): -2, (2,): 1}
    assert (3 * a).terms == {(1,): 6, (2,): -3}
    assert a.coefficient((1,)) == 2 and a.coefficient((9,)) == 0
    with pytest.raises(ValueError):
        a + Chain(1, {})


def test_boundary_of_edge_and_triangle():
    assert boundary((1, 2)) == Chain(0, {(2,): 1, (1,): -1})
    assert boundary((1, 2, 3)) == Chain(
        1, {(2, 3): 1, (1, 3): -1, (1, 2): 1}
    )
    assert boundary((7,)) == Chain(-1, {})


def test_boundary_squared_vanishes():
    for card in range(1, 7):
        for s in combinations(range(1, 8), card):
            assert chain_boundary(boundary(s)).is_zero


def test_boundary_matrix_shapes_and_composition():
    K = gen_simplex_skeleton(4, 2)
    d2 = boundary_matrix(K, 2)
    d1 = boundary_matrix(K, 1)
    assert d2.shape == (6, 4) and d1.shape == (4, 6)
    product = d1.dot(d2)
    assert all(x == 0 for x in product.ravel())
    assert boundary_matrix(K, 0).shape == (0, 4)


def test_smith_normal_form_known_matrix():
    dec = smith_normal_form([[2, 4], [6, 8]])
    assert dec.invariant_factors == (2, 4)
    assert dec.rank == 2


def test_smith_normal_form_random_against_oracle():
    rng = random.Random(2024)
    for trial in range(200):
        m = rng.randrange(1, 7)
        n = rng.randrange(1, 7)
        A = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(m)]
        dec = smith_normal_form(A)
        # U A V == S with unimodular transforms
        left = dec.U.dot(np.array(A, dtype=object)).dot(dec.V)
        assert left.tolist() == dec.S.tolist()
        assert abs(bareiss_det(dec.U.tolist())) == 1
        assert abs(bareiss_det(dec.V.tolist())) == 1
        diag = [int(dec.S[i, i]) for i in range(min(m, n))]
        assert diag == naive_smith_diagonal(A)
        for i in range(len(diag) - 1):
            if diag[i + 1]:
                assert diag[i] != 0 and diag[i + 1] % diag[i] == 0
        assert dec.rank == rational_rank(A)


def test_smith_normal_form_determinantal_divisors():
    rng = random.Random(5)
    for trial in range(20):
        m = rng.randrange(2, 5)
        n = rng.randrange(2, 5)
        A = [[rng.randrange(-6, 7) for _ in range(n)] for _ in range(m)]
        dec = smith_normal_form(A)
        product = 1
        for k, d in enumerate(dec.invariant_factors, start=1):
            product *= d
            assert determinantal_divisor(A, k) == product


def test_reduced_homology_spot_values():
    points = gen_simplex_skeleton(3, 0)
    profile = reduced_homology(points)
    assert profile.betti(0) == 2 and profile.total_betti == 2

    circle = gen_simplex_skeleton(3, 1)
    profile = reduced_homology(circle)
    assert profile.betti(1) == 1 and profile.total_betti == 1

    octahedron = gen_cross_polytope_boundary(1)
    profile = reduced_homology(octahedron)
    assert profile.betti(2) == 1 and profile.total_betti == 1
    assert not profile.has_torsion

    K6 = skeleton(gen_rp2_six(), 1)
    profile = reduced_homology(K6)
    assert profile.betti(0) == 0 and profile.betti(1) == 10

    contractible = SimplicialComplex(range(1, 4), [(1, 2, 3)])
    assert reduced_homology(contractible).is_trivial()


def test_reduced_homology_rp2_torsion():
    profile = reduced_homology(gen_rp2_six())
    assert profile.betti(0) == 0
    assert profile.betti(1) == 0
    assert profile.betti(2) == 0
    assert profile.torsion(1) == (2,)
    assert profile.has_torsion and not profile.is_trivial()


def test_solve_chain_relation_unique():
    particular, kernel = solve_chain_relation(
        boundary((1, 2)), [boundary((2, 3)), boundary((1, 3))]
    )
    assert particular == (-1, 1)
    assert kernel == []


def test_solve_chain_relation_kernel_and_canonical_choice():
    basis = [boundary((1, 2)), boundary((2, 3)), boundary((1, 3))]
    particular, kernel = solve_chain_relation(boundary((1, 3)), basis)
    assert particular == (0, 0, 1)
    assert kernel == [(1, 1, -1)]
    # every kernel vector really is a homogeneous solution
    for vec in kernel:
        total = Chain(0, {})
        for coeff, chain in zip(vec, basis):
            total = total + coeff * chain
        assert total.is_zero


def test_solve_chain_relation_no_solution():
    lonely = Chain(0, {(1,): 1})
    with pytest.raises(NoSolution):
        solve_chain_relation(lonely, [boundary((1, 2))])
    doubled = [2 * boundary((1, 2))]
    with pytest.raises(NoSolution):
        solve_chain_relation(boundary((1, 2)), doubled)


def test_solve_chain_relation_empty_basis():
    zero = Chain(0, {})
    particular, kernel = solve_chain_relation(zero, [])
    assert particular == () and kernel == []
    with pytest.raises(NoSolution):
        solve_chain_relation(Chain(0, {(1,): 1}), [])


def test_solve_chain_relation_randomized_round_trip():
    rng = random.Random(99)
    edges = list(combinations(range(1, 7), 2))
    for trial in range(60):
        basis = [boundary(e) for e in rng.sample(edges, rng.randrange(2, 9))]
        coeffs = [rng.randrange(-4, 5) for _ in basis]
        target = Chain(0, {})
        for c, b in zip(coeffs, basis):
            target = target + c * b
        particular, kernel = solve_chain_relation(target, basis)
        rebuilt = Chain(0, {})
        for c, b in zip(particular, basis):
            rebuilt = rebuilt + c * b
        assert rebuilt == target
