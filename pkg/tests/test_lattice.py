from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from leecodes.groups import FiniteAbelianGroup, LatticeHom, apply_hom, is_perfect_labeling, pl_n1_construction
from leecodes.lattice import (
    IntegerLattice,
    construction_a_lift,
    determinant,
    full_space_code,
    hermite_normal_form,
    kernel_lattice,
)
from leecodes.lee import BallSpec, ball_size, enumerate_ball


def cyc(N, *images):
    return LatticeHom(FiniteAbelianGroup((N,)), tuple((i,) for i in images))


def image_size(h):
    """|h(Z^n)| by brute force over a fundamental box."""
    box = max(h.group.invariant_factors, default=1)
    return len({apply_hom(h, x) for x in product(range(box), repeat=h.n)})


def assert_is_kernel(h, L):
    for row in L.basis:
        assert apply_hom(h, row) == h.group.identity()
    assert L.determinant() == image_size(h)


def test_kernel_examples():
    L = kernel_lattice(cyc(3, 1))
    assert L.basis == ((3,),)
    L = kernel_lattice(cyc(13, 1, 5))
    assert L.determinant() == 13
    # equivalent to the basis {(3, 2), (-2, 3)}
    other = IntegerLattice(((3, 2), (-2, 3)))
    assert other.hnf() == L
    assert kernel_lattice(cyc(5, 1, 2)).determinant() == 5


def test_determinant_against_sympy():
    rows = [[2, -1, 3], [0, 4, 5], [7, 1, -2]]
    assert determinant(rows) == sympy.Matrix(rows).det()
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0


groups = st.sampled_from([(5,), (12,), (13,), (2, 4), (5, 5), (3, 6), (2, 2, 2)])


@st.composite
def homs(draw):
    factors = draw(groups)
    G = FiniteAbelianGroup(factors)
    n = draw(st.integers(1, 3))
    images = tuple(tuple(draw(st.integers(0, d - 1)) for d in factors) for _ in range(n))
    return LatticeHom(G, images)


@settings(max_examples=150, deadline=None)
@given(homs())
def test_kernel_lattice_properties(h):
    L = kernel_lattice(h)
    assert_is_kernel(h, L)
    assert L.determinant() == abs(sympy.Matrix(L.basis).det())
    # every kernel vector in a small box is a lattice member
    for x in product(range(-3, 4), repeat=h.n):
        assert L.contains(x) == (apply_hom(h, x) == h.group.identity())


def test_surjective_kernel_index_equals_group_order():
    h = LatticeHom(FiniteAbelianGroup((5, 5)), ((1, 0), (0, 1), (1, 1)))
    assert kernel_lattice(h).determinant() == 25


def test_hnf_shape():
    H = hermite_normal_form([[4, 7], [2, 9]])
    assert H[1][0] == 0 and H[0][0] > 0 and H[1][1] > 0 and 0 <= H[0][1] < H[1][1]
    assert abs(determinant(H)) == abs(determinant([[4, 7], [2, 9]]))
    with pytest.raises(ValueError):
        hermite_normal_form([[1, 2], [2, 4]])


def brute_code_size(h, q):
    return sum(apply_hom(h, x) == h.group.identity() for x in product(range(q), repeat=h.n))


def test_construction_a_full_space():
    L = construction_a_lift(full_space_code(3), 7)
    assert L.basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_construction_a_zero_code():
    assert construction_a_lift(cyc(5, 1), 5).basis == ((5,),)


def test_construction_a_plane_code_tiles():
    h = cyc(13, 1, 5)
    L = construction_a_lift(h, 13, e=2)
    assert L.determinant() == 13 == 13**2 // brute_code_size(h, 13)
    assert_tiles(L, 2)


def assert_tiles(L, e):
    ball = enumerate_ball(BallSpec(L.n, e))
    residues = {L.residue(b) for b in ball}
    assert len(residues) == len(ball) == L.determinant()


@pytest.mark.parametrize(
    "h, q",
    [(cyc(7, 1, 2, 3), 7), (cyc(5, 1, 2), 5), (cyc(15, 1, 2, 3, 4), 15),
     (cyc(15, 3, 6), 15), (cyc(6, 2, 4, 3), 6)],
)
def test_construction_a_index(h, q):
    L = construction_a_lift(h, q)
    assert L.determinant() == q**h.n // brute_code_size(h, q)


def test_construction_a_errors():
    with pytest.raises(ValueError):
        construction_a_lift(cyc(13, 1, 5), 1)
    with pytest.raises(ValueError):
        construction_a_lift(cyc(13, 1, 5), 13, e=7)
    with pytest.raises(ValueError):
        construction_a_lift(cyc(13, 1, 5), 5)


@pytest.mark.parametrize("n", range(1, 6))
def test_perfect_kernels_tile(n):
    h = pl_n1_construction(n)
    assert is_perfect_labeling(h, 1)
    L = kernel_lattice(h)
    assert L.determinant() == ball_size(BallSpec(n, 1))
    assert_tiles(L, 1)
