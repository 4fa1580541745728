import random

import pytest

from graverkit import (
    IntMat,
    PreconditionError,
    bouquet_decomposition,
    d_map,
    gale_rows,
    graver_basis,
    is_simple,
    lambda_matrix,
)
from graverkit.bouquet import MIXED, NON_MIXED
from graverkit.complexes import _lifting_decomposition, lift_curve_vector
from graverkit.linalg import sign_canonical

from _paper import (
    EXAMPLE_E_AB_ROWS,
    EXAMPLE_E_BOUQUET_MEMBERS,
    EXAMPLE_E_C_VECTORS,
    example_e,
    random_unimodular,
)


class TestGaleRows:
    def test_full_rank_square(self):
        rows = gale_rows(IntMat.from_rows([[2, 1], [1, 1]]))
        assert rows == ((), ())

    def test_two_entry_curve(self):
        assert gale_rows(IntMat.row_vector([1, 1])) == ((1,), (-1,))

    def test_example_e_row_parallelism_pattern(self):
        rows = gale_rows(example_e())
        # rows 1 and 3 are parallel (one bouquet), rows 1 and 2 are not
        r1, r2, r3 = rows[0], rows[1], rows[2]
        assert all(r1[p] * r3[q] == r1[q] * r3[p] for p in range(4) for q in range(4))
        assert any(r1[p] * r2[q] != r1[q] * r2[p] for p in range(4) for q in range(4))


class TestExampleEDecomposition:
    def test_members_and_kinds(self):
        dec = bouquet_decomposition(example_e())
        assert [b.members for b in dec.bouquets] == EXAMPLE_E_BOUQUET_MEMBERS
        assert [b.kind for b in dec.bouquets] == [MIXED, MIXED, NON_MIXED, MIXED, MIXED]
        assert dec.free_bouquet is None
        assert sorted(dec.non_mixed_indices()) == [3]

    def test_c_vectors_exact(self):
        dec = bouquet_decomposition(example_e())
        assert list(dec.c_vectors()) == [tuple(c) for c in EXAMPLE_E_C_VECTORS]

    def test_bouquet_ideal_matrix(self):
        dec = bouquet_decomposition(example_e())
        assert [list(r) for r in dec.a_matrix.rows] == EXAMPLE_E_AB_ROWS

    def test_basis_invariance(self):
        A = example_e()
        base = bouquet_decomposition(A)
        rows = gale_rows(A)
        rng = random.Random(5)
        for _ in range(5):
            V = random_unimodular(rng, 4)
            transformed = tuple(
                tuple(sum(row[p] * V[p][q] for p in range(4)) for q in range(4))
                for row in rows
            )
            alt = bouquet_decomposition(A, _gale=transformed)
            assert alt.bouquets == base.bouquets
            assert alt.a_matrix == base.a_matrix


class TestSimple:
    def test_monomial_curve_is_simple(self):
        A = IntMat.row_vector([4, 5, 6])
        assert is_simple(A)
        dec = bouquet_decomposition(A)
        assert all(len(b.members) == 1 and b.kind == NON_MIXED for b in dec.bouquets)
        assert dec.a_matrix == A

    def test_example_e_not_simple(self):
        assert not is_simple(example_e())

    def test_full_lifting_not_simple(self):
        lam = lambda_matrix([4, 5, 6], [])
        assert not is_simple(lam.matrix)
        dec = bouquet_decomposition(lam.matrix)
        assert [b.members for b in dec.bouquets] == [(1, 4), (2, 5), (3, 6)]
        assert all(b.kind == MIXED for b in dec.bouquets)

    def test_singleton_lifting_marks_omega(self):
        _, dec = _lifting_decomposition(IntMat.row_vector([4, 5, 6]), frozenset({2}))
        assert {b.anchor for b in dec.bouquets if b.kind == NON_MIXED} == {2}


class TestDMap:
    def test_zero(self):
        dec = bouquet_decomposition(example_e())
        assert d_map(dec, (0, 0, 0, 0, 0)) == (0,) * 11

    def test_lifting_pattern(self):
        # remove the third coordinate of a four-entry curve: D sends
        # (u1,u2,u3,u4) to (u1,u2,u3,u4,-u1,-u2,-u4)
        Tm = IntMat.row_vector([5, 7, 9, 11])
        _, dec = _lifting_decomposition(Tm, frozenset({3}))
        u = (7, -5, 0, 0)
        assert lift_curve_vector(dec, u) == (7, -5, 0, 0, -7, 5, 0)

    def test_example_e_circuit_images_in_kernel(self):
        # direct matrix-vector check for D images of curve circuits
        A = example_e()
        dec = bouquet_decomposition(A)
        for circuit in [(0, 41, -40, 0, 0), (5, -3, 0, 0, 0), (0, 2, 0, 0, -1)]:
            image = d_map(dec, circuit)
            assert A.in_kernel(image)

    def test_rejects_non_kernel_input(self):
        dec = bouquet_decomposition(example_e())
        with pytest.raises(PreconditionError):
            d_map(dec, (1, 0, 0, 0, 0))
        with pytest.raises(PreconditionError):
            d_map(dec, (0, 0, 0))

    def test_graver_basis_is_d_image_of_bouquet_ideal_graver(self):
        A = example_e()
        dec = bouquet_decomposition(A)
        G_A = graver_basis(A).as_set()
        G_B = graver_basis(dec.a_matrix)
        images = {sign_canonical(d_map(dec, u)) for u in G_B.elements}
        assert images == G_A

    def test_position_of_anchor(self):
        dec = bouquet_decomposition(example_e())
        assert dec.position_of_anchor(6) == 3
        assert dec.position_of_anchor(4) == 4
        with pytest.raises(KeyError):
            dec.position_of_anchor(3)
