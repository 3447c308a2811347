"""
Tests de matrices, determinantes y del motor de condensación de Chio.
"""
import math
import random

import pytest
from hypothesis import given

from condensation_kit.matrix import (
    DimensionMismatchError,
    Matrix,
    NotSquareError,
    OracleBoundExceeded,
    Permutation,
    PreconditionError,
    chio_condense,
    chio_condense_leading,
    chio_det,
    det,
    kernel_scaling_check,
    last_column_reduction,
    leibniz_det,
    multiply,
    permutations,
    scale_rows,
)
from condensation_kit.polynomial import PolynomialRing
from condensation_kit.ring import ZZ, ModularRing, NotAnIntegralDomainError, product
from condensation_kit.sampling import random_matrix, random_singular_matrix
from tests.strategies import int_rings, square_matrices


def rows_of(M):
    return [[int(str(v)) for v in row] for row in M.to_rows()]


class TestConstruction:

    def test_from_rows_and_indexing(self, example_matrix):
        assert example_matrix[1, 3] == 3
        assert example_matrix[3, 3] == 10
        assert example_matrix.row(2) == (4, 5, 6)
        assert example_matrix.column(1) == (1, 4, 7)

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatchError):
            Matrix.from_rows(ZZ, [[1, 2], [3]])

    def test_out_of_range_index(self, example_matrix):
        with pytest.raises(IndexError):
            example_matrix[0, 1]

    def test_from_function_is_one_based(self):
        M = Matrix.from_function(ZZ, 2, 3, lambda i, j: 10 * i + j)
        assert rows_of(M) == [[11, 12, 13], [21, 22, 23]]

    def test_symbolic(self):
        ring = PolynomialRing.for_matrices(2)
        M = Matrix.symbolic(ring, "x", 2)
        assert str(M[2, 1]) == "x2_1"

    def test_submatrix_and_leading_minor(self, example_matrix):
        assert rows_of(example_matrix.leading_minor(2)) == [[1, 2], [4, 5]]
        assert rows_of(example_matrix.submatrix([1, 3], [2, 3])) == [[2, 3], [8, 10]]

    def test_product_with_identity(self, example_matrix):
        assert example_matrix @ Matrix.identity(ZZ, 3) == example_matrix
        assert multiply(Matrix.identity(ZZ, 3), example_matrix) == example_matrix

    def test_product_dimension_mismatch(self, example_matrix):
        with pytest.raises(DimensionMismatchError):
            multiply(example_matrix, Matrix.zeros(ZZ, 2, 2))


class TestPermutations:

    def test_lexicographic_order_and_signs(self):
        perms = list(permutations(3))
        assert [p.images for p in perms] == [
            (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)
        ]
        assert [p.sign for p in perms] == [1, -1, -1, 1, 1, -1]

    @pytest.mark.parametrize("n", range(0, 7))
    def test_count_and_incremental_sign(self, n):
        perms = list(permutations(n))
        assert len(perms) == math.factorial(n)
        for p in perms:
            assert Permutation.from_images(p.images).sign == p.sign

    def test_identity(self):
        assert Permutation.identity(4).is_identity
        assert not Permutation.from_images((2, 1)).is_identity

    def test_invalid_permutation(self):
        with pytest.raises(PreconditionError):
            Permutation.from_images((1, 1, 2))

    @pytest.mark.parametrize("images, sign", [((1, 2), -1), ((2, 1), 1), ((2, 3, 1), -1), ((3, 2, 1), 1)])
    def test_sign_must_match_inversion_parity(self, images, sign):
        with pytest.raises(PreconditionError):
            Permutation(images, sign)
        assert Permutation(images, -sign).sign == -sign


class TestLeibniz:

    def test_example(self, example_matrix):
        assert leibniz_det(example_matrix) == -3

    def test_trivial_sizes(self):
        assert leibniz_det(Matrix.zeros(ZZ, 0, 0)) == 1
        assert leibniz_det(Matrix.from_rows(ZZ, [[-7]])) == -7
        assert leibniz_det(Matrix.identity(ZZ, 5)) == 1

    def test_not_square(self):
        with pytest.raises(NotSquareError):
            leibniz_det(Matrix.zeros(ZZ, 2, 3))

    def test_bound(self):
        with pytest.raises(OracleBoundExceeded):
            leibniz_det(Matrix.identity(ZZ, 4), max_n=3)

    def test_matches_explicit_permutation_sum(self, rng):
        for _ in range(50):
            n = rng.randint(1, 5)
            A = random_matrix(rng, ZZ, n, zero_probability=0.2)
            expected = sum(
                p.sign * product([A[i, p(i)] for i in range(1, n + 1)], ZZ).value
                for p in permutations(n)
            )
            assert leibniz_det(A) == expected

    def test_swap_rows_flips_sign(self, example_matrix):
        assert leibniz_det(example_matrix.swap_rows(1, 3)) == 3
        assert leibniz_det(example_matrix.swap_cols(2, 3)) == 3


class TestClassicalLemmas:

    def test_row_scaling(self, rng):
        for _ in range(200):
            n = rng.randint(1, 5)
            A = random_matrix(rng, ZZ, n)
            b = [rng.randint(-5, 5) for _ in range(n)]
            assert leibniz_det(scale_rows(A, b)) == product([ZZ.from_int(x) for x in b], ZZ) * leibniz_det(A)

    def test_last_column_reduction(self, rng):
        for _ in range(200):
            n = rng.randint(1, 5)
            A = random_matrix(rng, ZZ, n)
            rows = A.to_rows()
            for i in range(n - 1):
                rows[i][n - 1] = ZZ.zero
            A = Matrix.from_rows(ZZ, rows, n)
            assert last_column_reduction(A) == leibniz_det(A)

    def test_last_column_reduction_precondition(self, example_matrix):
        with pytest.raises(PreconditionError):
            last_column_reduction(example_matrix)

    def test_determinant_is_multiplicative(self):
        rng = random.Random(31)
        for case in range(300):
            n = rng.randint(1, 4)
            A = random_matrix(rng, ZZ, n, low=-5, high=5)
            B = random_matrix(rng, ZZ, n, low=-5, high=5)
            assert leibniz_det(multiply(B, A)) == leibniz_det(B) * leibniz_det(A), f"caso {case}"

    def test_two_equal_rows_give_zero(self):
        rng = random.Random(32)
        for case in range(300):
            n = rng.randint(2, 5)
            rows = random_matrix(rng, ZZ, n).to_rows()
            p, q = rng.sample(range(n), 2)
            rows[q] = list(rows[p])
            assert leibniz_det(Matrix.from_rows(ZZ, rows, n)).is_zero(), f"caso {case}"

    def test_kernel_scaling(self):
        A = Matrix.from_rows(ZZ, [[1, 2], [2, 4]])
        v = Matrix.from_rows(ZZ, [[2], [-1]])
        assert kernel_scaling_check(A, v)

    def test_kernel_scaling_randomized(self, rng):
        z6 = ModularRing(6)
        for _ in range(100):
            n = rng.randint(1, 4)
            ring = rng.choice([ZZ, z6])
            A = random_matrix(rng, ring, n)
            v = Matrix.zeros(ring, n, 1)
            assert kernel_scaling_check(A, v)

    def test_kernel_scaling_requires_kernel_vector(self, example_matrix):
        v = Matrix.from_rows(ZZ, [[1], [0], [0]])
        with pytest.raises(PreconditionError):
            kernel_scaling_check(example_matrix, v)


class TestChioCondense:

    def test_example(self, example_matrix):
        condensed, factor = chio_condense(example_matrix)
        assert rows_of(condensed) == [[-11, -4], [-2, 2]]
        assert factor == 10
        assert leibniz_det(condensed) == factor * leibniz_det(example_matrix)

    def test_identity(self):
        condensed, factor = chio_condense(Matrix.identity(ZZ, 3))
        assert condensed == Matrix.identity(ZZ, 2)
        assert factor == 1

    def test_two_by_two(self):
        condensed, factor = chio_condense(Matrix.from_rows(ZZ, [[1, 2], [3, 4]]))
        assert rows_of(condensed) == [[-2]]
        assert factor == 1

    def test_requires_n_at_least_2(self):
        with pytest.raises(PreconditionError):
            chio_condense(Matrix.from_rows(ZZ, [[5]]))

    @pytest.mark.parametrize("ring, cases", [(ZZ, 300), (PolynomialRing(("x",)), 60)])
    def test_identity_on_random_inputs(self, ring, cases):
        rng = random.Random(33)
        for case in range(cases):
            n = rng.randint(2, 5)
            rows = random_matrix(rng, ring, n, zero_probability=0.2).to_rows()
            # la mitad de los casos con pivote nulo
            if case % 2 == 0:
                rows[n - 1][n - 1] = ring.zero
            A = Matrix.from_rows(ring, rows, n)
            condensed, factor = chio_condense(A)
            assert factor == A[n, n] ** (n - 2)
            assert leibniz_det(condensed) == factor * leibniz_det(A), f"caso {case}"
            assert chio_det(A) == leibniz_det(A), f"caso {case}"

    def test_leading_pivot_variant(self, example_matrix):
        condensed, factor = chio_condense_leading(example_matrix)
        assert rows_of(condensed) == [[-3, -6], [-6, -11]]
        assert factor == 1
        assert leibniz_det(condensed) == factor * leibniz_det(example_matrix)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_symbolic_identity(self, n):
        ring = PolynomialRing.for_matrices(n)
        A = Matrix.symbolic(ring, "x", n)
        for condense in (chio_condense, chio_condense_leading):
            condensed, factor = condense(A)
            assert leibniz_det(condensed) == factor * leibniz_det(A)


class TestChioDet:

    def test_example(self, example_matrix):
        assert chio_det(example_matrix) == -3

    def test_zero_pivot_needs_swap(self):
        assert chio_det(Matrix.from_rows(ZZ, [[0, 1], [1, 0]])) == -1
        assert chio_det(Matrix.from_rows(ZZ, [[1, 2], [3, 0]])) == -6
        assert chio_det(Matrix.from_rows(ZZ, [[2, 0, 0], [0, 3, 0], [0, 0, 0]])) == 0

    def test_zero_matrix_and_empty(self):
        assert chio_det(Matrix.zeros(ZZ, 4, 4)) == 0
        assert chio_det(Matrix.zeros(ZZ, 0, 0)) == 1

    def test_refuses_composite_modulus(self):
        A = Matrix.identity(ModularRing(6), 3)
        with pytest.raises(NotAnIntegralDomainError):
            chio_det(A)
        assert det(A) == 1

    def test_agrees_with_leibniz_on_random_integer_matrices(self):
        rng = random.Random(7)
        for case in range(1000):
            n = rng.randint(1, 7)
            if case % 10 == 0:
                A = random_singular_matrix(rng, ZZ, n)
            else:
                A = random_matrix(rng, ZZ, n, zero_probability=0.3)
            assert chio_det(A) == leibniz_det(A), f"caso {case}: {A!r}"

    def test_agrees_with_leibniz_mod_p(self, rng):
        for p in (2, 3, 7, 101):
            ring = ModularRing(p)
            for _ in range(50):
                A = random_matrix(rng, ring, rng.randint(1, 5), zero_probability=0.3)
                assert chio_det(A) == leibniz_det(A)

    def test_symbolic(self):
        ring = PolynomialRing.for_matrices(3)
        A = Matrix.symbolic(ring, "x", 3)
        assert chio_det(A) == leibniz_det(A)

    @given(int_rings.flatmap(lambda ring: square_matrices(ring=ring, max_n=5)))
    def test_det_backend_agrees_with_oracle(self, A):
        assert det(A) == leibniz_det(A)
