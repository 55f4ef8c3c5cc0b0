"""Exact linear algebra: conventions, rref determinism, field modes."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entwine.errors import DimensionMismatch, InvalidParameter
from entwine.exactlin import (FieldSpec, Matrix, QQ, compose, flip, hstack,
                              inverse, kernel_basis, kron, rank, rref, solve)

GF5 = FieldSpec("prime", 5)


def scalars():
    return st.integers(min_value=-6, max_value=6)


def matrices(rows, cols, field=QQ):
    return st.lists(
        st.lists(scalars(), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows,
    ).map(lambda e: Matrix(field, e))


class TestFieldSpec:
    def test_rational_coerce(self):
        assert QQ.coerce("3") == Fraction(3)
        assert QQ.coerce("-1/2") == Fraction(-1, 2)
        assert QQ.coerce(2) == Fraction(2)

    def test_prime_coerce(self):
        assert GF5.coerce(7) == 2
        assert GF5.coerce("1/2") == 3  # 2 * 3 = 6 = 1 mod 5
        assert GF5.coerce(Fraction(-1, 3)) == GF5.mul(GF5.neg(1), GF5.inv(3))

    def test_prime_inverse(self):
        for a in range(1, 5):
            assert GF5.mul(a, GF5.inv(a)) == 1

    def test_rejects_bad_field(self):
        with pytest.raises(InvalidParameter):
            FieldSpec("prime", 4)
        with pytest.raises(InvalidParameter):
            FieldSpec("prime", None)
        with pytest.raises(InvalidParameter):
            FieldSpec("galois")

    def test_fmt_round_trip(self):
        x = QQ.coerce("-7/3")
        assert QQ.coerce(QQ.fmt(x)) == x


class TestMatrixBasics:
    def test_shape_and_indexing(self):
        m = Matrix(QQ, [[1, 2, 3], [4, 5, 6]])
        assert m.shape == (2, 3)
        assert m[1, 2] == 6

    def test_ragged_rejected(self):
        with pytest.raises(DimensionMismatch):
            Matrix(QQ, [[1, 2], [3]])

    def test_zero_width_shapes_survive(self):
        z = Matrix.zeros(QQ, 3, 0)
        assert z.shape == (3, 0)
        zz = compose(Matrix.zeros(QQ, 2, 3), Matrix.zeros(QQ, 3, 0))
        assert zz.shape == (2, 0)

    def test_immutable_and_hashable(self):
        m = Matrix(QQ, [[1]])
        with pytest.raises(AttributeError):
            m.rows = 2
        assert hash(m) == hash(Matrix(QQ, [[1]]))

    def test_first_difference(self):
        a = Matrix(QQ, [[1, 2], [3, 4]])
        b = Matrix(QQ, [[1, 2], [3, 5]])
        assert a.first_difference(b) == (1, 1)
        assert a.first_difference(a) is None


class TestKronConvention:
    def test_normative_index_rule(self):
        # kron(f, g)[i*rg + j, k*cg + l] = f[i, k] * g[j, l]
        f = Matrix(QQ, [[1, 2], [3, 4]])
        g = Matrix(QQ, [[5, 6], [7, 8]])
        kg = kron(f, g)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        assert kg[i * 2 + j, k * 2 + l] == f[i, k] * g[j, l]

    def test_kron_frozen_example(self):
        # [DERIVED] full 4x4 Kronecker product, computed by hand
        f = Matrix(QQ, [[1, 2], [3, 4]])
        g = Matrix(QQ, [[0, 1], [1, 0]])
        assert kron(f, g) == Matrix(QQ, [
            [0, 1, 0, 2],
            [1, 0, 2, 0],
            [0, 3, 0, 4],
            [3, 0, 4, 0],
        ])

    @given(matrices(2, 3), matrices(3, 2), matrices(2, 3), matrices(3, 2))
    @settings(max_examples=40, deadline=None)
    def test_interchange(self, f, g, h, k):
        # (f.g) (x) (h.k) = (f (x) h) . (g (x) k)
        assert kron(compose(f, g), compose(h, k)) == \
            compose(kron(f, h), kron(g, k))

    @given(matrices(2, 2), matrices(2, 2), matrices(2, 2))
    @settings(max_examples=30, deadline=None)
    def test_kron_associative(self, a, b, c):
        assert kron(kron(a, b), c) == kron(a, kron(b, c))

    def test_flip_conjugates_kron(self):
        f = Matrix(QQ, [[1, 2], [3, 4]])
        g = Matrix(QQ, [[0, 1], [2, 5]])
        tau = flip(QQ, 2, 2)
        assert compose(tau, compose(kron(f, g), tau)) == kron(g, f)

    def test_flip_involutive(self):
        assert compose(flip(QQ, 2, 3), flip(QQ, 3, 2)) == \
            Matrix.identity(QQ, 6)


class TestComposition:
    @given(matrices(2, 3), matrices(3, 2), matrices(2, 2))
    @settings(max_examples=40, deadline=None)
    def test_associative(self, f, g, h):
        assert compose(compose(f, g), h) == compose(f, compose(g, h))

    @given(matrices(3, 4))
    @settings(max_examples=20, deadline=None)
    def test_unital(self, m):
        assert compose(Matrix.identity(QQ, 3), m) == m
        assert compose(m, Matrix.identity(QQ, 4)) == m

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            compose(Matrix(QQ, [[1]]), Matrix(QQ, [[1, 2], [3, 4]]))


class TestRrefRankKernel:
    def test_rref_frozen_example(self):
        # [DERIVED] rref computed by hand
        m = Matrix(QQ, [[2, 4, 6], [1, 2, 4]])
        red, pivots, rk = rref(m)
        assert red == Matrix(QQ, [[1, 2, 0], [0, 0, 1]])
        assert pivots == (0, 2)
        assert rk == 2

    def test_rref_deterministic(self):
        m = Matrix(QQ, [[1, 2], [2, 4], [0, 1]])
        assert rref(m) == rref(m)

    @given(matrices(3, 4))
    @settings(max_examples=40, deadline=None)
    def test_rank_nullity(self, m):
        assert rank(m) + kernel_basis(m).cols == m.cols

    @given(matrices(3, 4))
    @settings(max_examples=40, deadline=None)
    def test_kernel_annihilated(self, m):
        kb = kernel_basis(m)
        assert compose(m, kb).is_zero()

    @given(matrices(3, 3))
    @settings(max_examples=40, deadline=None)
    def test_inverse_exact(self, m):
        inv = inverse(m)
        if inv is None:
            assert rank(m) < 3
        else:
            assert compose(m, inv) == Matrix.identity(QQ, 3)
            assert compose(inv, m) == Matrix.identity(QQ, 3)

    @given(matrices(3, 3), matrices(3, 2))
    @settings(max_examples=40, deadline=None)
    def test_solve_exact(self, m, b):
        x = solve(m, b)
        if x is not None:
            assert compose(m, x) == b

    def test_solve_inconsistent(self):
        m = Matrix(QQ, [[1, 0], [1, 0]])
        b = Matrix(QQ, [[1], [2]])
        assert solve(m, b) is None

    def test_prime_field_rref(self):
        m = Matrix(GF5, [[2, 1], [4, 2]])
        red, pivots, rk = rref(m)
        assert rk == 1
        assert red.entries[0] == (1, 3)  # 1/2 = 3 mod 5

    def test_hstack(self):
        a = Matrix(QQ, [[1], [2]])
        b = Matrix(QQ, [[3], [4]])
        assert hstack([a, b]) == Matrix(QQ, [[1, 3], [2, 4]])
