# Copyright 2026 Open Collector, Inc,
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import random
from fractions import Fraction as F

import pytest


def random_homogeneous(rng, n, d):
    from ..harmonics import MultiPoly, monomials

    return MultiPoly(
        n,
        {e: F(rng.randint(-5, 5), rng.randint(1, 3)) for e in monomials(n, d) if rng.random() < 0.6},
    )


class TestMultiPoly:
    @pytest.fixture
    def target(self):
        from ..harmonics import MultiPoly

        return MultiPoly

    def test_arithmetic(self, target):
        x = target.variable(2, 0)
        y = target.variable(2, 1)
        p = (x + y) ** 2
        assert p == target(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        assert p - x * x - y * y == 2 * x * y
        assert (x - x).is_zero()
        assert p.degree == 2
        assert p.is_homogeneous()
        assert not (p + target.constant(2, 1)).is_homogeneous()

    def test_evaluation(self, target):
        assert target.omega(3)((1, 2, F(1, 2))) == F(21, 4)

    def test_vector_round_trip(self, target):
        from ..harmonics import pol_dim

        p = target(3, {(2, 0, 0): 1, (0, 1, 1): F(-2, 3)})
        v = p.to_vector(2)
        assert len(v) == pol_dim(3, 2) == 6
        assert target.from_vector(3, 2, v) == p

    def test_rejects_mixed_spaces(self, target):
        from ...exceptions import DomainError

        with pytest.raises(DomainError):
            target.variable(2, 0) + target.variable(3, 0)

    def test_rejects_bad_exponent(self, target):
        from ...exceptions import DomainError

        with pytest.raises(DomainError):
            target(2, {(1, 0, 0): 1})

    def test_pickle(self, target):
        import pickle

        p = target(2, {(1, 1): F(3, 7)})
        assert pickle.loads(pickle.dumps(p)) == p

    def test_sympy_form(self, target):
        import sympy

        from ..harmonics import variables

        x0, x1 = variables(2)
        p = target(2, {(2, 0): F(1, 2), (0, 1): -3})
        assert p.poly.as_expr() == sympy.Rational(1, 2) * x0**2 - 3 * x1
        assert target.from_poly(2, p.poly) == p
        assert target.zero(2).poly.is_zero


def test_monomials_order():
    from ..harmonics import monomials

    assert monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials(3, 0) == ((0, 0, 0),)
    assert monomials(3, -1) == ()


class TestLaplacian:
    @pytest.fixture
    def target(self):
        from ..harmonics import laplacian

        return laplacian

    def test_square(self, target):
        from ..harmonics import MultiPoly

        assert target(MultiPoly.monomial((2, 0, 0))) == MultiPoly.constant(3, 2)

    def test_harmonic(self, target):
        from ..harmonics import MultiPoly

        p = MultiPoly(2, {(2, 0): 1, (0, 2): -1})
        assert target(p).is_zero()

    def test_omega_product_rule(self, target):
        from ..harmonics import MultiPoly

        rng = random.Random(3)
        for n in range(1, 5):
            for d in range(0, 5):
                q = random_homogeneous(rng, n, d)
                omega = MultiPoly.omega(n)
                expected = q * (2 * (n + 2 * d)) + omega * target(q)
                assert target(omega * q) == expected


class TestHarmonicDecompose:
    @pytest.fixture
    def target(self):
        from ..harmonics import harmonic_decompose

        return harmonic_decompose

    def test_already_harmonic(self, target):
        from ..harmonics import MultiPoly

        p = MultiPoly(3, {(1, 1, 0): 1})
        h = target(p)
        assert h[0] == p
        assert all(c.is_zero() for c in h[1:])

    def test_omega(self, target):
        from ..harmonics import MultiPoly

        h = target(MultiPoly.omega(3))
        assert h[0].is_zero()
        assert h[1] == MultiPoly.constant(3, 1)

    def test_square(self, target):
        from ..harmonics import MultiPoly

        h2, h0 = target(MultiPoly.monomial((2, 0, 0)))
        assert h2 == MultiPoly.monomial((2, 0, 0)) - MultiPoly.omega(3) * F(1, 3)
        assert h0 == MultiPoly.constant(3, F(1, 3))

    def test_random_round_trip(self, target):
        from ..harmonics import laplacian, reassemble

        rng = random.Random(11)
        for n in (2, 3, 4):
            for d in range(1, 6):
                p = random_homogeneous(rng, n, d)
                if p.is_zero():
                    continue
                parts = target(p)
                assert len(parts) == d // 2 + 1
                assert all(laplacian(h).is_zero() for h in parts)
                assert reassemble(parts) == p

    def test_inhomogeneous(self, target):
        from ...exceptions import NotHomogeneous
        from ..harmonics import MultiPoly

        with pytest.raises(NotHomogeneous):
            target(MultiPoly(2, {(2, 0): 1, (1, 0): 1}))


class TestHarmDim:
    @pytest.fixture
    def target(self):
        from ..harmonics import harm_dim

        return harm_dim

    @pytest.mark.parametrize(("n", "k", "expected"), [(5, 0, 1), (3, 2, 5), (3, 1, 3), (2, 7, 2)])
    def test_examples(self, target, n, k, expected):
        assert target(n, k) == expected

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_kernel_dimension(self, target, n):
        from ..harmonics import harmonic_kernel_dimension

        for k in range(9):
            assert target(n, k) == harmonic_kernel_dimension(n, k)

    def test_rejects_line(self, target):
        from ...exceptions import DomainError

        with pytest.raises(DomainError):
            target(1, 2)


class TestSphereMonomialAverage:
    @pytest.fixture
    def target(self):
        from ..harmonics import sphere_monomial_average

        return sphere_monomial_average

    def test_odd(self, target):
        assert target((2, 1, 0)) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 8, 24])
    def test_square(self, target, n):
        assert target((2,) + (0,) * (n - 1)) == F(1, n)

    def test_fourth_power(self, target):
        assert target((4, 0, 0)) == F(1, 5)

    def test_matches_jacobi_weight(self, target):
        from ...orthopoly import jacobi_weight_moment

        # the first coordinate is distributed with density ~ (1 - t^2)^((n-3)/2)
        for n in (3, 5, 7):
            for m in range(0, 9, 2):
                expected = jacobi_weight_moment(n, m) / jacobi_weight_moment(n, 0)
                assert target((m,) + (0,) * (n - 1)) == expected


def test_sphere_inner_product_separates_degrees():
    from ..harmonics import harmonic_basis, sphere_inner_product

    n = 3
    bases = {k: harmonic_basis(n, k) for k in range(4)}
    for k in range(4):
        for kk in range(k + 1, 4):
            for f in bases[k]:
                for g in bases[kk]:
                    assert sphere_inner_product(f, g) == 0


class TestZonalKernel:
    @pytest.fixture
    def target(self):
        from ..harmonics import zonal_kernel

        return zonal_kernel

    def test_constant(self, target):
        from ...exact import UniPoly

        assert target(4, 0) == UniPoly([1])

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_linear(self, target, n):
        from ...exact import UniPoly

        assert target(n, 1) == UniPoly([0, n])

    def test_quadratic_in_three_dimensions(self, target):
        from ...exact import UniPoly

        assert target(3, 2) == UniPoly([F(-1, 2), 0, F(3, 2)]) * 5

    @pytest.mark.parametrize(("n", "k"), [(2, 3), (2, 4), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3), (5, 4)])
    def test_multiple_of_jacobi(self, target, n, k):
        from ...orthopoly import jacobi
        from ..harmonics import harm_dim

        assert target(n, k) == jacobi(n, k) * harm_dim(n, k)


class TestAdjointCheck:
    @pytest.fixture
    def target(self):
        from ..harmonics import adjoint_check

        return adjoint_check

    def test_zero(self, target):
        from ..harmonics import MultiPoly

        assert target(MultiPoly.zero(3), MultiPoly.omega(3)) == (0, 0)

    def test_constant_against_omega(self, target):
        from ..harmonics import MultiPoly

        left, right = target(MultiPoly.constant(2, 1), MultiPoly.omega(2))
        assert left == right == 2

    def test_random(self, target):
        rng = random.Random(5)
        for n in range(1, 5):
            for d in range(2, 7):
                f = random_homogeneous(rng, n, d - 2)
                g = random_homogeneous(rng, n, d)
                left, right = target(f, g)
                assert left == right

    def test_degree_mismatch(self, target):
        from ...exceptions import DegreeMismatch
        from ..harmonics import MultiPoly

        with pytest.raises(DegreeMismatch):
            target(MultiPoly.variable(2, 0), MultiPoly.omega(2))


class TestInnerProductKernel:
    @pytest.mark.parametrize(("n", "expected"), [(2, F(1, 2)), (3, F(1, 3)), (8, F(1, 8))])
    def test_eigenvalue(self, n, expected):
        from ..harmonics import inner_product_kernel_eigenvalue

        assert inner_product_kernel_eigenvalue(n) == expected

    def test_spectrum(self):
        from ..harmonics import inner_product_kernel_spectrum

        assert inner_product_kernel_spectrum(4, 4) == [0, F(1, 4), 0, 0, 0]

    def test_apply_to_linear_form(self):
        from ..harmonics import MultiPoly, inner_product_kernel_apply

        h = MultiPoly(3, {(1, 0, 0): 2, (0, 0, 1): -3})
        assert inner_product_kernel_apply(h) == h * F(1, 3)
