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

import dataclasses
from fractions import Fraction as F

import pytest


def test_initial_grid():
    from ..exchange import initial_grid

    assert initial_grid(F(1, 2), 4) == [-1, F(-1, 2), 0, F(1, 2)]


def test_initial_grid_too_small():
    from ...exceptions import DomainError
    from ..exchange import initial_grid

    with pytest.raises(DomainError):
        initial_grid(F(0), 1)


class TestDgsLpBound:
    @pytest.fixture
    def target(self):
        from ..exchange import dgs_lp_bound

        return dgs_lp_bound

    @pytest.mark.parametrize("n", range(2, 17))
    def test_cross_polytope(self, target, n):
        from ..certificate import verify_certificate

        cert = target(n, F(0), 2)
        assert cert.bound == 2 * n
        assert cert.coeffs == (0, n, n - 1)
        assert verify_certificate(cert)

    @pytest.mark.parametrize("degree", [3, 4])
    def test_higher_degree_does_not_improve_orthogonal_codes(self, target, degree):
        cert = target(3, F(0), degree)
        assert cert.bound == 6

    def test_linear_is_infeasible(self, target):
        from ...exceptions import InfeasibleAtDegree

        with pytest.raises(InfeasibleAtDegree) as excinfo:
            target(5, F(0), 1)
        assert excinfo.value.degree == 1

    @pytest.mark.parametrize(
        ("n", "cos_theta", "degree"),
        [(1, F(0), 2), (3, F(1), 2), (3, F(-1), 2), (3, F(0), 0)],
    )
    def test_bad_arguments(self, target, n, cos_theta, degree):
        from ...exceptions import DomainError

        with pytest.raises(DomainError):
            target(n, cos_theta, degree)

    def test_rejects_float_cosine(self, target):
        with pytest.raises(TypeError):
            target(3, 0.5, 4)

    def test_e8_kissing_number(self, target):
        from ..certificate import VerificationFailure, verify_certificate

        cert = target(8, F(1, 2), 10)
        assert cert.bound == 240
        assert verify_certificate(cert)
        loosened = dataclasses.replace(cert, cos_theta=F(3, 5))
        assert verify_certificate(loosened).reason == VerificationFailure.INTERVAL_VIOLATION

    @pytest.mark.slow
    def test_leech_kissing_number(self, target):
        cert = target(24, F(1, 2), 12)
        assert cert.bound == 196560


class TestSolveSphereLp:
    @pytest.fixture
    def target(self):
        from ..exchange import solve_sphere_lp

        return solve_sphere_lp

    def test_lower_bound_brackets_certificate(self, target):
        from ..certificate import verify_certificate
        from ..exchange import ExchangeOptions

        result = target(3, F(1, 2), 6, ExchangeOptions(max_iterations=6))
        assert verify_certificate(result.certificate)
        assert result.lower_bound <= result.certificate.bound
        # the icosahedron's 12 points are a code with these angles
        assert result.certificate.bound >= 12
        assert 1 <= result.iterations <= 6
        assert result.pool_size >= 64

    def test_cross_polytope_is_exact(self, target):
        result = target(6, 0, 2)
        assert result.converged_exactly
        assert result.lower_bound == 12

    def test_small_grid(self, target):
        from ..exchange import ExchangeOptions

        result = target(4, F(0), 2, ExchangeOptions(grid_size=3))
        assert result.certificate.bound == 8

    def test_e8_closes_in_one_round(self, target):
        result = target(8, F(1, 2), 10)
        assert result.converged_exactly
        assert result.lower_bound == 240
        assert result.iterations == 1

    @pytest.mark.parametrize(
        ("n", "cos_theta", "degrees"),
        [(4, F(0), [2, 3, 4, 5]), (8, F(1, 2), [6, 7, 8, 10])],
    )
    def test_bound_nonincreasing_in_degree(self, target, n, cos_theta, degrees):
        bounds = []
        for degree in degrees:
            result = target(n, cos_theta, degree)
            assert result.converged_exactly
            bounds.append(result.certificate.bound)
        assert bounds == sorted(bounds, reverse=True)


class TestTouching:
    @pytest.fixture
    def target(self):
        from ..exchange import ExchangeOptions, _Exchange

        def make(n, cos_theta, degree):
            return _Exchange(n, cos_theta, degree, ExchangeOptions())

        return make

    def test_e8_contact_points(self, target):
        exchange = target(8, F(1, 2), 10)
        weights = [1 if t in (-1, F(-1, 2), 0, F(1, 2)) else 0 for t in exchange.pool]
        cert = exchange.touching(weights)
        assert cert is not None
        assert cert.bound == 240
        assert exchange.best == cert

    def test_cross_polytope_contact_points(self, target):
        exchange = target(5, F(0), 2)
        weights = [1 if t in (-1, 0) else 0 for t in exchange.pool]
        cert = exchange.touching(weights)
        assert cert.coeffs == (0, 5, 4)

    def test_too_many_contact_points(self, target):
        exchange = target(8, F(1, 2), 4)
        weights = [1 if t in (-1, F(-1, 2), 0, F(1, 2)) else 0 for t in exchange.pool]
        assert exchange.touching(weights) is None
        assert exchange.best is None


class TestSolveSphereLpFloat:
    @pytest.fixture
    def target(self):
        from ..exchange import solve_sphere_lp_float

        return solve_sphere_lp_float

    def test_icosahedron(self, target):
        result = target(3, 5**-0.5, 5)
        assert result.bound == pytest.approx(12, rel=1e-4)
        assert result.lower_bound <= result.bound + 1e-9
        assert result.max_violation <= 1e-9
        assert all(f >= 0 for f in result.coeffs)

    @pytest.mark.parametrize("n", [3, 6, 9])
    def test_matches_exact_cross_polytope(self, target, n):
        result = target(n, 0.0, 2)
        assert result.bound == pytest.approx(2 * n, rel=1e-9)

    def test_bad_cosine(self, target):
        from ...exceptions import DomainError

        with pytest.raises(DomainError):
            target(3, 1.0, 4)
