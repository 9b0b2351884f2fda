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

import math

import numpy
import pytest


class TestSchemeEigenmatrix:
    @pytest.fixture
    def target(self):
        from ..scheme import scheme_eigenmatrix

        return scheme_eigenmatrix

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_hamming_cube(self, target, n):
        from ...orthopoly import krawtchouk_family
        from ..groups import hamming_group, orbit_pairs

        eigen = target(orbit_pairs(hamming_group(n)))
        fam = krawtchouk_family(n)
        expected = numpy.array([[fam.value(j, k) for j in range(n + 1)] for k in range(n + 1)])
        assert numpy.allclose(eigen.P, expected, atol=1e-9)
        assert eigen.multiplicities == tuple(math.comb(n, k) for k in range(n + 1))

    def test_pentagon(self, target):
        from ..groups import dihedral_group, orbit_pairs

        eigen = target(orbit_pairs(dihedral_group(5)))
        assert eigen.multiplicities == (1, 2, 2)
        expected = [2.0, 2 * math.cos(2 * math.pi / 5), 2 * math.cos(4 * math.pi / 5)]
        assert eigen.P[:, 1] == pytest.approx(expected, abs=1e-9)
        assert eigen.P[:, 0] == pytest.approx([1.0, 1.0, 1.0])

    @pytest.mark.parametrize("n", [3, 6])
    def test_complete_graph(self, target, n):
        from ..groups import orbit_pairs, symmetric_group

        eigen = target(orbit_pairs(symmetric_group(n)))
        assert numpy.allclose(eigen.P, [[1, n - 1], [1, -1]])
        assert eigen.multiplicities == (1, n - 1)

    def test_projections(self, target):
        from ..groups import orbit_pairs, petersen_group

        eigen = target(orbit_pairs(petersen_group()))
        # vertices 0 and 1 are {0, 1} and {0, 2}, so class 1 is non-adjacency
        assert eigen.multiplicities == (1, 4, 5)
        assert numpy.allclose(eigen.P[:, 1], [6, 1, -2])
        assert numpy.allclose(eigen.P[:, 2], [3, -2, 1])
        total = sum(eigen.projections)
        assert numpy.allclose(total, numpy.eye(10))
        for E, m in zip(eigen.projections, eigen.multiplicities):
            assert numpy.allclose(E @ E, E)
            assert numpy.trace(E) == pytest.approx(m)

    def test_rotations_only(self, target):
        from ..groups import PermGroup, orbit_pairs

        eigen = target(orbit_pairs(PermGroup(5, ((1, 2, 3, 4, 0),))))
        assert len(eigen.classes) == 3
        assert eigen.multiplicities == (1, 2, 2)

    def test_retry_cap(self, target):
        from ...exceptions import NumericalBreakdown
        from ..groups import dihedral_group, orbit_pairs

        with pytest.raises(NumericalBreakdown):
            target(orbit_pairs(dihedral_group(5)), retries=0, residual_tolerance=-1.0)


def test_noncommutative_commutant():
    from ...exceptions import NoncommutativeCommutant
    from ..groups import PermGroup, orbit_pairs
    from ..scheme import scheme_eigenmatrix

    # trivial group: the commutant is all of the 2x2 matrices
    with pytest.raises(NoncommutativeCommutant):
        scheme_eigenmatrix(orbit_pairs(PermGroup(2)))
