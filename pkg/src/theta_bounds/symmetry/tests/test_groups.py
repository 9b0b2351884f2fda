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

from fractions import Fraction as F

import pytest


class TestPermGroup:
    @pytest.fixture
    def target(self):
        from ..groups import PermGroup

        return PermGroup

    def test_orbit(self, target):
        g = target(6, ((1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 3, 5)))
        assert g.orbit(0) == {0, 1, 2}
        assert g.orbit(3) == {3, 4}
        assert g.orbit(5) == {5}

    @pytest.mark.parametrize("generator", [(0, 0, 1), (0, 1), (0, 1, 3)])
    def test_rejects_non_permutations(self, target, generator):
        from ...exceptions import InvalidPermutation

        with pytest.raises(InvalidPermutation):
            target(3, (generator,))

    def test_vertex_transitivity(self, target):
        from ..groups import dihedral_group, is_vertex_transitive

        assert is_vertex_transitive(dihedral_group(7))
        assert not is_vertex_transitive(target(3, ((2, 1, 0),)))


class TestFiniteGraph:
    @pytest.fixture
    def target(self):
        from ..groups import FiniteGraph

        return FiniteGraph

    def test_from_pairs(self, target):
        g = target.from_pairs(4, [(0, 1), (1, 0), (2, 3)])
        assert len(g.edges) == 2
        assert g.adjacent(1, 0)
        assert not g.adjacent(0, 2)
        assert g.neighbors() == [{1}, {0}, {3}, {2}]

    @pytest.mark.parametrize("pairs", [[(1, 1)], [(0, 4)], [(-1, 0)]])
    def test_rejects_bad_edges(self, target, pairs):
        from ...exceptions import DomainError

        with pytest.raises(DomainError):
            target.from_pairs(4, pairs)

    def test_automorphisms(self):
        from ..groups import cycle_graph

        c5 = cycle_graph(5)
        assert c5.is_automorphism((1, 2, 3, 4, 0))
        assert not c5.is_automorphism((1, 0, 2, 3, 4))


class TestFamilies:
    def test_petersen(self):
        from ..groups import petersen_graph, petersen_group

        g = petersen_graph()
        assert g.n == 10
        assert len(g.edges) == 15
        assert all(len(nbrs) == 3 for nbrs in g.neighbors())
        assert all(g.is_automorphism(p) for p in petersen_group().generators)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_hamming_group_preserves_distance(self, n):
        from ..groups import hamming_graph, hamming_group

        graphs = [hamming_graph(n, [d]) for d in range(1, n + 1)]
        for p in hamming_group(n).generators:
            assert all(g.is_automorphism(p) for g in graphs)

    def test_hamming_graph_degree(self):
        from ..groups import hamming_graph

        g = hamming_graph(4, [1, 2])
        assert all(len(nbrs) == 4 + 6 for nbrs in g.neighbors())

    def test_complete_graph_group(self):
        from ..groups import complete_graph, symmetric_group

        k4 = complete_graph(4)
        assert len(k4.edges) == 6
        assert all(k4.is_automorphism(p) for p in symmetric_group(4).generators)


class TestOrbitPairs:
    @pytest.fixture
    def target(self):
        from ..groups import orbit_pairs

        return orbit_pairs

    def test_trivial_group(self, target):
        from ..groups import PermGroup

        orbitals = target(PermGroup(3))
        assert orbitals.class_count == 9
        assert set(orbitals.sizes) == {1}

    def test_symmetric_group(self, target):
        from ..groups import symmetric_group

        orbitals = target(symmetric_group(5))
        assert orbitals.class_count == 2
        assert orbitals.sizes == (5, 20)
        assert orbitals.diagonal_classes() == {0}

    def test_dihedral_group(self, target):
        from ..groups import dihedral_group

        orbitals = target(dihedral_group(5))
        assert orbitals.class_count == 3
        assert orbitals.sizes == (5, 10, 10)
        assert all(orbitals.symmetric)
        for j, distance in ((1, 1), (2, 2)):
            for x, y in orbitals.pairs(j):
                assert min((x - y) % 5, (y - x) % 5) == distance

    def test_rotations_only(self, target):
        from ..groups import PermGroup, symmetrized_classes

        orbitals = target(PermGroup(5, ((1, 2, 3, 4, 0),)))
        assert orbitals.class_count == 5
        assert not all(orbitals.symmetric)
        assert len(symmetrized_classes(orbitals)) == 3

    def test_hamming_classes_are_distances(self, target):
        from ..groups import hamming_group

        orbitals = target(hamming_group(3))
        assert orbitals.class_count == 4
        for x in range(8):
            for y in range(8):
                assert orbitals.class_of[x][y] == bin(x ^ y).count("1")

    def test_indicator_matrices_partition(self, target):
        import numpy

        from ..groups import orbital_matrices, petersen_group

        mats = orbital_matrices(target(petersen_group()))
        assert len(mats) == 3
        assert numpy.array_equal(sum(mats), numpy.ones((10, 10), dtype=numpy.int64))


class TestGroupAverage:
    @pytest.fixture
    def target(self):
        from ..groups import group_average

        return group_average

    @pytest.fixture
    def c5_orbitals(self):
        from ..groups import dihedral_group, orbit_pairs

        return orbit_pairs(dihedral_group(5))

    def test_elementary_matrix(self, target, c5_orbitals):
        M = [[int((x, y) == (0, 1)) for y in range(5)] for x in range(5)]
        avg = target(M, c5_orbitals)
        for x in range(5):
            for y in range(5):
                expected = F(1, 10) if (x - y) % 5 in (1, 4) else 0
                assert avg[x][y] == expected

    def test_invariant_matrix_is_fixed(self, target, c5_orbitals):
        M = [[int((x - y) % 5 in (1, 4)) for y in range(5)] for x in range(5)]
        assert target(M, c5_orbitals) == M

    def test_all_ones(self, target, c5_orbitals):
        M = [[1] * 5 for _ in range(5)]
        assert target(M, c5_orbitals) == M

    def test_float_input(self, target, c5_orbitals):
        M = [[0.5 if x == y else 0.0 for y in range(5)] for x in range(5)]
        avg = target(M, c5_orbitals)
        assert avg[2][2] == pytest.approx(0.5)

    def test_shape_mismatch(self, target, c5_orbitals):
        from ...exceptions import ShapeMismatch

        with pytest.raises(ShapeMismatch):
            target([[1, 2], [3, 4]], c5_orbitals)
