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

from .groups import (  # noqa: F401
    FiniteGraph,
    Orbitals,
    PermGroup,
    complete_graph,
    cycle_graph,
    dihedral_group,
    group_average,
    hamming_graph,
    hamming_group,
    is_vertex_transitive,
    orbit_pairs,
    orbital_matrices,
    petersen_graph,
    petersen_group,
    symmetric_group,
    symmetrized_classes,
)
from .scheme import Eigenmatrix, scheme_eigenmatrix  # noqa: F401
from .stable import stable_set_bruteforce  # noqa: F401
from .theta import theta_prime_lp, theta_prime_reduced  # noqa: F401
