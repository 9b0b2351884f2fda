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

"""Reduced theta-prime of a vertex-transitive graph.

An invariant kernel is K = sum_j a_j C_j over the symmetrized class
matrices C_j, and it is positive semidefinite exactly when every
eigenvalue sum_j a_j P[k][j] is nonnegative. The semidefinite program for
theta-prime therefore collapses to a small linear program.
"""

import dataclasses
import logging
import typing

from ..exceptions import DomainError, NotInvariant
from ..lp import LpProblem, Mode, Relation, Row, Sense, SolverOptions, Status, simplex_solve
from .groups import FiniteGraph, Orbitals, PermGroup, orbit_pairs
from .scheme import Eigenmatrix, scheme_eigenmatrix

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ThetaPrimeProgram:
    problem: LpProblem
    eigenmatrix: Eigenmatrix
    edge_classes: typing.Tuple[int, ...]
    nonedge_classes: typing.Tuple[int, ...]


def _check_action(graph: FiniteGraph, orbitals: Orbitals) -> None:
    if graph.n != orbitals.n:
        raise DomainError(f"graph has {graph.n} vertices, group acts on {orbitals.n}")
    if len(orbitals.diagonal_classes()) != 1:
        raise DomainError("the group does not act transitively on the vertices")


def classify_classes(
    graph: FiniteGraph, orbitals: Orbitals, eigen: Eigenmatrix
) -> typing.Tuple[typing.List[int], typing.List[int]]:
    """Split the off-diagonal symmetrized classes into edge and non-edge ones."""
    _check_action(graph, orbitals)
    edges: typing.List[int] = []
    nonedges: typing.List[int] = []
    for j, cls in enumerate(eigen.classes):
        if j == 0:
            continue
        kinds = {graph.adjacent(x, y) for c in cls for x, y in orbitals.pairs(c)}
        if len(kinds) != 1:
            raise NotInvariant(f"class {j} mixes edges and non-edges")
        (edges if kinds.pop() else nonedges).append(j)
    return edges, nonedges


def theta_prime_lp(
    graph: FiniteGraph,
    group: PermGroup,
    eigen: typing.Optional[Eigenmatrix] = None,
) -> ThetaPrimeProgram:
    """Reduced program; variables are [u, p_e, q_e for edge classes, b_j for non-edge classes].

    The kernel coefficients are a_0 = u = lambda - 1 on the diagonal,
    a_e = p_e - q_e on edge classes and a_j = -1 - b_j on non-edge classes.
    Minimizing u gives theta-prime - 1.
    """
    orbitals = orbit_pairs(group)
    _check_action(graph, orbitals)
    if eigen is None:
        eigen = scheme_eigenmatrix(orbitals)
    edges, nonedges = classify_classes(graph, orbitals, eigen)
    P = eigen.P
    costs = [1.0] + [0.0] * (2 * len(edges) + len(nonedges))
    rows = []
    for k in range(P.shape[0]):
        coefficients = [float(P[k, 0])]
        for e in edges:
            coefficients.extend((float(P[k, e]), -float(P[k, e])))
        coefficients.extend(-float(P[k, j]) for j in nonedges)
        rows.append(
            Row(
                coefficients=coefficients,
                relation=Relation.GE,
                rhs=sum(float(P[k, j]) for j in nonedges),
            )
        )
    return ThetaPrimeProgram(
        problem=LpProblem(sense=Sense.MINIMIZE, costs=costs, rows=rows),
        eigenmatrix=eigen,
        edge_classes=tuple(edges),
        nonedge_classes=tuple(nonedges),
    )


def theta_prime_reduced(
    graph: FiniteGraph,
    group: PermGroup,
    options: typing.Optional[SolverOptions] = None,
) -> float:
    program = theta_prime_lp(graph, group)
    solution = simplex_solve(program.problem, options or SolverOptions(mode=Mode.FLOAT))
    if solution.status != Status.OPTIMAL or solution.objective is None:
        # a large multiple of the identity minus J is always feasible
        raise AssertionError(f"reduced theta-prime program ended {solution.status}")
    value = 1 + float(solution.objective)
    logger.debug("theta-prime over %d classes: %s", len(program.eigenmatrix.classes), value)
    return value
