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

"""Simultaneous diagonalization of a commutative orbital algebra."""

import dataclasses
import logging
import typing

import numpy

from ..exceptions import NoncommutativeCommutant, NumericalBreakdown
from .groups import Orbitals, orbital_matrices, symmetrized_classes

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Eigenmatrix:
    """Eigenvalues of the symmetrized class matrices on the common eigenspaces.

    ``P[k][j]`` is the eigenvalue of the indicator of ``classes[j]`` on
    eigenspace k; ``projections[k]`` is the orthogonal projection onto it.
    """

    P: numpy.ndarray
    multiplicities: typing.Tuple[int, ...]
    classes: typing.Tuple[typing.Tuple[int, ...], ...]
    projections: typing.Tuple[numpy.ndarray, ...]


def check_commutative(matrices: typing.Sequence[numpy.ndarray]) -> None:
    for i, a in enumerate(matrices):
        for j in range(i + 1, len(matrices)):
            b = matrices[j]
            if not numpy.array_equal(a @ b, b @ a):
                raise NoncommutativeCommutant(
                    f"orbital matrices {i} and {j} do not commute; "
                    "the action is not multiplicity-free"
                )


def symmetrized_matrices(orbitals: Orbitals) -> typing.Tuple[
    typing.List[typing.Tuple[int, ...]], typing.List[numpy.ndarray]
]:
    indicators = orbital_matrices(orbitals)
    classes = symmetrized_classes(orbitals)
    return classes, [sum(indicators[c] for c in cls) for cls in classes]


def _cluster(w: numpy.ndarray, tolerance: float) -> typing.List[typing.List[int]]:
    groups: typing.List[typing.List[int]] = []
    for i in numpy.argsort(w):
        if groups and abs(w[i] - w[groups[-1][-1]]) <= tolerance:
            groups[-1].append(int(i))
        else:
            groups.append([int(i)])
    return groups


def _attempt(
    matrices: typing.Sequence[numpy.ndarray],
    rng: numpy.random.Generator,
    residual_tolerance: float,
) -> typing.Optional[typing.Tuple[numpy.ndarray, typing.List[numpy.ndarray]]]:
    coefficients = rng.uniform(1.0, 2.0, size=len(matrices))
    S = sum(c * m for c, m in zip(coefficients, matrices))
    w, V = numpy.linalg.eigh(S)
    spread = max(1.0, float(numpy.abs(w).max()))
    spaces = [V[:, idx] for idx in _cluster(w, 1e-6 * spread)]
    if len(spaces) != len(matrices):
        return None
    P = numpy.empty((len(spaces), len(matrices)))
    for k, Vk in enumerate(spaces):
        m = Vk.shape[1]
        for j, B in enumerate(matrices):
            M = Vk.T @ B @ Vk
            theta = float(numpy.trace(M)) / m
            if numpy.abs(M - theta * numpy.eye(m)).max() > residual_tolerance:
                return None
            P[k, j] = theta
    return P, spaces


def scheme_eigenmatrix(
    orbitals: Orbitals,
    *,
    retries: int = 3,
    residual_tolerance: float = 1e-7,
    reconstruction_tolerance: float = 1e-9,
    rng: typing.Optional[numpy.random.Generator] = None,
) -> Eigenmatrix:
    """Diagonalize a random combination of the class matrices.

    Each symmetrized class matrix then acts as a scalar on every
    eigenspace. A degenerate random choice shows up as a nonscalar block
    and is retried with fresh coefficients. The eigenspace containing the
    all-ones vector comes first.
    """
    check_commutative(orbital_matrices(orbitals))
    classes, matrices = symmetrized_matrices(orbitals)
    rng = rng if rng is not None else numpy.random.default_rng(0)
    for attempt in range(retries + 1):
        found = _attempt(matrices, rng, residual_tolerance)
        if found is not None:
            break
        logger.warning("degenerate combination on attempt %d, retrying", attempt + 1)
    else:
        raise NumericalBreakdown(
            f"no separating combination of class matrices after {retries} retries"
        )
    P, spaces = found

    n = orbitals.n
    ones = numpy.ones(n) / numpy.sqrt(n)
    weight = [float(numpy.linalg.norm(Vk.T @ ones)) for Vk in spaces]
    order = sorted(
        range(len(spaces)),
        key=lambda k: (-round(weight[k], 6), tuple(-round(v, 9) for v in P[k])),
    )
    P = P[order]
    spaces = [spaces[k] for k in order]
    projections = tuple(Vk @ Vk.T for Vk in spaces)

    for j, B in enumerate(matrices):
        rebuilt = sum(P[k, j] * E for k, E in enumerate(projections))
        err = float(numpy.abs(rebuilt - B).max())
        if err > reconstruction_tolerance:
            raise NumericalBreakdown(
                f"class matrix {j} reconstructed with error {err:.3g}"
            )
    return Eigenmatrix(
        P=P,
        multiplicities=tuple(Vk.shape[1] for Vk in spaces),
        classes=tuple(classes),
        projections=projections,
    )
