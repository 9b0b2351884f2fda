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

"""Two-phase tableau simplex over an exact or a floating scalar.

Problems are stated in natural form: a sense, a cost vector and rows with a
relation each, every variable being nonnegative. Slack, surplus and
artificial columns are added internally.

Exact mode pivots with Bland's rule and never cycles. Float mode uses the
largest-coefficient rule with a pivot threshold and raises
:class:`NumericalBreakdown` when the result cannot be trusted.
"""

import dataclasses
import fractions
import logging
import math
import typing

from .exact import as_rational
from .exceptions import InvalidProblem, NumericalBreakdown
from .utils import StrEnum

logger = logging.getLogger(__name__)

Scalar = typing.Union[fractions.Fraction, float, int]


class Sense(StrEnum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


class Relation(StrEnum):
    LE = "<="
    EQ = "="
    GE = ">="


class Status(StrEnum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class Mode(StrEnum):
    EXACT = "exact"
    FLOAT = "float"


@dataclasses.dataclass(frozen=True)
class Row:
    coefficients: typing.Sequence[Scalar]
    relation: Relation
    rhs: Scalar


@dataclasses.dataclass(frozen=True)
class LpProblem:
    sense: Sense
    costs: typing.Sequence[Scalar]
    rows: typing.Sequence[Row] = ()

    def __post_init__(self) -> None:
        if not self.costs:
            raise InvalidProblem("a linear program needs at least one variable")
        n = len(self.costs)
        for i, row in enumerate(self.rows):
            if len(row.coefficients) != n:
                raise InvalidProblem(
                    f"row {i} has {len(row.coefficients)} coefficients, expected {n}"
                )
        object.__setattr__(self, "costs", tuple(self.costs))
        object.__setattr__(self, "rows", tuple(self.rows))

    @property
    def num_variables(self) -> int:
        return len(self.costs)


@dataclasses.dataclass(frozen=True)
class LpSolution:
    status: Status
    values: typing.Optional[typing.Sequence[Scalar]] = None
    objective: typing.Optional[Scalar] = None
    # shadow prices: derivative of the optimum with respect to each rhs
    duals: typing.Optional[typing.Sequence[Scalar]] = None
    pivots: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status == Status.OPTIMAL


@dataclasses.dataclass(frozen=True)
class SolverOptions:
    mode: Mode = Mode.EXACT
    tolerance: float = 1e-9
    max_iterations: typing.Optional[int] = None

    @property
    def iteration_cap(self) -> typing.Optional[int]:
        if self.max_iterations is not None:
            return self.max_iterations
        return 10_000 if self.mode == Mode.FLOAT else None


class Arithmetic:
    zero: Scalar

    def convert(self, v: Scalar) -> Scalar:
        raise NotImplementedError()

    def is_positive(self, v: Scalar) -> bool:
        raise NotImplementedError()

    def is_negative(self, v: Scalar) -> bool:
        raise NotImplementedError()

    def is_zero(self, v: Scalar) -> bool:
        return not self.is_positive(v) and not self.is_negative(v)


class ExactArithmetic(Arithmetic):
    zero = fractions.Fraction(0)

    def convert(self, v: Scalar) -> Scalar:
        if isinstance(v, float):
            return fractions.Fraction(v)
        return as_rational(v)

    def is_positive(self, v: Scalar) -> bool:
        return v > 0

    def is_negative(self, v: Scalar) -> bool:
        return v < 0


class FloatArithmetic(Arithmetic):
    zero = 0.0
    tolerance: float

    def __init__(self, tolerance: float) -> None:
        self.tolerance = tolerance

    def convert(self, v: Scalar) -> Scalar:
        return float(v)

    def is_positive(self, v: Scalar) -> bool:
        return v > self.tolerance

    def is_negative(self, v: Scalar) -> bool:
        return v < -self.tolerance


def arithmetic_for(options: SolverOptions) -> Arithmetic:
    if options.mode == Mode.EXACT:
        return ExactArithmetic()
    return FloatArithmetic(options.tolerance)


class SimplexSolver:
    problem: LpProblem
    options: SolverOptions
    arith: Arithmetic
    tableau: typing.List[typing.List[Scalar]]
    objective_row: typing.List[Scalar]
    basis: typing.List[int]
    row_signs: typing.List[int]
    identity_columns: typing.List[int]
    artificial: typing.Set[int]
    num_columns: int
    pivots: int

    def __init__(
        self, problem: LpProblem, options: typing.Optional[SolverOptions] = None
    ) -> None:
        self.problem = problem
        self.options = options or SolverOptions()
        self.arith = arithmetic_for(self.options)
        self.pivots = 0
        self._build()

    def _build(self) -> None:
        ar = self.arith
        n = self.problem.num_variables
        normalized: typing.List[typing.Tuple[typing.List[Scalar], Relation, Scalar]] = []
        self.row_signs = []
        for row in self.problem.rows:
            coefs = [ar.convert(c) for c in row.coefficients]
            rhs = ar.convert(row.rhs)
            relation = row.relation
            if rhs < 0:
                coefs = [-c for c in coefs]
                rhs = -rhs
                relation = {
                    Relation.LE: Relation.GE,
                    Relation.GE: Relation.LE,
                    Relation.EQ: Relation.EQ,
                }[relation]
                self.row_signs.append(-1)
            else:
                self.row_signs.append(1)
            normalized.append((coefs, relation, rhs))

        extra = sum(2 if rel == Relation.GE else 1 for _, rel, _ in normalized)
        self.num_columns = n + extra
        self.tableau = []
        self.basis = []
        self.identity_columns = []
        self.artificial = set()
        col = n
        for i, (coefs, relation, rhs) in enumerate(normalized):
            row = coefs + [ar.zero] * extra + [rhs]
            if relation == Relation.GE:
                row[col] = ar.convert(-1)
                col += 1
            row[col] = ar.convert(1)
            if relation != Relation.LE:
                self.artificial.add(col)
            self.basis.append(col)
            self.identity_columns.append(col)
            col += 1
            self.tableau.append(row)

    def _price(self, costs: typing.Sequence[Scalar]) -> None:
        obj = list(costs) + [self.arith.zero]
        for i, b in enumerate(self.basis):
            cb = costs[b]
            if cb == 0:
                continue
            row = self.tableau[i]
            obj = [o - cb * r for o, r in zip(obj, row)]
        self.objective_row = obj

    def _pivot(self, r: int, c: int) -> None:
        T = self.tableau
        pv = T[r][c]
        prow = [v / pv for v in T[r]]
        T[r] = prow
        for i, row in enumerate(T):
            if i == r:
                continue
            f = row[c]
            if f == 0:
                continue
            T[i] = [a - f * b for a, b in zip(row, prow)]
        f = self.objective_row[c]
        if f != 0:
            self.objective_row = [a - f * b for a, b in zip(self.objective_row, prow)]
        self.basis[r] = c
        self.pivots += 1

    def _entering(self, allowed: typing.Callable[[int], bool]) -> typing.Optional[int]:
        d = self.objective_row
        if self.options.mode == Mode.EXACT:
            for j in range(self.num_columns):
                if allowed(j) and d[j] < 0:
                    return j
            return None
        best: typing.Optional[int] = None
        for j in range(self.num_columns):
            if allowed(j) and self.arith.is_negative(d[j]):
                if best is None or d[j] < d[best]:
                    best = j
        return best

    def _leaving(self, c: int) -> typing.Optional[int]:
        best: typing.Optional[int] = None
        best_ratio: typing.Optional[Scalar] = None
        for i, row in enumerate(self.tableau):
            a = row[c]
            if not self.arith.is_positive(a):
                continue
            ratio = row[-1] / a
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and self.basis[i] < self.basis[best])  # type: ignore
            ):
                best, best_ratio = i, ratio
        return best

    def _iterate(self, allowed: typing.Callable[[int], bool]) -> Status:
        cap = self.options.iteration_cap
        while True:
            if cap is not None and self.pivots >= cap:
                raise NumericalBreakdown(
                    f"simplex did not converge within {cap} pivots"
                )
            c = self._entering(allowed)
            if c is None:
                return Status.OPTIMAL
            r = self._leaving(c)
            if r is None:
                return Status.UNBOUNDED
            self._pivot(r, c)

    def _drive_out_artificials(self) -> None:
        for i, b in enumerate(self.basis):
            if b not in self.artificial:
                continue
            row = self.tableau[i]
            for j in range(self.num_columns):
                if j not in self.artificial and not self.arith.is_zero(row[j]):
                    self._pivot(i, j)
                    break
            # otherwise the row is redundant and its artificial stays at zero

    def solve(self) -> LpSolution:
        ar = self.arith
        n = self.problem.num_variables
        if self.artificial:
            phase1 = [ar.zero] * self.num_columns
            for j in self.artificial:
                phase1[j] = ar.convert(1)
            self._price(phase1)
            self._iterate(lambda j: True)
            if ar.is_positive(-self.objective_row[-1]):
                logger.debug("phase 1 ended infeasible after %d pivots", self.pivots)
                return LpSolution(status=Status.INFEASIBLE, pivots=self.pivots)
            self._drive_out_artificials()
            logger.debug("phase 1 done after %d pivots", self.pivots)

        sign = -1 if self.problem.sense == Sense.MAXIMIZE else 1
        costs = [ar.convert(c) * sign for c in self.problem.costs] + [ar.zero] * (
            self.num_columns - n
        )
        self._price(costs)
        status = self._iterate(lambda j: j not in self.artificial)
        logger.debug("phase 2 ended %s after %d pivots", status, self.pivots)
        if status != Status.OPTIMAL:
            return LpSolution(status=status, pivots=self.pivots)

        values: typing.List[Scalar] = [ar.zero] * n
        for i, b in enumerate(self.basis):
            if b < n:
                values[b] = self.tableau[i][-1]
        objective = sum(
            (ar.convert(c) * v for c, v in zip(self.problem.costs, values)), ar.zero
        )
        duals = [
            -self.objective_row[col] * sign * s
            for col, s in zip(self.identity_columns, self.row_signs)
        ]
        if self.options.mode == Mode.FLOAT:
            self._check_residuals(values)
        return LpSolution(
            status=Status.OPTIMAL,
            values=values,
            objective=objective,
            duals=duals,
            pivots=self.pivots,
        )

    def _check_residuals(self, values: typing.Sequence[Scalar]) -> None:
        slack = math.sqrt(self.options.tolerance)
        for i, row in enumerate(self.problem.rows):
            if not relation_holds(row, values, slack):
                raise NumericalBreakdown(f"row {i} violated after float solve")


def row_activity(row: Row, values: typing.Sequence[Scalar]) -> Scalar:
    return sum((a * x for a, x in zip(row.coefficients, values)), 0)


def relation_holds(row: Row, values: typing.Sequence[Scalar], tolerance: float = 0) -> bool:
    lhs = row_activity(row, values)
    tol = tolerance * (1 + abs(row.rhs)) if tolerance else 0
    if row.relation == Relation.LE:
        return lhs <= row.rhs + tol
    if row.relation == Relation.GE:
        return lhs >= row.rhs - tol
    return abs(lhs - row.rhs) <= tol


def simplex_solve(
    problem: LpProblem, options: typing.Optional[SolverOptions] = None
) -> LpSolution:
    return SimplexSolver(problem, options).solve()


def check_optimality(
    problem: LpProblem,
    solution: LpSolution,
    options: typing.Optional[SolverOptions] = None,
) -> bool:
    """Certify a claimed optimum through LP duality.

    Checks primal feasibility, the sign pattern and feasibility of the dual
    solution attached to ``solution``, complementary slackness and equality
    of the primal and dual objectives. Exact in exact mode.
    """
    options = options or SolverOptions()
    if (
        solution.status != Status.OPTIMAL
        or solution.values is None
        or solution.duals is None
        or len(solution.values) != problem.num_variables
        or len(solution.duals) != len(problem.rows)
    ):
        return False
    tol = 0.0 if options.mode == Mode.EXACT else math.sqrt(options.tolerance)

    def close(a: Scalar, b: Scalar) -> bool:
        return abs(a - b) <= tol * (1 + abs(a) + abs(b))

    x = solution.values
    y = solution.duals
    if any(v < -tol for v in x):
        return False
    for row in problem.rows:
        if not relation_holds(row, x, tol):
            return False

    maximize = problem.sense == Sense.MAXIMIZE
    for row, yi in zip(problem.rows, y):
        if row.relation == Relation.EQ:
            continue
        # shadow prices of binding-direction rows are nonnegative
        binding = (row.relation == Relation.GE) != maximize
        if (yi < -tol) if binding else (yi > tol):
            return False
        if not close(yi * (row_activity(row, x) - row.rhs), 0):
            return False

    for j, c in enumerate(problem.costs):
        reduced = c - sum((row.coefficients[j] * yi for row, yi in zip(problem.rows, y)), 0)
        if (reduced > tol) if maximize else (reduced < -tol):
            return False
        if not close(x[j] * reduced, 0):
            return False

    primal = sum((c * v for c, v in zip(problem.costs, x)), 0)
    dual = sum((row.rhs * yi for row, yi in zip(problem.rows, y)), 0)
    if solution.objective is None or not close(primal, solution.objective):
        return False
    return close(primal, dual)
