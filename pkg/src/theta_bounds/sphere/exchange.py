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

"""The LP bound for spherical codes by an exchange method.

The semi-infinite program

    minimize 1 + sum_k f_k
    subject to f_k >= 0, sum_k f_k P_k(t) <= -1 for all t in [-1, c]

is solved over a growing finite pool of constraint points. Each round
solves the pool program exactly, verifies the candidate with Sturm
sequences and adds the points where F + 1 peaks. Every round also tries
the polynomial that vanishes on the points carrying weight in the pool
optimum; once the pool holds the true contact points that candidate
meets the pool lower bound and the optimum is exact. The pool program is
solved in its dual form (variables are weights at pool points), whose
slack basis is feasible; the certificate coefficients are read off the
shadow prices.
"""

import dataclasses
import logging
import typing

import numpy
import numpy.polynomial

from ..exact import (
    Rational,
    RationalLike,
    UniPoly,
    as_rational,
    isolate_real_roots,
    poly_eval,
    simplest_rational_between,
)
from ..exceptions import DomainError, InfeasibleAtDegree, NumericalBreakdown
from ..lp import (
    LpProblem,
    LpSolution,
    Mode,
    Relation,
    Row,
    Sense,
    SolverOptions,
    Status,
    simplex_solve,
)
from ..orthopoly import jacobi_coefficients, jacobi_family
from .certificate import Certificate, verify_certificate

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ExchangeOptions:
    grid_size: int = 64
    max_iterations: int = 50
    # relative gap between the certificate and the pool lower bound
    optimality_gap: Rational = Rational(1, 10**9)
    # a local maximum of F + 1 this close to zero (relative) counts as touching
    touch_tolerance: Rational = Rational(1, 10**3)
    isolation_width: Rational = Rational(1, 2**40)


@dataclasses.dataclass(frozen=True)
class SphereLpResult:
    certificate: Certificate
    # 1 + optimum of the last pool program; the true LP bound lies in between
    lower_bound: Rational
    iterations: int
    pool_size: int

    @property
    def converged_exactly(self) -> bool:
        return self.certificate.bound == self.lower_bound


def _check_args(n: int, cos_theta: typing.Union[Rational, float], degree: int) -> None:
    if n < 2:
        raise DomainError(f"ambient dimension must be at least 2, got {n}")
    if not -1 < cos_theta < 1:
        raise DomainError(f"cos_theta must lie strictly between -1 and 1, got {cos_theta}")
    if degree < 1:
        raise DomainError(f"degree must be positive, got {degree}")


def initial_grid(cos_theta: Rational, size: int) -> typing.List[Rational]:
    """``size`` equispaced rationals from -1 to cos_theta, both included."""
    if size < 2:
        raise DomainError(f"grid needs at least two points, got {size}")
    step = (cos_theta + 1) / (size - 1)
    return [-1 + j * step for j in range(size)]


class _PoolProgram:
    """Dual form of the LP restricted to a finite pool of points."""

    polys: typing.Sequence[UniPoly]
    derivatives: typing.Sequence[UniPoly]
    _values: typing.Dict[Rational, typing.List[Rational]]

    def __init__(self, polys: typing.Sequence[UniPoly]) -> None:
        self.polys = polys
        self.derivatives = [p.derivative() for p in polys]
        self._values = {}

    def values_at(self, t: Rational) -> typing.List[Rational]:
        v = self._values.get(t)
        if v is None:
            v = self._values[t] = [poly_eval(p, t) for p in self.polys]
        return v

    def problem(
        self,
        pool: typing.Sequence[Rational],
        *,
        cap: typing.Optional[Rational] = None,
        tangents: typing.Sequence[Rational] = (),
    ) -> LpProblem:
        """Build the dual program.

        Without ``cap`` the rows carry rhs 1 (the cost of every f_k) and
        the optimum is min sum_k f_k over the pool. With ``cap`` the primal
        minimizes sum_k 2^k f_k among solutions with sum_k f_k <= cap,
        which breaks ties in favour of low degrees. Each tangent point s
        adds the primal equation F'(s) = 0 as a free dual column.
        """
        degree = len(self.polys) - 1
        columns = [self.values_at(t) for t in pool]
        derivs = [[poly_eval(d, s) for d in self.derivatives] for s in tangents]
        costs: typing.List[Rational] = [Rational(1)] * len(pool)
        if cap is not None:
            costs.append(-cap)
        for _ in tangents:
            costs.extend((Rational(0), Rational(0)))
        rows = []
        for k in range(degree + 1):
            coefficients = [-col[k] for col in columns]
            if cap is not None:
                coefficients.append(Rational(-1))
            for d in derivs:
                coefficients.extend((d[k], -d[k]))
            rows.append(
                Row(
                    coefficients=coefficients,
                    relation=Relation.LE,
                    rhs=Rational(1) if cap is None else Rational(2**k),
                )
            )
        return LpProblem(sense=Sense.MAXIMIZE, costs=costs, rows=rows)

    def solve(
        self,
        pool: typing.Sequence[Rational],
        tangents: typing.Sequence[Rational] = (),
    ) -> typing.Optional[typing.Tuple[Rational, typing.List[Rational], typing.List[Rational]]]:
        """Optimum of the pool program, tie-broken coefficients f_k and the
        weights the optimal dual solution puts on each pool point.

        Returns None when the pool constraints admit no F of this degree.
        """
        options = SolverOptions()
        solution = simplex_solve(self.problem(pool, tangents=tangents), options)
        if solution.status == Status.UNBOUNDED:
            return None
        value = _optimal_objective(solution)
        assert solution.values is not None
        weights = [as_rational(y) for y in solution.values[: len(pool)]]
        tie_broken = simplex_solve(self.problem(pool, cap=value, tangents=tangents), options)
        _optimal_objective(tie_broken)
        assert tie_broken.duals is not None
        return value, [as_rational(f) for f in tie_broken.duals], weights


def _optimal_objective(solution: LpSolution) -> Rational:
    # y = 0 is feasible for the dual form, so it never ends infeasible
    if solution.status != Status.OPTIMAL or solution.objective is None:
        raise AssertionError(f"pool program ended {solution.status}")
    return as_rational(solution.objective)


class _Exchange:
    n: int
    cos_theta: Rational
    degree: int
    options: ExchangeOptions
    program: _PoolProgram
    pool: typing.List[Rational]
    step: Rational
    lower: Rational
    best: typing.Optional[Certificate]

    def __init__(
        self, n: int, cos_theta: Rational, degree: int, options: ExchangeOptions
    ) -> None:
        self.n = n
        self.cos_theta = cos_theta
        self.degree = degree
        self.options = options
        self.program = _PoolProgram(jacobi_family(n).polynomials(degree))
        self.pool = initial_grid(cos_theta, options.grid_size)
        self.step = (cos_theta + 1) / (options.grid_size - 1)
        self.lower = Rational(0)
        self.best = None

    def certificate(self, coeffs: typing.Sequence[Rational]) -> Certificate:
        return Certificate.from_coefficients(self.n, self.cos_theta, coeffs)

    def offer(self, cert: Certificate) -> bool:
        if not verify_certificate(cert):
            return False
        if self.best is None or cert.bound < self.best.bound:
            self.best = cert
        return True

    def critical_points(self, g: UniPoly) -> typing.List[Rational]:
        """Approximate interior critical points of g on [-1, c]."""
        dg = g.derivative()
        if dg.is_zero():
            return []
        return [
            (lo + hi) / 2
            for lo, hi in isolate_real_roots(
                dg, -1, self.cos_theta, self.options.isolation_width
            )
            if -1 < lo and hi < self.cos_theta
        ]

    def converged(self) -> bool:
        if self.best is None:
            return False
        gap = self.best.bound - self.lower
        return gap <= self.options.optimality_gap * max(Rational(1), self.lower)

    def touching(self, weights: typing.Sequence[Rational]) -> typing.Optional[Certificate]:
        """Build F from the points that carry weight in the pool optimum.

        Complementary slackness forces F + 1 to vanish at every such point,
        with even multiplicity inside (-1, c). The candidate is

            F + 1 = q / q_0,  q = (t - c) (t + 1)^e prod_s (t - s)^2

        where e = 1 when -1 carries weight and q_0 is the constant Jacobi
        coefficient of q. When the weighted points are the exact contact
        points of the optimum this is the optimal polynomial.
        """
        support = [t for t, y in zip(self.pool, weights) if y > 0]
        roots = [self.cos_theta]
        if Rational(-1) in support:
            roots.append(Rational(-1))
        for s in support:
            if -1 < s < self.cos_theta:
                roots.extend((s, s))
        if len(roots) > self.degree:
            return None
        expansion = jacobi_coefficients(self.n, UniPoly.from_roots(roots))
        if expansion[0] <= 0:
            return None
        coeffs = [Rational(0)] + [q / expansion[0] for q in expansion[1:]]
        cert = self.certificate(coeffs)
        if not self.offer(cert):
            return None
        logger.debug("contact points %s give bound %s", support, cert.bound)
        return cert

    def new_points(
        self, g: UniPoly, critical: typing.Sequence[Rational], scale: Rational
    ) -> typing.List[Rational]:
        """Violating maxima of g, and simple rationals next to near-touching ones."""
        known = set(self.pool)
        found: typing.List[Rational] = []
        threshold = -self.options.touch_tolerance * scale
        for x in critical:
            gx = poly_eval(g, x)
            if gx < threshold:
                continue
            candidates = []
            if gx > 0:
                near = self.step / 1024
                candidates.append(
                    simplest_rational_between(
                        max(Rational(-1), x - near), min(self.cos_theta, x + near)
                    )
                )
            snapped = simplest_rational_between(
                max(Rational(-1), x - self.step), min(self.cos_theta, x + self.step)
            )
            candidates.append(snapped)
            for t in candidates:
                if t not in known:
                    known.add(t)
                    found.append(t)
        return found

    def active_interior(self, coeffs: typing.Sequence[Rational]) -> typing.List[Rational]:
        return [
            t
            for t in self.pool
            if -1 < t < self.cos_theta
            and 1 + sum(f * v for f, v in zip(coeffs, self.program.values_at(t))) == 0
        ]

    def polish(self, coeffs: typing.Sequence[Rational]) -> typing.Optional[Certificate]:
        """Re-solve with F'(s) = 0 at every interior point where F touches -1."""
        tangents = self.active_interior(coeffs)
        if not tangents:
            return None
        solved = self.program.solve(self.pool, tangents)
        if solved is None:
            return None
        cert = self.certificate(solved[1])
        return cert if self.offer(cert) else None

    def repair(
        self, cert: Certificate, g: UniPoly, critical: typing.Sequence[Rational]
    ) -> typing.Optional[Certificate]:
        """Scale F by 1 / (1 - m) where m bounds max(F + 1) from above."""
        samples = list(critical) + [Rational(-1), self.cos_theta]
        peak = max(poly_eval(g, x) for x in samples)
        margin = Rational(1, 2**20)
        while margin < 1:
            m = max(peak, Rational(0)) * (1 + margin) + margin * Rational(1, 2**20)
            if m >= 1:
                return None
            lam = 1 / (1 - m)
            lam = simplest_rational_between(lam, lam * (1 + margin / 4))
            scaled = self.certificate([f * lam for f in cert.coeffs])
            if self.offer(scaled):
                return scaled
            margin *= 4
        return None

    def run(self) -> SphereLpResult:
        iterations = 0
        for iterations in range(1, self.options.max_iterations + 1):
            solved = self.program.solve(self.pool)
            if solved is None:
                raise InfeasibleAtDegree(
                    f"no polynomial of degree {self.degree} is <= -1 on [-1, {self.cos_theta}]",
                    degree=self.degree,
                )
            value, coeffs, weights = solved
            self.lower = max(self.lower, 1 + value)
            cert = self.certificate(coeffs)
            g = cert.polynomial() + 1
            critical = self.critical_points(g)
            if not self.offer(cert) and self.polish(coeffs) is None:
                self.repair(cert, g, critical)
            self.touching(weights)
            logger.debug(
                "round %d: pool %d, lower %s, candidate %s, best %s",
                iterations,
                len(self.pool),
                self.lower,
                cert.bound,
                self.best.bound if self.best is not None else None,
            )
            if self.converged():
                if self.best is not None and self.best.bound == self.lower:
                    logger.info("exact optimum %s after %d rounds", self.best.bound, iterations)
                else:
                    logger.info("gap below tolerance after %d rounds", iterations)
                break
            fresh = self.new_points(g, critical, max(Rational(1), value))
            if not fresh:
                logger.warning(
                    "exchange stalled after %d rounds with gap %s",
                    iterations,
                    float(self.best.bound - self.lower) if self.best is not None else None,
                )
                break
            self.pool.extend(fresh)
        else:
            logger.warning(
                "exchange hit the %d round cap before closing the gap",
                self.options.max_iterations,
            )
        if self.best is None:
            raise InfeasibleAtDegree(
                f"no certificate verified after {iterations} rounds", degree=self.degree
            )
        return SphereLpResult(
            certificate=self.best,
            lower_bound=self.lower,
            iterations=iterations,
            pool_size=len(self.pool),
        )


def solve_sphere_lp(
    n: int,
    cos_theta: RationalLike,
    degree: int,
    options: typing.Optional[ExchangeOptions] = None,
) -> SphereLpResult:
    cos_theta = as_rational(cos_theta)
    _check_args(n, cos_theta, degree)
    return _Exchange(n, cos_theta, degree, options or ExchangeOptions()).run()


def dgs_lp_bound(
    n: int,
    cos_theta: RationalLike,
    degree: int,
    options: typing.Optional[ExchangeOptions] = None,
) -> Certificate:
    """A verified certificate for the degree-limited LP bound on spherical codes.

    Raises :class:`InfeasibleAtDegree` when no certificate of this degree
    exists; callers should raise the degree.
    """
    return solve_sphere_lp(n, cos_theta, degree, options).certificate


@dataclasses.dataclass(frozen=True)
class FloatSphereLpResult:
    n: int
    cos_theta: float
    bound: float
    coeffs: typing.Tuple[float, ...]
    lower_bound: float
    iterations: int
    pool_size: int
    # largest sampled value of F + 1 on [-1, cos_theta] for ``coeffs``
    max_violation: float


class _FloatExchange:
    """The exchange method in floating point, for cosines that are not rational.

    F + 1 <= 0 is checked on a dense sample and at the real roots of F'
    only; the result is an estimate, not a certificate.
    """

    n: int
    cos_theta: float
    degree: int
    options: ExchangeOptions
    polys: typing.List[numpy.polynomial.Polynomial]
    pool: typing.List[float]
    samples: numpy.ndarray

    def __init__(self, n: int, cos_theta: float, degree: int, options: ExchangeOptions) -> None:
        self.n = n
        self.cos_theta = cos_theta
        self.degree = degree
        self.options = options
        self.polys = [
            numpy.polynomial.Polynomial([float(c) for c in p.coefficients])
            for p in jacobi_family(n).polynomials(degree)
        ]
        self.pool = numpy.linspace(-1.0, cos_theta, options.grid_size).tolist()
        self.samples = numpy.linspace(-1.0, cos_theta, 16 * options.grid_size)

    def problem(self) -> LpProblem:
        columns = [[float(p(t)) for p in self.polys] for t in self.pool]
        rows = [
            Row(coefficients=[-col[k] for col in columns], relation=Relation.LE, rhs=1.0)
            for k in range(self.degree + 1)
        ]
        return LpProblem(sense=Sense.MAXIMIZE, costs=[1.0] * len(self.pool), rows=rows)

    def polynomial(self, coeffs: typing.Sequence[float]) -> numpy.polynomial.Polynomial:
        return sum((p * f for p, f in zip(self.polys, coeffs)), numpy.polynomial.Polynomial([0.0]))

    def critical_points(self, g: numpy.polynomial.Polynomial) -> numpy.ndarray:
        roots = g.deriv().roots()
        real = roots[numpy.abs(roots.imag) <= 1e-9].real
        return real[(real > -1.0) & (real < self.cos_theta)]

    def run(self) -> FloatSphereLpResult:
        best: typing.Optional[typing.Tuple[float, typing.List[float], float]] = None
        lower = 0.0
        iterations = 0
        gap = float(self.options.optimality_gap)
        for iterations in range(1, self.options.max_iterations + 1):
            solution = simplex_solve(self.problem(), SolverOptions(mode=Mode.FLOAT))
            if solution.status == Status.UNBOUNDED:
                raise InfeasibleAtDegree(
                    f"no polynomial of degree {self.degree} is <= -1 on [-1, {self.cos_theta}]",
                    degree=self.degree,
                )
            if solution.status != Status.OPTIMAL or solution.duals is None:
                raise NumericalBreakdown(f"pool program ended {solution.status}")
            lower = max(lower, 1.0 + float(typing.cast(float, solution.objective)))
            coeffs = [max(0.0, float(f)) for f in solution.duals]
            g = self.polynomial(coeffs) + 1.0
            critical = self.critical_points(g)
            points = numpy.concatenate((self.samples, critical))
            peak = float(numpy.max(g(points)))
            if peak < 1.0:
                # F / (1 - peak) + 1 <= 0 on the sampled points
                scale = 1.0 / (1.0 - max(peak, 0.0))
                scaled = [f * scale for f in coeffs]
                bound = 1.0 + sum(scaled)
                if best is None or bound < best[0]:
                    violation = float(numpy.max((self.polynomial(scaled) + 1.0)(points)))
                    best = (bound, scaled, violation)
            logger.debug(
                "float round %d: pool %d, lower %.12g, best %s",
                iterations,
                len(self.pool),
                lower,
                best[0] if best is not None else None,
            )
            if best is not None and best[0] - lower <= gap * max(1.0, lower):
                break
            tolerance = 1e-12 * max(1.0, lower)
            fresh = [
                float(x)
                for x in critical
                if g(x) > -tolerance and min(abs(x - t) for t in self.pool) > 1e-12
            ]
            if not fresh:
                break
            self.pool.extend(fresh)
        if best is None:
            raise InfeasibleAtDegree(
                f"no sampled certificate after {iterations} rounds", degree=self.degree
            )
        bound, coeffs, violation = best
        return FloatSphereLpResult(
            n=self.n,
            cos_theta=self.cos_theta,
            bound=bound,
            coeffs=tuple(coeffs),
            lower_bound=lower,
            iterations=iterations,
            pool_size=len(self.pool),
            max_violation=violation,
        )


def solve_sphere_lp_float(
    n: int,
    cos_theta: float,
    degree: int,
    options: typing.Optional[ExchangeOptions] = None,
) -> FloatSphereLpResult:
    """Estimate the LP bound for an arbitrary real cos_theta in floating point."""
    cos_theta = float(cos_theta)
    _check_args(n, cos_theta, degree)
    return _FloatExchange(n, cos_theta, degree, options or ExchangeOptions()).run()
