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

"""Harmonic analysis on the Hamming cube {0,1}^n and the Delsarte LP bound.

Points are tuples of bits; a point x is stored at index sum_i x_i 2^i of a
:class:`FunctionTable`.
"""

import dataclasses
import itertools
import math
import typing

from .exact import ComplexRational, Rational
from .exceptions import DomainError
from .lp import (
    LpProblem,
    LpSolution,
    Mode,
    Relation,
    Row,
    Scalar,
    Sense,
    SolverOptions,
    Status,
    simplex_solve,
)
from .orthopoly import krawtchouk_family

CubePoint = typing.Tuple[int, ...]

Value = typing.Union[Rational, ComplexRational]


def cube_point(bits: typing.Iterable[int]) -> CubePoint:
    point = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in point):
        raise DomainError(f"cube points have 0/1 entries, got {point}")
    return point


def encode_point(x: CubePoint) -> int:
    return sum(b << i for i, b in enumerate(x))


def decode_point(v: int, n: int) -> CubePoint:
    if not 0 <= v < 1 << n:
        raise DomainError(f"{v} does not encode a point of {{0,1}}^{n}")
    return tuple((v >> i) & 1 for i in range(n))


def weight(x: CubePoint) -> int:
    return sum(x)


def _check_lengths(x: CubePoint, y: CubePoint) -> None:
    if len(x) != len(y):
        raise DomainError(f"points of different lengths: {len(x)} and {len(y)}")


def hamming_distance(x: CubePoint, y: CubePoint) -> int:
    _check_lengths(x, y)
    return sum(a != b for a, b in zip(x, y))


def character_eval(y: CubePoint, x: CubePoint) -> int:
    """chi_y(x) = (-1)^(y . x)."""
    _check_lengths(x, y)
    return -1 if sum(a & b for a, b in zip(y, x)) % 2 else 1


@dataclasses.dataclass(frozen=True)
class FunctionTable:
    n: int
    values: typing.Tuple[Value, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"dimension must be nonnegative, got {self.n}")
        if len(self.values) != 1 << self.n:
            raise DomainError(
                f"a function on {{0,1}}^{self.n} needs {1 << self.n} values, "
                f"got {len(self.values)}"
            )
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def from_function(
        cls, n: int, f: typing.Callable[[CubePoint], typing.Union[int, Value]]
    ) -> "FunctionTable":
        return cls(
            n,
            tuple(_as_value(f(decode_point(v, n))) for v in range(1 << n)),
        )

    def __getitem__(self, x: typing.Union[int, CubePoint]) -> Value:
        if isinstance(x, tuple):
            if len(x) != self.n:
                raise DomainError(f"point of length {len(x)} in dimension {self.n}")
            x = encode_point(x)
        return self.values[x]


def _as_value(v: typing.Union[int, Value]) -> Value:
    if isinstance(v, ComplexRational):
        return v
    return Rational(v)


def character_table(n: int, y: CubePoint) -> FunctionTable:
    if len(y) != n:
        raise DomainError(f"character index of length {len(y)} in dimension {n}")
    return FunctionTable.from_function(n, lambda x: character_eval(y, x))


def indicator_table(n: int, y: CubePoint) -> FunctionTable:
    return FunctionTable.from_function(n, lambda x: int(x == y))


def _butterfly(values: typing.Sequence[Value], n: int) -> typing.List[Value]:
    out = list(values)
    h = 1
    for _ in range(n):
        for start in range(0, 1 << n, h << 1):
            for i in range(start, start + h):
                a, b = out[i], out[i + h]
                out[i], out[i + h] = a + b, a - b
        h <<= 1
    return out


def walsh_transform(f: FunctionTable) -> FunctionTable:
    """Fourier coefficients f^(y) = 2^-n sum_x f(x) chi_y(x)."""
    scale = Rational(1, 1 << f.n)
    return FunctionTable(f.n, tuple(v * scale for v in _butterfly(f.values, f.n)))


def inverse_walsh_transform(fhat: FunctionTable) -> FunctionTable:
    """f(x) = sum_y f^(y) chi_y(x)."""
    return FunctionTable(fhat.n, tuple(_butterfly(fhat.values, fhat.n)))


def walsh_transform_naive(f: FunctionTable) -> FunctionTable:
    n = f.n
    points = [decode_point(v, n) for v in range(1 << n)]
    scale = Rational(1, 1 << n)
    return FunctionTable(
        n,
        tuple(
            sum(
                (f.values[i] * character_eval(y, x) for i, x in enumerate(points)),
                Rational(0),
            )
            * scale
            for y in points
        ),
    )


def inner_product(f: FunctionTable, g: FunctionTable) -> Value:
    """(f, g) = 2^-n sum_x f(x) conj(g(x))."""
    if f.n != g.n:
        raise DomainError(f"tables of dimensions {f.n} and {g.n}")
    acc: Value = Rational(0)
    for a, b in zip(f.values, g.values):
        acc = acc + a * (b.conjugate() if isinstance(b, ComplexRational) else b)
    return acc * Rational(1, 1 << f.n)


def zonal_sum(n: int, k: int, t: int) -> int:
    """sum over |y| = k of chi_y(x) chi_y(x') for a pair at distance t.

    Brute force with x = 0^n and x' = 1^t 0^(n-t); equals K^n_k(t).
    """
    if n < 1 or not 0 <= k <= n or not 0 <= t <= n:
        raise DomainError(f"need 0 <= k, t <= n, got n={n} k={k} t={t}")
    x = (0,) * n
    xx = (1,) * t + (0,) * (n - t)
    total = 0
    for support in itertools.combinations(range(n), k):
        y = tuple(int(i in support) for i in range(n))
        total += character_eval(y, x) * character_eval(y, xx)
    return total


def _check_delsarte_args(n: int, d: int) -> None:
    if n < 1:
        raise DomainError(f"cube dimension must be positive, got {n}")
    if not 1 <= d <= n + 1:
        raise DomainError(f"minimal distance must lie in [1, {n + 1}], got {d}")


def delsarte_lp_problem(n: int, d: int) -> LpProblem:
    """The f-form Delsarte program (the constant 1 is left out of the costs).

    minimize sum_k binomial(n, k) f_k
    subject to sum_k f_k K^n_k(t) <= -1 for t = d..n, f >= 0.
    """
    _check_delsarte_args(n, d)
    fam = krawtchouk_family(n)
    return LpProblem(
        sense=Sense.MINIMIZE,
        costs=[Rational(math.comb(n, k)) for k in range(n + 1)],
        rows=[
            Row(
                coefficients=[Rational(fam.values[k][t]) for k in range(n + 1)],
                relation=Relation.LE,
                rhs=Rational(-1),
            )
            for t in range(d, n + 1)
        ],
    )


def delsarte_distance_problem(n: int, d: int) -> LpProblem:
    """Dual of :func:`delsarte_lp_problem` over distance distributions.

    maximize sum_t y_t subject to -sum_t y_t K^n_k(t) <= binomial(n, k),
    y_t >= 0 for t = d..n. Every rhs is nonnegative, so the simplex starts
    from the slack basis without a phase 1.
    """
    _check_delsarte_args(n, d)
    if d > n:
        raise DomainError("no distances at or above d: the program has no variables")
    fam = krawtchouk_family(n)
    ts = range(d, n + 1)
    return LpProblem(
        sense=Sense.MAXIMIZE,
        costs=[Rational(1)] * len(ts),
        rows=[
            Row(
                coefficients=[Rational(-fam.values[k][t]) for t in ts],
                relation=Relation.LE,
                rhs=Rational(math.comb(n, k)),
            )
            for k in range(n + 1)
        ],
    )


@dataclasses.dataclass(frozen=True)
class DelsarteResult:
    n: int
    d: int
    bound: Scalar
    # f_0..f_n proving the bound
    coefficients: typing.Tuple[Scalar, ...]
    # optimal y_d..y_n: an inner distance distribution
    distribution: typing.Tuple[Scalar, ...]


def delsarte_solve(n: int, d: int, mode: Mode = Mode.EXACT) -> DelsarteResult:
    _check_delsarte_args(n, d)
    options = SolverOptions(mode=mode)
    one: Scalar = Rational(1) if mode == Mode.EXACT else 1.0
    if d > n:
        solution = simplex_solve(delsarte_lp_problem(n, d), options)
        _expect_optimal(solution, n, d)
        assert solution.values is not None and solution.objective is not None
        return DelsarteResult(
            n=n,
            d=d,
            bound=one + solution.objective,
            coefficients=tuple(solution.values),
            distribution=(),
        )
    solution = simplex_solve(delsarte_distance_problem(n, d), options)
    _expect_optimal(solution, n, d)
    assert (
        solution.values is not None
        and solution.objective is not None
        and solution.duals is not None
    )
    return DelsarteResult(
        n=n,
        d=d,
        bound=one + solution.objective,
        coefficients=tuple(solution.duals),
        distribution=tuple(solution.values),
    )


def _expect_optimal(solution: LpSolution, n: int, d: int) -> None:
    # f_0 = 0, f_k = 1 (k >= 1) is always feasible, so the optimum exists
    if solution.status != Status.OPTIMAL:
        raise AssertionError(f"Delsarte program ({n}, {d}) ended {solution.status}")


def delsarte_lp_bound(n: int, d: int, mode: Mode = Mode.EXACT) -> Scalar:
    return delsarte_solve(n, d, mode).bound


def delsarte_certificate(n: int, d: int) -> typing.Tuple[Rational, ...]:
    return typing.cast(typing.Tuple[Rational, ...], delsarte_solve(n, d).coefficients)
