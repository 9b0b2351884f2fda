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

"""Exact rational arithmetic.

Every scalar in the exact code paths is a :class:`fractions.Fraction`, which
already keeps itself in lowest terms with a positive denominator. Polynomial
and matrix work is delegated to sympy over ``QQ``; this module converts at
the boundary and adds the Sturm-sequence sign analysis the certificates need.
"""

import dataclasses
import fractions
import functools
import math
import numbers
import operator
import typing

import sympy
from sympy.polys.matrices import DomainMatrix

from .exceptions import DomainError, ShapeMismatch, SingularMatrix

Rational = fractions.Fraction

RationalLike = typing.Union[int, fractions.Fraction]

Matrix = typing.Sequence[typing.Sequence[RationalLike]]

T = sympy.Symbol("t")


def as_rational(v: typing.Any) -> Rational:
    if isinstance(v, fractions.Fraction):
        return v
    if isinstance(v, numbers.Integral):
        return Rational(int(v))
    raise TypeError(f"expected an exact rational, got {v!r}")


def is_reduced(q: Rational) -> bool:
    return q.denominator > 0 and math.gcd(q.numerator, q.denominator) == 1


def to_sympy(q: RationalLike) -> sympy.Rational:
    q = as_rational(q)
    return sympy.Rational(q.numerator, q.denominator)


def from_sympy(c: typing.Any) -> Rational:
    c = sympy.sympify(c)
    if not c.is_Rational:
        raise DomainError(f"not an exact rational: {c}")
    return Rational(int(c.p), int(c.q))


def format_rational(q: RationalLike) -> str:
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(v: str) -> Rational:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal such as ``"0.5"``."""
    try:
        return Rational(v.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not an exact rational: {v!r}")


@dataclasses.dataclass(frozen=True)
class ComplexRational:
    re: Rational = Rational(0)
    im: Rational = Rational(0)

    def __add__(self, that: typing.Any) -> "ComplexRational":
        that = to_complex_rational(that)
        return ComplexRational(self.re + that.re, self.im + that.im)

    __radd__ = __add__

    def __sub__(self, that: typing.Any) -> "ComplexRational":
        that = to_complex_rational(that)
        return ComplexRational(self.re - that.re, self.im - that.im)

    def __rsub__(self, that: typing.Any) -> "ComplexRational":
        return to_complex_rational(that) - self

    def __neg__(self) -> "ComplexRational":
        return ComplexRational(-self.re, -self.im)

    def __mul__(self, that: typing.Any) -> "ComplexRational":
        that = to_complex_rational(that)
        return ComplexRational(
            self.re * that.re - self.im * that.im,
            self.re * that.im + self.im * that.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __eq__(self, that: typing.Any) -> bool:
        if isinstance(that, (fractions.Fraction, numbers.Integral)):
            return self.im == 0 and self.re == that
        if isinstance(that, ComplexRational):
            return self.re == that.re and self.im == that.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))


def to_complex_rational(v: typing.Any) -> ComplexRational:
    if isinstance(v, ComplexRational):
        return v
    return ComplexRational(as_rational(v), Rational(0))



def _normalize(coefficients: typing.Iterable[RationalLike]) -> typing.Tuple[Rational, ...]:
    cs = [as_rational(c) for c in coefficients]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _to_poly(coefficients: typing.Sequence[Rational]) -> sympy.Poly:
    if not coefficients:
        return sympy.Poly(0, T, domain=sympy.QQ)
    return sympy.Poly.from_list(
        [to_sympy(c) for c in reversed(coefficients)], T, domain=sympy.QQ
    )


class UniPoly:
    """Univariate polynomial over the rationals.

    ``coefficients[i]`` is the coefficient of ``t**i``; the tuple never ends
    in a zero, so the zero polynomial has no coefficients at all. ``poly``
    is the same polynomial as a :class:`sympy.Poly` over ``QQ``.
    """

    __slots__ = ("coefficients", "poly")

    coefficients: typing.Tuple[Rational, ...]
    poly: sympy.Poly

    def __init__(self, coefficients: typing.Iterable[RationalLike] = ()) -> None:
        cs = _normalize(coefficients)
        object.__setattr__(self, "coefficients", cs)
        object.__setattr__(self, "poly", _to_poly(cs))

    def __setattr__(self, name: str, value: typing.Any) -> None:
        raise AttributeError("UniPoly is immutable")

    def __reduce__(self) -> typing.Tuple[typing.Any, ...]:
        return (UniPoly, (self.coefficients,))

    @classmethod
    def from_poly(cls, poly: sympy.Poly) -> "UniPoly":
        p = cls.__new__(cls)
        poly = poly.set_domain(sympy.QQ)
        object.__setattr__(
            p,
            "coefficients",
            _normalize(from_sympy(c) for c in reversed(poly.all_coeffs())),
        )
        object.__setattr__(p, "poly", poly)
        return p

    @classmethod
    def constant(cls, c: RationalLike) -> "UniPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: RationalLike = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @classmethod
    def identity(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: typing.Iterable[RationalLike], lead: RationalLike = 1) -> "UniPoly":
        """lead * prod (t - r); repeated roots give repeated factors."""
        factors = [sympy.Poly(T - to_sympy(r), T, domain=sympy.QQ) for r in roots]
        return cls.from_poly(
            functools.reduce(operator.mul, factors, sympy.Poly(to_sympy(lead), T, domain=sympy.QQ))
        )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Rational:
        return self.coefficients[-1] if self.coefficients else Rational(0)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, t: RationalLike) -> Rational:
        return poly_eval(self, as_rational(t))

    def __add__(self, that: typing.Any) -> "UniPoly":
        that = _coerce(that)
        if that is None:
            return NotImplemented
        return UniPoly.from_poly(self.poly + that.poly)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly.from_poly(-self.poly)

    def __sub__(self, that: typing.Any) -> "UniPoly":
        that = _coerce(that)
        if that is None:
            return NotImplemented
        return UniPoly.from_poly(self.poly - that.poly)

    def __rsub__(self, that: typing.Any) -> "UniPoly":
        that = _coerce(that)
        if that is None:
            return NotImplemented
        return UniPoly.from_poly(that.poly - self.poly)

    def __mul__(self, that: typing.Any) -> "UniPoly":
        if isinstance(that, (fractions.Fraction, numbers.Integral)):
            return UniPoly.from_poly(self.poly.mul_ground(to_sympy(that)))
        if not isinstance(that, UniPoly):
            return NotImplemented
        return UniPoly.from_poly(self.poly * that.poly)

    __rmul__ = __mul__

    def __truediv__(self, that: RationalLike) -> "UniPoly":
        that = as_rational(that)
        if that == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return UniPoly.from_poly(self.poly.mul_ground(to_sympy(1 / that)))

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise DomainError("negative polynomial power")
        return UniPoly.from_poly(self.poly**e)

    def __eq__(self, that: typing.Any) -> bool:
        if isinstance(that, (fractions.Fraction, numbers.Integral)):
            that = UniPoly.constant(that)
        if not isinstance(that, UniPoly):
            return NotImplemented
        return self.coefficients == that.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"UniPoly([{', '.join(format_rational(c) for c in self.coefficients)}])"

    def derivative(self) -> "UniPoly":
        return poly_derivative(self)


def _coerce(v: typing.Any) -> typing.Optional[UniPoly]:
    if isinstance(v, UniPoly):
        return v
    if isinstance(v, (fractions.Fraction, numbers.Integral)):
        return UniPoly.constant(v)
    return None


def poly_eval(p: UniPoly, t: RationalLike) -> Rational:
    acc = Rational(0)
    for c in reversed(p.coefficients):
        acc = acc * t + c
    return acc


def poly_derivative(p: UniPoly) -> UniPoly:
    return UniPoly.from_poly(p.poly.diff(T))


def poly_divmod(a: UniPoly, b: UniPoly) -> typing.Tuple[UniPoly, UniPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q, r = a.poly.div(b.poly)
    return UniPoly.from_poly(q), UniPoly.from_poly(r)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; the gcd of two zero polynomials is zero."""
    if a.is_zero() and b.is_zero():
        return UniPoly()
    return UniPoly.from_poly(a.poly.gcd(b.poly).monic())


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree < 1:
        return p
    return UniPoly.from_poly(p.poly.sqf_part().monic())


def sturm_sequence(p: UniPoly) -> typing.List[UniPoly]:
    """Sturm sequence of a square-free polynomial."""
    if p.degree < 1:
        return [p] if not p.is_zero() else []
    return [UniPoly.from_poly(s) for s in p.poly.sturm() if not s.is_zero]


def sign_variations(seq: typing.Sequence[UniPoly], t: Rational) -> int:
    count = 0
    prev = 0
    for s in seq:
        v = poly_eval(s, t)
        if v == 0:
            continue
        sign = 1 if v > 0 else -1
        if prev and sign != prev:
            count += 1
        prev = sign
    return count


def count_roots(p: UniPoly, a: RationalLike, b: RationalLike) -> int:
    """Number of distinct real roots of p in the open interval (a, b)."""
    a, b = as_rational(a), as_rational(b)
    if p.is_zero():
        raise DomainError("the zero polynomial has infinitely many roots")
    if a >= b or p.degree < 1:
        return 0
    # sympy counts the closed interval
    n = int(p.poly.count_roots(to_sympy(a), to_sympy(b)))
    return n - (poly_eval(p, a) == 0) - (poly_eval(p, b) == 0)


def _count_open(seq: typing.Sequence[UniPoly], q: UniPoly, a: Rational, b: Rational) -> int:
    # V(a) - V(b) counts roots in (a, b] for a square-free q
    n = sign_variations(seq, a) - sign_variations(seq, b)
    if poly_eval(q, b) == 0:
        n -= 1
    return n


def sturm_nonpositive(p: UniPoly, a: RationalLike, b: RationalLike) -> bool:
    """Decide exactly whether p(t) <= 0 for every t in [a, b]."""
    a, b = as_rational(a), as_rational(b)
    if a > b:
        raise DomainError(f"empty interval [{a}, {b}]")
    if p.is_zero():
        return True
    pa, pb = poly_eval(p, a), poly_eval(p, b)
    if pa > 0 or pb > 0:
        return False
    if a == b:
        return True
    q = squarefree_part(p)
    seq = sturm_sequence(q)
    stack = [(a, b, pa, pb)]
    while stack:
        lo, hi, plo, phi = stack.pop()
        n = _count_open(seq, q, lo, hi)
        if n == 0:
            # no roots inside: one interior sample fixes the sign
            if poly_eval(p, (lo + hi) / 2) > 0:
                return False
            continue
        if n == 1 and plo != 0 and phi != 0:
            continue
        mid = (lo + hi) / 2
        pm = poly_eval(p, mid)
        if pm > 0:
            return False
        stack.append((lo, mid, plo, pm))
        stack.append((mid, hi, pm, phi))
    return True


Interval = typing.Tuple[Rational, Rational]


def _bracket(q: UniPoly, lo: Rational, hi: Rational, width: Rational) -> Interval:
    # q square-free with exactly one simple root strictly inside (lo, hi)
    qlo = poly_eval(q, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        qm = poly_eval(q, mid)
        if qm == 0:
            return mid, mid
        if (qm > 0) == (qlo > 0):
            lo, qlo = mid, qm
        else:
            hi = mid
    return lo, hi


def isolate_real_roots(
    p: UniPoly,
    a: RationalLike,
    b: RationalLike,
    width: RationalLike = Rational(1, 2**32),
) -> typing.List[Interval]:
    """Isolate the distinct real roots of p in [a, b].

    Returns sorted, pairwise disjoint intervals ``(lo, hi)``, each holding
    exactly one root, with ``hi - lo <= width``. A root found exactly is
    returned as the degenerate interval ``(r, r)``.
    """
    a, b, width = as_rational(a), as_rational(b), as_rational(width)
    if p.is_zero():
        raise DomainError("the zero polynomial has infinitely many roots")
    if a > b:
        raise DomainError(f"empty interval [{a}, {b}]")
    q = squarefree_part(p)
    if q.degree < 1:
        return []
    found: typing.List[Interval] = []
    for (slo, shi), _ in q.poly.intervals():
        lo, hi = from_sympy(slo), from_sympy(shi)
        if poly_eval(q, lo) == 0:
            lo = hi = lo
        elif poly_eval(q, hi) == 0:
            lo = hi
        if lo == hi:
            if a <= lo <= b:
                found.append((lo, lo))
            continue
        if hi <= a or lo >= b:
            continue
        lo, hi = max(lo, a), min(hi, b)
        qlo, qhi = poly_eval(q, lo), poly_eval(q, hi)
        # clipped at a or b: keep it only if the sign still changes
        if qlo == 0 or qhi == 0:
            r = lo if qlo == 0 else hi
            found.append((r, r))
            continue
        if (qlo > 0) == (qhi > 0):
            continue
        found.append(_bracket(q, lo, hi, width))
    found.sort()
    return found


def simplest_rational_between(lo: RationalLike, hi: RationalLike) -> Rational:
    """The rational of smallest denominator in the closed interval [lo, hi]."""
    lo, hi = as_rational(lo), as_rational(hi)
    if lo > hi:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    if lo <= 0 <= hi:
        return Rational(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    c = math.ceil(lo)
    if c <= hi:
        return Rational(c)
    fl = math.floor(lo)
    return fl + 1 / simplest_rational_between(1 / (hi - fl), 1 / (lo - fl))


def _domain_matrix(rows: typing.Sequence[typing.Sequence[RationalLike]], ncols: int) -> DomainMatrix:
    elements = [
        [sympy.QQ(as_rational(v).numerator, as_rational(v).denominator) for v in row]
        for row in rows
    ]
    return DomainMatrix(elements, (len(elements), ncols), sympy.QQ)


def _from_domain_matrix(M: DomainMatrix) -> typing.List[typing.List[Rational]]:
    return [[from_sympy(v) for v in row] for row in M.to_Matrix().tolist()]


def row_echelon(
    A: Matrix,
) -> typing.Tuple[typing.List[typing.List[Rational]], typing.List[int]]:
    """Reduced row echelon form and the pivot columns."""
    if not A:
        return [], []
    ncols = len(A[0])
    if any(len(row) != ncols for row in A):
        raise ShapeMismatch("rows of different lengths")
    if ncols == 0:
        return [[] for _ in A], []
    R, pivots = _domain_matrix(A, ncols).rref()
    return _from_domain_matrix(R), list(pivots)


def solve_linear(A: Matrix, b: typing.Sequence[RationalLike]) -> typing.List[Rational]:
    """Solve A x = b exactly by reducing the augmented matrix [A | b]."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ShapeMismatch(f"expected a square system of size {n}")
    if n == 0:
        return []
    R, pivots = row_echelon([list(row) + [bi] for row, bi in zip(A, b)])
    if pivots != list(range(n)):
        raise SingularMatrix(f"matrix is singular (rank {sum(1 for c in pivots if c < n)})")
    return [R[i][n] for i in range(n)]


def mat_vec(A: Matrix, x: typing.Sequence[RationalLike]) -> typing.List[Rational]:
    return [sum((as_rational(a) * xi for a, xi in zip(row, x)), Rational(0)) for row in A]


def matrix_rank(A: Matrix) -> int:
    return len(row_echelon(A)[1])


def nullspace(A: Matrix, ncols: typing.Optional[int] = None) -> typing.List[typing.List[Rational]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    if ncols is None:
        if not A:
            raise ShapeMismatch("column count of an empty matrix is unknown")
        ncols = len(A[0])
    R, pivots = row_echelon(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Rational(0)] * ncols
        v[f] = Rational(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis
