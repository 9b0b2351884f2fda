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

"""Multivariate polynomials, harmonic decomposition and zonal kernels.

Inner products of functions on the sphere use the normalized (probability)
surface measure, so every value that appears here is rational.
"""

import collections.abc
import functools
import math
import typing

import sympy

from ..exact import (
    Rational,
    RationalLike,
    UniPoly,
    as_rational,
    from_sympy,
    matrix_rank,
    nullspace,
    solve_linear,
    to_sympy,
)
from ..exceptions import DegreeMismatch, DomainError, NotHomogeneous, ReductionFailure
from ..orthopoly import jacobi

Exponent = typing.Tuple[int, ...]


@functools.lru_cache(maxsize=None)
def variables(n: int) -> typing.Tuple[sympy.Symbol, ...]:
    return tuple(sympy.symbols(f"x0:{n}"))


class MultiPoly:
    """Polynomial in ``n`` variables with rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients; ``poly`` holds
    the same polynomial as a :class:`sympy.Poly` over ``QQ`` in
    :func:`variables`.
    """

    __slots__ = ("n", "terms", "poly")

    n: int
    terms: typing.Mapping[Exponent, Rational]
    poly: sympy.Poly

    def __init__(
        self, n: int, terms: typing.Union[typing.Mapping[Exponent, RationalLike], typing.Iterable[typing.Tuple[Exponent, RationalLike]]] = ()
    ) -> None:
        if n < 1:
            raise DomainError(f"need at least one variable, got {n}")
        acc: typing.Dict[Exponent, Rational] = {}
        items = terms.items() if isinstance(terms, collections.abc.Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != n or any(a < 0 for a in e):
                raise DomainError(f"bad exponent {e} for {n} variables")
            acc[e] = acc.get(e, Rational(0)) + as_rational(c)
        acc = {e: c for e, c in acc.items() if c != 0}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", acc)
        object.__setattr__(self, "poly", _to_poly(n, acc))

    def __setattr__(self, name: str, value: typing.Any) -> None:
        raise AttributeError("MultiPoly is immutable")

    def __reduce__(self) -> typing.Tuple[typing.Any, ...]:
        return (MultiPoly, (self.n, dict(self.terms)))

    @classmethod
    def from_poly(cls, n: int, poly: sympy.Poly) -> "MultiPoly":
        p = cls.__new__(cls)
        poly = poly.set_domain(sympy.QQ)
        terms = {tuple(e): from_sympy(c) for e, c in poly.as_dict().items()}
        object.__setattr__(p, "n", n)
        object.__setattr__(p, "terms", {e: c for e, c in terms.items() if c != 0})
        object.__setattr__(p, "poly", poly)
        return p

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: RationalLike) -> "MultiPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultiPoly":
        return cls(n, {tuple(int(j == i) for j in range(n)): 1})

    @classmethod
    def monomial(cls, exponent: typing.Sequence[int], c: RationalLike = 1) -> "MultiPoly":
        return cls(len(exponent), {tuple(exponent): c})

    @classmethod
    def omega(cls, n: int) -> "MultiPoly":
        """x_1^2 + ... + x_n^2."""
        return cls(n, {tuple(2 * int(j == i) for j in range(n)): 1 for i in range(n)})

    @classmethod
    def from_vector(
        cls, n: int, d: int, vector: typing.Sequence[RationalLike]
    ) -> "MultiPoly":
        return cls(n, zip(monomials(n, d), vector))

    def to_vector(self, d: int) -> typing.List[Rational]:
        return [self.terms.get(e, Rational(0)) for e in monomials(self.n, d)]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def __add__(self, that: "MultiPoly") -> "MultiPoly":
        self._check_same_space(that)
        return MultiPoly.from_poly(self.n, self.poly + that.poly)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly.from_poly(self.n, -self.poly)

    def __sub__(self, that: "MultiPoly") -> "MultiPoly":
        self._check_same_space(that)
        return MultiPoly.from_poly(self.n, self.poly - that.poly)

    def __mul__(self, that: typing.Any) -> "MultiPoly":
        if isinstance(that, MultiPoly):
            self._check_same_space(that)
            return MultiPoly.from_poly(self.n, self.poly * that.poly)
        return MultiPoly.from_poly(self.n, self.poly.mul_ground(to_sympy(as_rational(that))))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise DomainError("negative polynomial power")
        return MultiPoly.from_poly(self.n, self.poly**k)

    def __eq__(self, that: typing.Any) -> bool:
        if not isinstance(that, MultiPoly):
            return NotImplemented
        return self.n == that.n and self.terms == that.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {dict(sorted(self.terms.items()))!r})"

    def __call__(self, point: typing.Sequence[RationalLike]) -> Rational:
        if len(point) != self.n:
            raise DomainError(f"point of length {len(point)} for {self.n} variables")
        xs = [as_rational(v) for v in point]
        return sum(
            (c * math.prod(x**a for x, a in zip(xs, e)) for e, c in self.terms.items()),
            Rational(0),
        )

    def _check_same_space(self, that: "MultiPoly") -> None:
        if self.n != that.n:
            raise DomainError(f"polynomials in {self.n} and {that.n} variables")


def _to_poly(n: int, terms: typing.Mapping[Exponent, Rational]) -> sympy.Poly:
    if not terms:
        return sympy.Poly(0, *variables(n), domain=sympy.QQ)
    return sympy.Poly.from_dict(
        {e: to_sympy(c) for e, c in terms.items()}, *variables(n), domain=sympy.QQ
    )


@functools.lru_cache(maxsize=None)
def monomials(n: int, d: int) -> typing.Tuple[Exponent, ...]:
    """Exponents of total degree d in n variables, lexicographically descending."""
    if d < 0:
        return ()
    if n == 1:
        return ((d,),)
    return tuple(
        (a,) + rest for a in range(d, -1, -1) for rest in monomials(n - 1, d - a)
    )


def pol_dim(n: int, d: int) -> int:
    return math.comb(n + d - 1, n - 1) if d >= 0 else 0


def _comb(top: int, k: int) -> int:
    return math.comb(top, k) if top >= 0 else 0


def laplacian(p: MultiPoly) -> MultiPoly:
    acc = sympy.Poly(0, *variables(p.n), domain=sympy.QQ)
    for i in range(p.n):
        acc = acc + p.poly.diff((i, 2))
    return MultiPoly.from_poly(p.n, acc)


def laplacian_matrix(n: int, d: int) -> typing.List[typing.List[Rational]]:
    """Matrix of the Laplacian from Pol_d to Pol_(d-2) in monomial bases."""
    cols = [laplacian(MultiPoly.monomial(e)).to_vector(d - 2) for e in monomials(n, d)]
    return [list(row) for row in zip(*cols)]


def harm_dim(n: int, k: int) -> int:
    if n < 2 or k < 0:
        raise DomainError(f"need n >= 2 and k >= 0, got n={n} k={k}")
    return math.comb(n + k - 1, n - 1) - _comb(n + k - 3, n - 1)


def harmonic_kernel_dimension(n: int, k: int) -> int:
    """dim ker(Laplacian on Pol_k), computed by exact elimination."""
    if k < 2:
        return pol_dim(n, k)
    return pol_dim(n, k) - matrix_rank(laplacian_matrix(n, k))


def harmonic_basis(n: int, k: int) -> typing.List[MultiPoly]:
    if k < 2:
        return [MultiPoly.monomial(e) for e in monomials(n, k)]
    return [
        MultiPoly.from_vector(n, k, v)
        for v in nullspace(laplacian_matrix(n, k), pol_dim(n, k))
    ]


def homogeneous_degree(p: MultiPoly) -> int:
    if not p.is_homogeneous():
        raise NotHomogeneous(f"terms of degrees {sorted({sum(e) for e in p.terms})}")
    return p.degree


def harmonic_decompose(
    p: MultiPoly, degree: typing.Optional[int] = None
) -> typing.List[MultiPoly]:
    """Split p = h_d + w h_(d-2) + w^2 h_(d-4) + ... with every h harmonic.

    ``w`` is x_1^2 + ... + x_n^2. Returns ``[h_d, h_(d-2), ...]``. The
    degree of the zero polynomial must be given explicitly.
    """
    d = homogeneous_degree(p) if not p.is_zero() else degree
    if d is None:
        return [p]
    if degree is not None and degree != d:
        raise NotHomogeneous(f"polynomial of degree {d}, expected {degree}")
    if d < 2:
        return [p]
    n = p.n
    omega = MultiPoly.omega(n)
    # q in Pol_(d-2) with Laplacian(w q) = Laplacian(p); the map is invertible
    basis = monomials(n, d - 2)
    cols = [laplacian(omega * MultiPoly.monomial(e)).to_vector(d - 2) for e in basis]
    A = [list(row) for row in zip(*cols)]
    q = MultiPoly.from_vector(n, d - 2, solve_linear(A, laplacian(p).to_vector(d - 2)))
    return [p - omega * q] + harmonic_decompose(q, d - 2)


def reassemble(components: typing.Sequence[MultiPoly]) -> MultiPoly:
    if not components:
        raise DomainError("nothing to reassemble")
    n = components[0].n
    omega = MultiPoly.omega(n)
    acc = MultiPoly.zero(n)
    for j, h in enumerate(components):
        acc = acc + omega**j * h
    return acc


@functools.lru_cache(maxsize=65536)
def sphere_monomial_average(exponents: typing.Tuple[int, ...]) -> Rational:
    """Average of x^a over the unit sphere in R^n, n = len(exponents).

    Zero if some exponent is odd; otherwise
    prod_i (a_i - 1)!! / (n (n + 2) ... (n + |a| - 2)).
    """
    exponents = tuple(exponents)
    n = len(exponents)
    if n < 1:
        raise DomainError("need at least one coordinate")
    if any(a % 2 for a in exponents):
        return Rational(0)
    num = math.prod(math.prod(range(a - 1, 0, -2)) for a in exponents)
    half = sum(exponents) // 2
    den = math.prod(n + 2 * j for j in range(half))
    return Rational(num, den)


def _parity(e: Exponent) -> Exponent:
    return tuple(a & 1 for a in e)


def sphere_inner_product(f: MultiPoly, g: MultiPoly) -> Rational:
    """Average of f g over the unit sphere (real coefficients)."""
    f._check_same_space(g)
    by_parity: typing.Dict[Exponent, typing.List[typing.Tuple[Exponent, Rational]]] = {}
    for e, c in g.terms.items():
        by_parity.setdefault(_parity(e), []).append((e, c))
    acc = Rational(0)
    for e, c in f.terms.items():
        for h, d in by_parity.get(_parity(e), ()):
            acc += c * d * sphere_monomial_average(tuple(a + b for a, b in zip(e, h)))
    return acc


def apolar_inner_product(
    f: MultiPoly, g: MultiPoly, degree: typing.Optional[int] = None
) -> Rational:
    """<f, g> = (1/d!) f(nabla) g on Pol_d; monomials are orthogonal."""
    f._check_same_space(g)
    if degree is None:
        degree = max(f.degree, g.degree, 0)
    acc = Rational(0)
    for e, c in f.terms.items():
        h = g.terms.get(e)
        if h is not None:
            acc += c * h * math.prod(math.factorial(a) for a in e)
    return acc / math.factorial(degree)


def adjoint_check(f: MultiPoly, g: MultiPoly) -> typing.Tuple[Rational, Rational]:
    """Both sides of <w f, g> = <f, Laplacian(g)> for f in Pol_(d-2), g in Pol_d.

    Both sides carry the 1/d! factor of Pol_d, i.e. they are
    (1/d!) (w f)(nabla) g and (1/d!) f(nabla) Laplacian(g).
    """
    f._check_same_space(g)
    if f.is_zero() or g.is_zero():
        return Rational(0), Rational(0)
    df, dg = homogeneous_degree(f), homogeneous_degree(g)
    if dg != df + 2:
        raise DegreeMismatch(f"need deg g = deg f + 2, got {df} and {dg}")
    left = apolar_inner_product(MultiPoly.omega(f.n) * f, g, dg)
    right = apolar_inner_product(f, laplacian(g), df) * math.factorial(df) / math.factorial(dg)
    return left, right


def orthogonal_harmonic_basis(
    n: int, k: int
) -> typing.List[typing.Tuple[MultiPoly, Rational]]:
    """Orthogonal (not normalized) basis of Harm_k with squared norms."""
    out: typing.List[typing.Tuple[MultiPoly, Rational]] = []
    for v in harmonic_basis(n, k):
        for b, nb in out:
            v = v - b * (sphere_inner_product(v, b) / nb)
        out.append((v, sphere_inner_product(v, v)))
    return out


def zonal_kernel(n: int, k: int) -> UniPoly:
    """Q with sum_i g_i(x) g_i(y) / (g_i, g_i) = Q(x . y) on the sphere.

    The sum runs over an orthogonal basis of Harm_k. Q is reduced by
    putting x = e_1, y = (t, s, 0, ..., 0) and s^2 = 1 - t^2. Desk-scale
    for n <= 6, k <= 6.
    """
    if n < 2 or k < 0:
        raise DomainError(f"need n >= 2 and k >= 0, got n={n} k={k}")
    pole = (k,) + (0,) * (n - 1)
    # bivariate polynomial in (t, s)
    kernel: typing.Dict[typing.Tuple[int, int], Rational] = {}
    for g, norm in orthogonal_harmonic_basis(n, k):
        at_pole = g.terms.get(pole)
        if not at_pole:
            continue
        for e, c in g.terms.items():
            if any(e[2:]):
                continue
            key = (e[0], e[1])
            kernel[key] = kernel.get(key, Rational(0)) + at_pole * c / norm
    q = UniPoly()
    one_minus_t2 = UniPoly((1, 0, -1))
    for (i, j), c in kernel.items():
        if c == 0:
            continue
        if j % 2:
            raise ReductionFailure(f"odd power s^{j} survives in the zonal kernel")
        q = q + UniPoly.monomial(i, c) * one_minus_t2 ** (j // 2)
    p = jacobi(n, k)
    scale = q(1)
    if scale <= 0 or q != p * scale:
        raise ReductionFailure(f"zonal kernel of degree {k} is not a positive multiple of P_{k}")
    return q


def inner_product_kernel_apply(h: MultiPoly) -> MultiPoly:
    """T h(x) = average over y of (x . y) h(y) = sum_i x_i avg(y_i h(y))."""
    n = h.n
    return MultiPoly(
        n,
        (
            (tuple(int(j == i) for j in range(n)), sphere_inner_product(MultiPoly.variable(n, i), h))
            for i in range(n)
        ),
    )


def inner_product_kernel_eigenvalue(n: int) -> Rational:
    """Eigenvalue of T on H_1: T x_1 = x_1 / n."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return _eigenvalue_on(MultiPoly.variable(n, 0))


def _eigenvalue_on(h: MultiPoly) -> Rational:
    image = inner_product_kernel_apply(h)
    if image.is_zero():
        return Rational(0)
    e, c = next(iter(h.terms.items()))
    ratio = image.terms.get(e, Rational(0)) / c
    if image != h * ratio:
        raise ReductionFailure("harmonic polynomial is not an eigenfunction of x . y")
    return ratio


def inner_product_kernel_spectrum(n: int, max_degree: int = 3) -> typing.List[Rational]:
    """Eigenvalue of the kernel x . y on H_k for k = 0..max_degree."""
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    return [_eigenvalue_on(harmonic_basis(n, k)[0]) for k in range(max_degree + 1)]
