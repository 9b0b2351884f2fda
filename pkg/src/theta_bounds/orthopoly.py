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

"""Krawtchouk and normalized Jacobi polynomials.

Krawtchouk polynomials K^n_k are the eigenvalue functions of the Hamming
scheme; Jacobi polynomials P_k^{(a,a)} with a = (n - 3)/2, normalized to 1 at
t = 1, are the zonal spherical functions of the sphere in R^n.
"""

import functools
import math
import threading
import typing

from .exact import Rational, UniPoly, poly_eval
from .exceptions import DomainError


def binomial_poly(top: UniPoly, k: int) -> UniPoly:
    """binomial(top, k) as a polynomial: top (top - 1) ... (top - k + 1) / k!."""
    p = UniPoly.constant(1)
    for i in range(k):
        p = p * (top - i)
    return p / math.factorial(k)


def _check_krawtchouk_args(n: int, k: int) -> None:
    if n < 1:
        raise DomainError(f"cube dimension must be positive, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"Krawtchouk degree must lie in [0, {n}], got {k}")


def krawtchouk(n: int, k: int) -> UniPoly:
    """K^n_k(t) = sum_i (-1)^i binomial(t, i) binomial(n - t, k - i)."""
    _check_krawtchouk_args(n, k)
    t = UniPoly.identity()
    rest = n - t
    p = UniPoly()
    for i in range(k + 1):
        term = binomial_poly(t, i) * binomial_poly(rest, k - i)
        p = p + (term if i % 2 == 0 else -term)
    return p


class KrawtchoukFamily:
    """All K^n_k for one n.

    The integer value table ``K^n_k(t)`` for t = 0..n is computed once at
    construction through the three-term recurrence; polynomials are built
    on demand and memoized.
    """

    n: int
    values: typing.Tuple[typing.Tuple[int, ...], ...]
    _polynomials: typing.Dict[int, UniPoly]
    _lock: threading.Lock

    def __init__(self, n: int) -> None:
        _check_krawtchouk_args(n, 0)
        self.n = n
        rows: typing.List[typing.List[int]] = [[1] * (n + 1)]
        if n >= 1:
            rows.append([n - 2 * t for t in range(n + 1)])
        for k in range(1, n):
            # (k + 1) K_{k+1}(t) = (n - 2t) K_k(t) - (n - k + 1) K_{k-1}(t)
            rows.append(
                [
                    ((n - 2 * t) * rows[k][t] - (n - k + 1) * rows[k - 1][t]) // (k + 1)
                    for t in range(n + 1)
                ]
            )
        self.values = tuple(tuple(r) for r in rows)
        self._polynomials = {}
        self._lock = threading.Lock()

    def value(self, k: int, t: int) -> int:
        if not (0 <= k <= self.n and 0 <= t <= self.n):
            raise DomainError(f"K^{self.n}_{k}({t}) is out of range")
        return self.values[k][t]

    def polynomial(self, k: int) -> UniPoly:
        with self._lock:
            p = self._polynomials.get(k)
            if p is None:
                p = self._polynomials[k] = krawtchouk(self.n, k)
            return p


@functools.lru_cache(maxsize=256)
def krawtchouk_family(n: int) -> KrawtchoukFamily:
    return KrawtchoukFamily(n)


def krawtchouk_gram(n: int, k: int, kk: int) -> Rational:
    """sum_t binomial(n, t) K^n_k(t) K^n_kk(t); zero unless k == kk."""
    _check_krawtchouk_args(n, k)
    _check_krawtchouk_args(n, kk)
    fam = krawtchouk_family(n)
    return Rational(
        sum(math.comb(n, t) * fam.values[k][t] * fam.values[kk][t] for t in range(n + 1))
    )


def jacobi_alpha(n: int) -> Rational:
    return Rational(n - 3, 2)


def _check_jacobi_dimension(n: int) -> None:
    if n < 2:
        raise DomainError(f"ambient dimension must be at least 2, got {n}")


class JacobiFamily:
    """Normalized P_k^{(a,a)}, a = (n - 3)/2, generated by

        P_0 = 1, P_1 = t,
        (k + n - 2) P_{k+1} = (2k + n - 2) t P_k - k P_{k-1}.
    """

    n: int
    _polynomials: typing.List[UniPoly]
    _lock: threading.Lock

    def __init__(self, n: int) -> None:
        _check_jacobi_dimension(n)
        self.n = n
        self._polynomials = [UniPoly.constant(1), UniPoly.identity()]
        self._lock = threading.Lock()

    def polynomial(self, k: int) -> UniPoly:
        if k < 0:
            raise DomainError(f"degree must be nonnegative, got {k}")
        with self._lock:
            ps = self._polynomials
            t = UniPoly.identity()
            while len(ps) <= k:
                j = len(ps) - 1
                ps.append(
                    (t * ps[j] * (2 * j + self.n - 2) - ps[j - 1] * j)
                    / (j + self.n - 2)
                )
            return ps[k]

    def polynomials(self, max_degree: int) -> typing.List[UniPoly]:
        self.polynomial(max_degree)
        return list(self._polynomials[: max_degree + 1])

    def value(self, k: int, t: Rational) -> Rational:
        return poly_eval(self.polynomial(k), t)


@functools.lru_cache(maxsize=64)
def jacobi_family(n: int) -> JacobiFamily:
    return JacobiFamily(n)


def jacobi(n: int, k: int) -> UniPoly:
    return jacobi_family(n).polynomial(k)


def jacobi_coefficients(n: int, p: UniPoly) -> typing.List[Rational]:
    """c_0, ..., c_d with p = sum_k c_k P_k, d = deg p."""
    if p.is_zero():
        return [Rational(0)]
    polys = jacobi_family(n).polynomials(p.degree)
    out = [Rational(0)] * (p.degree + 1)
    rest = p
    for k in range(p.degree, -1, -1):
        if rest.degree < k:
            continue
        c = rest.leading / polys[k].leading
        out[k] = c
        rest = rest - polys[k] * c
    return out


def _integer_alpha(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise DomainError(
            f"exact Jacobi integrals need odd n >= 3 (integral weight exponent), got {n}"
        )
    return (n - 3) // 2


def jacobi_weight_moment(n: int, m: int) -> Rational:
    """Integral of t^m (1 - t^2)^a over [-1, 1] for integral a = (n - 3)/2."""
    a = _integer_alpha(n)
    if m % 2:
        return Rational(0)
    return sum(
        (Rational((-1) ** j * math.comb(a, j) * 2, m + 2 * j + 1) for j in range(a + 1)),
        Rational(0),
    )


def jacobi_inner(n: int, p: UniPoly, q: UniPoly) -> Rational:
    pq = p * q
    return sum(
        (c * jacobi_weight_moment(n, m) for m, c in enumerate(pq.coefficients)),
        Rational(0),
    )


def jacobi_gram(n: int, k: int, kk: int) -> Rational:
    _integer_alpha(n)
    return jacobi_inner(n, jacobi(n, k), jacobi(n, kk))


def jacobi_gram_schmidt(n: int, k: int) -> UniPoly:
    """P_k obtained by orthogonalizing 1, t, t^2, ... under (1 - t^2)^a dt.

    Independent of the recurrence in :class:`JacobiFamily`; only defined
    where the weight integrals are exact (odd n).
    """
    _integer_alpha(n)
    if k < 0:
        raise DomainError(f"degree must be nonnegative, got {k}")
    basis: typing.List[UniPoly] = []
    norms: typing.List[Rational] = []
    for d in range(k + 1):
        q = UniPoly.monomial(d)
        for b, nb in zip(basis, norms):
            q = q - b * (jacobi_inner(n, q, b) / nb)
        basis.append(q)
        norms.append(jacobi_inner(n, q, q))
    top = basis[k]
    return top / poly_eval(top, 1)
