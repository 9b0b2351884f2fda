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

"""Permutation groups, finite graphs and the orbitals of a group action."""

import collections
import dataclasses
import fractions
import itertools
import typing

import numpy

from ..exceptions import DomainError, InvalidPermutation, ShapeMismatch

Permutation = typing.Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class PermGroup:
    """Group generated by ``generators`` acting on {0, ..., degree - 1}.

    Each generator is its image array: ``g[i]`` is the image of i.
    """

    degree: int
    generators: typing.Tuple[Permutation, ...] = ()

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidPermutation(f"degree must be positive, got {self.degree}")
        gens = tuple(tuple(int(v) for v in g) for g in self.generators)
        for i, g in enumerate(gens):
            if len(g) != self.degree:
                raise InvalidPermutation(
                    f"generator {i} has {len(g)} images, expected {self.degree}"
                )
            if sorted(g) != list(range(self.degree)):
                raise InvalidPermutation(f"generator {i} is not a bijection: {g}")
        object.__setattr__(self, "generators", gens)

    def orbit(self, v: int) -> typing.FrozenSet[int]:
        seen = {v}
        queue = collections.deque([v])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)


def is_vertex_transitive(group: PermGroup) -> bool:
    return len(group.orbit(0)) == group.degree


Edge = typing.FrozenSet[int]


@dataclasses.dataclass(frozen=True)
class FiniteGraph:
    n: int
    edges: typing.FrozenSet[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"a graph needs at least one vertex, got {self.n}")
        edges = set()
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise DomainError(f"loop or malformed edge {pair}")
            if not all(0 <= v < self.n for v in pair):
                raise DomainError(f"edge {pair} leaves the vertex range [0, {self.n})")
            edges.add(frozenset(pair))
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_pairs(cls, n: int, pairs: typing.Iterable[typing.Tuple[int, int]]) -> "FiniteGraph":
        return cls(n, frozenset(frozenset(p) for p in pairs))

    def adjacent(self, x: int, y: int) -> bool:
        return frozenset((x, y)) in self.edges

    def neighbors(self) -> typing.List[typing.Set[int]]:
        out: typing.List[typing.Set[int]] = [set() for _ in range(self.n)]
        for e in self.edges:
            a, b = tuple(e)
            out[a].add(b)
            out[b].add(a)
        return out

    def is_automorphism(self, g: Permutation) -> bool:
        return all(frozenset(g[v] for v in e) in self.edges for e in self.edges)


@dataclasses.dataclass(frozen=True)
class Orbitals:
    """Orbits of the diagonal action (x, y) -> (gx, gy) on pairs.

    Classes are numbered in row-major order of their first pair, so the
    class of (0, 0) is 0.
    """

    n: int
    class_of: typing.Tuple[typing.Tuple[int, ...], ...]
    class_count: int
    # class index of the transposed pairs
    transpose: typing.Tuple[int, ...]
    sizes: typing.Tuple[int, ...]

    @property
    def symmetric(self) -> typing.Tuple[bool, ...]:
        return tuple(t == j for j, t in enumerate(self.transpose))

    def pairs(self, j: int) -> typing.Iterator[typing.Tuple[int, int]]:
        for x, row in enumerate(self.class_of):
            for y, c in enumerate(row):
                if c == j:
                    yield x, y

    def diagonal_classes(self) -> typing.FrozenSet[int]:
        return frozenset(self.class_of[x][x] for x in range(self.n))


def orbit_pairs(group: PermGroup) -> Orbitals:
    """Pair orbits by union-find closure under the generators."""
    n = group.degree
    parent = list(range(n * n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for g in group.generators:
        for x in range(n):
            gx = g[x] * n
            for y in range(n):
                a, b = find(x * n + y), find(gx + g[y])
                if a != b:
                    parent[max(a, b)] = min(a, b)

    index: typing.Dict[int, int] = {}
    class_of = []
    for x in range(n):
        row = []
        for y in range(n):
            row.append(index.setdefault(find(x * n + y), len(index)))
        class_of.append(tuple(row))
    count = len(index)
    transpose = [0] * count
    sizes = [0] * count
    for x in range(n):
        for y in range(n):
            c = class_of[x][y]
            transpose[c] = class_of[y][x]
            sizes[c] += 1
    return Orbitals(
        n=n,
        class_of=tuple(class_of),
        class_count=count,
        transpose=tuple(transpose),
        sizes=tuple(sizes),
    )


def symmetrized_classes(orbitals: Orbitals) -> typing.List[typing.Tuple[int, ...]]:
    """Merge each class with its transpose; ordered by smallest member."""
    out = []
    seen: typing.Set[int] = set()
    for j in range(orbitals.class_count):
        if j in seen:
            continue
        group = tuple(sorted({j, orbitals.transpose[j]}))
        seen.update(group)
        out.append(group)
    return out


def orbital_matrices(orbitals: Orbitals) -> typing.List[numpy.ndarray]:
    """0/1 indicator matrix of every class."""
    classes = numpy.array(orbitals.class_of, dtype=numpy.int64)
    return [(classes == j).astype(numpy.int64) for j in range(orbitals.class_count)]


Entry = typing.Union[int, float, fractions.Fraction]


def group_average(
    M: typing.Sequence[typing.Sequence[Entry]], orbitals: Orbitals
) -> typing.List[typing.List[Entry]]:
    """Replace every entry by the mean of M over its orbital class.

    For a finite group this equals (1/|G|) sum_g M(gx, gy). Exact inputs
    give exact outputs.
    """
    n = orbitals.n
    if len(M) != n or any(len(row) != n for row in M):
        raise ShapeMismatch(f"expected a {n}x{n} matrix")
    sums: typing.List[Entry] = [0] * orbitals.class_count
    for x in range(n):
        for y in range(n):
            c = orbitals.class_of[x][y]
            sums[c] = sums[c] + M[x][y]
    means = [
        s / orbitals.sizes[j] if isinstance(s, float) else fractions.Fraction(s) / orbitals.sizes[j]
        for j, s in enumerate(sums)
    ]
    return [[means[c] for c in row] for row in orbitals.class_of]


def cycle_graph(n: int) -> FiniteGraph:
    if n < 3:
        raise DomainError(f"a cycle needs at least 3 vertices, got {n}")
    return FiniteGraph(n, frozenset(frozenset((i, (i + 1) % n)) for i in range(n)))


def dihedral_group(n: int) -> PermGroup:
    return PermGroup(
        n,
        (
            tuple((i + 1) % n for i in range(n)),
            tuple((-i) % n for i in range(n)),
        ),
    )


def complete_graph(n: int) -> FiniteGraph:
    return FiniteGraph(n, frozenset(frozenset(p) for p in itertools.combinations(range(n), 2)))


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(n)
    swap = (1, 0) + tuple(range(2, n))
    if n == 2:
        return PermGroup(n, (swap,))
    return PermGroup(n, (swap, tuple((i + 1) % n for i in range(n))))


def _petersen_vertices() -> typing.List[typing.Tuple[int, int]]:
    return list(itertools.combinations(range(5), 2))


def petersen_graph() -> FiniteGraph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    vs = _petersen_vertices()
    return FiniteGraph(
        len(vs),
        frozenset(
            frozenset((i, j))
            for i, j in itertools.combinations(range(len(vs)), 2)
            if not set(vs[i]) & set(vs[j])
        ),
    )


def petersen_group() -> PermGroup:
    """S_5 acting on the 2-subsets, the full automorphism group."""
    vs = _petersen_vertices()
    where = {v: i for i, v in enumerate(vs)}

    def induced(p: typing.Sequence[int]) -> Permutation:
        return tuple(where[tuple(sorted((p[a], p[b])))] for a, b in vs)

    return PermGroup(len(vs), tuple(induced(g) for g in symmetric_group(5).generators))


def hamming_graph(n: int, distances: typing.Iterable[int]) -> FiniteGraph:
    """Points of {0,1}^n (as integers), adjacent at a Hamming distance in ``distances``."""
    if n < 1:
        raise DomainError(f"cube dimension must be positive, got {n}")
    ds = frozenset(distances)
    size = 1 << n
    return FiniteGraph(
        size,
        frozenset(
            frozenset((x, y))
            for x in range(size)
            for y in range(x + 1, size)
            if bin(x ^ y).count("1") in ds
        ),
    )


def hamming_group(n: int) -> PermGroup:
    """Translations and coordinate permutations of {0,1}^n."""
    if n < 1:
        raise DomainError(f"cube dimension must be positive, got {n}")
    size = 1 << n

    def permute_bits(p: typing.Sequence[int]) -> Permutation:
        return tuple(
            sum(((x >> i) & 1) << p[i] for i in range(n)) for x in range(size)
        )

    gens = [tuple(x ^ 1 for x in range(size))]
    gens.extend(permute_bits(p) for p in symmetric_group(n).generators)
    return PermGroup(size, tuple(gens))
