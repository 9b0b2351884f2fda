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

"""Stability number of small graphs, the lower end of the theta sandwich.

Graphs are held as neighbour bitmasks, one Python int per vertex.
"""

import typing

from ..exceptions import TooLarge
from .groups import FiniteGraph


def _popcount(v: int) -> int:
    return bin(v).count("1")


def _greedy(masks: typing.Sequence[int], candidates: int) -> int:
    """Size of a stable set built by repeatedly taking a minimum-degree vertex."""
    size = 0
    while candidates:
        v = min(
            (i for i in range(len(masks)) if candidates >> i & 1),
            key=lambda i: _popcount(masks[i] & candidates),
        )
        candidates &= ~(masks[v] | 1 << v)
        size += 1
    return size


def stable_set_bruteforce(graph: FiniteGraph, limit: int = 64) -> int:
    """Exact stability number by branch and bound.

    Branches on a vertex of maximum degree among the remaining candidates
    (take it, or drop it) and prunes when the candidates cannot beat the
    best set found so far.
    """
    n = graph.n
    if n > limit:
        raise TooLarge(f"{n} vertices exceed the brute-force limit of {limit}")
    masks = [0] * n
    for x, nbrs in enumerate(graph.neighbors()):
        for y in nbrs:
            masks[x] |= 1 << y
    everything = (1 << n) - 1
    best = _greedy(masks, everything)

    def search(candidates: int, size: int) -> None:
        nonlocal best
        if size + _popcount(candidates) <= best:
            return
        v, degree = -1, -1
        rest = candidates
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            d = _popcount(masks[i] & candidates)
            if d > degree:
                v, degree = i, d
        if degree == 0:
            # the candidates are pairwise non-adjacent
            best = size + _popcount(candidates)
            return
        search(candidates & ~(masks[v] | 1 << v), size + 1)
        search(candidates & ~(1 << v), size)

    search(everything, 0)
    return best
