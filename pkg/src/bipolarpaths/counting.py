"""Exact counts, exhaustive enumerators and a uniform sampler."""

from __future__ import annotations

import random
from collections.abc import Iterator
from functools import lru_cache
from math import comb, factorial

from ._budget import check_budget
from .encode import LOWER_ORIGIN, MIDDLE_ORIGIN, UPPER_ORIGIN, PathTriple, is_nonintersecting
from .schnyder import DyckPair

MAX_TRIPLE_SIZE = 10
MAX_DYCK_HALF_LENGTH = 8


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return factorial(n)


def baxter_theta(i: int, j: int) -> int:
    """Number of plane bipolar orientations with ``i`` non-pole vertices and ``j`` inner faces."""
    n = i + j
    num = 2 * _fact(n) * _fact(n + 1) * _fact(n + 2)
    den = _fact(i) * _fact(i + 1) * _fact(i + 2) * _fact(j) * _fact(j + 1) * _fact(j + 2)
    return num // den


def gv_matrix(i: int, j: int) -> list[list[int]]:
    """Path counts between the three sources and three sinks of type ``(i, j)``."""

    def binom(n: int, k: int) -> int:
        return comb(n, k) if 0 <= k <= n else 0

    return [[binom(i + j, i + q - p) for q in range(1, 4)] for p in range(1, 4)]


def gv_determinant(i: int, j: int) -> int:
    (a, b, c), (d, e, f), (g, h, k) = gv_matrix(i, j)
    return a * (e * k - f * h) - b * (d * k - f * g) + c * (d * h - e * g)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def schnyder_count(n: int) -> int:
    """Schnyder woods with ``n`` inner vertices, as a 2x2 Catalan determinant."""
    return catalan(n) * catalan(n + 2) - catalan(n + 1) ** 2


def schnyder_count_closed(n: int) -> int:
    num = 6 * _fact(2 * n) * _fact(2 * n + 2)
    return num // (_fact(n) * _fact(n + 1) * _fact(n + 2) * _fact(n + 3))


def baxter_number(n: int) -> int:
    """Sum of ``baxter_theta(i, j)`` over ``i + j = n``."""
    return sum(baxter_theta(i, n - i) for i in range(n + 1))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _paths(
    origin: tuple[int, int], rights: int, ups: int, avoid: frozenset[tuple[int, int]]
) -> Iterator[str]:
    """Upright paths avoiding ``avoid``, in lexicographic order of their step strings."""
    steps: list[str] = []

    def walk(x: int, y: int, r: int, u: int) -> Iterator[str]:
        if (x, y) in avoid:
            return
        if not r and not u:
            yield "".join(steps)
            return
        if r:
            steps.append("R")
            yield from walk(x + 1, y, r - 1, u)
            steps.pop()
        if u:
            steps.append("U")
            yield from walk(x, y + 1, r, u - 1)
            steps.pop()

    yield from walk(*origin, rights, ups)


def _points(origin: tuple[int, int], steps: str) -> frozenset[tuple[int, int]]:
    x, y = origin
    out = {(x, y)}
    for s in steps:
        if s == "U":
            y += 1
        else:
            x += 1
        out.add((x, y))
    return frozenset(out)


def enumerate_triples(i: int, j: int) -> Iterator[PathTriple]:
    """Every non-intersecting triple of type ``(i, j)``, ordered by (upper, middle, lower)."""
    check_budget(i + j, MAX_TRIPLE_SIZE, "enumerate_triples i+j")
    none: frozenset[tuple[int, int]] = frozenset()
    for upper in _paths(UPPER_ORIGIN, i, j, none):
        up_pts = _points(UPPER_ORIGIN, upper)
        for middle in _paths(MIDDLE_ORIGIN, i, j, up_pts):
            taken = up_pts | _points(MIDDLE_ORIGIN, middle)
            for lower in _paths(LOWER_ORIGIN, i, j, taken):
                yield PathTriple.from_steps(upper, middle, lower)


def dyck_words(n: int) -> Iterator[str]:
    """Dyck words over U/D of length ``2n``, lexicographically (D before U)."""
    steps: list[str] = []

    def walk(height: int, ups: int, downs: int) -> Iterator[str]:
        if not ups and not downs:
            yield "".join(steps)
            return
        if downs and height > 0:
            steps.append("D")
            yield from walk(height - 1, ups, downs - 1)
            steps.pop()
        if ups:
            steps.append("U")
            yield from walk(height + 1, ups - 1, downs)
            steps.pop()

    yield from walk(0, n, n)


def enumerate_dyck_pairs(n: int) -> Iterator[DyckPair]:
    """Non-crossing pairs of Dyck words, ordered by (lower, upper)."""
    check_budget(n, MAX_DYCK_HALF_LENGTH, "enumerate_dyck_pairs n")
    for lower in dyck_words(n):
        floor = [0]
        for ch in lower:
            floor.append(floor[-1] + (1 if ch == "U" else -1))
        steps: list[str] = []

        def above(height: int, ups: int, downs: int) -> Iterator[str]:
            k = len(steps)
            if height < floor[k]:
                return
            if not ups and not downs:
                yield "".join(steps)
                return
            if downs and height > 0:
                steps.append("D")
                yield from above(height - 1, ups, downs - 1)
                steps.pop()
            if ups:
                steps.append("U")
                yield from above(height + 1, ups - 1, downs)
                steps.pop()

        for upper in above(0, n, n):
            yield DyckPair(lower, upper)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------


def _random_path(rng: random.Random, rights: int, ups: int) -> str:
    steps = ["U"] * (rights + ups)
    for k in rng.sample(range(rights + ups), rights):
        steps[k] = "R"
    return "".join(steps)


def sample_triple(i: int, j: int, seed: int) -> PathTriple:
    """Uniform non-intersecting triple of type ``(i, j)`` by rejection.

    Each attempt draws the three paths independently and uniformly with
    :class:`random.Random` (Mersenne Twister) seeded by ``seed``; the first
    vertex-disjoint draw is returned.
    """
    rng = random.Random(seed)
    while True:
        p = PathTriple.from_steps(*(_random_path(rng, i, j) for _ in range(3)))
        if is_nonintersecting(p):
            return p
