"""From a separating decomposition to its contour word, word triple and paths.

Words are plain strings.  Lowercase letters are the plain letters and
uppercase letters their underlined (barred) versions:

* ``a`` / ``A``: blue tree edge left downward / upward from a black vertex;
* ``b`` / ``B``: the same from a white vertex;
* ``c`` / ``C``: outgoing / incoming red edge crossed at a white vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    BadEndpoints,
    ContentViolated,
    MalformedContourWord,
    NotAdmissible,
    Property1Violated,
    Property2Violated,
    RedundancyViolated,
    WordError,
)
from .separating import BLUE, SeparatingDecomposition

MATCHING_PATTERN = re.compile(r"ac(A*aC*c)*")


@dataclass(frozen=True)
class WordTriple:
    a: str
    b: str
    c: str

    @property
    def i(self) -> int:
        return self.a.count("A")

    @property
    def j(self) -> int:
        return self.a.count("a") - 2


class Projection(NamedTuple):
    triple: WordTriple
    tree_word: str  # interlacing of the a- and b-words
    matching_word: str  # restriction to a, A, c, C


@dataclass(frozen=True)
class LatticePath:
    origin: tuple[int, int]
    steps: str  # over U and R

    def __post_init__(self) -> None:
        if set(self.steps) - {"U", "R"}:
            raise BadEndpoints(self.steps, "steps must be U or R")

    def points(self) -> list[tuple[int, int]]:
        x, y = self.origin
        out = [(x, y)]
        for step in self.steps:
            if step == "U":
                y += 1
            else:
                x += 1
            out.append((x, y))
        return out

    @property
    def end(self) -> tuple[int, int]:
        return (
            self.origin[0] + self.steps.count("R"),
            self.origin[1] + self.steps.count("U"),
        )


UPPER_ORIGIN, MIDDLE_ORIGIN, LOWER_ORIGIN = (-1, 1), (0, 0), (1, -1)


@dataclass(frozen=True)
class PathTriple:
    upper: LatticePath
    middle: LatticePath
    lower: LatticePath

    @classmethod
    def from_steps(cls, upper: str, middle: str, lower: str) -> PathTriple:
        return cls(
            LatticePath(UPPER_ORIGIN, upper),
            LatticePath(MIDDLE_ORIGIN, middle),
            LatticePath(LOWER_ORIGIN, lower),
        )

    def steps(self) -> tuple[str, str, str]:
        return self.upper.steps, self.middle.steps, self.lower.steps

    def type(self) -> tuple[int, int]:
        """``(i, j)`` read off the middle path; see :func:`check_endpoints`."""
        return self.middle.end


# ---------------------------------------------------------------------------
# contour word
# ---------------------------------------------------------------------------


def contour_word(d: SeparatingDecomposition) -> str:
    """Clockwise walk around the blue tree from ``s``, crossing red edges at whites."""
    Q = d.map
    start = Q.sigma_inv[d.outer_source_dart()]
    out = []
    x = start
    while True:
        v = Q.origin(x)
        black = d.is_black(v)
        if d.color(x) == BLUE:
            if d.is_tail[x]:
                out.append("A" if black else "B")
            else:
                out.append("a" if black else "b")
            x = Q.sigma_inv[Q.alpha[x]]
        else:
            if not black:
                out.append("c" if d.is_tail[x] else "C")
            x = Q.sigma_inv[x]
        if x == start:
            return "".join(out)


def visit_times(d: SeparatingDecomposition) -> tuple[dict[int, int], dict[int, int]]:
    """First and last visit step of every vertex in the clockwise blue-tree walk."""
    Q = d.map
    start = Q.sigma_inv[d.outer_source_dart()]
    first, last = {d.s: 0}, {}
    x, clock = start, 0
    while True:
        if d.color(x) == BLUE:
            clock += 1
            v, u = Q.origin(x), Q.target(x)
            if d.is_tail[x]:
                last[v] = clock
            else:
                first[u] = clock
            x = Q.sigma_inv[Q.alpha[x]]
        else:
            x = Q.sigma_inv[x]
        if x == start:
            last[d.s] = clock + 1
            return first, last


def red_edges_ordered(d: SeparatingDecomposition) -> bool:
    """Every red edge not at ``t`` has its black end left for good before its white end is reached."""
    first, last = visit_times(d)
    Q = d.map
    for k, (x, y) in enumerate(Q.edges):
        if d.colors[k] == BLUE:
            continue
        u, v = Q.origin(x), Q.origin(y)
        if d.t in (u, v):
            continue
        b, w = (u, v) if d.is_black(u) else (v, u)
        if not last[b] < first[w]:
            return False
    return True


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def is_dyck(word: str, up: str, down: str) -> bool:
    height = 0
    for ch in word:
        if ch in up:
            height += 1
        elif ch in down:
            height -= 1
            if height < 0:
                return False
    return height == 0


def interlace(w_a: str, w_b: str) -> str:
    if len(w_a) != len(w_b):
        raise ContentViolated((len(w_a), len(w_b)), "a- and b-words differ in length")
    return "".join(x + y for x, y in zip(w_a, w_b))


def project(w_q: str) -> Projection:
    """Split a contour word into its three letter subwords, checking its shape."""
    if set(w_q) - set("aAbBcC"):
        raise MalformedContourWord(w_q, "unknown letter")
    keep = lambda letters: "".join(ch for ch in w_q if ch in letters)  # noqa: E731
    triple = WordTriple(keep("aA"), keep("bB"), keep("cC"))
    tree = keep("aAbB")
    matching = keep("aAcC")
    if len(triple.a) != len(triple.b) or tree != interlace(triple.a, triple.b):
        raise MalformedContourWord(tree, "tree letters do not alternate")
    if not is_dyck(tree, "ab", "AB"):
        raise MalformedContourWord(tree, "tree word is not a Dyck word")
    if not MATCHING_PATTERN.fullmatch(matching):
        raise MalformedContourWord(matching, "matching word has the wrong shape")
    if not is_dyck(matching, "A", "C"):
        raise MalformedContourWord(matching, "A/C letters are not well parenthesized")
    return Projection(triple, tree, matching)


def _positions(word: str, letter: str) -> list[int]:
    return [k for k, ch in enumerate(word) if ch == letter]


def check_admissible(t: WordTriple) -> tuple[int, int]:
    """Return ``(i, j)`` if the triple is admissible, else raise the first violation."""
    for word, letters in ((t.a, "aA"), (t.b, "bB"), (t.c, "cC")):
        if set(word) - set(letters):
            raise ContentViolated(word, f"letters outside {letters}")
    i, j = t.a.count("A"), t.a.count("a") - 2
    if j < 0:
        raise ContentViolated(t.a, "fewer than two a's")
    expected = {
        "b": (t.b.count("b"), i),
        "B": (t.b.count("B"), j + 2),
        "c": (t.c.count("c"), j + 2),
        "C": (t.c.count("C"), i),
    }
    for letter, (got, want) in expected.items():
        if got != want:
            raise ContentViolated(letter, f"{got} occurrences, expected {want}")

    if not (t.a[0] == t.a[-1] == "a"):
        raise RedundancyViolated(t.a, "a-word must start and end with a")
    if not (t.c[0] == t.c[-1] == "c"):
        raise RedundancyViolated(t.c, "c-word must start and end with c")
    if not t.b.endswith("BB"):
        raise RedundancyViolated(t.b, "b-word must end with BB")

    a_bars, b_plain = _positions(t.a, "A"), _positions(t.b, "b")
    for k in range(i):
        left = t.a[: a_bars[k]].count("a")
        right = t.b[: b_plain[k]].count("B")
        if not left > right:
            raise Property1Violated(k + 1, f"{left} <= {right}")

    a_plain, c_plain = _positions(t.a, "a"), _positions(t.c, "c")
    for k in range(j + 2):
        left = t.a[: a_plain[k]].count("A")
        right = t.c[: c_plain[k]].count("C")
        if not left >= right:
            raise Property2Violated(k + 1, f"{left} < {right}")
    return i, j


# ---------------------------------------------------------------------------
# paths
# ---------------------------------------------------------------------------

_A_STEPS = str.maketrans("aA", "UR")
_B_STEPS = str.maketrans("Bb", "UR")
_C_STEPS = str.maketrans("cC", "UR")


def words_to_triple(t: WordTriple) -> PathTriple:
    """Drop the redundant letters and read each word as an upright path."""
    try:
        check_admissible(t)
    except WordError as exc:
        raise NotAdmissible(None, str(exc)) from exc
    return PathTriple.from_steps(
        t.c[1:-1].translate(_C_STEPS),
        t.a[1:-1].translate(_A_STEPS),
        t.b[:-2].translate(_B_STEPS),
    )


def phi(d: SeparatingDecomposition) -> PathTriple:
    return words_to_triple(project(contour_word(d)).triple)


def check_endpoints(p: PathTriple) -> tuple[int, int]:
    """Type ``(i, j)`` of a triple whose origins and endpoints follow the canonical pattern."""
    i, j = p.middle.end
    if p.middle.origin != MIDDLE_ORIGIN:
        raise BadEndpoints(p.middle.origin, "middle path must start at (0, 0)")
    if p.upper.origin != UPPER_ORIGIN or p.upper.end != (i - 1, j + 1):
        raise BadEndpoints((p.upper.origin, p.upper.end), "upper path endpoints")
    if p.lower.origin != LOWER_ORIGIN or p.lower.end != (i + 1, j - 1):
        raise BadEndpoints((p.lower.origin, p.lower.end), "lower path endpoints")
    return i, j


def is_nonintersecting(p: PathTriple) -> bool:
    check_endpoints(p)
    up, mid, low = (set(path.points()) for path in (p.upper, p.middle, p.lower))
    return not (up & mid or mid & low or up & low)
