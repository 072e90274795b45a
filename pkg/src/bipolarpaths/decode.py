"""From a non-intersecting path triple back to a separating decomposition.

The reconstruction grows the blue tree from the tree word, hangs red stems
(half-edges) on it as dictated by the matching word, closes black stems onto
white stems like parentheses, and finally attaches every remaining white
stem either to the black vertex that opened the face around it or to a new
vertex ``t``.
"""

from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass, field
from itertools import count

from .comb_map import MapBuilder
from .encode import (
    PathTriple,
    WordTriple,
    check_endpoints,
    interlace,
    is_dyck,
    is_nonintersecting,
)
from .errors import (
    InconsistentType,
    Intersecting,
    InvariantIBroken,
    NoValidShuffle,
    NotDyck,
    UnmatchedStem,
)
from .separating import (
    BLACK,
    BLUE,
    RED,
    WHITE,
    PlaneTree,
    SeparatingDecomposition,
    assemble,
)

OUT_BLACK, IN_WHITE, OUT_WHITE = "A", "C", "c"  # stem kinds, named after their letters


def triple_to_words(p: PathTriple) -> WordTriple:
    check_endpoints(p)
    if not is_nonintersecting(p):
        raise Intersecting(p.steps())
    upper, middle, lower = p.steps()
    return WordTriple(
        "a" + middle.translate(str.maketrans("UR", "aA")) + "a",
        lower.translate(str.maketrans("UR", "Bb")) + "BB",
        "c" + upper.translate(str.maketrans("UR", "cC")) + "c",
    )


def build_blue_tree(w_a: str, w_b: str) -> PlaneTree:
    """Plane tree whose clockwise contour reads the interlacing of the two words.

    Vertices are numbered in preorder, the root ``s`` being 0.
    """
    word = interlace(w_a, w_b)
    if not is_dyck(word, "ab", "AB"):
        raise NotDyck(word)
    children: dict[int, list[int]] = {0: []}
    colors = {0: BLACK}
    parent: dict[int, int] = {}
    stack = [0]
    for letter in word:
        if letter in "ab":
            u = len(colors)
            colors[u] = WHITE if colors[stack[-1]] == BLACK else BLACK
            children[stack[-1]].append(u)
            children[u] = []
            parent[u] = stack[-1]
            stack.append(u)
        else:
            stack.pop()
    return PlaneTree(0, {v: tuple(c) for v, c in children.items()}, colors, parent)


def matching_word(w_a: str, w_c: str) -> str:
    """The unique shuffle of the a- and c-words of the form ``ac(A*aC*c)*``."""
    if not (w_a[:1] == "a" and w_c[:1] == "c" and w_a.endswith("a") and w_c.endswith("c")):
        raise NoValidShuffle((w_a, w_c), "words must start and end with their plain letter")
    a_blocks = w_a[1:].split("a")[:-1]  # the A-runs before each later a
    c_blocks = w_c[1:].split("c")[:-1]
    if len(a_blocks) != len(c_blocks):
        raise NoValidShuffle((w_a, w_c), "different numbers of a's and c's")
    return "ac" + "".join(f"{x}a{y}c" for x, y in zip(a_blocks, c_blocks))


# ---------------------------------------------------------------------------
# partial figures
# ---------------------------------------------------------------------------


@dataclass
class PartialFigure:
    """Blue tree plus red edges and dangling red stems.

    ``cw[v]`` lists the darts around ``v`` clockwise.  A stem is a dart
    without a mate; ``stems`` records every stem in contour order together
    with its kind (``"A"`` black outgoing, ``"C"`` white incoming, ``"c"``
    white outgoing).
    """

    tree: PlaneTree
    cw: dict[Hashable, list[int]] = field(default_factory=dict)
    origin: dict[int, Hashable] = field(default_factory=dict)
    mate: dict[int, int] = field(default_factory=dict)
    color: dict[int, str] = field(default_factory=dict)
    tails: set[int] = field(default_factory=set)
    stems: list[tuple[str, int]] = field(default_factory=list)
    closures: list[tuple[int, int]] = field(default_factory=list)
    _ids: count = field(default_factory=lambda: count(1), repr=False)

    def dart(self, v: Hashable, c: str, outgoing: bool) -> int:
        x = next(self._ids)
        self.origin[x] = v
        self.color[x] = c
        if outgoing:
            self.tails.add(x)
        return x

    def join(self, x: int, y: int) -> None:
        self.mate[x] = y
        self.mate[y] = x

    def is_black(self, v: Hashable) -> bool:
        return v == "t" or self.tree.colors[v] == BLACK

    def outer_corners(self) -> list[tuple[Hashable, list[int]]]:
        """Corners of the outer face in clockwise order, with the stems in each."""
        root = self.tree.root
        start = (root, self.cw[root][-1])
        v, arrived = start
        out = []
        while True:
            ring = self.cw[v]
            k = ring.index(arrived)
            stems = []
            while True:
                k = (k + 1) % len(ring)
                x = ring[k]
                if x in self.mate:
                    break
                stems.append(x)
            out.append((v, stems))
            y = self.mate[x]
            v, arrived = self.origin[y], y
            if (v, arrived) == start:
                return out

    def invariant_holds(self) -> bool:
        """Each black outer corner followed by a white one: exactly one holds an outgoing stem."""
        corners = self.outer_corners()
        outgoing = [any(x in self.tails for x in stems) for _, stems in corners]
        for k, (v, _) in enumerate(corners):
            nxt = (k + 1) % len(corners)
            if self.is_black(v) and outgoing[k] + outgoing[nxt] != 1:
                return False
        return True


def rebuild_contour(w_t: str, w_m: str) -> str:
    """Contour word: the tree word with each ``a`` followed by its ``C*c`` run."""
    if "".join(ch for ch in w_m if ch in "aA") != "".join(ch for ch in w_t if ch in "aA"):
        raise InconsistentType((w_t, w_m), "tree and matching words disagree on a/A")
    runs = iter(w_m.replace("A", "").split("a")[1:])
    return "".join(ch + next(runs) if ch == "a" else ch for ch in w_t)


def insert_stems(tree: PlaneTree, w_m: str, check: bool = True) -> PartialFigure:
    """Attach red stems: at each white vertex's first corner, then at each black vertex's last."""
    w_t = tree.dyck_word()
    if w_t.count("a") != w_m.count("a") or w_t.count("A") != w_m.count("A"):
        raise InconsistentType((w_t.count("a"), w_m.count("a")), "type mismatch")
    w_q = rebuild_contour(w_t, w_m)

    f = PartialFigure(tree)
    f.cw[tree.root] = []
    stack = [tree.root]
    kids = {v: iter(c) for v, c in tree.children.items()}
    for letter in w_q:
        v = stack[-1]
        if letter in "ab":
            u = next(kids[v])
            down, up = f.dart(v, BLUE, False), f.dart(u, BLUE, True)
            f.join(down, up)
            f.cw[v].append(down)
            f.cw[u] = [up]
            stack.append(u)
        elif letter in "AB":
            if letter == "A":
                x = f.dart(v, RED, True)
                f.cw[v].append(x)
                f.stems.append((OUT_BLACK, x))
            stack.pop()
        else:
            kind = IN_WHITE if letter == "C" else OUT_WHITE
            x = f.dart(v, RED, letter == "c")
            f.cw[v].append(x)
            f.stems.append((kind, x))
    if check and not f.invariant_holds():
        raise InvariantIBroken(0)
    return f


def close_faces(f: PartialFigure, check: bool = True) -> PartialFigure:
    """Merge black outgoing stems with white incoming stems, matched as parentheses.

    Closures happen in contour order of the incoming stems.  With ``check``
    the outer-face invariant is re-verified after every closure.
    """
    opened: list[int] = []
    for kind, x in f.stems:
        if kind == OUT_BLACK:
            opened.append(x)
        elif kind == IN_WHITE:
            if not opened:
                raise UnmatchedStem(x, "incoming stem before any open black stem")
            f.join(opened.pop(), x)
            f.closures.append((f.mate[x], x))
            if check and not f.invariant_holds():
                raise InvariantIBroken(len(f.closures))
    if opened:
        raise UnmatchedStem(opened[-1], "black stem left open")
    return f


def complete(f: PartialFigure) -> SeparatingDecomposition:
    """Connect each white outgoing stem to its face's left-vertex, or to a new ``t``."""
    opened: list[int] = []
    incoming: dict[Hashable, list[int]] = {}
    f.cw["t"] = []
    for kind, x in f.stems:
        if kind == OUT_BLACK:
            if x not in f.mate:
                raise UnmatchedStem(x, "black stem left open")
            opened.append(x)
        elif kind == IN_WHITE:
            opened.pop()
        else:
            target = f.origin[opened[-1]] if opened else "t"
            y = f.dart(target, RED, False)
            f.join(x, y)
            incoming.setdefault(target, []).append(y)
    for b, darts in incoming.items():
        if b == "t":
            f.cw["t"] = darts[::-1]
        else:
            ring = f.cw[b]
            k = next(k for k, x in enumerate(ring) if x in f.tails and f.color[x] == RED)
            ring[k + 1 : k + 1] = darts[::-1]

    builder = MapBuilder()
    order: list[Hashable] = [*f.tree.vertices(), "t"]
    classes = {v: (BLACK if v == "t" else f.tree.colors[v]) for v in order}
    for v in order:
        builder.add_vertex(v, f.cw[v][::-1])
    for x, y in f.mate.items():
        builder.mate[x] = y
    root = f.cw[f.tree.root][-1]
    return assemble(builder, order, classes, root, f.color, f.tails, f.tree.root, "t")


def psi(p: PathTriple, check: bool = True) -> SeparatingDecomposition:
    w = triple_to_words(p)
    tree = build_blue_tree(w.a, w.b)
    figure = insert_stems(tree, matching_word(w.a, w.c), check=check)
    return complete(close_faces(figure, check=check))
