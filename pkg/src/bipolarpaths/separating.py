"""Separating decompositions of quadrangulations and the transfer from/to
plane bipolar orientations.

Edge colours are ``"B"`` (blue) and ``"R"`` (red); vertex classes are
``"b"`` (black) and ``"w"`` (white).
"""

from __future__ import annotations

import re
from collections.abc import Hashable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

from .bipolar import BipolarOrientation, normalized as normalized_orientation
from .comb_map import CombMap, MapBuilder, canonical_code
from .errors import (
    BlueNotSpanningTree,
    FormatError,
    NotQuadrangulation,
    NotSimple,
    OutdegreeViolated,
    PoleRuleViolated,
    RedNotSpanningTree,
    RotationRuleViolated,
)

BLUE, RED = "B", "R"
BLACK, WHITE = "b", "w"


@dataclass(frozen=True, eq=False)
class SeparatingDecomposition:
    map: CombMap
    colors: tuple[str, ...]  # per edge
    tails: tuple[int, ...]  # tail dart per edge
    classes: tuple[str, ...]  # per vertex
    s: int
    t: int

    @cached_property
    def is_tail(self) -> tuple[bool, ...]:
        flags = [False] * (self.map.dart_count + 1)
        for d in self.tails:
            flags[d] = True
        return tuple(flags)

    def color(self, d: int) -> str:
        return self.colors[self.map.edge_of[d]]

    def is_black(self, v: int) -> bool:
        return self.classes[v] == BLACK

    def counts(self) -> tuple[int, int]:
        blacks = self.classes.count(BLACK)
        return blacks, len(self.classes) - blacks

    def type(self) -> tuple[int, int]:
        """``(i, j)`` such that there are ``i+2`` blacks and ``j+2`` whites."""
        b, w = self.counts()
        return b - 2, w - 2

    def outer_source_dart(self) -> int:
        for d in self.map.faces().outer:
            if self.map.origin(d) == self.s:
                return d
        raise PoleRuleViolated(self.s, "s is not on the outer face")

    def decoration(self, d: int) -> tuple[str, bool]:
        return (self.color(d), self.is_tail[d])

    def code(self) -> tuple:
        return canonical_code(self.map, self.decoration, root=self.outer_source_dart())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeparatingDecomposition):
            return NotImplemented
        return self.code() == other.code()

    def __hash__(self) -> int:
        return hash(self.code())

    def outer_whites(self) -> tuple[int, int]:
        """``(left, right)`` outer white vertices.

        The right one is the target of the outer dart leaving ``s``; the left
        one is the first white met by the clockwise traversal of the blue tree.
        """
        r = self.outer_source_dart()
        return self.map.target(self.map.sigma_inv[r]), self.map.target(r)


@dataclass(frozen=True)
class PlaneTree:
    """Rooted plane tree; ``children[v]`` is in clockwise order."""

    root: int
    children: Mapping[int, tuple[int, ...]]
    colors: Mapping[int, str]
    parent: Mapping[int, int] = field(default_factory=dict)

    def vertices(self) -> list[int]:
        """Preorder (clockwise traversal, first visits)."""
        out, stack = [], [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children.get(v, ())))
        return out

    def dyck_word(self) -> str:
        """Contour word: ``a``/``A`` for black-white edges, ``b``/``B`` for white-black."""
        out = []
        stack = [(self.root, iter(self.children.get(self.root, ())))]
        while stack:
            v, it = stack[-1]
            child = next(it, None)
            if child is None:
                stack.pop()
                if stack:
                    out.append("A" if self.colors[v] == BLACK else "B")
                continue
            out.append("a" if self.colors[v] == BLACK else "b")
            stack.append((child, iter(self.children.get(child, ()))))
        return "".join(out)

    def size(self) -> int:
        return len(self.colors)


# ---------------------------------------------------------------------------
# bipolar orientation -> separating decomposition
# ---------------------------------------------------------------------------


def assemble(
    builder: MapBuilder,
    vertex_order: list[Hashable],
    classes: Mapping[Hashable, str],
    root: Hashable,
    color: Mapping[Hashable, str],
    tail_darts: set[Hashable],
    s: Hashable,
    t: Hashable,
) -> SeparatingDecomposition:
    """Freeze a builder into a decomposition; colours/tails are keyed by builder dart."""
    cmap, number = builder.freeze(vertex_order, root)
    back = {v: k for k, v in number.items()}
    colors = tuple(color[back[d]] for d, _ in cmap.edges)
    tails = tuple(d if back[d] in tail_darts else e for d, e in cmap.edges)
    return SeparatingDecomposition(
        cmap,
        colors,
        tails,
        tuple(classes[v] for v in vertex_order),
        vertex_order.index(s),
        vertex_order.index(t),
    )


def to_separating(o: BipolarOrientation) -> SeparatingDecomposition:
    """Quadrangulation of the map, with the orientation transferred to it."""
    o = normalized_orientation(o)
    M = o.map
    tail = o.is_tail
    fp = M.faces()
    s, t = o.s, o.t

    B = MapBuilder()
    color: dict[int, str] = {}
    tails: set[int] = set()
    corner: dict[int, list[int]] = {}  # M dart -> Q darts at its origin, ccw
    white_ccw: dict[Hashable, list[int]] = {}

    def edge(c: str, tail_at_black: bool) -> tuple[int, int]:
        qb, qw = B.new_dart(), B.new_dart()
        B.pair(qb, qw)
        color[qb] = color[qw] = c
        tails.add(qb if tail_at_black else qw)
        return qb, qw

    for k, face in enumerate(fp.faces):
        if k == fp.outer_index:
            continue
        around = []
        for idx, d in enumerate(face):
            cur, prev = tail[d], tail[face[idx - 1]]
            if cur and prev:  # inside the left path
                qb, qw = edge(RED, True)
            elif cur:  # bottom extremity
                qb, qw = edge(BLUE, False)
            elif not prev:  # inside the right path
                qb, qw = edge(BLUE, True)
            else:  # top extremity
                qb, qw = edge(RED, False)
            corner[d] = [qb]
            around.append(qw)
        white_ccw[("f", k)] = around[::-1]  # face orbits run clockwise

    orbit = M.face_orbit(M.root)
    split = next(k for k, d in enumerate(orbit) if M.origin(d) == t)
    right_side, left_side = orbit[:split], orbit[split:]
    wl_ccw_rev: list[int] = []
    wr_ccw_rev: list[int] = []
    for d in right_side:
        if M.origin(d) == s:
            ql, qlw = edge(BLUE, False)
            qr, qrw = edge(BLUE, False)
            corner[d] = [ql, qr]
            wr_ccw_rev.append(qrw)
            s_left = qlw
            q_root = qr
        else:
            qb, qw = edge(RED, True)
            corner[d] = [qb]
            wr_ccw_rev.append(qw)
    for d in left_side:
        if M.origin(d) == t:
            qr, qrw = edge(RED, False)
            ql, qlw = edge(RED, False)
            corner[d] = [qr, ql]
            wr_ccw_rev.append(qrw)
            wl_ccw_rev.append(qlw)
        else:
            qb, qw = edge(BLUE, True)
            corner[d] = [qb]
            wl_ccw_rev.append(qw)
    wl_ccw_rev.append(s_left)
    white_ccw["wL"] = wl_ccw_rev[::-1]
    white_ccw["wR"] = wr_ccw_rev[::-1]

    order: list[Hashable] = []
    classes: dict[Hashable, str] = {}
    for v in range(M.vertex_count):
        B.add_vertex(("v", v), [q for d in M.rotation(v) for q in corner[d]])
        order.append(("v", v))
        classes[("v", v)] = BLACK
    for key, ring in white_ccw.items():
        B.add_vertex(key, ring)
        order.append(key)
        classes[key] = WHITE
    return assemble(B, order, classes, q_root, color, tails, ("v", s), ("v", t))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

_ROTATION = re.compile(r"Xb*Yr*")


def _tokens(d: SeparatingDecomposition, darts: list[int]) -> str:
    out = []
    for q in darts:
        c, outgoing = d.color(q), d.is_tail[q]
        if c == BLUE:
            out.append("X" if outgoing else "b")
        else:
            out.append("Y" if outgoing else "r")
    return "".join(out)


def validate_separating(d: SeparatingDecomposition) -> tuple[int, int]:
    """Check every local and global rule; return ``(blacks, whites)``."""
    Q = d.map
    nv = Q.vertex_count
    if len(d.classes) != nv or set(d.classes) - {BLACK, WHITE}:
        raise FormatError(len(d.classes), "one class letter per vertex expected")
    if len(d.colors) != Q.edge_count or set(d.colors) - {BLUE, RED}:
        raise FormatError(len(d.colors), "one colour per edge expected")
    for k, q in enumerate(d.tails):
        if q not in Q.edges[k]:
            raise FormatError(q, f"tail dart is not a dart of edge {k}")
    if d.s == d.t or not (d.is_black(d.s) and d.is_black(d.t)):
        raise PoleRuleViolated((d.s, d.t), "poles must be two distinct black vertices")

    for a, b in Q.edges:
        if d.classes[Q.origin(a)] == d.classes[Q.origin(b)]:
            raise NotQuadrangulation(Q.edge_of[a], "edge joins two vertices of one class")
    fp = Q.faces()
    for k, face in enumerate(fp.faces):
        if len(face) != 4:
            raise NotQuadrangulation(k, f"face of degree {len(face)}")
    if not Q.is_simple():
        raise NotSimple()
    for k, face in enumerate(fp.faces):
        if len({Q.origin(q) for q in face}) != 4:
            raise NotSimple(k, "face boundary repeats a vertex")

    for v in range(nv):
        if v in (d.s, d.t):
            continue
        outs = [d.color(q) for q in Q.rotation(v) if d.is_tail[q]]
        if sorted(outs) != [BLUE, RED]:
            raise OutdegreeViolated(v, f"outgoing colours {sorted(outs)}")

    for v in range(nv):
        if v in (d.s, d.t):
            continue
        ring = list(Q.rotation(v))
        if d.is_black(v):
            ring = ring[::-1]  # black rule reads clockwise, white rule counterclockwise
        k = next(k for k, q in enumerate(ring) if d.is_tail[q] and d.color(q) == BLUE)
        if not _ROTATION.fullmatch(_tokens(d, ring[k:] + ring[:k])):
            raise RotationRuleViolated(v)

    for q in Q.rotation(d.s):
        if d.is_tail[q] or d.color(q) != BLUE:
            raise PoleRuleViolated(d.s, "edges at s must be incoming blue")
    for q in Q.rotation(d.t):
        if d.is_tail[q] or d.color(q) != RED:
            raise PoleRuleViolated(d.t, "edges at t must be incoming red")
    if d.s not in {Q.origin(q) for q in fp.outer}:
        raise PoleRuleViolated(d.s, "s is not on the outer face")

    trees(d)
    return d.counts()


def _color_tree(d: SeparatingDecomposition, c: str, root: int, missing: int, err) -> PlaneTree:
    Q = d.map
    parent_dart: dict[int, int] = {}
    for v in range(Q.vertex_count):
        outs = [q for q in Q.rotation(v) if d.is_tail[q] and d.color(q) == c]
        if v in (root, missing):
            if outs:
                raise err(v, "root/excluded vertex has an outgoing edge")
            continue
        if len(outs) != 1:
            raise err(v, "needs exactly one outgoing edge")
        parent_dart[v] = outs[0]
    if any(d.color(q) == c for q in Q.rotation(missing)):
        raise err(missing, "excluded vertex is touched")

    for v in parent_dart:
        u, steps = v, 0
        while u != root:
            u = Q.target(parent_dart[u])
            steps += 1
            if u == missing or steps > Q.vertex_count:
                raise err(v, "does not reach the root")

    children: dict[int, tuple[int, ...]] = {}
    for v in range(Q.vertex_count):
        if v == missing:
            continue
        if v == root:
            start = Q.sigma_inv[d.outer_source_dart()] if c == BLUE else Q.rotation(v)[0]
            ring = Q.rotation_cw(v, start)
        else:
            ring = Q.rotation_cw(v, parent_dart[v])[1:]
        children[v] = tuple(
            Q.target(q) for q in ring if d.color(q) == c and not d.is_tail[q]
        )
    parent = {v: Q.target(q) for v, q in parent_dart.items()}
    colors = {v: d.classes[v] for v in range(Q.vertex_count) if v != missing}
    return PlaneTree(root, children, colors, parent)


def trees(d: SeparatingDecomposition) -> tuple[PlaneTree, PlaneTree]:
    """Blue tree (rooted at ``s``, spans all but ``t``) and red tree (rooted at ``t``)."""
    blue = _color_tree(d, BLUE, d.s, d.t, BlueNotSpanningTree)
    red = _color_tree(d, RED, d.t, d.s, RedNotSpanningTree)
    return blue, red


# ---------------------------------------------------------------------------
# separating decomposition -> bipolar orientation
# ---------------------------------------------------------------------------


def from_separating(d: SeparatingDecomposition) -> BipolarOrientation:
    """Recover the plane bipolar orientation: one edge per inner quadrangle.

    Walking an inner face as ``b1, w1, b2, w2`` with the face on the left,
    ``b1`` is the tail iff the edge ``b1 w1`` is red out of ``b1`` or blue
    into ``b1``.
    """
    validate_separating(d)
    Q = d.map
    fp = Q.faces()
    outer = fp.face_of[d.outer_source_dart()]

    tail_keys = set()
    edge_keys = []
    for k, face in enumerate(fp.faces):
        if k == outer:
            continue
        ends = []
        for idx, q in enumerate(face):
            b1 = Q.origin(q)
            if not d.is_black(b1):
                continue
            before = face[idx - 1]  # orbits run clockwise: this is the ccw successor
            if d.color(before) == RED:
                is_tail = d.is_tail[Q.alpha[before]]
            else:
                is_tail = d.is_tail[before]
            ends.append(((k, b1), is_tail))
        if [flag for _, flag in ends].count(True) != 1:
            raise RotationRuleViolated(k, "face does not determine an edge direction")
        for key, flag in ends:
            if flag:
                tail_keys.add(key)
                edge_keys.append(key)

    B = MapBuilder()
    blacks = [v for v in range(Q.vertex_count) if d.is_black(v)]
    for v in blacks:
        ring = [(fp.face_of[q], v) for q in Q.rotation(v) if fp.face_of[q] != outer]
        B.add_vertex(v, ring)
    for k, face in enumerate(fp.faces):
        if k != outer:
            a, b = (Q.origin(q) for q in face if d.is_black(Q.origin(q)))
            B.pair((k, a), (k, b))

    q_out = next(q for q in Q.rotation(d.s) if fp.face_of[q] == outer)
    root = (fp.face_of[Q.sigma[q_out]], d.s)
    cmap, number = B.freeze(blacks, root, edge_order=edge_keys)
    tails = tuple(number[key] for key in edge_keys)
    return BipolarOrientation(cmap, tails, blacks.index(d.s), blacks.index(d.t))
