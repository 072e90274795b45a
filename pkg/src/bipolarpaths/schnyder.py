"""Schnyder woods, contractible separating decompositions and Dyck-path pairs.

Inner edges of a wood carry a colour among ``"B"``, ``"R"``, ``"G"`` and a
tail dart; the three outer edges carry neither.  The outer vertices
``s, t, u`` appear in clockwise order, so the outer face orbit reads
``s -> u -> t -> s`` and the canonical root is the outer dart from ``s`` to ``u``.
"""

from __future__ import annotations

import re
from collections.abc import Hashable
from dataclasses import dataclass
from functools import cached_property

from .comb_map import CombMap, MapBuilder, canonical_code
from .decode import psi
from .encode import PathTriple, is_dyck, phi
from .errors import (
    ColorOutdegreeViolated,
    ColorTreeViolated,
    Crossing,
    FormatError,
    NotContractible,
    NotDyck,
    NotTriangulation,
    OuterRuleViolated,
    RotationOrderViolated,
)
from .separating import BLACK, BLUE, RED, WHITE, SeparatingDecomposition, assemble

GREEN = "G"


@dataclass(frozen=True, eq=False)
class SchnyderWood:
    map: CombMap
    colors: tuple[str | None, ...]  # per edge, None on outer edges
    tails: tuple[int | None, ...]  # per edge, None on outer edges
    s: int
    t: int
    u: int

    @cached_property
    def is_tail(self) -> tuple[bool, ...]:
        flags = [False] * (self.map.dart_count + 1)
        for d in self.tails:
            if d is not None:
                flags[d] = True
        return tuple(flags)

    def color(self, d: int) -> str | None:
        return self.colors[self.map.edge_of[d]]

    @property
    def outer(self) -> tuple[int, int, int]:
        return self.s, self.t, self.u

    @property
    def inner_count(self) -> int:
        return self.map.vertex_count - 3

    def root_dart(self) -> int:
        """The outer dart from ``s`` to ``u``."""
        for d in self.map.rotation(self.s):
            if self.map.target(d) == self.u and self.color(d) is None:
                return d
        raise OuterRuleViolated((self.s, self.u), "no outer edge from s to u")

    def code(self) -> tuple:
        deco = lambda d: (self.color(d), self.is_tail[d])  # noqa: E731
        return canonical_code(self.map, deco, root=self.root_dart())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchnyderWood):
            return NotImplemented
        return self.code() == other.code()

    def __hash__(self) -> int:
        return hash(self.code())


@dataclass(frozen=True)
class DyckPair:
    lower: str  # over U/D
    upper: str

    @property
    def n(self) -> int:
        return len(self.lower) // 2


def validate_dyck_pair(p: DyckPair) -> int:
    for word in (p.lower, p.upper):
        if set(word) - {"U", "D"} or not is_dyck(word, "U", "D"):
            raise NotDyck(word)
    if len(p.lower) != len(p.upper):
        raise NotDyck((p.lower, p.upper), "paths of different lengths")
    low = high = 0
    for k, (x, y) in enumerate(zip(p.lower, p.upper)):
        low += 1 if x == "U" else -1
        high += 1 if y == "U" else -1
        if high < low:
            raise Crossing(k + 1)
    return p.n


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

_VERTEX_RULE = re.compile(r"Xr*Zb*Yg*")
_TOKENS = {
    (BLUE, True): "X",
    (GREEN, True): "Z",
    (RED, True): "Y",
    (BLUE, False): "b",
    (GREEN, False): "g",
    (RED, False): "r",
}
_ROOT_COLOR = {"s": BLUE, "t": GREEN, "u": RED}


def validate_schnyder(w: SchnyderWood) -> int:
    """Check the triangulation and every wood condition; return the inner-vertex count."""
    M = w.map
    nv = M.vertex_count
    if len(w.colors) != M.edge_count or len(w.tails) != M.edge_count:
        raise FormatError(len(w.colors), "one colour and tail entry per edge expected")
    if len({w.s, w.t, w.u}) != 3 or not all(0 <= v < nv for v in w.outer):
        raise OuterRuleViolated(w.outer, "outer vertices must be three distinct vertices")
    if not M.is_simple():
        raise NotTriangulation(None, "loop or multiple edge")
    fp = M.faces()
    for k, face in enumerate(fp.faces):
        if len(face) != 3:
            raise NotTriangulation(k, f"face of degree {len(face)}")

    root = w.root_dart()
    orbit = M.face_orbit(root)
    if [M.origin(d) for d in orbit] != [w.s, w.u, w.t]:
        raise OuterRuleViolated(w.outer, "s, t, u are not the outer vertices in clockwise order")
    outer_edges = {M.edge_of[d] for d in orbit}
    for k, (c, tail) in enumerate(zip(w.colors, w.tails)):
        if k in outer_edges:
            if c is not None or tail is not None:
                raise OuterRuleViolated(k, "outer edges carry no colour")
            continue
        if c not in (BLUE, RED, GREEN) or tail not in M.edges[k]:
            raise FormatError(k, "inner edge needs a colour and a tail dart")

    inner = [v for v in range(nv) if v not in w.outer]
    for v in inner:
        outs = sorted(w.color(d) for d in M.rotation(v) if w.is_tail[d])
        if outs != sorted((BLUE, RED, GREEN)):
            raise ColorOutdegreeViolated(v, f"outgoing colours {outs}")
    for v in inner:
        out_blue = next(d for d in M.rotation(v) if w.is_tail[d] and w.color(d) == BLUE)
        word = "".join(_TOKENS[w.color(d), w.is_tail[d]] for d in M.rotation_cw(v, out_blue))
        if not _VERTEX_RULE.fullmatch(word):
            raise RotationOrderViolated(v, word)

    for name, v in zip("stu", w.outer):
        for d in M.rotation(v):
            if M.edge_of[d] in outer_edges:
                continue
            if w.is_tail[d] or w.color(d) != _ROOT_COLOR[name]:
                raise OuterRuleViolated(v, f"inner edges at {name} must be incoming {_ROOT_COLOR[name]}")

    for c, root_vertex in ((BLUE, w.s), (GREEN, w.t), (RED, w.u)):
        parent = {}
        for v in inner:
            d = next(d for d in M.rotation(v) if w.is_tail[d] and w.color(d) == c)
            parent[v] = M.target(d)
        for v in inner:
            u, steps = v, 0
            while u in parent:
                u = parent[u]
                steps += 1
                if steps > nv:
                    raise ColorTreeViolated(v, f"{c} edges contain a cycle")
            if u != root_vertex:
                raise ColorTreeViolated(v, f"{c} path ends at the wrong outer vertex")
    return len(inner)


# ---------------------------------------------------------------------------
# woods <-> contractible decompositions
# ---------------------------------------------------------------------------


def alpha(w: SchnyderWood) -> SeparatingDecomposition:
    """Split every inner vertex into a black and a white vertex joined by a blue edge."""
    M = w.map
    B = MapBuilder()
    color: dict[Hashable, str] = {}
    tails: set[Hashable] = set()
    for k, (x, y) in enumerate(M.edges):
        B.pair(x, y)
        c = w.colors[k]
        if c is not None:
            color[x] = color[y] = RED if c == GREEN else c
            tails.add(w.tails[k])

    order: list[Hashable] = [w.s, w.t]
    classes: dict[Hashable, str] = {w.s: BLACK, w.t: BLACK, w.u: WHITE, "m": WHITE}
    for v in range(M.vertex_count):
        if v in w.outer:
            continue
        out_blue = next(d for d in M.rotation(v) if w.is_tail[d] and w.color(d) == BLUE)
        ring = M.rotation_cw(v, out_blue)
        cut = next(k for k, d in enumerate(ring) if w.is_tail[d] and w.color(d) == GREEN) + 1
        up, down = B.new_dart(), B.new_dart()  # at the white and the black part
        B.pair(up, down)
        color[up] = color[down] = BLUE
        tails.add(down)
        B.add_vertex(("b", v), [down, *ring[cut:]][::-1])
        B.add_vertex(("w", v), [*ring[:cut], up][::-1])
        order.append(("b", v))
        classes[("b", v)] = BLACK
        classes[("w", v)] = WHITE

    root = w.root_dart()
    s_out = M.sigma_inv[root]  # outer edge s-t, next clockwise after s-u
    t_in = M.alpha[s_out]
    to_s, to_t = B.new_dart(), B.new_dart()
    B.pair(s_out, to_s)
    B.pair(t_in, to_t)
    color.update({s_out: BLUE, to_s: BLUE, t_in: RED, to_t: RED})
    tails.update((to_s, to_t))
    for d in (root, M.alpha[root]):  # u -> s
        color[d] = BLUE
    tails.add(M.alpha[root])
    u_t = next(d for d in M.rotation(w.u) if M.target(d) == w.t and w.color(d) is None)
    color[u_t] = color[M.alpha[u_t]] = RED
    tails.add(u_t)

    for v in w.outer:
        B.add_vertex(v, M.rotation(v))
    B.add_vertex("m", [to_s, to_t])
    order += [w.u, "m"] + [("w", v) for v in range(M.vertex_count) if v not in w.outer]
    return assemble(B, order, classes, root, color, tails, w.s, w.t)


def is_contractible(d: SeparatingDecomposition) -> bool:
    """Inner whites have blue indegree 1; the two outer whites have blue indegree 0."""
    Q = d.map
    outer_whites = set(d.outer_whites())
    for v in range(Q.vertex_count):
        if d.is_black(v):
            continue
        indeg = sum(1 for q in Q.rotation(v) if d.color(q) == BLUE and not d.is_tail[q])
        if indeg != (0 if v in outer_whites else 1):
            return False
    return True


def outer_left_path_faces_hold(d: SeparatingDecomposition) -> bool:
    """Once the left outer white is removed, every inner face has one blue edge out of a black vertex."""
    Q = d.map
    left, _ = d.outer_whites()
    fp = Q.faces()
    outer = fp.face_of[d.outer_source_dart()]
    for k, face in enumerate(fp.faces):
        if k == outer or any(Q.origin(q) == left for q in face):
            continue
        blue_black = sum(
            1 for q in face if d.color(q) == BLUE and d.is_tail[q] and d.is_black(Q.origin(q))
        )
        blue_black += sum(
            1
            for q in face
            if d.color(q) == BLUE and d.is_tail[Q.alpha[q]] and d.is_black(Q.target(q))
        )
        if blue_black != 1:
            return False
    return True


def beta(d: SeparatingDecomposition) -> SchnyderWood:
    """Contract every black-to-white blue edge and the outer left path of length two."""
    if not is_contractible(d):
        raise NotContractible()
    Q = d.map
    left, u = d.outer_whites()
    if len(Q.rotation(left)) != 2:
        raise NotContractible(left, "left outer white must have degree 2")
    B = MapBuilder()
    for v in range(Q.vertex_count):
        B.add_vertex(v, Q.rotation(v))
    for x, y in Q.edges:
        B.pair(x, y)

    color: dict[int, str | None] = {}
    for k, (x, y) in enumerate(Q.edges):
        c = d.colors[k]
        tail = d.tails[k]
        tail_white = not d.is_black(Q.origin(tail))
        if c == RED and tail_white:
            c = GREEN
        color[x] = color[y] = c
    outer_darts = set(Q.faces().outer)
    for q in outer_darts:
        color[q] = color[Q.alpha[q]] = None

    for k, (x, y) in enumerate(Q.edges):
        tail = d.tails[k]
        head = Q.alpha[tail]
        if d.colors[k] != BLUE or not d.is_black(Q.origin(tail)):
            continue
        if Q.origin(head) in (left, u):
            continue
        B.contract(head)  # keep the white vertex's key
    s_side = next(q for q in Q.rotation(d.s) if Q.target(q) == left)
    B.contract(s_side)

    order = [d.s, d.t, u] + [
        v for v in range(Q.vertex_count) if v in B.rot and v not in (d.s, d.t, u)
    ]
    root = next(q for q in Q.rotation(d.s) if Q.target(q) == u)
    cmap, number = B.freeze(order, root)
    back = {n: k for k, n in number.items()}
    colors = tuple(color[back[x]] for x, _ in cmap.edges)
    tails = []
    for (x, y), c in zip(cmap.edges, colors):
        if c is None:
            tails.append(None)
        else:
            tails.append(x if d.is_tail[back[x]] else y)
    return SchnyderWood(cmap, colors, tuple(tails), 0, 1, 2)


# ---------------------------------------------------------------------------
# woods <-> Dyck pairs
# ---------------------------------------------------------------------------


def _blue_children(w: SchnyderWood) -> dict[int, list[tuple[int, int]]]:
    """Clockwise blue children of each vertex, paired with the dart leading to them."""
    M = w.map
    kids: dict[int, list[tuple[int, int]]] = {}
    for v in range(M.vertex_count):
        if v in (w.t, w.u):
            continue
        if v == w.s:
            ring = M.rotation_cw(v, M.sigma_inv[w.root_dart()])
        else:
            out_blue = next(d for d in M.rotation(v) if w.is_tail[d] and w.color(d) == BLUE)
            ring = M.rotation_cw(v, out_blue)[1:]
        kids[v] = [
            (M.target(d), d) for d in ring if w.color(d) == BLUE and not w.is_tail[d]
        ]
    return kids


def schnyder_to_dyck_pair(w: SchnyderWood) -> DyckPair:
    """Lower path: the blue tree; upper path: green edges leaving, red edges entering."""
    M = w.map
    kids = _blue_children(w)
    lower, upper = [], []

    def enter(v: int) -> None:
        out_blue = next(d for d in M.rotation(v) if w.is_tail[d] and w.color(d) == BLUE)
        for d in M.rotation_cw(v, out_blue)[1:]:
            if w.is_tail[d] and w.color(d) == GREEN:
                upper.append("U")
                return
            if not w.is_tail[d] and w.color(d) == RED:
                upper.append("D")

    stack = [iter(kids[w.s])]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            if stack:
                lower.append("D")
            continue
        v, _ = nxt
        lower.append("U")
        enter(v)
        stack.append(iter(kids[v]))
    size = len(lower)
    upper += ["D"] * (size - len(upper))
    return DyckPair("".join(lower), "".join(upper))


def dyck_pair_from_paths(p: PathTriple) -> DyckPair:
    """Rotate the middle and upper paths of a type ``(n, n)`` triple into Dyck words."""
    rotate = str.maketrans("UR", "UD")
    return DyckPair(p.middle.steps.translate(rotate), p.upper.steps.translate(rotate))


def dyck_pair_to_paths(p: DyckPair) -> PathTriple:
    """Upright triple whose lower path mirrors the middle one, last step moved first."""
    validate_dyck_pair(p)
    unrotate = str.maketrans("UD", "UR")
    middle = p.lower.translate(unrotate)
    upper = p.upper.translate(unrotate)
    mirrored = middle.translate(str.maketrans("UR", "RU"))
    lower = mirrored[-1:] + mirrored[:-1]
    return PathTriple.from_steps(upper, middle, lower)


def schnyder_to_dyck_pair_via_paths(w: SchnyderWood) -> DyckPair:
    return dyck_pair_from_paths(phi(alpha(w)))


def dyck_pair_to_schnyder(p: DyckPair) -> SchnyderWood:
    return beta(psi(dyck_pair_to_paths(p)))
