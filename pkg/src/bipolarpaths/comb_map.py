"""Rooted planar maps as rotation systems.

A map on ``2m`` darts numbered ``1..2m`` is given by two permutations:

* ``alpha`` pairs the two darts of each edge;
* ``sigma`` sends a dart to the next dart counterclockwise around its origin.

Faces are the orbits of ``phi = sigma o alpha``.  The face traced by a dart
lies on the *right* of that dart, so an inner face orbit runs clockwise
around the face and the outer orbit runs counterclockwise around the map.
The outer face is the orbit containing the root dart.  Every handedness
statement elsewhere in the package is phrased relative to this convention.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import BadRoot, InvalidPermutation, NonPlanar, NotConnected, NotInvolution


@dataclass(frozen=True)
class FacePartition:
    faces: tuple[tuple[int, ...], ...]
    outer_index: int
    face_of: dict[int, int] = field(repr=False, compare=False)

    @property
    def outer(self) -> tuple[int, ...]:
        return self.faces[self.outer_index]

    def inner(self) -> list[tuple[int, ...]]:
        return [f for k, f in enumerate(self.faces) if k != self.outer_index]

    def degrees(self) -> list[int]:
        return [len(f) for f in self.faces]


class CombMap:
    """Immutable, validated rooted planar map.

    Vertices are numbered ``0..V-1`` in the order their rotation cycles were
    given; edges ``0..m-1`` in the order of the ``alpha`` pairs.
    """

    def __init__(
        self,
        dart_count: int,
        alpha_pairs: Sequence[tuple[int, int]],
        sigma_cycles: Sequence[Sequence[int]],
        root: int,
    ) -> None:
        n = dart_count
        if n < 2 or n % 2:
            raise NotInvolution(n, "dart count must be a positive even integer")
        darts = range(1, n + 1)

        alpha = [0] * (n + 1)
        edges = []
        for pair in alpha_pairs:
            d, e = pair
            for x in (d, e):
                if not 1 <= x <= n:
                    raise NotInvolution(x, "dart out of range")
                if alpha[x]:
                    raise NotInvolution(x, "dart paired twice")
            if d == e:
                raise NotInvolution(d, "fixed point")
            alpha[d], alpha[e] = e, d
            edges.append((d, e))
        missing = [d for d in darts if not alpha[d]]
        if missing:
            raise NotInvolution(missing[0], "dart left unpaired")

        sigma = [0] * (n + 1)
        vertex_of = [-1] * (n + 1)
        vertices = []
        for v, cycle in enumerate(sigma_cycles):
            cycle = tuple(cycle)
            if not cycle:
                raise InvalidPermutation(v, "empty vertex cycle")
            for k, d in enumerate(cycle):
                if not 1 <= d <= n or vertex_of[d] != -1:
                    raise InvalidPermutation(d, "sigma cycles must partition the darts")
                vertex_of[d] = v
                sigma[d] = cycle[(k + 1) % len(cycle)]
            vertices.append(cycle)
        missing = [d for d in darts if vertex_of[d] == -1]
        if missing:
            raise InvalidPermutation(missing[0], "dart missing from sigma")

        if not 1 <= root <= n:
            raise BadRoot(root)

        sigma_inv = [0] * (n + 1)
        for d in darts:
            sigma_inv[sigma[d]] = d
        edge_of = [-1] * (n + 1)
        for k, (d, e) in enumerate(edges):
            edge_of[d] = edge_of[e] = k

        self.dart_count = n
        self.alpha = tuple(alpha)
        self.sigma = tuple(sigma)
        self.sigma_inv = tuple(sigma_inv)
        self.root = root
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.vertex_of = tuple(vertex_of)
        self.edge_of = tuple(edge_of)

        # connectivity of <alpha, sigma>
        seen = {root}
        queue = deque([root])
        while queue:
            d = queue.popleft()
            for e in (alpha[d], sigma[d]):
                if e not in seen:
                    seen.add(e)
                    queue.append(e)
        if len(seen) != n:
            raise NotConnected(n - len(seen), "darts unreachable from the root")

        euler = len(vertices) - n // 2 + len(self.faces().faces)
        if euler != 2:
            raise NonPlanar((2 - euler) // 2, "genus")

    # -- basic accessors ------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self.dart_count // 2

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def darts(self) -> range:
        return range(1, self.dart_count + 1)

    def phi(self, d: int) -> int:
        return self.sigma[self.alpha[d]]

    def origin(self, d: int) -> int:
        return self.vertex_of[d]

    def target(self, d: int) -> int:
        return self.vertex_of[self.alpha[d]]

    def rotation(self, v: int) -> tuple[int, ...]:
        """Darts around ``v`` in counterclockwise order."""
        return self.vertices[v]

    def rotation_cw(self, v: int, start: int | None = None) -> list[int]:
        """Darts around ``v`` in clockwise order, beginning with ``start``."""
        d0 = self.vertices[v][0] if start is None else start
        out = [d0]
        d = self.sigma_inv[d0]
        while d != d0:
            out.append(d)
            d = self.sigma_inv[d]
        return out

    def faces(self) -> FacePartition:
        return self._faces

    @cached_property
    def _faces(self) -> FacePartition:
        face_of: dict[int, int] = {}
        faces = []
        for d0 in self.darts():
            if d0 in face_of:
                continue
            orbit = []
            d = d0
            while d not in face_of:
                face_of[d] = len(faces)
                orbit.append(d)
                d = self.phi(d)
            faces.append(tuple(orbit))
        return FacePartition(tuple(faces), face_of[self.root], face_of)

    def face_orbit(self, d: int) -> list[int]:
        """The face orbit starting at ``d``."""
        out = [d]
        e = self.phi(d)
        while e != d:
            out.append(e)
            e = self.phi(e)
        return out

    def is_simple(self) -> bool:
        seen = set()
        for d, e in self.edges:
            u, v = self.vertex_of[d], self.vertex_of[e]
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def with_root(self, root: int) -> CombMap:
        return CombMap(self.dart_count, self.edges, self.vertices, root)

    def __repr__(self) -> str:
        return (
            f"CombMap(darts={self.dart_count}, vertices={self.vertex_count}, "
            f"faces={len(self.faces().faces)}, root={self.root})"
        )


def build_map(
    dart_count: int,
    alpha: Sequence[tuple[int, int]],
    sigma: Sequence[Sequence[int]],
    root: int,
) -> CombMap:
    """Validate and build a map; raises a :class:`MapError` subclass on bad input."""
    return CombMap(dart_count, alpha, sigma, root)


def canonical_code(
    cmap: CombMap,
    decorations: Callable[[int], Hashable] | Sequence[Hashable] | None = None,
    root: int | None = None,
) -> tuple:
    """Breadth-first canonical form of a rooted, decorated map.

    Two rooted maps get equal codes iff some orientation-preserving dart
    bijection sends root to root and commutes with ``alpha``, ``sigma`` and
    the decorations.
    """
    r = cmap.root if root is None else root
    if decorations is None:
        deco = lambda d: None  # noqa: E731
    elif callable(decorations):
        deco = decorations
    else:
        deco = decorations.__getitem__

    label = {r: 0}
    order = [r]
    k = 0
    while k < len(order):
        d = order[k]
        k += 1
        for e in (cmap.alpha[d], cmap.sigma[d]):
            if e not in label:
                label[e] = len(order)
                order.append(e)
    body = tuple(
        (label[cmap.alpha[d]], label[cmap.sigma[d]], deco(d)) for d in order
    )
    return (cmap.dart_count, body)


class MapBuilder:
    """Mutable scratch map used by constructions; :meth:`freeze` validates it.

    Vertices are arbitrary hashable keys holding counterclockwise dart lists.
    Darts are arbitrary hashable keys too; they are renumbered on freezing.
    """

    def __init__(self) -> None:
        self.rot: dict[Hashable, list[Hashable]] = {}
        self.mate: dict[Hashable, Hashable] = {}
        self.origin: dict[Hashable, Hashable] = {}
        self._next = 0

    def new_dart(self) -> int:
        self._next += 1
        return -self._next

    def add_vertex(self, key: Hashable, ccw: Iterable[Hashable] = ()) -> None:
        self.rot[key] = list(ccw)
        for d in self.rot[key]:
            self.origin[d] = key

    def pair(self, d: Hashable, e: Hashable) -> None:
        self.mate[d] = e
        self.mate[e] = d

    def contract(self, keep_dart: Hashable) -> None:
        """Contract the edge of ``keep_dart`` into the origin of ``keep_dart``."""
        x = keep_dart
        y = self.mate[x]
        p, q = self.origin[x], self.origin[y]
        if p == q:
            raise ValueError("cannot contract a loop")
        pl, ql = self.rot[p], self.rot[q]
        i, j = pl.index(x), ql.index(y)
        merged = pl[i + 1 :] + pl[:i] + ql[j + 1 :] + ql[:j]
        del self.rot[q]
        del self.mate[x], self.mate[y], self.origin[x], self.origin[y]
        self.rot[p] = merged
        for d in merged:
            self.origin[d] = p

    def freeze(
        self,
        vertex_order: Sequence[Hashable],
        root: Hashable,
        edge_order: Sequence[Hashable] | None = None,
    ) -> tuple[CombMap, dict[Hashable, int]]:
        """Build a :class:`CombMap`; returns it with the dart renumbering.

        Darts are numbered vertex by vertex in ``vertex_order``.  Edges follow
        ``edge_order`` (one representative dart per edge) or discovery order.
        """
        if set(vertex_order) != set(self.rot):
            raise ValueError("vertex_order must list every vertex exactly once")
        number: dict[Hashable, int] = {}
        cycles = []
        for v in vertex_order:
            cyc = []
            for d in self.rot[v]:
                number[d] = len(number) + 1
                cyc.append(number[d])
            cycles.append(cyc)
        if edge_order is None:
            pairs, done = [], set()
            for v in vertex_order:
                for d in self.rot[v]:
                    if d not in done:
                        e = self.mate[d]
                        done.update((d, e))
                        pairs.append((number[d], number[e]))
        else:
            pairs = [(number[d], number[self.mate[d]]) for d in edge_order]
        return CombMap(len(number), pairs, cycles, number[root]), number
