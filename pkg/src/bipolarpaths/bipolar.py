"""Plane bipolar orientations: validation, canonical rooting, exhaustive search."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from ._budget import check_budget
from .comb_map import CombMap, canonical_code
from .errors import (
    CyclicOrientation,
    ExtraSink,
    ExtraSource,
    FaceNotTwoPaths,
    FormatError,
    PoleNotOnOuterFace,
    VertexBlocksViolated,
)

MAX_ENUM_EDGES = 6


class OrientationStats(NamedTuple):
    i: int  # non-pole vertices
    j: int  # inner faces


@dataclass(frozen=True, eq=False)
class BipolarOrientation:
    """A planar map with one tail dart chosen per edge, and poles ``s``, ``t``.

    ``tails[k]`` is the dart of edge ``k`` sitting at the edge's tail.
    """

    map: CombMap
    tails: tuple[int, ...]
    s: int
    t: int

    @cached_property
    def is_tail(self) -> tuple[bool, ...]:
        flags = [False] * (self.map.dart_count + 1)
        for d in self.tails:
            flags[d] = True
        return tuple(flags)

    def stats(self) -> OrientationStats:
        return OrientationStats(
            self.map.vertex_count - 2, len(self.map.faces().faces) - 1
        )

    def code(self) -> tuple:
        """Canonical code; equal codes mean equal plane bipolar orientations."""
        return canonical_code(self.map, self.is_tail, root=canonical_root(self))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipolarOrientation):
            return NotImplemented
        return self.code() == other.code()

    def __hash__(self) -> int:
        return hash(self.code())


def outer_source_dart(o: BipolarOrientation) -> int:
    """The dart at ``s`` lying on the outer face orbit (the rightmost edge out of ``s``)."""
    cmap = o.map
    for d in cmap.faces().outer:
        if cmap.origin(d) == o.s:
            return d
    raise PoleNotOnOuterFace(o.s)


def canonical_root(o: BipolarOrientation) -> int:
    """The leftmost outgoing dart at ``s``: the outer face lies on its left."""
    return o.map.sigma_inv[outer_source_dart(o)]


def normalized(o: BipolarOrientation) -> BipolarOrientation:
    """Same orientation, with the map rooted at the rightmost dart out of ``s``."""
    r = outer_source_dart(o)
    if r == o.map.root:
        return o
    return BipolarOrientation(o.map.with_root(r), o.tails, o.s, o.t)


def _check_shape(o: BipolarOrientation) -> None:
    cmap = o.map
    if len(o.tails) != cmap.edge_count:
        raise FormatError(len(o.tails), "need exactly one tail dart per edge")
    for k, d in enumerate(o.tails):
        if d not in cmap.edges[k]:
            raise FormatError(d, f"tail dart is not a dart of edge {k}")
    nv = cmap.vertex_count
    if not (0 <= o.s < nv and 0 <= o.t < nv) or o.s == o.t:
        raise FormatError((o.s, o.t), "poles must be two distinct vertices")


def _cyclic_changes(flags: list[bool]) -> int:
    return sum(flags[k] != flags[k - 1] for k in range(len(flags)))


def validate_bipolar(o: BipolarOrientation) -> OrientationStats:
    """Check every plane-bipolar condition and return ``(i, j)``."""
    _check_shape(o)
    cmap = o.map
    nv = cmap.vertex_count

    succ: list[list[int]] = [[] for _ in range(nv)]
    indeg = [0] * nv
    for d in o.tails:
        u, v = cmap.origin(d), cmap.target(d)
        succ[u].append(v)
        indeg[v] += 1

    # Kahn's algorithm
    remaining = indeg[:]
    stack = [v for v in range(nv) if remaining[v] == 0]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        for v in succ[u]:
            remaining[v] -= 1
            if remaining[v] == 0:
                stack.append(v)
    if seen != nv:
        raise CyclicOrientation(nv - seen, "vertices lie on or behind a directed cycle")

    for v in range(nv):
        if indeg[v] == 0 and v != o.s:
            raise ExtraSource(v)
    for v in range(nv):
        if not succ[v] and v != o.t:
            raise ExtraSink(v)
    if indeg[o.s] != 0:
        raise ExtraSource(o.s, "declared source has an incoming edge")
    if succ[o.t]:
        raise ExtraSink(o.t, "declared sink has an outgoing edge")

    outer_vertices = {cmap.origin(d) for d in cmap.faces().outer}
    for p in (o.s, o.t):
        if p not in outer_vertices:
            raise PoleNotOnOuterFace(p)

    # On a planar map the two local checks below follow from the global ones;
    # they stay as a guard against inconsistent input.
    check_vertex_blocks(o)
    check_face_paths(o)
    return o.stats()


def check_vertex_blocks(o: BipolarOrientation) -> None:
    """Around each non-pole vertex: one incoming block and one outgoing block."""
    tail = o.is_tail
    for v in range(o.map.vertex_count):
        if v in (o.s, o.t):
            continue
        if _cyclic_changes([tail[d] for d in o.map.rotation(v)]) != 2:
            raise VertexBlocksViolated(v)


def check_face_paths(o: BipolarOrientation) -> None:
    """Each inner face is bounded by two directed paths."""
    tail = o.is_tail
    fp = o.map.faces()
    for k, face in enumerate(fp.faces):
        if k != fp.outer_index and _cyclic_changes([tail[d] for d in face]) != 2:
            raise FaceNotTwoPaths(k)


# ---------------------------------------------------------------------------
# exhaustive generation (oracle for the counting formula)
# ---------------------------------------------------------------------------


def _unrooted_key(cmap: CombMap) -> tuple:
    return min(canonical_code(cmap, root=r) for r in cmap.darts())


def _extensions(cmap: CombMap):
    """Every map obtained by adding one edge: a pendant edge, or a chord of a face."""
    n = cmap.dart_count
    x, y = n + 1, n + 2
    pairs = list(cmap.edges) + [(x, y)]
    cycles = [list(c) for c in cmap.vertices]

    def inserted(at: list[tuple[int, int]]) -> list[list[int]]:
        # at: (dart d, new dart) -> place new dart just before d (ccw)
        out = [c[:] for c in cycles]
        for d, new in at:
            c = out[cmap.origin(d)]
            c.insert(c.index(d), new)
        return out

    for d in cmap.darts():
        yield CombMap(n + 2, pairs, inserted([(d, x)]) + [[y]], cmap.root)
    for face in cmap.faces().faces:
        for a in range(len(face)):
            d1 = face[a]
            c = [cc[:] for cc in cycles]
            ring = c[cmap.origin(d1)]
            k = ring.index(d1)
            ring[k:k] = [x, y]
            yield CombMap(n + 2, pairs, c, cmap.root)
            for b in range(a + 1, len(face)):
                yield CombMap(n + 2, pairs, inserted([(d1, x), (face[b], y)]), cmap.root)


def planar_maps(max_edges: int) -> dict[int, list[CombMap]]:
    """Unrooted planar maps with 1..max_edges edges, one representative each."""
    layers: dict[int, list[CombMap]] = {
        1: [CombMap(2, [(1, 2)], [[1], [2]], 1), CombMap(2, [(1, 2)], [[1, 2]], 1)]
    }
    for m in range(2, max_edges + 1):
        found: dict[tuple, CombMap] = {}
        for base in layers[m - 1]:
            for ext in _extensions(base):
                key = _unrooted_key(ext)
                if key not in found:
                    found[key] = ext
        layers[m] = list(found.values())
    return {m: layers[m] for m in range(1, max_edges + 1)}


def _orientations_of(cmap: CombMap):
    m = cmap.edge_count
    nv = cmap.vertex_count
    outer_vertices = {cmap.origin(d) for d in cmap.faces().outer}
    for mask in range(1 << m):
        tails = tuple(cmap.edges[k][(mask >> k) & 1] for k in range(m))
        indeg = [0] * nv
        outdeg = [0] * nv
        for d in tails:
            outdeg[cmap.origin(d)] += 1
            indeg[cmap.target(d)] += 1
        sources = [v for v in range(nv) if indeg[v] == 0]
        sinks = [v for v in range(nv) if outdeg[v] == 0]
        if len(sources) != 1 or len(sinks) != 1:
            continue
        s, t = sources[0], sinks[0]
        if s == t or s not in outer_vertices or t not in outer_vertices:
            continue
        o = BipolarOrientation(cmap, tails, s, t)
        try:
            validate_bipolar(o)
        except Exception:
            continue
        yield o


def enumerate_bipolar(max_edges: int) -> list[BipolarOrientation]:
    """All plane bipolar orientations with at most ``max_edges`` edges, each once.

    Built independently of the bijection: all planar maps are grown edge by
    edge, every face is tried as the outer face, every edge direction is
    tried, and survivors of :func:`validate_bipolar` are deduplicated by
    canonical code.
    """
    check_budget(max_edges, MAX_ENUM_EDGES, "enumerate_bipolar max_edges")
    if max_edges < 1:
        return []
    found: dict[tuple, BipolarOrientation] = {}
    for maps in planar_maps(max_edges).values():
        for cmap in maps:
            for face in cmap.faces().faces:
                rooted = cmap.with_root(face[0])
                for o in _orientations_of(rooted):
                    o = normalized(o)
                    found.setdefault(o.code(), o)
    return sorted(
        found.values(),
        key=lambda o: (o.map.edge_count, o.stats(), o.code()),
    )


def count_table(orientations) -> Counter:
    """Histogram of ``(i, j)`` over a collection of orientations."""
    return Counter(tuple(o.stats()) for o in orientations)
