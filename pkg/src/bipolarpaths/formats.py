"""Line-oriented text formats for every object in the package.

Blank lines and lines starting with ``#`` are ignored.  Vertices are
referred to by their 0-based position among the ``vertex`` lines.
"""

from __future__ import annotations

from collections.abc import Iterator

from .bipolar import BipolarOrientation
from .comb_map import CombMap
from .encode import PathTriple, check_endpoints
from .errors import FormatError, InvariantError
from .schnyder import DyckPair, SchnyderWood
from .separating import SeparatingDecomposition

Parsed = CombMap | BipolarOrientation | SeparatingDecomposition | SchnyderWood | PathTriple | DyckPair


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line.split())
    if not out:
        raise FormatError(None, "empty input")
    return out


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(x) for x in tokens]
    except ValueError:
        raise FormatError(what, f"expected integers, got {' '.join(tokens)!r}") from None


def _expect(rows: Iterator[list[str]], keyword: str) -> list[str]:
    row = next(rows, None)
    if row is None or row[0] != keyword:
        found = "end of input" if row is None else row[0]
        raise FormatError(keyword, f"expected a '{keyword}' line, found {found}")
    return row[1:]


# ---------------------------------------------------------------------------
# maps
# ---------------------------------------------------------------------------


def dump_map(cmap: CombMap) -> str:
    lines = [f"map v1 {cmap.dart_count} {cmap.root}"]
    lines.append("alpha " + " ".join(f"{d} {e}" for d, e in cmap.edges))
    lines += ["vertex " + " ".join(map(str, cyc)) for cyc in cmap.vertices]
    return "\n".join(lines) + "\n"


def _read_map(rows: list[list[str]]) -> tuple[CombMap, list[list[str]]]:
    head = rows[0]
    if head[:2] != ["map", "v1"] or len(head) != 4:
        raise FormatError(" ".join(head), "expected 'map v1 <dart_count> <root>'")
    dart_count, root = _ints(head[2:], "map header")
    if len(rows) < 2 or rows[1][0] != "alpha":
        raise FormatError("alpha", "missing alpha line")
    flat = _ints(rows[1][1:], "alpha")
    if len(flat) % 2:
        raise FormatError("alpha", "odd number of darts")
    pairs = list(zip(flat[::2], flat[1::2]))
    k = 2
    cycles = []
    while k < len(rows) and rows[k][0] == "vertex":
        cycles.append(_ints(rows[k][1:], "vertex"))
        k += 1
    return CombMap(dart_count, pairs, cycles, root), rows[k:]


def load_map(text: str) -> CombMap:
    cmap, rest = _read_map(_lines(text))
    if rest:
        raise FormatError(rest[0][0], "unexpected trailing line")
    return cmap


# ---------------------------------------------------------------------------
# orientations, decompositions, woods
# ---------------------------------------------------------------------------


def dump_orientation(o: BipolarOrientation) -> str:
    return dump_map(o.map) + f"poles {o.s} {o.t}\ntails {' '.join(map(str, o.tails))}\n"


def dump_decomposition(d: SeparatingDecomposition) -> str:
    lines = [f"poles {d.s} {d.t}"]
    for (x, y), c, tail in zip(d.map.edges, d.colors, d.tails):
        lines.append(f"edge {x} {y} {c} {tail}")
    lines.append("class " + " ".join(d.classes))
    return dump_map(d.map) + "\n".join(lines) + "\n"


def dump_wood(w: SchnyderWood) -> str:
    lines = [f"outer {w.s} {w.t} {w.u}"]
    for (x, y), c, tail in zip(w.map.edges, w.colors, w.tails):
        lines.append(f"edge {x} {y} {c or '-'} {'-' if tail is None else tail}")
    return dump_map(w.map) + "\n".join(lines) + "\n"


def _edge_rows(cmap: CombMap, rows: list[list[str]], colors: str) -> tuple[list, list]:
    if len(rows) != cmap.edge_count:
        raise FormatError(len(rows), f"expected {cmap.edge_count} edge lines")
    out_colors, out_tails = [], []
    for k, row in enumerate(rows):
        if row[0] != "edge" or len(row) != 5:
            raise FormatError(" ".join(row), "expected 'edge <dart> <dart> <colour> <tail>'")
        x, y = _ints(row[1:3], "edge")
        if (x, y) != cmap.edges[k]:
            raise FormatError((x, y), f"edge lines must follow the alpha pairs, expected {cmap.edges[k]}")
        if row[3] not in colors:
            raise FormatError(row[3], f"colour must be one of {colors}")
        out_colors.append(None if row[3] == "-" else row[3])
        out_tails.append(None if row[4] == "-" else _ints(row[4:], "tail")[0])
    return out_colors, out_tails


def _load_structured(rows: list[list[str]]) -> Parsed:
    cmap, rest = _read_map(rows)
    if not rest:
        return cmap
    it = iter(rest)
    key = rest[0][0]
    if key == "outer":
        s, t, u = _ints(next(it)[1:], "outer")
        colors, tails = _edge_rows(cmap, list(it), "BRG-")
        return SchnyderWood(cmap, tuple(colors), tuple(tails), s, t, u)
    s, t = _ints(_expect(it, "poles"), "poles")
    rest = list(it)
    if rest and rest[0][0] == "tails":
        if len(rest) != 1:
            raise FormatError(rest[1][0], "unexpected trailing line")
        return BipolarOrientation(cmap, tuple(_ints(rest[0][1:], "tails")), s, t)
    if not rest or rest[-1][0] != "class":
        raise FormatError("class", "missing tails or class line")
    colors, tails = _edge_rows(cmap, rest[:-1], "BR")
    classes = tuple(rest[-1][1:])
    if None in tails:
        raise FormatError("-", "every decomposition edge needs a tail")
    return SeparatingDecomposition(cmap, tuple(colors), tuple(tails), classes, s, t)


def load_orientation(text: str) -> BipolarOrientation:
    return _typed(text, BipolarOrientation)


def load_decomposition(text: str) -> SeparatingDecomposition:
    return _typed(text, SeparatingDecomposition)


def load_wood(text: str) -> SchnyderWood:
    return _typed(text, SchnyderWood)


# ---------------------------------------------------------------------------
# path triples and Dyck pairs
# ---------------------------------------------------------------------------


def dump_triple(p: PathTriple) -> str:
    i, j = check_endpoints(p)
    upper, middle, lower = p.steps()
    lines = ["triple v1", f"type {i} {j}", f"upper {upper}", f"middle {middle}", f"lower {lower}"]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _steps(row: list[str]) -> str:
    if len(row) > 1:
        raise FormatError(" ".join(row), "step string must not contain spaces")
    return row[0] if row else ""


def _load_triple(rows: list[list[str]]) -> PathTriple:
    it = iter(rows[1:])
    i, j = _ints(_expect(it, "type"), "type")
    upper = _steps(_expect(it, "upper"))
    middle = _steps(_expect(it, "middle"))
    lower = _steps(_expect(it, "lower"))
    p = PathTriple.from_steps(upper, middle, lower)
    if check_endpoints(p) != (i, j):
        raise FormatError((i, j), f"declared type differs from the paths' type {p.type()}")
    return p


def dump_dyck_pair(p: DyckPair) -> str:
    lines = ["dyckpair v1", f"n {p.n}", f"lower {p.lower}", f"upper {p.upper}"]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _load_dyck_pair(rows: list[list[str]]) -> DyckPair:
    it = iter(rows[1:])
    (n,) = _ints(_expect(it, "n"), "n")
    p = DyckPair(_steps(_expect(it, "lower")), _steps(_expect(it, "upper")))
    if len(p.lower) != 2 * n or len(p.upper) != 2 * n:
        raise FormatError(n, "declared n differs from the word lengths")
    return p


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def load_any(text: str) -> Parsed:
    """Parse any supported format, recognised from its first line."""
    rows = _lines(text)
    head = rows[0][:2]
    try:
        if head == ["triple", "v1"]:
            return _load_triple(rows)
        if head == ["dyckpair", "v1"]:
            return _load_dyck_pair(rows)
        if head == ["map", "v1"]:
            return _load_structured(rows)
    except InvariantError:
        raise
    except (ValueError, StopIteration) as exc:
        raise FormatError(None, str(exc)) from exc
    raise FormatError(" ".join(rows[0]), "unknown header")


def _typed(text: str, kind: type):
    obj = load_any(text)
    if not isinstance(obj, kind):
        raise FormatError(type(obj).__name__, f"expected {kind.__name__}")
    return obj


def load_triple(text: str) -> PathTriple:
    return _typed(text, PathTriple)


def load_dyck_pair(text: str) -> DyckPair:
    return _typed(text, DyckPair)


def dump(obj: Parsed) -> str:
    if isinstance(obj, PathTriple):
        return dump_triple(obj)
    if isinstance(obj, DyckPair):
        return dump_dyck_pair(obj)
    if isinstance(obj, BipolarOrientation):
        return dump_orientation(obj)
    if isinstance(obj, SeparatingDecomposition):
        return dump_decomposition(obj)
    if isinstance(obj, SchnyderWood):
        return dump_wood(obj)
    if isinstance(obj, CombMap):
        return dump_map(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")
