"""Command-line entry point: ``bipolarpaths <subcommand> ...``."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable, Sequence

from .bipolar import BipolarOrientation, count_table, enumerate_bipolar, validate_bipolar
from .comb_map import CombMap
from .counting import (
    baxter_theta,
    enumerate_triples,
    gv_determinant,
    sample_triple,
)
from .decode import psi
from .encode import (
    PathTriple,
    check_admissible,
    check_endpoints,
    contour_word,
    is_nonintersecting,
    phi,
    project,
    red_edges_ordered,
)
from .errors import FormatError, Intersecting, InvariantError
from .formats import dump, load_any, load_dyck_pair, load_orientation, load_triple, load_wood
from .render import export_dot, render_triple
from .schnyder import (
    DyckPair,
    SchnyderWood,
    alpha,
    dyck_pair_to_schnyder,
    is_contractible,
    schnyder_to_dyck_pair,
    validate_dyck_pair,
    validate_schnyder,
)
from .separating import SeparatingDecomposition, from_separating, to_separating, validate_separating


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(path, exc.strerror) from exc


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_count(args: argparse.Namespace) -> int:
    for i in range(args.imax + 1):
        for j in range(args.jmax + 1):
            row = [i, j, baxter_theta(i, j), gv_determinant(i, j)]
            if args.brute:
                row.append(sum(1 for _ in enumerate_triples(i, j)))
            print("\t".join(map(str, row)))
    return 0


def _checks_for(obj) -> list[tuple[str, Callable[[], object]]]:
    if isinstance(obj, BipolarOrientation):
        return [
            ("bipolar", lambda: validate_bipolar(obj)),
            ("separating", lambda: validate_separating(to_separating(obj))),
            ("roundtrip", lambda: from_separating(to_separating(obj)) == obj or _fail("roundtrip")),
        ]
    if isinstance(obj, SeparatingDecomposition):
        return [
            ("separating", lambda: validate_separating(obj)),
            ("contour-word", lambda: check_admissible(project(contour_word(obj)).triple)),
            ("red-order", lambda: red_edges_ordered(obj) or _fail("red-order")),
            ("bipolar", lambda: validate_bipolar(from_separating(obj))),
            ("contractible", lambda: is_contractible(obj) or _fail("contractible")),
        ]
    if isinstance(obj, SchnyderWood):
        return [
            ("schnyder", lambda: validate_schnyder(obj)),
            ("contractible", lambda: is_contractible(alpha(obj)) or _fail("contractible")),
        ]
    if isinstance(obj, PathTriple):
        return [
            ("endpoints", lambda: check_endpoints(obj)),
            ("non-intersecting", lambda: is_nonintersecting(obj) or _fail("intersecting")),
            ("decodes", lambda: validate_separating(psi(obj))),
        ]
    if isinstance(obj, DyckPair):
        return [("dyck-pair", lambda: validate_dyck_pair(obj))]
    if isinstance(obj, CombMap):
        return [("map", lambda: obj)]
    raise FormatError(type(obj).__name__, "nothing to verify")


def _fail(what: str):
    if what == "intersecting":
        raise Intersecting()
    raise InvariantError(None, f"{what} check failed")


def cmd_verify(args: argparse.Namespace) -> int:
    obj = load_any(_read(args.file))
    status = 0
    print(f"object\t{type(obj).__name__}")
    for name, check in _checks_for(obj):
        try:
            check()
        except InvariantError as exc:
            print(f"FAIL\t{name}\t{exc}")
            status = 1
            if name in ("bipolar", "separating", "schnyder", "endpoints", "dyck-pair"):
                break
        else:
            print(f"ok\t{name}")
    return status


def cmd_encode(args: argparse.Namespace) -> int:
    o = load_orientation(_read(args.file))
    validate_bipolar(o)
    sys.stdout.write(dump(phi(to_separating(o))))
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    p = load_triple(_read(args.file))
    sys.stdout.write(dump(from_separating(psi(p))))
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    n = args.max_sum
    triples = 0
    for total in range(n + 1):
        for i in range(total + 1):
            for p in enumerate_triples(i, total - i):
                d = psi(p)
                validate_separating(d)
                if phi(d) != p:
                    print(f"FAIL\tphi(psi(T)) != T\t{p.steps()}")
                    return 1
                triples += 1
    print(f"ok\tphi.psi\t{triples} triples with i+j <= {n}")

    orientations = enumerate_bipolar(n + 1)
    table = count_table(orientations)
    for total in range(n + 1):
        for i in range(total + 1):
            if table[(i, total - i)] != baxter_theta(i, total - i):
                print(f"FAIL\tcount\t({i}, {total - i})")
                return 1
    for o in orientations:
        d = to_separating(o)
        if from_separating(d) != o or psi(phi(d)) != d:
            print(f"FAIL\tpsi.phi\t{o.code()}")
            return 1
    print(f"ok\tpsi.phi\t{len(orientations)} orientations with i+j <= {n}")
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    p = sample_triple(args.i, args.j, args.seed)
    sys.stdout.write(dump(from_separating(psi(p)) if args.orientation else p))
    return 0


def cmd_schnyder_encode(args: argparse.Namespace) -> int:
    w = load_wood(_read(args.file))
    validate_schnyder(w)
    sys.stdout.write(dump(schnyder_to_dyck_pair(w)))
    return 0


def cmd_schnyder_decode(args: argparse.Namespace) -> int:
    p = load_dyck_pair(_read(args.file))
    sys.stdout.write(dump(dyck_pair_to_schnyder(p)))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    obj = load_any(_read(args.file))
    if isinstance(obj, PathTriple):
        sys.stdout.write(render_triple(obj))
    elif isinstance(obj, (BipolarOrientation, SeparatingDecomposition, SchnyderWood)):
        sys.stdout.write(export_dot(obj))
    else:
        raise FormatError(type(obj).__name__, "only triples and maps with structure can be rendered")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bipolarpaths",
        description="Plane bipolar orientations, separating decompositions and lattice-path triples.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the table of counts as TSV")
    p.add_argument("--imax", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="add a column counted by enumeration")
    p.set_defaults(func=cmd_count)

    def file_command(name: str, func, help_text: str) -> argparse.ArgumentParser:
        q = sub.add_parser(name, help=help_text)
        q.add_argument("file", help="input file, or - for standard input")
        q.set_defaults(func=func)
        return q

    file_command("verify", cmd_verify, "validate any supported file")
    file_command("encode", cmd_encode, "orientation file -> triple file")
    file_command("decode", cmd_decode, "triple file -> orientation file")
    file_command("schnyder-encode", cmd_schnyder_encode, "wood file -> dyckpair file")
    file_command("schnyder-decode", cmd_schnyder_decode, "dyckpair file -> wood file")
    file_command("render", cmd_render, "triple -> SVG; orientation/decomposition/wood -> DOT")

    p = sub.add_parser("roundtrip", help="exhaustive bijection checks")
    p.add_argument("--max-sum", type=int, default=4, help="largest i+j to check")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("sample", help="uniform random triple of a given type")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--orientation", action="store_true", help="print the decoded orientation instead")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
