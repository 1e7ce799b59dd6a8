"""Command-line interface.

Files are .smt/.kmt documents; ``-`` reads stdin, so commands compose in
pipelines (``spheremosaic maxcross --n 2 | spheremosaic classify``).
Exit codes: 0 success, 1 user error (including unparsable input and
failed validation), 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import formats, render as render_mod
from .errors import (
    BudgetExceeded,
    ConnectionBroken,
    InternalError,
    InvalidInput,
    NonIntegerExponent,
    NotAKnot,
    NotSuitablyConnected,
    ParseError,
    SphereMosaicError,
    TooManyCrossings,
)
from .knotid import classify, extract_gauss, extract_pd, is_alternating_diagram, jones, load_table
from .search import (
    SearchConstraints,
    census,
    invariants_exhaustive,
    search_knot,
)
from .sphere import FaceId, SphericalMosaic, validate
from .trace import components, find_belts, is_knot_mosaic, stats
from .transforms import (
    CornerChoice,
    embed,
    max_crossing_construction,
    reduce_tiling,
    wrap_shrink_one,
    wrap_shrink_two,
)

_USER_ERRORS = (
    ParseError,
    InvalidInput,
    NotAKnot,
    NotSuitablyConnected,
    TooManyCrossings,
    BudgetExceeded,
    FileNotFoundError,
    KeyError,
    ValueError,
)
_INTERNAL_ERRORS = (InternalError, ConnectionBroken, NonIntegerExponent, AssertionError)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_spherical(path: str) -> SphericalMosaic:
    """Load an .smt, or an .kmt embedded onto face F."""
    text = _read(path)
    if formats.sniff_format(text) == "kmt":
        return embed(formats.parse_kmt(text), FaceId.F)
    return formats.parse_smt(text)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _knot_line(kid) -> str:
    return f"{kid.name} mirror" if kid.chirality == "mirror" else kid.name


def _warn_large(n: int) -> None:
    if n > 8:
        print(f"warning: exhaustive operations above n=8 are expensive (n={n})", file=sys.stderr)


def _jones_field(pairs) -> str:
    return ";".join(f"{e}:{c}" for e, c in pairs)


def cmd_validate(args) -> int:
    m = _load_spherical(args.file)
    report = validate(m)
    if report.ok:
        print("valid")
        return 0
    for mm in report.mismatches:
        print(
            f"mismatch: {mm.cell.face.name}[{mm.cell.row}][{mm.cell.col}].{mm.side.name.lower()}"
            f" vs {mm.other.face.name}[{mm.other.row}][{mm.other.col}].{mm.other_side.name.lower()}"
        )
    return 1


def cmd_trace(args) -> int:
    m = _load_spherical(args.file)
    comps = components(m)
    st = stats(m)
    print(f"components: {len(comps)}")
    print(f"step lengths: {sorted(len(c) for c in comps)}")
    print(
        f"tiles: {st.non_empty_tiles}  faces: {st.non_empty_faces}  crossings: {st.crossing_tiles}"
    )
    belts = find_belts(m)
    print(f"belts: {len(belts)}")
    for b in belts:
        cells = " ".join(f"{c.face.name}[{c.row}][{c.col}]" for c in b.cells)
        print(f"  belt({len(b.cells)}): {cells}")
    if is_knot_mosaic(m):
        g = extract_gauss(m)
        print(f"knot mosaic: yes  alternating: {is_alternating_diagram(g)}")
    else:
        print("knot mosaic: no")
    return 0


def cmd_classify(args) -> int:
    m = _load_spherical(args.file)
    kid = classify(m, limit=args.limit)
    print(_knot_line(kid))
    return 0


def cmd_render(args) -> int:
    m = _load_spherical(args.file)
    _emit(render_mod.render(m, style=args.style), args.out)
    return 0


def cmd_embed(args) -> int:
    k = formats.parse_kmt(_read(args.file))
    m = embed(k, FaceId[args.face])
    _emit(formats.serialize_smt(m), args.out)
    return 0


def cmd_shrink(args) -> int:
    k = formats.parse_kmt(_read(args.file))
    if args.levels == 1:
        m = wrap_shrink_one(k, CornerChoice(args.corner))
    else:
        m = wrap_shrink_two(k)
    _emit(formats.serialize_smt(m), args.out)
    return 0


def cmd_reduce_tiling(args) -> int:
    k = formats.parse_kmt(_read(args.file))
    r, c = (int(x) for x in args.pos.split(","))
    m = reduce_tiling(k, (r, c))
    _emit(formats.serialize_smt(m), args.out)
    return 0


def cmd_maxcross(args) -> int:
    m = max_crossing_construction(args.n, alternating=args.alternating, seed=args.seed)
    _emit(formats.serialize_smt(m), args.out)
    return 0


def cmd_enumerate(args) -> int:
    _warn_large(args.n)
    constraints = SearchConstraints(
        n=args.n,
        require_knot=args.require_knot,
        max_non_empty_tiles=args.max_tiles,
    )
    records = census(constraints, jobs=args.jobs)
    rows = [
        (
            r.canonical_smt,
            r.knot.name,
            "mirror" if r.knot.chirality == "mirror" else "",
            r.tiles,
            r.faces,
            r.crossings,
            _jones_field(r.jones_pairs),
        )
        for r in records
    ]
    if args.csv == "-":
        _write_csv(sys.stdout, rows)
    else:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            _write_csv(fh, rows)
    print(f"census: {len(records)} canonical mosaics", file=sys.stderr)
    return 0


def _write_csv(fh, rows) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(
        ["canonical_smt", "knot", "mirror_flag", "tiles", "faces", "crossings", "jones"]
    )
    writer.writerows(rows)


def cmd_search(args) -> int:
    _warn_large(args.n)
    m, nodes = search_knot(args.n, args.knot, budget=args.budget, seed=args.seed)
    if m is None:
        print(f"not found within budget ({nodes} nodes)", file=sys.stderr)
        return 1
    print(f"found after {nodes} nodes", file=sys.stderr)
    _emit(formats.serialize_smt(m), args.out)
    return 0


def cmd_invariants(args) -> int:
    rep = invariants_exhaustive(
        args.knot, n_max=args.nmax, tile_budget=args.tile_budget,
        search_budget=args.budget, seed=args.seed,
    )
    def fmt(e):
        v = "?" if e.value is None else str(e.value)
        note = f"  ({e.note})" if e.note else ""
        return f"{v}  [{e.status}]{note}"

    print(f"knot: {rep.knot}")
    print(f"sm   = {fmt(rep.sm)}")
    print(f"st   = {fmt(rep.st)}")
    print(f"st_M = {fmt(rep.st_m)}")
    print(f"sf   = {fmt(rep.sf)}")
    for n in sorted(rep.sf_n):
        print(f"sf_{n} = {fmt(rep.sf_n[n])}")
    print(f"sf_M = {fmt(rep.sf_m)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spheremosaic",
        description="Knot mosaics on the surface of a cube.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("validate", cmd_validate, help="check suitable connectedness")
    sp.add_argument("file", nargs="?", default="-")

    sp = add("trace", cmd_trace, help="components, stats and belts")
    sp.add_argument("file", nargs="?", default="-")

    sp = add("classify", cmd_classify, help="name the knot type")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--limit", type=int, default=24, help="crossing limit")

    sp = add("render", cmd_render, help="draw the planar net")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--style", choices=("svg", "ascii"), default="svg")
    sp.add_argument("--out", default=None)

    sp = add("embed", cmd_embed, help="copy a classical mosaic onto a face")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--face", choices=[f.name for f in FaceId], default="F")
    sp.add_argument("--out", default=None)

    sp = add("shrink", cmd_shrink, help="corner-deletion shrink maps")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--levels", type=int, choices=(1, 2), required=True)
    sp.add_argument(
        "--corner", choices=[c.value for c in CornerChoice], default="tl",
        help="corner to delete (shrink level 1)",
    )
    sp.add_argument("--out", default=None)

    sp = add("reduce-tiling", cmd_reduce_tiling, help="delete an eligible corner arc")
    sp.add_argument("file", nargs="?", default="-")
    sp.add_argument("--pos", required=True, metavar="R,C")
    sp.add_argument("--out", default=None)

    sp = add("maxcross", cmd_maxcross, help="maximal-crossing construction")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--alternating", action="store_true")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)

    sp = add("enumerate", cmd_enumerate, help="exhaustive census to CSV")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--require-knot", action="store_true")
    sp.add_argument("--max-tiles", type=int, default=None)
    sp.add_argument("--csv", required=True)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("search", cmd_search, help="hunt a witness mosaic for a knot")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--knot", required=True)
    sp.add_argument("--budget", type=int, default=200_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)

    sp = add("invariants", cmd_invariants, help="certify spherical invariants")
    sp.add_argument("--knot", required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--tile-budget", type=int, default=6)
    sp.add_argument("--budget", type=int, default=400_000)
    sp.add_argument("--seed", type=int, default=0)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except _INTERNAL_ERRORS as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except _USER_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SphereMosaicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
