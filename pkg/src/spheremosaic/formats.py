"""Bit-exact text formats for mosaics.

.smt (spherical): header line ``smt v1 n=<N>``, then six face blocks in
U,L,F,R,B,D order, each a line with the face letter followed by N rows of
N space-separated tile tokens 0..10.

.kmt (classical): header ``kmt v1 n=<N>`` followed by one N x N block.

Parsing never validates connectivity; validation is an explicit step.
Blank lines and ``#`` comments are permitted between blocks.
"""

from __future__ import annotations

from .errors import DimensionMismatch, ParseError
from .sphere import ClassicalMosaic, FACE_ORDER, SphericalMosaic
from .tiles import Tile

_FACE_LETTERS = tuple(f.name for f in FACE_ORDER)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_header(lineno: int, line: str, tag: str) -> int:
    parts = line.split()
    if len(parts) != 3 or parts[0] != tag or parts[1] != "v1":
        raise ParseError(f"expected header '{tag} v1 n=<N>', got {line!r}", lineno)
    if not parts[2].startswith("n="):
        raise ParseError(f"missing n= in header: {line!r}", lineno)
    try:
        n = int(parts[2][2:])
    except ValueError as exc:
        raise ParseError(f"bad size: {parts[2]!r}", lineno) from exc
    if n < 1:
        raise ParseError(f"size must be positive, got {n}", lineno)
    return n


def _parse_row(lineno: int, line: str, n: int) -> tuple[Tile, ...]:
    tokens = line.split()
    if len(tokens) != n:
        raise DimensionMismatch(f"expected {n} tokens, got {len(tokens)}", lineno)
    row = []
    for tok in tokens:
        if not tok.isdigit() or not 0 <= int(tok) <= 10:
            raise ParseError(f"bad tile token {tok!r}", lineno)
        row.append(Tile(int(tok)))
    return tuple(row)


def parse_smt(text: str) -> SphericalMosaic:
    it = _lines(text)
    try:
        lineno, line = next(it)
    except StopIteration:
        raise ParseError("empty document", 1) from None
    n = _parse_header(lineno, line, "smt")
    grids = []
    for letter in _FACE_LETTERS:
        try:
            lineno, line = next(it)
        except StopIteration:
            raise ParseError(f"missing face block {letter}", lineno) from None
        if line != letter:
            raise ParseError(f"expected face label {letter!r}, got {line!r}", lineno)
        rows = []
        for _ in range(n):
            try:
                lineno, line = next(it)
            except StopIteration:
                raise DimensionMismatch(f"face {letter}: missing rows", lineno) from None
            rows.append(_parse_row(lineno, line, n))
        grids.append(tuple(rows))
    leftover = next(it, None)
    if leftover is not None:
        raise ParseError(f"trailing content: {leftover[1]!r}", leftover[0])
    return SphericalMosaic(n, tuple(grids))


def serialize_smt(m: SphericalMosaic) -> str:
    out = [f"smt v1 n={m.n}"]
    for face in FACE_ORDER:
        out.append(face.name)
        for row in m.grids[int(face)]:
            out.append(" ".join(str(int(t)) for t in row))
    return "\n".join(out) + "\n"


def parse_kmt(text: str) -> ClassicalMosaic:
    it = _lines(text)
    try:
        lineno, line = next(it)
    except StopIteration:
        raise ParseError("empty document", 1) from None
    n = _parse_header(lineno, line, "kmt")
    rows = []
    for _ in range(n):
        try:
            lineno, line = next(it)
        except StopIteration:
            raise DimensionMismatch("missing rows", lineno) from None
        rows.append(_parse_row(lineno, line, n))
    leftover = next(it, None)
    if leftover is not None:
        raise ParseError(f"trailing content: {leftover[1]!r}", leftover[0])
    return ClassicalMosaic(n, tuple(rows))


def serialize_kmt(k: ClassicalMosaic) -> str:
    out = [f"kmt v1 n={k.n}"]
    for row in k.grid:
        out.append(" ".join(str(int(t)) for t in row))
    return "\n".join(out) + "\n"


def sniff_format(text: str) -> str:
    """'smt' or 'kmt' from the header tag."""
    for _, line in _lines(text):
        return line.split()[0]
    raise ParseError("empty document", 1)
