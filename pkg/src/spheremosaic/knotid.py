"""Diagram codes and exact polynomial invariants for knot classification.

PD convention: one 4-tuple (a, b, c, d) per crossing, listing the incident
arc labels counterclockwise starting at the incoming under-strand; arcs are
numbered 1..2c consecutively along the oriented knot, splitting at every
crossing passage.  A crossing is positive when the over-strand runs d -> b,
i.e. b follows d in the cyclic arc order.

The Kauffman bracket uses the skein ``<X> = A <X_A> + A^-1 <X_B>`` with
``<unknot> = 1`` and an extra loop worth ``delta = -A^2 - A^-2``; for the
tuple above the A-smoothing joins (a,b) and (c,d).  The Jones polynomial is
``(-A^3)^(-w) <D>`` with ``A = t^(-1/4)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources

from .errors import (
    InternalError,
    InvalidInput,
    NonIntegerExponent,
    NotAKnot,
    ParseError,
    TooManyCrossings,
)
from .laurent import LaurentPolynomial
from .sphere import SphericalMosaic
from .tiles import OVER, Side, UNDER
from .trace import components, is_knot_mosaic

DEFAULT_CROSSING_LIMIT = 24

DELTA = LaurentPolynomial({2: -1, -2: -1})


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __len__(self) -> int:
        return len(self.crossings)

    def validate(self) -> None:
        c = len(self.crossings)
        counts: dict[int, int] = {}
        for t in self.crossings:
            if len(t) != 4:
                raise InvalidInput("PD tuples must have 4 entries")
            for x in t:
                counts[x] = counts.get(x, 0) + 1
        if c and (sorted(counts) != list(range(1, 2 * c + 1)) or set(counts.values()) != {2}):
            raise InvalidInput("PD arc labels must be 1..2c, each twice")


@dataclass(frozen=True)
class GaussCode:
    """Cyclic sequence of crossing visits along the knot."""

    visits: tuple[tuple[int, str, int], ...]  # (crossing id, 'O'|'U', sign)


@dataclass(frozen=True)
class KnotId:
    name: str
    chirality: str | None  # as-tabled | mirror | amphichiral-equal


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    crossings: int
    pd: PDCode
    jones: LaurentPolynomial


_CCW_NEXT = {Side.TOP: Side.LEFT, Side.LEFT: Side.BOTTOM, Side.BOTTOM: Side.RIGHT, Side.RIGHT: Side.TOP}


def _traversal(m: SphericalMosaic):
    """Single-component traversal with per-crossing side data.

    Returns (crossing cells in first-visit order, per-cell dict
    side -> arc label, per-cell entry sides of the over and under passes).
    """
    comps = components(m)
    if len(comps) != 1:
        raise NotAKnot(f"{len(comps)} components")
    steps = comps[0].steps
    cross_steps = [s for s in steps if s.role in (OVER, UNDER)]
    n_pass = len(cross_steps)
    arcs_at: dict = {}
    entry_role: dict = {}
    order: list = []
    for i, s in enumerate(cross_steps):
        arc_in = i + 1
        arc_out = (i + 1) % n_pass + 1
        arcs_at.setdefault(s.cell, {})[s.entry] = arc_in
        arcs_at[s.cell][s.exit] = arc_out
        entry_role.setdefault(s.cell, {})[s.role] = s.entry
        if s.cell not in order:
            order.append(s.cell)
    return order, arcs_at, entry_role


def extract_pd(m: SphericalMosaic) -> PDCode:
    """PD code of a spherical knot mosaic, with deterministic orientation."""
    order, arcs_at, entry_role = _traversal(m)
    tuples = []
    for cell in order:
        a_side = entry_role[cell][UNDER]
        sides = [a_side]
        for _ in range(3):
            sides.append(_CCW_NEXT[sides[-1]])
        tuples.append(tuple(arcs_at[cell][s] for s in sides))
    pd = PDCode(tuple(tuples))
    pd.validate()
    return pd


def extract_gauss(m: SphericalMosaic) -> GaussCode:
    """Gauss code along the same deterministic traversal as extract_pd."""
    comps = components(m)
    if len(comps) != 1:
        raise NotAKnot(f"{len(comps)} components")
    order, _, entry_role = _traversal(m)
    ids = {cell: i + 1 for i, cell in enumerate(order)}
    signs = {}
    for cell in order:
        a_side = entry_role[cell][UNDER]
        o_side = entry_role[cell][OVER]
        # over entering on the d-slot (one ccw step before a) is positive
        d_side = next(s for s in Side if _CCW_NEXT[s] == a_side)
        signs[cell] = 1 if o_side == d_side else -1
    visits = []
    for s in comps[0].steps:
        if s.role in (OVER, UNDER):
            visits.append((ids[s.cell], "O" if s.role == OVER else "U", signs[s.cell]))
    return GaussCode(tuple(visits))


def _over_in_slot(t: tuple[int, int, int, int], m: int) -> int:
    """Index (1 or 3) of the incoming-over slot of a PD tuple.

    Arc labels are consecutive along the knot, so the incoming over arc is
    the one whose successor is the outgoing over arc.  One-crossing
    diagrams are ambiguous under that rule and are resolved geometrically:
    the A-smoothing of a positive kink frees an extra loop.
    """
    a, b, c, d = t
    if m == 2:
        positive = _loop_count((t,), (False,)) == 2
        return 3 if positive else 1
    if (b - d) % m == 1:
        return 3  # over runs d -> b
    if (d - b) % m == 1:
        return 1  # over runs b -> d
    raise InvalidInput(f"cannot orient over-strand of {t}")


def crossing_sign(t: tuple[int, int, int, int], m: int) -> int:
    """+1 when the over-strand runs d -> b, else -1."""
    return 1 if _over_in_slot(t, m) == 3 else -1


def writhe(pd: PDCode) -> int:
    """Sum of crossing signs; the right-handed trefoil comes out +3."""
    m = 2 * len(pd.crossings)
    return sum(crossing_sign(t, m) for t in pd.crossings)


def pd_mirror(pd: PDCode) -> PDCode:
    """PD of the mirror diagram (every crossing switched).

    Switching a crossing makes the old incoming over-strand the new
    incoming under-strand; the ccw listing is unchanged, so each tuple is
    rotated to start at its old over-in slot.
    """
    m = 2 * len(pd.crossings)
    out = []
    for t in pd.crossings:
        slot = _over_in_slot(t, m)
        out.append((t[slot], t[(slot + 1) % 4], t[(slot + 2) % 4], t[(slot + 3) % 4]))
    return PDCode(tuple(out))


def gauss_from_pd(pd: PDCode) -> GaussCode:
    """Recover the visit sequence by following arc labels 1..2c."""
    m = 2 * len(pd.crossings)
    incoming: dict[int, tuple[int, str, int]] = {}
    for i, t in enumerate(pd.crossings):
        sign = crossing_sign(t, m)
        incoming[t[0]] = (i + 1, "U", sign)
        incoming[t[_over_in_slot(t, m)]] = (i + 1, "O", sign)
    visits = tuple(incoming[k] for k in range(1, m + 1))
    return GaussCode(visits)


def is_alternating_diagram(g: GaussCode) -> bool:
    """True iff over/under strictly alternate along the cyclic sequence."""
    kinds = [v[1] for v in g.visits]
    if not kinds:
        return True
    return all(kinds[i] != kinds[(i + 1) % len(kinds)] for i in range(len(kinds)))


def _find(parent: dict, x):
    root = x
    while parent.get(root, root) != root:
        root = parent[root]
    while parent.get(x, x) != x:
        parent[x], x = root, parent[x]
    return root


def _loop_count(crossings, choose_b) -> int:
    """Loops of one complete smoothing state (independent state-sum path)."""
    parent: dict = {}
    loops = 0
    for t, use_b in zip(crossings, choose_b):
        a, b, c, d = t
        pairs = ((a, d), (b, c)) if use_b else ((a, b), (c, d))
        for x, y in pairs:
            rx, ry = _find(parent, x), _find(parent, y)
            if rx == ry:
                loops += 1
            else:
                parent[rx] = ry
    return loops


def naive_bracket(pd: PDCode) -> LaurentPolynomial:
    """Brute-force 2^c Kauffman state sum (the oracle)."""
    c = len(pd.crossings)
    if c == 0:
        return LaurentPolynomial.one()
    total = LaurentPolynomial.zero()
    for mask in range(1 << c):
        choose_b = [(mask >> i) & 1 == 1 for i in range(c)]
        n_b = sum(choose_b)
        loops = _loop_count(pd.crossings, choose_b)
        total = total + (DELTA ** (loops - 1)).shift(c - 2 * n_b)
    return total


def _order_for_resolution(crossings):
    """Greedy crossing order keeping the live-arc frontier small."""
    rest = sorted(crossings)
    out = [rest.pop(0)]
    seen_arcs = set(out[0])
    while rest:
        best = max(
            range(len(rest)),
            key=lambda i: (len(seen_arcs.intersection(rest[i])), [-x for x in rest[i]]),
        )
        t = rest.pop(best)
        out.append(t)
        seen_arcs.update(t)
    return tuple(out)


def kauffman_bracket(pd: PDCode, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPolynomial:
    """Memoized skein resolution of the bracket, <unknot> = 1.

    Agrees exactly with naive_bracket; memoization keys are canonical
    connectivity partitions of the arcs still touching unresolved
    crossings.
    """
    c = len(pd.crossings)
    if c > limit:
        raise TooManyCrossings(f"{c} crossings exceeds limit {limit}")
    if c == 0:
        return LaurentPolynomial.one()
    order = _order_for_resolution(pd.crossings)
    live_after = []
    live = set()
    for t in reversed(order):
        live_after.append(frozenset(live))
        live.update(t)
    live_after.reverse()  # arcs appearing strictly after position i

    memo: dict = {}

    def key_of(idx, partition):
        reps: dict = {}
        out = []
        for t in order[idx:]:
            for arc in t:
                r = _find(partition, arc)
                out.append(reps.setdefault(r, len(reps)))
        return (idx, tuple(out))

    def rec(idx, partition):
        if idx == len(order):
            return LaurentPolynomial.one()
        key = key_of(idx, partition)
        hit = memo.get(key)
        if hit is not None:
            return hit
        a, b, cc, d = order[idx]
        total = LaurentPolynomial.zero()
        for exp, pairs in ((1, ((a, b), (cc, d))), (-1, ((a, d), (b, cc)))):
            part2 = dict(partition)
            closures = 0
            for x, y in pairs:
                rx, ry = _find(part2, x), _find(part2, y)
                if rx == ry:
                    closures += 1
                else:
                    part2[rx] = ry
            live = live_after[idx]
            proj = {arc: _find(part2, arc) for arc in live}
            term = rec(idx + 1, proj).shift(exp)
            for _ in range(closures):
                term = term * DELTA
            total = total + term
        memo[key] = total
        return total

    f = rec(0, {})
    return f.divide_exact(DELTA)


def jones(pd: PDCode, limit: int = DEFAULT_CROSSING_LIMIT) -> LaurentPolynomial:
    """Writhe-normalized bracket in t; knots land on integer exponents."""
    bracket = kauffman_bracket(pd, limit)
    w = writhe(pd)
    normalized = bracket.shift(-3 * w)
    if w % 2:
        normalized = -normalized
    out: dict[int, int] = {}
    for e, coeff in normalized.coeffs.items():
        if e % 4:
            raise NonIntegerExponent(f"A-exponent {e} not divisible by 4")
        out[-e // 4] = coeff
    return LaurentPolynomial(out)


def determinant(pd: PDCode, limit: int = DEFAULT_CROSSING_LIMIT) -> int:
    """|V(-1)|, a cheap integer cross-check of classification."""
    return abs(jones(pd, limit).evaluate(-1))


def pd_face_count(pd: PDCode) -> int:
    """Faces of the diagram's rotation system; equals c + 2 iff planar.

    Darts are (crossing, slot); the ccw tuple order is the rotation at
    each vertex and same-label slots are the edge involution.
    """
    c = len(pd.crossings)
    if c == 0:
        return 2
    occurrences: dict[int, list] = {}
    for i, t in enumerate(pd.crossings):
        for slot, arc in enumerate(t):
            occurrences.setdefault(arc, []).append((i, slot))
    faces = 0
    unused = {(i, s) for i in range(c) for s in range(4)}
    while unused:
        faces += 1
        start = min(unused)
        dart = start
        while True:
            unused.discard(dart)
            i, s = dart
            occ = occurrences[pd.crossings[i][s]]
            j, u = occ[1] if occ[0] == (i, s) else occ[0]
            dart = (j, (u + 1) % 4)
            if dart == start:
                break
    return faces


# --- reference table -------------------------------------------------------


def parse_table(text: str) -> dict[str, tuple[int, PDCode]]:
    """Parse the ``name;crossings;pd=[(a,b,c,d),...]`` table format."""
    entries: dict[str, tuple[int, PDCode]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(";")
        if len(parts) != 3 or not parts[2].startswith("pd="):
            raise ParseError("expected name;crossings;pd=[...]", lineno)
        name = parts[0].strip()
        try:
            crossings = int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad crossing count: {parts[1]}", lineno) from exc
        body = parts[2][3:].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError("pd list must be bracketed", lineno)
        tuples = []
        inner = body[1:-1].strip()
        if inner:
            for chunk in inner.replace("(", " ").split(")"):
                chunk = chunk.replace(",", " ").strip()
                if not chunk:
                    continue
                nums = tuple(int(x) for x in chunk.split())
                if len(nums) != 4:
                    raise ParseError(f"bad tuple: {chunk!r}", lineno)
                tuples.append(nums)
        pd = PDCode(tuple(tuples))
        pd.validate()
        if len(pd.crossings) != crossings:
            raise ParseError(f"{name}: {len(pd.crossings)} tuples != {crossings}", lineno)
        if name in entries:
            raise ParseError(f"duplicate entry {name}", lineno)
        entries[name] = (crossings, pd)
    return entries


class KnotTable:
    """Bundled reference knots; Jones values are computed at load, never
    transcribed, and checked pairwise distinct up to mirror."""

    def __init__(self, entries: dict[str, KnotTableEntry]):
        self.entries = entries
        values = list(entries.values())
        for i, e1 in enumerate(values):
            for e2 in values[i + 1 :]:
                if e1.jones == e2.jones or e1.jones == e2.jones.mirror():
                    raise InternalError(
                        f"table entries {e1.name} and {e2.name} share a Jones value"
                    )

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def __getitem__(self, name: str) -> KnotTableEntry:
        return self.entries[name]

    def names(self):
        return list(self.entries)

    @classmethod
    def from_text(cls, text: str) -> "KnotTable":
        raw = parse_table(text)
        entries = {}
        for name, (crossings, pd) in raw.items():
            entries[name] = KnotTableEntry(name, crossings, pd, jones(pd))
        return cls(entries)

    def lookup(self, v: LaurentPolynomial) -> KnotId | None:
        if v == LaurentPolynomial.one():
            return KnotId("0_1", "amphichiral-equal")
        for entry in self.entries.values():
            if entry.name == "0_1":
                continue
            tabled = v == entry.jones
            mirrored = v == entry.jones.mirror()
            if tabled and mirrored:
                return KnotId(entry.name, "amphichiral-equal")
            if tabled:
                return KnotId(entry.name, "as-tabled")
            if mirrored:
                return KnotId(entry.name, "mirror")
        return None


@functools.lru_cache(maxsize=1)
def load_table() -> KnotTable:
    text = resources.files("spheremosaic.data").joinpath("knots_to_8.txt").read_text()
    return KnotTable.from_text(text)


def classify(
    m: SphericalMosaic,
    table: KnotTable | None = None,
    limit: int = DEFAULT_CROSSING_LIMIT,
) -> KnotId:
    """Name the knot type of a spherical knot mosaic, up to mirror.

    Jones equal to 1 reports the unknot (no nontrivial knot with trivial
    Jones polynomial is known anywhere near these diagram sizes); unmatched
    polynomials report "unknown".
    """
    if not is_knot_mosaic(m):
        raise NotAKnot("not a spherical knot mosaic")
    table = table or load_table()
    pd = extract_pd(m)
    v = jones(pd, limit)
    found = table.lookup(v)
    if found is None:
        return KnotId("unknown", None)
    if found.name in table:
        expected = abs(table[found.name].jones.evaluate(-1))
        got = abs(v.evaluate(-1))
        if expected != got:
            raise InternalError(
                f"determinant mismatch for {found.name}: {got} != {expected}"
            )
    return found
