"""Exhaustive and budgeted search over spherical mosaics.

The enumerator assigns tiles cell by cell in a fixed global order (faces
U,L,F,R,B,D, row-major within each face), pruning a placement as soon as
any already-decided abutting edge midpoint mismatches or a budget cannot
be met, so every leaf reached is suitably connected.  Census output is
deduplicated by the canonical form under the 24 cube rotations and is
byte-deterministic, including under multiprocess partitioning.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field

from .errors import BudgetExceeded, InternalError
from .knotid import KnotId, classify, extract_pd, jones, load_table
from .laurent import LaurentPolynomial
from .sphere import (
    FACE_ORDER,
    FaceId,
    SphericalMosaic,
    cube_rotations,
    neighbor_table,
    rotate_flat,
    rotation_cell_maps,
)
from .tiles import CROSSING_TILES, Side, Tile, has_connection, strand_exit

_CONN = tuple(
    tuple(has_connection(Tile(t), Side(s)) for s in range(4)) for t in range(11)
)
_IS_CROSSING = tuple(Tile(t) in CROSSING_TILES for t in range(11))


@dataclass(frozen=True)
class SearchConstraints:
    n: int
    max_non_empty_tiles: int | None = None
    min_crossing_tiles: int = 0
    max_crossing_tiles: int | None = None
    face_mask: frozenset[FaceId] | None = None  # faces allowed non-empty
    require_knot: bool = False

    def __post_init__(self):
        cap = 6 * self.n * self.n
        if self.max_crossing_tiles is not None and not (
            self.min_crossing_tiles <= self.max_crossing_tiles <= cap
        ):
            raise ValueError("inconsistent crossing bounds")
        if self.max_non_empty_tiles is not None and self.max_non_empty_tiles > cap:
            raise ValueError("tile budget exceeds cell count")


def _prefix_checks(n: int):
    """Per cell: (side, earlier neighbor index, its side) triples to verify."""
    table = neighbor_table(n)
    out = []
    for idx in range(6 * n * n):
        checks = []
        for side in range(4):
            jdx, jside = table[idx * 4 + side]
            if jdx < idx:
                checks.append((side, jdx, jside))
        out.append(tuple(checks))
    return tuple(out)


def component_count_flat(n: int, flat) -> int:
    """Closed-component count of a suitably connected flat assignment."""
    table = neighbor_table(n)
    visited = set()
    count = 0
    for idx in range(6 * n * n):
        tile = Tile(flat[idx])
        for side in range(4):
            if (idx, side) in visited or not _CONN[tile][side]:
                continue
            count += 1
            cur, entry = idx, side
            while True:
                exit_side, _ = strand_exit(Tile(flat[cur]), Side(entry))
                visited.add((cur, entry))
                visited.add((cur, int(exit_side)))
                cur, entry = table[cur * 4 + int(exit_side)]
                if (cur, entry) == (idx, side):
                    break
    return count


def enumerate_mosaics(constraints: SearchConstraints, visitor, prefix=()) -> int:
    """Depth-first enumeration; calls ``visitor(flat_tuple)`` for every
    suitably connected assignment meeting the constraints, exactly once.

    ``prefix`` pins the first cells' tiles (used for work partitioning);
    inconsistent prefixes yield zero visits.  Returns the visit count.
    """
    n = constraints.n
    total_cells = 6 * n * n
    checks = _prefix_checks(n)
    table = neighbor_table(n)
    max_tiles = constraints.max_non_empty_tiles
    min_cross = constraints.min_crossing_tiles
    max_cross = constraints.max_crossing_tiles
    allowed_nonempty = [True] * total_cells
    if constraints.face_mask is not None:
        for idx in range(total_cells):
            allowed_nonempty[idx] = FaceId(idx // (n * n)) in constraints.face_mask

    flat = [0] * total_cells
    demand = [0] * total_cells  # assigned neighbors needing a connection here
    demanded_unassigned = 0
    visits = 0

    tiles_all = tuple(range(11))
    tiles_blank = (0,)

    def place_ok(idx, t):
        for side, jdx, jside in checks[idx]:
            if _CONN[t][side] != _CONN[flat[jdx]][jside]:
                return False
        return True

    def rec(idx, non_empty, crossings):
        nonlocal visits, demanded_unassigned
        if idx == total_cells:
            if crossings < min_cross:
                return
            if constraints.require_knot and component_count_flat(n, flat) != 1:
                return
            visits += 1
            visitor(tuple(flat))
            return
        remaining_after = total_cells - idx - 1
        candidates = tiles_all if allowed_nonempty[idx] else tiles_blank
        forced = prefix[idx : idx + 1]
        if forced:
            candidates = (int(forced[0]),)
        for t in candidates:
            ne = non_empty + (t != 0)
            cr = crossings + _IS_CROSSING[t]
            if max_tiles is not None and ne > max_tiles:
                continue
            if max_cross is not None and cr > max_cross:
                continue
            if cr + remaining_after < min_cross:
                continue
            if not place_ok(idx, t):
                continue
            # future demand: unassigned cells already owed a connection
            delta = 0
            if demand[idx] > 0:
                delta -= 1
            new_demands = []
            for side in range(4):
                if not _CONN[t][side]:
                    continue
                jdx, _ = table[idx * 4 + side]
                if jdx > idx:
                    if not allowed_nonempty[jdx]:
                        break  # connection points at a masked face: dead
                    new_demands.append(jdx)
            else:
                for jdx in new_demands:
                    if demand[jdx] == 0:
                        delta += 1
                    demand[jdx] += 1
                demanded_unassigned += delta
                ok_budget = True
                if max_tiles is not None and ne + demanded_unassigned > max_tiles:
                    ok_budget = False
                if ok_budget:
                    flat[idx] = t
                    rec(idx + 1, ne, cr)
                    flat[idx] = 0
                for jdx in new_demands:
                    demand[jdx] -= 1
                demanded_unassigned -= delta
                continue
            # for/else fell through via break: candidate rejected

    rec(0, 0, 0)
    return visits


def canonical_form(m: SphericalMosaic) -> SphericalMosaic:
    """Lexicographically least serialization over the 24 rotations."""
    return SphericalMosaic.from_flat(m.n, canonical_flat(m.n, m.flat()))


def canonical_flat(n: int, flat) -> tuple[int, ...]:
    return min(rotate_flat(n, flat, cm) for cm in rotation_cell_maps(n))


@dataclass(frozen=True)
class CensusRecord:
    canonical_smt: str
    tiles: int
    faces: int
    crossings: int
    knot: KnotId
    jones_pairs: tuple[tuple[int, int], ...]


def _flat_counts(n: int, flat):
    tiles = sum(1 for t in flat if t != 0)
    crossings = sum(1 for t in flat if _IS_CROSSING[t])
    faces = sum(
        1
        for f in range(6)
        if any(flat[f * n * n + i] != 0 for i in range(n * n))
    )
    return tiles, faces, crossings


def flat_to_smt_key(n: int, flat) -> str:
    return f"{n}:" + " ".join(str(t) for t in flat)


def _enumerate_chunk(args):
    constraints, prefix = args
    found = set()
    enumerate_mosaics(constraints, found.add, prefix=prefix)
    return found


def enumerate_all(constraints: SearchConstraints, jobs: int = 1) -> set[tuple[int, ...]]:
    """All suitably connected assignments meeting the constraints, as flat
    tuples; identical for any job count."""
    if jobs <= 1:
        out: set[tuple[int, ...]] = set()
        enumerate_mosaics(constraints, out.add)
        return out
    prefixes = [(a, b) for a in range(11) for b in range(11)]
    with multiprocessing.Pool(jobs) as pool:
        parts = pool.map(
            _enumerate_chunk, [(constraints, p) for p in prefixes], chunksize=8
        )
    out = set()
    for part in parts:
        out |= part
    return out


def census(constraints: SearchConstraints, jobs: int = 1, table=None) -> list[CensusRecord]:
    """Deduplicated, classified census in canonical serialization order."""
    table = table or load_table()
    n = constraints.n
    flats = enumerate_all(constraints, jobs=jobs)
    canon = {canonical_flat(n, f) for f in flats}
    records = []
    for flat in sorted(canon):
        tiles, faces, crossings = _flat_counts(n, flat)
        m = SphericalMosaic.from_flat(n, flat)
        if constraints.require_knot:
            knot = classify(m, table)
            v = jones(extract_pd(m))
            pairs = v.to_pairs()
        else:
            knot = KnotId("unknown", None)
            pairs = ()
        records.append(
            CensusRecord(flat_to_smt_key(n, flat), tiles, faces, crossings, knot, pairs)
        )
    return records


def search_knot(
    n: int,
    target: str,
    budget: int = 200_000,
    seed: int = 0,
    extra_crossings: int = 2,
    face_mask: frozenset[FaceId] | None = None,
    max_tiles: int | None = None,
    table=None,
):
    """Randomized depth-first hunt for a knot mosaic classifying as
    ``target``; reproducible from the seed.  Returns (mosaic, nodes) on
    success or (None, nodes) once the node budget is spent.

    Cells are visited in an adjacency-driven order and tile choices are
    shuffled per node; the crossing-tile window [c(K), c(K)+extra] is
    swept in rounds so minimal diagrams are tried first.
    """
    import random as _random

    table = table or load_table()
    if target not in table.names():
        raise KeyError(f"unknown target {target}")
    c_target = table[target].crossings
    lower = 1
    while 6 * lower * lower - 3 * lower + 1 < c_target:
        lower += 1
    if n < lower:
        return None, 0

    total_cells = 6 * n * n
    order = _adjacency_order(n)
    checks = _order_checks(n, order)
    allowed = [True] * total_cells
    if face_mask is not None:
        for idx in range(total_cells):
            allowed[idx] = FaceId(idx // (n * n)) in face_mask
    rng = _random.Random(seed)
    nodes = 0

    def run(max_cross, node_budget):
        nonlocal nodes
        flat = [0] * total_cells
        spent = 0

        def rec(depth, non_empty, crossings):
            nonlocal spent, nodes
            if spent >= node_budget:
                return None
            if depth == total_cells:
                if crossings < c_target:
                    return None
                if component_count_flat(n, flat) != 1:
                    return None
                m = SphericalMosaic.from_flat(n, flat)
                got = classify(m, table)
                if got.name == target:
                    return m
                return None
            idx = order[depth]
            remaining_after = total_cells - depth - 1
            if allowed[idx]:
                tiles = list(range(11))
                rng.shuffle(tiles)
            else:
                tiles = [0]
            for t in tiles:
                ne = non_empty + (t != 0)
                cr = crossings + _IS_CROSSING[t]
                if cr > max_cross or cr + remaining_after < c_target:
                    continue
                if max_tiles is not None and ne > max_tiles:
                    continue
                ok = True
                for side, jdx, jside in checks[depth]:
                    if _CONN[t][side] != _CONN[flat[jdx]][jside]:
                        ok = False
                        break
                if not ok:
                    continue
                spent += 1
                nodes += 1
                flat[idx] = t
                hit = rec(depth + 1, ne, cr)
                flat[idx] = 0
                if hit is not None:
                    return hit
                if spent >= node_budget:
                    return None
            return None

        return rec(0, 0, 0)

    rounds = extra_crossings + 1
    for extra in range(rounds):
        hit = run(c_target + extra, budget // rounds)
        if hit is not None:
            return hit, nodes
    return None, nodes


def sample_mosaics(
    n: int,
    count: int,
    seed: int = 0,
    require_knot: bool = False,
    min_crossings: int = 0,
    max_crossings: int | None = None,
) -> list[SphericalMosaic]:
    """``count`` leaves of seeded random-order DFS restarts; a cheap,
    reproducible source of suitably connected mosaics for property tests.
    Each sample restarts the descent with fresh tile shuffles, so samples
    are diverse rather than sharing one long prefix."""
    import random as _random

    total_cells = 6 * n * n
    order = _adjacency_order(n)
    checks = _order_checks(n, order)
    rng = _random.Random(seed)
    out: list[SphericalMosaic] = []
    seen: set[tuple[int, ...]] = set()

    def find_one():
        flat = [0] * total_cells

        def rec(depth, crossings):
            if depth == total_cells:
                if crossings < min_crossings:
                    return None
                if require_knot and component_count_flat(n, flat) != 1:
                    return None
                key = tuple(flat)
                if key in seen:
                    return None
                return key
            idx = order[depth]
            remaining_after = total_cells - depth - 1
            tiles = list(range(11))
            rng.shuffle(tiles)
            for t in tiles:
                cr = crossings + _IS_CROSSING[t]
                if max_crossings is not None and cr > max_crossings:
                    continue
                if cr + remaining_after < min_crossings:
                    continue
                if any(
                    _CONN[t][side] != _CONN[flat[jdx]][jside]
                    for side, jdx, jside in checks[depth]
                ):
                    continue
                flat[idx] = t
                hit = rec(depth + 1, cr)
                flat[idx] = 0
                if hit is not None:
                    return hit
            return None

        return rec(0, 0)

    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100 * count:
            raise BudgetExceeded(f"could not sample {count} distinct mosaics")
        key = find_one()
        if key is None:
            continue
        seen.add(key)
        out.append(SphericalMosaic.from_flat(n, key))
    return out


def _adjacency_order(n: int):
    """Cell order where each new cell touches as many prior cells as
    possible (better constraint propagation than face order)."""
    table = neighbor_table(n)
    total = 6 * n * n
    chosen = [0]
    placed = {0}
    while len(chosen) < total:
        best, best_score = None, (-1, 0)
        for idx in range(total):
            if idx in placed:
                continue
            score = sum(
                1 for s in range(4) if table[idx * 4 + s][0] in placed
            )
            if (score, -idx) > best_score:
                best_score = (score, -idx)
                best = idx
        chosen.append(best)
        placed.add(best)
    return tuple(chosen)


def _order_checks(n: int, order):
    """Like _prefix_checks but for an arbitrary assignment order."""
    table = neighbor_table(n)
    pos = {idx: d for d, idx in enumerate(order)}
    out = []
    for depth, idx in enumerate(order):
        checks = []
        for side in range(4):
            jdx, jside = table[idx * 4 + side]
            if pos[jdx] < depth:
                checks.append((side, jdx, jside))
        out.append(tuple(checks))
    return tuple(out)


# --- invariants -------------------------------------------------------------


@dataclass(frozen=True)
class InvariantEntry:
    value: int | None
    status: str  # certified-exhaustive | certified-bound-witness | undetermined
    witness: SphericalMosaic | None = None
    note: str = ""


@dataclass(frozen=True)
class InvariantReport:
    knot: str
    sm: InvariantEntry
    st: InvariantEntry
    st_m: InvariantEntry
    sf: InvariantEntry
    sf_n: dict[int, InvariantEntry] = field(default_factory=dict)
    sf_m: InvariantEntry = InvariantEntry(None, "undetermined")


def _face_subset_representatives():
    """One representative per rotation orbit of face subsets, by size."""
    perms = []
    for perm_map, _ in rotation_cell_maps(1):
        perms.append(tuple(perm_map[f] for f in range(6)))
    reps: dict[int, list[frozenset[FaceId]]] = {k: [] for k in range(1, 7)}
    seen = set()
    for mask in range(1, 64):
        subset = frozenset(FaceId(f) for f in range(6) if mask >> f & 1)
        canon = min(
            frozenset(FaceId(p[int(f)]) for f in subset) for p in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        reps[len(subset)].append(canon)
    return reps


def _matches(flat, n, target, table) -> bool:
    m = SphericalMosaic.from_flat(n, flat)
    return classify(m, table).name == target


def invariants_exhaustive(
    target: str,
    n_max: int,
    tile_budget: int,
    search_budget: int = 400_000,
    seed: int = 0,
    table=None,
) -> InvariantReport:
    """Certify the spherical invariants of one knot by constrained
    exhaustive search (with the crossing-count lower bound to skip
    impossible sizes), falling back to bound-plus-witness certification
    where full exhaustion is infeasible.
    """
    table = table or load_table()
    c_target = table[target].crossings
    n_lower = 1
    while 6 * n_lower * n_lower - 3 * n_lower + 1 < c_target:
        n_lower += 1

    undetermined = InvariantEntry(None, "undetermined")
    sm = undetermined
    witnesses_by_n: dict[int, SphericalMosaic] = {}

    for n in range(n_lower, n_max + 1):
        if n == 1:
            hits: list[tuple[int, ...]] = []
            enumerate_mosaics(
                SearchConstraints(n=1, require_knot=True),
                lambda f: hits.append(f) if _matches(f, 1, target, table) else None,
            )
            if hits:
                w = SphericalMosaic.from_flat(1, min(hits))
                witnesses_by_n[1] = w
                sm = InvariantEntry(1, "certified-exhaustive", w)
                break
            continue
        found, _ = search_knot(n, target, budget=search_budget, seed=seed, table=table)
        if found is not None:
            witnesses_by_n[n] = found
            status = (
                "certified-bound-witness"
                if n == n_lower
                else "undetermined"
            )
            note = "" if n == n_lower else (
                f"witness at n={n}; smaller sizes not exhausted"
            )
            sm = InvariantEntry(n if n == n_lower else None, status, found, note)
            break

    def min_tiles_at(n: int) -> tuple[int | None, SphericalMosaic | None]:
        best: list[tuple[int, tuple[int, ...]]] = []

        def visit(flat):
            tiles = sum(1 for t in flat if t != 0)
            if best and tiles >= best[0][0]:
                return
            if _matches(flat, n, target, table):
                best.insert(0, (tiles, flat))

        enumerate_mosaics(
            SearchConstraints(
                n=n, require_knot=True, max_non_empty_tiles=tile_budget
            ),
            visit,
        )
        if not best:
            return None, None
        tiles, flat = min(best)
        return tiles, SphericalMosaic.from_flat(n, flat)

    st = undetermined
    st_vals = []
    for n in range(1, n_max + 1):
        v, w = min_tiles_at(n)
        if v is not None:
            st_vals.append((v, n, w))
    if st_vals:
        v, n_at, w = min(st_vals)
        st = InvariantEntry(
            v, "certified-exhaustive", w, f"minimum over n<=n_max within tile budget {tile_budget}"
        )

    st_m = undetermined
    if sm.value is not None:
        for v, n_at, w in sorted(st_vals):
            if n_at == sm.value:
                st_m = InvariantEntry(v, "certified-exhaustive", w)
                break

    reps = _face_subset_representatives()

    def min_faces_at(n: int) -> tuple[int | None, SphericalMosaic | None]:
        for f_count in range(1, 7):
            for subset in reps[f_count]:
                hit: list[tuple[int, ...]] = []

                def visit(flat):
                    if not hit and _matches(flat, n, target, table):
                        hit.append(flat)

                enumerate_mosaics(
                    SearchConstraints(
                        n=n,
                        require_knot=True,
                        max_non_empty_tiles=tile_budget,
                        face_mask=subset,
                    ),
                    visit,
                )
                if hit:
                    faces = _flat_counts(n, hit[0])[1]
                    if faces == f_count:
                        return f_count, SphericalMosaic.from_flat(n, hit[0])
        return None, None

    sf_n: dict[int, InvariantEntry] = {}
    for n in range(1, n_max + 1):
        if 6 * n * n - 3 * n + 1 < c_target:
            sf_n[n] = InvariantEntry(
                None, "undetermined", None, "size below crossing-count lower bound"
            )
            continue
        v, w = min_faces_at(n)
        sf_n[n] = (
            InvariantEntry(v, "certified-exhaustive", w, f"within tile budget {tile_budget}")
            if v is not None
            else undetermined
        )

    sf = undetermined
    certified_faces = [
        (e.value, e) for e in sf_n.values() if e.value is not None
    ]
    if certified_faces:
        v, e = min(certified_faces)
        sf = InvariantEntry(v, "certified-exhaustive", e.witness, "minimum over n<=n_max")

    sf_m = undetermined
    if sm.value is not None and sm.value in sf_n and sf_n[sm.value].value is not None:
        sf_m = sf_n[sm.value]

    # consistency assertions on certified values
    if st.value is not None and st_m.value is not None and st.value > st_m.value:
        raise InternalError("st exceeds st_M")
    if sf_m.value is not None and sm.value is not None:
        e = sf_n.get(sm.value)
        if e is not None and e.value is not None and sf_m.value != e.value:
            raise InternalError("sf_M disagrees with sf at n=sm")
    for n, e in sf_n.items():
        if e.value is not None and sf_m.value is not None and sm.value is not None:
            if n >= sm.value and not (1 <= e.value <= sf_m.value):
                raise InternalError("sf_n out of range")

    return InvariantReport(target, sm, st, st_m, sf, sf_n, sf_m)
