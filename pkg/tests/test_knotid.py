import pytest

from spheremosaic.errors import InternalError, NotAKnot, TooManyCrossings
from spheremosaic.knotid import (
    GaussCode,
    KnotTable,
    PDCode,
    classify,
    determinant,
    extract_gauss,
    extract_pd,
    gauss_from_pd,
    is_alternating_diagram,
    jones,
    kauffman_bracket,
    load_table,
    naive_bracket,
    pd_face_count,
    pd_mirror,
    writhe,
)
from spheremosaic.laurent import LaurentPolynomial as L
from spheremosaic.sphere import SphericalMosaic, cube_rotations, mirror_mosaic, rotate_mosaic
from spheremosaic.transforms import max_crossing_construction

# externally confirmed (PD, Jones) anchor pairs, Knot Atlas convention
TREFOIL_LEFT = PDCode(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)))
FIG8 = PDCode(((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)))

V_TREFOIL_LEFT = L({-4: -1, -3: 1, -1: 1})
V_FIG8 = L({2: 1, -2: 1, 1: -1, -1: -1, 0: 1})


def test_jones_anchors():
    assert jones(TREFOIL_LEFT) == V_TREFOIL_LEFT
    assert jones(FIG8) == V_FIG8


def test_empty_pd():
    empty = PDCode(())
    assert kauffman_bracket(empty) == L.one()
    assert jones(empty) == L.one()
    assert writhe(empty) == 0
    assert determinant(empty) == 1


def test_writhe_sign_convention():
    # the tabled trefoil is left-handed; its mirror is the right trefoil
    assert writhe(TREFOIL_LEFT) == -3
    right = pd_mirror(TREFOIL_LEFT)
    assert writhe(right) == +3
    assert jones(right) == V_TREFOIL_LEFT.mirror()
    assert writhe(FIG8) == 0


def test_kink_brackets():
    # one-crossing diagrams: bracket is -A^3 or -A^-3 by handedness
    values = set()
    for kink in (PDCode(((1, 1, 2, 2),)), PDCode(((1, 2, 2, 1),))):
        b = kauffman_bracket(kink)
        assert b in (L({3: -1}), L({-3: -1}))
        assert naive_bracket(kink) == b
        assert jones(kink) == L.one()  # normalization kills the kink
        values.add(b)
    assert len(values) == 2


def test_mirror_is_involution():
    for pd in (TREFOIL_LEFT, FIG8):
        assert pd_mirror(pd_mirror(pd)) == pd


def test_bracket_memo_equals_naive_on_table(table):
    for name in table.names():
        pd = table[name].pd
        assert kauffman_bracket(pd) == naive_bracket(pd), name


def test_bracket_memo_equals_naive_on_random_mosaics():
    from spheremosaic.search import sample_mosaics

    diagrams = 0
    for m in sample_mosaics(2, 40, seed=17, require_knot=True):
        pd = extract_pd(m)
        if not 1 <= len(pd.crossings) <= 10:
            continue
        diagrams += 1
        assert kauffman_bracket(pd) == naive_bracket(pd)
    assert diagrams >= 10


def test_crossing_limit():
    with pytest.raises(TooManyCrossings):
        kauffman_bracket(TREFOIL_LEFT, limit=2)
    with pytest.raises(TooManyCrossings):
        classify_mosaic_with_limit()


def classify_mosaic_with_limit():
    m = max_crossing_construction(1)
    classify(m, limit=3)


def test_determinants(table):
    assert determinant(TREFOIL_LEFT) == 3
    assert determinant(FIG8) == 5
    assert determinant(table["5_1"].pd) == 5
    assert determinant(table["8_18"].pd) == 45


def test_fig8_amphichiral():
    assert jones(FIG8).is_palindromic()
    assert jones(pd_mirror(FIG8)) == jones(FIG8)


def test_is_alternating():
    assert is_alternating_diagram(GaussCode(()))
    alt = GaussCode(((1, "O", 1), (2, "U", 1), (3, "O", 1), (1, "U", 1), (2, "O", 1), (3, "U", 1)))
    assert is_alternating_diagram(alt)
    not_alt = GaussCode(((1, "O", 1), (2, "O", 1), (1, "U", 1), (2, "U", 1)))
    assert not is_alternating_diagram(not_alt)


def test_gauss_from_pd_matches_alternation(table):
    for name in ("3_1", "4_1", "7_6", "8_17"):
        assert is_alternating_diagram(gauss_from_pd(table[name].pd)), name
    for name in ("8_19", "8_20", "8_21"):
        assert not is_alternating_diagram(gauss_from_pd(table[name].pd)), name


def test_pd_face_count_planar(table):
    for name in table.names():
        pd = table[name].pd
        assert pd_face_count(pd) == len(pd.crossings) + 2, name


def test_extract_pd_corner_unknot(corner_unknot):
    assert extract_pd(corner_unknot) == PDCode(())


def test_extract_pd_maxcross():
    m = max_crossing_construction(1, seed=3)
    pd = extract_pd(m)
    assert len(pd.crossings) == 4
    pd.validate()
    labels = [x for t in pd.crossings for x in t]
    assert sorted(set(labels)) == list(range(1, 9))


def test_extract_gauss_signs_match_writhe():
    from spheremosaic.search import sample_mosaics

    for m in sample_mosaics(2, 25, seed=23, require_knot=True, min_crossings=1):
        pd = extract_pd(m)
        g = extract_gauss(m)
        per_crossing = {}
        for cid, _, sign in g.visits:
            per_crossing[cid] = sign
        assert sum(per_crossing.values()) == writhe(pd)


def test_classify_unknot(corner_unknot):
    kid = classify(corner_unknot)
    assert kid.name == "0_1"
    assert kid.chirality == "amphichiral-equal"


def test_classify_rotation_invariant(corner_unknot):
    from spheremosaic.search import sample_mosaics

    mosaics = [corner_unknot] + sample_mosaics(1, 10, seed=31, require_knot=True)
    for m in mosaics:
        base = classify(m)
        for g in cube_rotations():
            assert classify(rotate_mosaic(m, g)) == base


def test_classify_mirror_flips_chirality():
    from spheremosaic.search import sample_mosaics

    flipped = {"as-tabled": "mirror", "mirror": "as-tabled",
               "amphichiral-equal": "amphichiral-equal"}
    seen_chiral = False
    for m in sample_mosaics(1, 30, seed=41, require_knot=True, min_crossings=3):
        kid = classify(m)
        mirrored = classify(mirror_mosaic(m))
        assert mirrored.name == kid.name
        assert mirrored.chirality == flipped[kid.chirality]
        if kid.chirality != "amphichiral-equal":
            seen_chiral = True
    assert seen_chiral


def test_classify_requires_knot():
    with pytest.raises(NotAKnot):
        classify(SphericalMosaic.empty(1))


def test_determinant_consistency_on_samples(table):
    from spheremosaic.search import sample_mosaics

    for m in sample_mosaics(1, 15, seed=47, require_knot=True):
        pd = extract_pd(m)
        v = jones(pd)
        assert determinant(pd) == abs(v.evaluate(-1))


def test_table_load():
    table = load_table()
    assert len(table) == 36
    assert "0_1" in table and "8_21" in table
    assert table["0_1"].jones == L.one()
    # every nontrivial entry has as many tuples as its crossing number
    for name in table.names():
        assert len(table[name].pd.crossings) == table[name].crossings


def test_table_distinctness_check_fires():
    text = "\n".join(
        [
            "a_1;3;pd=[(1,4,2,5),(3,6,4,1),(5,2,6,3)]",
            # the mirror trefoil collides with a_1 up to t <-> 1/t
            "b_1;3;pd=[(4,1,5,2),(6,3,1,4),(2,5,3,6)]",
        ]
    )
    with pytest.raises(InternalError):
        KnotTable.from_text(text)


def test_lookup_mirror_flag(table):
    v = table["3_1"].jones
    assert table.lookup(v).chirality == "as-tabled"
    assert table.lookup(v.mirror()).chirality == "mirror"
    assert table.lookup(L.one()).name == "0_1"
    assert table.lookup(L({99: 1})) is None
