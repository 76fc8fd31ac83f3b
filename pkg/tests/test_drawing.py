from __future__ import annotations

import itertools

import pytest

from kndrawings.drawing import (
    GoodDrawing,
    all_edges,
    crossing_id,
    drawing_from_json,
    drawing_to_json,
    decode_drawing,
    edge,
    encode_drawing,
    from_geometric,
    mirror,
    normalize_cycle,
    relabel,
    validate_good,
)
from kndrawings.errors import ParseError, StructureError
from kndrawings.geometry import generate_convex, generate_general


def test_edge_helpers():
    assert edge(3, 1) == (1, 3)
    assert crossing_id((2, 4), (1, 3)) == ((1, 3), (2, 4))
    assert all_edges(4) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert normalize_cycle((3, 1, 2)) == (1, 2, 3)
    assert normalize_cycle(()) == ()


def test_rotation_normalized_on_construction(crossed_k4):
    # stored cycles all start at the smallest neighbor
    for v, cyc in crossed_k4.rotation.items():
        assert cyc[0] == min(cyc)
    rotated = GoodDrawing(
        n=4,
        rotation={1: (3, 4, 2), 2: (4, 1, 3), 3: (1, 2, 4), 4: (2, 3, 1)},
        crossings_along={
            (1, 3): (((1, 3), (2, 4)),),
            (2, 4): (((1, 3), (2, 4)),),
        },
        crossing_sign={((1, 3), (2, 4)): 1},
    )
    assert rotated == crossed_k4
    assert hash(rotated) == hash(crossed_k4)


def test_crossings_from_reverses(crossed_k4):
    x = ((1, 3), (2, 4))
    assert crossed_k4.crossings_from((1, 3), 1) == (x,)
    assert crossed_k4.crossings_from((1, 3), 3) == (x,)
    d = from_geometric(generate_convex(5, 0))
    e = (2, 5)
    fwd = d.crossings_from(e, 2)
    assert d.crossings_from(e, 5) == tuple(reversed(fwd))


def test_validate_good_fixtures(planar_k4, crossed_k4):
    assert validate_good(planar_k4).ok
    assert validate_good(crossed_k4).ok


def test_validate_incomplete_rotation_cycle():
    d = GoodDrawing(
        n=3,
        rotation={1: (2, 3), 2: (1, 3), 3: (1, 1)},
        crossings_along={},
        crossing_sign={},
    )
    rep = validate_good(d)
    assert not rep.ok
    assert "rotation-incomplete" in rep.rules()


def test_validate_missing_rotation_key_is_structural():
    d = GoodDrawing(
        n=3,
        rotation={1: (2, 3), 2: (1, 3)},
        crossings_along={},
        crossing_sign={},
    )
    with pytest.raises(StructureError):
        validate_good(d)


def test_validate_adjacent_crossing_rejected():
    x = crossing_id((1, 2), (1, 3))
    d = GoodDrawing(
        n=3,
        rotation={1: (2, 3), 2: (1, 3), 3: (1, 2)},
        crossings_along={(1, 2): (x,), (1, 3): (x,)},
        crossing_sign={x: 1},
    )
    rep = validate_good(d)
    assert "adjacent-edges-cross" in rep.rules()


def test_validate_sign_rules(crossed_k4):
    x = ((1, 3), (2, 4))
    no_sign = GoodDrawing(
        n=4, rotation=crossed_k4.rotation,
        crossings_along=crossed_k4.crossings_along, crossing_sign={},
    )
    assert "sign-missing" in validate_good(no_sign).rules()

    bad_sign = GoodDrawing(
        n=4, rotation=crossed_k4.rotation,
        crossings_along=crossed_k4.crossings_along, crossing_sign={x: 2},
    )
    assert "sign-invalid" in validate_good(bad_sign).rules()

    orphan = GoodDrawing(
        n=4, rotation=crossed_k4.rotation,
        crossings_along={}, crossing_sign={x: 1},
    )
    assert "sign-orphan" in validate_good(orphan).rules()


def test_validate_asymmetric_crossing_lists():
    x = ((1, 3), (2, 4))
    d = GoodDrawing(
        n=4,
        rotation={1: (2, 3, 4), 2: (3, 4, 1), 3: (4, 1, 2), 4: (1, 2, 3)},
        crossings_along={(1, 3): (x,)},  # missing from (2,4)
        crossing_sign={x: 1},
    )
    assert "crossing-list-asymmetry" in validate_good(d).rules()


def test_validate_sign_flip_breaks_sphericity(crossed_k4):
    x = ((1, 3), (2, 4))
    flipped = GoodDrawing(
        n=4, rotation=crossed_k4.rotation,
        crossings_along=crossed_k4.crossings_along, crossing_sign={x: -1},
    )
    rep = validate_good(flipped)
    assert not rep.ok
    assert "non-spherical" in rep.rules()


def test_structure_error_out_of_range():
    d = GoodDrawing(
        n=3,
        rotation={1: (2, 3), 2: (1, 3), 3: (1, 5)},
        crossings_along={},
        crossing_sign={},
    )
    with pytest.raises(StructureError):
        validate_good(d)


def test_structure_error_degenerate_edge():
    d = GoodDrawing(
        n=3,
        rotation={1: (2, 3), 2: (1, 3), 3: (1, 2)},
        crossings_along={(2, 2): ()},
        crossing_sign={},
    )
    with pytest.raises(StructureError):
        validate_good(d)


def test_from_geometric_square(unit_square, crossed_k4):
    assert from_geometric(unit_square) == crossed_k4


def test_from_geometric_convex_crossing_count():
    from math import comb

    for n in (4, 5, 6, 7):
        d = from_geometric(generate_convex(n, seed=2))
        assert d.crossing_count == comb(n, 4)
        assert validate_good(d).ok


def test_from_geometric_general_validates():
    for seed in range(10):
        d = from_geometric(generate_general(6, seed))
        assert validate_good(d).ok


def test_relabel_identity_and_inverse():
    d = from_geometric(generate_general(6, 3))
    ident = {v: v for v in range(1, 7)}
    assert relabel(d, ident) == d
    perm = {1: 4, 2: 6, 3: 1, 4: 2, 5: 3, 6: 5}
    inv = {b: a for a, b in perm.items()}
    assert relabel(relabel(d, perm), inv) == d


def test_relabel_preserves_validity_and_counts():
    d = from_geometric(generate_general(6, 5))
    for perm in ({1: 2, 2: 1, 3: 3, 4: 4, 5: 5, 6: 6},
                 {1: 6, 2: 5, 3: 4, 4: 3, 5: 2, 6: 1}):
        r = relabel(d, perm)
        assert validate_good(r).ok
        assert r.crossing_count == d.crossing_count


def test_relabel_matches_point_permutation():
    # relabelling the drawing == drawing the relabelled points
    from kndrawings.geometry import PointConfiguration

    cfg = generate_general(5, 9)
    for perm_tuple in itertools.permutations(range(1, 6)):
        perm = {v: perm_tuple[v - 1] for v in range(1, 6)}
        pts = [None] * 5
        for v in range(1, 6):
            pts[perm[v] - 1] = cfg.point(v)
        moved = from_geometric(PointConfiguration(5, tuple(pts)))
        assert relabel(from_geometric(cfg), perm) == moved


def test_mirror_involution():
    d = from_geometric(generate_general(6, 1))
    m = mirror(d)
    assert m != d  # 6 random points essentially never give a symmetric drawing
    assert mirror(m) == d
    assert validate_good(m).ok


def test_mirror_matches_reflected_points():
    from kndrawings.geometry import Point, PointConfiguration

    cfg = generate_general(5, 4)
    flipped = PointConfiguration(
        5, tuple(Point(-p.x, p.y) for p in cfg.points)
    )
    assert mirror(from_geometric(cfg)) == from_geometric(flipped)


def test_drawing_json_round_trip(crossed_k4):
    for d in (crossed_k4, from_geometric(generate_general(6, 8))):
        blob = drawing_to_json(d)
        assert drawing_from_json(blob) == d
        raw = encode_drawing(d)
        assert decode_drawing(raw) == d
        assert encode_drawing(decode_drawing(raw)) == raw


def test_drawing_json_shape(crossed_k4):
    blob = drawing_to_json(crossed_k4)
    assert blob["n"] == 4
    assert blob["rotation"]["1"] == [2, 3, 4]
    assert blob["crossings"] == [{"edges": [[1, 3], [2, 4]], "sign": 1}]
    assert blob["order"] == {"1-3": [0], "2-4": [0]}


@pytest.mark.parametrize(
    "mangle",
    [
        lambda b: b.pop("n"),
        lambda b: b["rotation"].pop("2"),
        lambda b: b["rotation"].__setitem__("1", [2, 3, 9]),
        lambda b: b["crossings"][0].pop("sign"),
        lambda b: b["crossings"][0].__setitem__("sign", 0),
        lambda b: b["crossings"][0].__setitem__("edges", [[1, 3]]),
        lambda b: b["order"].__setitem__("1-3", [5]),
        lambda b: b["order"].__setitem__("x", [0]),
    ],
)
def test_drawing_from_json_rejects(crossed_k4, mangle):
    blob = drawing_to_json(crossed_k4)
    mangle(blob)
    with pytest.raises(ParseError):
        drawing_from_json(blob)


def test_parse_accepts_short_cycle_validation_rejects(crossed_k4):
    # a short rotation list parses (every vertex has an entry) but the
    # drawing it yields is reported invalid, not crashed on
    blob = drawing_to_json(crossed_k4)
    blob["rotation"]["1"] = [2, 3]
    d = drawing_from_json(blob)
    assert "rotation-incomplete" in validate_good(d).rules()


def test_decode_rejects_junk():
    with pytest.raises(ParseError):
        decode_drawing(b"not json")
    with pytest.raises(ParseError):
        decode_drawing(b"[1, 2, 3]")
