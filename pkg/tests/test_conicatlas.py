import pytest

from conicfans import conicatlas as ca
from conicfans import fixtures
from conicfans import lunavust as lv
from conicfans.rootcore import (ParabolicSubset, StructureError,
                                UnsupportedAlgebraError, duality_involution)


def test_parse_and_reject():
    assert ca.parse_label("B4") == ("B", 4)
    with pytest.raises(Exception):
        ca.parse_label("X9")
    with pytest.raises(UnsupportedAlgebraError):
        ca.build_entry("A3")
    with pytest.raises(UnsupportedAlgebraError):
        ca.build_entry("C4")


@pytest.mark.parametrize("label,j0,n", [
    ("B3", 2, 3), ("B5", 2, 7), ("D4", 2, 4), ("D6", 2, 8),
    ("E6", 6, 10), ("E7", 6, 16), ("E8", 1, 28), ("F4", 4, 7), ("G2", 2, 2)])
def test_adjoint_data(label, j0, n):
    series, rank = ca.parse_label(label)
    ad = ca.adjoint_data(series, rank)
    assert ad.j0 == j0
    assert ad.n == n


def test_line_stabilizers():
    assert ca.line_stabilizer(ca.adjoint_data("B", 5)).missing == {1, 3}
    assert ca.line_stabilizer(ca.adjoint_data("E", 8)).missing == {2}
    assert ca.line_stabilizer(ca.adjoint_data("G", 2)).missing == {1}


def test_planes_table():
    d4 = ca.b_stable_planes(ca.adjoint_data("D", 4))
    assert [(p.beta, sorted(p.stabilizer.missing), p.in_z) for p in d4] == [
        (1, [3, 4], True), (3, [1, 4], True), (4, [1, 3], True)]
    g2 = ca.b_stable_planes(ca.adjoint_data("G", 2))
    assert [(p.beta, sorted(p.stabilizer.missing), p.in_z) for p in g2] == [
        (1, [1], False)]
    b3 = ca.b_stable_planes(ca.adjoint_data("B", 3))
    assert [(p.beta, sorted(p.stabilizer.missing), p.in_z) for p in b3] == [
        (1, [3], True), (3, [1, 3], False)]


def test_solve_colors_examples():
    for label, target, expect in [
            ("B5", {1, 3}, {2, 4}),
            ("B3", {1, 3}, {2}),
            ("E6", {2, 3, 4}, {1, 4})]:
        entry = ca.build_entry(label)
        lists = {i: entry.rrd.reps_of(i)
                 for i in range(1, entry.rrd.restricted.rank + 1)}
        theta = duality_involution(entry.ad.g)
        got = ca.solve_colors(entry.rrd, lists, ParabolicSubset(frozenset(target)),
                              theta)
        assert got == frozenset(expect)


def test_solve_colors_contradiction():
    entry = ca.build_entry("B4")
    lists = {i: entry.rrd.reps_of(i) for i in range(1, 5)}
    theta = duality_involution(entry.ad.g)
    with pytest.raises(StructureError):
        ca.solve_colors(entry.rrd, lists, ParabolicSubset(frozenset({1, 2, 5})), theta)


@pytest.mark.parametrize("label", fixtures.supported_labels(6))
def test_entries_build_and_report(label):
    entry = ca.build_entry(label)
    kind = entry.kind
    assert len(entry.chow_fan) == fixtures.ORBIT_COUNTS[kind]["chow"]
    assert len(entry.hilb_fan) == fixtures.ORBIT_COUNTS[kind]["hilb"]
    for scheme in ("chow", "hilb"):
        rep = ca.orbit_report(entry, scheme)
        assert rep.counts() == fixtures.expected_type_multiset(kind, scheme)


def test_chow_cone_matches_table():
    entry = ca.build_entry("E7")
    maxc = lv.maximal_cones(entry.chow_fan, entry.rrd)[0]
    syms, cols = fixtures.CHOW_CONES["EF"]
    expected = ca.resolve_cone(entry.rrd, syms, cols)
    assert maxc.key() == expected.key()
    assert maxc.colors == frozenset({1, 2, 4})


def test_reducible_divisor_ray():
    for label, sym in [("B5", "-g2"), ("E6", "-g4"), ("G2", "-g2")]:
        entry = ca.build_entry(label)
        assert ca.reducible_divisor_ray(entry) == ca.resolve_ray(entry.rrd, sym)


def test_double_coset_table():
    table = ca.double_coset_table(max_rank=6)
    assert table["D4"] == 8
    assert table["E6"] == 4
    assert table["B6"] == 6


def test_d4_hilb_level_counts():
    entry = ca.build_entry("D4")
    rep = ca.orbit_report(entry, "hilb")
    assert rep.poset.levels_by_dim() == {0: 1, 1: 4, 2: 7, 3: 6, 4: 3}


def test_g2_chain_report():
    entry = ca.build_entry("G2")
    rep = ca.orbit_report(entry, "hilb")
    assert rep.types.count("Twistor") == 1
    assert rep.poset.node_count() == 3
    assert len(rep.poset.covers) == 2


def test_e7_hilb_type_counts():
    rep = ca.orbit_report(ca.build_entry("E7"), "hilb")
    assert rep.counts() == {"Twistor": 1, "NPC": 1, "PC": 1, "NPR": 2,
                            "PR": 1, "NPD": 2, "PD": 1}


def test_b4_chow_type_counts():
    rep = ca.orbit_report(ca.build_entry("B4"), "chow")
    assert rep.counts() == {"Twistor": 1, "NPC": 2, "PC": 2, "NPR": 3,
                            "PR": 2, "DL": 1}


def test_fans_coincide_only_for_g2():
    g2 = ca.build_entry("G2")
    assert {c.key() for c in g2.chow_fan} == {c.key() for c in g2.hilb_fan}
    b4 = ca.build_entry("B4")
    assert {c.key() for c in b4.chow_fan} != {c.key() for c in b4.hilb_fan}


def test_entry_json_round_trip_fan():
    from conicfans.lunavust import fan_from_json_dict
    entry = ca.build_entry("D4")
    data = ca.entry_to_json_dict(entry)
    assert data["g"] == "D4" and data["j0"] == 2 and data["n"] == 4
    assert data["double_cosets"] == 8
    back = fan_from_json_dict(data["hilb"])
    assert {c.key() for c in back} == {c.key() for c in entry.hilb_fan}
    assert len(data["orbits"]["hilb"]["orbits"]) == 21
