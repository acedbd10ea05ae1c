import pytest

from conicfans import rootcore as rc

COUNTS = {("A", 1): 2, ("A", 2): 6, ("B", 3): 18, ("B", 4): 32, ("C", 3): 18,
          ("D", 4): 24, ("E", 6): 72, ("E", 7): 126, ("E", 8): 240,
          ("F", 4): 48, ("G", 2): 12}


@pytest.mark.parametrize("series,rank", sorted(COUNTS))
def test_root_counts(series, rank):
    rd = rc.build_root_datum(series, rank)
    assert len(rd.roots) == COUNTS[(series, rank)]
    assert len(rd.positive_roots) * 2 == len(rd.roots)


def test_invalid_types_rejected():
    for series, rank in [("H", 3), ("A", 0), ("E", 9), ("F", 5), ("G", 3), ("D", 3)]:
        with pytest.raises(rc.InvalidTypeError):
            rc.build_root_datum(series, rank)


def test_g2_positive_roots():
    g2 = rc.build_root_datum("G", 2)
    assert set(g2.positive_roots) == {
        (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert rc.highest_root(g2) == (3, 2)


def test_small_highest_roots():
    assert rc.highest_root(rc.build_root_datum("A", 1)) == (1,)
    assert rc.highest_root(rc.build_root_datum("B", 4)) == (1, 2, 2, 2)


def test_reflections_in_a2():
    a2 = rc.build_root_datum("A", 2)
    assert rc.reflect(a2, (1, 0), 1) == (-1, 0)
    assert rc.reflect(a2, (0, 1), 1) == (1, 1)
    assert rc.weyl_apply(a2, rc.WeylWord(()), (5, 7)) == (5, 7)
    with pytest.raises(IndexError):
        rc.reflect(a2, (1, 0), 3)


def test_reflection_closure_and_killing():
    for series, rank in [("B", 3), ("F", 4), ("G", 2), ("D", 5)]:
        rd = rc.build_root_datum(series, rank)
        for g in rd.roots:
            for i in range(1, rd.rank + 1):
                assert rd.is_root(rd.reflect(g, i))
        k = rd.killing
        for i in range(rd.rank):
            for j in range(rd.rank):
                assert 2 * k[i][j] / k[j][j] == rd.cartan[i][j]
                prod = rd.cartan[i][j] * rd.cartan[j][i]
                if i != j:
                    assert prod in (0, 1, 2, 3)


def test_reflection_is_killing_isometry():
    rd = rc.build_root_datum("F", 4)
    v, w = (1, 2, 0, 1), (0, 1, 1, 1)
    for i in range(1, 5):
        assert rd.killing_pair(rd.reflect(v, i), rd.reflect(w, i)) == rd.killing_pair(v, w)


def test_longest_element():
    a1 = rc.build_root_datum("A", 1)
    assert rc.longest_element(a1).word == (1,)
    for series, rank in [("B", 4), ("E", 6), ("D", 5)]:
        rd = rc.build_root_datum(series, rank)
        w0 = rc.longest_element(rd)
        assert len(w0.word) == len(rd.positive_roots)
        v = rd.half_sum_positive
        image = rc.weyl_apply(rd, w0, v)
        assert all(rd.pairing(image, i) < 0 for i in range(1, rd.rank + 1))
        assert rc.weyl_apply(rd, w0, image) == v


def test_duality_involution():
    assert rc.duality_involution(rc.build_root_datum("B", 5)) == {
        i: i for i in range(1, 6)}
    assert rc.duality_involution(rc.build_root_datum("A", 2)) == {1: 2, 2: 1}
    e6 = rc.duality_involution(rc.build_root_datum("E", 6))
    assert e6 == {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}


def test_parabolic_intersection():
    p1 = rc.ParabolicSubset.of(3)
    p2 = rc.ParabolicSubset.of(1)
    assert rc.parabolic_intersection(p1, p2).missing == {1, 3}
    assert rc.parabolic_intersection(rc.ParabolicSubset(frozenset()), p1).missing == {3}
    union = rc.parabolic_intersection(rc.ParabolicSubset.of(2, 4),
                                      rc.ParabolicSubset.of(3),
                                      rc.ParabolicSubset.of(6))
    assert union.missing == {2, 3, 4, 6}


def test_coset_orbit_sizes():
    a2 = rc.build_root_datum("A", 2)
    assert len(rc.coset_orbit(a2, rc.ParabolicSubset.of(1))) == 3
    b3 = rc.build_root_datum("B", 3)
    assert len(rc.coset_orbit(b3, rc.ParabolicSubset.of(1))) == 6
    # orbit sizes divide the Weyl order computed from the classical formula
    for subset in [{1}, {2}, {1, 3}]:
        orbit = rc.coset_orbit(b3, rc.ParabolicSubset(frozenset(subset)))
        assert b3.weyl_order() % len(orbit) == 0


def test_coset_orbit_cap():
    e7 = rc.build_root_datum("E", 7)
    with pytest.raises(rc.OrbitLimitError):
        rc.coset_orbit(e7, rc.ParabolicSubset.of(1, 2, 3, 4, 5, 6, 7), cap=1000)


def test_e7_inside_e8_levi_orbit_is_small():
    e8 = rc.build_root_datum("E", 8)
    pss, mapping = rc.subdatum(e8, range(2, 9))
    assert pss.components == (("E", 7),)
    orbit = rc.coset_orbit(pss, rc.ParabolicSubset.of(mapping[2]))
    # the crossed end node leaves an E6 stabilizer: the 56-point coset space
    assert len(orbit) == 56
    assert pss.weyl_order() % len(orbit) == 0


def test_double_coset_counts():
    g2 = rc.build_root_datum("A", 1)
    assert rc.double_coset_count(g2, rc.ParabolicSubset.of(1)) == 2
    prod = rc.product_datum([rc.build_root_datum("A", 1)] * 3)
    assert rc.double_coset_count(prod, rc.ParabolicSubset.of(1, 2, 3)) == 8
    c3 = rc.build_root_datum("C", 3)
    assert rc.double_coset_count(c3, rc.ParabolicSubset.of(3)) == 4
    assert rc.double_coset_count(c3, rc.ParabolicSubset(frozenset())) == 1


def test_double_coset_trivial_iff_empty():
    b3 = rc.build_root_datum("B", 3)
    assert rc.double_coset_count(b3, rc.ParabolicSubset(frozenset())) == 1
    for bits in range(1, 8):
        subset = frozenset(i + 1 for i in range(3) if bits >> i & 1)
        assert rc.double_coset_count(b3, rc.ParabolicSubset(subset)) >= 2


def test_double_coset_relabel_invariance():
    # the triality-symmetric D4 counts do not depend on which outer node is used
    d4 = rc.build_root_datum("D", 4)
    pss, mapping = rc.subdatum(d4, [1, 3, 4])
    counts = {rc.double_coset_count(pss, rc.ParabolicSubset.of(mapping[i]))
              for i in (1, 3, 4)}
    assert len(counts) == 1


def test_subdatum_components():
    b5 = rc.build_root_datum("B", 5)
    pss, mapping = rc.subdatum(b5, [1, 3, 4, 5])
    assert pss.components == (("A", 1), ("B", 3))
    assert mapping == {1: 1, 3: 2, 4: 3, 5: 4}
    d5 = rc.build_root_datum("D", 5)
    sub, _ = rc.subdatum(d5, [1, 3, 4, 5])
    assert sub.components == (("A", 1), ("A", 3))


def test_weyl_order_formula():
    assert rc.build_root_datum("E", 7).weyl_order() == 2903040
    assert rc.build_root_datum("B", 4).weyl_order() == 2**4 * 24


def test_json_export_keys():
    d = rc.build_root_datum("B", 3).to_json_dict()
    assert set(d) == {"label", "cartan", "roots", "killing"}
    assert len(d["roots"]) == 18
