import numpy as np
import pytest

from oracles import braid_equal
from parabolica import artin as ag
from parabolica import braid as bc
from parabolica import parabolic as pc
from parabolica.artin import gword
from parabolica.errors import InvalidInterval, NotBraidSubgroup, NotPure
from parabolica.parabolic import CyclicInterval, Interval, ParabolicSubgroup
from parabolica.sampling import random_group_word, random_parabolic

A4, B4 = ag.type_a(4), ag.type_b(4)


def std(group, lo, hi):
    return pc.standard(group, Interval(lo, hi))


def test_central_element_examples():
    za = pc.central_element(A4, Interval(1, 2))
    assert ag.equal_in_group(za, gword(A4, [1, 2, 1, 1, 2, 1]))
    assert pc.central_element(B4, Interval(1, 1)).letters == (1,)
    zb = pc.central_element(B4, Interval(1, 2))
    assert ag.equal_in_group(zb, gword(B4, [2, 1, 2, 1]))


def test_central_elements_commute_oracle():
    # checked with the free-group action instead of normal forms
    for group in (ag.type_b(4), ag.type_at(3), ag.type_ct(3)):
        for base in pc.standard_bases(group):
            z = ag.to_braid(pc.central_element(group, base))
            for t in base.members():
                g = ag.to_braid(gword(group, [t]))
                assert braid_equal(z.strands, z.letters + g.letters, g.letters + z.letters)


def test_bases_validate():
    with pytest.raises(InvalidInterval):
        pc.standard(A4, Interval(1, 4))
    with pytest.raises(InvalidInterval):
        Interval(3, 2)
    at = ag.type_at(4)
    wrapped = pc.base_from_json(at, {"wrapLo": 4, "wrapHi": 0})
    assert wrapped.members() == [4, 0] and wrapped.to_json() == {"wrapLo": 4, "wrapHi": 0}
    with pytest.raises(InvalidInterval):
        pc.base_from_json(B4, {"wrapLo": 4, "wrapHi": 0})
    assert len(pc.standard_bases(at)) == 5 * 4


def test_parab_equal_examples():
    p = ParabolicSubgroup(A4, Interval(1, 1), gword(A4, [1]))
    assert pc.parab_equal(p, std(A4, 1, 1))
    q = ParabolicSubgroup(B4, Interval(1, 1), gword(B4, [2]))
    assert not pc.parab_equal(q, std(B4, 1, 1))
    delta = gword(A4, bc.braid_delta(4).letters)
    assert pc.parab_equal(ParabolicSubgroup(A4, Interval(1, 1), delta), std(A4, 4, 4))


def test_parab_adjacent_examples():
    assert pc.parab_adjacent(std(A4, 1, 1), std(A4, 3, 3))
    assert not pc.parab_adjacent(std(A4, 1, 1), std(A4, 2, 2))
    assert pc.parab_adjacent(std(A4, 1, 1), std(A4, 1, 2))
    assert not pc.parab_adjacent(std(A4, 1, 2), std(A4, 1, 2))


def test_is_standard_examples():
    assert pc.is_standard(ParabolicSubgroup(A4, Interval(2, 3), gword(A4, [2]))) == Interval(2, 3)
    assert pc.is_standard(ParabolicSubgroup(A4, Interval(1, 1), gword(A4, [2]))) is None
    at = ag.type_at(4)
    wrapped = pc.base_from_json(at, {"wrapLo": 4, "wrapHi": 0})
    assert pc.is_standard(pc.standard(at, wrapped)) == wrapped


def test_theta_preimage_examples():
    n = 3
    b = ag.type_b(n + 1)
    p = pc.theta_preimage(std(b, 2, 3))
    assert p.group == ag.type_at(n)
    assert pc.is_standard(p) == CyclicInterval(1, 2, n + 1)
    with pytest.raises(NotBraidSubgroup):
        pc.theta_preimage(std(b, 1, 1))
    q = ParabolicSubgroup(b, Interval(2, 2), ag.rho(n))
    assert pc.is_braid_subgroup(q)
    pre = pc.theta_preimage(q)
    assert pc.theta_image(pre).key == q.key


def test_theta_image_round_trip_random():
    rng = np.random.default_rng(9)
    for _ in range(100):
        n = int(rng.integers(2, 5))
        p = random_parabolic(rng, ag.type_at(n), 8)
        q = pc.theta_image(p)
        assert pc.is_braid_subgroup(q)
        assert pc.parab_equal(pc.theta_preimage(q), p)


def test_technical_normalize_examples():
    g = bc.make_word(5, [2])
    assert pc.lemma_technical_normalize(4, Interval(2, 2), g, 0, 0) == ("i", g)
    tag, z = pc.lemma_technical_normalize(4, Interval(2, 2), g, 3, 3)
    assert tag == "ii" and z.letters == (3,)
    g = bc.make_word(5, [2, 3])
    j0 = bc.permutation_of(g)(3) - 1
    tag, z = pc.lemma_technical_normalize(4, Interval(2, 3), g, 2, j0)
    assert tag == "iii"
    assert bc.in_standard_parabolic(z, 1, 2)
    with pytest.raises(NotPure):
        pc.lemma_technical_normalize(4, Interval(2, 3), g, 2, (j0 + 1) % 5)


def test_conjugation_equivariance():
    rng = np.random.default_rng(10)
    for group in (A4, B4, ag.type_at(3), ag.type_ct(3)):
        for _ in range(20):
            p, q = random_parabolic(rng, group, 5), random_parabolic(rng, group, 5)
            h = random_group_word(rng, group, 5)
            assert pc.parab_equal(p, q) == pc.parab_equal(p.conjugated(h), q.conjugated(h))
            assert pc.parab_adjacent(p, q) == pc.parab_adjacent(q, p)


def test_json_round_trip():
    rng = np.random.default_rng(11)
    for group in (A4, B4, ag.type_at(3), ag.type_ct(3)):
        p = random_parabolic(rng, group, 6)
        back = pc.parabolic_from_json(p.to_json())
        assert back.key == p.key and back.base == p.base
