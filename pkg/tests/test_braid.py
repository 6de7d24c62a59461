import numpy as np
import pytest

from oracles import braid_equal, strand_permutation
from parabolica import braid as bc
from parabolica.errors import IndexOutOfRange, StrandMismatch


def w(strands, *letters):
    return bc.make_word(strands, letters)


def test_constructor_echo():
    assert w(4, 1, 2, 1).letters == (1, 2, 1)
    assert w(4, 1, -1).letters == (1, -1)
    with pytest.raises(IndexOutOfRange):
        w(3, 3)
    with pytest.raises(IndexOutOfRange):
        w(3, 0)


def test_parse_and_render():
    u = bc.parse_word(4, "1 2 -1")
    assert u.letters == (1, 2, -1)
    assert str(u) == "1 2 -1"
    assert u.to_json() == {"strands": 4, "letters": [1, 2, -1]}
    assert bc.parse_word(4, "").letters == ()


def test_group_operations():
    assert bc.multiply(w(3, 1), w(3, 2)).letters == (1, 2)
    assert bc.invert(w(3, 1, 2)).letters == (-2, -1)
    assert bc.conjugate(w(3, 1), w(3, 2)).letters == (-2, 1, 2)
    with pytest.raises(StrandMismatch):
        bc.multiply(w(3, 1), w(4, 1))


def test_permutation_examples():
    assert bc.permutation_of(bc.braid_a(4, 3))(4) == 1
    assert bc.permutation_of(bc.braid_b(4, 2))(2) == 5
    assert bc.permutation_of(w(3, 1, -1)).is_identity()


def test_normal_form_examples():
    nf = bc.normal_form(w(3, 1, 2, 1))
    assert (nf.delta_power, nf.factors) == (1, ())
    assert nf.render() == "Δ^1 ·"
    empty = bc.normal_form(bc.identity(4))
    assert (empty.delta_power, empty.factors) == (0, ())
    rel = bc.normal_form(w(3, 1, 2, 1, -2, -1, -2))
    assert (rel.delta_power, rel.factors) == (0, ())


def test_half_twist_is_delta():
    # σ1σ2σ1 sends strand j to 4-j, like the half twist
    assert strand_permutation(3, (1, 2, 1)) == (3, 2, 1)
    assert bc.equal(w(3, 1, 2, 1), bc.braid_delta(2))


def test_equal_and_commutes_examples():
    assert bc.equal(w(4, 1, 3), w(4, 3, 1))
    assert bc.equal(w(3, 1, 2, 1), w(3, 2, 1, 2))
    assert not bc.commutes(w(3, 1), w(3, 2))
    assert bc.commutes(w(4, 1), w(4, 3))


def test_purity_examples():
    assert bc.is_1_pure(w(3, 1, 1))
    assert bc.is_pure(w(3, 2, 1, 1, -2))
    assert not bc.is_1_pure(bc.braid_a(4, 3))
    assert bc.is_1_last_pure(w(4, 2, 2))
    assert not bc.is_1_last_pure(w(4, 3))


def test_xi_examples():
    assert bc.braid_xi(9, 3, 4, 8).letters == (4, 3, 5, 4, 6, 5, 7, 6)
    assert bc.braid_a(4, 3).letters == (3, 2, 1)
    assert bc.braid_xi(4, 2, 2, 4).letters == (2, 3)
    assert bc.braid_b(4, 2).letters == (2, 3, 4)
    assert bc.braid_a(4, 0).letters == ()
    assert bc.braid_b(4, 5).letters == ()
    with pytest.raises(IndexOutOfRange):
        bc.braid_a(4, 5)
    with pytest.raises(IndexOutOfRange):
        bc.braid_xi(4, 3, 2, 4)


def test_xi_strand_endpoints():
    p, q, r = 3, 4, 8
    perm = bc.permutation_of(bc.braid_xi(9, p, q, r))
    assert [perm(j) for j in range(p, q + 1)] == list(range(p + r - q, r + 1))


def test_normal_form_agrees_with_free_group_oracle():
    rng = np.random.default_rng(7)
    for _ in range(400):
        n = int(rng.integers(2, 6))
        u = bc.random_word(rng, n, int(rng.integers(0, 10)))
        v = bc.random_word(rng, n, int(rng.integers(0, 10)))
        assert bc.equal(u, v) == braid_equal(n, u.letters, v.letters)
        # a word equal to u by construction
        x = bc.random_word(rng, n, 4)
        u2 = bc.multiply(x, bc.invert(x), u)
        assert bc.equal(u, u2)


def test_permutation_agrees_with_oracle():
    rng = np.random.default_rng(8)
    for _ in range(300):
        n = int(rng.integers(2, 8))
        u = bc.random_word(rng, n, int(rng.integers(0, 15)))
        assert bc.permutation_of(u).images == strand_permutation(n, u.letters)


def test_linking_count_of_full_twist():
    # every pair of strands of the full twist links once (two crossings)
    ft = bc.power(bc.braid_delta(4), 2)
    assert bc.linking_count(ft, 1, 5) == 2
    assert bc.linking_count(w(5, 1, 1), 1, 2) == 2
    assert bc.linking_count(w(5, 1, 1), 1, 3) == 0


def test_in_standard_parabolic():
    assert bc.in_standard_parabolic(w(5, 2, 3, -2), 2, 3)
    assert not bc.in_standard_parabolic(w(5, 2, 3, -2), 2, 2)
    # equal to a word in σ2 although written with σ1
    assert bc.in_standard_parabolic(w(5, 1, 2, -1, 1, -2, -1), 2, 2)
    # negative powers of Δ_J are fine
    assert bc.in_standard_parabolic(w(5, -2, -3, -2, -3), 2, 3)


def test_shift_and_reverse():
    assert bc.shift(w(5, 1, -2)).letters == (2, -3)
    assert bc.reverse_indices(w(5, 1, -2)).letters == (4, -3)
    with pytest.raises(IndexOutOfRange):
        bc.shift(w(3, 2))


def test_free_reduce():
    assert bc.free_reduce(w(4, 1, 2, -2, -1, 3)).letters == (3,)


def test_a_and_b_as_xi_braids():
    n = 6
    for i in range(1, n + 1):
        assert bc.equal(bc.braid_a(n, i), bc.braid_xi(n, 1, i, i + 1))
        assert bc.equal(bc.braid_b(n, i), bc.braid_xi(n, i, i, n + 1))
