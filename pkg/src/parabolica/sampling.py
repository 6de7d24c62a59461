"""Random generators for words, parabolic subgroups and curves.

All samplers take a ``numpy.random.Generator`` so runs are reproducible.
"""
from __future__ import annotations

import numpy as np

from .artin import GroupId, GroupWord, gword, make_letter
from .braid import BraidWord, random_word
from .curves import Curve, check_round_base
from .parabolic import Base, Interval, ParabolicSubgroup, parab_adjacent, standard, standard_bases


def random_group_word(rng: np.random.Generator, group: GroupId, length: int) -> GroupWord:
    gens = list(group.generators)
    picks = rng.integers(0, len(gens), size=length)
    signs = rng.integers(0, 2, size=length)
    return gword(group, [make_letter(gens[int(i)], 1 if s else -1) for i, s in zip(picks, signs)])


def random_base(rng: np.random.Generator, group: GroupId) -> Base:
    bases = standard_bases(group)
    return bases[int(rng.integers(len(bases)))]


def random_parabolic(rng: np.random.Generator, group: GroupId, length: int) -> ParabolicSubgroup:
    return ParabolicSubgroup(group, random_base(rng, group), random_group_word(rng, group, length))


_ADJACENT_CACHE: dict[GroupId, list[tuple[Base, Base]]] = {}


def adjacent_standard_pairs(group: GroupId) -> list[tuple[Base, Base]]:
    pairs = _ADJACENT_CACHE.get(group)
    if pairs is None:
        bases = standard_bases(group)
        pairs = [
            (a, b)
            for a in bases
            for b in bases
            if parab_adjacent(standard(group, a), standard(group, b))
        ]
        _ADJACENT_CACHE[group] = pairs
    return pairs


def random_adjacent_pair(
    rng: np.random.Generator, group: GroupId, length: int
) -> tuple[ParabolicSubgroup, ParabolicSubgroup]:
    """Adjacent standard pair conjugated by one random element.

    Every adjacent pair arises this way, since edges have standard
    representatives in each family handled here.
    """
    pairs = adjacent_standard_pairs(group)
    a, b = pairs[int(rng.integers(len(pairs)))]
    h = random_group_word(rng, group, length)
    return ParabolicSubgroup(group, a, h), ParabolicSubgroup(group, b, h)


def random_round_base(rng: np.random.Generator, m: int) -> Interval:
    while True:
        lo = int(rng.integers(1, m))
        hi = int(rng.integers(lo, m))
        if hi - lo + 1 < m - 1:
            return check_round_base(m, Interval(lo, hi))


def random_curve(rng: np.random.Generator, m: int, length: int) -> Curve:
    return Curve(m, random_round_base(rng, m), random_word(rng, m, length))


def all_round_bases(m: int) -> list[Interval]:
    return [Interval(lo, hi) for lo in range(1, m) for hi in range(lo, m) if hi - lo + 1 < m - 1]


def random_braid(rng: np.random.Generator, strands: int, length: int) -> BraidWord:
    return random_word(rng, strands, length)
