"""Braid words, permutations and the classical Garside normal form.

Generators are 1-based: letter ``i > 0`` is σ_i, ``-i`` is σ_i^{-1}. A word on
``strands`` strands uses indices ``1 <= |i| <= strands - 1``.

Permutation convention: ``π_u(j)`` is the final position of the strand that
starts at position ``j`` and words are read left to right, so
``π_{uv} = π_v ∘ π_u``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .errors import IndexOutOfRange, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise IndexOutOfRange(f"strand count must be positive, got {self.strands}")
        top = self.strands - 1
        for x in self.letters:
            if x == 0 or abs(x) > top:
                raise IndexOutOfRange(f"letter {x} out of range for {self.strands} strands")

    @classmethod
    def _trusted(cls, strands: int, letters: tuple[int, ...]) -> "BraidWord":
        # Skips validation; only for letters produced by this library.
        obj = object.__new__(cls)
        object.__setattr__(obj, "strands", strands)
        object.__setattr__(obj, "letters", letters)
        return obj

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return multiply(self, other)

    def inverse(self) -> "BraidWord":
        return invert(self)

    @property
    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class Permutation:
    size: int
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, self.size + 1)):
            raise ValueError(f"not a permutation of 1..{self.size}: {self.images}")

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for j, v in enumerate(self.images, 1):
            inv[v - 1] = j
        return Permutation(self.size, tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other``."""
        return Permutation(self.size, tuple(other.images[v - 1] for v in self.images))

    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, 1))

    def image_set(self, js: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[j - 1] for j in js)

    def starting_set(self) -> frozenset[int]:
        return frozenset(i for i in range(1, self.size) if self.images[i - 1] > self.images[i])

    def finishing_set(self) -> frozenset[int]:
        return self.inverse().starting_set()

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


@dataclass(frozen=True)
class NormalForm:
    strands: int
    delta_power: int
    factors: tuple[Permutation, ...]

    @property
    def key(self) -> tuple:
        return (self.strands, self.delta_power, tuple(f.images for f in self.factors))

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        return flatten(self)

    def render(self) -> str:
        parts = [f"Δ^{self.delta_power} ·"]
        parts.extend(str(f) for f in self.factors)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "delta_power": self.delta_power,
            "factors": [list(f.images) for f in self.factors],
        }


def make_word(strands: int, letters: Sequence[int]) -> BraidWord:
    if strands < 2:
        raise IndexOutOfRange("a braid word needs at least 2 strands")
    return BraidWord(strands, tuple(int(x) for x in letters))


def identity(strands: int) -> BraidWord:
    return BraidWord._trusted(strands, ())


def parse_word(strands: int, text: str) -> BraidWord:
    """Parse whitespace separated signed integers, e.g. ``"1 2 -1"``."""
    try:
        letters = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise IndexOutOfRange(f"bad word {text!r}: {exc}") from None
    return make_word(strands, letters)


def _same(u: BraidWord, v: BraidWord) -> None:
    if u.strands != v.strands:
        raise StrandMismatch(f"{u.strands} strands vs {v.strands} strands")


def multiply(u: BraidWord, v: BraidWord, *more: BraidWord) -> BraidWord:
    _same(u, v)
    letters = u.letters + v.letters
    for w in more:
        _same(u, w)
        letters += w.letters
    return BraidWord._trusted(u.strands, letters)


def invert(u: BraidWord) -> BraidWord:
    return BraidWord._trusted(u.strands, tuple(-x for x in reversed(u.letters)))


def conjugate(u: BraidWord, g: BraidWord) -> BraidWord:
    """``u^g = g^{-1} u g``."""
    _same(u, g)
    return BraidWord._trusted(u.strands, invert(g).letters + u.letters + g.letters)


def power(u: BraidWord, k: int) -> BraidWord:
    base = u if k >= 0 else invert(u)
    return BraidWord._trusted(u.strands, base.letters * abs(k))


def free_reduce(u: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in u.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord._trusted(u.strands, tuple(out))


@lru_cache(maxsize=1 << 16)
def _perm_cached(strands: int, letters: tuple[int, ...]) -> tuple[int, ...]:
    arr = np.asarray(letters, dtype=np.int64)
    pos = _kernels.permutation_kernel(arr, strands)
    return tuple(int(v) + 1 for v in pos)


def permutation_of(u: BraidWord) -> Permutation:
    return Permutation(u.strands, _perm_cached(u.strands, u.letters))


def _images(u: BraidWord) -> tuple[int, ...]:
    return _perm_cached(u.strands, u.letters)


@lru_cache(maxsize=1 << 18)
def _nf_cached(strands: int, letters: tuple[int, ...]) -> tuple:
    arr = np.asarray(letters, dtype=np.int64)
    p, fac = _kernels.normal_form_kernel(arr, strands)
    return int(p), tuple(tuple(int(v) + 1 for v in row) for row in fac)


def normal_form(u: BraidWord) -> NormalForm:
    p, rows = _nf_cached(u.strands, u.letters)
    return NormalForm(u.strands, p, tuple(Permutation(u.strands, r) for r in rows))


def nf_key(u: BraidWord) -> tuple:
    """Hashable canonical key; equal braids give equal keys."""
    return (u.strands,) + _nf_cached(u.strands, u.letters)


def permutation_braid(perm: Permutation) -> BraidWord:
    """Positive word in which every pair of strands crosses at most once."""
    p = [v - 1 for v in perm.images]
    out: list[int] = []
    n = perm.size
    i = 0
    while i < n - 1:
        if p[i] > p[i + 1]:
            out.append(i + 1)
            p[i], p[i + 1] = p[i + 1], p[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return BraidWord._trusted(n, tuple(out))


def flatten(nf: NormalForm) -> BraidWord:
    n = nf.strands
    delta = braid_delta(n - 1).letters
    letters: list[int] = []
    if nf.delta_power >= 0:
        letters.extend(delta * nf.delta_power)
    else:
        letters.extend(tuple(-x for x in reversed(delta)) * (-nf.delta_power))
    for f in nf.factors:
        letters.extend(permutation_braid(f).letters)
    return BraidWord._trusted(n, tuple(letters))


def equal(u: BraidWord, v: BraidWord) -> bool:
    _same(u, v)
    if u.letters == v.letters:
        return True
    if _images(u) != _images(v):
        return False
    return _nf_cached(u.strands, u.letters) == _nf_cached(v.strands, v.letters)


def is_trivial(u: BraidWord) -> bool:
    if not u.letters:
        return True
    return _nf_cached(u.strands, u.letters) == (0, ())


def commutes(u: BraidWord, v: BraidWord) -> bool:
    _same(u, v)
    return equal(multiply(u, v), multiply(v, u))


def is_pure(u: BraidWord) -> bool:
    return all(v == j for j, v in enumerate(_images(u), 1))


def is_1_pure(u: BraidWord) -> bool:
    return _images(u)[0] == 1


def is_1_last_pure(u: BraidWord) -> bool:
    im = _images(u)
    return im[0] == 1 and im[-1] == u.strands


def exponent_sum(u: BraidWord) -> int:
    return u.exponent_sum


def _check_index(cond: bool, msg: str) -> None:
    if not cond:
        raise IndexOutOfRange(msg)


def braid_a(n: int, i: int) -> BraidWord:
    """a_i = σ_i σ_{i-1} … σ_1 on n+1 strands; a_0 is empty."""
    _check_index(0 <= i <= n, f"a_i needs 0 <= i <= {n}, got {i}")
    return BraidWord._trusted(n + 1, tuple(range(i, 0, -1)))


def braid_b(n: int, i: int) -> BraidWord:
    """b_i = σ_i σ_{i+1} … σ_n on n+1 strands; b_{n+1} is empty."""
    _check_index(1 <= i <= n + 1, f"b_i needs 1 <= i <= {n + 1}, got {i}")
    return BraidWord._trusted(n + 1, tuple(range(i, n + 1)))


def braid_xi(n: int, p: int, q: int, r: int) -> BraidWord:
    """ξ_{p,q,r}: strands p..q slide to the right past strands q+1..r."""
    _check_index(1 <= p <= q and q + 1 <= r <= n + 1, f"bad ξ indices {(p, q, r)} for n={n}")
    letters: list[int] = []
    for i in range(q, r):
        letters.extend(range(i, i - (q - p) - 1, -1))
    return BraidWord._trusted(n + 1, tuple(letters))


def half_twist(strands: int, first: int, last: int) -> BraidWord:
    """Positive half twist on the generators σ_first..σ_last."""
    _check_index(1 <= first <= last <= strands - 1, f"bad range {first}..{last}")
    letters: list[int] = []
    for top in range(last, first - 1, -1):
        letters.extend(range(first, top + 1))
    return BraidWord._trusted(strands, tuple(letters))


def braid_delta(n: int) -> BraidWord:
    """Δ on n+1 strands."""
    if n < 1:
        return BraidWord._trusted(max(n + 1, 1), ())
    return half_twist(n + 1, 1, n)


def shift(u: BraidWord, by: int = 1) -> BraidWord:
    """σ_i ↦ σ_{i+by} on the same strand count."""
    if u.letters:
        top = max(abs(x) for x in u.letters) + by
        low = min(abs(x) for x in u.letters) + by
        _check_index(low >= 1 and top <= u.strands - 1, "shift leaves the generator range")
    return BraidWord._trusted(u.strands, tuple(x + by if x > 0 else x - by for x in u.letters))


def reverse_indices(u: BraidWord) -> BraidWord:
    """σ_i ↦ σ_{N-i}; the same braid as conjugation by Δ."""
    n = u.strands
    return BraidWord._trusted(n, tuple((n - x) if x > 0 else -(n + x) for x in u.letters))


def linking_count(u: BraidWord, s: int, t: int) -> int:
    """Signed number of crossings between the strands starting at s and t.

    For a braid in which both strands return home this is twice their
    linking number.
    """
    at = list(range(1, u.strands + 1))
    total = 0
    pair = {s, t}
    for x in u.letters:
        i = abs(x) - 1
        if {at[i], at[i + 1]} == pair:
            total += 1 if x > 0 else -1
        at[i], at[i + 1] = at[i + 1], at[i]
    return total


def support(nf: NormalForm) -> tuple[int, int] | None:
    """Smallest strand range [lo, hi] outside which every factor is trivial."""
    lo, hi = nf.strands + 1, 0
    for f in nf.factors:
        for j, v in enumerate(f.images, 1):
            if v != j:
                lo = min(lo, j)
                hi = max(hi, j)
    if hi == 0:
        return None
    return lo, hi


def in_standard_parabolic(u: BraidWord, first: int, last: int) -> bool:
    """Whether ``u`` lies in the subgroup generated by σ_first..σ_last.

    Multiplying by a large enough power of that subgroup's full twist moves the
    element into the positive monoid, where membership is read off the support
    of the normal form factors.
    """
    if first == 1 and last == u.strands - 1:
        return True
    nf = normal_form(u)
    if nf.delta_power >= 0:
        q = 0
    else:
        q = (-nf.delta_power + 1) // 2 + 1
    if q:
        twist = half_twist(u.strands, first, last)
        u = multiply(u, power(twist, 2 * q))
        nf = normal_form(u)
    if nf.delta_power != 0:
        return False
    for f in nf.factors:
        for j, v in enumerate(f.images, 1):
            if v != j and not (first <= j <= last + 1):
                return False
    return True


def random_word(rng, strands: int, length: int, positive: bool = False) -> BraidWord:
    gens = rng.integers(1, strands, size=length)
    if positive:
        signs = np.ones(length, dtype=np.int64)
    else:
        signs = rng.choice(np.array([-1, 1]), size=length)
    return BraidWord._trusted(strands, tuple(int(g * s) for g, s in zip(gens, signs)))
