"""Artin groups of types A, B, Ã and C̃ and their embeddings into braid groups.

Letters are signed generator indices. Type A and B use 1..n, type Ã uses
0..n and type C̃ uses 1..n+1. Equality in B, Ã and C̃ is decided through the
injective maps

* η: B_n → braids on n+1 strands, τ_1 ↦ σ_1², τ_i ↦ σ_i;
* θ: Ã_n → B_{n+1}, σ̃_i ↦ τ_{i+1} for i ≥ 1 and σ̃_0 ↦ a conjugate of τ_2;
* λ: C̃_n → braids on n+2 strands, τ̃_1 ↦ σ_1², τ̃_{n+1} ↦ σ_{n+1}², τ̃_i ↦ σ_i.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .braid import (
    BraidWord,
    braid_a,
    equal,
    half_twist,
    invert,
    multiply,
    permutation_of,
    power,
)
from .errors import GroupMismatch, IndexOutOfRange, InvariantViolation, NotInImage, NotPure


class Family(str, Enum):
    A = "A"
    B = "B"
    ATILDE = "At"
    CTILDE = "Ct"


_LONG_NAMES = {
    "A": Family.A, "TypeA": Family.A,
    "B": Family.B, "TypeB": Family.B,
    "At": Family.ATILDE, "TypeATilde": Family.ATILDE, "Ã": Family.ATILDE,
    "Ct": Family.CTILDE, "TypeCTilde": Family.CTILDE, "C̃": Family.CTILDE,
}


def family_of(name: str | Family) -> Family:
    if isinstance(name, Family):
        return name
    try:
        return _LONG_NAMES[name]
    except KeyError:
        raise GroupMismatch(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class GroupId:
    family: Family
    rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", family_of(self.family))
        low = 3 if self.family in (Family.A, Family.B) else 2
        if self.rank < low:
            raise IndexOutOfRange(f"{self.family.value} needs rank >= {low}, got {self.rank}")

    @property
    def generators(self) -> range:
        n = self.rank
        if self.family is Family.ATILDE:
            return range(0, n + 1)
        if self.family is Family.CTILDE:
            return range(1, n + 2)
        return range(1, n + 1)

    @property
    def ambient_strands(self) -> int:
        """Strand count of the braid group that equality is decided in."""
        if self.family in (Family.A, Family.B):
            return self.rank + 1
        return self.rank + 2

    @classmethod
    def _small(cls, family: Family, rank: int) -> "GroupId":
        # Below the standing rank bound; used for sub-disk computations.
        obj = object.__new__(cls)
        object.__setattr__(obj, "family", family)
        object.__setattr__(obj, "rank", rank)
        return obj

    def to_json(self) -> dict:
        return {"family": self.family.value, "rank": self.rank}

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"


def type_a(n: int) -> GroupId:
    return GroupId(Family.A, n) if n >= 3 else GroupId._small(Family.A, n)


def type_b(n: int) -> GroupId:
    return GroupId(Family.B, n) if n >= 3 else GroupId._small(Family.B, n)


def type_at(n: int) -> GroupId:
    return GroupId(Family.ATILDE, n)


def type_ct(n: int) -> GroupId:
    return GroupId(Family.CTILDE, n)


@dataclass(frozen=True)
class GroupWord:
    group: GroupId
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        gens = self.group.generators
        for x in self.letters:
            if x == 0 and self.group.family is not Family.ATILDE:
                raise IndexOutOfRange(f"letter 0 outside the alphabet of {self.group}")
            if gen_of(x) not in gens:
                raise IndexOutOfRange(f"letter {x} outside the alphabet of {self.group}")

    @classmethod
    def _trusted(cls, group: GroupId, letters: tuple[int, ...]) -> "GroupWord":
        obj = object.__new__(cls)
        object.__setattr__(obj, "group", group)
        object.__setattr__(obj, "letters", letters)
        return obj

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return gmul(self, other)

    def inverse(self) -> "GroupWord":
        return ginv(self)

    def to_json(self) -> dict:
        return {"group": self.group.to_json(), "letters": [letter_json(x) for x in self.letters]}

    def __str__(self) -> str:
        return f"{self.group.family.value}:" + " ".join(letter_text(x) for x in self.letters)


# σ̃_0 has index 0, so its inverse cannot be written as -0. It is stored as a
# dedicated sentinel and rendered as "-0" in text and JSON.
NEG0 = -(1 << 30)


def gen_of(x: int) -> int:
    return 0 if x == NEG0 else abs(x)


def is_inverse_letter(x: int) -> bool:
    return x < 0


def make_letter(g: int, sign: int) -> int:
    if sign > 0:
        return g
    return NEG0 if g == 0 else -g


def inv_letter(x: int) -> int:
    if x == 0:
        return NEG0
    if x == NEG0:
        return 0
    return -x


def letter_text(x: int) -> str:
    return "-0" if x == NEG0 else str(x)


def letter_json(x: int) -> int | str:
    return "-0" if x == NEG0 else x


def parse_letter(tok: str | int) -> int:
    if isinstance(tok, str):
        tok = tok.strip()
        if tok == "-0":
            return NEG0
        return int(tok)
    return int(tok)


def make_group_word(group: GroupId, letters: Sequence[int | str]) -> GroupWord:
    return GroupWord(group, tuple(parse_letter(x) for x in letters))


def gword(group: GroupId, letters: Sequence[int]) -> GroupWord:
    return GroupWord._trusted(group, tuple(letters))


def _same_group(u: GroupWord, v: GroupWord) -> None:
    if u.group != v.group:
        raise GroupMismatch(f"{u.group} vs {v.group}")


def gmul(u: GroupWord, v: GroupWord, *more: GroupWord) -> GroupWord:
    _same_group(u, v)
    letters = u.letters + v.letters
    for w in more:
        _same_group(u, w)
        letters += w.letters
    return GroupWord._trusted(u.group, letters)


def ginv(u: GroupWord) -> GroupWord:
    return GroupWord._trusted(u.group, tuple(inv_letter(x) for x in reversed(u.letters)))


def gconj(u: GroupWord, g: GroupWord) -> GroupWord:
    return gmul(ginv(g), u, g)


def gpow(u: GroupWord, k: int) -> GroupWord:
    base = u if k >= 0 else ginv(u)
    return GroupWord._trusted(u.group, base.letters * abs(k))


def gidentity(group: GroupId) -> GroupWord:
    return GroupWord._trusted(group, ())


def gfree_reduce(u: GroupWord) -> GroupWord:
    out: list[int] = []
    for x in u.letters:
        if out and out[-1] == inv_letter(x):
            out.pop()
        else:
            out.append(x)
    return GroupWord._trusted(u.group, tuple(out))


def parse_group_word(text: str, rank: int) -> GroupWord:
    """Parse ``"B:1 2 -1"``, ``"At:0 -0 1"``, ``"Ct:1 3"`` or ``"A:1 2"``."""
    if ":" not in text:
        raise GroupMismatch(f"group word {text!r} lacks a family tag such as 'B:'")
    tag, body = text.split(":", 1)
    group = GroupId(family_of(tag.strip()), rank)
    try:
        letters = [parse_letter(tok) for tok in body.split()]
    except ValueError as exc:
        raise IndexOutOfRange(f"bad group word {text!r}: {exc}") from None
    return make_group_word(group, letters)


# ---------------------------------------------------------------- Coxeter data

def coxeter_labels(group: GroupId) -> dict[tuple[int, int], int]:
    """Edge labels m_{s,t} >= 3 of the Coxeter graph; absent pairs commute."""
    n = group.rank
    fam = group.family
    edges: dict[tuple[int, int], int] = {}
    if fam is Family.A:
        for i in range(1, n):
            edges[(i, i + 1)] = 3
    elif fam is Family.B:
        edges[(1, 2)] = 4
        for i in range(2, n):
            edges[(i, i + 1)] = 3
    elif fam is Family.ATILDE:
        for i in range(0, n):
            edges[(i, i + 1)] = 3
        edges[(0, n)] = 3
    else:
        for i in range(1, n + 1):
            edges[(i, i + 1)] = 3
        edges[(1, 2)] = 4
        edges[(n, n + 1)] = 4
    return edges


def coxeter_label(group: GroupId, s: int, t: int) -> int:
    if s == t:
        return 1
    labels = coxeter_labels(group)
    return labels.get((min(s, t), max(s, t)), 2)


def defining_relations(group: GroupId) -> list[tuple[GroupWord, GroupWord]]:
    """Π(s,t;m) = Π(t,s;m) for every pair of distinct generators."""
    gens = list(group.generators)
    rels = []
    for i, s in enumerate(gens):
        for t in gens[i + 1:]:
            m = coxeter_label(group, s, t)
            lhs = [s if j % 2 == 0 else t for j in range(m)]
            rhs = [t if j % 2 == 0 else s for j in range(m)]
            rels.append((gword(group, lhs), gword(group, rhs)))
    return rels


def generators_conjugate(group: GroupId, s: int, t: int) -> bool:
    gens = set(group.generators)
    if s not in gens or t not in gens:
        raise IndexOutOfRange(f"generators {s}, {t} not in {group}")
    adj: dict[int, list[int]] = {g: [] for g in gens}
    for (a, b), m in coxeter_labels(group).items():
        if m % 2 == 1:
            adj[a].append(b)
            adj[b].append(a)
    seen = {s}
    todo = deque([s])
    while todo:
        x = todo.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return t in seen


# ------------------------------------------------------------------ embeddings

def _require(w: GroupWord, family: Family, rank: int) -> None:
    if w.group.family is not family or w.group.rank != rank:
        raise GroupMismatch(f"expected a {family.value}{rank} word, got {w.group}")


def eta(n: int, w: GroupWord) -> BraidWord:
    _require(w, Family.B, n)
    out: list[int] = []
    for x in w.letters:
        if x == 1:
            out += (1, 1)
        elif x == -1:
            out += (-1, -1)
        else:
            out.append(x)
    return BraidWord._trusted(n + 1, tuple(out))


@lru_cache(maxsize=None)
def _theta_zero(n: int) -> tuple[int, ...]:
    # τ_{n+1}^{-1}…τ_3^{-1} τ_1 τ_2 τ_1^{-1} τ_3…τ_{n+1}
    head = tuple(-i for i in range(n + 1, 2, -1))
    tail = tuple(range(3, n + 2))
    return head + (1, 2, -1) + tail


def theta(n: int, w: GroupWord) -> GroupWord:
    _require(w, Family.ATILDE, n)
    zero = _theta_zero(n)
    zero_inv = tuple(-x for x in reversed(zero))
    out: list[int] = []
    for x in w.letters:
        if x == 0:
            out.extend(zero)
        elif x == NEG0:
            out.extend(zero_inv)
        elif x > 0:
            out.append(x + 1)
        else:
            out.append(x - 1)
    return GroupWord._trusted(type_b(n + 1), tuple(out))


def lam(n: int, w: GroupWord) -> BraidWord:
    _require(w, Family.CTILDE, n)
    out: list[int] = []
    for x in w.letters:
        g = abs(x)
        if g == 1 or g == n + 1:
            out += (x, x)
        else:
            out.append(x)
    return BraidWord._trusted(n + 2, tuple(out))


lambda_ = lam


def to_braid(w: GroupWord) -> BraidWord:
    """Image of a group word in its ambient braid group."""
    fam = w.group.family
    n = w.group.rank
    if fam is Family.A:
        return BraidWord._trusted(n + 1, tuple(w.letters))
    if fam is Family.B:
        return eta(n, w)
    if fam is Family.ATILDE:
        return eta(n + 1, theta(n, w))
    return lam(n, w)


def equal_in_group(u: GroupWord, v: GroupWord) -> bool:
    _same_group(u, v)
    return equal(to_braid(u), to_braid(v))


def commutes_in_group(u: GroupWord, v: GroupWord) -> bool:
    return equal_in_group(gmul(u, v), gmul(v, u))


def rho(n: int) -> GroupWord:
    """ρ = (τ_1 τ_2 … τ_{n+1})^{-1} in B_{n+1}."""
    if n < 2:
        raise IndexOutOfRange("ρ needs n >= 2")
    return GroupWord._trusted(type_b(n + 1), tuple(-i for i in range(n + 1, 0, -1)))


def shift_tilde(w: GroupWord, by: int) -> GroupWord:
    """σ̃_i ↦ σ̃_{i+by mod n+1}; the same as conjugation by ρ^{by} after θ."""
    m = w.group.rank + 1
    out = []
    for x in w.letters:
        g = (gen_of(x) + by) % m
        out.append(make_letter(g, -1 if is_inverse_letter(x) else 1))
    return GroupWord._trusted(w.group, tuple(out))


@lru_cache(maxsize=None)
def _tau1_rho_preimage(n: int) -> tuple[int, ...]:
    # θ(σ̃_0^{-1} σ̃_n^{-1} … σ̃_2^{-1}) = τ_1 ρ
    letters = (NEG0,) + tuple(-i for i in range(n, 1, -1))
    w = gword(type_at(n), letters)
    target = gmul(gword(type_b(n + 1), (1,)), rho(n))
    if not equal_in_group(theta(n, w), target):
        raise InvariantViolation("θ-preimage of τ_1ρ failed verification")
    return letters


def factor_semidirect(n: int, z: GroupWord) -> tuple[GroupWord, int]:
    """Write ``z = θ(x)·ρ^r``; ``r`` is minus the τ_1 exponent sum of ``z``.

    Reidemeister–Schreier rewriting with the transversal {ρ^k}: a prefix with
    τ_1 exponent sum e sits in the coset θ(Ã_n)·ρ^{-e}.
    """
    _require(z, Family.B, n + 1)
    m = n + 1
    w_letters = _tau1_rho_preimage(n)
    group = type_at(n)
    out: list[int] = []
    k = 0
    for x in z.letters:
        if x == 1:
            out.extend(shift_tilde(gword(group, w_letters), -k).letters)
            k -= 1
        elif x == -1:
            piece = shift_tilde(gword(group, w_letters), -(k + 1))
            out.extend(ginv(piece).letters)
            k += 1
        else:
            g = (abs(x) - 1 - k) % m
            out.append(make_letter(g, 1 if x > 0 else -1))
    return GroupWord._trusted(group, tuple(out)), k


def theta_inverse(n: int, z: GroupWord) -> GroupWord:
    x, r = factor_semidirect(n, z)
    if r != 0:
        raise NotInImage(f"word has τ_1 exponent sum {-r}, not in the image of θ")
    return x


# ------------------------------------------------------ Reidemeister–Schreier

@lru_cache(maxsize=None)
def _pure1_table(n: int) -> dict[tuple[int, int], tuple[int, tuple[int, ...]]]:
    """(coset, letter) ↦ (next coset, B_n word) for the subgroup fixing strand 1.

    Coset c holds braids sending strand 1 to position c+1, with
    representative a_c^{-1}.
    """
    table: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}
    for c in range(n + 1):
        for k in range(1, n + 1):
            pos = c + 1
            if pos == k:
                nxt = c + 1
                word = tuple(range(k, 1, -1)) + (1,) + tuple(-i for i in range(2, k + 1))
            elif pos == k + 1:
                nxt = c - 1
                word = ()
            elif pos < k:
                nxt = c
                word = (k,)
            else:
                nxt = c
                word = (k + 1,)
            table[(c, k)] = (nxt, word)
    for (c, k), (nxt, word) in list(table.items()):
        table[(nxt, -k)] = (c, tuple(-x for x in reversed(word)))
    for (c, x), (nxt, word) in table.items():
        lhs = multiply(invert(braid_a(n, c)), BraidWord._trusted(n + 1, (x,)), braid_a(n, nxt))
        if not equal(lhs, eta(n, gword(type_b(n), word))):
            raise InvariantViolation(f"Schreier entry ({c}, {x}) failed verification")
    return table


def rewrite_pure1(n: int, w: BraidWord) -> GroupWord:
    """η^{-1} of a braid on n+1 strands whose first strand ends first."""
    if w.strands != n + 1:
        raise GroupMismatch(f"expected {n + 1} strands, got {w.strands}")
    if permutation_of(w)(1) != 1:
        raise NotPure("the first strand does not end in the first position")
    table = _pure1_table(n)
    out: list[int] = []
    c = 0
    for x in w.letters:
        c, word = table[(c, x)]
        out.extend(word)
    if c != 0:  # pragma: no cover - excluded by the purity check
        raise InvariantViolation("rewriting ended outside the trivial coset")
    return GroupWord._trusted(type_b(n), tuple(out))


def psi(n: int, y: BraidWord) -> GroupWord:
    """η^{-1}(y·a_i) for the unique i making y·a_i 1-pure."""
    if y.strands != n + 1:
        raise GroupMismatch(f"expected {n + 1} strands, got {y.strands}")
    i = permutation_of(y)(1) - 1
    return rewrite_pure1(n, multiply(y, braid_a(n, i)))


def psi_index(y: BraidWord) -> int:
    return permutation_of(y)(1) - 1


# λ^{-1}: the image of λ is the set of braids fixing strands 1 and n+2 in which
# strand 1 and strand n+2 have linking number zero.

def _ct_delta_sq(n: int, lo: int, hi: int) -> GroupWord:
    """C̃ word whose λ-image is the full twist on generators σ_lo..σ_hi."""
    g = type_ct(n)
    if lo == hi:
        letter = (lo,)
        if lo in (1, n + 1):
            return gword(g, letter)
        return gword(g, letter * 2)
    from .parabolic import central_element, Interval

    return central_element(g, Interval(lo, hi))


@lru_cache(maxsize=None)
def _ends_correction(n: int) -> tuple[int, ...]:
    """C̃ word h0 with λ(h0)·Δ² equal to the pure braid A_{1,n+2}."""
    N = n + 2
    first = _ct_delta_sq(n, 1, n)        # full twist of strands 1..N-1
    last = _ct_delta_sq(n, 2, n + 1)     # full twist of strands 2..N
    mid = _ct_delta_sq(n, 2, n)          # full twist of strands 2..N-1
    h0 = gmul(ginv(first), ginv(last), mid)
    a1n = BraidWord._trusted(N, tuple(range(N - 1, 1, -1)) + (1, 1) + tuple(-i for i in range(2, N)))
    full = power(half_twist(N, 1, N - 1), 2)
    if not equal(multiply(lam(n, h0), full), a1n):
        raise InvariantViolation("correction word for A_{1,N} failed verification")
    return h0.letters


@lru_cache(maxsize=None)
def _ends_table(n: int) -> dict[tuple[int, int], tuple[int, tuple[int, ...], int]]:
    """(coset, B_{n+1} letter) ↦ (next coset, C̃_n word, Δ² count).

    Coset c holds elements of the 1-pure group sending strand n+2 to position
    c, with representative d_c = σ_{n+1}…σ_c.
    """
    N = n + 2
    table: dict[tuple[int, int], tuple[int, tuple[int, ...], int]] = {}
    h0 = _ends_correction(n)
    for c in range(2, N + 1):
        if c >= 3:
            table[(c, 1)] = (c, (1,), 0)
        else:
            table[(c, 1)] = (c, h0, 1)
        for k in range(2, N):
            if c == k + 1:
                table[(c, k)] = (k, (), 0)
            elif c == k:
                word = tuple(-i for i in range(k, n + 1)) + (n + 1,) + tuple(range(n, k - 1, -1))
                table[(c, k)] = (k + 1, word, 0)
            elif c >= k + 2:
                table[(c, k)] = (c, (k,), 0)
            else:
                table[(c, k)] = (c, (k - 1,), 0)
    for (c, k), (nxt, word, d) in list(table.items()):
        table[(nxt, -k)] = (c, tuple(-x for x in reversed(word)), -d)

    def rep(c: int) -> BraidWord:
        return BraidWord._trusted(N, tuple(range(N - 1, c - 1, -1)))

    full = power(half_twist(N, 1, N - 1), 2)
    for (c, x), (nxt, word, d) in table.items():
        piece = eta(n + 1, gword(type_b(n + 1), (x,)))
        lhs = multiply(rep(c), piece, invert(rep(nxt)))
        rhs = multiply(lam(n, gword(type_ct(n), word)), power(full, d))
        if not equal(lhs, rhs):
            raise InvariantViolation(f"end-strand Schreier entry ({c}, {x}) failed verification")
    return table


def rewrite_pure_ends(n: int, w: BraidWord) -> tuple[GroupWord, int]:
    """Write a braid fixing strands 1 and n+2 as ``λ(h)·Δ^{2d}``."""
    if w.strands != n + 2:
        raise GroupMismatch(f"expected {n + 2} strands, got {w.strands}")
    perm = permutation_of(w)
    if perm(1) != 1 or perm(n + 2) != n + 2:
        raise NotPure("braid moves the first or the last strand")
    b = rewrite_pure1(n + 1, w)
    table = _ends_table(n)
    out: list[int] = []
    c = n + 2
    d = 0
    for x in b.letters:
        c, word, dd = table[(c, x)]
        out.extend(word)
        d += dd
    return GroupWord._trusted(type_ct(n), tuple(out)), d


def lambda_inverse(n: int, w: BraidWord) -> GroupWord:
    h, d = rewrite_pure_ends(n, w)
    if d != 0:
        raise NotInImage(f"strands 1 and {n + 2} link {d} times; not in the image of λ")
    return h


def ends_linking(w: BraidWord) -> int:
    """Linking number of the first and last strands of a braid fixing both."""
    from .braid import linking_count

    return linking_count(w, 1, w.strands) // 2


def from_braid(group: GroupId, w: BraidWord) -> GroupWord:
    """Preimage of an ambient braid; raises if it is not in the image."""
    fam = group.family
    n = group.rank
    if fam is Family.A:
        return GroupWord._trusted(group, w.letters)
    if fam is Family.B:
        return rewrite_pure1(n, w)
    if fam is Family.ATILDE:
        return theta_inverse(n, rewrite_pure1(n + 1, w))
    return lambda_inverse(n, w)
