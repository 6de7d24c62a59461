"""Proper irreducible parabolic subgroups and their central elements.

A parabolic subgroup is stored as ``(group, base, conj)`` meaning
``(standard subgroup on base)^conj``. Its canonical key is the normal form of
the ambient braid image of ``z^conj``, where ``z`` is the positive generator
of the centre of the standard subgroup. Equal keys mean equal subgroups and
commuting central elements mean adjacency.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .artin import (
    Family,
    GroupId,
    GroupWord,
    factor_semidirect,
    gidentity,
    gword,
    shift_tilde,
    to_braid,
    type_at,
    type_b,
)
from .braid import (
    BraidWord,
    braid_a,
    braid_xi,
    commutes,
    conjugate,
    equal,
    in_standard_parabolic,
    invert,
    multiply,
    nf_key,
    permutation_of,
    shift,
)
from .errors import (
    GroupMismatch,
    InvalidInterval,
    NotBraidSubgroup,
    NotPure,
    UnsupportedWitness,
)


@dataclass(frozen=True, order=True)
class Interval:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise InvalidInterval(f"empty interval [{self.lo},{self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def members(self) -> list[int]:
        return list(range(self.lo, self.hi + 1))

    def __contains__(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def shifted(self, by: int) -> "Interval":
        return Interval(self.lo + by, self.hi + by)

    def to_json(self) -> dict:
        return {"lo": self.lo, "hi": self.hi}

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True, order=True)
class CyclicInterval:
    """Consecutive run of ``length`` indices of {0..n} starting at ``start``."""

    start: int
    length: int
    modulus: int  # n + 1

    def __post_init__(self) -> None:
        if not (0 <= self.start < self.modulus and 1 <= self.length < self.modulus):
            raise InvalidInterval(
                f"cyclic interval start={self.start} length={self.length} is not proper in 0..{self.modulus - 1}"
            )

    @property
    def size(self) -> int:
        return self.length

    @property
    def end(self) -> int:
        return (self.start + self.length - 1) % self.modulus

    @property
    def wrapped(self) -> bool:
        return self.start + self.length - 1 >= self.modulus

    def members(self) -> list[int]:
        """Members in chain order along the cycle."""
        return [(self.start + j) % self.modulus for j in range(self.length)]

    def __contains__(self, i: int) -> bool:
        return (i - self.start) % self.modulus < self.length

    def shifted(self, by: int) -> "CyclicInterval":
        return CyclicInterval((self.start + by) % self.modulus, self.length, self.modulus)

    def to_json(self) -> dict:
        if self.wrapped:
            return {"wrapLo": self.start, "wrapHi": self.end}
        return {"lo": self.start, "hi": self.end}

    def __str__(self) -> str:
        if self.wrapped:
            return f"[{self.start},{self.modulus - 1}]∪[0,{self.end}]"
        return f"[{self.start},{self.end}]"


Base = Interval | CyclicInterval


def cyclic(n: int, lo: int, hi: int) -> CyclicInterval:
    """Cyclic interval of {0..n} from ``lo`` to ``hi``; wraps when hi < lo."""
    m = n + 1
    length = (hi - lo) % m + 1
    return CyclicInterval(lo % m, length, m)


def base_from_json(group: GroupId, data: dict) -> Base:
    if "wrapLo" in data:
        if group.family is not Family.ATILDE:
            raise InvalidInterval("wrapped bases exist only for type Ã")
        lo, hi = int(data["wrapLo"]), int(data["wrapHi"])
        if not (1 <= hi + 1 < lo <= group.rank):
            raise InvalidInterval(f"wrapped base needs 1 <= k+1 < l <= n, got l={lo}, k={hi}")
        return check_base(group, cyclic(group.rank, lo, hi))
    base = Interval(int(data["lo"]), int(data["hi"]))
    return check_base(group, base)


def check_base(group: GroupId, base: Base) -> Base:
    """Validate ``base`` for ``group`` and return it in the family's form."""
    n = group.rank
    fam = group.family
    if fam is Family.ATILDE:
        if isinstance(base, Interval):
            if not (0 <= base.lo and base.hi <= n) or base.size > n:
                raise InvalidInterval(f"{base} is not a proper subinterval of 0..{n}")
            return CyclicInterval(base.lo, base.size, n + 1)
        if base.modulus != n + 1:
            raise InvalidInterval(f"cyclic interval modulus {base.modulus} does not match rank {n}")
        return base
    if not isinstance(base, Interval):
        raise InvalidInterval(f"{fam.value} bases are plain intervals")
    top = n + 1 if fam is Family.CTILDE else n
    if not (1 <= base.lo and base.hi <= top) or base.size >= top:
        raise InvalidInterval(f"{base} is not a proper subinterval of 1..{top}")
    return base


def standard_bases(group: GroupId) -> list[Base]:
    n = group.rank
    if group.family is Family.ATILDE:
        return [CyclicInterval(s, k, n + 1) for k in range(1, n + 1) for s in range(n + 1)]
    top = n + 1 if group.family is Family.CTILDE else n
    return [Interval(lo, hi) for lo in range(1, top + 1) for hi in range(lo, top + 1) if hi - lo + 1 < top]


def _a_form(chain: list[int]) -> list[int]:
    # ((c_0…c_{k-1})…(c_0 c_1) c_0)^2, or c_0 alone when k = 1
    k = len(chain)
    if k == 1:
        return [chain[0]]
    half: list[int] = []
    for top in range(k, 0, -1):
        half.extend(chain[:top])
    return half * 2


def _b_form(chain: list[int]) -> list[int]:
    # (c_{k-1}…c_1 c_0 c_1…c_{k-1}) … (c_1 c_0 c_1) c_0, with c_0 the label-4 end
    out: list[int] = []
    for top in range(len(chain) - 1, -1, -1):
        out.extend(reversed(chain[1:top + 1]))
        out.append(chain[0])
        out.extend(chain[1:top + 1])
    return out


def central_element(group: GroupId, base: Base) -> GroupWord:
    base = check_base(group, base)
    return gword(group, _central_letters(group, base))


@lru_cache(maxsize=None)
def _central_letters(group: GroupId, base: Base) -> tuple[int, ...]:
    fam = group.family
    n = group.rank
    if fam is Family.ATILDE:
        return tuple(_a_form(base.members()))
    chain = base.members()
    if len(chain) == 1:
        return (chain[0],)
    if fam is Family.B and base.lo == 1:
        return tuple(_b_form(chain))
    if fam is Family.CTILDE and base.lo == 1:
        return tuple(_b_form(chain))
    if fam is Family.CTILDE and base.hi == n + 1:
        return tuple(_b_form(chain[::-1]))
    return tuple(_a_form(chain))


@lru_cache(maxsize=None)
def _central_braid(group: GroupId, base: Base) -> BraidWord:
    return to_braid(gword(group, _central_letters(group, base)))


@dataclass(frozen=True)
class ParabolicSubgroup:
    group: GroupId
    base: Base
    conj: GroupWord

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", check_base(self.group, self.base))
        if self.conj.group != self.group:
            raise GroupMismatch(f"conjugator lives in {self.conj.group}, not {self.group}")

    @cached_property
    def z_braid(self) -> BraidWord:
        """Ambient braid image of z^conj."""
        return conjugate(_central_braid(self.group, self.base), to_braid(self.conj))

    @cached_property
    def key(self) -> tuple:
        return nf_key(self.z_braid)

    def conjugated(self, g: GroupWord) -> "ParabolicSubgroup":
        return ParabolicSubgroup(self.group, self.base, self.conj * g)

    def to_json(self) -> dict:
        from .artin import letter_json

        return {
            "group": self.group.to_json(),
            "base": self.base.to_json(),
            "conj": [letter_json(x) for x in self.conj.letters],
        }

    def __str__(self) -> str:
        return f"{self.group}{self.base}^({self.conj})"


def parabolic_from_json(data: dict) -> ParabolicSubgroup:
    from .artin import make_group_word

    g = data["group"]
    group = GroupId(g["family"], int(g["rank"]))
    base = base_from_json(group, data["base"])
    return ParabolicSubgroup(group, base, make_group_word(group, data.get("conj", [])))


def standard(group: GroupId, base: Base) -> ParabolicSubgroup:
    return ParabolicSubgroup(group, base, gidentity(group))


def _same_group(p: ParabolicSubgroup, q: ParabolicSubgroup) -> None:
    if p.group != q.group:
        raise GroupMismatch(f"{p.group} vs {q.group}")


def parab_equal(p: ParabolicSubgroup, q: ParabolicSubgroup) -> bool:
    _same_group(p, q)
    return p.key == q.key


def parab_adjacent(p: ParabolicSubgroup, q: ParabolicSubgroup) -> bool:
    _same_group(p, q)
    if p.key == q.key:
        return False
    return commutes(p.z_braid, q.z_braid)


@lru_cache(maxsize=None)
def _standard_keys(group: GroupId) -> dict[tuple, Base]:
    return {standard(group, b).key: b for b in standard_bases(group)}


def is_standard(p: ParabolicSubgroup) -> Base | None:
    return _standard_keys(p.group).get(p.key)


# ----------------------------------------------------- type B and type Ã link

def surrounded_of(p: ParabolicSubgroup) -> frozenset[int]:
    """Punctures surrounded by the curve of a type A or B parabolic."""
    if p.group.family not in (Family.A, Family.B):
        raise GroupMismatch("curve punctures are defined here for types A and B")
    perm = permutation_of(to_braid(p.conj))
    return perm.image_set(range(p.base.lo, p.base.hi + 2))


def is_braid_subgroup(q: ParabolicSubgroup) -> bool:
    if q.group.family is not Family.B:
        raise GroupMismatch("braid subgroups live in type B")
    return 1 not in surrounded_of(q)


def theta_preimage(q: ParabolicSubgroup) -> ParabolicSubgroup:
    """The Ã parabolic P with θ(P) = Q."""
    if q.group.family is not Family.B or q.group.rank < 3:
        raise GroupMismatch("θ-preimages are taken from type B of rank >= 3")
    if 1 in q.base:
        raise NotBraidSubgroup(f"{q} is conjugate to a standard subgroup containing τ_1")
    n = q.group.rank - 1
    x, r = factor_semidirect(n, q.conj)
    members = [(i - 1 + r) % (n + 1) for i in q.base.members()]
    base = CyclicInterval(members[0], len(members), n + 1)
    return ParabolicSubgroup(type_at(n), base, shift_tilde(x, r))


def theta_image(p: ParabolicSubgroup) -> ParabolicSubgroup:
    """θ(P) as a type B parabolic written on a base avoiding τ_1."""
    from .artin import gmul, gpow, rho, theta

    if p.group.family is not Family.ATILDE:
        raise GroupMismatch("θ applies to type Ã")
    n = p.group.rank
    base = p.base
    if base.start >= 1 and not base.wrapped:
        r = 0
    else:
        r = (1 - base.start) % (n + 1)
    moved = base.shifted(r)
    b_base = Interval(moved.start + 1, moved.start + moved.length)
    conj = gmul(gpow(rho(n), -r), theta(n, p.conj))
    return ParabolicSubgroup(type_b(n + 1), b_base, conj)


# ---------------------------------------------- conjugates by a_i and ξ

def xi_left(n: int, base: Interval) -> BraidWord:
    """ξ_I = ξ_{2,m,m+k}; it carries C_I^{a_{m-1}} to C_{[1,k]}. Empty if m = 1."""
    if base.lo == 1:
        return BraidWord._trusted(n + 1, ())
    return braid_xi(n, 2, base.lo, base.hi + 1)


def xi_right(n: int, base: Interval) -> BraidWord:
    """ξ'_I = ξ_{m,m+k-1,n}; it carries C_I^{b_{m+k}} to C_{[n-k+1,n]}."""
    if base.hi == n:
        return BraidWord._trusted(n + 1, ())
    return braid_xi(n, base.lo, base.hi, n)


def lemma_technical_normalize(
    n: int, base: Interval, g: BraidWord, i0: int, j0: int
) -> tuple[str, BraidWord]:
    """Classify z = a_{i0}^{-1} g a_{j0} and return a verified witness.

    Case "i": z = g in A_I. Case "ii": z = sh(g) in A_{I+1}.
    Case "iii": z^{ξ_I} lies in A_{[1,k]} and is returned.
    """
    if g.strands != n + 1:
        raise GroupMismatch(f"expected {n + 1} strands")
    m, k = base.lo, base.size
    if any(not (m <= abs(x) <= base.hi) for x in g.letters):
        raise InvalidInterval(f"g is not written in the generators of {base}")
    z = multiply(invert(braid_a(n, i0)), g, braid_a(n, j0))
    if permutation_of(z)(1) != 1:
        raise NotPure("a_{i0}^{-1} g a_{j0} is not 1-pure")
    if i0 + 1 < m:
        tag, witness, lo, hi = "i", g, m, base.hi
        ok = equal(z, g)
    elif i0 + 1 > m + k:
        witness = shift(g)
        tag, lo, hi = "ii", m + 1, base.hi + 1
        ok = equal(z, witness)
    else:
        witness = conjugate(z, xi_left(n, base))
        tag, lo, hi = "iii", 1, k
        ok = True
    if not ok or not in_standard_parabolic(witness, lo, hi):
        raise UnsupportedWitness(f"case {tag} failed for I={base}, i0={i0}, j0={j0}")
    return tag, witness
