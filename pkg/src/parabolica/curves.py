"""Curves in the punctured disk, represented as round curves moved by braids.

``Curve(m, I, w)`` is the round curve around punctures ``I.lo .. I.hi+1`` of
``D_m`` pushed by the braid ``w``. Its canonical key is the normal form of the
conjugated central element of the standard parabolic ``A_I``, so two curves are
equal exactly when their keys agree and disjoint exactly when their central
elements commute.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .braid import (
    BraidWord,
    braid_a,
    braid_b,
    braid_xi,
    commutes,
    conjugate,
    free_reduce,
    half_twist,
    identity,
    invert,
    linking_count,
    multiply,
    nf_key,
    permutation_of,
    power,
    reverse_indices,
)
from .errors import IndexOutOfRange, InvalidInterval, InvariantViolation, NotRound, StrandMismatch, SurroundsBothEnds
from .parabolic import Interval


@lru_cache(maxsize=None)
def round_z(m: int, base: Interval) -> BraidWord:
    """Central element of the standard parabolic on σ_lo..σ_hi in B_m."""
    if base.lo == base.hi:
        return BraidWord._trusted(m, (base.lo,))
    return power(half_twist(m, base.lo, base.hi), 2)


def check_round_base(m: int, base: Interval) -> Interval:
    if not (1 <= base.lo <= base.hi <= m - 1) or base.size >= m - 1:
        raise InvalidInterval(f"{base} is not a proper subinterval of 1..{m - 1}")
    return base


@dataclass(frozen=True)
class Curve:
    punctures: int
    base: Interval
    act: BraidWord

    def __post_init__(self) -> None:
        check_round_base(self.punctures, self.base)
        if self.act.strands != self.punctures:
            raise StrandMismatch(f"{self.act.strands}-strand braid on a {self.punctures}-punctured disk")

    @cached_property
    def z_braid(self) -> BraidWord:
        return conjugate(round_z(self.punctures, self.base), self.act)

    @cached_property
    def key(self) -> tuple:
        return nf_key(self.z_braid)

    @property
    def canonical_length(self) -> int:
        _, p, factors = self.key
        return len(factors) + abs(p)

    def to_json(self) -> dict:
        return {"punctures": self.punctures, "base": self.base.to_json(), "act": list(self.act.letters)}

    def __str__(self) -> str:
        return f"C{self.base}^({self.act})"


def round_curve(m: int, lo: int, hi: int | None = None) -> Curve:
    hi = lo if hi is None else hi
    return Curve(m, Interval(lo, hi), identity(m))


def curve_from_json(data: dict, punctures: int | None = None) -> Curve:
    m = int(data.get("punctures", punctures or 0))
    if punctures is not None and m != punctures:
        raise StrandMismatch(f"curve has {m} punctures, expected {punctures}")
    base = Interval(int(data["base"]["lo"]), int(data["base"]["hi"]))
    return Curve(m, base, BraidWord(m, tuple(int(x) for x in data.get("act", []))))


def act(c: Curve, w: BraidWord) -> Curve:
    if w.strands != c.punctures:
        raise StrandMismatch(f"{w.strands}-strand braid on a {c.punctures}-punctured disk")
    return Curve(c.punctures, c.base, multiply(c.act, w))


def _same(c1: Curve, c2: Curve) -> None:
    if c1.punctures != c2.punctures:
        raise StrandMismatch(f"{c1.punctures} vs {c2.punctures} punctures")


def curve_equal(c1: Curve, c2: Curve) -> bool:
    _same(c1, c2)
    return c1.key == c2.key


def curves_disjoint(c1: Curve, c2: Curve) -> bool:
    """Distinct and disjoint (nested counts as disjoint)."""
    _same(c1, c2)
    if c1.key == c2.key:
        return False
    return commutes(c1.z_braid, c2.z_braid)


def surrounded_punctures(c: Curve) -> frozenset[int]:
    return permutation_of(c.act).image_set(range(c.base.lo, c.base.hi + 2))


def is_round(c: Curve) -> Interval | None:
    s = sorted(surrounded_punctures(c))
    if s[-1] - s[0] != len(s) - 1:
        return None
    base = Interval(s[0], s[-1] - 1)
    if round_curve(c.punctures, base.lo, base.hi).key == c.key:
        return base
    return None


def _round_base(c: Curve) -> Interval:
    base = is_round(c)
    if base is None:
        raise NotRound(f"{c} is not a round curve")
    return base


def fast_act_a(c: Curve, i0: int) -> Curve:
    """c^{a_{i0}} for round c, written with a short acting word."""
    base = _round_base(c)
    m, k, N = base.lo, base.size, c.punctures
    n = N - 1
    if i0 + 1 < m:
        return round_curve(N, base.lo, base.hi)
    if i0 + 1 > m + k:
        return round_curve(N, base.lo + 1, base.hi + 1)
    return Curve(N, base, braid_a(n, m - 1))


def fast_act_b(c: Curve, j0: int) -> Curve:
    """c^{b_{j0}} for round c, written with a short acting word."""
    base = _round_base(c)
    m, k, N = base.lo, base.size, c.punctures
    n = N - 1
    if j0 < m:
        return round_curve(N, base.lo - 1, base.hi - 1)
    if j0 > m + k:
        return round_curve(N, base.lo, base.hi)
    return Curve(N, base, braid_b(n, m + k))


def xi_first(N: int, base: Interval) -> BraidWord:
    """ξ_{2,m,m+k} on N strands: carries C_I^{a_{m-1}} to C_{[1,k]}."""
    if base.lo == 1:
        return identity(N)
    return braid_xi(N - 1, 2, base.lo, base.hi + 1)


def xi_last(N: int, base: Interval) -> BraidWord:
    """ξ_{m,m+k-1,N-1} on N strands: carries C_I^{b_{m+k}} to C_{[N-1-k,N-1]}."""
    if base.hi == N - 1:
        return identity(N)
    return braid_xi(N - 1, base.lo, base.hi, N - 1)


def standardize_1pure(c: Curve) -> BraidWord:
    """A braid fixing strand 1 that carries ``c`` to a round curve."""
    N = c.punctures
    zeta = invert(c.act)
    base = c.base
    m, k = base.lo, base.size
    i0 = permutation_of(zeta)(1) - 1
    alpha = multiply(zeta, braid_a(N - 1, i0))
    if m <= i0 + 1 <= m + k and m > 1:
        alpha = multiply(alpha, xi_first(N, base))
    return free_reduce(alpha)


def mirror_curve(c: Curve) -> Curve:
    """Image under the reflection exchanging punctures j and N+1-j."""
    N = c.punctures
    base = Interval(N - c.base.hi, N - c.base.lo)
    return Curve(N, base, reverse_indices(c.act))


def ends_twist(N: int) -> BraidWord:
    return power(half_twist(N, 1, N - 1), 2)


def unlink_ends(beta: BraidWord) -> BraidWord:
    """Multiply by a power of the central full twist so that the first and
    last strands have linking number zero."""
    N = beta.strands
    lk = linking_count(beta, 1, N) // 2
    if lk == 0:
        return beta
    return multiply(beta, power(ends_twist(N), -lk))


def standardize_1last(c: Curve) -> BraidWord:
    """A braid fixing strands 1 and N, with those two strands unlinked, that
    carries ``c`` to a round curve."""
    N = c.punctures
    surr = surrounded_punctures(c)
    if 1 in surr and N in surr:
        raise SurroundsBothEnds("the curve surrounds both the first and the last puncture")
    if 1 in surr:
        return reverse_indices(standardize_1last(mirror_curve(c)))
    alpha = standardize_1pure(c)
    rc = act(c, alpha)
    base = _round_base(rc)
    m, k = base.lo, base.size
    j0 = permutation_of(alpha)(N)
    beta = multiply(alpha, braid_b(N - 1, j0))
    if m <= j0 <= m + k and m + k < N:
        beta = multiply(beta, xi_last(N, base))
    return free_reduce(unlink_ends(beta))


# ------------------------------------------------- strand surgery on words

def delete_strands(w: BraidWord, drop_final: set[int]) -> BraidWord:
    """Forget the strands that end at the positions in ``drop_final``."""
    N = w.strands
    perm = permutation_of(w)
    inv = perm.inverse()
    dropped = {inv(p) for p in drop_final}
    at = list(range(1, N + 1))  # strand label at each position
    out: list[int] = []
    for x in w.letters:
        i = abs(x)
        a, b = at[i - 1], at[i]
        if a not in dropped and b not in dropped:
            below = sum(1 for s in at[: i - 1] if s in dropped)
            j = i - below
            out.append(j if x > 0 else -j)
        at[i - 1], at[i] = b, a
    return BraidWord._trusted(N - len(dropped), tuple(out))


def forget_in_base(base: Interval, dropped_starts: set[int]) -> Interval:
    """Round base after forgetting some start punctures and relabelling."""
    span = set(range(base.lo, base.hi + 2)) - dropped_starts
    lo = base.lo - sum(1 for s in dropped_starts if s < base.lo)
    return Interval(lo, lo + len(span) - 2)


def cable(w: BraidWord, fat: int, width: int) -> BraidWord:
    """Replace the strand starting at ``fat`` by ``width+1`` parallel strands."""
    p = fat
    out: list[int] = []
    for x in w.letters:
        i = abs(x)
        sign = 1 if x > 0 else -1
        if i + 1 < p:
            out.append(x)
        elif i > p:
            out.append(sign * (i + width))
        elif i == p:
            out.extend(sign * j for j in range(p + width, p - 1, -1))
            p += 1
        else:
            out.extend(sign * j for j in range(i, i + width + 1))
            p -= 1
    return BraidWord._trusted(w.strands + width, tuple(out))


def embed_shift(w: BraidWord, strands: int, offset: int) -> BraidWord:
    """Put a braid on consecutive strands offset+1.. of a larger braid."""
    return BraidWord._trusted(strands, tuple(x + offset if x > 0 else x - offset for x in w.letters))


def simul_standardize_1pure(c1: Curve, c2: Curve) -> BraidWord:
    """A braid fixing strand 1 that makes two disjoint curves round."""
    _same(c1, c2)
    if not curves_disjoint(c1, c2):
        from .errors import NotAdjacent

        raise NotAdjacent("curves are equal or intersect")
    N = c1.punctures
    # Standardize the curve surrounding more punctures first so the other one
    # is inside it or in its exterior.
    if len(surrounded_punctures(c2)) > len(surrounded_punctures(c1)):
        c1, c2 = c2, c1
    alpha = standardize_1pure(c1)
    x = _round_base(act(c1, alpha))
    d = act(c2, alpha)
    m, k = x.lo, x.size
    inside = set(range(m, m + k + 1))
    surr = surrounded_punctures(d)
    if surr <= inside:
        drop = set(range(1, N + 1)) - inside
        u = delete_strands(d.act, drop)
        starts = {permutation_of(d.act).inverse()(p) for p in drop}
        sub = Curve(k + 1, forget_in_base(d.base, starts), u)
        v = standardize_1pure(sub)
        step = embed_shift(v, N, m - 1)
    else:
        drop = set(range(m + 1, m + k + 1))
        u = delete_strands(d.act, drop)
        starts = {permutation_of(d.act).inverse()(p) for p in drop}
        sub_base = forget_in_base(d.base, starts)
        sub = Curve(N - k, sub_base, u)
        v = standardize_1pure(sub)
        step = cable(v, m, k)
    return free_reduce(multiply(alpha, step))


def simul_standardize_1last(c1: Curve, c2: Curve) -> BraidWord:
    """A braid fixing strands 1 and N, with those strands unlinked, making two
    disjoint curves that avoid surrounding both ends round."""
    N = c1.punctures
    for c in (c1, c2):
        s = surrounded_punctures(c)
        if 1 in s and N in s:
            raise SurroundsBothEnds(f"{c} surrounds both end punctures")
    alpha = simul_standardize_1pure(c1, c2)
    b1, b2 = _round_base(act(c1, alpha)), _round_base(act(c2, alpha))
    j0 = permutation_of(alpha)(N)
    beta = multiply(alpha, braid_b(N - 1, j0))
    # Pushing the last strand home with b_{j0} may break roundness of a curve
    # surrounding puncture j0; ξ' words repair one curve, and a nested pair
    # needs ξ'_inner followed by a slide of the outer block.
    candidates = [beta]
    for outer, inner in ((b1, b2), (b2, b1)):
        candidates.append(multiply(beta, xi_last(N, outer)))
        if outer.lo <= inner.lo and inner.hi <= outer.hi and inner.hi < N - 1:
            k_out, k_in = outer.size, inner.size
            try:
                slide = braid_xi(N - 1, outer.lo, outer.lo + k_out - k_in - 1, N - 1 - k_in)
            except IndexOutOfRange:
                continue
            candidates.append(multiply(beta, xi_last(N, inner), slide))
    for cand in candidates:
        if is_round(act(c1, cand)) is not None and is_round(act(c2, cand)) is not None:
            return free_reduce(unlink_ends(cand))
    raise InvariantViolation("no end-fixing correction made both curves round")


# ------------------------------------------- curve / parabolic dictionary

def curve_of(p) -> Curve:
    """The curve attached to a parabolic subgroup.

    Types A and B live in D_{n+1}; types Ã (through θ) and C̃ live in D_{n+2}.
    """
    from .artin import Family, eta, lam, to_braid
    from .parabolic import theta_image

    fam = p.group.family
    n = p.group.rank
    if fam is Family.A:
        return Curve(n + 1, p.base, to_braid(p.conj))
    if fam is Family.B:
        return Curve(n + 1, p.base, eta(n, p.conj))
    if fam is Family.ATILDE:
        q = theta_image(p)
        return Curve(n + 2, q.base, eta(n + 1, q.conj))
    return Curve(n + 2, p.base, lam(n, p.conj))


def parabolic_of(c: Curve, group):
    """Inverse of ``curve_of`` for curves admissible in ``group``."""
    from .artin import Family, gword, lambda_inverse, rewrite_pure1
    from .parabolic import ParabolicSubgroup, theta_preimage

    fam = group.family
    N = c.punctures
    if fam is Family.A:
        return ParabolicSubgroup(group, c.base, gword(group, c.act.letters))
    if fam is Family.B:
        alpha = standardize_1pure(c)
        base = _round_base(act(c, alpha))
        return ParabolicSubgroup(group, base, rewrite_pure1(N - 1, invert(alpha)))
    if fam is Family.ATILDE:
        from .artin import type_b

        q = parabolic_of(c, type_b(N - 1))
        return theta_preimage(q)
    beta = standardize_1last(c)
    base = _round_base(act(c, beta))
    return ParabolicSubgroup(group, base, lambda_inverse(N - 2, invert(beta)))


def simul_standardize(p, q):
    """A group element s with both p^s and q^s standard.

    Supports all four families; types Ã and C̃ go through curves in D_{n+2}.
    """
    from .artin import Family, factor_semidirect, gword, lambda_inverse, rewrite_pure1
    from .errors import GroupMismatch, NotAdjacent
    from .parabolic import is_standard, parab_adjacent

    if p.group != q.group:
        raise GroupMismatch(f"{p.group} vs {q.group}")
    if not parab_adjacent(p, q):
        raise NotAdjacent("the subgroups are not adjacent")
    group = p.group
    fam = group.family
    c1, c2 = curve_of(p), curve_of(q)
    N = c1.punctures
    if fam is Family.CTILDE:
        s = lambda_inverse(group.rank, simul_standardize_1last(c1, c2))
    else:
        alpha = simul_standardize_1pure(c1, c2)
        if fam is Family.A:
            s = gword(group, alpha.letters)
        elif fam is Family.B:
            s = rewrite_pure1(N - 1, alpha)
        else:
            s, _ = factor_semidirect(group.rank, rewrite_pure1(N - 1, alpha))
    if is_standard(p.conjugated(s)) is None or is_standard(q.conjugated(s)) is None:
        return _search_standardizer(p, q)
    return s


def _search_standardizer(p, q, depth: int = 8, limit: int = 200_000):
    """Breadth-first search over short conjugators; last resort."""
    from collections import deque

    from .artin import gidentity, gword, inv_letter
    from .errors import SearchExhausted
    from .parabolic import is_standard

    group = p.group
    gens = [g for g in group.generators] + [inv_letter(g) for g in group.generators]
    start = gidentity(group)
    seen = {(p.key, q.key)}
    todo = deque([(start, 0)])
    visited = 0
    while todo:
        s, d = todo.popleft()
        ps, qs = p.conjugated(s), q.conjugated(s)
        if is_standard(ps) is not None and is_standard(qs) is not None:
            return s
        visited += 1
        if d == depth or visited > limit:
            continue
        for x in gens:
            t = gword(group, s.letters + (x,))
            pair = (p.conjugated(t).key, q.conjugated(t).key)
            if pair not in seen:
                seen.add(pair)
                todo.append((t, d + 1))
    raise SearchExhausted("no standardizing conjugator found within the search bounds")
