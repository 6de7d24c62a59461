"""Invariant suite behind ``parabolica verify`` and the acceptance tests.

Each check returns how many cases it examined and a list of failures. Sample
sizes scale linearly with ``scale``; rank bounds are capped by ``max_rank``.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import artin as ag
from . import braid as bc
from . import curves as cv
from . import graphs as gr
from . import parabolic as pc
from .artin import Family, GroupId, gword
from .errors import NotBraidSubgroup, NotPure, SurroundsBothEnds
from .sampling import (
    all_round_bases,
    random_adjacent_pair,
    random_curve,
    random_group_word,
    random_parabolic,
)


@dataclass
class Settings:
    max_rank: int = 6
    min_rank: int = 1
    scale: float = 1.0
    seed: int = 0

    def count(self, n: int) -> int:
        return max(1, int(round(n * self.scale)))

    def ranks(self, low: int, high: int) -> range:
        return range(max(low, self.min_rank), min(high, self.max_rank) + 1)

    def rng(self, salt: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, salt])


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    seconds: float
    failures: list[str] = field(default_factory=list)
    note: str = ""

    def line(self, timings: bool = False) -> str:
        mark = "PASS" if self.passed else "FAIL"
        clock = f" {self.seconds:7.2f}s" if timings else ""
        extra = f" | {self.note}" if self.note else ""
        first = f" | first failure: {self.failures[0]}" if self.failures else ""
        return f"{mark}  {self.name:<52} {self.cases:>6} cases{clock}{extra}{first}"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "note": self.note, "failures": self.failures[:20]}


Outcome = tuple[int, list[str], str]
CHECKS: list[tuple[str, Callable[[Settings], Outcome]]] = []


def check(name: str):
    def deco(fn):
        CHECKS.append((name, fn))
        return fn

    return deco


def _groups(s: Settings, families: str, low: int, high: int) -> list[GroupId]:
    out = []
    for fam in families.split():
        f = ag.family_of(fam)
        lo = max(low, 3 if f in (Family.A, Family.B) else 2)
        for n in s.ranks(lo, high):
            out.append(GroupId(f, n))
    return out


def _normalizing_word(rng, group: GroupId, base, length: int):
    """Random word in generators lying in ``base`` or commuting with all of it."""
    members = set(base.members())
    pool = [
        g for g in group.generators
        if g in members or all(ag.coxeter_label(group, g, t) == 2 for t in members)
    ]
    picks = [pool[int(i)] for i in rng.integers(0, len(pool), size=length)]
    signs = rng.integers(0, 2, size=length)
    return gword(group, [ag.make_letter(g, 1 if sg else -1) for g, sg in zip(picks, signs)])


# ---------------------------------------------------------------- braid core

@check("braid: normal form is a homomorphism")
def _nf_homomorphism(s: Settings) -> Outcome:
    rng = s.rng(1)
    fails = []
    total = s.count(1000)
    for _ in range(total):
        n = int(rng.integers(2, 8))
        u = bc.random_word(rng, n + 1, int(rng.integers(0, 21)))
        v = bc.random_word(rng, n + 1, int(rng.integers(0, 21)))
        lhs = bc.normal_form(u * v)
        rhs = bc.normal_form(bc.flatten(bc.normal_form(u)) * bc.flatten(bc.normal_form(v)))
        if lhs != rhs:
            fails.append(f"u={u} v={v}")
    return total, fails, ""


@check("braid: inverses, round trip, weighting, ε")
def _nf_structure(s: Settings) -> Outcome:
    rng = s.rng(2)
    fails = []
    total = s.count(1000)
    for _ in range(total):
        n = int(rng.integers(2, 8))
        u = bc.random_word(rng, n + 1, int(rng.integers(0, 25)))
        nf = bc.normal_form(u)
        flat = bc.flatten(nf)
        if not bc.is_trivial(u * bc.invert(u)):
            fails.append(f"u·u^-1 ≠ 1 for {u}")
        if bc.normal_form(flat) != nf:
            fails.append(f"round trip failed for {u}")
        if bc.permutation_of(flat) != bc.permutation_of(u):
            fails.append(f"permutation changed for {u}")
        for a, b in zip(nf.factors, nf.factors[1:]):
            if not b.starting_set() <= a.finishing_set():
                fails.append(f"not left-weighted for {u}")
        delta_len = n * (n + 1) // 2
        eps = nf.delta_power * delta_len + sum(len(bc.permutation_braid(f)) for f in nf.factors)
        if eps != u.exponent_sum or flat.exponent_sum != u.exponent_sum:
            fails.append(f"exponent sum changed for {u}")
    return total, fails, ""


@check("braid: permutation anchors a_i, b_i")
def _anchors(s: Settings) -> Outcome:
    fails = []
    total = 0
    for n in s.ranks(1, 7):
        for i in range(0, n + 1):
            total += 1
            if bc.permutation_of(bc.braid_a(n, i))(i + 1) != 1:
                fails.append(f"π_a{i}({i + 1}) ≠ 1 for n={n}")
        for i in range(1, n + 2):
            total += 1
            if bc.permutation_of(bc.braid_b(n, i))(i) != n + 1:
                fails.append(f"π_b{i}({i}) ≠ {n + 1} for n={n}")
    return total, fails, ""


@check("braid: ξ strand bookkeeping and first/last strand")
def _xi_bookkeeping(s: Settings) -> Outcome:
    fails = []
    total = 0
    for n in s.ranks(1, 7):
        for p in range(1, n + 2):
            for q in range(p, n + 1):
                for r in range(q + 1, n + 2):
                    total += 1
                    perm = bc.permutation_of(bc.braid_xi(n, p, q, r))
                    ok = [perm(j) for j in range(p, q + 1)] == list(range(p + r - q, r + 1))
                    ok &= [perm(j) for j in range(q + 1, r + 1)] == list(range(p, p + r - q))
                    if not ok:
                        fails.append(f"ξ_{p},{q},{r} n={n}")
        for lo in range(1, n + 1):
            for hi in range(lo, n + 1):
                if hi - lo + 1 >= n:
                    continue
                total += 1
                base = pc.Interval(lo, hi)
                if bc.permutation_of(pc.xi_left(n, base))(1) != 1:
                    fails.append(f"ξ_I moves strand 1, I={base}, n={n}")
                if bc.permutation_of(pc.xi_right(n, base))(n + 1) != n + 1:
                    fails.append(f"ξ'_I moves strand n+1, I={base}, n={n}")
    return total, fails, ""


# ------------------------------------------------------------- artin groups

@check("artin: defining relations hold after embedding")
def _relations(s: Settings) -> Outcome:
    fails = []
    total = 0
    for group in _groups(s, "A B At Ct", 3, 7):
        for lhs, rhs in ag.defining_relations(group):
            total += 1
            if not ag.equal_in_group(lhs, rhs):
                fails.append(f"{group}: {lhs} ≠ {rhs}")
    return total, fails, ""


@check("artin: η injectivity smoke test")
def _injectivity(s: Settings) -> Outcome:
    rng = s.rng(3)
    fails = []
    total = s.count(1000)
    for _ in range(total):
        n = int(rng.integers(3, 7))
        g = ag.type_b(n)
        u = random_group_word(rng, g, int(rng.integers(0, 10)))
        v = random_group_word(rng, g, int(rng.integers(0, 10)))
        same_image = bc.nf_key(ag.eta(n, u)) == bc.nf_key(ag.eta(n, v))
        if ag.equal_in_group(u, v) != same_image:
            fails.append(f"{u} vs {v}")
    return total, fails, ""


@check("artin: semidirect structure (ρ)")
def _semidirect(s: Settings) -> Outcome:
    rng = s.rng(4)
    fails = []
    total = 0
    for n in s.ranks(2, 6):
        b = ag.type_b(n + 1)
        at = ag.type_at(n)
        r = ag.rho(n)
        central = ag.gpow(r, -(n + 1))
        for i in b.generators:
            total += 1
            if not ag.commutes_in_group(central, gword(b, [i])):
                fails.append(f"ρ^-(n+1) does not commute with τ{i}, n={n}")
        for i in at.generators:
            total += 1
            lhs = ag.gconj(ag.theta(n, gword(at, [i])), r)
            rhs = ag.theta(n, gword(at, [(i + 1) % (n + 1)]))
            if not ag.equal_in_group(lhs, rhs):
                fails.append(f"θ(σ̃{i})^ρ ≠ θ(σ̃{(i + 1) % (n + 1)}), n={n}")
        for _ in range(s.count(50)):
            total += 1
            x = random_group_word(rng, at, int(rng.integers(0, 8)))
            k = int(rng.integers(-3, 4))
            z = ag.gmul(ag.theta(n, x), ag.gpow(r, k))
            x2, k2 = ag.factor_semidirect(n, z)
            if k2 != k or not ag.equal_in_group(x, x2):
                fails.append(f"factor_semidirect round trip failed, n={n}, x={x}, r={k}")
            total += 1
            zb = random_group_word(rng, b, int(rng.integers(0, 10)))
            x3, k3 = ag.factor_semidirect(n, zb)
            if not ag.equal_in_group(ag.gmul(ag.theta(n, x3), ag.gpow(r, k3)), zb):
                fails.append(f"z ≠ θ(x)ρ^r for z={zb}")
    return total, fails, ""


@check("artin: ψ/η quasi-inverse")
def _psi(s: Settings) -> Outcome:
    rng = s.rng(5)
    fails = []
    total = 0
    for _ in range(s.count(1000)):
        n = int(rng.integers(3, min(7, s.max_rank + 1) + 1))
        x = random_group_word(rng, ag.type_b(n), int(rng.integers(0, 12)))
        total += 1
        if not ag.equal_in_group(ag.psi(n, ag.eta(n, x)), x):
            fails.append(f"ψ(η(x)) ≠ x for {x}")
    for _ in range(s.count(1000)):
        n = int(rng.integers(3, min(7, s.max_rank + 1) + 1))
        y = bc.random_word(rng, n + 1, int(rng.integers(0, 15)))
        total += 1
        diff = bc.multiply(bc.invert(y), ag.eta(n, ag.psi(n, y)))
        if not any(bc.equal(diff, bc.braid_a(n, i)) for i in range(n + 1)):
            fails.append(f"y^-1 η(ψ(y)) is no a_i for y={y}")
    return total, fails, ""


@check("artin: rewrite_pure1 and λ-rewriting soundness")
def _rewrite(s: Settings) -> Outcome:
    rng = s.rng(6)
    fails = []
    total = 0
    for _ in range(s.count(1000)):
        n = int(rng.integers(3, 7))
        x = ag.eta(n, random_group_word(rng, ag.type_b(n), int(rng.integers(0, 8))))
        h = ag.eta(n, random_group_word(rng, ag.type_b(n), int(rng.integers(0, 6))))
        w = bc.conjugate(x, h)
        total += 1
        if not bc.equal(ag.eta(n, ag.rewrite_pure1(n, w)), w):
            fails.append(f"η(rewrite(w)) ≠ w for {w}")
    for _ in range(s.count(300)):
        n = int(rng.integers(2, 6))
        g = random_group_word(rng, ag.type_ct(n), int(rng.integers(0, 10)))
        w = ag.lam(n, g)
        total += 1
        h, d = ag.rewrite_pure_ends(n, w)
        if d != 0 or not ag.equal_in_group(h, g):
            fails.append(f"λ^-1(λ(g)) ≠ g for {g}")
        total += 1
        twisted = bc.multiply(w, cv.ends_twist(n + 2))
        h2, d2 = ag.rewrite_pure_ends(n, twisted)
        if d2 != 1 or not ag.equal_in_group(h2, g):
            fails.append(f"Δ² bookkeeping failed for {g}")
    return total, fails, "λ-image = end-pure braids with unlinked end strands"


# --------------------------------------------------------------- parabolic

@check("parabolic: central elements and their braid images")
def _central(s: Settings) -> Outcome:
    fails = []
    total = 0
    for group in _groups(s, "A B At Ct", 2, 6):
        for base in pc.standard_bases(group):
            z = pc.central_element(group, base)
            if ag.to_braid(z).exponent_sum <= 0:
                fails.append(f"{group} {base}: non-positive exponent sum")
            for t in base.members():
                total += 1
                if not ag.commutes_in_group(z, gword(group, [t])):
                    fails.append(f"{group} {base}: z does not commute with {t}")
    for n in s.ranks(3, 6):
        for base in pc.standard_bases(ag.type_b(n)):
            total += 1
            zb = ag.eta(n, pc.central_element(ag.type_b(n), base))
            za = ag.to_braid(pc.central_element(ag.type_a(n), base))
            want = bc.power(za, 2) if base == pc.Interval(1, 1) else za
            if not bc.equal(zb, want):
                fails.append(f"η(z_B{base}) wrong, n={n}")
    for n in s.ranks(2, 6):
        for base in pc.standard_bases(ag.type_ct(n)):
            total += 1
            zc = ag.lam(n, pc.central_element(ag.type_ct(n), base))
            za = cv.round_z(n + 2, base)
            square = base in (pc.Interval(1, 1), pc.Interval(n + 1, n + 1))
            want = bc.power(za, 2) if square else za
            if not bc.equal(zc, want):
                fails.append(f"λ(z_C̃{base}) wrong, n={n}")
    return total, fails, ""


def _transport(s: Settings, family: Family, salt: int) -> Outcome:
    rng = s.rng(salt)
    fails = []
    total = 0
    trues = [0, 0]
    lo = 3 if family is Family.B else 2
    for _ in range(s.count(500)):
        n = int(rng.integers(lo, max(lo, min(6, s.max_rank)) + 1))
        group = GroupId(family, n)
        bases = pc.standard_bases(group)
        bi = bases[int(rng.integers(len(bases)))]
        bj = bases[int(rng.integers(len(bases)))]
        mode = int(rng.integers(3))
        if mode == 0:
            bj = bi
            g = _normalizing_word(rng, group, bi, int(rng.integers(0, 8)))
        elif mode == 1:
            g = _normalizing_word(rng, group, bj, int(rng.integers(0, 8)))
        else:
            g = random_group_word(rng, group, int(rng.integers(0, 8)))
        p = pc.ParabolicSubgroup(group, bi, g)
        q = pc.standard(group, bj)
        c1, c2 = cv.curve_of(p), cv.curve_of(q)
        total += 1
        eq = pc.parab_equal(p, q)
        if eq != cv.curve_equal(c1, c2):
            fails.append(f"equality transport: {p} vs {q}")
        if eq and bi.size != bj.size:
            fails.append(f"conjugate standard parabolics of different size: {p} vs {q}")
        adj = pc.parab_adjacent(p, q)
        if adj != cv.curves_disjoint(c1, c2):
            fails.append(f"adjacency transport: {p} vs {q}")
        trues[0] += eq
        trues[1] += adj
    return total, fails, f"{trues[0]} equal, {trues[1]} adjacent"


@check("parabolic: transport for B (η)")
def _transport_b(s: Settings) -> Outcome:
    return _transport(s, Family.B, 7)


@check("parabolic: transport for C̃ (λ)")
def _transport_c(s: Settings) -> Outcome:
    return _transport(s, Family.CTILDE, 8)


@check("parabolic: transport for Ã (θ)")
def _transport_a(s: Settings) -> Outcome:
    return _transport(s, Family.ATILDE, 9)


@check("parabolic: adjacency symmetry and equivariance")
def _symmetry(s: Settings) -> Outcome:
    rng = s.rng(10)
    fails = []
    total = s.count(300)
    for i in range(total):
        group = [ag.type_a(4), ag.type_b(4), ag.type_at(3), ag.type_ct(3)][i % 4]
        if i % 2:
            p, q = random_adjacent_pair(rng, group, 6)
        else:
            p, q = random_parabolic(rng, group, 6), random_parabolic(rng, group, 6)
        h = random_group_word(rng, group, 6)
        a = pc.parab_adjacent(p, q)
        if a != pc.parab_adjacent(q, p):
            fails.append(f"asymmetric: {p}, {q}")
        if a != pc.parab_adjacent(p.conjugated(h), q.conjugated(h)):
            fails.append(f"not equivariant: {p}, {q}, h={h}")
    return total, fails, ""


@check("parabolic: a_i^-1 g a_j lands in a standard parabolic")
def _technical(s: Settings) -> Outcome:
    rng = s.rng(11)
    fails = []
    total = 0
    counts = {"i": 0, "ii": 0, "iii": 0}
    for n in s.ranks(2, 5):
        for lo in range(1, n + 1):
            for hi in range(lo, n + 1):
                if hi - lo + 1 >= n:
                    continue
                base = pc.Interval(lo, hi)
                for _ in range(s.count(4)):
                    length = int(rng.integers(0, 9))
                    gens = rng.integers(lo, hi + 1, size=length)
                    signs = rng.choice(np.array([-1, 1]), size=length)
                    g = bc.BraidWord(n + 1, tuple(int(a * b) for a, b in zip(gens, signs)))
                    perm = bc.permutation_of(g)
                    for i0 in range(n + 1):
                        j0 = perm(i0 + 1) - 1
                        total += 1
                        try:
                            tag, _ = pc.lemma_technical_normalize(n, base, g, i0, j0)
                            counts[tag] += 1
                        except Exception as exc:  # noqa: BLE001 - every failure is reported
                            fails.append(f"n={n} I={base} g={g} i0={i0}: {exc}")
                        bad_j0 = (j0 + 1) % (n + 1)
                        total += 1
                        try:
                            pc.lemma_technical_normalize(n, base, g, i0, bad_j0)
                            fails.append(f"impure input accepted, n={n} I={base} i0={i0}")
                        except NotPure:
                            pass
    return total, fails, f"cases i/ii/iii = {counts['i']}/{counts['ii']}/{counts['iii']}"


@check("parabolic: image of θ (braid subgroups)")
def _image(s: Settings) -> Outcome:
    rng = s.rng(12)
    fails = []
    total = s.count(200)
    yes = 0
    for _ in range(total):
        n = int(rng.integers(2, max(2, min(5, s.max_rank)) + 1))
        q = random_parabolic(rng, ag.type_b(n + 1), int(rng.integers(0, 10)))
        no_first = pc.is_braid_subgroup(q)
        c = cv.curve_of(q)
        std = cv.is_round(cv.act(c, cv.standardize_1pure(c)))
        conj_to_braid = 1 not in std
        try:
            p = pc.theta_preimage(q)
            in_image = pc.theta_image(p).key == q.key
        except NotBraidSubgroup:
            in_image = False
        yes += no_first
        if not (no_first == conj_to_braid == in_image):
            fails.append(f"{q}: surround={not no_first} braid={conj_to_braid} image={in_image}")
    return total, fails, f"{yes} braid subgroups"


# ------------------------------------------------------------------ curves

@check("curves: dictionary matches parabolic keys")
def _dictionary(s: Settings) -> Outcome:
    rng = s.rng(13)
    fails = []
    total = s.count(300)
    for i in range(total):
        n = int(rng.integers(3, 7))
        g = ag.type_a(n)
        if i % 2:
            p, q = random_adjacent_pair(rng, g, 6)
        else:
            p = random_parabolic(rng, g, 6)
            q = pc.ParabolicSubgroup(g, p.base, ag.gmul(random_group_word(rng, g, 2), p.conj)) if i % 4 == 0 else random_parabolic(rng, g, 6)
        c1, c2 = cv.curve_of(p), cv.curve_of(q)
        if cv.curve_equal(c1, c2) != pc.parab_equal(p, q):
            fails.append(f"{p} vs {q}")
        if cv.curves_disjoint(c1, c2) != pc.parab_adjacent(p, q):
            fails.append(f"disjoint ≠ adjacent: {p} vs {q}")
    return total, fails, ""


@check("curves: a_i and b_i acting on round curves")
def _round_curve_actions(s: Settings) -> Outcome:
    fails = []
    total = 0
    fixed_reading = 0
    for n in s.ranks(2, 6):
        N = n + 1
        for base in all_round_bases(N):
            c = cv.Curve(N, base, bc.identity(N))
            for i0 in range(n + 1):
                total += 1
                if not cv.curve_equal(cv.fast_act_a(c, i0), cv.act(c, bc.braid_a(n, i0))):
                    fails.append(f"a: n={n} I={base} i0={i0}")
            for j0 in range(1, n + 2):
                total += 1
                generic = cv.act(c, bc.braid_b(n, j0))
                if not cv.curve_equal(cv.fast_act_b(c, j0), generic):
                    fails.append(f"b: n={n} I={base} j0={j0}")
                if j0 > base.lo + base.size:
                    fixed_reading += cv.curve_equal(generic, c)
                    if base.hi + 1 <= n and cv.curve_equal(generic, cv.round_curve(N, base.lo + 1, base.hi + 1)):
                        fails.append(f"shifted reading holds unexpectedly: n={n} I={base} j0={j0}")
    return total, fails, f"b_j past the curve: C_I fixed in {fixed_reading} cases, shifted reading never"


@check("curves: single-curve standardization")
def _standardize(s: Settings) -> Outcome:
    rng = s.rng(14)
    fails = []
    total = 0
    rejected = 0
    for _ in range(s.count(1000)):
        n = int(rng.integers(2, max(2, min(6, s.max_rank)) + 1))
        c = random_curve(rng, n + 1, int(rng.integers(0, 13)))
        total += 1
        alpha = cv.standardize_1pure(c)
        if not bc.is_1_pure(alpha) or cv.is_round(cv.act(c, alpha)) is None:
            fails.append(f"1-pure standardization failed for {c}")
    for _ in range(s.count(1000)):
        n = int(rng.integers(2, max(2, min(5, s.max_rank)) + 1))
        c = random_curve(rng, n + 2, int(rng.integers(0, 13)))
        both = {1, n + 2} <= cv.surrounded_punctures(c)
        total += 1
        try:
            beta = cv.standardize_1last(c)
        except SurroundsBothEnds:
            rejected += 1
            if not both:
                fails.append(f"admissible curve rejected: {c}")
            continue
        if both:
            fails.append(f"inadmissible curve accepted: {c}")
        if not bc.is_1_last_pure(beta) or cv.is_round(cv.act(c, beta)) is None:
            fails.append(f"end-pure standardization failed for {c}")
        if bc.linking_count(beta, 1, n + 2) != 0:
            fails.append(f"end strands linked for {c}")
    return total, fails, f"{rejected} inadmissible inputs rejected"


@check("curves: mirror coherence and cardinality")
def _mirror(s: Settings) -> Outcome:
    rng = s.rng(15)
    fails = []
    total = s.count(300)
    for _ in range(total):
        N = int(rng.integers(4, 8))
        c = random_curve(rng, N, int(rng.integers(0, 10)))
        w = bc.random_word(rng, N, int(rng.integers(0, 10)))
        if len(cv.surrounded_punctures(cv.act(c, w))) != c.base.size + 1:
            fails.append(f"cardinality changed: {c}, {w}")
        mc = cv.mirror_curve(c)
        if cv.surrounded_punctures(mc) != frozenset(N + 1 - j for j in cv.surrounded_punctures(c)):
            fails.append(f"mirror punctures wrong: {c}")
        a = cv.standardize_1pure(c)
        ma = bc.reverse_indices(a)
        # mirrored standardization makes the mirrored curve round as well
        if cv.is_round(cv.act(mc, ma)) is None:
            fails.append(f"mirror of standardization fails: {c}")
        try:
            b = cv.standardize_1last(c)
        except SurroundsBothEnds:
            continue
        mb = cv.standardize_1last(mc)
        if not cv.curve_equal(cv.mirror_curve(cv.act(c, b)), cv.act(mc, bc.reverse_indices(b))):
            fails.append(f"mirror does not commute with action: {c}")
        if cv.is_round(cv.act(mc, mb)) is None:
            fails.append(f"mirrored curve not standardized: {c}")
    return total, fails, ""


@check("curves: simultaneous standardization")
def _simul(s: Settings) -> Outcome:
    rng = s.rng(16)
    fails = []
    total = 0
    for group_fam in ("At", "Ct", "A", "B"):
        fam = ag.family_of(group_fam)
        lo = 3 if fam in (Family.A, Family.B) else 2
        for _ in range(s.count(200)):
            n = int(rng.integers(lo, max(lo, min(5, s.max_rank)) + 1))
            group = GroupId(fam, n)
            p, q = random_adjacent_pair(rng, group, int(rng.integers(0, 12)))
            total += 1
            sw = cv.simul_standardize(p, q)
            if sw.group != group:
                fails.append(f"conjugator in wrong group for {p}, {q}")
            if pc.is_standard(p.conjugated(sw)) is None or pc.is_standard(q.conjugated(sw)) is None:
                fails.append(f"{group}: not standardized: {p}, {q}")
    return total, fails, ""


# ------------------------------------------------------------------ graphs

@check("graphs: density witnesses")
def _density(s: Settings) -> Outcome:
    rng = s.rng(17)
    fails = []
    total = 0
    for n in s.ranks(2, 6):
        N = n + 2
        pushes = [bc.identity(N)] + [bc.BraidWord(N, (i,)) for i in range(1, N)]
        pushes += [bc.BraidWord(N, (-i,)) for i in range(1, N)]
        pushes += [bc.BraidWord(N, (i, j)) for i in range(-N + 1, N) for j in range(-N + 1, N) if i and j]
        for base in all_round_bases(N):
            for w in pushes:
                c = cv.Curve(N, base, w)
                for mode in (gr.Mode.KA, gr.Mode.KC):
                    if gr.admissible(c, mode):
                        continue
                    if mode is gr.Mode.KA and len(w):
                        continue  # round inadmissible curves for KA are exhaustive
                    total += 1
                    _check_witness(c, mode, fails)
    made = {gr.Mode.KA: 0, gr.Mode.KC: 0}
    while min(made.values()) < s.count(500):
        n = int(rng.integers(2, max(2, min(6, s.max_rank)) + 1))
        c = random_curve(rng, n + 2, int(rng.integers(0, 13)))
        for mode in made:
            if made[mode] < s.count(500) and not gr.admissible(c, mode):
                made[mode] += 1
                total += 1
                _check_witness(c, mode, fails)
    return total, fails, ""


def _check_witness(c: cv.Curve, mode: gr.Mode, fails: list[str]) -> None:
    try:
        w = gr.density_witness(c, mode)
    except Exception as exc:  # noqa: BLE001
        fails.append(f"{mode.value} {c}: {exc}")
        return
    if not gr.admissible(w, mode) or not cv.curves_disjoint(c, w):
        fails.append(f"{mode.value} {c}: bad witness {w}")


@check("graphs: mode filters, subgraph bound, equivariance")
def _slices(s: Settings) -> Outcome:
    rng = s.rng(18)
    fails = []
    total = 0
    m = 5
    seeds_full = [cv.Curve(m, b, bc.identity(m)) for b in all_round_bases(m)]
    full = gr.build_slice(m, gr.Mode.FULL, seeds_full, radius=1)
    for mode in (gr.Mode.KA, gr.Mode.KC):
        seeds = [c for c in seeds_full if gr.admissible(c, mode)]
        sub = gr.build_slice(m, mode, seeds, radius=1)
        for key, c in full.vertices.items():
            total += 1
            surr = cv.surrounded_punctures(c)
            excluded = (1 in surr) if mode is gr.Mode.KA else ({1, m} <= surr)
            if gr.admissible(c, mode) == excluded:
                fails.append(f"mode filter wrong for {c}")
        keys = sorted(sub.vertices, key=gr.render_key)
        for _ in range(s.count(20)):
            a, b = (sub.vertices[keys[int(i)]] for i in rng.integers(0, len(keys), size=2))
            total += 1
            d_sub = gr.bfs_distance_upper(sub, a, b)
            if b.key in full.vertices and a.key in full.vertices and d_sub is not None:
                d_full = gr.bfs_distance_upper(full, a, b)
                if d_full is None or d_full > d_sub:
                    fails.append(f"full distance exceeds {mode.value} distance for {a}, {b}")
    for key, c in full.vertices.items():
        for mode in (gr.Mode.KA, gr.Mode.KC):
            if not gr.admissible(c, mode):
                total += 1
                _check_witness(c, mode, fails)
    h = bc.random_word(rng, m, 6)
    gens = [bc.BraidWord(m, (i,)) for i in range(1, m)]
    base_slice = gr.build_slice(m, gr.Mode.FULL, seeds_full[:3], gens, radius=1)
    moved = gr.build_slice(
        m,
        gr.Mode.FULL,
        [cv.act(c, h) for c in seeds_full[:3]],
        [bc.conjugate(g, h) for g in gens],
        radius=1,
    )
    total += 1
    relabel = {cv.act(c, h).key: k for k, c in base_slice.vertices.items()}
    if set(relabel) != set(moved.vertices):
        fails.append("equivariance: vertex sets differ")
    else:
        mapped = {frozenset(relabel[x] for x in e) for e in moved.edges}
        if mapped != base_slice.edges:
            fails.append("equivariance: edge sets differ")
    return total, fails, ""


@check("graphs: isomorphism spot checks")
def _iso(s: Settings) -> Outcome:
    fails = []
    total = 0
    for fam in ("B", "At", "Ct"):
        report = gr.iso_spot_check(fam, s.count(100), s.seed, rank=4)
        total += report["samples"]
        fails += [f"{fam}: {v}" for v in report["violations"]]
    return total, fails, ""


def _timed(fn, settings: Settings) -> tuple[Outcome, float]:
    start = time.perf_counter()
    out = fn(settings)
    return out, time.perf_counter() - start


def run_checks(
    max_rank: int = 6,
    scale: float = 1.0,
    seed: int = 0,
    only: list[str] | None = None,
    min_rank: int = 1,
    threads: int = 1,
) -> list[CheckResult]:
    """Run the suite; results come back in registration order."""
    settings = Settings(max_rank=max_rank, min_rank=min_rank, scale=scale, seed=seed)
    chosen = [(name, fn) for name, fn in CHECKS if not only or any(o in name for o in only)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outs = list(pool.map(lambda item: _timed(item[1], settings), chosen))
    else:
        outs = [_timed(fn, settings) for _, fn in chosen]
    return [
        CheckResult(name, not fails, cases, seconds, fails, note)
        for (name, _), ((cases, fails, note), seconds) in zip(chosen, outs)
    ]
