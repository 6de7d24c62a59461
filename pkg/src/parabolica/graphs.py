"""Bounded slices of the curve graph of the punctured disk.

The curve graph is locally infinite, so a slice is the orbit of some seed
curves under words of bounded length, filtered by a complexity cap. Every
distance computed inside a slice is only an upper bound for the true one.
"""
from __future__ import annotations

import json
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .artin import Family, GroupId, gmul, gpow
from .braid import BraidWord, braid_a, braid_b, invert, multiply
from .curves import (
    Curve,
    act,
    curve_equal,
    curve_from_json,
    curve_of,
    curves_disjoint,
    is_round,
    round_curve,
    standardize_1pure,
    surrounded_punctures,
)
from .errors import AdmissibilityError, InvariantViolation, VertexMissing
from .parabolic import Interval, ParabolicSubgroup, central_element, parab_adjacent, parab_equal
from .sampling import random_adjacent_pair, random_parabolic


class Mode(str, Enum):
    FULL = "full"
    KA = "ka"
    KC = "kc"


def mode_of(name: str | Mode) -> Mode:
    if isinstance(name, Mode):
        return name
    return Mode(name.lower())


def admissible(c: Curve, mode: Mode) -> bool:
    if mode is Mode.FULL:
        return True
    s = surrounded_punctures(c)
    if mode is Mode.KA:
        return 1 not in s
    return not (1 in s and c.punctures in s)


def render_key(key: tuple) -> str:
    _, p, factors = key
    parts = [f"Δ^{p} ·"]
    parts.extend("[" + ",".join(str(v) for v in f) + "]" for f in factors)
    return " ".join(parts)


def worker_count() -> int:
    raw = os.environ.get("PARABOLICA_THREADS", "")
    try:
        value = int(raw)
    except ValueError:
        value = os.cpu_count() or 1
    return max(1, value)


@dataclass
class CurveGraphSlice:
    punctures: int
    mode: Mode
    cap: int | None
    vertices: dict[tuple, Curve] = field(default_factory=dict)
    edges: set[frozenset] = field(default_factory=set)
    truncated: int = 0  # curves dropped by the complexity cap

    def sorted_keys(self) -> list[tuple]:
        return sorted(self.vertices, key=render_key)

    def same_as(self, other: "CurveGraphSlice") -> bool:
        return (
            self.punctures == other.punctures
            and self.mode == other.mode
            and set(self.vertices) == set(other.vertices)
            and self.edges == other.edges
        )


def default_generators(m: int) -> list[BraidWord]:
    n = m - 1
    gens = [BraidWord._trusted(m, (i,)) for i in range(1, m)]
    gens += [BraidWord._trusted(m, (-i,)) for i in range(1, m)]
    gens += [braid_a(n, i) for i in range(2, n + 1)]
    gens += [braid_b(n, j) for j in range(1, n)]
    return gens


def _edges_for(keys: list[tuple], curves: dict[tuple, Curve], threads: int) -> set[frozenset]:
    def row(i: int) -> list[frozenset]:
        ci = curves[keys[i]]
        return [
            frozenset((keys[i], keys[j]))
            for j in range(i + 1, len(keys))
            if curves_disjoint(ci, curves[keys[j]])
        ]

    edges: set[frozenset] = set()
    if threads > 1 and len(keys) > 64:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(row, range(len(keys))):
                edges.update(part)
    else:
        for i in range(len(keys)):
            edges.update(row(i))
    return edges


def build_slice(
    m: int,
    mode: Mode | str,
    seeds: Sequence[Curve],
    generators: Sequence[BraidWord] | None = None,
    radius: int = 2,
    cap: int | None = None,
    threads: int | None = None,
) -> CurveGraphSlice:
    mode = mode_of(mode)
    gens = list(generators) if generators is not None else default_generators(m)
    out = CurveGraphSlice(m, mode, cap)
    frontier: list[Curve] = []
    for c in seeds:
        if c.punctures != m:
            raise AdmissibilityError(f"seed {c} lives in D_{c.punctures}, not D_{m}")
        if not admissible(c, mode):
            raise AdmissibilityError(f"seed {c} is not admissible for mode {mode.value}")
        if cap is not None and c.canonical_length > cap:
            out.truncated += 1
            continue
        if c.key not in out.vertices:
            out.vertices[c.key] = c
            frontier.append(c)
    for _ in range(radius):
        nxt: list[Curve] = []
        for c in frontier:
            for g in gens:
                d = act(c, g)
                if d.key in out.vertices or not admissible(d, mode):
                    continue
                if cap is not None and d.canonical_length > cap:
                    out.truncated += 1
                    continue
                out.vertices[d.key] = d
                nxt.append(d)
        frontier = nxt
    keys = out.sorted_keys()
    out.edges = _edges_for(keys, out.vertices, threads or worker_count())
    return out


def bfs_distance_upper(g: CurveGraphSlice, c1: Curve, c2: Curve) -> int | None:
    """Path length inside the slice; an upper bound for the true distance."""
    for c in (c1, c2):
        if c.key not in g.vertices:
            raise VertexMissing(f"{c} is not a vertex of the slice")
    if c1.key == c2.key:
        return 0
    adj: dict[tuple, list[tuple]] = {k: [] for k in g.vertices}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].append(b)
        adj[b].append(a)
    dist = {c1.key: 0}
    todo = deque([c1.key])
    while todo:
        k = todo.popleft()
        for nb in adj[k]:
            if nb not in dist:
                dist[nb] = dist[k] + 1
                if nb == c2.key:
                    return dist[nb]
                todo.append(nb)
    return None


# ------------------------------------------------------------------ density

def _round_pairs(lo: int, hi: int) -> list[Interval]:
    # Round curves around two adjacent punctures inside lo..hi.
    return [Interval(j, j) for j in range(lo, hi)]


def density_witness(c: Curve, mode: Mode | str) -> Curve:
    """An admissible curve disjoint from the inadmissible curve ``c``."""
    mode = mode_of(mode)
    N = c.punctures
    if mode is Mode.FULL:
        raise AdmissibilityError("every curve is admissible in full mode")
    if admissible(c, mode):
        raise AdmissibilityError(f"{c} is already admissible for mode {mode.value}")
    if mode is Mode.KA:
        alpha = standardize_1pure(c)
        base = is_round(act(c, alpha))
        pick = Interval(3, 3) if base.size == 1 else Interval(2, 2)
        return Curve(N, pick, invert(alpha))
    # c surrounds both end punctures; work in a picture where c is round.
    m, k = c.base.lo, c.base.size
    right = N - (m + k)
    candidates: list[Curve] = []
    if m - 1 >= 2:
        candidates.append(round_curve(N, 1, 1))
    if right >= 2:
        candidates.append(round_curve(N, N - 1, N - 1))
    if m - 1 == 1 and right == 1:
        # Slide the last puncture across the block so the two exterior
        # punctures become neighbours, then pull the pair back.
        slide = BraidWord._trusted(N, tuple(range(N - 1, 1, -1)))
        candidates.append(Curve(N, Interval(1, 1), invert(slide)))
        candidates.append(Curve(N, Interval(1, 1), slide))
    candidates += [Curve(N, b, BraidWord._trusted(N, ())) for b in _round_pairs(m, m + k)]
    rc = Curve(N, c.base, BraidWord._trusted(N, ()))
    for r in candidates:
        w = Curve(N, r.base, multiply(r.act, c.act))
        if admissible(w, mode) and curves_disjoint(r, rc):
            return w
    raise InvariantViolation(f"no admissible disjoint curve found for {c}")


# ---------------------------------------------------------- isomorphisms

_FAMILIES = {"B": Family.B, "B->CG": Family.B, "B→CG": Family.B,
             "At": Family.ATILDE, "Ã->KA": Family.ATILDE, "Ã→KA": Family.ATILDE, "At->KA": Family.ATILDE,
             "Ct": Family.CTILDE, "C̃->KC": Family.CTILDE, "C̃→KC": Family.CTILDE, "Ct->KC": Family.CTILDE}


def iso_spot_check(family: str, samples: int, seed: int, rank: int = 4, length: int = 8) -> dict:
    """Compare equality and adjacency of random parabolic pairs with those of
    their curves. Violations must be empty."""
    fam = _FAMILIES.get(family)
    if fam is None:
        raise AdmissibilityError(f"unknown family {family!r}; use B, At or Ct")
    group = GroupId(fam, rank)
    mode = {Family.B: Mode.FULL, Family.ATILDE: Mode.KA, Family.CTILDE: Mode.KC}[fam]
    rng = np.random.default_rng(seed)
    report = {"family": fam.value, "rank": rank, "samples": samples, "equal_pairs": 0,
              "adjacent_pairs": 0, "violations": []}
    for i in range(samples):
        kind = i % 3
        if kind == 0:
            p, q = random_adjacent_pair(rng, group, length)
        elif kind == 1:
            # z_P lies in P, so conjugating by a power of it gives P again
            p = random_parabolic(rng, group, length)
            z = central_element(group, p.base)
            q = ParabolicSubgroup(group, p.base, gmul(gpow(z, int(rng.integers(-2, 3))), p.conj))
        else:
            p = random_parabolic(rng, group, length)
            q = random_parabolic(rng, group, length)
        c1, c2 = curve_of(p), curve_of(q)
        eq_p, eq_c = parab_equal(p, q), curve_equal(c1, c2)
        adj_p, adj_c = parab_adjacent(p, q), curves_disjoint(c1, c2)
        report["equal_pairs"] += eq_p
        report["adjacent_pairs"] += adj_p
        problems = []
        if eq_p != eq_c:
            problems.append("equality")
        if adj_p != adj_c:
            problems.append("adjacency")
        if not (admissible(c1, mode) and admissible(c2, mode)):
            problems.append("admissibility")
        if problems:
            report["violations"].append({"sample": i, "problems": problems, "p": p.to_json(), "q": q.to_json()})
    return report


# ------------------------------------------------------------------ export

def export_dot(g: CurveGraphSlice) -> str:
    keys = g.sorted_keys()
    index = {k: i for i, k in enumerate(keys)}
    lines = ["graph {"]
    for k in keys:
        lines.append(f'  v{index[k]} [label="{g.vertices[k]}"];')
    for a, b in sorted(tuple(sorted((index[x] for x in e))) for e in g.edges):
        lines.append(f"  v{a} -- v{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: CurveGraphSlice) -> str:
    keys = g.sorted_keys()
    index = {k: i for i, k in enumerate(keys)}
    data = {
        "punctures": g.punctures,
        "mode": g.mode.value,
        "vertices": [{"key": render_key(k), "curve": g.vertices[k].to_json()} for k in keys],
        "edges": sorted(sorted(index[x] for x in e) for e in g.edges),
    }
    return json.dumps(data, sort_keys=True)


def slice_from_json(text: str) -> CurveGraphSlice:
    data = json.loads(text)
    m = int(data["punctures"])
    out = CurveGraphSlice(m, mode_of(data["mode"]), None)
    curves = [curve_from_json(v["curve"], m) for v in data["vertices"]]
    for c in curves:
        out.vertices[c.key] = c
    for i, j in data["edges"]:
        out.edges.add(frozenset((curves[i].key, curves[j].key)))
    return out
