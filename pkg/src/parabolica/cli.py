"""Command-line entry point.

Exit codes: 0 on success, 1 on bad input, 2 when an internal invariant fails
(including a failed ``verify`` or ``iso-check``).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import artin as ag
from . import braid as bc
from . import curves as cv
from . import graphs as gr
from . import parabolic as pc
from .errors import InvariantViolation, ParabolicaError


class UsageError(ParabolicaError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


class Reply:
    """What a subcommand produced, in both renderings."""

    def __init__(self, text: str, data, status: int = 0):
        self.text = text
        self.data = data
        self.status = status


def _json_arg(text: str, what: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError(f"{what} must be a JSON object")
    return data


def _curve(text: str, punctures: int | None) -> cv.Curve:
    data = _json_arg(text, "curve")
    if "punctures" not in data and punctures is None:
        raise UsageError("give --punctures or a 'punctures' field in the curve")
    try:
        return cv.curve_from_json(data, punctures)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed curve {text!r}: {exc}") from None


def _parabolic(text: str) -> pc.ParabolicSubgroup:
    try:
        return pc.parabolic_from_json(_json_arg(text, "parabolic subgroup"))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed parabolic subgroup {text!r}: {exc}") from None


def _braid(strands: int, text: str) -> bc.BraidWord:
    try:
        return bc.parse_word(strands, text)
    except ValueError as exc:
        raise UsageError(f"bad braid word {text!r}: {exc}") from None


def _yes_no(flag: bool, **extra) -> Reply:
    return Reply("true" if flag else "false", {"result": flag, **extra})


def _word_reply(w: bc.BraidWord) -> Reply:
    return Reply(" ".join(str(x) for x in w.letters), w.to_json())


def _group_reply(w: ag.GroupWord) -> Reply:
    return Reply(str(w), w.to_json())


# ---------------------------------------------------------------- handlers

def cmd_nf(a) -> Reply:
    nf = bc.normal_form(_braid(a.strands, a.word))
    return Reply(nf.render(), nf.to_json())


def cmd_equal(a) -> Reply:
    return _yes_no(bc.equal(_braid(a.strands, a.u), _braid(a.strands, a.v)))


def cmd_commutes(a) -> Reply:
    return _yes_no(bc.commutes(_braid(a.strands, a.u), _braid(a.strands, a.v)))


def cmd_embed(a) -> Reply:
    if a.theta:
        w = ag.parse_group_word(a.word, a.n)
        return _group_reply(ag.theta(a.n, w))
    w = ag.parse_group_word(a.word, a.n)
    return _word_reply(ag.lam(a.n, w) if a.lambda_ else ag.eta(a.n, w))


def cmd_rewrite_b(a) -> Reply:
    if a.ends:
        return _group_reply(ag.lambda_inverse(a.n, _braid(a.n + 2, a.word)))
    return _group_reply(ag.rewrite_pure1(a.n, _braid(a.n + 1, a.word)))


def cmd_psi(a) -> Reply:
    y = _braid(a.n + 1, a.word)
    x = ag.psi(a.n, y)
    i = ag.psi_index(y)
    return Reply(f"{x}\na_{i}", {"word": x.to_json(), "a_index": i})


def cmd_central(a) -> Reply:
    group = ag.GroupId(a.group, a.n)
    if a.wrap_lo is not None or a.wrap_hi is not None:
        if a.wrap_lo is None or a.wrap_hi is None:
            raise UsageError("--wrap-lo and --wrap-hi go together")
        base = pc.base_from_json(group, {"wrapLo": a.wrap_lo, "wrapHi": a.wrap_hi})
    else:
        if a.lo is None or a.hi is None:
            raise UsageError("give --lo and --hi (or --wrap-lo and --wrap-hi)")
        base = pc.base_from_json(group, {"lo": a.lo, "hi": a.hi})
    return _group_reply(pc.central_element(group, base))


def cmd_parab_equal(a) -> Reply:
    return _yes_no(pc.parab_equal(_parabolic(a.p), _parabolic(a.q)))


def cmd_parab_adjacent(a) -> Reply:
    return _yes_no(pc.parab_adjacent(_parabolic(a.p), _parabolic(a.q)))


def cmd_curve_act(a) -> Reply:
    c = _curve(a.curve, a.punctures)
    d = cv.act(c, _braid(c.punctures, a.word))
    return Reply(json.dumps(d.to_json(), sort_keys=True), d.to_json())


def cmd_curve_equal(a) -> Reply:
    return _yes_no(cv.curve_equal(_curve(a.c1, a.punctures), _curve(a.c2, a.punctures)))


def cmd_curve_disjoint(a) -> Reply:
    return _yes_no(cv.curves_disjoint(_curve(a.c1, a.punctures), _curve(a.c2, a.punctures)))


def cmd_standardize(a) -> Reply:
    c = _curve(a.curve, a.punctures)
    if a.pair:
        if a.other is None:
            raise UsageError("--pair needs --other")
        c2 = _curve(a.other, c.punctures)
        if not cv.curves_disjoint(c, c2):
            raise UsageError("the two curves are not disjoint")
        w = cv.simul_standardize_1last(c, c2) if a.ends else cv.simul_standardize_1pure(c, c2)
        images = [cv.act(c, w), cv.act(c2, w)]
    else:
        w = cv.standardize_1last(c) if a.pure1last else cv.standardize_1pure(c)
        images = [cv.act(c, w)]
    rounds = [cv.is_round(x) for x in images]
    if any(r is None for r in rounds):
        raise InvariantViolation("standardizing braid did not produce round curves")
    text = " ".join(str(x) for x in w.letters) + "\n" + " ".join(f"C{r}" for r in rounds)
    return Reply(text, {"braid": w.to_json(), "round": [r.to_json() for r in rounds]})


def cmd_simul_standardize(a) -> Reply:
    p, q = _parabolic(a.p), _parabolic(a.q)
    s = cv.simul_standardize(p, q)
    bases = [pc.is_standard(p.conjugated(s)), pc.is_standard(q.conjugated(s))]
    if any(b is None for b in bases):
        raise InvariantViolation("conjugator did not standardize both subgroups")
    text = f"{s}\n" + " ".join(str(b) for b in bases)
    return Reply(text, {"conjugator": s.to_json(), "bases": [b.to_json() for b in bases]})


def _slice(a, extra: Sequence[cv.Curve] = ()) -> gr.CurveGraphSlice:
    mode = gr.mode_of(a.mode)
    m = a.punctures
    seeds = [_curve(s, m) for s in (a.seed or [])]
    if not seeds:
        seeds = [cv.Curve(m, b, bc.identity(m)) for b in _round_bases(m)]
        seeds = [c for c in seeds if gr.admissible(c, mode)]
    seeds += list(extra)
    return gr.build_slice(m, mode, seeds, radius=a.radius, cap=a.cap)


def _round_bases(m: int) -> list[pc.Interval]:
    from .sampling import all_round_bases

    return all_round_bases(m)


def cmd_graph_build(a) -> Reply:
    g = _slice(a)
    target = a.out
    fmt = target if target in ("dot", "json") else Path(target).suffix.lstrip(".")
    if fmt not in ("dot", "json"):
        raise UsageError("--out takes dot, json, or a file path ending in .dot or .json")
    body = gr.export_dot(g) if fmt == "dot" else gr.export_json(g)
    summary = {"vertices": len(g.vertices), "edges": len(g.edges), "truncated": g.truncated}
    if target in ("dot", "json"):
        return Reply(body.rstrip("\n"), json.loads(body) if fmt == "json" else {"dot": body, **summary})
    Path(target).write_text(body)
    text = f"wrote {target}: {summary['vertices']} vertices, {summary['edges']} edges"
    return Reply(text, {"file": target, **summary})


def cmd_graph_distance(a) -> Reply:
    c1, c2 = _curve(a.c1, a.punctures), _curve(a.c2, a.punctures)
    g = _slice(a, [c1, c2])
    d = gr.bfs_distance_upper(g, c1, c2)
    text = "no path inside the slice" if d is None else f"distance <= {d}"
    return Reply(text, {"upper_bound": d, "vertices": len(g.vertices)})


def cmd_density_check(a) -> Reply:
    mode = gr.mode_of(a.mode)
    c = _curve(a.curve, a.punctures)
    w = gr.density_witness(c, mode)
    if not (gr.admissible(w, mode) and cv.curves_disjoint(c, w)):
        raise InvariantViolation(f"witness {w} is not admissible and disjoint")
    base = cv.is_round(w)
    shown = f"C_{base}" if base is not None else str(w)
    return Reply(shown, {"witness": w.to_json(), "round": base.to_json() if base else None})


def cmd_iso_check(a) -> Reply:
    report = gr.iso_spot_check(a.family, a.samples, a.rng_seed, rank=a.rank)
    bad = len(report["violations"])
    text = (
        f"{report['family']}{report['rank']}: {report['samples']} samples, "
        f"{report['equal_pairs']} equal, {report['adjacent_pairs']} adjacent, {bad} violations"
    )
    return Reply(text, report, 2 if bad else 0)


def cmd_verify(a) -> Reply:
    from .verify import run_checks

    results = run_checks(
        max_rank=a.max_rank,
        min_rank=a.min_rank,
        scale=a.scale,
        seed=a.rng_seed,
        only=a.only,
        threads=gr.worker_count(),
    )
    failed = sum(not r.passed for r in results)
    lines = [r.line(a.timings) for r in results]
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return Reply("\n".join(lines), [r.to_json() for r in results], 2 if failed else 0)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parabolica", description="Braids, Artin groups and parabolic subgroups.")
    p.add_argument("--json", action="store_true", help="render results as JSON")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help_: str, aliases: Sequence[str] = ()) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_, aliases=list(aliases))
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return sp

    sp = add("nf", cmd_nf, "left normal form of a braid word")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("word")
    for name, fn in (("equal", cmd_equal), ("commutes", cmd_commutes)):
        sp = add(name, fn, f"decide whether two braids are {'equal' if name == 'equal' else 'commuting'}")
        sp.add_argument("--strands", type=int, required=True)
        sp.add_argument("u")
        sp.add_argument("v")

    sp = add("embed", cmd_embed, "apply η (B→braids), θ (Ã→B) or λ (C̃→braids)")
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--eta", action="store_true")
    which.add_argument("--theta", action="store_true")
    which.add_argument("--lambda", dest="lambda_", action="store_true")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("word")

    sp = add("rewrite-b", cmd_rewrite_b, "write a 1-pure braid as a type B word")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--ends", action="store_true", help="end-pure braid on n+2 strands to a C̃ word")
    sp.add_argument("word")

    sp = add("psi", cmd_psi, "type B word x with y^-1 η(x) in {a_0..a_n}")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("word")

    sp = add("central", cmd_central, "central element of a standard parabolic", ["central-element"])
    sp.add_argument("--group", required=True, help="A, B, At or Ct")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lo", type=int)
    sp.add_argument("--hi", type=int)
    sp.add_argument("--wrap-lo", type=int)
    sp.add_argument("--wrap-hi", type=int)

    for name, fn in (("parab-equal", cmd_parab_equal), ("parab-adjacent", cmd_parab_adjacent),
                     ("simul-standardize", cmd_simul_standardize)):
        sp = add(name, fn, "parabolic subgroups given as JSON")
        sp.add_argument("p")
        sp.add_argument("q")

    sp = add("curve-act", cmd_curve_act, "push a curve by a braid")
    sp.add_argument("--punctures", type=int)
    sp.add_argument("--curve", required=True)
    sp.add_argument("word")
    for name, fn in (("curve-equal", cmd_curve_equal), ("curve-disjoint", cmd_curve_disjoint)):
        sp = add(name, fn, "compare two curves given as JSON")
        sp.add_argument("--punctures", type=int)
        sp.add_argument("c1")
        sp.add_argument("c2")

    sp = add("standardize", cmd_standardize, "braid carrying curves to round ones")
    how = sp.add_mutually_exclusive_group(required=True)
    how.add_argument("--pure1", action="store_true")
    how.add_argument("--pure1last", action="store_true")
    how.add_argument("--pair", action="store_true")
    sp.add_argument("--ends", action="store_true", help="with --pair, fix the last strand as well")
    sp.add_argument("--punctures", type=int)
    sp.add_argument("--curve", required=True)
    sp.add_argument("--other", help="second curve for --pair")

    def slice_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--punctures", type=int, required=True)
        sp.add_argument("--mode", choices=["full", "ka", "kc"], default="full")
        sp.add_argument("--radius", type=int, default=2)
        sp.add_argument("--cap", type=int)
        sp.add_argument("--seed", action="append", help="seed curve JSON; repeatable")

    sp = add("graph-build", cmd_graph_build, "bounded slice of the curve graph")
    slice_flags(sp)
    sp.add_argument("--out", default="dot", help="dot, json, or a .dot/.json file path")
    sp = add("graph-distance", cmd_graph_distance, "distance upper bound inside a slice")
    slice_flags(sp)
    sp.add_argument("c1")
    sp.add_argument("c2")

    sp = add("density-check", cmd_density_check, "admissible curve disjoint from an inadmissible one")
    sp.add_argument("--punctures", type=int)
    sp.add_argument("--mode", choices=["ka", "kc"], required=True)
    sp.add_argument("--curve", required=True)

    sp = add("iso-check", cmd_iso_check, "spot-check the parabolic/curve graph isomorphisms")
    sp.add_argument("--family", required=True, help="B, At or Ct")
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--rank", type=int, default=4)
    sp.add_argument("--seed", dest="rng_seed", type=int, default=0)

    sp = add("verify", cmd_verify, "run the invariant suite")
    sp.add_argument("--max-rank", type=int, default=6)
    sp.add_argument("--min-rank", type=int, default=1)
    sp.add_argument("--scale", type=float, default=1.0, help="multiplier for sample counts")
    sp.add_argument("--seed", dest="rng_seed", type=int, default=0)
    sp.add_argument("--only", action="append", help="substring of check names to run")
    sp.add_argument("--timings", action="store_true")
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        reply = args.fn(args)
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=err)
        return 2
    except ParabolicaError as exc:
        print(f"error: {exc}", file=err)
        return 1
    if args.json:
        print(json.dumps(reply.data, sort_keys=True, ensure_ascii=False), file=out)
    else:
        print(reply.text, file=out)
    return reply.status


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
