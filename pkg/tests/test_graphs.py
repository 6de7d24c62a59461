import numpy as np
import pytest

from parabolica import braid as bc
from parabolica import curves as cv
from parabolica import graphs as gr
from parabolica.errors import AdmissibilityError, VertexMissing
from parabolica.sampling import all_round_bases, random_curve


def rc(m, lo, hi=None):
    return cv.round_curve(m, lo, hi)


def all_rounds(m, mode=gr.Mode.FULL):
    return [c for c in (cv.Curve(m, b, bc.identity(m)) for b in all_round_bases(m)) if gr.admissible(c, mode)]


def sigmas(m):
    return [bc.make_word(m, [i]) for i in range(1, m)]


def test_build_full_slice_example():
    g = gr.build_slice(5, "full", [rc(5, 1)], sigmas(5), radius=2, cap=50)
    assert rc(5, 1).key in g.vertices and rc(5, 2).key in g.vertices
    assert cv.act(rc(5, 1), bc.make_word(5, [2, 3])).key in g.vertices


def test_ka_rejects_bad_seed():
    with pytest.raises(AdmissibilityError):
        gr.build_slice(5, "ka", [rc(5, 1)], sigmas(5), radius=1)


def test_kc_filter():
    g = gr.build_slice(5, "kc", [rc(5, 2)], sigmas(5), radius=1, cap=50)
    assert all(not {1, 5} <= cv.surrounded_punctures(c) for c in g.vertices.values())


def test_cap_truncates():
    g = gr.build_slice(5, "full", all_rounds(5), radius=2, cap=2)
    assert g.truncated > 0
    assert all(c.canonical_length <= 2 for c in g.vertices.values())


def test_distance_examples():
    g = gr.build_slice(5, "full", all_rounds(5), radius=2)
    assert gr.bfs_distance_upper(g, rc(5, 1), rc(5, 3)) == 1
    assert gr.bfs_distance_upper(g, rc(5, 1), rc(5, 1)) == 0
    # the two curves intersect, so the true distance is at least 2
    assert not cv.curves_disjoint(rc(5, 1, 2), rc(5, 2, 3))
    assert gr.bfs_distance_upper(g, rc(5, 1, 2), rc(5, 2, 3)) == 2
    with pytest.raises(VertexMissing):
        gr.bfs_distance_upper(g, rc(5, 1), cv.act(rc(5, 1), bc.make_word(5, [2] * 7 + [-3] * 5 + [1] * 6)))


def test_density_examples():
    assert cv.curve_equal(gr.density_witness(rc(5, 1), "ka"), rc(5, 3))
    assert cv.curve_equal(gr.density_witness(rc(5, 1, 3), "ka"), rc(5, 2))
    w = bc.make_word(5, [2, 2, -3, 4, -2])  # fixes strand 1
    got = gr.density_witness(cv.act(rc(5, 1), w), "ka")
    assert cv.curve_equal(got, cv.act(rc(5, 3), w))
    with pytest.raises(AdmissibilityError):
        gr.density_witness(rc(5, 2), "ka")


def test_density_kc_random():
    rng = np.random.default_rng(30)
    done = 0
    while done < 100:
        c = random_curve(rng, int(rng.integers(4, 8)), 8)
        if gr.admissible(c, gr.Mode.KC):
            continue
        w = gr.density_witness(c, "kc")
        assert gr.admissible(w, gr.Mode.KC) and cv.curves_disjoint(c, w)
        done += 1


def test_iso_spot_checks():
    for fam in ("B", "At", "Ct"):
        report = gr.iso_spot_check(fam, 100, seed=1, rank=4)
        assert report["violations"] == []
        assert report["equal_pairs"] > 0 and report["adjacent_pairs"] > 0
    with pytest.raises(AdmissibilityError):
        gr.iso_spot_check("D", 1, 0)


def test_export_dot():
    empty = gr.CurveGraphSlice(5, gr.Mode.FULL, None)
    assert gr.export_dot(empty) == "graph {\n}\n"
    g = gr.build_slice(5, "full", [rc(5, 1), rc(5, 3)], [], radius=0)
    dot = gr.export_dot(g)
    assert dot.count(" -- ") == 1


def test_json_round_trip():
    g = gr.build_slice(5, "ka", all_rounds(5, gr.Mode.KA), radius=1)
    back = gr.slice_from_json(gr.export_json(g))
    assert back.same_as(g)
    assert gr.export_json(back) == gr.export_json(g)


def test_threaded_edges_match_serial():
    g1 = gr.build_slice(6, "full", all_rounds(6), radius=2, threads=1)
    g4 = gr.build_slice(6, "full", all_rounds(6), radius=2, threads=4)
    assert len(g1.vertices) > 64 and g1.same_as(g4)
