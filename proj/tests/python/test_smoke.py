import math
import os
from pathlib import Path

import pytest

import batchlp

FIXTURES = Path(os.environ.get("BATCHLP_FIXTURE_DIR", Path(__file__).parents[2] / "fixtures" / "mps"))


def textbook():
    return batchlp.StandardFormLP(c=[3.0, 5.0], A=[[1.0, 0.0], [0.0, 2.0], [3.0, 2.0]], b=[4.0, 12.0, 18.0])


def test_solve_textbook():
    out = batchlp.solve(textbook())
    assert out.status == "optimal"
    assert out.objective_value == pytest.approx(36.0)
    assert out.primal_point == pytest.approx([2.0, 6.0])
    assert batchlp.certify(textbook(), out)


def test_statuses():
    unbounded = batchlp.StandardFormLP([1.0, 1.0], [[1.0, -1.0]], [1.0])
    infeasible = batchlp.StandardFormLP([1.0], [[1.0]], [-1.0])
    assert batchlp.solve(unbounded).status == "unbounded"
    out = batchlp.solve(infeasible)
    assert out.status == "infeasible"
    assert out.objective_value is None


def test_batch_matches_single_solves():
    lps = batchlp.gen_random_lps(6, 50, seed=3, feasible_start=False)
    results = batchlp.batch_solve(lps, workers=2)
    for lp, res in zip(lps, results):
        single = batchlp.solve(lp)
        assert res.status == single.status
        assert res.objective_value == single.objective_value


def test_heterogeneous_batch_raises():
    lps = batchlp.gen_random_lps(3, 1) + batchlp.gen_random_lps(4, 1)
    with pytest.raises(batchlp.HeterogeneousBatch):
        batchlp.batch_solve(lps)


def test_solve_box():
    value, point = batchlp.solve_box([0.0, 1.0], [2.0, 3.0], [1.0, -1.0])
    assert value == 1.0
    assert point == [2.0, 1.0]
    with pytest.raises(batchlp.Error):
        batchlp.solve_box([1.0], [0.0], [1.0])


def test_memory_model_and_chunks():
    assert batchlp.lp_memory_bytes(5, 5, 5, 0) == 768
    chunks = batchlp.plan_chunks(3000, 768, 1_000_000)
    assert [e - b for b, e in chunks] == [1302, 1302, 396]
    with pytest.raises(batchlp.BatchTooLarge):
        batchlp.plan_chunks(1, 769, 768)


def test_mps_fixture():
    out = batchlp.solve_mps(FIXTURES / "textbook.mps")
    assert out["status"] == "optimal"
    assert math.isclose(out["objective"], 36.0)
    assert out["solution"] == pytest.approx({"x1": 2.0, "x2": 6.0})


def test_mps_parse_error_is_catchable(tmp_path):
    bad = tmp_path / "bad.mps"
    bad.write_text("NAME X\nROWS\n N obj\nCOLUMNS\n x nope 1\nENDATA\n")
    with pytest.raises(batchlp.ParseError, match="line 5"):
        batchlp.solve_mps(bad)
