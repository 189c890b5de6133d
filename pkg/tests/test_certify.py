import json
import random

import pytest

from ccsdim.ccs import canonical_landmarks
from ccsdim.certify import (
    SCHEMA,
    THEOREM1_TABLE,
    certify_all,
    certify_counts,
    certify_lower_bound,
    certify_theorem1,
    certify_upper_bound,
    reports_to_json,
    reports_to_text,
)
from ccsdim.resolve import is_edge_resolving


def test_theorem1_report():
    r = certify_theorem1()
    assert r.passed
    d = r.details
    assert d["table"]["e3"]["representation"] == [1, 1, 0]
    assert d["small_sets_checked"] == 36 == d["small_sets_failing"]
    assert [c["recovered"] for c in d["printed_cases"]] == [True] * 3
    diagonal = d["printed_cases"][2]
    assert diagonal["landmarks"] == [d["labeling"]["r3"], d["labeling"]["r5"]]
    assert d["minimum"]["vertex"]["exact"] == 3
    assert d["minimum"]["edge"]["exact"] == 3


def test_table_constant_is_twelve_rows():
    assert sorted(THEOREM1_TABLE) == list(range(1, 13))
    assert len(set(THEOREM1_TABLE.values())) == 12


@pytest.mark.parametrize("n, deg3", [(1, 8), (2, 56), (3, 392)])
def test_counts_report(n, deg3):
    r = certify_counts(n)
    assert r.passed
    assert r.details["measured"]["degree3_vertices"] == deg3


def test_upper_bound_n2():
    r = certify_upper_bound(2)
    assert r.passed
    d = r.details
    assert d["landmark_count"] == 16 and d["edges"] == 116
    assert d["edge_pairs_compared"] == 6670
    assert d["vertex_resolving"]


def test_upper_bound_n3():
    r = certify_upper_bound(3)
    assert r.passed
    assert r.details["landmark_count"] == 112 and r.details["edges"] == 844


def test_dropped_landmark_fails_with_witness():
    r = certify_upper_bound(2, drop_landmark=0)
    assert not r.passed
    assert r.details["landmark_count"] == 15
    assert len(r.details["edge_witness"]) == 2


def test_lower_bound_n2():
    r = certify_lower_bound(2)
    assert r.passed
    d = r.details
    assert d["superset_checks"] == 72 == d["failing"] == d["with_in_cube_witness"]
    assert d["implied_lower_bound"] == 16
    for cube in d["cubes"]:
        base = cube["attachment_vertex"]
        for check in cube["checks"]:
            for a, b in check["witness"]:
                assert base <= a < base + 8 and base <= b < base + 8
        none_kept = cube["checks"][0]
        assert none_kept["kept"] is None and none_kept["catalog_pattern"]


def test_lower_bound_requires_n2():
    with pytest.raises(ValueError):
        certify_lower_bound(1)
    with pytest.raises(ValueError):
        certify_upper_bound(1)


def test_monotonicity_behind_lower_bound(ccs2, ccs2_oracle):
    # Random subsets of a failing superset must fail as well.
    rng = random.Random(7)
    cube = ccs2.outermost[3]
    for kept in [None, *cube.vertices]:
        W = [v for v in range(72) if v not in cube.vertices or v == kept]
        assert not is_edge_resolving(ccs2_oracle, ccs2.graph.edges, W).resolving
        for _ in range(5):
            K = rng.sample(W, rng.randrange(len(W) + 1))
            assert not is_edge_resolving(ccs2_oracle, ccs2.graph.edges, K).resolving


def test_certify_all_n1():
    reports = certify_all(1)
    assert [r.claim for r in reports] == ["theorem1", "counts(n=1)"]


def test_certify_all_n2():
    reports = certify_all(2)
    assert [r.claim for r in reports] == [
        "theorem1", "counts(n=1)", "counts(n=2)", "upper_bound(n=2)", "lower_bound(n=2)",
    ]
    assert all(r.passed for r in reports)
    text = reports_to_text(reports)
    assert "overall: PASS (5/5)" in text


def test_certify_all_guard():
    with pytest.raises(ValueError):
        certify_all(0)
    with pytest.raises(ValueError):
        certify_all(9)


def test_json_reports_are_byte_identical():
    a = reports_to_json(certify_all(2))
    b = reports_to_json(certify_all(2))
    assert a == b
    doc = json.loads(a)
    assert doc["schema"] == SCHEMA and doc["status"] == "pass"
    assert "runtime_s" not in doc["reports"][0]
    timed = json.loads(reports_to_json(certify_all(1), timings=True))
    assert "runtime_s" in timed["reports"][0]


def test_vertex_and_edge_sets_coincide_n2(ccs2, ccs2_oracle):
    # The same 16 vertices serve both variants, as the dim = edim comparison requires.
    K = canonical_landmarks(ccs2)
    r = certify_upper_bound(2)
    assert r.details["landmarks"] == K
    assert r.details["edge_resolving"] and r.details["vertex_resolving"]
