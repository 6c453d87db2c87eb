"""Tests for oracle_search: Heron enumeration, pair grouping, cross-checks, writers."""

import io
import json
from fractions import Fraction as F

import pytest
from pydantic import ValidationError

from heronpairs.core.errors import OutOfBounds
from heronpairs.exact_geometry import Triangle, certify_heron, heron_product
from heronpairs.families import PairKind, TrianglePair, family_rp, family_rr_right, verify_pair
from heronpairs.oracle_search import (
    CSV_COLUMNS,
    PairRecord,
    SearchConfig,
    cross_check_family,
    enumerate_heron,
    find_pairs,
    write_csv,
    write_jsonl,
)


@pytest.fixture(scope="module")
def records_85():
    return find_pairs(SearchConfig(max_side=85))


def _classes(records):
    return {(r.pair.kind, r.key, r.pair.side_classes()) for r in records}


def test_enumerate_small_bounds():
    assert list(enumerate_heron(4)) == []
    found = [c.triangle.sides for c in enumerate_heron(10)]
    assert found == [(3, 4, 5), (5, 5, 6), (5, 5, 8), (6, 8, 10)]
    by_sides = {c.triangle.sides: c for c in enumerate_heron(6)}
    assert by_sides[(3, 4, 5)].area == 6
    assert by_sides[(5, 5, 6)].area == 12


def test_enumerate_certificates_recompute():
    for cert in enumerate_heron(30):
        assert certify_heron(cert.triangle) == cert


def test_enumerate_parallel_matches_serial():
    assert list(enumerate_heron(30, workers=2)) == list(enumerate_heron(30))


def test_search_config_validation():
    with pytest.raises(ValidationError):
        SearchConfig(max_side=2)
    with pytest.raises(ValidationError):
        SearchConfig(max_side=10, workers=0)
    cfg = SearchConfig(max_side=10, kinds={"common_rr"})
    assert cfg.kinds == frozenset({PairKind.COMMON_RR})


def test_no_pairs_at_tiny_bound():
    assert find_pairs(SearchConfig(max_side=10)) == []


def test_published_rr_pair_found(records_85):
    target = frozenset(((40, 68, 84), (36, 77, 85)))
    hits = [
        r
        for r in records_85
        if r.pair.kind is PairKind.COMMON_RR and r.pair.side_classes() == target
    ]
    assert len(hits) == 1
    assert hits[0].key == (F(85, 2), 14)
    assert hits[0].pair.first.triangle.sides == (40, 68, 84)


def test_records_are_genuine_pairs(records_85):
    assert records_85
    for record in records_85:
        assert record.key == record.pair.key
        assert record.pair.max_side() <= 85
        assert verify_pair(record.pair).ok


def test_common_area_pairs_satisfy_necessary_conditions(records_85):
    for record in records_85:
        if record.pair.kind is not PairKind.COMMON_RA:
            continue
        s1, s2 = record.pair.first.triangle.sides, record.pair.second.triangle.sides
        assert s1[0] * s1[1] * s1[2] == s2[0] * s2[1] * s2[2]
        assert heron_product(*s1) == heron_product(*s2)


def test_deterministic_sorted_output(records_85):
    again = find_pairs(SearchConfig(max_side=85))
    first, second = io.StringIO(), io.StringIO()
    write_jsonl(records_85, first)
    write_jsonl(again, second)
    assert first.getvalue() == second.getvalue()
    order = [(r.pair.kind.value, r.key) for r in records_85]
    assert order == sorted(order)


def test_monotone_in_bound(records_85):
    smaller = find_pairs(SearchConfig(max_side=60))
    assert _classes(smaller) <= _classes(records_85)


def test_filters(records_85):
    scalene = find_pairs(SearchConfig(max_side=85, scalene_only=True))
    assert _classes(scalene) <= _classes(records_85)
    for record in scalene:
        assert len(set(record.pair.first.triangle.sides)) == 3
        assert len(set(record.pair.second.triangle.sides)) == 3
    primitive = find_pairs(SearchConfig(max_side=85, primitive_only=True))
    assert any(
        r.pair.side_classes() == frozenset(((40, 68, 84), (36, 77, 85))) for r in primitive
    )


def test_cross_check_family():
    assert cross_check_family(family_rr_right(4), SearchConfig(max_side=85))
    with pytest.raises(OutOfBounds):
        cross_check_family(family_rp(2, 3), SearchConfig(max_side=100))


def test_cross_check_fabricated_pair():
    c1 = certify_heron(Triangle(3, 4, 5))
    c2 = certify_heron(Triangle(6, 8, 10))
    fake = TrianglePair(c1, c2, PairKind.COMMON_RR, c1.circumradius, c1.inradius)
    assert not cross_check_family(fake, SearchConfig(max_side=20))


def test_write_csv():
    records = [
        r
        for r in find_pairs(SearchConfig(max_side=85, kinds={PairKind.COMMON_RR}))
        if r.key == (F(85, 2), 14)
    ]
    out = io.StringIO()
    assert write_csv(records, out) == len(records)
    lines = out.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert "common_rr,40,68,84,36,77,85,85/2,14" in lines


def test_write_jsonl_records():
    pair = family_rr_right(4)
    out = io.StringIO()
    write_jsonl([PairRecord(pair, pair.key)], out)
    data = json.loads(out.getvalue())
    assert data["key"] == ["85/2", "14"]
    assert data["pair"]["kind"] == "common_rr"
