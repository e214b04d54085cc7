"""
Тесты для verify: наборы проверок на малых границах
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import json

import pytest

import verify
from config import FINITE_MODEL, LAW_BOUNDS, REPORT
from finite_model import all_terms
from logic import parse_infix_term
from report import VerificationReport
from verify import (
    SUITE_NAMES, census, check_wqt_pool, check_wqt_star_pool, default_bound,
    finite_model_pools, injectivity, run_all, run_suite,
)
from tree_codec import LEAF, Node


@pytest.fixture
def small_bounds(monkeypatch):
    """Уменьшенные внутренние границы, чтобы наборы шли быстро"""
    for key, value in {
        "trees": 4,
        "tree_depth": 3,
        "pair_parts": 3,
        "set_cores": 2,
        "set_members": 2,
        "certificates": 3,
        "wt_depth": 2,
    }.items():
        monkeypatch.setitem(LAW_BOUNDS, key, value)
    monkeypatch.setitem(FINITE_MODEL, "random_pools", 3)
    monkeypatch.setitem(FINITE_MODEL, "pool_size", 2)
    monkeypatch.setitem(FINITE_MODEL, "exhaustive_pool_size", 1)
    monkeypatch.setitem(FINITE_MODEL, "single_term_depth", 1)


class TestCensus:

    def test_census(self):
        assert census(7) == [(1, 1, 1), (3, 1, 1), (5, 2, 2), (7, 5, 5)]

    def test_even_bound(self):
        assert census(4) == [(1, 1, 1), (3, 1, 1)]


class TestSuites:
    """Каждый набор проходит на малой границе"""

    @pytest.mark.parametrize("name,bound", [
        ("strings-laws", 3),
        ("tally-arith", 4),
        ("ae-census", 7),
        ("codec", 7),
        ("set-coding", 6),
        ("recursion", 3),
        ("interpretation", 7),
        ("wt-translation", 7),
        ("finite-models", 2),
    ])
    def test_passes(self, small_bounds, name, bound):
        report = run_suite(name, bound)
        assert report.passed, report.failures[:3]
        assert report.suite == name
        assert report.bound == bound
        assert report.cases > 0

    def test_census_cases(self):
        report = run_suite("ae-census", 5)
        assert report.passed
        # три длины переписи и законы семейства counting
        assert report.cases > 3

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suite("nope")

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            run_suite("codec", 0)

    def test_default_bound(self):
        assert default_bound("codec") == LAW_BOUNDS["codec"]
        assert default_bound("finite-models") == LAW_BOUNDS["wt_depth"]

    def test_names(self):
        assert SUITE_NAMES[-1] == "all"
        assert len(SUITE_NAMES) == 10

    def test_verbose(self, capsys):
        run_suite("ae-census", 3, verbose=True)
        out = capsys.readouterr().out
        assert "[Verify] ae-census: граница 3" in out


class TestReport:
    """Тесты отчёта и его JSON-формы"""

    def test_json_fields(self):
        report = run_suite("ae-census", 5)
        data = json.loads(report.to_json())
        assert list(data)[:len(REPORT["fields"])] == REPORT["fields"]
        assert data["failures"] == []
        assert data["census"] == [
            {"length": 1, "count": 1, "catalan": 1},
            {"length": 3, "count": 1, "catalan": 1},
            {"length": 5, "count": 2, "catalan": 2},
        ]
        assert report.verdict() == "проверено до 5"

    def test_plain_suite_has_fixed_fields(self):
        data = json.loads(run_suite("tally-arith", 3).to_json())
        assert list(data) == REPORT["fields"]

    def test_failure_verdict(self):
        report = VerificationReport("x", 3)
        report.add("law", False, {"x": "a"})
        report.add("law", True)
        assert not report.passed
        assert report.cases == 2
        assert report.verdict() == "нарушено законов: 1"
        assert report.to_dict()["failures"] == [{"law": "law", "witness": {"x": "a"}}]

    def test_run_all_prefixes_failures(self, monkeypatch):
        def fake(bound, verbose=False):
            report = VerificationReport("ae-census", bound)
            report.add("broken", False, {"x": "ab"})
            return report

        monkeypatch.setattr(verify, "SUITE_RUNNERS", {"ae-census": fake})
        total = run_all()
        assert total.suite == "all"
        assert [f.law for f in total.failures] == ["ae-census/broken"]
        assert total.bound == LAW_BOUNDS["counting"]


class TestPieces:

    def test_injectivity(self):
        report = VerificationReport("t", 0)
        injectivity(2, report)
        assert report.passed
        assert report.cases == 5

    def test_wqt_star_pool(self):
        report = check_wqt_star_pool([parse_infix_term("a*a")])
        assert report.passed, report.failures
        # 6 экземпляров схемы, WQT*7–9 и дословная WQT*9
        assert report.cases == 10

    def test_wqt_star_pool_proof_construction(self):
        report = check_wqt_star_pool([parse_infix_term("b*(a*a)")], "proof")
        assert not report.passed

    def test_wqt_pool(self):
        report = check_wqt_pool([LEAF, Node(LEAF, LEAF)])
        assert report.passed, report.failures

    def test_pools(self, small_bounds):
        pools = finite_model_pools(2)
        # пустой пул, 6 одиночных термов глубины ≤ 1 и 3 случайных
        assert len(pools) == 1 + 6 + 3
        assert pools == finite_model_pools(2)

    def test_pools_cover_depth_two_singletons(self, monkeypatch):
        monkeypatch.setitem(FINITE_MODEL, "random_pools", 0)
        pools = finite_model_pools(3)
        assert all([t] in pools for t in all_terms(2))
        # пустой, 6 + 15 пулов из термов глубины ≤ 1, 32 новых одиночных
        assert len(pools) == 1 + 6 + 15 + 32
