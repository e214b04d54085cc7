"""
Тесты для каталога законов и перебора run_law
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import pytest

from config import LAW_BOUNDS
from laws import (
    CODEC_LAWS, COUNTING_LAWS, LAWS, STRING_LAWS, TALLY_LAWS, Law, addtally_holds,
    domain_values, effective_bound, find_law, predecessors, replay, run_law,
)
from report import VerificationReport


def _ids(laws):
    return [law.law_id for law in laws]


class TestCatalogue:
    """Тесты реестра законов"""

    def test_families(self):
        assert set(LAWS) == {"strings", "tallies", "counting", "codec"}

    def test_ids_unique(self):
        ids = [law.law_id for family in LAWS.values() for law in family]
        assert len(ids) == len(set(ids))

    def test_find_law(self):
        law = find_law("QT1")
        assert law.variables == ("x", "y", "z")
        assert law.arity == 3
        with pytest.raises(KeyError):
            find_law("no-such-law")

    def test_domains(self):
        assert domain_values("s", 2) == ("a", "b", "aa", "ab", "ba", "bb")
        assert domain_values("t", 3) == ("b", "bb", "bbb")
        assert domain_values("ae", 3) == ("a", "baa")
        with pytest.raises(ValueError):
            domain_values("x", 3)

    def test_arity_caps(self):
        assert effective_bound(find_law("QT1"), "s", 7) == 7
        assert effective_bound(find_law("QT1"), "s", 9) == 7
        assert effective_bound(find_law("QT2"), "s", 13) == 8
        assert effective_bound(find_law("add-commutative-any"), "s", 10) == 8
        assert effective_bound(find_law("add-associative"), "t", 10) == 10


class TestDefaultBounds:
    """Законы доходят до границ по умолчанию без урезания"""

    @pytest.mark.parametrize("law_id", _ids(STRING_LAWS))
    def test_string_laws_reach_seven(self, law_id):
        law = find_law(law_id)
        bound = LAW_BOUNDS["strings"]
        assert bound >= 7
        assert all(effective_bound(law, d, bound) >= 7 for d in law.domains)

    @pytest.mark.parametrize("law_id", _ids(TALLY_LAWS))
    def test_tally_variables_reach_ten(self, law_id):
        law = find_law(law_id)
        bound = LAW_BOUNDS["tallies"]
        assert bound >= 10
        for domain in law.domains:
            if domain == "t":
                assert effective_bound(law, domain, bound) >= 10

    @pytest.mark.parametrize("law_id", [
        "addtally-single-valued", "addtally-total", "add-commutative",
        "add-associative", "add-left-cancel",
    ])
    def test_addition_over_tallies(self, law_id):
        assert set(find_law(law_id).domains) == {"t"}

    def test_single_valued_at_ten(self):
        report = VerificationReport("tallies", 10)
        assert run_law(find_law("addtally-single-valued"), 10, report) == 0
        assert report.cases == 10 ** 3

    def test_qt1_covers_all_triples(self):
        law = find_law("QT1")
        sizes = [len(domain_values(d, effective_bound(law, d, LAW_BOUNDS["strings"])))
                 for d in law.domains]
        assert sizes == [254, 254, 254]


class TestHelpers:

    def test_predecessors(self):
        assert predecessors("b") == ["a"]
        assert predecessors("bb") == ["b"]
        assert predecessors("ab") == ["a"]
        assert predecessors("a") == []
        assert predecessors("ba") == []

    def test_addtally_holds(self):
        assert addtally_holds("bb", "bb", "bbb")
        assert addtally_holds("b", "bbb", "bbb")
        assert not addtally_holds("bb", "bb", "bb")
        assert addtally_holds("ab", "b", "b")


class TestLawsHold:
    """Все законы выполняются на малых границах"""

    @pytest.mark.parametrize("law_id", _ids(STRING_LAWS))
    def test_string_laws(self, law_id):
        report = VerificationReport("strings", 4)
        assert run_law(find_law(law_id), 4, report) == 0
        assert report.cases > 0

    @pytest.mark.parametrize("law_id", _ids(TALLY_LAWS))
    def test_tally_laws(self, law_id):
        report = VerificationReport("tallies", 4)
        assert run_law(find_law(law_id), 4, report) == 0

    @pytest.mark.parametrize("law_id", _ids(COUNTING_LAWS))
    def test_counting_laws(self, law_id):
        report = VerificationReport("counting", 7)
        assert run_law(find_law(law_id), 7, report) == 0

    @pytest.mark.parametrize("law_id", _ids(CODEC_LAWS))
    def test_codec_laws(self, law_id):
        report = VerificationReport("codec", 9)
        assert run_law(find_law(law_id), 9, report) == 0


class TestViolations:
    """Тесты записи контрпримеров"""

    @pytest.fixture
    def broken(self):
        return Law("broken", "strings", ("x", "y"), ("s", "s"), lambda x, y: x + y != "ab")

    def test_witness(self, broken):
        report = VerificationReport("strings", 2)
        assert run_law(broken, 2, report) == 1
        assert report.failures[0].law == "broken"
        assert report.failures[0].witness == {"x": "a", "y": "b"}
        # перебор останавливается на первом нарушении
        assert report.cases == 2

    def test_failure_limit(self):
        law = Law("never", "strings", ("x",), ("s",), lambda x: False)
        report = VerificationReport("strings", 3)
        assert run_law(law, 3, report) == 1
        report = VerificationReport("strings", 3)
        assert run_law(law, 3, report, max_failures=5) == 5
        assert len(report.failures) == 5

    def test_replay(self):
        assert replay("QT2", {"x": "a", "y": "b"})
        assert replay("add-one-left", {"y": "bbb"})
        assert not replay("add-one-left", {"y": "ab"})
