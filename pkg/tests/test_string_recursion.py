"""
Тесты для string_recursion: рекурсия по строкам и сертификаты Comp / MinComp
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import pytest

from counting import alpha, beta
from set_coding import encode_pair, encode_set, members
from string_recursion import (
    ALPHA_SPEC, BETA_SPEC, SPECS, build_comp_code, certificate_for,
    certificate_summary, check_comp, check_min_comp, comp_clauses, eval_H,
    index_bound_holds, index_closure, random_spec, run_recursion,
)
from strings_core import all_strings


class TestRunRecursion:

    def test_alpha_beta(self):
        assert run_recursion(ALPHA_SPEC, "aab") == alpha("aab") == "bbb"
        assert run_recursion(BETA_SPEC, "aab") == beta("aab") == "bb"

    def test_registry(self):
        assert set(SPECS) == {"alpha", "beta"}

    def test_random_spec_deterministic(self):
        first, second = random_spec(1), random_spec(1)
        for m in all_strings(4):
            assert run_recursion(first, m) == run_recursion(second, m)


class TestIndexClosure:
    """Тесты замыкания индексов"""

    def test_digits(self):
        assert index_closure("a") == {"a"}
        assert index_closure("b") == {"a", "b"}

    def test_longer(self):
        assert index_closure("ab") == {"a", "aa", "ab"}

    def test_bound_holds_on_closure(self):
        for m in all_strings(4):
            assert all(index_bound_holds(z, m) for z in index_closure(m)), m


class TestCertificates:
    """Тесты сертификатов вычисления"""

    @pytest.fixture
    def cert(self):
        return build_comp_code(ALPHA_SPEC, "ab")

    def test_pairs(self, cert):
        assert certificate_summary(cert) == [("a", "bb"), ("aa", "bbb"), ("ab", "bb")]

    def test_members_are_pair_codes(self, cert):
        assert members(cert.raw) == {encode_pair(z, v) for z, v in cert.pairs.items()}

    def test_min_comp(self, cert):
        assert all(comp_clauses(cert.raw, "ab", ALPHA_SPEC).values())
        assert check_min_comp(cert.raw, "ab", ALPHA_SPEC)

    def test_missing_base(self):
        clauses = comp_clauses("aa", "a", ALPHA_SPEC)
        assert clauses["C1"]
        assert not clauses["C2"]

    def test_wrong_value_rejected(self):
        pairs = {"a": "bb", "aa": "bbb", "ab": "bbb"}
        raw = encode_set(encode_pair(z, v) for z, v in pairs.items()).raw
        assert not check_min_comp(raw, "ab", ALPHA_SPEC)

    def test_extra_pair_not_minimal(self):
        bigger = certificate_for(ALPHA_SPEC, ["a", "aa", "ab", "b"])
        assert check_comp(bigger.raw, "ab", ALPHA_SPEC)
        assert not check_min_comp(bigger.raw, "ab", ALPHA_SPEC)

    def test_not_a_set(self):
        assert not check_comp("ab", "a", ALPHA_SPEC)


class TestEvalH:
    """Тесты формулы H(m, y)"""

    @pytest.mark.parametrize("m", ["a", "b", "ab", "bba", "abab"])
    def test_alpha(self, m):
        assert eval_H(m, alpha(m), ALPHA_SPEC)
        assert not eval_H(m, alpha(m) + "b", ALPHA_SPEC)

    def test_functional_random(self):
        spec = random_spec(2)
        for m in all_strings(3):
            h = run_recursion(spec, m)
            hits = [y for y in all_strings(len(h) + 1) if eval_H(m, y, spec)]
            assert hits == [h]
