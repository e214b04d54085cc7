"""
Тесты для finite_model: построение конечных моделей и проверка WQT / WQT*.
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import random

import pytest

from errors import SortError
from finite_model import (
    CONSTRUCTIONS, JUNK, all_terms, build_model, check_axioms, closed_terms,
    format_model, is_isomorphic, perturb_op, random_pool, term_string, term_value,
)
from logic import axioms_WQT, axioms_WQTstar, parse_formula, parse_infix_term
from logic.base import A, B, ZERO, Var, star
from tree_codec import LEAF, Node


def terms(*texts):
    return [parse_infix_term(t) for t in texts]


class TestTermValues:

    def test_term_string(self):
        assert term_string(parse_infix_term("b*(a*a)")) == "baa"
        assert term_string(A) == "a"

    def test_term_string_errors(self):
        with pytest.raises(ValueError):
            term_string(star(Var("x"), A))
        with pytest.raises(SortError):
            term_string(ZERO)

    def test_closed_terms(self):
        instances = axioms_WQTstar(terms("a*a"))
        assert closed_terms(instances) == [A, B, star(A, A)]

    def test_closed_terms_of_formulas(self):
        phi = parse_formula("(forall (x) (= (star x (b)) (star (a) (b))))")
        assert closed_terms([phi]) == [A, B, star(A, B)]


class TestProofConstruction:
    """Тесты модели с доменом {a, b} ∪ значения пула"""

    def test_empty_pool(self):
        model = build_model([], "proof")
        assert model.values() == ["a", "b"]
        assert model.op[(model.a_elem, model.a_elem)] == model.b_elem
        assert model.rel == frozenset({(model.a_elem, model.a_elem)})

    def test_tree_code(self):
        model = build_model(terms("b*(a*a)"), "proof")
        assert model.values() == ["a", "b", "baa"]
        baa = model.class_of("baa")
        assert (model.a_elem, baa) in model.rel
        assert (baa, baa) in model.rel
        assert (model.b_elem, baa) not in model.rel

    def test_reparenthesized_terms_share_class(self):
        model = build_model(terms("(a*b)*(a*b)", "a*(b*(a*b))"), "proof")
        assert model.size == 3
        t1, t2 = terms("(a*b)*(a*b)", "a*(b*(a*b))")
        assert term_value(model, t1) == term_value(model, t2) == model.class_of("abab")

    def test_default_construction(self):
        assert build_model([]).construction == "proof"

    def test_unknown_construction(self):
        with pytest.raises(ValueError):
            build_model([], "other")

    def test_satisfies_wqt(self):
        instances = axioms_WQT([Node(LEAF, LEAF), LEAF])
        model = build_model(closed_terms(instances), "proof")
        report = check_axioms(model, instances)
        assert report.passed, report.failures
        assert report.cases == len(instances)

    def test_fails_wqt_star(self):
        instances = axioms_WQTstar(terms("b*(a*a)"))
        model = build_model(closed_terms(instances), "proof")
        assert not check_axioms(model, instances).passed


class TestFactorConstruction:
    """Тесты модели, замкнутой по подстрокам, с поглощающим ⊥"""

    def test_elements(self):
        model = build_model(terms("a*a"), "factor")
        assert model.values() == ["a", "b", "aa", JUNK]
        aa = model.class_of("aa")
        assert model.op[(model.a_elem, model.a_elem)] == aa
        assert model.op[(aa, aa)] == model.junk
        assert all(model.op[(model.junk, i)] == model.junk for i in model.elements)

    @pytest.mark.parametrize("pool", [
        [],
        ["a*a"],
        ["b*(a*a)"],
        ["a*b", "b*a"],
        ["(a*b)*a", "b"],
        ["b*((b*(a*a))*a)"],
    ])
    def test_satisfies_wqt_star(self, pool):
        instances = axioms_WQTstar(terms(*pool), include_literal=True)
        model = build_model(closed_terms(instances), "factor")
        report = check_axioms(model, instances)
        assert report.passed, report.failures

    def test_perturbation_breaks_model(self):
        instances = axioms_WQTstar(terms("a*a"))
        model = build_model(closed_terms(instances), "factor")
        broken = perturb_op(model, model.a_elem, model.a_elem, model.b_elem)
        assert model.op[(model.a_elem, model.a_elem)] != model.b_elem
        report = check_axioms(broken, instances)
        failed = {f.law: f.witness for f in report.failures}
        assert "WQT*2[a*a]" in failed
        assert failed["WQT*2[a*a]"] == {"x": "a", "y": "a"}


class TestCheckAxioms:

    def test_empty_instances(self):
        report = check_axioms(build_model([], "factor"), [])
        assert report.passed
        assert report.cases == 0

    def test_formula_label(self):
        model = build_model([], "factor")
        report = check_axioms(model, [parse_formula("(substar (b) (b))")])
        assert report.failures[0].law == "b ⊑* b"

    def test_verbose(self, capsys):
        check_axioms(build_model([], "factor"), axioms_WQTstar([]), verbose=True)
        out = capsys.readouterr().out
        assert "[FiniteModel] ✓ WQT*7" in out
        assert "|D| = 3" in out


class TestPools:

    def test_all_terms(self):
        assert all_terms(0) == [A, B]
        assert len(all_terms(1)) == 6
        assert len(all_terms(2)) == 38
        with pytest.raises(ValueError):
            all_terms(-1)

    def test_random_pool_is_seeded(self):
        first = random_pool(random.Random(3), 4, 3)
        second = random_pool(random.Random(3), 4, 3)
        assert first == second
        assert len(first) == 4

    def test_constructions(self):
        assert CONSTRUCTIONS == ("proof", "factor")


class TestExport:

    def test_format_model(self):
        text = format_model(build_model(terms("b*(a*a)"), "proof"))
        assert text.startswith("M (proof), |D| = 3")
        assert "⊑*: (a,a), (a,baa), (baa,baa)" in text

    def test_isomorphic(self):
        pool = terms("a*b", "b*(a*a)")
        assert is_isomorphic(build_model(pool, "factor"),
                             build_model(list(reversed(pool)), "factor"))
        assert not is_isomorphic(build_model(pool, "factor"),
                                 build_model(terms("a*b"), "factor"))

    def test_perturbed_not_isomorphic(self):
        model = build_model(terms("a*a"), "factor")
        broken = perturb_op(model, model.a_elem, model.a_elem, model.b_elem)
        assert not is_isomorphic(model, broken)
