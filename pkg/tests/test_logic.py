"""
Тесты для пакета logic: S-выражения, теории, интерпретации, вычисление.
"""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import pytest
from hypothesis import given, strategies as st

from errors import ParseError, SortError, UnassignedVariable
from logic import (
    SIG_C, SIG_CSTAR, SIG_T, THEORIES, Evaluator, StringStructure, TreeStructure,
    axioms_QTplus, axioms_T, axioms_WQT, axioms_WQTstar, axioms_WT, check_sorted,
    eval_bounded, evaluate, expand_exists_unique, format_formula, free_vars, infix,
    infix_term, is_closed, lemma_formulas, parse_formula, parse_infix_term,
    parse_term, signature_of, translate_T, translate_WT, tree_to_cterm, tree_to_term,
)
from logic.base import A, B, ExistsUnique, ForAll, Var, star
from logic.evaluate import substar_holds, tstar_holds
from logic.translate import guard_count, strip_guards, translate_term
from tree_codec import LEAF, Node, encode_tree, trees_of_depth


infix_terms = st.recursive(
    st.sampled_from([A, B]),
    lambda children: st.builds(star, children, children),
    max_leaves=8,
)


class TestSExpr:
    """Тесты чтения и печати формул"""

    def test_parse_simple(self):
        phi = parse_formula("(forall (x) (= x x))")
        assert isinstance(phi, ForAll)
        assert phi.vars == ("x",)
        assert is_closed(phi)

    def test_format_is_canonical(self):
        text = "(forall (x y) (imp (subt x y) (or (= x y) (subt x (pair y (zero))))))"
        assert format_formula(parse_formula(text)) == text

    def test_comments_and_whitespace(self):
        text = "; комментарий\n(exists (x)\n  (= x (a)))  ; конец"
        assert format_formula(parse_formula(text)) == "(exists (x) (= x (a)))"

    @pytest.mark.parametrize("text", [
        "",
        "(forall (x) (= x x)",
        "(= x x))",
        "(foo x)",
        "(forall () (= x x))",
        "(= (pair x) x)",
    ])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_formula(text)

    def test_free_vars(self):
        phi = parse_formula("(exists (y) (= x (star y (b))))")
        assert free_vars(phi) == frozenset({"x"})

    def test_parse_term(self):
        assert parse_term("(star (a) x)") == star(A, Var("x"))

    def test_infix(self):
        phi = parse_formula("(forall (x) (subp x (star (a) (b))))")
        assert infix(phi) == "∀x x ⊆p a*b"


class TestInfixTerms:
    """Тесты инфиксной записи термов a, b, *"""

    def test_parse(self):
        assert parse_infix_term("b*(a*a)") == star(B, star(A, A))
        assert parse_infix_term("a*b*a") == star(star(A, B), A)

    @pytest.mark.parametrize("text", ["", "a*", "c", "(a*b", "a b"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_infix_term(text)

    @given(infix_terms)
    def test_inverse(self, t):
        assert parse_infix_term(infix_term(t)) == t


class TestSignatures:

    def test_signature_of(self):
        assert signature_of(parse_formula("(subt x (zero))")) == SIG_T
        assert signature_of(parse_formula("(subp x (star (a) (b)))")) == SIG_C
        assert signature_of(parse_formula("(substar x (a))")) == SIG_CSTAR

    def test_mixed_rejected(self):
        with pytest.raises(SortError):
            signature_of(parse_formula("(and (subt x (zero)) (subp x (a)))"))

    def test_check_sorted(self):
        with pytest.raises(SortError):
            check_sorted(parse_formula("(= (succ x) x)"), SIG_CSTAR)


class TestTheories:
    """Тесты генераторов аксиом"""

    def test_T(self):
        assert [a.label for a in axioms_T()] == ["T1", "T2", "T3", "T4"]

    def test_WT_counts(self):
        assert len(axioms_WT(0)) == 1
        # 5 деревьев глубины ≤ 2: C(5,2) неравенств и 5 экземпляров WT2
        assert len(axioms_WT(2)) == 10 + 5

    def test_WT_negative_depth(self):
        with pytest.raises(ValueError):
            axioms_WT(-1)

    def test_QTplus(self):
        assert [a.label for a in axioms_QTplus()] == ["QT1", "QT2", "QT3", "QT4", "QT5", "QT6"]

    def test_WQT_counts(self):
        pool = [LEAF, Node(LEAF, LEAF)]
        axioms = axioms_WQT(pool)
        assert len(axioms) == 1 + 4 + 1
        assert axioms[-1].label == "WQT3"

    def test_WQTstar_counts(self):
        pool = [parse_infix_term("a*a"), parse_infix_term("b*(a*a)")]
        assert len(axioms_WQTstar(pool)) == 6 * 2 + 3
        assert len(axioms_WQTstar(pool, include_literal=True)) == 6 * 2 + 4
        assert axioms_WQTstar([])[0].label == "WQT*7"

    def test_WQTstar_labels(self):
        labels = [a.label for a in axioms_WQTstar([parse_infix_term("a*a")])]
        assert labels[:6] == [f"WQT*{i}[a*a]" for i in range(1, 7)]

    def test_WQTstar_rejects_variables(self):
        with pytest.raises(ValueError):
            axioms_WQTstar([star(Var("x"), A)])

    def test_registry(self):
        assert set(THEORIES) == {"T", "WT", "QT+", "WQT", "WQT*"}
        for theory in THEORIES.values():
            if theory.param is None:
                for axiom in theory.generate():
                    check_sorted(axiom.formula, theory.signature)

    def test_tree_terms(self):
        t = Node(LEAF, LEAF)
        assert infix_term(tree_to_cterm(t)) == "b*(a*a)"
        assert tree_to_term(t) == parse_term("(pair (zero) (zero))")


class TestTranslate:
    """Тесты переводов 𝓛_T → 𝓛_C и 𝓛_{C,⊑*}"""

    def test_translate_term(self):
        t = parse_term("(pair (zero) (zero))")
        assert infix_term(translate_term(t)) == "b*(a*a)"

    def test_guards(self):
        phi = parse_formula("(forall (x y) (subt x y))")
        translated = translate_T(phi)
        assert format_formula(translated) == \
            "(forall (x y) (imp (and (dom x) (dom y)) (subp x y)))"
        assert guard_count(translated) == 2
        assert strip_guards(translated) == parse_formula("(forall (x y) (subp x y))")

    def test_translate_WT(self):
        phi = parse_formula("(exists (x) (subt x (zero)))")
        assert format_formula(translate_WT(phi)) == \
            "(exists (x) (and (tstar x) (substar x (a))))"

    def test_rejects_string_formula(self):
        with pytest.raises(SortError):
            translate_T(parse_formula("(= x (star (a) (b)))"))

    def test_expand_exists_unique(self):
        phi = parse_formula("(exists1 (x) (= x (a)))")
        expanded = expand_exists_unique(phi)
        assert not isinstance(expanded, ExistsUnique)
        assert format_formula(expanded) == \
            "(exists (x) (and (= x (a)) (forall (x') (imp (= x' (a)) (= x' x)))))"
        assert eval_bounded(expanded, 3)


class TestEvaluate:
    """Тесты вычисления в Σ* и в деревьях"""

    def test_closed_atoms(self):
        assert eval_bounded(parse_formula("(subp (a) (star (b) (a)))"), 1)
        assert not eval_bounded(parse_formula("(= (a) (b))"), 1)

    def test_quantifiers(self):
        phi = parse_formula("(exists (x y) (= (star x y) (star (a) (b))))")
        assert eval_bounded(phi, 2)
        assert not eval_bounded(parse_formula("(forall (x) (= x (a)))"), 2)

    def test_exists_unique(self):
        assert eval_bounded(parse_formula("(exists1 (x) (= (star x (a)) (star (b) (a))))"), 3)
        assert not eval_bounded(parse_formula("(exists1 (x) (subp (a) x))"), 2)

    def test_free_variable(self):
        with pytest.raises(UnassignedVariable):
            eval_bounded(parse_formula("(= x (a))"), 2)

    def test_assignment(self):
        assert eval_bounded(parse_formula("(= x (star (a) (b)))"), 2, {"x": "ab"})

    def test_counterexample(self):
        phi = parse_formula("(forall (x) (= x (a)))")
        found = Evaluator(StringStructure(2)).counterexample(phi)
        assert found is not None
        assert found["x"] != "a"
        assert Evaluator(StringStructure(2)).counterexample(
            parse_formula("(forall (x) (subp x x))")) is None

    def test_counterexample_over_product(self):
        phi = parse_formula("(forall (x y) (= (star x y) (star y x)))")
        assert Evaluator(StringStructure(2)).counterexample(phi) == {"x": "a", "y": "b"}

    def test_product_respects_filters(self):
        phi = parse_formula("(forall (x y) (imp (subp (b) x) (subp (b) (star x y))))")
        assert eval_bounded(phi, 3)
        phi = parse_formula("(forall (x y) (imp (subp (b) x) (subp (b) y)))")
        assert Evaluator(StringStructure(2)).counterexample(phi) == {"x": "b", "y": "a"}

    def test_term_compiled_once(self):
        evaluator = Evaluator(StringStructure(3))
        t = parse_term("(star x (star (a) y))")
        assert evaluator.term(t, {"x": "b", "y": "b"}) == "bab"
        assert evaluator.term(t, {"x": "a", "y": "bb"}) == "aabb"
        with pytest.raises(UnassignedVariable):
            evaluator.term(t, {"x": "a"})

    def test_successor(self):
        assert eval_bounded(parse_formula("(= (succ (a)) (b))"), 1)
        assert eval_bounded(parse_formula("(= (succ (b)) (star (b) (b)))"), 1)

    def test_domain_predicates(self):
        assert tstar_holds("a")
        assert tstar_holds("bab")
        assert not tstar_holds("ab")
        assert substar_holds("baa", "bbaaa")
        assert not substar_holds("aa", "bbaaa")

    def test_qtplus_in_strings(self):
        for axiom in axioms_QTplus():
            assert eval_bounded(axiom.formula, 4), axiom.label

    def test_T_in_trees(self):
        structure = TreeStructure(7)
        for axiom in axioms_T():
            assert evaluate(axiom.formula, structure), axiom.label

    def test_translated_T_in_strings(self):
        for axiom in axioms_T():
            assert eval_bounded(translate_T(axiom.formula), 7), axiom.label

    def test_lemma_formulas(self):
        for axiom in lemma_formulas():
            assert eval_bounded(axiom.formula, 7), axiom.label

    def test_WT_translated(self):
        for axiom in axioms_WT(2):
            assert eval_bounded(translate_WT(axiom.formula), 7), axiom.label

    def test_tree_codes(self):
        codes = {encode_tree(t) for t in trees_of_depth(2)}
        assert codes == {"a", "baa", "bbaaa", "babaa", "bbaabaa"}
