"""
Логика первого порядка для языков деревьев и строк.
"""

from .base import (
    Atom, Formula, ObjTerm, SIG_C, SIG_CSTAR, SIG_T,
    check_sorted, free_vars, is_closed, signature_of,
)
from .sexpr import (
    format_formula, format_term, infix, infix_term, parse_formula, parse_infix_term,
    parse_term,
)
from .theories import (
    THEORIES, Axiom, Theory, axioms_QTplus, axioms_T, axioms_WQT, axioms_WQTstar,
    axioms_WT, lemma_formulas, tree_to_cterm, tree_to_term,
)
from .translate import expand_exists_unique, translate_T, translate_WT
from .evaluate import (
    Evaluator, StringStructure, Structure, TreeStructure,
    eval_bounded, eval_finite, evaluate,
)

__all__ = [
    "Atom",
    "Formula",
    "ObjTerm",
    "SIG_C",
    "SIG_CSTAR",
    "SIG_T",
    "check_sorted",
    "free_vars",
    "is_closed",
    "signature_of",
    "format_formula",
    "format_term",
    "infix",
    "infix_term",
    "parse_formula",
    "parse_infix_term",
    "parse_term",
    "THEORIES",
    "Axiom",
    "Theory",
    "axioms_QTplus",
    "axioms_T",
    "axioms_WQT",
    "axioms_WQTstar",
    "axioms_WT",
    "lemma_formulas",
    "tree_to_cterm",
    "tree_to_term",
    "expand_exists_unique",
    "translate_T",
    "translate_WT",
    "Evaluator",
    "StringStructure",
    "Structure",
    "TreeStructure",
    "eval_bounded",
    "eval_finite",
    "evaluate",
]
