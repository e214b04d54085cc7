"""
Аксиомы и схемы теорий T, WT, QT⁺, WQT, WQT*.

Каждая аксиома — запись Axiom(label, formula); у схем метка несёт
параметр экземпляра: "WT2[(0,0)]", "WQT*5[b*(a*a)]".
Сокращения ⊑p, xBy, xEy раскрываются в чистые формулы первого порядка.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from strings_core import string_key
from tree_codec import Node, TreeTerm, encode_tree, subterms, trees_of_depth
from .base import (
    A, B, ZERO, Exists, ExistsUnique, Formula, Iff, Imp, Not, ObjTerm, Succ, Var,
    SIG_C, SIG_CSTAR, SIG_T, Dom, Eq, SubP, SubStar, SubT, bxy, conj, disj,
    exists, forall, pair, star, term_vars, variables,
)
from .sexpr import infix_term


@dataclass(frozen=True)
class Axiom:
    label: str
    formula: Formula


@dataclass(frozen=True)
class Theory:
    """Теория: имя, сигнатура и генератор аксиом; param — чем параметризована схема"""
    name: str
    signature: str
    param: Optional[str]                    # None / "depth" / "trees" / "terms"
    generate: Callable[..., List[Axiom]]


x, y, z, w = variables("x y z w")
u, v = variables("u v")


# =============================================================================
# ТЕРМЫ ДЕРЕВЬЕВ
# =============================================================================

def tree_to_term(t: TreeTerm) -> ObjTerm:
    """Дерево как замкнутый терм 𝓛_T"""
    if isinstance(t, Node):
        return pair(tree_to_term(t.left), tree_to_term(t.right))
    return ZERO


def tree_to_cterm(t: TreeTerm) -> ObjTerm:
    """τ-образ дерева как терм 𝓛_C: 0 ↦ a, (u,v) ↦ b*(u*v)"""
    if isinstance(t, Node):
        return bxy(tree_to_cterm(t.left), tree_to_cterm(t.right))
    return A


def _by_code(trees: Iterable[TreeTerm]) -> List[TreeTerm]:
    unique = {encode_tree(t): t for t in trees}
    return [unique[code] for code in sorted(unique, key=string_key)]


# =============================================================================
# T и WT
# =============================================================================

def axioms_T() -> List[Axiom]:
    return [
        Axiom("T1", forall("x y", Not(Eq(pair(x, y), ZERO)))),
        Axiom("T2", forall("x y z w", Imp(Eq(pair(x, y), pair(z, w)),
                                           conj(Eq(x, z), Eq(y, w))))),
        Axiom("T3", forall("x", Iff(SubT(x, ZERO), Eq(x, ZERO)))),
        Axiom("T4", forall("x y z", Iff(SubT(x, pair(y, z)),
                                         disj(Eq(x, pair(y, z)), SubT(x, y), SubT(x, z))))),
    ]


def axioms_WT(depth: int) -> List[Axiom]:
    """WT1 по всем парам различных деревьев глубины ≤ depth, WT2 по каждому дереву"""
    if depth < 0:
        raise ValueError("глубина должна быть неотрицательной")
    trees = _by_code(trees_of_depth(depth))
    result = []
    for s, t in combinations(trees, 2):
        result.append(Axiom(f"WT1[{s},{t}]", Not(Eq(tree_to_term(s), tree_to_term(t)))))
    for t in trees:
        parts = [Eq(x, tree_to_term(s)) for s in _by_code(subterms(t))]
        result.append(Axiom(f"WT2[{t}]", forall("x", Iff(SubT(x, tree_to_term(t)), disj(*parts)))))
    return result


# =============================================================================
# QT⁺
# =============================================================================

def axioms_QTplus() -> List[Axiom]:
    return [
        Axiom("QT1", forall("x y z", Eq(star(x, star(y, z)), star(star(x, y), z)))),
        Axiom("QT2", forall("x y", conj(Not(Eq(star(x, y), A)), Not(Eq(star(x, y), B))))),
        Axiom("QT3", forall("x y", conj(
            Imp(Eq(star(x, A), star(y, A)), Eq(x, y)),
            Imp(Eq(star(x, B), star(y, B)), Eq(x, y)),
            Imp(Eq(star(A, x), star(A, y)), Eq(x, y)),
            Imp(Eq(star(B, x), star(B, y)), Eq(x, y)),
        ))),
        Axiom("QT4", forall("x y", conj(Not(Eq(star(A, x), star(B, y))),
                                        Not(Eq(star(x, A), star(y, B)))))),
        Axiom("QT5", forall("x", disj(
            Eq(x, A),
            Eq(x, B),
            conj(exists("y", disj(Eq(star(A, y), x), Eq(star(B, y), x))),
                 exists("z", disj(Eq(star(z, A), x), Eq(star(z, B), x)))),
        ))),
        Axiom("QT6", forall("x y", Iff(
            Eq(Succ(x), y),
            disj(conj(Eq(x, A), Eq(y, B)),
                 conj(Not(Eq(x, A)), Eq(star(x, B), y))),
        ))),
    ]


# =============================================================================
# СОКРАЩЕНИЯ
# =============================================================================

def _fresh(avoid: Iterable[str], count: int) -> List[str]:
    taken = set(avoid)
    names = []
    i = 1
    while len(names) < count:
        name = f"w{i}"
        if name not in taken:
            names.append(name)
        i += 1
    return names


def begins_with(prefix: ObjTerm, whole: ObjTerm) -> Formula:
    """xBy ≡ ∃z y = x*z"""
    (w1,) = _fresh(term_vars(prefix) | term_vars(whole), 1)
    return Exists((w1,), Eq(whole, star(prefix, Var(w1))))


def ends_with(suffix: ObjTerm, whole: ObjTerm) -> Formula:
    """xEy ≡ ∃z y = z*x"""
    (w1,) = _fresh(term_vars(suffix) | term_vars(whole), 1)
    return Exists((w1,), Eq(whole, star(Var(w1), suffix)))


def sub_p(part: ObjTerm, whole: ObjTerm) -> Formula:
    """x ⊑p y ≡ x=y ∨ xBy ∨ xEy ∨ ∃z1,z2 y=z1*(x*z2) ∨ ∃z1,z2 y=(z1*x)*z2"""
    w1, w2 = _fresh(term_vars(part) | term_vars(whole), 2)
    left, right = Var(w1), Var(w2)
    return disj(
        Eq(part, whole),
        begins_with(part, whole),
        ends_with(part, whole),
        Exists((w1, w2), Eq(whole, star(left, star(part, right)))),
        Exists((w1, w2), Eq(whole, star(star(left, part), right))),
    )


# =============================================================================
# WQT
# =============================================================================

def _wqt3() -> Formula:
    return forall("z", Iff(SubStar(z, A), Eq(z, A)))


def axioms_WQT(pool: Sequence[TreeTerm]) -> List[Axiom]:
    """WQT1 по различным кодам пула, WQT2 по всем упорядоченным парам, WQT3"""
    trees = _by_code(pool)
    result = []
    for s, t in combinations(trees, 2):
        result.append(Axiom(f"WQT1[{s},{t}]",
                            Not(Eq(tree_to_cterm(s), tree_to_cterm(t)))))
    for s, t in product(trees, repeat=2):
        code = bxy(tree_to_cterm(s), tree_to_cterm(t))
        result.append(Axiom(f"WQT2[{s},{t}]", forall("z", Iff(
            SubStar(z, code),
            disj(Eq(z, code), SubStar(z, tree_to_cterm(s)), SubStar(z, tree_to_cterm(t))),
        ))))
    result.append(Axiom("WQT3", _wqt3()))
    return result


# =============================================================================
# WQT*
# =============================================================================

def _wqt_star_schema(t: ObjTerm) -> List[Formula]:
    def le(term: ObjTerm) -> Formula:
        return sub_p(term, t)

    def cancel(left: ObjTerm, right: ObjTerm) -> Formula:
        return Imp(conj(le(left), le(right)), Imp(Eq(left, right), Eq(x, y)))

    yz = star(y, z)
    code = bxy(y, z)
    return [
        forall("x y z", Imp(disj(le(star(x, yz)), le(star(star(x, y), z))),
                            Eq(star(x, yz), star(star(x, y), z)))),
        forall("x y", Imp(le(star(x, y)),
                          conj(Not(Eq(star(x, y), A)), Not(Eq(star(x, y), B))))),
        forall("x y", conj(
            cancel(star(A, x), star(A, y)),
            cancel(star(B, x), star(B, y)),
            cancel(star(x, A), star(y, A)),
            cancel(star(x, B), star(y, B)),
        )),
        forall("x y", conj(
            Imp(conj(le(star(A, x)), le(star(B, y))), Not(Eq(star(A, x), star(B, y)))),
            Imp(conj(le(star(x, A)), le(star(y, B))), Not(Eq(star(x, A), star(y, B)))),
        )),
        forall("x", Imp(le(x), disj(
            Eq(x, A),
            Eq(x, B),
            conj(disj(begins_with(A, x), begins_with(B, x)),
                 disj(ends_with(A, x), ends_with(B, x))),
        ))),
        forall("y z", Imp(SubStar(code, t), forall("x", Iff(
            SubStar(x, code),
            disj(Eq(x, code), SubStar(x, y), SubStar(x, z)),
        )))),
    ]


def axioms_WQTstar(pool: Sequence[ObjTerm], include_literal: bool = False) -> List[Axiom]:
    """
    WQT*1–WQT*6 для каждого терма пула, затем WQT*7–WQT*9 (6n+3 формулы).

    WQT*9 — транзитивность ⊑*. С include_literal добавляется и дословная
    запись "WQT*9-literal": ∀z ∀x,y (x ⊑* y & y ⊑* z → y ⊑* z).
    """
    for t in pool:
        if term_vars(t):
            raise ValueError(f"терм пула содержит переменные: {infix_term(t)}")
    result = []
    for t in pool:
        for i, formula in enumerate(_wqt_star_schema(t), start=1):
            result.append(Axiom(f"WQT*{i}[{infix_term(t)}]", formula))
    result.append(Axiom("WQT*7", _wqt3()))
    result.append(Axiom("WQT*8", forall("x y", Imp(conj(SubStar(x, y), SubStar(y, x)), Eq(x, y)))))
    result.append(Axiom("WQT*9", forall("x y z", Imp(conj(SubStar(x, y), SubStar(y, z)),
                                                      SubStar(x, z)))))
    if include_literal:
        result.append(Axiom("WQT*9-literal", forall("z", forall("x y", Imp(
            conj(SubStar(x, y), SubStar(y, z)), SubStar(y, z))))))
    return result


# =============================================================================
# ЛЕММЫ О 𝒜ℰ-СТРОКАХ
# =============================================================================

def lemma_formulas() -> List[Axiom]:
    """Утверждения об 𝒜ℰ-строках с атомом домена Dom; истинны в Σ*"""
    b_yz = bxy(y, z)
    return [
        Axiom("ae-shape", forall("x", Imp(Dom(x), disj(
            Eq(x, A),
            conj(begins_with(B, x), ends_with(star(A, A), x)),
        )))),
        Axiom("ae-prefix-free", forall("x y u v", Imp(
            conj(Dom(x), Dom(u), Eq(star(x, y), star(u, v))),
            conj(Eq(x, u), Eq(y, v)),
        ))),
        Axiom("ae-unique-split", forall("x", Imp(Dom(x), disj(
            Eq(x, A),
            ExistsUnique(("y", "z"), conj(Dom(y), Dom(z), Eq(x, b_yz))),
        )))),
        Axiom("ae-closed", conj(
            Dom(A),
            forall("x y z", Imp(conj(Dom(y), Dom(z), Eq(x, b_yz)), Dom(x))),
        )),
        Axiom("ae-substring-split", forall("x y z", Imp(
            conj(Dom(x), Dom(y), Dom(z)),
            Imp(SubP(x, b_yz), disj(Eq(x, b_yz), SubP(x, y), SubP(x, z))),
        ))),
        Axiom("dom-closed-bxy", forall("x y z", Imp(
            conj(Dom(x), Dom(y), Eq(z, bxy(x, y))), Dom(z)))),
        Axiom("bxy-injective", forall("x y u v", Imp(
            conj(Dom(x), Dom(u), Eq(bxy(x, y), bxy(u, v))),
            conj(Eq(x, u), Eq(y, v)),
        ))),
        Axiom("dom-subp-a", forall("x", Imp(Dom(x), Iff(SubP(x, A), Eq(x, A))))),
        Axiom("ae-substring-iff", forall("x y z", Imp(
            conj(Dom(x), Dom(y), Dom(z)),
            Iff(SubP(x, b_yz), disj(Eq(x, b_yz), SubP(x, y), SubP(x, z))),
        ))),
        Axiom("substar=subp", forall("x y", Imp(
            conj(Dom(x), Dom(y)), Iff(SubStar(x, y), SubP(x, y))))),
    ]


THEORIES: Dict[str, Theory] = {
    "T": Theory("T", SIG_T, None, axioms_T),
    "WT": Theory("WT", SIG_T, "depth", axioms_WT),
    "QT+": Theory("QT+", SIG_C, None, axioms_QTplus),
    "WQT": Theory("WQT", SIG_CSTAR, "trees", axioms_WQT),
    "WQT*": Theory("WQT*", SIG_CSTAR, "terms", axioms_WQTstar),
}
