"""
Интерпретации 𝓛_T в строковых языках.

    translate_T:  0 ↦ a, (s,t) ↦ b*(s*t), ⊑ ↦ ⊆p, домен Dom (𝒜ℰ)
    translate_WT: то же, но ⊑ ↦ ⊑*, домен T*

Кванторы релятивизуются: ∀v ψ ↦ ∀v (Dom v → ψ'), ∃v ψ ↦ ∃v (Dom v & ψ').
"""

from typing import Dict, Tuple

from .base import (
    A, And, Atom, Const, Eq, Exists, ExistsUnique, ForAll, Formula, Iff, Imp,
    Not, ObjTerm, Or, Unary, Var, SIG_T, all_var_names, bxy, check_sorted, conj,
    rename_free, subformulas,
)


def _term(t: ObjTerm) -> ObjTerm:
    if isinstance(t, Var):
        return t
    if isinstance(t, Const):
        return A
    return bxy(_term(t.left), _term(t.right))


def _translate(phi: Formula, domain: str, sub: str) -> Formula:
    if isinstance(phi, Atom):
        pred = "=" if phi.pred == "=" else sub
        return Atom(pred, _term(phi.left), _term(phi.right))
    if isinstance(phi, Not):
        return Not(_translate(phi.arg, domain, sub))
    if isinstance(phi, And):
        return And(tuple(_translate(a, domain, sub) for a in phi.args))
    if isinstance(phi, Or):
        return Or(tuple(_translate(a, domain, sub) for a in phi.args))
    if isinstance(phi, Imp):
        return Imp(_translate(phi.left, domain, sub), _translate(phi.right, domain, sub))
    if isinstance(phi, Iff):
        return Iff(_translate(phi.left, domain, sub), _translate(phi.right, domain, sub))
    guards = tuple(Unary(domain, Var(name)) for name in phi.vars)
    body = _translate(phi.body, domain, sub)
    if isinstance(phi, ForAll):
        return ForAll(phi.vars, Imp(conj(*guards), body))
    return type(phi)(phi.vars, And(guards + (body,)))


def translate_T(phi: Formula) -> Formula:
    check_sorted(phi, SIG_T)
    return _translate(phi, "dom", "subp")


def translate_WT(phi: Formula) -> Formula:
    check_sorted(phi, SIG_T)
    return _translate(phi, "tstar", "substar")


def translate_term(t: ObjTerm) -> ObjTerm:
    """Образ терма 𝓛_T: (0,0) ↦ b*(a*a)"""
    return _term(t)


def strip_guards(phi: Formula) -> Formula:
    """Снимает релятивизацию, добавленную translate_T / translate_WT"""
    if isinstance(phi, ForAll) and isinstance(phi.body, Imp):
        return ForAll(phi.vars, strip_guards(phi.body.right))
    if isinstance(phi, (Exists, ExistsUnique)) and isinstance(phi.body, And):
        return type(phi)(phi.vars, strip_guards(phi.body.args[-1]))
    if isinstance(phi, Not):
        return Not(strip_guards(phi.arg))
    if isinstance(phi, And):
        return And(tuple(strip_guards(a) for a in phi.args))
    if isinstance(phi, Or):
        return Or(tuple(strip_guards(a) for a in phi.args))
    if isinstance(phi, Imp):
        return Imp(strip_guards(phi.left), strip_guards(phi.right))
    if isinstance(phi, Iff):
        return Iff(strip_guards(phi.left), strip_guards(phi.right))
    return phi


def guard_count(phi: Formula) -> int:
    """Число атомов домена (dom / tstar) в формуле"""
    return sum(1 for f in subformulas(phi) if isinstance(f, Unary))


# =============================================================================
# ∃!
# =============================================================================

def _primed(names: Tuple[str, ...], taken: set) -> Dict[str, str]:
    mapping = {}
    for name in names:
        candidate = name + "'"
        while candidate in taken:
            candidate += "'"
        taken.add(candidate)
        mapping[name] = candidate
    return mapping


def expand_exists_unique(phi: Formula) -> Formula:
    """∃!x̄ φ ↦ ∃x̄ (φ & ∀x̄′ (φ[x̄′] → x̄′ = x̄)) на всех уровнях"""
    return _expand(phi, set(all_var_names(phi)))


def _expand(phi: Formula, taken: set) -> Formula:
    if isinstance(phi, (Atom, Unary)):
        return phi
    if isinstance(phi, Not):
        return Not(_expand(phi.arg, taken))
    if isinstance(phi, And):
        return And(tuple(_expand(a, taken) for a in phi.args))
    if isinstance(phi, Or):
        return Or(tuple(_expand(a, taken) for a in phi.args))
    if isinstance(phi, Imp):
        return Imp(_expand(phi.left, taken), _expand(phi.right, taken))
    if isinstance(phi, Iff):
        return Iff(_expand(phi.left, taken), _expand(phi.right, taken))
    body = _expand(phi.body, taken)
    if not isinstance(phi, ExistsUnique):
        return type(phi)(phi.vars, body)
    mapping = _primed(phi.vars, taken)
    copies = tuple(mapping[n] for n in phi.vars)
    same = conj(*[Eq(Var(mapping[n]), Var(n)) for n in phi.vars])
    return Exists(phi.vars, And((body, ForAll(copies, Imp(rename_free(body, mapping), same)))))
