"""
Синтаксис первого порядка для трёх сигнатур.

    T      — 𝓛_T = {0, ( , ), ⊑}: деревья
    C      — 𝓛_C = {a, b, *} (+ S из QT⁺, ⊆p как атом, Dom как атом домена)
    CSTAR  — 𝓛_{C,⊑*} = {a, b, *, ⊑*} (+ T* как атом домена)

Термы и формулы — неизменяемые dataclass'ы; кванторы связывают
кортеж переменных, так что ∀x,y φ — один узел.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Tuple, Union

from errors import SortError


SIG_T = "T"
SIG_C = "C"
SIG_CSTAR = "CSTAR"

SIGNATURES = (SIG_T, SIG_C, SIG_CSTAR)


# =============================================================================
# ТЕРМЫ
# =============================================================================

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    which: str              # "zero" / "a" / "b"


@dataclass(frozen=True)
class App:
    op: str                 # "pair" / "star"
    left: "ObjTerm"
    right: "ObjTerm"


@dataclass(frozen=True)
class Succ:
    """Функциональный символ S из QT⁺"""
    arg: "ObjTerm"


ObjTerm = Union[Var, Const, App, Succ]

ZERO = Const("zero")
A = Const("a")
B = Const("b")


def star(left: ObjTerm, right: ObjTerm) -> App:
    return App("star", left, right)


def pair(left: ObjTerm, right: ObjTerm) -> App:
    return App("pair", left, right)


def bxy(y: ObjTerm, z: ObjTerm) -> App:
    """b*(y*z) — образ пары при τ"""
    return star(B, star(y, z))


# =============================================================================
# ФОРМУЛЫ
# =============================================================================

@dataclass(frozen=True)
class Atom:
    """Бинарный атом: "=", "subt" (⊑), "substar" (⊑*), "subp" (⊆p)"""
    pred: str
    left: ObjTerm
    right: ObjTerm


@dataclass(frozen=True)
class Unary:
    """Атом домена: "dom" (𝒜ℰ) или "tstar" (T*)"""
    pred: str
    arg: ObjTerm


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    args: Tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    args: Tuple["Formula", ...]


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ForAll:
    vars: Tuple[str, ...]
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    vars: Tuple[str, ...]
    body: "Formula"


@dataclass(frozen=True)
class ExistsUnique:
    vars: Tuple[str, ...]
    body: "Formula"


Formula = Union[Atom, Unary, Not, And, Or, Imp, Iff, ForAll, Exists, ExistsUnique]

QUANTIFIERS = (ForAll, Exists, ExistsUnique)
BINARY_PREDS = ("=", "subt", "substar", "subp")
UNARY_PREDS = ("dom", "tstar")


def Eq(left: ObjTerm, right: ObjTerm) -> Atom:
    return Atom("=", left, right)


def SubT(left: ObjTerm, right: ObjTerm) -> Atom:
    return Atom("subt", left, right)


def SubStar(left: ObjTerm, right: ObjTerm) -> Atom:
    return Atom("substar", left, right)


def SubP(left: ObjTerm, right: ObjTerm) -> Atom:
    return Atom("subp", left, right)


def Dom(arg: ObjTerm) -> Unary:
    return Unary("dom", arg)


def TStar(arg: ObjTerm) -> Unary:
    return Unary("tstar", arg)


def conj(*args: Formula) -> Formula:
    """Конъюнкция; одна компонента возвращается как есть"""
    return args[0] if len(args) == 1 else And(tuple(args))


def disj(*args: Formula) -> Formula:
    return args[0] if len(args) == 1 else Or(tuple(args))


def forall(names: str, body: Formula) -> ForAll:
    """forall("x y", φ) — короткая запись ∀x,y φ"""
    return ForAll(tuple(names.split()), body)


def exists(names: str, body: Formula) -> Exists:
    return Exists(tuple(names.split()), body)


def variables(names: str) -> Tuple[Var, ...]:
    return tuple(Var(n) for n in names.split())


# =============================================================================
# ОБХОД
# =============================================================================

def term_vars(t: ObjTerm) -> FrozenSet[str]:
    if isinstance(t, Var):
        return frozenset([t.name])
    if isinstance(t, App):
        return term_vars(t.left) | term_vars(t.right)
    if isinstance(t, Succ):
        return term_vars(t.arg)
    return frozenset()


def children(phi: Formula) -> Tuple[Formula, ...]:
    if isinstance(phi, Not):
        return (phi.arg,)
    if isinstance(phi, (And, Or)):
        return phi.args
    if isinstance(phi, (Imp, Iff)):
        return (phi.left, phi.right)
    if isinstance(phi, QUANTIFIERS):
        return (phi.body,)
    return ()


def atom_terms(phi: Formula) -> Tuple[ObjTerm, ...]:
    if isinstance(phi, Atom):
        return (phi.left, phi.right)
    if isinstance(phi, Unary):
        return (phi.arg,)
    return ()


def free_vars(phi: Formula) -> FrozenSet[str]:
    if isinstance(phi, (Atom, Unary)):
        result: FrozenSet[str] = frozenset()
        for t in atom_terms(phi):
            result |= term_vars(t)
        return result
    if isinstance(phi, QUANTIFIERS):
        return free_vars(phi.body) - frozenset(phi.vars)
    result = frozenset()
    for child in children(phi):
        result |= free_vars(child)
    return result


def is_closed(phi: Formula) -> bool:
    return not free_vars(phi)


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    for child in children(phi):
        yield from subformulas(child)


def subterms_of(t: ObjTerm) -> Iterator[ObjTerm]:
    yield t
    if isinstance(t, App):
        yield from subterms_of(t.left)
        yield from subterms_of(t.right)
    elif isinstance(t, Succ):
        yield from subterms_of(t.arg)


def quantifier_count(phi: Formula) -> int:
    return sum(1 for f in subformulas(phi) if isinstance(f, QUANTIFIERS))


def bound_var_count(phi: Formula) -> int:
    return sum(len(f.vars) for f in subformulas(phi) if isinstance(f, QUANTIFIERS))


def shape(phi: Formula) -> str:
    """Скелет связок и кванторов без атомов (атомы → '.')"""
    if isinstance(phi, (Atom, Unary)):
        return "."
    name = type(phi).__name__
    return name + "(" + ",".join(shape(c) for c in children(phi)) + ")"


# =============================================================================
# СОРТА
# =============================================================================

_ALLOWED = {
    SIG_T: {"const": {"zero"}, "op": {"pair"}, "pred": {"=", "subt"},
            "unary": set(), "succ": False},
    SIG_C: {"const": {"a", "b"}, "op": {"star"}, "pred": {"=", "subp"},
            "unary": {"dom"}, "succ": True},
    SIG_CSTAR: {"const": {"a", "b"}, "op": {"star"}, "pred": {"=", "substar"},
                "unary": {"tstar"}, "succ": False},
}


def _check_term(t: ObjTerm, signature: str) -> None:
    allowed = _ALLOWED[signature]
    if isinstance(t, Const) and t.which not in allowed["const"]:
        raise SortError(f"константа {t.which} вне сигнатуры {signature}")
    if isinstance(t, App):
        if t.op not in allowed["op"]:
            raise SortError(f"операция {t.op} вне сигнатуры {signature}")
        _check_term(t.left, signature)
        _check_term(t.right, signature)
    if isinstance(t, Succ):
        if not allowed["succ"]:
            raise SortError(f"S вне сигнатуры {signature}")
        _check_term(t.arg, signature)


def check_sorted(phi: Formula, signature: str) -> None:
    """Бросает SortError, если формула использует чужие символы"""
    if signature not in _ALLOWED:
        raise SortError(f"неизвестная сигнатура {signature}")
    allowed = _ALLOWED[signature]
    for f in subformulas(phi):
        if isinstance(f, Atom) and f.pred not in allowed["pred"]:
            raise SortError(f"предикат {f.pred} вне сигнатуры {signature}")
        if isinstance(f, Unary) and f.pred not in allowed["unary"]:
            raise SortError(f"предикат {f.pred} вне сигнатуры {signature}")
        for t in atom_terms(f):
            _check_term(t, signature)


def signature_of(phi: Formula) -> str:
    """Первая сигнатура (T, C, CSTAR), с которой формула согласована"""
    for signature in SIGNATURES:
        try:
            check_sorted(phi, signature)
        except SortError:
            continue
        return signature
    raise SortError("формула не согласована ни с одной сигнатурой")


# =============================================================================
# ПЕРЕИМЕНОВАНИЕ
# =============================================================================

def rename_term(t: ObjTerm, mapping: Dict[str, str]) -> ObjTerm:
    if isinstance(t, Var):
        return Var(mapping.get(t.name, t.name))
    if isinstance(t, App):
        return App(t.op, rename_term(t.left, mapping), rename_term(t.right, mapping))
    if isinstance(t, Succ):
        return Succ(rename_term(t.arg, mapping))
    return t


def rename_free(phi: Formula, mapping: Dict[str, str]) -> Formula:
    """Переименовывает свободные вхождения; связанные квантором внутри не трогает"""
    if not mapping:
        return phi
    if isinstance(phi, Atom):
        return Atom(phi.pred, rename_term(phi.left, mapping), rename_term(phi.right, mapping))
    if isinstance(phi, Unary):
        return Unary(phi.pred, rename_term(phi.arg, mapping))
    if isinstance(phi, Not):
        return Not(rename_free(phi.arg, mapping))
    if isinstance(phi, And):
        return And(tuple(rename_free(a, mapping) for a in phi.args))
    if isinstance(phi, Or):
        return Or(tuple(rename_free(a, mapping) for a in phi.args))
    if isinstance(phi, Imp):
        return Imp(rename_free(phi.left, mapping), rename_free(phi.right, mapping))
    if isinstance(phi, Iff):
        return Iff(rename_free(phi.left, mapping), rename_free(phi.right, mapping))
    inner = {k: v for k, v in mapping.items() if k not in phi.vars}
    return type(phi)(phi.vars, rename_free(phi.body, inner))


def all_var_names(phi: Formula) -> FrozenSet[str]:
    """Все имена переменных, свободные и связанные"""
    names = set()
    for f in subformulas(phi):
        if isinstance(f, QUANTIFIERS):
            names.update(f.vars)
        for t in atom_terms(f):
            names.update(term_vars(t))
    return frozenset(names)
