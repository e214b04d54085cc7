"""
Конечные модели для конечных наборов аксиом WQT / WQT*.

Из конечного пула замкнутых термов 𝓛_{C,⊑*} строится структура M, чьи
элементы — классы термов с одинаковым значением (строкой). Две конструкции:

    "proof"  — D = {a, b} ∪ значения пула; f(u, v) = u*v, если значение
               есть в D, иначе b; R(u, v) — u код подтерма дерева v.
               Выполняет экземпляры WQT.
    "factor" — D = все подстроки значений пула и a, b, плюс поглощающий ⊥;
               f(u, v) = u*v, если значение в D, иначе ⊥; R(u, v) требует
               ещё, чтобы v раскладывалось в D только канонически.
               Выполняет экземпляры WQT*1–WQT*9.
"""

import random
import time
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from config import FINITE_MODEL
from counting import is_almost_even
from errors import SortError
from report import VerificationReport
from strings_core import BinString, string_key
from tree_codec import split_children
from logic.base import (
    A, B, App, Const, Formula, ObjTerm, Var, atom_terms, star, subformulas,
    subterms_of, term_vars,
)
from logic.evaluate import Evaluator, Structure, substar_holds
from logic.sexpr import infix, infix_term
from logic.theories import Axiom


CONSTRUCTIONS = ("proof", "factor")

JUNK = "⊥"


@dataclass(eq=False)
class FiniteModel(Structure):
    """Элементы — номера классов 0..n-1; rep[i] — значение класса (None у ⊥)"""
    elements: List[int]
    rep: Dict[int, Optional[BinString]]
    a_elem: int
    b_elem: int
    op: Dict[Tuple[int, int], int]
    rel: FrozenSet[Tuple[int, int]]
    construction: str = "proof"
    junk: Optional[int] = None
    index: Dict[BinString, int] = field(init=False, repr=False)
    inverse: Dict[int, List[Tuple[int, int]]] = field(init=False, repr=False)

    name = "M"

    def __post_init__(self):
        Structure.__init__(self)
        self.index = {s: i for i, s in self.rep.items() if s is not None}
        self.inverse = {i: [] for i in self.elements}
        for (left, right), value in sorted(self.op.items()):
            self.inverse[value].append((left, right))

    # --- интерфейс структуры -------------------------------------------------

    def universe(self) -> Sequence[int]:
        return self.elements

    def constant(self, which: str) -> int:
        if which == "a":
            return self.a_elem
        if which == "b":
            return self.b_elem
        return super().constant(which)

    def apply(self, op: str, left: int, right: int) -> int:
        if op == "star":
            return self.op[(left, right)]
        return super().apply(op, left, right)

    def preimages(self, op: str, value: int) -> Sequence[Tuple[int, int]]:
        if op == "star":
            return self.inverse.get(value, [])
        return super().preimages(op, value)

    def holds(self, pred: str, left: int, right: int) -> bool:
        if pred == "substar":
            return (left, right) in self.rel
        return super().holds(pred, left, right)

    def describe(self, value: int) -> str:
        s = self.rep[value]
        return JUNK if s is None else s

    # --- удобства ------------------------------------------------------------

    def class_of(self, value: BinString) -> int:
        return self.index[value]

    def values(self) -> List[str]:
        return [self.describe(i) for i in self.elements]

    @property
    def size(self) -> int:
        return len(self.elements)


# =============================================================================
# ЗНАЧЕНИЯ ТЕРМОВ
# =============================================================================

def term_string(t: ObjTerm) -> BinString:
    """val(t): цифровая строка замкнутого терма 𝓛_C"""
    if isinstance(t, Const) and t.which in ("a", "b"):
        return t.which
    if isinstance(t, App) and t.op == "star":
        return term_string(t.left) + term_string(t.right)
    if isinstance(t, Var):
        raise ValueError(f"терм содержит переменную {t.name}")
    raise SortError(f"не терм 𝓛_C: {t!r}")


def term_value(model: FiniteModel, t: ObjTerm) -> int:
    """Значение замкнутого терма в M (через таблицу f, а не через строку)"""
    if isinstance(t, Const):
        return model.constant(t.which)
    if isinstance(t, App):
        return model.apply(t.op, term_value(model, t.left), term_value(model, t.right))
    raise ValueError(f"терм не замкнут: {t!r}")


def closed_terms(instances: Sequence[Union[Axiom, Formula]]) -> List[ObjTerm]:
    """Все замкнутые термы, встречающиеся в формулах (с подтермами)"""
    found = {}
    for item in instances:
        phi = item.formula if isinstance(item, Axiom) else item
        for sub in subformulas(phi):
            for t in atom_terms(sub):
                for s in subterms_of(t):
                    if not term_vars(s):
                        found.setdefault(s, None)
    return sorted(found, key=lambda t: (len(infix_term(t)), infix_term(t)))


# =============================================================================
# ПОСТРОЕНИЕ
# =============================================================================

def _factors(values: Sequence[BinString]) -> set:
    result = set()
    for s in values:
        for i in range(len(s)):
            for j in range(i + 1, len(s) + 1):
                result.add(s[i:j])
    return result


def _split_clean(w: BinString, domain: FrozenSet[BinString], memo: Dict[BinString, bool]) -> bool:
    """
    w = b*(y*z) в D только при каноническом (y, z), и то же для y, z.
    Лист a чист всегда.
    """
    if w in memo:
        return memo[w]
    if w == "a":
        memo[w] = True
        return True
    canonical = split_children(w)
    rest = w[1:]
    splits = [(rest[:i], rest[i:]) for i in range(1, len(rest))
              if rest[:i] in domain and rest[i:] in domain]
    clean = splits == [canonical] and all(_split_clean(c, domain, memo) for c in canonical)
    memo[w] = clean
    return clean


def build_model(pool: Sequence[ObjTerm], construction: Optional[str] = None) -> FiniteModel:
    construction = construction or FINITE_MODEL["construction"]
    if construction not in CONSTRUCTIONS:
        raise ValueError(f"неизвестная конструкция {construction!r}")
    values = {term_string(t) for t in pool}

    if construction == "proof":
        carrier = {"a", "b"} | values
    else:
        carrier = {"a", "b"} | _factors(sorted(values))
    reps: List[Optional[BinString]] = sorted(carrier, key=string_key)
    junk = None
    if construction == "factor":
        junk = len(reps)
        reps.append(None)

    rep = dict(enumerate(reps))
    index = {s: i for i, s in rep.items() if s is not None}
    elements = list(rep)
    default = index["b"] if construction == "proof" else junk

    op = {}
    for i, j in product(elements, repeat=2):
        left, right = rep[i], rep[j]
        if left is None or right is None:
            op[(i, j)] = junk
        else:
            op[(i, j)] = index.get(left + right, default)

    domain = frozenset(index)
    memo: Dict[BinString, bool] = {}
    rel = set()
    for i, j in product(elements, repeat=2):
        left, right = rep[i], rep[j]
        if left is None or right is None or not substar_holds(left, right):
            continue
        if construction == "factor" and not _split_clean(right, domain, memo):
            continue
        rel.add((i, j))

    return FiniteModel(
        elements=elements,
        rep=rep,
        a_elem=index["a"],
        b_elem=index["b"],
        op=op,
        rel=frozenset(rel),
        construction=construction,
        junk=junk,
    )


# =============================================================================
# ПРОВЕРКА
# =============================================================================

def check_axioms(model: FiniteModel, instances: Sequence[Union[Axiom, Formula]],
                 verbose: bool = False, suite: str = "finite-model") -> VerificationReport:
    """Каждый экземпляр вычисляется в M; контрпример — значения внешнего ∀"""
    start = time.perf_counter()
    report = VerificationReport(suite=suite, bound=model.size)
    evaluator = Evaluator(model)
    for item in instances:
        if isinstance(item, Axiom):
            label, phi = item.label, item.formula
        else:
            label, phi = infix(item), item
        ok = evaluator.evaluate(phi)
        witness = None
        if not ok:
            found = evaluator.counterexample(phi) or {}
            witness = {name: model.describe(value) for name, value in found.items()}
        report.add(label, ok, witness)
        if verbose:
            print(f"[FiniteModel] {'✓' if ok else '✗'} {label}")
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    if verbose:
        print(f"[FiniteModel] {model.construction}: |D| = {model.size}, "
              f"{report.cases - len(report.failures)}/{report.cases}")
    return report


# =============================================================================
# ПУЛЫ ТЕРМОВ
# =============================================================================

def all_terms(depth: int) -> List[ObjTerm]:
    """Все замкнутые термы из a, b, * глубины ≤ depth"""
    if depth < 0:
        raise ValueError(f"глубина не может быть отрицательной: {depth}")
    terms: List[ObjTerm] = [A, B]
    for _ in range(depth):
        terms = [A, B] + [star(l, r) for l, r in product(terms, repeat=2)]
    return terms


def random_term(rng: random.Random, depth: int) -> ObjTerm:
    if depth == 0 or rng.random() < 0.3:
        return rng.choice((A, B))
    return star(random_term(rng, depth - 1), random_term(rng, depth - 1))


def random_pool(rng: random.Random, size: int, depth: int) -> List[ObjTerm]:
    return [random_term(rng, depth) for _ in range(size)]


# =============================================================================
# ЭКСПОРТ И СРАВНЕНИЕ
# =============================================================================

def format_model(model: FiniteModel) -> str:
    """Текстовая таблица: элементы, таблица *, пары R"""
    names = model.values()
    width = max(len(n) for n in names)
    lines = [f"M ({model.construction}), |D| = {model.size}"]
    for i in model.elements:
        lines.append(f"  [{i}] {names[i]}")
    lines.append("")
    lines.append("*".ljust(width) + " | " + " ".join(n.ljust(width) for n in names))
    for i in model.elements:
        row = [names[model.op[(i, j)]].ljust(width) for j in model.elements]
        lines.append(names[i].ljust(width) + " | " + " ".join(row))
    lines.append("")
    pairs = sorted(model.rel)
    lines.append("⊑*: " + (", ".join(f"({names[i]},{names[j]})" for i, j in pairs) or "∅"))
    return "\n".join(lines)


def perturb_op(model: FiniteModel, left: int, right: int, value: int) -> FiniteModel:
    """Копия модели с одной изменённой клеткой таблицы *"""
    op = dict(model.op)
    op[(left, right)] = value
    return replace(model, op=op)


def is_isomorphic(first: FiniteModel, second: FiniteModel) -> bool:
    """Классы задаются значениями, поэтому изоморфизм ищем через rep"""
    if sorted(first.values(), key=str) != sorted(second.values(), key=str):
        return False
    to_second = {i: second.values().index(name) for i, name in enumerate(first.values())}
    if to_second[first.a_elem] != second.a_elem or to_second[first.b_elem] != second.b_elem:
        return False
    for (i, j), k in first.op.items():
        if second.op[(to_second[i], to_second[j])] != to_second[k]:
            return False
    return {(to_second[i], to_second[j]) for i, j in first.rel} == set(second.rel)
