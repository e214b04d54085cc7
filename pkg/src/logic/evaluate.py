"""
Вычисление формул в структурах.

Кванторы пробегают конечный универсум структуры: строки длины ≤ L
(StringStructure), коды деревьев длины ≤ L (TreeStructure) или элементы
конечной модели (finite_model.FiniteModel). Ограниченная семантика годится
для опровержения; в отчётах результат подписывается «проверено до L».

Вычислитель точный. Для скорости он:
    - сужает переменную до атома домена (Dom / T*), стоящего в посылке;
    - разносит ∀ по конъюнкциям и дизъюнкциям посылок, поднимает ∃ из посылок;
    - решает равенства обращением операций (x*y = v → все разбиения v);
    - кэширует кванторы по значениям их свободных подтермов.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import count, product
from typing import Callable, Dict, FrozenSet, Hashable, Iterator, List, Optional, Sequence, Tuple

from counting import almost_even_strings, is_almost_even
from errors import CodingError, SortError, UnassignedVariable
from strings_core import BinString, all_strings, successor
from tree_codec import split_children, subterm_codes
from .base import (
    And, App, Atom, Const, Exists, ForAll, Formula, Iff, Imp, Not,
    ObjTerm, Or, Succ, Unary, Var, QUANTIFIERS, atom_terms, children, free_vars,
    rename_free, term_vars,
)


Value = Hashable

MAX_BRANCHES = 64


# =============================================================================
# СТРУКТУРЫ
# =============================================================================

class Structure:
    """Интерпретация символов сигнатуры над конечным универсумом"""

    name = "structure"

    def __init__(self):
        self._domains: Dict[Optional[str], Tuple[Tuple[Value, ...], FrozenSet[Value]]] = {}

    def universe(self) -> Sequence[Value]:
        raise NotImplementedError

    def constant(self, which: str) -> Value:
        raise SortError(f"{self.name}: нет константы {which}")

    def apply(self, op: str, left: Value, right: Value) -> Value:
        raise SortError(f"{self.name}: нет операции {op}")

    def preimages(self, op: str, value: Value) -> Sequence[Tuple[Value, Value]]:
        """Все пары (l, r) с apply(op, l, r) = value"""
        raise SortError(f"{self.name}: нет операции {op}")

    def successor(self, value: Value) -> Value:
        raise SortError(f"{self.name}: нет функции S")

    def holds(self, pred: str, left: Value, right: Value) -> bool:
        raise SortError(f"{self.name}: нет предиката {pred}")

    def unary(self, pred: str, value: Value) -> bool:
        raise SortError(f"{self.name}: нет предиката {pred}")

    def describe(self, value: Value) -> str:
        return str(value)

    def domain(self, pred: Optional[str] = None) -> Tuple[Tuple[Value, ...], FrozenSet[Value]]:
        """Универсум или его часть, выделенная атомом домена; кэшируется"""
        if pred not in self._domains:
            if pred is None:
                values = tuple(self.universe())
            else:
                values = tuple(v for v in self.universe() if self.unary(pred, v))
            self._domains[pred] = (values, frozenset(values))
        return self._domains[pred]


@lru_cache(maxsize=None)
def _codes(x: BinString) -> FrozenSet[BinString]:
    return frozenset(subterm_codes(x))


def substar_holds(x: BinString, y: BinString) -> bool:
    """x ⊑* y в Σ*: обе строки 𝒜ℰ и x — код подтерма дерева y"""
    return is_almost_even(x) and is_almost_even(y) and x in _codes(y)


def tstar_holds(x: BinString) -> bool:
    """T*(x) ≡ x = a ∨ ∃y,z x = b*(y*z)"""
    return x == "a" or (x[0] == "b" and len(x) >= 3)


class StringStructure(Structure):
    """Σ*: непустые строки над {a, b} длины ≤ bound, * — конкатенация"""

    name = "Σ*"

    def __init__(self, bound: int):
        super().__init__()
        self.bound = bound
        self._universe = tuple(all_strings(bound))

    def universe(self) -> Sequence[BinString]:
        return self._universe

    def constant(self, which: str) -> BinString:
        if which in ("a", "b"):
            return which
        return super().constant(which)

    def apply(self, op: str, left: BinString, right: BinString) -> BinString:
        if op == "star":
            return left + right
        return super().apply(op, left, right)

    def preimages(self, op: str, value: BinString) -> Sequence[Tuple[BinString, BinString]]:
        if op == "star":
            return [(value[:i], value[i:]) for i in range(1, len(value))]
        return super().preimages(op, value)

    def successor(self, value: BinString) -> BinString:
        return successor(value)

    def holds(self, pred: str, left: BinString, right: BinString) -> bool:
        if pred == "subp":
            return left in right
        if pred == "substar":
            return substar_holds(left, right)
        return super().holds(pred, left, right)

    def unary(self, pred: str, value: BinString) -> bool:
        if pred == "dom":
            return is_almost_even(value)
        if pred == "tstar":
            return tstar_holds(value)
        return super().unary(pred, value)


class TreeStructure(Structure):
    """Деревья с кодом длины ≤ bound: 0 ↦ a, (s,t) ↦ b·s·t, ⊑ — отношение подтерма"""

    name = "trees"

    def __init__(self, bound: int):
        super().__init__()
        self.bound = bound
        self._universe = tuple(almost_even_strings(bound))

    def universe(self) -> Sequence[BinString]:
        return self._universe

    def constant(self, which: str) -> BinString:
        if which == "zero":
            return "a"
        return super().constant(which)

    def apply(self, op: str, left: BinString, right: BinString) -> BinString:
        if op == "pair":
            return "b" + left + right
        return super().apply(op, left, right)

    def preimages(self, op: str, value: BinString) -> Sequence[Tuple[BinString, BinString]]:
        if op != "pair":
            return super().preimages(op, value)
        try:
            return [split_children(value)]
        except CodingError:
            return []

    def holds(self, pred: str, left: BinString, right: BinString) -> bool:
        if pred == "subt":
            return left in _codes(right)
        return super().holds(pred, left, right)


# =============================================================================
# ПЛАНЫ КВАНТОРОВ
# =============================================================================

@dataclass
class _Search:
    """Одна ветвь перебора: переменные, ограничения и шаги"""
    vars: Tuple[str, ...]
    base: Dict[str, Optional[str]]          # переменная → атом домена или None
    filters: Dict[str, List[Formula]]       # ограничения от одной переменной
    fixed: List[Formula]                    # ограничения без связанных переменных
    steps: List[tuple]
    consequent: Optional[Formula]           # для ∀; None — любое решение опровергает


@dataclass
class _QuantPlan:
    node: Formula
    keys: Tuple[ObjTerm, ...]
    branches: List[_Search]


def _key_terms(phi: Formula) -> Tuple[ObjTerm, ...]:
    """Максимальные подтермы тела, все переменные которых свободны в phi"""
    found: List[ObjTerm] = []

    def visit_term(t: ObjTerm, shadow: FrozenSet[str]) -> None:
        names = term_vars(t)
        if not names:
            return
        if not names & shadow:
            found.append(t)
        elif isinstance(t, App):
            visit_term(t.left, shadow)
            visit_term(t.right, shadow)
        elif isinstance(t, Succ):
            visit_term(t.arg, shadow)

    def visit(f: Formula, shadow: FrozenSet[str]) -> None:
        if isinstance(f, QUANTIFIERS):
            visit(f.body, shadow | frozenset(f.vars))
            return
        for t in atom_terms(f):
            visit_term(t, shadow)
        for child in children(f):
            visit(child, shadow)

    visit(phi, frozenset())
    return tuple(dict.fromkeys(found))


def _invertible(pattern: ObjTerm, open_vars: FrozenSet[str]) -> bool:
    if isinstance(pattern, Succ):
        return not (term_vars(pattern) & open_vars)
    if isinstance(pattern, App):
        return _invertible(pattern.left, open_vars) and _invertible(pattern.right, open_vars)
    return True


# =============================================================================
# ВЫЧИСЛИТЕЛЬ
# =============================================================================

class Evaluator:
    """Вычисление формул в одной структуре; планы и кэш живут в экземпляре"""

    def __init__(self, structure: Structure):
        self.structure = structure
        self._plans: Dict[int, _QuantPlan] = {}
        self._memo: Dict[tuple, bool] = {}
        self._term_vars: Dict[int, Tuple[ObjTerm, FrozenSet[str]]] = {}
        self._compiled: Dict[int, Tuple[ObjTerm, Callable]] = {}
        self._fresh = count(1)

    # --- публичное -----------------------------------------------------------

    def evaluate(self, phi: Formula, assignment: Optional[Dict[str, Value]] = None) -> bool:
        return self._eval(phi, dict(assignment or {}))

    def term(self, t: ObjTerm, env: Dict[str, Value]) -> Value:
        entry = self._compiled.get(id(t))
        if entry is None:
            entry = (t, self._compile(t))
            self._compiled[id(t)] = entry
        return entry[1](env)

    def _compile(self, t: ObjTerm) -> Callable[[Dict[str, Value]], Value]:
        """Терм как замыкание над присваиванием; порядок вычисления прежний"""
        structure = self.structure
        if isinstance(t, Var):
            name = t.name

            def var(env):
                try:
                    return env[name]
                except KeyError:
                    raise UnassignedVariable(name) from None
            return var
        if isinstance(t, App):
            op, left, right = t.op, self._compile(t.left), self._compile(t.right)
            apply = structure.apply
            return lambda env: apply(op, left(env), right(env))
        if isinstance(t, Const):
            which = t.which
            return lambda env: structure.constant(which)
        arg = self._compile(t.arg)
        return lambda env: structure.successor(arg(env))

    def counterexample(self, phi: Formula,
                       assignment: Optional[Dict[str, Value]] = None) -> Optional[Dict[str, Value]]:
        """
        Опровергающее присваивание для ложной формулы.

        Для ∀x̄ ψ — значения x̄ первого найденного контрпримера; для прочих
        ложных формул — пустой словарь; для истинных — None.
        """
        env = dict(assignment or {})
        if not isinstance(phi, ForAll):
            return None if self._eval(phi, env) else {}
        plan = self._plan(phi)
        for search in plan.branches:
            for solution in self._solutions(search, env):
                if search.consequent is None or not self._eval(search.consequent, solution):
                    return {name: solution[name] for name in phi.vars}
        return None

    # --- формулы -------------------------------------------------------------

    def _eval(self, phi: Formula, env: Dict[str, Value]) -> bool:
        if isinstance(phi, Atom):
            left = self.term(phi.left, env)
            right = self.term(phi.right, env)
            if phi.pred == "=":
                return left == right
            return self.structure.holds(phi.pred, left, right)
        if isinstance(phi, Unary):
            return self.structure.unary(phi.pred, self.term(phi.arg, env))
        if isinstance(phi, Not):
            return not self._eval(phi.arg, env)
        if isinstance(phi, And):
            return all(self._eval(a, env) for a in phi.args)
        if isinstance(phi, Or):
            return any(self._eval(a, env) for a in phi.args)
        if isinstance(phi, Imp):
            return not self._eval(phi.left, env) or self._eval(phi.right, env)
        if isinstance(phi, Iff):
            return self._eval(phi.left, env) == self._eval(phi.right, env)
        return self._quantifier(phi, env)

    def _quantifier(self, phi: Formula, env: Dict[str, Value]) -> bool:
        plan = self._plan(phi)
        key = (id(phi),) + tuple(self.term(t, env) for t in plan.keys)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        if isinstance(phi, ForAll):
            result = all(self._holds_everywhere(s, env) for s in plan.branches)
        elif isinstance(phi, Exists):
            result = any(self._has_solution(s, env) for s in plan.branches)
        else:
            result = self._count_solutions(plan.branches[0], env, limit=2) == 1
        self._memo[key] = result
        return result

    def _holds_everywhere(self, search: _Search, env: Dict[str, Value]) -> bool:
        for solution in self._solutions(search, env):
            if search.consequent is None or not self._eval(search.consequent, solution):
                return False
        return True

    def _has_solution(self, search: _Search, env: Dict[str, Value]) -> bool:
        for _ in self._solutions(search, env):
            return True
        return False

    def _count_solutions(self, search: _Search, env: Dict[str, Value], limit: int) -> int:
        found = 0
        for _ in self._solutions(search, env):
            found += 1
            if found >= limit:
                break
        return found

    # --- планирование --------------------------------------------------------

    def _plan(self, phi: Formula) -> _QuantPlan:
        plan = self._plans.get(id(phi))
        if plan is None:
            plan = _QuantPlan(node=phi, keys=_key_terms(phi), branches=self._branches(phi))
            self._plans[id(phi)] = plan
        return plan

    def _branches(self, phi: Formula) -> List[_Search]:
        if isinstance(phi, ForAll):
            result = []
            for names, antecedents, consequent in self._forall_parts(list(phi.vars), [], phi.body):
                for vars_, constraints in self._expand(names, antecedents):
                    result.append(self._search(vars_, constraints, consequent))
            return result
        if isinstance(phi, Exists):
            return [self._search(v, c, None) for v, c in self._expand(list(phi.vars), [phi.body])]
        # ∃! считает решения: без подъёма кванторов и без ветвления
        (vars_, constraints), = self._expand(list(phi.vars), [phi.body], lift=False, budget=1)
        return [self._search(vars_, constraints, None)]

    def _freshen(self, names: Sequence[str], body: Formula) -> Tuple[List[str], Formula]:
        mapping = {n: f"{n}#{next(self._fresh)}" for n in names}
        return list(mapping.values()), rename_free(body, mapping)

    def _forall_parts(self, names: List[str], antecedents: List[Formula],
                      body: Formula) -> List[Tuple[List[str], List[Formula], Optional[Formula]]]:
        if isinstance(body, And):
            parts = []
            for arg in body.args:
                parts.extend(self._forall_parts(names, antecedents, arg))
            return parts
        if isinstance(body, Imp):
            return self._forall_parts(names, antecedents + [body.left], body.right)
        if isinstance(body, ForAll):
            fresh, inner = self._freshen(body.vars, body.body)
            return self._forall_parts(names + fresh, antecedents, inner)
        if isinstance(body, Not):
            # ∀x̄ (A → ¬ψ) ≡ ¬∃x̄ (A & ψ)
            return [(names, antecedents + [body.arg], None)]
        return [(names, antecedents, body)]

    def _expand(self, names: List[str], pending: List[Formula], lift: bool = True,
                budget: int = MAX_BRANCHES) -> List[Tuple[List[str], List[Formula]]]:
        out: List[Tuple[List[str], List[Formula]]] = []
        self._expand_into(list(names), list(pending), [], out, lift, budget)
        return out

    def _expand_into(self, names, pending, done, out, lift, budget) -> None:
        while pending:
            head = pending.pop(0)
            if isinstance(head, And):
                pending = list(head.args) + pending
            elif lift and isinstance(head, Exists):
                fresh, body = self._freshen(head.vars, head.body)
                names = names + fresh
                pending = [body] + pending
            elif isinstance(head, Or) and len(head.args) <= budget:
                share = budget // len(head.args)
                for arg in head.args:
                    self._expand_into(names, [arg] + pending, done, out, lift, share)
                return
            else:
                done = done + [head]
        out.append((names, done))

    def _search(self, names: Sequence[str], constraints: List[Formula],
                consequent: Optional[Formula]) -> _Search:
        bound = frozenset(names)
        base: Dict[str, Optional[str]] = {n: None for n in names}
        filters: Dict[str, List[Formula]] = {n: [] for n in names}
        fixed, general = [], []
        for c in constraints:
            occurring = free_vars(c) & bound
            if not occurring:
                fixed.append(c)
            elif (isinstance(c, Unary) and isinstance(c.arg, Var)
                  and c.arg.name in bound and base[c.arg.name] is None):
                base[c.arg.name] = c.pred
            elif len(occurring) == 1 and not (isinstance(c, Atom) and c.pred == "="):
                filters[next(iter(occurring))].append(c)
            else:
                general.append(c)
        order = list(dict.fromkeys(names))
        steps = self._schedule(order, bound, base, general)
        return _Search(tuple(order), base, filters, fixed, steps, consequent)

    def _schedule(self, order: List[str], bound: FrozenSet[str],
                  base: Dict[str, Optional[str]], general: List[Formula]) -> List[tuple]:
        steps: List[tuple] = []
        assigned: set = set()
        pending = list(general)

        def open_in(t: ObjTerm) -> FrozenSet[str]:
            return (term_vars(t) & bound) - assigned

        def solvable(c: Formula):
            if not (isinstance(c, Atom) and c.pred == "="):
                return None
            for pattern, target in ((c.left, c.right), (c.right, c.left)):
                open_vars = open_in(pattern)
                if open_vars and not open_in(target) and _invertible(pattern, open_vars):
                    return pattern, target, open_vars
            return None

        def score(name: str) -> tuple:
            completes = 0
            for c in pending:
                if isinstance(c, Atom) and c.pred == "=":
                    completes += sum(1 for side in (c.left, c.right) if open_in(side) == {name})
            return (-completes, 0 if base[name] else 1, order.index(name))

        while len(assigned) < len(bound):
            chosen = None
            for i, c in enumerate(pending):
                solution = solvable(c)
                if solution is not None:
                    chosen = i, solution
                    break
            if chosen is not None:
                i, (pattern, target, open_vars) = chosen
                del pending[i]
                steps.append(("solve", pattern, target, open_vars))
                assigned |= open_vars
            else:
                name = min((n for n in order if n not in assigned), key=score)
                steps.append(("enum", name))
                assigned.add(name)
            still = []
            for c in pending:
                if (free_vars(c) & bound) - assigned:
                    still.append(c)
                else:
                    steps.append(("check", c))
            pending = still
        return steps

    # --- перебор -------------------------------------------------------------

    def _solutions(self, search: _Search, env: Dict[str, Value]) -> Iterator[Dict[str, Value]]:
        local = dict(env)
        for c in search.fixed:
            if not self._eval(c, local):
                return
        if all(step[0] == "enum" for step in search.steps):
            # только перебор: декартово произведение без рекурсии по шагам
            names = [step[1] for step in search.steps]
            ranges = [self._domain_values(search, name, local) for name in names]
            for values in product(*ranges):
                local.update(zip(names, values))
                yield local
            return
        yield from self._run(search, 0, local, {})

    def _run(self, search: _Search, index: int, env: Dict[str, Value],
             domains: Dict[str, List[Value]]) -> Iterator[Dict[str, Value]]:
        if index == len(search.steps):
            yield env
            return
        step = search.steps[index]
        if step[0] == "check":
            if self._eval(step[1], env):
                yield from self._run(search, index + 1, env, domains)
        elif step[0] == "enum":
            name = step[1]
            values = domains.get(name)
            if values is None:
                values = self._domain_values(search, name, env)
                domains[name] = values
            for value in values:
                env[name] = value
                yield from self._run(search, index + 1, env, domains)
        else:
            _, pattern, target, open_vars = step
            value = self.term(target, env)
            for binding in self._match(search, pattern, value, open_vars, {}, env):
                env.update(binding)
                yield from self._run(search, index + 1, env, domains)

    def _domain_values(self, search: _Search, name: str, env: Dict[str, Value]) -> List[Value]:
        values, _ = self.structure.domain(search.base[name])
        checks = search.filters[name]
        if not checks:
            return list(values)
        kept = []
        for value in values:
            env[name] = value
            if all(self._eval(c, env) for c in checks):
                kept.append(value)
        return kept

    def _admissible(self, search: _Search, name: str, value: Value, env: Dict[str, Value]) -> bool:
        _, members = self.structure.domain(search.base[name])
        if value not in members:
            return False
        checks = search.filters[name]
        if not checks:
            return True
        env[name] = value
        return all(self._eval(c, env) for c in checks)

    def _vars_of(self, t: ObjTerm) -> FrozenSet[str]:
        entry = self._term_vars.get(id(t))
        if entry is None:
            entry = (t, term_vars(t))
            self._term_vars[id(t)] = entry
        return entry[1]

    def _match(self, search: _Search, pattern: ObjTerm, value: Value, open_vars: FrozenSet[str],
               binding: Dict[str, Value], env: Dict[str, Value]) -> Iterator[Dict[str, Value]]:
        """Все продолжения binding, при которых pattern принимает значение value"""
        if isinstance(pattern, Var) and pattern.name in open_vars:
            name = pattern.name
            if name in binding:
                if binding[name] == value:
                    yield binding
            elif self._admissible(search, name, value, env):
                yield {**binding, name: value}
            return
        if not self._vars_of(pattern) & open_vars:
            if self.term(pattern, env) == value:
                yield binding
            return
        for left, right in self.structure.preimages(pattern.op, value):
            for partial in self._match(search, pattern.left, left, open_vars, binding, env):
                yield from self._match(search, pattern.right, right, open_vars, partial, env)


# =============================================================================
# ФАСАД
# =============================================================================

def evaluate(phi: Formula, structure: Structure,
             assignment: Optional[Dict[str, Value]] = None) -> bool:
    return Evaluator(structure).evaluate(phi, assignment)


def eval_bounded(phi: Formula, bound: int,
                 assignment: Optional[Dict[str, BinString]] = None) -> bool:
    """Истинность в Σ*, где каждый квантор пробегает строки длины ≤ bound"""
    return evaluate(phi, StringStructure(bound), assignment)


def eval_finite(phi: Formula, model: Structure,
                assignment: Optional[Dict[str, Value]] = None) -> bool:
    """Истинность в конечной модели (элементы — номера классов)"""
    return evaluate(phi, model, assignment)
