"""
Рекурсия по строкам и сертификаты вычислений.

Рекурсия задаётся четвёркой (p, q, f1, f2):

    h(a) = p,   h(b) = q,   h(y*a) = f1(y, h(y)),   h(y*b) = f2(y, h(y))

Сертификат для индекса m — код множества пар (z, h(z)) по всем z из
замыкания индексов: a; b, если b ≤ m; z·a и z·b для каждого z < m.
Проверка Comp разбирает сертификат и проверяет условия C1–C6;
MinComp дополнительно требует совпадения элементов с каноническим
замыканием и ограничения на индексы.
"""

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Set, Tuple

from errors import NotAPair
from set_coding import (
    SetCode, decode_pair, encode_pair, encode_set, is_member, is_set, members,
)
from strings_core import BinString, all_strings, leq, lt, string_key


Step = Callable[[BinString, BinString], BinString]


@dataclass(frozen=True)
class RecursionSpec:
    """Параметры рекурсии; f1, f2 обязаны быть тотальными и детерминированными"""
    name: str
    p: BinString
    q: BinString
    f1: Step
    f2: Step


ALPHA_SPEC = RecursionSpec(
    name="alpha",
    p="bb",
    q="b",
    f1=lambda y, u: u + "b",
    f2=lambda y, u: u,
)

BETA_SPEC = RecursionSpec(
    name="beta",
    p="b",
    q="bb",
    f1=lambda y, u: u,
    f2=lambda y, u: u + "b",
)

SPECS: Dict[str, RecursionSpec] = {
    "alpha": ALPHA_SPEC,
    "beta": BETA_SPEC,
}


def random_spec(seed: int, max_len: int = 3) -> RecursionSpec:
    """
    Случайная тотальная рекурсия: значения f1/f2 берутся из строк длины ≤ max_len
    по генератору, засеянному входом, поэтому функции детерминированы.
    """
    pool = list(all_strings(max_len))
    rng = random.Random(seed)

    def table(tag: str) -> Step:
        def step(y: BinString, u: BinString) -> BinString:
            return random.Random(f"{seed}:{tag}:{y}:{u}").choice(pool)
        return step

    return RecursionSpec(
        name=f"random-{seed}",
        p=rng.choice(pool),
        q=rng.choice(pool),
        f1=table("f1"),
        f2=table("f2"),
    )


@dataclass
class CompCode:
    """Сертификат вычисления: код множества пар (индекс, значение)"""
    code: SetCode
    pairs: Dict[BinString, BinString] = field(default_factory=dict)

    @property
    def raw(self) -> BinString:
        return self.code.raw

    @property
    def size(self) -> int:
        """Длина строки сертификата"""
        return len(self.code.raw)


# =============================================================================
# ПРЯМОЕ ВЫЧИСЛЕНИЕ
# =============================================================================

def run_recursion(spec: RecursionSpec, m: BinString) -> BinString:
    value = spec.p if m[0] == "a" else spec.q
    for i in range(1, len(m)):
        prefix = m[:i]
        if m[i] == "a":
            value = spec.f1(prefix, value)
        else:
            value = spec.f2(prefix, value)
    return value


def index_closure(m: BinString) -> Set[BinString]:
    """Наименьшее X: a ∈ X; b ∈ X при b ≤ m; z·a, z·b ∈ X для z ∈ X, z < m"""
    closure = {"a"}
    if leq("b", m):
        closure.add("b")
    frontier = list(closure)
    while frontier:
        z = frontier.pop()
        if not lt(z, m):
            continue
        for child in (z + "a", z + "b"):
            if child not in closure:
                closure.add(child)
                frontier.append(child)
    return closure


def index_bound_holds(z: BinString, m: BinString) -> bool:
    """(m=a & z=a) ∨ (m=b & z=b) ∨ ∃n < m (z ≤ na ∨ z ≤ nb)"""
    if (m == "a" and z == "a") or (m == "b" and z == "b"):
        return True
    below = {m[:i] for i in range(1, len(m))}
    if m != "a":
        below.add("a")
    return any(leq(z, n + "a") or leq(z, n + "b") for n in below if lt(n, m))


# =============================================================================
# СЕРТИФИКАТЫ
# =============================================================================

def certificate_for(spec: RecursionSpec, indices: Iterable[BinString]) -> CompCode:
    """Код множества пар (z, h(z)) для заданного набора индексов"""
    pairs = {z: run_recursion(spec, z) for z in indices}
    code = encode_set(encode_pair(z, v) for z, v in pairs.items())
    return CompCode(code=code, pairs=pairs)


def build_comp_code(spec: RecursionSpec, m: BinString) -> CompCode:
    return certificate_for(spec, index_closure(m))


def _decoded_members(u: BinString) -> List[Tuple[BinString, BinString]]:
    if not is_set(u):
        return []
    decoded = []
    for v in members(u):
        try:
            decoded.append(decode_pair(v))
        except NotAPair:
            continue
    return decoded


def comp_clauses(u: BinString, m: BinString, spec: RecursionSpec) -> Dict[str, bool]:
    """Истинность каждого из условий C1–C6 для Comp(u, m)"""
    decoded = _decoded_members(u)
    present = set(decoded)
    clauses = {
        "C1": is_set(u),
        "C2": not leq("a", m) or ("a", spec.p) in present,
        "C3": not leq("b", m) or ("b", spec.q) in present,
        "C4": all((z + "a", spec.f1(z, v)) in present
                  for z, v in decoded if lt(z, m)),
        "C5": all((z + "b", spec.f2(z, v)) in present
                  for z, v in decoded if lt(z, m)),
    }
    indices = [z for z, _ in decoded]
    clauses["C6"] = len(indices) == len(set(indices))
    return clauses


def check_comp(u: BinString, m: BinString, spec: RecursionSpec) -> bool:
    return all(comp_clauses(u, m, spec).values())


def check_min_comp(u: BinString, m: BinString, spec: RecursionSpec) -> bool:
    """
    Comp(u, m), элементы u совпадают с каноническими, индексы ограничены.

    Условие минимальности MinComp квантифицирует по всем u′ и напрямую
    не разрешимо. C2–C5 индукцией по < заставляют любой Comp-код
    содержать пары замыкания, поэтому «u ⊆ любого Comp-кода» равносильно
    «u ⊆ замыкания»; обратное включение даёт сам Comp.
    """
    if not check_comp(u, m, spec):
        return False
    canonical = build_comp_code(spec, m)
    if members(u) != canonical.code.members():
        return False
    return all(index_bound_holds(z, m) for z, _ in _decoded_members(u))


def eval_H(m: BinString, y: BinString, spec: RecursionSpec) -> bool:
    """H(m, y) ≡ ∃u, w (MinComp(u, m) & Pair[m, y, w] & w ε u)"""
    if run_recursion(spec, m) != y:
        return False
    certificate = build_comp_code(spec, m)
    return is_member(encode_pair(m, y), certificate.raw)


def certificate_summary(cert: CompCode) -> List[Tuple[BinString, BinString]]:
    """Пары сертификата в порядке (длина, лекс.) индекса"""
    return sorted(cert.pairs.items(), key=lambda item: string_key(item[0]))
