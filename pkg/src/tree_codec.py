"""
Кодек деревьев: полные бинарные деревья (замкнутые термы 𝓛_T) ↔ AE-строки.

    τ(0) = a
    τ((u, v)) = b * τ(u) * τ(v)

Это польская (префиксная) запись дерева: b — внутренний узел, a — лист.
Декодеров два: потоковый спуск (b → два поддерева, a → лист) и
алгоритм из доказательства единственности разложения (отбросить b,
взять кратчайший начальный отрезок с α = S(β)). Они обязаны совпадать.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Set, Tuple, Union

from errors import NotAlmostEven, NotDecomposable, ParseError
from strings_core import BinString, successor
from counting import alpha, beta, is_almost_even


@dataclass(frozen=True)
class Leaf:
    """Константа 0"""

    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Node:
    """Пара (left, right)"""
    left: "TreeTerm"
    right: "TreeTerm"

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


TreeTerm = Union[Leaf, Node]

LEAF = Leaf()


# =============================================================================
# КОДИРОВАНИЕ
# =============================================================================

def encode_tree(t: TreeTerm) -> BinString:
    parts: List[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            parts.append("b")
            stack.append(node.right)
            stack.append(node.left)
        else:
            parts.append("a")
    return "".join(parts)


def _read_tree(x: BinString, pos: int) -> Tuple[TreeTerm, int]:
    """
    Читает одно поддерево с позиции pos: b → левое и правое, a → лист.
    Возвращает дерево и позицию сразу за ним.
    """
    # Явный стек вместо рекурсии: глубина дерева ограничена только длиной кода
    pending: List[list] = []
    while True:
        if pos >= len(x):
            raise NotAlmostEven(f"{x}: код оборвался внутри поддерева")
        ch = x[pos]
        pos += 1
        if ch == "b":
            pending.append([])
            continue
        tree: TreeTerm = LEAF
        while pending:
            pending[-1].append(tree)
            if len(pending[-1]) < 2:
                break
            left, right = pending.pop()
            tree = Node(left, right)
        else:
            return tree, pos


def decode_tree(x: BinString) -> TreeTerm:
    """Рекурсивный спуск по польской записи; успешен ровно на AE-строках"""
    tree, pos = _read_tree(x, 0)
    if pos != len(x):
        raise NotAlmostEven(f"{x}: лишние символы после позиции {pos}")
    return tree


def split_children(x: BinString) -> Tuple[BinString, BinString]:
    """Коды детей корня через потоковый декодер"""
    tree = decode_tree(x)
    if not isinstance(tree, Node):
        raise NotDecomposable(f"{x}: лист не раскладывается")
    return encode_tree(tree.left), encode_tree(tree.right)


def split_by_counts(x: BinString) -> Tuple[BinString, BinString]:
    """
    Разложение x = b*y*z через кратчайший AE-префикс остатка.

    Отбрасываем первую b; среди начальных отрезков yᵢ остатка берём
    кратчайший с α(yᵢ) = S(β(yᵢ)); остаток после него — z.
    """
    if x == "a" or not is_almost_even(x):
        raise NotDecomposable(f"{x}: нужна AE-строка, отличная от a")
    rest = x[1:]
    for i in range(1, len(rest)):
        head = rest[:i]
        if alpha(head) == successor(beta(head)):
            return head, rest[i:]
    raise NotDecomposable(f"{x}: не найден AE-префикс")


def ae_splits(x: BinString) -> List[Tuple[BinString, BinString]]:
    """Все пары AE-строк (y, z) с x = b*y*z"""
    if not x.startswith("b"):
        return []
    rest = x[1:]
    return [(rest[:i], rest[i:]) for i in range(1, len(rest))
            if is_almost_even(rest[:i]) and is_almost_even(rest[i:])]


# =============================================================================
# ПОДТЕРМЫ
# =============================================================================

def subterms(t: TreeTerm) -> Set[TreeTerm]:
    """S(t): множество подтермов (равные поддеревья склеиваются)"""
    result: Set[TreeTerm] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if node in result:
            continue
        result.add(node)
        if isinstance(node, Node):
            stack.append(node.left)
            stack.append(node.right)
    return result


def subterm_codes(x: BinString) -> Set[BinString]:
    """Σ(t) = { τ(s) : s ∈ S(decode(x)) }"""
    if not is_almost_even(x):
        raise NotAlmostEven(f"{x} не является AE-строкой")
    return {encode_tree(s) for s in subterms(decode_tree(x))}


# =============================================================================
# КОНКРЕТНЫЙ СИНТАКСИС "0" / "(s,t)"
# =============================================================================

def format_tree(t: TreeTerm) -> str:
    return str(t)


def parse_tree(text: str) -> TreeTerm:
    source = "".join(text.split())
    if not source:
        raise ParseError("пустое дерево", text)
    tree, pos = _parse_tree_at(source, 0, text)
    if pos != len(source):
        raise ParseError("лишние символы после дерева", text, pos)
    return tree


def _parse_tree_at(source: str, pos: int, text: str) -> Tuple[TreeTerm, int]:
    if pos >= len(source):
        raise ParseError("неожиданный конец дерева", text, pos)
    if source[pos] == "0":
        return LEAF, pos + 1
    if source[pos] != "(":
        raise ParseError(f"ожидался '0' или '(', найдено {source[pos]!r}", text, pos)
    left, pos = _parse_tree_at(source, pos + 1, text)
    if pos >= len(source) or source[pos] != ",":
        raise ParseError("ожидалась ','", text, pos)
    right, pos = _parse_tree_at(source, pos + 1, text)
    if pos >= len(source) or source[pos] != ")":
        raise ParseError("ожидалась ')'", text, pos)
    return Node(left, right), pos + 1


# =============================================================================
# ПЕРЕЧИСЛЕНИЕ
# =============================================================================

def tree_size(t: TreeTerm) -> int:
    """Число внутренних узлов"""
    return encode_tree(t).count("b")


def tree_depth(t: TreeTerm) -> int:
    """Глубина: у листа 0"""
    if isinstance(t, Node):
        return 1 + max(tree_depth(t.left), tree_depth(t.right))
    return 0


def trees_with_nodes(k: int) -> List[TreeTerm]:
    """Все деревья ровно с k внутренними узлами (их C_k штук)"""
    if k == 0:
        return [LEAF]
    result = []
    for i in range(k):
        for left, right in product(trees_with_nodes(i), trees_with_nodes(k - 1 - i)):
            result.append(Node(left, right))
    return result


def all_trees(max_nodes: int) -> Iterator[TreeTerm]:
    for k in range(max_nodes + 1):
        yield from trees_with_nodes(k)


def trees_of_depth(max_depth: int) -> List[TreeTerm]:
    """Все деревья глубины ≤ max_depth"""
    level = [LEAF]
    for _ in range(max_depth):
        level = [LEAF] + [Node(l, r) for l, r in product(level, repeat=2)]
    return level
