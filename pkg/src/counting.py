"""
Счётные функции α, β и предикат «почти чётности» 𝒜ℰ.

α(x) — b-палочка, обозначающая число букв a в x; β(x) — число букв b.
Рекурсия: α(a)=bb, α(b)=b, α(x*a)=S(α(x)), α(x*b)=α(x); для β роли меняются.

x почти чётна (AE), если α(x) = S(β(x)) и для каждого собственного
начального отрезка u: α(u) ≤ β(u). Это в точности τ-коды полных
бинарных деревьев.
"""

from math import comb
from typing import List

from strings_core import (
    BinString, all_strings, leq, nat_to_tally, successor,
)


def count_a(x: BinString) -> int:
    return x.count("a")


def count_b(x: BinString) -> int:
    return x.count("b")


def alpha(x: BinString) -> BinString:
    """Один проход слева направо по рекурсии α"""
    value = "bb" if x[0] == "a" else "b"
    for ch in x[1:]:
        if ch == "a":
            value = successor(value)
    return value


def beta(x: BinString) -> BinString:
    value = "bb" if x[0] == "b" else "b"
    for ch in x[1:]:
        if ch == "b":
            value = successor(value)
    return value


def is_almost_even(x: BinString) -> bool:
    """
    (c1) #a = #b + 1 и (c2) в каждом собственном префиксе #a ≤ #b.

    Баланс #b − #a ведём одним проходом; на палочках это то же
    сравнение длин, что и α(u) ≤ β(u).
    """
    if not x:
        return False
    balance = 0
    for i, ch in enumerate(x):
        balance += 1 if ch == "b" else -1
        if balance < 0 and i < len(x) - 1:
            return False
    return balance == -1


def ae_formula_holds(x: BinString) -> bool:
    """
    Формула домена ∃y,z (A#(x,y) & B#(x,z) & y=Sz) вместе с (c2),
    вычисленная буквально через палочки α и β.
    """
    if alpha(x) != successor(beta(x)):
        return False
    return all(leq(alpha(x[:i]), beta(x[:i])) for i in range(1, len(x)))


def almost_even_strings(max_len: int) -> List[BinString]:
    """Все AE-строки длины ≤ max_len в порядке (длина, лекс.)"""
    result = []
    for n in range(1, max_len + 1, 2):
        result.extend(x for x in all_strings(n, n) if is_almost_even(x))
    return result


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def nat_alpha(x: BinString) -> BinString:
    """Оракул: α через подсчёт букв, для сверки с рекурсией"""
    return nat_to_tally(count_a(x))


def nat_beta(x: BinString) -> BinString:
    return nat_to_tally(count_b(x))
