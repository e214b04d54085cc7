"""
Стандартная модель Σ*: непустые строки над алфавитом {a, b}.

Строки храним как обычные str из символов 'a' и 'b'.
Отношения B (начало) и E (конец) — собственные: в Σ* нет пустой строки,
поэтому свидетель z всегда непуст, а равенство достижимо только
через дизъюнкт x=y в ⊆p.

Палочки: b-палочка b^(n+1) обозначает натуральное число n.
"""

from itertools import product
from typing import Iterator, List, Tuple

from errors import NotATally, ParseError


BinString = str

DIGITS = ("a", "b")


# =============================================================================
# РАЗБОР И ПЕРЕЧИСЛЕНИЕ
# =============================================================================

def parse_string(text: str) -> BinString:
    """ASCII-строка над {a,b} без разделителей; пустой ввод — ошибка"""
    value = text.strip()
    if not value:
        raise ParseError("пустая строка не принадлежит Σ*", text)
    for i, ch in enumerate(value):
        if ch not in DIGITS:
            raise ParseError(f"недопустимый символ {ch!r}", text, i)
    return value


def string_key(x: BinString) -> Tuple[int, str]:
    """Ключ сортировки: длина, затем лексикографически (a < b)"""
    return (len(x), x)


def all_strings(max_len: int, min_len: int = 1) -> Iterator[BinString]:
    """Все строки длины min_len..max_len в порядке (длина, лекс.)"""
    for n in range(max(min_len, 1), max_len + 1):
        for digits in product(DIGITS, repeat=n):
            yield "".join(digits)


def b_tallies(max_len: int) -> List[BinString]:
    """b, bb, ..., b^max_len"""
    return ["b" * n for n in range(1, max_len + 1)]


# =============================================================================
# КОНКАТЕНАЦИЯ И ОТНОШЕНИЯ ЧАСТЕЙ
# =============================================================================

def concat(x: BinString, y: BinString) -> BinString:
    return x + y


def begins(x: BinString, y: BinString) -> bool:
    """xBy ≡ ∃z x*z = y: x — собственный префикс y"""
    return len(x) < len(y) and y.startswith(x)


def ends(x: BinString, y: BinString) -> bool:
    """xEy ≡ ∃z z*x = y: x — собственный суффикс y"""
    return len(x) < len(y) and y.endswith(x)


def is_substring(x: BinString, y: BinString) -> bool:
    """x ⊆p y: x = y, xBy, xEy или y = y1*(x*y2)"""
    return x in y


def successor(x: BinString) -> BinString:
    """QT6: S(a) = b, иначе S(x) = x*b"""
    if x == "a":
        return "b"
    return x + "b"


# =============================================================================
# ПОРЯДОК R
# =============================================================================

def r_precedes(x: BinString, y: BinString) -> bool:
    """xRy ≡ (x=a & ¬y=a) ∨ xBy"""
    return (x == "a" and y != "a") or begins(x, y)


def is_i0(x: BinString) -> bool:
    """
    I₀(x) ≡ ∀y (yRx ∨ y=x → ¬yRy).

    Кандидаты y с yRx — это a и собственные префиксы x, так что
    проверка конечна без внешней границы.
    """
    candidates = {"a", x}
    candidates.update(x[:i] for i in range(1, len(x)))
    return all(not r_precedes(y, y) for y in candidates
               if y == x or r_precedes(y, x))


def lt(x: BinString, y: BinString) -> bool:
    """x < y ≡ I₀(x) & I₀(y) & xRy"""
    return is_i0(x) and is_i0(y) and r_precedes(x, y)


def leq(x: BinString, y: BinString) -> bool:
    return x == y or lt(x, y)


def r_leq(x: BinString, y: BinString) -> bool:
    return x == y or r_precedes(x, y)


def tally_lt(x: BinString, y: BinString) -> bool:
    """На b-палочках < — сравнение длин"""
    return len(x) < len(y)


def tally_leq(x: BinString, y: BinString) -> bool:
    return len(x) <= len(y)


# =============================================================================
# ПАЛОЧКИ
# =============================================================================

def is_tally_b(x: BinString) -> bool:
    """Tally_b(x) ≡ ∀y ⊆p x (Digit(y) → y=b)"""
    return len(x) >= 1 and "a" not in x


def is_tally_a(x: BinString) -> bool:
    return len(x) >= 1 and "b" not in x


def max_b_run(x: BinString) -> int:
    """Длина самого длинного блока b в x (0, если b не встречается)"""
    best = run = 0
    for ch in x:
        run = run + 1 if ch == "b" else 0
        best = max(best, run)
    return best


def addtally(x: BinString, y: BinString) -> BinString:
    """
    График Addtally(x, y, z) как функция.

    Для b-палочек: (x=b & z=y) ∨ (y=b & z=x) ∨ z = x*y1, где y = S(y1).
    На остальных входах — значение по умолчанию b.
    """
    if not (is_tally_b(x) and is_tally_b(y)):
        return "b"
    if x == "b":
        return y
    if y == "b":
        return x
    return x + y[:-1]


def addtally_checked(x: BinString, y: BinString) -> BinString:
    """Addtally только для палочек — для арифметики, где b по умолчанию маскирует ошибку"""
    for t in (x, y):
        if not is_tally_b(t):
            raise NotATally(f"{t} не является b-палочкой")
    return addtally(x, y)


def nat_to_tally(n: int) -> BinString:
    if n < 0:
        raise ValueError(f"натуральное число ожидалось, получено {n}")
    return "b" * (n + 1)


def tally_to_nat(t: BinString) -> int:
    if not is_tally_b(t):
        raise NotATally(f"{t} не является b-палочкой")
    return len(t) - 1
