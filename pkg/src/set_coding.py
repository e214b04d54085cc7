"""
Кодирование конечных множеств и пар строками (схема Куайна–Виссера).

Код множества — это aa (пустое множество) или строка вида

    t1 p1 t2 p2 ... tn pn tn

где tᵢ — b-палочки (маркеры), pᵢ = a·wᵢ·a — полезные нагрузки,
маркеры строго растут, последний повторяется и является самой длинной
палочкой в коде. Элементы множества — ядра wᵢ.

Распознавание идёт по определениям Pref / Firstf / Intf / Lastf / Fr / Env:
маркеры всегда являются максимальными блоками b, поэтому кадры
перечисляются парами блоков.

Код пары: t·a·x·a·t·a·y·a·t, где t — кратчайшая b-палочка,
не встречающаяся в x·a·y.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

from errors import LemmaHypothesis, NotAPair, NotASet
from strings_core import BinString, is_tally_b, max_b_run, string_key


FIRST = "first"
INTERMEDIATE = "intermediate"
LAST = "last"


@dataclass(frozen=True)
class Frame:
    """Кадр t1 · payload · t2 внутри кода множества"""
    t1: BinString
    payload: BinString      # a·w·a
    t2: BinString
    kind: str               # first / intermediate / last
    offset: int = 0         # позиция t1 в коде

    @property
    def core(self) -> BinString:
        """Элемент множества: payload без крайних a"""
        return self.payload[1:-1]


@dataclass
class SetCode:
    """Разобранный код множества"""
    raw: BinString
    frames: List[Frame] = field(default_factory=list)

    @property
    def envelope(self) -> Optional[BinString]:
        """Палочка-конверт (маркер последнего кадра)"""
        if not self.frames:
            return None
        return "b" * max_b_run(self.raw)

    def members(self) -> Set[BinString]:
        return {f.core for f in self.frames}


# =============================================================================
# ПАЛОЧКИ-МАРКЕРЫ
# =============================================================================

def maxt_b(t: BinString, w: BinString) -> bool:
    """MaxT_b(t, w): каждая b-палочка внутри w входит в t"""
    return is_tally_b(t) and max_b_run(w) <= len(t)


def max_plus_t_b(t: BinString, w: BinString) -> bool:
    """Max⁺T_b(t, w) ≡ MaxT_b(t, w) & ¬ t ⊆p w: t длиннее любого блока b в w"""
    return maxt_b(t, w) and t not in w


def min_max_plus_t_b(t: BinString, u: BinString) -> bool:
    """MinMax⁺T_b: t — кратчайшая не встречающаяся в u b-палочка"""
    return max_plus_t_b(t, u) and len(t) == max_b_run(u) + 1


def min_nonoccurrent_tally(x: BinString) -> BinString:
    return "b" * (max_b_run(x) + 1)


# =============================================================================
# ПРЕДИКАТЫ КАДРОВ (буквально по определениям)
# =============================================================================

def is_pref(u: BinString, t: BinString) -> bool:
    """Pref(u, t) ≡ ∃y ⊆p u (aya = u & Max⁺T_b(t, u))"""
    return (len(u) >= 3 and u[0] == "a" and u[-1] == "a"
            and max_plus_t_b(t, u))


def is_firstf(x: BinString, t1: BinString, u: BinString, t2: BinString) -> bool:
    if not (is_pref(u, t1) and is_tally_b(t2)):
        return False
    frame = t1 + u + t2
    if t1 == t2 and frame == x:
        return True
    # (t1 u t2 a) B x: собственный префикс
    return len(t1) < len(t2) and len(frame) + 1 < len(x) and x.startswith(frame + "a")


def is_lastf(x: BinString, t1: BinString, u: BinString, t2: BinString) -> bool:
    if not (is_pref(u, t1) and t1 == t2):
        return False
    frame = t1 + u + t2
    if frame == x:
        return True
    tail = "a" + frame
    if len(x) <= len(tail) or not x.endswith(tail):
        return False
    w = x[:-len(tail)]
    return max_plus_t_b(t1, w)


def is_intf(x: BinString, w: BinString, t1: BinString, u: BinString,
            t2: BinString) -> bool:
    if not (w and is_pref(u, t1) and is_tally_b(t2) and len(t1) < len(t2)):
        return False
    head = w + "a" + t1 + u + t2 + "a"
    # w1 непуст: после head должен остаться хотя бы один символ
    return len(x) > len(head) and x.startswith(head) and max_plus_t_b(t1, w)


def is_fr(x: BinString, t1: BinString, u: BinString, t2: BinString) -> bool:
    """Fr ≡ Firstf ∨ ∃w Intf ∨ Lastf"""
    if is_firstf(x, t1, u, t2) or is_lastf(x, t1, u, t2):
        return True
    body = "a" + t1 + u + t2 + "a"
    start = x.find(body, 1)
    while start != -1:
        if is_intf(x, x[:start], t1, u, t2):
            return True
        start = x.find(body, start + 1)
    return False


# =============================================================================
# ПЕРЕЧИСЛЕНИЕ КАДРОВ
# =============================================================================

def b_runs(x: BinString) -> List[Tuple[int, int]]:
    """Максимальные блоки b как полуинтервалы [start, end)"""
    runs = []
    i = 0
    while i < len(x):
        if x[i] == "b":
            j = i
            while j < len(x) and x[j] == "b":
                j += 1
            runs.append((i, j))
            i = j
        else:
            i += 1
    return runs


def find_frames(x: BinString) -> List[Frame]:
    """
    Все кадры x (все четвёрки, для которых выполнено Fr).

    Маркеры — максимальные блоки b: перед t1 стоит начало строки или a,
    payload начинается и кончается на a. Для пары блоков (i, j) нагрузка —
    всё между ними; внутренние блоки должны быть короче t1.
    """
    runs = b_runs(x)
    prefix_max = []
    best = 0
    for start, end in runs:
        prefix_max.append(best)
        best = max(best, end - start)

    frames = []
    for i, (s1, e1) in enumerate(runs):
        len1 = e1 - s1
        # w = x[:s1-1]: все блоки до i-го
        w_ok = prefix_max[i] < len1
        inner_max = 0
        for j in range(i + 1, len(runs)):
            s2, e2 = runs[j]
            payload = x[e1:s2]
            len2 = e2 - s2
            if len(payload) >= 3 and inner_max < len1:
                at_start = s1 == 0
                at_end = e2 == len(x)
                t1, t2 = x[s1:e1], x[s2:e2]
                if len1 == len2 and at_end and (at_start or (s1 >= 2 and w_ok)):
                    frames.append(Frame(t1, payload, t2, LAST, s1))
                elif len1 < len2 and at_start and e2 + 1 < len(x):
                    frames.append(Frame(t1, payload, t2, FIRST, s1))
                elif (len1 < len2 and s1 >= 2 and w_ok
                      and e2 + 1 < len(x)):
                    frames.append(Frame(t1, payload, t2, INTERMEDIATE, s1))
            inner_max = max(inner_max, len2)
            if inner_max >= len1:
                break
    return frames


# =============================================================================
# Env / Set / ε
# =============================================================================

def _env_failure(t: BinString, x: BinString, frames: List[Frame]) -> Optional[str]:
    """Какое из условий (a)–(e) Env(t, x) нарушено; None — все выполнены"""
    if not (is_tally_b(t) and t in x and max_b_run(x) == len(t)):
        return "a"
    if not any(f.kind == FIRST or (f.kind == LAST and f.offset == 0) for f in frames):
        return "b"
    if not any(f.kind == LAST and f.t1 == t for f in frames):
        return "c"
    marker_of: Dict[BinString, BinString] = {}
    payload_of: Dict[BinString, BinString] = {}
    for f in frames:
        if marker_of.setdefault(f.payload, f.t1) != f.t1:
            return "d"
        if payload_of.setdefault(f.t1, f.payload) != f.payload:
            return "e"
    return None


def envelops(t: BinString, x: BinString) -> bool:
    """Env(t, x): конъюнкция условий (a)–(e)"""
    return _env_failure(t, x, find_frames(x)) is None


def parse_set(x: BinString) -> SetCode:
    if x == "aa":
        return SetCode(raw=x, frames=[])
    frames = find_frames(x)
    if not frames:
        raise NotASet(f"{x}: не найдено ни одного кадра", "frames")
    # единственный кандидат на конверт — самый длинный блок b
    t = "b" * max_b_run(x)
    failed = _env_failure(t, x, frames)
    if failed is not None:
        raise NotASet(f"{x}: не выполнено условие Env", failed)
    return SetCode(raw=x, frames=sorted(frames, key=lambda f: f.offset))


def is_set(x: BinString) -> bool:
    """Set(x) ≡ x=aa ∨ ∃t ⊆p x Env(t, x)"""
    try:
        parse_set(x)
    except NotASet:
        return False
    return True


def members(x: BinString) -> Set[BinString]:
    return parse_set(x).members()


def is_member(y: BinString, x: BinString) -> bool:
    """y ε x"""
    return is_set(x) and y in members(x)


# =============================================================================
# КОДИРОВЩИКИ МНОЖЕСТВ
# =============================================================================

def ladder_code(cores: List[BinString], base: int) -> BinString:
    """t1 p1 t2 p2 ... tn pn tn с маркерами tᵢ = b^(base+i−1)"""
    if not cores:
        return "aa"
    parts = []
    for i, w in enumerate(cores):
        parts.append("b" * (base + i))
        parts.append("a" + w + "a")
    parts.append("b" * (base + len(cores) - 1))
    return "".join(parts)


def encode_set(ws: Iterable[BinString]) -> SetCode:
    """
    Канонический код множества: элементы по (длина, лекс.),
    L = 1 + самый длинный блок b среди нагрузок, tᵢ = b^(L+i−1).
    """
    cores = sorted(set(ws), key=string_key)
    if not cores:
        return SetCode(raw="aa", frames=[])
    base = 1 + max(max_b_run("a" + w + "a") for w in cores)
    return parse_set(ladder_code(cores, base))


def format_set(items: Iterable[BinString]) -> str:
    return "{" + ", ".join(sorted(items, key=string_key)) + "}"


def singleton_code(u: BinString) -> BinString:
    """t·a·u·a·t, t — кратчайшая не встречающаяся в a·u·a палочка"""
    t = min_nonoccurrent_tally("a" + u + "a")
    return t + "a" + u + "a" + t


def doubleton_code(u: BinString, v: BinString) -> BinString:
    """t1·a·u·a·t2·a·v·a·t2 с Pref(aua, t1), Pref(ava, t2), t1 < t2"""
    t1 = min_nonoccurrent_tally("a" + u + "a")
    t2 = "b" * max(len(t1) + 1, max_b_run("a" + v + "a") + 1)
    return t1 + "a" + u + "a" + t2 + "a" + v + "a" + t2


def append_codes(x: BinString, y: BinString) -> BinString:
    """
    Склейка кодов: последний кадр x становится промежуточным,
    его терминальный маркер заменяется первым маркером y.

    Посылки: Env(t2, x), Env(t, y), y начинается с t3·a, t2 < t3,
    множества не пересекаются.
    """
    left, right = parse_set(x), parse_set(y)
    if not left.frames:
        return y
    if not right.frames:
        return x
    t2 = left.envelope
    t3 = right.frames[0].t1
    if len(t3) <= len(t2):
        raise LemmaHypothesis(f"первый маркер {t3} не длиннее конверта {t2}")
    if left.members() & right.members():
        raise LemmaHypothesis("множества пересекаются")
    return x[:-len(t2)] + y


# =============================================================================
# ПАРЫ
# =============================================================================

def encode_pair(x: BinString, y: BinString) -> BinString:
    t = min_nonoccurrent_tally(x + "a" + y)
    return t + "a" + x + "a" + t + "a" + y + "a" + t


def is_pair(x: BinString, y: BinString, z: BinString) -> bool:
    """Pair[x, y, z] ≡ ∃t ⊆p z (z = taxatayat & MinMax⁺T_b(t, xay))"""
    xay = x + "a" + y
    for k in range(1, max_b_run(z) + 1):
        t = "b" * k
        if z == t + "a" + x + "a" + t + "a" + y + "a" + t and min_max_plus_t_b(t, xay):
            return True
    return False


def pair_decompositions(z: BinString) -> List[Tuple[BinString, BinString]]:
    """Все (x, y) с Pair[x, y, z] — перебором по определению"""
    result = []
    lead = len(z) - len(z.lstrip("b"))
    for k in range(1, lead + 1):
        t = "b" * k
        if not z.endswith("a" + t) or not z.startswith(t + "a"):
            continue
        inner = z[k + 1:len(z) - k - 1]     # x a t a y
        sep = "a" + t + "a"
        for i in range(1, len(inner)):
            if inner.startswith(sep, i):
                x, y = inner[:i], inner[i + len(sep):]
                if x and y and is_pair(x, y, z):
                    result.append((x, y))
    return result


def decode_pair(z: BinString) -> Tuple[BinString, BinString]:
    """
    Ведущий максимальный блок b — кандидат t; внутри x·a·t·a·y
    должен быть ровно один блок длины ≥ |t|, и он равен t.
    """
    t = z[:len(z) - len(z.lstrip("b"))]
    k = len(t)
    if k == 0 or len(z) < 3 * k + 6:
        raise NotAPair(f"{z}: нет ведущей палочки или слишком короткий код")
    if not (z.startswith(t + "a") and z.endswith("a" + t)):
        raise NotAPair(f"{z}: не совпадает с шаблоном taxatayat")
    inner = z[k + 1:len(z) - k - 1]
    long_runs = [(s, e) for s, e in b_runs(inner) if e - s >= k]
    if len(long_runs) != 1 or long_runs[0][1] - long_runs[0][0] != k:
        raise NotAPair(f"{z}: средний маркер не найден однозначно")
    s, e = long_runs[0]
    x, y = inner[:s - 1], inner[e + 1:]
    if s < 2 or e + 1 >= len(inner) or inner[s - 1] != "a" or inner[e] != "a":
        raise NotAPair(f"{z}: пустая компонента пары")
    if not min_max_plus_t_b(t, x + "a" + y):
        raise NotAPair(f"{z}: палочка {t} не минимальна для x·a·y")
    return x, y
