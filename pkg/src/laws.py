"""
Каталог законов: именованные предикаты над кортежами строк.

Каждый закон — функция от переменных и домены этих переменных:
    "s"  — все строки Σ* длины ≤ L
    "t"  — b-палочки длины ≤ L
    "ae" — AE-строки длины ≤ L

run_law перебирает декартово произведение доменов и пишет в отчёт
каждый случай; контрпример — полное присваивание переменных.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import compress, product, starmap
from math import prod
from operator import not_
from typing import Callable, Dict, List, Optional, Tuple

from config import ARITY_CAPS, REPORT
from counting import (
    alpha, ae_formula_holds, almost_even_strings, beta, count_a, count_b,
    is_almost_even, nat_alpha, nat_beta,
)
from errors import NotAlmostEven
from report import VerificationReport
from strings_core import (
    BinString, DIGITS, addtally, all_strings, b_tallies, begins, ends,
    is_i0, is_substring, is_tally_a, is_tally_b, leq, lt, nat_to_tally,
    r_precedes, successor, tally_to_nat,
)
from tree_codec import (
    ae_splits, decode_tree, encode_tree, split_by_counts, split_children,
    subterm_codes,
)


@dataclass(frozen=True)
class Law:
    law_id: str
    family: str
    variables: Tuple[str, ...]
    domains: Tuple[str, ...]
    check: Callable[..., bool]
    description: str = ""

    @property
    def arity(self) -> int:
        return len(self.variables)


def _law(law_id: str, family: str, signature: str, check: Callable[..., bool],
         description: str = "") -> Law:
    """signature — "x:s y:t": имена переменных и их домены"""
    names, domains = [], []
    for item in signature.split():
        name, domain = item.split(":")
        names.append(name)
        domains.append(domain)
    return Law(law_id, family, tuple(names), tuple(domains), check, description)


# =============================================================================
# ВСПОМОГАТЕЛЬНОЕ
# =============================================================================

def predecessors(y: BinString) -> List[BinString]:
    """Все y1 с S(y1) = y"""
    result = []
    if y == "b":
        result.append("a")
    if len(y) > 1 and y.endswith("b"):
        result.append(y[:-1])
    return result


def addtally_holds(x: BinString, y: BinString, z: BinString) -> bool:
    """Addtally(x, y, z) буквально по определению, через предшественников"""
    if not (is_tally_b(x) and is_tally_b(y)):
        return z == "b"
    if x == "b" and z == y:
        return True
    if y == "b" and z == x:
        return True
    return any(is_tally_b(x1) and is_tally_b(y1) and z == x + y1
               for x1 in predecessors(x) for y1 in predecessors(y))


def _continues(x: BinString, y: BinString, z: BinString) -> bool:
    """∃w (wBz & y*w = x)"""
    return len(x) > len(y) and x.startswith(y) and begins(x[len(y):], z)


def _precedes_tail(x: BinString, y: BinString, z: BinString) -> bool:
    """∃w (wEy & w*z = x)"""
    return len(x) > len(z) and x.endswith(z) and ends(x[:-len(z)], y)


def _straddles(x: BinString, y: BinString, z: BinString) -> bool:
    """∃y1,z1 (y1Ey & z1Bz & x = y1*z1)"""
    return any(ends(x[:i], y) and begins(x[i:], z) for i in range(1, len(x)))


def _occurs_inside(x: BinString, w: BinString) -> bool:
    """∃x1,x2 (x1*x*x2 = w): вхождение не касается краёв"""
    return x in w[1:-1]


def _qt5(x: BinString) -> bool:
    if x in DIGITS:
        return True
    heads = any(x == d + x[1:] and x[1:] for d in DIGITS)
    tails = any(x == x[:-1] + d and x[:-1] for d in DIGITS)
    return bool(heads and tails)


def _implies(p: bool, q: bool) -> bool:
    return not p or q


# =============================================================================
# СТРОКИ
# =============================================================================

STRING_LAWS = [
    _law("QT1", "strings", "x:s y:s z:s",
         lambda x, y, z: (x + y) + z == x + (y + z),
         "ассоциативность"),
    _law("QT2", "strings", "x:s y:s",
         lambda x, y: x + y not in DIGITS),
    _law("QT3", "strings", "x:s y:s",
         lambda x, y: all(_implies(x + d == y + d, x == y)
                          and _implies(d + x == d + y, x == y) for d in DIGITS),
         "сокращение цифры слева и справа"),
    _law("QT4", "strings", "x:s y:s",
         lambda x, y: "a" + x != "b" + y and x + "a" != y + "b"),
    _law("QT5", "strings", "x:s", _qt5),
    _law("I0-total", "strings", "x:s", is_i0),
    _law("lt=R", "strings", "x:s y:s",
         lambda x, y: lt(x, y) == r_precedes(x, y)),

    _law("succ-keeps-tally", "strings", "y:s",
         lambda y: _implies(is_tally_b(y), is_tally_b(successor(y)))),
    _law("tally-cases", "strings", "y:s",
         lambda y: is_tally_b(y) == (y == "b" or any(
             is_tally_b(y1) for y1 in predecessors(y)))),
    _law("lt-then-succ-leq", "strings", "v:s u:s",
         lambda v, u: _implies(is_tally_b(v) and lt(u, v), leq(successor(u), v))),
    _law("succ-monotone", "strings", "x:s y:s",
         lambda x, y: _implies(is_tally_b(y), lt(x, y) == lt(successor(x), successor(y)))),

    _law("tally-concat-closed", "strings", "y:s z:s",
         lambda y, z: _implies(is_tally_b(y) and is_tally_b(z), is_tally_b(y + z))),
    _law("tally-comparable", "strings", "x:s z:s",
         lambda x, z: _implies(is_tally_b(x) and is_tally_b(z), leq(x, z) or leq(z, x))),
    _law("tally-b-commutes", "strings", "u:s",
         lambda u: _implies(is_tally_b(u), u + "b" == "b" + u)),
    _law("tally-succ-shift", "strings", "x:s y:s",
         lambda x, y: _implies(
             is_tally_b(x) and is_tally_b(y),
             successor(x) + y == x + successor(y) == successor(x + y))),
    _law("tally-concat-commutes", "strings", "u:s v:s",
         lambda u, v: _implies(is_tally_b(u) and is_tally_b(v), u + v == v + u)),

    _law("subp-transitive", "strings", "x:s y:s z:s",
         lambda x, y, z: not (x in y and y in z) or x in z),
    _law("no-self-suffix", "strings", "x:s", lambda x: not ends(x, x)),
    _law("no-self-embedding", "strings", "x:s", lambda x: not _occurs_inside(x, x)),
    _law("subp-antisymmetric", "strings", "x:s y:s",
         lambda x, y: _implies(is_substring(x, y) and is_substring(y, x), x == y)),
    _law("no-extension-inside", "strings", "x:s y:s",
         lambda x, y: not is_substring(x + y, x) and not is_substring(y + x, x)),

    _law("prefixes-linear", "strings", "x:s u:s v:s",
         lambda x, u, v: not (begins(u, x) and begins(v, x))
         or u == v or begins(u, v) or begins(v, u)),
    _law("prefix-of-concat", "strings", "y:s z:s x:s",
         lambda y, z, x: begins(x, y + z) == (
             begins(x, y) or x == y or _continues(x, y, z))),
    _law("prefix-of-bxy", "strings", "x:s y:s u:s",
         lambda x, y, u: not begins(u, "b" + x + y)
         or u == "b" or begins(u, "b" + x) or u == "b" + x
         or _continues(u, "b" + x, y)),
    _law("suffixes-linear", "strings", "x:s u:s v:s",
         lambda x, u, v: not (ends(u, x) and ends(v, x))
         or u == v or ends(u, v) or ends(v, u)),
    _law("suffix-of-concat", "strings", "y:s z:s x:s",
         lambda y, z, x: ends(x, y + z) == (
             ends(x, z) or x == z or _precedes_tail(x, y, z))),
    _law("inner-factor-of-concat", "strings", "y:s z:s x:s",
         lambda y, z, x: not _occurs_inside(x, y + z)
         or x in y or x in z or _straddles(x, y, z)),
    _law("factor-of-concat", "strings", "y:s z:s x:s",
         lambda y, z, x: x not in y + z
         or x == y + z or x in y or x in z
         or _precedes_tail(x, y, z) or _continues(x, y, z)
         or _straddles(x, y, z)),
    _law("factor-of-bxy", "strings", "y:s z:s x:s",
         lambda y, z, x: x not in "b" + y + z
         or x == "b" + y + z or x == "b" or x in y + z
         or _continues(x, "b", y + z)),
]


# =============================================================================
# ПАЛОЧКИ И СЛОЖЕНИЕ
# =============================================================================

def _leq_as_difference(x: BinString, y: BinString) -> bool:
    witness = any(addtally(z, x) == y for z in b_tallies(len(y)))
    return leq(x, y) == witness


def _strict_bound(x1: BinString, x2: BinString, y1: BinString, y2: BinString) -> bool:
    z1, z2 = addtally(x1, x2), addtally(y1, y2)
    return _implies(leq(x1, y1) and z1 == successor(z2), leq(successor(y2), x2))


TALLY_LAWS = [
    _law("addtally-single-valued", "tallies", "x:t y:t z:t",
         lambda x, y, z: not addtally_holds(x, y, z) or z == addtally(x, y)),
    _law("addtally-total", "tallies", "x:t y:t",
         lambda x, y: addtally_holds(x, y, addtally(x, y))),
    _law("addtally-default", "tallies", "x:s y:s",
         lambda x, y: is_tally_b(x) and is_tally_b(y) or (
             addtally(x, y) == "b" and addtally_holds(x, y, "b")),
         "вне палочек единственное значение — b"),
    _law("add-zero-right", "tallies", "x:t", lambda x: addtally_holds(x, "b", x)),
    _law("add-zero-left", "tallies", "y:t", lambda y: addtally_holds("b", y, y)),
    _law("add-one-right", "tallies", "x:t",
         lambda x: addtally_holds(x, "bb", successor(x))),
    _law("add-succ-right", "tallies", "x:t y:t z:t",
         lambda x, y, z: _implies(addtally_holds(x, y, z),
                                  addtally_holds(x, y + "b", z + "b"))),
    _law("add-monotone", "tallies", "x:t u:t v:t",
         lambda x, u, v: _implies(leq(u, v), leq(addtally(x, u), addtally(x, v)))),
    _law("add-one-left", "tallies", "y:t",
         lambda y: addtally("bb", y) == successor(y)),
    _law("add-succ-left", "tallies", "x:t y:t",
         lambda x, y: addtally(x + "b", y) == addtally(x, y) + "b"),
    _law("add-left-cancel", "tallies", "x:t y:t z:t",
         lambda x, y, z: _implies(addtally(x, y) == addtally(x, z), y == z)),
    _law("leq-as-difference", "tallies", "x:t y:t", _leq_as_difference),
    _law("add-commutative", "tallies", "x:t y:t",
         lambda x, y: addtally(x, y) == addtally(y, x)),
    _law("add-commutative-any", "tallies", "x:s y:s",
         lambda x, y: addtally(x, y) == addtally(y, x)),
    _law("add-associative", "tallies", "x:t y:t z:t",
         lambda x, y, z: addtally(addtally(x, y), z) == addtally(x, addtally(y, z))),
    _law("add-strict-bound", "tallies", "x1:t x2:t y1:t y2:t", _strict_bound,
         "x1+x2 = (y1+y2)+1 & x1 ≤ y1 → y2+1 ≤ x2"),
    _law("add-matches-nat", "tallies", "x:t y:t",
         lambda x, y: tally_to_nat(addtally(x, y)) == tally_to_nat(x) + tally_to_nat(y)),
]


# =============================================================================
# СЧЁТНЫЕ ФУНКЦИИ И AE
# =============================================================================

def _suffixes(x: BinString) -> List[BinString]:
    return [x[i:] for i in range(1, len(x))]


COUNTING_LAWS = [
    _law("alpha-recursion", "counting", "x:s",
         lambda x: alpha(x + "a") == successor(alpha(x)) and alpha(x + "b") == alpha(x)),
    _law("beta-recursion", "counting", "x:s",
         lambda x: beta(x + "b") == successor(beta(x)) and beta(x + "a") == beta(x)),
    _law("alpha-counts-a", "counting", "x:s", lambda x: alpha(x) == nat_alpha(x)),
    _law("beta-counts-b", "counting", "x:s", lambda x: beta(x) == nat_beta(x)),
    _law("alpha-additive", "counting", "x:s y:s",
         lambda x, y: alpha(x + y) == addtally(alpha(x), alpha(y))),
    _law("beta-additive", "counting", "x:s y:s",
         lambda x, y: beta(x + y) == addtally(beta(x), beta(y))),
    _law("alpha-of-b-tally", "counting", "x:s",
         lambda x: _implies(is_tally_b(x), alpha(x) == "b")),
    _law("beta-of-a-tally", "counting", "x:s",
         lambda x: _implies(is_tally_a(x), beta(x) == "b")),
    _law("beta-of-b-tally", "counting", "x:s",
         lambda x: _implies(is_tally_b(x), beta(x) == nat_to_tally(len(x)))),
    _law("ae-formula", "counting", "x:s",
         lambda x: is_almost_even(x) == ae_formula_holds(x)),
    _law("ae-shape", "counting", "x:ae",
         lambda x: x == "a" or (begins("b", x) and ends("aa", x))),
    _law("ae-suffix-heavy", "counting", "x:ae",
         lambda x: all(count_a(s) >= count_b(s) + 1 for s in _suffixes(x)),
         "каждый собственный конец AE-строки содержит больше a, чем b"),
    _law("ae-suffix-tally", "counting", "x:ae",
         lambda x: all(leq(successor(beta(s)), alpha(s)) for s in _suffixes(x)),
         "то же через палочки: S(β(x2)) ≤ α(x2)"),
    # x*y = u*v при x ≠ u означает, что один из x, u — собственное начало другого
    _law("ae-prefix-free", "counting", "x:ae u:ae",
         lambda x, u: x == u or not (begins(x, u) or begins(u, x))),
]


# =============================================================================
# КОД τ
# =============================================================================

def _decodes(x: BinString) -> bool:
    try:
        decode_tree(x)
    except NotAlmostEven:
        return False
    return True


CODEC_LAWS = [
    _law("ae-iff-decodes", "codec", "x:s", lambda x: is_almost_even(x) == _decodes(x)),
    _law("encode-decode", "codec", "x:ae", lambda x: encode_tree(decode_tree(x)) == x),
    _law("split-agrees", "codec", "x:ae",
         lambda x: x == "a" or split_by_counts(x) == split_children(x)),
    _law("split-unique", "codec", "x:ae",
         lambda x: x == "a" or len(ae_splits(x)) == 1),
    _law("substring-of-node", "codec", "x:ae w:ae",
         lambda x, w: w == "a" or is_substring(x, w) == (
             x == w or is_substring(x, split_children(w)[0])
             or is_substring(x, split_children(w)[1]))),
    _law("subterms-are-substrings", "codec", "x:ae w:ae",
         lambda x, w: (x in subterm_codes(w)) == is_substring(x, w)),
]


LAWS: Dict[str, List[Law]] = {
    "strings": STRING_LAWS,
    "tallies": TALLY_LAWS,
    "counting": COUNTING_LAWS,
    "codec": CODEC_LAWS,
}


def find_law(law_id: str) -> Law:
    for family in LAWS.values():
        for law in family:
            if law.law_id == law_id:
                return law
    raise KeyError(law_id)


# =============================================================================
# ПЕРЕБОР
# =============================================================================

@lru_cache(maxsize=None)
def domain_values(domain: str, bound: int) -> Tuple[BinString, ...]:
    if domain == "s":
        return tuple(all_strings(bound))
    if domain == "t":
        return tuple(b_tallies(bound))
    if domain == "ae":
        return tuple(almost_even_strings(bound))
    raise ValueError(f"неизвестный домен {domain!r}")


def effective_bound(law: Law, domain: str, bound: int) -> int:
    cap = ARITY_CAPS.get(domain, {}).get(law.arity)
    return bound if cap is None else min(bound, cap)


def run_law(law: Law, bound: int, report: VerificationReport,
            max_failures: Optional[int] = None) -> int:
    """
    Проверяет закон на всех кортежах; возвращает число нарушений.

    Кортежи и вердикты идут двумя произведениями в ногу, в цикл попадают
    только нарушения.
    """
    limit = REPORT["max_failures_per_law"] if max_failures is None else max_failures
    ranges = [domain_values(d, effective_bound(law, d, bound)) for d in law.domains]
    verdicts = map(not_, starmap(law.check, product(*ranges)))
    violations, seen = 0, prod(len(r) for r in ranges)
    for index, values in compress(enumerate(product(*ranges)), verdicts):
        violations += 1
        report.add(law.law_id, False, dict(zip(law.variables, values)))
        if violations >= limit:
            seen = index + 1
            break
    report.cases += seen - violations
    return violations


def replay(law_id: str, witness: Dict[str, BinString]) -> bool:
    """Повторная проверка контрпримера из отчёта"""
    law = find_law(law_id)
    return bool(law.check(*(witness[name] for name in law.variables)))
