"""
Текстовый формат формул: S-выражения.

    атомы:    (= s t) (subt s t) (substar s t) (subp s t) (dom x) (tstar x)
    связки:   (not φ) (and φ …) (or φ …) (imp φ ψ) (iff φ ψ)
    кванторы: (forall (x y) φ) (exists (x) φ) (exists1 (x y) φ)
    термы:    (zero) (a) (b) (pair s t) (star s t) (succ s), переменные — символы

Печать однострочная и канонична: parse(format(φ)) == φ.
Комментарии — от ';' до конца строки.
"""

import re
from typing import List, Tuple, Union

from errors import ParseError
from .base import (
    And, App, Atom, Const, Exists, ExistsUnique, ForAll, Formula, Iff, Imp,
    Not, ObjTerm, Or, Succ, Unary, Var, BINARY_PREDS, UNARY_PREDS,
)


SExpr = Union[str, list]

_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_SYMBOL = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")

_BINDERS = {"forall": ForAll, "exists": Exists, "exists1": ExistsUnique}
_BINDER_NAMES = {ForAll: "forall", Exists: "exists", ExistsUnique: "exists1"}
_CONSTS = ("zero", "a", "b")


# =============================================================================
# ЧТЕНИЕ
# =============================================================================

def _tokenize(text: str) -> List[Tuple[str, int]]:
    tokens = []
    for line_start, line in _lines_with_offsets(text):
        code = line.split(";", 1)[0]
        for m in _TOKEN.finditer(code):
            tokens.append((m.group(), line_start + m.start()))
    return tokens


def _lines_with_offsets(text: str):
    offset = 0
    for line in text.splitlines(keepends=True):
        yield offset, line
        offset += len(line)


def read_sexpr(text: str) -> SExpr:
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("пустой ввод", text)
    expr, pos = _read(tokens, 0, text)
    if pos != len(tokens):
        raise ParseError("лишний текст после выражения", text, tokens[pos][1])
    return expr


def _read(tokens: List[Tuple[str, int]], pos: int, text: str) -> Tuple[SExpr, int]:
    if pos >= len(tokens):
        raise ParseError("неожиданный конец ввода", text, len(text))
    token, offset = tokens[pos]
    if token == ")":
        raise ParseError("лишняя ')'", text, offset)
    if token != "(":
        return token, pos + 1
    items = []
    pos += 1
    while True:
        if pos >= len(tokens):
            raise ParseError("не закрыта '('", text, offset)
        if tokens[pos][0] == ")":
            return items, pos + 1
        item, pos = _read(tokens, pos, text)
        items.append(item)


def _symbol(expr: SExpr, text: str) -> str:
    if not isinstance(expr, str) or not _SYMBOL.match(expr):
        raise ParseError(f"ожидалось имя переменной, получено {expr!r}", text)
    return expr


def _to_term(expr: SExpr, text: str) -> ObjTerm:
    if isinstance(expr, str):
        return Var(_symbol(expr, text))
    if not expr:
        raise ParseError("пустой список вместо терма", text)
    head = expr[0]
    if head in _CONSTS and len(expr) == 1:
        return Const(head)
    if head in ("pair", "star") and len(expr) == 3:
        return App(head, _to_term(expr[1], text), _to_term(expr[2], text))
    if head == "succ" and len(expr) == 2:
        return Succ(_to_term(expr[1], text))
    raise ParseError(f"неизвестный терм {format_sexpr(expr)}", text)


def _to_formula(expr: SExpr, text: str) -> Formula:
    if isinstance(expr, str) or not expr:
        raise ParseError(f"ожидалась формула, получено {expr!r}", text)
    head, args = expr[0], expr[1:]
    if head in BINARY_PREDS and len(args) == 2:
        return Atom(head, _to_term(args[0], text), _to_term(args[1], text))
    if head in UNARY_PREDS and len(args) == 1:
        return Unary(head, _to_term(args[0], text))
    if head == "not" and len(args) == 1:
        return Not(_to_formula(args[0], text))
    if head in ("and", "or") and args:
        parts = tuple(_to_formula(a, text) for a in args)
        return And(parts) if head == "and" else Or(parts)
    if head in ("imp", "iff") and len(args) == 2:
        left, right = _to_formula(args[0], text), _to_formula(args[1], text)
        return Imp(left, right) if head == "imp" else Iff(left, right)
    if head in _BINDERS and len(args) == 2:
        names = args[0]
        if isinstance(names, str) or not names:
            raise ParseError(f"{head}: ожидался непустой список переменных", text)
        vars_ = tuple(_symbol(n, text) for n in names)
        return _BINDERS[head](vars_, _to_formula(args[1], text))
    raise ParseError(f"неизвестная форма {format_sexpr(expr)}", text)


def parse_formula(text: str) -> Formula:
    return _to_formula(read_sexpr(text), text)


def parse_term(text: str) -> ObjTerm:
    return _to_term(read_sexpr(text), text)


# =============================================================================
# ПЕЧАТЬ
# =============================================================================

def format_sexpr(expr: SExpr) -> str:
    if isinstance(expr, str):
        return expr
    return "(" + " ".join(format_sexpr(e) for e in expr) + ")"


def format_term(t: ObjTerm) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return f"({t.which})"
    if isinstance(t, App):
        return f"({t.op} {format_term(t.left)} {format_term(t.right)})"
    if isinstance(t, Succ):
        return f"(succ {format_term(t.arg)})"
    raise TypeError(f"не терм: {t!r}")


def format_formula(phi: Formula) -> str:
    if isinstance(phi, Atom):
        return f"({phi.pred} {format_term(phi.left)} {format_term(phi.right)})"
    if isinstance(phi, Unary):
        return f"({phi.pred} {format_term(phi.arg)})"
    if isinstance(phi, Not):
        return f"(not {format_formula(phi.arg)})"
    if isinstance(phi, (And, Or)):
        head = "and" if isinstance(phi, And) else "or"
        return f"({head} " + " ".join(format_formula(a) for a in phi.args) + ")"
    if isinstance(phi, (Imp, Iff)):
        head = "imp" if isinstance(phi, Imp) else "iff"
        return f"({head} {format_formula(phi.left)} {format_formula(phi.right)})"
    if isinstance(phi, (ForAll, Exists, ExistsUnique)):
        names = " ".join(phi.vars)
        return f"({_BINDER_NAMES[type(phi)]} ({names}) {format_formula(phi.body)})"
    raise TypeError(f"не формула: {phi!r}")


def infix(phi: Formula) -> str:
    """Запись в привычной математической нотации (только для вывода)"""
    if isinstance(phi, Atom):
        sym = {"=": "=", "subt": "⊑", "substar": "⊑*", "subp": "⊆p"}[phi.pred]
        return f"{infix_term(phi.left)} {sym} {infix_term(phi.right)}"
    if isinstance(phi, Unary):
        name = "Dom" if phi.pred == "dom" else "T*"
        return f"{name}({infix_term(phi.arg)})"
    if isinstance(phi, Not):
        return f"¬({infix(phi.arg)})"
    if isinstance(phi, (And, Or)):
        sep = " & " if isinstance(phi, And) else " ∨ "
        return "(" + sep.join(infix(a) for a in phi.args) + ")"
    if isinstance(phi, Imp):
        return f"({infix(phi.left)} → {infix(phi.right)})"
    if isinstance(phi, Iff):
        return f"({infix(phi.left)} ↔ {infix(phi.right)})"
    sym = {ForAll: "∀", Exists: "∃", ExistsUnique: "∃!"}[type(phi)]
    return f"{sym}{','.join(phi.vars)} {infix(phi.body)}"


def infix_term(t: ObjTerm) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return "0" if t.which == "zero" else t.which
    if isinstance(t, Succ):
        return f"S({infix_term(t.arg)})"
    if t.op == "pair":
        return f"({infix_term(t.left)},{infix_term(t.right)})"
    left, right = infix_term(t.left), infix_term(t.right)
    if isinstance(t.right, App) and t.right.op == "star":
        right = f"({right})"
    return f"{left}*{right}"


# =============================================================================
# ИНФИКСНЫЕ ТЕРМЫ 𝓛_C
# =============================================================================

def parse_infix_term(text: str) -> ObjTerm:
    """
    Обратное к infix_term для замкнутых термов a, b, *: "b*(a*a)".
    Цепочка без скобок читается слева: a*b*a = (a*b)*a.
    """
    source = "".join(text.split())
    if not source:
        raise ParseError("пустой терм", text)
    term, pos = _infix_chain(source, 0, text)
    if pos != len(source):
        raise ParseError("лишние символы после терма", text, pos)
    return term


def _infix_chain(source: str, pos: int, text: str) -> Tuple[ObjTerm, int]:
    term, pos = _infix_atom(source, pos, text)
    while pos < len(source) and source[pos] == "*":
        right, pos = _infix_atom(source, pos + 1, text)
        term = App("star", term, right)
    return term, pos


def _infix_atom(source: str, pos: int, text: str) -> Tuple[ObjTerm, int]:
    if pos >= len(source):
        raise ParseError("неожиданный конец терма", text, pos)
    ch = source[pos]
    if ch in ("a", "b"):
        return Const(ch), pos + 1
    if ch != "(":
        raise ParseError(f"ожидалось a, b или '(', найдено {ch!r}", text, pos)
    term, pos = _infix_chain(source, pos + 1, text)
    if pos >= len(source) or source[pos] != ")":
        raise ParseError("ожидалась ')'", text, pos)
    return term, pos + 1
