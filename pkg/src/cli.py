#!/usr/bin/env python3
"""
Командная строка: кодирование деревьев, строк, пар и множеств,
рекурсия, формулы, конечные модели и наборы проверок.

Коды выхода: 0 — успех, 1 — нарушены проверяемые законы, 2 — ошибка ввода.
"""

import argparse
import sys
from typing import List, Optional

from rich.console import Console
from rich.table import Table
from rich.text import Text

from counting import alpha, beta, is_almost_even
from config import FINITE_MODEL
from errors import CodingError
from finite_model import CONSTRUCTIONS, build_model, check_axioms, closed_terms, format_model
from logic import (
    THEORIES, axioms_WQTstar, eval_bounded, evaluate, format_formula, infix,
    parse_formula, parse_infix_term, translate_T, translate_WT,
)
from logic.evaluate import TreeStructure
from report import VerificationReport
from set_coding import (
    decode_pair, encode_pair, encode_set, format_set, is_pair, members, parse_set,
)
from string_recursion import (
    SPECS, build_comp_code, certificate_summary, check_min_comp, comp_clauses,
    run_recursion,
)
from strings_core import parse_string, string_key
from tree_codec import (
    decode_tree, encode_tree, format_tree, parse_tree, subterm_codes,
)
from verify import SUITE_NAMES, census, run_suite


console = Console()


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _read_formula(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    return parse_formula(text)


# =============================================================================
# ПОДКОМАНДЫ
# =============================================================================

def cmd_tree(args) -> int:
    if args.action == "encode":
        print(encode_tree(parse_tree(args.arg)))
    elif args.action == "decode":
        print(format_tree(decode_tree(parse_string(args.arg))))
    elif args.action == "parse":
        print(format_tree(parse_tree(args.arg)))
    else:
        codes = sorted(subterm_codes(parse_string(args.arg)), key=string_key)
        for code in codes:
            print(f"{code}\t{format_tree(decode_tree(code))}")
    return 0


def cmd_str(args) -> int:
    x = parse_string(args.string)
    if args.action == "alpha":
        print(alpha(x))
    elif args.action == "beta":
        print(beta(x))
    else:
        print(_bool(is_almost_even(x)))
    return 0


def cmd_pair(args) -> int:
    if args.action == "encode":
        x, y = (parse_string(s) for s in args.args_)
        print(encode_pair(x, y))
    elif args.action == "decode":
        z = parse_string(args.args_[0])
        x, y = decode_pair(z)
        print(f"{x} {y}")
    else:
        x, y, z = (parse_string(s) for s in args.args_)
        print(_bool(is_pair(x, y, z)))
    return 0


def cmd_set(args) -> int:
    if args.action == "encode":
        print(encode_set(parse_string(w) for w in args.args_).raw)
        return 0
    z = parse_string(args.args_[0])
    if args.action == "members":
        print(format_set(members(z)))
        return 0
    code = parse_set(z)
    table = Table(title=f"Кадры {z}")
    for column in ("вид", "t1", "элемент", "t2", "позиция"):
        table.add_column(column)
    for frame in code.frames:
        table.add_row(frame.kind, frame.t1, frame.core, frame.t2, str(frame.offset))
    console.print(table)
    print(f"конверт: {code.envelope or '—'}")
    return 0


def cmd_rec(args) -> int:
    spec = SPECS[args.spec]
    m = parse_string(args.m)
    if args.action == "run":
        print(run_recursion(spec, m))
        return 0
    if args.action == "certify":
        cert = build_comp_code(spec, m)
        print(cert.raw)
        table = Table(title=f"{spec.name}: сертификат для {m} (длина {cert.size})")
        table.add_column("z")
        table.add_column("h(z)")
        for z, value in certificate_summary(cert):
            table.add_row(z, value)
        console.print(table)
        return 0
    u = parse_string(args.certificate)
    for clause, ok in comp_clauses(u, m, spec).items():
        print(f"{'✓' if ok else '✗'} {clause}")
    print(f"MinComp: {_bool(check_min_comp(u, m, spec))}")
    return 0


def cmd_logic(args) -> int:
    if args.action == "axioms":
        return _print_axioms(args)
    phi = _read_formula(args.file)
    if args.action == "parse":
        print(format_formula(phi))
    elif args.action == "translate-t":
        print(format_formula(translate_T(phi)))
    elif args.action == "translate-wt":
        print(format_formula(translate_WT(phi)))
    elif args.action == "infix":
        print(infix(phi))
    else:
        if args.structure == "trees":
            value = evaluate(phi, TreeStructure(args.bound))
        else:
            value = eval_bounded(phi, args.bound)
        print(_bool(value))
        console.print(f"[dim]проверено до {args.bound}[/dim]")
    return 0


def _print_axioms(args) -> int:
    theory = THEORIES[args.theory]
    if theory.param == "depth":
        axioms = theory.generate(args.depth)
    elif theory.param == "trees":
        axioms = theory.generate([parse_tree(t) for t in args.pool])
    elif theory.param == "terms":
        axioms = theory.generate([parse_infix_term(t) for t in args.pool])
    else:
        axioms = theory.generate()
    for axiom in axioms:
        print(f"{axiom.label}\t{format_formula(axiom.formula)}")
    return 0


def cmd_model(args) -> int:
    pool = [parse_infix_term(t) for t in args.terms]
    if not args.check:
        model = build_model(pool, args.construction)
        console.print(format_model(model), markup=False, highlight=False)
        return 0
    instances = axioms_WQTstar(pool)
    model = build_model(closed_terms(instances),
                        args.construction or FINITE_MODEL["wqt_star_construction"])
    console.print(format_model(model), markup=False, highlight=False)
    report = check_axioms(model, instances, verbose=args.verbose, suite="model-check")
    _print_report(report)
    return 0 if report.passed else 1


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.bound, verbose=args.verbose and not args.json)
    if args.json:
        print(report.to_json())
    else:
        if args.suite == "ae-census":
            _print_census(report.bound)
        _print_report(report)
    return 0 if report.passed else 1


# =============================================================================
# ВЫВОД
# =============================================================================

def _print_census(bound: int) -> None:
    table = Table(title="AE-строки по длинам")
    for column in ("длина", "число", "Каталан"):
        table.add_column(column, justify="right")
    for length, count, expected in census(bound):
        table.add_row(str(length), str(count), str(expected))
    console.print(table)


def _print_report(report: VerificationReport) -> None:
    if report.failures:
        table = Table(title=f"Нарушения: {report.suite}")
        table.add_column("закон")
        table.add_column("контрпример")
        for failure in report.failures:
            witness = ", ".join(f"{k}={v}" for k, v in failure.witness.items())
            table.add_row(Text(failure.law), Text(witness))
        console.print(table)
    mark = "✓" if report.passed else "✗"
    passed = report.cases - len(report.failures)
    console.print(f"{mark} {report.suite}: {report.verdict()} ({report.elapsed_ms} мс)",
                  markup=False)
    console.print(f"РЕЗУЛЬТАТ: {passed}/{report.cases}", markup=False)


# =============================================================================
# РАЗБОР АРГУМЕНТОВ
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Деревья, строки и интерпретации теорий",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Примеры:
  python src/cli.py tree decode bbaabaa           # ((0,0),(0,0))
  python src/cli.py str ae ab                     # false
  python src/cli.py pair encode a a               # baaabaaab
  python src/cli.py model build "b*(a*a)" --check
  python src/cli.py verify ae-census --bound 13 --json
        """
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tree = sub.add_parser("tree", help="код τ")
    tree.add_argument("action", choices=["encode", "decode", "parse", "subterms"])
    tree.add_argument("arg")
    tree.set_defaults(handler=cmd_tree)

    string = sub.add_parser("str", help="α, β и 𝒜ℰ")
    string.add_argument("action", choices=["alpha", "beta", "ae"])
    string.add_argument("string")
    string.set_defaults(handler=cmd_str)

    pair = sub.add_parser("pair", help="код пары")
    pair.add_argument("action", choices=["encode", "decode", "check"])
    pair.add_argument("args_", nargs="+", metavar="string")
    pair.set_defaults(handler=cmd_pair)

    set_ = sub.add_parser("set", help="код множества")
    set_.add_argument("action", choices=["encode", "members", "parse"])
    set_.add_argument("args_", nargs="+", metavar="string")
    set_.set_defaults(handler=cmd_set)

    rec = sub.add_parser("rec", help="рекурсия по строкам")
    rec.add_argument("action", choices=["run", "certify", "check"])
    rec.add_argument("spec", choices=sorted(SPECS))
    rec.add_argument("m")
    rec.add_argument("certificate", nargs="?")
    rec.set_defaults(handler=cmd_rec)

    logic = sub.add_parser("logic", help="формулы и теории")
    logic.add_argument("action", choices=["parse", "infix", "translate-t", "translate-wt",
                                          "eval", "axioms"])
    logic.add_argument("file", nargs="?", help="файл с формулой или имя теории для axioms")
    logic.add_argument("--bound", type=int, default=7)
    logic.add_argument("--structure", choices=["strings", "trees"], default="strings")
    logic.add_argument("--depth", type=int, default=1)
    logic.add_argument("--pool", nargs="*", default=[])
    logic.set_defaults(handler=cmd_logic)

    model = sub.add_parser("model", help="конечная модель для пула термов")
    model.add_argument("action", choices=["build"])
    model.add_argument("terms", nargs="*")
    model.add_argument("--construction", choices=list(CONSTRUCTIONS), default=None)
    model.add_argument("--check", action="store_true", help="проверить экземпляры WQT*")
    model.add_argument("--verbose", "-v", action="store_true")
    model.set_defaults(handler=cmd_model)

    verify = sub.add_parser("verify", help="наборы проверок")
    verify.add_argument("suite", choices=SUITE_NAMES)
    verify.add_argument("--bound", type=int, default=None)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("--verbose", "-v", action="store_true")
    verify.set_defaults(handler=cmd_verify)
    return parser


def _check_arity(parser: argparse.ArgumentParser, args) -> None:
    expected = {
        ("pair", "encode"): 2, ("pair", "decode"): 1, ("pair", "check"): 3,
        ("set", "members"): 1, ("set", "parse"): 1,
    }
    count = expected.get((args.command, getattr(args, "action", None)))
    if count is not None and len(args.args_) != count:
        parser.error(f"{args.command} {args.action}: ожидалось аргументов: {count}")
    if args.command == "rec" and args.action == "check" and not args.certificate:
        parser.error("rec check: нужен сертификат")
    if args.command == "logic":
        if not args.file:
            parser.error("logic: нужен файл с формулой или имя теории")
        if args.action == "axioms":
            if args.file not in THEORIES:
                parser.error(f"неизвестная теория {args.file!r}; есть: {', '.join(THEORIES)}")
            args.theory = args.file


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_arity(parser, args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    try:
        return args.handler(args)
    except (CodingError, ValueError, OSError) as e:
        print(f"✗ ОШИБКА: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
