"""
Наборы проверок: законы строк, арифметика палочек, перепись AE-строк,
код τ, кодирование множеств и пар, рекурсия, интерпретации, конечные модели.

Каждый набор возвращает VerificationReport; контрпримеры — словари
переменная → строка, которые можно воспроизвести через библиотеку.
"""

import random
import time
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Tuple

from config import FINITE_MODEL, LAW_BOUNDS, SUITES
from counting import alpha, almost_even_strings, beta, catalan
from errors import CodingError
from finite_model import all_terms, build_model, check_axioms, closed_terms, random_pool
from laws import LAWS, run_law
from logic import (
    Evaluator, StringStructure, TreeStructure, axioms_QTplus, axioms_T, axioms_WQT,
    axioms_WQTstar, axioms_WT, lemma_formulas, translate_T, translate_WT, tree_to_cterm,
)
from logic.sexpr import infix_term
from report import Failure, VerificationReport
from set_coding import (
    append_codes, decode_pair, doubleton_code, encode_pair, encode_set, ladder_code,
    members, pair_decompositions, singleton_code,
)
from string_recursion import (
    ALPHA_SPEC, BETA_SPEC, RecursionSpec, build_comp_code, check_min_comp,
    eval_H, random_spec, run_recursion,
)
from strings_core import all_strings, max_b_run, string_key
from tree_codec import all_trees, decode_tree, encode_tree, format_tree, trees_of_depth


def _log(verbose: bool, message: str) -> None:
    if verbose:
        print(f"[Verify] {message}")


def _run_families(report: VerificationReport, families: List[str], bound: int,
                  verbose: bool) -> None:
    for family in families:
        for law in LAWS[family]:
            violations = run_law(law, bound, report)
            _log(verbose, f"{'✓' if not violations else '✗'} {law.law_id}")


def _safe(check: Callable[[], bool]) -> bool:
    """Исключение библиотеки при проверке считается нарушением"""
    try:
        return bool(check())
    except CodingError:
        return False


# =============================================================================
# СТРОКИ, ПАЛОЧКИ, ПЕРЕПИСЬ
# =============================================================================

def suite_strings_laws(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("strings-laws", bound)
    _run_families(report, SUITES["strings-laws"]["families"], bound, verbose)
    # QT⁺ как формулы: кванторы по строкам длины ≤ bound
    _check_formulas(report, axioms_QTplus(), StringStructure(bound), verbose)
    return report


def suite_tally_arith(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("tally-arith", bound)
    _run_families(report, SUITES["tally-arith"]["families"], bound, verbose)
    return report


def census(bound: int) -> List[Tuple[int, int, int]]:
    """(длина, число AE-строк, число Каталана) для нечётных длин ≤ bound"""
    counts: Dict[int, int] = {}
    for x in almost_even_strings(bound):
        counts[len(x)] = counts.get(len(x), 0) + 1
    return [(n, counts.get(n, 0), catalan((n - 1) // 2)) for n in range(1, bound + 1, 2)]


def suite_ae_census(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("ae-census", bound)
    for length, count, expected in census(bound):
        report.details.setdefault("census", []).append(
            {"length": length, "count": count, "catalan": expected})
        report.add(f"census[{length}]", count == expected,
                   {"length": str(length), "count": str(count), "catalan": str(expected)})
        _log(verbose, f"длина {length}: {count} (C = {expected})")
    _run_families(report, SUITES["ae-census"]["families"], bound, verbose)
    return report


# =============================================================================
# КОД τ
# =============================================================================

def suite_codec(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("codec", bound)
    for t in all_trees(LAW_BOUNDS["trees"]):
        ok = _safe(lambda: decode_tree(encode_tree(t)) == t)
        report.add("decode-encode", ok, {"t": format_tree(t)})
    _run_families(report, SUITES["codec"]["families"], bound, verbose)
    return report


def injectivity(depth: int, report: VerificationReport) -> None:
    """τ инъективно на деревьях глубины ≤ depth"""
    seen: Dict[str, str] = {}
    for t in trees_of_depth(depth):
        code = encode_tree(t)
        text = format_tree(t)
        clash = seen.get(code)
        report.add("tau-injective", clash is None or clash == text,
                   {"s": clash or text, "t": text})
        seen.setdefault(code, text)


# =============================================================================
# МНОЖЕСТВА И ПАРЫ
# =============================================================================

def suite_set_coding(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("set-coding", bound)

    parts = list(all_strings(LAW_BOUNDS["pair_parts"]))
    for x, y in product(parts, repeat=2):
        report.add("pair-roundtrip", _safe(lambda: decode_pair(encode_pair(x, y)) == (x, y)),
                   {"x": x, "y": y})
    _log(verbose, "roundtrip пар")

    for z in all_strings(bound):
        report.add("pair-unique", len(pair_decompositions(z)) <= 1, {"z": z})
    _log(verbose, "единственность Pair")

    cores = list(all_strings(LAW_BOUNDS["set_cores"]))
    for u in all_strings(LAW_BOUNDS["set_cores"] + 1):
        report.add("singleton", _safe(lambda: members(singleton_code(u)) == {u}), {"u": u})
    for u, v in product(cores, repeat=2):
        if u != v:
            report.add("doubleton", _safe(lambda: members(doubleton_code(u, v)) == {u, v}),
                       {"u": u, "v": v})
    for left, right in _disjoint_splits(cores, 3):
        x = encode_set(left).raw
        ok = _safe(lambda: members(append_codes(x, _code_above(right, x)))
                   == set(left) | set(right))
        report.add("appending", ok, {"x": ",".join(left), "y": ",".join(right)})
    _log(verbose, "леммы Singleton / Doubleton / Appending")

    small = list(all_strings(LAW_BOUNDS["set_members"]))
    for size in range(1, 4):
        for ws in combinations(small, size):
            report.add("set-roundtrip", _safe(lambda: members(encode_set(ws).raw) == set(ws)),
                       {"w": ",".join(ws)})
    return report


def _code_above(cores, x: str) -> str:
    """Код множества cores, первый маркер которого длиннее конверта x"""
    ordered = sorted(cores, key=string_key)
    base = 1 + max([max_b_run(x)] + [max_b_run("a" + w + "a") for w in ordered])
    return ladder_code(ordered, base)


def _disjoint_splits(cores: List[str], limit: int):
    """Пары непересекающихся непустых X, Y с |X| + |Y| ≤ limit"""
    for total in range(2, limit + 1):
        for chosen in combinations(cores, total):
            for k in range(1, total):
                for left in combinations(chosen, k):
                    right = tuple(c for c in chosen if c not in left)
                    yield left, right


# =============================================================================
# РЕКУРСИЯ
# =============================================================================

def _specs() -> List[RecursionSpec]:
    return [ALPHA_SPEC, BETA_SPEC] + [random_spec(seed) for seed in range(3)]


def suite_recursion(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("recursion", bound)

    for m in all_strings(bound):
        report.add("alpha-oracle", eval_H(m, alpha(m), ALPHA_SPEC), {"m": m})
        report.add("beta-oracle", eval_H(m, beta(m), BETA_SPEC), {"m": m})
    _log(verbose, "согласие с α и β")

    functional_bound = min(bound, 6)
    for spec in _specs():
        for digit, value in (("a", spec.p), ("b", spec.q)):
            for y in all_strings(3):
                report.add(f"base[{spec.name}]", eval_H(digit, y, spec) == (y == value),
                           {"m": digit, "y": y})
        for m in all_strings(functional_bound):
            h = run_recursion(spec, m)
            candidates = all_strings(len(h) + 1)
            hits = sum(1 for y in candidates if eval_H(m, y, spec))
            report.add(f"functional[{spec.name}]", hits == 1, {"m": m})
            for digit, step in (("a", spec.f1), ("b", spec.f2)):
                z = run_recursion(spec, m + digit)
                ok = eval_H(m, h, spec) and eval_H(m + digit, z, spec) and z == step(m, h)
                report.add(f"step-{digit}[{spec.name}]", ok, {"m": m, "u": h, "z": z})
    _log(verbose, "функциональность, базис, шаг")

    for spec in (ALPHA_SPEC, BETA_SPEC):
        for m in all_strings(LAW_BOUNDS["certificates"]):
            cert = build_comp_code(spec, m)
            report.add(f"certificate[{spec.name}]", check_min_comp(cert.raw, m, spec),
                       {"m": m})
            for z, value in cert.pairs.items():
                dropped = {k: v for k, v in cert.pairs.items() if k != z}
                raw = encode_set(encode_pair(k, v) for k, v in dropped.items()).raw
                report.add(f"mutation-drop[{spec.name}]", not check_min_comp(raw, m, spec),
                           {"m": m, "z": z})
                changed = dict(cert.pairs)
                changed[z] = value + "a"
                raw = encode_set(encode_pair(k, v) for k, v in changed.items()).raw
                report.add(f"mutation-value[{spec.name}]", not check_min_comp(raw, m, spec),
                           {"m": m, "z": z})
    _log(verbose, "сертификаты MinComp")
    return report


# =============================================================================
# ИНТЕРПРЕТАЦИИ
# =============================================================================

def _check_formulas(report: VerificationReport, axioms, structure, verbose: bool,
                    prefix: str = "") -> None:
    evaluator = Evaluator(structure)
    for axiom in axioms:
        ok = evaluator.evaluate(axiom.formula)
        witness = None
        if not ok:
            found = evaluator.counterexample(axiom.formula) or {}
            witness = {k: structure.describe(v) for k, v in found.items()}
        report.add(prefix + axiom.label, ok, witness)
        _log(verbose, f"{'✓' if ok else '✗'} {prefix}{axiom.label}")


def _translated(axioms, translate):
    return [type(ax)(ax.label, translate(ax.formula)) for ax in axioms]


def suite_interpretation(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("interpretation", bound)
    _check_formulas(report, axioms_T(), TreeStructure(bound), verbose, prefix="trees:")
    strings = StringStructure(bound)
    _check_formulas(report, _translated(axioms_T(), translate_T), strings, verbose)
    _check_formulas(report, lemma_formulas(), strings, verbose)
    return report


def suite_wt_translation(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("wt-translation", bound)
    axioms = axioms_WT(LAW_BOUNDS["wt_depth"])
    _check_formulas(report, _translated(axioms, translate_WT), StringStructure(bound), verbose)
    injectivity(LAW_BOUNDS["tree_depth"], report)
    _log(verbose, "инъективность τ")

    # различные деревья попадают в различные классы модели
    trees = trees_of_depth(2)
    for s, t in combinations(trees, 2):
        model = build_model([tree_to_cterm(s), tree_to_cterm(t)])
        ok = model.class_of(encode_tree(s)) != model.class_of(encode_tree(t))
        report.add("distinct-classes", ok, {"s": format_tree(s), "t": format_tree(t)})
    return report


# =============================================================================
# КОНЕЧНЫЕ МОДЕЛИ
# =============================================================================

def _pool_text(pool) -> str:
    return ", ".join(infix_term(t) for t in pool)


def _merge_pool(report: VerificationReport, sub: VerificationReport, pool_text: str) -> None:
    report.cases += sub.cases
    for failure in sub.failures:
        report.failures.append(Failure(failure.law, {**failure.witness, "pool": pool_text}))


def check_wqt_star_pool(pool, construction: Optional[str] = None) -> VerificationReport:
    """WQT*1–9 (и дословная WQT*9) для пула в модели, построенной по своим термам"""
    instances = axioms_WQTstar(pool, include_literal=True)
    model = build_model(closed_terms(instances),
                        construction or FINITE_MODEL["wqt_star_construction"])
    return check_axioms(model, instances)


def check_wqt_pool(trees, construction: Optional[str] = None) -> VerificationReport:
    instances = axioms_WQT(trees)
    model = build_model(closed_terms(instances), construction or FINITE_MODEL["construction"])
    return check_axioms(model, instances)


def finite_model_pools(depth: int) -> List[list]:
    """
    Пулы для проверки WQT*: все малые пулы из термов глубины ≤ exhaustive_depth,
    все одиночные термы глубины ≤ single_term_depth и случайные пулы глубины ≤ depth
    """
    small = all_terms(FINITE_MODEL["exhaustive_depth"])
    pools = [[]]
    for size in range(1, FINITE_MODEL["exhaustive_pool_size"] + 1):
        pools.extend(list(c) for c in combinations(small, size))
    seen = {tuple(pool) for pool in pools}
    for t in all_terms(FINITE_MODEL["single_term_depth"]):
        if (t,) not in seen:
            pools.append([t])
    rng = random.Random(FINITE_MODEL["random_seed"])
    for _ in range(FINITE_MODEL["random_pools"]):
        pools.append(random_pool(rng, FINITE_MODEL["pool_size"], depth))
    return pools


def suite_finite_models(bound: int, verbose: bool = False) -> VerificationReport:
    report = VerificationReport("finite-models", bound)
    for pool in finite_model_pools(bound):
        _merge_pool(report, check_wqt_star_pool(pool), _pool_text(pool))
    _log(verbose, "WQT*: все пулы")

    trees = trees_of_depth(2)
    for size in range(0, 3):
        for chosen in combinations(trees, size):
            sub = check_wqt_pool(list(chosen))
            _merge_pool(report, sub, ", ".join(format_tree(t) for t in chosen))
    _log(verbose, "WQT: пулы деревьев")
    return report


# =============================================================================
# ДИСПЕТЧЕР
# =============================================================================

SUITE_RUNNERS: Dict[str, Callable[..., VerificationReport]] = {
    "strings-laws": suite_strings_laws,
    "tally-arith": suite_tally_arith,
    "ae-census": suite_ae_census,
    "codec": suite_codec,
    "set-coding": suite_set_coding,
    "recursion": suite_recursion,
    "interpretation": suite_interpretation,
    "wt-translation": suite_wt_translation,
    "finite-models": suite_finite_models,
}

SUITE_NAMES = list(SUITE_RUNNERS) + ["all"]


def default_bound(name: str) -> int:
    return LAW_BOUNDS[SUITES[name]["bound_key"]]


def run_suite(name: str, bound: Optional[int] = None,
              verbose: bool = False) -> VerificationReport:
    if name == "all":
        return run_all(verbose=verbose)
    if name not in SUITE_RUNNERS:
        raise KeyError(f"неизвестный набор {name!r}")
    if bound is None:
        bound = default_bound(name)
    if bound < 1:
        raise ValueError(f"граница должна быть положительной: {bound}")
    _log(verbose, f"{name}: граница {bound}")
    start = time.perf_counter()
    report = SUITE_RUNNERS[name](bound, verbose)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    report.sort_failures()
    _log(verbose, f"{name}: {report.cases - len(report.failures)}/{report.cases}")
    return report


def run_all(verbose: bool = False) -> VerificationReport:
    """Все наборы с границами по умолчанию; законы помечаются именем набора"""
    total = VerificationReport("all", 0)
    for name in SUITE_RUNNERS:
        report = run_suite(name, verbose=verbose)
        total.cases += report.cases
        total.bound = max(total.bound, report.bound)
        total.elapsed_ms += report.elapsed_ms
        total.failures.extend(Failure(f"{name}/{f.law}", f.witness) for f in report.failures)
    total.sort_failures()
    return total
