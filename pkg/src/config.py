"""
Конфигурация: алфавит, границы перебора, наборы проверок, отчёты
"""

# =============================================================================
# АЛФАВИТ
# =============================================================================

ALPHABET = {
    "digits": ("a", "b"),
    # Порядок перечисления: сначала длина, затем лексикографически (a < b)
    "order": "length-lex",
}


# =============================================================================
# ГРАНИЦЫ ПЕРЕБОРА (длина строк / число узлов)
# =============================================================================

LAW_BOUNDS = {
    "strings": 7,
    "tallies": 10,
    "counting": 13,
    "codec": 13,
    "trees": 6,          # внутренних узлов для roundtrip
    "tree_depth": 5,     # глубина для инъективности τ
    "pairs": 12,
    "pair_parts": 5,     # |x|, |y| для roundtrip пар
    "set_cores": 4,      # длина элементов для лемм о множествах
    "set_members": 3,    # длина элементов для roundtrip encode_set
    "recursion": 8,
    "certificates": 4,
    "interpretation": 11,
    "wt_depth": 3,
}

# Потолок длины строк для законов с 2-3 переменными (семейство strings идёт до 7 целиком)
ARITY_CAPS = {
    "s": {2: 8, 3: 7},
}


# =============================================================================
# НАБОРЫ ПРОВЕРОК (имена — подкоманды verify)
# =============================================================================

SUITES = {
    "strings-laws": {
        "description": "QT1–QT5, I₀, законы палочек, ⊆p, начал и концов",
        "bound_key": "strings",
        "families": ["strings"],
    },
    "tally-arith": {
        "description": "Addtally: функциональность, тождества, арифметика, согласие с натуральным сложением",
        "bound_key": "tallies",
        "families": ["tallies"],
    },
    "ae-census": {
        "description": "Число AE-строк длины 2k+1 = число Каталана, законы α/β и строения AE-строк",
        "bound_key": "counting",
        "families": ["counting"],
    },
    "codec": {
        "description": "τ: roundtrip, характеризация, единственность разбиения, подстроки узла",
        "bound_key": "codec",
        "families": ["codec"],
    },
    "set-coding": {
        "description": "Пары и множества: roundtrip, единственность Pair, леммы Singleton/Doubleton/Appending",
        "bound_key": "pairs",
        "families": [],
    },
    "recursion": {
        "description": "Рекурсия по строкам: функциональность, базис, шаг, сертификаты MinComp",
        "bound_key": "recursion",
        "families": [],
    },
    "interpretation": {
        "description": "Перевод T1–T4 и утверждения об AE-строках в Σ*",
        "bound_key": "interpretation",
        "families": [],
    },
    "wt-translation": {
        "description": "Перевод WT1/WT2 и инъективность τ",
        "bound_key": "interpretation",
        "families": [],
    },
    "finite-models": {
        "description": "Конечные модели WQT* и WQT для пулов термов",
        "bound_key": "wt_depth",
        "families": [],
    },
}


# =============================================================================
# КОНЕЧНЫЕ МОДЕЛИ
# =============================================================================

FINITE_MODEL = {
    # "proof" — домен {a, b} ∪ значения термов, * по умолчанию b
    # "factor" — замыкание по подстрокам и поглощающий элемент ⊥
    "construction": "proof",
    "wqt_star_construction": "factor",
    "exhaustive_depth": 1,
    "exhaustive_pool_size": 2,
    # одиночные пулы: каждый терм глубины ≤ single_term_depth
    "single_term_depth": 2,
    "random_pools": 80,
    "random_seed": 7,
    "pool_size": 4,
}


# =============================================================================
# ОТЧЁТЫ
# =============================================================================

REPORT = {
    "fields": ["suite", "bound", "cases", "failures", "elapsed_ms"],
    "failure_fields": ["law", "witness"],
    "verdict_pass": "проверено до {bound}",
    "verdict_fail": "нарушено законов: {count}",
    # Сколько контрпримеров сохранять на один закон
    "max_failures_per_law": 1,
}
