"""
Исключения библиотеки.

Все ошибки кодирования/декодирования наследуются от CodingError,
поэтому CLI ловит один базовый класс и отвечает кодом выхода 2.
"""

from typing import Optional


class CodingError(Exception):
    """Базовая ошибка: вход вне области определения операции"""


class ParseError(CodingError):
    """Некорректный текст: строка над {a,b}, дерево "0"/"(s,t)" или S-выражение"""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (позиция {position})"
        super().__init__(message)


class NotAlmostEven(CodingError):
    """Строка не является τ-кодом дерева"""


class NotDecomposable(CodingError):
    """Разбиение x = b*y*z невозможно: x не AE или x = a"""


class NotASet(CodingError):
    """Строка не является кодом множества; condition — проваленное условие Env"""

    def __init__(self, message: str, condition: str):
        self.condition = condition
        super().__init__(f"{message} [условие {condition}]")


class NotAPair(CodingError):
    """Строка не является кодом пары"""


class NotATally(CodingError):
    """Ожидалась b-палочка (строка из одних b)"""


class LemmaHypothesis(CodingError):
    """Не выполнена посылка леммы о кодах (например, Appending)"""


class SortError(CodingError):
    """Формула не согласована с сигнатурой"""


class UnassignedVariable(CodingError):
    """При вычислении встретилась свободная переменная без значения"""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"переменная {name} не имеет значения")
