"""
Тесты для строк, кодов деревьев и множеств, теорий и конечных моделей
"""
