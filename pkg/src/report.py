"""
Отчёт о проверке набора законов.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from config import REPORT


@dataclass
class Failure:
    """Нарушенный закон и присваивание, на котором он ложен"""
    law: str
    witness: Dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return {"law": self.law, "witness": dict(self.witness)}


@dataclass
class VerificationReport:
    suite: str
    bound: int
    cases: int = 0
    failures: List[Failure] = field(default_factory=list)
    elapsed_ms: int = 0
    # дополнительные поля JSON после основных, например перепись AE-строк
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, law: str, ok: bool, witness: Optional[Dict[str, str]] = None) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(Failure(law, witness or {}))

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)
        self.bound = max(self.bound, other.bound)

    def sort_failures(self) -> None:
        self.failures.sort(key=lambda f: (f.law, sorted(f.witness.items())))

    def verdict(self) -> str:
        if self.passed:
            return REPORT["verdict_pass"].format(bound=self.bound)
        return REPORT["verdict_fail"].format(count=len(self.failures))

    def to_dict(self) -> Dict:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "cases": self.cases,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
            **self.details,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)
