# models/report.py
"""
Domain Models: DimensionReport, CheckResult, VerifyReport

Reine Ergebniswerte; die JSON-Form (to_dict) ist der stabile Vertrag der CLI.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Any, Callable, Literal, Optional

from models.errors import BadParameter, BoundExceeded, IdiomError


# Type Aliases
Status = Literal['pass', 'fail', 'skip', 'finding']
Notion = Literal['d_length', 'st_dimension', 'gab_dimension', 'strongly_atomic', 'soc_length', 'cbd_length']

STATUSES = ('pass', 'fail', 'skip', 'finding')


@dataclass(frozen=True)
class DimensionReport:
    """Domain Model: DimensionReport

    Attributes:
        lattice: Digest des Trägerverbandes
        notion: Art der Dimension
        verdict: True ⇔ die Spur endet im größten Element
        steps: Anzahl echter Anstiege entlang der Spur
        trace: besuchte Elemente (Labels)
        sub_verdicts: zusätzliche Teilurteile (z.B. beim strongly_atomic-Bericht)
    """
    lattice: str
    notion: str
    verdict: bool
    steps: int
    trace: tuple = ()
    sub_verdicts: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'lattice': self.lattice,
            'notion': self.notion,
            'verdict': self.verdict,
            'steps': self.steps,
            'trace': list(self.trace),
            'sub_verdicts': dict(self.sub_verdicts),
        }


@dataclass(frozen=True)
class CheckResult:
    """Domain Model: CheckResult - Ergebnis einer einzelnen Gesetzes-Prüfung"""
    id: str
    status: str
    message: str = ""
    witness: Any = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise BadParameter(f"Unbekannter Status: {self.status!r}")

    # ========== Factory Methods ==========

    @classmethod
    def passed(cls, check_id: str, message: str = "") -> "CheckResult":
        return cls(check_id, 'pass', message)

    @classmethod
    def failed(cls, check_id: str, message: str, witness: Any = None) -> "CheckResult":
        return cls(check_id, 'fail', message, witness)

    @classmethod
    def skipped(cls, check_id: str, reason: str) -> "CheckResult":
        return cls(check_id, 'skip', reason)

    @classmethod
    def finding(cls, check_id: str, message: str, witness: Any = None) -> "CheckResult":
        return cls(check_id, 'finding', message, witness)

    @classmethod
    def guard(cls, check_id: str, check: Callable[[], "CheckResult"]) -> "CheckResult":
        """PUBLIC: Führt eine Prüfung aus und übersetzt Fehler in einen Status

        BoundExceeded → skip (mit Name der Schranke), jeder andere IdiomError → fail.
        """
        try:
            return check()
        except BoundExceeded as e:
            bound = (e.details or {}).get('bound', 'bound')
            return cls.skipped(check_id, f"{bound} überschritten: {e.message}")
        except IdiomError as e:
            return cls.failed(check_id, f"{type(e).__name__}: {e.message}", e.witness)

    def to_dict(self) -> dict:
        data = {'id': self.id, 'status': self.status}
        if self.message:
            data['message'] = self.message
        if self.witness is not None:
            data['witness'] = self.witness
        return data


@dataclass(frozen=True)
class VerifyReport:
    """Domain Model: VerifyReport - gesammelte Prüfergebnisse für einen Verband"""
    lattice: str
    name: str
    suite: str
    checks: tuple = ()
    config: Optional[dict] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'checks', tuple(sorted(self.checks, key=lambda c: c.id)))

    @property
    def has_failures(self) -> bool:
        return any(c.status == 'fail' for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 1 if self.has_failures else 0

    def by_status(self, status: str) -> list:
        return [c for c in self.checks if c.status == status]

    def get(self, check_id: str) -> Optional[CheckResult]:
        """PUBLIC: Prüfergebnis nach ID (None wenn nicht vorhanden)"""
        return next((c for c in self.checks if c.id == check_id), None)

    def summary(self) -> dict:
        """PUBLIC: Anzahl pro Status"""
        return {status: len(self.by_status(status)) for status in STATUSES}

    def to_dict(self) -> dict:
        data = {
            'lattice': self.lattice,
            'name': self.name,
            'suite': self.suite,
            'summary': self.summary(),
            'checks': [c.to_dict() for c in self.checks],
        }
        if self.config is not None:
            data['config'] = self.config
        return data
