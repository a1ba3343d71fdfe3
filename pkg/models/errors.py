# models/errors.py
"""
Fehlerhierarchie für idiomlab

IdiomError
├── ValidationError   → ungültige Eingaben (Exit-Code 2)
├── BoundExceeded     → Aufzählungs-/Größenschranken verletzt (Exit-Code 3)
└── DefectReport      → ein Ergebnis widerspricht der Theorie oder einem Gegenweg
"""
from __future__ import annotations
from typing import Any, Optional


# ========== Custom Exceptions ==========

class IdiomError(Exception):
    """Allgemeine Fehlerklasse für alle idiomlab-Operationen."""

    def __init__(self, message: str, witness: Any = None, details: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness
        self.details = details or {}

    def to_dict(self) -> dict:
        """PUBLIC: Konvertiert zu Dictionary (für JSON-Ausgabe)"""
        return {
            'kind': type(self).__name__,
            'message': self.message,
            'witness': self.witness,
            'details': self.details,
        }


class ValidationError(IdiomError):
    """Eingabe verletzt eine Vorbedingung"""
    pass


class BoundExceeded(IdiomError):
    """Eine konfigurierte Schranke wurde überschritten"""
    pass


class DefectReport(IdiomError):
    """Zwei Berechnungswege oder eine garantierte Eigenschaft stimmen nicht überein"""
    pass


# ========== Verbände ==========

class NotAPoset(ValidationError):
    """Die Überdeckungsrelation enthält einen Zyklus"""
    pass


class NotALattice(ValidationError):
    """Ein Paar besitzt kein Infimum oder Supremum"""
    pass


class NoBounds(ValidationError):
    """Kleinstes oder größtes Element fehlt"""
    pass


class BadParameter(ValidationError):
    """Ungültiger Parameter (z.B. n=0 oder a ≰ b)"""
    pass


class HostMismatch(ValidationError):
    """Objekte gehören zu verschiedenen Verbänden"""
    pass


# ========== Intervalle ==========

class NotBasic(ValidationError):
    """Intervallmenge ist nicht basic (Ähnlichkeit/Teilintervalle/triviale Intervalle)"""
    pass


# ========== Inflatoren ==========

class NotInflationary(ValidationError):
    """Es gibt x mit x ≰ d(x)"""
    pass


class NotMonotone(ValidationError):
    """Es gibt x ≤ y mit d(x) ≰ d(y)"""
    pass


class EmptyFamily(ValidationError):
    """Leere Familie (das Supremum der leeren Familie ist kein Inflator)"""
    pass


class NotANucleus(ValidationError):
    """Inflator ist kein Nukleus"""
    pass


class MemberNotInFamily(ValidationError):
    """Element gehört nicht zur Operatorfamilie"""
    pass


class NotAnInflatorOnNL(ValidationError):
    """Selbstabbildung ist kein Inflator auf dem Nukleusverband"""
    pass


class NotClosedUnderComposition(ValidationError):
    """Familie ist unter Komposition mit k nicht abgeschlossen"""
    pass


# ========== Schranken ==========

class EnumerationBoundExceeded(BoundExceeded):
    """Familie größer als die konfigurierte Aufzählungsschranke"""
    pass


class TooLarge(BoundExceeded):
    """Verband größer als max_lattice_size oder Familie größer als max_operator_lattice"""
    pass


# ========== Defekt-Berichte ==========

class ConditionLostAtJoin(DefectReport):
    """Das Supremum der qualifizierenden Nuklei erfüllt die Bedingung nicht mehr"""
    pass


class RouteDisagreement(DefectReport):
    """Zwei unabhängige Berechnungswege liefern verschiedene Nuklei"""
    pass


class FrameViolation(DefectReport):
    """N(A) ist nicht distributiv"""
    pass
