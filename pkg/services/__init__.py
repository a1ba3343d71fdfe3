# services/__init__.py
"""Service-Package für die Verbands- und Inflator-Berechnungen (ohne Datei-Zugriff)"""

from services.lattice_service import LatticeService
from services.interval_service import IntervalService
from services.inflator_service import InflatorService
from services.nucleus_service import NucleusService
from services.dimension_service import DimensionService
from services.verification_service import VerificationService
from services.report_text_service import ReportTextService

__all__ = [
    'LatticeService',
    'IntervalService',
    'InflatorService',
    'NucleusService',
    'DimensionService',
    'VerificationService',
    'ReportTextService',
]
