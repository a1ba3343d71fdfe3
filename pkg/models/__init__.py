# models/__init__.py
"""
Models Package - Domain Models

Zentrale Exports aller Domain Models und der Fehlerhierarchie.

Usage:
    from models import FiniteLattice, Inflator, IntervalSet

    # Statt:
    # from models.lattice import FiniteLattice
    # from models.inflator import Inflator
"""

# ============================================================================
# DOMAIN MODELS
# ============================================================================

from models.lattice import FiniteLattice
from models.interval import Interval, IntervalSet, LEVELS
from models.inflator import Inflator, FLAG_NAMES
from models.operator_lattice import OperatorLattice, NucleusLattice, FAMILY_KINDS
from models.report import (
    DimensionReport,
    CheckResult,
    VerifyReport,
    Status,  # Type Alias
    STATUSES,
)

# ============================================================================
# EXCEPTIONS
# ============================================================================

from models.errors import (
    IdiomError,
    ValidationError,
    BoundExceeded,
    DefectReport,
    NotAPoset,
    NotALattice,
    NoBounds,
    BadParameter,
    HostMismatch,
    NotBasic,
    NotInflationary,
    NotMonotone,
    EmptyFamily,
    NotANucleus,
    MemberNotInFamily,
    NotAnInflatorOnNL,
    NotClosedUnderComposition,
    EnumerationBoundExceeded,
    TooLarge,
    ConditionLostAtJoin,
    RouteDisagreement,
    FrameViolation,
)

# ============================================================================
# PACKAGE METADATA
# ============================================================================

__version__ = "1.0.0"

# ============================================================================
# PUBLIC API
# ============================================================================

__all__ = [
    # Domain Models
    'FiniteLattice',
    'Interval',
    'IntervalSet',
    'Inflator',
    'OperatorLattice',
    'NucleusLattice',
    'DimensionReport',
    'CheckResult',
    'VerifyReport',

    # Konstanten / Type Aliases
    'LEVELS',
    'FLAG_NAMES',
    'FAMILY_KINDS',
    'STATUSES',
    'Status',

    # Exceptions
    'IdiomError',
    'ValidationError',
    'BoundExceeded',
    'DefectReport',
    'NotAPoset',
    'NotALattice',
    'NoBounds',
    'BadParameter',
    'HostMismatch',
    'NotBasic',
    'NotInflationary',
    'NotMonotone',
    'EmptyFamily',
    'NotANucleus',
    'MemberNotInFamily',
    'NotAnInflatorOnNL',
    'NotClosedUnderComposition',
    'EnumerationBoundExceeded',
    'TooLarge',
    'ConditionLostAtJoin',
    'RouteDisagreement',
    'FrameViolation',
]
