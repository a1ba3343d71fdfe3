# controllers/__init__.py
"""
Controllers Package - Kommando-Handler

Zentrale Exports aller Controller.

Usage:
    from controllers import LatticeController, OperatorController, VerifyController
"""

# ============================================================================
# CONTROLLERS
# ============================================================================

from controllers.lattice_controller import LatticeController
from controllers.operator_controller import OperatorController
from controllers.verify_controller import VerifyController
from controllers.responses import EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_BOUNDS

# ============================================================================
# PUBLIC API
# ============================================================================

__all__ = [
    'LatticeController',
    'OperatorController',
    'VerifyController',
    'EXIT_OK',
    'EXIT_FAILURE',
    'EXIT_USAGE',
    'EXIT_BOUNDS',
]
