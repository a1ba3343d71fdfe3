# controllers/responses.py
"""Gemeinsame Antwortform der Controller und Abbildung Fehler → Exit-Code"""
from __future__ import annotations

from models.errors import BoundExceeded, IdiomError, ValidationError

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BOUNDS = 3


def exit_code_for(error: Exception) -> int:
    """Exit-Code eines Fehlers (Schranke 3, Eingabe 2, Defekt oder unerwartet 1)"""
    if isinstance(error, BoundExceeded):
        return EXIT_BOUNDS
    if isinstance(error, ValidationError):
        return EXIT_USAGE
    return EXIT_FAILURE


def ok(**data) -> dict:
    return {'success': True, 'error': None, 'kind': None, 'exit_code': EXIT_OK, **data}


def error_response(error: Exception) -> dict:
    """Antwort-Dictionary für einen gefangenen Fehler"""
    response = {
        'success': False,
        'error': str(error),
        'kind': type(error).__name__,
        'exit_code': exit_code_for(error),
    }
    if isinstance(error, IdiomError):
        response['error'] = error.message
        response['details'] = error.to_dict()
        bound = error.details.get('bound') if isinstance(error, BoundExceeded) else None
        if bound:
            response['error'] = f"{bound} überschritten: {error.message}"
    return response
