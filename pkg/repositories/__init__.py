# repositories/__init__.py
"""
Repositories Package - Data Access Layer

Zentrale Exports von JSON-Gateway und Ergebnis-Cache.

Usage:
    from repositories import JsonGateway, CacheRepository
"""

# ============================================================================
# JSON GATEWAY
# ============================================================================

from repositories import json_gateway
from repositories.json_gateway import JsonGateway, DocumentError

# ============================================================================
# REPOSITORIES
# ============================================================================

from repositories.cache_repository import CacheRepository

# ============================================================================
# PUBLIC API
# ============================================================================

__all__ = [
    # JSON Gateway
    'json_gateway',
    'JsonGateway',
    'DocumentError',

    # Repositories
    'CacheRepository',
]
