# tests/conftest.py
"""Pytest Fixtures - Standardverbände, Services und Verbands-JSON im tmp_path"""
import json
import sys
from pathlib import Path

import pytest

# Fuege Projekt-Root zum Python-Path hinzu
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

# ============================================================================
# IMPORTS fuer Fixtures
# Package-Struktur: models/, controllers/, repositories/, services/
# ============================================================================

from config import RunConfig
from services import (
    DimensionService,
    InflatorService,
    IntervalService,
    LatticeService,
    NucleusService,
)


# ============================================================================
# ENVIRONMENT
# ============================================================================

@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Entfernt IDIOMLAB_* Variablen, damit lokale .env-Werte keine Tests beeinflussen"""
    for key in ('IDIOMLAB_MAX_LATTICE_SIZE', 'IDIOMLAB_MAX_ENUMERATION', 'IDIOMLAB_SECOND_LEVEL_BOUND',
                'IDIOMLAB_MAX_OPERATOR_LATTICE', 'IDIOMLAB_CACHE_DIR', 'IDIOMLAB_OUTPUT_FORMAT', 'IDIOMLAB_SEED', 'IDIOMLAB_LOG_LEVEL'):
        monkeypatch.delenv(key, raising=False)


# ============================================================================
# CONFIG & SERVICE FIXTURES
# ============================================================================

@pytest.fixture
def config():
    """Standard-Konfiguration ohne Cache"""
    return RunConfig(cache_dir=None)


@pytest.fixture
def cached_config(tmp_path):
    """Konfiguration mit Cache im tmp_path"""
    return RunConfig(cache_dir=tmp_path / 'cache')


@pytest.fixture
def lattice_service(config):
    return LatticeService(config)


@pytest.fixture
def inflator_service(config):
    return InflatorService(config)


@pytest.fixture
def interval_service(config):
    return IntervalService(config)


@pytest.fixture
def nucleus_service(config, inflator_service, interval_service):
    return NucleusService(config, inflator_service, interval_service)


@pytest.fixture
def dimension_service(config, inflator_service, interval_service, nucleus_service):
    return DimensionService(config, inflator_service, interval_service, nucleus_service)


# ============================================================================
# LATTICE FIXTURES
# ============================================================================

@pytest.fixture
def chain2(lattice_service):
    """0 < 1"""
    return lattice_service.chain(2)


@pytest.fixture
def chain3(lattice_service):
    """0 < m < 1"""
    return lattice_service.chain(3)


@pytest.fixture
def boolean2(lattice_service):
    """0 < a, b < 1"""
    return lattice_service.boolean(2)


@pytest.fixture
def m3(lattice_service):
    return lattice_service.diamond_m3()


@pytest.fixture
def n5(lattice_service):
    return lattice_service.pentagon_n5()


@pytest.fixture
def chain2_x_chain3(lattice_service, chain2, chain3):
    return lattice_service.product(chain2, chain3)


# ============================================================================
# FILE FIXTURES
# ============================================================================

@pytest.fixture
def write_json(tmp_path):
    """Schreibt ein Dictionary als JSON-Datei und liefert den Pfad als String"""
    def _write(name: str, document: dict) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding='utf-8')
        return str(path)
    return _write


@pytest.fixture
def lattice_file(write_json):
    """Schreibt einen Verband als Verbands-JSON"""
    def _write(lattice, name: str = None) -> str:
        return write_json(name or f"{lattice.name or 'lattice'}.json", lattice.to_dict())
    return _write


@pytest.fixture
def chain3_file(lattice_file, chain3):
    return lattice_file(chain3)


@pytest.fixture
def n5_file(lattice_file, n5):
    return lattice_file(n5)
