# tests/unit/test_config.py
"""
Unit Tests fuer RunConfig (config.py)

Testet:
- __post_init__() - Validierung der Schranken und des Ausgabeformats
- from_env() - Werte aus IDIOMLAB_* Umgebungsvariablen
- with_overrides() / without_cache() - Kopien mit geänderten Feldern
- bounds_key() / to_dict()
- setup_logging() - Level und Projektformat
"""
from __future__ import annotations

from pathlib import Path
import logging

import pytest

from config import RunConfig, DEFAULT_RUN_CONFIG, DEFAULT_MAX_LATTICE_SIZE, setup_logging
from models.errors import BadParameter, ValidationError

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# VALIDIERUNG
# ============================================================================

class TestRunConfigValidation:
    """Tests fuer __post_init__"""

    def test_defaults_are_valid(self):
        cfg = RunConfig()
        assert cfg.max_lattice_size == DEFAULT_MAX_LATTICE_SIZE
        assert cfg.output_format == 'text'
        assert cfg.seed == 0

    @pytest.mark.parametrize('field', ['max_lattice_size', 'max_enumeration', 'second_level_bound',
                                       'max_operator_lattice'])
    def test_non_positive_bound_raises(self, field):
        with pytest.raises(BadParameter):
            RunConfig(**{field: 0})

    def test_second_level_bound_above_enumeration_raises(self):
        with pytest.raises(BadParameter, match="second_level_bound"):
            RunConfig(max_enumeration=10, second_level_bound=20)

    def test_unknown_output_format_raises(self):
        with pytest.raises(BadParameter, match="Ausgabeformat"):
            RunConfig(output_format='xml')

    def test_cache_dir_string_becomes_path(self, tmp_path):
        cfg = RunConfig(cache_dir=str(tmp_path))
        assert isinstance(cfg.cache_dir, Path)

    def test_bad_parameter_is_validation_error(self):
        with pytest.raises(ValidationError):
            RunConfig(max_lattice_size=-3)


# ============================================================================
# FROM ENV
# ============================================================================

class TestRunConfigFromEnv:
    """Tests fuer from_env()"""

    def test_reads_bounds_from_environment(self, monkeypatch):
        monkeypatch.setenv('IDIOMLAB_MAX_LATTICE_SIZE', '10')
        monkeypatch.setenv('IDIOMLAB_MAX_OPERATOR_LATTICE', '512')
        monkeypatch.setenv('IDIOMLAB_SEED', '7')
        cfg = RunConfig.from_env()
        assert cfg.max_lattice_size == 10
        assert cfg.seed == 7
        assert cfg.max_operator_lattice == 512

    def test_empty_value_uses_default(self, monkeypatch):
        monkeypatch.setenv('IDIOMLAB_MAX_ENUMERATION', '  ')
        assert RunConfig.from_env().max_enumeration == RunConfig().max_enumeration

    def test_non_integer_raises(self, monkeypatch):
        monkeypatch.setenv('IDIOMLAB_MAX_LATTICE_SIZE', 'viele')
        with pytest.raises(BadParameter, match="IDIOMLAB_MAX_LATTICE_SIZE"):
            RunConfig.from_env()

    def test_cache_dir_from_environment(self, monkeypatch, tmp_path):
        monkeypatch.setenv('IDIOMLAB_CACHE_DIR', str(tmp_path / 'c'))
        assert RunConfig.from_env().cache_dir == (tmp_path / 'c').resolve()

    def test_output_format_from_environment(self, monkeypatch):
        monkeypatch.setenv('IDIOMLAB_OUTPUT_FORMAT', 'json')
        assert RunConfig.from_env().output_format == 'json'


# ============================================================================
# KOPIEN
# ============================================================================

class TestRunConfigCopies:
    """Tests fuer with_overrides(), without_cache(), bounds_key(), to_dict()"""

    def test_with_overrides_ignores_none(self):
        cfg = RunConfig(seed=5).with_overrides(seed=None, output_format='json')
        assert cfg.seed == 5
        assert cfg.output_format == 'json'

    def test_with_overrides_revalidates(self):
        with pytest.raises(BadParameter):
            RunConfig().with_overrides(max_lattice_size=-1)

    def test_without_cache(self, tmp_path):
        assert RunConfig(cache_dir=tmp_path).without_cache().cache_dir is None

    def test_default_run_config_has_no_cache(self):
        assert DEFAULT_RUN_CONFIG.cache_dir is None

    def test_bounds_key(self):
        cfg = RunConfig(max_lattice_size=8, max_enumeration=100, second_level_bound=16, max_operator_lattice=32)
        assert cfg.bounds_key() == "8:100:16:32"

    def test_to_dict_serializes_cache_dir(self, tmp_path):
        data = RunConfig(cache_dir=tmp_path).to_dict()
        assert data['cache_dir'] == str(tmp_path)
        assert RunConfig(cache_dir=None).to_dict()['cache_dir'] is None


# ============================================================================
# LOGGING
# ============================================================================

class TestSetupLogging:
    """Tests fuer setup_logging()"""

    def test_sets_root_level(self):
        root = logging.getLogger()
        previous = root.level
        try:
            setup_logging('debug')
            assert root.level == logging.DEBUG
            setup_logging('laut')
            assert root.level == logging.WARNING
        finally:
            root.setLevel(previous)

    def test_uses_project_format(self):
        root = logging.getLogger()
        previous = root.level
        try:
            setup_logging('ERROR')
            record = logging.LogRecord('idiomlab', logging.ERROR, __file__, 1, 'kaputt', None, None)
            assert root.handlers[-1].format(record) == '[ERROR] idiomlab: kaputt'
        finally:
            root.setLevel(previous)
