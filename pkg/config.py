# config.py
"""
Zentrale Projekt-Konfiguration

Gemeinsame Konstanten, Umgebungsvariablen und Logging-Setup für ALLE
Python-Dateien im Projekt.

Usage in beliebiger Python-Datei:
    from config import RunConfig, setup_logging

    cfg = RunConfig.from_env()
    setup_logging('INFO')
"""

# ============================================================================
# STANDARD LIBRARY IMPORTS
# ============================================================================

import sys
import os
from dataclasses import dataclass, replace, asdict
from pathlib import Path
from typing import Optional
import logging

# ============================================================================
# ENVIRONMENT VARIABLES
# ============================================================================

from dotenv import load_dotenv

# Lade .env Datei
load_dotenv()

# ============================================================================
# PROJECT ROOT SETUP
# ============================================================================

# Automatisch Project Root zum Python Path hinzufügen
PROJECT_ROOT = Path(__file__).resolve().parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from models.errors import BadParameter

# ============================================================================
# CONSTANTS FROM ENVIRONMENT
# ============================================================================

DEFAULT_MAX_LATTICE_SIZE = 64
DEFAULT_MAX_ENUMERATION = 100_000
DEFAULT_SECOND_LEVEL_BOUND = 64
DEFAULT_MAX_OPERATOR_LATTICE = 256
DEFAULT_CACHE_DIR = PROJECT_ROOT / '.idiomlab_cache'

OUTPUT_FORMATS = ('text', 'json')

# Logging
LOG_LEVEL = os.getenv('IDIOMLAB_LOG_LEVEL', 'WARNING')
LOG_FORMAT = '[%(levelname)s] %(name)s: %(message)s'


def _env_int(key: str, default: int) -> int:
    """Liest eine Ganzzahl aus der Umgebung (ungültige Werte → BadParameter)"""
    raw = os.getenv(key)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise BadParameter(f"{key} muss eine Ganzzahl sein, nicht {raw!r}") from e


# ============================================================================
# RUN CONFIGURATION
# ============================================================================

@dataclass(frozen=True)
class RunConfig:
    """Laufzeit-Konfiguration für Aufzählungen, Cache und Ausgabe

    Attributes:
        max_lattice_size: maximale Anzahl Elemente eines Verbandes
        max_enumeration: maximale Größe einer aufgezählten Operatorfamilie
        second_level_bound: maximale |I(L)| für Konstruktionen zweiter Stufe
        max_operator_lattice: maximale Größe einer Familie, die als Verband materialisiert wird
        cache_dir: Verzeichnis für den JSON-Ergebnis-Cache (None = kein Cache)
        output_format: 'text' oder 'json'
        seed: Seed für alle randomisierten Suchen
    """
    max_lattice_size: int = DEFAULT_MAX_LATTICE_SIZE
    max_enumeration: int = DEFAULT_MAX_ENUMERATION
    second_level_bound: int = DEFAULT_SECOND_LEVEL_BOUND
    max_operator_lattice: int = DEFAULT_MAX_OPERATOR_LATTICE
    cache_dir: Optional[Path] = DEFAULT_CACHE_DIR
    output_format: str = 'text'
    seed: int = 0

    def __post_init__(self) -> None:
        """Validierung der Schranken"""
        bounds = ('max_lattice_size', 'max_enumeration', 'second_level_bound', 'max_operator_lattice')
        for name in bounds:
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise BadParameter(f"{name} muss positiv sein, nicht {value!r}")

        if self.second_level_bound > self.max_enumeration:
            raise BadParameter(
                f"second_level_bound ({self.second_level_bound}) darf "
                f"max_enumeration ({self.max_enumeration}) nicht übersteigen"
            )

        if self.output_format not in OUTPUT_FORMATS:
            raise BadParameter(
                f"Unbekanntes Ausgabeformat: {self.output_format!r} "
                f"(erlaubt: {', '.join(OUTPUT_FORMATS)})"
            )

        if self.cache_dir is not None and not isinstance(self.cache_dir, Path):
            object.__setattr__(self, 'cache_dir', Path(self.cache_dir))

    # ========== PUBLIC Methods ==========

    @classmethod
    def from_env(cls) -> "RunConfig":
        """PUBLIC: Factory Method - Konfiguration aus Umgebungsvariablen

        IDIOMLAB_CACHE_DIR überschreibt das Cache-Verzeichnis.
        """
        cache_env = os.getenv('IDIOMLAB_CACHE_DIR')
        cache_dir = Path(cache_env).expanduser().resolve() if cache_env else DEFAULT_CACHE_DIR

        return cls(
            max_lattice_size=_env_int('IDIOMLAB_MAX_LATTICE_SIZE', DEFAULT_MAX_LATTICE_SIZE),
            max_enumeration=_env_int('IDIOMLAB_MAX_ENUMERATION', DEFAULT_MAX_ENUMERATION),
            second_level_bound=_env_int('IDIOMLAB_SECOND_LEVEL_BOUND', DEFAULT_SECOND_LEVEL_BOUND),
            max_operator_lattice=_env_int('IDIOMLAB_MAX_OPERATOR_LATTICE', DEFAULT_MAX_OPERATOR_LATTICE),
            cache_dir=cache_dir,
            output_format=os.getenv('IDIOMLAB_OUTPUT_FORMAT', 'text'),
            seed=_env_int('IDIOMLAB_SEED', 0),
        )

    def with_overrides(self, **overrides) -> "RunConfig":
        """PUBLIC: Kopie mit überschriebenen Feldern (None-Werte werden ignoriert)"""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes)

    def without_cache(self) -> "RunConfig":
        """PUBLIC: Kopie ohne Cache-Verzeichnis"""
        return replace(self, cache_dir=None)

    def bounds_key(self) -> str:
        """PUBLIC: Schranken als Teil eines Cache-Schlüssels"""
        return (f"{self.max_lattice_size}:{self.max_enumeration}:"
                f"{self.second_level_bound}:{self.max_operator_lattice}")

    def to_dict(self) -> dict:
        """PUBLIC: Konvertiert zu Dictionary (für JSON-Reports)"""
        data = asdict(self)
        data['cache_dir'] = str(self.cache_dir) if self.cache_dir else None
        return data


DEFAULT_RUN_CONFIG = RunConfig(cache_dir=None)


# ============================================================================
# LOGGING SETUP
# ============================================================================

def setup_logging(level: str = LOG_LEVEL) -> None:
    """Konfiguriert Logging für das gesamte Projekt"""
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format=LOG_FORMAT,
        force=True,
    )


# ============================================================================
# PUBLIC API
# ============================================================================

__all__ = [
    'PROJECT_ROOT',
    'RunConfig',
    'DEFAULT_RUN_CONFIG',
    'DEFAULT_MAX_LATTICE_SIZE',
    'DEFAULT_MAX_ENUMERATION',
    'DEFAULT_SECOND_LEVEL_BOUND',
    'DEFAULT_MAX_OPERATOR_LATTICE',
    'DEFAULT_CACHE_DIR',
    'OUTPUT_FORMATS',
    'LOG_FORMAT',
    'setup_logging',
]
