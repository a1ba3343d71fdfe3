# repositories/cache_repository.py
from __future__ import annotations
import hashlib
import json
import logging
from pathlib import Path
from typing import Optional

from config import RunConfig
from models.lattice import FiniteLattice
from repositories.json_gateway import dumps

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


class CacheRepository:
    """Repository für den JSON-Ergebnis-Cache

    Ein Eintrag liegt unter <cache_dir>/<sha256>.json, der Schlüssel ist
    sha256(Digest + Operation + Schranken). Jeder Eintrag speichert die
    Ordnungstabelle des Verbandes; passt sie beim Laden nicht, wird der
    Eintrag ignoriert.

    Ohne cache_dir ist das Repository ein No-Op.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.cache_dir: Optional[Path] = config.cache_dir

    @property
    def enabled(self) -> bool:
        return self.cache_dir is not None

    # ========== PUBLIC Repository Methods ==========

    def key_for(self, lattice: FiniteLattice, operation: str) -> str:
        """PUBLIC: Cache-Schlüssel für (Verband, Operation, Schranken)"""
        h = hashlib.sha256()
        for part in (lattice.digest, operation, self.config.bounds_key()):
            h.update(part.encode('utf-8'))
            h.update(b'\x00')
        return h.hexdigest()

    def get(self, lattice: FiniteLattice, operation: str) -> Optional[dict]:
        """PUBLIC: Gespeichertes Ergebnis oder None (kein Eintrag, defekt oder veraltet)"""
        if not self.enabled:
            return None
        path = self.__path(lattice, operation)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as e:
            logger.warning("Cache-Eintrag %s nicht lesbar, wird ignoriert: %s", path.name, e)
            return None

        if entry.get('labels') != list(lattice.labels) or entry.get('order') != self.__order(lattice):
            logger.warning("Cache-Eintrag %s passt nicht zur Ordnungstabelle, wird ignoriert", path.name)
            return None
        logger.debug("Cache-Treffer: %s (%s)", operation, path.name)
        return entry.get('payload')

    def put(self, lattice: FiniteLattice, operation: str, payload: dict) -> None:
        """PUBLIC: Speichert ein Ergebnis (Schreibfehler werden nur protokolliert)"""
        if not self.enabled:
            return
        entry = {
            'lattice': lattice.digest,
            'operation': operation,
            'bounds': self.config.bounds_key(),
            'labels': list(lattice.labels),
            'order': self.__order(lattice),
            'payload': payload,
        }
        path = self.__path(lattice, operation)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(dumps(entry), encoding='utf-8')
        except OSError as e:
            logger.warning("Cache-Eintrag %s nicht schreibbar: %s", path.name, e)

    def clear(self) -> int:
        """PUBLIC: Löscht alle Einträge, liefert deren Anzahl"""
        if not self.enabled or not self.cache_dir.exists():
            return 0
        removed = 0
        for path in self.cache_dir.glob('*.json'):
            path.unlink()
            removed += 1
        return removed

    # ========== PRIVATE Helper Methods ==========

    def __path(self, lattice: FiniteLattice, operation: str) -> Path:
        return self.cache_dir / f"{self.key_for(lattice, operation)}.json"

    @staticmethod
    def __order(lattice: FiniteLattice) -> list:
        return lattice.leq.astype(int).tolist()
