# json_gateway.py
from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional
import logging

from models.errors import BadParameter, HostMismatch
from models.inflator import Inflator
from models.interval import IntervalSet
from models.lattice import FiniteLattice

# ------------------------------------------------------------
# Logging
# ------------------------------------------------------------
logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


# ------------------------------------------------------------
# Fehlerklasse
# ------------------------------------------------------------
class DocumentError(BadParameter):
    """Datei fehlt, ist kein JSON oder hat nicht die erwartete Form."""


# ------------------------------------------------------------
# Pfad-Auflösung
# ------------------------------------------------------------

def resolve_path(path: os.PathLike | str) -> Path:
    """Absoluter, normalisierter Pfad (~ wird expandiert)."""
    return Path(path).expanduser().resolve()


def dumps(document: dict) -> str:
    """Kanonische JSON-Form: sortierte Schlüssel, zwei Leerzeichen Einrückung."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ------------------------------------------------------------
# Gateway
# ------------------------------------------------------------
class JsonGateway:
    """Liest und schreibt die JSON-Dokumente (Verband, Inflator, Intervallmenge, Berichte).

    Verbände werden über den LatticeService gebaut, damit dieselbe
    Validierung (Zyklen, Schranken, Größe) greift wie bei generierten Verbänden.
    """

    def __init__(self, lattice_service=None, inflator_service=None):
        if lattice_service is None:
            from services.lattice_service import LatticeService
            lattice_service = LatticeService()
        if inflator_service is None:
            from services.inflator_service import InflatorService
            inflator_service = InflatorService(lattice_service.config)
        self.__lattices = lattice_service
        self.__inflators = inflator_service

    # ========== PUBLIC Methods: Lesen ==========

    def read_document(self, path: os.PathLike | str) -> dict:
        """PUBLIC: Lädt ein JSON-Objekt

        Raises:
            DocumentError: Datei fehlt, ist nicht lesbar oder kein JSON-Objekt
        """
        p = resolve_path(path)
        try:
            with open(p, 'r', encoding='utf-8') as f:
                document = json.load(f)
        except FileNotFoundError:
            raise DocumentError(f"Datei nicht gefunden: {p}", witness=str(p)) from None
        except json.JSONDecodeError as e:
            raise DocumentError(f"Kein gültiges JSON in {p}: {e.msg} (Zeile {e.lineno})",
                                witness=str(p)) from None
        except OSError as e:
            raise DocumentError(f"Datei nicht lesbar: {p} ({e.strerror})", witness=str(p)) from None
        if not isinstance(document, dict):
            raise DocumentError(f"{p} enthält kein JSON-Objekt", witness=str(p))
        logger.debug("Dokument gelesen: %s", p)
        return document

    def load_lattice(self, path: os.PathLike | str) -> FiniteLattice:
        """PUBLIC: Verbands-JSON {"name", "elements", "covers"} → FiniteLattice

        Raises:
            DocumentError: fehlende Felder oder doppelte Überdeckungen
            BadParameter / NotAPoset / NoBounds / NotALattice / TooLarge
        """
        return self.parse_lattice(self.read_document(path), source=str(path))

    def parse_lattice(self, document: dict, source: str = '<dict>') -> FiniteLattice:
        """PUBLIC: Verbands-JSON bereits geladen"""
        elements = document.get('elements')
        covers = document.get('covers', [])
        if not isinstance(elements, list) or not isinstance(covers, list):
            raise DocumentError(f"{source}: 'elements' und 'covers' müssen Listen sein")

        seen = set()
        for pair in covers:
            if not isinstance(pair, list) or len(pair) != 2:
                raise DocumentError(f"{source}: Überdeckung muss ein Paar sein: {pair!r}", witness=pair)
            key = (str(pair[0]), str(pair[1]))
            if key in seen:
                raise DocumentError(f"{source}: doppelte Überdeckung {key[0]} < {key[1]}",
                                    witness=list(key))
            seen.add(key)

        return self.__lattices.build_lattice(elements, covers, name=str(document.get('name', '')))

    def load_inflator(self, path: os.PathLike | str, lattice: FiniteLattice) -> Inflator:
        """PUBLIC: Inflator-JSON {"lattice", "map"} auf dem gegebenen Verband

        Raises:
            HostMismatch: Digest im Dokument passt nicht zum Verband
            DocumentError: 'map' fehlt
        """
        document = self.read_document(path)
        self.__require_host(document, lattice, path)
        table = document.get('map')
        if not isinstance(table, dict):
            raise DocumentError(f"{path}: 'map' muss ein Objekt Label → Label sein")
        return self.__inflators.make_inflator(lattice, table)

    def load_interval_set(self, path: os.PathLike | str, lattice: FiniteLattice) -> IntervalSet:
        """PUBLIC: IntervalSet-JSON {"lattice", "level", "intervals"}"""
        document = self.read_document(path)
        self.__require_host(document, lattice, path)
        pairs = document.get('intervals', [])
        try:
            indices = [(lattice.index_of(str(lo)), lattice.index_of(str(hi))) for lo, hi in pairs]
        except (TypeError, ValueError):
            raise DocumentError(f"{path}: 'intervals' muss eine Liste von Label-Paaren sein") from None
        return IntervalSet.of(lattice, indices)

    # ========== PUBLIC Methods: Schreiben ==========

    def write_document(self, path: os.PathLike | str, document: dict) -> Path:
        """PUBLIC: Schreibt ein Dokument in kanonischer JSON-Form

        Returns:
            Aufgelöster Zielpfad
        """
        p = resolve_path(path)
        try:
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_text(dumps(document), encoding='utf-8')
        except OSError as e:
            logger.exception("Konnte %s nicht schreiben: %s", p, e)
            raise DocumentError(f"Datei nicht schreibbar: {p} ({e.strerror})", witness=str(p)) from None
        logger.info("Dokument geschrieben: %s", p)
        return p

    def save_lattice(self, path: os.PathLike | str, lattice: FiniteLattice) -> Path:
        return self.write_document(path, lattice.to_dict())

    # ========== PRIVATE Helper Methods ==========

    @staticmethod
    def __require_host(document: dict, lattice: FiniteLattice, path) -> None:
        digest: Optional[str] = document.get('lattice')
        if digest is not None and digest != lattice.digest:
            raise HostMismatch(
                f"{path} gehört zu einem anderen Verband",
                details={'expected': lattice.digest, 'found': digest},
            )
