# controllers/lattice_controller.py
from __future__ import annotations
from typing import Optional, Sequence
import logging

from config import RunConfig, DEFAULT_RUN_CONFIG
from controllers.responses import error_response, ok
from models.errors import BadParameter, IdiomError
from repositories import JsonGateway
from services import LatticeService

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


class LatticeController:
    """Controller für Verbands-Dokumente: erzeugen, laden, prüfen

    Alle Methoden sind PUBLIC, da sie von den CLI-Kommandos aufgerufen werden,
    und liefern {'success', 'error', 'kind', 'exit_code', ...}.
    """

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        self.__lattice_service = LatticeService(self.config)
        self.__gateway = JsonGateway(self.__lattice_service)

    # ========== PUBLIC Methods ==========

    def generate(self, family: str, params: Sequence[str], output: Optional[str] = None) -> dict:
        """PUBLIC: Erzeugt einen Verband einer Standardfamilie

        Args:
            family: chain, boolean, m3, n5, mk, product, interval, glued_sum, random
            params: Parameter als Strings; product/glued_sum erwarten zwei
                Verbandsdateien, interval eine Datei und zwei Labels
            output: Zielpfad (None → nur zurückgeben)

        Returns:
            Dictionary mit 'lattice' (JSON-Form), 'digest' und 'path'
        """
        try:
            lattice = self.__lattice_service.generate(family, *self.__resolve_params(family, params))
            path = self.__gateway.save_lattice(output, lattice) if output else None
            return ok(lattice=lattice.to_dict(), digest=lattice.digest, size=lattice.n,
                      path=str(path) if path else None)
        except IdiomError as e:
            logger.warning(f"gen {family} fehlgeschlagen: {e.message}")
            return error_response(e)
        except Exception as e:
            logger.exception(f"Unerwarteter Fehler bei gen {family}: {e}")
            return error_response(e)

    def load(self, path: str):
        """PUBLIC: Lädt einen Verband (Fehler werden NICHT abgefangen)"""
        return self.__gateway.load_lattice(path)

    def check(self, path: str) -> dict:
        """PUBLIC: Validiert einen Verband und meldet Modularität/Distributivität

        Ein nicht-modularer Verband ist kein Fehler: 'modular' enthält das
        Urteil mit Zeugentripel, exit_code bleibt 0.
        """
        try:
            lattice = self.__gateway.load_lattice(path)
            return ok(
                name=lattice.name,
                digest=lattice.digest,
                size=lattice.n,
                modular=self.__lattice_service.check_modular(lattice),
                distributive=self.__lattice_service.check_distributive(lattice),
                boolean=lattice.is_boolean,
            )
        except IdiomError as e:
            logger.warning(f"check {path}: {e.message}")
            return error_response(e)
        except Exception as e:
            logger.exception(f"Unerwarteter Fehler bei check {path}: {e}")
            return error_response(e)

    # ========== PRIVATE Helper Methods ==========

    def __resolve_params(self, family: str, params: Sequence[str]) -> list:
        """PRIVATE: Übersetzt CLI-Parameter in Argumente der Familie"""
        family = family.lower()
        params = list(params)
        if family in ('product', 'glued_sum'):
            if len(params) != 2:
                raise BadParameter(f"{family} braucht zwei Verbandsdateien")
            return [self.__gateway.load_lattice(p) for p in params]
        if family in ('interval', 'interval_sublattice'):
            if len(params) != 3:
                raise BadParameter(f"{family} braucht eine Verbandsdatei und zwei Elemente")
            return [self.__gateway.load_lattice(params[0]), params[1], params[2]]
        return params
