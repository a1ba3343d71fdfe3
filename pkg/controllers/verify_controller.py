# controllers/verify_controller.py
from __future__ import annotations
from typing import Optional
import logging

from config import RunConfig, DEFAULT_RUN_CONFIG
from controllers.responses import EXIT_FAILURE, EXIT_OK, error_response, ok
from models.errors import IdiomError
from models.lattice import FiniteLattice
from repositories import CacheRepository, JsonGateway
from services import LatticeService, VerificationService

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


class VerifyController:
    """Controller für das verify-Kommando

    Der Bericht wird als JSON-Dictionary zurückgegeben; exit_code ist 1,
    sobald eine Prüfung 'fail' meldet. Gecachte Berichte sind an Verband,
    Suite, Schranken und Seed gebunden.
    """

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        self.__gateway = JsonGateway(LatticeService(self.config))
        self.__verification = VerificationService(self.config)
        self.__cache = CacheRepository(self.config)

    # ========== PUBLIC Methods ==========

    def verify(self, path: str, suite: str = 'core') -> dict:
        """PUBLIC: Führt eine Prüfsuite für den Verband in path aus

        Returns:
            {'success', 'report', 'exit_code', ...}
        """
        try:
            lattice = self.__gateway.load_lattice(path)
            return self.verify_lattice(lattice, suite)
        except IdiomError as e:
            logger.warning(f"verify {path}: {e.message}")
            return error_response(e)
        except Exception as e:
            logger.exception(f"Unerwarteter Fehler bei verify {path}: {e}")
            return error_response(e)

    def verify_lattice(self, lattice: FiniteLattice, suite: str = 'core') -> dict:
        """PUBLIC: Wie verify, aber für einen bereits geladenen Verband"""
        operation = f"verify:{suite}:seed={self.config.seed}"
        report = self.__cache.get(lattice, operation)
        if report is None:
            report = self.__verification.verify(lattice, suite).to_dict()
            self.__cache.put(lattice, operation, report)

        failed = report['summary'].get('fail', 0)
        response = ok(report=report)
        response['exit_code'] = EXIT_FAILURE if failed else EXIT_OK
        return response
