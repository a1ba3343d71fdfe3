# controllers/operator_controller.py
from __future__ import annotations
from typing import Optional
import logging

from config import RunConfig, DEFAULT_RUN_CONFIG
from controllers.responses import error_response, ok
from models.errors import IdiomError
from models.lattice import FiniteLattice
from repositories import CacheRepository, JsonGateway
from services import DimensionService, InflatorService, IntervalService, LatticeService, NucleusService

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


class OperatorController:
    """Controller für Inflator-Operationen auf einem Verband aus einer Datei

    Koordiniert Gateway, Cache und Services für die Kommandos
    inflators, totalizer, equalizer, derive, nuclei, gab und sa.
    """

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        lattices = LatticeService(self.config)
        self.__inflators = InflatorService(self.config)
        self.__intervals = IntervalService(self.config)
        self.__nuclei = NucleusService(self.config, self.__inflators, self.__intervals)
        self.__dimensions = DimensionService(self.config, self.__inflators, self.__intervals, self.__nuclei)
        self.__gateway = JsonGateway(lattices, self.__inflators)
        self.__cache = CacheRepository(self.config)

    # ========== PUBLIC Methods ==========

    def inflators(self, path: str, family: str = 'all') -> dict:
        """PUBLIC: Zählt eine Familie auf (Anzahl + Tabellen)"""
        def compute(lattice: FiniteLattice) -> dict:
            cached = self.__cache.get(lattice, f"inflators:{family}")
            if cached is not None:
                return cached
            F = self.__inflators.enumerate_inflators(lattice, family)
            payload = {'family': family, 'count': F.size, 'members': [d.table() for d in F]}
            self.__cache.put(lattice, f"inflators:{family}", payload)
            return payload

        return self.__run('inflators', path, compute)

    def totalizer(self, path: str, inflator_path: str, oracle: bool = False) -> dict:
        """PUBLIC: t(d) = O_{d(0̲)}, optional gegen das Orakel ⋀{z : zd = d̄}"""
        return self.__extremum('totalizer', path, inflator_path, oracle)

    def equalizer(self, path: str, inflator_path: str, oracle: bool = False) -> dict:
        """PUBLIC: e(d) per Bildformel, optional gegen das Orakel ⋁{z : zd = d}"""
        return self.__extremum('equalizer', path, inflator_path, oracle)

    def derive(self, path: str, op: str, closure: bool = False) -> dict:
        """PUBLIC: soc oder cbd; mit closure auch d^∞ und die Längenspur"""
        def compute(lattice: FiniteLattice) -> dict:
            d = self.__intervals.derivative(lattice, op)
            result = {'op': op, 'derivative': d.table(), 'flags': d.flags()}
            if closure:
                closed, steps = self.__inflators.infty(d)
                result['closure'] = closed.table()
                result['closure_steps'] = steps
                result['length'] = self.__dimensions.derivative_length(lattice, op).to_dict()
            return result

        return self.__run('derive', path, compute)

    def nuclei(self, path: str) -> dict:
        """PUBLIC: Export von N(A) (Verbands-JSON plus Mitgliedertabellen)"""
        def compute(lattice: FiniteLattice) -> dict:
            cached = self.__cache.get(lattice, 'nuclei')
            if cached is not None:
                return cached
            payload = {'nuclei': self.__nuclei.nuclei_lattice(lattice).to_dict()}
            self.__cache.put(lattice, 'nuclei', payload)
            return payload

        return self.__run('nuclei', path, compute)

    def gab(self, path: str, iterate: bool = False) -> dict:
        """PUBLIC: Gab-Tabelle {Nukleus-Index: Bild-Index}, optional mit Dimensionsspur"""
        def compute(lattice: FiniteLattice) -> dict:
            NL = self.__nuclei.nuclei_lattice(lattice)
            gab = self.__nuclei.gab_map(NL)
            result = {
                'nuclei': [j.table() for j in NL],
                'gab': {str(i): int(v) for i, v in enumerate(gab.values)},
            }
            if iterate:
                result['dimension'] = self.__dimensions.st_dimension(NL, gab, notion='gab_dimension').to_dict()
            return result

        return self.__run('gab', path, compute)

    def strongly_atomic(self, path: str) -> dict:
        """PUBLIC: Dreifacher strongly-atomic-Bericht"""
        return self.__run('sa', path, lambda lattice: {'report': self.__dimensions.strongly_atomic(lattice).to_dict()})

    # ========== PRIVATE Helper Methods ==========

    def __extremum(self, which: str, path: str, inflator_path: str, oracle: bool) -> dict:
        def compute(lattice: FiniteLattice) -> dict:
            d = self.__gateway.load_inflator(inflator_path, lattice)
            closed_form = getattr(self.__inflators, which)(d)
            result = {'inflator': d.table(), which: closed_form.table(), 'oracle': None, 'agrees': None}
            if oracle:
                brute = self.__inflators.brute_extremum(d, which, 'all')
                result['oracle'] = brute.table()
                result['agrees'] = brute == closed_form
                if brute != closed_form:
                    logger.warning(f"{which}: geschlossene Form und Orakel verschieden für {d}")
            return result

        response = self.__run(which, path, compute)
        if response['success'] and response.get('agrees') is False:
            response['exit_code'] = 1
        return response

    def __run(self, command: str, path: str, compute) -> dict:
        """PRIVATE: Lädt den Verband, führt compute aus und übersetzt Fehler"""
        try:
            lattice = self.__gateway.load_lattice(path)
            result = compute(lattice)
            return ok(lattice=lattice.digest, name=lattice.name, **result)
        except IdiomError as e:
            logger.warning(f"{command} {path}: {e.message}")
            return error_response(e)
        except Exception as e:
            logger.exception(f"Unerwarteter Fehler bei {command} {path}: {e}")
            return error_response(e)
