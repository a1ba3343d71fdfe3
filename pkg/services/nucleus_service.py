# services/nucleus_service.py
"""
Nucleus Service - Der Nuklei-Frame N(A)

Verantwortlich für:
- nuclei_lattice mit Frame-Prüfung
- quotient A_j mit Projektion j*
- χ(a, b) und ξ(a, b) (ξ über zwei unabhängige Wege)
- gab(j) über zwei Wege, gab als Selbstabbildung von N(A), Punkte und G-Punkte
- lift_derivative: Soc/Cbd auf N(A)
- quotient_transfer_check: t(j_* d j*) ≤ j_* t(d) j*
"""
from __future__ import annotations
from typing import Optional
import logging

import numpy as np

from config import RunConfig, DEFAULT_RUN_CONFIG
from models.errors import (
    BadParameter,
    ConditionLostAtJoin,
    FrameViolation,
    NotANucleus,
    NotAnInflatorOnNL,
    RouteDisagreement,
    ValidationError,
)
from models.inflator import Inflator
from models.interval import IntervalSet
from models.lattice import FiniteLattice
from models.operator_lattice import NucleusLattice
from services.inflator_service import InflatorService
from services.interval_service import IntervalService

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


class NucleusService:
    """Service für Nuklei, Quotienten und den Gab-Operator"""

    def __init__(self, config: Optional[RunConfig] = None,
                 inflators: Optional[InflatorService] = None,
                 intervals: Optional[IntervalService] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        self.inflators = inflators or InflatorService(self.config)
        self.intervals = intervals or IntervalService(self.config)
        self.__chi_cache = {}
        self.__xi_cache = {}

    # ========== PUBLIC Methods: N(A) ==========

    def nuclei_lattice(self, lattice: FiniteLattice) -> NucleusLattice:
        """PUBLIC: Alle Nuklei mit Ordnung, Meet-/Join-Tabellen

        Raises:
            EnumerationBoundExceeded
            FrameViolation: N(A) ist nicht distributiv
        """
        NL = self.inflators.enumerate_inflators(lattice, 'nucleus')
        if not NL.frame_flag:
            i, j, k = NL.frame_witness
            raise FrameViolation(
                f"N({lattice.name or 'A'}) ist nicht distributiv",
                witness=[NL.member(x).table() for x in (i, j, k)],
            )
        return NL

    def nl_join(self, NL: NucleusLattice, first: Inflator, second: Inflator) -> Inflator:
        """PUBLIC: j ∨ k in N(A) = (j ∨ k punktweise)^∞"""
        seed = self.inflators.lattice_ops([first, second], 'join', check_directed=False)
        result = self.inflators.closure(seed)
        NL.index_of(result)
        return result

    def nl_join_all(self, NL: NucleusLattice, nuclei) -> Inflator:
        """PUBLIC: Supremum einer Nuklei-Menge in N(A) (leer → Identität)"""
        result = Inflator.identity(NL.host)
        for j in nuclei:
            result = self.nl_join(NL, result, j)
        return result

    def quotient(self, j: Inflator) -> tuple:
        """PUBLIC: A_j = Fix(j) mit induzierter Ordnung und Projektion j*

        Returns:
            (FiniteLattice, projection) mit projection[a] = Index von j(a) in A_j

        Raises:
            NotANucleus
        """
        self.__require_nucleus(j)
        L = j.lattice
        fixed = list(j.fixed_points())
        position = {x: i for i, x in enumerate(fixed)}
        leq = L.leq[np.ix_(fixed, fixed)]
        Q = FiniteLattice.from_order([L.label_of(x) for x in fixed], leq,
                                     name=f"{L.name or 'A'}_j")
        projection = tuple(position[j(a)] for a in range(L.n))
        return Q, projection

    # ========== PUBLIC Methods: χ und ξ ==========

    def chi(self, lattice: FiniteLattice, a: int, b: int) -> Inflator:
        """PUBLIC: χ(a, b) - größter Nukleus j mit j(a) ∧ b = a

        Raises:
            BadParameter: a ≰ b
            ConditionLostAtJoin: das Supremum erfüllt die Bedingung nicht mehr
        """
        self.__require_le(lattice, a, b)
        key = (lattice.digest, lattice.labels, a, b)
        if key in self.__chi_cache:
            return self.__chi_cache[key]

        NL = self.nuclei_lattice(lattice)
        qualifying = [j for j in NL if lattice.meet[j(a), b] == a]
        result = self.nl_join_all(NL, qualifying)
        if lattice.meet[result(a), b] != a:
            raise ConditionLostAtJoin(
                f"χ({lattice.label_of(a)}, {lattice.label_of(b)}): Supremum verletzt j(a) ∧ b = a",
                witness=result.table(),
            )
        self.__chi_cache[key] = result
        return result

    def xi(self, lattice: FiniteLattice, a: int, b: int) -> Inflator:
        """PUBLIC: ξ(a, b) - kleinster Nukleus k mit b ≤ k(a)

        Weg 1: punktweises Infimum aller qualifizierenden Nuklei.
        Weg 2: |Dvs([a, b])| über den Divisionsabschluss.

        Raises:
            RouteDisagreement: beide Wege liefern verschiedene Nuklei
        """
        self.__require_le(lattice, a, b)
        key = (lattice.digest, lattice.labels, a, b)
        if key in self.__xi_cache:
            return self.__xi_cache[key]

        NL = self.nuclei_lattice(lattice)
        qualifying = [k for k in NL if lattice.le(b, k(a))]
        by_meet = self.inflators.lattice_ops(qualifying, 'meet')
        division = self.intervals.close(IntervalSet.of(lattice, [(a, b)]), 'division')
        by_division = self.intervals.associated_inflator(division)
        if by_meet != by_division:
            raise RouteDisagreement(
                f"ξ({lattice.label_of(a)}, {lattice.label_of(b)}): Infimum und Divisionsabschluss verschieden",
                witness={'meet': by_meet.table(), 'division': by_division.table()},
            )
        self.__xi_cache[key] = by_meet
        return by_meet

    # ========== PUBLIC Methods: Gab ==========

    def gab(self, NL: NucleusLattice, j: Inflator, report: Optional[dict] = None) -> Inflator:
        """PUBLIC: Gab(j) = j ∨ ⋁{ξ(a, b) : [a, b] ∈ Crt(D_j)}

        Gegenprobe über |Dvs(Crt(D_j))|. Ob das rohe Supremum (ohne j)
        bereits j dominiert, wird in report['raw_dominates'] vermerkt.

        Raises:
            MemberNotInFamily: j nicht in NL
            RouteDisagreement: beide Wege verschieden
        """
        NL.index_of(j)
        L = NL.host
        critical = self.intervals.crt(L, self.intervals.division_set_of(j))
        raw = self.nl_join_all(NL, (self.xi(L, iv.lo, iv.hi) for iv in critical))
        result = self.nl_join(NL, raw, j)

        by_division = self.intervals.associated_inflator(self.intervals.close(critical, 'division'))
        if by_division != result:
            raise RouteDisagreement(
                "Gab: ξ-Supremum und Dvs(Crt(D_j)) verschieden",
                witness={'xi_join': result.table(), 'division': by_division.table()},
            )
        if report is not None:
            report['raw_dominates'] = j.le(raw)
        return result

    def gab_map(self, NL: NucleusLattice) -> Inflator:
        """PUBLIC: Gab als Selbstabbildung von N(A) (Inflator auf NL.as_lattice)

        Raises:
            NotAnInflatorOnNL: Gab ist nicht inflationär oder nicht monoton
        """
        images = [self.gab(NL, j) for j in NL]
        return self.as_nl_inflator(NL, images, 'Gab')

    def as_nl_inflator(self, NL: NucleusLattice, images, name: str = 'St') -> Inflator:
        """PUBLIC: Bilder der Mitglieder als Inflator auf NL.as_lattice

        Raises:
            NotAnInflatorOnNL
        """
        try:
            return NL.self_map(images)
        except ValidationError as e:
            raise NotAnInflatorOnNL(f"{name} ist kein Inflator auf N(A): {e.message}",
                                    witness=e.witness) from e

    def points(self, NL: NucleusLattice) -> list:
        """PUBLIC: ∧-irreduzible Nuklei (genau ein oberer Nachbar)"""
        H = NL.as_lattice
        return [NL.member(i) for i in range(H.n) if len(H.upper_covers[i]) == 1]

    def g_points(self, NL: NucleusLattice, gab_map: Optional[Inflator] = None) -> list:
        """PUBLIC: Punkte π mit π < Gab(π)"""
        gab_map = gab_map or self.gab_map(NL)
        return [p for p in self.points(NL) if NL.apply_self_map(gab_map, p) != p]

    def lift_derivative(self, NL: NucleusLattice, which: str) -> Inflator:
        """PUBLIC: Soc oder Cbd, berechnet auf NL.as_lattice"""
        if which not in ('soc', 'cbd'):
            raise BadParameter(f"Unbekannte Ableitung: {which!r} (erlaubt: soc, cbd)")
        return self.intervals.derivative(NL.as_lattice, which)

    # ========== PUBLIC Methods: Quotienten-Transfer ==========

    def lift_from_quotient(self, j: Inflator, d_quotient: Inflator, projection: tuple) -> Inflator:
        """PUBLIC: j_* d j* als Inflator auf A"""
        L = j.lattice
        fixed = j.fixed_points()
        values = tuple(fixed[d_quotient(projection[a])] for a in range(L.n))
        return Inflator(L, values)

    def quotient_transfer_check(self, j: Inflator) -> list:
        """PUBLIC: t(j_* d j*) ≤ j_* t(d) j* für alle d ∈ I(A_j)

        Returns:
            Liste der verletzenden d (als Tabellen); leer wenn alles gilt
        """
        Q, projection = self.quotient(j)
        violations = []
        for d in self.inflators.enumerate_inflators(Q, 'all'):
            left = self.inflators.totalizer(self.lift_from_quotient(j, d, projection))
            right = self.lift_from_quotient(j, self.inflators.totalizer(d), projection)
            if not left.le(right):
                violations.append(d.table())
        if violations:
            logger.warning(f"Quotienten-Transfer verletzt für {len(violations)} Inflatoren")
        return violations

    # ========== PRIVATE Helper Methods ==========

    @staticmethod
    def __require_nucleus(j: Inflator) -> None:
        if not j.is_nucleus:
            raise NotANucleus(f"{j} ist kein Nukleus", witness=j.table())

    @staticmethod
    def __require_le(lattice: FiniteLattice, a: int, b: int) -> None:
        if not (0 <= a < lattice.n and 0 <= b < lattice.n) or not lattice.le(a, b):
            raise BadParameter(f"[{a}, {b}] ist kein Intervall", witness=[a, b])
