# services/interval_service.py
"""
Interval Service - Intervall-Universum, Ähnlichkeit, Abschlüsse, Klassifikation

Verantwortlich für:
- all_intervals / are_similar
- close(S, basic|congruence|division) als Fixpunkt der Erzeugungsregeln
- classify_intervals (simple, complemented, atomic, ... relativ zu B)
- |B| (associated_inflator), D_j (division_set_of), soc und cbd
- is_inert über χ aus dem Nuclei-Service
"""
from __future__ import annotations
from typing import Optional
import logging

import numpy as np

from config import RunConfig, DEFAULT_RUN_CONFIG
from models.errors import BadParameter, HostMismatch, NotANucleus, NotBasic
from models.inflator import Inflator
from models.interval import Interval, IntervalSet, LEVELS
from models.lattice import FiniteLattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


CLOSURE_LEVELS = ('abstract', 'basic', 'congruence', 'division')

INTERVAL_FLAGS = ('simple', 'complemented', 'atomic', 'strongly_atomic', 'uniform',
                  'B_simple', 'B_complemented', 'B_critical')


class IntervalService:
    """Service für Intervallmengen und die daraus abgeleiteten Inflatoren"""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG

    # ========== PUBLIC Methods: Universum und Ähnlichkeit ==========

    def all_intervals(self, lattice: FiniteLattice) -> list:
        """PUBLIC: Alle [lo, hi] mit lo ≤ hi, lexikographisch nach Indizes"""
        return [Interval(int(lo), int(hi)) for lo, hi in np.argwhere(lattice.leq)]

    def are_similar(self, lattice: FiniteLattice, first: Interval, second: Interval) -> dict:
        """PUBLIC: Ähnlichkeit {I, J} = {[l, l∨r], [l∧r, r]}

        Returns:
            {'similar': bool, 'witness': {'l': label, 'r': label} oder None}
        """
        for iv in (first, second):
            Interval.checked(lattice, iv.lo, iv.hi)
        n = lattice.n
        l_idx, r_idx = np.meshgrid(np.arange(n), np.arange(n), indexing='ij')
        upper_hi = lattice.join
        lower_lo = lattice.meet
        forward = ((l_idx == first.lo) & (upper_hi == first.hi)
                   & (lower_lo == second.lo) & (r_idx == second.hi))
        backward = ((l_idx == second.lo) & (upper_hi == second.hi)
                    & (lower_lo == first.lo) & (r_idx == first.hi))
        hits = np.argwhere(forward | backward)
        if not len(hits):
            return {'similar': False, 'witness': None}
        l, r = (int(v) for v in hits[0])
        return {'similar': True, 'witness': {'l': lattice.label_of(l), 'r': lattice.label_of(r)}}

    # ========== PUBLIC Methods: Abschlüsse ==========

    def close(self, interval_set: IntervalSet, target_level: str) -> IntervalSet:
        """PUBLIC: Kleinste Menge der Zielstufe, die S enthält

        Die Regeln der Stufe werden bis zum Fixpunkt wiederholt:
        abstract: Ähnlichkeit; basic: + triviale Intervalle, Teilintervalle;
        congruence: + anstoßende Intervalle; division: + [a, ⋁X_a].

        Args:
            interval_set: Ausgangsmenge
            target_level: 'abstract' | 'basic' | 'congruence' | 'division'

        Returns:
            Neue IntervalSet mit level=target_level
        """
        if target_level not in CLOSURE_LEVELS:
            raise BadParameter(f"Unbekannte Abschlussstufe: {target_level!r}")
        lattice = interval_set.lattice
        rank = CLOSURE_LEVELS.index(target_level)
        members = interval_set.members.copy()
        if rank >= 1:
            members |= np.eye(lattice.n, dtype=bool)

        rounds = 0
        while True:
            rounds += 1
            before = members.copy()
            members = self.__similarity_step(lattice, members)
            if rank >= 1:
                members = self.__subinterval_step(lattice, members)
            if rank >= 2:
                members = self.__abutting_step(members)
            if rank >= 3:
                members = self.__predivision_step(lattice, members)
            if np.array_equal(before, members):
                break

        logger.debug(f"close({target_level}): {int(members.sum())} Intervalle nach {rounds} Runden")
        return IntervalSet(lattice, members, level=target_level)

    def level_of(self, interval_set: IntervalSet) -> str:
        """PUBLIC: Höchste Stufe, unter deren Regeln S bereits abgeschlossen ist"""
        if not interval_set.members.any():
            return 'raw'
        reached = 'raw'
        for level in CLOSURE_LEVELS:
            if self.close(interval_set, level) != interval_set:
                break
            reached = level
        return reached

    def require_basic(self, interval_set: IntervalSet) -> IntervalSet:
        """PUBLIC: Prüft, dass S basic ist, und liefert S mit ermittelter Stufe

        Raises:
            NotBasic: S ist unter Ähnlichkeit/Teilintervallen nicht abgeschlossen
        """
        level = self.level_of(interval_set)
        if LEVELS.index(level) < LEVELS.index('basic'):
            closed = self.close(interval_set, 'basic')
            missing = next(iter(closed.intersection(self.__complement(interval_set))), None)
            raise NotBasic(
                "Intervallmenge ist nicht basic",
                witness=missing.labels(interval_set.lattice) if missing else None,
            )
        return interval_set.with_level(level)

    # ========== PUBLIC Methods: Klassifikation ==========

    def classify_intervals(self, lattice: FiniteLattice,
                           basic: Optional[IntervalSet] = None) -> dict:
        """PUBLIC: Flag-Tabelle für jedes Intervall

        Args:
            lattice: Verband
            basic: Basic-Menge B (None → 𝓞)

        Returns:
            {Interval: {flag: bool}} in kanonischer Reihenfolge
        """
        B = self.__basic_or_trivial(lattice, basic)
        matrices = {flag: self.__flag_matrix(lattice, flag, B.members) for flag in INTERVAL_FLAGS}
        return {
            iv: {flag: bool(matrices[flag][iv.lo, iv.hi]) for flag in INTERVAL_FLAGS}
            for iv in self.all_intervals(lattice)
        }

    def flag_set(self, lattice: FiniteLattice, flag: str,
                 basic: Optional[IntervalSet] = None) -> IntervalSet:
        """PUBLIC: Menge aller Intervalle mit gesetztem Flag (z.B. Smp, Cmp, Crt(B), SA)"""
        if flag not in INTERVAL_FLAGS:
            raise BadParameter(f"Unbekanntes Intervall-Flag: {flag!r}")
        B = self.__basic_or_trivial(lattice, basic)
        return IntervalSet(lattice, self.__flag_matrix(lattice, flag, B.members))

    def smp(self, lattice: FiniteLattice, basic: Optional[IntervalSet] = None) -> IntervalSet:
        """PUBLIC: Smp(B) - B-einfache Intervalle"""
        return self.flag_set(lattice, 'B_simple', basic)

    def cmp(self, lattice: FiniteLattice, basic: Optional[IntervalSet] = None) -> IntervalSet:
        """PUBLIC: Cmp(B) - B-komplementierte Intervalle"""
        return self.flag_set(lattice, 'B_complemented', basic)

    def crt(self, lattice: FiniteLattice, basic: Optional[IntervalSet] = None) -> IntervalSet:
        """PUBLIC: Crt(B) - B-kritische Intervalle"""
        return self.flag_set(lattice, 'B_critical', basic)

    def is_uniform(self, lattice: FiniteLattice, interval: Interval) -> bool:
        """PUBLIC: nicht-trivial und x∧y = a ⇒ x = a oder y = a in [a, b]"""
        a, b = interval.lo, interval.hi
        if a == b:
            return False
        inner = lattice.interval_elements(a, b)
        proper = inner[inner != a]
        return not bool((lattice.meet[np.ix_(proper, proper)] == a).any())

    def is_inert(self, lattice: FiniteLattice, interval: Interval, nucleus_service=None) -> bool:
        """PUBLIC: χ(a, x) = χ(a, b) für alle a < x ≤ b

        Raises:
            BadParameter: triviales Intervall
            EnumerationBoundExceeded: Nuklei nicht aufzählbar
        """
        Interval.checked(lattice, interval.lo, interval.hi)
        if interval.is_trivial():
            raise BadParameter("Inert ist nur für nicht-triviale Intervalle definiert",
                               witness=interval.labels(lattice))
        if nucleus_service is None:
            from services.nucleus_service import NucleusService
            nucleus_service = NucleusService(self.config)
        a, b = interval.lo, interval.hi
        target = nucleus_service.chi(lattice, a, b)
        for x in lattice.interval_elements(a, b):
            if int(x) != a and nucleus_service.chi(lattice, a, int(x)) != target:
                return False
        return True

    # ========== PUBLIC Methods: Inflatoren aus Intervallmengen ==========

    def associated_inflator(self, interval_set: IntervalSet) -> Inflator:
        """PUBLIC: |B|(a) = ⋁{x : [a, x] ∈ B}

        Raises:
            NotBasic: B ist nicht basic
        """
        B = self.require_basic(interval_set)
        lattice = B.lattice
        values = tuple(lattice.join_all(np.flatnonzero(B.members[a, :])) for a in range(lattice.n))
        result = Inflator(lattice, values)
        expected = {'congruence': 'prenucleus', 'division': 'nucleus'}.get(B.level)
        if expected and not result.has_flag(expected):
            logger.warning(f"|B| einer {B.level}-Menge ist kein {expected}: {result}")
        return result

    def division_set_of(self, j: Inflator) -> IntervalSet:
        """PUBLIC: D_j = {[a, b] : j(a) = j(b)}

        Raises:
            NotANucleus
        """
        if not j.is_nucleus:
            raise NotANucleus(f"{j} ist kein Nukleus", witness=j.table())
        v = j.array
        return IntervalSet(j.lattice, v[:, None] == v[None, :], level='division')

    def derivative(self, lattice: FiniteLattice, op: str) -> Inflator:
        """PUBLIC: soc = |Smp| oder cbd = |Cmp|"""
        if op == 'soc':
            return self.soc(lattice)
        if op == 'cbd':
            return self.cbd(lattice)
        raise BadParameter(f"Unbekannte Ableitung: {op!r} (erlaubt: soc, cbd)")

    def soc(self, lattice: FiniteLattice) -> Inflator:
        """PUBLIC: Sockel-Ableitung |Smp|"""
        return self.associated_inflator(self.smp(lattice))

    def cbd(self, lattice: FiniteLattice) -> Inflator:
        """PUBLIC: Cantor-Bendixson-Ableitung |Cmp|"""
        return self.associated_inflator(self.cmp(lattice))

    def require_same_host(self, lattice: FiniteLattice, interval_set: IntervalSet) -> None:
        if interval_set.lattice is not lattice and interval_set.lattice.digest != lattice.digest:
            raise HostMismatch("Intervallmenge gehört zu einem anderen Verband")

    # ========== PRIVATE Helper Methods: Regeln ==========

    @staticmethod
    def __similarity_step(lattice: FiniteLattice, members: np.ndarray) -> np.ndarray:
        """PRIVATE: [l, l∨r] ∈ S ⇔ [l∧r, r] ∈ S"""
        n = lattice.n
        l_idx, r_idx = np.meshgrid(np.arange(n), np.arange(n), indexing='ij')
        upper = members[l_idx, lattice.join]
        lower = members[lattice.meet, r_idx]
        hit = upper | lower
        out = members.copy()
        out[l_idx[hit], lattice.join[hit]] = True
        out[lattice.meet[hit], r_idx[hit]] = True
        return out

    @staticmethod
    def __subinterval_step(lattice: FiniteLattice, members: np.ndarray) -> np.ndarray:
        """PRIVATE: [a, b] ∈ S, a ≤ c ≤ d ≤ b ⇒ [c, d] ∈ S"""
        leq_t = lattice.leq.T.astype(np.int64)
        reach = (leq_t @ members.astype(np.int64) @ leq_t) > 0
        return members | (reach & lattice.leq)

    @staticmethod
    def __abutting_step(members: np.ndarray) -> np.ndarray:
        """PRIVATE: [a, b], [b, c] ∈ S ⇒ [a, c] ∈ S"""
        as_int = members.astype(np.int64)
        return members | ((as_int @ as_int) > 0)

    @staticmethod
    def __predivision_step(lattice: FiniteLattice, members: np.ndarray) -> np.ndarray:
        """PRIVATE: für jedes a: [a, ⋁{x : [a, x] ∈ S}] ∈ S"""
        out = members.copy()
        for a in range(lattice.n):
            above = np.flatnonzero(members[a, :])
            if len(above):
                out[a, lattice.join_all(above)] = True
        return out

    # ========== PRIVATE Helper Methods: Flags ==========

    def __basic_or_trivial(self, lattice: FiniteLattice, basic: Optional[IntervalSet]) -> IntervalSet:
        if basic is None:
            return IntervalSet.trivial(lattice)
        self.require_same_host(lattice, basic)
        return self.require_basic(basic)

    @staticmethod
    def __complement(interval_set: IntervalSet) -> IntervalSet:
        return IntervalSet(interval_set.lattice, ~interval_set.members)

    def __flag_matrix(self, lattice: FiniteLattice, flag: str, B: np.ndarray) -> np.ndarray:
        """PRIVATE: n×n Matrix eines Intervall-Flags (nur auf lo ≤ hi belegt)"""
        if flag == 'simple':
            return self.__simple_matrix(lattice)
        if flag == 'atomic':
            return self.__atomic_matrix(lattice)
        if flag == 'strongly_atomic':
            return self.__strongly_atomic_matrix(lattice)
        checks = {
            'complemented': lambda iv: self.__is_b_complemented(lattice, iv, np.eye(lattice.n, dtype=bool)),
            'uniform': lambda iv: self.is_uniform(lattice, iv),
            'B_simple': lambda iv: self.__is_b_simple(lattice, iv, B),
            'B_complemented': lambda iv: self.__is_b_complemented(lattice, iv, B),
            'B_critical': lambda iv: self.__is_b_critical(lattice, iv, B),
        }
        out = np.zeros((lattice.n, lattice.n), dtype=bool)
        for iv in self.all_intervals(lattice):
            out[iv.lo, iv.hi] = checks[flag](iv)
        return out

    @staticmethod
    def __simple_matrix(lattice: FiniteLattice) -> np.ndarray:
        """PRIVATE: simple[a, b] ⇔ a ≤ b und kein a < x < b"""
        between = lattice.leq.astype(np.int64) @ lattice.leq.astype(np.int64)
        # |[a, b]| ≤ 2
        return lattice.leq & (between <= 2)

    def __atomic_matrix(self, lattice: FiniteLattice) -> np.ndarray:
        """PRIVATE: atomic[a, b] ⇔ für jedes a < d ≤ b gibt es a < z ≤ d mit [a, z] einfach"""
        leq = lattice.leq
        strict = leq & ~np.eye(lattice.n, dtype=bool)
        simple_above = self.__simple_matrix(lattice) & strict
        has_simple_below = (simple_above.astype(np.int64) @ leq.astype(np.int64)) > 0
        bad = strict & ~has_simple_below
        return leq & ~((bad.astype(np.int64) @ leq.astype(np.int64)) > 0)

    def __strongly_atomic_matrix(self, lattice: FiniteLattice) -> np.ndarray:
        """PRIVATE: jedes Teilintervall c < d von [a, b] ist atomar"""
        leq = lattice.leq.astype(np.int64)
        bad = (lattice.leq & ~self.__atomic_matrix(lattice)).astype(np.int64)
        return lattice.leq & ~((leq @ bad @ leq) > 0)

    @staticmethod
    def __is_b_simple(lattice: FiniteLattice, iv: Interval, B: np.ndarray) -> bool:
        xs = lattice.interval_elements(iv.lo, iv.hi)
        return bool(np.all(B[iv.lo, xs] | B[xs, iv.hi]))

    @staticmethod
    def __is_b_complemented(lattice: FiniteLattice, iv: Interval, B: np.ndarray) -> bool:
        xs = lattice.interval_elements(iv.lo, iv.hi)
        ok = B[iv.lo, lattice.meet[np.ix_(xs, xs)]] & B[lattice.join[np.ix_(xs, xs)], iv.hi]
        return bool(ok.any(axis=1).all())

    @staticmethod
    def __is_b_critical(lattice: FiniteLattice, iv: Interval, B: np.ndarray) -> bool:
        xs = lattice.interval_elements(iv.lo, iv.hi)
        return bool(np.all((xs == iv.lo) | B[xs, iv.hi]))
