# models/interval.py
"""
Domain Models: Interval, IntervalSet

Ein Interval [lo, hi] ist ein Paar von Elementindizes mit lo ≤ hi.
Ein IntervalSet ist eine Teilmenge des Intervall-Universums eines Verbandes,
intern als n×n boolesche Matrix gespeichert (members[lo, hi]).
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import Iterator, Optional
import logging

import numpy as np

from models.errors import BadParameter, HostMismatch
from models.lattice import FiniteLattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


# Reihenfolge der Abschlussstufen
LEVELS = ('raw', 'abstract', 'basic', 'congruence', 'division')


@dataclass(frozen=True, order=True)
class Interval:
    """Domain Model: Interval [lo, hi]"""
    lo: int
    hi: int

    @classmethod
    def checked(cls, lattice: FiniteLattice, lo: int, hi: int) -> "Interval":
        """PUBLIC: Factory Method mit Prüfung lo ≤ hi

        Raises:
            BadParameter: lo ≰ hi oder Index außerhalb des Verbandes
        """
        if not (0 <= lo < lattice.n and 0 <= hi < lattice.n):
            raise BadParameter(f"Intervallgrenzen außerhalb des Verbandes: [{lo}, {hi}]")
        if not lattice.le(lo, hi):
            raise BadParameter(
                f"[{lattice.label_of(lo)}, {lattice.label_of(hi)}] ist kein Intervall (lo ≰ hi)",
                witness=[lattice.label_of(lo), lattice.label_of(hi)],
            )
        return cls(int(lo), int(hi))

    def is_trivial(self) -> bool:
        return self.lo == self.hi

    def labels(self, lattice: FiniteLattice) -> list:
        return [lattice.label_of(self.lo), lattice.label_of(self.hi)]

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True, eq=False)
class IntervalSet:
    """Domain Model: IntervalSet

    Attributes:
        lattice: Trägerverband
        members: n×n boolesche Matrix, nur auf lo ≤ hi belegt
        level: 'raw' | 'abstract' | 'basic' | 'congruence' | 'division'
    """
    lattice: FiniteLattice
    members: np.ndarray = field(repr=False)
    level: str = 'raw'

    def __post_init__(self) -> None:
        if self.level not in LEVELS:
            raise BadParameter(f"Unbekannte Stufe: {self.level!r}")
        n = self.lattice.n
        members = np.array(self.members, dtype=bool)
        if members.shape != (n, n):
            raise BadParameter(f"Intervallmatrix muss die Form {(n, n)} haben")
        members &= self.lattice.leq
        members.flags.writeable = False
        object.__setattr__(self, 'members', members)

    # ========== Factory Methods ==========

    @classmethod
    def empty(cls, lattice: FiniteLattice) -> "IntervalSet":
        return cls(lattice, np.zeros((lattice.n, lattice.n), dtype=bool))

    @classmethod
    def trivial(cls, lattice: FiniteLattice) -> "IntervalSet":
        """PUBLIC: 𝓞 - Menge aller trivialen Intervalle"""
        return cls(lattice, np.eye(lattice.n, dtype=bool), level='division')

    @classmethod
    def everything(cls, lattice: FiniteLattice) -> "IntervalSet":
        """PUBLIC: Menge aller Intervalle"""
        return cls(lattice, lattice.leq.copy(), level='division')

    @classmethod
    def of(cls, lattice: FiniteLattice, intervals, level: str = 'raw') -> "IntervalSet":
        """PUBLIC: Factory Method aus einer Liste von Intervallen oder Indexpaaren"""
        members = np.zeros((lattice.n, lattice.n), dtype=bool)
        for item in intervals:
            lo, hi = (item.lo, item.hi) if isinstance(item, Interval) else item
            Interval.checked(lattice, lo, hi)
            members[lo, hi] = True
        return cls(lattice, members, level=level)

    # ========== PUBLIC Methods ==========

    def contains(self, lo: int, hi: int) -> bool:
        return bool(self.members[lo, hi])

    def __contains__(self, item) -> bool:
        lo, hi = (item.lo, item.hi) if isinstance(item, Interval) else item
        return self.contains(lo, hi)

    def intervals(self) -> list:
        """PUBLIC: Alle Mitglieder in kanonischer (lexikographischer) Reihenfolge"""
        return [Interval(int(lo), int(hi)) for lo, hi in np.argwhere(self.members)]

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals())

    def __len__(self) -> int:
        return int(self.members.sum())

    def bits(self) -> np.ndarray:
        """PUBLIC: Bitset über dem kanonischen Intervall-Universum"""
        lo, hi = np.nonzero(self.lattice.leq)
        return self.members[lo, hi].copy()

    def with_level(self, level: str) -> "IntervalSet":
        return IntervalSet(self.lattice, self.members, level=level)

    def union(self, other: "IntervalSet") -> "IntervalSet":
        self.__require_same_host(other)
        return IntervalSet(self.lattice, self.members | other.members)

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        self.__require_same_host(other)
        return IntervalSet(self.lattice, self.members & other.members)

    def issubset(self, other: "IntervalSet") -> bool:
        self.__require_same_host(other)
        return bool(np.all(~self.members | other.members))

    def nontrivial(self) -> list:
        """PUBLIC: Mitglieder mit lo < hi"""
        return [iv for iv in self.intervals() if not iv.is_trivial()]

    def to_dict(self) -> dict:
        """PUBLIC: Konvertiert zu Dictionary (IntervalSet-JSON)"""
        return {
            'lattice': self.lattice.digest,
            'level': self.level,
            'intervals': [iv.labels(self.lattice) for iv in self.intervals()],
        }

    # ========== PRIVATE Helper Methods ==========

    def __require_same_host(self, other: "IntervalSet") -> None:
        if other.lattice is not self.lattice and other.lattice.digest != self.lattice.digest:
            raise HostMismatch("Intervallmengen gehören zu verschiedenen Verbänden")

    # ========== Comparison ==========

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return (self.lattice.digest == other.lattice.digest
                and bool(np.array_equal(self.members, other.members)))

    def __hash__(self) -> int:
        return hash((self.lattice.digest, self.members.tobytes()))

    def __repr__(self) -> str:
        return f"IntervalSet(level='{self.level}', size={len(self)})"


def label_interval(lattice: FiniteLattice, interval: Optional[Interval]) -> Optional[list]:
    """Hilfsfunktion: Intervall als Label-Paar (None bleibt None)"""
    return interval.labels(lattice) if interval is not None else None
