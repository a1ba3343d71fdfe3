# models/operator_lattice.py
"""
Domain Models: OperatorLattice, NucleusLattice

Eine aufgezählte Familie von Inflatoren (I(A), S(A), P(A), C(A), N(A))
in kanonischer Reihenfolge. Die punktweise Ordnung wird bei Bedarf als
FiniteLattice über den Mitgliedsindizes materialisiert, sodass Operatoren
zweiter Stufe (z.B. Gab, μ^k) selbst wieder Inflatoren auf diesem Verband sind.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional
import logging

import numpy as np

from models.errors import BadParameter, EmptyFamily, MemberNotInFamily
from models.inflator import Inflator
from models.lattice import FiniteLattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


FAMILY_KINDS = ('all', 'stable', 'prenucleus', 'idempotent', 'closure', 'nucleus', 'totalizers')


@dataclass(frozen=True, eq=False)
class OperatorLattice:
    """Domain Model: OperatorLattice

    Attributes:
        host: Verband, auf dem die Mitglieder leben
        family_kind: Art der Familie
        members: Inflatoren in kanonischer Reihenfolge (lexikographisch nach Wertetabelle)
    """
    host: FiniteLattice
    family_kind: str
    members: tuple = field(repr=False)

    def __post_init__(self) -> None:
        if self.family_kind not in FAMILY_KINDS:
            raise BadParameter(f"Unbekannte Familie: {self.family_kind!r}")
        if not self.members:
            raise EmptyFamily(f"Familie '{self.family_kind}' ist leer")
        ordered = tuple(sorted(self.members, key=lambda d: d.values))
        object.__setattr__(self, 'members', ordered)

    # ========== PUBLIC Methods ==========

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def member(self, index: int) -> Inflator:
        return self.members[int(index)]

    def index_of(self, d: Inflator) -> int:
        """PUBLIC: Index eines Mitglieds

        Raises:
            MemberNotInFamily
        """
        try:
            return self._member_index[d.values]
        except KeyError:
            raise MemberNotInFamily(
                f"{d} gehört nicht zur Familie '{self.family_kind}'",
                witness=d.table(),
            ) from None

    def contains(self, d: Inflator) -> bool:
        return d.values in self._member_index

    def find(self, d: Inflator) -> Optional[int]:
        return self._member_index.get(d.values)

    @cached_property
    def value_matrix(self) -> np.ndarray:
        """PUBLIC: m×n Matrix der Wertetabellen"""
        arr = np.array([d.values for d in self.members], dtype=np.int64)
        arr.flags.writeable = False
        return arr

    @cached_property
    def as_lattice(self) -> FiniteLattice:
        """PUBLIC: Punktweise Ordnung als FiniteLattice über den Mitgliedsindizes"""
        M = self.value_matrix
        leq = self.host.leq[M[:, None, :], M[None, :, :]].all(axis=2)
        labels = [f"e{i}" for i in range(self.size)]
        lattice = FiniteLattice.from_order(labels, leq, name=f"{self.family_kind}({self.host.name or 'A'})")
        logger.debug(f"Operatorverband '{self.family_kind}' materialisiert: {self.size} Mitglieder")
        return lattice

    @property
    def bottom(self) -> Inflator:
        return self.members[self.as_lattice.bottom]

    @property
    def top(self) -> Inflator:
        return self.members[self.as_lattice.top]

    def meet(self, d: Inflator, k: Inflator) -> Inflator:
        """PUBLIC: Infimum zweier Mitglieder in der Familie"""
        return self.members[self.as_lattice.meet[self.index_of(d), self.index_of(k)]]

    def join(self, d: Inflator, k: Inflator) -> Inflator:
        """PUBLIC: Supremum zweier Mitglieder in der Familie"""
        return self.members[self.as_lattice.join[self.index_of(d), self.index_of(k)]]

    def self_map(self, images) -> Inflator:
        """PUBLIC: Selbstabbildung der Familie als Inflator auf as_lattice

        Args:
            images: Liste von Mitgliedern, images[i] = Bild von members[i]
        """
        return Inflator(self.as_lattice, tuple(self.index_of(d) for d in images))

    def apply_self_map(self, phi: Inflator, d: Inflator) -> Inflator:
        """PUBLIC: Wendet eine Selbstabbildung (Inflator auf as_lattice) auf ein Mitglied an"""
        return self.members[phi(self.index_of(d))]

    def to_dict(self) -> dict:
        """PUBLIC: Export als Verbands-JSON plus Mitgliedertabellen"""
        return {
            'host': self.host.digest,
            'family': self.family_kind,
            'size': self.size,
            'lattice': self.as_lattice.to_dict(),
            'members': [d.table() for d in self.members],
        }

    # ========== PRIVATE Helper Methods ==========

    @cached_property
    def _member_index(self) -> dict:
        return {d.values: i for i, d in enumerate(self.members)}

    # ========== String Representation ==========

    def __str__(self) -> str:
        return f"OperatorLattice({self.family_kind}, {self.size} Mitglieder)"

    def __repr__(self) -> str:
        return f"OperatorLattice(family_kind='{self.family_kind}', size={self.size})"


@dataclass(frozen=True, eq=False)
class NucleusLattice(OperatorLattice):
    """Domain Model: NucleusLattice - N(A) als Frame"""

    @classmethod
    def of(cls, host: FiniteLattice, nuclei) -> "NucleusLattice":
        return cls(host, 'nucleus', tuple(nuclei))

    @property
    def frame_witness(self) -> Optional[tuple]:
        """PUBLIC: Verletzendes Tripel des Distributivgesetzes (None = Frame)"""
        return self.as_lattice.distributive_witness

    @property
    def frame_flag(self) -> bool:
        return self.frame_witness is None

    def to_dict(self) -> dict:
        data = super().to_dict()
        data['frame'] = self.frame_flag
        return data
