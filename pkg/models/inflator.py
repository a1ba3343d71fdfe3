# models/inflator.py
"""
Domain Model: Inflator

Monotone, inflationäre Selbstabbildung eines endlichen Verbandes, gespeichert
als Wertetabelle values[x] = d(x) über den Elementindizes.

Klassifikations-Flags (stable, prenucleus, idempotent, nucleus) werden bei
Bedarf berechnet und zwischengespeichert.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence
import logging

import numpy as np

from models.errors import BadParameter, HostMismatch, NotInflationary, NotMonotone
from models.lattice import FiniteLattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


FLAG_NAMES = ('stable', 'prenucleus', 'idempotent', 'nucleus')


@dataclass(frozen=True, eq=False)
class Inflator:
    """Domain Model: Inflator

    Attributes:
        lattice: Trägerverband
        values: Wertetabelle (Tupel von Elementindizes, Länge n)
        checked: False nur für bereits validierte Tabellen (Aufzählung)
    """
    lattice: FiniteLattice
    values: tuple
    checked: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        """Validierung: Länge, Wertebereich, inflationär, monoton"""
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, 'values', values)
        if not self.checked:
            return

        n = self.lattice.n
        if len(values) != n:
            raise BadParameter(f"Wertetabelle hat Länge {len(values)}, erwartet {n}")
        if any(v < 0 or v >= n for v in values):
            raise BadParameter("Wertetabelle enthält unbekannte Elemente")

        v = self.array
        leq = self.lattice.leq
        below = np.flatnonzero(~leq[np.arange(n), v])
        if len(below):
            x = int(below[0])
            raise NotInflationary(
                f"{self.lattice.label_of(x)} ≰ d({self.lattice.label_of(x)})",
                witness=self.lattice.label_of(x),
            )
        broken = np.argwhere(leq & ~leq[np.ix_(v, v)])
        if len(broken):
            x, y = (int(i) for i in broken[0])
            raise NotMonotone(
                f"{self.lattice.label_of(x)} ≤ {self.lattice.label_of(y)}, aber d(x) ≰ d(y)",
                witness=[self.lattice.label_of(x), self.lattice.label_of(y)],
            )

    # ========== Factory Methods ==========

    @classmethod
    def identity(cls, lattice: FiniteLattice) -> "Inflator":
        """PUBLIC: d_0̲ - die Identität"""
        return cls(lattice, tuple(range(lattice.n)), checked=False)

    @classmethod
    def top(cls, lattice: FiniteLattice) -> "Inflator":
        """PUBLIC: d̄ - konstant 1̄"""
        return cls(lattice, (lattice.top,) * lattice.n, checked=False)

    @classmethod
    def from_array(cls, lattice: FiniteLattice, arr: Sequence[int], trusted: bool = False) -> "Inflator":
        return cls(lattice, tuple(int(v) for v in arr), checked=not trusted)

    # ========== PUBLIC Methods ==========

    @cached_property
    def array(self) -> np.ndarray:
        """PUBLIC: Wertetabelle als (schreibgeschütztes) numpy-Array"""
        arr = np.asarray(self.values, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def __call__(self, x: int) -> int:
        return self.values[x]

    @cached_property
    def is_stable(self) -> bool:
        """PUBLIC: d(x) ∧ y ≤ d(x ∧ y) für alle x, y"""
        L = self.lattice
        v = self.array
        idx = np.arange(L.n)
        lhs = L.meet[v[:, None], idx[None, :]]
        rhs = v[L.meet]
        return bool(L.leq[lhs, rhs].all())

    @cached_property
    def is_prenucleus(self) -> bool:
        """PUBLIC: d(x ∧ y) = d(x) ∧ d(y) für alle x, y"""
        L = self.lattice
        v = self.array
        return bool(np.array_equal(v[L.meet], L.meet[np.ix_(v, v)]))

    @cached_property
    def is_idempotent(self) -> bool:
        v = self.array
        return bool(np.array_equal(v[v], v))

    @property
    def is_nucleus(self) -> bool:
        return self.is_prenucleus and self.is_idempotent

    @property
    def is_identity(self) -> bool:
        return self.values == tuple(range(self.lattice.n))

    @property
    def is_top(self) -> bool:
        return all(v == self.lattice.top for v in self.values)

    def flags(self) -> dict:
        """PUBLIC: Alle Klassifikations-Flags"""
        return {
            'stable': self.is_stable,
            'prenucleus': self.is_prenucleus,
            'idempotent': self.is_idempotent,
            'nucleus': self.is_nucleus,
        }

    def has_flag(self, family: str) -> bool:
        """PUBLIC: Gehört der Inflator zur Familie? ('all' ist immer wahr)"""
        if family in ('all', 'inflator'):
            return True
        if family == 'closure':
            return self.is_idempotent
        attr = f"is_{family}"
        if not hasattr(self, attr) or family not in FLAG_NAMES:
            raise BadParameter(f"Unbekannte Familie: {family!r}")
        return getattr(self, attr)

    def le(self, other: "Inflator") -> bool:
        """PUBLIC: Punktweiser Vergleich d ≤ k"""
        self.require_same_host(other)
        return bool(self.lattice.leq[self.array, other.array].all())

    def require_same_host(self, other: "Inflator") -> None:
        """PUBLIC: Prüft, dass beide Inflatoren auf demselben Verband leben

        Raises:
            HostMismatch
        """
        if other.lattice is self.lattice:
            return
        if other.lattice.digest != self.lattice.digest or not self.lattice.same_structure(other.lattice):
            raise HostMismatch("Inflatoren gehören zu verschiedenen Verbänden")

    def fixed_points(self) -> tuple:
        """PUBLIC: Indizes aller x mit d(x) = x"""
        return tuple(x for x, v in enumerate(self.values) if v == x)

    def image(self) -> tuple:
        return tuple(sorted(set(self.values)))

    def table(self) -> dict:
        """PUBLIC: Wertetabelle mit Labels"""
        L = self.lattice
        return {L.label_of(x): L.label_of(v) for x, v in enumerate(self.values)}

    def to_dict(self) -> dict:
        """PUBLIC: Konvertiert zu Dictionary (Inflator-JSON)"""
        return {
            'lattice': self.lattice.digest,
            'map': self.table(),
            'flags': self.flags(),
        }

    # ========== Comparison ==========

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Inflator):
            return NotImplemented
        return self.values == other.values and self.lattice.digest == other.lattice.digest

    def __hash__(self) -> int:
        return hash((self.lattice.digest, self.values))

    # ========== String Representation ==========

    def __str__(self) -> str:
        L = self.lattice
        pairs = ", ".join(f"{L.label_of(x)}↦{L.label_of(v)}" for x, v in enumerate(self.values))
        return "{" + pairs + "}"

    def __repr__(self) -> str:
        return f"Inflator({self.values})"
