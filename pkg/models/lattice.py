# models/lattice.py
"""
Domain Model: FiniteLattice

Endlicher Verband mit vollständiger Ordnungstabelle, Meet-/Join-Tabellen,
kleinstem/größtem Element und kanonischem Digest.

Elemente werden intern ausschließlich über Indizes angesprochen; Labels
dienen nur der Darstellung.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Optional, Sequence
import hashlib
import logging

import numpy as np

from models.errors import BadParameter, NoBounds, NotALattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """Domain Model: FiniteLattice

    Attributes:
        labels: eindeutige Element-Labels (Index = Element)
        leq: n×n boolesche Ordnungstabelle, leq[i, j] ⇔ i ≤ j
        meet: n×n Tabelle der Infima
        join: n×n Tabelle der Suprema
        bottom: Index des kleinsten Elements
        top: Index des größten Elements
        name: optionaler Anzeigename
    """
    labels: tuple
    leq: np.ndarray = field(repr=False)
    meet: np.ndarray = field(repr=False)
    join: np.ndarray = field(repr=False)
    bottom: int
    top: int
    name: str = ""

    def __post_init__(self) -> None:
        """Validierung der Tabellenformen"""
        n = len(self.labels)
        if n == 0:
            raise BadParameter("Ein Verband braucht mindestens ein Element")
        for attr in ('leq', 'meet', 'join'):
            arr = getattr(self, attr)
            if tuple(arr.shape) != (n, n):
                raise BadParameter(f"{attr} muss die Form {(n, n)} haben, nicht {arr.shape}")
            if arr.flags.writeable:
                object.__setattr__(self, attr, _readonly(arr.copy()))

    # ========== Factory Methods ==========

    @classmethod
    def from_order(cls, labels: Sequence[str], leq: np.ndarray, name: str = "") -> "FiniteLattice":
        """PUBLIC: Factory Method - Verband aus einer (gültigen) Halbordnung

        Bestimmt bottom/top und die Meet-/Join-Tabellen über die Signatur der
        Ober- bzw. Untermengen: In einem Verband ist die gemeinsame Obermenge
        von i und j genau ↑(i ∨ j).

        Raises:
            NoBounds: kleinstes oder größtes Element fehlt
            NotALattice: ein Paar hat kein Infimum/Supremum (Paar als witness)
        """
        labels = tuple(str(x) for x in labels)
        leq = np.array(leq, dtype=bool)
        n = len(labels)

        bottoms = np.flatnonzero(leq.all(axis=1))
        tops = np.flatnonzero(leq.all(axis=0))
        if len(bottoms) != 1 or len(tops) != 1:
            missing = 'kleinstes' if len(bottoms) != 1 else 'größtes'
            raise NoBounds(f"Kein eindeutiges {missing} Element", witness=missing)

        up_id = {leq[i, :].tobytes(): i for i in range(n)}
        down_id = {leq[:, i].tobytes(): i for i in range(n)}
        join = np.zeros((n, n), dtype=np.int64)
        meet = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                above = (leq[i, :] & leq[j, :]).tobytes()
                below = (leq[:, i] & leq[:, j]).tobytes()
                if above not in up_id:
                    raise NotALattice(f"{labels[i]} und {labels[j]} haben kein Supremum",
                                      witness=[labels[i], labels[j], 'join'])
                if below not in down_id:
                    raise NotALattice(f"{labels[i]} und {labels[j]} haben kein Infimum",
                                      witness=[labels[i], labels[j], 'meet'])
                join[i, j] = join[j, i] = up_id[above]
                meet[i, j] = meet[j, i] = down_id[below]

        return cls(
            labels=labels,
            leq=_readonly(leq),
            meet=_readonly(meet),
            join=_readonly(join),
            bottom=int(bottoms[0]),
            top=int(tops[0]),
            name=name,
        )

    # ========== PUBLIC Methods ==========

    @property
    def n(self) -> int:
        """PUBLIC: Anzahl der Elemente"""
        return len(self.labels)

    def index_of(self, label: str) -> int:
        """PUBLIC: Index eines Labels

        Raises:
            BadParameter: unbekanntes Label
        """
        try:
            return self._label_index[str(label)]
        except KeyError:
            raise BadParameter(f"Unbekanntes Element: {label!r}") from None

    def label_of(self, index: int) -> str:
        """PUBLIC: Label eines Index"""
        return self.labels[int(index)]

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self.leq[a, b])

    def meet_all(self, elements: Iterable[int]) -> int:
        """PUBLIC: Infimum einer Elementmenge (leere Menge → top)"""
        return int(reduce(lambda acc, x: self.meet[acc, x], elements, self.top))

    def join_all(self, elements: Iterable[int]) -> int:
        """PUBLIC: Supremum einer Elementmenge (leere Menge → bottom)"""
        return int(reduce(lambda acc, x: self.join[acc, x], elements, self.bottom))

    def upset(self, a: int) -> np.ndarray:
        """PUBLIC: Indizes aller x ≥ a"""
        return np.flatnonzero(self.leq[a, :])

    def downset(self, a: int) -> np.ndarray:
        """PUBLIC: Indizes aller x ≤ a"""
        return np.flatnonzero(self.leq[:, a])

    def interval_elements(self, lo: int, hi: int) -> np.ndarray:
        """PUBLIC: Indizes aller x mit lo ≤ x ≤ hi"""
        return np.flatnonzero(self.leq[lo, :] & self.leq[:, hi])

    @cached_property
    def covers(self) -> np.ndarray:
        """PUBLIC: covers[i, j] ⇔ j überdeckt i"""
        lt = self.leq.copy()
        lt[np.diag_indices_from(lt)] = False
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return _readonly(lt & ~between)

    @cached_property
    def cover_pairs(self) -> tuple:
        """PUBLIC: Hasse-Diagramm als Paare (unten, oben), nach Indizes sortiert"""
        return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(self.covers)))

    @cached_property
    def heights(self) -> tuple:
        """PUBLIC: Länge der längsten Kette von bottom zu jedem Element"""
        heights = [0] * self.n
        for x in sorted(range(self.n), key=lambda i: int(self.leq[:, i].sum())):
            below = np.flatnonzero(self.covers[:, x])
            heights[x] = 1 + max(heights[b] for b in below) if len(below) else 0
        return tuple(heights)

    @cached_property
    def linear_extension(self) -> tuple:
        """PUBLIC: Feste lineare Erweiterung (Höhe, dann Index)"""
        return tuple(sorted(range(self.n), key=lambda i: (self.heights[i], i)))

    @cached_property
    def lower_covers(self) -> tuple:
        """PUBLIC: Für jedes x die Liste der unteren Nachbarn"""
        return tuple(tuple(int(i) for i in np.flatnonzero(self.covers[:, x])) for x in range(self.n))

    @cached_property
    def upper_covers(self) -> tuple:
        """PUBLIC: Für jedes x die Liste der oberen Nachbarn"""
        return tuple(tuple(int(j) for j in np.flatnonzero(self.covers[x, :])) for x in range(self.n))

    @property
    def atoms(self) -> tuple:
        return self.upper_covers[self.bottom]

    @property
    def coatoms(self) -> tuple:
        return self.lower_covers[self.top]

    @cached_property
    def modular_witness(self) -> Optional[tuple]:
        """PUBLIC: Erstes Tripel (a, b, c) mit a ≤ b und (a∨c)∧b ≠ a∨(c∧b), sonst None"""
        n = self.n
        idx = np.arange(n)
        a = idx[:, None, None]
        b = idx[None, :, None]
        c = idx[None, None, :]
        lhs = self.meet[self.join[a, c], b]
        rhs = self.join[a, self.meet[c, b]]
        bad = self.leq[:, :, None] & (lhs != rhs)
        hits = np.argwhere(bad)
        return tuple(int(v) for v in hits[0]) if len(hits) else None

    @cached_property
    def distributive_witness(self) -> Optional[tuple]:
        """PUBLIC: Erstes Tripel (a, b, c) mit a∧(b∨c) ≠ (a∧b)∨(a∧c), sonst None"""
        n = self.n
        idx = np.arange(n)
        a = idx[:, None, None]
        b = idx[None, :, None]
        c = idx[None, None, :]
        lhs = self.meet[a, self.join[b, c]]
        rhs = self.join[self.meet[a, b], self.meet[a, c]]
        hits = np.argwhere(lhs != rhs)
        return tuple(int(v) for v in hits[0]) if len(hits) else None

    @property
    def is_modular(self) -> bool:
        return self.modular_witness is None

    @property
    def is_distributive(self) -> bool:
        return self.distributive_witness is None

    @cached_property
    def is_complemented(self) -> bool:
        """PUBLIC: Jedes Element hat ein Komplement"""
        has_complement = ((self.meet == self.bottom) & (self.join == self.top)).any(axis=1)
        return bool(has_complement.all())

    @property
    def is_boolean(self) -> bool:
        return self.is_distributive and self.is_complemented

    @cached_property
    def digest(self) -> str:
        """PUBLIC: Kanonischer Inhalts-Hash

        Elemente werden nach (Höhe, Anzahl oberer, Anzahl unterer Elemente)
        und danach nach den Multimengen dieser Schlüssel ober-/unterhalb
        sortiert; gehasht wird die so permutierte Ordnungstabelle.
        """
        n = self.n
        base = [(self.heights[i], int(self.leq[i, :].sum()), int(self.leq[:, i].sum()))
                for i in range(n)]
        refined = [
            (base[i],
             tuple(sorted(base[j] for j in np.flatnonzero(self.leq[i, :]))),
             tuple(sorted(base[j] for j in np.flatnonzero(self.leq[:, i]))))
            for i in range(n)
        ]
        order = sorted(range(n), key=lambda i: (refined[i], i))
        canonical = self.leq[np.ix_(order, order)]
        h = hashlib.sha256()
        h.update(str(n).encode('ascii'))
        h.update(np.packbits(canonical).tobytes())
        return h.hexdigest()

    def same_structure(self, other: "FiniteLattice") -> bool:
        """PUBLIC: Gleiche Größe und identische Ordnungstabelle"""
        return self.n == other.n and bool(np.array_equal(self.leq, other.leq))

    def to_dict(self) -> dict:
        """PUBLIC: Konvertiert zu Dictionary (Verbands-JSON)"""
        return {
            'name': self.name,
            'elements': list(self.labels),
            'covers': [[self.labels[i], self.labels[j]] for i, j in self.cover_pairs],
        }

    # ========== PRIVATE Helper Methods ==========

    @cached_property
    def _label_index(self) -> dict:
        return {label: i for i, label in enumerate(self.labels)}

    # ========== String Representation ==========

    def __str__(self) -> str:
        name = self.name or 'L'
        return f"FiniteLattice({name}, n={self.n})"

    def __repr__(self) -> str:
        return (f"FiniteLattice(name='{self.name}', n={self.n}, "
                f"bottom={self.label_of(self.bottom)!r}, top={self.label_of(self.top)!r}, "
                f"digest={self.digest[:12]})")
