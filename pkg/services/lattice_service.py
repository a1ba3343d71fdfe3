# services/lattice_service.py
"""
Lattice Service - Konstruktion, Validierung und Erzeugung endlicher Verbände

Verantwortlich für:
- build_lattice: Verband aus Labels und Überdeckungspaaren
- generate: Standardfamilien (chain, boolean, m3, n5, mk, product, interval, glued_sum, random)
- check_modular / check_distributive mit Zeugen-Tripeln
"""
from __future__ import annotations
from itertools import combinations
from string import ascii_lowercase
from typing import Optional, Sequence
import logging

import numpy as np

from config import RunConfig, DEFAULT_RUN_CONFIG
from models.errors import BadParameter, NotAPoset, TooLarge
from models.lattice import FiniteLattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


FAMILIES = ('chain', 'boolean', 'diamond_m3', 'm3', 'pentagon_n5', 'n5', 'mk',
            'product', 'interval_sublattice', 'interval', 'glued_sum', 'random_modular', 'random')


class LatticeService:
    """Service für Verbandskonstruktion und Verbandsgesetze"""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG

    # ========== PUBLIC Methods ==========

    def build_lattice(self, labels: Sequence[str], covers: Sequence[Sequence[str]],
                      name: str = "") -> FiniteLattice:
        """PUBLIC: Verband aus Labels und Hasse-Diagramm

        Die Ordnung ist der reflexiv-transitive Abschluss der Überdeckungen.

        Args:
            labels: eindeutige Element-Labels
            covers: Paare (unten, oben)
            name: optionaler Anzeigename

        Returns:
            Validierter FiniteLattice

        Raises:
            BadParameter: leere/doppelte Labels, unbekannte Labels in covers
            NotAPoset: Zyklus in covers
            NoBounds: kein kleinstes/größtes Element
            NotALattice: Paar ohne Infimum/Supremum
            TooLarge: mehr als max_lattice_size Elemente
        """
        labels = [str(x) for x in labels]
        if not labels:
            raise BadParameter("Ein Verband braucht mindestens ein Element")
        seen = set()
        for label in labels:
            if label in seen:
                raise BadParameter(f"Doppeltes Label: {label!r}", witness=label)
            seen.add(label)

        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        adjacency = np.eye(n, dtype=bool)
        for pair in covers:
            if len(pair) != 2:
                raise BadParameter(f"Überdeckung muss ein Paar sein: {pair!r}")
            lo, hi = (str(p) for p in pair)
            for label in (lo, hi):
                if label not in index:
                    raise BadParameter(f"Unbekanntes Label in covers: {label!r}", witness=label)
            if lo == hi:
                raise NotAPoset(f"Überdeckung {lo} < {hi} ist ein Zyklus", witness=[lo, hi])
            adjacency[index[lo], index[hi]] = True

        leq = self.transitive_closure(adjacency)
        cycle = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
        if len(cycle):
            i, j = (int(v) for v in cycle[0])
            raise NotAPoset(f"Zyklus zwischen {labels[i]} und {labels[j]}",
                            witness=[labels[i], labels[j]])

        lattice = FiniteLattice.from_order(labels, leq, name=name)
        self.__check_size(lattice.n)
        logger.info(f"Verband '{name or 'L'}' gebaut: {n} Elemente, "
                    f"modular={lattice.is_modular}, distributiv={lattice.is_distributive}")
        return lattice

    @staticmethod
    def transitive_closure(adjacency: np.ndarray) -> np.ndarray:
        """PUBLIC: Reflexiv-transitiver Abschluss (Floyd-Warshall auf Booleschen Matrizen)"""
        reach = np.array(adjacency, dtype=bool) | np.eye(len(adjacency), dtype=bool)
        for k in range(len(reach)):
            reach |= reach[:, k:k + 1] & reach[k:k + 1, :]
        return reach

    def from_order(self, labels: Sequence[str], leq: np.ndarray, name: str = "") -> FiniteLattice:
        """PUBLIC: Verband aus einer vollständigen Ordnungstabelle (mit Größenprüfung)"""
        self.__check_size(len(labels))
        return FiniteLattice.from_order(labels, leq, name=name)

    def generate(self, family: str, *params) -> FiniteLattice:
        """PUBLIC: Erzeugt eine Instanz einer Standardfamilie

        Args:
            family: siehe FAMILIES
            params: familienabhängige Parameter (n, k, Verbände, Grenzen, Seed)

        Raises:
            BadParameter: unbekannte Familie oder ungültige Parameter
        """
        family = family.lower()
        if family == 'chain':
            return self.chain(*params)
        if family == 'boolean':
            return self.boolean(*params)
        if family in ('diamond_m3', 'm3'):
            return self.diamond_m3()
        if family in ('pentagon_n5', 'n5'):
            return self.pentagon_n5()
        if family == 'mk':
            return self.mk(*params)
        if family == 'product':
            return self.product(*params)
        if family in ('interval_sublattice', 'interval'):
            return self.interval_sublattice(*params)
        if family == 'glued_sum':
            return self.glued_sum(*params)
        if family in ('random_modular', 'random'):
            return self.random_modular(*params)
        raise BadParameter(f"Unbekannte Familie: {family!r} (erlaubt: {', '.join(FAMILIES)})")

    def chain(self, n: int) -> FiniteLattice:
        """PUBLIC: Kette mit n Elementen (0 < m < 1 bzw. 0 < m1 < ... < 1)"""
        n = self.__positive(n, 'n')
        self.__check_size(n)
        if n == 1:
            labels = ['0']
        elif n == 3:
            labels = ['0', 'm', '1']
        else:
            labels = ['0'] + [f"m{i}" for i in range(1, n - 1)] + ['1']
        leq = np.triu(np.ones((n, n), dtype=bool))
        return FiniteLattice.from_order(labels, leq, name=f"chain{n}")

    def boolean(self, n: int) -> FiniteLattice:
        """PUBLIC: Boolesche Algebra mit n Atomen (Labels = Atombuchstaben)"""
        n = self.__positive(n, 'n')
        if n > len(ascii_lowercase):
            raise BadParameter(f"Höchstens {len(ascii_lowercase)} Atome unterstützt")
        self.__check_size(2 ** n)
        full = (1 << n) - 1
        masks = sorted(range(2 ** n), key=lambda m: (bin(m).count('1'), m))
        labels = []
        for m in masks:
            if m == 0:
                labels.append('0')
            elif m == full:
                labels.append('1')
            else:
                labels.append(''.join(ascii_lowercase[i] for i in range(n) if m >> i & 1))
        arr = np.array(masks)
        leq = (arr[:, None] & ~arr[None, :]) == 0
        return FiniteLattice.from_order(labels, leq, name=f"boolean{n}")

    def mk(self, k: int) -> FiniteLattice:
        """PUBLIC: M_k - 0, k paarweise unvergleichbare Atome, 1"""
        k = self.__positive(k, 'k')
        self.__check_size(k + 2)
        atoms = list(ascii_lowercase[:k]) if k <= len(ascii_lowercase) else [f"a{i}" for i in range(1, k + 1)]
        labels = ['0'] + atoms + ['1']
        covers = [('0', a) for a in atoms] + [(a, '1') for a in atoms]
        return self.build_lattice(labels, covers, name=f"m{k}")

    def diamond_m3(self) -> FiniteLattice:
        return self.mk(3)

    def pentagon_n5(self) -> FiniteLattice:
        """PUBLIC: N_5 mit 0 < x < z < 1 und 0 < y < 1"""
        return self.build_lattice(
            ['0', 'x', 'y', 'z', '1'],
            [('0', 'x'), ('x', 'z'), ('z', '1'), ('0', 'y'), ('y', '1')],
            name='n5',
        )

    def product(self, first: FiniteLattice, second: FiniteLattice) -> FiniteLattice:
        """PUBLIC: Komponentenweises Produkt, Labels '(p,q)', lexikographisch indiziert"""
        self.__check_size(first.n * second.n)
        n = first.n * second.n
        leq = (first.leq[:, None, :, None] & second.leq[None, :, None, :]).reshape(n, n)
        labels = [f"({p},{q})" for p in first.labels for q in second.labels]
        return FiniteLattice.from_order(labels, leq, name=f"{first.name or 'L1'}x{second.name or 'L2'}")

    def interval_sublattice(self, lattice: FiniteLattice, a, b) -> FiniteLattice:
        """PUBLIC: Intervall [a, b] mit induzierter Ordnung (Labels bleiben erhalten)

        Args:
            a, b: Elementindex oder Label

        Raises:
            BadParameter: a ≰ b
        """
        lo, hi = self.__element(lattice, a), self.__element(lattice, b)
        if not lattice.le(lo, hi):
            raise BadParameter(
                f"{lattice.label_of(lo)} ≰ {lattice.label_of(hi)}",
                witness=[lattice.label_of(lo), lattice.label_of(hi)],
            )
        elements = lattice.interval_elements(lo, hi)
        leq = lattice.leq[np.ix_(elements, elements)]
        labels = [lattice.label_of(x) for x in elements]
        name = f"{lattice.name or 'L'}[{lattice.label_of(lo)},{lattice.label_of(hi)}]"
        return FiniteLattice.from_order(labels, leq, name=name)

    def glued_sum(self, lower: FiniteLattice, upper: FiniteLattice) -> FiniteLattice:
        """PUBLIC: Verklebte Summe - top(lower) wird mit bottom(upper) identifiziert"""
        rest = [y for y in range(upper.n) if y != upper.bottom]
        n = lower.n + len(rest)
        self.__check_size(n)
        leq = np.zeros((n, n), dtype=bool)
        leq[:lower.n, :lower.n] = lower.leq
        leq[:lower.n, lower.n:] = True
        leq[lower.n:, lower.n:] = upper.leq[np.ix_(rest, rest)]
        taken = set(lower.labels)
        labels = list(lower.labels)
        for y in rest:
            label = upper.label_of(y)
            while label in taken:
                label += "'"
            taken.add(label)
            labels.append(label)
        return FiniteLattice.from_order(labels, leq, name=f"{lower.name or 'L1'}+{upper.name or 'L2'}")

    def random_modular(self, seed: int = 0, max_size: int = 8) -> FiniteLattice:
        """PUBLIC: Zufälliger modularer Verband mit höchstens max_size Elementen

        Setzt Ketten, M_k, Produkte, verklebte Summen und Intervalle zusammen
        (alle Konstruktionen erhalten Modularität) und benennt die Elemente
        zufällig um.
        """
        max_size = self.__positive(max_size, 'max_size')
        rng = np.random.default_rng(int(seed))
        lattice = self.__random_piece(rng, max_size, depth=0)
        perm = rng.permutation(lattice.n)
        leq = lattice.leq[np.ix_(perm, perm)]
        labels = [f"v{i}" for i in range(lattice.n)]
        result = FiniteLattice.from_order(labels, leq, name=f"random{seed}")
        logger.debug(f"Zufallsverband seed={seed}: {result.n} Elemente")
        return result

    def check_modular(self, lattice: FiniteLattice) -> dict:
        """PUBLIC: Modulargesetz (a∨c)∧b = a∨(c∧b) für alle a ≤ b

        Returns:
            {'holds': bool, 'witness': {'a','b','c'} als Labels oder None}
        """
        return self.__verdict(lattice, lattice.modular_witness)

    def check_distributive(self, lattice: FiniteLattice) -> dict:
        """PUBLIC: Distributivgesetz a∧(b∨c) = (a∧b)∨(a∧c) für alle Tripel"""
        return self.__verdict(lattice, lattice.distributive_witness)

    def check_tables(self, lattice: FiniteLattice) -> bool:
        """PUBLIC: Meet-/Join-Tabellen stimmen mit Infimum/Supremum aus leq überein"""
        leq = lattice.leq
        n = lattice.n
        for i in range(n):
            for j in range(n):
                m, s = lattice.meet[i, j], lattice.join[i, j]
                lower = leq[:, i] & leq[:, j]
                upper = leq[i, :] & leq[j, :]
                if not (lower[m] and np.all(leq[lower, m])):
                    return False
                if not (upper[s] and np.all(leq[s, upper])):
                    return False
        return True

    def check_directed_suprema(self, lattice: FiniteLattice, samples: int = 200,
                               seed: int = 0) -> Optional[list]:
        """PUBLIC: Stichprobe - jede gerichtete Teilmenge enthält ihr Supremum

        Returns:
            None wenn alle Stichproben bestehen, sonst die verletzende Teilmenge (Labels)
        """
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            size = int(rng.integers(1, lattice.n + 1))
            subset = [int(x) for x in rng.choice(lattice.n, size=size, replace=False)]
            if not self.__is_directed(lattice, subset):
                continue
            if lattice.join_all(subset) not in subset:
                return [lattice.label_of(x) for x in subset]
        return None

    # ========== PRIVATE Helper Methods ==========

    def __random_piece(self, rng: np.random.Generator, budget: int, depth: int) -> FiniteLattice:
        """PRIVATE: Rekursiver Baustein für random_modular (Größe ≤ budget)"""
        kinds = ['chain', 'mk']
        if depth < 2 and budget >= 4:
            kinds += ['product', 'glued_sum', 'interval']
        kind = kinds[int(rng.integers(len(kinds)))]

        if kind == 'chain' or budget < 3:
            return self.chain(int(rng.integers(1, budget + 1)))
        if kind == 'mk':
            return self.mk(int(rng.integers(1, budget - 1)))
        if kind == 'product':
            left_budget = int(rng.integers(2, budget // 2 + 1))
            left = self.__random_piece(rng, left_budget, depth + 1)
            right = self.__random_piece(rng, max(1, budget // left.n), depth + 1)
            return self.product(left, right)
        if kind == 'glued_sum':
            left = self.__random_piece(rng, budget - 1, depth + 1)
            right = self.__random_piece(rng, budget - left.n + 1, depth + 1)
            return self.glued_sum(left, right)
        base = self.__random_piece(rng, budget * 2, depth + 1) if budget * 2 <= self.config.max_lattice_size \
            else self.__random_piece(rng, budget, depth + 1)
        pairs = [(a, b) for a in range(base.n) for b in range(base.n)
                 if base.le(a, b) and len(base.interval_elements(a, b)) <= budget]
        a, b = pairs[int(rng.integers(len(pairs)))]
        return self.interval_sublattice(base, a, b)

    @staticmethod
    def __is_directed(lattice: FiniteLattice, subset: list) -> bool:
        members = set(subset)
        for x, y in combinations(subset, 2):
            if not any(lattice.le(x, z) and lattice.le(y, z) for z in members):
                return False
        return True

    @staticmethod
    def __verdict(lattice: FiniteLattice, witness: Optional[tuple]) -> dict:
        if witness is None:
            return {'holds': True, 'witness': None}
        a, b, c = witness
        return {
            'holds': False,
            'witness': {'a': lattice.label_of(a), 'b': lattice.label_of(b), 'c': lattice.label_of(c)},
        }

    @staticmethod
    def __element(lattice: FiniteLattice, ref) -> int:
        if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool):
            if not 0 <= int(ref) < lattice.n:
                raise BadParameter(f"Elementindex außerhalb des Verbandes: {ref}")
            return int(ref)
        return lattice.index_of(str(ref))

    @staticmethod
    def __positive(value, name: str) -> int:
        try:
            value = int(value)
        except (TypeError, ValueError):
            raise BadParameter(f"{name} muss eine Ganzzahl sein, nicht {value!r}") from None
        if value < 1:
            raise BadParameter(f"{name} muss ≥ 1 sein, nicht {value}", witness=value)
        return value

    def __check_size(self, n: int) -> None:
        if n > self.config.max_lattice_size:
            raise TooLarge(
                f"Verband mit {n} Elementen überschreitet max_lattice_size={self.config.max_lattice_size}",
                details={'bound': 'max_lattice_size', 'limit': self.config.max_lattice_size, 'size': n},
            )
