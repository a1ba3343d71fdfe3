# services/inflator_service.py
"""
Inflator Service - Das Inflator-Monoid eines endlichen Verbandes

Verantwortlich für:
- make_inflator, compose, lattice_ops (punktweise), infty
- benannte Familien O_b, u_a, ι_a, Identität, Top
- totalizer / equalizer (geschlossene Formen) und brute_extremum (Orakel)
- enumerate_inflators (I(A), S(A), P(A), C(A), N(A))
- tot_class, tot_poset, pseudocomplement, order_predicates, prime_gaps
"""
from __future__ import annotations
from functools import reduce
from itertools import combinations
from math import prod
from typing import Iterable, Optional, Sequence
import logging

import numpy as np

from config import RunConfig, DEFAULT_RUN_CONFIG
from models.errors import (
    BadParameter,
    EmptyFamily,
    EnumerationBoundExceeded,
)
from models.inflator import Inflator
from models.lattice import FiniteLattice
from models.operator_lattice import NucleusLattice, OperatorLattice

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


NAMED_KINDS = ('o_b', 'u_a', 'iota_a', 'identity', 'top')
ENUMERABLE_FAMILIES = ('all', 'stable', 'prenucleus', 'idempotent', 'closure', 'nucleus')


class InflatorService:
    """Service für Inflatoren, Totalisatoren, Equalizer und Operatorfamilien"""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        self.__families = {}

    # ========== PUBLIC Methods: Konstruktion ==========

    def make_inflator(self, lattice: FiniteLattice, table: dict) -> Inflator:
        """PUBLIC: Inflator aus einer Label→Label-Tabelle

        Raises:
            BadParameter: Tabelle nicht total oder unbekannte Labels
            NotInflationary / NotMonotone: mit Zeugen
        """
        table = {str(k): str(v) for k, v in table.items()}
        missing = [label for label in lattice.labels if label not in table]
        if missing:
            raise BadParameter(f"Tabelle ist nicht total, es fehlt: {missing[0]!r}", witness=missing[0])
        extra = [label for label in table if label not in lattice.labels]
        if extra:
            raise BadParameter(f"Unbekanntes Element in der Tabelle: {extra[0]!r}", witness=extra[0])
        values = tuple(lattice.index_of(table[label]) for label in lattice.labels)
        return Inflator(lattice, values)

    def compose(self, d: Inflator, k: Inflator) -> Inflator:
        """PUBLIC: (dk)(a) = d(k(a))

        Raises:
            HostMismatch
        """
        d.require_same_host(k)
        return Inflator(d.lattice, tuple(d.array[k.array]), checked=False)

    def power(self, d: Inflator, exponent: int) -> Inflator:
        """PUBLIC: d^k (d^0 = Identität)"""
        if exponent < 0:
            raise BadParameter("Exponent muss ≥ 0 sein")
        result = Inflator.identity(d.lattice)
        for _ in range(exponent):
            result = self.compose(d, result)
        return result

    def lattice_ops(self, ds: Iterable[Inflator], mode: str, check_directed: bool = True,
                    report: Optional[dict] = None) -> Inflator:
        """PUBLIC: Punktweises Infimum ('meet') oder Supremum ('join')

        Beim Supremum wird (sofern check_directed) die Gerichtetheit der
        Eingabe geprüft und in report['directed'] vermerkt; ein gerichtetes
        Supremum stabiler Inflatoren, das nicht stabil ist, setzt zusätzlich
        report['stable_lost']. Die Flags des Ergebnisses werden immer neu
        berechnet.

        Raises:
            EmptyFamily: leere Eingabe
            HostMismatch: verschiedene Träger
        """
        ds = list(ds)
        if not ds:
            raise EmptyFamily("Infimum/Supremum der leeren Familie ist kein Inflator")
        if mode not in ('meet', 'join'):
            raise BadParameter(f"Unbekannter Modus: {mode!r}")
        first = ds[0]
        for d in ds[1:]:
            first.require_same_host(d)
        table = first.lattice.meet if mode == 'meet' else first.lattice.join
        values = reduce(lambda acc, d: table[acc, d.array], ds[1:], first.array)
        result = Inflator(first.lattice, tuple(values), checked=False)

        if mode == 'join' and check_directed and len(ds) > 1:
            directed = self.is_directed(ds)
            stable_lost = directed and all(d.is_stable for d in ds) and not result.is_stable
            if not directed:
                logger.debug(f"join über {len(ds)} Inflatoren ist nicht gerichtet")
            if stable_lost:
                logger.warning(f"Gerichtetes Supremum stabiler Inflatoren ist nicht stabil: {result}")
            if report is not None:
                report['directed'] = directed
                report['stable_lost'] = stable_lost
        return result

    def meet(self, *ds: Inflator) -> Inflator:
        return self.lattice_ops(ds, 'meet')

    def join(self, *ds: Inflator) -> Inflator:
        return self.lattice_ops(ds, 'join')

    def is_directed(self, ds: Sequence[Inflator]) -> bool:
        """PUBLIC: Jedes Paar hat eine obere Schranke innerhalb der Familie"""
        ds = list(ds)
        for d, k in combinations(ds, 2):
            if not any(d.le(z) and k.le(z) for z in ds):
                return False
        return True

    def infty(self, d: Inflator) -> tuple:
        """PUBLIC: d^∞ durch Iteration d^{k+1} = d ∘ d^k

        Returns:
            (d^∞, steps) mit steps = kleinstes k mit d^{k+1} = d^k
        """
        current = d
        steps = 1
        limit = d.lattice.n * d.lattice.n + 1
        while True:
            following = self.compose(d, current)
            if following.values == current.values:
                return current, steps
            current = following
            steps += 1
            if steps > limit:
                raise BadParameter(f"infty stabilisiert nicht nach {limit} Schritten")

    def closure(self, d: Inflator) -> Inflator:
        """PUBLIC: d^∞ ohne Schrittzahl"""
        return self.infty(d)[0]

    # ========== PUBLIC Methods: Benannte Inflatoren ==========

    def named(self, lattice: FiniteLattice, kind: str, param=None) -> Inflator:
        """PUBLIC: O_b, u_a, ι_a, Identität oder Top

        Args:
            kind: 'o_b' | 'u_a' | 'iota_a' | 'identity' | 'top'
            param: Element (Index oder Label), ignoriert für identity/top
        """
        kind = kind.lower()
        if kind == 'identity':
            return Inflator.identity(lattice)
        if kind == 'top':
            return Inflator.top(lattice)
        if kind not in NAMED_KINDS:
            raise BadParameter(f"Unbekannte Art: {kind!r} (erlaubt: {', '.join(NAMED_KINDS)})")
        if param is None:
            raise BadParameter(f"{kind} braucht ein Element als Parameter")
        p = self.__element(lattice, param)
        idx = np.arange(lattice.n)
        if kind == 'o_b':
            values = np.where(lattice.leq[p, :], lattice.top, idx)
        elif kind == 'u_a':
            values = lattice.join[p, :]
        else:
            values = np.where(idx == lattice.bottom, p, lattice.top)
        return Inflator(lattice, tuple(int(v) for v in values), checked=False)

    def o_b(self, lattice: FiniteLattice, b) -> Inflator:
        return self.named(lattice, 'o_b', b)

    def u_a(self, lattice: FiniteLattice, a) -> Inflator:
        return self.named(lattice, 'u_a', a)

    def iota(self, lattice: FiniteLattice, a) -> Inflator:
        return self.named(lattice, 'iota_a', a)

    # ========== PUBLIC Methods: Totalisator / Equalizer ==========

    def totalizer(self, d: Inflator) -> Inflator:
        """PUBLIC: t(d) = O_{d(0̲)}"""
        return self.o_b(d.lattice, d(d.lattice.bottom))

    def equalizer(self, d: Inflator) -> Inflator:
        """PUBLIC: e(d)(a) = ⋀{b ∈ Bild(d) : a ≤ b} (leeres Infimum = 1̄)"""
        L = d.lattice
        image = np.array(d.image(), dtype=np.int64)
        values = tuple(L.meet_all(image[L.leq[a, image]]) for a in range(L.n))
        return Inflator(L, values)

    def brute_extremum(self, d: Inflator, which: str, family: str = 'all') -> Inflator:
        """PUBLIC: Orakel über die aufgezählte Familie

        totalizer: ⋀{z ∈ F : zd = d̄}; equalizer: ⋁{z ∈ F : zd = d}

        Raises:
            EnumerationBoundExceeded: Familie nicht aufzählbar
        """
        if which not in ('totalizer', 'equalizer'):
            raise BadParameter(f"Unbekanntes Extremum: {which!r}")
        F = self.enumerate_inflators(d.lattice, family)
        L = d.lattice
        composed = F.value_matrix[:, d.array]
        if which == 'totalizer':
            mask = (composed == L.top).all(axis=1)
            return self.family_meet(F, self.__rows(F, mask))
        mask = (composed == d.array[None, :]).all(axis=1)
        return self.family_join(F, self.__rows(F, mask))

    def partial_totalizer(self, s: Inflator, family: str = 'stable') -> Inflator:
        """PUBLIC: 𝔱(s) in S(A) bzw. P(A), ȷ(j) in N(A)"""
        if family not in ('stable', 'prenucleus', 'nucleus'):
            raise BadParameter(f"Partieller Totalisator nur für stable/prenucleus/nucleus, nicht {family!r}")
        return self.brute_extremum(s, 'totalizer', family)

    # ========== PUBLIC Methods: Aufzählung ==========

    def enumerate_inflators(self, lattice: FiniteLattice, family: str = 'all',
                            bound: Optional[int] = None) -> OperatorLattice:
        """PUBLIC: Alle Inflatoren einer Familie in kanonischer Reihenfolge

        Tiefensuche entlang der linearen Erweiterung: values[x] muss x und
        die Werte aller unteren Nachbarn dominieren.

        Raises:
            EnumerationBoundExceeded: mehr als bound Inflatoren
        """
        if family not in ENUMERABLE_FAMILIES:
            raise BadParameter(f"Unbekannte Familie: {family!r} (erlaubt: {', '.join(ENUMERABLE_FAMILIES)})")
        bound = bound or self.config.max_enumeration
        key = (lattice.digest, lattice.labels, family, bound)
        if key in self.__families:
            return self.__families[key]

        if family in ('idempotent', 'closure', 'nucleus') and 2 ** (lattice.n - 1) <= bound:
            candidates = self.__closure_operators(lattice)
        else:
            candidates = self.__all_inflators(lattice, bound)
        members = [d for d in candidates if d.has_flag(family)]
        if len(members) > bound:
            raise self.__bound_error(lattice, family, bound, len(members))

        kind = 'closure' if family == 'idempotent' else family
        cls = NucleusLattice if family == 'nucleus' else OperatorLattice
        result = cls(lattice, kind, tuple(members))
        logger.info(f"{family}({lattice.name or 'A'}): {result.size} Inflatoren")
        self.__families[key] = result
        return result

    def estimate_size(self, lattice: FiniteLattice) -> int:
        """PUBLIC: Grobe obere Schranke Π|↑x| für |I(A)|"""
        return prod(len(lattice.upset(x)) for x in range(lattice.n))

    # ========== PUBLIC Methods: Totalisator-Klassen ==========

    def tot_class(self, d: Inflator) -> tuple:
        """PUBLIC: (u_{d(0̲)}, ι_{d(0̲)}) - Grenzen der ~t-Klasse von d"""
        p = d(d.lattice.bottom)
        return self.u_a(d.lattice, p), self.iota(d.lattice, p)

    def same_tot_class(self, d: Inflator, other: Inflator) -> bool:
        """PUBLIC: d ~t d' ⇔ d(0̲) = d'(0̲)"""
        d.require_same_host(other)
        return d(d.lattice.bottom) == other(other.lattice.bottom)

    def tot_poset(self, lattice: FiniteLattice) -> OperatorLattice:
        """PUBLIC: Tot(I(A)) = {O_a : a ∈ A}"""
        return OperatorLattice(lattice, 'totalizers', tuple(self.o_b(lattice, a) for a in range(lattice.n)))

    # ========== PUBLIC Methods: Familien-Verbandsoperationen ==========

    def family_meet(self, F: OperatorLattice, ds: Sequence[Inflator]) -> Inflator:
        """PUBLIC: Infimum in der Familie (leere Menge → Top der Familie)"""
        ds = list(ds)
        if not ds:
            return self.family_top(F)
        pointwise = self.lattice_ops(ds, 'meet', check_directed=False)
        if F.contains(pointwise):
            return F.member(F.find(pointwise))
        below = [z for z in F if z.le(pointwise)]
        return F.member(F.as_lattice.join_all(F.index_of(z) for z in below))

    def family_join(self, F: OperatorLattice, ds: Sequence[Inflator]) -> Inflator:
        """PUBLIC: Supremum in der Familie (leere Menge → Bottom der Familie)"""
        ds = list(ds)
        if not ds:
            return self.family_bottom(F)
        pointwise = self.lattice_ops(ds, 'join', check_directed=False)
        if F.contains(pointwise):
            return F.member(F.find(pointwise))
        above = [z for z in F if pointwise.le(z)]
        candidate = self.lattice_ops(above, 'meet', check_directed=False)
        if F.contains(candidate):
            return F.member(F.find(candidate))
        return F.member(F.as_lattice.meet_all(F.index_of(z) for z in above))

    def family_bottom(self, F: OperatorLattice) -> Inflator:
        pointwise = self.lattice_ops(F.members, 'meet', check_directed=False)
        return F.member(F.find(pointwise)) if F.contains(pointwise) else F.bottom

    def family_top(self, F: OperatorLattice) -> Inflator:
        pointwise = self.lattice_ops(F.members, 'join', check_directed=False)
        return F.member(F.find(pointwise)) if F.contains(pointwise) else F.top

    def pseudocomplement(self, F: OperatorLattice, s: Inflator) -> tuple:
        """PUBLIC: ¬s = ⋁{z ∈ F : z ∧ s = bottom(F)}

        Returns:
            (¬s, valid) mit valid ⇔ ¬s ∧ s = bottom(F)

        Raises:
            MemberNotInFamily
        """
        F.index_of(s)
        bottom = self.family_bottom(F)
        meets = F.host.meet[F.value_matrix, s.array[None, :]]
        disjoint = [z for z, row in zip(F.members, meets)
                    if self.__family_member_of(F, row) == bottom]
        negation = self.family_join(F, disjoint)
        valid = self.family_meet(F, [negation, s]) == bottom
        if not valid:
            logger.warning(f"Pseudokomplement von {s} in {F} ist nicht disjunkt")
        return negation, valid

    def order_predicates(self, F: OperatorLattice, d: Inflator,
                         interval: Optional[tuple] = None) -> dict:
        """PUBLIC: ∧-prim, ∧-irreduzibel, ordnungsprim und (optional) essentiell

        Args:
            F: Familie
            d: Mitglied von F
            interval: optional (lo, hi) als Inflatoren mit lo ≤ d ≤ hi

        Returns:
            {'meet_prime', 'meet_irreducible', 'order_prime', 'essential'}
        """
        i = F.index_of(d)
        H = F.as_lattice
        is_top = i == H.top

        # k ∧ l = d ⇒ k = d oder l = d
        others = np.flatnonzero(np.arange(H.n) != i)
        meet_prime = not is_top and not bool((H.meet[np.ix_(others, others)] == i).any())
        # genau ein oberer Nachbar in der Familie
        meet_irreducible = not is_top and len(H.upper_covers[i]) == 1
        # k ∧ l ≤ d ⇒ k ≤ d oder l ≤ d
        not_below = np.flatnonzero(~H.leq[:, i])
        order_prime = not is_top and not bool(H.leq[H.meet[np.ix_(not_below, not_below)], i].any())

        result = {
            'meet_prime': meet_prime,
            'meet_irreducible': meet_irreducible,
            'order_prime': order_prime,
            'essential': None,
        }
        if interval is not None:
            result['essential'] = self.is_essential(F, d, *interval)
        return result

    def prime_gaps(self, F: OperatorLattice) -> list:
        """PUBLIC: Mitglieder, die ∧-irreduzibel, aber nicht ordnungsprim sind

        In einem distributiven Familienverband ist die Liste leer.
        """
        gaps = []
        for d in F:
            p = self.order_predicates(F, d)
            if p['meet_irreducible'] and not p['order_prime']:
                gaps.append(d)
        return gaps

    def is_essential(self, F: OperatorLattice, d: Inflator, lo: Inflator, hi: Inflator) -> bool:
        """PUBLIC: d ≠ lo in [lo, hi] und d ∧ y = lo ⇒ y = lo für alle y ∈ F ∩ [lo, hi]

        Im trivialen Intervall ist das einzige Element essentiell.
        """
        if not (lo.le(d) and d.le(hi)):
            raise BadParameter(f"{d} liegt nicht im Intervall [{lo}, {hi}]")
        if lo == hi:
            return True
        if d == lo:
            return False
        for y in F:
            if lo.le(y) and y.le(hi) and self.meet(d, y) == lo and y != lo:
                return False
        return True

    def closed_under_composition(self, F: OperatorLattice, k: Inflator) -> bool:
        """PUBLIC: d ∘ k ∈ F für alle d ∈ F"""
        return all(F.contains(self.compose(d, k)) for d in F)

    # ========== PRIVATE Helper Methods ==========

    def __all_inflators(self, lattice: FiniteLattice, bound: int) -> list:
        """PRIVATE: Tiefensuche über alle monotonen inflationären Abbildungen"""
        order = lattice.linear_extension
        lower = lattice.lower_covers
        join = lattice.join
        upsets = [lattice.upset(x) for x in range(lattice.n)]
        values = [0] * lattice.n
        found = []

        def assign(pos: int) -> None:
            if pos == len(order):
                found.append(Inflator(lattice, tuple(values), checked=False))
                if len(found) > bound:
                    raise self.__bound_error(lattice, 'all', bound, self.estimate_size(lattice))
                return
            x = order[pos]
            floor = reduce(lambda acc, y: join[acc, values[y]], lower[x], x)
            for candidate in upsets[floor]:
                values[x] = int(candidate)
                assign(pos + 1)

        assign(0)
        return found

    def __closure_operators(self, lattice: FiniteLattice) -> list:
        """PRIVATE: Alle Hüllenoperatoren über ihre Fixpunktmengen (Moore-Familien)"""
        others = [x for x in range(lattice.n) if x != lattice.top]
        found = []
        for mask in range(2 ** len(others)):
            fixed = [lattice.top] + [x for i, x in enumerate(others) if mask >> i & 1]
            fixed = np.array(fixed, dtype=np.int64)
            meets = lattice.meet[np.ix_(fixed, fixed)]
            if not np.isin(meets, fixed).all():
                continue
            values = tuple(lattice.meet_all(fixed[lattice.leq[a, fixed]]) for a in range(lattice.n))
            found.append(Inflator(lattice, values, checked=False))
        return found

    @staticmethod
    def __rows(F: OperatorLattice, mask: np.ndarray) -> list:
        return [F.member(i) for i in np.flatnonzero(mask)]

    @staticmethod
    def __family_member_of(F: OperatorLattice, row: np.ndarray) -> Optional[Inflator]:
        index = F.find(Inflator(F.host, tuple(row), checked=False))
        return F.member(index) if index is not None else None

    @staticmethod
    def __element(lattice: FiniteLattice, ref) -> int:
        if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool):
            if not 0 <= int(ref) < lattice.n:
                raise BadParameter(f"Elementindex außerhalb des Verbandes: {ref}")
            return int(ref)
        return lattice.index_of(str(ref))

    @staticmethod
    def __bound_error(lattice: FiniteLattice, family: str, bound: int, estimate: int) -> EnumerationBoundExceeded:
        return EnumerationBoundExceeded(
            f"Familie '{family}' auf {lattice.name or 'A'} übersteigt die Schranke {bound}",
            details={'bound': 'max_enumeration', 'limit': bound, 'estimate': estimate},
        )
