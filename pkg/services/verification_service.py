# services/verification_service.py
"""
Verification Service - Prüfsuiten über einem endlichen Verband

Verantwortlich für:
- Suite 'core': Verbandsgesetze, Intervallmengen, Inflator-Gesetze und
  Orakel, Ordnungsprädikate, Nuklei, Gab, Dimensionen, Vergleichsketten
- Suite 'second-level': Aussagen über I(L) als Träger (DimensionService)
- Suite 'all': beide
- Befunde ('finding') zu offenen Fragen werden informativ gemeldet

Paarweise und dreifache Gesetze laufen erschöpfend, solange die Familie
höchstens second_level_bound Mitglieder hat; sonst über eine Stichprobe
mit config.seed.
"""
from __future__ import annotations
from typing import Optional
import logging

import numpy as np

from config import RunConfig, DEFAULT_RUN_CONFIG
from models.errors import BadParameter, TooLarge
from models.inflator import Inflator
from models.interval import IntervalSet, LEVELS
from models.lattice import FiniteLattice
from models.operator_lattice import OperatorLattice
from models.report import CheckResult, VerifyReport
from services.dimension_service import DimensionService
from services.inflator_service import InflatorService
from services.interval_service import IntervalService
from services.lattice_service import LatticeService
from services.nucleus_service import NucleusService

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


SUITES = ('core', 'second-level', 'all')


class VerificationService:
    """Service für die Prüfsuiten"""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        self.lattices = LatticeService(self.config)
        self.inflators = InflatorService(self.config)
        self.intervals = IntervalService(self.config)
        self.nuclei = NucleusService(self.config, self.inflators, self.intervals)
        self.dimensions = DimensionService(self.config, self.inflators, self.intervals, self.nuclei)

    # ========== PUBLIC Methods ==========

    def verify(self, lattice: FiniteLattice, suite: str = 'core') -> VerifyReport:
        """PUBLIC: Führt eine Suite aus und liefert den sortierten Bericht

        Args:
            lattice: Trägerverband
            suite: 'core' | 'second-level' | 'all'

        Raises:
            BadParameter: unbekannte Suite
        """
        if suite not in SUITES:
            raise BadParameter(f"Unbekannte Suite: {suite!r} (erlaubt: {', '.join(SUITES)})")

        checks = []
        if suite in ('core', 'all'):
            checks += self.core_suite(lattice)
        if suite in ('second-level', 'all'):
            checks += self.dimensions.second_level_suite(lattice)

        report = VerifyReport(
            lattice=lattice.digest,
            name=lattice.name,
            suite=suite,
            checks=tuple(checks),
            config=self.__config_summary(),
        )
        summary = report.summary()
        logger.info(f"verify {lattice.name or lattice.digest[:12]} ({suite}): {summary}")
        for check in report.by_status('fail'):
            logger.warning(f"{check.id}: {check.message}")
        return report

    def core_suite(self, lattice: FiniteLattice) -> list:
        """PUBLIC: Alle Prüfungen erster Stufe"""
        L = lattice
        checks = {
            # Verband
            'lattice-modular': lambda: self.__check_modular(L),
            'lattice-tables': lambda: self.__check_tables(L),
            # Intervallmengen
            'closure-levels': lambda: self.__check_closure_levels(L),
            'division-set-round-trip': lambda: self.__check_division_round_trip(L),
            'division-set-exactness': lambda: self.__check_division_exactness(L),
            'soc-below-cbd': lambda: self.__check_soc_below_cbd(L),
            'uniform-intervals-inert': lambda: self.__check_uniform_inert(L),
            # Inflatoren
            'composition-laws': lambda: self.__check_composition_laws(L),
            'infinity-closure': lambda: self.__check_infinity(L),
            'prenucleus-powers': lambda: self.__check_prenucleus_powers(L),
            'totalizer-oracle': lambda: self.__check_totalizer_oracle(L),
            'equalizer-oracle': lambda: self.__check_equalizer_oracle(L),
            'totalizer-laws': lambda: self.__check_totalizer_laws(L),
            'equalizer-laws': lambda: self.__check_equalizer_laws(L),
            'iota-identity': lambda: self.__check_iota_identity(L),
            'totalizer-classes': lambda: self.__check_totalizer_classes(L),
            'totalizer-poset': lambda: self.__check_totalizer_poset(L),
            'partial-totalizer-chain': lambda: self.__check_partial_totalizer_chain(L),
            'double-totalizer': lambda: self.__check_double_totalizer(L),
            'double-totalizer-edge-case': lambda: self.__finding_double_totalizer(L),
            'equalizer-monotonicity': lambda: self.__finding_equalizer_monotonicity(L),
            'stable-infinity-meets': lambda: self.__finding_stable_infinity_meets(L),
            # Ordnungsprädikate
            'meet-irreducible-prime': lambda: self.__check_irreducible_prime(L),
            'idempotent-meet-prime-order-prime': lambda: self.__check_idempotent_prime(L),
            'equalizer-preserves-meet-prime': lambda: self.__check_equalizer_prime(L),
            'stable-essential-in-idempotent-interval': lambda: self.__check_stable_essential(L),
            # Nuklei
            'nuclei-frame': lambda: self.__check_frame(L),
            'nuclei-join-closure': lambda: self.__check_nuclei_joins(L),
            'quotient-transfer': lambda: self.__check_quotient_transfer(L),
            'quotient-distributive': lambda: self.__check_quotient_distributive(L),
            'xi-chi-adjunction': lambda: self.__check_xi_chi(L),
            'gab-routes': lambda: self.__check_gab_routes(L),
            'gab-prenucleus': lambda: self.__check_gab_prenucleus(L),
            'gab-raw-dominates': lambda: self.__finding_gab_raw(L),
            'g-points-simple-chi': lambda: self.__check_g_points(L),
            # Dimensionen
            'gab-dimension': lambda: self.__check_gab_dimension(L),
            'strongly-atomic-agreement': lambda: self.__check_strongly_atomic(L),
            'd-length-monotone': lambda: self.__check_d_length(L),
        }
        results = [CheckResult.guard(cid, check) for cid, check in checks.items()]
        return results + self.dimensions.comparison_chains(L)

    # ========== PRIVATE Helper Methods: Familien ==========

    def __family(self, lattice: FiniteLattice, family: str, as_lattice: bool = False) -> OperatorLattice:
        """PRIVATE: Aufgezählte Familie; mit as_lattice zusätzlich max_operator_lattice"""
        F = self.inflators.enumerate_inflators(lattice, family)
        if as_lattice and F.size > self.config.max_operator_lattice:
            raise TooLarge(
                f"|{family}| = {F.size} ist als Verband zu groß",
                details={'bound': 'max_operator_lattice', 'limit': self.config.max_operator_lattice,
                         'size': F.size},
            )
        return F

    def __sample(self, F: OperatorLattice) -> list:
        """PRIVATE: Alle Mitglieder bis second_level_bound, sonst Stichprobe (seed)"""
        members = list(F.members)
        limit = self.config.second_level_bound
        if len(members) <= limit:
            return members
        rng = np.random.default_rng(self.config.seed)
        picked = np.sort(rng.choice(len(members), size=limit, replace=False))
        return [members[int(i)] for i in picked]

    @staticmethod
    def __scope(sample: list, F: OperatorLattice) -> str:
        return f"{len(sample)} von {F.size} Inflatoren"

    def __config_summary(self) -> dict:
        return {
            'max_lattice_size': self.config.max_lattice_size,
            'max_enumeration': self.config.max_enumeration,
            'second_level_bound': self.config.second_level_bound,
            'max_operator_lattice': self.config.max_operator_lattice,
            'seed': self.config.seed,
        }

    # ========== PRIVATE Checks: Verband ==========

    def __check_modular(self, L: FiniteLattice) -> CheckResult:
        verdict = self.lattices.check_modular(L)
        if verdict['holds']:
            return CheckResult.passed('lattice-modular', "Modulargesetz gilt")
        return CheckResult.failed('lattice-modular', "Verband ist nicht modular", verdict['witness'])

    def __check_tables(self, L: FiniteLattice) -> CheckResult:
        if not self.lattices.check_tables(L):
            return CheckResult.failed('lattice-tables', "Meet-/Join-Tabelle widerspricht der Ordnung")
        broken = self.lattices.check_directed_suprema(L, seed=self.config.seed)
        if broken is not None:
            return CheckResult.failed('lattice-tables', "Gerichtete Teilmenge ohne eigenes Supremum", broken)
        return CheckResult.passed('lattice-tables', "Tabellen und gerichtete Suprema konsistent")

    # ========== PRIVATE Checks: Intervallmengen ==========

    def __check_closure_levels(self, L: FiniteLattice) -> CheckResult:
        expected = {'congruence': 'prenucleus', 'division': 'nucleus'}
        levels = ('abstract', 'basic', 'congruence', 'division')
        for iv in self.intervals.all_intervals(L):
            seed = IntervalSet.of(L, [(iv.lo, iv.hi)])
            for level in levels:
                closed = self.intervals.close(seed, level)
                reached = self.intervals.level_of(closed)
                if LEVELS.index(reached) < LEVELS.index(level):
                    return CheckResult.failed('closure-levels', f"close(·, {level}) erreicht nur {reached}",
                                              iv.labels(L))
                if level in expected and not self.intervals.associated_inflator(closed).has_flag(expected[level]):
                    return CheckResult.failed('closure-levels', f"|{level}-Menge| ist kein {expected[level]}",
                                              iv.labels(L))
        return CheckResult.passed('closure-levels', "Abschlüsse aller Einzelintervalle erreichen ihre Stufe")

    def __check_division_round_trip(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        for j in NL:
            D = self.intervals.division_set_of(j)
            back = self.intervals.associated_inflator(D)
            if back != j or self.intervals.division_set_of(back) != D:
                return CheckResult.failed('division-set-round-trip', "|D_j| ≠ j", j.table())
        return CheckResult.passed('division-set-round-trip', f"|D_j| = j für alle {NL.size} Nuklei")

    def __check_division_exactness(self, L: FiniteLattice) -> CheckResult:
        mismatches = []
        for iv in self.intervals.all_intervals(L):
            D = self.intervals.close(IntervalSet.of(L, [(iv.lo, iv.hi)]), 'division')
            j = self.intervals.associated_inflator(D)
            if self.intervals.division_set_of(j) != D:
                mismatches.append(iv.labels(L))
        if mismatches:
            return CheckResult.finding('division-set-exactness',
                                       f"D_{{|D|}} ≠ D für {len(mismatches)} erzeugte Divisionsmengen", mismatches)
        return CheckResult.finding('division-set-exactness', "D_{|D|} = D für alle erzeugten Divisionsmengen")

    def __check_soc_below_cbd(self, L: FiniteLattice) -> CheckResult:
        soc, cbd = self.intervals.soc(L), self.intervals.cbd(L)
        if not soc.le(cbd):
            return CheckResult.failed('soc-below-cbd', "soc ≰ cbd", {'soc': soc.table(), 'cbd': cbd.table()})
        return CheckResult.passed('soc-below-cbd', "soc ≤ cbd")

    def __check_uniform_inert(self, L: FiniteLattice) -> CheckResult:
        flags = self.intervals.classify_intervals(L)
        for iv, row in flags.items():
            if row['uniform'] and not self.intervals.is_inert(L, iv, self.nuclei):
                return CheckResult.failed('uniform-intervals-inert', "uniformes Intervall ist nicht inert",
                                          iv.labels(L))
        congruences = [IntervalSet.trivial(L)] + [
            self.intervals.close(IntervalSet.of(L, [(iv.lo, iv.hi)]), 'congruence')
            for iv in self.intervals.all_intervals(L)
        ]
        for C in congruences:
            critical = self.intervals.crt(L, C)
            for iv in critical:
                if iv not in C and not self.intervals.is_uniform(L, iv):
                    return CheckResult.failed('uniform-intervals-inert', "Intervall in Crt(C) − C ist nicht uniform",
                                              iv.labels(L))
        return CheckResult.passed('uniform-intervals-inert',
                                  f"uniform ⇒ inert; Crt(C) − C uniform für {len(congruences)} Kongruenzmengen")

    # ========== PRIVATE Checks: Inflator-Gesetze ==========

    def __check_composition_laws(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        sample = self.__sample(I)
        V = np.array([d.values for d in sample], dtype=np.int64)
        leq, meet, join = L.leq, L.meet, L.join

        def pointwise_le(A: np.ndarray, B: np.ndarray) -> np.ndarray:
            return leq[A, B].all(axis=-1)

        order = pointwise_le(V[:, None, :], V[None, :, :])
        joins = join[V[:, None, :], V[None, :, :]]
        meets = meet[V[:, None, :], V[None, :, :]]

        for f, vf in zip(sample, V):
            after = V[:, vf]     # d∘f
            before = vf[V]       # f∘d
            laws = {
                'monoton links': not (order & ~pointwise_le(after[:, None], after[None, :])).any(),
                'monoton rechts': not (order & ~pointwise_le(before[:, None], before[None, :])).any(),
                "fd' ∨ fd ≤ f(d' ∨ d)": bool(leq[join[before[:, None], before[None, :]], vf[joins]].all()),
                "f(d' ∧ d) ≤ fd' ∧ fd": bool(leq[vf[meets], meet[before[:, None], before[None, :]]].all()),
                "(d ∨ d')f = df ∨ d'f": bool(np.array_equal(joins[:, :, vf], join[after[:, None], after[None, :]])),
                "(d ∧ d')f = df ∧ d'f": bool(np.array_equal(meets[:, :, vf], meet[after[:, None], after[None, :]])),
            }
            broken = [name for name, holds in laws.items() if not holds]
            if broken:
                return CheckResult.failed('composition-laws', f"verletzt: {broken[0]}", f.table())
        return CheckResult.passed('composition-laws', self.__scope(sample, I))

    def __check_infinity(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        sample = self.__sample(I)
        closures = []
        for d in sample:
            closed, steps = self.inflators.infty(d)
            again, _ = self.inflators.infty(closed)
            if not (d.le(closed) and closed.is_idempotent and again == closed and steps <= L.n * L.n):
                return CheckResult.failed('infinity-closure', "d^∞ verletzt d ≤ d^∞, Idempotenz oder Schrittschranke",
                                          d.table())
            closures.append(closed)
        for d, cd in zip(sample, closures):
            for k, ck in zip(sample, closures):
                if d.le(k) and not cd.le(ck):
                    return CheckResult.failed('infinity-closure', "d ≤ d', aber d^∞ ≰ d'^∞",
                                              {'d': d.table(), 'd_prime': k.table()})
        return CheckResult.passed('infinity-closure', self.__scope(sample, I))

    def __check_prenucleus_powers(self, L: FiniteLattice) -> CheckResult:
        P = self.__family(L, 'prenucleus')
        sample = self.__sample(P)
        for f in sample:
            _, steps = self.inflators.infty(f)
            for k in range(1, steps + 2):
                if not self.inflators.power(f, k).is_prenucleus:
                    return CheckResult.failed('prenucleus-powers', f"f^{k} ist kein Prenukleus", f.table())
            if not self.inflators.closure(f).is_nucleus:
                return CheckResult.failed('prenucleus-powers', "f^∞ ist kein Nukleus", f.table())
        return CheckResult.passed('prenucleus-powers', self.__scope(sample, P))

    def __check_totalizer_oracle(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        for d in I:
            closed_form = self.inflators.totalizer(d)
            oracle = self.inflators.brute_extremum(d, 'totalizer', 'all')
            if closed_form != oracle or not self.inflators.compose(closed_form, d).is_top:
                return CheckResult.failed('totalizer-oracle', "O_{d(0̲)} ≠ ⋀{z : zd = d̄}",
                                          {'d': d.table(), 'closed_form': closed_form.table(),
                                           'oracle': oracle.table()})
        return CheckResult.passed('totalizer-oracle', f"t(d) = O_{{d(0̲)}} für alle {I.size} Inflatoren")

    def __check_equalizer_oracle(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        for d in I:
            closed_form = self.inflators.equalizer(d)
            oracle = self.inflators.brute_extremum(d, 'equalizer', 'all')
            if closed_form != oracle:
                return CheckResult.failed('equalizer-oracle', "Bildformel ≠ ⋁{z : zd = d}",
                                          {'d': d.table(), 'closed_form': closed_form.table(),
                                           'oracle': oracle.table()})
        return CheckResult.passed('equalizer-oracle', f"e(d) per Bildformel für alle {I.size} Inflatoren")

    def __check_totalizer_laws(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        sample = self.__sample(I)
        t = self.inflators.totalizer
        identity, top = Inflator.identity(L), Inflator.top(L)
        if t(identity) != top or t(top) != identity:
            return CheckResult.failed('totalizer-laws', "t(d_0̲) ≠ d̄ oder t(d̄) ≠ d_0̲")
        for d in sample:
            for k in sample:
                joined = self.inflators.lattice_ops([d, k], 'join', check_directed=False)
                met = self.inflators.meet(d, k)
                laws = (
                    not d.le(k) or t(k).le(t(d)),
                    t(joined).le(self.inflators.meet(t(d), t(k))),
                    self.inflators.lattice_ops([t(d), t(k)], 'join', check_directed=False).le(t(met)),
                )
                if not all(laws):
                    return CheckResult.failed('totalizer-laws', f"Gesetz {laws.index(False) + 1} verletzt",
                                              {'d': d.table(), 'k': k.table()})
        return CheckResult.passed('totalizer-laws', self.__scope(sample, I))

    def __check_equalizer_laws(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        for d in I:
            e = self.inflators.equalizer(d)
            if not (e.is_idempotent and e.le(d) and (e == d) == d.is_idempotent):
                return CheckResult.failed('equalizer-laws', "e(d) nicht idempotent, nicht ≤ d oder e(d)=d ⇎ d idempotent",
                                          d.table())
        return CheckResult.passed('equalizer-laws', f"{I.size} Inflatoren")

    def __check_iota_identity(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        iota_bottom = self.inflators.iota(L, L.bottom)
        for d in I:
            if self.inflators.compose(d, iota_bottom) != self.inflators.iota(L, d(L.bottom)):
                return CheckResult.failed('iota-identity', "d ι_0̲ ≠ ι_{d(0̲)}", d.table())
        return CheckResult.passed('iota-identity', f"d ι_0̲ = ι_{{d(0̲)}} für alle {I.size} Inflatoren")

    def __check_totalizer_classes(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        V = I.value_matrix
        classes = 0
        for a in range(L.n):
            lower, upper = self.inflators.u_a(L, a), self.inflators.iota(L, a)
            in_interval = L.leq[lower.array[None, :], V].all(axis=1) & L.leq[V, upper.array[None, :]].all(axis=1)
            in_class = V[:, L.bottom] == a
            if not np.array_equal(in_interval, in_class):
                return CheckResult.failed('totalizer-classes', "[d]_t ≠ [u_{d(0̲)}, ι_{d(0̲)}]", L.label_of(a))
            classes += bool(in_class.any())
        if classes != self.inflators.tot_poset(L).size:
            return CheckResult.failed('totalizer-classes', f"{classes} Klassen, aber |Tot(I)| = {self.inflators.tot_poset(L).size}")
        return CheckResult.passed('totalizer-classes', f"{classes} Klassen ↔ Tot(I)")

    def __check_totalizer_poset(self, L: FiniteLattice) -> CheckResult:
        members = [self.inflators.o_b(L, a) for a in range(L.n)]
        for a in range(L.n):
            for b in range(L.n):
                oa, ob = members[a], members[b]
                if L.le(a, b) != ob.le(oa):
                    return CheckResult.failed('totalizer-poset', "a ↦ O_a ist kein Anti-Isomorphismus",
                                              [L.label_of(a), L.label_of(b)])
                joined = self.inflators.lattice_ops([oa, ob], 'join', check_directed=False)
                if not (self.inflators.compose(oa, ob) == self.inflators.compose(ob, oa) == joined):
                    return CheckResult.failed('totalizer-poset', "O_a O_b ≠ O_b O_a ≠ O_a ∨ O_b",
                                              [L.label_of(a), L.label_of(b)])
        I = self.__family(L, 'all')
        sample = self.__sample(I)
        for z in sample:
            for oa in members:
                if self.inflators.compose(z, oa) != self.inflators.lattice_ops([z, oa], 'join', check_directed=False):
                    return CheckResult.failed('totalizer-poset', "z O_a ≠ z ∨ O_a", z.table())
        return CheckResult.passed('totalizer-poset', f"Tot(I) ≅ L^op, {self.__scope(sample, I)}")

    def __check_partial_totalizer_chain(self, L: FiniteLattice) -> CheckResult:
        S = self.__family(L, 'stable')
        sample = self.__sample(S)
        t, closure = self.inflators.totalizer, self.inflators.closure
        for s in sample:
            s_inf = closure(s)
            partial = self.inflators.partial_totalizer(s, 'stable')
            chain = (t(s_inf), t(s), partial, closure(partial))
            if not all(lower.le(upper) for lower, upper in zip(chain, chain[1:])):
                return CheckResult.failed('partial-totalizer-chain', "t(s^∞) ≤ t(s) ≤ 𝔱(s) ≤ 𝔱(s)^∞ verletzt",
                                          s.table())
            left = closure(self.inflators.partial_totalizer(s_inf, 'stable'))
            right = self.inflators.partial_totalizer(s_inf, 'nucleus')
            if left != right:
                return CheckResult.failed('partial-totalizer-chain', "(𝔱(s^∞))^∞ ≠ ȷ(s^∞)",
                                          {'s': s.table(), 'left': left.table(), 'right': right.table()})
        return CheckResult.passed('partial-totalizer-chain', self.__scope(sample, S))

    def __check_double_totalizer(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        t = self.inflators.totalizer
        for d in I:
            if d(L.bottom) != L.bottom and not t(t(d)).is_top:
                return CheckResult.failed('double-totalizer', "d(0̲) > 0̲, aber t(t(d)) ≠ d̄", d.table())
        return CheckResult.passed('double-totalizer', "t(t(d)) = d̄ für alle d mit d(0̲) > 0̲")

    def __finding_double_totalizer(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        edge = [d for d in I if d(L.bottom) == L.bottom]
        t = self.inflators.totalizer
        witness = edge[0].table() if edge and L.n > 1 else None
        return CheckResult.finding(
            'double-totalizer-edge-case',
            f"{len(edge)} Inflatoren mit d(0̲) = 0̲; dort gilt t(t(d)) = d_0̲"
            if all(t(t(d)).is_identity for d in edge) else "t(t(d)) für d(0̲) = 0̲ uneinheitlich",
            witness,
        )

    def __finding_equalizer_monotonicity(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        sample = self.__sample(I)
        equalizers = [self.inflators.equalizer(d) for d in sample]
        for d, ed in zip(sample, equalizers):
            for k, ek in zip(sample, equalizers):
                if d.le(k) and not ed.le(ek):
                    return CheckResult.finding(
                        'equalizer-monotonicity', "e ist nicht monoton",
                        {'d': d.table(), 'd_prime': k.table(), 'e_d': ed.table(), 'e_d_prime': ek.table()},
                    )
        return CheckResult.finding('equalizer-monotonicity', f"kein Zeuge für Nicht-Monotonie ({self.__scope(sample, I)})")

    def __finding_stable_infinity_meets(self, L: FiniteLattice) -> CheckResult:
        S = self.__family(L, 'stable')
        sample = self.__sample(S)
        closure = self.inflators.closure
        closed = [closure(s) for s in sample]
        for d, cd in zip(sample, closed):
            for k, ck in zip(sample, closed):
                if closure(self.inflators.meet(d, k)) != self.inflators.meet(cd, ck):
                    return CheckResult.finding('stable-infinity-meets', "(d ∧ k)^∞ ≠ d^∞ ∧ k^∞",
                                               {'d': d.table(), 'k': k.table()})
        return CheckResult.finding('stable-infinity-meets',
                                   f"(d ∧ k)^∞ = d^∞ ∧ k^∞ auf {self.__scope(sample, S)}")

    # ========== PRIVATE Checks: Ordnungsprädikate ==========

    def __check_irreducible_prime(self, L: FiniteLattice) -> CheckResult:
        check_id = 'meet-irreducible-prime'
        checked, skipped, gaps = [], [], {}
        for family in ('all', 'stable', 'nucleus'):
            try:
                F = self.__family(L, family, as_lattice=True)
            except TooLarge as e:
                skipped.append(f"{family}: {e.message}")
                continue
            for d in F:
                p = self.inflators.order_predicates(F, d)
                if p['meet_irreducible'] != p['meet_prime']:
                    return CheckResult.failed(check_id, f"∧-irreduzibel ⇎ ∧-prim in {family}", d.table())
                if p['order_prime'] and not p['meet_irreducible']:
                    return CheckResult.failed(check_id, f"ordnungsprim, aber nicht ∧-irreduzibel in {family}",
                                              d.table())
            gap = self.inflators.prime_gaps(F)
            if gap:
                gaps[family] = [d.table() for d in gap]
            checked.append(f"{family}({F.size})")
        if not checked:
            raise TooLarge("; ".join(skipped), details={'bound': 'max_operator_lattice'})

        message = ", ".join(checked)
        if skipped:
            message += f"; übersprungen: {'; '.join(skipped)}"
        if gaps:
            counts = ", ".join(f"{family}: {len(tables)}" for family, tables in gaps.items())
            return CheckResult.finding(check_id, f"∧-irreduzibel, aber nicht ordnungsprim ({counts}); {message}",
                                       gaps)
        return CheckResult.passed(check_id, message)

    def __check_idempotent_prime(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all', as_lattice=True)
        for d in I:
            if not d.is_idempotent:
                continue
            p = self.inflators.order_predicates(I, d)
            if p['meet_prime'] and not p['order_prime']:
                return CheckResult.failed('idempotent-meet-prime-order-prime',
                                          "idempotent und ∧-prim, aber nicht ordnungsprim", d.table())
        return CheckResult.passed('idempotent-meet-prime-order-prime', f"{I.size} Inflatoren")

    def __check_equalizer_prime(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all', as_lattice=True)
        for d in I:
            if not self.inflators.order_predicates(I, d)['meet_prime']:
                continue
            p = self.inflators.order_predicates(I, self.inflators.equalizer(d))
            if not (p['meet_prime'] and p['order_prime']):
                return CheckResult.failed('equalizer-preserves-meet-prime', "d ∧-prim, e(d) nicht", d.table())
        return CheckResult.passed('equalizer-preserves-meet-prime', f"{I.size} Inflatoren")

    def __check_stable_essential(self, L: FiniteLattice) -> CheckResult:
        S = self.__family(L, 'stable', as_lattice=True)
        closure, meet = self.inflators.closure, self.inflators.meet
        for s in S:
            lo, hi = self.inflators.equalizer(s), closure(s)
            if self.inflators.is_essential(S, s, lo, hi):
                continue
            # s ∧ y = e(s) mit y ≠ e(s) erzwingt (s ∧ y)^∞ ≠ s^∞ ∧ y^∞
            y = next(y for y in S if lo.le(y) and y.le(hi) and y != lo and meet(s, y) == lo)
            left, right = closure(meet(s, y)), meet(hi, closure(y))
            witness = {'s': s.table(), 'y': y.table(), 'meet_closure': left.table(), 'closure_meet': right.table()}
            if left != right:
                return CheckResult.finding('stable-essential-in-idempotent-interval',
                                           "s nicht essentiell in [e(s), s^∞]; (s ∧ y)^∞ ≠ s^∞ ∧ y^∞", witness)
            return CheckResult.failed('stable-essential-in-idempotent-interval',
                                      "s nicht essentiell in [e(s), s^∞] trotz (s ∧ y)^∞ = s^∞ ∧ y^∞", witness)
        return CheckResult.passed('stable-essential-in-idempotent-interval', f"{S.size} stabile Inflatoren")

    # ========== PRIVATE Checks: Nuklei ==========

    def __check_frame(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        return CheckResult.passed('nuclei-frame', f"N(L) mit {NL.size} Nuklei ist distributiv")

    def __check_nuclei_joins(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        not_idempotent = 0
        for j in NL:
            for k in NL:
                raw = self.inflators.lattice_ops([j, k], 'join', check_directed=False)
                not_idempotent += not raw.is_idempotent
                if self.nuclei.nl_join(NL, j, k) != NL.join(j, k):
                    return CheckResult.failed('nuclei-join-closure', "(j ∨ k)^∞ ist nicht das Supremum in N(L)",
                                              {'j': j.table(), 'k': k.table()})
        return CheckResult.passed('nuclei-join-closure',
                                  f"{NL.size ** 2} Paare; {not_idempotent} punktweise Suprema nicht idempotent")

    def __check_quotient_transfer(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        for j in NL:
            violations = self.nuclei.quotient_transfer_check(j)
            if violations:
                return CheckResult.failed('quotient-transfer', "t(j_* d j*) ≰ j_* t(d) j*",
                                          {'j': j.table(), 'd': violations[0]})
        return CheckResult.passed('quotient-transfer', f"alle Quotienten von {NL.size} Nuklei")

    def __check_quotient_distributive(self, L: FiniteLattice) -> CheckResult:
        if not L.is_distributive:
            return CheckResult.skipped('quotient-distributive', "Verband ist nicht distributiv")
        NL = self.nuclei.nuclei_lattice(L)
        for j in NL:
            Q, _ = self.nuclei.quotient(j)
            if not Q.is_distributive:
                return CheckResult.failed('quotient-distributive', "A_j ist nicht distributiv", j.table())
        return CheckResult.passed('quotient-distributive', f"{NL.size} Quotienten distributiv")

    def __check_xi_chi(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        for iv in self.intervals.all_intervals(L):
            a, b = iv.lo, iv.hi
            xi, chi = self.nuclei.xi(L, a, b), self.nuclei.chi(L, a, b)
            for k in NL:
                if xi.le(k) != L.le(b, k(a)):
                    return CheckResult.failed('xi-chi-adjunction', "ξ(a,b) ≤ k ⇎ b ≤ k(a)",
                                              {'interval': iv.labels(L), 'k': k.table()})
                if k.le(chi) != (L.meet[k(a), b] == a):
                    return CheckResult.failed('xi-chi-adjunction', "k ≤ χ(a,b) ⇎ k(a) ∧ b = a",
                                              {'interval': iv.labels(L), 'k': k.table()})
        return CheckResult.passed('xi-chi-adjunction', f"alle Intervalle × {NL.size} Nuklei")

    def __check_gab_routes(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        for j in NL:
            self.nuclei.gab(NL, j)
        return CheckResult.passed('gab-routes', f"ξ-Supremum = Dvs(Crt(D_j)) für {NL.size} Nuklei")

    def __check_gab_prenucleus(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        gab = self.nuclei.gab_map(NL)
        if not gab.is_prenucleus:
            return CheckResult.failed('gab-prenucleus', "Gab erhält Infima nicht", gab.table())
        return CheckResult.passed('gab-prenucleus', "Gab ist ein Prenukleus auf N(L)")

    def __finding_gab_raw(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        undominated = []
        for j in NL:
            report = {}
            self.nuclei.gab(NL, j, report)
            if not report['raw_dominates']:
                undominated.append(j.table())
        if undominated:
            return CheckResult.finding('gab-raw-dominates',
                                       f"rohes ξ-Supremum dominiert j nicht für {len(undominated)} Nuklei",
                                       undominated)
        return CheckResult.finding('gab-raw-dominates', "rohes ξ-Supremum dominiert j für alle Nuklei")

    def __check_g_points(self, L: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(L)
        H = NL.as_lattice
        gab = self.nuclei.gab_map(NL)
        if self.inflators.u_a(H, gab(H.bottom)) != gab:
            return CheckResult.skipped('g-points-simple-chi', "Voraussetzung u_{Gab(d_0̲)} = Gab gilt nicht")
        g_points = set(self.nuclei.g_points(NL, gab))
        simple = self.intervals.flag_set(L, 'simple').nontrivial()
        chis = {self.nuclei.chi(L, iv.lo, iv.hi) for iv in simple}
        if g_points != chis:
            return CheckResult.failed('g-points-simple-chi', "Gpt(N(L)) ≠ {χ(a,b) : [a,b] einfach}",
                                      {'g_points': sorted(NL.index_of(p) for p in g_points),
                                       'chi': sorted(NL.index_of(c) for c in chis)})
        return CheckResult.passed('g-points-simple-chi', f"{len(g_points)} G-Punkte")

    # ========== PRIVATE Checks: Dimensionen ==========

    def __check_gab_dimension(self, L: FiniteLattice) -> CheckResult:
        report = self.dimensions.gab_dimension(L)
        if not report.verdict:
            return CheckResult.failed('gab-dimension', "Gab^∞(d_0̲) ≠ d̄", list(report.trace))
        return CheckResult.passed('gab-dimension', f"Gab-Dimension nach {report.steps} Schritten")

    def __check_strongly_atomic(self, L: FiniteLattice) -> CheckResult:
        report = self.dimensions.strongly_atomic(L)
        if not report.verdict:
            return CheckResult.failed('strongly-atomic-agreement', "Teilurteile uneinig oder falsch",
                                      report.sub_verdicts)
        return CheckResult.passed('strongly-atomic-agreement', f"alle drei Wege wahr, {report.steps} soc-Schritte")

    def __check_d_length(self, L: FiniteLattice) -> CheckResult:
        I = self.__family(L, 'all')
        sample = self.__sample(I)
        reports = [self.dimensions.d_length(d) for d in sample]
        for d, r in zip(sample, reports):
            if r.sub_verdicts['orbit'] != r.sub_verdicts['totalizer_form']:
                return CheckResult.failed('d-length-monotone', "d^∞(0̲) = 1̄ ⇎ t(d^∞) = d_0̲", d.table())
        for d, rd in zip(sample, reports):
            for k, rk in zip(sample, reports):
                if rd.verdict and d.le(k) and not rk.verdict:
                    return CheckResult.failed('d-length-monotone', "d ≤ d' und d-Länge, aber keine d'-Länge",
                                              {'d': d.table(), 'd_prime': k.table()})
        return CheckResult.passed('d-length-monotone', self.__scope(sample, I))
