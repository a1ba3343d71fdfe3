# services/dimension_service.py
"""
Dimension Service - Längen, Dimensionen und Prüfungen zweiter Stufe

Verantwortlich für:
- d_length, strongly_atomic (drei Teilurteile), st_dimension / gab_dimension
- die Selbstabbildungen μ^k, μ̂^k und Ξ(μ)
- second_level_suite: Aussagen über I(L), S(L) und S(S(L))
- comparison_chains: Totalisator-Vergleiche von Soc, Cbd und Gab auf N(A)
"""
from __future__ import annotations
from typing import Optional, Union
import logging

from config import RunConfig, DEFAULT_RUN_CONFIG
from models.errors import BoundExceeded, HostMismatch, NotClosedUnderComposition
from models.inflator import Inflator
from models.lattice import FiniteLattice
from models.operator_lattice import NucleusLattice, OperatorLattice
from models.report import CheckResult, DimensionReport
from services.inflator_service import InflatorService
from services.interval_service import IntervalService
from services.nucleus_service import NucleusService

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


SECOND_LEVEL_CHECKS = (
    'interval-operator-lattice-modular',
    'mu-hat-below-st-closure',
    'mu-negation-below-mu-totalizer',
    'mu-negation-equality-idempotent',
    'mu-negation-in-all-family',
    'mu-operator-prenucleus',
    'nucleus-negation-below-nucleus-totalizer',
    'stable-boolean-equivalence',
    'stable-negation-below-nucleus-totalizer',
    'stable-negation-below-totalizer',
    'stable-negation-partial-totalizer-equivalence',
    'xi-mu-dimension-equivalence',
)


class DimensionService:
    """Service für Dimensionsbegriffe und Operatoren auf Operatorverbänden"""

    def __init__(self, config: Optional[RunConfig] = None,
                 inflators: Optional[InflatorService] = None,
                 intervals: Optional[IntervalService] = None,
                 nuclei: Optional[NucleusService] = None):
        self.config = config or DEFAULT_RUN_CONFIG
        self.inflators = inflators or InflatorService(self.config)
        self.intervals = intervals or IntervalService(self.config)
        self.nuclei = nuclei or NucleusService(self.config, self.inflators, self.intervals)

    # ========== PUBLIC Methods: Längen ==========

    def d_length(self, d: Inflator, notion: str = 'd_length') -> DimensionReport:
        """PUBLIC: Hat A d-Länge? Iteriert 0̲, d(0̲), d²(0̲), ... bis zum Fixpunkt

        Zusätzlich wird die Totalisator-Form t(d^∞) = d_0̲ ausgewertet.

        Args:
            d: Inflator
            notion: Name des Begriffs im Bericht

        Returns:
            DimensionReport mit Spur (Labels) und sub_verdicts['totalizer_form']
        """
        L = d.lattice
        trace = self.__orbit(d, L.bottom)
        verdict = trace[-1] == L.top
        totalizer_form = self.inflators.totalizer(self.inflators.closure(d)).is_identity
        if totalizer_form != verdict:
            logger.warning(f"d-Länge: Bahn ({verdict}) und t(d^∞) ({totalizer_form}) widersprechen sich")
        return DimensionReport(
            lattice=L.digest,
            notion=notion,
            verdict=verdict,
            steps=len(trace) - 1,
            trace=tuple(L.label_of(x) for x in trace),
            sub_verdicts={'orbit': verdict, 'totalizer_form': totalizer_form},
        )

    def derivative_length(self, lattice: FiniteLattice, which: str) -> DimensionReport:
        """PUBLIC: soc- bzw. cbd-Länge des Verbandes"""
        d = self.intervals.derivative(lattice, which)
        return self.d_length(d, notion=f"{which}_length")

    def strongly_atomic(self, lattice: FiniteLattice) -> DimensionReport:
        """PUBLIC: Drei Wege zu "stark atomar"

        (i) Definition über einfache Teilintervalle, (ii) soc^∞(0̲) = 1̄,
        (iii) t(soc^∞) = d_0̲. Alle drei müssen übereinstimmen.
        """
        definition = self.intervals.flag_set(lattice, 'strongly_atomic').contains(lattice.bottom, lattice.top)
        soc_report = self.derivative_length(lattice, 'soc')
        verdicts = {
            'definition': definition,
            'soc_orbit': soc_report.verdict,
            'totalizer_form': soc_report.sub_verdicts['totalizer_form'],
        }
        if len(set(verdicts.values())) != 1:
            logger.warning(f"strongly_atomic uneinig auf {lattice.name or lattice.digest[:12]}: {verdicts}")
        return DimensionReport(
            lattice=lattice.digest,
            notion='strongly_atomic',
            verdict=all(verdicts.values()),
            steps=soc_report.steps,
            trace=soc_report.trace,
            sub_verdicts=verdicts,
        )

    # ========== PUBLIC Methods: Dimensionen auf N(A) ==========

    def st_dimension(self, NL: NucleusLattice, St: Union[Inflator, list],
                     j: Optional[Inflator] = None, notion: str = 'st_dimension') -> DimensionReport:
        """PUBLIC: Hat j St-Dimension? Iteriert St ab j bis zum Fixpunkt

        Args:
            NL: Nuklei-Verband
            St: Inflator auf NL.as_lattice oder Liste der Bilder aller Mitglieder
            j: Startnukleus (None → d_0̲)

        Raises:
            NotAnInflatorOnNL: St ist nicht inflationär oder nicht monoton
        """
        H = NL.as_lattice
        if not isinstance(St, Inflator):
            St = self.nuclei.as_nl_inflator(NL, St)
        elif St.lattice is not H and St.lattice.digest != H.digest:
            raise HostMismatch("St ist keine Selbstabbildung dieses Nuklei-Verbandes")
        start = NL.index_of(j) if j is not None else H.bottom
        trace = self.__orbit(St, start)
        return DimensionReport(
            lattice=NL.host.digest,
            notion=notion,
            verdict=trace[-1] == H.top,
            steps=len(trace) - 1,
            trace=tuple(trace),
        )

    def gab_dimension(self, lattice: FiniteLattice) -> DimensionReport:
        """PUBLIC: Gab-Dimension von A = st_dimension(Gab, d_0̲)"""
        NL = self.nuclei.nuclei_lattice(lattice)
        return self.st_dimension(NL, self.nuclei.gab_map(NL), notion='gab_dimension')

    # ========== PUBLIC Methods: Operatoren zweiter Stufe ==========

    def mu_operator(self, F: OperatorLattice, k: Inflator) -> Inflator:
        """PUBLIC: μ^k(d) = d∘k als Inflator auf F.as_lattice

        Raises:
            MemberNotInFamily: k nicht in F
            NotClosedUnderComposition: d∘k liegt für ein d nicht in F
        """
        F.index_of(k)
        images = []
        for d in F:
            dk = self.inflators.compose(d, k)
            if not F.contains(dk):
                raise NotClosedUnderComposition(
                    f"{F} ist nicht abgeschlossen unter ∘{k}", witness=d.table()
                )
            images.append(dk)
        mu = F.self_map(images)
        if not mu.is_prenucleus:
            logger.warning(f"μ^k ist kein Prenukleus auf {F}: k = {k}")
        return mu

    def mu_hat(self, NL: NucleusLattice, k: Inflator) -> Inflator:
        """PUBLIC: μ̂^k - idempotente Hülle von j ↦ (j∘k)^∞ auf N(A)"""
        NL.index_of(k)
        images = [self.inflators.closure(self.inflators.compose(j, k)) for j in NL]
        step = self.nuclei.as_nl_inflator(NL, images, 'μ^k')
        return self.inflators.closure(step)

    def xi_operator(self, G: OperatorLattice, mu: Inflator) -> Inflator:
        """PUBLIC: Ξ(μ)(K) = K∘μ als Inflator auf G.as_lattice

        Args:
            G: Familie von Inflatoren auf F.as_lattice
            mu: Inflator auf F.as_lattice

        Raises:
            NotClosedUnderComposition
        """
        images = []
        for K in G:
            Kmu = self.inflators.compose(K, mu)
            if not G.contains(Kmu):
                raise NotClosedUnderComposition(f"{G} ist nicht abgeschlossen unter ∘μ", witness=K.table())
            images.append(Kmu)
        return G.self_map(images)

    # ========== PUBLIC Methods: Prüfungen zweiter Stufe ==========

    def second_level_suite(self, lattice: FiniteLattice) -> list:
        """PUBLIC: Aussagen über I(L), S(L), N(I(L)) und S(S(L))

        Returns:
            Liste von CheckResult; bei |I(L)| > second_level_bound alles 'skip'
        """
        try:
            I = self.inflators.enumerate_inflators(lattice, 'all')
        except BoundExceeded as e:
            return [CheckResult.skipped(cid, f"max_enumeration überschritten: {e.message}")
                    for cid in SECOND_LEVEL_CHECKS]
        if I.size > self.config.second_level_bound:
            reason = f"second_level_bound überschritten: |I| = {I.size} > {self.config.second_level_bound}"
            logger.warning(reason)
            return [CheckResult.skipped(cid, reason) for cid in SECOND_LEVEL_CHECKS]

        checks = {
            'interval-operator-lattice-modular': lambda: self.__check_host_modular(I),
            'mu-operator-prenucleus': lambda: self.__check_mu_prenucleus(I),
            'mu-negation-below-mu-totalizer': lambda: self.__check_mu_negation(I, 'stable'),
            'mu-negation-in-all-family': lambda: self.__check_mu_negation(I, 'all'),
            'mu-negation-equality-idempotent': lambda: self.__check_mu_negation_equality(I),
            'stable-negation-below-totalizer': lambda: self.__check_stable_negation(lattice),
            'stable-negation-below-nucleus-totalizer': lambda: self.__check_stable_negation_nucleus(lattice),
            'nucleus-negation-below-nucleus-totalizer': lambda: self.__check_nucleus_negation(lattice),
            'stable-negation-partial-totalizer-equivalence': lambda: self.__check_partial_equivalence(lattice),
            'stable-boolean-equivalence': lambda: self.__check_boolean_equivalence(lattice),
            'mu-hat-below-st-closure': lambda: self.__check_mu_hat(lattice),
            'xi-mu-dimension-equivalence': lambda: self.__check_xi_mu(lattice),
        }
        return [CheckResult.guard(cid, checks[cid]) for cid in SECOND_LEVEL_CHECKS]

    def comparison_chains(self, lattice: FiniteLattice) -> list:
        """PUBLIC: Totalisator-Vergleiche von Soc, Cbd und Gab auf N(A)

        t(Soc^∞) ≤ t(Soc) ≤ t(Gab); t(Cbd^∞) ≤ t(Cbd); t(Cbd) ≤ t(Soc);
        t(Cbd^∞) ≤ t(Soc^∞); Gab = u_{Gab(d_0̲)} = ι_{Gab(d_0̲)}.
        Vergleiche mit Boy werden übersprungen.
        """
        def operators() -> dict:
            NL = self.nuclei.nuclei_lattice(lattice)
            soc = self.nuclei.lift_derivative(NL, 'soc')
            cbd = self.nuclei.lift_derivative(NL, 'cbd')
            gab = self.nuclei.gab_map(NL)
            return {
                'NL': NL,
                'soc': soc, 'soc_inf': self.inflators.closure(soc),
                'cbd': cbd, 'cbd_inf': self.inflators.closure(cbd),
                'gab': gab,
            }

        cache = {}

        def ops() -> dict:
            if not cache:
                cache.update(operators())
            return cache

        t = self.inflators.totalizer

        def chain_check(check_id: str, pairs: list) -> CheckResult:
            o = ops()
            for lower, upper in pairs:
                if not t(o[lower]).le(t(o[upper])):
                    return CheckResult.failed(
                        check_id, f"t({lower}) ≰ t({upper})",
                        {lower: t(o[lower]).table(), upper: t(o[upper]).table()},
                    )
            return CheckResult.passed(check_id, " und ".join(f"t({a}) ≤ t({b})" for a, b in pairs))

        def iota_form() -> CheckResult:
            o = ops()
            H = o['NL'].as_lattice
            top_of_bottom = o['gab'](H.bottom)
            forms = {
                'u': self.inflators.u_a(H, top_of_bottom),
                'iota': self.inflators.iota(H, top_of_bottom),
            }
            broken = [name for name, form in forms.items() if form != o['gab']]
            if broken:
                return CheckResult.failed('gab-iota-form', f"Gab ≠ {', '.join(broken)}_{{Gab(d_0̲)}}",
                                          {'gab': o['gab'].table()})
            return CheckResult.passed('gab-iota-form', "u_{Gab(d_0̲)} = Gab = ι_{Gab(d_0̲)}")

        results = [
            CheckResult.guard('comparison-soc-chain',
                              lambda: chain_check('comparison-soc-chain', [('soc_inf', 'soc'), ('soc', 'gab')])),
            CheckResult.guard('comparison-cbd-chain',
                              lambda: chain_check('comparison-cbd-chain', [('cbd_inf', 'cbd')])),
            CheckResult.guard('comparison-cbd-below-soc',
                              lambda: chain_check('comparison-cbd-below-soc',
                                                  [('cbd', 'soc'), ('cbd_inf', 'soc_inf')])),
            CheckResult.skipped('comparison-boy', "benötigt den Boy-Inflator (nicht implementiert)"),
            CheckResult.guard('gab-iota-form', iota_form),
        ]
        return results

    # ========== PRIVATE Helper Methods: Bahnen ==========

    @staticmethod
    def __orbit(d: Inflator, start: int) -> list:
        """PRIVATE: start, d(start), ... bis zum ersten Fixpunkt (echte Anstiege)"""
        trace = [start]
        while d(trace[-1]) != trace[-1]:
            trace.append(d(trace[-1]))
        return trace

    # ========== PRIVATE Helper Methods: Prüfungen zweiter Stufe ==========

    def __check_host_modular(self, I: OperatorLattice) -> CheckResult:
        H = I.as_lattice
        witness = H.modular_witness
        if witness is None:
            return CheckResult.finding('interval-operator-lattice-modular', f"I(L) ist modular ({H.n} Elemente)")
        return CheckResult.finding(
            'interval-operator-lattice-modular',
            "I(L) ist nicht modular; Aussagen über N(I(L)) gelten hier nur über der stabilen Familie",
            [I.member(i).table() for i in witness],
        )

    def __check_mu_prenucleus(self, I: OperatorLattice) -> CheckResult:
        for s in I:
            mu = self.mu_operator(I, s)
            if not mu.is_prenucleus or (s.is_idempotent and not mu.is_nucleus):
                return CheckResult.failed('mu-operator-prenucleus', "μ^s verletzt Prenukleus/Nukleus", s.table())
        return CheckResult.passed('mu-operator-prenucleus', f"μ^s für alle {I.size} Inflatoren s geprüft")

    def __mu_negations(self, I: OperatorLattice, family: str) -> list:
        """PRIVATE: (s, ¬μ^s, μ^{t(s)}, gültig) für alle s ∈ I, ¬ in der Familie über I.as_lattice"""
        F = self.inflators.enumerate_inflators(I.as_lattice, family)
        rows = []
        for s in I:
            mu_s = self.mu_operator(I, s)
            mu_t = self.mu_operator(I, self.inflators.totalizer(s))
            negation, valid = self.inflators.pseudocomplement(F, mu_s)
            rows.append((s, negation, mu_t, valid))
        return rows

    def __check_mu_negation(self, I: OperatorLattice, family: str) -> CheckResult:
        check_id = 'mu-negation-below-mu-totalizer' if family == 'stable' else 'mu-negation-in-all-family'
        rows = self.__mu_negations(I, family)
        invalid = [s.table() for s, _, _, valid in rows if not valid]
        broken = [s.table() for s, neg, mu_t, valid in rows if valid and not neg.le(mu_t)]
        message = f"¬μ^s ≤ μ^{{t(s)}} in {family}(I(L)): {len(rows) - len(invalid)} gültige Pseudokomplemente"
        if family == 'all':
            # Die Familie aller Inflatoren ist i.A. kein Frame: nur Befund
            return CheckResult.finding(check_id, message, {'invalid': invalid, 'violations': broken} if invalid or broken else None)
        if broken:
            return CheckResult.failed(check_id, "¬μ^s ≰ μ^{t(s)}", broken)
        if invalid:
            logger.warning(f"{len(invalid)} Pseudokomplemente in S(I(L)) sind nicht disjunkt")
        return CheckResult.passed(check_id, message)

    def __check_mu_negation_equality(self, I: OperatorLattice) -> CheckResult:
        rows = self.__mu_negations(I, 'stable')
        broken = [s.table() for s, neg, mu_t, valid in rows
                  if valid and neg == mu_t and not s.is_idempotent]
        if broken:
            return CheckResult.failed('mu-negation-equality-idempotent',
                                      "¬μ^s = μ^{t(s)}, aber s nicht idempotent", broken)
        equal = sum(1 for _, neg, mu_t, valid in rows if valid and neg == mu_t)
        return CheckResult.passed('mu-negation-equality-idempotent',
                                  f"{equal} Inflatoren mit ¬μ^s = μ^{{t(s)}}, alle idempotent")

    def __stable_negations(self, lattice: FiniteLattice) -> list:
        S = self.inflators.enumerate_inflators(lattice, 'stable')
        return [(s, self.inflators.pseudocomplement(S, s)[0]) for s in S]

    def __check_stable_negation(self, lattice: FiniteLattice) -> CheckResult:
        broken = []
        for s, negation in self.__stable_negations(lattice):
            t_s = self.inflators.totalizer(s)
            if not negation.le(t_s):
                broken.append({'s': s.table(), 'negation': negation.table(), 'totalizer': t_s.table()})
        if broken:
            return CheckResult.failed('stable-negation-below-totalizer', "¬s ≰ t(s) in S(L)", broken[0])
        return CheckResult.passed('stable-negation-below-totalizer', "¬s ≤ t(s) für alle stabilen s")

    def __check_stable_negation_nucleus(self, lattice: FiniteLattice) -> CheckResult:
        broken = []
        for s, negation in self.__stable_negations(lattice):
            jt = self.inflators.partial_totalizer(self.inflators.closure(s), 'nucleus')
            if not negation.le(jt):
                broken.append({'s': s.table(), 'negation': negation.table(), 'nucleus_totalizer': jt.table()})
        if broken:
            return CheckResult.failed('stable-negation-below-nucleus-totalizer', "¬s ≰ ȷ(s^∞)", broken[0])
        return CheckResult.passed('stable-negation-below-nucleus-totalizer', "¬s ≤ ȷ(s^∞) für alle stabilen s")

    def __check_nucleus_negation(self, lattice: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(lattice)
        for j in NL:
            negation, _ = self.inflators.pseudocomplement(NL, j)
            jt = self.inflators.partial_totalizer(j, 'nucleus')
            if not negation.le(jt):
                return CheckResult.failed('nucleus-negation-below-nucleus-totalizer', "¬j ≰ ȷ(j) in N(L)",
                                          {'j': j.table(), 'negation': negation.table(), 'nucleus_totalizer': jt.table()})
        return CheckResult.passed('nucleus-negation-below-nucleus-totalizer', f"¬j ≤ ȷ(j) für alle {NL.size} Nuklei")

    def __check_partial_equivalence(self, lattice: FiniteLattice) -> CheckResult:
        S = self.inflators.enumerate_inflators(lattice, 'stable')
        for s in S:
            negation, _ = self.inflators.pseudocomplement(S, s)
            partial = self.inflators.partial_totalizer(s, 'stable')
            partial_negation, _ = self.inflators.pseudocomplement(S, partial)
            left = negation == partial
            right = s.le(partial_negation)
            if left != right:
                return CheckResult.failed(
                    'stable-negation-partial-totalizer-equivalence',
                    f"¬s = 𝔱(s) ist {left}, s ≤ ¬𝔱(s) ist {right}",
                    {'s': s.table(), 'negation': negation.table(), 'partial_totalizer': partial.table()},
                )
        return CheckResult.passed('stable-negation-partial-totalizer-equivalence',
                                  f"¬s = 𝔱(s) ⇔ s ≤ ¬𝔱(s) für alle {S.size} stabilen s")

    def __check_boolean_equivalence(self, lattice: FiniteLattice) -> CheckResult:
        S = self.inflators.enumerate_inflators(lattice, 'stable')
        pairs = [(s, self.inflators.pseudocomplement(S, s)[0], self.inflators.totalizer(s)) for s in S]
        all_equal = all(neg == t_s for _, neg, t_s in pairs)
        boolean = S.as_lattice.is_boolean
        if all_equal and not boolean:
            return CheckResult.failed('stable-boolean-equivalence', "¬s = t(s) für alle s, aber S(L) nicht boolesch")
        if boolean:
            broken = [s.table() for s, neg, t_s in pairs if not t_s.le(neg)]
            if broken:
                return CheckResult.failed('stable-boolean-equivalence', "S(L) boolesch, aber t(s) ≰ ¬s", broken[0])
        return CheckResult.passed(
            'stable-boolean-equivalence',
            f"S(L) boolesch: {boolean}; ¬s = t(s) für alle s: {all_equal}",
        )

    def __check_mu_hat(self, lattice: FiniteLattice) -> CheckResult:
        NL = self.nuclei.nuclei_lattice(lattice)
        H = NL.as_lattice
        candidates = list(self.inflators.enumerate_inflators(H, 'stable'))
        candidates += [self.nuclei.lift_derivative(NL, 'soc'),
                       self.nuclei.lift_derivative(NL, 'cbd'),
                       self.nuclei.gab_map(NL)]
        for St in candidates:
            closed = self.inflators.closure(St)
            k = NL.member(closed(H.bottom))
            if not self.mu_hat(NL, k).le(closed):
                return CheckResult.failed('mu-hat-below-st-closure', "μ̂^{St^∞(d_0̲)} ≰ St^∞", St.table())
        return CheckResult.passed('mu-hat-below-st-closure',
                                  f"μ̂^{{St^∞(d_0̲)}} ≤ St^∞ für {len(candidates)} Selbstabbildungen von N(L)")

    def __check_xi_mu(self, lattice: FiniteLattice) -> CheckResult:
        S = self.inflators.enumerate_inflators(lattice, 'stable')
        H = S.as_lattice
        G = self.inflators.enumerate_inflators(H, 'stable')
        tested = 0
        for s in S:
            s_inf = self.inflators.closure(s)
            mu = self.mu_operator(S, s_inf)
            partial = self.inflators.partial_totalizer(mu, 'stable')
            xi = self.xi_operator(G, mu)
            start = S.index_of(s_inf)
            for J in G:
                J_inf = self.inflators.closure(J)
                conditions = (
                    # Ξ(μ)(J^∞) = Tp; J^∞ liegt in G
                    G.apply_self_map(xi, J_inf).is_top,
                    partial.le(J_inf),
                    J_inf(start) == H.top,
                )
                tested += 1
                if len(set(conditions)) != 1:
                    return CheckResult.failed(
                        'xi-mu-dimension-equivalence',
                        f"Bedingungen uneinig: {conditions}",
                        {'s': s.table(), 'J': J.table()},
                    )
        return CheckResult.passed('xi-mu-dimension-equivalence', f"{tested} Paare (s, J) geprüft")
