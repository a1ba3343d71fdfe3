# tests/unit/test_verification_service.py
"""
Unit Tests fuer VerificationService (services/verification_service.py)

Testet:
- verify() - Suiten core, second-level, all
- Konfigurationszusammenfassung im Bericht
- Stichproben bei kleiner second_level_bound
- Überspringen und Fehlschlagen einzelner Prüfungen
- Ordnungsprädikate je Familie (max_operator_lattice, Befunde)
"""
from __future__ import annotations

import pytest

from config import RunConfig
from models.errors import BadParameter
from services import VerificationService
from services.dimension_service import SECOND_LEVEL_CHECKS

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# FIXTURES
# ============================================================================

@pytest.fixture
def verification(config):
    return VerificationService(config)


@pytest.fixture
def chain3_core(verification, chain3):
    return verification.verify(chain3, 'core')


# ============================================================================
# SUITE CORE
# ============================================================================

class TestCoreSuite:
    """Tests fuer die Suite 'core'"""

    def test_chain3_has_no_failures(self, chain3_core):
        assert not chain3_core.has_failures
        assert chain3_core.exit_code == 0
        assert chain3_core.get('lattice-modular').status == 'pass'
        assert chain3_core.get('quotient-distributive').status == 'pass'

    def test_checks_sorted_by_id(self, chain3_core):
        ids = [c.id for c in chain3_core.checks]
        assert ids == sorted(ids)
        assert 'comparison-boy' in ids

    def test_exhaustive_scope(self, chain3_core):
        assert chain3_core.get('composition-laws').message == "5 von 5 Inflatoren"

    def test_config_summary(self, chain3_core):
        assert chain3_core.config == {
            'max_lattice_size': 64,
            'max_enumeration': 100_000,
            'second_level_bound': 64,
            'max_operator_lattice': 256,
            'seed': 0,
        }

    def test_quotient_distributive_skipped_on_m3(self, verification, m3):
        report = verification.verify(m3, 'core')
        assert report.get('quotient-distributive').status == 'skip'

    def test_n5_is_not_modular(self, verification, n5):
        report = verification.verify(n5, 'core')
        check = report.get('lattice-modular')
        assert check.status == 'fail'
        assert check.witness == {'a': 'x', 'b': 'z', 'c': 'y'}
        assert report.exit_code == 1


class TestSampling:
    """Tests fuer Stichproben mit kleiner second_level_bound"""

    def test_sampled_scope(self, chain3):
        service = VerificationService(RunConfig(second_level_bound=2, cache_dir=None))
        report = service.verify(chain3, 'core')
        assert report.get('composition-laws').message == "2 von 5 Inflatoren"


# ============================================================================
# SUITES SECOND-LEVEL UND ALL
# ============================================================================

class TestSuites:
    """Tests fuer Suite-Auswahl"""

    def test_second_level_ids(self, verification, chain2):
        report = verification.verify(chain2, 'second-level')
        assert [c.id for c in report.checks] == sorted(SECOND_LEVEL_CHECKS)

    def test_all_contains_both(self, verification, chain2):
        report = verification.verify(chain2, 'all')
        assert report.get('lattice-modular') is not None
        assert report.get('mu-operator-prenucleus') is not None

    def test_unknown_suite(self, verification, chain2):
        with pytest.raises(BadParameter):
            verification.verify(chain2, 'everything')


# ============================================================================
# ORDNUNGSPRÄDIKATE
# ============================================================================

class TestOrderPredicateChecks:
    """Tests fuer die Prüfungen zu ∧-prim, ∧-irreduzibel und ordnungsprim"""

    def test_distributive_families_pass(self, chain3_core):
        check = chain3_core.get('meet-irreducible-prime')
        assert check.status == 'pass'
        assert check.message.startswith('all(5)')

    def test_diamond_reports_prime_gap(self, verification, m3):
        # I(M3) enthält ι_0, ι_a, ι_b, ι_c, Top als Kopie von M3
        check = verification.verify(m3, 'core').get('meet-irreducible-prime')
        assert check.status == 'finding'
        assert 'all' in check.witness
        assert check.witness['all']

    def test_oversized_family_skips_only_itself(self, chain3):
        service = VerificationService(RunConfig(max_operator_lattice=4, cache_dir=None))
        report = service.verify(chain3, 'core')
        check = report.get('meet-irreducible-prime')
        assert check.status == 'pass'
        assert 'nucleus(' in check.message
        assert 'übersprungen: all:' in check.message
        skipped = report.get('idempotent-meet-prime-order-prime')
        assert skipped.status == 'skip'
        assert skipped.message.startswith('max_operator_lattice überschritten')

    @pytest.mark.slow
    def test_boolean3_checked_exhaustively(self, verification, lattice_service):
        report = verification.verify(lattice_service.boolean(3), 'core')
        for check_id in ('idempotent-meet-prime-order-prime', 'equalizer-preserves-meet-prime'):
            assert report.get(check_id).status == 'pass'
            assert report.get(check_id).message == "216 Inflatoren"
        check = report.get('meet-irreducible-prime')
        assert check.status in ('pass', 'finding')
        assert 'all(216)' in check.message
