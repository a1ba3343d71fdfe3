# tests/unit/test_dimension_service.py
"""
Unit Tests fuer DimensionService (services/dimension_service.py)

Testet:
- d_length() / derivative_length() - Bahn und Totalisator-Form
- strongly_atomic() - drei Teilurteile
- st_dimension() / gab_dimension()
- mu_operator() / mu_hat()
- second_level_suite() - inklusive bekanntem Gegenbeispiel auf boolean2
- comparison_chains()
"""
from __future__ import annotations

import pytest

from config import RunConfig
from models.errors import MemberNotInFamily
from models.inflator import Inflator
from services import DimensionService
from services.dimension_service import SECOND_LEVEL_CHECKS

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# LÄNGEN
# ============================================================================

class TestLengths:
    """Tests fuer d_length(), derivative_length(), strongly_atomic()"""

    def test_soc_length_of_chain3(self, dimension_service, chain3):
        report = dimension_service.derivative_length(chain3, 'soc')
        assert report.notion == 'soc_length'
        assert report.verdict
        assert report.steps == 2
        assert report.trace == ('0', 'm', '1')
        assert report.sub_verdicts == {'orbit': True, 'totalizer_form': True}

    def test_identity_has_no_length(self, dimension_service, chain3):
        report = dimension_service.d_length(Inflator.identity(chain3))
        assert not report.verdict
        assert report.steps == 0
        assert report.sub_verdicts['totalizer_form'] is False

    @pytest.mark.parametrize('lattice_name', ['chain3', 'boolean2', 'm3'])
    def test_strongly_atomic(self, dimension_service, lattice_name, request):
        report = dimension_service.strongly_atomic(request.getfixturevalue(lattice_name))
        assert report.verdict
        assert set(report.sub_verdicts) == {'definition', 'soc_orbit', 'totalizer_form'}


# ============================================================================
# DIMENSIONEN AUF N(A)
# ============================================================================

class TestNucleusDimensions:
    """Tests fuer st_dimension() und gab_dimension()"""

    def test_gab_dimension_of_chain3(self, dimension_service, chain3):
        report = dimension_service.gab_dimension(chain3)
        assert report.verdict
        assert report.steps == 1
        assert report.trace == (0, 3)

    def test_st_dimension_from_images(self, dimension_service, nucleus_service, chain3):
        NL = nucleus_service.nuclei_lattice(chain3)
        identity_map = list(NL.members)
        report = dimension_service.st_dimension(NL, identity_map)
        assert not report.verdict
        assert report.steps == 0


# ============================================================================
# OPERATOREN ZWEITER STUFE
# ============================================================================

class TestSecondLevelOperators:
    """Tests fuer mu_operator() und mu_hat()"""

    def test_mu_operator(self, dimension_service, inflator_service, chain3):
        I = inflator_service.enumerate_inflators(chain3, 'all')
        k = Inflator(chain3, (1, 1, 2))
        mu = dimension_service.mu_operator(I, k)
        assert mu.lattice.digest == I.as_lattice.digest
        assert mu(I.index_of(Inflator.identity(chain3))) == I.index_of(k)
        assert mu.is_prenucleus

    def test_mu_operator_requires_member(self, dimension_service, nucleus_service, chain3):
        NL = nucleus_service.nuclei_lattice(chain3)
        with pytest.raises(MemberNotInFamily):
            dimension_service.mu_operator(NL, Inflator(chain3, (1, 2, 2)))

    def test_mu_hat_is_idempotent(self, dimension_service, nucleus_service, chain3):
        NL = nucleus_service.nuclei_lattice(chain3)
        hat = dimension_service.mu_hat(NL, Inflator(chain3, (1, 1, 2)))
        assert hat.is_idempotent


# ============================================================================
# PRÜFSUITEN
# ============================================================================

class TestSuites:
    """Tests fuer second_level_suite() und comparison_chains()"""

    def test_chain2_second_level_has_no_failures(self, dimension_service, chain2):
        checks = dimension_service.second_level_suite(chain2)
        assert [c.id for c in checks] == list(SECOND_LEVEL_CHECKS)
        assert [c.id for c in checks if c.status == 'fail'] == []

    @pytest.mark.slow
    def test_boolean2_negation_counterexample(self, dimension_service, boolean2):
        checks = {c.id: c for c in dimension_service.second_level_suite(boolean2)}
        check = checks['stable-negation-below-totalizer']
        assert check.status == 'fail'
        assert set(check.witness) == {'s', 'negation', 'totalizer'}

    def test_second_level_skips_above_bound(self, boolean2):
        service = DimensionService(RunConfig(second_level_bound=4, cache_dir=None))
        checks = service.second_level_suite(boolean2)
        assert {c.status for c in checks} == {'skip'}
        assert 'second_level_bound' in checks[0].message

    def test_comparison_chains_on_chain3(self, dimension_service, chain3):
        statuses = {c.id: c.status for c in dimension_service.comparison_chains(chain3)}
        assert statuses['comparison-boy'] == 'skip'
        assert 'fail' not in statuses.values()
