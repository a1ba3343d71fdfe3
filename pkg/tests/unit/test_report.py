# tests/unit/test_report.py
"""
Unit Tests fuer Fehlerhierarchie und Berichtsmodelle (models/errors.py, models/report.py)

Testet:
- IdiomError.to_dict() und die Einordnung der Unterklassen
- CheckResult - Factory Methods, Status-Validierung, guard()
- VerifyReport - Sortierung, summary(), exit_code, get(), to_dict()
- DimensionReport.to_dict()
"""
from __future__ import annotations

import pytest

from models.errors import (
    BadParameter,
    BoundExceeded,
    DefectReport,
    EnumerationBoundExceeded,
    IdiomError,
    NotALattice,
    RouteDisagreement,
    TooLarge,
    ValidationError,
)
from models.report import CheckResult, DimensionReport, VerifyReport

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# FEHLER
# ============================================================================

class TestErrors:
    """Tests fuer die Fehlerhierarchie"""

    def test_to_dict(self):
        error = NotALattice("a und b haben kein Supremum", witness=['a', 'b', 'join'])
        assert error.to_dict() == {
            'kind': 'NotALattice',
            'message': "a und b haben kein Supremum",
            'witness': ['a', 'b', 'join'],
            'details': {},
        }

    def test_hierarchy(self):
        assert issubclass(NotALattice, ValidationError)
        assert issubclass(TooLarge, BoundExceeded)
        assert issubclass(EnumerationBoundExceeded, BoundExceeded)
        assert issubclass(RouteDisagreement, DefectReport)
        assert issubclass(DefectReport, IdiomError)

    def test_str_is_message(self):
        assert str(BadParameter("n muss ≥ 1 sein")) == "n muss ≥ 1 sein"


# ============================================================================
# CHECK RESULT
# ============================================================================

class TestCheckResult:
    """Tests fuer CheckResult"""

    def test_factories(self):
        assert CheckResult.passed('x').status == 'pass'
        assert CheckResult.failed('x', 'kaputt', [1]).witness == [1]
        assert CheckResult.skipped('x', 'zu groß').status == 'skip'
        assert CheckResult.finding('x', 'Befund').status == 'finding'

    def test_unknown_status_raises(self):
        with pytest.raises(BadParameter):
            CheckResult('x', 'maybe')

    def test_guard_passes_result_through(self):
        result = CheckResult.guard('x', lambda: CheckResult.passed('x', 'ok'))
        assert result == CheckResult.passed('x', 'ok')

    def test_guard_turns_bound_into_skip(self):
        def check():
            raise EnumerationBoundExceeded("zu viele", details={'bound': 'max_enumeration'})

        result = CheckResult.guard('x', check)
        assert result.status == 'skip'
        assert result.message.startswith('max_enumeration')

    def test_guard_turns_idiom_error_into_fail(self):
        def check():
            raise RouteDisagreement("Wege verschieden", witness={'a': 1})

        result = CheckResult.guard('x', check)
        assert result.status == 'fail'
        assert result.witness == {'a': 1}
        assert 'RouteDisagreement' in result.message

    def test_guard_does_not_swallow_other_exceptions(self):
        def check():
            raise ZeroDivisionError()

        with pytest.raises(ZeroDivisionError):
            CheckResult.guard('x', check)

    def test_to_dict_omits_empty_fields(self):
        assert CheckResult.passed('x').to_dict() == {'id': 'x', 'status': 'pass'}


# ============================================================================
# VERIFY REPORT
# ============================================================================

class TestVerifyReport:
    """Tests fuer VerifyReport"""

    @pytest.fixture
    def report(self):
        return VerifyReport(
            lattice='abc',
            name='chain3',
            suite='core',
            checks=(
                CheckResult.passed('zeta'),
                CheckResult.failed('alpha', 'kaputt'),
                CheckResult.finding('mu', 'Befund'),
            ),
        )

    def test_checks_sorted_by_id(self, report):
        assert [c.id for c in report.checks] == ['alpha', 'mu', 'zeta']

    def test_summary(self, report):
        assert report.summary() == {'pass': 1, 'fail': 1, 'skip': 0, 'finding': 1}

    def test_exit_code(self, report):
        assert report.has_failures
        assert report.exit_code == 1
        clean = VerifyReport('abc', 'chain3', 'core', (CheckResult.passed('x'),))
        assert clean.exit_code == 0

    def test_get(self, report):
        assert report.get('mu').status == 'finding'
        assert report.get('nope') is None

    def test_to_dict(self, report):
        data = report.to_dict()
        assert data['summary']['fail'] == 1
        assert 'config' not in data
        assert data['checks'][0] == {'id': 'alpha', 'status': 'fail', 'message': 'kaputt'}


class TestDimensionReport:
    """Tests fuer DimensionReport"""

    def test_to_dict(self):
        report = DimensionReport('abc', 'soc_length', True, 2, ('0', 'm', '1'), {'orbit': True})
        assert report.to_dict() == {
            'lattice': 'abc',
            'notion': 'soc_length',
            'verdict': True,
            'steps': 2,
            'trace': ['0', 'm', '1'],
            'sub_verdicts': {'orbit': True},
        }
