# tests/unit/test_report_text_service.py
"""
Unit Tests fuer ReportTextService (services/report_text_service.py)

Testet:
- property_line() mit und ohne Zeugen
- check_line() / summary_line() / report_text()
- dimension_line() und table_text()
- error_line() für Controller-Fehlerantworten
- Sprachwahl und Fallback-Texte
"""
from __future__ import annotations

import pytest

from controllers.responses import error_response
from models.errors import NotInflationary, TooLarge
from models.report import CheckResult, DimensionReport, VerifyReport
from services import ReportTextService

# Mark this whole module as unit tests
pytestmark = pytest.mark.unit


# ============================================================================
# FIXTURES
# ============================================================================

@pytest.fixture
def texts():
    return ReportTextService()


@pytest.fixture
def report():
    return VerifyReport(
        lattice='f' * 64,
        name='chain3',
        suite='core',
        checks=(
            CheckResult.passed('b-pass', 'gilt'),
            CheckResult.failed('c-fail', 'gilt nicht'),
            CheckResult.skipped('a-skip', 'zu groß'),
            CheckResult.finding('d-finding', 'offen'),
        ),
    )


@pytest.fixture
def soc_report():
    return DimensionReport(
        lattice='f' * 64, notion='soc_length', verdict=True, steps=2,
        trace=('0', 'm', '1'), sub_verdicts={'totalizer_form': True, 'orbit': True},
    )


# ============================================================================
# ZEILEN
# ============================================================================

class TestLines:
    """Tests fuer die einzelnen Zeilenformen"""

    def test_property_line_with_witness(self, texts):
        line = texts.property_line('modular', {'holds': False, 'witness': {'a': 'x', 'b': 'z', 'c': 'y'}})
        assert line == "modular: no (witness a=x, b=z, c=y)"

    def test_property_line_plain(self, texts):
        assert texts.property_line('distributive', {'holds': True, 'witness': None}) == "distributive: yes"

    def test_check_line_without_message(self, texts):
        assert texts.check_line(CheckResult.passed('lattice-tables')) == "[pass]    lattice-tables: -"

    def test_summary_line(self, texts, report):
        assert texts.summary_line(report) == "chain3: 1 passed, 1 failed, 1 skipped, 1 findings"

    def test_report_text_order(self, texts, report):
        lines = texts.report_text(report).splitlines()
        assert [line.split()[1].rstrip(':') for line in lines[:4]] == ['c-fail', 'd-finding', 'a-skip', 'b-pass']
        assert lines[-1].startswith('chain3:')

    def test_dimension_line(self, texts, soc_report):
        assert texts.dimension_line(soc_report) == (
            "soc_length: yes after 2 steps, trace 0 → m → 1 [orbit=yes, totalizer_form=yes]"
        )

    def test_table_text(self, texts):
        assert texts.table_text({'0': 'm', 'm': 'm', '1': '1'}) == "0↦m, m↦m, 1↦1"

    def test_error_line_for_bound(self, texts):
        response = error_response(TooLarge("Verband mit 100 Elementen", details={'bound': 'max_lattice_size'}))
        assert texts.error_line(response) == (
            "idiomlab: max_lattice_size überschritten: Verband mit 100 Elementen [TooLarge, exit 3]"
        )

    def test_error_line_with_witness(self, texts):
        response = error_response(NotInflationary("d(m) < m", witness='m'))
        assert texts.error_line(response) == "idiomlab: d(m) < m [NotInflationary, exit 2] (witness m)"


# ============================================================================
# SPRACHE UND FALLBACK
# ============================================================================

class TestLanguageAndFallback:
    """Tests fuer lang='de' und fehlende report_texts.json"""

    def test_german(self, soc_report):
        texts = ReportTextService(lang='de')
        assert texts.verdict_word(False) == 'nein'
        assert texts.dimension_line(soc_report).startswith("soc_length: ja nach 2 Schritten")

    def test_fallback_when_file_missing(self, tmp_path, report):
        texts = ReportTextService(json_path=tmp_path / 'missing.json')
        assert texts.verdict_word(True) == 'yes'
        assert texts.check_line(CheckResult.passed('x')) == "[pass] x: -"
        assert texts.summary_line(report) == "chain3: 1 pass, 1 fail, 1 skip, 1 finding"
        assert texts.error_line({'error': 'kaputt', 'kind': 'DocumentError', 'exit_code': 2}) == (
            "idiomlab: kaputt [DocumentError, exit 2]"
        )
