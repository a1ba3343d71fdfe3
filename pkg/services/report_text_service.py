# services/report_text_service.py
from __future__ import annotations
import json
import logging
from pathlib import Path
from typing import Optional

from models.report import CheckResult, DimensionReport, VerifyReport

logger = logging.getLogger(__name__)
if not logger.handlers:
    logging.basicConfig(level=logging.INFO, format='[%(levelname)s] %(name)s: %(message)s')


class ReportTextService:
    """Service für die Textausgabe der CLI

    Lädt report_texts.json und setzt Ergebnisse in die Vorlagen ein.
    Die Textform ist für Menschen gedacht; der stabile Vertrag ist JSON.
    """

    def __init__(self, json_path: Optional[Path] = None, lang: str = 'en'):
        """
        Args:
            json_path: Pfad zur report_texts.json (default: ./report_texts.json)
            lang: Sprache ('en' oder 'de')
        """
        if json_path is None:
            json_path = Path(__file__).parent.parent / 'report_texts.json'

        self.json_path = json_path
        self.lang = lang
        self.texts = self.__load_texts()

    # ========== PUBLIC Methods ==========

    def verdict_word(self, verdict: bool) -> str:
        return self.texts['verdict']['yes' if verdict else 'no'][self.lang]

    def property_line(self, name: str, verdict: dict) -> str:
        """PUBLIC: Zeile "name: yes|no" mit optionalem Zeugen

        Args:
            name: Eigenschaft (z.B. 'modular')
            verdict: {'holds': bool, 'witness': dict oder None}
        """
        witness = verdict.get('witness')
        key = 'with_witness' if witness else 'plain'
        return self.__fill(self.texts['property'][key][self.lang], {
            'name': name,
            'verdict': self.verdict_word(verdict['holds']),
            'witness': self.__format_witness(witness),
        })

    def check_line(self, check: CheckResult) -> str:
        """PUBLIC: Eine Zeile pro Prüfergebnis"""
        template = self.texts['status'].get(check.status, {}).get(self.lang)
        if template is None:
            logger.warning(f"Status '{check.status}' nicht in report_texts.json gefunden!")
            return f"{check.status} {check.id}"
        return self.__fill(template, {'id': check.id, 'message': check.message or '-'})

    def summary_line(self, report: VerifyReport) -> str:
        values = dict(report.summary())
        values['name'] = report.name or report.lattice[:12]
        return self.__fill(self.texts['summary'][self.lang], values)

    def report_text(self, report: VerifyReport) -> str:
        """PUBLIC: Vollständiger Bericht, gruppiert nach Status (Fehler zuerst)"""
        lines = []
        for status in self.texts['order']['status']:
            lines += [self.check_line(c) for c in report.by_status(status)]
        lines.append(self.summary_line(report))
        return "\n".join(lines)

    def dimension_line(self, report: DimensionReport) -> str:
        """PUBLIC: Dimensionsbericht in einer Zeile"""
        trace = " → ".join(str(x) for x in report.trace) or "-"
        line = self.__fill(self.texts['dimension'][self.lang], {
            'notion': report.notion,
            'verdict': self.verdict_word(report.verdict),
            'steps': report.steps,
            'trace': trace,
        })
        if report.sub_verdicts:
            parts = ", ".join(f"{k}={self.verdict_word(bool(v))}" for k, v in sorted(report.sub_verdicts.items()))
            line += f" [{parts}]"
        return line

    def error_line(self, response: dict) -> str:
        """PUBLIC: Fehlerantwort eines Controllers als eine Zeile

        Args:
            response: {'error', 'kind', 'exit_code', optional 'details'}
        """
        witness = (response.get('details') or {}).get('witness')
        key = 'with_witness' if witness else 'plain'
        return self.__fill(self.texts['error'][key][self.lang], {
            'error': response['error'],
            'kind': response['kind'],
            'exit_code': response['exit_code'],
            'witness': self.__format_witness(witness),
        })

    @staticmethod
    def table_text(table: dict) -> str:
        """PUBLIC: Wertetabelle "x↦d(x)" in Element-Reihenfolge"""
        return ", ".join(f"{x}↦{v}" for x, v in table.items())

    # ========== PRIVATE Helper Methods ==========

    @staticmethod
    def __fill(template: str, values: dict) -> str:
        for key, value in values.items():
            template = template.replace('%{' + key + '}', str(value))
        return template

    @staticmethod
    def __format_witness(witness) -> str:
        if isinstance(witness, dict):
            return ", ".join(f"{k}={v}" for k, v in witness.items())
        if isinstance(witness, (list, tuple)):
            return ", ".join(str(x) for x in witness)
        return str(witness)

    def __load_texts(self) -> dict:
        """PRIVATE: Lädt report_texts.json"""
        try:
            with open(self.json_path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except FileNotFoundError:
            logger.error(f"report_texts.json nicht gefunden: {self.json_path}")
            return self.__get_fallback_texts()
        except json.JSONDecodeError as e:
            logger.error(f"Fehler beim Parsen von report_texts.json: {e}")
            return self.__get_fallback_texts()

    def __get_fallback_texts(self) -> dict:
        """PRIVATE: Fallback-Texte wenn JSON fehlt"""
        both = lambda text: {'de': text, 'en': text}
        return {
            'order': {'status': ['fail', 'finding', 'skip', 'pass']},
            'status': {s: both(f"[{s}] %{{id}}: %{{message}}") for s in ('pass', 'fail', 'skip', 'finding')},
            'verdict': {'yes': both('yes'), 'no': both('no')},
            'property': {
                'with_witness': both('%{name}: %{verdict} (witness %{witness})'),
                'plain': both('%{name}: %{verdict}'),
            },
            'summary': both('%{name}: %{pass} pass, %{fail} fail, %{skip} skip, %{finding} finding'),
            'dimension': both('%{notion}: %{verdict}, %{steps} steps, trace %{trace}'),
            'error': {
                'plain': both('idiomlab: %{error} [%{kind}, exit %{exit_code}]'),
                'with_witness': both('idiomlab: %{error} [%{kind}, exit %{exit_code}] (witness %{witness})'),
            },
        }
