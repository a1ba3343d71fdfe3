# app.py
"""
idiomlab - Kommandozeile

Usage:
    python app.py gen chain 3 -o c3.json
    python app.py check n5.json
    python app.py verify c3.json --suite all --format json

Exit-Codes: 0 ok, 1 Prüfung fehlgeschlagen, 2 Aufruf/Eingabe, 3 Schranke überschritten.
"""
from __future__ import annotations
import argparse
import logging
import sys
from typing import Optional, Sequence

from config import RunConfig, setup_logging, LOG_LEVEL
from controllers import LatticeController, OperatorController, VerifyController, EXIT_USAGE
from controllers.responses import error_response
from models.errors import IdiomError
from models.report import CheckResult, DimensionReport, VerifyReport
from repositories.json_gateway import dumps
from services import ReportTextService

logger = logging.getLogger(__name__)


# ============================================================================
# ARGUMENT PARSER
# ============================================================================

class UsageError(Exception):
    """argparse meldet einen Aufruffehler"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """Parser mit globalen Flags und allen Unterkommandos"""
    parser = _Parser(prog='idiomlab', description='Inflator-Kalkül auf endlichen modularen Verbänden')
    parser.add_argument('--format', choices=('text', 'json'), default=None, help='Ausgabeformat')
    parser.add_argument('--no-cache', action='store_true', help='Ergebnis-Cache nicht benutzen')
    parser.add_argument('--cache-dir', default=None, help='Cache-Verzeichnis')
    parser.add_argument('--seed', type=int, default=None, help='Seed für Stichproben (default 0)')
    parser.add_argument('--log-level', default=LOG_LEVEL, help='Logging-Level (default WARNING)')

    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    gen = sub.add_parser('gen', help='Verband einer Standardfamilie erzeugen')
    gen.add_argument('family')
    gen.add_argument('params', nargs='*')
    gen.add_argument('-o', '--output', default=None)

    check = sub.add_parser('check', help='Verband validieren, Modularität/Distributivität')
    check.add_argument('file')

    inflators = sub.add_parser('inflators', help='Inflatoren einer Familie aufzählen')
    inflators.add_argument('file')
    inflators.add_argument('--family', choices=('all', 'stable', 'prenucleus', 'nucleus'), default='all')

    for name in ('totalizer', 'equalizer'):
        extremum = sub.add_parser(name, help=f'{name} eines Inflators')
        extremum.add_argument('file')
        extremum.add_argument('--inflator', required=True)
        extremum.add_argument('--oracle', action='store_true')

    derive = sub.add_parser('derive', help='soc- oder cbd-Ableitung')
    derive.add_argument('file')
    derive.add_argument('--op', choices=('soc', 'cbd'), required=True)
    derive.add_argument('--closure', action='store_true')

    nuclei = sub.add_parser('nuclei', help='N(A) exportieren')
    nuclei.add_argument('file')

    gab = sub.add_parser('gab', help='Gab-Tabelle und Gab-Dimension')
    gab.add_argument('file')
    gab.add_argument('--iterate', action='store_true')

    sa = sub.add_parser('sa', help='strongly-atomic-Bericht')
    sa.add_argument('file')

    verify = sub.add_parser('verify', help='Prüfsuite ausführen')
    verify.add_argument('file')
    verify.add_argument('--suite', choices=('core', 'second-level', 'all'), default='core')
    verify.add_argument('-o', '--output', default=None, help='Bericht zusätzlich als JSON schreiben')

    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """RunConfig aus Umgebung plus CLI-Flags"""
    config = RunConfig.from_env().with_overrides(
        output_format=args.format,
        cache_dir=args.cache_dir,
        seed=args.seed,
    )
    return config.without_cache() if args.no_cache else config


# ============================================================================
# AUSGABE
# ============================================================================

def render(command: str, response: dict, config: RunConfig, texts: ReportTextService) -> str:
    """Antwort eines Controllers als Text oder JSON"""
    if not response['success']:
        return render_error(response, config.output_format, texts)
    if config.output_format == 'json':
        payload = {k: v for k, v in response.items() if k not in ('success', 'error', 'kind', 'exit_code')}
        return dumps(payload['report'] if command == 'verify' else payload)

    if command == 'gen':
        lines = [f"{response['lattice']['name']}: {response['size']} elements, digest {response['digest'][:12]}"]
        if response['path']:
            lines.append(f"written to {response['path']}")
        return "\n".join(lines)
    if command == 'check':
        return "\n".join([
            f"{response['name'] or 'lattice'}: {response['size']} elements",
            texts.property_line('modular', response['modular']),
            texts.property_line('distributive', response['distributive']),
        ])
    if command == 'inflators':
        lines = [f"{response['family']}: {response['count']} inflators"]
        lines += [texts.table_text(t) for t in response['members']]
        return "\n".join(lines)
    if command in ('totalizer', 'equalizer'):
        lines = [f"d = {texts.table_text(response['inflator'])}",
                 f"{command} = {texts.table_text(response[command])}"]
        if response['oracle'] is not None:
            lines.append(f"oracle = {texts.table_text(response['oracle'])} "
                         f"({'agrees' if response['agrees'] else 'DISAGREES'})")
        return "\n".join(lines)
    if command == 'derive':
        lines = [f"{response['op']} = {texts.table_text(response['derivative'])}"]
        if 'closure' in response:
            lines.append(f"{response['op']}^inf = {texts.table_text(response['closure'])}")
            lines.append(texts.dimension_line(_dimension(response['length'])))
        return "\n".join(lines)
    if command == 'nuclei':
        NL = response['nuclei']
        lines = [f"N(A): {NL['size']} nuclei, frame: {texts.verdict_word(NL['frame'])}"]
        lines += [f"e{i}: {texts.table_text(t)}" for i, t in enumerate(NL['members'])]
        return "\n".join(lines)
    if command == 'gab':
        lines = [f"e{i}: {texts.table_text(t)}  ->  e{response['gab'][str(i)]}"
                 for i, t in enumerate(response['nuclei'])]
        if 'dimension' in response:
            lines.append(texts.dimension_line(_dimension(response['dimension'])))
        return "\n".join(lines)
    if command == 'sa':
        return texts.dimension_line(_dimension(response['report']))
    if command == 'verify':
        return texts.report_text(_report(response['report']))
    return dumps(response)


def render_error(response: dict, output_format: str, texts: ReportTextService) -> str:
    """Fehlerantwort: JSON-Objekt im Format json, sonst eine Textzeile"""
    if output_format == 'json':
        return dumps({k: response[k] for k in ('error', 'kind', 'exit_code', 'details') if k in response})
    return texts.error_line(response)


def _dimension(data: dict) -> DimensionReport:
    return DimensionReport(data['lattice'], data['notion'], data['verdict'], data['steps'],
                           tuple(data['trace']), data['sub_verdicts'])


def _report(data: dict) -> VerifyReport:
    checks = [CheckResult(c['id'], c['status'], c.get('message', ''), c.get('witness')) for c in data['checks']]
    return VerifyReport(data['lattice'], data['name'], data['suite'], tuple(checks), data.get('config'))


# ============================================================================
# MAIN
# ============================================================================

def dispatch(args: argparse.Namespace, config: RunConfig) -> dict:
    """Ruft den zuständigen Controller auf"""
    if args.command == 'gen':
        return LatticeController(config).generate(args.family, args.params, args.output)
    if args.command == 'check':
        return LatticeController(config).check(args.file)
    if args.command == 'verify':
        response = VerifyController(config).verify(args.file, args.suite)
        if response['success'] and args.output:
            from repositories import JsonGateway
            JsonGateway().write_document(args.output, response['report'])
        return response

    operators = OperatorController(config)
    if args.command == 'inflators':
        return operators.inflators(args.file, args.family)
    if args.command == 'totalizer':
        return operators.totalizer(args.file, args.inflator, args.oracle)
    if args.command == 'equalizer':
        return operators.equalizer(args.file, args.inflator, args.oracle)
    if args.command == 'derive':
        return operators.derive(args.file, args.op, args.closure)
    if args.command == 'nuclei':
        return operators.nuclei(args.file)
    if args.command == 'gab':
        return operators.gab(args.file, args.iterate)
    return operators.strongly_atomic(args.file)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Einstiegspunkt; liefert den Exit-Code"""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"idiomlab: {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_level)
    texts = ReportTextService()
    try:
        config = build_config(args)
    except IdiomError as e:
        print(render_error(error_response(e), args.format or 'text', texts), file=sys.stderr)
        return EXIT_USAGE

    response = dispatch(args, config)
    output = render(args.command, response, config, texts)
    print(output, file=sys.stdout if response['success'] else sys.stderr)
    return response['exit_code']


if __name__ == '__main__':
    sys.exit(main())
