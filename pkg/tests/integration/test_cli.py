# tests/integration/test_cli.py
"""
Integrationstests fuer die Kommandozeile (app.py)

Testet komplette Abläufe über main(argv):
- gen → check → verify
- Textausgabe mit Zeugentripel
- Exit-Codes 0, 1, 2, 3
- JSON-Ausgabe ist bei gleicher Eingabe byte-identisch
"""
import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from app import main

# Mark this whole module as integration
pytestmark = pytest.mark.integration


# ============================================================================
# HELPER FUNCTIONS
# ============================================================================

def run(capsys, *argv):
    """Ruft main() ohne Cache auf und liefert (exit_code, stdout, stderr)"""
    code = main(['--no-cache', '--log-level', 'ERROR', *argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def c3(tmp_path, capsys):
    """chain3 über 'gen' erzeugt"""
    path = tmp_path / 'c3.json'
    code, _, _ = run(capsys, 'gen', 'chain', '3', '-o', str(path))
    assert code == 0
    return str(path)


# ============================================================================
# ABLÄUFE
# ============================================================================

class TestWorkflows:
    """gen, check, derive, verify"""

    def test_gen_writes_lattice(self, c3):
        document = json.loads(Path(c3).read_text(encoding='utf-8'))
        assert document['name'] == 'chain3'
        assert document['elements'] == ['0', 'm', '1']

    def test_check_n5_text(self, capsys, tmp_path):
        path = tmp_path / 'n5.json'
        assert run(capsys, 'gen', 'n5', '-o', str(path))[0] == 0
        code, out, _ = run(capsys, 'check', str(path))
        assert code == 0
        assert "modular: no (witness a=x, b=z, c=y)" in out.splitlines()

    def test_derive_with_closure(self, capsys, c3):
        code, out, _ = run(capsys, 'derive', c3, '--op', 'soc', '--closure')
        assert code == 0
        assert "soc = 0↦m, m↦1, 1↦1" in out
        assert "soc_length: yes after 2 steps, trace 0 → m → 1" in out

    def test_verify_all_on_chain3(self, capsys, c3, tmp_path):
        report_path = tmp_path / 'report.json'
        code, out, _ = run(capsys, '--format', 'json', 'verify', c3, '--suite', 'all', '-o', str(report_path))
        assert code == 0
        report = json.loads(out)
        assert report['suite'] == 'all'
        assert report['summary']['fail'] == 0
        assert json.loads(report_path.read_text(encoding='utf-8')) == report

    def test_json_output_is_deterministic(self, capsys, c3):
        first = run(capsys, '--format', 'json', 'verify', c3)
        second = run(capsys, '--format', 'json', 'verify', c3)
        assert first[1] == second[1]

    def test_nuclei_text(self, capsys, c3):
        code, out, _ = run(capsys, 'nuclei', c3)
        assert code == 0
        assert out.splitlines()[0] == "N(A): 4 nuclei, frame: yes"


# ============================================================================
# EXIT-CODES
# ============================================================================

class TestExitCodes:
    """Fehlerpfade der Kommandozeile"""

    def test_missing_command(self, capsys):
        assert run(capsys)[0] == 2

    def test_bad_choice(self, capsys, c3):
        code, _, err = run(capsys, 'derive', c3, '--op', 'boy')
        assert code == 2
        assert err.startswith('idiomlab:')

    def test_missing_file(self, capsys, tmp_path):
        code, out, err = run(capsys, 'check', str(tmp_path / 'missing.json'))
        assert code == 2
        assert out == ''
        assert err.startswith('idiomlab:')
        assert '[DocumentError, exit 2]' in err

    def test_bound_exceeded(self, capsys):
        code, _, err = run(capsys, 'gen', 'chain', '100')
        assert code == 3
        assert err.startswith('idiomlab: max_lattice_size überschritten:')
        assert '[TooLarge, exit 3]' in err

    def test_bound_exceeded_json(self, capsys):
        code, _, err = run(capsys, '--format', 'json', 'gen', 'chain', '100')
        assert code == 3
        error = json.loads(err)
        assert error['kind'] == 'TooLarge'
        assert error['error'].startswith('max_lattice_size überschritten')
        assert error['details']['details']['bound'] == 'max_lattice_size'

    def test_bound_from_environment(self, capsys, c3, monkeypatch):
        monkeypatch.setenv('IDIOMLAB_MAX_ENUMERATION', '3')
        monkeypatch.setenv('IDIOMLAB_SECOND_LEVEL_BOUND', '3')
        assert run(capsys, 'inflators', c3)[0] == 3

    def test_invalid_environment(self, capsys, c3, monkeypatch):
        monkeypatch.setenv('IDIOMLAB_SEED', 'abc')
        assert run(capsys, 'check', c3)[0] == 2

    @pytest.mark.slow
    def test_second_level_counterexample(self, capsys, tmp_path):
        path = tmp_path / 'b2.json'
        assert run(capsys, 'gen', 'boolean', '2', '-o', str(path))[0] == 0
        code, out, _ = run(capsys, 'verify', str(path), '--suite', 'second-level')
        assert code == 1
        assert any(line.startswith('[FAIL]    stable-negation-below-totalizer') for line in out.splitlines())
