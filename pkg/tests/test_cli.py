import json

import pytest

from asmdpp.cli import CHECKS, Command, Verb, main, run_verify
from asmdpp.utils import DEFAULT_CAPS, AsmDppError, Caps


def test_count(capsys):
    assert main(['count', '--object', 'asm', '--n', '3']) == 0
    assert capsys.readouterr().out == '7\n'
    assert main(['count', '--object', 'nilp', '--n', '4', '--json']) == 0
    assert json.loads(capsys.readouterr().out) == {
        'object': 'nilp', 'n': 4, 'count': 42
    }


def test_usage_errors(capsys):
    assert main(['verify', 'bogus']) == 2
    assert main(['count', '--object', 'asm', '--n', '0']) == 2
    assert 'at least 1' in capsys.readouterr().err
    assert main(['--cap', 'genfun=2', 'verify', 'theorem1', '--n', '3']) == 2
    assert 'cap' in capsys.readouterr().err
    assert main(['--cap', 'nonsense=2', 'count', '--object', 'asm',
                 '--n', '2']) == 2
    assert main(['verify', 'ceq', '--n', '1']) == 2


def test_verify_theorem1(capsys):
    assert main(['verify', 'theorem1', '--n', '3']) == 0
    assert capsys.readouterr().out == 'PASS theorem1 n=3\n'


def test_verify_ik(capsys):
    argv = ['verify', 'ik', '--n', '3', '--points', '20', '--seed', '7']
    assert main(argv) == 0
    assert capsys.readouterr().out == 'PASS ik n=3: 20/20 points\n'


def test_verify_json(capsys):
    assert main(['verify', 'perm', '--max-n', '3', '--json']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['passed'] is True
    assert data['reports'] == [
        {'check': 'perm', 'n': 2, 'verdict': 'pass', 'details': ''},
        {'check': 'perm', 'n': 3, 'verdict': 'pass', 'details': ''}
    ]
    assert main(['verify', 'perm', '--n', '3', '--json', '--timings']) == 0
    report = json.loads(capsys.readouterr().out)['reports'][0]
    assert report['elapsed-ms'] >= 0


def test_verify_orders():
    cmd = Command(verb=Verb.VERIFY, check='star-invariant', max_n=5)
    assert [r.n for r in run_verify(cmd, DEFAULT_CAPS)] == [1, 3, 5]
    cmd = Command(verb=Verb.VERIFY, check='det-subset', max_n=9, points=2)
    assert [r.n for r in run_verify(cmd, DEFAULT_CAPS)] == [1, 2, 3, 4, 5, 6]
    cmd = Command(verb=Verb.VERIFY, check='dj', max_n=9, points=2)
    assert [r.n for r in run_verify(cmd, DEFAULT_CAPS)] == [2, 3, 4, 5, 6]
    cmd = Command(verb=Verb.VERIFY, check='ik')
    assert [r.n for r in run_verify(cmd, Caps(six_vertex=2))] == [1, 2]


def test_verify_all_skips_undefined_checks():
    cmd = Command(verb=Verb.VERIFY, check='all', n=1, points=2)
    reports = run_verify(cmd, DEFAULT_CAPS)
    names = {r.check for r in reports}
    assert names == {name for name, spec in CHECKS.items()
                     if spec.min_n == 1}
    assert all(r.verdict == 'pass' for r in reports)


def test_command_rejects_both_orders():
    with pytest.raises(AsmDppError):
        Command(verb=Verb.VERIFY, check='perm', n=3, max_n=4)


def test_genfun_files(capsys, cache_dir, tmp_path):
    asm_file, dpp_file = tmp_path / 'asm.json', tmp_path / 'dpp.json'
    assert main(['genfun', '--object', 'asm', '--n', '4', '--out',
                 str(asm_file)]) == 0
    assert main(['genfun', '--object', 'dpp', '--n', '4', '--out',
                 str(dpp_file)]) == 0
    asm = json.loads(asm_file.read_text())
    dpp = json.loads(dpp_file.read_text())
    assert asm.pop('kind') == 'ASM'
    assert dpp.pop('kind') == 'DPP'
    assert asm == dpp
    assert (cache_dir / 'asm-4-v1.json').exists()

    first = asm_file.read_bytes()
    assert main(['genfun', '--object', 'asm', '--n', '4', '--out',
                 str(asm_file)]) == 0
    assert asm_file.read_bytes() == first
    assert main(['genfun', '--object', 'asm', '--n', '4', '--no-cache']) == 0
    assert capsys.readouterr().out.encode() == first


def test_table(capsys):
    assert main(['table', '--what', 'ank', '--n', '3', '--csv']) == 0
    assert capsys.readouterr().out == 'n,k,count\n3,0,2\n3,1,3\n3,2,2\n'
    assert main(['table', '--what', 'anij', '--n', '3']) == 0
    assert json.loads(capsys.readouterr().out) == {
        'n': 3, 'a-n': 7, 'a-nij': [[1, 1, 0], [1, 1, 1], [0, 1, 1]]
    }


def test_stats(capsys, tmp_path, example_asm, example_dpp):
    asm_file = tmp_path / 'asm.json'
    asm_file.write_text(json.dumps(example_asm.to_json()))
    assert main(['stats', '--object', 'asm', '--input', str(asm_file)]) == 0
    stats = json.loads(capsys.readouterr().out)
    assert (stats['nu'], stats['mu'], stats['rho1'], stats['rho2']) == \
        (5, 3, 3, 2)

    dpp_file = tmp_path / 'dpps.json'
    dpp_file.write_text(json.dumps([example_dpp.to_json()]))
    assert main(['stats', '--object', 'dpp', '--input', str(dpp_file)]) == 0
    [stats] = json.loads(capsys.readouterr().out)
    assert (stats['nu'], stats['mu'], stats['rho1'], stats['rho2']) == \
        (7, 2, 3, 2)


def test_biject(capsys, tmp_path, example_dpp):
    dpp_file, nilp_file = tmp_path / 'dpp.json', tmp_path / 'nilp.json'
    dpp_file.write_text(json.dumps(example_dpp.to_json()))
    assert main(['biject', '--from', 'dpp', '--to', 'nilp', '--input',
                 str(dpp_file)]) == 0
    nilp_file.write_text(capsys.readouterr().out)
    assert main(['biject', '--from', 'nilp', '--to', 'dpp', '--input',
                 str(nilp_file)]) == 0
    assert json.loads(capsys.readouterr().out) == example_dpp.to_json()
    assert main(['biject', '--from', 'asm', '--to', 'dpp', '--input',
                 str(dpp_file)]) == 2


def test_bad_input_file(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_text('[[1, 0], [0, 1]]')
    assert main(['stats', '--object', 'asm', '--input', str(path)]) == 2
    assert main(['stats', '--object', 'asm', '--input',
                 str(tmp_path / 'missing.json')]) == 2


def test_verbose_logs_to_stderr(capsys):
    assert main(['-v', 'verify', 'perm', '--n', '2']) == 0
    captured = capsys.readouterr()
    assert 'INFO: running perm at n=2' in captured.err
    assert captured.out == 'PASS perm n=2\n'
