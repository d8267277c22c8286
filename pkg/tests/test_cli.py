"""Tests for the command line interface"""

import json

import pytest

from src.harness.cli import EXIT_ERROR, EXIT_FAILURES, EXIT_OK, build_parser, cli_main


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstant:

    def test_weyl_text(self, capsys):
        code, out, _ = run(capsys, 'constant', '--name', 'weyl', '--n', '1')
        assert code == EXIT_OK
        assert out.startswith('weyl(H1): estimate=7.812500000e-03 err=')
        assert 'method=' in out

    def test_cn_methods_agree(self, capsys):
        outputs = []
        for method in ('hurwitz_reduction', 'closed_form_table'):
            code, out, _ = run(capsys, 'constant', '--name', 'cn', '--n', '4', '--method', method, '--format', 'json')
            assert code == EXIT_OK
            outputs.append(json.loads(out)['result']['estimate'])
        assert outputs[0] == pytest.approx(outputs[1], rel=1e-10)

    def test_iso_json_carries_hypothesis(self, capsys):
        code, out, _ = run(capsys, 'constant', '--name', 'iso', '--n', '1', '--hypothesis', 'pansu', '--format', 'json')
        assert code == EXIT_OK
        result = json.loads(out)['result']
        assert result['hypothesis'] == 'pansu_conjecture'
        assert result['value']['estimate'] == pytest.approx(4.39854, rel=1e-4)

    def test_gn_line(self, capsys):
        code, out, _ = run(capsys, 'constant', '--name', 'gn', '--n', '0', '--k', '1', '--q', '4')
        assert code == EXIT_OK
        assert out.startswith('gn(R1):')

    def test_domain_error_goes_to_stderr(self, capsys):
        code, out, err = run(capsys, 'constant', '--name', 'gn', '--n', '1', '--q', '4')
        assert code == EXIT_ERROR
        assert out == ''
        assert json.loads(err)['error'] == 'DOMAIN_ERROR'

    def test_unsupported_closed_form(self, capsys):
        code, _, err = run(capsys, 'constant', '--name', 'cn', '--n', '14', '--method', 'closed_form_table')
        assert code == EXIT_ERROR
        assert json.loads(err)['error'] == 'UNSUPPORTED'


class TestBound:

    def test_h1_r2(self, capsys):
        code, out, _ = run(capsys, 'bound', '--n', '1', '--k', '2', '--format', 'json')
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload['winner'] == 'FromIsoUnconditional'
        assert payload['is_open'] is False
        assert payload['bound']['direction'] == 'upper'
        assert payload['bound']['value']['estimate'] == pytest.approx(0.701019, rel=5e-4)

    def test_open_case_text(self, capsys):
        code, out, _ = run(capsys, 'bound', '--n', '1', '--all-routes')
        assert code == EXIT_OK
        assert 'no route beats Courant' in out
        assert 'candidate FromSobolevJL' in out
        assert 'fk FromIsoUnconditional' in out

    def test_euclidean(self, capsys):
        code, out, _ = run(capsys, 'bound', '--n', '0', '--k', '2')
        assert code == EXIT_OK
        assert out.startswith('gamma(R2) EuclideanExact:')

    def test_all_routes_json(self, capsys):
        code, out, _ = run(capsys, 'bound', '--n', '1', '--hypothesis', 'pansu', '--all-routes', '--format', 'json')
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload['winner'] == 'FromIsoPansu'
        assert [c['route'] for c in payload['candidates']][-1] == 'FromIsoPansu'


class TestVerifyAndTable:

    def test_verify_passes(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'hps', '--workers', '1')
        assert code == EXIT_OK
        assert out.splitlines()[-1] == 'campaign hps: 202 passed, 0 failed, tolerance multiplier 1'
        assert out.startswith('PASS hps.')

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'bessel', '--format', 'json', '--workers', '1')
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload['exit_status'] == 0
        assert payload['failed'] == 0

    def test_verify_bad_multiplier(self, capsys):
        code, _, err = run(capsys, 'verify', '--suite', 'hps', '--tol-mult', '1000')
        assert code == EXIT_ERROR
        assert json.loads(err)['error'] == 'RANGE_ERROR'

    def test_table(self, capsys):
        code, out, _ = run(capsys, 'table', '--name', 'cn', '--format', 'csv', '--max-n', '2')
        assert code == EXIT_OK
        assert out.splitlines()[0] == 'n,c_n,c_n_err,provenance'
        assert len(out.splitlines()) == 3


class TestParser:

    @pytest.mark.parametrize('argv', [
        [],
        ['constant', '--name', 'eigenvalue', '--n', '1'],
        ['verify', '--suite', 'nope'],
        ['bound', '--k', '2'],
    ])
    def test_usage_errors(self, capsys, argv):
        code, _, _ = run(capsys, *argv)
        assert code == EXIT_ERROR

    def test_help_exits_cleanly(self, capsys):
        code, out, _ = run(capsys, '--help')
        assert code == EXIT_OK
        assert 'verify' in out

    def test_exit_codes_distinct(self):
        assert len({EXIT_OK, EXIT_FAILURES, EXIT_ERROR}) == 3
        assert build_parser().prog == 'spectral-constants'
