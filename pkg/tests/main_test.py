from __future__ import annotations

import argparse
import os.path
from unittest import mock

import pytest

from ncbinom import main
from ncbinom.rings import parse_ring
from ncbinom.suites import SuiteOptions
from ncbinom.words import MultiDegree

FNS = (
    'bell', 'binom', 'factorize', 'lyndon', 'ore', 'pbw', 'qbell',
    'quotient', 'sh', 'verify',
)
ARGV = {
    'bell': ('bell', '--n', '3'),
    'binom': ('binom', '--letters', '2', '--power', '3'),
    'factorize': ('factorize', '1212'),
    'lyndon': ('lyndon', '--max-len', '3'),
    'ore': ('ore', '--n', '2', '--sigma-spec', 's', '--delta-spec', 'd'),
    'pbw': ('pbw', '--expr', 'E(21)'),
    'qbell': ('qbell', '--n', '2'),
    'quotient': ('quotient', 'weyl', '--n', '2'),
    'sh': ('sh', '--degree', '2,3'),
    'verify': ('verify', 'lyndon'),
}


@pytest.fixture
def mock_commands():
    mcks = {fn: mock.patch.object(main, fn).start() for fn in FNS}
    for mck in mcks.values():
        mck.return_value = 0
    yield mcks
    mock.patch.stopall()


@pytest.fixture
def argparse_parse_args_spy():
    parse_args_mock = mock.Mock()

    original_parse_args = argparse.ArgumentParser.parse_args

    def fake_parse_args(self, args):
        # call our spy object
        parse_args_mock(args)
        return original_parse_args(self, args)

    with mock.patch.object(
        argparse.ArgumentParser, 'parse_args', fake_parse_args,
    ):
        yield parse_args_mock


def test_overall_help(mock_commands):
    with pytest.raises(SystemExit):
        main.main(['--help'])


def test_no_arguments_shows_help(mock_commands, argparse_parse_args_spy):
    with pytest.raises(SystemExit):
        main.main([])

    argparse_parse_args_spy.assert_has_calls([
        mock.call(['help']),
        mock.call(['--help']),
    ])


def test_help_other_command(mock_commands, argparse_parse_args_spy):
    with pytest.raises(SystemExit):
        main.main(['help', 'sh'])

    argparse_parse_args_spy.assert_has_calls([
        mock.call(['help', 'sh']),
        mock.call(['sh', '--help']),
    ])


@pytest.mark.parametrize('command', FNS)
def test_all_cmds(command, mock_commands):
    assert main.main(ARGV[command]) == 0
    assert mock_commands[command].call_count == 1
    total = sum(mck.call_count for mck in mock_commands.values())
    assert total == 1


def test_sh_arguments(mock_commands):
    main.main(('sh', '--degree', '2,3', '--word', '--char', '5'))
    (degree,), kwargs = mock_commands['sh'].call_args
    assert degree == MultiDegree.from_binary(2, 3)
    assert kwargs['pbw'] is False
    assert kwargs['char'] == 5
    assert kwargs['max_degree'] == 10


def test_ring_option(mock_commands):
    main.main(('binom', '--letters', '2', '--power', '3', '--ring', 'GF:7'))
    assert mock_commands['binom'].call_args[1]['ring'] == parse_ring('GF:7')


def test_quotient_kill_set_option(mock_commands):
    main.main(('quotient', 'kill', '--set', '112,122', '--expr', 'E(12)'))
    kwargs = mock_commands['quotient'].call_args[1]
    assert kwargs['kill_set'] == ((1, 1, 2), (1, 2, 2))
    assert kwargs['n'] is None


def test_verify_options(mock_commands):
    main.main(('verify', 'theorem-b', '--sigma', 'grading', '-j', '1'))
    (suite, opts), kwargs = mock_commands['verify'].call_args
    assert suite == 'theorem-b'
    assert opts == SuiteOptions(max_degree=6, sigma='grading')
    assert kwargs['jobs'] == 1


@pytest.mark.parametrize(
    'argv',
    (
        ('sh', '--degree', '3'),
        ('sh', '--degree', 'a,b'),
        ('binom', '--letters', '0', '--power', '2'),
        ('lyndon', '--max-len', '-1'),
        ('binom', '--letters', '2', '--power', '2', '--ring', 'GF:4'),
        ('sh', '--degree', '2,2', '--char', '4'),
        ('sh', '--degree', '2,2', '--char', '1'),
        ('factorize', '102'),
    ),
)
def test_bad_arguments(argv, mock_commands):
    with pytest.raises(SystemExit) as excinfo:
        main.main(argv)
    assert excinfo.value.code == 2


def test_end_to_end(cap_out):
    assert main.main(('binom', '--letters', '2', '--power', '2')) == 0
    assert cap_out.get() == 'E(2)^2 + 2*E(2)*E(1) + E(12) + E(1)^2\n'


def test_expected_fatal_error(cap_out, mock_log_dir):
    with pytest.raises(SystemExit) as excinfo:
        main.main(('bell', '--n', '3', '--k', '4'))
    assert excinfo.value.code == 1
    log_file = os.path.join(mock_log_dir, 'ncbinom.log')
    cap_out_lines = cap_out.get().splitlines()
    assert cap_out_lines[-2] == (
        'An error has occurred: FatalError: need 0 <= k <= 3, got 4'
    )
    assert cap_out_lines[-1] == f'Check the log at {log_file}'


def test_degree_cap_error(cap_out, mock_log_dir):
    with pytest.raises(SystemExit):
        main.main(('binom', '--letters', '2', '--power', '11'))
    assert cap_out.get().splitlines()[-2] == (
        'An error has occurred: DegreeCapExceeded: degree 11 is above the '
        'cap of 10, raise it with --max-degree'
    )
