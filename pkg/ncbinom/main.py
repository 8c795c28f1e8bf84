from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

import ncbinom.constants as C
from ncbinom.color import add_color_option
from ncbinom.commands.bell import bell
from ncbinom.commands.binom import binom
from ncbinom.commands.factorize import factorize
from ncbinom.commands.lyndon import lyndon
from ncbinom.commands.ore import ore
from ncbinom.commands.pbw import pbw
from ncbinom.commands.qbell import qbell
from ncbinom.commands.quotient import quotient
from ncbinom.commands.quotient import QUOTIENTS
from ncbinom.commands.sh import sh
from ncbinom.commands.verify import verify
from ncbinom.error_handler import error_handler
from ncbinom.errors import FatalError
from ncbinom.logging_handler import logging_handler
from ncbinom.rings import check_prime
from ncbinom.rings import parse_ring
from ncbinom.rings import Ring
from ncbinom.suites import SIGMA_CHOICES
from ncbinom.suites import SuiteOptions
from ncbinom.words import MultiDegree
from ncbinom.words import parse_word
from ncbinom.words import Word
from ncbinom.xargs import target_concurrency


logger = logging.getLogger('ncbinom')


def _ring(s: str) -> Ring:
    try:
        return parse_ring(s)
    except FatalError as e:
        raise argparse.ArgumentTypeError(str(e))


def _degree(s: str) -> MultiDegree:
    parts = s.split(',')
    if len(parts) < 2:
        raise argparse.ArgumentTypeError(
            f'expected at least two counts like 2,3 but got {s!r}',
        )
    return MultiDegree.from_descending([int(part) for part in parts])


def _word(s: str) -> Word:
    try:
        w = parse_word(s)
    except FatalError as e:
        raise argparse.ArgumentTypeError(str(e))
    if not w:
        raise argparse.ArgumentTypeError('expected a nonempty word')
    return w


def _words(s: str) -> tuple[Word, ...]:
    return tuple(_word(part) for part in s.split(','))


def _positive(s: str) -> int:
    ret = int(s)
    if ret < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer: {s}')
    return ret


def _prime(s: str) -> int:
    try:
        return check_prime(_positive(s))
    except FatalError as e:
        raise argparse.ArgumentTypeError(str(e))


def _nonneg(s: str) -> int:
    ret = int(s)
    if ret < 0:
        raise argparse.ArgumentTypeError(
            f'expected a nonnegative integer: {s}',
        )
    return ret


def _add_common_options(
        parser: argparse.ArgumentParser,
        max_degree: int = C.DEFAULT_MAX_DEGREE,
) -> None:
    add_color_option(parser)
    parser.add_argument(
        '--format', dest='fmt', choices=C.FORMATS, default='text',
        help='Output format.  Defaults to `%(default)s`.',
    )
    parser.add_argument(
        '--ring', type=_ring, default='Q',
        metavar='{' + ','.join(C.RINGS) + '}',
        help='Coefficient ring.  Defaults to `%(default)s`.',
    )
    parser.add_argument(
        '--max-degree', type=_nonneg, default=max_degree,
        help='Refuse to expand past this degree.  Defaults to %(default)s.',
    )


def _add_alphabet_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--alphabet', type=_positive, default=2,
        help='Number of letters.  Defaults to %(default)s.',
    )


def main(argv: Sequence[str] | None = None) -> int:
    argv = argv if argv is not None else sys.argv[1:]
    parser = argparse.ArgumentParser(prog='ncbinom')

    parser.add_argument(
        '-V', '--version',
        action='version',
        version=f'%(prog)s {C.VERSION}',
    )

    subparsers = parser.add_subparsers(dest='command')

    lyndon_parser = subparsers.add_parser(
        'lyndon', help='List Lyndon words in lexicographic order.',
    )
    _add_common_options(lyndon_parser)
    _add_alphabet_option(lyndon_parser)
    lyndon_parser.add_argument('--max-len', type=_nonneg, required=True)

    factorize_parser = subparsers.add_parser(
        'factorize',
        help='Factor a word into non-increasing Lyndon words.',
    )
    _add_common_options(factorize_parser)
    factorize_parser.add_argument('word', type=_word)
    factorize_parser.add_argument(
        '--standard', action='store_true',
        help='Print the standard factorization of a Lyndon word instead.',
    )

    sh_parser = subparsers.add_parser(
        'sh', help='Print a shuffle type polynomial SH_{i,j,...}.',
    )
    _add_common_options(sh_parser)
    sh_parser.add_argument(
        '--degree', type=_degree, required=True,
        help='Letter counts from the largest letter down, e.g. `2,3`.',
    )
    basis = sh_parser.add_mutually_exclusive_group()
    basis.add_argument('--pbw', dest='pbw', action='store_true', default=True)
    basis.add_argument('--word', dest='pbw', action='store_false')
    sh_parser.add_argument(
        '--char', type=_prime, help='Reduce the coefficients mod a prime.',
    )

    binom_parser = subparsers.add_parser(
        'binom', help='Print (E_1 + ... + E_m)^d in PBW coordinates.',
    )
    _add_common_options(binom_parser)
    binom_parser.add_argument('--letters', type=_positive, required=True)
    binom_parser.add_argument('--power', type=_nonneg, required=True)

    pbw_parser = subparsers.add_parser(
        'pbw', help='Rewrite a word-basis polynomial in PBW coordinates.',
    )
    _add_common_options(pbw_parser)
    _add_alphabet_option(pbw_parser)
    pbw_parser.add_argument(
        '--expr', required=True, help='e.g. "2*E(21) - E(12)"',
    )

    bell_parser = subparsers.add_parser(
        'bell', help='Print a noncommutative Bell polynomial.',
    )
    _add_common_options(bell_parser)
    bell_parser.add_argument('--n', type=_nonneg, required=True)
    bell_parser.add_argument('--k', type=_nonneg)
    bell_parser.add_argument(
        '--dual', action='store_true',
        help='Use the right-adjoint polynomials B*.',
    )
    bell_parser.add_argument(
        '--project-classical', action='store_true',
        help='Kill every E_alpha with two or more 2s.',
    )

    qbell_parser = subparsers.add_parser(
        'qbell', help='Print a q-Bell polynomial in the word basis.',
    )
    _add_common_options(qbell_parser)
    qbell_parser.add_argument('--n', type=_nonneg, required=True)
    qbell_parser.add_argument('--k', type=_nonneg)

    quotient_parser = subparsers.add_parser(
        'quotient', help='Binomial formulas in quotient algebras.',
    )
    _add_common_options(quotient_parser)
    _add_alphabet_option(quotient_parser)
    quotient_parser.add_argument('kind', choices=QUOTIENTS)
    quotient_parser.add_argument('--n', '--d', dest='n', type=_nonneg)
    quotient_parser.add_argument('--k', type=_nonneg)
    quotient_parser.add_argument(
        '--set', dest='kill_set', type=_words, default=(),
        help='Comma separated Lyndon words to kill, e.g. `112,122`.',
    )
    quotient_parser.add_argument(
        '--min-length', type=_positive,
        help='Also kill every Lyndon word at least this long.',
    )
    quotient_parser.add_argument('--expr', help='Word-basis polynomial.')

    ore_parser = subparsers.add_parser(
        'ore', help='Expand (x+y)^n in an Ore extension.',
    )
    _add_common_options(ore_parser)
    ore_parser.add_argument('--n', type=_nonneg, required=True)
    ore_parser.add_argument('--sigma-spec', required=True)
    ore_parser.add_argument('--delta-spec', required=True)

    verify_parser = subparsers.add_parser(
        'verify', help='Check identities against brute-force expansion.',
    )
    _add_common_options(verify_parser, max_degree=C.VERIFY_MAX_DEGREE)
    verify_parser.add_argument('suite', choices=('all',) + C.SUITES)
    verify_parser.add_argument(
        '-j', '--jobs', type=_positive, default=target_concurrency(),
        help='Suites to run at once.  Defaults to %(default)s.',
    )
    verify_parser.add_argument('--n', type=_nonneg)
    verify_parser.add_argument('--sigma', choices=SIGMA_CHOICES)
    verify_parser.add_argument('--max', type=_nonneg)

    help = subparsers.add_parser(
        'help', help='Show help for a specific command.',
    )
    help.add_argument('help_cmd', nargs='?', help='Command to show help for.')

    # argparse doesn't really provide a way to use a `default` subparser
    if len(argv) == 0:
        argv = ['help']
    args = parser.parse_args(argv)

    if args.command == 'help' and args.help_cmd:
        parser.parse_args([args.help_cmd, '--help'])
    elif args.command == 'help':
        parser.parse_args(['--help'])

    with error_handler(), logging_handler(args.color):
        if args.command == 'lyndon':
            return lyndon(
                args.alphabet, args.max_len,
                fmt=args.fmt, max_degree=args.max_degree,
            )
        elif args.command == 'factorize':
            return factorize(args.word, standard=args.standard, fmt=args.fmt)
        elif args.command == 'sh':
            return sh(
                args.degree,
                pbw=args.pbw,
                char=args.char,
                ring=args.ring,
                fmt=args.fmt,
                max_degree=args.max_degree,
            )
        elif args.command == 'binom':
            return binom(
                args.letters, args.power,
                ring=args.ring, fmt=args.fmt, max_degree=args.max_degree,
            )
        elif args.command == 'pbw':
            return pbw(
                args.expr,
                alphabet=args.alphabet,
                ring=args.ring,
                fmt=args.fmt,
                max_degree=args.max_degree,
            )
        elif args.command == 'bell':
            return bell(
                args.n, args.k,
                dual=args.dual,
                project_classical=args.project_classical,
                ring=args.ring,
                fmt=args.fmt,
                max_degree=args.max_degree,
            )
        elif args.command == 'qbell':
            return qbell(
                args.n, args.k,
                ring=args.ring, fmt=args.fmt, max_degree=args.max_degree,
            )
        elif args.command == 'quotient':
            return quotient(
                args.kind,
                n=args.n,
                k=args.k,
                kill_set=args.kill_set,
                min_length=args.min_length,
                expr=args.expr,
                alphabet=args.alphabet,
                ring=args.ring,
                fmt=args.fmt,
                max_degree=args.max_degree,
            )
        elif args.command == 'ore':
            return ore(
                args.n, args.sigma_spec, args.delta_spec,
                ring=args.ring, fmt=args.fmt, max_degree=args.max_degree,
            )
        elif args.command == 'verify':
            opts = SuiteOptions(
                max_degree=args.max_degree,
                n=args.n,
                sigma=args.sigma,
                max=args.max,
            )
            return verify(
                args.suite, opts, jobs=args.jobs, use_color=args.color,
            )
        else:
            raise NotImplementedError(
                f'Command {args.command} not implemented.',
            )

        raise AssertionError(
            f'Command {args.command} failed to exit with a returncode',
        )


if __name__ == '__main__':
    raise SystemExit(main())
