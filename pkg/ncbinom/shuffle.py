from __future__ import annotations

import functools
import itertools
import math
from typing import Generator

from ncbinom.errors import AlphabetMismatch
from ncbinom.errors import TheoremViolation
from ncbinom.freepoly import FreePoly
from ncbinom.freepoly import power
from ncbinom.freepoly import sh_word_basis
from ncbinom.freepoly import sh_word_multi
from ncbinom.pbw import monomials_of_multidegree
from ncbinom.pbw import pbw_rewrite
from ncbinom.pbw import PBWMonomial
from ncbinom.pbw import PBWPoly
from ncbinom.pbw import reduce_mod
from ncbinom.rings import Coefficient
from ncbinom.rings import PrimeFieldElem
from ncbinom.rings import Rational
from ncbinom.words import format_word
from ncbinom.words import MultiDegree
from ncbinom.words import Word


def pbw_monomials(d: MultiDegree) -> list[PBWMonomial]:
    return monomials_of_multidegree(d)


def multidegrees(m: int, total: int) -> Generator[MultiDegree, None, None]:
    """Every multidegree over m letters with the given total."""
    for bars in itertools.combinations(range(total + m - 1), m - 1):
        edges = (-1,) + bars + (total + m - 1,)
        yield MultiDegree(tuple(b - a - 1 for a, b in zip(edges, edges[1:])))


@functools.lru_cache(maxsize=None)
def sh_pbw(d: MultiDegree) -> PBWPoly:
    if d.alphabet_size < 2:
        raise AlphabetMismatch('shuffle type polynomials need two letters')
    elif d.alphabet_size == 2:
        return pbw_rewrite(sh_word_basis(d.count(2), d.count(1)))
    else:
        return pbw_rewrite(sh_word_multi(d))


@functools.lru_cache(maxsize=None)
def c_e_alpha(alpha: Word) -> int:
    """The coefficient C_{E_alpha} of a single basis element."""
    if len(alpha) == 1:
        return 1
    factors = PBWMonomial.from_word(alpha[1:]).factors
    num = math.factorial(len(alpha) - 1)
    den = 1
    inner = 1
    for gamma, a in factors:
        den *= math.factorial(len(gamma)) ** a * math.factorial(a)
        inner *= c_e_alpha(gamma) ** a
    quotient, remainder = divmod(num, den)
    if remainder:
        raise TheoremViolation(
            f'C_E{format_word(alpha)}: {num}/{den} is not an integer',
        )
    return quotient * inner


def coeff_closed_form(m: PBWMonomial) -> Rational:
    den = 1
    inner = 1
    for alpha, t in m.factors:
        den *= math.factorial(len(alpha)) ** t * math.factorial(t)
        inner *= c_e_alpha(alpha) ** t
    return Rational(math.factorial(m.degree), den) * inner


def closed_form_sh(d: MultiDegree) -> PBWPoly:
    return PBWPoly(
        {m: coeff_closed_form(m) for m in pbw_monomials(d)},
        d.alphabet_size,
    )


def theorem_a_holds(d: MultiDegree) -> bool:
    return closed_form_sh(d) == sh_pbw(d)


def binomial_ls(m: int, d: int) -> PBWPoly:
    """(E_1 + ... + E_m)^d from closed-form coefficients alone."""
    if m < 2:
        raise AlphabetMismatch('the normalized forms need two letters')
    terms: dict[PBWMonomial, Coefficient] = {}
    for degree in multidegrees(m, d):
        for mono in pbw_monomials(degree):
            terms[mono] = coeff_closed_form(mono)
    return PBWPoly(terms, m)


def binomial_ls_holds(m: int, d: int) -> bool:
    letters = FreePoly.zero(m)
    for a in range(1, m + 1):
        letters = letters + FreePoly.letter(a, m)
    return binomial_ls(m, d) == pbw_rewrite(power(letters, d))


def sh_pbw_char_p(k: int, p: int) -> PBWPoly:
    if not 1 <= k <= p - 1:
        raise ValueError(f'need 1 <= k <= {p - 1}, got {k}')
    ret = reduce_mod(sh_pbw(MultiDegree.from_binary(k, p - k)), p)
    for mono in ret.terms:
        if len(mono.factors) != 1 or mono.degree != p:
            raise TheoremViolation(
                f'{mono} survives in SH_{{{k},{p - k}}} over GF({p})',
            )
    return ret


def char_p_kill_check(p: int) -> bool:
    """With every E_alpha having two or more 1s killed, SH_{p-1,1} is
    E_{12...2} and SH_{k,p-k} vanishes for the other k."""
    for k in range(1, p):
        survivors = sh_pbw_char_p(k, p).filter(
            lambda mono: mono.word.count(1) < 2,
        )
        if k == p - 1:
            expected = PBWPoly.monomial(
                PBWMonomial((((1,) + (2,) * (p - 1), 1),)), 2,
                PrimeFieldElem(1, p),
            )
        else:
            expected = PBWPoly.zero(2)
        if survivors != expected:
            return False
    return True


def appendix_table(n: int) -> list[tuple[MultiDegree, PBWPoly]]:
    return [
        (MultiDegree.from_binary(k, n - k),
         sh_pbw(MultiDegree.from_binary(k, n - k)))
        for k in range(n + 1)
    ]
