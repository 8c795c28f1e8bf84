from __future__ import annotations

import functools
import math
from typing import Callable
from typing import Dict
from typing import NamedTuple
from typing import Tuple

from sympy.utilities.iterables import partitions

from ncbinom.freepoly import FreePoly
from ncbinom.freepoly import power
from ncbinom.pbw import pbw_rewrite
from ncbinom.pbw import PBWMonomial
from ncbinom.pbw import PBWPoly
from ncbinom.rings import Coefficient
from ncbinom.rings import Rational
from ncbinom.shuffle import coeff_closed_form
from ncbinom.shuffle import multidegrees
from ncbinom.shuffle import pbw_monomials
from ncbinom.shuffle import sh_pbw
from ncbinom.words import MultiDegree

RIGHTMOST_NOT_E1 = 'rightmost_not_E1'
LEFTMOST_NOT_E2 = 'leftmost_not_E2'
SIDES = (RIGHTMOST_NOT_E1, LEFTMOST_NOT_E2)


class RoleAssignment(NamedTuple):
    """Which letter plays x and which plays y in B(x, y)."""

    x: int
    y: int


BELL_ROLES = RoleAssignment(x=1, y=2)
# the dual polynomials enter the shuffle identity as B*(E_2, E_1)
DUAL_ROLES = RoleAssignment(x=2, y=1)


class BellPolynomial(NamedTuple):
    n: int
    k: int | None
    words: FreePoly
    pbw: PBWPoly


BellTable = Dict[Tuple[int, int], BellPolynomial]


@functools.lru_cache(maxsize=None)
def bell_partial_words(
        n: int,
        k: int,
        roles: RoleAssignment = BELL_ROLES,
) -> FreePoly:
    """B_{n,k} = y B_{n-1,k-1} + ad_L x (B_{n-1,k})."""
    m = max(roles)
    if n == 0:
        return FreePoly.one(m) if k == 0 else FreePoly.zero(m)
    elif k == 0 or k > n:
        return FreePoly.zero(m)
    x = FreePoly.letter(roles.x, m)
    y = FreePoly.letter(roles.y, m)
    below = bell_partial_words(n - 1, k, roles)
    return y * bell_partial_words(n - 1, k - 1, roles) + x * below - below * x


def bell_total_words(n: int, roles: RoleAssignment = BELL_ROLES) -> FreePoly:
    ret = FreePoly.zero(max(roles))
    for k in range(n + 1):
        ret = ret + bell_partial_words(n, k, roles)
    return ret


def bell_partial(n: int, k: int) -> BellPolynomial:
    words = bell_partial_words(n, k)
    return BellPolynomial(n, k, words, pbw_rewrite(words))


def bell_total(n: int) -> BellPolynomial:
    words = bell_total_words(n)
    return BellPolynomial(n, None, words, pbw_rewrite(words))


def bell_table(n_max: int) -> BellTable:
    return {
        (n, k): bell_partial(n, k)
        for n in range(n_max + 1)
        for k in range(n + 1)
    }


@functools.lru_cache(maxsize=None)
def bell_dual_words(
        n: int,
        k: int,
        roles: RoleAssignment = DUAL_ROLES,
) -> FreePoly:
    """B*_{n,k} = ad_R x (B*_{n-1,k}) + B*_{n-1,k-1} y, k counting y."""
    m = max(roles)
    if n == 0:
        return FreePoly.one(m) if k == 0 else FreePoly.zero(m)
    elif k == 0 or k > n:
        return FreePoly.zero(m)
    x = FreePoly.letter(roles.x, m)
    y = FreePoly.letter(roles.y, m)
    below = bell_dual_words(n - 1, k, roles)
    return below * x - x * below + bell_dual_words(n - 1, k - 1, roles) * y


def bell_dual(n: int, k: int) -> PBWPoly:
    return pbw_rewrite(bell_dual_words(n, k))


def binomial_via_bell(n: int) -> FreePoly:
    """sum_k binom(n, k) B_k x^(n-k) with x the letter 1, y the letter 2."""
    x = FreePoly.letter(1, 2)
    ret = FreePoly.zero(2)
    for k in range(n + 1):
        ret = ret + (bell_total_words(k) * power(x, n - k)).scale(
            math.comb(n, k),
        )
    return ret


def binomial_via_bell_dual(n: int) -> FreePoly:
    """sum_k binom(n, k) x^(n-k) B*_k with x the letter 1, y the letter 2."""
    x = FreePoly.letter(1, 2)
    ret = FreePoly.zero(2)
    for k in range(n + 1):
        ret = ret + (power(x, n - k) * _dual_total(k)).scale(
            math.comb(n, k),
        )
    return ret


def _dual_total(n: int) -> FreePoly:
    ret = FreePoly.zero(2)
    for k in range(n + 1):
        ret = ret + bell_dual_words(n, k, BELL_ROLES)
    return ret


def binomial_via_bell_holds(n: int) -> bool:
    expected = power(FreePoly.letter(1, 2) + FreePoly.letter(2, 2), n)
    return (
        binomial_via_bell(n) == expected and
        binomial_via_bell_dual(n) == expected
    )


def bell_multi_words(m: int, n: int) -> FreePoly:
    """(ad x + y_2 + ... + y_m)^n (1) with x the letter 1."""
    x = FreePoly.letter(1, m)
    ys = FreePoly.zero(m)
    for a in range(2, m + 1):
        ys = ys + FreePoly.letter(a, m)
    ret = FreePoly.one(m)
    for _ in range(n):
        ret = x * ret - ret * x + ys * ret
    return ret


def binomial_via_bell_multi(m: int, n: int) -> FreePoly:
    x = FreePoly.letter(1, m)
    ret = FreePoly.zero(m)
    for k in range(n + 1):
        ret = ret + (bell_multi_words(m, k) * power(x, n - k)).scale(
            math.comb(n, k),
        )
    return ret


def binomial_via_bell_multi_holds(m: int, n: int) -> bool:
    letters = FreePoly.zero(m)
    for a in range(1, m + 1):
        letters = letters + FreePoly.letter(a, m)
    return binomial_via_bell_multi(m, n) == power(letters, n)


def _keeps(side: str) -> Callable[[PBWMonomial], bool]:
    if side == RIGHTMOST_NOT_E1:
        return lambda mono: mono.last != (1,)
    elif side == LEFTMOST_NOT_E2:
        return lambda mono: mono.first != (2,)
    else:
        raise ValueError(f'unknown side {side!r}, expected one of {SIDES}')


def sh_filter(d: MultiDegree, side: str) -> PBWPoly:
    return sh_pbw(d).filter(_keeps(side))


def bell_ls_form(n: int, k: int) -> PBWPoly:
    """B_{n,k}(E_1, E_2) assembled from closed-form coefficients over the
    monomials E_2^t2 E_a1^t1 ... with no trailing E_1."""
    if k > n:
        return PBWPoly.zero(2)
    terms: dict[PBWMonomial, Coefficient] = {}
    for mono in pbw_monomials(MultiDegree.from_binary(k, n - k)):
        if mono.last != (1,):
            terms[mono] = coeff_closed_form(mono)
    if n == 0:
        terms = {PBWMonomial(): Rational(1)} if k == 0 else {}
    return PBWPoly(terms, 2)


def bell_total_ls_form(n: int) -> PBWPoly:
    ret = PBWPoly.zero(2)
    for k in range(n + 1):
        ret = ret + bell_ls_form(n, k)
    return ret


def bell_ls_form_multi(m: int, n: int, k: int) -> PBWPoly:
    """B_{n,k}(E_1, E_2 + ... + E_m), k counting the letters above 1."""
    if k > n:
        return PBWPoly.zero(m)
    terms: dict[PBWMonomial, Coefficient] = {}
    for upper in multidegrees(m - 1, k):
        for mono in pbw_monomials(MultiDegree((n - k,) + upper.counts)):
            if mono.last != (1,):
                terms[mono] = coeff_closed_form(mono)
    if n == 0:
        terms = {PBWMonomial(): Rational(1)} if k == 0 else {}
    return PBWPoly(terms, m)


def bell_multi_partial(m: int, n: int, k: int) -> PBWPoly:
    words = bell_multi_words(m, n)
    return pbw_rewrite(
        FreePoly(
            {w: c for w, c in words.terms.items() if len(w) - w.count(1) == k},
            m,
        ),
    )


def classical_bell_project(n: int) -> PBWPoly:
    """Kill every E_alpha with two or more 2s in B_n(E_1, E_2)."""
    return bell_total(n).pbw.filter(
        lambda mono: all(alpha.count(2) <= 1 for alpha, _ in mono.factors),
    )


def classical_bell_formula(n: int) -> PBWPoly:
    """sum over partitions of n of
    n!/prod(r_i! (i!)^r_i) prod E_{1^(i-1)2}^r_i"""
    if n == 0:
        return PBWPoly.monomial(PBWMonomial(), 2)
    terms: dict[PBWMonomial, Coefficient] = {}
    for part in partitions(n):
        den = 1
        factors = []
        for size, mult in sorted(part.items()):
            den *= math.factorial(mult) * math.factorial(size) ** mult
            factors.append(((1,) * (size - 1) + (2,), mult))
        terms[PBWMonomial.create(factors)] = Rational(math.factorial(n), den)
    return PBWPoly(terms, 2)
