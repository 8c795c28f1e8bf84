from __future__ import annotations

import functools
import math
from typing import Dict
from typing import FrozenSet
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

from sympy.utilities.iterables import partitions

from ncbinom.bell import classical_bell_formula
from ncbinom.errors import DivisionNotExact
from ncbinom.errors import TheoremViolation
from ncbinom.freepoly import FreePoly
from ncbinom.freepoly import power
from ncbinom.pbw import pbw_rewrite
from ncbinom.pbw import PBWMonomial
from ncbinom.pbw import PBWPoly
from ncbinom.rings import Coefficient
from ncbinom.rings import ONE
from ncbinom.rings import q_binomial
from ncbinom.rings import q_factorial
from ncbinom.rings import q_integer
from ncbinom.rings import QPoly
from ncbinom.rings import qpoly_exact_div
from ncbinom.rings import Rational
from ncbinom.shuffle import coeff_closed_form
from ncbinom.shuffle import multidegrees
from ncbinom.shuffle import pbw_monomials
from ncbinom.words import format_word
from ncbinom.words import Word


class KillSet(NamedTuple):
    """Lyndon generators declared zero: the listed words plus, when
    `min_length` is set, every Lyndon word at least that long."""

    words: FrozenSet[Word] = frozenset()
    min_length: int | None = None

    def kills(self, alpha: Word) -> bool:
        return alpha in self.words or (
            self.min_length is not None and len(alpha) >= self.min_length
        )

    def __str__(self) -> str:
        parts = sorted(format_word(w) for w in self.words)
        if self.min_length is not None:
            parts.append(f'len>={self.min_length}')
        return '{' + ','.join(parts) + '}'


COMMUTATIVE = KillSet(min_length=2)
WEYL = KillSet(frozenset({(1, 1, 2), (1, 2, 2)}), min_length=3)
FIVE_GENERATORS = KillSet(
    frozenset({
        (1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2),
        (1, 1, 2, 1, 2), (1, 2, 1, 2, 2),
    }),
    min_length=4,
)
TERNARY = KillSet(min_length=3)


def kill_project(p: PBWPoly, ks: KillSet) -> PBWPoly:
    return p.filter(
        lambda mono: not any(ks.kills(alpha) for alpha, _ in mono.factors),
    )


def kill_set_closed_form(m: int, d: int, ks: KillSet) -> PBWPoly:
    terms: dict[PBWMonomial, Coefficient] = {}
    for degree in multidegrees(m, d):
        for mono in pbw_monomials(degree):
            if not any(ks.kills(alpha) for alpha, _ in mono.factors):
                terms[mono] = coeff_closed_form(mono)
    return PBWPoly(terms, m)


def kill_set_holds(m: int, d: int, ks: KillSet) -> bool:
    letters = FreePoly.zero(m)
    for a in range(1, m + 1):
        letters = letters + FreePoly.letter(a, m)
    projected = kill_project(pbw_rewrite(power(letters, d)), ks)
    return projected == kill_set_closed_form(m, d, ks)


def _weyl_monomial(t2: int, t12: int, t1: int) -> PBWMonomial:
    return PBWMonomial(tuple(
        (alpha, t) for alpha, t in (((2,), t2), ((1, 2), t12), ((1,), t1))
        if t
    ))


def weyl_coefficient(t2: int, t12: int, t1: int) -> Rational:
    d = t2 + 2 * t12 + t1
    return Rational(
        math.factorial(d),
        math.factorial(t2) * 2 ** t12 * math.factorial(t12) *
        math.factorial(t1),
    )


def weyl_binomial(d: int) -> PBWPoly:
    """(E_1 + E_2)^d with every E_alpha of length >= 3 killed, in the normal
    order E_2^t2 E_12^t12 E_1^t1."""
    terms: dict[PBWMonomial, Coefficient] = {}
    for t12 in range(d // 2 + 1):
        for t2 in range(d - 2 * t12 + 1):
            t1 = d - 2 * t12 - t2
            terms[_weyl_monomial(t2, t12, t1)] = weyl_coefficient(t2, t12, t1)
    return PBWPoly(terms, 2)


def weyl_binomial_holds(d: int) -> bool:
    free = power(FreePoly.letter(1, 2) + FreePoly.letter(2, 2), d)
    return kill_project(pbw_rewrite(free), WEYL) == weyl_binomial(d)


def heisenberg_weyl_binomial(n: int) -> dict[tuple[int, int, int], Rational]:
    """(x+y)^n with [x, y] = h central, keyed by the exponents (j, i, n-2j-i)
    of (h/2)^j y^i x^(n-2j-i) and carrying the 2^-j into the coefficient."""
    ret = {}
    for j in range(n // 2 + 1):
        for i in range(n - 2 * j + 1):
            rest = n - 2 * j - i
            ret[(j, i, rest)] = Rational(
                math.factorial(n),
                math.factorial(j) * math.factorial(i) * math.factorial(rest),
            ) / 2 ** j
    return ret


def heisenberg_weyl_matches(n: int) -> bool:
    weyl = weyl_binomial(n)
    return all(
        weyl.coefficient(_weyl_monomial(i, j, rest)) == c
        for (j, i, rest), c in heisenberg_weyl_binomial(n).items()
    ) and len(weyl) == len(heisenberg_weyl_binomial(n))


class QCommMonomial(NamedTuple):
    """d_1^t1 d_2^t2 ... with d_i standing for y^(i-1)."""

    exponents: Tuple[int, ...]

    @classmethod
    def from_symbols(cls, symbols: Sequence[int]) -> QCommMonomial:
        top = max(symbols, default=0)
        return cls(tuple(list(symbols).count(i) for i in range(1, top + 1)))

    def symbols(self) -> Word:
        return sum(((i,) * t for i, t in enumerate(self.exponents, 1)), ())

    def __str__(self) -> str:
        if not any(self.exponents):
            return '1'
        return '*'.join(
            f'd{i}' + (f'^{t}' if t > 1 else '')
            for i, t in enumerate(self.exponents, 1)
            if t
        )


QCommPoly = Dict[QCommMonomial, QPoly]


def qcomm_swap(symbols: Word, i: int) -> tuple[int, Word]:
    """One rewrite d_v d_u -> q^v d_u d_v at position i, v > u.

    Returns the q exponent picked up and the new symbol word.
    """
    v, u = symbols[i], symbols[i + 1]
    if not v > u:
        raise ValueError(f'no descent at position {i} of {symbols}')
    return v, symbols[:i] + (u, v) + symbols[i + 2:]


def qcomm_normalize(symbols: Sequence[int]) -> tuple[QPoly, QCommMonomial]:
    word = tuple(symbols)
    exponent = 0
    while True:
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                gained, word = qcomm_swap(word, i)
                exponent += gained
                break
        else:
            return QPoly.q_power(exponent), QCommMonomial.from_symbols(word)


def _qcomm_project(f: FreePoly) -> QCommPoly:
    ret: QCommPoly = {}
    for w, c in f:
        factor, mono = qcomm_normalize(w)
        ret[mono] = ret.get(mono, QPoly()) + factor * c
    return {mono: c for mono, c in ret.items() if c}


@functools.lru_cache(maxsize=None)
def _qbell_symbols(n: int, k: int, alphabet: int) -> FreePoly:
    """B_{n,k,q} over the symbols d_1..d_alphabet by the derivative recursion
    sum_l binom(n-1, l)_q B_{l,k-1,q} d_(n-l)."""
    if n == 0:
        return FreePoly.one(alphabet) if k == 0 else FreePoly.zero(alphabet)
    elif k == 0 or k > n:
        return FreePoly.zero(alphabet)
    ret = FreePoly.zero(alphabet)
    for ell in range(k - 1, n):
        ret = ret + (
            _qbell_symbols(ell, k - 1, alphabet) *
            FreePoly.letter(n - ell, alphabet)
        ).scale(q_binomial(n - 1, ell))
    return ret


def qcomm_bell_by_recursion(n: int, k: int) -> QCommPoly:
    return _qcomm_project(_qbell_symbols(n, k, max(n, 1)))


def _qcomm_denominator(part: dict[int, int]) -> tuple[QCommMonomial, QPoly]:
    exponents = [0] * max(part, default=0)
    den = ONE
    for i, t in part.items():
        exponents[i - 1] = t
        den = den * q_factorial(i) ** t * q_factorial(t, base=i)
    return QCommMonomial(tuple(exponents)), den


def qcomm_bell_closed_form(n: int, k: int) -> QCommPoly:
    """(n)_q! / prod ((i)_q!)^t_i (t_i)_{q^i}! over sum t_i = k,
    sum i t_i = n."""
    if n == 0 or k == 0:
        return {QCommMonomial(()): ONE} if n == k == 0 else {}
    ret: QCommPoly = {}
    for part in partitions(n, m=k):
        if sum(part.values()) == k:
            mono, den = _qcomm_denominator(part)
            ret[mono] = qpoly_exact_div(q_factorial(n), den)
    return ret


def qcomm_bell(n: int, k: int) -> QCommPoly:
    by_recursion = qcomm_bell_by_recursion(n, k)
    try:
        closed = qcomm_bell_closed_form(n, k)
    except DivisionNotExact as e:
        raise TheoremViolation(f'B_{{{n},{k},q}} closed form: {e}')
    if by_recursion != closed:
        raise TheoremViolation(
            f'B_{{{n},{k},q}}: the recursion and the closed form disagree',
        )
    return closed


def qcomm_bell_total(n: int) -> QCommPoly:
    ret: QCommPoly = {}
    for k in range(n + 1):
        ret.update(qcomm_bell(n, k))
    return ret


QCommBinomial = Dict[Tuple[QCommMonomial, int], QPoly]


def qcomm_binomial(n: int) -> QCommBinomial:
    """(n)_q! / (prod ((i)_q!)^t_i (t_i)_{q^i}! (t)_q!) on
    y^t1 (y')^t2 ... x^t"""
    ret: QCommBinomial = {}
    for t in range(n + 1):
        parts = partitions(n - t) if n - t else [{}]
        for part in parts:
            mono, den = _qcomm_denominator(part)
            ret[(mono, t)] = qpoly_exact_div(
                q_factorial(n), den * q_factorial(t),
            )
    return ret


def qcomm_binomial_by_bell(n: int) -> QCommBinomial:
    """sum_k binom(n, k)_q B_{k,q} x^(n-k) with the B_{k,q} normal ordered."""
    ret: QCommBinomial = {}
    for k in range(n + 1):
        for j in range(k + 1):
            for mono, c in qcomm_bell_by_recursion(k, j).items():
                ret[(mono, n - k)] = c * q_binomial(n, k)
    return ret


# letters of the Blumen algebra, in normal order
BLUMEN_Y, BLUMEN_H, BLUMEN_X = 1, 2, 3


class BlumenMonomial(NamedTuple):
    r: int
    s: int
    t: int

    def __str__(self) -> str:
        parts = [
            name + (f'^{e}' if e > 1 else '')
            for name, e in (('y', self.r), ('h', self.s), ('x', self.t))
            if e
        ]
        return '*'.join(parts) or '1'


BlumenPoly = Dict[BlumenMonomial, QPoly]


def _blumen_rules(a: int, b: int) -> tuple[tuple[QPoly, Word], ...]:
    q = QPoly.q_power(1)
    if (a, b) == (BLUMEN_X, BLUMEN_Y):
        return ((q, (BLUMEN_Y, BLUMEN_X)), (ONE, (BLUMEN_H,)))
    elif (a, b) == (BLUMEN_X, BLUMEN_H):
        return ((q * q, (BLUMEN_H, BLUMEN_X)),)
    elif (a, b) == (BLUMEN_H, BLUMEN_Y):
        return ((q * q, (BLUMEN_Y, BLUMEN_H)),)
    else:
        raise AssertionError(f'no rule for {(a, b)}')


@functools.lru_cache(maxsize=None)
def blumen_normal_form(w: Word) -> tuple[tuple[BlumenMonomial, QPoly], ...]:
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            ret: BlumenPoly = {}
            for c, replacement in _blumen_rules(w[i], w[i + 1]):
                for mono, d in blumen_normal_form(
                        w[:i] + replacement + w[i + 2:],
                ):
                    ret[mono] = ret.get(mono, QPoly()) + c * d
            return tuple((mono, c) for mono, c in ret.items() if c)
    mono = BlumenMonomial(
        w.count(BLUMEN_Y), w.count(BLUMEN_H), w.count(BLUMEN_X),
    )
    return ((mono, ONE),)


def blumen_normalize(f: FreePoly) -> BlumenPoly:
    ret: BlumenPoly = {}
    for w, c in f:
        for mono, d in blumen_normal_form(w):
            ret[mono] = ret.get(mono, QPoly()) + d * c
    return {mono: c for mono, c in ret.items() if c}


def blumen_expand(n: int) -> BlumenPoly:
    x = FreePoly.letter(BLUMEN_X, 3)
    y = FreePoly.letter(BLUMEN_Y, 3)
    return blumen_normalize(power(x + y, n))


def blumen_closed_form(n: int) -> BlumenPoly:
    """(n)_q! / ((r)_q! (2)_q^s (s)_{q^2}! (t)_q!) on y^r h^s x^t"""
    ret: BlumenPoly = {}
    for s in range(n // 2 + 1):
        for r in range(n - 2 * s + 1):
            t = n - 2 * s - r
            den = (
                q_factorial(r) * q_integer(2) ** s * q_factorial(s, base=2) *
                q_factorial(t)
            )
            ret[BlumenMonomial(r, s, t)] = qpoly_exact_div(q_factorial(n), den)
    return ret


def blumen_binomial(n: int) -> BlumenPoly:
    expanded = blumen_expand(n)
    try:
        closed = blumen_closed_form(n)
    except DivisionNotExact as e:
        raise TheoremViolation(f'Blumen closed form at n={n}: {e}')
    if expanded != closed:
        raise TheoremViolation(
            f'(x+y)^{n}: rewriting and the closed form disagree',
        )
    return closed


def blumen_matches_weyl(n: int) -> bool:
    """At q = 1 the coefficient of y^r h^s x^t is that of
    E_2^r E_12^s E_1^t."""
    weyl = weyl_binomial(n)
    return all(
        c.at(1) == weyl.coefficient(_weyl_monomial(mono.r, mono.s, mono.t))
        for mono, c in blumen_closed_form(n).items()
    )


def blumen_higher_derivatives_vanish(n: int) -> bool:
    """y^(j) = x y^(j-1) - q^j y^(j-1) x normal orders to h at j = 1 and to
    zero for 2 <= j <= n."""
    x = FreePoly.letter(BLUMEN_X, 3)
    derivative = FreePoly.letter(BLUMEN_Y, 3)
    for j in range(1, n + 1):
        derivative = (
            x * derivative -
            (derivative * x).scale(QPoly.q_power(j))
        )
        normal = blumen_normalize(derivative)
        expected = {BlumenMonomial(0, 1, 0): ONE} if j == 1 else {}
        if normal != expected:
            return False
    return True


def qcomm_matches_classical(n: int) -> bool:
    """At q = 1 the coefficient of y^t1 (y')^t2 ... x^t is binom(n, t) times
    the classical Bell coefficient of E_2^t1 E_12^t2 ... in degree n - t."""
    for (mono, t), c in qcomm_binomial(n).items():
        factors = tuple(
            ((1,) * (i - 1) + (2,), e)
            for i, e in enumerate(mono.exponents, 1)
            if e
        )
        classical = classical_bell_formula(n - t).coefficient(
            PBWMonomial.create(factors),
        )
        if c.at(1) != math.comb(n, t) * classical:
            return False
    return True
