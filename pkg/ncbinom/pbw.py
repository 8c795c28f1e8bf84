from __future__ import annotations

import functools
import itertools
import logging
import math
from typing import Callable
from typing import Generator
from typing import Iterable
from typing import Iterator
from typing import Mapping
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

import sympy

from ncbinom.errors import AlphabetMismatch
from ncbinom.errors import OrderViolation
from ncbinom.errors import TheoremViolation
from ncbinom.errors import UnsupportedRing
from ncbinom.freepoly import commutator
from ncbinom.freepoly import FreePoly
from ncbinom.rings import Coefficient
from ncbinom.rings import PrimeFieldElem
from ncbinom.rings import QPoly
from ncbinom.rings import Rational
from ncbinom.rings import reduce_rational
from ncbinom.words import Alphabet
from ncbinom.words import cfl_factorize
from ncbinom.words import format_word
from ncbinom.words import is_lyndon
from ncbinom.words import lyndon_enumerate
from ncbinom.words import multidegree
from ncbinom.words import MultiDegree
from ncbinom.words import standard_factorization
from ncbinom.words import Word

logger = logging.getLogger('ncbinom')

Factor = Tuple[Word, int]


class PBWMonomial(NamedTuple):
    """E_{a1}^{t1} ... E_{an}^{tn} with a1 > ... > an Lyndon words."""

    factors: Tuple[Factor, ...] = ()

    @classmethod
    def create(cls, factors: Iterable[Factor]) -> PBWMonomial:
        ret = tuple((tuple(alpha), t) for alpha, t in factors)
        for alpha, t in ret:
            if t < 1:
                raise OrderViolation(f'exponent {t} on E_{format_word(alpha)}')
            elif not is_lyndon(alpha):
                raise OrderViolation(f'{format_word(alpha)} is not Lyndon')
        for (a, _), (b, _) in zip(ret, ret[1:]):
            if not a > b:
                raise OrderViolation(
                    f'E_{format_word(a)} must come after E_{format_word(b)}',
                )
        return cls(ret)

    @classmethod
    def from_lyndon_words(cls, words: Sequence[Word]) -> PBWMonomial:
        """From a non-increasing sequence of Lyndon words."""
        return cls.create(
            (w, len(tuple(group))) for w, group in itertools.groupby(words)
        )

    @classmethod
    def from_word(cls, w: Word) -> PBWMonomial:
        return cls.from_lyndon_words(cfl_factorize(w)) if w else cls()

    @property
    def degree(self) -> int:
        return sum(len(alpha) * t for alpha, t in self.factors)

    @property
    def word(self) -> Word:
        return sum((alpha * t for alpha, t in self.factors), ())

    def multidegree(self, m: int) -> MultiDegree:
        return multidegree(self.word, m)

    @property
    def first(self) -> Word | None:
        return self.factors[0][0] if self.factors else None

    @property
    def last(self) -> Word | None:
        return self.factors[-1][0] if self.factors else None

    def lyndon_words(self) -> frozenset[Word]:
        return frozenset(alpha for alpha, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return '1'
        return '*'.join(
            f'E({format_word(alpha)})' + (f'^{t}' if t > 1 else '')
            for alpha, t in self.factors
        )


UNIT = PBWMonomial()


class PBWPoly:
    """A linear combination of PBW monomials."""

    __slots__ = ('terms', 'alphabet')

    def __init__(
            self,
            terms: Mapping[PBWMonomial, Coefficient],
            alphabet: int,
    ) -> None:
        self.terms: dict[PBWMonomial, Coefficient] = {
            m: c for m, c in terms.items() if c
        }
        self.alphabet = alphabet

    @classmethod
    def zero(cls, alphabet: int) -> PBWPoly:
        return cls({}, alphabet)

    @classmethod
    def monomial(
            cls,
            m: PBWMonomial,
            alphabet: int,
            c: Coefficient = 1,
    ) -> PBWPoly:
        return cls({m: c}, alphabet)

    @classmethod
    def from_factors(
            cls,
            alphabet: int,
            *items: tuple[Coefficient, Sequence[Factor]],
    ) -> PBWPoly:
        terms: dict[PBWMonomial, Coefficient] = {}
        for c, factors in items:
            m = PBWMonomial.create(factors)
            terms[m] = terms.get(m, 0) + c
        return cls(terms, alphabet)

    def __iter__(self) -> Iterator[tuple[PBWMonomial, Coefficient]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWPoly):
            return NotImplemented
        return (self.alphabet, self.terms) == (other.alphabet, other.terms)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ' + '.join(f'{c}*{m}' for m, c in sorted(self.terms.items()))
        return f'PBWPoly({body or "0"}, alphabet={self.alphabet})'

    def coefficient(self, m: PBWMonomial) -> Coefficient:
        return self.terms.get(m, 0)

    def __add__(self, other: PBWPoly) -> PBWPoly:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(
                f'alphabets of size {self.alphabet} and {other.alphabet}',
            )
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return PBWPoly(terms, self.alphabet)

    def __neg__(self) -> PBWPoly:
        return self.scale(-1)

    def __sub__(self, other: PBWPoly) -> PBWPoly:
        return self + -other

    def scale(self, c: Coefficient) -> PBWPoly:
        return PBWPoly(
            {m: c * a for m, a in self.terms.items()}, self.alphabet,
        )

    __rmul__ = scale

    def filter(self, keep: Callable[[PBWMonomial], bool]) -> PBWPoly:
        return PBWPoly(
            {m: c for m, c in self.terms.items() if keep(m)}, self.alphabet,
        )

    def map_coefficients(
            self,
            fn: Callable[[Coefficient], Coefficient],
    ) -> PBWPoly:
        return PBWPoly(
            {m: fn(c) for m, c in self.terms.items()}, self.alphabet,
        )


@functools.lru_cache(maxsize=None)
def ls_basis_element(alpha: Word, alphabet: int) -> FreePoly:
    if len(alpha) == 1:
        return FreePoly.word(alpha, alphabet)
    beta, gamma = standard_factorization(alpha)
    return commutator(
        ls_basis_element(beta, alphabet), ls_basis_element(gamma, alphabet),
    )


@functools.lru_cache(maxsize=None)
def pbw_expand(m: PBWMonomial, alphabet: int) -> FreePoly:
    ret = FreePoly.one(alphabet)
    for alpha, t in m.factors:
        for _ in range(t):
            ret = ret * ls_basis_element(alpha, alphabet)
    return ret


def pbw_expand_poly(p: PBWPoly) -> FreePoly:
    ret = FreePoly.zero(p.alphabet)
    for m, c in p.terms.items():
        ret = ret + pbw_expand(m, p.alphabet).scale(c)
    return ret


def leading_term_holds(m: PBWMonomial, alphabet: int) -> bool:
    """The lex-minimal word of the expansion of m is the concatenation of
    its factors, with coefficient 1."""
    expansion = pbw_expand(m, alphabet)
    w = expansion.lex_min_word()
    return w == m.word and expansion.terms[w] == 1


def _check_rewritable(f: FreePoly) -> None:
    for c in f.terms.values():
        if isinstance(c, PrimeFieldElem):
            raise UnsupportedRing(
                'PBW rewriting runs over Q or Q[q]; reduce mod p afterwards',
            )


def pbw_rewrite(f: FreePoly) -> PBWPoly:
    _check_rewritable(f)
    remainder = dict(f.terms)
    terms: dict[PBWMonomial, Coefficient] = {}
    while remainder:
        w = min(remainder)
        c = remainder[w]
        m = PBWMonomial.from_word(w)
        if not leading_term_holds(m, f.alphabet):
            logger.warning(
                f'leading word of {m} is not {format_word(w)}, '
                f'falling back to a linear solve',
            )
            return rewrite_by_linear_solve(f)
        terms[m] = c
        for u, a in pbw_expand(m, f.alphabet).terms.items():
            remaining = remainder.get(u, 0) - c * a
            if remaining:
                remainder[u] = remaining
            else:
                remainder.pop(u, None)
    return PBWPoly(terms, f.alphabet)


def monomials_of_multidegree(d: MultiDegree) -> list[PBWMonomial]:
    """All PBW monomials of multidegree d, largest first factor first."""
    m = d.alphabet_size
    candidates = [
        (w, multidegree(w, m).counts)
        for w in lyndon_enumerate(Alphabet(m), d.total)
        if all(a <= b for a, b in zip(multidegree(w, m).counts, d.counts))
    ]
    candidates.reverse()

    def _choose(
            idx: int,
            remaining: tuple[int, ...],
            acc: tuple[Factor, ...],
    ) -> Generator[PBWMonomial, None, None]:
        if not any(remaining):
            yield PBWMonomial(acc)
            return
        elif idx == len(candidates):
            return
        w, wd = candidates[idx]
        t_max = min(r // c for r, c in zip(remaining, wd) if c)
        for t in range(t_max, -1, -1):
            rest = tuple(r - t * c for r, c in zip(remaining, wd))
            yield from _choose(idx + 1, rest, acc + ((w, t),) if t else acc)

    return list(_choose(0, d.counts, ()))


def _to_sympy(c: Coefficient) -> sympy.Rational:
    r = Rational(c)
    return sympy.Rational(r.numerator, r.denominator)


def _solve(
        columns: Sequence[FreePoly],
        rhs: FreePoly,
) -> list[Coefficient]:
    rows = sorted(
        set(rhs.terms).union(*(col.terms for col in columns)),
    )
    a = sympy.Matrix([
        [_to_sympy(col.coefficient(w)) for col in columns] for w in rows
    ])
    b = sympy.Matrix([_to_sympy(rhs.coefficient(w)) for w in rows])
    if a.rank() != len(columns):
        raise TheoremViolation('the PBW monomials are linearly dependent')
    try:
        solution, _ = a.gauss_jordan_solve(b)
    except ValueError:
        raise TheoremViolation('the PBW monomials do not span this component')
    return [Rational(int(v.p), int(v.q)) for v in solution]


def rewrite_by_linear_solve(f: FreePoly) -> PBWPoly:
    _check_rewritable(f)
    if any(isinstance(c, QPoly) for c in f.terms.values()):
        raise UnsupportedRing('the linear solve needs rational coefficients')
    terms: dict[PBWMonomial, Coefficient] = {}
    for d, component in f.homogeneous_components().items():
        basis = monomials_of_multidegree(d)
        solution = _solve(
            [pbw_expand(m, f.alphabet) for m in basis], component,
        )
        terms.update(zip(basis, solution))
    return PBWPoly(terms, f.alphabet)


def commutator_ls(
        alpha: Word,
        beta: Word,
        alphabet: int | None = None,
) -> PBWPoly:
    if not alpha < beta:
        raise OrderViolation(
            f'[E_{format_word(alpha)}, E_{format_word(beta)}] needs '
            f'{format_word(alpha)} < {format_word(beta)}',
        )
    m = alphabet or max(alpha + beta)
    ret = pbw_rewrite(
        commutator(ls_basis_element(alpha, m), ls_basis_element(beta, m)),
    )

    joined = PBWMonomial(((alpha + beta, 1),))
    if len(alpha) == 1 or standard_factorization(alpha)[1] >= beta:
        if ret != PBWPoly.monomial(joined, m):
            raise TheoremViolation(
                f'[E_{format_word(alpha)}, E_{format_word(beta)}] is not '
                f'E_{format_word(alpha + beta)}',
            )
        return ret

    expected = multidegree(alpha + beta, m)
    for mono in ret.terms:
        if len(mono.factors) != 1 or mono.factors[0][1] != 1:
            raise TheoremViolation(f'{mono} is not a single basis element')
        gamma = mono.factors[0][0]
        if not alpha + beta <= gamma < beta:
            raise TheoremViolation(
                f'E_{format_word(gamma)} lies outside '
                f'[{format_word(alpha + beta)}, {format_word(beta)})',
            )
        elif multidegree(gamma, m) != expected:
            raise TheoremViolation(f'E_{format_word(gamma)} has wrong degree')
    if not ret.coefficient(joined):
        raise TheoremViolation(
            f'E_{format_word(alpha + beta)} is missing from the commutator',
        )
    return ret


def refined_commutator_holds(alpha: Word, beta: Word) -> bool:
    """Every E_gamma in [E_alpha, E_beta] has alpha_R <= gamma_R < beta,
    where _R is the right factor of the standard factorization."""
    if len(alpha) < 2:
        return True
    alpha_r = standard_factorization(alpha)[1]
    if not alpha_r < beta:
        return True
    for mono in commutator_ls(alpha, beta).terms:
        gamma_r = standard_factorization(mono.factors[0][0])[1]
        if not alpha_r <= gamma_r < beta:
            logger.warning(
                f'refined commutator bound fails for '
                f'[E_{format_word(alpha)}, E_{format_word(beta)}] at {mono}',
            )
            return False
    return True


def push_letter_through_power(
        x: int,
        beta: Word,
        b: int,
        alphabet: int,
) -> PBWPoly:
    """E_x E_beta^b rewritten as
    sum_c binom(b, c) E_beta^(b-c) E_(x beta^c)."""
    terms: dict[PBWMonomial, Coefficient] = {}
    for c in range(b + 1):
        factors: list[Factor] = []
        if b - c:
            factors.append((beta, b - c))
        factors.append(((x,) + beta * c, 1))
        terms[PBWMonomial.create(factors)] = math.comb(b, c)
    return PBWPoly(terms, alphabet)


def reduce_mod(p: PBWPoly, prime: int) -> PBWPoly:
    def _reduce(c: Coefficient) -> Coefficient:
        if isinstance(c, QPoly):
            raise UnsupportedRing('cannot reduce Q[q] coefficients mod p')
        elif isinstance(c, PrimeFieldElem):
            return c
        return reduce_rational(c, prime)
    return p.map_coefficients(_reduce)
