from __future__ import annotations

import functools
from typing import Callable
from typing import Iterable
from typing import Iterator
from typing import Mapping

import ncbinom.constants as C
from ncbinom.errors import AlphabetMismatch
from ncbinom.errors import DegreeCapExceeded
from ncbinom.errors import TheoremViolation
from ncbinom.rings import Coefficient
from ncbinom.words import format_word
from ncbinom.words import multidegree
from ncbinom.words import MultiDegree
from ncbinom.words import Word


class FreePoly:
    """An element of the free associative algebra in the word basis.

    `terms` never stores a zero coefficient, so two polynomials are equal
    exactly when their term maps are.
    """

    __slots__ = ('terms', 'alphabet')

    def __init__(
            self,
            terms: Mapping[Word, Coefficient],
            alphabet: int,
    ) -> None:
        self.terms: dict[Word, Coefficient] = {
            w: c for w, c in terms.items() if c
        }
        self.alphabet = alphabet
        if len(self.terms) > C.MAX_TERMS:
            raise DegreeCapExceeded(
                f'{len(self.terms)} terms exceeds the cap of {C.MAX_TERMS}',
            )

    @classmethod
    def zero(cls, alphabet: int) -> FreePoly:
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet: int) -> FreePoly:
        return cls({(): 1}, alphabet)

    @classmethod
    def letter(cls, a: int, alphabet: int) -> FreePoly:
        return cls({(a,): 1}, alphabet)

    @classmethod
    def word(cls, w: Word, alphabet: int, c: Coefficient = 1) -> FreePoly:
        return cls({w: c}, alphabet)

    @classmethod
    def from_words(cls, words: Iterable[Word], alphabet: int) -> FreePoly:
        terms: dict[Word, Coefficient] = {}
        for w in words:
            terms[w] = terms.get(w, 0) + 1
        return cls(terms, alphabet)

    def _same_alphabet(self, other: FreePoly) -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(
                f'alphabets of size {self.alphabet} and {other.alphabet}',
            )

    def __iter__(self) -> Iterator[tuple[Word, Coefficient]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreePoly):
            return NotImplemented
        return (self.alphabet, self.terms) == (other.alphabet, other.terms)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ', '.join(
            f'{format_word(w, self.alphabet) or "1"}: {c}'
            for w, c in sorted(self.terms.items())
        )
        return f'FreePoly({{{body}}}, alphabet={self.alphabet})'

    def coefficient(self, w: Word) -> Coefficient:
        return self.terms.get(w, 0)

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def lex_min_word(self) -> Word:
        return min(self.terms)

    def __add__(self, other: FreePoly) -> FreePoly:
        self._same_alphabet(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FreePoly(terms, self.alphabet)

    def __neg__(self) -> FreePoly:
        return FreePoly({w: -c for w, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other: FreePoly) -> FreePoly:
        return self + -other

    def scale(self, c: Coefficient) -> FreePoly:
        return FreePoly(
            {w: c * a for w, a in self.terms.items()}, self.alphabet,
        )

    def __mul__(self, other: FreePoly | Coefficient) -> FreePoly:
        if not isinstance(other, FreePoly):
            return self.scale(other)
        self._same_alphabet(other)
        if len(self.terms) * len(other.terms) > C.MAX_TERMS:
            raise DegreeCapExceeded(
                f'product of {len(self.terms)} by {len(other.terms)} terms '
                f'exceeds the cap of {C.MAX_TERMS}',
            )
        terms: dict[Word, Coefficient] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                terms[w] = terms.get(w, 0) + a * b
        return FreePoly(terms, self.alphabet)

    def __rmul__(self, other: Coefficient) -> FreePoly:
        return self.scale(other)

    def __pow__(self, n: int) -> FreePoly:
        return power(self, n)

    def map_coefficients(
            self,
            fn: Callable[[Coefficient], Coefficient],
    ) -> FreePoly:
        return FreePoly(
            {w: fn(c) for w, c in self.terms.items()}, self.alphabet,
        )

    def homogeneous_components(self) -> dict[MultiDegree, FreePoly]:
        parts: dict[MultiDegree, dict[Word, Coefficient]] = {}
        for w, c in self.terms.items():
            parts.setdefault(multidegree(w, self.alphabet), {})[w] = c
        return {
            d: FreePoly(terms, self.alphabet) for d, terms in parts.items()
        }


def power(f: FreePoly, n: int) -> FreePoly:
    ret = FreePoly.one(f.alphabet)
    for _ in range(n):
        ret = ret * f
    return ret


def commutator(f: FreePoly, g: FreePoly) -> FreePoly:
    return f * g - g * f


@functools.lru_cache(maxsize=None)
def shuffle_words(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    """u ⧢ v as (word, multiplicity) pairs."""
    if not u:
        return ((v, 1),)
    elif not v:
        return ((u, 1),)
    terms: dict[Word, int] = {}
    for w, c in shuffle_words(u[:-1], v):
        terms[w + u[-1:]] = terms.get(w + u[-1:], 0) + c
    for w, c in shuffle_words(u, v[:-1]):
        terms[w + v[-1:]] = terms.get(w + v[-1:], 0) + c
    return tuple(terms.items())


def shuffle_product(f: FreePoly, g: FreePoly) -> FreePoly:
    f._same_alphabet(g)
    terms: dict[Word, Coefficient] = {}
    for u, a in f.terms.items():
        for v, b in g.terms.items():
            for w, mult in shuffle_words(u, v):
                terms[w] = terms.get(w, 0) + mult * a * b
    return FreePoly(terms, f.alphabet)


@functools.lru_cache(maxsize=None)
def _sh_by_recursion(i: int, j: int) -> FreePoly:
    if i == 0 and j == 0:
        return FreePoly.one(2)
    ret = FreePoly.zero(2)
    if i:
        ret = ret + FreePoly.letter(2, 2) * _sh_by_recursion(i - 1, j)
    if j:
        ret = ret + FreePoly.letter(1, 2) * _sh_by_recursion(i, j - 1)
    return ret


@functools.lru_cache(maxsize=None)
def sh_word_basis(i: int, j: int) -> FreePoly:
    """SH_{i,j}(y, x) with y the letter 2 and x the letter 1."""
    ret = _sh_by_recursion(i, j)
    by_shuffle = shuffle_product(
        FreePoly.word((2,) * i, 2), FreePoly.word((1,) * j, 2),
    )
    if ret != by_shuffle:
        raise TheoremViolation(
            f'SH_{{{i},{j}}} recursion disagrees with the shuffle product',
        )
    return ret


@functools.lru_cache(maxsize=None)
def sh_word_multi(d: MultiDegree) -> FreePoly:
    m = d.alphabet_size
    if d.total == 0:
        return FreePoly.one(m)
    ret = FreePoly.zero(m)
    for letter in range(1, m + 1):
        if d.count(letter):
            counts = list(d.counts)
            counts[letter - 1] -= 1
            ret = ret + (
                FreePoly.letter(letter, m) *
                sh_word_multi(MultiDegree(tuple(counts)))
            )
    return ret
