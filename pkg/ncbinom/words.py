from __future__ import annotations

import enum
import functools
from typing import Generator
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

import sympy

from ncbinom.errors import AlphabetMismatch
from ncbinom.errors import EmptyWord
from ncbinom.errors import NoFactorization

Word = Tuple[int, ...]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Alphabet(NamedTuple):
    """Letters 1..size ordered 1 < 2 < ... < size."""

    size: int

    @classmethod
    def create(cls, size: int) -> Alphabet:
        if size < 1:
            raise AlphabetMismatch(f'an alphabet needs a letter, got {size}')
        return cls(size)

    @property
    def letters(self) -> range:
        return range(1, self.size + 1)

    def check(self, w: Word) -> Word:
        for letter in w:
            if not 1 <= letter <= self.size:
                raise AlphabetMismatch(
                    f'letter {letter} is not in the alphabet 1..{self.size}',
                )
        return w


class MultiDegree(NamedTuple):
    """Letter counts, `counts[x - 1]` being the number of letters x.

    The binary degree (i, j) of SH_{i,j} is the count of 2s then the count of
    1s, i.e. the counts listed from the largest letter down; `from_binary` and
    `descending` convert to and from that reading.
    """

    counts: tuple[int, ...]

    @classmethod
    def from_descending(cls, counts: Sequence[int]) -> MultiDegree:
        if any(c < 0 for c in counts):
            raise ValueError(f'negative letter count in {tuple(counts)}')
        return cls(tuple(reversed(tuple(counts))))

    @classmethod
    def from_binary(cls, i: int, j: int) -> MultiDegree:
        return cls.from_descending((i, j))

    @property
    def descending(self) -> tuple[int, ...]:
        return tuple(reversed(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def alphabet_size(self) -> int:
        return len(self.counts)

    def count(self, letter: int) -> int:
        return self.counts[letter - 1] if letter <= len(self.counts) else 0

    def __str__(self) -> str:
        return ','.join(str(c) for c in self.descending)


def multidegree(w: Word, m: int) -> MultiDegree:
    counts = [0] * m
    for letter in w:
        counts[letter - 1] += 1
    return MultiDegree(tuple(counts))


def lex_compare(a: Word, b: Word) -> Ordering:
    for x, y in zip(a, b):
        if x < y:
            return Ordering.LESS
        elif x > y:
            return Ordering.GREATER
    # one is a left factor of the other
    if len(a) < len(b):
        return Ordering.LESS
    elif len(a) > len(b):
        return Ordering.GREATER
    else:
        return Ordering.EQUAL


def is_lyndon(w: Word) -> bool:
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


def is_lyndon_by_rotation(w: Word) -> bool:
    return bool(w) and all(
        lex_compare(w, w[i:] + w[:i]) is Ordering.LESS
        for i in range(1, len(w))
    )


def cfl_factorize(w: Word) -> list[Word]:
    """Duval's factorization into non-increasing Lyndon words."""
    if not w:
        raise EmptyWord('cannot factorize the empty word')
    ret = []
    n = len(w)
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and w[k] <= w[j]:
            if w[k] < w[j]:
                k = i
            else:
                k += 1
            j += 1
        while i <= k:
            ret.append(w[i:i + j - k])
            i += j - k
    return ret


@functools.lru_cache(maxsize=None)
def standard_factorization(w: Word) -> tuple[Word, Word]:
    if len(w) < 2:
        raise NoFactorization(
            f'{format_word(w)} has no standard factorization',
        )
    elif not is_lyndon(w):
        raise NoFactorization(f'{format_word(w)} is not a Lyndon word')
    split = min(range(1, len(w)), key=lambda i: w[i:])
    return w[:split], w[split:]


def longest_lyndon_suffix(w: Word) -> Word:
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[i:]
    raise NoFactorization(f'{format_word(w)} has no proper Lyndon suffix')


def lyndon_enumerate(
        alphabet: Alphabet,
        max_len: int,
) -> Generator[Word, None, None]:
    """Lyndon words of length <= max_len in increasing lex order."""
    if max_len < 1:
        return
    w = [1]
    while w:
        yield tuple(w)
        period = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - period])
        while w and w[-1] == alphabet.size:
            w.pop()
        if w:
            w[-1] += 1


def lyndon_count(m: int, n: int) -> int:
    """Number of Lyndon words of length n over m letters (Moreau)."""
    total = sum(
        sympy.mobius(d) * m ** (n // d) for d in sympy.divisors(n)
    )
    return int(total) // n


def format_word(w: Word, alphabet_size: int = 9) -> str:
    if alphabet_size <= 9:
        return ''.join(str(letter) for letter in w)
    else:
        return '[' + ','.join(str(letter) for letter in w) + ']'


def parse_word(s: str, alphabet: Alphabet | None = None) -> Word:
    s = s.strip()
    if s.startswith('[') and s.endswith(']'):
        body = s[1:-1].strip()
        w = tuple(int(part) for part in body.split(',')) if body else ()
    elif s in {'', '1_X'}:
        w = ()
    elif s.isdigit():
        w = tuple(int(c) for c in s)
    else:
        raise ValueError(f'not a word: {s!r}')
    if alphabet is not None:
        return alphabet.check(w)
    for letter in w:
        if letter < 1:
            raise AlphabetMismatch(
                f'letter {letter} is not in the alphabet, letters start at 1',
            )
    return w
