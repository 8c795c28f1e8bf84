from __future__ import annotations

import fractions
import functools
import re
from typing import Iterable
from typing import NamedTuple
from typing import Union

import sympy

from ncbinom.errors import DivisionNotExact
from ncbinom.errors import RingMismatch
from ncbinom.errors import UnsupportedRing

Rational = fractions.Fraction


@functools.lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    if not sympy.isprime(p):
        raise UnsupportedRing(f'GF({p}) needs a prime modulus')
    return p


class PrimeFieldElem:
    """A residue modulo a prime p."""

    __slots__ = ('residue', 'p')

    def __init__(self, residue: int, p: int) -> None:
        check_prime(p)
        self.residue = residue % p
        self.p = p

    def _coerce(self, other: object) -> PrimeFieldElem | None:
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise RingMismatch(
                    f'cannot combine GF({self.p}) with GF({other.p})',
                )
            return other
        elif isinstance(other, int):
            return PrimeFieldElem(other, self.p)
        elif isinstance(other, Rational):
            return reduce_rational(other, self.p)
        elif isinstance(other, QPoly):
            raise RingMismatch(f'cannot combine GF({self.p}) with Q[q]')
        else:
            return None

    def __add__(self, other: object) -> PrimeFieldElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue + o.residue, self.p)

    __radd__ = __add__

    def __neg__(self) -> PrimeFieldElem:
        return PrimeFieldElem(-self.residue, self.p)

    def __sub__(self, other: object) -> PrimeFieldElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue - o.residue, self.p)

    def __rsub__(self, other: object) -> PrimeFieldElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(o.residue - self.residue, self.p)

    def __mul__(self, other: object) -> PrimeFieldElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.residue * o.residue, self.p)

    __rmul__ = __mul__

    def inverse(self) -> PrimeFieldElem:
        if not self.residue:
            raise ZeroDivisionError(f'0 has no inverse in GF({self.p})')
        return PrimeFieldElem(pow(self.residue, self.p - 2, self.p), self.p)

    def __truediv__(self, other: object) -> PrimeFieldElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> PrimeFieldElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> PrimeFieldElem:
        if n < 0:
            return self.inverse() ** -n
        return PrimeFieldElem(pow(self.residue, n, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PrimeFieldElem):
            return (self.residue, self.p) == (other.residue, other.p)
        elif isinstance(other, int):
            return self.residue == other % self.p
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.p))

    def __bool__(self) -> bool:
        return self.residue != 0

    def __repr__(self) -> str:
        return f'PrimeFieldElem({self.residue}, {self.p})'

    def __str__(self) -> str:
        return str(self.residue)


def reduce_rational(c: Rational | int, p: int) -> PrimeFieldElem:
    c = Rational(c)
    if c.denominator % p == 0:
        raise DivisionNotExact(f'{c} has no image in GF({p})')
    return PrimeFieldElem(c.numerator, p) / PrimeFieldElem(c.denominator, p)


_TERM_RE = re.compile(
    r'^(?P<coeff>\d+(?:/\d+)?)?(?P<star>\*)?(?P<q>q(?:\^(?P<exp>\d+))?)?$',
)


class QPoly:
    """An exact polynomial in the formal parameter q.

    Coefficients are stored lowest power first with no trailing zeros, so the
    zero polynomial has an empty tuple and degree -1.
    """

    __slots__ = ('coefficients',)

    def __init__(self, coefficients: Iterable[Rational | int] = ()) -> None:
        coeffs = [Rational(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients: tuple[Rational, ...] = tuple(coeffs)

    @classmethod
    def q_power(cls, n: int) -> QPoly:
        return cls([0] * n + [1])

    @classmethod
    def constant(cls, c: Rational | int) -> QPoly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def _coerce(self, other: object) -> QPoly | None:
        if isinstance(other, QPoly):
            return other
        elif isinstance(other, (int, Rational)):
            return QPoly.constant(other)
        elif isinstance(other, PrimeFieldElem):
            raise RingMismatch(f'cannot combine Q[q] with GF({other.p})')
        else:
            return None

    def __add__(self, other: object) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coefficients, o.coefficients
        if len(a) < len(b):
            a, b = b, a
        return QPoly(
            x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)
        )

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coefficients)

    def __sub__(self, other: object) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + -o

    def __rsub__(self, other: object) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + -self

    def __mul__(self, other: object) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coefficients or not o.coefficients:
            return QPoly()
        size = len(self.coefficients) + len(o.coefficients) - 1
        ret = [Rational(0)] * size
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(o.coefficients):
                    ret[i + j] += a * b
        return QPoly(ret)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError('negative powers leave Q[q]')
        ret = QPoly.constant(1)
        for _ in range(n):
            ret = ret * self
        return ret

    def __call__(self, value: object) -> object:
        """Evaluate by Horner's rule.  `value` may be a number or another
        QPoly, the latter giving the substitution q -> value.
        """
        ret: object = 0
        for c in reversed(self.coefficients):
            ret = ret * value + c  # type: ignore[operator]
        return ret

    def at(self, value: Rational | int) -> Rational:
        ret = Rational(0)
        for c in reversed(self.coefficients):
            ret = ret * value + c
        return ret

    def substitute_power(self, k: int) -> QPoly:
        """q -> q^k"""
        ret = [Rational(0)] * (k * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coefficients):
            ret[k * i] += c
        return QPoly(ret)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPoly):
            return self.coefficients == other.coefficients
        elif isinstance(other, (int, Rational)):
            if self.degree > 0:
                return False
            return (self.coefficients[0] if self.coefficients else 0) == other
        else:
            return NotImplemented

    def __hash__(self) -> int:
        if self.degree <= 0:
            return hash(self.coefficients[0] if self.coefficients else 0)
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __repr__(self) -> str:
        return f'QPoly({self})'

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            elif i == 0:
                term = str(c)
            else:
                power = 'q' if i == 1 else f'q^{i}'
                if c == 1:
                    term = power
                elif c == -1:
                    term = f'-{power}'
                else:
                    term = f'{c}*{power}'
            if parts and not term.startswith('-'):
                term = f'+{term}'
            parts.append(term)
        return ''.join(parts) or '0'

    @classmethod
    def parse(cls, s: str) -> QPoly:
        s = s.replace(' ', '')
        if s.startswith('(') and s.endswith(')'):
            s = s[1:-1]
        ret = cls()
        for sign, body in re.findall(r'([+-]?)([^+-]+)', s):
            match = _TERM_RE.match(body)
            if match is None or not (match['coeff'] or match['q']):
                raise ValueError(f'not a polynomial in q: {s!r}')
            coeff = Rational(match['coeff'] or 1)
            if sign == '-':
                coeff = -coeff
            if match['q'] is None:
                power = 0
            else:
                power = int(match['exp'] or 1)
            ret = ret + cls.q_power(power) * coeff
        return ret


Coefficient = Union[int, Rational, PrimeFieldElem, QPoly]

ONE = QPoly.constant(1)


@functools.lru_cache(maxsize=None)
def q_integer(n: int, base: int = 1) -> QPoly:
    """(n) in the parameter q^base: 1 + q^base + ... + q^(base*(n-1))."""
    coeffs = [0] * (base * (n - 1) + 1) if n > 0 else []
    for i in range(n):
        coeffs[base * i] = 1
    return QPoly(coeffs)


@functools.lru_cache(maxsize=None)
def q_factorial(n: int, base: int = 1) -> QPoly:
    ret = ONE
    for s in range(1, n + 1):
        ret = ret * q_integer(s, base)
    return ret


@functools.lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return QPoly()
    elif k == 0 or k == n:
        return ONE
    else:
        return (
            q_binomial(n - 1, k - 1) +
            QPoly.q_power(k) * q_binomial(n - 1, k)
        )


def qpoly_exact_div(a: QPoly, b: QPoly) -> QPoly:
    if not b:
        raise DivisionNotExact(f'cannot divide {a} by the zero polynomial')
    rem = list(a.coefficients)
    bc = b.coefficients
    if len(rem) < len(bc):
        if rem:
            raise DivisionNotExact(f'{b} does not divide {a}')
        return QPoly()

    quot = [Rational(0)] * (len(rem) - len(bc) + 1)
    lead = bc[-1]
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(bc) - 1] / lead
        quot[i] = c
        if c:
            for j, bj in enumerate(bc):
                rem[i + j] -= c * bj
    if any(rem):
        raise DivisionNotExact(f'{b} does not divide {a}')
    return QPoly(quot)


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> QPoly:
    if n < 1:
        raise ValueError(f'cyclotomic polynomials start at n=1, got {n}')
    ret = QPoly([-1] + [0] * (n - 1) + [1])
    for d in sympy.divisors(n)[:-1]:
        ret = qpoly_exact_div(ret, cyclotomic(d))
    return ret


def specialize(c: Coefficient, value: Rational | int) -> Coefficient:
    if isinstance(c, QPoly):
        return c.at(value)
    else:
        return c


class Ring(NamedTuple):
    name: str
    p: int = 0

    def coerce(self, c: Coefficient) -> Coefficient:
        if self.p:
            if isinstance(c, QPoly):
                if c.degree > 0:
                    raise RingMismatch(f'{c} is not an element of {self.name}')
                c = c.at(0)
            if isinstance(c, PrimeFieldElem):
                return PrimeFieldElem(c.residue, self.p)
            return reduce_rational(c, self.p)
        elif self.name == 'Q':
            if isinstance(c, QPoly):
                if c.degree > 0:
                    raise RingMismatch(f'{c} is not an element of Q')
                return c.at(0)
            elif isinstance(c, PrimeFieldElem):
                raise RingMismatch(f'GF({c.p}) does not embed in Q')
            return c
        else:
            if isinstance(c, PrimeFieldElem):
                raise RingMismatch(f'GF({c.p}) does not embed in Q[q]')
            return c

    def parse_coefficient(self, s: str) -> Coefficient:
        if 'q' in s:
            return self.coerce(QPoly.parse(s))
        else:
            return self.coerce(Rational(s))


Q = Ring('Q')
QQ = Ring('Q[q]')


def parse_ring(s: str) -> Ring:
    if s == Q.name:
        return Q
    elif s == QQ.name:
        return QQ
    elif s.startswith('GF:') and s[len('GF:'):].isdigit():
        p = check_prime(int(s[len('GF:'):]))
        return Ring(f'GF:{p}', p)
    else:
        raise UnsupportedRing(f'unknown ring {s!r}, expected Q, GF:p or Q[q]')
