from __future__ import annotations

import functools
import itertools
import math
from typing import Callable
from typing import Iterable
from typing import Mapping
from typing import NamedTuple
from typing import Protocol

import sympy
from sympy.utilities.iterables import partitions

from ncbinom.bell import bell_total_words
from ncbinom.errors import NotASigmaDerivation
from ncbinom.errors import NotUnital
from ncbinom.freepoly import FreePoly
from ncbinom.freepoly import power
from ncbinom.rings import Coefficient
from ncbinom.rings import q_binomial
from ncbinom.rings import QPoly
from ncbinom.rings import specialize
from ncbinom.words import Word


class Operator(Protocol):
    def __call__(self, f: FreePoly) -> FreePoly: ...


def _linear(f: FreePoly, word_image: Callable[[Word], FreePoly]) -> FreePoly:
    ret = FreePoly.zero(f.alphabet)
    for w, c in f:
        ret = ret + word_image(w).scale(c)
    return ret


class Identity(NamedTuple):
    def __call__(self, f: FreePoly) -> FreePoly:
        return f


class Endomorphism(NamedTuple):
    """An algebra map given by the images of the letters.

    `unit` is the image of the empty word; a unital map leaves it unset.
    """

    images: Mapping[int, FreePoly]
    unit: FreePoly | None = None

    def word_image(self, w: Word, alphabet: int) -> FreePoly:
        if not w:
            if self.unit is None:
                return FreePoly.one(alphabet)
            return self.unit
        ret = FreePoly.one(alphabet)
        for letter in w:
            if letter in self.images:
                ret = ret * self.images[letter]
            else:
                ret = ret * FreePoly.letter(letter, alphabet)
        return ret

    def __call__(self, f: FreePoly) -> FreePoly:
        return _linear(f, lambda w: self.word_image(w, f.alphabet))


class GradingSigma(NamedTuple):
    """w -> q^|w| w on homogeneous w."""

    q: Coefficient = QPoly.q_power(1)

    def __call__(self, f: FreePoly) -> FreePoly:
        return FreePoly(
            {w: c * self.q ** len(w) for w, c in f}, f.alphabet,
        )


class AdSigma(NamedTuple):
    """ad_sigma x (w) = x w - sigma(w) x"""

    x: FreePoly
    sigma: Operator

    def __call__(self, f: FreePoly) -> FreePoly:
        return self.x * f - self.sigma(f) * self.x


class LeftMultiplication(NamedTuple):
    element: FreePoly

    def __call__(self, f: FreePoly) -> FreePoly:
        return self.element * f


class OperatorSum(NamedTuple):
    parts: tuple[Operator, ...]

    def __call__(self, f: FreePoly) -> FreePoly:
        ret = FreePoly.zero(f.alphabet)
        for op in self.parts:
            ret = ret + op(f)
        return ret


class Composition(NamedTuple):
    """parts[0] o parts[1] o ... so the last part acts first."""

    parts: tuple[Operator, ...]

    def __call__(self, f: FreePoly) -> FreePoly:
        for op in reversed(self.parts):
            f = op(f)
        return f


class SigmaDerivation(NamedTuple):
    """Extends letter images by delta(uv) = delta(u) v + sigma(u) delta(v)."""

    images: Mapping[int, FreePoly]
    sigma: Operator

    def word_image(self, w: Word, alphabet: int) -> FreePoly:
        ret = FreePoly.zero(alphabet)
        for i, letter in enumerate(w):
            image = self.images.get(letter)
            if image is None:
                continue
            left = self.sigma(FreePoly.word(w[:i], alphabet))
            ret = ret + left * image * FreePoly.word(w[i + 1:], alphabet)
        return ret

    def __call__(self, f: FreePoly) -> FreePoly:
        return _linear(f, lambda w: self.word_image(w, f.alphabet))


def sigma_power(sigma: Operator, m: int) -> Operator:
    if m == 0:
        return Identity()
    elif m == 1:
        return sigma
    else:
        return Composition((sigma,) * m)


def _endomorphisms(op: object) -> Iterable[Operator]:
    if isinstance(op, (Identity, Endomorphism, GradingSigma)):
        yield op
    elif isinstance(op, (AdSigma, SigmaDerivation)):
        yield from _endomorphisms(op.sigma)
    elif isinstance(op, (OperatorSum, Composition)):
        for part in op.parts:
            yield from _endomorphisms(part)


def check_unital(op: Operator, alphabet: int) -> None:
    one = FreePoly.one(alphabet)
    for sigma in _endomorphisms(op):
        if sigma(one) != one:
            raise NotUnital(f'{sigma!r} does not send 1 to 1')


def apply_operator(op: Operator, f: FreePoly) -> FreePoly:
    check_unital(op, f.alphabet)
    return op(f)


def word_basket(alphabet: int, max_len: int = 2) -> list[FreePoly]:
    """Every word of length <= max_len, the empty word included."""
    return [
        FreePoly.word(w, alphabet)
        for n in range(max_len + 1)
        for w in itertools.product(range(1, alphabet + 1), repeat=n)
    ]


def is_multiplicative(
        sigma: Operator,
        alphabet: int,
        max_len: int = 2,
) -> bool:
    basket = word_basket(alphabet, max_len)
    return all(
        sigma(u * v) == sigma(u) * sigma(v) for u in basket for v in basket
    )


def check_sigma_derivation(
        delta: Operator,
        sigma: Operator,
        alphabet: int,
        max_len: int = 2,
) -> None:
    basket = word_basket(alphabet, max_len)
    for u, v in itertools.product(basket, repeat=2):
        if delta(u * v) != delta(u) * v + sigma(u) * delta(v):
            raise NotASigmaDerivation(
                f'the Leibniz rule fails on {u!r} and {v!r}',
            )


def d_operator(x: FreePoly, y: FreePoly, sigma: Operator) -> Operator:
    """ad_sigma x + y"""
    return OperatorSum((AdSigma(x, sigma), LeftMultiplication(y)))


def d_m(x: FreePoly, y: FreePoly, sigma: Operator, m: int) -> Operator:
    sigma_m = sigma_power(sigma, m)
    return d_operator(sigma_m(x), sigma_m(y), sigma)


def sh_hat_apply(
        k: int,
        n_minus_k: int,
        x: FreePoly,
        y: FreePoly,
        sigma: Operator,
        start: FreePoly | None = None,
) -> FreePoly:
    """SH_{k,n-k}(ad_sigma x + y, sigma) applied to `start` (default 1),
    through SH_{i,j} = sigma SH_{i,j-1} + D SH_{i-1,j}."""
    check_unital(sigma, x.alphabet)
    if start is None:
        start = FreePoly.one(x.alphabet)
    d = d_operator(x, y, sigma)

    @functools.lru_cache(maxsize=None)
    def _value(i: int, j: int) -> FreePoly:
        if i == 0 and j == 0:
            return start
        ret = FreePoly.zero(x.alphabet)
        if j:
            ret = ret + sigma(_value(i, j - 1))
        if i:
            ret = ret + d(_value(i - 1, j))
        return ret

    return _value(k, n_minus_k)


def _generators(alphabet: int = 2) -> tuple[FreePoly, FreePoly]:
    return FreePoly.letter(1, alphabet), FreePoly.letter(2, alphabet)


def theorem_b_verify(n: int, sigma: Operator) -> bool:
    """(x+y)^n = sum_k SH_{k,n-k}(1) x^(n-k) for x, y the letters 1, 2."""
    x, y = _generators()
    rhs = FreePoly.zero(2)
    for k in range(n + 1):
        rhs = rhs + sh_hat_apply(k, n - k, x, y, sigma) * power(x, n - k)
    return rhs == power(x + y, n)


def sh_hat_identity_holds(n: int) -> bool:
    """With sigma = id every SH_{k,n-k}(1) is binom(n, k) (ad x + y)^k (1)."""
    x, y = _generators()
    return all(
        sh_hat_apply(k, n - k, x, y, Identity()) ==
        bell_total_words(k).scale(math.comb(n, k))
        for k in range(n + 1)
    )


def d_m_factorization_check(
        n: int,
        k: int,
        sigma: Operator,
        max_len: int = 1,
) -> bool:
    x, y = _generators()
    tail = sigma_power(sigma, n - k)
    for f in word_basket(2, max_len):
        expected = sh_hat_apply(k, n - k, x, y, sigma, start=f)
        actual = FreePoly.zero(2)
        for ms in itertools.combinations_with_replacement(range(n - k + 1), k):
            ops = tuple(d_m(x, y, sigma, m) for m in ms) + (tail,)
            actual = actual + Composition(ops)(f)
        if actual != expected:
            return False
    return True


def shuffle_sigma_iso_check(n: int, k: int, sigma: Operator) -> bool:
    """SH_{k,n-k}(1) as a sum of sigma^(m1) D0 sigma^(m2-m1) D0 ... D0 (1),
    which needs sigma invertible but only nonnegative powers of it."""
    x, y = _generators()
    d0 = d_operator(x, y, sigma)
    one = FreePoly.one(2)
    actual = FreePoly.zero(2)
    for ms in itertools.combinations_with_replacement(range(n - k + 1), k):
        ops: list[Operator] = []
        previous = 0
        for m in ms:
            ops.extend((sigma_power(sigma, m - previous), d0))
            previous = m
        actual = actual + Composition(tuple(ops))(one)
    return actual == sh_hat_apply(k, n - k, x, y, sigma)


def sigma_adjoint_commutation_check(
        sigma: Operator,
        m: int,
        max_len: int = 2,
) -> bool:
    """sigma^m o (ad_sigma x + y) equals
    (ad_sigma(sigma^m x) + sigma^m y) o sigma^m"""
    x, y = _generators()
    sigma_m = sigma_power(sigma, m)
    lhs = Composition((sigma_m, d_operator(x, y, sigma)))
    rhs = Composition((d_m(x, y, sigma, m), sigma_m))
    return all(lhs(f) == rhs(f) for f in word_basket(2, max_len))


def ad_q(f: FreePoly) -> FreePoly:
    """x w - q^|w| w x with x the letter 1."""
    x = FreePoly.letter(1, f.alphabet)
    return AdSigma(x, GradingSigma())(f)


@functools.lru_cache(maxsize=None)
def qbell(n: int) -> FreePoly:
    """(ad_q x + y)^n (1)"""
    if n == 0:
        return FreePoly.one(2)
    below = qbell(n - 1)
    return ad_q(below) + FreePoly.letter(2, 2) * below


@functools.lru_cache(maxsize=None)
def qbell_partial(n: int, k: int) -> FreePoly:
    """B_{n,k,q} = y B_{n-1,k-1,q} + ad_q x (B_{n-1,k,q})"""
    if n == 0:
        return FreePoly.one(2) if k == 0 else FreePoly.zero(2)
    elif k == 0 or k > n:
        return FreePoly.zero(2)
    return (
        FreePoly.letter(2, 2) * qbell_partial(n - 1, k - 1) +
        ad_q(qbell_partial(n - 1, k))
    )


@functools.lru_cache(maxsize=None)
def q_derivative(j: int) -> FreePoly:
    """y^(0) = y and y^(j) = x y^(j-1) - q^j y^(j-1) x"""
    if j == 0:
        return FreePoly.letter(2, 2)
    return ad_q(q_derivative(j - 1))


def qbell_derivative_recursion(n: int, k: int, offset: int = 1) -> FreePoly:
    """sum_l binom(n-1, l)_q B_{l,k-1,q} y^(n-offset-l)

    offset=1 reproduces `qbell_partial`; offset=0 is the literal index of the
    printed recursion and does not.
    """
    if n == 0:
        return FreePoly.one(2) if k == 0 else FreePoly.zero(2)
    elif k == 0 or k > n:
        return FreePoly.zero(2)
    ret = FreePoly.zero(2)
    for ell in range(k - 1, n):
        order = n - offset - ell
        if order < 0:
            continue
        ret = ret + (
            qbell_partial(ell, k - 1) * q_derivative(order)
        ).scale(q_binomial(n - 1, ell))
    return ret


def qbell_consistent(n: int) -> bool:
    total = FreePoly.zero(2)
    for k in range(n + 1):
        total = total + qbell_partial(n, k)
    return total == qbell(n)


def binomial_q_verify(n: int) -> bool:
    """(x+y)^n = sum_k binom(n, k)_q B_{k,q} x^(n-k)"""
    x, y = _generators()
    rhs = FreePoly.zero(2)
    for k in range(n + 1):
        rhs = rhs + (qbell(k) * power(x, n - k)).scale(q_binomial(n, k))
    return rhs == power(x + y, n)


def qbell_at_one(n: int) -> FreePoly:
    return qbell(n).map_coefficients(lambda c: specialize(c, 1))


def ore_binomial(
        n: int,
        sigma: Operator,
        delta: Operator,
        y: FreePoly,
        max_len: int = 2,
) -> list[FreePoly]:
    """Coefficients of x^0, ..., x^n in (x+y)^n when
    x y = sigma(y) x + delta(y), entry i being
    SH_{n-i,i}(delta + y, sigma)(1)."""
    alphabet = y.alphabet
    check_unital(sigma, alphabet)
    check_sigma_derivation(delta, sigma, alphabet, max_len)
    d = OperatorSum((delta, LeftMultiplication(y)))

    @functools.lru_cache(maxsize=None)
    def _value(i: int, j: int) -> FreePoly:
        if i == 0 and j == 0:
            return FreePoly.one(alphabet)
        ret = FreePoly.zero(alphabet)
        if j:
            ret = ret + sigma(_value(i, j - 1))
        if i:
            ret = ret + d(_value(i - 1, j))
        return ret

    return [_value(n - i, i) for i in range(n + 1)]


def classical_ore_model(n: int) -> bool:
    """In Q[y0, y1, ...] with delta(y_i) = y_{i+1}, (delta + y0)^k (1) has the
    classical Bell coefficients k!/prod(r_i! (i!)^r_i) for every k <= n."""
    ys = sympy.symbols(f'y0:{n + 1}')

    def _delta(p: sympy.Expr) -> sympy.Expr:
        return sum(
            (sympy.diff(p, ys[i]) * ys[i + 1] for i in range(n)),
            sympy.Integer(0),
        )

    value: sympy.Expr = sympy.Integer(1)
    for k in range(n + 1):
        if k:
            value = sympy.expand(_delta(value) + ys[0] * value)
        expected: sympy.Expr = sympy.Integer(1) if k == 0 else sympy.Integer(0)
        if k:
            for part in partitions(k):
                coeff = sympy.Integer(math.factorial(k))
                term: sympy.Expr = sympy.Integer(1)
                for size, mult in part.items():
                    coeff /= (
                        math.factorial(mult) * math.factorial(size) ** mult
                    )
                    term *= ys[size - 1] ** mult
                expected += coeff * term
        if sympy.expand(value - expected) != 0:
            return False
    return True
