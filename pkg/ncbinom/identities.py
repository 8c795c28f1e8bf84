from __future__ import annotations

import math
from typing import Dict
from typing import Tuple

from ncbinom.errors import DivisionNotExact
from ncbinom.freepoly import FreePoly
from ncbinom.freepoly import power
from ncbinom.freepoly import sh_word_basis
from ncbinom.rings import cyclotomic
from ncbinom.rings import q_binomial
from ncbinom.rings import QPoly
from ncbinom.rings import qpoly_exact_div
from ncbinom.shuffle import multidegrees
from ncbinom.words import Word

G, H = 1, 2


def faa_word(k: int) -> Word:
    """a_k = g h^k"""
    return (G,) + (H,) * k


def faa_sum(m: int, n: int) -> FreePoly:
    """sum of a_i0 a_i1 ... a_in over i0 + ... + in = m"""
    ret = FreePoly.zero(2)
    for composition in multidegrees(n + 1, m):
        w = sum((faa_word(i) for i in composition.counts), ())
        ret = ret + FreePoly.word(w, 2)
    return ret


def faa_di_bruno_check(m: int, n: int) -> bool:
    """g SH_{m,n}(h, g) equals the composition sum of the a_k."""
    lhs = FreePoly.letter(G, 2) * sh_word_basis(m, n)
    return lhs == faa_sum(m, n)


def faa_mass(m: int, n: int) -> int:
    return math.comb(m + n, n)


def faa_mass_check(m: int, n: int) -> bool:
    return sum(c for _, c in faa_sum(m, n)) == faa_mass(m, n)


QPlanePoly = Dict[Tuple[int, int], QPoly]


def q_plane_normalize(w: Word) -> tuple[QPoly, tuple[int, int]]:
    """Normal order h^i g^j under g h = q h g; each g left of an h costs q."""
    exponent = 0
    gs_seen = 0
    for letter in w:
        if letter == G:
            gs_seen += 1
        else:
            exponent += gs_seen
    return QPoly.q_power(exponent), (w.count(H), w.count(G))


def q_plane_project(f: FreePoly) -> QPlanePoly:
    ret: QPlanePoly = {}
    for w, c in f:
        factor, key = q_plane_normalize(w)
        ret[key] = ret.get(key, QPoly()) + factor * c
    return {key: c for key, c in ret.items() if c}


def q_binomial_theorem_check(n: int) -> bool:
    """(g + h)^n = sum_j binom(n, j)_q h^(n-j) g^j when g h = q h g."""
    g = FreePoly.letter(G, 2)
    h = FreePoly.letter(H, 2)
    expected = {(n - j, j): q_binomial(n, j) for j in range(n + 1)}
    return q_plane_project(power(g + h, n)) == expected


def qbinom_cyclotomic_vanish(n: int) -> bool:
    if n < 2:
        raise ValueError(f'need n >= 2, got {n}')
    phi = cyclotomic(n)
    for i in range(1, n):
        try:
            qpoly_exact_div(q_binomial(n, i), phi)
        except DivisionNotExact:
            return False
        if q_plane_project(sh_word_basis(i, n - i)) != {
                (i, n - i): q_binomial(n, i),
        }:
            return False
    return True
