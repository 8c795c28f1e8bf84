from __future__ import annotations

import math

import pytest

from ncbinom.bell import bell_total_words
from ncbinom.errors import NotASigmaDerivation
from ncbinom.errors import NotUnital
from ncbinom.freepoly import FreePoly
from ncbinom.qsigma import ad_q
from ncbinom.qsigma import AdSigma
from ncbinom.qsigma import apply_operator
from ncbinom.qsigma import binomial_q_verify
from ncbinom.qsigma import check_sigma_derivation
from ncbinom.qsigma import classical_ore_model
from ncbinom.qsigma import Composition
from ncbinom.qsigma import d_m_factorization_check
from ncbinom.qsigma import Endomorphism
from ncbinom.qsigma import GradingSigma
from ncbinom.qsigma import Identity
from ncbinom.qsigma import is_multiplicative
from ncbinom.qsigma import OperatorSum
from ncbinom.qsigma import ore_binomial
from ncbinom.qsigma import q_derivative
from ncbinom.qsigma import qbell
from ncbinom.qsigma import qbell_at_one
from ncbinom.qsigma import qbell_consistent
from ncbinom.qsigma import qbell_derivative_recursion
from ncbinom.qsigma import qbell_partial
from ncbinom.qsigma import sh_hat_apply
from ncbinom.qsigma import sh_hat_identity_holds
from ncbinom.qsigma import shuffle_sigma_iso_check
from ncbinom.qsigma import sigma_adjoint_commutation_check
from ncbinom.qsigma import sigma_power
from ncbinom.qsigma import SigmaDerivation
from ncbinom.qsigma import theorem_b_verify
from ncbinom.qsigma import word_basket
from testing.util import words

X = FreePoly.letter(1, 2)
Y = FreePoly.letter(2, 2)
GENERIC = Endomorphism({1: X.scale(2), 2: X + Y})
SIGMAS = (Identity(), GradingSigma(), GENERIC)


def test_endomorphism_images():
    sigma = Endomorphism({1: X.scale(2)})
    assert sigma(words('E(12)')) == words('2*E(12)')
    assert sigma(FreePoly.one(2)) == FreePoly.one(2)
    assert GENERIC(words('E(21)')) == words('2*E(11) + 2*E(21)')


def test_grading_sigma():
    assert GradingSigma(2)(words('E(12) + E(1) + 3')) == words(
        '4*E(12) + 2*E(1) + 3',
    )


def test_composition_applies_last_part_first():
    op = Composition((AdSigma(X, Identity()), Endomorphism({2: X})))
    # sigma sends 2 to 1, then ad x kills it
    assert op(Y) == FreePoly.zero(2)


def test_sigma_power():
    sigma = GradingSigma(2)
    assert sigma_power(sigma, 0)(X) == X
    assert sigma_power(sigma, 3)(X) == X.scale(8)


def test_word_basket():
    assert len(word_basket(2, 2)) == 7
    assert word_basket(2, 0) == [FreePoly.one(2)]


def test_is_multiplicative():
    assert is_multiplicative(GradingSigma(), 2)
    assert is_multiplicative(GENERIC, 2)
    assert not is_multiplicative(OperatorSum((Identity(), Identity())), 2)


def test_non_unital_endomorphism_is_rejected():
    sigma = Endomorphism({}, FreePoly.one(2).scale(2))
    with pytest.raises(NotUnital):
        apply_operator(AdSigma(X, sigma), Y)
    with pytest.raises(NotUnital):
        sh_hat_apply(1, 1, X, Y, sigma)


def test_sigma_derivation_leibniz_rule():
    sigma = GradingSigma()
    check_sigma_derivation(SigmaDerivation({1: Y}, sigma), sigma, 2)
    check_sigma_derivation(AdSigma(X, sigma), sigma, 2)


def test_sigma_derivation_with_the_wrong_sigma():
    delta = SigmaDerivation({1: Y}, GradingSigma())
    with pytest.raises(NotASigmaDerivation):
        check_sigma_derivation(delta, Identity(), 2)


@pytest.mark.parametrize('sigma', SIGMAS)
def test_theorem_b(sigma):
    for n in range(5):
        assert theorem_b_verify(n, sigma)


def test_sh_hat_apply_small():
    # SH_{1,0}(1) = (ad x + y)(1) = y
    assert sh_hat_apply(1, 0, X, Y, Identity()) == Y
    assert sh_hat_apply(0, 2, X, Y, GradingSigma()) == FreePoly.one(2)


@pytest.mark.parametrize('n', range(5))
def test_sh_hat_identity(n):
    assert sh_hat_identity_holds(n)


@pytest.mark.parametrize('sigma', SIGMAS)
def test_d_m_factorization(sigma):
    assert d_m_factorization_check(3, 1, sigma)
    assert d_m_factorization_check(3, 2, sigma)


@pytest.mark.parametrize('sigma', SIGMAS)
def test_shuffle_sigma_iso(sigma):
    assert shuffle_sigma_iso_check(3, 1, sigma)
    assert shuffle_sigma_iso_check(4, 2, sigma)


@pytest.mark.parametrize('m', (0, 1, 2))
def test_sigma_adjoint_commutation(m):
    assert sigma_adjoint_commutation_check(GradingSigma(), m)
    assert sigma_adjoint_commutation_check(GENERIC, m)


def test_ad_q_and_q_derivative():
    assert ad_q(Y) == words('E(12) - q*E(21)')
    assert q_derivative(0) == Y
    assert q_derivative(1) == ad_q(Y)


def test_qbell_small():
    assert qbell(0) == FreePoly.one(2)
    assert qbell(1) == Y
    assert qbell(2) == words('E(12) - q*E(21) + E(22)')


def test_qbell_partial_small():
    assert qbell_partial(2, 2) == words('E(22)')
    assert qbell_partial(2, 1) == ad_q(Y)
    assert qbell_partial(2, 0) == FreePoly.zero(2)


@pytest.mark.parametrize('n', range(6))
def test_qbell_consistent(n):
    assert qbell_consistent(n)


def test_qbell_derivative_recursion():
    for n in range(5):
        for k in range(n + 1):
            expected = qbell_partial(n, k)
            assert qbell_derivative_recursion(n, k) == expected


def test_qbell_derivative_recursion_without_offset():
    ret = qbell_derivative_recursion(2, 1, offset=0)
    assert ret == q_derivative(2)
    assert ret != qbell_partial(2, 1)


@pytest.mark.parametrize('n', range(6))
def test_binomial_q(n):
    assert binomial_q_verify(n)


@pytest.mark.parametrize('n', range(6))
def test_qbell_at_one_is_classical(n):
    assert qbell_at_one(n) == bell_total_words(n)


def test_ore_binomial_commutative_case():
    n = 4
    ret = ore_binomial(n, Identity(), AdSigma(X, Identity()), Y)
    assert len(ret) == n + 1
    for i, coefficient in enumerate(ret):
        expected = bell_total_words(n - i).scale(math.comb(n, i))
        assert coefficient == expected


def test_ore_binomial_q_case_top_coefficient():
    sigma = GradingSigma()
    ret = ore_binomial(2, sigma, AdSigma(X, sigma), Y)
    assert ret[2] == FreePoly.one(2)
    assert ret[0] == qbell(2)


def test_ore_binomial_rejects_bad_delta():
    delta = SigmaDerivation({1: Y}, GradingSigma())
    with pytest.raises(NotASigmaDerivation):
        ore_binomial(2, Identity(), delta, Y)


def test_classical_ore_model():
    assert classical_ore_model(5)
