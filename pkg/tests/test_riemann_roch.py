import random
from fractions import Fraction
from itertools import combinations

import pytest

from surfcoh import (
    DegreeError,
    ExtForm,
    IntegralityError,
    LatticeClass,
    abelian_surface,
    ch_pushforward,
    closed_form_ch,
    difference_character,
    difference_chern,
    exp2,
    kappa,
    verify_character,
    xi,
)
from surfcoh.extalg import DUAL, PRIMAL
from surfcoh.fuzz import random_class, random_surface
from surfcoh.kunneth import mul
from surfcoh.riemann_roch import PushforwardCharacter, universal_exponent


def test_universal_exponent_shape():
    s = abelian_surface()
    m = LatticeClass((1, 0, 0, 0, 0, 0))
    f = universal_exponent(s, m)
    assert set(f.terms) == {(), (1,), (2,), (3,), (4,)}
    assert f.coefficient(()).d2 == m.coords
    z = universal_exponent(s, s.h2.zero())
    assert set(z.terms) == {(1,), (2,), (3,), (4,)}


def test_proof_anchor_coefficients():
    s = abelian_surface()
    m = LatticeClass((1, -2, 0, 3, 0, -1))
    f = universal_exponent(s, m)
    f2 = mul(f, f)
    f3 = mul(f2, f)
    f4 = mul(f3, f)
    # (1,1) squared: coefficient -2 on every (w_i ^ w_j) (x) W(i,j).
    for i, j in combinations(range(1, 5), 2):
        assert f2.coefficient((i, j)).d2 == (-2 * s.w(i, j)).coords
    # cube, (2,4) part: -6 (w_i ^ w_j) (x) (W(i,j).m) pt.
    for i, j in combinations(range(1, 5), 2):
        assert f3.coefficient((i, j)).d4 == -6 * s.h2.dot(s.w(i, j), m)
    # fourth power, (4,4) part: +24 on the top monomial.
    assert f4.coefficient((1, 2, 3, 4)).d4 == 24


def test_character_on_abelian_hand_values():
    s = abelian_surface()
    m = LatticeClass((-1, 0, 0, 0, 0, -1))
    ch = ch_pushforward(s, m)
    assert ch.d0 == s.chi + s.h2.expected_dimension(m, s.k)
    assert ch.d0 == 1
    assert ch.d4 == xi(s)
    assert closed_form_ch(s, m) == ch
    assert verify_character(s, m)


def test_character_zero_class():
    s = abelian_surface()
    ch = ch_pushforward(s, s.h2.zero())
    # chi = 0 and m = 0: rank 0, theta term 0, xi survives.
    assert ch.d0 == 0
    assert ch.d2.is_zero()
    assert ch.d4 == xi(s)


def test_verify_character_fuzzed():
    rng = random.Random(101)
    for _ in range(30):
        s = random_surface(rng)
        m = random_class(rng, s.h2)
        assert verify_character(s, m)


def test_difference_character_values():
    s = abelian_surface()
    m = LatticeClass((-1, 0, 0, 0, 0, -1))
    c = LatticeClass((1, 0, 0, 0, 0, 0))
    delta = difference_character(s, m, c)
    expected_rank = s.h2.dot(m, c) - (s.h2.dot(c, c) + s.h2.dot(c, s.k)) // 2
    assert delta.d0 == expected_rank == -1
    assert delta.d2 == -kappa(s, c)
    assert delta.d4.is_zero()


def test_difference_chern_is_pfaffian_exponential():
    rng = random.Random(55)
    for _ in range(15):
        s = random_surface(rng)
        m = random_class(rng, s.h2)
        c = random_class(rng, s.h2)
        total = difference_chern(s, m, c)
        assert total == exp2(kappa(s, c).scale(-1), 2 * s.q)


def test_pushforward_character_validation():
    zero2 = ExtForm.zero(2, DUAL)
    with pytest.raises(IntegralityError):
        PushforwardCharacter(Fraction(1, 2), zero2, zero2)
    with pytest.raises(ValueError):
        PushforwardCharacter(1, ExtForm.zero(2, PRIMAL), zero2)
    with pytest.raises(DegreeError):
        PushforwardCharacter(1, ExtForm.monomial(2, DUAL, (1,)), zero2)


def test_character_diff_lines():
    s = abelian_surface()
    m = LatticeClass((-1, 0, 0, 0, 0, -1))
    a = ch_pushforward(s, m)
    b = PushforwardCharacter(a.d0 + 1, a.d2, a.d4)
    lines = a.diff(b)
    assert lines and any("rank" in line or "0" in line for line in lines)
    assert a.diff(a) == ()
