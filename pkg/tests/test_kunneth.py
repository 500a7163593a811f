import random
from fractions import Fraction
from itertools import combinations
from math import factorial

import pytest

from surfcoh import (
    BigradedClass,
    CohClass,
    DegreeError,
    ExtForm,
    IntegralityError,
    LatticeClass,
    abelian_surface,
    chern_from_ch,
    slant,
    todd_factor,
)
from surfcoh.extalg import DUAL
from surfcoh.fuzz import random_surface
from surfcoh.kunneth import exp, mul
from surfcoh.riemann_roch import universal_exponent

from oracles import ch_of_line_sum, chern_of_line_sum


def _random_bigraded(rng, s, max_subsets=3, bound=2):
    n = 2 * s.q
    subsets = [
        t for d in range(0, min(n, 3) + 1) for t in combinations(range(1, n + 1), d)
    ]
    terms = {}
    for _ in range(rng.randint(1, max_subsets)):
        key = rng.choice(subsets)
        comp = CohClass(
            rng.randint(-bound, bound),
            tuple(rng.randint(-bound, bound) for _ in range(n)),
            tuple(rng.randint(-bound, bound) for _ in range(s.h2.rank)),
            tuple(rng.randint(-bound, bound) for _ in range(n)),
            rng.randint(-bound, bound),
        )
        terms[key] = comp
    return BigradedClass(s, terms)


def _tautological(s):
    n = 2 * s.q
    terms = {}
    for i in range(1, n + 1):
        vec = [0] * n
        vec[i - 1] = 1
        terms[(i,)] = CohClass.from_h1(s, tuple(vec))
    return BigradedClass(s, terms)


def test_tautological_square_has_minus_two():
    s = abelian_surface()
    f11 = _tautological(s)
    g = mul(f11, f11)
    for i, j in combinations(range(1, 5), 2):
        expect = CohClass.from_h2(s, -2 * s.w(i, j))
        assert g.coefficient((i, j)) == expect


def test_mul_unit_and_zero():
    s = abelian_surface()
    rng = random.Random(1)
    x = _random_bigraded(rng, s)
    assert mul(BigradedClass.unit(s), x) == x
    assert mul(x, BigradedClass.unit(s)) == x
    assert mul(BigradedClass.zero(s), x).is_zero()


def test_mul_associative_on_random_classes():
    rng = random.Random(9)
    surfaces = [abelian_surface()] + [random_surface(rng, max_q=2, max_rank=6) for _ in range(4)]
    for s in surfaces:
        for _ in range(6):
            x = _random_bigraded(rng, s)
            y = _random_bigraded(rng, s)
            z = _random_bigraded(rng, s)
            assert mul(mul(x, y), z) == mul(x, mul(y, z))


def test_mul_distributes():
    s = abelian_surface()
    rng = random.Random(3)
    x = _random_bigraded(rng, s)
    y = _random_bigraded(rng, s)
    z = _random_bigraded(rng, s)
    assert mul(x + y, z) == mul(x, z) + mul(y, z)


def test_exp_matches_repeated_multiplication():
    rng = random.Random(21)
    for _ in range(6):
        s = random_surface(rng, max_q=2, max_rank=6)
        m = LatticeClass(tuple(rng.randint(-2, 2) for _ in range(s.h2.rank)))
        f = universal_exponent(s, m)
        total = BigradedClass.zero(s)
        power = BigradedClass.unit(s)
        n = 0
        while not power.is_zero():
            total = total + power.scale(Fraction(1, factorial(n)))
            power = mul(power, f)
            n += 1
            assert n < 2 * s.q + 6
        assert exp(f) == total


def test_exp_rejects_nonnilpotent_scalar_part():
    s = abelian_surface()
    with pytest.raises(ValueError):
        exp(BigradedClass.unit(s))


def test_slant_extracts_top_fibre_degree():
    s = abelian_surface()
    x = BigradedClass(
        s,
        {
            (1, 2): CohClass.point(s, 7),
            (3,): CohClass.from_h1(s, (1, 0, 0, 0)),
            (): CohClass.point(s, -2),
        },
    )
    assert slant(x) == ExtForm(2, DUAL, {(1, 2): 7, (): -2})


def test_todd_factor_components():
    s = abelian_surface()
    td = todd_factor(s).coefficient(())
    assert td.d0 == 1
    assert all(v == 0 for v in td.d2)
    assert td.d4 == s.chi
    s2 = random_surface(random.Random(2))
    td2 = todd_factor(s2).coefficient(())
    assert td2.d0 == 1 and td2.d4 == s2.chi
    assert all(2 * v == -k for v, k in zip(td2.d2, s2.k.coords))


def test_chern_from_ch_line_bundle_oracle():
    rng = random.Random(13)
    q = 2
    pairs = list(combinations(range(1, 2 * q + 1), 2))
    for _ in range(12):
        roots = []
        for _ in range(rng.randint(1, 3)):
            terms = {
                p: rng.randint(-2, 2) for p in rng.sample(pairs, rng.randint(0, 3))
            }
            roots.append(ExtForm(q, DUAL, terms))
        ch = ch_of_line_sum(q, roots)
        assert chern_from_ch(ch) == chern_of_line_sum(q, roots).truncate(2 * q)


def test_chern_from_ch_rejects_bad_input():
    with pytest.raises(DegreeError):
        chern_from_ch(ExtForm.monomial(2, DUAL, (1,)))
    with pytest.raises(IntegralityError):
        chern_from_ch(ExtForm(2, DUAL, {(): Fraction(1, 2)}))
    # ch = 2 + w12 with no higher data: c1 = w12, integral; fine.
    total = chern_from_ch(ExtForm(2, DUAL, {(): 2, (1, 2): 1}))
    assert total.coefficient(()) == 1 and total.coefficient((1, 2)) == 1
