import random

import pytest

from surfcoh import (
    ExtForm,
    Lattice,
    LatticeClass,
    ParityError,
    SurfaceDataError,
    SurfaceTopology,
    abelian_surface,
    kappa,
    q0_surface,
    theta,
    xi,
)
from surfcoh.extalg import DUAL
from surfcoh.fuzz import random_class, random_surface


def test_abelian_surface_is_valid():
    s = abelian_surface()
    assert s.q == 2 and s.h2.rank == 6 and s.chi == 0
    assert s.validate() == []
    s.require_valid()


def test_abelian_cup_and_quadruple_values():
    s = abelian_surface()
    # b_12 . b_34 = +1, b_13 . b_24 = -1, b_14 . b_23 = +1.
    assert s.quad(1, 2, 3, 4) == 1
    assert s.quad(1, 3, 2, 4) == -1
    assert s.quad(1, 4, 2, 3) == 1
    assert s.quad(1, 2, 1, 2) == 0
    assert s.w(2, 1) == -s.w(1, 2)


def test_kappa_theta_xi_on_abelian():
    s = abelian_surface()
    c = LatticeClass((1, 0, 0, 0, 0, 0))
    assert kappa(s, c) == ExtForm.monomial(2, DUAL, (3, 4))
    assert xi(s) == ExtForm.monomial(2, DUAL, (1, 2, 3, 4))
    assert theta(s, 2 * c) == ExtForm.monomial(2, DUAL, (3, 4))
    with pytest.raises(ParityError):
        theta(s, c)


def test_kappa_linear_in_c():
    s = abelian_surface()
    rng = random.Random(5)
    for _ in range(10):
        a = random_class(rng, s.h2)
        b = random_class(rng, s.h2)
        assert kappa(s, a + b) == kappa(s, a) + kappa(s, b)


def test_validate_flags_noncharacteristic_k():
    s = abelian_surface()
    bad = SurfaceTopology(s.q, s.chi, s.h2, LatticeClass((1, 0, 0, 0, 0, 0)), s.cup, True)
    problems = bad.validate()
    assert problems and any("characteristic" in p for p in problems)
    with pytest.raises(SurfaceDataError):
        bad.require_valid()


def test_validate_flags_broken_cup_table():
    s = abelian_surface()
    # Scaling one cup image breaks the alternating quadruple identity.
    cup = dict(s.cup)
    cup[(1, 2)] = 2 * cup[(1, 2)]
    bad = SurfaceTopology(s.q, s.chi, s.h2, s.k, cup, True)
    assert bad.validate()
    # A non-isotropic cup image breaks the repeated-index identity.
    cup = dict(s.cup)
    cup[(1, 2)] = LatticeClass((1, 0, 0, 0, 0, 1))
    bad = SurfaceTopology(s.q, s.chi, s.h2, s.k, cup, True)
    assert any("repeated" in p or "isotropic" in p or "zero" in p for p in bad.validate())


def test_cup_table_normalisation():
    s = abelian_surface()
    with pytest.raises(ValueError):
        SurfaceTopology(s.q, s.chi, s.h2, s.k, {(2, 1): s.cup[(1, 2)]})
    with pytest.raises(ValueError):
        SurfaceTopology(s.q, s.chi, s.h2, s.k, {(1, 9): s.cup[(1, 2)]})
    trimmed = SurfaceTopology(s.q, s.chi, s.h2, s.k, {(1, 2): s.h2.zero()})
    assert trimmed.cup == {}


def test_q0_surface():
    s = q0_surface(((0, 1), (1, 0)), (0, 0), chi=2, pg_positive=True)
    assert s.q == 0 and s.validate() == []
    assert kappa(s, LatticeClass((1, 1))).is_zero()
    assert xi(s).is_zero()


def test_fuzzed_surfaces_are_valid_and_varied():
    rng = random.Random(77)
    seen_q = set()
    for _ in range(40):
        s = random_surface(rng)
        assert s.validate() == []
        assert s.q <= 3 and s.h2.rank <= 8
        assert all(abs(e) <= 3 for row in s.h2.gram for e in row)
        seen_q.add(s.q)
    assert {0, 1, 2, 3} <= seen_q


def test_theta_integrality_on_fuzzed_surfaces():
    # dot(W(i,j), k) is even on valid data, so theta(2m - k) is integral.
    rng = random.Random(78)
    for _ in range(25):
        s = random_surface(rng)
        m = random_class(rng, s.h2)
        theta(s, 2 * m - s.k)
