import pytest

from surfcoh import Lattice, LatticeClass, ParityError

HYPER = Lattice(((0, 1), (1, 0)))
NEG = Lattice(((-1,),))
MIXED = Lattice(((2, 1), (1, -2)))


def test_gram_must_be_square_and_symmetric():
    with pytest.raises(ValueError):
        Lattice(((0, 1),))
    with pytest.raises(ValueError):
        Lattice(((0, 1), (2, 0)))


def test_class_arithmetic():
    x = LatticeClass((1, -2))
    y = LatticeClass((3, 4))
    assert (x + y).coords == (4, 2)
    assert (x - y).coords == (-2, -6)
    assert (-x).coords == (-1, 2)
    assert (2 * x).coords == (x * 2).coords == (2, -4)
    assert LatticeClass((0, 0)).is_zero() and not x.is_zero()


def test_dot_symmetric_bilinear():
    x = LatticeClass((1, -2))
    y = LatticeClass((3, 4))
    z = LatticeClass((0, 5))
    assert HYPER.dot(x, y) == HYPER.dot(y, x)
    assert HYPER.dot(x + z, y) == HYPER.dot(x, y) + HYPER.dot(z, y)
    assert HYPER.dot(3 * x, y) == 3 * HYPER.dot(x, y)
    assert HYPER.dot(LatticeClass((1, 0)), LatticeClass((0, 1))) == 1


def test_characteristic_is_a_quadratic_condition():
    # x.x == k.x mod 2 for every x, not only coordinatewise on the basis.
    k = LatticeClass((0, 2))
    assert MIXED.is_characteristic(k)
    for a in range(-4, 5):
        for b in range(-4, 5):
            x = LatticeClass((a, b))
            assert MIXED.dot(x, x) % 2 == MIXED.dot(k, x) % 2
    assert not MIXED.is_characteristic(LatticeClass((1, 0)))
    assert HYPER.is_characteristic(LatticeClass((2, -2)))
    assert not HYPER.is_characteristic(LatticeClass((1, 0)))


def test_expected_dimension():
    assert NEG.expected_dimension(LatticeClass((1,)), LatticeClass((3,))) == 1
    assert HYPER.expected_dimension(LatticeClass((1, 1)), LatticeClass((0, 0))) == 1
    with pytest.raises(ParityError):
        HYPER.expected_dimension(LatticeClass((1, 1)), LatticeClass((1, 0)))


def test_arithmetic_genus():
    # A class with c.c = 0 and c.k = -2 has genus 0.
    k = LatticeClass((-2, -2))
    c = LatticeClass((1, 0))
    assert HYPER.dot(c, c) == 0 and HYPER.dot(c, k) == -2
    assert HYPER.arithmetic_genus(c, k) == 0
    assert HYPER.arithmetic_genus(LatticeClass((1, 1)), LatticeClass((0, 0))) == 2
    with pytest.raises(ParityError):
        HYPER.arithmetic_genus(LatticeClass((1, 1)), LatticeClass((1, 0)))


@pytest.mark.parametrize(
    "lattice,k",
    [
        (NEG, LatticeClass((1,))),
        (HYPER, LatticeClass((2, -2))),
        (MIXED, LatticeClass((0, 2))),
    ],
)
def test_genus_identities_small_box(lattice, k):
    pts = _box(lattice.rank, 3)
    for m in pts:
        for c in pts:
            assert lattice.genus_identity_down(m, c, k)
            assert lattice.genus_identity_up(m, c, k)


def _box(rank, bound):
    out = [()]
    for _ in range(rank):
        out = [t + (v,) for t in out for v in range(-bound, bound + 1)]
    return [LatticeClass(t) for t in out]
