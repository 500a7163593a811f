"""Exact integer arithmetic on a model of the degree-2 intersection lattice.

A surface's H^2 is modelled by a finitely generated free lattice with a
symmetric integer Gram matrix.  Everything here is plain arbitrary-precision
integer arithmetic; no floats, no numerics.  The lattice is not required to
be unimodular or nondegenerate, so "characteristic" is always meant in the
testable sense: dot(x, x) = dot(x, k) mod 2 for every basis vector x (the
test extends to the whole lattice by linearity of x -> x.x - x.k mod 2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParityError


@dataclass(frozen=True)
class LatticeClass:
    """An element of the lattice, stored by integer coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> "LatticeClass":
        return cls((0,) * rank)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "LatticeClass") -> "LatticeClass":
        self._check(other)
        return LatticeClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeClass") -> "LatticeClass":
        self._check(other)
        return LatticeClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeClass":
        return LatticeClass(tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "LatticeClass":
        return LatticeClass(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check(self, other: "LatticeClass") -> None:
        if len(self.coords) != len(other.coords):
            raise ValueError(
                f"rank mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __repr__(self) -> str:
        return f"LatticeClass({self.coords!r})"


def _as_coords(x) -> tuple[int, ...]:
    if isinstance(x, LatticeClass):
        return x.coords
    return tuple(int(c) for c in x)


@dataclass(frozen=True)
class Lattice:
    """A free Z-lattice with a symmetric integer pairing.

    gram[i][j] is the pairing of the i-th and j-th basis vectors.
    """

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(e) for e in row) for row in self.gram)
        object.__setattr__(self, "gram", rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"gram matrix not symmetric at ({i},{j})")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def element(self, *coords: int) -> LatticeClass:
        x = LatticeClass(tuple(coords))
        self._check_len(x)
        return x

    def zero(self) -> LatticeClass:
        return LatticeClass.zero(self.rank)

    def _check_len(self, x) -> tuple[int, ...]:
        coords = _as_coords(x)
        if len(coords) != self.rank:
            raise ValueError(f"class has {len(coords)} coords, lattice rank is {self.rank}")
        return coords

    def dot(self, x, y) -> int:
        """Intersection pairing x . y = x^T gram y, exactly."""
        xc = self._check_len(x)
        yc = self._check_len(y)
        total = 0
        for i, xi in enumerate(xc):
            if xi:
                row = self.gram[i]
                total += xi * sum(row[j] * yj for j, yj in enumerate(yc) if yj)
        return total

    def is_characteristic(self, k) -> bool:
        """Whether dot(x, x) = dot(x, k) mod 2 for every basis vector x."""
        kc = self._check_len(k)
        for i in range(self.rank):
            gk_i = sum(self.gram[i][j] * kc[j] for j in range(self.rank))
            if (self.gram[i][i] - gk_i) % 2:
                return False
        return True

    def expected_dimension(self, m, k) -> int:
        """m.(m - k)/2, raising ParityError when the product is odd.

        Oddness signals a non-characteristic k or otherwise inconsistent data.
        """
        doubled = self.dot(m, _as_coords_sub(m, k))
        if doubled % 2:
            raise ParityError(f"m.(m-k) = {doubled} is odd; is k characteristic?")
        return doubled // 2

    def arithmetic_genus(self, c, k) -> int:
        """(c.c + c.k)/2 + 1, raising ParityError on odd c.c + c.k."""
        doubled = self.dot(c, c) + self.dot(c, k)
        if doubled % 2:
            raise ParityError(f"c.c + c.k = {doubled} is odd; is k characteristic?")
        return doubled // 2 + 1

    def genus_identity_down(self, m, c, k) -> bool:
        """Check (m-c).(m-c-k)/2 == m.(m-k)/2 + p_a(c) - 1 - m.c.

        Evaluated with both sides doubled, so no divisibility assumptions
        are needed.  This is an identity of the bilinear form and must hold
        for every m, c, k.
        """
        mc = LatticeClass(self._check_len(m))
        cc = LatticeClass(self._check_len(c))
        kc = LatticeClass(self._check_len(k))
        lhs2 = self.dot(mc - cc, mc - cc - kc)
        rhs2 = self.dot(mc, mc - kc) + self.dot(cc, cc) + self.dot(cc, kc) - 2 * self.dot(mc, cc)
        return lhs2 == rhs2

    def genus_identity_up(self, m, c, k) -> bool:
        """The (m+c) twin: (m+c).(m+c-k)/2 == m.(m-k)/2 + p_a(c) - 1 - (k-m).c."""
        mc = LatticeClass(self._check_len(m))
        cc = LatticeClass(self._check_len(c))
        kc = LatticeClass(self._check_len(k))
        lhs2 = self.dot(mc + cc, mc + cc - kc)
        rhs2 = self.dot(mc, mc - kc) + self.dot(cc, cc) + self.dot(cc, kc) - 2 * self.dot(kc - mc, cc)
        return lhs2 == rhs2


def _as_coords_sub(m, k) -> tuple[int, ...]:
    mc = _as_coords(m)
    kc = _as_coords(k)
    if len(mc) != len(kc):
        raise ValueError("rank mismatch between m and k")
    return tuple(a - b for a, b in zip(mc, kc))
