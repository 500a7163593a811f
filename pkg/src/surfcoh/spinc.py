"""Arithmetic on the gauge-theory side of the dictionary.

A divisor class m corresponds to a structure whose first Chern class is
2m - k; the expected truncation bound of its invariant is m.(m-k).  For an
embedded surface of genus g in class c, the pullback of the degree-one
generators determines a two-form theta(Sigma) that must agree with
kappa_c, and the adjunction-style bound |2m.c - k.c| >= k.c + 2 is an
integer statement equivalent to m.c <= -1 or (k-m).c <= -1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import CheckResult, HypothesisWarning, ParityError
from .extalg import DUAL, ExtForm
from .lattice import LatticeClass
from .surface import SurfaceTopology, kappa


@dataclass(frozen=True)
class SpincClass:
    """A structure labelled by its divisor class m."""

    m: LatticeClass

    def chern(self, s: SurfaceTopology) -> LatticeClass:
        return 2 * self.m - s.k

    def truncation_bound(self, s: SurfaceTopology) -> int:
        """m.(m-k), the degree at which the associated invariant truncates."""
        return s.h2.dot(self.m, self.m - s.k)


def spinc_chern(s: SurfaceTopology, m: LatticeClass) -> LatticeClass:
    """2m - k, the first Chern class of the structure labelled by m."""
    return 2 * m - s.k


@dataclass(frozen=True)
class EmbeddedSurfaceData:
    """An embedded genus-g surface in class c with its degree-one pullback.

    pullback has 2q rows and 2g columns: column j < g is the image of the
    j-th a-generator, column g + j the image of the j-th b-generator, in
    coordinates on the ambient degree-one basis.
    """

    g: int
    c: LatticeClass
    pullback: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.pullback)
        object.__setattr__(self, "pullback", rows)
        if self.g < 0:
            raise ValueError(f"genus must be nonnegative, got {self.g}")
        width = 2 * self.g
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ValueError(
                    f"pullback row {i} has {len(row)} entries, expected {width}"
                )

    @property
    def q(self) -> int:
        if len(self.pullback) % 2:
            raise ValueError("pullback must have an even number of rows")
        return len(self.pullback) // 2


def theta_sigma(data: EmbeddedSurfaceData) -> ExtForm:
    """The two-form induced by the pullback of the intersection pairing.

    Coefficient of w_a ^ w_b (a < b) is sum_j (M[a][j] M[b][g+j]
    - M[a][g+j] M[b][j]): the a-b generator pairs on the surface push to
    an antisymmetric pairing on the ambient degree-one classes.
    """
    q = data.q
    g = data.g
    m = data.pullback
    terms = {}
    for a in range(2 * q):
        for b in range(a + 1, 2 * q):
            coeff = sum(m[a][j] * m[b][g + j] - m[a][g + j] * m[b][j] for j in range(g))
            if coeff:
                terms[(a + 1, b + 1)] = coeff
    return ExtForm(q, DUAL, terms)


def check_theta_kappa(s: SurfaceTopology, data: EmbeddedSurfaceData) -> CheckResult:
    """theta(Sigma) must equal kappa_c for the class c of the surface."""
    if data.q != s.q:
        return CheckResult(False, (f"pullback is for q={data.q}, surface has q={s.q}",))
    got = theta_sigma(data)
    want = kappa(s, data.c)
    if got == want:
        return CheckResult(True)
    return CheckResult(False, (f"theta(Sigma) = {got!r}", f"kappa_c = {want!r}"))


def embedded_data_for_class(s: SurfaceTopology, c: LatticeClass) -> EmbeddedSurfaceData:
    """Construct pullback data of genus 2q realizing theta(Sigma) = kappa_c.

    Takes A_j = sum_{i<j} phi_ij w_i and B_j = w_j, where phi_ij is the
    kappa_c coefficient of w_i ^ w_j; the determinant formula then
    reproduces kappa_c on the nose.  Purely formal: no embeddedness claim.
    """
    q = s.q
    g = 2 * q
    kap = kappa(s, c)
    rows = [[0] * (2 * g) for _ in range(2 * q)]
    for j in range(2 * q):
        for i in range(j):
            rows[i][j] = kap.coefficient((i + 1, j + 1))
        rows[j][g + j] = 1
    return EmbeddedSurfaceData(g, c, tuple(tuple(r) for r in rows))


def bound_equivalence_arith(mc: int, kc: int) -> tuple[bool, bool, int | None]:
    """(|2mc - kc| >= kc + 2, mc <= -1 or kc - mc <= -1, epsilon).

    epsilon is -1 when mc <= -1, else +1 when kc - mc <= -1, else None;
    the two booleans are equal for all integers, which the caller checks.
    """
    lhs = abs(2 * mc - kc) >= kc + 2
    rhs = mc <= -1 or kc - mc <= -1
    if mc <= -1:
        eps = -1
    elif kc - mc <= -1:
        eps = 1
    else:
        eps = None
    return lhs, rhs, eps


def bound_equivalence(
    s: SurfaceTopology, m: LatticeClass, c: LatticeClass
) -> tuple[bool, bool, int | None]:
    """bound_equivalence_arith at mc = m.c, kc = k.c."""
    return bound_equivalence_arith(s.h2.dot(m, c), s.h2.dot(s.k, c))


def genus_selfintersection(s: SurfaceTopology, c: LatticeClass) -> tuple[int, int]:
    """(g, n) with g = (c.c + c.k)/2 + 1 and n = -c.c.

    These satisfy 2g + n = c.k + 2 identically.  Advisory warnings flag
    inputs outside the geometric regime (c = 0, or c.c >= 0 where the
    bound form usually needs the negative-self-intersection convention).
    """
    cc = s.h2.dot(c, c)
    doubled = cc + s.h2.dot(c, s.k)
    if doubled % 2:
        raise ParityError(f"c.c + c.k = {doubled} is odd; is k characteristic?")
    g = doubled // 2 + 1
    n = -cc
    if c.is_zero():
        warnings.warn("genus data for the zero class is vacuous", HypothesisWarning, stacklevel=2)
    elif cc >= 0:
        warnings.warn(
            f"c.c = {cc} >= 0: outside the negative-self-intersection regime",
            HypothesisWarning,
            stacklevel=2,
        )
    assert 2 * g + n == s.h2.dot(c, s.k) + 2
    return g, n
