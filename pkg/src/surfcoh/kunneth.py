"""The bigraded product ring Lambda* H^1-dual (x) H*(V), over exact rationals.

Elements live in the cohomology of (a torus) x (the surface): the first
factor contributes an exterior algebra on w_1..w_2q, the second the graded
cohomology of the surface.  A class is stored sparsely as a map from index
subsets S (the exterior monomial w_S) to a CohClass coefficient.

Multiplication carries the Koszul sign of moving the surface-degree part of
the left factor past the exterior part of the right factor:

    (alpha (x) x) . (beta (x) y)
        = (-1)^(deg_V(x) * deg_ext(beta)) (alpha ^ beta) (x) (x u y).

The slant map against the surface's fundamental class extracts, for each
subset S, the point-class coefficient of w_S; it is how pushforward Chern
characters are read off.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DegreeError, IntegralityError
from .extalg import DUAL, ExtForm, _merge, wedge
from .surface import CohClass, SurfaceTopology


class BigradedClass:
    """A sparse element of Lambda* H^1-dual (x) H*(V).

    Treated as immutable; operations return new instances.  Zero CohClass
    coefficients are dropped on construction.
    """

    __slots__ = ("surface", "terms")

    def __init__(self, surface: SurfaceTopology, terms=None):
        self.surface = surface
        norm: dict[tuple[int, ...], CohClass] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(int(i) for i in key)
            if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                raise ValueError(f"index tuple {key} is not strictly increasing")
            if key and (key[0] < 1 or key[-1] > 2 * surface.q):
                raise ValueError(f"index tuple {key} out of range 1..{2 * surface.q}")
            if not coeff.is_zero():
                norm[key] = coeff
        self.terms = norm

    @classmethod
    def zero(cls, surface: SurfaceTopology) -> "BigradedClass":
        return cls(surface, {})

    @classmethod
    def unit(cls, surface: SurfaceTopology) -> "BigradedClass":
        return cls(surface, {(): CohClass.scalar(surface, 1)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, indices) -> CohClass:
        return self.terms.get(tuple(indices), CohClass.zero(self.surface))

    def _check(self, other: "BigradedClass") -> None:
        if not isinstance(other, BigradedClass):
            raise TypeError("expected a BigradedClass")
        if self.surface is not other.surface and self.surface != other.surface:
            raise ValueError("operands live over different surfaces")

    def __add__(self, other: "BigradedClass") -> "BigradedClass":
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return BigradedClass(self.surface, acc)

    def __sub__(self, other: "BigradedClass") -> "BigradedClass":
        return self + other.scale(-1)

    def scale(self, f) -> "BigradedClass":
        if not f:
            return BigradedClass.zero(self.surface)
        return BigradedClass(self.surface, {k: c.scale(f) for k, c in self.terms.items()})

    def __mul__(self, other: "BigradedClass") -> "BigradedClass":
        return mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BigradedClass)
            and self.surface == other.surface
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        keys = sorted(self.terms, key=lambda k: (len(k), k))
        return f"BigradedClass<{len(self.terms)} terms: {keys!r}>"


def mul(x: BigradedClass, y: BigradedClass) -> BigradedClass:
    """Product with the Koszul sign; surface-degree parts above 4 vanish."""
    x._check(y)
    s = x.surface
    acc: dict[tuple[int, ...], CohClass] = {}
    for s1, c1 in x.terms.items():
        for s2, c2 in y.terms.items():
            sign, merged = _merge(s1, s2)
            if not sign:
                continue
            # Koszul: each degree component of c1 crosses the |s2| exterior
            # generators of the right factor.
            if len(s2) % 2:
                signed = CohClass.zero(s)
                for d in c1.degrees():
                    comp = c1.degree_component(d)
                    signed = signed + (comp.scale(-1) if d % 2 else comp)
            else:
                signed = c1
            prod = signed.cup(c2, s)
            if sign < 0:
                prod = prod.scale(-1)
            if not prod.is_zero():
                acc[merged] = acc[merged] + prod if merged in acc else prod
    return BigradedClass(s, acc)


def exp(f: BigradedClass) -> BigradedClass:
    """Exponential series of a nilpotent class (no scalar (0,0) part)."""
    if f.coefficient(()).d0:
        raise ValueError("exp requires a nilpotent argument: scalar part must vanish")
    total = BigradedClass.unit(f.surface)
    term = BigradedClass.unit(f.surface)
    n = 1
    limit = 2 * f.surface.q + 4
    while True:
        term = mul(term, f).scale(Fraction(1, n))
        if term.is_zero():
            break
        total = total + term
        n += 1
        if n > limit + 1:
            raise RuntimeError("exp failed to terminate; argument not nilpotent?")
    return total


def slant(x: BigradedClass) -> ExtForm:
    """Evaluate against the fundamental class of the surface factor.

    Picks out the point-class coefficient in each exterior monomial:
    sum_S x[S].d4 * w_S, a dual exterior form with rational coefficients.
    """
    return ExtForm(x.surface.q, DUAL, {k: c.d4 for k, c in x.terms.items() if c.d4})


def todd_factor(s: SurfaceTopology) -> BigradedClass:
    """The surface-side Todd correction 1 - k/2 + chi . [pt].

    The torus factor's own Todd class is 1, so this is the full Todd input
    to the pushforward character pipeline.
    """
    coeff = CohClass.scalar(s, 1) + CohClass.from_h2(
        s, tuple(Fraction(-c, 2) for c in s.k.coords)
    ) + CohClass.point(s, s.chi)
    return BigradedClass(s, {(): coeff})


def chern_from_ch(ch: ExtForm) -> ExtForm:
    """Total Chern class from a Chern character, by Newton's identities.

    The input is a dual exterior form whose degree-2n part is ch_n (so the
    degree-0 part is the rank).  Power sums p_n = n! ch_n are converted to
    elementary symmetric parts e_n via

        n e_n = sum_{i=1..n} (-1)^(i-1) e_{n-i} p_i,

    and the result 1 + e_1 + e_2 + ... must be integral; a nontrivial
    denominator raises IntegralityError.
    """
    if any(d % 2 for d in ch.degrees()):
        raise DegreeError("Chern character must be concentrated in even degrees")
    q = ch.q
    rank = ch.coefficient(())
    if isinstance(rank, Fraction):
        raise IntegralityError(f"rank {rank} is not an integer")
    p = {n: ch.degree_part(2 * n).scale(factorial(n)) for n in range(1, q + 1)}
    e: list[ExtForm] = [ExtForm.scalar(q, DUAL, 1)]
    for n in range(1, q + 1):
        acc = ExtForm.zero(q, DUAL)
        for i in range(1, n + 1):
            term = wedge(e[n - i], p[i])
            acc = acc + term if i % 2 else acc - term
        e.append(acc.scale(Fraction(1, n)))
    total = ExtForm.zero(q, DUAL)
    for part in e:
        total = total + part
    return total.integralized()
