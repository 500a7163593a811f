"""Topological shadow of a smooth projective surface.

A SurfaceTopology records exactly the data the rest of the package computes
with: the irregularity q (so H^1 has rank 2q with basis v_1..v_2q), the
holomorphic Euler characteristic chi, a lattice modelling H^2 together with
the canonical class k, and the cup products H^1 x H^1 -> H^2 stored as
classes W(i, j) for i < j.  Torsion is ignored throughout.

All higher cup products are derived from this data:

* <v_i u v_j u c>            = dot(W(i,j), c)          (H^1,H^1,H^2)
* <v_i u v_j u v_k u v_l>    = dot(W(i,j), W(k,l))     (quadruple products)
* an H^3 element is stored by its pairings a |-> <a u h> against H^1.

Validation enforces the two structural invariants everything downstream
relies on: k is characteristic for the intersection form, and quadruple
products are alternating in all four slots (which is also exactly what
makes the derived cup structure associative).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ParityError
from .extalg import DUAL, Coeff, ExtForm, _norm_coeff
from .lattice import Lattice, LatticeClass


@dataclass(frozen=True)
class SurfaceTopology:
    """The cohomological data of a surface used by this package.

    cup maps pairs (i, j) with 1 <= i < j <= 2q to the H^2 class of
    v_i u v_j; missing pairs mean the product vanishes.  pg_positive is a
    geometric flag (positive geometric genus) consumed only by the
    adjunction checker.
    """

    q: int
    chi: int
    h2: Lattice
    k: LatticeClass
    cup: dict[tuple[int, int], LatticeClass] = field(default_factory=dict)
    pg_positive: bool = False

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("q must be nonnegative")
        if len(self.k) != self.h2.rank:
            raise ValueError("canonical class length does not match lattice rank")
        norm = {}
        for (i, j), cls in self.cup.items():
            if not (1 <= i < j <= 2 * self.q):
                raise ValueError(f"cup key ({i},{j}) out of range for q={self.q}")
            if len(cls) != self.h2.rank:
                raise ValueError(f"cup value at ({i},{j}) has wrong rank")
            if not cls.is_zero():
                norm[(i, j)] = cls
        object.__setattr__(self, "cup", norm)

    def w(self, i: int, j: int) -> LatticeClass:
        """The H^2 class of v_i u v_j, antisymmetric in (i, j)."""
        if not (1 <= i <= 2 * self.q and 1 <= j <= 2 * self.q):
            raise ValueError(f"index out of range 1..{2 * self.q}")
        if i == j:
            return self.h2.zero()
        if i < j:
            return self.cup.get((i, j), self.h2.zero())
        return -self.cup.get((j, i), self.h2.zero())

    def quad(self, a: int, b: int, c: int, d: int) -> int:
        """<v_a u v_b u v_c u v_d>, evaluated as dot(W(a,b), W(c,d)).

        Only well defined up to validation; on valid data this is totally
        antisymmetric in (a, b, c, d).
        """
        return self.h2.dot(self.w(a, b), self.w(c, d))

    def validate(self) -> list[str]:
        """All structural violations, as human-readable strings.

        Empty list means the data is consistent: k is characteristic and the
        quadruple products are alternating (zero on a repeated index, sign
        reversal under slot transposition).
        """
        problems: list[str] = []
        if not self.h2.is_characteristic(self.k):
            problems.append("canonical class is not characteristic: some dot(x,x) != dot(x,k) mod 2")
        n = 2 * self.q
        pairs = list(combinations(range(1, n + 1), 2))
        for (i, j) in pairs:
            for (a, b) in pairs:
                if (a, b) < (i, j):
                    continue
                shared = {i, j} & {a, b}
                val = self.h2.dot(self.w(i, j), self.w(a, b))
                if shared and val != 0:
                    problems.append(
                        f"repeated-index product not zero: <v{i} v{j} v{a} v{b}> = {val}"
                    )
        for s in combinations(range(1, n + 1), 4):
            p1, p2, p3, p4 = s
            x = self.h2.dot(self.w(p1, p2), self.w(p3, p4))
            y = self.h2.dot(self.w(p1, p3), self.w(p2, p4))
            z = self.h2.dot(self.w(p1, p4), self.w(p2, p3))
            if x != -y or x != z:
                problems.append(
                    f"quadruple product on {s} not alternating: "
                    f"(12)(34)={x}, (13)(24)={y}, (14)(23)={z}"
                )
        return problems

    def require_valid(self) -> None:
        from .errors import SurfaceDataError

        problems = self.validate()
        if problems:
            raise SurfaceDataError("; ".join(problems))


def kappa(s: SurfaceTopology, c) -> ExtForm:
    """The degree-2 dual form a ^ b |-> <a u b u c>.

    Coefficient of w_i ^ w_j (i < j) is dot(W(i,j), c).
    """
    c = LatticeClass(c.coords if isinstance(c, LatticeClass) else tuple(c))
    terms = {}
    for (i, j), w_ij in s.cup.items():
        coeff = s.h2.dot(w_ij, c)
        if coeff:
            terms[(i, j)] = coeff
    return ExtForm(s.q, DUAL, terms)


def theta(s: SurfaceTopology, c) -> ExtForm:
    """kappa(c) / 2 for a characteristic class c; exact division.

    On valid surface data every coefficient <v_i u v_j u c> is even when c
    is characteristic, because <x u x> = 0 for x = v_i u v_j.  A parity
    failure therefore flags inconsistent input.
    """
    if not s.h2.is_characteristic(c):
        raise ParityError("theta requires a characteristic class")
    full = kappa(s, c)
    halved = {}
    for key, coeff in full.terms.items():
        if coeff % 2:
            raise ParityError(
                f"kappa coefficient at {key} is odd ({coeff}); surface data inconsistent"
            )
        halved[key] = coeff // 2
    return ExtForm(s.q, DUAL, halved)


def xi(s: SurfaceTopology) -> ExtForm:
    """The degree-4 dual form of quadruple products.

    Coefficient of w_i ^ w_j ^ w_k ^ w_l (i<j<k<l) is <v_i u v_j u v_k u v_l>,
    evaluated as dot(W(i,j), W(k,l)).  Zero whenever q <= 1.
    """
    terms = {}
    for s4 in combinations(range(1, 2 * s.q + 1), 4):
        i, j, k, l = s4
        coeff = s.h2.dot(s.w(i, j), s.w(k, l))
        if coeff:
            terms[s4] = coeff
    return ExtForm(s.q, DUAL, terms)


_ABELIAN_PAIRS = list(combinations(range(1, 5), 2))


def _perm_sign(seq) -> int:
    inv = 0
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                inv += 1
    return -1 if inv % 2 else 1


def abelian_surface() -> SurfaceTopology:
    """The rank-(2,6) model with q=2, chi=0, k=0.

    H^2 has the six basis classes b_{ij} = class of v_i u v_j (i < j in
    {1,2,3,4}); the pairing of b_P and b_Q is the sign of the permutation
    (P, Q) of (1,2,3,4) when P and Q are disjoint, else 0.
    """
    rank = len(_ABELIAN_PAIRS)
    gram = [[0] * rank for _ in range(rank)]
    for a, p in enumerate(_ABELIAN_PAIRS):
        for b, r in enumerate(_ABELIAN_PAIRS):
            if not set(p) & set(r):
                gram[a][b] = _perm_sign(p + r)
    lat = Lattice(tuple(tuple(row) for row in gram))
    cup = {}
    for a, p in enumerate(_ABELIAN_PAIRS):
        coords = [0] * rank
        coords[a] = 1
        cup[p] = LatticeClass(tuple(coords))
    return SurfaceTopology(q=2, chi=0, h2=lat, k=lat.zero(), cup=cup, pg_positive=True)


def q0_surface(gram, k, chi: int, pg_positive: bool = False) -> SurfaceTopology:
    """A surface with no odd cohomology: q = 0, cup table empty."""
    lat = Lattice(tuple(tuple(int(e) for e in row) for row in gram))
    kc = LatticeClass(k.coords if isinstance(k, LatticeClass) else tuple(k))
    return SurfaceTopology(q=0, chi=chi, h2=lat, k=kc, cup={}, pg_positive=pg_positive)


# ---------------------------------------------------------------------------
# Graded cohomology coefficients
# ---------------------------------------------------------------------------


def _tup_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _tup_scale(a: tuple, f) -> tuple:
    return tuple(_norm_coeff(x * f) for x in a)


@dataclass(frozen=True)
class CohClass:
    """A full cohomology class of the surface, one component per degree.

    d0 and d4 are scalars (d4 is the coefficient of the point class),
    d1 is a vector over v_1..v_2q, d2 over the H^2 basis, and d3 stores an
    H^3 element by its pairings a |-> <a u h> against H^1.  Components are
    exact ints or Fractions.
    """

    d0: Coeff
    d1: tuple[Coeff, ...]
    d2: tuple[Coeff, ...]
    d3: tuple[Coeff, ...]
    d4: Coeff

    @classmethod
    def zero(cls, s: SurfaceTopology) -> "CohClass":
        n = 2 * s.q
        r = s.h2.rank
        return cls(0, (0,) * n, (0,) * r, (0,) * n, 0)

    @classmethod
    def scalar(cls, s: SurfaceTopology, value: Coeff) -> "CohClass":
        return cls.zero(s)._replace(d0=_norm_coeff(value))

    @classmethod
    def from_h1(cls, s: SurfaceTopology, vec) -> "CohClass":
        vec = tuple(vec)
        if len(vec) != 2 * s.q:
            raise ValueError("H^1 vector has wrong length")
        return cls.zero(s)._replace(d1=vec)

    @classmethod
    def from_h2(cls, s: SurfaceTopology, x) -> "CohClass":
        coords = x.coords if isinstance(x, LatticeClass) else tuple(x)
        if len(coords) != s.h2.rank:
            raise ValueError("H^2 vector has wrong length")
        return cls.zero(s)._replace(d2=coords)

    @classmethod
    def from_h3(cls, s: SurfaceTopology, pairings) -> "CohClass":
        pairings = tuple(pairings)
        if len(pairings) != 2 * s.q:
            raise ValueError("H^3 pairing vector has wrong length")
        return cls.zero(s)._replace(d3=pairings)

    @classmethod
    def point(cls, s: SurfaceTopology, value: Coeff) -> "CohClass":
        return cls.zero(s)._replace(d4=_norm_coeff(value))

    def _replace(self, **kw) -> "CohClass":
        data = {
            "d0": self.d0,
            "d1": self.d1,
            "d2": self.d2,
            "d3": self.d3,
            "d4": self.d4,
        }
        data.update(kw)
        return CohClass(**data)

    def is_zero(self) -> bool:
        return (
            not self.d0
            and not any(self.d1)
            and not any(self.d2)
            and not any(self.d3)
            and not self.d4
        )

    def __add__(self, other: "CohClass") -> "CohClass":
        return CohClass(
            _norm_coeff(self.d0 + other.d0),
            _tup_add(self.d1, other.d1),
            _tup_add(self.d2, other.d2),
            _tup_add(self.d3, other.d3),
            _norm_coeff(self.d4 + other.d4),
        )

    def scale(self, f: Coeff) -> "CohClass":
        return CohClass(
            _norm_coeff(self.d0 * f),
            _tup_scale(self.d1, f),
            _tup_scale(self.d2, f),
            _tup_scale(self.d3, f),
            _norm_coeff(self.d4 * f),
        )

    def degrees(self) -> set[int]:
        out = set()
        if self.d0:
            out.add(0)
        if any(self.d1):
            out.add(1)
        if any(self.d2):
            out.add(2)
        if any(self.d3):
            out.add(3)
        if self.d4:
            out.add(4)
        return out

    def degree_component(self, d: int) -> "CohClass":
        n1 = len(self.d1)
        r = len(self.d2)
        zero = CohClass(0, (0,) * n1, (0,) * r, (0,) * n1, 0)
        if d == 0:
            return zero._replace(d0=self.d0)
        if d == 1:
            return zero._replace(d1=self.d1)
        if d == 2:
            return zero._replace(d2=self.d2)
        if d == 3:
            return zero._replace(d3=self.d3)
        if d == 4:
            return zero._replace(d4=self.d4)
        return zero

    def cup(self, other: "CohClass", s: SurfaceTopology) -> "CohClass":
        """Cup product, using the surface's pairing and cup table.

        All products landing above degree 4 vanish.  Derived products:
        (1,1) through the W table, (1,2) and (2,1) into H^3 pairings,
        (1,3)/(3,1) and (2,2) into the point class.
        """
        out = CohClass.zero(s)
        # (0, d) and (d, 0)
        if self.d0:
            out = out + other.scale(self.d0)
        if other.d0:
            out = out + self.degree_positive().scale(other.d0)
        # (1, 1) -> 2
        if any(self.d1) and any(other.d1):
            vec = [0] * s.h2.rank
            for (i, j), w_ij in s.cup.items():
                coeff = self.d1[i - 1] * other.d1[j - 1] - self.d1[j - 1] * other.d1[i - 1]
                if coeff:
                    for t, wc in enumerate(w_ij.coords):
                        if wc:
                            vec[t] += coeff * wc
            out = out._replace(d2=_tup_add(out.d2, tuple(_norm_coeff(v) for v in vec)))
        # (1, 2) and (2, 1) -> 3 (even degree 2 commutes with everything)
        for x1, y2 in ((self.d1, other.d2), (other.d1, self.d2)):
            if any(x1) and any(y2):
                pair = []
                for a in range(1, 2 * s.q + 1):
                    val = 0
                    for i in range(1, 2 * s.q + 1):
                        xi_ = x1[i - 1]
                        if xi_:
                            w_ai = s.w(a, i)
                            if not w_ai.is_zero():
                                val += xi_ * _gram_pair(s.h2, w_ai.coords, y2)
                    pair.append(_norm_coeff(val))
                out = out._replace(d3=_tup_add(out.d3, tuple(pair)))
        # (1, 3) -> 4 with sign +, (3, 1) -> 4 with sign -
        if any(self.d1) and any(other.d3):
            out = out._replace(
                d4=_norm_coeff(out.d4 + sum(a * h for a, h in zip(self.d1, other.d3)))
            )
        if any(self.d3) and any(other.d1):
            out = out._replace(
                d4=_norm_coeff(out.d4 - sum(a * h for a, h in zip(other.d1, self.d3)))
            )
        # (2, 2) -> 4
        if any(self.d2) and any(other.d2):
            out = out._replace(d4=_norm_coeff(out.d4 + _gram_pair(s.h2, self.d2, other.d2)))
        return out

    def degree_positive(self) -> "CohClass":
        """The part of degree >= 1 (used to avoid double-counting (0,0))."""
        return self._replace(d0=0)


def _gram_pair(lat: Lattice, x: tuple, y: tuple) -> Coeff:
    """x^T gram y for coordinate tuples with int or Fraction entries."""
    total = 0
    for i, xi_ in enumerate(x):
        if xi_:
            row = lat.gram[i]
            total += xi_ * sum(row[j] * yj for j, yj in enumerate(y) if yj)
    return total
