"""Sparse integral exterior algebras on 2q generators, primal and dual.

The primal algebra models the homology-side exterior algebra on classes
v_1, ..., v_2q; the dual algebra models the cohomology side on the dual
basis w_1, ..., w_2q.  A form is stored as a map from strictly increasing
index tuples (subsets of {1, ..., 2q}) to nonzero coefficients.

Coefficients are integers in all boundary-level objects.  Exact rationals
(fractions.Fraction) are accepted so that intermediate computations can
divide by factorials; a Fraction that reduces to an integer is normalised
back to int, and ``integralized`` asserts the pure-integer boundary.

Conventions fixed here and relied on everywhere else:

* wedge uses the Koszul shuffle sign of merging two increasing tuples;
* the pairing of dual against primal is <w_S, v_T> = delta_{S,T};
* contraction is the adjoint of left wedge multiplication:
      <psi ^ phi, x> = <psi, contract(phi, x)>
  which on monomials gives contract(w_T, v_U) = sign * v_{U \\ T} when
  T is a subset of U (sign = shuffle sign of (U \\ T, T)), else 0.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import DegreeError, IntegralityError

PRIMAL = "primal"
DUAL = "dual"

Coeff = int | Fraction


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


def _merge(s: tuple[int, ...], t: tuple[int, ...]):
    """Merge two strictly increasing tuples, counting the shuffle sign.

    Returns (sign, merged) with sign in {+1, -1}, or (0, ()) when the
    tuples share an index.
    """
    if not s:
        return 1, t
    if not t:
        return 1, s
    out = []
    i = j = 0
    inversions = 0
    while i < len(s) and j < len(t):
        a, b = s[i], t[j]
        if a == b:
            return 0, ()
        if a < b:
            out.append(a)
            i += 1
        else:
            out.append(b)
            j += 1
            inversions += len(s) - i
    out.extend(s[i:])
    out.extend(t[j:])
    return (-1 if inversions % 2 else 1), tuple(out)


class ExtForm:
    """An element of the exterior algebra on generators 1..2q.

    Instances are treated as immutable; all operations return new forms.
    """

    __slots__ = ("q", "side", "terms")

    def __init__(self, q: int, side: str, terms=None):
        if side not in (PRIMAL, DUAL):
            raise ValueError(f"side must be {PRIMAL!r} or {DUAL!r}, got {side!r}")
        if q < 0:
            raise ValueError("q must be nonnegative")
        self.q = q
        self.side = side
        norm: dict[tuple[int, ...], Coeff] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(int(i) for i in key)
            if any(key[i] >= key[i + 1] for i in range(len(key) - 1)):
                raise ValueError(f"index tuple {key} is not strictly increasing")
            if key and (key[0] < 1 or key[-1] > 2 * q):
                raise ValueError(f"index tuple {key} out of range 1..{2 * q}")
            coeff = _norm_coeff(coeff)
            if coeff:
                norm[key] = coeff
        self.terms = norm

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q: int, side: str) -> "ExtForm":
        return cls(q, side, {})

    @classmethod
    def scalar(cls, q: int, side: str, value: Coeff) -> "ExtForm":
        return cls(q, side, {(): value})

    @classmethod
    def monomial(cls, q: int, side: str, indices, coeff: Coeff = 1) -> "ExtForm":
        return cls(q, side, {tuple(indices): coeff})

    # -- inspection --------------------------------------------------------

    def coefficient(self, indices) -> Coeff:
        return self.terms.get(tuple(indices), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def degree_part(self, d: int) -> "ExtForm":
        return ExtForm(self.q, self.side, {k: c for k, c in self.terms.items() if len(k) == d})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, None for non-homogeneous, 0 for zero."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def max_degree(self) -> int:
        return max((len(k) for k in self.terms), default=0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def integralized(self) -> "ExtForm":
        """The same form with int coefficients; IntegralityError if impossible."""
        if not self.is_integral():
            bad = sorted(k for k, c in self.terms.items() if not isinstance(c, int))
            raise IntegralityError(f"non-integer coefficients at {bad}")
        return self

    def canonical_terms(self):
        """Terms sorted by (degree, index tuple); the printing order."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    # -- ring structure ----------------------------------------------------

    def _check_compat(self, other: "ExtForm") -> None:
        if not isinstance(other, ExtForm):
            raise TypeError("expected an ExtForm")
        if self.q != other.q or self.side != other.side:
            raise ValueError(
                f"form mismatch: q={self.q}/{other.q}, side={self.side}/{other.side}"
            )

    def __add__(self, other: "ExtForm") -> "ExtForm":
        self._check_compat(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return ExtForm(self.q, self.side, acc)

    def __sub__(self, other: "ExtForm") -> "ExtForm":
        self._check_compat(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) - c
        return ExtForm(self.q, self.side, acc)

    def __neg__(self) -> "ExtForm":
        return ExtForm(self.q, self.side, {k: -c for k, c in self.terms.items()})

    def scale(self, factor: Coeff) -> "ExtForm":
        if not factor:
            return ExtForm.zero(self.q, self.side)
        return ExtForm(self.q, self.side, {k: c * factor for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, ExtForm):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def wedge(self, other: "ExtForm") -> "ExtForm":
        return wedge(self, other)

    def truncate(self, n: int) -> "ExtForm":
        return truncate(self, n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtForm)
            and self.q == other.q
            and self.side == other.side
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        sym = "v" if self.side == PRIMAL else "w"
        if not self.terms:
            return f"ExtForm<{self.side}, q={self.q}> 0"
        bits = []
        for k, c in self.canonical_terms():
            mon = "^".join(f"{sym}{i}" for i in k) if k else "1"
            bits.append(f"{c}*{mon}")
        return f"ExtForm<{self.side}, q={self.q}> " + " + ".join(bits)


def wedge(x: ExtForm, y: ExtForm) -> ExtForm:
    """Exterior product with the Koszul shuffle sign."""
    x._check_compat(y)
    acc: dict[tuple[int, ...], Coeff] = {}
    for s, cs in x.terms.items():
        for t, ct in y.terms.items():
            sign, merged = _merge(s, t)
            if sign:
                acc[merged] = acc.get(merged, 0) + sign * cs * ct
    return ExtForm(x.q, x.side, acc)


def pairing(phi: ExtForm, x: ExtForm) -> Coeff:
    """<phi, x> with <w_S, v_T> = delta_{S,T}, extended bilinearly."""
    if phi.side != DUAL or x.side != PRIMAL:
        raise ValueError("pairing expects (dual, primal)")
    if phi.q != x.q:
        raise ValueError(f"q mismatch: {phi.q} vs {x.q}")
    total = 0
    small, large = (phi.terms, x.terms) if len(phi.terms) <= len(x.terms) else (x.terms, phi.terms)
    for k, c in small.items():
        other = large.get(k)
        if other:
            total += c * other
    return _norm_coeff(total)


def contract(phi: ExtForm, x: ExtForm) -> ExtForm:
    """Contraction of a primal form by a dual form (cap product).

    Fixed by the adjunction <psi ^ phi, x> = <psi, contract(phi, x)>.
    Lowers degree by the degree of phi.
    """
    if phi.side != DUAL or x.side != PRIMAL:
        raise ValueError("contract expects (dual, primal)")
    if phi.q != x.q:
        raise ValueError(f"q mismatch: {phi.q} vs {x.q}")
    acc: dict[tuple[int, ...], Coeff] = {}
    for t, ct in phi.terms.items():
        tset = set(t)
        for u, cu in x.terms.items():
            if not tset <= set(u):
                continue
            s = tuple(i for i in u if i not in tset)
            sign, _ = _merge(s, t)
            acc[s] = acc.get(s, 0) + sign * ct * cu
    return ExtForm(x.q, PRIMAL, acc)


def truncate(x: ExtForm, n: int) -> ExtForm:
    """Keep the parts of degree <= n; n < 0 gives the zero form."""
    if n < 0:
        return ExtForm.zero(x.q, x.side)
    return ExtForm(x.q, x.side, {k: c for k, c in x.terms.items() if len(k) <= n})


def _pfaffian(entries: dict[tuple[int, int], Coeff], s: tuple[int, ...]) -> Coeff:
    """Pfaffian of the antisymmetric matrix (entries) restricted to indices s.

    entries holds the strictly-upper coefficients keyed by (i, j), i < j.
    Recursive expansion along the first row; sizes here are tiny.
    """
    if not s:
        return 1
    first, rest = s[0], s[1:]
    total = 0
    for pos, t in enumerate(rest):
        coeff = entries.get((first, t), 0)
        if coeff:
            sub = rest[:pos] + rest[pos + 1 :]
            sign = -1 if pos % 2 else 1
            total += sign * coeff * _pfaffian(entries, sub)
    return total


def exp2(kappa: ExtForm, max_deg: int) -> ExtForm:
    """Exterior exponential of a degree-2 form, up to degree max_deg.

    The coefficient of w_S with |S| = 2n in kappa^n / n! is the Pfaffian of
    kappa's antisymmetric coefficient matrix restricted to S, so the result
    is computed entirely in integer arithmetic; no denominator ever appears.
    """
    if not kappa.is_homogeneous() or kappa.homogeneous_degree() not in (0, 2):
        raise DegreeError("exp2 expects a homogeneous degree-2 form")
    if kappa.homogeneous_degree() == 0 and not kappa.is_zero():
        raise DegreeError("exp2 expects a homogeneous degree-2 form")
    if max_deg < 0:
        return ExtForm.zero(kappa.q, kappa.side)
    entries = {k: c for k, c in kappa.terms.items()}
    support = sorted({i for k in kappa.terms for i in k})
    acc: dict[tuple[int, ...], Coeff] = {(): 1}
    top = min(max_deg, len(support))
    n = 2
    while n <= top:
        for s in combinations(support, n):
            pf = _pfaffian(entries, s)
            if pf:
                acc[s] = pf
        n += 2
    return ExtForm(kappa.q, kappa.side, acc)
