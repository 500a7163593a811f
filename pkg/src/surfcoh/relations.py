"""Curve-induced relations between moment sequences of virtual classes.

The virtual class of the space of divisors in a class m is never stored;
only its moments survive here: a_i = (pushforward to the Picard torus of
u^i cap the virtual class), a primal exterior form, homogeneous of degree
m.(m-k) - 2i.  A MomentSequence is that list together with its class m.

Adding or removing a curve of class c transports one sequence to another:

    down (hypothesis m.c < 0):
        a_i(m) = sum_j (kappa_c^j / j!)  contracted into  a'_{i + N - j},
        N = (c.c + c.k)/2 - m.c,  a' the moments for m - c;
    up (hypothesis (k-m).c < 0): the same with -kappa_c and
        N = (c.c + c.k)/2 - (k-m).c,  a' the moments for m + c.

The exponent base N is exactly what makes the degree bookkeeping close:
every computed moment must come out homogeneous of its stated degree, and
push raises DegreeError otherwise.  The variant exponent with c.m in place
of c.k (n_down_variant) is kept available precisely because the degree
check rejects it whenever c.(m-k) != 0.

Summing the moments gives the plus invariant; the minus invariant for m is
read off the sequence for k - m with the alternating-sign assembly

    (-1)^(chi + m.(m-k)/2) * sum_i (-1)^i a_i.

Both assemblies satisfy the same transport identity in closed form:

    P(m) = truncate( exp2(+-kappa_c) contracted into P(m -+ c), m.(m-k) ),

an exact statement about arbitrary sequences satisfying the degree
invariant, which check_relation_consistency verifies on both chains.

Hypotheses (m.c < 0, and so on) are advisory: operations warn through
HypothesisWarning but never refuse, since the identities are formal.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import CheckResult, DegreeError, HypothesisWarning, ParityError
from .extalg import PRIMAL, ExtForm, contract, exp2, truncate
from .lattice import LatticeClass
from .surface import SurfaceTopology, kappa


@dataclass(frozen=True)
class MomentSequence:
    """Moments a_0, a_1, ... of a virtual class in divisor class m.

    Nonzero a_i must be homogeneous primal forms of degree m.(m-k) - 2i;
    q is carried explicitly so the empty sequence still knows its algebra.
    """

    q: int
    m: LatticeClass
    moments: tuple[ExtForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "moments", tuple(self.moments))
        for i, a in enumerate(self.moments):
            if a.side != PRIMAL:
                raise ValueError(f"moment {i} is not a primal form")
            if a.q != self.q:
                raise ValueError(f"moment {i} has q={a.q}, sequence has q={self.q}")

    def moment(self, i: int) -> ExtForm:
        """a_i, with a_i = 0 outside the stored range (including i < 0)."""
        if 0 <= i < len(self.moments):
            return self.moments[i]
        return ExtForm.zero(self.q, PRIMAL)

    def expected_degree(self, s: SurfaceTopology, i: int) -> int:
        return s.h2.dot(self.m, self.m - s.k) - 2 * i

    def validate(self, s: SurfaceTopology) -> list[str]:
        """Degree-invariant violations, as strings; empty when consistent."""
        problems = []
        for i, a in enumerate(self.moments):
            if a.is_zero():
                continue
            want = self.expected_degree(s, i)
            got = a.homogeneous_degree()
            if got != want:
                problems.append(
                    f"moment {i}: degree {'mixed ' + str(sorted(a.degrees())) if got is None else got}"
                    f", expected {want}"
                )
            elif want < 0 or want > 2 * self.q:
                problems.append(f"moment {i}: nonzero in impossible degree {want}")
        return problems

    def require_valid(self, s: SurfaceTopology, label: str = "moment sequence") -> None:
        problems = self.validate(s)
        if problems:
            raise DegreeError(f"{label}: " + "; ".join(problems))


@dataclass(frozen=True)
class CoefficientPolynomial:
    """The transport coefficient sum_i (exterior form) . u^(N - i).

    terms maps each nonnegative u-exponent to a dual exterior form; terms
    with negative exponent are dropped at construction time by the builder.
    """

    terms: tuple[tuple[int, ExtForm], ...]

    def __post_init__(self):
        exps = [e for e, _ in self.terms]
        if len(set(exps)) != len(exps):
            raise ValueError("duplicate exponents in coefficient polynomial")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent in coefficient polynomial")
        ordered = tuple(sorted(self.terms, key=lambda t: -t[0]))
        object.__setattr__(self, "terms", ordered)


def n_down(s: SurfaceTopology, m: LatticeClass, c: LatticeClass) -> int:
    """(c.c + c.k)/2 - m.c, the downward u-exponent base."""
    doubled = s.h2.dot(c, c) + s.h2.dot(c, s.k)
    if doubled % 2:
        raise ParityError(f"c.c + c.k = {doubled} is odd; is k characteristic?")
    return doubled // 2 - s.h2.dot(m, c)

def n_down_variant(s: SurfaceTopology, m: LatticeClass, c: LatticeClass) -> int:
    """(c.c + c.m)/2 - m.c: the rejected variant exponent.

    Kept only so the degree bookkeeping can demonstrate why it is wrong:
    it differs from n_down by c.(m-k)/2 and breaks homogeneity of the
    pushed moments whenever c.(m-k) != 0.
    """
    doubled = s.h2.dot(c, c) + s.h2.dot(c, m)
    if doubled % 2:
        raise ParityError(f"c.c + c.m = {doubled} is odd; variant exponent undefined")
    return doubled // 2 - s.h2.dot(m, c)


def n_up(s: SurfaceTopology, m: LatticeClass, c: LatticeClass) -> int:
    """(c.c + c.k)/2 - (k-m).c, the upward u-exponent base."""
    doubled = s.h2.dot(c, c) + s.h2.dot(c, s.k)
    if doubled % 2:
        raise ParityError(f"c.c + c.k = {doubled} is odd; is k characteristic?")
    return doubled // 2 - s.h2.dot(s.k - m, c)


def coefficient_class(
    s: SurfaceTopology, m: LatticeClass, c: LatticeClass, direction: str
) -> CoefficientPolynomial:
    """The transport coefficient as a polynomial in u.

    Exterior coefficients are the Pfaffian graded pieces of exp2(kappa_c)
    (downward) or exp2(-kappa_c) (upward) at exponent N - i; negative
    exponents are dropped.
    """
    sign, n_base = _direction(s, m, c, direction)
    series = exp2(kappa(s, c).scale(sign), 2 * s.q)
    terms = []
    for i in range(0, s.q + 1):
        exponent = n_base - i
        if exponent < 0:
            continue
        part = series.degree_part(2 * i)
        if not part.is_zero():
            terms.append((exponent, part))
    return CoefficientPolynomial(tuple(terms))


def _direction(s, m, c, direction):
    if direction == "down":
        return 1, n_down(s, m, c)
    if direction == "up":
        return -1, n_up(s, m, c)
    raise ValueError(f"direction must be 'down' or 'up', got {direction!r}")


def _push(
    s: SurfaceTopology,
    m_target: LatticeClass,
    src: MomentSequence,
    sign: int,
    n_base: int,
    c: LatticeClass,
) -> MomentSequence:
    src.require_valid(s, "source sequence")
    series = exp2(kappa(s, c).scale(sign), 2 * s.q)
    parts = [series.degree_part(2 * j) for j in range(0, s.q + 1)]
    hi = len(src.moments) - 1 - n_base + s.q
    out = []
    for i in range(0, hi + 1):
        acc = ExtForm.zero(s.q, PRIMAL)
        for j, part in enumerate(parts):
            if part.is_zero():
                continue
            source = src.moment(i + n_base - j)
            if not source.is_zero():
                acc = acc + contract(part, source)
        out.append(acc)
    while out and out[-1].is_zero():
        out.pop()
    result = MomentSequence(s.q, m_target, tuple(out))
    problems = result.validate(s)
    if problems:
        raise DegreeError(
            "pushed moments violate the degree invariant (wrong exponent base?): "
            + "; ".join(problems)
        )
    return result


def push_down(
    s: SurfaceTopology,
    m: LatticeClass,
    c: LatticeClass,
    src: MomentSequence,
    exponent: int | None = None,
) -> MomentSequence:
    """Transport the sequence for m - c to the sequence for m.

    a_i(m) = sum_j (kappa_c^j / j!) contracted into a'_{i + N - j}, where N
    defaults to n_down(s, m, c).  Passing another exponent is supported only
    to exhibit how the degree check rejects it.
    """
    if src.m != m - c:
        raise ValueError("push_down expects the source sequence for class m - c")
    if s.h2.dot(m, c) >= 0:
        warnings.warn(
            f"push_down outside its hypothesis: m.c = {s.h2.dot(m, c)} >= 0",
            HypothesisWarning,
            stacklevel=2,
        )
    n_base = n_down(s, m, c) if exponent is None else exponent
    return _push(s, m, src, 1, n_base, c)


def push_up(
    s: SurfaceTopology,
    m: LatticeClass,
    c: LatticeClass,
    src: MomentSequence,
    exponent: int | None = None,
) -> MomentSequence:
    """Transport the sequence for m + c to the sequence for m.

    Same recursion with -kappa_c and N = n_up(s, m, c).
    """
    if src.m != m + c:
        raise ValueError("push_up expects the source sequence for class m + c")
    if s.h2.dot(s.k - m, c) >= 0:
        warnings.warn(
            f"push_up outside its hypothesis: (k-m).c = {s.h2.dot(s.k - m, c)} >= 0",
            HypothesisWarning,
            stacklevel=2,
        )
    n_base = n_up(s, m, c) if exponent is None else exponent
    return _push(s, m, src, -1, n_base, c)


def assemble_plus(ms: MomentSequence) -> ExtForm:
    """The plus invariant: the plain sum of the moments."""
    total = ExtForm.zero(ms.q, PRIMAL)
    for a in ms.moments:
        total = total + a
    return total


def assemble_minus(ms: MomentSequence, chi: int, expdim: int) -> ExtForm:
    """The minus invariant, read off the sequence for the reflected class.

    For the invariant at m, ms must be the sequence for k - m, expdim must
    be m.(m-k)/2 (which is symmetric under m -> k-m), and the result is
    (-1)^(chi + expdim) * sum_i (-1)^i a_i.
    """
    total = ExtForm.zero(ms.q, PRIMAL)
    for i, a in enumerate(ms.moments):
        total = total - a if i % 2 else total + a
    if (chi + expdim) % 2:
        total = -total
    return total


def apply_curve_relation(
    s: SurfaceTopology,
    m: LatticeClass,
    c: LatticeClass,
    direction: str,
    p_src: ExtForm,
) -> ExtForm:
    """truncate( exp2(+-kappa_c) contracted into p_src, m.(m-k) ).

    p_src is the assembled invariant at m - c (down) or m + c (up); the
    result is the invariant at m.
    """
    sign, _ = _direction(s, m, c, direction)
    series = exp2(kappa(s, c).scale(sign), 2 * s.q)
    return truncate(contract(series, p_src), s.h2.dot(m, m - s.k))


def check_relation_consistency(
    s: SurfaceTopology,
    m: LatticeClass,
    c: LatticeClass,
    direction: str,
    src: MomentSequence,
) -> CheckResult:
    """Verify both transport chains against the truncated-exponential form.

    src is the source sequence on the plus side: the sequence for m - c
    (down) or m + c (up).  The same exterior data also serves as the minus
    side source for the reflected class k - (m -+ c), whose degree invariant
    coincides.  The check compares, exactly:

    * assemble_plus of the pushed sequence with the relation applied to
      assemble_plus(src);
    * assemble_minus of the reflected push with the relation applied to
      assemble_minus(src-reflected), exercising the sign bookkeeping
      epsilon . (-1)^(N) that makes the two epsilon factors cancel.
    """
    details: list[str] = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HypothesisWarning)
        if direction == "down":
            pushed = push_down(s, m, c, src)
        else:
            pushed = push_up(s, m, c, src)
        plus_lhs = assemble_plus(pushed)
        plus_rhs = apply_curve_relation(s, m, c, direction, assemble_plus(src))
        if plus_lhs != plus_rhs:
            details.append(f"plus chain: {plus_lhs!r} != {plus_rhs!r}")

        reflected_src = MomentSequence(src.q, s.k - src.m, src.moments)
        if direction == "down":
            pushed_minus = push_up(s, s.k - m, c, reflected_src)
        else:
            pushed_minus = push_down(s, s.k - m, c, reflected_src)
        expdim_target = s.h2.expected_dimension(m, s.k)
        expdim_src = s.h2.expected_dimension(src.m, s.k)
        minus_lhs = assemble_minus(pushed_minus, s.chi, expdim_target)
        minus_rhs = apply_curve_relation(
            s, m, c, direction, assemble_minus(reflected_src, s.chi, expdim_src)
        )
        if minus_lhs != minus_rhs:
            details.append(f"minus chain: {minus_lhs!r} != {minus_rhs!r}")
    return CheckResult(not details, tuple(details))


@dataclass(frozen=True)
class PoincarePair:
    """A divisor class together with its two assembled invariants."""

    m: LatticeClass
    plus: ExtForm
    minus: ExtForm

    def is_basic(self) -> bool:
        return not (self.plus.is_zero() and self.minus.is_zero())

    def validate(self, s: SurfaceTopology) -> list[str]:
        """Degree bound: components must not exceed min(m.(m-k), 2q)."""
        bound = min(s.h2.dot(self.m, self.m - s.k), 2 * s.q)
        problems = []
        for name, form in (("plus", self.plus), ("minus", self.minus)):
            if form.side != PRIMAL:
                problems.append(f"{name} invariant is not a primal form")
            elif not form.is_zero() and form.max_degree() > bound:
                problems.append(
                    f"{name} invariant has degree {form.max_degree()} > bound {bound}"
                )
        return problems


@dataclass(frozen=True)
class AdjunctionVerdict:
    """Outcome of the adjunction bound for one basic class."""

    m: LatticeClass
    mc: int
    kc: int
    allowed: bool
    notes: tuple[str, ...]


def adjunction_check(
    s: SurfaceTopology,
    basics: list[PoincarePair],
    c: LatticeClass,
    pa: int,
) -> list[AdjunctionVerdict]:
    """Bound m.c for every basic class against the genus of a curve in c.

    Requires pg_positive.  For a curve of arithmetic genus pa > 0 a basic
    class must satisfy 0 <= m.c <= k.c; for pa = 0 (a smooth rational
    curve) the bounds relax by one on each side.  Each verdict also carries
    the forced-conclusion arithmetic for negative m.c: under a simple-type
    hypothesis, m.c < 0 forces pa = 0 and m.c = -1, because the genus
    identity (m-c).(m-c-k)/2 - m.(m-k)/2 = pa - 1 - m.c pins pa = 1 + m.c
    when both expected dimensions vanish.
    """
    if not s.pg_positive:
        raise ValueError("adjunction check requires pg_positive surface data")
    kc = s.h2.dot(s.k, c)
    genus_adj = s.h2.arithmetic_genus(c, s.k)
    verdicts = []
    for pair in basics:
        if not pair.is_basic():
            raise ValueError("adjunction check expects basic classes: (plus, minus) != (0, 0)")
        mc = s.h2.dot(pair.m, c)
        if pa > 0:
            allowed = 0 <= mc <= kc
            bound_note = f"bounds for pa > 0: 0 <= m.c <= {kc}"
        else:
            allowed = -1 <= mc <= kc + 1
            bound_note = f"bounds for pa = 0: -1 <= m.c <= {kc + 1}"
        notes = [bound_note]
        if pa != genus_adj:
            notes.append(f"declared pa = {pa} differs from adjunction genus {genus_adj}")
        if mc < 0:
            forced_ok = pa == 0 and mc == -1
            notes.append(
                "m.c < 0: simple type forces pa = 0 and m.c = -1"
                + (" (satisfied)" if forced_ok else f" (violated by pa={pa}, m.c={mc})")
            )
        verdicts.append(AdjunctionVerdict(pair.m, mc, kc, allowed, tuple(notes)))
    return verdicts
