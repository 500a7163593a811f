"""Transporting moment sequences across a curve class.

A sequence for m - c is pushed to a sequence for m by contracting with
the graded pieces of exp2(kappa_c), read at source index i + N - j with
N = (c.c + c.k)/2 - m.c.  The degree invariant deg a_i = m.(m-k) - 2i is
what makes N the only exponent base that can work.
"""

import warnings

from surfcoh import (
    DegreeError,
    HypothesisWarning,
    ParityError,
    apply_curve_relation,
    assemble_plus,
    check_relation_consistency,
    n_down,
    n_down_variant,
    push_down,
)
from surfcoh.fixtures import path as fixture_path
from surfcoh.surfacefile import form_terms_to_str, parse_surface_file

parsed = parse_surface_file(fixture_path("abelian.surface"))
s = parsed.surface
m = parsed.require_class("m")
c = parsed.require_class("c")
src = parsed.require_moments("src")

print("exponent base N =", n_down(s, m, c))
for i, a in enumerate(src.moments):
    print(f"source a_{i} =", form_terms_to_str(a))

pushed = push_down(s, m, c, src)
for i, a in enumerate(pushed.moments):
    print(f"pushed a_{i} =", form_terms_to_str(a))

# The sum of the moments transports by one contraction against the whole
# exponential, truncated at the degree bound for m.
invariant = apply_curve_relation(s, m, c, "down", assemble_plus(src))
print("invariant at m =", form_terms_to_str(invariant))
print("sums agree:", invariant == assemble_plus(pushed))

# Both the plus and the sign-twisted minus chain, in one call.
res = check_relation_consistency(s, m, c, "down", src)
print("consistency check:", "ok" if res else res.details)

# Shifting the base moves every pushed degree by 2, so the validator
# refuses any other choice of N outright.
with warnings.catch_warnings():
    warnings.simplefilter("ignore", HypothesisWarning)
    try:
        push_down(s, m, c, src, exponent=n_down(s, m, c) + 1)
    except DegreeError as exc:
        print("wrong exponent base rejected:", exc)

# The plausible-looking variant (c.c + c.m)/2 - m.c fails here even
# earlier: c.c + c.m is odd for this pair, so the variant exponent does
# not exist as an integer.
try:
    n_down_variant(s, m, c)
except ParityError as exc:
    print("variant exponent undefined:", exc)
