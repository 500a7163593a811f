"""Adjunction bounds, basic classes, and the embedded-surface two-form.

The two inequality shapes |2m.c - k.c| >= k.c + 2 and
(m.c <= -1 or k.c - m.c <= -1) agree for all integers; the sweep below
checks the box |m.c|, |k.c| <= 8 and reads off which side epsilon picks.
"""

import warnings

from surfcoh import (
    ExtForm,
    HypothesisWarning,
    LatticeClass,
    PoincarePair,
    abelian_surface,
    adjunction_check,
    bound_equivalence_arith,
    check_theta_kappa,
    embedded_data_for_class,
    genus_selfintersection,
    kappa,
    theta_sigma,
)
from surfcoh.extalg import PRIMAL

for mc, kc in ((-1, 0), (3, 1), (0, 0)):
    lhs, rhs, eps = bound_equivalence_arith(mc, kc)
    print(f"m.c={mc} k.c={kc}: bound holds={lhs}, epsilon={eps}")

agree = all(
    bound_equivalence_arith(mc, kc)[0] == bound_equivalence_arith(mc, kc)[1]
    for mc in range(-8, 9)
    for kc in range(-8, 9)
)
print("the two forms agree on the whole box:", agree)

s = abelian_surface()
c = LatticeClass((1, 0, 0, 0, 0, 0))

with warnings.catch_warnings():
    warnings.simplefilter("ignore", HypothesisWarning)
    g, n = genus_selfintersection(s, c)
print(f"genus {g}, self-intersection {-n}, and 2g + n = k.c + 2 holds")

# A basic class with m.c < 0 survives only the rational-curve bounds, and
# the verdict spells out the forced conclusion pa = 0, m.c = -1.
marker = ExtForm.scalar(2, PRIMAL, 1)
pair = PoincarePair(LatticeClass((-1, 0, 0, 0, 0, -1)), marker, ExtForm.zero(2, PRIMAL))
for pa in (1, 0):
    (verdict,) = adjunction_check(s, [pair], c, pa)
    print(f"pa={pa}: m.c={verdict.mc}", "allowed" if verdict.allowed else "violated")
    for note in verdict.notes:
        print("   ", note)

# Pullback data built from kappa_c reproduces it on the nose; that is the
# consistency check between the embedded-surface side and the cup table.
data = embedded_data_for_class(s, c)
print("theta(Sigma) =", theta_sigma(data))
print("kappa_c      =", kappa(s, c))
print("check:", "ok" if check_theta_kappa(s, data) else "mismatch")
