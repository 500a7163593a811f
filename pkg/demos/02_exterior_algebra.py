"""The two exterior algebras and the Pfaffian exponential.

Forms live on generators 1..2q, on either the primal (v) or the dual (w)
side.  The three operations that everything else is built from: the wedge
product with its shuffle sign, the perfect pairing <w_S, v_T>, and the
contraction that is adjoint to wedging.
"""

from fractions import Fraction

from surfcoh import ExtForm, contract, exp2, pairing, wedge
from surfcoh.extalg import DUAL, PRIMAL

q = 2

w12 = ExtForm.monomial(q, DUAL, (1, 2))
w34 = ExtForm.monomial(q, DUAL, (3, 4))
w13 = ExtForm.monomial(q, DUAL, (1, 3))
w24 = ExtForm.monomial(q, DUAL, (2, 4))
v1234 = ExtForm.monomial(q, PRIMAL, (1, 2, 3, 4))

print("w12 ^ w34 =", wedge(w12, w34))
print("w13 ^ w24 =", wedge(w13, w24))  # one inversion: sign flips

print("<w12^w34, v1234> =", pairing(wedge(w12, w34), v1234))
print("w12 . v1234 =", contract(w12, v1234))
print("w13 . v1234 =", contract(w13, v1234))

# contract is fixed by <psi ^ phi, x> = <psi, contract(phi, x)>.
psi, phi = w34, w12
lhs = pairing(wedge(psi, phi), v1234)
rhs = pairing(psi, contract(phi, v1234))
print("adjunction check:", lhs, "==", rhs)

# The exterior exponential of a two-form has Pfaffians as coefficients,
# so exp2 never leaves the integers even though exp formally divides by
# factorials.
kappa = ExtForm(q, DUAL, {(1, 2): 2, (3, 4): 5, (1, 3): -3})
e = exp2(kappa, 2 * q)
print("exp2(kappa) =", e)

# Same thing the slow way, with honest rational arithmetic.
series = ExtForm.scalar(q, DUAL, 1)
power = ExtForm.scalar(q, DUAL, 1)
fact = 1
for n in range(1, 2 * q + 1):
    power = wedge(power, kappa)
    fact *= n
    series = series + power.scale(Fraction(1, fact))
print("rational series agrees:", series == e)
print("top coefficient is the Pfaffian 2*5 - (-3)*0 + 0*0 =", e.coefficient((1, 2, 3, 4)))
