"""Intersection lattices, characteristic classes, and genus bookkeeping.

Everything below is plain integer arithmetic: a lattice is a symmetric
gram matrix, classes are coordinate vectors, and the genus identities are
polynomial identities of the pairing that hold for every input.
"""

from surfcoh import Lattice, LatticeClass, ParityError

hyper = Lattice(((0, 1), (1, 0)))
m = LatticeClass((1, 1))
c = LatticeClass((0, -1))
k = LatticeClass((-2, -2))

print("gram:", hyper.gram)
print("m.m =", hyper.dot(m, m))
print("m.c =", hyper.dot(m, c))
print("k characteristic:", hyper.is_characteristic(k))

# m.(m-k)/2 is the expected dimension attached to m; the division is exact
# precisely because k is characteristic.
print("expected dimension of m:", hyper.expected_dimension(m, k))
print("arithmetic genus of c:", hyper.arithmetic_genus(c, k))

# With a non-characteristic k the doubled products go odd and the halved
# quantities refuse to evaluate.
bad_k = LatticeClass((1, 0))
try:
    hyper.expected_dimension(LatticeClass((1, 1)), bad_k)
except ParityError as exc:
    print("non-characteristic k rejected:", exc)

# The two genus identities relate the expected dimensions of m, m-c, m+c.
# They are identities of the bilinear form, so a sweep cannot find a
# counterexample; the point of running one is to exercise the bookkeeping.
span = range(-3, 4)
pairs = 0
for a in span:
    for b in span:
        for x in span:
            for y in span:
                mm = LatticeClass((a, b))
                cc = LatticeClass((x, y))
                assert hyper.genus_identity_down(mm, cc, k)
                assert hyper.genus_identity_up(mm, cc, k)
                pairs += 1
print(f"genus identities hold on {pairs} class pairs")
