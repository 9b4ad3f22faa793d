# mu(m) > dim + |E| rules out c ⊆ (x_1..x_d) for every system of parameters

from monomial_conductor import (AffineSemigroup, PinchedVeroneseSpec, conductor_generators,
                                pinched_veronese, universal_certificate)
from monomial_conductor.ikeda import sop_containments

# quadrics in X, Y without XY
Q = AffineSemigroup([(2, 0), (0, 2), (1, 1), (2, 1), (1, 2)])
cert = universal_certificate(Q)
print(cert.mu, cert.dim, cert.excess, cert.verdict.value)
print(cert.notes)

# quadrics in four variables without ZW
V = pinched_veronese(PinchedVeroneseSpec(4, 2, (0, 0, 1, 1)))
cert = universal_certificate(V)
print(len(V.generators), "generators;", cert.mu, ">", cert.dim, "+", len(cert.excess), "->", cert.verdict.value)

# the pinched 2-Veronese in three variables is out of reach of the count
P = pinched_veronese(PinchedVeroneseSpec(3, 2, (1, 1, 0)))
cert = universal_certificate(P)
print(cert.verdict.value, cert.notes)

# bounded monomial search still finds nothing there
C = conductor_generators(P)
print("monomial sops up to degree 6 containing c:", sop_containments(P, C, 6))

# cubics without X^2Y: m = c + (X^3)
K = pinched_veronese(PinchedVeroneseSpec(3, 3, (2, 1, 0)))
cert = universal_certificate(K)
print("y =", cert.oneless_witness, cert.verdict.value)
