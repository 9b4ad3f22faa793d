# k[[s^2, s^3, st, t]]: a two dimensional ring with a single hole

from monomial_conductor import (AffineSemigroup, conductor_generators, gaps_bounded, normalize,
                                quotient_length, verify_multiplication_table)

S = AffineSemigroup([(2, 0), (3, 0), (1, 1), (0, 1)])

sat = normalize(S)
print("rays:", sat.rays)
print("hilbert basis of the saturation:", sat.hilbert_basis)   # s and t
print("module generators:", sat.module_generators)             # 1 and s
print("holes up to degree 10:", gaps_bounded(S, 10))            # only s itself
print("length of Rbar/R:", quotient_length(S))

C = conductor_generators(S, sat)
print("conductor over R:", C.r_generators)
print("conductor over Rbar:", C.rbar_generators)
print("conductor is the maximal ideal:", C.equals_maximal)

# each generator times s lands back in S; print the factorization found
for check in verify_multiplication_table(S, C.r_generators):
    print(check.element, "+", check.module_generator, "=", check.product, "=", " + ".join(map(str, check.factors)))
