# numerical semigroups: gaps, Frobenius number, conductor

from monomial_conductor import (NumericalSemigroup, apery_set, conductor_generators, frobenius, gaps, genus,
                                is_gorenstein_numerical, is_seminormal, numerical_conductor)

N = NumericalSemigroup([3, 4, 5])
print("gaps:", gaps(N), "genus:", genus(N), "F:", frobenius(N))
print("apery set w.r.t. 3:", apery_set(N, 3))
print("numerical conductor:", numerical_conductor(N))
print("same through the affine route:", conductor_generators(N).r_generators)
print("symmetric (Gorenstein):", is_gorenstein_numerical(N))
print("seminormal:", is_seminormal(N).to_dict())   # 2 is a gap with 4, 6 in N

for gens in ([2, 3], [3, 5], [4, 5, 7], [6, 9, 20]):
    N = NumericalSemigroup(gens)
    print(gens, "F =", frobenius(N), "symmetric:", is_gorenstein_numerical(N))
