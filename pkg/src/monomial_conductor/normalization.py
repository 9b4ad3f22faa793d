"""
Saturation of an affine semigroup.

The normalization of k[[S]] is k[[Sbar]] with Sbar = group(S) ∩ cone(S).  We
compute the Hilbert basis of Sbar from the lattice points of the closed
parallelepipeds spanned by independent sets of extreme rays, and a minimal set G with Sbar = ∪_{g in G} (g + S), the
combinatorial form of "Rbar is a finite R-module".
"""

import heapq
from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .config import DEFAULT_LIMITS, Limits
from .errors import BoundExceeded
from .lattice import (IntegerLattice, RationalCone, cone_contains, cone_from_generators,
                      deglex, hermite_normal_form, lattice_contains, rank, vadd, vscale,
                      vsub, zonotope_lattice_points)
from .semigroup import AffineSemigroup, as_affine, contains, divides


@dataclass(frozen=True)
class SaturationResult:
    base: AffineSemigroup
    lattice: IntegerLattice
    cone: RationalCone
    rays: tuple                 # extreme rays, primitive in the lattice
    hilbert_basis: tuple
    module_generators: Optional[tuple] = None
    certified: bool = True

    def __contains__(self, v):
        return in_saturation(self, v)


def in_saturation(sat: SaturationResult, v) -> bool:
    return lattice_contains(sat.lattice, v) and cone_contains(sat.cone, v)


def _lattice_primitive(ray, lattice):
    k = 1
    while not lattice_contains(lattice, vscale(k, ray)):
        k += 1
    return vscale(k, ray)


@lru_cache(maxsize=512)
def _parallelepiped_points(rays, box_cap):
    """Integer points of the closed parallelepipeds over independent rank-subsets of rays.

    Every irreducible element h of Sbar is among them: write h over a simplicial
    subcone (Caratheodory); a coefficient >= 1 would split off a ray.
    """
    r = rank(rays)
    subsets = [rays] if len(rays) == r else [T for T in combinations(rays, r) if rank(T) == r]
    pts = set()
    for T in subsets:
        pts.update(zonotope_lattice_points(T, box_cap))
    return sorted(pts, key=deglex)


def saturate(S, limits: Limits = DEFAULT_LIMITS) -> SaturationResult:
    """Lattice, cone and Hilbert basis of the saturation of S.

    ``module_generators`` is left empty here; see :func:`normalize`.
    """
    S = as_affine(S)
    lattice = hermite_normal_form(S.generators)
    cone = cone_from_generators(S.generators)
    rays = tuple(sorted((_lattice_primitive(r, lattice) for r in cone.rays), key=deglex))
    candidates = [v for v in _parallelepiped_points(rays, limits.box_cap)
                  if any(v) and lattice_contains(lattice, v)]
    sat = SaturationResult(S, lattice, cone, rays, ())
    hb = []
    for x in candidates:
        if not any(y != x and in_saturation(sat, vsub(x, y)) for y in candidates):
            hb.append(x)
    return replace(sat, hilbert_basis=tuple(sorted(hb, key=deglex)))


def _covered(S, x, gens):
    return any(divides(S, m, x) for m in gens)


def module_generators(S, limits: Limits = DEFAULT_LIMITS, sat: Optional[SaturationResult] = None) -> tuple:
    """Minimal G with Sbar = ∪_{g in G} (g + S); always contains 0.

    Fixed-point closure: starting from {0}, add m + h (h in the Hilbert
    basis) whenever it is not already in some m' + S.  Candidates are taken
    in degree-lexicographic order.
    """
    S = as_affine(S)
    sat = sat or saturate(S, limits)
    zero = (0,) * S.dim
    M = []
    heap = [(deglex(zero), zero)]
    seen = {zero}
    steps = 0
    while heap:
        _, x = heapq.heappop(heap)
        steps += 1
        if steps > limits.closure_cap:
            raise BoundExceeded(
                f"module generator closure exceeded {limits.closure_cap} steps",
                partial=tuple(M), guard="closure_cap")
        if _covered(S, x, M):
            continue
        M.append(x)
        for h in sat.hilbert_basis:
            y = vadd(x, h)
            if y not in seen:
                seen.add(y)
                heapq.heappush(heap, (deglex(y), y))
    minimal = [m for m in M if not any(n != m and divides(S, n, m) for n in M)]
    return tuple(sorted(minimal, key=deglex))


@lru_cache(maxsize=512)
def normalize(S, limits: Limits = DEFAULT_LIMITS) -> SaturationResult:
    """:func:`saturate` plus the module generators."""
    S = as_affine(S)
    sat = saturate(S, limits)
    return replace(sat, module_generators=module_generators(S, limits, sat))


def is_normal(S, limits: Limits = DEFAULT_LIMITS) -> bool:
    S = as_affine(S)
    return normalize(S, limits).module_generators == ((0,) * S.dim,)


def _vectors_of_degree(dim, D):
    if dim == 1:
        yield (D,)
        return
    for a in range(D, -1, -1):
        for rest in _vectors_of_degree(dim - 1, D - a):
            yield (a,) + rest


def gaps_bounded(S, B: int, limits: Limits = DEFAULT_LIMITS) -> list:
    """Elements of Sbar outside S of total degree at most B, degree ascending."""
    if B < 0:
        raise ValueError("degree bound must be non-negative")
    S = as_affine(S)
    sat = saturate(S, limits)
    out = []
    for D in range(B + 1):
        level = [v for v in _vectors_of_degree(S.dim, D)
                 if in_saturation(sat, v) and not contains(S, v)]
        out.extend(sorted(level))
    return out


def quotient_length(S, limits: Limits = DEFAULT_LIMITS) -> Optional[int]:
    """|Sbar \\ S|, the k-length of Rbar/R; None when it is infinite.

    Exact for simplicial cones.  Otherwise the quotient is finite iff the
    conductor is m-primary; then each Hilbert basis element h has a multiple
    k_h * h in the conductor, and any hole has degree below sum k_h deg(h).
    """
    from .cosets import CosetDecomposition, NotSimplicial
    S = as_affine(S)
    sat = normalize(S, limits)
    try:
        return CosetDecomposition(S, sat, limits).hole_count()
    except NotSimplicial:
        pass
    from .conductor import conductor_generators
    from .ideals import MonomialIdeal, ideal_contains, is_m_primary
    C = conductor_generators(S, sat, limits)
    if not C.certified:
        raise BoundExceeded("conductor not certified; cannot size Rbar/R",
                            guard="conductor_degree_cap")
    if C.is_unit:
        return 0
    if not is_m_primary(MonomialIdeal(S, C.r_generators)):
        return None
    cbar = MonomialIdeal(S, C.rbar_generators, over_normalization=True)
    bound = 0
    for h in sat.hilbert_basis:
        k = 1
        while not ideal_contains(cbar, vscale(k, h)):
            k += 1
        bound += (k - 1) * sum(h)
    return len(gaps_bounded(S, bound, limits))
