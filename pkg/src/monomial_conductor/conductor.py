"""
The conductor c = {v in S : v + Sbar ⊆ S} as a monomial ideal.

Because Sbar = ∪ (g + S) over the module generators g and S is additively
closed, v is in the conductor iff v + g in S for every module generator.

Two routes compute its minimal generators:

* ``"cosets"`` (simplicial cones): exact monomial-ideal arithmetic over the
  coset decomposition, always certified.
* ``"search"``: degree-ascending enumeration of Sbar with coverage pruning.
  Any minimal generator other than the conductor element c0 violates
  some facet inequality l(v) >= l(c0).  The search is certified once every
  extreme ray carries an ideal element t*rho, since then everything outside
  the ideal has degree below the sum of the r largest t*deg(rho).
"""

from dataclasses import dataclass, replace
from typing import Optional

from .config import DEFAULT_LIMITS, Limits
from .cosets import CosetDecomposition, NotSimplicial
from .errors import BoundExceeded
from .lattice import deglex, dot, vadd, vscale, vsub
from .normalization import SaturationResult, in_saturation, normalize
from .semigroup import (AffineSemigroup, NumericalSemigroup, as_affine, contains, divides,
                        elements_by_degree, frobenius, minimal_generators)


@dataclass(frozen=True)
class ConductorResult:
    semigroup: AffineSemigroup
    r_generators: tuple
    rbar_generators: tuple
    witness_element: tuple
    equals_maximal: bool
    is_unit: bool
    certified: bool
    method: str = "cosets"

    def to_dict(self):
        return {
            "r_generators": [list(v) for v in self.r_generators],
            "rbar_generators": [list(v) for v in self.rbar_generators],
            "witness_element": list(self.witness_element),
            "equals_maximal": self.equals_maximal,
            "is_unit": self.is_unit,
            "certified": self.certified,
            "method": self.method,
        }


def _prepare(S, sat, limits):
    S = as_affine(S)
    if sat is None or sat.module_generators is None:
        sat = normalize(S, limits)
    return S, sat


def in_conductor(S, sat: Optional[SaturationResult], v, limits: Limits = DEFAULT_LIMITS) -> bool:
    S, sat = _prepare(S, sat, limits)
    v = tuple(v)
    if any(a < 0 for a in v):
        return False
    return all(contains(S, vadd(v, g)) for g in sat.module_generators)


def conductor_element(S, sat: Optional[SaturationResult] = None, limits: Limits = DEFAULT_LIMITS) -> tuple:
    """A c0 with c0 + Sbar ⊆ S: the least one in degree-lex order.

    Simplicial cones read it off the exact coset computation (the least
    element of an ideal is one of its minimal generators).  Otherwise, for
    every nonzero module generator g a c_g in S with c_g + g in S is found;
    their sum is a conductor element, which bounds the final
    degree-ascending scan.
    """
    S, sat = _prepare(S, sat, limits)
    zero = (0,) * S.dim
    nonzero = [g for g in sat.module_generators if any(g)]
    if not nonzero:
        return zero
    try:
        return _by_cosets(S, sat, limits).witness_element
    except (NotSimplicial, BoundExceeded):
        pass
    total = zero
    for g in nonzero:
        found = None
        for level in elements_by_degree(S, limits.search_cap):
            found = next((c for c in level if contains(S, vadd(c, g))), None)
            if found is not None:
                break
        if found is None:
            raise BoundExceeded(f"no c with c + {g} in S up to degree {limits.search_cap}",
                                guard="search_cap")
        total = vadd(total, found)
    for level in elements_by_degree(S, sum(total)):
        for c in level:
            if in_conductor(S, sat, c, limits):
                return c
    return total


def _minimalize(cands, divides_fn):
    cands = sorted(set(cands), key=deglex)
    out = []
    for v in cands:
        if not any(divides_fn(c, v) for c in out):
            out.append(v)
    return tuple(out)


def _sbar_divides(sat):
    def fn(a, b):
        d = vsub(b, a)
        return all(x >= 0 for x in d) and in_saturation(sat, d)
    return fn


def _finish(S, sat, c0, rbar, certified, method):
    zero = (0,) * S.dim
    rbar = _minimalize(rbar, _sbar_divides(sat))
    cands = [vadd(r, g) for r in rbar for g in sat.module_generators]
    r_gens = _minimalize(cands, lambda a, b: divides(S, a, b))
    is_unit = r_gens == (zero,)
    equals_maximal = (not is_unit) and set(r_gens) == set(minimal_generators(S))
    return ConductorResult(S, r_gens, rbar, c0, equals_maximal, is_unit, certified, method)


def _by_cosets(S, sat, limits):
    dec = CosetDecomposition(S, sat, limits)
    ideals = dec.conductor_ideals(sat.module_generators)
    cands = [dec.join(u, k) for u, gens in ideals.items() for k in gens]
    res = _finish(S, sat, None, cands, True, "cosets")
    return replace(res, witness_element=min(res.r_generators, key=deglex))


def _sbar_by_degree(sat, max_degree):
    levels = [[(0,) * sat.base.dim]]
    yield levels[0]
    for D in range(1, max_degree + 1):
        found = set()
        for h in sat.hilbert_basis:
            dh = sum(h)
            if dh <= D:
                for x in levels[D - dh]:
                    found.add(vadd(x, h))
        level = sorted(found)
        levels.append(level)
        yield level


def _by_search(S, sat, c0, limits):
    facets = sat.cone.facets
    c0_vals = [dot(f, c0) for f in facets]
    rank = sat.lattice.rank
    ray_deg = [sum(r) for r in sat.rays]
    touch = [None] * len(sat.rays)
    covers = _sbar_divides(sat)
    found = []
    certified = False
    for D, level in enumerate(_sbar_by_degree(sat, limits.conductor_degree_cap)):
        for v in level:
            if v != c0 and all(dot(f, v) >= c for f, c in zip(facets, c0_vals)):
                continue
            if any(covers(r, v) for r in found):
                continue
            if in_conductor(S, sat, v, limits):
                found.append(v)
                for i, ray in enumerate(sat.rays):
                    if touch[i] is None:
                        t, rem = divmod(sum(v), ray_deg[i])
                        if not rem and vscale(t, ray) == v:
                            touch[i] = t
        if all(t is not None for t in touch):
            bound = sum(sorted((t * d for t, d in zip(touch, ray_deg)), reverse=True)[:rank])
            if D >= bound - 1:
                certified = True
                break
    return _finish(S, sat, c0, found, certified, "search")


def conductor_generators(S, sat: Optional[SaturationResult] = None,
                         limits: Limits = DEFAULT_LIMITS, method: str = "auto") -> ConductorResult:
    """Minimal generators of the conductor, over S and over Sbar.

    ``method`` is ``"auto"`` (cosets when the cone is simplicial, search
    otherwise), ``"cosets"`` or ``"search"``.  A search that cannot certify
    completeness within ``limits.conductor_degree_cap`` returns
    ``certified=False``.
    """
    S, sat = _prepare(S, sat, limits)
    zero = (0,) * S.dim
    if sat.module_generators == (zero,):
        return _finish(S, sat, zero, [zero], True, "normal")
    if method in ("auto", "cosets"):
        try:
            return _by_cosets(S, sat, limits)
        except (NotSimplicial, BoundExceeded):
            if method == "cosets":
                raise
    return _by_search(S, sat, conductor_element(S, sat, limits), limits)


def numerical_conductor(N: NumericalSemigroup):
    """(F + 1, minimal generators of {a in N : a >= F + 1}) from the gap sieve."""
    c = frobenius(N) + 1
    m = N.generators[0]
    members = [a for a in range(c, c + m + max(N.generators)) if a in N]
    gens = [a for a in members
            if not any(b < a and (a - b) in N for b in members)]
    return c, gens
