"""
Monomial ideals of k[[S]] (or of its normalization), stored by their
minimal exponent generators.
"""

from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits
from .errors import BoundExceeded, DimensionMismatch
from .lattice import deglex, dot, vscale, vsub
from .normalization import in_saturation, saturate
from .semigroup import AffineSemigroup, as_affine, contains, dimension, minimal_generators


@dataclass(frozen=True)
class MonomialIdeal:
    ambient: AffineSemigroup
    generators: tuple
    over_normalization: bool = False

    def __init__(self, ambient, generators, over_normalization=False):
        ambient = as_affine(ambient)
        gens = []
        for g in generators:
            g = tuple(int(a) for a in g)
            if len(g) != ambient.dim:
                raise DimensionMismatch(f"generator {g} in ambient of dim {ambient.dim}")
            gens.append(g)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "over_normalization", bool(over_normalization))
        object.__setattr__(self, "generators", self._minimal(gens))

    def _member(self, v):
        if any(a < 0 for a in v):
            return False
        if self.over_normalization:
            return in_saturation(saturate(self.ambient), v)
        return contains(self.ambient, v)

    def _minimal(self, gens):
        out = []
        for g in sorted(set(gens), key=deglex):
            if not any(self._member(vsub(g, h)) for h in out):
                out.append(g)
        return tuple(out)

    @property
    def is_unit(self):
        return self.generators == ((0,) * self.ambient.dim,)

    def __contains__(self, v):
        return ideal_contains(self, v)

    def __len__(self):
        return len(self.generators)


def maximal_ideal(S) -> MonomialIdeal:
    S = as_affine(S)
    return MonomialIdeal(S, minimal_generators(S))


def ideal_contains(I: MonomialIdeal, v) -> bool:
    v = tuple(v)
    if len(v) != I.ambient.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in ambient of dim {I.ambient.dim}")
    return any(I._member(vsub(v, g)) for g in I.generators)


def _same_ambient(I, J):
    if I.ambient != J.ambient or I.over_normalization != J.over_normalization:
        raise ValueError("ideals live in different rings")


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(I, J)
    return MonomialIdeal(I.ambient, I.generators + J.generators, I.over_normalization)


def ideal_subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same_ambient(I, J)
    return all(ideal_contains(J, g) for g in I.generators)


def _default_power_cap(I):
    return 2 * max(sum(g) for g in I.generators) + I.ambient.dim


def is_m_primary(I: MonomialIdeal) -> bool:
    """Whether the radical of a proper ideal I is the maximal ideal.

    Some power of a generator g lies in I exactly when some generator of I
    sits on the smallest face of the cone containing g; this decides the
    question without a power cap.  :func:`radical_exponents` produces the
    explicit powers.
    """
    if I.is_unit:
        raise ValueError("the unit ideal is not m-primary")
    if not I.generators:
        return False
    S = I.ambient
    sat = saturate(S)
    gens = sat.hilbert_basis if I.over_normalization else minimal_generators(S)
    for g in gens:
        tight = [f for f in sat.cone.facets if dot(f, g) == 0]
        if not any(all(dot(f, a) == 0 for f in tight) for a in I.generators):
            return False
    return True


def radical_exponents(I: MonomialIdeal, limits: Limits = DEFAULT_LIMITS) -> dict:
    """For every minimal generator g of S the least k <= cap with k*g in I.

    Raises :class:`BoundExceeded` (distinct from a negative answer) if some
    generator needs more than the cap.
    """
    cap = limits.power_cap or _default_power_cap(I)
    out = {}
    for g in minimal_generators(I.ambient):
        k = next((k for k in range(1, cap + 1) if ideal_contains(I, vscale(k, g))), None)
        if k is None:
            raise BoundExceeded(f"no power of {g} up to {cap} lies in the ideal",
                                partial=out, guard="power_cap")
        out[g] = k
    return out


def is_system_of_parameters(S, xs) -> bool:
    S = as_affine(S)
    xs = [tuple(x) for x in xs]
    for x in xs:
        if not any(x) or not contains(S, x):
            raise ValueError(f"{x} is not a nonzero element of the semigroup")
    if len(xs) != dimension(S):
        return False
    return is_m_primary(MonomialIdeal(S, xs))
