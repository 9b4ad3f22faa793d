"""
Non-containment certificates for the conductor in parameter ideals.

The counting certificate: write m = c + <E> with E the minimal generators
of S outside the conductor.  If c ⊆ (x_1, ..., x_d) for some system of
parameters then m ⊆ (x_1, ..., x_d) + <E> ⊆ m, so mu(m) <= d + |E|.  Hence
mu(m) > d + |E| rules out containment for every system of parameters,
monomial or not.  Nothing stronger is ever claimed from bounded searches.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from .conductor import ConductorResult, conductor_generators, in_conductor
from .config import DEFAULT_LIMITS, Limits
from .errors import NotASystemOfParameters, UncertifiedResult
from .ideals import MonomialIdeal, ideal_contains, ideal_subset, ideal_sum, is_system_of_parameters
from .lattice import deglex, dot, vadd
from .normalization import normalize
from .semigroup import (NumericalSemigroup, as_affine, dimension, divides,
                        elements_up_to, factorization, is_symmetric, minimal_generators)


class Verdict(str, Enum):
    CERTIFIED_UNIVERSAL = "CertifiedUniversal"
    INCONCLUSIVE = "Inconclusive"
    NORMAL = "Normal"


@dataclass(frozen=True)
class IkedaCertificate:
    mu: int
    dim: int
    excess: tuple
    verdict: Verdict
    oneless_witness: Optional[tuple] = None
    notes: tuple = field(default=())

    def to_dict(self):
        return {
            "mu": self.mu,
            "dim": self.dim,
            "excess": [list(v) for v in self.excess],
            "verdict": self.verdict.value,
            "oneless_witness": None if self.oneless_witness is None else list(self.oneless_witness),
            "notes": list(self.notes),
        }


def _require_certified(C: ConductorResult):
    if not C.certified:
        raise UncertifiedResult("conductor generators are not certified complete")


def conductor_ideal(C: ConductorResult) -> MonomialIdeal:
    return MonomialIdeal(C.semigroup, C.r_generators)


def excess_decomposition(S, C: ConductorResult) -> tuple:
    """E = minimal generators of S outside the conductor; checks m = c + <E>."""
    _require_certified(C)
    S = as_affine(S)
    if C.is_unit:
        raise ValueError("the conductor is the unit ideal; S is normal")
    sat = normalize(S)
    mingens = minimal_generators(S)
    E = tuple(g for g in mingens if not in_conductor(S, sat, g))
    m = MonomialIdeal(S, mingens)
    total = ideal_sum(conductor_ideal(C), MonomialIdeal(S, E))
    if not (ideal_subset(total, m) and ideal_subset(m, total)):
        raise RuntimeError("m != c + <E>; conductor result is inconsistent")
    return E


def oneless_witness(S, C: ConductorResult, limits: Limits = DEFAULT_LIMITS) -> Optional[tuple]:
    """A y with m = c + (y), or None if none exists up to the degree cap."""
    _require_certified(C)
    S = as_affine(S)
    if C.is_unit:
        return None
    E = excess_decomposition(S, C)
    mingens = minimal_generators(S)
    m = MonomialIdeal(S, mingens)
    c = conductor_ideal(C)

    def works(y):
        total = ideal_sum(c, MonomialIdeal(S, [y]))
        return ideal_subset(total, m) and ideal_subset(m, total)

    if not E:
        return mingens[0]
    if len(E) == 1:
        return E[0] if works(E[0]) else None
    for y in elements_up_to(S, limits.oneless_degree_cap):
        if any(y) and works(y):
            return y
    return None


def _inconclusive_notes(S, C, witness, original):
    notes = []
    if witness is not None:
        notes.append(f"m = c + (y) holds with y = {list(witness)}")
    if dimension(S) == 1:
        notes.append("dimension one: the ring has depth 1")
        if isinstance(original, NumericalSemigroup) or S.dim == 1:
            N = S.to_numerical() if not isinstance(original, NumericalSemigroup) else original
            if is_symmetric(N):
                notes.append("numerical semigroup is symmetric: the ring is Gorenstein")
            else:
                notes.append("numerical semigroup is not symmetric")
    return tuple(notes)


def universal_certificate(S, C: Optional[ConductorResult] = None,
                          limits: Limits = DEFAULT_LIMITS) -> IkedaCertificate:
    original = S
    S = as_affine(S)
    if C is None:
        C = conductor_generators(S, limits=limits)
    _require_certified(C)
    mu = len(minimal_generators(S))
    d = dimension(S)
    if C.is_unit:
        return IkedaCertificate(mu, d, (), Verdict.NORMAL, None,
                                ("S is saturated: the conductor is the whole ring",))
    E = excess_decomposition(S, C)
    witness = oneless_witness(S, C, limits)
    if mu > d + len(E):
        return IkedaCertificate(mu, d, E, Verdict.CERTIFIED_UNIVERSAL, witness,
                                (f"mu(m) = {mu} > dim + |E| = {d + len(E)}",))
    notes = (f"mu(m) = {mu} <= dim + |E| = {d + len(E)}",) + \
        _inconclusive_notes(S, C, witness, original)
    return IkedaCertificate(mu, d, E, Verdict.INCONCLUSIVE, witness, notes)


def check_sop_containment(S, C: ConductorResult, xs) -> bool:
    """Whether every conductor generator lies in the monomial ideal (xs)."""
    _require_certified(C)
    S = as_affine(S)
    xs = [tuple(x) for x in xs]
    try:
        ok = is_system_of_parameters(S, xs)
    except ValueError as exc:
        raise NotASystemOfParameters(str(exc)) from exc
    if not ok:
        raise NotASystemOfParameters(f"{xs} is not a system of parameters")
    ideal = MonomialIdeal(S, xs)
    return all(ideal_contains(ideal, r) for r in C.r_generators)


@dataclass(frozen=True)
class MultiplicationCheck:
    element: tuple
    module_generator: tuple
    product: tuple
    factors: Optional[tuple]

    @property
    def ok(self):
        return self.factors is not None


def verify_multiplication_table(S, J, limits: Limits = DEFAULT_LIMITS) -> list:
    """j + g in S for every j in J and nonzero module generator g.

    Each check carries a factorization of the product into minimal
    generators of S; ``factors`` is None for a failing pair.
    """
    S = as_affine(S)
    sat = normalize(S, limits)
    out = []
    for j in J:
        j = tuple(j)
        for g in sat.module_generators:
            if not any(g):
                continue
            p = vadd(j, g)
            out.append(MultiplicationCheck(j, g, p, factorization(S, p)))
    return out


# -- monomial systems of parameters -------------------------------------------

def _face_signature(sat, v):
    return frozenset(i for i, f in enumerate(sat.cone.facets) if dot(f, v) == 0)


def monomial_sops(S, degree_cap: int) -> list:
    """All monomial systems of parameters with entries of degree <= cap.

    Plain enumeration over d-subsets; only for small instances.
    """
    S = as_affine(S)
    d = dimension(S)
    pool = [v for v in elements_up_to(S, degree_cap) if any(v)]
    return [xs for xs in combinations(pool, d) if is_system_of_parameters(S, xs)]


def sop_containments(S, C: ConductorResult, degree_cap: int, limit: int = 10) -> list:
    """Monomial sops (entries of degree <= cap) whose ideal contains c.

    Exhaustive, but organised as a cover search: each conductor generator
    needs a divisor among the x_i, and the remaining entries must meet every
    face required for m-primarity.  Returns up to ``limit`` examples.
    """
    _require_certified(C)
    S = as_affine(S)
    if C.is_unit:
        return []
    sat = normalize(S)
    d = dimension(S)
    pool = [v for v in elements_up_to(S, degree_cap) if any(v)]
    targets = list(C.r_generators)
    divisors = {r: [x for x in pool if divides(S, x, r)] for r in targets}
    sig = {x: _face_signature(sat, x) for x in pool}
    required = sorted({_face_signature(sat, g) for g in minimal_generators(S)},
                      key=lambda s: (len(s), sorted(s)))
    found = []

    def covers(X):
        for r in targets:
            if not any(divides(S, x, r) for x in X):
                yield r

    def complete(X):
        # X already covers c; extend to d entries meeting every required face
        missing = [F for F in required if not any(F <= sig[x] for x in X)]
        if not missing:
            rest = [y for y in pool if y not in X]
            if len(X) + len(rest) < d:
                return
            xs = tuple(sorted(X + rest[:d - len(X)], key=deglex))
            if is_system_of_parameters(S, xs):
                found.append(xs)
            return
        if len(X) == d:
            return
        F = missing[0]
        for y in pool:
            if y not in X and F <= sig[y]:
                complete(X + [y])
                if len(found) >= limit:
                    return

    def cover(X):
        if len(found) >= limit:
            return
        r = next(covers(X), None)
        if r is None:
            complete(X)
            return
        if len(X) == d:
            return
        for x in divisors[r]:
            if x not in X:
                cover(X + [x])

    cover([])
    return list(dict.fromkeys(found))


def principal_containments(S, C: ConductorResult, degree_cap: int) -> list:
    """Nonzero v in S of degree <= cap with c ⊆ (v); expected to be empty."""
    _require_certified(C)
    S = as_affine(S)
    return [v for v in elements_up_to(S, degree_cap)
            if any(v) and all(divides(S, v, r) for r in C.r_generators)]
