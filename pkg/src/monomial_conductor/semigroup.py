"""
Affine semigroups in N^d and numerical semigroups in N.

An :class:`AffineSemigroup` stands for the monomial algebra k[[x^g : g in gens]].
Membership is decided by dynamic programming over the box ``[0, v]``; the
results are memoized on the semigroup object, so repeated queries (the
conductor search issues many) are cheap.
"""

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd
from typing import Iterator, Optional

from .errors import DimensionMismatch, InvalidSemigroup
from .lattice import deglex, hermite_normal_form, vadd, vsub


@dataclass(frozen=True)
class AffineSemigroup:
    """Semigroup generated by finitely many nonzero vectors of N^dim.

    Generators are deduplicated and stored in degree-lexicographic order, so
    two semigroups built from the same generator list in any order are equal.
    """
    dim: int
    generators: tuple
    _memo: dict = field(default_factory=dict, compare=False, hash=False, repr=False)
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __init__(self, generators, dim=None):
        gens = [tuple(int(a) for a in g) for g in generators]
        if dim is None:
            if not gens:
                raise InvalidSemigroup("need at least one generator or an explicit dim")
            dim = len(gens[0])
        if dim < 1:
            raise InvalidSemigroup("dimension must be at least 1")
        for g in gens:
            if len(g) != dim:
                raise DimensionMismatch(f"generator {g} does not have length {dim}")
            if any(a < 0 for a in g):
                raise InvalidSemigroup(f"generator {g} has a negative coordinate")
            if not any(g):
                raise InvalidSemigroup("zero generator")
        gens = sorted(set(gens), key=deglex)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_memo", {(0,) * dim: True})
        object.__setattr__(self, "_cache", {})

    def __contains__(self, v):
        return contains(self, v)

    def __len__(self):
        return len(self.generators)

    def to_numerical(self) -> "NumericalSemigroup":
        if self.dim != 1:
            raise InvalidSemigroup("only one dimensional semigroups are numerical")
        return NumericalSemigroup([g[0] for g in self.generators])


@dataclass(frozen=True)
class NumericalSemigroup:
    """Submonoid of N generated by positive integers with gcd 1."""
    generators: tuple

    def __init__(self, generators):
        gens = sorted(set(int(a) for a in generators))
        if not gens:
            raise InvalidSemigroup("need at least one generator")
        if gens[0] <= 0:
            raise InvalidSemigroup("numerical semigroup generators must be positive")
        if reduce(gcd, gens) != 1:
            raise InvalidSemigroup(f"gcd of {gens} is not 1")
        object.__setattr__(self, "generators", tuple(gens))

    def to_affine(self) -> AffineSemigroup:
        return _affine_encoding(self.generators)

    def __contains__(self, n):
        return n >= 0 and _sieve(self, n)[n]

    @property
    def sieve_bound(self):
        # Schur: the Frobenius number is below min * max
        return self.generators[0] * self.generators[-1]


@lru_cache(maxsize=1024)
def _affine_encoding(gens):
    # shared instance, so the membership memo survives repeated conversions
    return AffineSemigroup([(a,) for a in gens])


def as_affine(S) -> AffineSemigroup:
    if isinstance(S, NumericalSemigroup):
        return S.to_affine()
    return S


# ---------------------------------------------------------------------------
# membership

def contains(S, v) -> bool:
    """Whether v is a (possibly empty) sum of generators."""
    if isinstance(S, NumericalSemigroup):
        v = v[0] if isinstance(v, tuple) else v
        if v < 0:
            raise InvalidSemigroup(f"negative element {v}")
        return v in S
    v = tuple(v)
    if len(v) != S.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in semigroup of dim {S.dim}")
    if any(a < 0 for a in v):
        raise InvalidSemigroup(f"{v} has a negative coordinate")
    memo = S._memo
    hit = memo.get(v)
    if hit is not None:
        return hit
    gens = S.generators
    stack = [v]
    while stack:
        x = stack[-1]
        if x in memo:
            stack.pop()
            continue
        preds = [vsub(x, g) for g in gens if all(a >= b for a, b in zip(x, g))]
        if any(memo.get(p) is True for p in preds):
            memo[x] = True
            stack.pop()
            continue
        pending = [p for p in preds if p not in memo]
        if pending:
            stack.extend(pending)
        else:
            memo[x] = False
            stack.pop()
    return memo[v]


def divides(S, a, b) -> bool:
    """Whether b - a lies in S (so x^a divides x^b in the semigroup ring)."""
    d = vsub(b, a)
    return all(x >= 0 for x in d) and contains(S, d)


def factorization(S, v) -> Optional[tuple]:
    """One way of writing v as a sum of minimal generators, or None."""
    S = as_affine(S)
    v = tuple(v)
    if not contains(S, v):
        return None
    gens = minimal_generators(S)
    out = []
    while any(v):
        for g in gens:
            rest = vsub(v, g)
            if all(a >= 0 for a in rest) and contains(S, rest):
                out.append(g)
                v = rest
                break
    return tuple(out)


def all_factorizations(S, v) -> list:
    """Every multiset of minimal generators summing to v, as sorted tuples."""
    S = as_affine(S)
    gens = minimal_generators(S)
    out = []

    def walk(rest, start, acc):
        if not any(rest):
            out.append(tuple(acc))
            return
        for i in range(start, len(gens)):
            r = vsub(rest, gens[i])
            if all(a >= 0 for a in r) and contains(S, r):
                walk(r, i, acc + [gens[i]])

    walk(tuple(v), 0, [])
    return out


def elements_by_degree(S, max_degree: int) -> Iterator[list]:
    """Yield, for D = 0, 1, ..., max_degree, the sorted elements of degree D."""
    S = as_affine(S)
    gens = minimal_generators(S)
    levels = [[(0,) * S.dim]]
    yield levels[0]
    for D in range(1, max_degree + 1):
        found = set()
        for g in gens:
            dg = sum(g)
            if dg <= D:
                for x in levels[D - dg]:
                    found.add(vadd(x, g))
        level = sorted(found)
        levels.append(level)
        yield level


def elements_up_to(S, max_degree: int) -> list:
    out = []
    for level in elements_by_degree(S, max_degree):
        out.extend(level)
    return out


# ---------------------------------------------------------------------------
# generators and dimension

def minimal_generators(S) -> tuple:
    """The unique minimal generating set, in degree-lexicographic order.

    A generator is dropped when subtracting some smaller generator leaves an
    element of the semigroup.
    """
    S = as_affine(S)
    cache = S._cache
    if "mingens" in cache:
        return cache["mingens"]
    kept = []
    for g in S.generators:
        reducible = False
        for h in S.generators:
            if h == g:
                continue
            d = vsub(g, h)
            if all(a >= 0 for a in d) and any(d) and contains(S, d):
                reducible = True
                break
        if not reducible:
            kept.append(g)
    out = tuple(kept)
    cache["mingens"] = out
    return out


def embedding_dimension(S) -> int:
    return len(minimal_generators(S))


def dimension(S) -> int:
    """Krull dimension of k[[S]]: the rank of the group generated by S."""
    S = as_affine(S)
    if not S.generators:
        return 0
    return hermite_normal_form(S.generators).rank


# ---------------------------------------------------------------------------
# numerical semigroups

_SIEVES = {}


def _sieve(N: NumericalSemigroup, upto: int) -> list:
    cached = _SIEVES.get(N.generators)
    if cached is not None and len(cached) > upto:
        return cached
    size = max(upto, N.sieve_bound) + 1
    member = [False] * size
    member[0] = True
    for n in range(1, size):
        member[n] = any(n >= a and member[n - a] for a in N.generators)
    _SIEVES[N.generators] = member
    return member


def gaps(N: NumericalSemigroup) -> list:
    member = _sieve(N, N.sieve_bound)
    return [n for n in range(N.sieve_bound + 1) if not member[n]]


def frobenius(N: NumericalSemigroup) -> int:
    """Largest integer outside N, or -1 when N is all of N."""
    g = gaps(N)
    return g[-1] if g else -1


def genus(N: NumericalSemigroup) -> int:
    return len(gaps(N))


def apery_set(N: NumericalSemigroup, n: int) -> list:
    """Entry r is the least element of N congruent to r mod n."""
    if n <= 0 or n not in N:
        raise InvalidSemigroup(f"{n} is not a positive element of {N.generators}")
    bound = N.sieve_bound + n
    member = _sieve(N, bound)
    out = [None] * n
    missing = n
    for m in range(bound + 1):
        if member[m] and out[m % n] is None:
            out[m % n] = m
            missing -= 1
            if not missing:
                break
    return out


def is_symmetric(N: NumericalSemigroup) -> bool:
    """For 0 <= a <= F exactly one of a, F - a lies in N."""
    F = frobenius(N)
    return all((a in N) != ((F - a) in N) for a in range(F + 1))
