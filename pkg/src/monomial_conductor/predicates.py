"""Pinched Veronese constructors and a few checkable ring properties."""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Optional

from .config import DEFAULT_LIMITS, Limits
from .cosets import CosetDecomposition, NotSimplicial
from .errors import BoundExceeded
from .lattice import vscale
from .normalization import gaps_bounded, normalize
from .semigroup import (AffineSemigroup, NumericalSemigroup, as_affine, contains, gaps,
                        is_symmetric)


@dataclass(frozen=True)
class PinchedVeroneseSpec:
    n: int
    d: int
    removed: tuple

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("need n >= 1 variables and degree d >= 1")
        removed = tuple(int(a) for a in self.removed)
        object.__setattr__(self, "removed", removed)
        if len(removed) != self.n or any(a < 0 for a in removed) or sum(removed) != self.d:
            raise ValueError(f"removed exponent {removed} is not of degree {self.d} in {self.n} variables")


def pinched_veronese(spec: PinchedVeroneseSpec) -> AffineSemigroup:
    """All degree-d monomials in n variables except ``spec.removed``."""
    gens = [v for v in product(range(spec.d + 1), repeat=spec.n)
            if sum(v) == spec.d and v != spec.removed]
    return AffineSemigroup(gens, dim=spec.n)


class Seminormality(str, Enum):
    YES = "Yes"
    NO = "No"
    YES_UP_TO_BOUND = "YesUpToBound"


@dataclass(frozen=True)
class SeminormalResult:
    status: Seminormality
    witness: Optional[tuple] = None
    bound: Optional[int] = None

    def to_dict(self):
        return {"status": self.status.value,
                "witness": None if self.witness is None else list(self.witness),
                "bound": self.bound}


def _seminormal_numerical(N):
    for a in gaps(N):
        if 2 * a in N and 3 * a in N:
            return SeminormalResult(Seminormality.NO, (a,))
    return SeminormalResult(Seminormality.YES)


def is_seminormal(S, sat=None, B: Optional[int] = None,
                  limits: Limits = DEFAULT_LIMITS) -> SeminormalResult:
    """v in group(S) with 2v, 3v in S forces v in S?

    Such v lie in Sbar, so only Sbar \\ S needs checking.  Numerical input
    and simplicial cones are decided exactly; otherwise holes up to degree B
    are scanned and a clean scan is reported as YesUpToBound.
    """
    if isinstance(S, NumericalSemigroup):
        return _seminormal_numerical(S)
    S = as_affine(S)
    if B is None:
        B = limits.seminormal_bound
    if B < 0:
        raise ValueError("degree bound must be non-negative")
    if sat is None or sat.module_generators is None:
        sat = normalize(S, limits)
    try:
        bad = CosetDecomposition(S, sat, limits).seminormal_violations()
        if bad:
            return SeminormalResult(Seminormality.NO, bad[0])
        return SeminormalResult(Seminormality.YES)
    except (NotSimplicial, BoundExceeded):
        pass
    for v in gaps_bounded(S, B, limits):
        if contains(S, vscale(2, v)) and contains(S, vscale(3, v)):
            return SeminormalResult(Seminormality.NO, v, B)
    return SeminormalResult(Seminormality.YES_UP_TO_BOUND, None, B)


def is_gorenstein_numerical(N: NumericalSemigroup) -> bool:
    """k[[N]] is Gorenstein iff N is symmetric."""
    return is_symmetric(N)
