"""Tunable guards.  Every report echoes the values it was produced with."""

import os
from dataclasses import asdict, dataclass, replace

ENV_DEGREE_CAP = "MONOMIAL_CONDUCTOR_DEGREE_CAP"


@dataclass(frozen=True)
class Limits:
    box_cap: int = 200_000            # lattice points in a zonotope bounding box
    closure_cap: int = 200_000        # fixed-point closure steps
    conductor_degree_cap: int = 30    # degree cap for the search-based conductor
    search_cap: int = 200             # degree cap when looking for conductor elements
    power_cap: int = 0                # 0 means: 2 * max generator degree + dim
    oneless_degree_cap: int = 6
    sop_degree_cap: int = 6
    seminormal_bound: int = 20

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_env(cls, environ=None):
        """Defaults, with the degree caps overridden by the environment."""
        environ = os.environ if environ is None else environ
        raw = environ.get(ENV_DEGREE_CAP)
        limits = cls()
        if raw:
            cap = int(raw)
            limits = replace(limits, conductor_degree_cap=cap,
                             oneless_degree_cap=cap, sop_degree_cap=cap)
        return limits


DEFAULT_LIMITS = Limits()
