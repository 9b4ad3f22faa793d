"""
Seeded random search for monomial systems of parameters containing the
conductor.

Each instance is a pure function of (seed, index), so the scan can be split
across worker processes and reassembled in index order; the report is
byte-identical for identical configurations.
"""

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial, reduce
from math import gcd
from typing import Optional

from .conductor import conductor_generators
from .config import Limits
from .errors import BoundExceeded, NotPointed, UncertifiedResult
from .ideals import MonomialIdeal, radical_exponents
from .ikeda import Verdict, sop_containments, universal_certificate
from .lattice import vsub
from .normalization import normalize
from .semigroup import AffineSemigroup, NumericalSemigroup, as_affine, dimension

REJECTION_LIMIT = 1000


@dataclass(frozen=True)
class FuzzConfig:
    seed: int
    count: int
    mode: str = "numerical"            # "numerical" or "affine"
    dim: int = 2                       # ambient dimension in affine mode
    max_generator: int = 20
    sop_degree_cap: int = 6
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.sop_degree_cap < 1:
            raise ValueError("sop degree cap must be at least 1")
        if self.mode not in ("numerical", "affine"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "affine" and self.dim < 1:
            raise ValueError("affine mode needs dim >= 1")
        if self.max_generator < (2 if self.mode == "numerical" else 1):
            raise ValueError("max_generator too small")

    def to_dict(self):
        d = asdict(self)
        d["limits"] = self.limits.to_dict()
        if self.mode == "numerical":
            d.pop("dim")
        return d


def random_instance(config: FuzzConfig, index: int):
    rng = random.Random(f"{config.seed}:{index}")
    if config.mode == "numerical":
        k = rng.randint(3, 5)
        pool = range(2, config.max_generator + 1)
        gens = rng.sample(pool, min(k, len(pool)))
        g = reduce(gcd, gens)
        return NumericalSemigroup(sorted({a // g for a in gens}))
    d = config.dim
    for _ in range(REJECTION_LIMIT):
        k = rng.randint(d, d + 3)
        gens = set()
        while len(gens) < k:
            v = tuple(rng.randint(0, config.max_generator) for _ in range(d))
            if any(v):
                gens.add(v)
        S = AffineSemigroup(sorted(gens), dim=d)
        if dimension(S) == d:
            return S
    raise RuntimeError(f"no full-rank instance after {REJECTION_LIMIT} draws")


def _describe(S):
    if isinstance(S, NumericalSemigroup):
        return {"numerical": list(S.generators)}
    return {"dim": S.dim, "generators": [list(g) for g in S.generators]}


def _brute_member(gens, v, memo):
    # independent of the library's membership code: plain recursion
    if v in memo:
        return memo[v]
    if not any(v):
        return True
    ok = False
    for g in gens:
        w = tuple(a - b for a, b in zip(v, g))
        if all(a >= 0 for a in w) and _brute_member(gens, w, memo):
            ok = True
            break
    memo[v] = ok
    return ok


def _reverify(S, C, xs) -> bool:
    """Recheck a candidate sop with brute-force membership."""
    gens = S.generators
    memo = {}
    for x in xs:
        if not _brute_member(gens, x, memo):
            return False
    # every conductor generator: in the conductor and in (xs)
    sat = normalize(S)
    for r in C.r_generators:
        if not all(_brute_member(gens, tuple(a + b for a, b in zip(r, g)), memo)
                   for g in sat.module_generators):
            return False
        if not any(all(a >= 0 for a in vsub(r, x)) and _brute_member(gens, vsub(r, x), memo)
                   for x in xs):
            return False
    try:
        radical_exponents(MonomialIdeal(S, xs))
    except BoundExceeded:
        return False
    return True


def analyze_instance(config: FuzzConfig, index: int) -> dict:
    S0 = random_instance(config, index)
    out = {"index": index, "instance": _describe(S0)}
    S = as_affine(S0)
    try:
        C = conductor_generators(S, limits=config.limits)
        if not C.certified:
            out.update(status="uncertified", guard="conductor_degree_cap")
            return out
        cert = universal_certificate(S0, C, config.limits)
    except (BoundExceeded, UncertifiedResult, NotPointed) as exc:
        out.update(status="guard", guard=getattr(exc, "guard", None), message=str(exc))
        return out
    out.update(mu=cert.mu, dim=cert.dim, excess=[list(v) for v in cert.excess],
               verdict=cert.verdict.value,
               conductor=[list(v) for v in C.r_generators])
    if cert.verdict == Verdict.NORMAL:
        out["status"] = "normal"
    elif cert.verdict == Verdict.CERTIFIED_UNIVERSAL:
        out["status"] = "certified"
    else:
        found = sop_containments(S, C, config.sop_degree_cap)
        confirmed = [xs for xs in found if _reverify(S, C, xs)]
        if confirmed:
            out["status"] = "counterexample"
            out["candidates"] = [[list(x) for x in xs] for xs in confirmed]
        else:
            out["status"] = f"no counterexample up to degree {config.sop_degree_cap}"
            if found:
                out["rejected_candidates"] = [[list(x) for x in xs] for xs in found]
    return out


def scan(config: FuzzConfig, workers: Optional[int] = None) -> dict:
    """Analyze instances 0..count-1; results are assembled in index order."""
    if workers is None:
        workers = min(os.cpu_count() or 1, 8)
    job = partial(analyze_instance, config)
    indices = range(config.count)
    if workers <= 1 or config.count == 1:
        results = [job(i) for i in indices]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, indices, chunksize=max(1, config.count // (4 * workers))))
    summary = {}
    for r in results:
        key = "no counterexample" if r["status"].startswith("no counterexample") else r["status"]
        summary[key] = summary.get(key, 0) + 1
    return {
        "config": config.to_dict(),
        "summary": dict(sorted(summary.items())),
        "counterexamples": sum(r["status"] == "counterexample" for r in results),
        "instances": results,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
