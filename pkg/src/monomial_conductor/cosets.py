"""
Finite description of a semigroup over a simplicial cone.

Let q_1, ..., q_r be the first multiples of the extreme rays that lie in S.
When the cone is simplicial they are linearly independent, Q = N q_1 + ... + N q_r
is free, and every v in Sbar splits uniquely as v = u + sum k_i q_i with u in
the half-open parallelepiped ("box") of the q_i.  Since Q ⊆ S, for each box
point u the set {k : u + k.q in S} is upward closed in N^r, i.e. a monomial
ideal.  The conductor and the seminormality violations are Boolean
combinations of these ideals, so they reduce to finite monomial-ideal
arithmetic in N^r.
"""

import heapq
from math import floor

from .config import DEFAULT_LIMITS
from .errors import BoundExceeded
from .lattice import RayCoordinates, deglex, vadd, vscale, vsub
from .semigroup import as_affine, contains, minimal_generators


# -- monomial ideals of N^r, given by generator lists ------------------------

def mono_minimalize(gens):
    gens = sorted(set(gens), key=deglex)
    out = []
    for a in gens:
        if not any(all(x <= y for x, y in zip(b, a)) for b in out):
            out.append(a)
    return out


def mono_contains(gens, k):
    return any(all(x <= y for x, y in zip(a, k)) for a in gens)


def mono_colon(gens, shift):
    """{k >= 0 : k + shift in ideal(gens)}."""
    return mono_minimalize(tuple(max(a - s, 0) for a, s in zip(g, shift)) for g in gens)


def mono_intersect(A, B):
    return mono_minimalize(tuple(max(x, y) for x, y in zip(a, b)) for a in A for b in B)


def mono_scaled_preimage(gens, factor, shift):
    """{k >= 0 : factor * k + shift in ideal(gens)}."""
    return mono_minimalize(
        tuple(max(-(-(a - s) // factor), 0) for a, s in zip(g, shift)) for g in gens)


def mono_standard_count(gens, r):
    """Number of points of N^r outside the ideal, or None if infinite."""
    if not gens:
        return None
    bounds = []
    for i in range(r):
        pure = [g[i] for g in gens if all(g[j] == 0 for j in range(r) if j != i)]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0

    def walk(prefix):
        nonlocal count
        i = len(prefix)
        if i == r:
            if not mono_contains(gens, prefix):
                count += 1
            return
        for x in range(bounds[i]):
            walk(prefix + (x,))
    walk(())
    return count


class NotSimplicial(Exception):
    pass


class CosetDecomposition:
    """Box/coset bookkeeping for S over the free monoid Q of ray multiples."""

    def __init__(self, S, sat, limits=DEFAULT_LIMITS):
        S = as_affine(S)
        self.S = S
        self.sat = sat
        if len(sat.rays) != sat.lattice.rank:
            raise NotSimplicial(f"cone has {len(sat.rays)} rays in rank {sat.lattice.rank}")
        self.r = len(sat.rays)
        self.steps = tuple(vscale(self._multiplier(ray), ray) for ray in sat.rays)
        self.coords = RayCoordinates(self.steps)
        self.zero = (0,) * S.dim
        self.box = self._box_points()
        self.ideals = self._gamma_ideals(limits)

    def _multiplier(self, ray):
        m = 1
        while not contains(self.S, vscale(m, ray)):
            m += 1
        return m

    def split(self, v):
        """(u, k) with v = u + sum k_i q_i and u in the box."""
        lam = self.coords.coordinates(v)
        if lam is None:
            raise ValueError(f"{v} is outside the linear span")
        k = tuple(floor(x) for x in lam)
        u = v
        for ki, q in zip(k, self.steps):
            if ki:
                u = vsub(u, vscale(ki, q))
        return u, k

    def _box_points(self):
        start = self.zero
        seen = {start}
        frontier = [start]
        basis = self.sat.lattice.basis
        while frontier:
            nxt = []
            for u in frontier:
                for b in basis:
                    w, _ = self.split(vadd(u, b))
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(sorted(seen, key=deglex))

    def _in_q_translate(self, x, w):
        lam = self.coords.coordinates(vsub(x, w))
        return lam is not None and all(l >= 0 and l.denominator == 1 for l in lam)

    def _gamma_ideals(self, limits):
        # Q-module generators of S: closure from 0 under the minimal generators
        gens = minimal_generators(self.S)
        W = []
        heap = [(deglex(self.zero), self.zero)]
        seen = {self.zero}
        steps = 0
        while heap:
            _, x = heapq.heappop(heap)
            steps += 1
            if steps > limits.closure_cap:
                raise BoundExceeded("coset closure exceeded its step cap",
                                    partial=tuple(W), guard="closure_cap")
            if any(self._in_q_translate(x, w) for w in W):
                continue
            W.append(x)
            for g in gens:
                y = vadd(x, g)
                if y not in seen:
                    seen.add(y)
                    heapq.heappush(heap, (deglex(y), y))
        ideals = {u: [] for u in self.box}
        for w in W:
            u, k = self.split(w)
            ideals[u].append(k)
        return {u: mono_minimalize(ks) for u, ks in ideals.items()}

    def join(self, u, k):
        v = u
        for ki, q in zip(k, self.steps):
            if ki:
                v = vadd(v, vscale(ki, q))
        return v

    def in_gamma(self, v):
        u, k = self.split(v)
        return mono_contains(self.ideals[u], k)

    def conductor_ideals(self, module_gens):
        """For each box point u, the ideal {k : u + k.q in the conductor}."""
        parts = [self.split(g) for g in module_gens]
        out = {}
        for u in self.box:
            acc = None
            for ug, kg in parts:
                u2, e = self.split(vadd(u, ug))
                cond = mono_colon(self.ideals[u2], vadd(kg, e))
                acc = cond if acc is None else mono_intersect(acc, cond)
                if not acc:
                    break
            out[u] = acc or []
        return out

    def hole_count(self):
        """|Sbar \\ S|, or None when infinite."""
        total = 0
        for u in self.box:
            c = mono_standard_count(self.ideals[u], self.r)
            if c is None:
                return None
            total += c
        return total

    def seminormal_violations(self):
        """Points v in Sbar \\ S with 2v, 3v in S; minimal ones per box point."""
        out = []
        for u in self.box:
            acc = None
            for factor in (2, 3):
                u2, e = self.split(vscale(factor, u))
                part = mono_scaled_preimage(self.ideals[u2], factor, e)
                acc = part if acc is None else mono_intersect(acc, part)
            for k in acc:
                if not mono_contains(self.ideals[u], k):
                    out.append(self.join(u, k))
        return sorted(out, key=deglex)
