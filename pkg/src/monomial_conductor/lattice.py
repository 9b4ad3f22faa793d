"""
Exact integer lattices and rational polyhedral cones.

Everything here works over Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere.  Vectors are plain tuples of ints.

EXAMPLES::

    >>> L = hermite_normal_form([(2, 0), (3, 0), (1, 1), (0, 1)])
    >>> L.basis, L.rank
    (((1, 0), (0, 1)), 2)
    >>> C = cone_from_generators([(1, 0), (1, 2)])
    >>> C.facets
    ((0, 1), (2, -1))
    >>> cone_contains(C, (1, 1))
    True
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from functools import partial
from math import gcd, prod
from typing import Iterable, Optional, Sequence

from .errors import BoundExceeded, DimensionMismatch, NotPointed

Vector = tuple  # tuple[int, ...]

DEFAULT_BOX_CAP = 200_000


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(k, v):
    return tuple(k * a for a in v)


def degree(v):
    return sum(v)


def deglex(v):
    """Sort key: total degree first, then lexicographic."""
    return (sum(v), tuple(v))


def primitive(v):
    """Divide an integer (or rational) vector by the gcd of its entries."""
    if any(isinstance(a, Fraction) for a in v):
        den = 1
        for a in v:
            den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
        v = [int(a * den) for a in v]
    g = 0
    for a in v:
        g = gcd(g, a)
    if g == 0:
        return tuple(int(a) for a in v)
    return tuple(int(a) // g for a in v)


def xgcd(a, b):
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _common_dim(rows, dim=None):
    for r in rows:
        if dim is None:
            dim = len(r)
        elif len(r) != dim:
            raise DimensionMismatch(
                f"vector {tuple(r)} has length {len(r)}, expected {dim}")
    return dim


# ---------------------------------------------------------------------------
# lattices

@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^dim given by its row Hermite normal form.

    The basis is upper echelon with positive pivots and every entry above a
    pivot reduced into ``[0, pivot)``, so equal lattices compare equal.
    """
    dim: int
    basis: tuple

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)

    def __contains__(self, v):
        return lattice_contains(self, v)


def hermite_normal_form(rows: Sequence[Sequence[int]], dim: Optional[int] = None) -> IntegerLattice:
    """Lattice generated by ``rows`` in canonical row-HNF."""
    rows = [tuple(int(a) for a in r) for r in rows]
    dim = _common_dim(rows, dim)
    if dim is None:
        raise ValueError("hermite_normal_form needs at least one row or an explicit dim")
    A = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(dim):
        if r == len(A):
            break
        nz = [i for i in range(r, len(A)) if A[i][c] != 0]
        if not nz:
            continue
        A[r], A[nz[0]] = A[nz[0]], A[r]
        for i in range(r + 1, len(A)):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            x, y, g = xgcd(a, b)
            Rr, Ri = A[r], A[i]
            A[r] = [x * p + y * q for p, q in zip(Rr, Ri)]
            A[i] = [(-b // g) * p + (a // g) * q for p, q in zip(Rr, Ri)]
        if A[r][c] < 0:
            A[r] = [-p for p in A[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [p - q * s for p, s in zip(A[i], A[r])]
        r += 1
    return IntegerLattice(dim, tuple(tuple(row) for row in A[:r]))


def lattice_contains(L: IntegerLattice, v) -> bool:
    """Whether ``v`` is an integer combination of the basis rows."""
    if len(v) != L.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in lattice of dim {L.dim}")
    v = list(v)
    for row, p in zip(L.basis, L.pivots):
        if any(v[j] for j in range(p)):
            return False
        q, rem = divmod(v[p], row[p])
        if rem:
            return False
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def rank(rows, dim=None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return hermite_normal_form(rows, dim).rank


def _rref(rows):
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    M = [[Fraction(a) for a in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [a * inv for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def kernel_basis(rows, dim):
    """Integer basis (primitive vectors) of {x : row . x = 0 for all rows}."""
    R, pivots = _rref(rows) if rows else ([], [])
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * dim
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def _canonical_subspace_basis(vectors, dim):
    """Canonical integer basis of the rational span of ``vectors``."""
    R, _ = _rref(vectors) if vectors else ([], [])
    return tuple(primitive(r) for r in R)


class RayCoordinates:
    """Exact coordinates with respect to linearly independent integer rays.

    ``coordinates(v)`` returns the unique rational tuple ``lam`` with
    ``sum(lam[i] * rays[i]) == v``, or ``None`` when ``v`` is outside the span.
    """

    def __init__(self, rays):
        self.rays = [tuple(r) for r in rays]
        k = len(self.rays)
        self.dim = len(self.rays[0]) if self.rays else 0
        # columns are rays; pick k rows (coordinates) giving an invertible minor
        cols = [[Fraction(r[i]) for r in self.rays] for i in range(self.dim)]
        _, piv_rows = _rref([list(col) for col in zip(*cols)]) if k else ([], [])
        # _rref on the k x dim matrix of rays gives pivot coordinates
        if len(piv_rows) != k:
            raise ValueError("rays are linearly dependent")
        self.rows = piv_rows
        minor = [[Fraction(self.rays[j][i]) for j in range(k)] for i in piv_rows]
        self.inverse = _invert(minor)

    def coordinates(self, v):
        sel = [v[i] for i in self.rows]
        lam = tuple(sum(a * b for a, b in zip(row, sel)) for row in self.inverse)
        for i in range(self.dim):
            if sum(l * r[i] for l, r in zip(lam, self.rays)) != v[i]:
                return None
        return lam


def _invert(M):
    n = len(M)
    A = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [a * inv for a in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return [row[n:] for row in A]


# ---------------------------------------------------------------------------
# cones

@dataclass(frozen=True)
class RationalCone:
    """cone(gens) = {x : facet . x >= 0, equation . x == 0}.

    ``rays`` are the primitive extreme rays, ``facets`` the primitive inner
    facet normals taken inside the linear span, ``equations`` a canonical
    basis of the orthogonal complement of the span (empty when full
    dimensional).  All three are sorted.
    """
    dim: int
    rays: tuple
    facets: tuple
    equations: tuple = ()

    @property
    def rank(self):
        return self.dim - len(self.equations)

    @property
    def is_simplicial(self):
        return len(self.rays) == self.rank


def _project_off(v, basis_q):
    """Orthogonal projection of v onto the complement of span(basis_q).

    ``basis_q`` must be an orthogonal rational basis.
    """
    w = [Fraction(a) for a in v]
    for b, bb in basis_q:
        c = sum(x * y for x, y in zip(w, b)) / bb
        if c:
            w = [x - c * y for x, y in zip(w, b)]
    return w


def _gram_schmidt(vectors):
    out = []
    for v in vectors:
        w = _project_off(v, out)
        if any(w):
            out.append((w, sum(x * x for x in w)))
    return out


def dual_cone_double_description(constraints, dim):
    """Extreme rays and lineality of {l : c . l >= 0 for c in constraints}.

    Incremental double description: start from all of Q^dim (pure lineality)
    and intersect with one halfspace at a time.  Adjacent pairs of rays are
    combined when a halfspace cuts between them; adjacency is decided by the
    rank of the common tight constraints.
    """
    lineality = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays = []
    processed = []
    for h in constraints:
        h = tuple(h)
        hit = next((l for l in lineality if dot(h, l) != 0), None)
        if hit is not None:
            l = hit if dot(h, hit) > 0 else vscale(-1, hit)
            hl = dot(h, l)
            new_lin = []
            for m in lineality:
                if m is hit:
                    continue
                w = primitive(vsub(vscale(hl, m), vscale(dot(h, m), l)))
                if any(w):
                    new_lin.append(w)
            rays = [primitive(vsub(vscale(hl, r), vscale(dot(h, r), l))) for r in rays]
            rays.append(primitive(l))
            lineality = new_lin
            processed.append(h)
            rays = list(dict.fromkeys(rays))
            continue
        processed.append(h)
        vals = {r: dot(h, r) for r in rays}
        pos = [r for r in rays if vals[r] > 0]
        neg = [r for r in rays if vals[r] < 0]
        if not neg:
            continue
        zero = [r for r in rays if vals[r] == 0]
        m = rank(processed, dim)
        new = pos + zero
        for p in pos:
            zp = {i for i, c in enumerate(processed) if dot(c, p) == 0}
            for n in neg:
                common = [processed[i] for i in zp if dot(processed[i], n) == 0]
                if m >= 2 and rank(common, dim) != m - 2:
                    continue
                w = primitive(vsub(vscale(vals[p], n), vscale(vals[n], p)))
                if any(w):
                    new.append(w)
        rays = list(dict.fromkeys(new))
    return rays, lineality


def cone_from_generators(gens: Iterable[Sequence[int]], check_pointed: bool = True) -> RationalCone:
    """Facet description of the cone spanned by ``gens``.

    Facets are the extreme rays of the dual cone, found by double
    description, then projected into the span of ``gens`` so the normal is
    canonical even for lower dimensional cones.
    """
    gens = [tuple(int(a) for a in g) for g in gens]
    if not gens:
        raise ValueError("cone_from_generators needs at least one generator")
    dim = _common_dim(gens)
    if any(not any(g) for g in gens):
        raise ValueError("zero generator")
    dual_rays, dual_lin = dual_cone_double_description(gens, dim)
    equations = _canonical_subspace_basis(dual_lin, dim)
    ortho = _gram_schmidt(equations)
    facets = set()
    for r in dual_rays:
        f = primitive(_project_off(r, ortho))
        if any(f):
            facets.add(f)
    facets = tuple(sorted(facets))
    if check_pointed and rank(list(facets) + list(equations), dim) != dim:
        raise NotPointed(f"cone over {gens} contains a line")
    full = list(equations)
    rays = set()
    for g in gens:
        p = primitive(g)
        tight = [f for f in facets if dot(f, p) == 0]
        if rank(tight + full, dim) == dim - 1:
            rays.add(p)
    return RationalCone(dim, tuple(sorted(rays)), facets, equations)


def cone_contains(C: RationalCone, v) -> bool:
    if len(v) != C.dim:
        raise DimensionMismatch(f"vector of length {len(v)} in cone of dim {C.dim}")
    return all(dot(e, v) == 0 for e in C.equations) and all(dot(f, v) >= 0 for f in C.facets)


# ---------------------------------------------------------------------------
# zonotopes

def fm_feasible(rows):
    """Fourier-Motzkin test: is there t with a . t <= b for every (a, b)?"""
    rows = [([Fraction(x) for x in a], Fraction(b)) for a, b in rows]
    if not rows:
        return True
    nvars = len(rows[0][0])
    for j in reversed(range(nvars)):
        pos, neg, keep = [], [], []
        for a, b in rows:
            (pos if a[j] > 0 else neg if a[j] < 0 else keep).append((a, b))
        for ap, bp in pos:
            for an, bn in neg:
                s, t = -an[j], ap[j]
                a = [s * x + t * y for x, y in zip(ap, an)]
                keep.append((a, s * bp + t * bn))
        seen = {}
        for a, b in keep:
            a = a[:j]
            if not any(a):
                if b < 0:
                    return False
                continue
            scale = max(abs(x) for x in a)
            key = tuple(x / scale for x in a)
            nb = b / scale
            if key not in seen or nb < seen[key]:
                seen[key] = nb
        rows = [(list(k), b) for k, b in seen.items()]
    return all(b >= 0 for _, b in rows)


def in_zonotope(rays, v) -> bool:
    """Exact test for v in {sum lam_i r_i : 0 <= lam_i <= 1}."""
    rays = [tuple(r) for r in rays]
    k = len(rays)
    if rank(rays) == k:
        lam = RayCoordinates(rays).coordinates(v)
        return lam is not None and all(0 <= x <= 1 for x in lam)
    # eliminate the equations R lam = v, then run FM on the free parameters
    dim = len(v)
    eq = [[Fraction(r[i]) for r in rays] + [Fraction(v[i])] for i in range(dim)]
    R, pivots = _rref(eq)
    if k in pivots:
        return False
    free = [c for c in range(k) if c not in pivots]
    # lam_p = rhs_p - sum_f R[p][f] lam_f ; lam_f free
    rows = []
    for idx, f in enumerate(free):
        a = [Fraction(0)] * len(free)
        a[idx] = Fraction(1)
        rows.append((a, Fraction(1)))
        rows.append(([-x for x in a], Fraction(0)))
    for row, p in zip(R, pivots):
        coeffs = [row[f] for f in free]
        rhs = row[k]
        # 0 <= rhs - coeffs.t <= 1
        rows.append((coeffs, rhs))
        rows.append(([-c for c in coeffs], 1 - rhs))
    return fm_feasible(rows)


def zonotope_lattice_points(rays: Sequence[Sequence[int]], box_cap: int = DEFAULT_BOX_CAP) -> list:
    """All integer points of the zonotope spanned by ``rays``.

    Enumerates the bounding box and filters by exact membership; raises
    :class:`BoundExceeded` if the box has more than ``box_cap`` points.
    """
    rays = [tuple(r) for r in rays]
    dim = _common_dim(rays)
    lo = [sum(min(0, r[i]) for r in rays) for i in range(dim)]
    hi = [sum(max(0, r[i]) for r in rays) for i in range(dim)]
    volume = prod(h - l + 1 for l, h in zip(lo, hi))
    if volume > box_cap:
        raise BoundExceeded(
            f"zonotope bounding box has {volume} points (cap {box_cap})",
            guard="box_cap")
    if rank(rays) == len(rays):
        coords = RayCoordinates(rays)

        def member(v):
            lam = coords.coordinates(v)
            return lam is not None and all(0 <= x <= 1 for x in lam)
    else:
        member = partial(in_zonotope, rays)
    pts = [v for v in product(*(range(l, h + 1) for l, h in zip(lo, hi))) if member(v)]
    return sorted(pts, key=deglex)
